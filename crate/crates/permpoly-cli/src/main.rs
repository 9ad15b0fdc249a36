//! `permpoly` command line. Every subcommand is a thin wrapper over the
//! library: parse arguments, call one function, print the result.
//!
//! Exit status: 0 success / true, 1 mathematically false (not a PP, audit
//! failed, table mismatch), 2 usage or internal error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permpoly::audit::{run_audit, AuditParams, AUDIT_NAMES};
use permpoly::cache::{Cache, CACHE_ENV, DEFAULT_CACHE_DIR};
use permpoly::criteria::{evaluate, Criterion};
use permpoly::families::{instantiate, Family};
use permpoly::normalize::{classify_all, classify_normalized, ClassificationResult, Mode, PrefilterKind, SearchOptions, SCHEMA_VERSION};
use permpoly::ortho::{classify_orthomorphisms, is_orthomorphism, ortho_case};
use permpoly::tables::{rows_for, verify_table, SqrtChoice};
use permpoly::{Elem, Field, FieldRef, Poly};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "permpoly", version, about = "Permutation polynomials over small finite fields")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for searches (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for sampled checks; recorded in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Bypass the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache directory.
    #[arg(long, global = true, env = CACHE_ENV, default_value = DEFAULT_CACHE_DIR)]
    cache_dir: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long)]
    q: u64,
    /// Defining polynomial over F_p, ascending coefficients, monic.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

impl FieldArgs {
    fn build(&self) -> permpoly::Result<FieldRef> {
        match &self.modulus {
            None => Field::of_order(self.q),
            Some(m) => {
                let (p, r) = permpoly::field::factor_prime_power(self.q)?;
                Field::with_modulus(p, r, m)
            }
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe a finite field.
    Field(FieldArgs),
    /// Test whether a polynomial is a PP under every criterion.
    Test {
        #[command(flatten)]
        field: FieldArgs,
        /// Coefficient codes, constant term first.
        #[arg(long, value_delimiter = ',', required = true)]
        poly: Vec<u32>,
        /// `all` or a comma list of criterion names.
        #[arg(long, default_value = "all")]
        criteria: String,
    },
    /// Build a named family member and check its criterion.
    Family(FamilyArgs),
    /// Exhaustive classification of degree-n PPs.
    Classify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = ClassifyMode::Normalized)]
        mode: ClassifyMode,
        #[arg(long, value_enum, default_value_t = PrefilterArg::None)]
        prefilter: PrefilterArg,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classification tables.
    Table {
        #[command(subcommand)]
        cmd: TableCmd,
    },
    /// Orthomorphisms.
    Ortho {
        #[command(subcommand)]
        cmd: OrthoCmd,
    },
    /// Run a named batch audit.
    Audit {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(AUDIT_NAMES))]
        name: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Inspect or clear the result cache.
    Cache {
        #[command(subcommand)]
        cmd: CacheCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyMode {
    Normalized,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrefilterArg {
    None,
    HermitePartial,
}

#[derive(Clone, Copy, ValueEnum)]
enum SqrtArg {
    Both,
    Canonical,
}

#[derive(Subcommand)]
enum TableCmd {
    /// Compare the normalized classification with the table expansion.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        degree: usize,
        /// How `2^(1/2)` in the table is read.
        #[arg(long, value_enum, default_value_t = SqrtArg::Both)]
        sqrt: SqrtArg,
    },
    /// List the table rows that apply to a field and degree.
    Rows {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum OrthoCmd {
    Test {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        poly: Vec<u32>,
    },
    Classify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Print the cache directory.
    Path,
    /// List cached results.
    List,
    /// Delete all cached results.
    Clear,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::NAMES))]
    name: String,
    /// Monomial exponent.
    #[arg(long)]
    n: Option<u64>,
    /// Element parameter (code).
    #[arg(long)]
    a: Option<u32>,
    /// Divisor of q−1.
    #[arg(long)]
    m: Option<u64>,
    /// Dickson degree.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    /// Coefficient list: p-polynomial coefficients, `f`, or `g`.
    #[arg(long, value_delimiter = ',')]
    coeffs: Option<Vec<u32>>,
}

enum Fail {
    Usage(String),
    Lib(permpoly::Error),
}

impl From<permpoly::Error> for Fail {
    fn from(e: permpoly::Error) -> Self {
        Fail::Lib(e)
    }
}

type Out = Result<(Value, bool), Fail>;

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Fail> {
    v.ok_or_else(|| Fail::Usage(format!("--{flag} is required for family {family}")))
}

fn elems(field: &FieldRef, codes: &[u32]) -> Result<Vec<Elem>, Fail> {
    codes.iter().map(|&c| field.elem(c as u64).map_err(Fail::from)).collect()
}

fn with_schema(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut out = Map::new();
            out.insert("schema".into(), json!(SCHEMA_VERSION));
            out.extend(m.into_iter().filter(|(k, _)| k != "schema"));
            Value::Object(out)
        }
        other => json!({"schema": SCHEMA_VERSION, "result": other}),
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn search_opts(cli: &Cli, prefilter: PrefilterKind) -> SearchOptions {
    SearchOptions {
        jobs: cli.jobs,
        prefilter,
        ..SearchOptions::default()
    }
}

/// Cached classification: load and revalidate, else compute and store.
fn classify_cached(
    cli: &Cli,
    field: &FieldRef,
    degree: usize,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<ClassificationResult, Fail> {
    let cache = Cache::new(&cli.cache_dir);
    if !cli.no_cache {
        if let Some(r) = cache.load(field, degree, mode, cli.seed)? {
            return Ok(r);
        }
    }
    let r = match mode {
        Mode::Normalized => classify_normalized(field, degree, opts)?,
        Mode::All => classify_all(field, degree, opts)?,
        Mode::Ortho => classify_orthomorphisms(field, degree, opts)?,
    };
    if !cli.no_cache {
        cache.store(&r)?;
    }
    Ok(r)
}

fn emit_classification(r: &ClassificationResult, out: &Option<PathBuf>) -> Out {
    let v = to_value(r);
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&v).expect("serializable") + "\n";
        fs::write(path, text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        return Ok((json!({"written": path.display().to_string(), "count": r.count}), true));
    }
    Ok((v, true))
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Field(fa) => {
            let f = fa.build()?;
            let g = f.primitive_element();
            Ok((
                json!({
                    "field": f.spec(),
                    "q": f.q(),
                    "primitive_element": g.0,
                    "square_roots_of_2": f.sqrts(f.from_int(2)).iter().map(|e| e.0).collect::<Vec<_>>(),
                    "tables": f.has_tables(),
                }),
                true,
            ))
        }
        Cmd::Test { field, poly, criteria } => {
            let f = field.build()?;
            let p = Poly::from_codes(&f, poly)?;
            let which: Vec<Criterion> = if criteria == "all" {
                Criterion::ALL.to_vec()
            } else {
                criteria
                    .split(',')
                    .map(|s| Criterion::parse(s.trim()).ok_or_else(|| Fail::Usage(format!("unknown criterion {s:?}"))))
                    .collect::<Result<_, _>>()?
            };
            let r = evaluate(&p, &which);
            if !r.all_agree() {
                return Err(Fail::Usage(format!("criteria disagree: {:?}", r.disagreeing())));
            }
            Ok((to_value(&r), r.is_pp))
        }
        Cmd::Family(a) => {
            let f = a.field.build()?;
            let name = a.name.as_str();
            let fam = match name {
                "monomial" => Family::Monomial { n: need(a.n, "n", name)? },
                "linearized" => Family::Linearized { coeffs: elems(&f, &need(a.coeffs.clone(), "coeffs", name)?)? },
                "all-extensions" => Family::AllExtensions { f: elems(&f, &need(a.coeffs.clone(), "coeffs", name)?)? },
                "specific-class" => Family::SpecificClass {
                    h: need(a.h, "h", name)?,
                    s: need(a.s, "s", name)?,
                    g: elems(&f, &need(a.coeffs.clone(), "coeffs", name)?)?,
                },
                "quadratic-binomial" => Family::QuadraticBinomial { a: f.elem(need(a.a, "a", name)? as u64)? },
                "m-binomial" => Family::MBinomial { m: need(a.m, "m", name)?, a: f.elem(need(a.a, "a", name)? as u64)? },
                "dickson" => Family::Dickson { k: need(a.k, "k", name)?, a: f.elem(need(a.a, "a", name)? as u64)? },
                other => return Err(Fail::Lib(permpoly::Error::UnknownFamily(other.into()))),
            };
            let inst = instantiate(&f, &fam)?;
            if !inst.agrees() {
                return Err(Fail::Usage(format!("criterion disagrees with brute force for {}", inst.family)));
            }
            Ok((to_value(&inst), inst.brute_force))
        }
        Cmd::Classify { field, degree, mode, prefilter, out } => {
            let f = field.build()?;
            let pk = match prefilter {
                PrefilterArg::None => PrefilterKind::None,
                PrefilterArg::HermitePartial => PrefilterKind::HermitePartial,
            };
            let mode = match mode {
                ClassifyMode::Normalized => Mode::Normalized,
                ClassifyMode::All => Mode::All,
            };
            let r = classify_cached(cli, &f, *degree, mode, &search_opts(cli, pk))?;
            emit_classification(&r, out)
        }
        Cmd::Table { cmd: TableCmd::Verify { field, degree, sqrt } } => {
            let f = field.build()?;
            let r = classify_cached(cli, &f, *degree, Mode::Normalized, &search_opts(cli, PrefilterKind::None))?;
            let sqrt = match sqrt {
                SqrtArg::Both => SqrtChoice::Both,
                SqrtArg::Canonical => SqrtChoice::Canonical,
            };
            let chk = verify_table(&f, &r, sqrt)?;
            let eq = chk.equal;
            Ok((to_value(&chk), eq))
        }
        Cmd::Table { cmd: TableCmd::Rows { field, degree } } => {
            let f = field.build()?;
            let rows: Vec<Value> = rows_for(&f, *degree)
                .iter()
                .map(|r| json!({"id": r.id, "formula": r.formula, "condition": r.condition}))
                .collect();
            Ok((json!({"field": f.spec(), "degree": degree, "rows": rows}), true))
        }
        Cmd::Ortho { cmd: OrthoCmd::Test { field, poly } } => {
            let f = field.build()?;
            let p = Poly::from_codes(&f, poly)?;
            let r = is_orthomorphism(&p);
            let mut v = to_value(&r);
            v["case"] = json!(ortho_case(&p));
            Ok((v, r.is_orthomorphism))
        }
        Cmd::Ortho { cmd: OrthoCmd::Classify { field, degree, out } } => {
            let f = field.build()?;
            let r = classify_cached(cli, &f, *degree, Mode::Ortho, &search_opts(cli, PrefilterKind::None))?;
            emit_classification(&r, out)
        }
        Cmd::Audit { name, q, degree, max_degree, samples } => {
            let params = AuditParams {
                q: *q,
                degree: *degree,
                max_degree: *max_degree,
                samples: *samples,
                seed: cli.seed,
                search: search_opts(cli, PrefilterKind::None),
            };
            let r = run_audit(name, &params)?;
            let mut v = to_value(&r);
            v["seed"] = json!(cli.seed);
            Ok((v, r.passed))
        }
        Cmd::Cache { cmd } => {
            let dir = &cli.cache_dir;
            match cmd {
                CacheCmd::Path => Ok((json!({"dir": dir.display().to_string()}), true)),
                CacheCmd::List => {
                    let mut files: Vec<String> = match fs::read_dir(dir) {
                        Ok(rd) => rd
                            .filter_map(|e| e.ok())
                            .map(|e| e.file_name().to_string_lossy().into_owned())
                            .filter(|n| n.ends_with(".json"))
                            .collect(),
                        Err(_) => Vec::new(),
                    };
                    files.sort();
                    Ok((json!({"dir": dir.display().to_string(), "entries": files}), true))
                }
                CacheCmd::Clear => {
                    let mut removed = 0;
                    if let Ok(rd) = fs::read_dir(dir) {
                        for e in rd.filter_map(|e| e.ok()) {
                            let name = e.file_name().to_string_lossy().into_owned();
                            if name.starts_with("class_") && name.ends_with(".json") {
                                fs::remove_file(e.path()).map_err(|e| Fail::Usage(e.to_string()))?;
                                removed += 1;
                            }
                        }
                    }
                    Ok((json!({"dir": dir.display().to_string(), "removed": removed}), true))
                }
            }
        }
    }
}

// ------------------------------------------------------------------ output

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(a) if a.iter().all(|x| x.is_number()) => {
            a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Lists of polynomials become one row each; anything else is key,value.
fn render_csv(v: &Value) -> String {
    let mut out = String::new();
    if let Some(polys) = v.get("polynomials").and_then(Value::as_array) {
        out.push_str("index,coefficients\n");
        for (i, p) in polys.iter().enumerate() {
            out.push_str(&format!("{i},{}\n", csv_field(&scalar(p))));
        }
        return out;
    }
    out.push_str("key,value\n");
    if let Value::Object(m) = v {
        for (k, x) in m {
            out.push_str(&format!("{},{}\n", csv_field(k), csv_field(&scalar(x))));
        }
    }
    out
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|y| y.is_object() || y.is_array()) => {
                        out.push_str(&format!("{pad}{k}: ({} items)\n", a.len()));
                        for y in a {
                            if y.is_object() {
                                out.push_str(&format!("{pad}  -\n"));
                                render_text(y, indent + 2, out);
                            } else {
                                out.push_str(&format!("{pad}  - {}\n", scalar(y)));
                            }
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, truth)) => {
            let v = with_schema(v);
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                Format::Csv => render_csv(&v),
                Format::Text => {
                    let mut s = String::new();
                    render_text(&v, 0, &mut s);
                    s
                }
            };
            print!("{text}");
            if truth {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
