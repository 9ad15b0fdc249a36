//! Normalized representatives, orbit expansion and exhaustive classification.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::criteria::is_pp;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, FieldSpec};
use crate::poly::Poly;
use crate::search::{search, Prefilter, Slot, Space, Target};

pub const SCHEMA_VERSION: u32 = 1;

/// `g = c·f(x+b) + d` with `g` normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedForm {
    pub g: Poly,
    pub b: Elem,
    pub c: Elem,
    pub d: Elem,
}

/// Monic, `g(0) = 0`, and no `x^{n−1}` term when `p ∤ n`.
pub fn is_normalized(g: &Poly) -> bool {
    let Some(n) = g.degree() else { return false };
    if n == 0 || !g.is_monic() || !g.coeff(0).is_zero() {
        return false;
    }
    let p = g.field().p() as usize;
    n % p == 0 || g.coeff(n - 1).is_zero()
}

/// Normalize a PP. The input is first reduced modulo `x^q − x`; when the
/// characteristic divides the degree the shift is fixed to `b = 0`.
pub fn normalize(f: &Poly) -> Result<NormalizedForm> {
    let field = f.field();
    let f = f.reduce();
    if f.is_constant() || !is_pp(&f) {
        return Err(Error::NotAPP);
    }
    let n = f.degree().expect("nonconstant");
    let an = f.lead();
    let c = field.inv(an)?;
    let b = if n % field.p() as usize != 0 {
        let den = field.mul_int(an, n as u64);
        field.neg(field.div(f.coeff(n - 1), den)?)
    } else {
        Elem::ZERO
    };
    let d = field.neg(field.mul(c, f.eval(b)));
    let g = f.shift_scale_compose(b, c, d)?;
    debug_assert!(is_normalized(&g));
    Ok(NormalizedForm { g, b, c, d })
}

/// All `c·g(x+b) + d`; `b` ranges over the field only for nonlinear `g` of
/// degree prime to `p`, matching the normalization convention.
pub fn orbit_expand(g: &Poly) -> Result<BTreeSet<Poly>> {
    if !is_normalized(g) {
        return Err(Error::NotNormalized);
    }
    let field = g.field();
    let n = g.degree().expect("normalized");
    let shifts: Vec<Elem> = if n > 1 && n % field.p() as usize != 0 {
        field.elements().collect()
    } else {
        vec![Elem::ZERO]
    };
    let mut out = BTreeSet::new();
    for &b in &shifts {
        let shifted = g.shift_scale_compose(b, Elem::ONE, Elem::ZERO)?;
        for c in field.nonzero() {
            let scaled = shifted.scale(c);
            for d in field.elements() {
                out.insert(scaled.add_const(d));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Normalized,
    All,
    Ortho,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Normalized => "normalized",
            Mode::All => "all",
            Mode::Ortho => "ortho",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrefilterKind {
    #[default]
    None,
    /// Reject when the first Hermite power that can reach `x^{q−1}` does.
    HermitePartial,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Worker threads; 0 = all cores.
    pub jobs: usize,
    pub prefilter: PrefilterKind,
    /// Largest admissible candidate count.
    pub cap: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 0,
            prefilter: PrefilterKind::None,
            cap: 1_000_000_000,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub schema: u32,
    pub field: FieldSpec,
    pub degree: usize,
    pub mode: Mode,
    /// Ascending coefficient codes, sorted by encoding.
    pub polynomials: Vec<Vec<u32>>,
    pub count: usize,
    pub search_space: u64,
    /// Not serialized, so that output is reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl PartialEq for ClassificationResult {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.degree == other.degree
            && self.mode == other.mode
            && self.polynomials == other.polynomials
            && self.search_space == other.search_space
    }
}

impl ClassificationResult {
    pub fn polys(&self, field: &FieldRef) -> Result<Vec<Poly>> {
        self.polynomials.iter().map(|c| Poly::from_codes(field, c)).collect()
    }

    pub fn set(&self, field: &FieldRef) -> Result<BTreeSet<Poly>> {
        Ok(self.polys(field)?.into_iter().collect())
    }
}

/// Smallest `t ≤ q−2` with `p ∤ t` whose power can reach degree `q−1`.
fn first_hermite_exponent(q: u64, p: u64, n: u64) -> Option<u64> {
    (1..=q.saturating_sub(2)).find(|&t| t % p != 0 && t * n >= q - 1)
}

pub(crate) fn run_space(
    field: &FieldRef,
    degree: usize,
    mode: Mode,
    spaces: &[Space],
    target: Target,
    opts: &SearchOptions,
) -> Result<ClassificationResult> {
    let total: u128 = spaces.iter().map(Space::size).sum();
    if total > opts.cap as u128 {
        return Err(Error::SearchTooLarge {
            size: total,
            cap: opts.cap as u128,
        });
    }
    let start = Instant::now();
    let q = field.q() as u64;
    let p = field.p() as u64;
    let t0 = first_hermite_exponent(q, p, degree as u64);
    let hermite = move |f: &Poly| match t0 {
        Some(t) => f.pow_reduced(t).coeff(q as usize - 1).is_zero(),
        None => true,
    };
    let pre: Option<Prefilter<'_>> = match opts.prefilter {
        PrefilterKind::None => None,
        PrefilterKind::HermitePartial => Some(&hermite),
    };
    let mut hits: Vec<Poly> = spaces
        .iter()
        .flat_map(|s| search(s, target, opts.jobs, pre))
        .collect();
    hits.sort();
    hits.dedup();
    let polynomials: Vec<Vec<u32>> = hits.iter().map(Poly::codes).collect();
    Ok(ClassificationResult {
        schema: SCHEMA_VERSION,
        field: field.spec(),
        degree,
        mode,
        count: polynomials.len(),
        polynomials,
        search_space: total as u64,
        wall_time: start.elapsed(),
    })
}

fn check_degree(field: &FieldRef, n: usize) -> Result<()> {
    let hi = field.q() as usize - 2;
    if n < 2 || n > hi {
        return Err(Error::DegreeOutOfRange { n, lo: 2, hi });
    }
    Ok(())
}

/// Candidate box of normalized degree-`n` polynomials.
pub fn normalized_space(field: &FieldRef, n: usize) -> Space {
    let p = field.p() as usize;
    let mut fixed = vec![Elem::ZERO; n + 1];
    fixed[n] = Elem::ONE;
    let all: Vec<Elem> = field.elements().collect();
    let slots = (1..n)
        .filter(|&k| k != n - 1 || n % p == 0)
        .map(|pos| Slot {
            pos,
            values: all.clone(),
        })
        .collect();
    Space {
        field: field.clone(),
        fixed,
        slots,
    }
}

/// Every normalized PP of degree `n`, `2 ≤ n ≤ q−2`.
pub fn classify_normalized(field: &FieldRef, n: usize, opts: &SearchOptions) -> Result<ClassificationResult> {
    check_degree(field, n)?;
    run_space(field, n, Mode::Normalized, &[normalized_space(field, n)], Target::Pp, opts)
}

/// Every PP of exact degree `n`, any leading coefficient and constant term.
pub fn classify_all(field: &FieldRef, n: usize, opts: &SearchOptions) -> Result<ClassificationResult> {
    if n == 0 || n >= field.q() as usize {
        return Err(Error::DegreeOutOfRange {
            n,
            lo: 1,
            hi: field.q() as usize - 1,
        });
    }
    let all: Vec<Elem> = field.elements().collect();
    let mut slots: Vec<Slot> = (0..n)
        .map(|pos| Slot {
            pos,
            values: all.clone(),
        })
        .collect();
    slots.push(Slot {
        pos: n,
        values: field.nonzero().collect(),
    });
    let space = Space {
        field: field.clone(),
        fixed: vec![],
        slots,
    };
    run_space(field, n, Mode::All, &[space], Target::Pp, opts)
}

/// Emptiness audits are limited to `q^{n−1} ≤ 10^8` candidates.
pub const AUDIT_CAP: u128 = 100_000_000;

/// Number of normalized degree-`n` PPs.
pub fn audit_nonexistence(field: &FieldRef, n: usize, opts: &SearchOptions) -> Result<usize> {
    let size = (field.q() as u128).checked_pow(n as u32 - 1).unwrap_or(u128::MAX);
    if size > AUDIT_CAP {
        return Err(Error::SearchTooLarge { size, cap: AUDIT_CAP });
    }
    Ok(classify_normalized(field, n, opts)?.count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilsonReport {
    pub q: u64,
    /// Nonlinear normalized PPs with degree prime to p.
    pub k1: u64,
    /// Normalized PPs with degree divisible by p.
    pub k2: u64,
    pub q_factorial: u128,
    pub rhs: u128,
    pub identity_holds: bool,
    /// PPs among all `q^q` polynomials of degree `< q`, when counted.
    pub exhaustive_pp_count: Option<u64>,
}

/// Above this order the `q^q` enumeration is refused.
pub const WILSON_EXHAUSTIVE_MAX_Q: u32 = 7;

/// `q! = q(q−1)(1 + k₂ + q·k₁)`.
pub fn wilson_count(field: &FieldRef, exhaustive: bool, opts: &SearchOptions) -> Result<WilsonReport> {
    let q = field.q() as u64;
    let p = field.p() as usize;
    if exhaustive && field.q() > WILSON_EXHAUSTIVE_MAX_Q {
        return Err(Error::FieldTooLarge(q));
    }
    let (mut k1, mut k2) = (0u64, 0u64);
    for n in 2..=(q as usize).saturating_sub(2) {
        let c = classify_normalized(field, n, opts)?.count as u64;
        if n % p == 0 {
            k2 += c;
        } else {
            k1 += c;
        }
    }
    let fact = (1..=q as u128)
        .try_fold(1u128, |a, b| a.checked_mul(b))
        .ok_or(Error::FieldTooLarge(q))?;
    let (qq, k1w, k2w) = (q as u128, k1 as u128, k2 as u128);
    let rhs = qq * (qq - 1) * (1 + k2w + qq * k1w);
    let exhaustive_pp_count = if exhaustive {
        let all: Vec<Elem> = field.elements().collect();
        let space = Space {
            field: field.clone(),
            fixed: vec![],
            slots: (0..q as usize)
                .map(|pos| Slot {
                    pos,
                    values: all.clone(),
                })
                .collect(),
        };
        Some(search(&space, Target::Pp, opts.jobs, None).len() as u64)
    } else {
        None
    };
    Ok(WilsonReport {
        q,
        k1,
        k2,
        q_factorial: fact,
        rhs,
        identity_holds: fact == rhs,
        exhaustive_pp_count,
    })
}
