//! On-disk cache of classification results.
//!
//! One JSON file per (field, degree, mode). A hit is only returned after a
//! random sample of its members has been re-tested, so a stale or edited
//! file is caught rather than trusted.

use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::criteria::is_pp;
use crate::error::{Error, Result};
use crate::field::{Field, FieldRef};
use crate::normalize::{ClassificationResult, Mode, SCHEMA_VERSION};
use crate::ortho::is_orthomorphism;
use crate::poly::Poly;

pub const CACHE_ENV: &str = "PERMPOLY_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".permpoly-cache";
pub const REVALIDATE_SAMPLES: usize = 10;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    /// `$PERMPOLY_CACHE_DIR`, else `.permpoly-cache/` in the working directory.
    pub fn from_env() -> Cache {
        Cache::new(std::env::var_os(CACHE_ENV).map_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR), PathBuf::from))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, field: &Field, degree: usize, mode: Mode) -> PathBuf {
        self.dir.join(format!(
            "class_p{}r{}_d{}_{}.json",
            field.p(),
            field.r(),
            degree,
            mode.as_str()
        ))
    }

    /// A revalidated hit, `None` on a miss. A file that exists but does not
    /// match the request or fails revalidation is an error.
    pub fn load(&self, field: &FieldRef, degree: usize, mode: Mode, seed: u64) -> Result<Option<ClassificationResult>> {
        let path = self.path(field, degree, mode);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let r: ClassificationResult =
            serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if r.schema != SCHEMA_VERSION {
            return Err(Error::Cache(format!("{}: schema {} (want {SCHEMA_VERSION})", path.display(), r.schema)));
        }
        if r.field != field.spec() || r.degree != degree || r.mode != mode || r.count != r.polynomials.len() {
            return Err(Error::Cache(format!("{}: header does not match request", path.display())));
        }
        revalidate(field, &r, REVALIDATE_SAMPLES, seed)?;
        Ok(Some(r))
    }

    pub fn store(&self, r: &ClassificationResult) -> Result<PathBuf> {
        let field = Field::from_spec(&r.field)?;
        let path = self.path(&field, r.degree, r.mode);
        fs::create_dir_all(&self.dir).map_err(|e| Error::Cache(format!("{}: {e}", self.dir.display())))?;
        let text = serde_json::to_string(r).map_err(|e| Error::Cache(e.to_string()))?;
        // write-then-rename so a concurrent reader never sees half a file
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok(path)
    }
}

/// Re-test up to `samples` randomly chosen members, plus sortedness.
pub fn revalidate(field: &FieldRef, r: &ClassificationResult, samples: usize, seed: u64) -> Result<()> {
    let polys = r.polys(field)?;
    if !polys.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Cache("members not strictly sorted".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = samples.min(polys.len());
    for i in sample(&mut rng, polys.len(), k) {
        let f: &Poly = &polys[i];
        let ok = f.degree() == Some(r.degree)
            && match r.mode {
                Mode::Ortho => is_orthomorphism(f).is_orthomorphism,
                Mode::Normalized | Mode::All => is_pp(f),
            };
        if !ok {
            return Err(Error::Cache(format!("cached member {f} fails revalidation")));
        }
    }
    Ok(())
}
