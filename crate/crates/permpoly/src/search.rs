//! Exhaustive search over coefficient boxes.
//!
//! A [`Space`] fixes some coefficients and lets others range over value lists.
//! Candidates are indexed in mixed radix with the first slot fastest; when the
//! slots are listed lowest exponent first and each value list is ascending,
//! index order is encoding order, so concatenating chunk results in chunk
//! order gives sorted output whatever the number of workers.
//!
//! The inner loop exploits linearity in the fastest coefficient: for each
//! setting of the other slots the partial values `Σ_{k≠k0} a_k c^k` are
//! computed once, and each of the `|slot0|` candidates then costs one
//! multiply-add per point until the first collision.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct Slot {
    pub pos: usize,
    pub values: Vec<Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `f` is a PP.
    Pp,
    /// `f` and `f − x` are both PPs.
    Ortho,
}

#[derive(Clone, Debug)]
pub struct Space {
    pub field: FieldRef,
    /// Coefficients of positions not covered by a slot.
    pub fixed: Vec<Elem>,
    pub slots: Vec<Slot>,
}

impl Space {
    pub fn size(&self) -> u128 {
        self.slots.iter().map(|s| s.values.len() as u128).product()
    }

    pub fn check_cap(&self, cap: u128) -> Result<()> {
        let size = self.size();
        if size > cap {
            return Err(Error::SearchTooLarge { size, cap });
        }
        Ok(())
    }
}

/// Optional per-candidate rejection test run before the injectivity check.
/// It must only reject candidates that cannot be hits.
pub type Prefilter<'a> = &'a (dyn Fn(&Poly) -> bool + Sync);

/// Worker count from the `--jobs` convention: 0 means all available cores.
pub fn resolve_jobs(jobs: usize) -> usize {
    if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    }
}

/// All hits in encoding order (see the module docs for the ordering contract).
pub fn search(space: &Space, target: Target, jobs: usize, prefilter: Option<Prefilter<'_>>) -> Vec<Poly> {
    if space.slots.is_empty() {
        let f = Poly::new(&space.field, space.fixed.clone());
        return if accept(&f, target) && prefilter.map_or(true, |p| p(&f)) {
            vec![f]
        } else {
            Vec::new()
        };
    }
    let outer: u128 = space.slots[1..].iter().map(|s| s.values.len() as u128).product();
    let jobs = resolve_jobs(jobs);
    // enough chunks to balance, few enough to keep per-chunk setup negligible
    let n_chunks = (outer as usize).clamp(1, 64 * jobs);
    let chunk = outer.div_ceil(n_chunks as u128);
    let n_chunks = outer.div_ceil(chunk) as usize;
    let run = || {
        (0..n_chunks)
            .into_par_iter()
            .map(|i| {
                let lo = i as u128 * chunk;
                let hi = (lo + chunk).min(outer);
                run_chunk(space, target, prefilter, lo, hi)
            })
            .collect::<Vec<_>>()
    };
    let parts = if jobs == 1 {
        (0..n_chunks)
            .map(|i| {
                let lo = i as u128 * chunk;
                run_chunk(space, target, prefilter, lo, (lo + chunk).min(outer))
            })
            .collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    };
    parts.into_iter().flatten().collect()
}

fn accept(f: &Poly, target: Target) -> bool {
    let field = f.field();
    let vals = f.eval_table();
    let ok = crate::criteria::is_permutation(&vals);
    match target {
        Target::Pp => ok,
        Target::Ortho => {
            ok && crate::criteria::is_permutation(
                &field.elements().map(|c| field.sub(vals[c.0 as usize], c)).collect::<Vec<_>>(),
            )
        }
    }
}

fn run_chunk(space: &Space, target: Target, prefilter: Option<Prefilter<'_>>, lo: u128, hi: u128) -> Vec<Poly> {
    let field = &space.field;
    let q = field.q() as usize;
    let len = space
        .slots
        .iter()
        .map(|s| s.pos + 1)
        .chain(std::iter::once(space.fixed.len()))
        .max()
        .unwrap_or(0);
    let mut coeffs = space.fixed.clone();
    coeffs.resize(len, Elem::ZERO);
    let k0 = space.slots[0].pos;
    let inner = &space.slots[0].values;
    let rest = &space.slots[1..];

    // powers[k][c] = c^k
    let powers: Vec<Vec<Elem>> = (0..len)
        .map(|k| field.elements().map(|c| field.pow(c, k as u64)).collect())
        .collect();

    // odometer over the outer slots, starting at index lo
    let mut digits = vec![0usize; rest.len()];
    let mut idx = lo;
    for (d, s) in digits.iter_mut().zip(rest) {
        let n = s.values.len() as u128;
        *d = (idx % n) as usize;
        idx /= n;
    }

    let mut base = vec![Elem::ZERO; q];
    let mut seen = vec![0u32; q];
    let mut seen2 = vec![0u32; q];
    let mut stamp = 0u32;
    let mut hits = Vec::new();
    let p0 = &powers[k0];

    for _ in lo..hi {
        for (d, s) in digits.iter().zip(rest) {
            coeffs[s.pos] = s.values[*d];
        }
        coeffs[k0] = Elem::ZERO;
        for c in 0..q {
            let mut acc = Elem::ZERO;
            for (k, &a) in coeffs.iter().enumerate() {
                if !a.is_zero() {
                    acc = field.add(acc, field.mul(a, powers[k][c]));
                }
            }
            base[c] = acc;
        }
        for &v in inner {
            stamp = stamp.wrapping_add(1);
            if stamp == 0 {
                seen.fill(0);
                seen2.fill(0);
                stamp = 1;
            }
            let mut ok = true;
            for c in 0..q {
                let val = field.add(base[c], field.mul(v, p0[c]));
                let s = &mut seen[val.0 as usize];
                if *s == stamp {
                    ok = false;
                    break;
                }
                *s = stamp;
                if target == Target::Ortho {
                    let w = field.sub(val, Elem(c as u32)).0 as usize;
                    if seen2[w] == stamp {
                        ok = false;
                        break;
                    }
                    seen2[w] = stamp;
                }
            }
            if !ok {
                continue;
            }
            coeffs[k0] = v;
            let f = Poly::new(field, coeffs.clone());
            if prefilter.map_or(true, |p| p(&f)) {
                hits.push(f);
            }
        }
        // advance odometer
        for (d, s) in digits.iter_mut().zip(rest) {
            *d += 1;
            if *d < s.values.len() {
                break;
            }
            *d = 0;
        }
    }
    hits
}
