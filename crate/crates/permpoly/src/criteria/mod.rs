//! Permutation tests. Brute force is the ground truth; every other criterion
//! is an equivalence and is reported next to it so disagreements surface.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::Elem;
use crate::poly::Poly;

mod hermite;
mod moreno;
mod raussnitz;
mod resultant;
mod turnwald;

pub use hermite::{hermite_power_coefficient, hermite_test, HermiteFailure, HermiteReport};
pub use moreno::{moreno_test, MorenoReport};
pub use raussnitz::{circulant, raussnitz_test, RaussnitzReport};
pub use resultant::{resultant_test, ResultantReport};
pub use turnwald::{turnwald_stats, value_set_size, wan_bound_check, ValueSetStats, WanReport};

/// Result of evaluating `f` at every point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForce {
    pub is_pp: bool,
    /// First colliding pair `(c1, c2)`, `c1 < c2`, minimal in `c2`.
    pub collision: Option<(Elem, Elem)>,
}

/// Evaluate until the first repeated value.
pub fn is_pp_bruteforce(f: &Poly) -> BruteForce {
    let field = f.field();
    let q = field.q() as usize;
    let mut seen = vec![u32::MAX; q];
    for c in field.elements() {
        let v = f.eval(c).0 as usize;
        if seen[v] != u32::MAX {
            return BruteForce {
                is_pp: false,
                collision: Some((Elem(seen[v]), c)),
            };
        }
        seen[v] = c.0;
    }
    BruteForce {
        is_pp: true,
        collision: None,
    }
}

/// Shorthand for `is_pp_bruteforce(f).is_pp`.
pub fn is_pp(f: &Poly) -> bool {
    is_pp_bruteforce(f).is_pp
}

/// Bijectivity of a value table.
pub fn is_permutation(values: &[Elem]) -> bool {
    let mut seen = vec![false; values.len()];
    for v in values {
        let i = v.0 as usize;
        if i >= seen.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// `Σ_c f(c)^t` for `t = 1..q−1`.
pub fn power_sum_profile(f: &Poly) -> Vec<Elem> {
    let field = f.field();
    let q = field.q() as usize;
    let vals = f.eval_table();
    let mut pw = vals.clone();
    let mut out = Vec::with_capacity(q - 1);
    for t in 1..q {
        if t > 1 {
            for (p, &v) in pw.iter_mut().zip(&vals) {
                *p = field.mul(*p, v);
            }
        }
        out.push(pw.iter().fold(Elem::ZERO, |a, &b| field.add(a, b)));
    }
    out
}

/// The permutation signature `(0, …, 0, −1)`.
pub fn has_pp_signature(f: &Poly, profile: &[Elem]) -> bool {
    let field = f.field();
    let (last, rest) = profile.split_last().expect("profile of length q-1 >= 1");
    rest.iter().all(|e| e.is_zero()) && *last == field.neg(Elem::ONE)
}

/// Supporting evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Collision { a: u32, b: u32 },
    /// First exponent whose reduced power violates the degree condition.
    Exponent { t: u64 },
    /// `f^{q−1}` does not reduce to a monic polynomial of degree q−1.
    TopPower,
    RootCount { roots: usize },
    /// First `t` with an unexpected power sum.
    PowerSum { t: u64 },
    CharPoly { coeffs: Vec<u32> },
    /// Reduced degree above the criterion's domain, which already rules out a PP.
    DegreeBound { degree: usize },
    ResultantPoly { coeffs: Vec<u32> },
    Point { c: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    Brute,
    PowerSum,
    Hermite,
    HermiteRoot,
    Raussnitz,
    Resultant,
    Turnwald,
    Moreno1,
    Moreno2,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::Brute,
        Criterion::PowerSum,
        Criterion::Hermite,
        Criterion::HermiteRoot,
        Criterion::Raussnitz,
        Criterion::Resultant,
        Criterion::Turnwald,
        Criterion::Moreno1,
        Criterion::Moreno2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Brute => "brute",
            Criterion::PowerSum => "power-sum",
            Criterion::Hermite => "hermite",
            Criterion::HermiteRoot => "hermite-root",
            Criterion::Raussnitz => "raussnitz",
            Criterion::Resultant => "resultant",
            Criterion::Turnwald => "turnwald",
            Criterion::Moreno1 => "moreno-1",
            Criterion::Moreno2 => "moreno-2",
        }
    }

    pub fn parse(s: &str) -> Option<Criterion> {
        Criterion::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CriterionReport {
    pub polynomial: Vec<u32>,
    pub is_pp: bool,
    pub per_criterion: BTreeMap<String, Outcome>,
}

impl CriterionReport {
    pub fn all_agree(&self) -> bool {
        self.per_criterion.values().all(|o| o.verdict == self.is_pp)
    }

    pub fn disagreeing(&self) -> Vec<&str> {
        self.per_criterion
            .iter()
            .filter(|(_, o)| o.verdict != self.is_pp)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// Evaluate the chosen criteria on `f`. Criteria whose preconditions fail on
/// `f` (a constant for Turnwald, say) are left out of the map.
pub fn evaluate(f: &Poly, which: &[Criterion]) -> CriterionReport {
    let brute = is_pp_bruteforce(f);
    let field = f.field();
    let mut per = BTreeMap::new();
    let mut hermite_cache: Option<HermiteReport> = None;
    let mut moreno_cache: Option<MorenoReport> = None;
    for &c in which {
        let outcome = match c {
            Criterion::Brute => Some(Outcome {
                verdict: brute.is_pp,
                witness: brute.collision.map(|(a, b)| Witness::Collision { a: a.0, b: b.0 }),
            }),
            Criterion::PowerSum => {
                let prof = power_sum_profile(f);
                let ok = has_pp_signature(f, &prof);
                let witness = (!ok).then(|| {
                    let q1 = prof.len();
                    let t = prof
                        .iter()
                        .enumerate()
                        .find(|&(i, e)| {
                            if i + 1 == q1 {
                                *e != field.neg(Elem::ONE)
                            } else {
                                !e.is_zero()
                            }
                        })
                        .map(|(i, _)| i as u64 + 1)
                        .unwrap_or(q1 as u64);
                    Witness::PowerSum { t }
                });
                Some(Outcome { verdict: ok, witness })
            }
            Criterion::Hermite | Criterion::HermiteRoot => {
                let h = hermite_cache.get_or_insert_with(|| hermite_test(f));
                let (verdict, witness) = if c == Criterion::Hermite {
                    (h.degree_form, h.failure.as_ref().map(HermiteFailure::witness))
                } else {
                    let w = match &h.failure {
                        Some(HermiteFailure::Exponent(t)) => Some(Witness::Exponent { t: *t }),
                        _ if h.roots != 1 => Some(Witness::RootCount { roots: h.roots }),
                        _ => None,
                    };
                    (h.root_form, w)
                };
                Some(Outcome { verdict, witness })
            }
            Criterion::Raussnitz => Some(match raussnitz_test(f) {
                Ok(r) => Outcome {
                    verdict: r.is_pp,
                    witness: (!r.is_pp).then(|| Witness::CharPoly {
                        coeffs: r.charpoly.codes(),
                    }),
                },
                Err(_) => Outcome {
                    verdict: false,
                    witness: Some(Witness::DegreeBound {
                        degree: f.reduce().degree().unwrap_or(0),
                    }),
                },
            }),
            Criterion::Resultant => {
                let r = resultant_test(f);
                Some(Outcome {
                    verdict: r.is_pp,
                    witness: (!r.is_pp).then(|| Witness::ResultantPoly {
                        coeffs: r.g_f.codes(),
                    }),
                })
            }
            // mixed items are a disagreement; report the opposite of brute force
            Criterion::Turnwald => turnwald_stats(f).ok().map(|s| Outcome {
                verdict: if s.items_agree() { s.items[1] } else { !brute.is_pp },
                witness: None,
            }),
            Criterion::Moreno1 | Criterion::Moreno2 => {
                let m = moreno_cache.get_or_insert_with(|| moreno_test(f));
                let (verdict, w) = if c == Criterion::Moreno1 {
                    (m.cond1, m.cond1_witness)
                } else {
                    (m.cond2, m.cond2_witness)
                };
                Some(Outcome {
                    verdict,
                    witness: w.map(|c| Witness::Point { c: c.0 }),
                })
            }
        };
        if let Some(o) = outcome {
            per.insert(c.name().to_string(), o);
        }
    }
    CriterionReport {
        polynomial: f.codes(),
        is_pp: brute.is_pp,
        per_criterion: per,
    }
}
