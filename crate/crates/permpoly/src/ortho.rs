//! Orthomorphisms (`f` and `f − x` both permute) and complete mappings
//! (`f + x` permutes) of the additive group of `F_q`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::criteria::{is_permutation, is_pp};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::normalize::{run_space, ClassificationResult, Mode, SearchOptions};
use crate::poly::{carlitz_interpolate, Poly};
use crate::search::{Slot, Space, Target};
use crate::tables::SqrtChoice;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthoReport {
    pub polynomial: Vec<u32>,
    pub is_pp: bool,
    /// `f − x` is a PP.
    pub shifted_is_pp: bool,
    pub is_orthomorphism: bool,
    /// `f + x` is a PP.
    pub is_complete_mapping: bool,
    pub reduced_degree: Option<usize>,
}

pub fn is_orthomorphism(f: &Poly) -> OrthoReport {
    let x = Poly::x(f.field());
    let is_pp_f = is_pp(f);
    let shifted = is_pp(&(f - &x));
    OrthoReport {
        polynomial: f.codes(),
        is_pp: is_pp_f,
        shifted_is_pp: shifted,
        is_orthomorphism: is_pp_f && shifted,
        is_complete_mapping: is_complete_mapping(f),
        reduced_degree: f.reduce().degree(),
    }
}

pub fn is_complete_mapping(f: &Poly) -> bool {
    is_pp(&(f + &Poly::x(f.field())))
}

/// `P2`: no `x^{n−1}` term; `P3`: an `x^{n−1}` term but no `x^{n−2}` term.
pub fn ortho_case(f: &Poly) -> Option<&'static str> {
    let n = f.degree()?;
    if n < 1 || !f.coeff(0).is_zero() {
        return None;
    }
    if f.coeff(n - 1).is_zero() {
        Some("P2")
    } else if n < 2 || f.coeff(n - 2).is_zero() {
        Some("P3")
    } else {
        None
    }
}

fn ortho_spaces(field: &FieldRef, n: usize) -> Vec<Space> {
    let all: Vec<Elem> = field.elements().collect();
    let nonzero: Vec<Elem> = field.nonzero().collect();
    let build = |case3: bool| {
        let mut slots = Vec::new();
        for pos in 1..n {
            let values = if pos == n - 1 {
                if case3 {
                    nonzero.clone()
                } else {
                    continue;
                }
            } else if case3 && pos + 2 == n {
                continue;
            } else {
                all.clone()
            };
            slots.push(Slot { pos, values });
        }
        slots.push(Slot {
            pos: n,
            values: nonzero.clone(),
        });
        Space {
            field: field.clone(),
            fixed: vec![Elem::ZERO; n + 1],
            slots,
        }
    };
    vec![build(false), build(true)]
}

fn check_ortho_degree(field: &FieldRef, n: usize) -> Result<()> {
    let hi = field.q() as usize - 1;
    if n < 2 || n > hi {
        return Err(Error::DegreeOutOfRange { n, lo: 2, hi });
    }
    Ok(())
}

/// Degree-`n` orthomorphisms with `f(0) = 0` and (P2 or P3); the leading
/// coefficient is enumerated since scaling does not preserve the property.
pub fn classify_orthomorphisms(field: &FieldRef, n: usize, opts: &SearchOptions) -> Result<ClassificationResult> {
    check_ortho_degree(field, n)?;
    run_space(field, n, Mode::Ortho, &ortho_spaces(field, n), Target::Ortho, opts)
}

/// Every degree-`n` orthomorphism, no reduction at all.
pub fn classify_all_orthomorphisms(field: &FieldRef, n: usize, opts: &SearchOptions) -> Result<ClassificationResult> {
    check_ortho_degree(field, n)?;
    let all: Vec<Elem> = field.elements().collect();
    let mut slots: Vec<Slot> = (0..n).map(|pos| Slot { pos, values: all.clone() }).collect();
    slots.push(Slot {
        pos: n,
        values: field.nonzero().collect(),
    });
    let space = Space {
        field: field.clone(),
        fixed: vec![],
        slots,
    };
    run_space(field, n, Mode::All, &[space], Target::Ortho, opts)
}

/// The three degree-6 families over `F_9` (with `s² = 2`):
/// `a x^6 + a^7 x^4 + a^5 x^2 + 2x`,
/// `a x^6 + a^7 x^4 − s a^2 x^3 + a^5 x^2 + (2+s) x`,
/// `a^5 x^6 + s a^4 x^5 + s a^2 x^3 + a x^2 + 2(1+s) x`, each for `a ≠ 0`.
pub fn degree6_f9_families(field: &FieldRef, sqrt: SqrtChoice) -> Result<[BTreeSet<Poly>; 3]> {
    if field.q() != 9 {
        return Err(Error::BadParameters("these families live over F_9".into()));
    }
    let f = field;
    let pw = |a, k| f.pow(a, k);
    let roots: Vec<Elem> = match sqrt {
        SqrtChoice::Both => f.sqrts(f.from_int(2)),
        SqrtChoice::Canonical => f.sqrt(f.from_int(2)).into_iter().collect(),
    };
    let two = f.from_int(2);
    let mut fam = [BTreeSet::new(), BTreeSet::new(), BTreeSet::new()];
    for a in f.nonzero() {
        fam[0].insert(Poly::new(f, vec![Elem::ZERO, two, pw(a, 5), Elem::ZERO, pw(a, 7), Elem::ZERO, a]));
        for &s in &roots {
            let c3 = f.neg(f.mul(s, pw(a, 2)));
            fam[1].insert(Poly::new(f, vec![Elem::ZERO, f.add(two, s), pw(a, 5), c3, pw(a, 7), Elem::ZERO, a]));
            let c1 = f.mul(two, f.add(Elem::ONE, s));
            fam[2].insert(Poly::new(
                f,
                vec![Elem::ZERO, c1, a, f.mul(s, pw(a, 2)), Elem::ZERO, f.mul(s, pw(a, 4)), pw(a, 5)],
            ));
        }
    }
    Ok(fam)
}

/// All `f + d` for the first two families and `g(x+b) + d` for the third.
pub fn degree6_f9_closure(field: &FieldRef, sqrt: SqrtChoice) -> Result<BTreeSet<Poly>> {
    let [f1, f2, f3] = degree6_f9_families(field, sqrt)?;
    let mut out = BTreeSet::new();
    for f in f1.iter().chain(&f2) {
        for d in field.elements() {
            out.insert(f.add_const(d));
        }
    }
    for g in &f3 {
        for b in field.elements() {
            let shifted = g.shift_scale_compose(b, Elem::ONE, Elem::ZERO)?;
            for d in field.elements() {
                out.insert(shifted.add_const(d));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBoundAudit {
    pub q: u64,
    pub permutations: u64,
    pub orthomorphisms: u64,
    pub max_degree: Option<usize>,
    /// `q − 3`.
    pub bound: i64,
    pub holds: bool,
    /// The statement needs `q > 2`.
    pub skipped: bool,
}

pub const ORTHO_AUDIT_MAX_Q: u32 = 9;

/// Lexicographic successor; false after the last permutation.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Check that every orthomorphism of `F_q` reduces to degree ≤ q−3 by
/// running through all `q!` permutations.
pub fn ortho_degree_bound_audit(field: &FieldRef) -> Result<DegreeBoundAudit> {
    let q = field.q();
    if q > ORTHO_AUDIT_MAX_Q {
        return Err(Error::FieldTooLarge(q as u64));
    }
    let bound = q as i64 - 3;
    if q <= 2 {
        return Ok(DegreeBoundAudit {
            q: q as u64,
            permutations: 0,
            orthomorphisms: 0,
            max_degree: None,
            bound,
            holds: true,
            skipped: true,
        });
    }
    let mut perm: Vec<u32> = (0..q).collect();
    let (mut count, mut orthos) = (0u64, 0u64);
    let mut max_degree: Option<usize> = None;
    let mut shifted = vec![Elem::ZERO; q as usize];
    loop {
        count += 1;
        for (c, s) in shifted.iter_mut().enumerate() {
            *s = field.sub(Elem(perm[c]), Elem(c as u32));
        }
        if is_permutation(&shifted) {
            orthos += 1;
            let vals: Vec<Elem> = perm.iter().map(|&v| Elem(v)).collect();
            let d = carlitz_interpolate(field, &vals)?.degree();
            max_degree = max_degree.max(d);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(DegreeBoundAudit {
        q: q as u64,
        permutations: count,
        orthomorphisms: orthos,
        max_degree,
        bound,
        holds: max_degree.map_or(true, |d| d as i64 <= bound),
        skipped: false,
    })
}
