//! `g_f = det R(x^q − x, f − y) − (−1)^q (y^q − y)`, computed by
//! specialization. At `y = c ∈ F_q` the correction term vanishes, so the q
//! determinants determine `g_f` (degree ≤ q−1) by interpolation; one extra
//! point of `F_{q²}` cross-checks that nothing of degree q was missed.

use crate::field::{extension, Elem, Field, FieldRef};
use crate::linalg::{det, Matrix};
use crate::poly::{carlitz_interpolate, Poly};

#[derive(Clone, Debug)]
pub struct ResultantReport {
    pub is_pp: bool,
    /// `g_f` as a polynomial in `y`.
    pub g_f: Poly,
    /// The extension-point value agrees with the interpolant.
    pub extension_consistent: bool,
}

/// Sylvester matrix of `a` and `b`, coefficients ascending.
fn sylvester(a: &[Elem], b: &[Elem]) -> Matrix {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Elem::ZERO; size];
        for (k, &c) in a.iter().rev().enumerate() {
            row[i + k] = c;
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Elem::ZERO; size];
        for (k, &c) in b.iter().rev().enumerate() {
            row[i + k] = c;
        }
        rows.push(row);
    }
    rows
}

/// `det R(x^q − x, f − y0)` computed in `field` (which may be an extension of F_q).
fn specialized_det(field: &Field, q: usize, fcoeffs: &[Elem], y0: Elem) -> Elem {
    let mut a = vec![Elem::ZERO; q + 1];
    a[1] = field.neg(Elem::ONE);
    a[q] = Elem::ONE;
    let mut b: Vec<Elem> = if fcoeffs.is_empty() { vec![Elem::ZERO] } else { fcoeffs.to_vec() };
    b[0] = field.sub(b[0], y0);
    det(field, &sylvester(&a, &b))
}

pub fn resultant_test(f: &Poly) -> ResultantReport {
    let field = f.field();
    let g = f.reduce();
    let vals: Vec<Elem> = field
        .elements()
        .map(|c| specialized_det(field, field.q() as usize, g.coeffs(), c))
        .collect();
    let g_f = carlitz_interpolate(field, &vals).expect("q values");
    let extension_consistent = extension_check(field, &g, &g_f);
    ResultantReport {
        is_pp: g_f.is_zero() && extension_consistent,
        g_f,
        extension_consistent,
    }
}

fn extension_check(field: &FieldRef, g: &Poly, g_f: &Poly) -> bool {
    let Ok(emb) = extension(field, 2) else {
        return true; // F_{q²} beyond the supported range; interpolation alone decides
    };
    let big = emb.big().clone();
    let q = field.q() as usize;
    let y0 = big
        .elements()
        .find(|&y| emb.preimage(y).is_none())
        .expect("F_{q^2} is strictly larger");
    // x^q − x splits over F_q, so this is still Π_c (f(c) − y0)
    let lifted: Vec<Elem> = g.coeffs().iter().map(|&c| emb.map(c)).collect();
    let d = specialized_det(&big, q, &lifted, y0);
    let y0q = big.pow(y0, q as u64);
    let mut corr = big.sub(y0q, y0);
    if q % 2 == 1 {
        corr = big.neg(corr);
    }
    let direct = big.sub(d, corr);
    let interp = g_f
        .coeffs()
        .iter()
        .rev()
        .fold(Elem::ZERO, |acc, &c| big.add(big.mul(acc, y0), emb.map(c)));
    direct == interp
}
