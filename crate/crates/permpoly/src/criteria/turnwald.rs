//! Value-set statistics: the symmetric functions `s_k` of the values, the
//! power sums `p_k`, the value-set size `v`, and Wan's bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::Poly;

pub fn value_set_size(f: &Poly) -> usize {
    let field = f.field();
    let mut seen = vec![false; field.q() as usize];
    for c in field.elements() {
        seen[f.eval(c).0 as usize] = true;
    }
    seen.iter().filter(|&&b| b).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueSetStats {
    pub q: u64,
    pub n: u64,
    pub v: u64,
    /// Least `k ≥ 1` with `s_k ≠ 0`; `None` stands for ∞.
    pub u: Option<u64>,
    /// Least `k ≥ 1` with `p_k ≠ 0`; `None` stands for ∞.
    pub w: Option<u64>,
    /// The ten equivalent statements, in order, starting with "f is a PP".
    pub items: [bool; 10],
}

impl ValueSetStats {
    pub fn items_agree(&self) -> bool {
        self.items.iter().all(|&b| b == self.items[0])
    }
}

/// Statistics for `1 ≤ deg f < q` (degree of the reduced polynomial).
pub fn turnwald_stats(f: &Poly) -> Result<ValueSetStats> {
    let field = f.field();
    let q = field.q() as u64;
    let g = f.reduce();
    let n = match g.degree() {
        Some(d) if d >= 1 => d as u64,
        _ => return Err(Error::ConstantInput),
    };
    let vals = g.eval_table();

    // Π (x − f(c)) built incrementally, ascending coefficients
    let mut prod = vec![Elem::ONE];
    for &val in &vals {
        let mut next = vec![Elem::ZERO; prod.len() + 1];
        for (i, &c) in prod.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.sub(next[i], field.mul(val, c));
        }
        prod = next;
    }
    // coefficient of x^{q−k} is (−1)^k s_k, so s_k ≠ 0 iff that coefficient ≠ 0
    let u = (1..=q).find(|&k| !prod[(q - k) as usize].is_zero());

    // p_k is periodic in k with period q−1 for k ≥ 1
    let mut pw = vals.clone();
    let mut w = None;
    for k in 1..q {
        if k > 1 {
            for (p, &v) in pw.iter_mut().zip(&vals) {
                *p = field.mul(*p, v);
            }
        }
        let s = pw.iter().fold(Elem::ZERO, |a, &b| field.add(a, b));
        if !s.is_zero() {
            w = Some(k);
            break;
        }
    }

    let mut seen = vec![false; q as usize];
    for v in &vals {
        seen[v.0 as usize] = true;
    }
    let v = seen.iter().filter(|&&b| b).count() as u64;

    // All comparisons cleared of denominators; ∞ compares above every integer.
    let (qi, ni, vi) = (q as i128, n as i128, v as i128);
    let ui = u.map(|x| x as i128);
    let wi = w.map(|x| x as i128);
    let u_gt = |rhs_num: i128, den: i128| ui.map_or(true, |u| u * den > rhs_num);
    let items = [
        v == q,
        u == Some(q - 1),
        u_gt(qi * ni - qi, ni),
        u_gt(qi - vi, 1),
        vi * ni > qi * ni - (qi - 1),
        w == Some(q - 1),
        wi.is_some_and(|w| 3 * (w + 1) > 2 * qi),
        wi.is_some_and(|w| w * ni > qi * ni - (qi + 1)),
        wi.is_some_and(|w| ui.map_or(true, |u| qi - u <= w)),
        u_gt(qi - 1, 2) && wi.is_some(),
    ];
    Ok(ValueSetStats { q, n, v, u, w, items })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WanReport {
    pub v: u64,
    pub n: u64,
    /// `q − ⌈(q−1)/n⌉`.
    pub bound: u64,
    pub is_pp: bool,
    /// `v ≤ bound`, or the polynomial is a PP (which is exempt).
    pub satisfied: bool,
}

pub fn wan_bound_check(f: &Poly) -> Result<WanReport> {
    let q = f.field().q() as u64;
    let n = match f.reduce().degree() {
        Some(d) if d >= 1 => d as u64,
        _ => return Err(Error::ConstantInput),
    };
    let v = value_set_size(f) as u64;
    let bound = q - (q - 1).div_ceil(n);
    let is_pp = v == q;
    Ok(WanReport {
        v,
        n,
        bound,
        is_pp,
        satisfied: is_pp || v <= bound,
    })
}
