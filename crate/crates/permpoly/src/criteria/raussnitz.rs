use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{charpoly, Matrix};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub struct RaussnitzReport {
    pub is_pp: bool,
    /// `det(xI − M_f)`.
    pub charpoly: Poly,
    /// `(x − a_0)^{q−1} − 1`.
    pub expected: Poly,
}

/// `(q−1)×(q−1)` circulant with first row `(a_0, …, a_{q−2})`.
pub fn circulant(first_row: &[Elem]) -> Matrix {
    let n = first_row.len();
    (0..n)
        .map(|i| (0..n).map(|j| first_row[(j + n - i) % n]).collect())
        .collect()
}

/// PP iff the circulant's characteristic polynomial is `(x−a_0)^{q−1} − 1`.
/// Defined for reduced degree at most q−2.
pub fn raussnitz_test(f: &Poly) -> Result<RaussnitzReport> {
    let field = f.field();
    let q = field.q() as usize;
    let g = f.reduce();
    if let Some(d) = g.degree() {
        if d + 2 > q {
            return Err(Error::DegreeTooHigh {
                degree: d,
                max: q.saturating_sub(2),
            });
        }
    }
    let row: Vec<Elem> = (0..q - 1).map(|i| g.coeff(i)).collect();
    let m = circulant(&row);
    let cp = Poly::new(field, charpoly(field, &m));
    let a0 = g.coeff(0);
    let lin = Poly::new(field, vec![field.neg(a0), Elem::ONE]);
    let expected = lin.pow(q as u32 - 1).add_const(field.neg(Elem::ONE));
    Ok(RaussnitzReport {
        is_pp: cp == expected,
        charpoly: cp,
        expected,
    })
}
