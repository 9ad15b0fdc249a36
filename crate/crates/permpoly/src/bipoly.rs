//! Sparse bivariate polynomials, just enough to build and check the
//! difference quotient `(f(x) − f(y)) / (x − y)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::poly::Poly;

/// Map `(deg_x, deg_y) → coefficient`; zero coefficients are never stored.
#[derive(Clone)]
pub struct BiPoly {
    field: FieldRef,
    terms: BTreeMap<(usize, usize), Elem>,
}

impl BiPoly {
    pub fn zero(field: &FieldRef) -> Self {
        BiPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Elem) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        let e = self.terms.entry((i, j)).or_insert(Elem::ZERO);
        *e = f.add(*e, c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn from_terms(field: &FieldRef, terms: &[(usize, usize, Elem)]) -> Self {
        let mut b = BiPoly::zero(field);
        for &(i, j, c) in terms {
            b.add_term(i, j, c);
        }
        b
    }

    /// `f(x)` viewed as a polynomial in two variables.
    pub fn in_x(f: &Poly) -> Self {
        let mut b = BiPoly::zero(f.field());
        for (k, &c) in f.coeffs().iter().enumerate() {
            b.add_term(k, 0, c);
        }
        b
    }

    /// `f(y)`.
    pub fn in_y(f: &Poly) -> Self {
        let mut b = BiPoly::zero(f.field());
        for (k, &c) in f.coeffs().iter().enumerate() {
            b.add_term(0, k, c);
        }
        b
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_term(i, j, self.field.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let f = &self.field;
        let mut out = BiPoly::zero(f);
        for (&(i, j), &a) in &self.terms {
            for (&(k, l), &b) in &other.terms {
                out.add_term(i + k, j + l, f.mul(a, b));
            }
        }
        out
    }

    /// `x − y`.
    pub fn x_minus_y(field: &FieldRef) -> BiPoly {
        BiPoly::from_terms(field, &[(1, 0, Elem::ONE), (0, 1, field.neg(Elem::ONE))])
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::from_terms(&self.field, &[(0, 0, Elem::ONE)]);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: Elem, y: Elem) -> Elem {
        let f = &self.field;
        self.terms.iter().fold(Elem::ZERO, |acc, (&(i, j), &c)| {
            f.add(acc, f.mul(c, f.mul(f.pow(x, i as u64), f.pow(y, j as u64))))
        })
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.terms == other.terms
    }
}
impl Eq for BiPoly {}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mono = |v: &str, e: usize| match e {
            0 => String::new(),
            1 => v.to_string(),
            e => format!("{v}^{e}"),
        };
        for (&(i, j), &c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let m = format!("{}{}", mono("x", i), mono("y", j));
            match (c.0, m.is_empty()) {
                (v, true) => write!(f, "{v}")?,
                (1, false) => write!(f, "{m}")?,
                (v, false) => write!(f, "{v}{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Φ(x,y)` with `Φ·(x−y) = f(x) − f(y)`, via
/// `x^k − y^k = (x−y) Σ_{i<k} x^i y^{k−1−i}`.
pub fn difference_quotient(f: &Poly) -> Result<BiPoly> {
    match f.degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        _ => {}
    }
    let mut phi = BiPoly::zero(f.field());
    for (k, &a) in f.coeffs().iter().enumerate().skip(1) {
        for i in 0..k {
            phi.add_term(i, k - 1 - i, a);
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    #[test]
    fn simple_quotients() {
        let f = Field::new(7, 1).unwrap();
        let x2 = Poly::from_codes(&f, &[0, 0, 1]).unwrap();
        let phi = difference_quotient(&x2).unwrap();
        assert_eq!(phi, BiPoly::from_terms(&f, &[(1, 0, Elem(1)), (0, 1, Elem(1))]));
        let x3 = Poly::from_codes(&f, &[0, 0, 0, 1]).unwrap();
        assert_eq!(difference_quotient(&x3).unwrap().to_string(), "x^2 + xy + y^2");
        let c = Poly::from_codes(&f, &[3]).unwrap();
        assert_eq!(difference_quotient(&c).unwrap_err(), Error::ConstantInput);
    }

    #[test]
    fn frobenius_plus_constant() {
        for (p, r) in [(3u32, 1u32), (3, 2), (5, 1), (2, 3), (7, 1)] {
            let f = Field::new(p, r).unwrap();
            let a = Elem(f.q() - 1);
            let g = Poly::from_terms(&f, &[(p as usize, Elem::ONE), (0, a)]);
            let expect = BiPoly::x_minus_y(&f).pow(p - 1);
            assert_eq!(difference_quotient(&g).unwrap(), expect);
        }
    }

    proptest! {
        #[test]
        fn quotient_identity(codes in prop::collection::vec(0u32..9, 2..10)) {
            let f = Field::new(3, 2).unwrap();
            let g = Poly::from_codes(&f, &codes).unwrap();
            prop_assume!(g.degree().unwrap_or(0) >= 1);
            let phi = difference_quotient(&g).unwrap();
            let lhs = phi.mul(&BiPoly::x_minus_y(&f));
            let rhs = BiPoly::in_x(&g).sub(&BiPoly::in_y(&g));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
