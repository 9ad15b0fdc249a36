//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
#[cfg(test)]
use crate::field::Field;

/// Ascending coefficients with no trailing zeros; the empty list is zero.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Elem>,
}

#[inline]
fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exponent after folding `x^k → x^{k-(q-1)}` until `k < q`.
#[inline]
pub fn fold_exponent(k: usize, q: usize) -> usize {
    if k < q {
        k
    } else {
        (k - 1) % (q - 1) + 1
    }
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<Elem>) -> Poly {
        trim(&mut coeffs);
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Build from raw codes, rejecting codes outside the field.
    pub fn from_codes(field: &FieldRef, codes: &[u32]) -> Result<Poly> {
        let coeffs = codes
            .iter()
            .map(|&c| field.elem(c as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    /// Sparse constructor from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(field: &FieldRef, terms: &[(usize, Elem)]) -> Poly {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut v = vec![Elem::ZERO; deg + 1];
        for &(k, c) in terms {
            v[k] = field.add(v[k], c);
        }
        Poly::new(field, v)
    }

    pub fn zero(field: &FieldRef) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(field: &FieldRef, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &FieldRef) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn x(field: &FieldRef) -> Poly {
        Poly::monomial(field, Elem::ONE, 1)
    }

    pub fn monomial(field: &FieldRef, c: Elem, k: usize) -> Poly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        Poly::new(field, v)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).copied().unwrap_or(Elem::ZERO)
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if std::sync::Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, v))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, v))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut v = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, v))
    }

    /// `self(inner(x))`.
    pub fn try_compose(&self, inner: &Poly) -> Result<Poly> {
        self.same_field(inner)?;
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(&self.field, c);
        }
        Ok(acc)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add_const(&self, c: Elem) -> Poly {
        let mut v = self.coeffs.clone();
        if v.is_empty() {
            v.push(Elem::ZERO);
        }
        v[0] = self.field.add(v[0], c);
        Poly::new(&self.field, v)
    }

    /// Horner evaluation.
    pub fn eval(&self, c: Elem) -> Elem {
        let f = &self.field;
        let mut acc = Elem::ZERO;
        for &a in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, c), a);
        }
        acc
    }

    /// Values at codes `0..q`, in order.
    pub fn eval_table(&self) -> Vec<Elem> {
        self.field.elements().map(|c| self.eval(c)).collect()
    }

    /// Representative of degree `≤ q−1` modulo `x^q − x`.
    pub fn reduce(&self) -> Poly {
        let q = self.field.q() as usize;
        if self.coeffs.len() <= q {
            return self.clone();
        }
        let f = &self.field;
        let mut v = vec![Elem::ZERO; q];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let t = fold_exponent(k, q);
            v[t] = f.add(v[t], c);
        }
        Poly::new(f, v)
    }

    pub fn is_reduced(&self) -> bool {
        self.coeffs.len() <= self.field.q() as usize
    }

    /// `self · other mod (x^q − x)`, folding exponents on the fly.
    pub fn mul_reduced(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let q = f.q() as usize;
        debug_assert!(self.same_field(other).is_ok());
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut v = vec![Elem::ZERO; q.min(self.coeffs.len() + other.coeffs.len() - 1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = fold_exponent(i + j, q);
                v[k] = f.add(v[k], f.mul(a, b));
            }
        }
        Poly::new(f, v)
    }

    /// `self^t mod (x^q − x)` by square-and-multiply.
    pub fn pow_reduced(&self, t: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.reduce();
        let mut e = t;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_reduced(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_reduced(&base);
            }
        }
        acc
    }

    /// Exact (unreduced) power.
    pub fn pow(&self, t: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for _ in 0..t {
            acc = &acc * self;
        }
        acc
    }

    /// `c·f(x+b) + d`.
    pub fn shift_scale_compose(&self, b: Elem, c: Elem, d: Elem) -> Result<Poly> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        let shift = Poly::new(&self.field, vec![b, Elem::ONE]);
        Ok(self.try_compose(&shift)?.scale(c).add_const(d))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| f.mul_int(c, k as u64))
            .collect();
        Poly::new(f, v)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()).expect("nonzero lead"))
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(d)?;
        let f = &self.field;
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(d.lead())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut qv = vec![Elem::ZERO; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = f.mul(r[k], inv_lead);
            if c.is_zero() {
                continue;
            }
            qv[k - dd] = c;
            for (i, &di) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = f.sub(r[idx], f.mul(c, di));
            }
        }
        Ok((Poly::new(f, qv), Poly::new(f, r)))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Number of distinct roots in the field.
    pub fn root_count(&self) -> usize {
        self.field.elements().filter(|&c| self.eval(c).is_zero()).count()
    }

    /// Sort key: degree first, then coefficients from the top down.
    pub fn encoding_cmp(&self, other: &Poly) -> Ordering {
        encoding_cmp(&self.coeffs, &other.coeffs)
    }
}

/// Order on trimmed ascending coefficient lists: shorter first, then by the
/// highest differing coefficient. Equals numeric order of `Σ c_i q^i`.
pub fn encoding_cmp(a: &[Elem], b: &[Elem]) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}
impl Eq for Poly {}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.encoding_cmp(other)
    }
}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                self.$imp(rhs).expect("polynomials over different fields")
            }
        }
        impl ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$imp(&rhs).expect("polynomials over different fields")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Human-readable form with coefficient codes, highest degree first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, v) => write!(f, "{v}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Precomputed `1 − (x−c)^{q−1}` for every `c`, so repeated interpolation is
/// a plain weighted sum.
pub struct CarlitzBasis {
    field: FieldRef,
    basis: Vec<Vec<Elem>>,
}

impl CarlitzBasis {
    pub fn new(field: &FieldRef) -> Self {
        let q = field.q() as usize;
        let basis = field
            .elements()
            .map(|c| {
                let lin = Poly::new(field, vec![field.neg(c), Elem::ONE]);
                let pw = lin.pow_reduced(q as u64 - 1);
                let mut v = vec![Elem::ZERO; q];
                for (i, &a) in pw.coeffs().iter().enumerate() {
                    v[i] = field.neg(a);
                }
                v[0] = field.add(v[0], Elem::ONE);
                v
            })
            .collect();
        CarlitzBasis {
            field: field.clone(),
            basis,
        }
    }

    /// `Σ_c values[c]·(1 − (x−c)^{q−1})`, unchecked against the table.
    pub fn interpolate_unchecked(&self, values: &[Elem]) -> Result<Poly> {
        let f = &self.field;
        let q = f.q() as usize;
        if values.len() != q {
            return Err(Error::WrongLength {
                expected: q,
                got: values.len(),
            });
        }
        let mut acc = vec![Elem::ZERO; q];
        for (c, &val) in values.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            for (slot, &b) in acc.iter_mut().zip(&self.basis[c]) {
                *slot = f.add(*slot, f.mul(val, b));
            }
        }
        Ok(Poly::new(f, acc))
    }

    pub fn interpolate(&self, values: &[Elem]) -> Result<Poly> {
        let g = self.interpolate_unchecked(values)?;
        assert_eq!(g.eval_table(), values, "interpolation does not reproduce the table");
        Ok(g)
    }
}

/// The unique polynomial of degree `≤ q−1` with the given value table
/// (indexed by element code).
pub fn carlitz_interpolate(field: &FieldRef, values: &[Elem]) -> Result<Poly> {
    if values.len() != field.q() as usize {
        return Err(Error::WrongLength {
            expected: field.q() as usize,
            got: values.len(),
        });
    }
    CarlitzBasis::new(field).interpolate(values)
}

/// Polynomial of the transposition swapping `a` and `b`:
/// `x + (b−a)(1−(x−a)^{q−1}) + (a−b)(1−(x−b)^{q−1})`.
pub fn transposition_poly(field: &FieldRef, a: Elem, b: Elem) -> Result<Poly> {
    if a == b {
        return Err(Error::EqualPoints);
    }
    let q = field.q() as u64;
    let one = Poly::one(field);
    let indicator = |c: Elem| {
        let lin = Poly::new(field, vec![field.neg(c), Elem::ONE]);
        &one - &lin.pow_reduced(q - 1)
    };
    let ba = field.sub(b, a);
    let ab = field.sub(a, b);
    let f = &(&Poly::x(field) + &indicator(a).scale(ba)) + &indicator(b).scale(ab);
    Ok(f.reduce())
}

/// Convenience: k-th power of `x` as a polynomial in `field`.
pub fn xpow(field: &FieldRef, k: usize) -> Poly {
    Poly::monomial(field, Elem::ONE, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(f: &FieldRef, codes: &[u32]) -> Poly {
        Poly::from_codes(f, codes).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f11 = Field::new(11, 1).unwrap();
        let g = p(&f11, &[1, 0, 0, 1]).try_compose(&p(&f11, &[1, 1])).unwrap();
        assert_eq!(g.codes(), vec![2, 3, 3, 1]);
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!((&p(&f3, &[1, 1]) * &p(&f3, &[2, 1])).codes(), vec![2, 0, 1]);
        let h = p(&f11, &[4, 5]);
        assert_eq!(&h + &Poly::zero(&f11), h);
    }

    #[test]
    fn field_mismatch() {
        let a = Field::new(5, 1).unwrap();
        let b = Field::new(7, 1).unwrap();
        assert_eq!(Poly::x(&a).try_add(&Poly::x(&b)).unwrap_err(), Error::FieldMismatch);
        assert_eq!(Poly::x(&a).try_compose(&Poly::x(&b)).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn example_tables() {
        let f11 = Field::new(11, 1).unwrap();
        let g = p(&f11, &[1, 0, 0, 1]);
        let t: Vec<u32> = g.eval_table().iter().map(|e| e.0).collect();
        assert_eq!(t, vec![1, 2, 9, 6, 10, 5, 8, 3, 7, 4, 0]);
        let h = p(&f11, &[5, 3, 1]);
        assert_eq!(h.eval(Elem(4)), Elem(0));
        assert_eq!(Poly::zero(&f11).eval(Elem(7)), Elem(0));
    }

    #[test]
    fn reduction_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(xpow(&f5, 5).reduce(), Poly::x(&f5));
        let f3 = Field::new(3, 1).unwrap();
        let g = &xpow(&f3, 9) + &xpow(&f3, 3);
        assert_eq!(g.reduce().codes(), vec![0, 2]);
        let small = p(&f5, &[1, 2, 3]);
        assert_eq!(small.reduce(), small);
    }

    #[test]
    fn interpolation_examples() {
        let f3 = Field::new(3, 1).unwrap();
        let id: Vec<Elem> = f3.elements().collect();
        assert_eq!(carlitz_interpolate(&f3, &id).unwrap(), Poly::x(&f3));
        let c = vec![Elem(2); 3];
        assert_eq!(carlitz_interpolate(&f3, &c).unwrap().codes(), vec![2]);
        let swap = vec![Elem(1), Elem(0), Elem(2)];
        assert_eq!(carlitz_interpolate(&f3, &swap).unwrap().codes(), vec![1, 2]);
        assert!(matches!(
            carlitz_interpolate(&f3, &swap[..2]),
            Err(Error::WrongLength { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn transposition_examples() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(transposition_poly(&f3, Elem(0), Elem(1)).unwrap().codes(), vec![1, 2]);
        assert_eq!(transposition_poly(&f3, Elem(1), Elem(1)), Err(Error::EqualPoints));
        let f5 = Field::new(5, 1).unwrap();
        let t = transposition_poly(&f5, Elem(0), Elem(1)).unwrap();
        // the x^{q-1} terms cancel, leaving the maximal PP degree q-2
        assert_eq!(t.degree(), Some(3));
        let tab = t.eval_table();
        assert_eq!(tab, vec![Elem(1), Elem(0), Elem(2), Elem(3), Elem(4)]);
    }

    #[test]
    fn transposition_matches_interpolation_and_is_involution() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            let f = Field::of_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements().filter(|&b| b > a) {
                    let t = transposition_poly(&f, a, b).unwrap();
                    let mut tab: Vec<Elem> = f.elements().collect();
                    tab.swap(a.0 as usize, b.0 as usize);
                    assert_eq!(t, carlitz_interpolate(&f, &tab).unwrap());
                    let tt = t.try_compose(&t).unwrap().reduce();
                    assert_eq!(tt, Poly::x(&f));
                }
            }
        }
    }

    #[test]
    fn shift_scale_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let f = p(&f7, &[0, 3, 0, 0, 1]);
        assert_eq!(f.shift_scale_compose(Elem(0), Elem(1), Elem(0)).unwrap(), f);
        let g = f.shift_scale_compose(Elem(1), Elem(2), Elem(1)).unwrap();
        assert_eq!(g.codes(), vec![2, 0, 5, 1, 2]);
        assert_eq!(f.shift_scale_compose(Elem(1), Elem(0), Elem(1)), Err(Error::ZeroScale));
    }

    #[test]
    fn mul_reduced_matches_reduce_of_product() {
        let f = Field::new(3, 2).unwrap();
        let a = p(&f, &[1, 2, 3, 4, 5, 6, 7, 8, 0, 1]);
        let b = p(&f, &[8, 0, 7, 1, 2]);
        assert_eq!(a.mul_reduced(&b), (&a * &b).reduce());
        assert_eq!(a.pow_reduced(11), a.pow(11).reduce());
    }

    #[test]
    fn gcd_and_division() {
        let f5 = Field::new(5, 1).unwrap();
        let a = &p(&f5, &[1, 1]) * &p(&f5, &[2, 1]);
        let b = &p(&f5, &[1, 1]) * &p(&f5, &[3, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&f5, &[1, 1]));
        let (qq, r) = b.div_rem(&a).unwrap();
        assert_eq!(&(&qq * &a) + &r, b);
    }

    #[test]
    fn encoding_order() {
        let f = Field::new(3, 1).unwrap();
        let mut v = vec![p(&f, &[0, 0, 1]), p(&f, &[2, 1]), p(&f, &[0, 2, 1]), p(&f, &[1])];
        v.sort();
        let codes: Vec<Vec<u32>> = v.iter().map(|x| x.codes()).collect();
        assert_eq!(codes, vec![vec![1], vec![2, 1], vec![0, 0, 1], vec![0, 2, 1]]);
    }

    #[test]
    fn display() {
        let f = Field::new(11, 1).unwrap();
        assert_eq!(p(&f, &[0, 2, 0, 0, 0, 0, 1]).to_string(), "x^6 + 2x");
        assert_eq!(Poly::zero(&f).to_string(), "0");
    }

    fn arb_poly(q: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..q, 0..max_len)
    }

    proptest! {
        #[test]
        fn interpolation_round_trip_f9(codes in arb_poly(9, 9)) {
            let f = Field::new(3, 2).unwrap();
            let g = p(&f, &codes);
            prop_assert_eq!(carlitz_interpolate(&f, &g.eval_table()).unwrap(), g);
        }

        #[test]
        fn reduction_preserves_table(codes in arb_poly(9, 19)) {
            let f = Field::new(3, 2).unwrap();
            let g = p(&f, &codes);
            let r = g.reduce();
            prop_assert!(r.degree().map_or(true, |d| d <= 8));
            prop_assert_eq!(r.eval_table(), g.eval_table());
        }

        #[test]
        fn ring_laws_f8(a in arb_poly(8, 6), b in arb_poly(8, 6), c in arb_poly(8, 6)) {
            let f = Field::new(2, 3).unwrap();
            let (a, b, c) = (p(&f, &a), p(&f, &b), p(&f, &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            let comp = a.try_compose(&b).unwrap();
            for x in f.elements() {
                prop_assert_eq!(comp.eval(x), a.eval(b.eval(x)));
            }
        }

        #[test]
        fn shift_scale_preserves_degree(codes in arb_poly(7, 7), b in 0u32..7, c in 1u32..7, d in 0u32..7) {
            let f = Field::new(7, 1).unwrap();
            let g = p(&f, &codes);
            let h = g.shift_scale_compose(Elem(b), Elem(c), Elem(d)).unwrap();
            if g.degree().unwrap_or(0) >= 1 {
                prop_assert_eq!(h.degree(), g.degree());
            }
            for x in f.elements() {
                let expect = f.add(f.mul(Elem(c), g.eval(f.add(x, Elem(b)))), Elem(d));
                prop_assert_eq!(h.eval(x), expect);
            }
        }
    }

    #[test]
    fn round_trip_all_low_degree_f4_f5() {
        for q in [4u64, 5] {
            let f = Field::of_order(q).unwrap();
            let basis = CarlitzBasis::new(&f);
            let qq = q as u32;
            for a0 in 0..qq {
                for a1 in 0..qq {
                    for a2 in 0..qq {
                        for a3 in 0..qq {
                            let g = p(&f, &[a0, a1, a2, a3]);
                            assert_eq!(basis.interpolate(&g.eval_table()).unwrap(), g);
                        }
                    }
                }
            }
        }
    }
}
