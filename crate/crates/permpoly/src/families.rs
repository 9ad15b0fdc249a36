//! Named classes of permutation polynomials and their closed-form criteria.
//! Every constructor here can be checked against [`crate::criteria::is_pp`];
//! [`FamilyInstance`] records both verdicts side by side.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::criteria::is_pp;
use crate::error::{Error, Result};
use crate::field::{extension, Elem, Embedding, Field, FieldRef, FieldSpec};
use crate::linalg::det;
use crate::poly::{xpow, Poly};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn monomial_is_pp(n: u64, field: &Field) -> bool {
    gcd(n, field.q() as u64 - 1) == 1
}

// ---------------------------------------------------------------- linearized

/// `Σ a_i x^{base^i}`.
pub fn linearized(field: &FieldRef, base: u64, coeffs: &[Elem]) -> Poly {
    let terms: Vec<(usize, Elem)> = coeffs
        .iter()
        .enumerate()
        .map(|(i, &a)| (base.pow(i as u32) as usize, a))
        .collect();
    Poly::from_terms(field, &terms)
}

/// Split a polynomial into its `x^{base^i}` coefficients, if it has no other terms.
pub fn linearized_coeffs(f: &Poly, base: u64) -> Option<Vec<Elem>> {
    if base < 2 {
        return None;
    }
    let mut out = Vec::new();
    for (k, &c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = 1u64;
        let mut i = 0usize;
        while e < k as u64 {
            e *= base;
            i += 1;
        }
        if e != k as u64 {
            return None;
        }
        if out.len() <= i {
            out.resize(i + 1, Elem::ZERO);
        }
        out[i] = c;
    }
    Some(out)
}

/// p-polynomial test: a PP iff 0 is its only root.
pub fn linearized_root_route(l: &Poly) -> Result<bool> {
    let p = l.field().p() as u64;
    linearized_coeffs(l, p).ok_or_else(|| Error::NotLinearized(format!("{l} is not a {p}-polynomial")))?;
    Ok(l.root_count() == 1)
}

/// Coefficients `a_0..a_{m−1}` of a q-polynomial over `F_{q^m}` (`q = p^sub_r`),
/// after folding exponents modulo `x^{q^m} − x`.
fn q_poly_coeffs(l: &Poly, sub_r: u32) -> Result<(u64, usize, Vec<Elem>)> {
    let field = l.field();
    if sub_r == 0 || field.r() % sub_r != 0 {
        return Err(Error::BadParameters(format!(
            "F_{}^{} is not a subfield of F_{}",
            field.p(),
            sub_r,
            field.q()
        )));
    }
    let q = (field.p() as u64).pow(sub_r);
    let m = (field.r() / sub_r) as usize;
    let g = l.reduce();
    let mut a = linearized_coeffs(&g, q)
        .ok_or_else(|| Error::NotLinearized(format!("{l} is not a {q}-polynomial")))?;
    a.resize(m, Elem::ZERO);
    Ok((q, m, a))
}

/// `det A ≠ 0` with `A_{ij} = a_{(i−j) mod m}^{q^j}`.
pub fn linearized_det_route(l: &Poly, sub_r: u32) -> Result<bool> {
    let field = l.field();
    let (q, m, a) = q_poly_coeffs(l, sub_r)?;
    let mat: Vec<Vec<Elem>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| field.pow(a[(i + m - j) % m], q.pow(j as u32)))
                .collect()
        })
        .collect();
    Ok(!det(field, &mat).is_zero())
}

/// For coefficients in `F_q`: PP iff `gcd(Σ a_i x^i, x^m − 1) = 1` over `F_q`.
pub fn linearized_gcd_route(l: &Poly, sub_r: u32) -> Result<bool> {
    let field = l.field();
    let (_, m, a) = q_poly_coeffs(l, sub_r)?;
    let small = Field::new(field.p(), sub_r)?;
    let emb = Embedding::new(&small, field)?;
    let sub: Vec<Elem> = a
        .iter()
        .map(|&c| {
            emb.preimage(c)
                .ok_or_else(|| Error::NotLinearized(format!("coefficient {c} not in the subfield")))
        })
        .collect::<Result<_>>()?;
    let assoc = Poly::new(&small, sub);
    let xm1 = xpow(&small, m).add_const(small.neg(Elem::ONE));
    Ok(assoc.gcd(&xm1)? == Poly::one(&small))
}

// ------------------------------------------------------- all-extension class

/// `f = a·x^{p^h} + b` with `a ≠ 0`.
pub fn all_extensions_form(f: &Poly) -> bool {
    let p = f.field().p() as u64;
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let mut e = 1u64;
    while e < n as u64 {
        e *= p;
    }
    e == n as u64 && f.coeffs()[1..n].iter().all(|c| c.is_zero())
}

/// `f` with coefficients mapped into a bigger field.
pub fn lift(f: &Poly, emb: &Embedding) -> Poly {
    Poly::new(emb.big(), f.coeffs().iter().map(|&c| emb.map(c)).collect())
}

/// Brute-force PP test of `f` over `F_{q^m}`.
pub fn is_pp_over_extension(f: &Poly, m: u32) -> Result<bool> {
    if m == 1 {
        return Ok(is_pp(f));
    }
    let emb = extension(f.field(), m)?;
    Ok(is_pp(&lift(f, &emb)))
}

// ------------------------------------------------------------ x^h g(x^s)^k

/// `x^h · g(x^s)^{(q−1)/s}` reduced, when `g(x^s)` has no nonzero root.
pub fn specific_class_build(h: u64, s: u64, g: &Poly) -> Result<Option<Poly>> {
    let field = g.field();
    let qm1 = field.q() as u64 - 1;
    if h == 0 || gcd(h, qm1) != 1 {
        return Err(Error::BadParameters(format!("gcd({h}, {qm1}) != 1")));
    }
    if s == 0 || qm1 % s != 0 {
        return Err(Error::BadParameters(format!("{s} does not divide {qm1}")));
    }
    let gs = g.try_compose(&xpow(field, s as usize))?;
    if field.nonzero().any(|c| gs.eval(c).is_zero()) {
        return Ok(None);
    }
    let f = xpow(field, h as usize).reduce().mul_reduced(&gs.reduce().pow_reduced(qm1 / s));
    Ok(Some(f))
}

// ------------------------------------------------------------------ binomials

/// `x^{(q+1)/2} + a x`.
pub fn quadratic_binomial(field: &FieldRef, a: Elem) -> Result<Poly> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let e = (field.q() as usize).div_ceil(2);
    Ok(Poly::from_terms(field, &[(e, Elem::ONE), (1, a)]))
}

/// PP iff `a² − 1` is a nonzero square.
pub fn quadratic_binomial_is_pp(field: &FieldRef, a: Elem) -> Result<bool> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let d = field.sub(field.mul(a, a), Elem::ONE);
    Ok(!d.is_zero() && field.is_square(d))
}

fn check_divisor(field: &Field, m: u64) -> Result<u64> {
    let qm1 = field.q() as u64 - 1;
    if m <= 1 || qm1 % m != 0 {
        return Err(Error::BadDivisor { m, qm1 });
    }
    Ok(qm1)
}

/// `x^{(q+m−1)/m} + a x`.
pub fn m_binomial(field: &FieldRef, m: u64, a: Elem) -> Result<Poly> {
    let qm1 = check_divisor(field, m)?;
    let e = (qm1 / m + 1) as usize;
    Ok(Poly::from_terms(field, &[(e, Elem::ONE), (1, a)]))
}

/// `(−a)^m ≠ 1` and `((a+ξ^i)/(a+ξ^j))^{(q−1)/m} ≠ ξ^{j−i}` for `i < j < m`,
/// with `ξ = g^{(q−1)/m}` for the canonical primitive element `g`.
pub fn m_binomial_is_pp(field: &FieldRef, m: u64, a: Elem) -> Result<bool> {
    let qm1 = check_divisor(field, m)?;
    if field.pow(field.neg(a), m) == Elem::ONE {
        return Ok(false);
    }
    let k = qm1 / m;
    let xi = field.pow(field.primitive_element(), k);
    let xp: Vec<Elem> = (0..m).map(|i| field.pow(xi, i)).collect();
    for j in 1..m as usize {
        // a + ξ^j ≠ 0 here, since otherwise (−a)^m = ξ^{jm} = 1
        let den = field.add(a, xp[j]);
        for i in 0..j {
            let r = field.div(field.add(a, xp[i]), den)?;
            if field.pow(r, k) == xp[j - i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// -------------------------------------------------------------------- Dickson

fn binom_u128(n: u64, k: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `g_k(x, a) = Σ_j k/(k−j)·C(k−j, j)·(−a)^j x^{k−2j}`, the integer weights
/// computed exactly before reduction mod p.
pub fn dickson_poly(field: &FieldRef, k: u64, a: Elem) -> Poly {
    if k == 0 {
        return Poly::constant(field, field.from_int(2));
    }
    let mut coeffs = vec![Elem::ZERO; k as usize + 1];
    let neg_a = field.neg(a);
    for j in 0..=k / 2 {
        let c = binom_u128(k - j, j);
        let w = c * k as u128 / (k - j) as u128;
        let w = (w % field.p() as u128) as u64;
        coeffs[(k - 2 * j) as usize] = field.mul_int(field.pow(neg_a, j), w);
    }
    Poly::new(field, coeffs)
}

/// Same polynomial from `g_0 = 2`, `g_1 = x`, `g_{k+1} = x g_k − a g_{k−1}`.
pub fn dickson_recurrence(field: &FieldRef, k: u64, a: Elem) -> Poly {
    let x = Poly::x(field);
    let mut prev = Poly::constant(field, field.from_int(2));
    let mut cur = x.clone();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = cur;
        cur = next;
    }
    cur
}

/// `gcd(k, q² − 1) = 1` for `a ≠ 0`; the monomial rule for `a = 0`.
pub fn dickson_is_pp(field: &Field, k: u64, a: Elem) -> bool {
    if a.is_zero() {
        return monomial_is_pp(k, field);
    }
    let q = field.q() as u64;
    gcd(k, q * q - 1) == 1
}

// ----------------------------------------------------------------- instances

/// A constructed family member with both the closed-form and the brute-force verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: String,
    pub field: FieldSpec,
    pub params: BTreeMap<String, Value>,
    /// Absent when the construction's hypothesis fails.
    pub polynomial: Option<Vec<u32>>,
    pub criterion: bool,
    pub brute_force: bool,
}

impl FamilyInstance {
    pub fn agrees(&self) -> bool {
        self.criterion == self.brute_force
    }
}

/// Parameters for [`instantiate`].
#[derive(Clone, Debug)]
pub enum Family {
    Monomial { n: u64 },
    /// p-polynomial `Σ a_i x^{p^i}`.
    Linearized { coeffs: Vec<Elem> },
    AllExtensions { f: Vec<Elem> },
    SpecificClass { h: u64, s: u64, g: Vec<Elem> },
    QuadraticBinomial { a: Elem },
    MBinomial { m: u64, a: Elem },
    Dickson { k: u64, a: Elem },
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "monomial",
        "linearized",
        "all-extensions",
        "specific-class",
        "quadratic-binomial",
        "m-binomial",
        "dickson",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Monomial { .. } => "monomial",
            Family::Linearized { .. } => "linearized",
            Family::AllExtensions { .. } => "all-extensions",
            Family::SpecificClass { .. } => "specific-class",
            Family::QuadraticBinomial { .. } => "quadratic-binomial",
            Family::MBinomial { .. } => "m-binomial",
            Family::Dickson { .. } => "dickson",
        }
    }
}

fn codes(v: &[Elem]) -> Value {
    json!(v.iter().map(|e| e.0).collect::<Vec<_>>())
}

pub fn instantiate(field: &FieldRef, family: &Family) -> Result<FamilyInstance> {
    let mut params = BTreeMap::new();
    let (poly, criterion) = match family {
        Family::Monomial { n } => {
            params.insert("n".into(), json!(n));
            (Some(xpow(field, *n as usize)), monomial_is_pp(*n, field))
        }
        Family::Linearized { coeffs } => {
            params.insert("coeffs".into(), codes(coeffs));
            let l = linearized(field, field.p() as u64, coeffs);
            let root = linearized_root_route(&l)?;
            let detr = linearized_det_route(&l, 1)?;
            params.insert("det_route".into(), json!(detr));
            if let Ok(g) = linearized_gcd_route(&l, 1) {
                params.insert("gcd_route".into(), json!(g));
            }
            (Some(l), root)
        }
        Family::AllExtensions { f } => {
            params.insert("f".into(), codes(f));
            let f = Poly::new(field, f.clone());
            let form = all_extensions_form(&f);
            (Some(f), form)
        }
        Family::SpecificClass { h, s, g } => {
            params.insert("h".into(), json!(h));
            params.insert("s".into(), json!(s));
            params.insert("g".into(), codes(g));
            match specific_class_build(*h, *s, &Poly::new(field, g.clone()))? {
                Some(f) => (Some(f), true),
                None => (None, false),
            }
        }
        Family::QuadraticBinomial { a } => {
            params.insert("a".into(), json!(a.0));
            (
                Some(quadratic_binomial(field, *a)?),
                quadratic_binomial_is_pp(field, *a)?,
            )
        }
        Family::MBinomial { m, a } => {
            params.insert("m".into(), json!(m));
            params.insert("a".into(), json!(a.0));
            (Some(m_binomial(field, *m, *a)?), m_binomial_is_pp(field, *m, *a)?)
        }
        Family::Dickson { k, a } => {
            params.insert("k".into(), json!(k));
            params.insert("a".into(), json!(a.0));
            let d = dickson_poly(field, *k, *a);
            debug_assert_eq!(d, dickson_recurrence(field, *k, *a));
            (Some(d), dickson_is_pp(field, *k, *a))
        }
    };
    // For the all-extensions family the closed form speaks about every
    // extension; the brute-force side checks F_q, F_{q²} and F_{q³}.
    let brute_force = match (&poly, family) {
        (Some(f), Family::AllExtensions { .. }) => (1..=3).all(|m| is_pp_over_extension(f, m).unwrap_or(false)),
        (Some(f), _) => is_pp(f),
        (None, _) => false,
    };
    Ok(FamilyInstance {
        family: family.name().into(),
        field: field.spec(),
        params,
        polynomial: poly.map(|f| f.codes()),
        criterion,
        brute_force,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(q: u64) -> FieldRef {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn monomials() {
        assert!(monomial_is_pp(3, &fq(11)));
        assert!(!monomial_is_pp(2, &fq(13)));
        assert!(monomial_is_pp(5, &fq(9)));
        assert!(is_pp(&xpow(&fq(9), 5)));
    }

    #[test]
    fn linearized_examples() {
        let f9 = fq(9);
        let x3 = xpow(&f9, 3);
        assert!(linearized_root_route(&x3).unwrap());
        let x3mx = linearized(&f9, 3, &[Elem(2), Elem(1)]);
        assert!(!linearized_root_route(&x3mx).unwrap());
        assert!(!linearized_det_route(&x3mx, 1).unwrap());
        assert!(!linearized_gcd_route(&x3mx, 1).unwrap());

        let f27 = fq(27);
        let l = linearized(&f27, 3, &[Elem(2), Elem(0), Elem(1)]);
        assert_eq!(l.codes(), {
            let mut v = vec![0; 10];
            v[1] = 2;
            v[9] = 1;
            v
        });
        assert_eq!(l.root_count(), 3);
        assert!(!linearized_root_route(&l).unwrap());
        assert!(!linearized_det_route(&l, 1).unwrap());

        let bad = Poly::from_codes(&f9, &[0, 1, 1]).unwrap();
        assert!(matches!(linearized_root_route(&bad), Err(Error::NotLinearized(_))));
    }

    #[test]
    fn linearized_routes_agree_f9_f27() {
        for q in [9u64, 27] {
            let f = fq(q);
            let qq = q as u32;
            for t in 0..qq.pow(3) {
                let cs = [t % qq, t / qq % qq, t / qq / qq].map(Elem);
                let l = linearized(&f, 3, &cs);
                let bf = is_pp(&l);
                assert_eq!(linearized_root_route(&l).unwrap(), bf);
                assert_eq!(linearized_det_route(&l, 1).unwrap(), bf, "{l} over F_{q}");
                if let Ok(g) = linearized_gcd_route(&l, 1) {
                    assert_eq!(g, bf);
                }
            }
        }
    }

    #[test]
    fn q_polynomials_over_quadratic_extensions() {
        for (q, m) in [(2u64, 2u32), (3, 2)] {
            let big = fq(q.pow(m));
            let n = big.q();
            for t in 0..n * n {
                let cs = [Elem(t % n), Elem(t / n)];
                let l = linearized(&big, q, &cs);
                let bf = is_pp(&l);
                assert_eq!(linearized_det_route(&l, 1).unwrap(), bf, "{l}");
                // coefficients inside F_q are exactly codes < q
                if cs.iter().all(|c| (c.0 as u64) < q) {
                    assert_eq!(linearized_gcd_route(&l, 1).unwrap(), bf, "{l}");
                } else {
                    assert!(linearized_gcd_route(&l, 1).is_err());
                }
            }
        }
    }

    #[test]
    fn additivity() {
        let f = fq(27);
        let l = linearized(&f, 3, &[Elem(5), Elem(11), Elem(20)]);
        for b in f.elements() {
            for c in f.elements() {
                assert_eq!(l.eval(f.add(b, c)), f.add(l.eval(b), l.eval(c)));
            }
        }
    }

    #[test]
    fn all_extension_shapes() {
        let f3 = fq(3);
        let f = Poly::from_codes(&f3, &[1, 0, 0, 2]).unwrap();
        assert!(all_extensions_form(&f));
        for m in 1..=3 {
            assert!(is_pp_over_extension(&f, m).unwrap());
        }
        assert!(!all_extensions_form(&Poly::from_codes(&f3, &[0, 1, 0, 1]).unwrap()));
        assert!(all_extensions_form(&Poly::x(&fq(7))));
        assert!(!all_extensions_form(&Poly::constant(&fq(7), Elem(3))));
    }

    #[test]
    fn specific_class() {
        let f7 = fq(7);
        let g = Poly::from_codes(&f7, &[3, 1]).unwrap();
        let f = specific_class_build(1, 3, &g).unwrap().unwrap();
        let direct = (&Poly::x(&f7) * &Poly::from_codes(&f7, &[3, 0, 0, 1]).unwrap().pow(2)).reduce();
        assert_eq!(f, direct);
        assert!(is_pp(&f));
        let g = Poly::from_codes(&f7, &[6, 1]).unwrap();
        assert!(specific_class_build(1, 3, &g).unwrap().is_none());
        assert!(matches!(specific_class_build(2, 3, &g), Err(Error::BadParameters(_))));
        assert!(matches!(specific_class_build(1, 4, &g), Err(Error::BadParameters(_))));
        let one = Poly::one(&f7);
        assert_eq!(specific_class_build(5, 2, &one).unwrap().unwrap(), xpow(&f7, 5));
    }

    #[test]
    fn quadratic_binomial_examples() {
        let f = fq(11);
        assert!(quadratic_binomial_is_pp(&f, Elem(2)).unwrap());
        assert!(!quadratic_binomial_is_pp(&f, Elem(1)).unwrap());
        assert!(!quadratic_binomial_is_pp(&f, Elem(3)).unwrap());
        assert_eq!(quadratic_binomial(&f, Elem(2)).unwrap().codes(), vec![0, 2, 0, 0, 0, 0, 1]);
        assert_eq!(quadratic_binomial_is_pp(&fq(8), Elem(1)), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn m_binomial_reduces_to_quadratic() {
        for q in [3u64, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27] {
            let f = fq(q);
            for a in f.elements() {
                assert_eq!(
                    m_binomial_is_pp(&f, 2, a).unwrap(),
                    quadratic_binomial_is_pp(&f, a).unwrap(),
                    "q={q} a={a}"
                );
            }
        }
    }

    #[test]
    fn m_binomial_examples() {
        let f11 = fq(11);
        assert!(m_binomial_is_pp(&f11, 5, Elem(0)).unwrap());
        assert_eq!(m_binomial(&f11, 5, Elem(0)).unwrap(), xpow(&f11, 3));
        assert!(matches!(m_binomial_is_pp(&f11, 3, Elem(0)), Err(Error::BadDivisor { m: 3, qm1: 10 })));
        assert!(m_binomial_is_pp(&f11, 1, Elem(0)).is_err());
        let f13 = fq(13);
        for a in f13.elements() {
            let f = m_binomial(&f13, 3, a).unwrap();
            assert_eq!(m_binomial_is_pp(&f13, 3, a).unwrap(), is_pp(&f), "a={a}");
        }
    }

    #[test]
    fn dickson_small() {
        let f7 = fq(7);
        let a = Elem(3);
        // g_2 = x² − 2a, g_3 = x³ − 3ax
        assert_eq!(dickson_poly(&f7, 2, a).codes(), vec![1, 0, 1]);
        assert_eq!(dickson_poly(&f7, 3, a).codes(), vec![0, 5, 0, 1]);
        assert!(dickson_is_pp(&f7, 5, Elem(1)));
        assert!(is_pp(&dickson_poly(&f7, 5, Elem(1))));
        assert_eq!(dickson_poly(&f7, 6, Elem(0)), xpow(&f7, 6));
    }

    #[test]
    fn dickson_closed_form_matches_recurrence() {
        for q in [5u64, 7, 9, 11, 13] {
            let f = fq(q);
            for k in 1..=24 {
                for a in f.elements() {
                    assert_eq!(dickson_poly(&f, k, a), dickson_recurrence(&f, k, a), "q={q} k={k}");
                }
            }
        }
    }

    #[test]
    fn instances_serialize() {
        let f7 = fq(7);
        let inst = instantiate(&f7, &Family::Dickson { k: 5, a: Elem(1) }).unwrap();
        assert!(inst.criterion && inst.brute_force && inst.agrees());
        let js = serde_json::to_string(&inst).unwrap();
        let back: FamilyInstance = serde_json::from_str(&js).unwrap();
        assert_eq!(back, inst);
        let sc = instantiate(&f7, &Family::SpecificClass { h: 1, s: 3, g: vec![Elem(6), Elem(1)] }).unwrap();
        assert!(sc.polynomial.is_none() && !sc.criterion);
    }
}
