use serde::{Deserialize, Serialize};

use super::Witness;
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HermiteFailure {
    /// `f^t mod (x^q−x)` has degree q−1 for this `t ≤ q−2`, `p ∤ t`.
    Exponent(u64),
    /// `f^{q−1}` does not reduce to a monic polynomial of degree q−1.
    TopPower,
}

impl HermiteFailure {
    pub fn witness(&self) -> Witness {
        match self {
            HermiteFailure::Exponent(t) => Witness::Exponent { t: *t },
            HermiteFailure::TopPower => Witness::TopPower,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HermiteReport {
    /// Degree condition plus "f^{q−1} reduces to monic degree q−1".
    pub degree_form: bool,
    /// Degree condition plus "exactly one root".
    pub root_form: bool,
    pub roots: usize,
    pub failure: Option<HermiteFailure>,
}

/// Both forms of Hermite's criterion, sharing one running power `f^t`.
pub fn hermite_test(f: &Poly) -> HermiteReport {
    let field = f.field();
    let q = field.q() as u64;
    let p = field.p() as u64;
    let base = f.reduce();
    let mut pw = Poly::one(field);
    let mut bad_t = None;
    for t in 1..=q - 1 {
        pw = pw.mul_reduced(&base);
        if t <= q - 2 && t % p != 0 && pw.degree() == Some(q as usize - 1) {
            bad_t = Some(t);
            break;
        }
    }
    let roots = base.root_count();
    match bad_t {
        Some(t) => HermiteReport {
            degree_form: false,
            root_form: false,
            roots,
            failure: Some(HermiteFailure::Exponent(t)),
        },
        None => {
            // pw is now f^{q−1}
            let top_ok = pw.degree() == Some(q as usize - 1) && pw.lead() == Elem::ONE;
            HermiteReport {
                degree_form: top_ok,
                root_form: roots == 1,
                roots,
                failure: (!top_ok).then_some(HermiteFailure::TopPower),
            }
        }
    }
}

/// Coefficient of `x^{q−1}` in `f^t mod (x^q − x)`.
pub fn hermite_power_coefficient(f: &Poly, t: u64) -> Result<Elem> {
    let q = f.field().q() as u64;
    if t == 0 || t > q - 1 {
        return Err(Error::BadParameters(format!("exponent {t} outside 1..={}", q - 1)));
    }
    Ok(f.pow_reduced(t).coeff(q as usize - 1))
}
