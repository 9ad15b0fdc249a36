use crate::field::Elem;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorenoReport {
    /// `(f − c)^{q−1} ≢ 1` for every `c`.
    pub cond1: bool,
    /// `(f − f(c))^{q−1} ≡ (x − c)^{q−1}` for every `c`.
    pub cond2: bool,
    /// First `c` at which condition 1 fails.
    pub cond1_witness: Option<Elem>,
    pub cond2_witness: Option<Elem>,
}

/// Both congruence conditions, each evaluated independently modulo `x^q − x`.
pub fn moreno_test(f: &Poly) -> MorenoReport {
    let field = f.field();
    let q = field.q() as u64;
    let g = f.reduce();
    let one = Poly::one(field);

    let cond1_witness = field
        .elements()
        .find(|&c| g.add_const(field.neg(c)).pow_reduced(q - 1) == one);

    let cond2_witness = field.elements().find(|&c| {
        let lhs = g.add_const(field.neg(g.eval(c))).pow_reduced(q - 1);
        let rhs = Poly::new(field, vec![field.neg(c), Elem::ONE]).pow_reduced(q - 1);
        lhs != rhs
    });

    MorenoReport {
        cond1: cond1_witness.is_none(),
        cond2: cond2_witness.is_none(),
        cond1_witness,
        cond2_witness,
    }
}
