//! The known list of normalized PPs of degree ≤ 6 (odd characteristic for
//! degree 6), as parametric rows that expand to explicit polynomial sets.
//!
//! Several rows use a square root of 2 in `F_9`. The symbol stands for
//! either root, so [`SqrtChoice::Both`] unions the expansions for both; the
//! [`SqrtChoice::Canonical`] mode uses only the smaller-code root and is kept
//! so the two readings can be compared.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldRef, FieldSpec};
use crate::normalize::ClassificationResult;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SqrtChoice {
    #[default]
    Both,
    Canonical,
}

impl SqrtChoice {
    fn roots(self, field: &Field) -> Vec<Elem> {
        let two = field.from_int(2);
        match self {
            SqrtChoice::Both => field.sqrts(two),
            SqrtChoice::Canonical => field.sqrt(two).into_iter().collect(),
        }
    }
}

type Expand = fn(&FieldRef, &[Elem]) -> Vec<Vec<Elem>>;

pub struct TableRow {
    pub id: &'static str,
    pub degree: usize,
    pub formula: &'static str,
    pub condition: &'static str,
    applies: fn(&Field) -> bool,
    expand: Expand,
}

impl TableRow {
    pub fn applies(&self, field: &Field) -> bool {
        (self.applies)(field)
    }

    pub fn expand(&self, field: &FieldRef, sqrt: SqrtChoice) -> BTreeSet<Poly> {
        if !self.applies(field) {
            return BTreeSet::new();
        }
        let roots = sqrt.roots(field);
        (self.expand)(field, &roots)
            .into_iter()
            .map(|c| Poly::new(field, c))
            .collect()
    }
}

// Small helpers to keep the row formulas close to their printed form.
struct Ctx<'a>(&'a Field);

impl Ctx<'_> {
    fn i(&self, n: i64) -> Elem {
        self.0.from_int(n)
    }
    fn m(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::ONE, |a, &b| self.0.mul(a, b))
    }
    fn s(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(Elem::ZERO, |a, &b| self.0.add(a, b))
    }
    fn pw(&self, a: Elem, k: u64) -> Elem {
        self.0.pow(a, k)
    }
    fn neg(&self, a: Elem) -> Elem {
        self.0.neg(a)
    }
}

/// `[0, a1, a2, …, 1]` for a monic polynomial of degree `n`.
fn monic(n: usize, low: &[(usize, Elem)]) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; n + 1];
    v[n] = Elem::ONE;
    for &(k, c) in low {
        v[k] = c;
    }
    v
}

fn nonsquares(f: &Field) -> Vec<Elem> {
    f.nonzero().filter(|&a| !f.is_square(a)).collect()
}

fn signs(f: &Field) -> [Elem; 2] {
    [Elem::ONE, f.neg(Elem::ONE)]
}

static ROWS: &[TableRow] = &[
    TableRow {
        id: "x2",
        degree: 2,
        formula: "x^2",
        condition: "q even",
        applies: |f| f.p() == 2,
        expand: |_, _| vec![monic(2, &[])],
    },
    TableRow {
        id: "x3",
        degree: 3,
        formula: "x^3",
        condition: "q != 1 mod 3",
        applies: |f| f.q() % 3 != 1,
        expand: |_, _| vec![monic(3, &[])],
    },
    TableRow {
        id: "x3-ax",
        degree: 3,
        formula: "x^3 - a x, a not a square",
        condition: "q = 0 mod 3",
        applies: |f| f.p() == 3,
        expand: |f, _| nonsquares(f).into_iter().map(|a| monic(3, &[(1, f.neg(a))])).collect(),
    },
    TableRow {
        id: "x4+-3x",
        degree: 4,
        formula: "x^4 ± 3x",
        condition: "q = 7",
        applies: |f| f.q() == 7,
        expand: |f, _| signs(f).iter().map(|&e| monic(4, &[(1, f.mul(e, f.from_int(3)))])).collect(),
    },
    TableRow {
        id: "x4-linearized",
        degree: 4,
        formula: "x^4 + a1 x^2 + a2 x with 0 its only root",
        condition: "q even",
        applies: |f| f.p() == 2,
        expand: |f, _| {
            let mut out = Vec::new();
            for a1 in f.elements() {
                for a2 in f.elements() {
                    let c = monic(4, &[(2, a1), (1, a2)]);
                    if Poly::new(f, c.clone()).root_count() == 1 {
                        out.push(c);
                    }
                }
            }
            out
        },
    },
    TableRow {
        id: "x5",
        degree: 5,
        formula: "x^5",
        condition: "q != 1 mod 5",
        applies: |f| f.q() % 5 != 1,
        expand: |_, _| vec![monic(5, &[])],
    },
    TableRow {
        id: "x5-ax",
        degree: 5,
        formula: "x^5 - a x, a not a fourth power",
        condition: "q = 0 mod 5",
        applies: |f| f.p() == 5,
        expand: |f, _| {
            let fourth: BTreeSet<Elem> = f.elements().map(|b| f.pow(b, 4)).collect();
            f.elements()
                .filter(|a| !fourth.contains(a))
                .map(|a| monic(5, &[(1, f.neg(a))]))
                .collect()
        },
    },
    TableRow {
        id: "x5+sx",
        degree: 5,
        formula: "x^5 + s x, s^2 = 2",
        condition: "q = 9",
        applies: |f| f.q() == 9,
        expand: |_, roots| roots.iter().map(|&s| monic(5, &[(1, s)])).collect(),
    },
    TableRow {
        id: "x5+-2x2",
        degree: 5,
        formula: "x^5 ± 2x^2",
        condition: "q = 7",
        applies: |f| f.q() == 7,
        expand: |f, _| signs(f).iter().map(|&e| monic(5, &[(2, f.mul(e, f.from_int(2)))])).collect(),
    },
    TableRow {
        id: "x5+ax3+-x2+3a2x",
        degree: 5,
        formula: "x^5 + a x^3 ± x^2 + 3a^2 x, a not a square",
        condition: "q = 7",
        applies: |f| f.q() == 7,
        expand: |f, _| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for a in nonsquares(f) {
                for e in signs(f) {
                    out.push(monic(5, &[(3, a), (2, e), (1, c.m(&[c.i(3), a, a]))]));
                }
            }
            out
        },
    },
    TableRow {
        id: "x5+ax3+a2x/5",
        degree: 5,
        formula: "x^5 + a x^3 + 5^{-1} a^2 x, a arbitrary",
        condition: "q = 2, 3 mod 5",
        applies: |f| matches!(f.q() % 5, 2 | 3),
        expand: |f, _| {
            let c = Ctx(f);
            let inv5 = f.inv(f.from_int(5)).expect("p != 5");
            f.elements().map(|a| monic(5, &[(3, a), (1, c.m(&[inv5, a, a]))])).collect()
        },
    },
    TableRow {
        id: "x5+ax3+3a2x",
        degree: 5,
        formula: "x^5 + a x^3 + 3a^2 x, a not a square",
        condition: "q = 13",
        applies: |f| f.q() == 13,
        expand: |f, _| {
            let c = Ctx(f);
            nonsquares(f).into_iter().map(|a| monic(5, &[(3, a), (1, c.m(&[c.i(3), a, a]))])).collect()
        },
    },
    TableRow {
        id: "x5-2ax3+a2x",
        degree: 5,
        formula: "x^5 - 2a x^3 + a^2 x, a not a square",
        condition: "q = 0 mod 5",
        applies: |f| f.p() == 5,
        expand: |f, _| {
            let c = Ctx(f);
            nonsquares(f)
                .into_iter()
                .map(|a| monic(5, &[(3, c.neg(c.m(&[c.i(2), a]))), (1, c.m(&[a, a]))]))
                .collect()
        },
    },
    TableRow {
        id: "x6+-2x",
        degree: 6,
        formula: "x^6 ± 2x",
        condition: "q = 11",
        applies: |f| f.q() == 11,
        expand: |f, _| signs(f).iter().map(|&e| monic(6, &[(1, f.mul(e, f.from_int(2)))])).collect(),
    },
    TableRow {
        id: "x6+-4x",
        degree: 6,
        formula: "x^6 ± 4x",
        condition: "q = 11",
        applies: |f| f.q() == 11,
        expand: |f, _| signs(f).iter().map(|&e| monic(6, &[(1, f.mul(e, f.from_int(4)))])).collect(),
    },
    TableRow {
        id: "x6+-a2x3+ax2+-5x",
        degree: 6,
        formula: "x^6 ± a^2 x^3 + a x^2 ± 5x, a a nonzero square (signs together)",
        condition: "q = 11",
        applies: |f| f.q() == 11,
        expand: |f, _| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for a in f.nonzero().filter(|&a| f.is_square(a)) {
                for e in signs(f) {
                    out.push(monic(6, &[(3, c.m(&[e, a, a])), (2, a), (1, c.m(&[e, c.i(5)]))]));
                }
            }
            out
        },
    },
    TableRow {
        id: "x6+-4a2x3+ax2+-4x",
        degree: 6,
        formula: "x^6 ± 4a^2 x^3 + a x^2 ± 4x, a not a square (signs together)",
        condition: "q = 11",
        applies: |f| f.q() == 11,
        expand: |f, _| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for a in nonsquares(f) {
                for e in signs(f) {
                    out.push(monic(6, &[(3, c.m(&[e, c.i(4), a, a])), (2, a), (1, c.m(&[e, c.i(4)]))]));
                }
            }
            out
        },
    },
    TableRow {
        id: "q9-no-x5",
        degree: 6,
        formula: "x^6 + a^2 x^4 + a^7 b x^3 + a^4 x^2 + a(2b+1) x, a != 0, b in {0, 1, s, 1+s}",
        condition: "q = 9",
        applies: |f| f.q() == 9,
        expand: |f, roots| {
            let c = Ctx(f);
            let mut bs = vec![c.i(0), c.i(1)];
            for &s in roots {
                bs.push(s);
                bs.push(c.s(&[c.i(1), s]));
            }
            let mut out = Vec::new();
            for a in f.nonzero() {
                for &b in &bs {
                    out.push(monic(
                        6,
                        &[
                            (4, c.pw(a, 2)),
                            (3, c.m(&[c.pw(a, 7), b])),
                            (2, c.pw(a, 4)),
                            (1, c.m(&[a, c.s(&[c.m(&[c.i(2), b]), c.i(1)])])),
                        ],
                    ));
                }
            }
            out
        },
    },
    TableRow {
        id: "q9-shift-a",
        degree: 6,
        formula: "x^6 + a x^5 + 2ab x^4 + (a^3 + ab^2 + 2b^3) x^3 + (2a^4 + ab^3) x^2 + (2a^5 + a^4 b + 2ab^4) x",
        condition: "q = 9",
        applies: |f| f.q() == 9,
        expand: |f, _| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for a in f.nonzero() {
                for b in f.elements() {
                    let (two, p) = (c.i(2), |x, k| c.pw(x, k));
                    out.push(monic(
                        6,
                        &[
                            (5, a),
                            (4, c.m(&[two, a, b])),
                            (3, c.s(&[p(a, 3), c.m(&[a, p(b, 2)]), c.m(&[two, p(b, 3)])])),
                            (2, c.s(&[c.m(&[two, p(a, 4)]), c.m(&[a, p(b, 3)])])),
                            (1, c.s(&[c.m(&[two, p(a, 5)]), c.m(&[p(a, 4), b]), c.m(&[two, a, p(b, 4)])])),
                        ],
                    ));
                }
            }
            out
        },
    },
    TableRow {
        id: "q9-shift-phi",
        degree: 6,
        formula: "x^6 + a x^5 + 2ab x^4 + (ab^2 + 2b^3 + a^3 φ) x^3 + (ab^3 + 2a^4 φ) x^2 + (s a^5 + 2ab^4 + a^4 b φ) x, φ = ±(1 − s)",
        condition: "q = 9",
        applies: |f| f.q() == 9,
        expand: |f, roots| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for &s in roots {
                let phi0 = c.s(&[c.i(1), c.neg(s)]);
                for phi in [phi0, c.neg(phi0)] {
                    for a in f.nonzero() {
                        for b in f.elements() {
                            let (two, p) = (c.i(2), |x, k| c.pw(x, k));
                            out.push(monic(
                                6,
                                &[
                                    (5, a),
                                    (4, c.m(&[two, a, b])),
                                    (3, c.s(&[c.m(&[a, p(b, 2)]), c.m(&[two, p(b, 3)]), c.m(&[p(a, 3), phi])])),
                                    (2, c.s(&[c.m(&[a, p(b, 3)]), c.m(&[two, p(a, 4), phi])])),
                                    (
                                        1,
                                        c.s(&[c.m(&[s, p(a, 5)]), c.m(&[two, a, p(b, 4)]), c.m(&[p(a, 4), b, phi])]),
                                    ),
                                ],
                            ));
                        }
                    }
                }
            }
            out
        },
    },
    TableRow {
        id: "q9-shift-s",
        degree: 6,
        formula: "x^6 + a x^5 + 2ab x^4 + (2a^3 + ab^2 + 2b^3) x^3 + (a^4 + ab^3) x^2 + (2a^5 + s a^5 + 2a^4 b + 2ab^4) x",
        condition: "q = 9",
        applies: |f| f.q() == 9,
        expand: |f, roots| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for &s in roots {
                for a in f.nonzero() {
                    for b in f.elements() {
                        let (two, p) = (c.i(2), |x, k| c.pw(x, k));
                        out.push(monic(
                            6,
                            &[
                                (5, a),
                                (4, c.m(&[two, a, b])),
                                (3, c.s(&[c.m(&[two, p(a, 3)]), c.m(&[a, p(b, 2)]), c.m(&[two, p(b, 3)])])),
                                (2, c.s(&[p(a, 4), c.m(&[a, p(b, 3)])])),
                                (
                                    1,
                                    c.s(&[
                                        c.m(&[two, p(a, 5)]),
                                        c.m(&[s, p(a, 5)]),
                                        c.m(&[two, p(a, 4), b]),
                                        c.m(&[two, a, p(b, 4)]),
                                    ]),
                                ),
                            ],
                        ));
                    }
                }
            }
            out
        },
    },
    TableRow {
        id: "q27-shift",
        degree: 6,
        formula: "x^6 + a x^5 + 2ab x^4 + (ab^2 + 2b^3) x^3 + (2a^4 + ab^3) x^2 + (a^4 b + 2ab^4) x",
        condition: "q = 27",
        applies: |f| f.q() == 27,
        expand: |f, _| {
            let c = Ctx(f);
            let mut out = Vec::new();
            for a in f.nonzero() {
                for b in f.elements() {
                    let (two, p) = (c.i(2), |x, k| c.pw(x, k));
                    out.push(monic(
                        6,
                        &[
                            (5, a),
                            (4, c.m(&[two, a, b])),
                            (3, c.s(&[c.m(&[a, p(b, 2)]), c.m(&[two, p(b, 3)])])),
                            (2, c.s(&[c.m(&[two, p(a, 4)]), c.m(&[a, p(b, 3)])])),
                            (1, c.s(&[c.m(&[p(a, 4), b]), c.m(&[two, a, p(b, 4)])])),
                        ],
                    ));
                }
            }
            out
        },
    },
];

pub fn table_rows() -> &'static [TableRow] {
    ROWS
}

pub fn find_row(id: &str) -> Result<&'static TableRow> {
    ROWS.iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

/// Explicit set for one row over `field`; rows whose condition excludes the
/// field expand to the empty set.
pub fn expand_table_family(id: &str, field: &FieldRef, sqrt: SqrtChoice) -> Result<BTreeSet<Poly>> {
    Ok(find_row(id)?.expand(field, sqrt))
}

/// Degree-`n` rows that apply to `field`.
pub fn rows_for(field: &Field, n: usize) -> Vec<&'static TableRow> {
    ROWS.iter().filter(|r| r.degree == n && r.applies(field)).collect()
}

/// Whether the table covers this field and degree at all.
pub fn table_covers(field: &Field, n: usize) -> bool {
    n <= 5 || (n == 6 && field.p() != 2)
}

/// Union of all applicable rows.
pub fn expected_set(field: &FieldRef, n: usize, sqrt: SqrtChoice) -> BTreeSet<Poly> {
    rows_for(field, n).iter().flat_map(|r| r.expand(field, sqrt)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowCount {
    pub id: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub field: FieldSpec,
    pub degree: usize,
    pub sqrt: SqrtChoice,
    pub rows: Vec<RowCount>,
    pub expected: usize,
    pub found: usize,
    /// In the table expansion but not found by the search.
    pub missing: Vec<Vec<u32>>,
    /// Found by the search but not in the expansion.
    pub extra: Vec<Vec<u32>>,
    pub equal: bool,
}

pub fn verify_table(field: &FieldRef, found: &ClassificationResult, sqrt: SqrtChoice) -> Result<TableCheck> {
    let n = found.degree;
    let rows: Vec<RowCount> = rows_for(field, n)
        .iter()
        .map(|r| RowCount {
            id: r.id.into(),
            count: r.expand(field, sqrt).len(),
        })
        .collect();
    let want = expected_set(field, n, sqrt);
    let got = found.set(field)?;
    let missing: Vec<Vec<u32>> = want.difference(&got).map(Poly::codes).collect();
    let extra: Vec<Vec<u32>> = got.difference(&want).map(Poly::codes).collect();
    Ok(TableCheck {
        field: field.spec(),
        degree: n,
        sqrt,
        rows,
        expected: want.len(),
        found: got.len(),
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::is_pp;

    fn fq(q: u64) -> FieldRef {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn row_counts() {
        let f11 = fq(11);
        assert_eq!(expand_table_family("x6+-a2x3+ax2+-5x", &f11, SqrtChoice::Both).unwrap().len(), 10);
        let f9 = fq(9);
        assert_eq!(expand_table_family("q9-no-x5", &f9, SqrtChoice::Canonical).unwrap().len(), 32);
        assert_eq!(expand_table_family("q27-shift", &fq(27), SqrtChoice::Both).unwrap().len(), 702);
        assert!(matches!(expand_table_family("nope", &f9, SqrtChoice::Both), Err(Error::UnknownFamily(_))));
        assert!(expand_table_family("x6+-2x", &f9, SqrtChoice::Both).unwrap().is_empty());
    }

    #[test]
    fn canonical_root_is_smaller_code() {
        let f9 = fq(9);
        assert_eq!(SqrtChoice::Canonical.roots(&f9), vec![Elem(3)]);
        assert_eq!(SqrtChoice::Both.roots(&f9), vec![Elem(3), Elem(6)]);
    }

    #[test]
    fn every_expanded_member_is_a_pp() {
        for q in [4u64, 5, 7, 8, 9, 11, 13] {
            let f = fq(q);
            for n in 2..=6 {
                for g in expected_set(&f, n, SqrtChoice::Both) {
                    assert!(is_pp(&g), "{g} over F_{q}");
                    assert_eq!(g.degree(), Some(n));
                }
            }
        }
    }
    #[test]
    fn f11_signs_are_linked() {
        // mixing the two signs in x^6 ± a^2 x^3 + a x^2 ± 5x leaves the PPs
        let f = fq(11);
        let five = f.from_int(5);
        let minus = f.neg(Elem::ONE);
        for a in f.nonzero().filter(|&a| f.is_square(a)) {
            let a2 = f.mul(a, a);
            let mixed = Poly::new(&f, vec![Elem::ZERO, f.mul(minus, five), a, a2, Elem::ZERO, Elem::ZERO, Elem::ONE]);
            assert!(!is_pp(&mixed), "{mixed}");
        }
    }
}
