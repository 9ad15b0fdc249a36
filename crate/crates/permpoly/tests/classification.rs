//! Cross-module properties of the classification and orthomorphism searches.

use std::collections::BTreeSet;

use permpoly::criteria::{evaluate, is_pp, Criterion};
use permpoly::normalize::{classify_all, classify_normalized, normalize, orbit_expand, PrefilterKind, SearchOptions};
use permpoly::ortho::{classify_all_orthomorphisms, classify_orthomorphisms, degree6_f9_closure, is_orthomorphism};
use permpoly::poly::carlitz_interpolate;
use permpoly::tables::SqrtChoice;
use permpoly::{Elem, Field, FieldRef, Poly};
use proptest::prelude::*;

fn fq(q: u64) -> FieldRef {
    Field::of_order(q).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn f9_orbits_partition_all_degree6_pps() {
    // p | 6 over F_9, so orbits have the full q(q−1) = 72 members
    let f = fq(9);
    let norm = classify_normalized(&f, 6, &opts()).unwrap();
    let all = classify_all(&f, 6, &opts()).unwrap().set(&f).unwrap();
    let mut union = BTreeSet::new();
    for g in norm.polys(&f).unwrap() {
        let orbit = orbit_expand(&g).unwrap();
        assert_eq!(orbit.len(), 72);
        assert!(union.is_disjoint(&orbit));
        union.extend(orbit);
    }
    assert_eq!(union.len(), 72 * norm.count);
    assert_eq!(union, all);
}

#[test]
fn f7_degree4_orbits_cover_all() {
    // p ∤ 4: orbits carry the extra shift, q²(q−1) members each
    let f = fq(7);
    let norm = classify_normalized(&f, 4, &opts()).unwrap();
    let all = classify_all(&f, 4, &opts()).unwrap().set(&f).unwrap();
    let union: BTreeSet<Poly> = norm.polys(&f).unwrap().iter().flat_map(|g| orbit_expand(g).unwrap()).collect();
    assert_eq!(union.len(), 7 * 7 * 6 * norm.count);
    assert_eq!(union, all);
}

#[test]
fn f9_degree6_orthomorphisms_full_enumeration() {
    let f = fq(9);
    let all = classify_all_orthomorphisms(&f, 6, &opts()).unwrap().set(&f).unwrap();
    assert_eq!(all, degree6_f9_closure(&f, SqrtChoice::Both).unwrap());
    // every orthomorphism lands in the case-split output after x -> x+b and
    // dropping the constant
    let split = classify_orthomorphisms(&f, 6, &opts()).unwrap().set(&f).unwrap();
    for g in &all {
        let hit = f.elements().any(|b| {
            let h = g.shift_scale_compose(b, Elem::ONE, Elem::ZERO).unwrap();
            split.contains(&h.add_const(f.neg(h.coeff(0))))
        });
        assert!(hit, "{g}");
    }
    assert!(split.is_subset(&all));
}

#[test]
fn orthomorphisms_stable_under_shift_not_scale() {
    let f = fq(9);
    let orthos = classify_orthomorphisms(&f, 6, &opts()).unwrap().polys(&f).unwrap();
    for g in &orthos {
        for b in f.elements() {
            for d in f.elements() {
                let h = g.shift_scale_compose(b, Elem::ONE, d).unwrap();
                assert!(is_orthomorphism(&h).is_orthomorphism);
            }
        }
    }
    let witness = orthos.iter().any(|g| {
        f.elements()
            .filter(|c| c.0 > 1)
            .any(|c| !is_orthomorphism(&g.scale(c)).is_orthomorphism)
    });
    assert!(witness);
}

#[test]
fn prefilter_never_changes_results() {
    for (q, n) in [(7, 4), (9, 6), (11, 6), (13, 5), (16, 6)] {
        let f = fq(q);
        let pre = SearchOptions { prefilter: PrefilterKind::HermitePartial, ..opts() };
        assert_eq!(
            classify_normalized(&f, n, &opts()).unwrap(),
            classify_normalized(&f, n, &pre).unwrap(),
            "F_{q} degree {n}"
        );
    }
}

fn random_perm(q: u32) -> impl Strategy<Value = Vec<u32>> {
    Just((0..q).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interpolated_permutations_normalize(perm in random_perm(13)) {
        let f = fq(13);
        let vals: Vec<Elem> = perm.into_iter().map(Elem).collect();
        let g = carlitz_interpolate(&f, &vals).unwrap();
        prop_assert!(is_pp(&g));
        if g.degree().unwrap_or(0) >= 1 {
            let nf = normalize(&g).unwrap();
            prop_assert!(is_pp(&nf.g));
            prop_assert!(orbit_expand(&nf.g).unwrap().contains(&g.reduce()));
        }
    }

    #[test]
    fn criteria_agree_on_random_polys(coeffs in proptest::collection::vec(0u32..9, 1..10)) {
        let f = fq(9);
        let g = Poly::from_codes(&f, &coeffs).unwrap();
        let r = evaluate(&g, &Criterion::ALL);
        prop_assert!(r.all_agree(), "{:?} disagree on {:?}", r.disagreeing(), coeffs);
    }

    #[test]
    fn ortho_is_pp_and_shifted_pp(perm in random_perm(11)) {
        let f = fq(11);
        let vals: Vec<Elem> = perm.into_iter().map(Elem).collect();
        let g = carlitz_interpolate(&f, &vals).unwrap();
        let shifted = g.try_sub(&Poly::x(&f)).unwrap();
        prop_assert_eq!(is_orthomorphism(&g).is_orthomorphism, is_pp(&shifted));
    }
}
