use permpoly::criteria::is_pp;
use permpoly::families::{dickson_poly, dickson_recurrence, instantiate, linearized, Family};
use permpoly::{Elem, Field, FieldRef};
use proptest::prelude::*;

const ORDERS: [u64; 10] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

fn field_and_elem() -> impl Strategy<Value = (FieldRef, Elem)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|q| {
        let f = Field::of_order(q).unwrap();
        (Just(f), (0..q as u32).prop_map(Elem))
    })
}

proptest! {
    #[test]
    fn dickson_forms_agree((f, a) in field_and_elem(), k in 0u64..40) {
        prop_assert_eq!(dickson_poly(&f, k, a), dickson_recurrence(&f, k, a));
    }

    #[test]
    fn dickson_criterion((f, a) in field_and_elem(), k in 1u64..30) {
        prop_assume!(!a.is_zero());
        let i = instantiate(&f, &Family::Dickson { k, a }).unwrap();
        prop_assert!(i.agrees(), "{:?}", i);
    }

    #[test]
    fn monomial_criterion((f, _a) in field_and_elem(), n in 1u64..60) {
        let i = instantiate(&f, &Family::Monomial { n }).unwrap();
        prop_assert!(i.agrees());
    }

    #[test]
    fn linearized_is_additive((f, _a) in field_and_elem(), c in prop::collection::vec(0u32..4, 1..4), x in 0u32..25, y in 0u32..25) {
        let q = f.q();
        let coeffs: Vec<Elem> = c.iter().map(|v| Elem(v % q)).collect();
        let l = linearized(&f, f.p() as u64, &coeffs);
        let (x, y) = (Elem(x % q), Elem(y % q));
        prop_assert_eq!(l.eval(f.add(x, y)), f.add(l.eval(x), l.eval(y)));
    }

    #[test]
    fn linearized_criterion((f, _a) in field_and_elem(), c in prop::collection::vec(0u32..25, 1..4)) {
        let q = f.q();
        let coeffs: Vec<Elem> = c.iter().map(|v| Elem(v % q)).collect();
        prop_assume!(coeffs.iter().any(|e| !e.is_zero()));
        let i = instantiate(&f, &Family::Linearized { coeffs }).unwrap();
        prop_assert!(i.agrees(), "{:?}", i);
        let g = permpoly::Poly::from_codes(&f, i.polynomial.as_ref().unwrap()).unwrap();
        prop_assert_eq!(is_pp(&g), i.brute_force);
    }
}
