use cdalg::operators::left_mult_matrix;
use cdalg::{associator, parse_element, CDElement, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

fn element(level: u32) -> impl Strategy<Value = CDElement> {
    prop::collection::vec((-8i64..=8, 1i64..=8), 1usize << level).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q))).collect();
        CDElement::from_coeffs(level, coeffs).unwrap()
    })
}

fn pair(max_level: u32) -> impl Strategy<Value = (CDElement, CDElement)> {
    (0..=max_level).prop_flat_map(|n| (element(n), element(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flexible((x, y) in pair(5)) {
        prop_assert!(associator(&x, &y, &x).unwrap().is_zero());
    }

    #[test]
    fn conjugation_reverses_products((x, y) in pair(5)) {
        prop_assert_eq!((&x * &y).conjugate(), &y.conjugate() * &x.conjugate());
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn inner_product_is_dot((x, y) in pair(5)) {
        prop_assert_eq!(x.inner_product(&y).unwrap(), x.dot(&y).unwrap());
        prop_assert_eq!(x.norm_sq(), x.dot(&x).unwrap());
    }

    #[test]
    fn tilde_is_right_multiplication_by_tilde_unit(x in (1u32..=5).prop_flat_map(element)) {
        let e = CDElement::tilde_unit(x.level()).unwrap();
        prop_assert_eq!(x.tilde().unwrap(), &x * &e);
        prop_assert_eq!(x.tilde().unwrap().tilde().unwrap(), -&x);
    }

    #[test]
    fn normed_up_to_octonions((x, y) in pair(3)) {
        prop_assert_eq!((&x * &y).norm_sq(), x.norm_sq() * y.norm_sq());
    }

    #[test]
    fn literal_round_trip(x in (0u32..=5).prop_flat_map(element)) {
        let text = x.to_string();
        prop_assert_eq!(parse_element(x.level(), &text).unwrap(), x);
    }

    #[test]
    fn json_round_trip(x in (0u32..=4).prop_flat_map(element)) {
        let text = serde_json::to_string(&x).unwrap();
        let back: CDElement = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn pure_left_multiplication_is_skew(x in (0u32..=4).prop_flat_map(element)) {
        prop_assert!(left_mult_matrix(&x.pure_part()).is_skew_symmetric());
    }
}
