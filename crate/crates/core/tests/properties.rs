//! Property suites for the exact algebra kernel.

use heunlab_core::ratpoly::{det, det_cofactor, rat, MPoly, PolyMatrix, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn arb_monomial() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0u32..4, 3)
}

fn arb_poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec((arb_monomial(), arb_rational()), 0..6)
        .prop_map(|terms| MPoly::from_terms(&VARS, terms).unwrap())
}

fn arb_nonzero_poly() -> impl Strategy<Value = MPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn product_degree_is_additive(p in arb_nonzero_poly(), q in arb_nonzero_poly()) {
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(
            prod.total_degree(),
            Some(p.total_degree().unwrap() + q.total_degree().unwrap())
        );
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), q in arb_nonzero_poly()) {
        let prod = p.mul(&q).unwrap();
        let back = prod.div_exact(&q).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip(p in arb_poly()) {
        let json = p.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: heunlab_core::ratpoly::PolyJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MPoly::from_json(&parsed).unwrap(), p);
        // terms come out graded-lex descending
        for w in json.terms.windows(2) {
            let d0: u32 = w[0].exp.iter().sum();
            let d1: u32 = w[1].exp.iter().sum();
            prop_assert!(d0 > d1 || (d0 == d1 && w[0].exp > w[1].exp));
        }
    }

    #[test]
    fn bareiss_matches_cofactor_up_to_4x4(
        n in 1usize..=4,
        entries in proptest::collection::vec(arb_poly(), 16),
    ) {
        let m = PolyMatrix::new(n, n, entries[..n * n].to_vec()).unwrap();
        prop_assert_eq!(det(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn mul_commutes_and_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        let lhs = p.mul(&q.add(&r).unwrap()).unwrap();
        let rhs = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_is_ring_homomorphism_modulo_rounding(p in arb_poly(), q in arb_poly()) {
        let z = [
            ("x", heunlab_core::Complex64::new(0.3, -0.4)),
            ("y", heunlab_core::Complex64::new(-0.7, 0.2)),
            ("z", heunlab_core::Complex64::new(0.1, 0.9)),
        ];
        let lhs = p.mul(&q).unwrap().eval(&z).unwrap();
        let rhs = p.eval(&z).unwrap() * q.eval(&z).unwrap();
        let scale = p.eval_scale(&z).unwrap() * q.eval_scale(&z).unwrap() + 1.0;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }
}

#[test]
fn coefficients_can_exceed_machine_range() {
    // Exact arithmetic keeps huge intermediate coefficients intact.
    let big = Rational::new(BigInt::from(10).pow(40), BigInt::from(1));
    let p = MPoly::constant(&VARS, big.clone());
    let q = p.mul(&p).unwrap();
    assert_eq!(q.coeff(&[0, 0, 0]), big.clone() * big);
}
