//! Property tests for the polynomial ring: classical axioms, grading,
//! substitution/multiplication compatibility, and the coefficient
//! convolution oracle.

use proptest::prelude::*;

use qforms::poly::{Monomial, Polynomial, VarSet};
use qforms::rat::{frac, Rational};

fn vars3() -> VarSet {
    VarSet::new(vec!["x", "y", "z"]).unwrap()
}

/// Small random polynomial in three variables: up to six terms, exponents
/// up to three, coefficients in [-5, 5] with denominators up to 3.
fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    let term = (
        prop::collection::vec(0u32..=3, 3),
        (-5i64..=5, 1i64..=3),
    );
    prop::collection::vec(term, 0..=6).prop_map(|terms| {
        let vars = vars3();
        Polynomial::from_terms(
            &vars,
            terms
                .into_iter()
                .map(|(exps, (n, d))| (Monomial::new(exps), frac(n, d))),
        )
        .unwrap()
    })
}

/// Homogeneous random polynomial of the given degree.
fn homogeneous_strategy(degree: u32) -> impl Strategy<Value = Polynomial> {
    let exps = prop::collection::vec(0u32..=degree, 2).prop_map(move |cut| {
        let mut cut = cut;
        cut.sort_unstable();
        vec![cut[0], cut[1] - cut[0], degree - cut[1]]
    });
    let term = (exps, 1i64..=5);
    prop::collection::vec(term, 1..=5).prop_map(|terms| {
        let vars = vars3();
        Polynomial::from_terms(
            &vars,
            terms
                .into_iter()
                .map(|(e, n)| (Monomial::new(e), frac(n, 1))),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn addition_commutes_and_associates(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!((&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_commutes_and_associates(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!((&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(&p * &(&q + &r), &p * &q + &p * &r);
    }

    #[test]
    fn product_term_count_is_bounded(p in poly_strategy(), q in poly_strategy()) {
        let prod = &p * &q;
        prop_assert!(prod.num_terms() <= p.num_terms() * q.num_terms());
    }

    #[test]
    fn homogeneous_products_grade((d1, p) in (1u32..=3).prop_flat_map(|d| (Just(d), homogeneous_strategy(d))),
                                  (d2, q) in (1u32..=3).prop_flat_map(|d| (Just(d), homogeneous_strategy(d)))) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!(p.homogeneous_degree(), Some(d1));
        prop_assert_eq!(q.homogeneous_degree(), Some(d2));
        let prod = &p * &q;
        prop_assert_eq!(prod.homogeneous_degree(), Some(d1 + d2));
    }

    #[test]
    fn full_pattern_extraction_is_convolution(p in poly_strategy(), q in poly_strategy(), exps in prop::collection::vec(0u32..=6, 3)) {
        let prod = &p * &q;
        let pattern: Vec<(usize, u32)> = exps.iter().copied().enumerate().collect();
        let extracted = prod.coeff_of(&pattern);

        // brute-force convolution over the raw term pairs
        let mut acc = Rational::from_integer(0.into());
        for (mp, cp) in p.terms() {
            for (mq, cq) in q.terms() {
                let m = mp.mul(mq);
                if m.exps() == exps.as_slice() {
                    acc += cp * cq;
                }
            }
        }
        let vars = vars3();
        prop_assert_eq!(extracted, Polynomial::constant(&vars, acc));
    }

    #[test]
    fn substitution_commutes_with_multiplication(p in poly_strategy(), q in poly_strategy(), n in -4i64..=4, d in 1i64..=3) {
        let vars = vars3();
        let replacement = Polynomial::constant(&vars, frac(n, d))
            + Polynomial::variable(&vars, "y").unwrap();
        let bindings = [(0usize, replacement)];
        let lhs = (&p * &q).subst(&bindings).unwrap();
        let rhs = p.subst(&bindings).unwrap() * q.subst(&bindings).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn render_parse_roundtrip(p in poly_strategy()) {
        let vars = vars3();
        let text = p.to_string();
        let back = Polynomial::parse(&vars, &text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly_strategy(), q in poly_strategy()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        let quotient = prod.exact_div(&q);
        prop_assert_eq!(quotient, Some(p));
    }

    #[test]
    fn parser_never_panics_on_arbitrary_input(src in "[ a-z0-9+*/^()-]{0,40}") {
        // errors are fine; panics are not
        let _ = Polynomial::parse(&vars3(), &src);
    }
}
