//! Property-based invariants over randomly generated algebra elements,
//! polynomials, and coefficient data.

use cliffordlab_core::appell::{gck_extend, gck_product, gck_restrict, TaylorSeries};
use cliffordlab_core::json::{
    multivector_from_dto, multivector_to_dto, polynomial_from_dto, polynomial_to_dto,
};
use cliffordlab_core::multivector::{BladeIndex, Multivector};
use cliffordlab_core::polynomial::{CliffordPolynomial, ExponentVector};
use cliffordlab_core::rkhs::{annihilation, backward_shift, commutator_check, creation, CoefficientFunction};
use cliffordlab_core::scalar::{Scalar, ScalarKind};
use proptest::prelude::*;

fn arb_multivector(n: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..(1 << n), -9i64..=9, 1i64..=9), 0..5).prop_map(move |raw| {
        let terms = raw
            .into_iter()
            .map(|(bits, num, den)| (BladeIndex(bits), Scalar::from_ratio(num, den)));
        Multivector::from_terms(n, ScalarKind::Exact, terms).unwrap()
    })
}

fn arb_polynomial(n: usize) -> impl Strategy<Value = CliffordPolynomial> {
    let term = (prop::collection::vec(0u16..3, n + 1), arb_multivector(n));
    prop::collection::vec(term, 0..5).prop_map(move |raw| {
        let terms = raw.into_iter().map(|(exps, coeff)| (ExponentVector(exps), coeff));
        CliffordPolynomial::from_terms(n, ScalarKind::Exact, terms).unwrap()
    })
}

fn arb_coefficient_function(n: usize) -> impl Strategy<Value = CoefficientFunction> {
    prop::collection::vec((0usize..9, arb_multivector(n)), 0..5)
        .prop_map(move |terms| CoefficientFunction::from_terms(n, terms).unwrap())
}

fn with_dimension<T: std::fmt::Debug>(
    f: impl Fn(usize) -> BoxedStrategy<T>,
) -> impl Strategy<Value = (usize, T)> {
    (1usize..=5).prop_flat_map(move |n| (Just(n), f(n)))
}

proptest! {
    #[test]
    fn geometric_product_is_associative(
        (n, (a, b, c)) in with_dimension(|n| {
            (arb_multivector(n), arb_multivector(n), arb_multivector(n)).boxed()
        })
    ) {
        let _ = n;
        let left = (&(&a * &b)) * &c;
        let right = &a * &(&b * &c);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conjugation_reverses_products(
        (_n, (a, b)) in with_dimension(|n| (arb_multivector(n), arb_multivector(n)).boxed())
    ) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
    }

    #[test]
    fn grades_partition_and_pair(
        (n, a) in with_dimension(|n| arb_multivector(n).boxed())
    ) {
        let mut sum = Multivector::zero(n, ScalarKind::Exact);
        for k in 0..=n {
            sum = &sum + &a.grade_projection(k).unwrap();
        }
        prop_assert_eq!(&sum, &a);
        // Re(conj(a) a) = |a|^2
        prop_assert_eq!((&a.conjugate() * &a).real_part(), a.norm_sq());
    }

    #[test]
    fn product_norm_is_submultiplicative(
        (n, (a, b)) in with_dimension(|n| (arb_multivector(n), arb_multivector(n)).boxed())
    ) {
        let bound = (2.0f64).powf(n as f64 / 2.0) * a.norm() * b.norm();
        prop_assert!((&a * &b).norm() <= bound + 1e-9);
    }

    #[test]
    fn partial_derivatives_commute(
        (n, p) in with_dimension(|n| arb_polynomial(n).boxed())
    ) {
        for i in 0..=n {
            for j in 0..=n {
                prop_assert_eq!(
                    p.partial_derivative(i).partial_derivative(j),
                    p.partial_derivative(j).partial_derivative(i)
                );
            }
        }
    }

    #[test]
    fn evaluation_is_multiplicative(
        (n, (p, q)) in with_dimension(|n| (arb_polynomial(n), arb_polynomial(n)).boxed())
    ) {
        let point: Vec<f64> = (0..=n).map(|i| 0.3 + 0.1 * i as f64).collect();
        let lhs = p.mul(&q).unwrap().evaluate(&point);
        let rhs = p.evaluate(&point).geometric_product(&q.evaluate(&point)).unwrap();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((&lhs - &rhs).max_abs_component() / scale < 1e-10);
    }

    #[test]
    fn dirac_after_conj_derivative_is_laplacian_on_real_coefficients(
        (n, p) in with_dimension(|n| arb_polynomial(n).boxed())
    ) {
        // keep only the scalar part of every coefficient
        let mut scalar_poly = CliffordPolynomial::zero(n, ScalarKind::Exact);
        for (exps, coeff) in p.terms() {
            let s = coeff.real_part();
            if !s.is_zero() {
                scalar_poly = &scalar_poly
                    + &CliffordPolynomial::from_terms(
                        n,
                        ScalarKind::Exact,
                        [(exps.clone(), Multivector::scalar(n, s))],
                    )
                    .unwrap();
            }
        }
        prop_assert_eq!(scalar_poly.conj_derivative().dirac(), scalar_poly.laplacian());
    }

    #[test]
    fn multivector_json_round_trips(
        (_n, a) in with_dimension(|n| arb_multivector(n).boxed())
    ) {
        let json = serde_json::to_string(&multivector_to_dto(&a)).unwrap();
        let back = multivector_from_dto(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn polynomial_json_round_trips(
        (_n, p) in with_dimension(|n| arb_polynomial(n).boxed())
    ) {
        let json = serde_json::to_string(&polynomial_to_dto(&p)).unwrap();
        let back = polynomial_from_dto(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn gck_extension_round_trips(
        (n, coeffs) in (1usize..=5).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(arb_multivector(n), 0..6))
        })
    ) {
        let f = TaylorSeries::new(n, coeffs).unwrap();
        prop_assert_eq!(gck_restrict(&gck_extend(&f)), f);
    }

    #[test]
    fn gck_product_is_bilinear(
        (n, (a, b, c)) in (1usize..=3).prop_flat_map(|n| {
            let series = move || {
                prop::collection::vec(arb_multivector(n), 0..5)
                    .prop_map(move |cs| gck_extend(&TaylorSeries::new(n, cs).unwrap()))
            };
            (Just(n), (series(), series(), series()))
        })
    ) {
        let trunc = 8;
        let sum = a.add(&b).unwrap();
        let lhs = gck_product(&sum, &c, trunc).unwrap();
        let rhs = gck_product(&a, &c, trunc).unwrap().add(&gck_product(&b, &c, trunc).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let _ = n;
    }

    #[test]
    fn shift_operators_compose_as_stated(
        (_n, f) in with_dimension(|n| arb_coefficient_function(n).boxed())
    ) {
        prop_assert_eq!(backward_shift(&creation(&f)), f.clone());
        prop_assert!(commutator_check(&f));
        // A M - M A applied twice over still the identity on shifted data
        let shifted = creation(&f);
        prop_assert_eq!(
            annihilation(&creation(&shifted)).coefficient(3),
            &creation(&annihilation(&shifted)).coefficient(3) + &shifted.coefficient(3)
        );
    }
}
