//! Acceptance suite: one test per criterion, each checked at its stated
//! tolerance (zero for the exact-rational identities). Every test prints a
//! single PASS line on success; the harness reports any failure per
//! criterion.

use cliffordlab_core::appell::{
    appell_polynomial, appell_table, gck_divide, gck_inverse, gck_product, t_coefficient_table,
    AppellSeries, TaylorSeries,
};
use cliffordlab_core::elementary::{
    derivative_identity_check, eval_elementary, parity_identity_check, pythagorean_check,
    ElementaryKind,
};
use cliffordlab_core::fueter::{
    diagram_check, fueter_sce_monomial, fueter_sce_series, gamma, kernel_membership,
    norm_sq_rational, range_norm_identity, WeightSequence,
};
use cliffordlab_core::multivector::{point_norm, Multivector};
use cliffordlab_core::polynomial::{paravector_power, CliffordPolynomial};
use cliffordlab_core::polyanalytic::{
    appell_like_check, c_map, c_map_monomial, relation_check, tau_map, tau_map_monomial,
    PolySliceFunction,
};
use cliffordlab_core::rkhs::{
    adjoint_check, backward_shift, commutator_check, creation, fock_witness, kernel_eval,
    SpaceConfig,
};
use cliffordlab_core::rng::SplitMix64;
use cliffordlab_core::scalar::{rat, rational_to_f64, Rational, ScalarKind};
use num_traits::{One, Zero};

#[test]
fn criterion_01_fueter_closed_form_vs_brute_force() {
    for n in [1usize, 3, 5] {
        for j in 0..=10 {
            let brute = paravector_power(n, j, ScalarKind::Exact).laplacian_power((n - 1) / 2);
            let closed = fueter_sce_monomial(n, j).unwrap();
            assert_eq!(closed, brute, "n={n} j={j}");
        }
    }
    println!("ACCEPTANCE 1 PASS: closed form of the monomial map equals iterated Laplacian, n in {{1,3,5}}, j <= 10, exact");
}

#[test]
fn criterion_02_quaternionic_regression() {
    for k in 0..=8usize {
        let lhs = paravector_power(3, k + 2, ScalarKind::Exact).laplacian();
        let rhs = appell_polynomial(3, k)
            .unwrap()
            .scale_rational(&rat(-2 * (k as i64 + 2) * (k as i64 + 1)));
        assert_eq!(lhs, rhs, "k={k}");
    }
    println!("ACCEPTANCE 2 PASS: Δ x^(k+2) = -2(k+2)(k+1) P_k^3 for k <= 8, exact");
}

#[test]
fn criterion_03_appell_suite() {
    for n in [3usize, 5, 7] {
        let t = t_coefficient_table(n, 12).unwrap();
        let table = appell_table(n, 12).unwrap();
        for k in 0..=12usize {
            let sum: Rational = t[k].iter().sum();
            assert!(sum.is_one(), "sum rule n={n} k={k}");
            assert!(table[k].dirac().is_zero(), "monogenicity n={n} k={k}");
            assert_eq!(
                table[k].restrict_real(),
                CliffordPolynomial::x0_power(n, k, ScalarKind::Exact),
                "restriction n={n} k={k}"
            );
            if k > 0 {
                let lhs = table[k]
                    .conj_derivative()
                    .scale_rational(&cliffordlab_core::scalar::ratio(1, 2));
                assert_eq!(
                    lhs,
                    table[k - 1].scale_rational(&rat(k as i64)),
                    "appell property n={n} k={k}"
                );
            }
        }
    }
    println!("ACCEPTANCE 3 PASS: sum rule, monogenicity, Appell property, restriction for k <= 12, n in {{3,5,7}}, exact");
}

#[test]
fn criterion_04_commuting_diagram() {
    let mut rng = SplitMix64::new(2013);
    for n in [3usize, 5] {
        for t in 0..50 {
            let f = rng.taylor_series(n, 7, 5);
            assert!(diagram_check(n, &f).unwrap(), "n={n} trial={t}");
        }
    }
    println!("ACCEPTANCE 4 PASS: Δ^((n-1)/2) ∘ S = γ_n GCK ∘ d^(n-1)/dx0^(n-1) on 50 random degree-7 series per n in {{3,5}}, exact");
}

#[test]
fn criterion_05_gck_product_and_inverse() {
    let n = 3;
    for a in 0..=16usize {
        for b in 0..=16 - a {
            let product = gck_product(
                &AppellSeries::monomial(n, a),
                &AppellSeries::monomial(n, b),
                a + b,
            )
            .unwrap();
            assert_eq!(product, AppellSeries::monomial(n, a + b), "a={a} b={b}");
        }
    }

    // reciprocal of random invertible series to order 12
    let mut rng = SplitMix64::new(501);
    let unit = AppellSeries::monomial(n, 0);
    for t in 0..25 {
        let constant = Multivector::scalar(
            n,
            cliffordlab_core::scalar::Scalar::Exact(rat(rng.int_in(1, 9)) / rat(rng.int_in(1, 4))),
        );
        let mut coeffs = vec![constant];
        coeffs.extend((0..8).map(|_| rng.multivector(n, 3, 5)));
        let series = AppellSeries::new(n, coeffs).unwrap();
        let inverse = gck_inverse(&series, 12).unwrap();
        assert_eq!(
            gck_product(&series, &inverse, 12).unwrap(),
            unit.truncate(12),
            "trial={t}"
        );
    }

    // geometric series case and the P_1 left quotient
    let one_plus_p1 = AppellSeries::monomial(n, 0).add(&AppellSeries::monomial(n, 1)).unwrap();
    let inv = gck_inverse(&one_plus_p1, 12).unwrap();
    for k in 0..=12usize {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(inv.coefficient(k), Multivector::from_int(n, expected));
    }
    for k in 1..=12usize {
        assert_eq!(
            gck_divide(&AppellSeries::monomial(n, k), &AppellSeries::monomial(n, 1), k - 1)
                .unwrap(),
            AppellSeries::monomial(n, k - 1)
        );
    }
    println!("ACCEPTANCE 5 PASS: P_a ⊙ P_b = P_(a+b) for a+b <= 16 and GCK reciprocals to order 12, exact");
}

#[test]
fn criterion_06_elementary_identities_and_bounds() {
    for n in [1usize, 3, 5] {
        for kind in ElementaryKind::ALL {
            assert!(
                derivative_identity_check(kind, n, 12).unwrap(),
                "derivative {} n={n}",
                kind.name()
            );
        }
        assert!(parity_identity_check(n, 12).unwrap(), "parity n={n}");
        assert!(pythagorean_check(n, 12).unwrap(), "pythagorean n={n}");
    }

    let tolerance = 1e-10;
    let mut rng = SplitMix64::new(3001);
    for n in [1usize, 3, 5] {
        let g = rational_to_f64(&gamma(n).unwrap()).abs();
        for t in 0..500 {
            let point = rng.point(n, 2.0);
            let r = point_norm(&point);
            let kind = ElementaryKind::ALL[t % 5];
            let bound = match kind {
                ElementaryKind::Exp => g * r.exp(),
                ElementaryKind::Sin | ElementaryKind::Sinh => g * r.sinh(),
                ElementaryKind::Cos | ElementaryKind::Cosh => g * r.cosh(),
            };
            let v = eval_elementary(kind, n, &point, tolerance * 1e-2).unwrap();
            assert!(
                v.value.norm() <= bound + v.tail_bound + tolerance,
                "bound {} n={n} t={t}",
                kind.name()
            );
        }
    }
    println!("ACCEPTANCE 6 PASS: derivative/parity/Pythagorean tables exact through order 12 and growth bounds on 500 points per n in {{1,3,5}} at 1e-10");
}

#[test]
fn criterion_07_range_isometry_and_kernel() {
    let spaces = [
        WeightSequence::hardy(),
        WeightSequence::bergman(),
        WeightSequence::dirichlet(),
        WeightSequence::fock(),
    ];
    let mut rng = SplitMix64::new(4007);
    for n in [3usize, 5] {
        for t in 0..100 {
            let f = rng.taylor_series(n, 7, 5);
            for space in &spaces {
                let (lhs, rhs) = range_norm_identity(n, space, &f).unwrap();
                assert_eq!(lhs, rhs, "space={} n={n} trial={t}", space.name());
            }
        }

        // isometry on the head-zero subspace (Cor. of the norm identity)
        for t in 0..100 {
            let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); n - 1];
            coeffs.extend_from_slice(rng.taylor_series(n, 7, 5).coefficients());
            let f = TaylorSeries::new(n, coeffs).unwrap();
            for space in &spaces {
                let (lhs, _) = range_norm_identity(n, space, &f).unwrap();
                let mut norm_c = Rational::zero();
                for (k, a) in f.coefficients().iter().enumerate() {
                    norm_c += space.weight(k) * norm_sq_rational(a);
                }
                let g = gamma(n).unwrap();
                assert_eq!(lhs, &g * &g * norm_c, "isometry space={} n={n} t={t}", space.name());
            }
        }

        // kernel: exhaustive degree sweep
        for d in 0..=14usize {
            let monomial = TaylorSeries::monomial(n, d);
            let in_kernel = d + 1 < n;
            assert_eq!(kernel_membership(n, &monomial).unwrap(), in_kernel, "n={n} d={d}");
            assert_eq!(
                fueter_sce_series(n, &monomial).unwrap().is_zero(),
                in_kernel,
                "n={n} d={d}"
            );
        }
        // a full polynomial of degree n-2 with Clifford coefficients dies
        let head: Vec<Multivector> = (0..n - 1).map(|_| rng.multivector(n, 3, 6)).collect();
        let low = TaylorSeries::new(n, head).unwrap();
        assert!(kernel_membership(n, &low).unwrap());
        assert!(fueter_sce_series(n, &low).unwrap().is_zero());
    }
    println!("ACCEPTANCE 7 PASS: range norm identity and isometry exact on 100 random series per n in {{3,5}} across all four spaces; kernel sweep confirmed");
}

#[test]
fn criterion_08_operator_algebra() {
    let n = 3;
    let fock = SpaceConfig::fock(n);
    let hardy = SpaceConfig::hardy(n);
    let mut rng = SplitMix64::new(6007);
    for t in 0..200 {
        let f = rng.coefficient_function(n, 9, 4, 6);
        let g = rng.coefficient_function(n, 9, 4, 6);
        assert!(adjoint_check(&fock, &f, &g).unwrap(), "fock adjoint t={t}");
        assert!(adjoint_check(&hardy, &f, &g).unwrap(), "hardy adjoint t={t}");
        assert!(commutator_check(&f), "commutator t={t}");
        assert_eq!(backward_shift(&creation(&f)), f, "S∘M t={t}");
    }

    // divergence witness: harmonic certificate beyond 10
    assert!(fock_witness::verify_terms(512));
    let certificate = fock_witness::harmonic_lower_bound(20);
    assert!(certificate > 10.0);
    assert!(fock_witness::creation_partial_sum(1 << 20) >= certificate);
    assert!(fock_witness::annihilation_partial_sum(1 << 20) > 10.0);
    assert!(fock_witness::norm_partial_sum(1 << 20) < fock_witness::norm_upper_bound());
    println!("ACCEPTANCE 8 PASS: adjoints, commutator, and shift section exact on 200 random coefficient functions; divergence witness certified past 10");
}

#[test]
fn criterion_09_kernel_restrictions() {
    let n = 3;
    let fock = SpaceConfig::fock(n);
    let hardy = SpaceConfig::hardy(n);
    let mut rng = SplitMix64::new(901);

    let mut fock_points: Vec<(f64, f64)> = Vec::new();
    let mut hardy_points: Vec<(f64, f64)> = Vec::new();
    for i in 0..=8 {
        for j in 0..=8 {
            let (u, v) = (-2.0 + 0.5 * i as f64, -2.0 + 0.5 * j as f64);
            fock_points.push((u, v));
            hardy_points.push((u * 0.45, v * 0.45));
        }
    }
    for _ in 0..60 {
        fock_points.push((rng.f64_in(2.0), rng.f64_in(2.0)));
        hardy_points.push((rng.f64_in(0.9), rng.f64_in(0.9)));
    }

    for &(x0, y0) in &fock_points {
        let x = [x0, 0.0, 0.0, 0.0];
        let y = [y0, 0.0, 0.0, 0.0];
        let kv = kernel_eval(&fock, &x, &y, 48).unwrap();
        assert!(kv.tail_bound < 1e-12, "fock tail at ({x0},{y0})");
        let diff = (kv.value.real_part().to_f64() - (x0 * y0).exp()).abs();
        assert!(diff <= 1e-10, "fock kernel at ({x0},{y0}): {diff:e}");
    }
    for &(x0, y0) in &hardy_points {
        let x = [x0, 0.0, 0.0, 0.0];
        let y = [y0, 0.0, 0.0, 0.0];
        let kv = kernel_eval(&hardy, &x, &y, 160).unwrap();
        assert!(kv.tail_bound < 1e-12, "hardy tail at ({x0},{y0})");
        let diff = (kv.value.real_part().to_f64() - 1.0 / (1.0 - x0 * y0)).abs();
        assert!(diff <= 1e-10, "hardy kernel at ({x0},{y0}): {diff:e}");
    }
    println!("ACCEPTANCE 9 PASS: Fock kernel matches e^(x0 y0) on |x0|,|y0| <= 2 and Hardy matches 1/(1-x0 y0) on |x0|,|y0| <= 0.9, certified tails below 1e-10");
}

#[test]
fn criterion_10_polyanalytic_suite() {
    let mut rng = SplitMix64::new(1101);
    for n in [3usize, 5] {
        // monomial tables against the iterated-Laplacian oracle
        let m = 2usize;
        for k in 0..=m {
            for j in 0..=7usize {
                let fueter_oracle =
                    paravector_power(n, j, ScalarKind::Exact).laplacian_power((n - 1) / 2);
                let expected_c = CliffordPolynomial::x0_power(n, k, ScalarKind::Exact)
                    .mul(&fueter_oracle)
                    .unwrap();
                assert_eq!(c_map_monomial(n, m, k, j).unwrap(), expected_c, "C n={n} k={k} j={j}");
                let expected_tau = if k == m {
                    fueter_oracle.scale_rational(&rat(4 * 2)) // 2^m m! = 8 for m = 2
                } else {
                    CliffordPolynomial::zero(n, ScalarKind::Exact)
                };
                assert_eq!(
                    tau_map_monomial(n, m, k, j).unwrap(),
                    expected_tau,
                    "tau n={n} k={k} j={j}"
                );
            }
        }

        // Appell-like identity
        for k in 0..=6usize {
            for s in 0..=6usize {
                assert!(appell_like_check(n, k, s).unwrap(), "n={n} k={k} s={s}");
            }
        }
    }

    // relation and polyanalyticity at n = 3, m <= 2, degree <= 7
    let n = 3;
    for m in 0..=2usize {
        for t in 0..10 {
            let layers: Vec<TaylorSeries> = (0..=m).map(|_| rng.taylor_series(n, 7, 5)).collect();
            let f = PolySliceFunction::new(n, layers).unwrap();
            assert!(relation_check(&f).unwrap(), "relation m={m} t={t}");
            assert!(
                c_map(&f).unwrap().dirac_power(m + 1).is_zero(),
                "polyanalyticity m={m} t={t}"
            );
            assert!(
                tau_map(&f).unwrap().materialize().unwrap().dirac().is_zero(),
                "tau monogenicity m={m} t={t}"
            );
        }
    }
    println!("ACCEPTANCE 10 PASS: monomial tables vs the Laplacian oracle, Appell-like identity (k,s <= 6), relation ∂^m C = 2^-m τ and dirac^(m+1) ∘ C = 0, all exact");
}
