//! Seeded verification suites over every subsystem, producing
//! machine-readable reports.
//!
//! A report's serialized form is fully determined by the configuration and
//! seed; wall time is tracked on the struct but deliberately kept out of
//! the JSON so identical runs stay byte-identical.

use crate::appell::{
    appell_table, gck_divide, gck_extend, gck_inverse, gck_product, slice_extend, AppellSeries,
    TaylorSeries,
};
use crate::elementary::{
    derivative_identity_check, eval_elementary, parity_identity_check, pythagorean_check,
    ElementaryKind, TruncatedMonogenic,
};
use crate::error::{Error, Result};
use crate::fueter::{
    diagram_check, fueter_sce_monomial, fueter_sce_preimage, fueter_sce_series, gamma,
    kernel_membership, norm_sq_rational, range_norm_identity, WeightSequence,
};
use crate::multivector::{point_norm, Multivector};
use crate::polynomial::{paravector_power, CliffordPolynomial};
use crate::polyanalytic::{
    appell_like_check, appell_poly, c_map, c_map_monomial, global_operator_at, relation_check,
    tau_map, tau_map_monomial, PolySliceFunction,
};
use crate::rkhs::{
    adjoint_check, annihilation_matches_hypercomplex_derivative, backward_shift, commutator_check,
    creation, fock_witness, kernel_eval, norm_sq, pointwise_bound_check, reproducing_check,
    reproducing_check_exact_real, CoefficientFunction, SpaceConfig,
};
use crate::rng::SplitMix64;
use crate::scalar::{factorial, rat, rational_to_f64, Rational, Scalar, ScalarKind};
use num_traits::{One, Zero};
use serde::Serialize;
use std::time::Instant;

/// Which invariant suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    Appell,
    Fueter,
    Elementary,
    Rkhs,
    Polyanalytic,
    All,
}

impl Suite {
    pub const SINGLE: [Suite; 6] = [
        Suite::Algebra,
        Suite::Appell,
        Suite::Fueter,
        Suite::Elementary,
        Suite::Rkhs,
        Suite::Polyanalytic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Appell => "appell",
            Suite::Fueter => "fueter",
            Suite::Elementary => "elementary",
            Suite::Rkhs => "rkhs",
            Suite::Polyanalytic => "polyanalytic",
            Suite::All => "all",
        }
    }

    pub fn by_name(name: &str) -> Result<Suite> {
        match name {
            "algebra" => Ok(Suite::Algebra),
            "appell" => Ok(Suite::Appell),
            "fueter" => Ok(Suite::Fueter),
            "elementary" => Ok(Suite::Elementary),
            "rkhs" => Ok(Suite::Rkhs),
            "polyanalytic" => Ok(Suite::Polyanalytic),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!(
                "unknown suite '{other}', expected algebra|appell|fueter|elementary|rkhs|polyanalytic|all"
            ))),
        }
    }
}

/// Suite configuration; `n = None` sweeps each suite's default dimensions.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n: Option<usize>,
    pub max_k: usize,
    pub max_degree: usize,
    pub trials: Option<usize>,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n: None,
            max_k: 12,
            max_degree: 7,
            trials: None,
            seed: 7,
            tolerance: 1e-10,
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<()> {
        if let Some(n) = self.n {
            crate::appell::require_odd_dimension(n)?;
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Domain(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    fn dims(&self, default: &[usize]) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => default.to_vec(),
        }
    }

    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FailureRecord {
    pub case: String,
    pub detail: String,
}

/// Outcome of one suite run. `failures` empty iff the run passed.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: String,
    pub n: Option<usize>,
    pub max_k: usize,
    pub max_degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub cases: usize,
    pub failures: Vec<FailureRecord>,
    pub max_residual: f64,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Harness {
    cases: usize,
    failures: Vec<FailureRecord>,
    max_residual: f64,
}

impl Harness {
    fn exact(&mut self, case: &str, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(FailureRecord {
                case: case.to_string(),
                detail: "exact identity failed".into(),
            });
        }
    }

    fn residual(&mut self, case: &str, residual: f64, tol: f64) {
        self.cases += 1;
        self.max_residual = self.max_residual.max(residual);
        if !(residual <= tol) {
            self.failures.push(FailureRecord {
                case: case.to_string(),
                detail: format!("residual {residual:e} exceeds tolerance {tol:e}"),
            });
        }
    }
}

/// Run one suite (or all of them) and collect the report.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let started = Instant::now();
    let mut harness = Harness::default();
    match suite {
        Suite::Algebra => algebra_suite(config, &mut harness)?,
        Suite::Appell => appell_suite(config, &mut harness)?,
        Suite::Fueter => fueter_suite(config, &mut harness)?,
        Suite::Elementary => elementary_suite(config, &mut harness)?,
        Suite::Rkhs => {
            rkhs_operator_cases(config, &mut harness)?;
            rkhs_kernel_cases(config, &mut harness)?;
        }
        Suite::Polyanalytic => polyanalytic_suite(config, &mut harness)?,
        Suite::All => {
            for s in Suite::SINGLE {
                match s {
                    Suite::Algebra => algebra_suite(config, &mut harness)?,
                    Suite::Appell => appell_suite(config, &mut harness)?,
                    Suite::Fueter => fueter_suite(config, &mut harness)?,
                    Suite::Elementary => elementary_suite(config, &mut harness)?,
                    Suite::Rkhs => {
                        rkhs_operator_cases(config, &mut harness)?;
                        rkhs_kernel_cases(config, &mut harness)?;
                    }
                    Suite::Polyanalytic => polyanalytic_suite(config, &mut harness)?,
                    Suite::All => unreachable!(),
                }
            }
        }
    }
    Ok(finish(suite.name(), config, harness, started))
}

/// The operator-algebra subset of the rkhs suite
/// (`rkhs verify --suite operators`).
pub fn run_rkhs_operators(config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let started = Instant::now();
    let mut harness = Harness::default();
    rkhs_operator_cases(config, &mut harness)?;
    Ok(finish("operators", config, harness, started))
}

/// The `∂^m C_{m+1} = 2^{-m} τ_{m+1}` subset of the polyanalytic suite
/// (`poly verify --relation`), sweeping layer counts up to `max_m`.
pub fn run_polyanalytic_relation(config: &VerifyConfig, max_m: usize) -> Result<VerificationReport> {
    config.validate()?;
    let started = Instant::now();
    let mut harness = Harness::default();
    relation_cases(config, max_m, &mut harness)?;
    Ok(finish("relation", config, harness, started))
}

fn finish(
    suite: &str,
    config: &VerifyConfig,
    harness: Harness,
    started: Instant,
) -> VerificationReport {
    VerificationReport {
        schema: crate::json::SCHEMA.to_string(),
        suite: suite.to_string(),
        n: config.n,
        max_k: config.max_k,
        max_degree: config.max_degree,
        trials: config.trials(0),
        seed: config.seed,
        tolerance: config.tolerance,
        cases: harness.cases,
        failures: harness.failures,
        max_residual: harness.max_residual,
        wall_ms: started.elapsed().as_millis(),
    }
}

fn algebra_suite(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);
    let structural_trials = config.trials(1000) / 10;

    for n in config.dims(&[1, 2, 3, 4, 5, 6]) {
        for t in 0..structural_trials.max(20) {
            let a = rng.multivector(n, 3, 6);
            let b = rng.multivector(n, 3, 6);
            let c = rng.multivector(n, 3, 6);
            let assoc = a.geometric_product(&b)?.geometric_product(&c)?
                == a.geometric_product(&b.geometric_product(&c)?)?;
            h.exact(&format!("algebra/associativity n={n} t={t}"), assoc);
            let anti = a.geometric_product(&b)?.conjugate()
                == b.conjugate().geometric_product(&a.conjugate())?;
            h.exact(&format!("algebra/conjugation-anti-automorphism n={n} t={t}"), anti);
        }
    }

    // |ab| <= 2^{n/2} |a| |b|
    for n in config.dims(&[1, 3, 5]) {
        let bound_factor = (2.0f64).powf(n as f64 / 2.0);
        for t in 0..config.trials(1000) {
            let a = rng.multivector(n, 4, 8);
            let b = rng.multivector(n, 4, 8);
            let lhs = a.geometric_product(&b)?.norm();
            let rhs = bound_factor * a.norm() * b.norm();
            let excess = (lhs - rhs).max(0.0);
            h.residual(&format!("algebra/submultiplicative n={n} t={t}"), excess, 1e-9);
        }
    }

    for n in config.dims(&[1, 3, 5]) {
        for t in 0..structural_trials.max(20) {
            let x = rng.paravector(n, 9);
            let modulus = x.geometric_product(&x.conjugate())?;
            h.exact(
                &format!("algebra/paravector-modulus n={n} t={t}"),
                modulus == Multivector::scalar(n, x.norm_sq()),
            );
            let a = rng.multivector(n, 4, 8);
            let mut partition = Multivector::zero(n, ScalarKind::Exact);
            for k in 0..=n {
                partition = &partition + &a.grade_projection(k)?;
            }
            h.exact(&format!("algebra/grade-partition n={n} t={t}"), partition == a);
            let real_pairing = a.conjugate().geometric_product(&a)?.real_part();
            h.exact(
                &format!("algebra/conjugate-pairing n={n} t={t}"),
                Multivector::scalar(n, real_pairing) == Multivector::scalar(n, a.norm_sq()),
            );
        }
    }
    Ok(())
}

fn appell_suite(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);

    // sum rule over the full dimension sweep
    for n in config.dims(&[1, 3, 5, 7, 9, 11]) {
        let table = crate::appell::t_coefficient_table(n, config.max_k.max(40))?;
        for (k, row) in table.iter().enumerate() {
            let sum: Rational = row.iter().sum();
            h.exact(&format!("appell/sum-rule n={n} k={k}"), sum.is_one());
        }
    }

    for n in config.dims(&[3, 5, 7]) {
        let table = appell_table(n, config.max_k)?;
        for k in 0..=config.max_k {
            h.exact(&format!("appell/monogenic n={n} k={k}"), table[k].dirac().is_zero());
            h.exact(
                &format!("appell/restriction n={n} k={k}"),
                table[k].restrict_real()
                    == CliffordPolynomial::x0_power(n, k, ScalarKind::Exact),
            );
            if k > 0 {
                let lhs = table[k]
                    .conj_derivative()
                    .scale_rational(&crate::scalar::ratio(1, 2));
                let rhs = table[k - 1].scale_rational(&rat(k as i64));
                h.exact(&format!("appell/appell-property n={n} k={k}"), lhs == rhs);
            }
        }
    }

    // GCK product semigroup and algebra
    for n in config.dims(&[3, 5]) {
        for a in 0..=8usize {
            for b in 0..=8usize {
                let product = gck_product(
                    &AppellSeries::monomial(n, a),
                    &AppellSeries::monomial(n, b),
                    a + b,
                )?;
                h.exact(
                    &format!("appell/gck-semigroup n={n} a={a} b={b}"),
                    product == AppellSeries::monomial(n, a + b),
                );
            }
        }
        for t in 0..config.trials(25) {
            let fa = gck_extend(&rng.taylor_series(n, 5, 4));
            let fb = gck_extend(&rng.taylor_series(n, 5, 4));
            let fc = gck_extend(&rng.taylor_series(n, 5, 4));
            let trunc = 10;
            let left = gck_product(&gck_product(&fa, &fb, trunc)?, &fc, trunc)?;
            let right = gck_product(&fa, &gck_product(&fb, &fc, trunc)?, trunc)?;
            h.exact(&format!("appell/gck-associativity n={n} t={t}"), left == right);

            // random invertible series: nonzero real constant term
            let constant = Multivector::scalar(
                n,
                Scalar::Exact(rat(rng.int_in(1, 5)) / rat(rng.int_in(1, 3))),
            );
            let mut coeffs = vec![constant];
            coeffs.extend((0..5).map(|_| rng.multivector(n, 2, 4)));
            let series = AppellSeries::new(n, coeffs)?;
            let inverse = gck_inverse(&series, config.max_k)?;
            let product = gck_product(&series, &inverse, config.max_k)?;
            h.exact(
                &format!("appell/gck-inverse n={n} t={t}"),
                product == AppellSeries::monomial(n, 0),
            );
        }
        // (P_1)^{-⊙} ⊙ P_k = P_{k-1}
        let p1 = AppellSeries::monomial(n, 1);
        for k in 1..=config.max_k {
            let quotient = gck_divide(&AppellSeries::monomial(n, k), &p1, k - 1)?;
            h.exact(
                &format!("appell/p1-inverse-shift n={n} k={k}"),
                quotient == AppellSeries::monomial(n, k - 1),
            );
        }
    }

    // n=1 degeneracy: P_k^1 = (x0 + x1 e1)^k
    for k in 0..=8usize {
        h.exact(
            &format!("appell/n1-degeneracy k={k}"),
            crate::appell::appell_polynomial(1, k)? == paravector_power(1, k, ScalarKind::Exact),
        );
    }

    // slice extension satisfies the slice Cauchy-Riemann equations
    for n in config.dims(&[3, 5]) {
        for t in 0..config.trials(25).min(10) {
            let f = rng.taylor_series(n, 5, 4);
            let ext = slice_extend(&f)?;
            let direction = rng.unit_vector(n);
            let grid: Vec<(f64, f64)> =
                (0..6).map(|_| (rng.f64_in(1.2), rng.f64_in(1.2))).collect();
            let resid = ext.slice_cr_residual(&direction, &grid)?;
            h.residual(&format!("appell/slice-cr n={n} t={t}"), resid, 1e-10);
        }
    }
    Ok(())
}

fn fueter_suite(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);

    // closed form versus iterated-Laplacian brute force
    for n in config.dims(&[1, 3, 5]) {
        for j in 0..=config.max_degree.max(10) {
            let brute =
                paravector_power(n, j, ScalarKind::Exact).laplacian_power((n - 1) / 2);
            h.exact(
                &format!("fueter/monomial-closed-form n={n} j={j}"),
                fueter_sce_monomial(n, j)? == brute,
            );
        }
    }

    // quaternionic regression Δ x^{k+2} = -2 (k+2)(k+1) P_k^3
    if config.dims(&[3]).contains(&3) {
        for k in 0..=8usize {
            let lhs = paravector_power(3, k + 2, ScalarKind::Exact).laplacian();
            let factor = rat(-2 * (k as i64 + 2) * (k as i64 + 1));
            let rhs = crate::appell::appell_polynomial(3, k)?.scale_rational(&factor);
            h.exact(&format!("fueter/quaternionic-regression k={k}"), lhs == rhs);
        }
    }

    for n in config.dims(&[3, 5]) {
        for t in 0..config.trials(50) {
            let f = rng.taylor_series(n, config.max_degree, 5);
            h.exact(&format!("fueter/diagram n={n} t={t}"), diagram_check(n, &f)?);
        }

        let spaces = [
            WeightSequence::hardy(),
            WeightSequence::bergman(),
            WeightSequence::dirichlet(),
            WeightSequence::fock(),
        ];
        for t in 0..config.trials(100) {
            let f = rng.taylor_series(n, config.max_degree, 5);
            for space in &spaces {
                let (lhs, rhs) = range_norm_identity(n, space, &f)?;
                h.exact(
                    &format!("fueter/norm-identity n={n} space={} t={t}", space.name()),
                    lhs == rhs,
                );
            }
        }

        // kernel: exhaustive monomial sweep plus membership predicate
        for d in 0..=config.max_k {
            let monomial = TaylorSeries::monomial(n, d);
            let image_zero = fueter_sce_series(n, &monomial)?.is_zero();
            let expected = d + 1 < n;
            h.exact(
                &format!("fueter/kernel-sweep n={n} d={d}"),
                image_zero == expected && kernel_membership(n, &monomial)? == expected,
            );
        }

        // surjectivity witness and isometry on head-zero data
        for t in 0..config.trials(50) {
            let g = gck_extend(&rng.taylor_series(n, config.max_degree, 5));
            let preimage = fueter_sce_preimage(n, &g)?;
            h.exact(
                &format!("fueter/surjectivity n={n} t={t}"),
                fueter_sce_series(n, &preimage)? == g,
            );

            let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); n - 1];
            coeffs.extend_from_slice(rng.taylor_series(n, config.max_degree, 5).coefficients());
            let f = TaylorSeries::new(n, coeffs)?;
            let c = WeightSequence::hardy();
            let (lhs, _) = range_norm_identity(n, &c, &f)?;
            let mut norm_c = Rational::zero();
            for (k, a) in f.coefficients().iter().enumerate() {
                norm_c += c.weight(k) * norm_sq_rational(a);
            }
            let g = gamma(n)?;
            h.exact(&format!("fueter/isometry n={n} t={t}"), lhs == &g * &g * norm_c);
        }
    }
    Ok(())
}

fn elementary_suite(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);
    let trunc = config.max_k.max(12);

    for n in config.dims(&[1, 3, 5]) {
        for kind in ElementaryKind::ALL {
            h.exact(
                &format!("elementary/derivative n={n} fn={}", kind.name()),
                derivative_identity_check(kind, n, trunc)?,
            );
        }
        h.exact(&format!("elementary/parity n={n}"), parity_identity_check(n, trunc)?);
        h.exact(&format!("elementary/pythagorean n={n}"), pythagorean_check(n, trunc)?);
    }

    // growth bounds on random points with certified truncations
    for n in config.dims(&[3, 5]) {
        let g = rational_to_f64(&gamma(n)?).abs();
        for t in 0..config.trials(500) {
            let point = rng.point(n, 2.0);
            let r = point_norm(&point);
            let kind = ElementaryKind::ALL[(t % 5) as usize];
            let bound = match kind {
                ElementaryKind::Exp => g * r.exp(),
                ElementaryKind::Sin | ElementaryKind::Sinh => g * r.sinh(),
                ElementaryKind::Cos | ElementaryKind::Cosh => g * r.cosh(),
            };
            let v = eval_elementary(kind, n, &point, config.tolerance * 1e-2)?;
            let excess = (v.value.norm() - bound - v.tail_bound).max(0.0);
            h.residual(
                &format!("elementary/bound n={n} fn={} t={t}", kind.name()),
                excess,
                config.tolerance,
            );
        }

        // restriction to the real axis
        let sigma = rational_to_f64(&crate::elementary::trig_sign(n));
        let gamma_f = rational_to_f64(&gamma(n)?);
        for t in 0..config.trials(500).min(40) {
            let x0 = rng.f64_in(2.0);
            let mut point = vec![0.0; n + 1];
            point[0] = x0;
            for kind in ElementaryKind::ALL {
                let factor = if kind.is_trigonometric() { gamma_f * sigma } else { gamma_f };
                let v = eval_elementary(kind, n, &point, 1e-13)?;
                let expected = factor * kind.classical_value(x0);
                h.residual(
                    &format!("elementary/restriction n={n} fn={} t={t}", kind.name()),
                    (v.value.real_part().to_f64() - expected).abs(),
                    1e-12,
                );
            }
        }

        // truncations stay exactly monogenic
        for kind in ElementaryKind::ALL {
            let f = TruncatedMonogenic::new(kind, n, 8)?;
            h.exact(
                &format!("elementary/truncation-monogenic n={n} fn={}", kind.name()),
                f.series().materialize()?.dirac().is_zero(),
            );
        }
    }
    Ok(())
}

fn rkhs_operator_cases(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);
    for n in config.dims(&[3]) {
        let fock = SpaceConfig::fock(n);
        let hardy = SpaceConfig::hardy(n);
        for t in 0..config.trials(200) {
            let f = rng.coefficient_function(n, 8, 4, 5);
            let g = rng.coefficient_function(n, 8, 4, 5);
            h.exact(&format!("rkhs/adjoint-fock n={n} t={t}"), adjoint_check(&fock, &f, &g)?);
            h.exact(&format!("rkhs/adjoint-hardy n={n} t={t}"), adjoint_check(&hardy, &f, &g)?);
            h.exact(&format!("rkhs/commutator n={n} t={t}"), commutator_check(&f));
            h.exact(
                &format!("rkhs/backward-shift-section n={n} t={t}"),
                backward_shift(&creation(&f)) == f,
            );
            // M S = I - (P_0 projection)
            let ms = creation(&backward_shift(&f));
            let mut expected = f.clone();
            if !f.coefficient(0).is_zero() {
                expected = CoefficientFunction::from_terms(
                    n,
                    f.support()
                        .filter(|(k, _)| **k != 0)
                        .map(|(k, v)| (*k, v.clone()))
                        .collect::<Vec<_>>(),
                )?;
            }
            h.exact(&format!("rkhs/shift-section-defect n={n} t={t}"), ms == expected);
        }

        // symbolic cross-check of the annihilation operator
        for t in 0..5 {
            let f = rng.coefficient_function(n, 5, 3, 4);
            h.exact(
                &format!("rkhs/annihilation-derivative n={n} t={t}"),
                annihilation_matches_hypercomplex_derivative(&f)?,
            );
        }

        // containment: transported-Fock norm never exceeds intrinsic Fock
        let transported = SpaceConfig::fueter_range(n, WeightSequence::fock().transport(n)?);
        for t in 0..config.trials(200).min(50) {
            let f = rng.coefficient_function(n, 8, 4, 5);
            h.exact(
                &format!("rkhs/fock-containment n={n} t={t}"),
                norm_sq(&transported, &f)? <= norm_sq(&fock, &f)?,
            );
        }
    }

    // divergence witness for the proper-subset example
    h.exact("rkhs/witness-term-identities", fock_witness::verify_terms(512));
    let certificate = fock_witness::harmonic_lower_bound(20);
    h.exact("rkhs/witness-harmonic-certificate", certificate > 10.0);
    h.exact(
        "rkhs/witness-creation-divergence",
        fock_witness::creation_partial_sum(1 << 20) >= certificate,
    );
    h.exact(
        "rkhs/witness-annihilation-divergence",
        fock_witness::annihilation_partial_sum(1_000_000) > 10.0,
    );
    h.exact(
        "rkhs/witness-in-space",
        fock_witness::norm_partial_sum(1_000_000) < fock_witness::norm_upper_bound(),
    );
    Ok(())
}

fn rkhs_kernel_cases(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);
    for n in config.dims(&[3]) {
        let fock = SpaceConfig::fock(n);
        let hardy = SpaceConfig::hardy(n);

        // closed forms on the real line, within certified tails
        for t in 0..config.trials(200).min(40) {
            let (x0, y0) = (rng.f64_in(2.0), rng.f64_in(2.0));
            let mut x = vec![0.0; n + 1];
            let mut y = vec![0.0; n + 1];
            x[0] = x0;
            y[0] = y0;
            let kv = kernel_eval(&fock, &x, &y, 48)?;
            h.residual(
                &format!("rkhs/kernel-fock-real n={n} t={t}"),
                (kv.value.real_part().to_f64() - (x0 * y0).exp()).abs(),
                config.tolerance + kv.tail_bound,
            );

            let (hx, hy) = (x0 * 0.45, y0 * 0.45);
            x[0] = hx;
            y[0] = hy;
            let kv = kernel_eval(&hardy, &x, &y, 160)?;
            h.residual(
                &format!("rkhs/kernel-hardy-real n={n} t={t}"),
                (kv.value.real_part().to_f64() - 1.0 / (1.0 - hx * hy)).abs(),
                config.tolerance + kv.tail_bound,
            );

            // symmetry on the real line
            x[0] = x0 * 0.45;
            y[0] = y0 * 0.45;
            let xy = kernel_eval(&fock, &x, &y, 48)?.value;
            let yx = kernel_eval(&fock, &y, &x, 48)?.value;
            h.residual(
                &format!("rkhs/kernel-symmetry n={n} t={t}"),
                (&xy - &yx).max_abs_component(),
                1e-12,
            );
        }

        // reproducing property, numeric and exact-on-axis
        for t in 0..config.trials(200).min(50) {
            let f = rng.coefficient_function(n, 5, 3, 4);
            let y = rng.point(n, 0.8);
            let resid = reproducing_check(&fock, &f, &y, 5)?;
            h.residual(&format!("rkhs/reproducing-fock n={n} t={t}"), resid, 1e-10);
            let y0 = rng.rational(6);
            let diff = reproducing_check_exact_real(&hardy, &f, &y0)?;
            h.exact(&format!("rkhs/reproducing-exact n={n} t={t}"), diff.is_zero());
        }

        // pointwise bounds
        for t in 0..config.trials(200) {
            let f = rng.coefficient_function(n, 6, 3, 5);
            let fock_point = rng.point(n, 1.5);
            h.exact(
                &format!("rkhs/pointwise-fock n={n} t={t}"),
                pointwise_bound_check(&fock, &f, &fock_point)?,
            );
            let hardy_point = rng.point(n, 0.9);
            h.exact(
                &format!("rkhs/pointwise-hardy n={n} t={t}"),
                pointwise_bound_check(&hardy, &f, &hardy_point)?,
            );
        }
    }
    Ok(())
}

fn relation_cases(config: &VerifyConfig, max_m: usize, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);
    for n in config.dims(&[3]) {
        for m in 0..=max_m {
            for t in 0..config.trials(20) {
                let layers: Vec<TaylorSeries> = (0..=m)
                    .map(|_| rng.taylor_series(n, config.max_degree, 4))
                    .collect();
                let f = PolySliceFunction::new(n, layers)?;
                h.exact(&format!("polyanalytic/relation n={n} m={m} t={t}"), relation_check(&f)?);
                let image = c_map(&f)?;
                h.exact(
                    &format!("polyanalytic/c-map-polyanalytic n={n} m={m} t={t}"),
                    image.dirac_power(m + 1).is_zero(),
                );
                h.exact(
                    &format!("polyanalytic/tau-monogenic n={n} m={m} t={t}"),
                    tau_map(&f)?.materialize()?.dirac().is_zero(),
                );
            }
        }
    }
    Ok(())
}

fn polyanalytic_suite(config: &VerifyConfig, h: &mut Harness) -> Result<()> {
    let mut rng = SplitMix64::new(config.seed);

    for n in config.dims(&[3, 5]) {
        // monomial tables against the iterated-Laplacian oracle
        let m = 2usize;
        for k in 0..=m {
            for j in 0..=config.max_degree {
                let oracle = CliffordPolynomial::x0_power(n, k, ScalarKind::Exact).mul(
                    &paravector_power(n, j, ScalarKind::Exact).laplacian_power((n - 1) / 2),
                )?;
                h.exact(
                    &format!("polyanalytic/c-monomial n={n} k={k} j={j}"),
                    c_map_monomial(n, m, k, j)? == oracle,
                );
                let tau_expected = if k == m {
                    paravector_power(n, j, ScalarKind::Exact)
                        .laplacian_power((n - 1) / 2)
                        .scale_rational(&(factorial(m) * rat(1 << m)))
                } else {
                    CliffordPolynomial::zero(n, ScalarKind::Exact)
                };
                h.exact(
                    &format!("polyanalytic/tau-monomial n={n} k={k} j={j}"),
                    tau_map_monomial(n, m, k, j)? == tau_expected,
                );
            }
        }

        // Appell-like identity for the generalized polynomials
        for k in 0..=6usize.min(config.max_k) {
            for s in 0..=6usize.min(config.max_k) {
                h.exact(
                    &format!("polyanalytic/appell-like n={n} k={k} s={s}"),
                    appell_like_check(n, k, s)?,
                );
            }
        }

        // x0^k P_s is polyanalytic of order exactly k+1
        for k in 1..=3usize {
            let a = appell_poly(n, k, 2)?;
            h.exact(
                &format!("polyanalytic/order n={n} k={k}"),
                a.dirac_power(k + 1).is_zero() && !a.dirac_power(k).is_zero(),
            );
        }
    }

    // n=3 closed form: C(x̄^k x^j) = -2 j (j-1) x0^k P_{j-2}, j > 2
    if config.dims(&[3]).contains(&3) {
        for k in 0..=2usize {
            for j in 3..=config.max_degree.max(5) {
                let expected = CliffordPolynomial::x0_power(3, k, ScalarKind::Exact)
                    .mul(&crate::appell::appell_polynomial(3, j - 2)?)?
                    .scale_rational(&rat(-2 * j as i64 * (j as i64 - 1)));
                h.exact(
                    &format!("polyanalytic/n3-regression k={k} j={j}"),
                    c_map_monomial(3, 2, k, j)? == expected,
                );
            }
        }
    }

    // m=0 reduction to the plain Fueter-Sce machinery
    for n in config.dims(&[3]) {
        let f = rng.taylor_series(n, config.max_degree, 4);
        let single = PolySliceFunction::new(n, vec![f.clone()])?;
        h.exact(
            &format!("polyanalytic/m0-c-map n={n}"),
            c_map(&single)? == fueter_sce_series(n, &f)?.materialize()?,
        );
        h.exact(
            &format!("polyanalytic/m0-tau n={n}"),
            tau_map(&single)? == fueter_sce_series(n, &f)?,
        );

        // right linearity over Clifford constants
        let lambda = rng.multivector(n, 2, 4);
        let layers: Vec<TaylorSeries> =
            (0..=1).map(|_| rng.taylor_series(n, 4, 4)).collect();
        let f = PolySliceFunction::new(n, layers)?;
        let scaled = f.scale_right(&lambda)?;
        h.exact(
            &format!("polyanalytic/right-linearity-c n={n}"),
            c_map(&scaled)? == c_map(&f)?.scale_right(&lambda)?,
        );
        h.exact(
            &format!("polyanalytic/right-linearity-tau n={n}"),
            tau_map(&scaled)? == tau_map(&f)?.scale_right(&lambda)?,
        );

        // numeric global operator agrees with the layer identity
        for t in 0..config.trials(20).min(10) {
            let layers: Vec<TaylorSeries> =
                (0..=2).map(|_| rng.taylor_series(n, 3, 3)).collect();
            let f = PolySliceFunction::new(n, layers)?;
            let stepped = f.apply_global_operator();
            let pt = rng.point(n, 1.0);
            let numeric = global_operator_at(&f.compose()?, &pt)?;
            let symbolic = stepped.compose()?.evaluate(&pt);
            h.residual(
                &format!("polyanalytic/global-operator n={n} t={t}"),
                (&numeric - &symbolic).max_abs_component(),
                1e-8,
            );
        }
    }

    relation_cases(config, 2, h)?;
    Ok(())
}
