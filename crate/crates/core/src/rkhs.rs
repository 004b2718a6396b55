//! Coefficient-space Hilbert-module machinery over the Appell system:
//! weighted inner products, truncated reproducing kernels with certified
//! tails, pointwise bounds, and the creation/annihilation/shift operator
//! algebra of the Clifford-Appell-Fock and Clifford-Appell-Hardy modules.
//!
//! Operators act on coefficient functions, never on materialized
//! polynomials; materialization exists only to cross-check the annihilation
//! operator against the hypercomplex derivative.

use crate::appell::{appell_evaluator, appell_on_real_axis, AppellEvaluator, AppellSeries};
use crate::error::{Error, Result};
use crate::fueter::{norm_sq_rational, WeightSequence};
use crate::multivector::{point_norm, Multivector};
use crate::scalar::{factorial, rat, rational_to_f64, Rational, Scalar, ScalarKind};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Finitely supported Appell coefficient data `k -> α_k`, representing
/// `f = sum_k P_k^n(x) α_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientFunction {
    n: usize,
    coeffs: BTreeMap<usize, Multivector>,
}

impl CoefficientFunction {
    pub fn zero(n: usize) -> Self {
        CoefficientFunction { n, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (usize, Multivector)>,
    ) -> Result<Self> {
        let mut f = CoefficientFunction::zero(n);
        for (k, alpha) in terms {
            if alpha.dimension() != n {
                return Err(Error::DimensionMismatch { left: alpha.dimension(), right: n });
            }
            if alpha.kind() != ScalarKind::Exact {
                return Err(Error::ScalarKindMismatch);
            }
            if !alpha.is_zero() {
                let entry = match f.coeffs.remove(&k) {
                    Some(existing) => &existing + &alpha,
                    None => alpha,
                };
                if !entry.is_zero() {
                    f.coeffs.insert(k, entry);
                }
            }
        }
        Ok(f)
    }

    /// `P_k` with coefficient 1.
    pub fn basis(n: usize, k: usize) -> Self {
        CoefficientFunction::from_terms(n, [(k, Multivector::one(n, ScalarKind::Exact))])
            .expect("valid basis element")
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, k: usize) -> Multivector {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.n, ScalarKind::Exact))
    }

    pub fn support(&self) -> impl Iterator<Item = (&usize, &Multivector)> {
        self.coeffs.iter()
    }

    pub fn max_index(&self) -> usize {
        self.coeffs.keys().max().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_series(&self) -> AppellSeries {
        let mut coeffs =
            vec![Multivector::zero(self.n, ScalarKind::Exact); self.max_index() + 1];
        for (&k, alpha) in &self.coeffs {
            coeffs[k] = alpha.clone();
        }
        AppellSeries::new(self.n, coeffs).expect("validated on construction")
    }

    /// Numeric value `sum_k P_k(x) α_k`.
    pub fn evaluate(&self, evaluator: &AppellEvaluator, point: &[f64]) -> Result<Multivector> {
        let mut acc = Multivector::zero(self.n, ScalarKind::Approx);
        for (&k, alpha) in &self.coeffs {
            let pk = evaluator.eval(k, point);
            acc = &acc + &pk.geometric_product(&alpha.to_approx())?;
        }
        Ok(acc)
    }
}

/// Which coefficient Hilbert module.
#[derive(Debug, Clone)]
pub enum SpaceKind {
    /// `b_k = k!`; defined on all of `R^{n+1}`.
    Fock,
    /// `b_k = 1`; defined on the open unit ball.
    Hardy,
    /// Weights transported from a slice-side space across the Fueter-Sce
    /// map.
    FueterRange(WeightSequence),
}

/// A coefficient module over `R_n` with weights `b_k`.
#[derive(Debug, Clone)]
pub struct SpaceConfig {
    pub kind: SpaceKind,
    pub n: usize,
}

impl SpaceConfig {
    pub fn fock(n: usize) -> Self {
        SpaceConfig { kind: SpaceKind::Fock, n }
    }

    pub fn hardy(n: usize) -> Self {
        SpaceConfig { kind: SpaceKind::Hardy, n }
    }

    pub fn fueter_range(n: usize, weights: WeightSequence) -> Self {
        SpaceConfig { kind: SpaceKind::FueterRange(weights), n }
    }

    pub fn weight(&self, k: usize) -> Rational {
        match &self.kind {
            SpaceKind::Fock => factorial(k),
            SpaceKind::Hardy => Rational::one(),
            SpaceKind::FueterRange(w) => w.weight(k),
        }
    }

    fn check_dimension(&self, f: &CoefficientFunction) -> Result<()> {
        if f.dimension() != self.n {
            return Err(Error::DimensionMismatch { left: f.dimension(), right: self.n });
        }
        Ok(())
    }
}

/// `<f,g> = sum_k b_k conj(α_k) β_k`, Clifford-valued and exact.
pub fn inner_product(
    space: &SpaceConfig,
    f: &CoefficientFunction,
    g: &CoefficientFunction,
) -> Result<Multivector> {
    space.check_dimension(f)?;
    space.check_dimension(g)?;
    let mut acc = Multivector::zero(space.n, ScalarKind::Exact);
    for (&k, alpha) in &f.coeffs {
        let beta = g.coefficient(k);
        if beta.is_zero() {
            continue;
        }
        let term = alpha.conjugate().geometric_product(&beta)?;
        acc = &acc + &term.scale_rational(&space.weight(k));
    }
    Ok(acc)
}

/// `||f||^2 = Re <f,f> = sum_k b_k |α_k|^2`, exact and nonnegative.
pub fn norm_sq(space: &SpaceConfig, f: &CoefficientFunction) -> Result<Rational> {
    space.check_dimension(f)?;
    let mut acc = Rational::zero();
    for (&k, alpha) in &f.coeffs {
        acc += space.weight(k) * norm_sq_rational(alpha);
    }
    Ok(acc)
}

/// A truncated kernel value with a bound on the dropped tail.
#[derive(Debug, Clone)]
pub struct KernelValue {
    pub value: Multivector,
    pub truncation: usize,
    pub tail_bound: f64,
}

/// Truncated reproducing kernel
/// `K(x,y) = sum_{k<=K} P_k(x) conj(P_k(y)) / b_k`.
///
/// Tail bounds use `|P_k(x)| <= |x|^k` and the paravector modulus
/// (`P_k` values lie in `span{1, ω}`, so `|ab| = |a||b|` termwise):
/// factorial tail for Fock, geometric tail for Hardy (needs
/// `|x||y| < 1`). Kernel evaluation is provided for these two presets.
pub fn kernel_eval(
    space: &SpaceConfig,
    x: &[f64],
    y: &[f64],
    trunc: usize,
) -> Result<KernelValue> {
    if x.len() != space.n + 1 || y.len() != space.n + 1 {
        return Err(Error::DimensionMismatch {
            left: x.len().max(y.len()),
            right: space.n + 1,
        });
    }
    let t = point_norm(x) * point_norm(y);
    let tail_bound = match &space.kind {
        SpaceKind::Fock => {
            // sum_{k>K} t^k/k! <= t^{K+1}/(K+1)! * e^t
            let mut term = 1.0f64;
            for j in 1..=trunc + 1 {
                term *= t / j as f64;
            }
            term * t.exp()
        }
        SpaceKind::Hardy => {
            if point_norm(x) >= 1.0 || point_norm(y) >= 1.0 {
                return Err(Error::Domain(format!(
                    "hardy kernel needs |x|, |y| < 1, got |x|={}, |y|={}",
                    point_norm(x),
                    point_norm(y)
                )));
            }
            t.powi(trunc as i32 + 1) / (1.0 - t)
        }
        SpaceKind::FueterRange(w) => {
            return Err(Error::Domain(format!(
                "kernel evaluation is provided for the fock and hardy presets, not '{}'",
                w.name()
            )))
        }
    };

    let evaluator = appell_evaluator(space.n, trunc)?;
    let mut value = Multivector::zero(space.n, ScalarKind::Approx);
    for k in 0..=trunc {
        let pk_x = evaluator.eval(k, x);
        let pk_y_conj = evaluator.eval(k, y).conjugate();
        let inv_b = 1.0 / rational_to_f64(&space.weight(k));
        value = &value + &pk_x.geometric_product(&pk_y_conj)?.scale(&Scalar::Approx(inv_b));
    }
    Ok(KernelValue { value, truncation: trunc, tail_bound })
}

/// Residual of the reproducing property `<K_y, f> = f(y)` computed
/// numerically with the kernel truncated at `trunc >= max support of f`.
pub fn reproducing_check(
    space: &SpaceConfig,
    f: &CoefficientFunction,
    y: &[f64],
    trunc: usize,
) -> Result<f64> {
    space.check_dimension(f)?;
    if f.max_index() > trunc {
        return Err(Error::IndexOutOfRange {
            index: f.max_index(),
            reason: "support of f exceeds kernel truncation",
        });
    }
    let evaluator = appell_evaluator(space.n, trunc)?;
    // <K_y, f> = sum_k b_k conj(conj(P_k(y))/b_k) α_k = sum_k P_k(y) α_k
    let mut pairing = Multivector::zero(space.n, ScalarKind::Approx);
    for (&k, alpha) in &f.coeffs {
        let kernel_coeff = evaluator
            .eval(k, y)
            .conjugate()
            .scale(&Scalar::Approx(1.0 / rational_to_f64(&space.weight(k))));
        let term = kernel_coeff
            .conjugate()
            .geometric_product(&alpha.to_approx())?
            .scale(&Scalar::Approx(rational_to_f64(&space.weight(k))));
        pairing = &pairing + &term;
    }
    let direct = f.evaluate(&evaluator, y)?;
    Ok((&pairing - &direct).max_abs_component())
}

/// Exact reproducing check on the real axis: both `<K_y, f>` and `f(y0)`
/// as exact multivectors (`P_k(y0) = y0^k`), returning the difference.
pub fn reproducing_check_exact_real(
    space: &SpaceConfig,
    f: &CoefficientFunction,
    y0: &Rational,
) -> Result<Multivector> {
    space.check_dimension(f)?;
    let mut pairing = Multivector::zero(space.n, ScalarKind::Exact);
    let mut direct = Multivector::zero(space.n, ScalarKind::Exact);
    for (&k, alpha) in &f.coeffs {
        let pk = appell_on_real_axis(k, y0);
        let b = space.weight(k);
        // kernel coefficient conj(P_k(y0))/b_k is the real scalar y0^k/b_k
        let kernel_coeff = &pk / &b;
        pairing = &pairing + &alpha.scale_rational(&(b * kernel_coeff));
        direct = &direct + &alpha.scale_rational(&pk);
    }
    Ok(&pairing - &direct)
}

/// Check the pointwise evaluation bound `|f(x)| <= C(x) ||f||`:
/// `C = 2^{n/2} e^{|x|^2/2}` for Fock, `C = (1-|x|^2)^{-1/2}` for Hardy.
pub fn pointwise_bound_check(
    space: &SpaceConfig,
    f: &CoefficientFunction,
    x: &[f64],
) -> Result<bool> {
    space.check_dimension(f)?;
    let r = point_norm(x);
    let factor = match &space.kind {
        SpaceKind::Fock => (2.0f64).powf(space.n as f64 / 2.0) * (r * r / 2.0).exp(),
        SpaceKind::Hardy => {
            if r >= 1.0 {
                return Err(Error::Domain(format!("hardy bound needs |x| < 1, got {r}")));
            }
            1.0 / (1.0 - r * r).sqrt()
        }
        SpaceKind::FueterRange(w) => {
            return Err(Error::Domain(format!(
                "pointwise bound closed forms cover the fock and hardy presets, not '{}'",
                w.name()
            )))
        }
    };
    let evaluator = appell_evaluator(space.n, f.max_index())?;
    let lhs = f.evaluate(&evaluator, x)?.norm();
    let rhs = factor * rational_to_f64(&norm_sq(space, f)?).sqrt();
    Ok(lhs <= rhs + 1e-10)
}

/// Creation / shift operator `M_{P_1}`: `(Mf)_{k+1} = f_k`.
pub fn creation(f: &CoefficientFunction) -> CoefficientFunction {
    let mut coeffs = BTreeMap::new();
    for (&k, alpha) in &f.coeffs {
        coeffs.insert(k + 1, alpha.clone());
    }
    CoefficientFunction { n: f.n, coeffs }
}

/// Annihilation operator `∂̄/2` on coefficients: `(Af)_k = (k+1) f_{k+1}`.
pub fn annihilation(f: &CoefficientFunction) -> CoefficientFunction {
    let mut coeffs = BTreeMap::new();
    for (&k, alpha) in &f.coeffs {
        if k > 0 {
            coeffs.insert(k - 1, alpha.scale_rational(&rat(k as i64)));
        }
    }
    CoefficientFunction { n: f.n, coeffs }
}

/// Backward shift `S`: `(Sf)_k = f_{k+1}`; the index-0 coefficient is
/// dropped.
pub fn backward_shift(f: &CoefficientFunction) -> CoefficientFunction {
    let mut coeffs = BTreeMap::new();
    for (&k, alpha) in &f.coeffs {
        if k > 0 {
            coeffs.insert(k - 1, alpha.clone());
        }
    }
    CoefficientFunction { n: f.n, coeffs }
}

/// Adjoint identities, exactly: Fock pairs `A` with `M`
/// (`<A f, g> = <f, M g>`), Hardy pairs `S` with `M`
/// (`<S f, g> = <f, M g>`).
pub fn adjoint_check(
    space: &SpaceConfig,
    f: &CoefficientFunction,
    g: &CoefficientFunction,
) -> Result<bool> {
    let lowered = match &space.kind {
        SpaceKind::Fock => annihilation(f),
        SpaceKind::Hardy => backward_shift(f),
        SpaceKind::FueterRange(w) => {
            return Err(Error::Domain(format!(
                "adjoint identities are stated for the fock and hardy presets, not '{}'",
                w.name()
            )))
        }
    };
    let lhs = inner_product(space, &lowered, g)?;
    let rhs = inner_product(space, f, &creation(g))?;
    Ok(lhs == rhs)
}

/// `[M, ∂̄/2] = I` in the proof's ordering: `A(M f) - M(A f) = f`, checked
/// coefficient-wise and exactly.
pub fn commutator_check(f: &CoefficientFunction) -> bool {
    let lhs_a = annihilation(&creation(f));
    let lhs_b = creation(&annihilation(f));
    let max = lhs_a.max_index().max(lhs_b.max_index()).max(f.max_index());
    (0..=max).all(|k| {
        let diff = &(&lhs_a.coefficient(k) - &lhs_b.coefficient(k)) - &f.coefficient(k);
        diff.is_zero()
    })
}

/// Symbolic cross-check of the annihilation operator: materialize `f`,
/// apply `∂̄/2`, and compare with the materialization of `A f`.
pub fn annihilation_matches_hypercomplex_derivative(f: &CoefficientFunction) -> Result<bool> {
    let direct = f.to_series().materialize()?.conj_derivative().scale_rational(
        &crate::scalar::ratio(1, 2),
    );
    let via_coefficients = annihilation(f).to_series().materialize()?;
    Ok(direct == via_coefficients)
}

/// Norm-sum terms of the proper-subset witness
/// `g = sum_k P_k / sqrt((k+1)(k+1)!)` showing that the creation and
/// annihilation operators have strictly smaller domains than the Fock
/// module itself, as exact rationals.
///
/// `g` itself has irrational coefficients, but every Fock norm term is
/// rational: `k! α_k^2 = 1/(k+1)^2` (finite), while after the shift the
/// terms are `1/k` and after annihilation `(k+1)/(k+2)^2` (both divergent).
pub mod fock_witness {
    use super::*;

    /// `k! / ((k+1)(k+1)!)`, simplified form `1/(k+1)^2`.
    pub fn norm_term(k: usize) -> Rational {
        factorial(k) / (rat(k as i64 + 1) * factorial(k + 1))
    }

    /// Fock norm term of `M g` at index `k >= 1`: `k!/(k * k!) = 1/k`.
    pub fn creation_term(k: usize) -> Rational {
        assert!(k >= 1);
        factorial(k) / (rat(k as i64) * factorial(k))
    }

    /// Fock norm term of `(∂̄/2) g` at index `k`:
    /// `k! (k+1)^2 / ((k+2)(k+2)!) = (k+1)/(k+2)^2`.
    pub fn annihilation_term(k: usize) -> Rational {
        let kp1 = rat(k as i64 + 1);
        factorial(k) * &kp1 * &kp1 / (rat(k as i64 + 2) * factorial(k + 2))
    }

    /// Verify the three closed forms above for all `k <= max_k`,
    /// maintaining the factorials incrementally.
    pub fn verify_terms(max_k: usize) -> bool {
        let mut kf = Rational::one();
        for k in 0..=max_k {
            if k > 0 {
                kf *= rat(k as i64);
            }
            let kp1 = rat(k as i64 + 1);
            let kp2 = rat(k as i64 + 2);
            let kp1f = &kf * &kp1;
            let kp2f = &kp1f * &kp2;
            if &kf / (&kp1 * &kp1f) != Rational::one() / (&kp1 * &kp1) {
                return false;
            }
            if k > 0 && &kf / (rat(k as i64) * &kf) != Rational::one() / rat(k as i64) {
                return false;
            }
            if &kf * &kp1 * &kp1 / (&kp2 * &kp2f) != &kp1 / (&kp2 * &kp2) {
                return false;
            }
        }
        true
    }

    /// Divergence certificate by dyadic grouping:
    /// `sum_{k=1}^{2^m} 1/k >= 1 + m/2`, no floating point involved.
    pub fn harmonic_lower_bound(dyadic_blocks: u32) -> f64 {
        1.0 + dyadic_blocks as f64 / 2.0
    }

    /// f64 partial sum `sum_{k=1}^{limit} 1/k` (diagnostic alongside the
    /// certificate).
    pub fn creation_partial_sum(limit: usize) -> f64 {
        (1..=limit).map(|k| 1.0 / k as f64).sum()
    }

    /// f64 partial sum of the annihilation terms `(k+1)/(k+2)^2`.
    pub fn annihilation_partial_sum(limit: usize) -> f64 {
        (0..limit)
            .map(|k| (k as f64 + 1.0) / ((k as f64 + 2.0) * (k as f64 + 2.0)))
            .sum()
    }

    /// f64 partial sum of the witness's own norm terms `1/(k+1)^2`
    /// (closed form verified against the factorial route by
    /// [`verify_terms`]).
    pub fn norm_partial_sum(limit: usize) -> f64 {
        (0..limit).map(|k| 1.0 / ((k as f64 + 1.0) * (k as f64 + 1.0))).sum()
    }

    /// Upper bound for `||g||^2 = sum 1/(k+1)^2`: telescoping gives `< 2`.
    pub fn norm_upper_bound() -> f64 {
        2.0
    }
}
