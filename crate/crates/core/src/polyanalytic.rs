//! Polyanalytic extensions: the layer decomposition `f = sum_k x̄^k f_k`,
//! the two polyanalytic Fueter-Sce maps `C_{m+1}` and `τ_{m+1}`, the global
//! operator `V`, and the generalized Appell polynomials
//! `A_{k,s}^n = x0^k P_s^n`.
//!
//! `V` is realized on the decomposition layers through
//! `V(x̄^k f) = 2k x̄^{k-1} f` (exact, symbolic); the pointwise
//! nonconstant-coefficient form is kept as a numeric cross-check only,
//! since `x̲/|x̲|^2` is not polynomial.

use crate::appell::{appell_polynomial, require_odd_dimension, slice_extend, AppellSeries, TaylorSeries};
use crate::error::{Error, Result};
use crate::fueter::{fueter_sce_monomial, fueter_sce_series};
use crate::multivector::{Multivector, Paravector};
use crate::polynomial::{conj_paravector_power, CliffordPolynomial};
use crate::scalar::{factorial, rat, Rational, Scalar, ScalarKind};
use num_traits::One;

/// Slice-polyanalytic data of order `m+1`: Taylor coefficients
/// `α_{k,j}` of the layers `f_k` in `f = sum_{k=0}^m x̄^k f_k(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySliceFunction {
    n: usize,
    layers: Vec<TaylorSeries>,
}

impl PolySliceFunction {
    pub fn new(n: usize, layers: Vec<TaylorSeries>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Parse("at least one layer is required".into()));
        }
        for layer in &layers {
            if layer.dimension() != n {
                return Err(Error::DimensionMismatch { left: layer.dimension(), right: n });
            }
        }
        Ok(PolySliceFunction { n, layers })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Top layer index `m` (polyanalytic order minus one).
    pub fn top_layer(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, k: usize) -> &TaylorSeries {
        &self.layers[k]
    }

    pub fn layers(&self) -> &[TaylorSeries] {
        &self.layers
    }

    /// Right scalar action: every layer's coefficients multiplied by `c`
    /// from the right.
    pub fn scale_right(&self, c: &Multivector) -> Result<Self> {
        let mut layers = Vec::with_capacity(self.layers.len());
        for layer in &self.layers {
            let coeffs: Result<Vec<Multivector>> =
                layer.coefficients().iter().map(|a| a.geometric_product(c)).collect();
            layers.push(TaylorSeries::new(self.n, coeffs?)?);
        }
        PolySliceFunction::new(self.n, layers)
    }

    /// Materialize `sum_k x̄^k * (slice extension of layer_k)`.
    pub fn compose(&self) -> Result<CliffordPolynomial> {
        let kind = ScalarKind::Exact;
        let mut out = CliffordPolynomial::zero(self.n, kind);
        for (k, layer) in self.layers.iter().enumerate() {
            let xbar_k = conj_paravector_power(self.n, k, kind);
            out = &out + &xbar_k.mul(&slice_extend(layer)?)?;
        }
        Ok(out)
    }

    /// One symbolic application of the global operator `V`:
    /// `V(sum_k x̄^k f_k) = sum_k 2k x̄^{k-1} f_k`, i.e. the layers shift
    /// down with factor `2k`. Slice monogenic input (one layer) maps to 0.
    pub fn apply_global_operator(&self) -> PolySliceFunction {
        if self.layers.len() == 1 {
            return PolySliceFunction {
                n: self.n,
                layers: vec![TaylorSeries::zero(self.n)],
            };
        }
        let layers: Vec<TaylorSeries> = (1..self.layers.len())
            .map(|k| self.layers[k].scale_rational(&rat(2 * k as i64)))
            .collect();
        PolySliceFunction { n: self.n, layers }
    }
}

/// `sum_k x0^k g_k` from monogenic components.
pub fn monogenic_compose(parts: &[CliffordPolynomial]) -> Result<CliffordPolynomial> {
    let first = parts.first().ok_or_else(|| Error::Parse("no components".into()))?;
    let n = first.dimension();
    let kind = first.kind();
    let mut out = CliffordPolynomial::zero(n, kind);
    for (k, g) in parts.iter().enumerate() {
        out = &out + &CliffordPolynomial::x0_power(n, k, kind).mul(g)?;
    }
    Ok(out)
}

/// Monogenic components of an order-`m+1` polyanalytic polynomial
/// (`dirac^{m+1} p = 0`, checked): the unique `g_k` with
/// `p = sum_{k=0}^m x0^k g_k`, recovered as
/// `g_k = (1/k!) sum_{s=0}^{q-k} (-x0)^{q-k-s}/(q-k-s)! ∂^{q-s} p` with
/// `q = m+1`.
pub fn poly_project(p: &CliffordPolynomial, m: usize) -> Result<Vec<CliffordPolynomial>> {
    let n = p.dimension();
    let kind = p.kind();
    let order = m + 1;
    let mut dirac_powers = Vec::with_capacity(order + 1);
    dirac_powers.push(p.clone());
    for j in 1..=order {
        let next = dirac_powers[j - 1].dirac();
        dirac_powers.push(next);
    }
    if !dirac_powers[order].is_zero() {
        return Err(Error::Domain(format!(
            "input is not polyanalytic of order {order}: dirac^{order} does not vanish"
        )));
    }
    let mut components = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = CliffordPolynomial::zero(n, kind);
        for s in 0..=order - k {
            let t = order - k - s;
            let sign = if t % 2 == 0 { Rational::one() } else { -Rational::one() };
            let factor = sign / factorial(t);
            let term = CliffordPolynomial::x0_power(n, t, kind)
                .mul(&dirac_powers[order - s])?
                .scale_rational(&factor);
            acc = &acc + &term;
        }
        components.push(acc.scale_rational(&(Rational::one() / factorial(k))));
    }
    Ok(components)
}

/// `C_{m+1}` on the monomial `x̄^k x^j`: `x0^k Δ^{(n-1)/2} x^j`.
pub fn c_map_monomial(n: usize, m: usize, k: usize, j: usize) -> Result<CliffordPolynomial> {
    require_odd_dimension(n)?;
    if k > m {
        return Err(Error::IndexOutOfRange { index: k, reason: "layer index exceeds m" });
    }
    CliffordPolynomial::x0_power(n, k, ScalarKind::Exact).mul(&fueter_sce_monomial(n, j)?)
}

/// The first polyanalytic Fueter-Sce map:
/// `C_{m+1}(f) = sum_k x0^k Δ^{(n-1)/2} f_k`. The result satisfies
/// `dirac^{m+1} = 0` exactly.
pub fn c_map(f: &PolySliceFunction) -> Result<CliffordPolynomial> {
    let n = f.dimension();
    require_odd_dimension(n)?;
    let mut out = CliffordPolynomial::zero(n, ScalarKind::Exact);
    for (k, layer) in f.layers().iter().enumerate() {
        let mapped = fueter_sce_series(n, layer)?.materialize()?;
        out = &out + &CliffordPolynomial::x0_power(n, k, ScalarKind::Exact).mul(&mapped)?;
    }
    Ok(out)
}

/// Pointwise value of the global operator
/// `V(p) = ∂_{x0} p + (x̲/|x̲|^2) sum_l x_l ∂_{x_l} p` at an off-axis
/// point.
pub fn global_operator_at(p: &CliffordPolynomial, point: &[f64]) -> Result<Multivector> {
    let n = p.dimension();
    if point.len() != n + 1 {
        return Err(Error::DimensionMismatch { left: point.len(), right: n + 1 });
    }
    let vec_norm_sq: f64 = point[1..].iter().map(|v| v * v).sum();
    if vec_norm_sq == 0.0 {
        return Err(Error::Domain("global operator needs a point off the real axis".into()));
    }
    let mut radial = Multivector::zero(n, ScalarKind::Approx);
    for l in 1..=n {
        let dl = p.partial_derivative(l).evaluate(point);
        radial = &radial + &dl.scale(&Scalar::Approx(point[l]));
    }
    let direction = {
        let mut coords = vec![0.0; n + 1];
        coords[1..].copy_from_slice(&point[1..]);
        Paravector::from_f64(&coords).to_multivector().scale(&Scalar::Approx(1.0 / vec_norm_sq))
    };
    Ok(&p.partial_derivative(0).evaluate(point) + &direction.geometric_product(&radial)?)
}

/// `V^m f` materialized from the proof identity `V^m f = 2^m m! f_m`:
/// returns `2^m m! * (slice extension of the top layer)`.
pub fn v_power_layers(f: &PolySliceFunction, m: usize) -> Result<CliffordPolynomial> {
    if m != f.top_layer() {
        return Err(Error::IndexOutOfRange { index: m, reason: "m must equal the top layer index" });
    }
    let factor = pow2(m) * factorial(m);
    Ok(slice_extend(f.layer(m))?.scale_rational(&factor))
}

fn pow2(m: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..m {
        acc *= rat(2);
    }
    acc
}

/// `τ_{m+1}` on the monomial `x̄^k x^j`: only the top layer survives
/// (`δ_{m,k}`), giving `2^m m! Δ^{(n-1)/2} x^j`.
pub fn tau_map_monomial(n: usize, m: usize, k: usize, j: usize) -> Result<CliffordPolynomial> {
    require_odd_dimension(n)?;
    if k > m {
        return Err(Error::IndexOutOfRange { index: k, reason: "layer index exceeds m" });
    }
    if k != m {
        return Ok(CliffordPolynomial::zero(n, ScalarKind::Exact));
    }
    let factor = pow2(m) * factorial(m);
    Ok(fueter_sce_monomial(n, j)?.scale_rational(&factor))
}

/// The second polyanalytic Fueter-Sce map on layer data:
/// `τ_{m+1}(f) = Δ^{(n-1)/2} V^m f = 2^m m! * (Fueter-Sce image of the top
/// layer)`. The materialization is axially monogenic.
pub fn tau_map(f: &PolySliceFunction) -> Result<AppellSeries> {
    let n = f.dimension();
    require_odd_dimension(n)?;
    let m = f.top_layer();
    let factor = pow2(m) * factorial(m);
    Ok(fueter_sce_series(n, f.layer(m))?.scale_rational(&factor))
}

/// The generalized Appell polyanalytic polynomial `A_{k,s}^n = x0^k P_s^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyAppellPolynomial {
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

impl PolyAppellPolynomial {
    pub fn new(n: usize, k: usize, s: usize) -> Self {
        PolyAppellPolynomial { n, k, s }
    }

    pub fn materialize(&self) -> Result<CliffordPolynomial> {
        appell_poly(self.n, self.k, self.s)
    }
}

/// `A_{k,s}^n = x0^k P_s^n` as an exact polynomial; `A_{0,s} = P_s`.
pub fn appell_poly(n: usize, k: usize, s: usize) -> Result<CliffordPolynomial> {
    CliffordPolynomial::x0_power(n, k, ScalarKind::Exact).mul(&appell_polynomial(n, s)?)
}

/// The Appell-like property
/// `∂̄ A_{k,s} = k A_{k-1,s} + 2s A_{k,s-1}` (negative indices read as 0),
/// checked exactly.
pub fn appell_like_check(n: usize, k: usize, s: usize) -> Result<bool> {
    let lhs = appell_poly(n, k, s)?.conj_derivative();
    let mut rhs = CliffordPolynomial::zero(n, ScalarKind::Exact);
    if k > 0 {
        rhs = &rhs + &appell_poly(n, k - 1, s)?.scale_rational(&rat(k as i64));
    }
    if s > 0 {
        rhs = &rhs + &appell_poly(n, k, s - 1)?.scale_rational(&rat(2 * s as i64));
    }
    Ok(lhs == rhs)
}

/// The relation `∂^m C_{m+1}(f) = 2^{-m} τ_{m+1}(f)`, with both routes
/// computed independently and compared exactly.
pub fn relation_check(f: &PolySliceFunction) -> Result<bool> {
    let m = f.top_layer();
    let lhs = c_map(f)?.dirac_power(m);
    let rhs = tau_map(f)?
        .materialize()?
        .scale_rational(&(Rational::one() / pow2(m)));
    Ok(lhs == rhs)
}
