//! Clifford-Appell polynomials `P_k^n`, the generalized CK-extension as a
//! change of basis between Taylor data on the real line and the Appell
//! system, and the GCK product/inverse on truncated coefficient series.
//!
//! `P_k^n(x) = sum_s T_s^k(n) x^{k-s} x̄^s` restricts to `x0^k` on the real
//! line and is axially monogenic, so the extension that sends `x0^k` to
//! `P_k^n` is realized here as a coefficient relabeling; the symbolic Dirac
//! operator independently certifies monogenicity of every materialization.

use crate::error::{Error, Result};
use crate::multivector::{BladeIndex, Multivector};
use crate::polynomial::CliffordPolynomial;
use crate::scalar::{factorial, rat, Rational, Scalar, ScalarKind};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Odd `n` with `1 <= n <= 11`; the Fueter-Sce power `(n-1)/2` must be a
/// nonnegative integer.
pub fn require_odd_dimension(n: usize) -> Result<()> {
    if n == 0 || n > crate::multivector::MAX_DIMENSION {
        return Err(Error::UnsupportedDimension { n, reason: "supported range is 1..=11" });
    }
    if n % 2 == 0 {
        return Err(Error::UnsupportedDimension { n, reason: "only odd dimensions are supported" });
    }
    Ok(())
}

/// Rising factorial `(a)_s = a (a+1) ... (a+s-1)`, `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, s: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..s {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Binomial coefficient as an exact rational.
pub fn binomial(k: usize, s: usize) -> Rational {
    if s > k {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..s.min(k - s) {
        num *= BigInt::from(k - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// `T_s^k(n) = C(k,s) ((n+1)/2)_{k-s} ((n-1)/2)_s / (n)_k`.
pub fn t_coefficient(n: usize, k: usize, s: usize) -> Result<Rational> {
    if n < 1 {
        return Err(Error::UnsupportedDimension { n, reason: "n must be >= 1" });
    }
    if s > k {
        return Err(Error::IndexOutOfRange { index: s, reason: "requires 0 <= s <= k" });
    }
    let half_up = Rational::new(BigInt::from(n as i64 + 1), BigInt::from(2));
    let half_down = Rational::new(BigInt::from(n as i64 - 1), BigInt::from(2));
    let value = binomial(k, s) * pochhammer(&half_up, k - s) * pochhammer(&half_down, s)
        / pochhammer(&rat(n as i64), k);
    Ok(value)
}

/// All `T_s^k(n)` for `k <= max_k`, with the Pochhammer prefixes shared
/// across cells instead of recomputed per (k, s).
pub fn t_coefficient_table(n: usize, max_k: usize) -> Result<Vec<Vec<Rational>>> {
    if n < 1 {
        return Err(Error::UnsupportedDimension { n, reason: "n must be >= 1" });
    }
    let half_up = Rational::new(BigInt::from(n as i64 + 1), BigInt::from(2));
    let half_down = Rational::new(BigInt::from(n as i64 - 1), BigInt::from(2));
    let prefix = |base: &Rational| -> Vec<Rational> {
        let mut out = Vec::with_capacity(max_k + 1);
        out.push(Rational::one());
        for j in 0..max_k {
            let term = base + rat(j as i64);
            let next = &out[j] * term;
            out.push(next);
        }
        out
    };
    let up = prefix(&half_up);
    let down = prefix(&half_down);
    let denom = prefix(&rat(n as i64));
    let mut table = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let mut row = Vec::with_capacity(k + 1);
        let mut binom = Rational::one();
        for s in 0..=k {
            if s > 0 {
                binom = binom * rat((k - s + 1) as i64) / rat(s as i64);
            }
            row.push(&binom * &up[k - s] * &down[s] / &denom[k]);
        }
        table.push(row);
    }
    Ok(table)
}

/// Shared per-dimension table of `P_0^n ... P_K^n`; generation of the
/// polynomials is the hot path for every materialization, so computed
/// tables are kept and extended on demand.
pub fn appell_table(n: usize, max_k: usize) -> Result<Arc<Vec<CliffordPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<CliffordPolynomial>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(table) = cache.lock().unwrap().get(&n) {
        if table.len() > max_k {
            return Ok(table.clone());
        }
    }
    let table = Arc::new(compute_appell_table(n, max_k)?);
    let mut guard = cache.lock().unwrap();
    let entry = guard.entry(n).or_insert_with(|| table.clone());
    if entry.len() < table.len() {
        *entry = table.clone();
    }
    Ok(entry.clone())
}

/// All of `P_0^n ... P_K^n` as exact polynomials.
pub fn appell_polynomials_upto(n: usize, max_k: usize) -> Result<Vec<CliffordPolynomial>> {
    Ok(appell_table(n, max_k)?[..=max_k].to_vec())
}

/// Uses `x x̄ = x̄ x = x0^2 + |x̲|^2` (a central scalar) to evaluate
/// `x^{k-s} x̄^s = N^{min} x^{..}` instead of multiplying two large
/// polynomials per term.
fn compute_appell_table(n: usize, max_k: usize) -> Result<Vec<CliffordPolynomial>> {
    require_odd_dimension(n)?;
    let kind = ScalarKind::Exact;
    let x = CliffordPolynomial::paravector_variable(n, kind);
    let xbar = {
        let mut p = CliffordPolynomial::variable(n, 0, kind);
        for i in 1..=n {
            let xi = CliffordPolynomial::variable(n, i, kind);
            p = &p - &xi.scale_left(&Multivector::basis_vector(n, i, kind))?;
        }
        p
    };
    let norm_poly = x.mul(&xbar)?;

    let pow_table = |base: &CliffordPolynomial, upto: usize| -> Result<Vec<CliffordPolynomial>> {
        let mut table = Vec::with_capacity(upto + 1);
        table.push(CliffordPolynomial::one(n, kind));
        for j in 1..=upto {
            let next = table[j - 1].mul(base)?;
            table.push(next);
        }
        Ok(table)
    };
    let x_pows = pow_table(&x, max_k)?;
    let xbar_pows = pow_table(&xbar, max_k)?;
    let n_pows = pow_table(&norm_poly, max_k / 2)?;
    let t = t_coefficient_table(n, max_k)?;

    let mut out = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let mut p = CliffordPolynomial::zero(n, kind);
        for s in 0..=k {
            let (a, b) = (k - s, s);
            let m = a.min(b);
            let base = if a >= b { &x_pows[a - b] } else { &xbar_pows[b - a] };
            let term = n_pows[m].mul(base)?;
            p = &p + &term.scale_rational(&t[k][s]);
        }
        out.push(p);
    }
    Ok(out)
}

/// The Clifford-Appell polynomial `P_k^n` as an exact polynomial.
pub fn appell_polynomial(n: usize, k: usize) -> Result<CliffordPolynomial> {
    Ok(appell_table(n, k)?[k].clone())
}

fn validate_coefficients(n: usize, coeffs: &[Multivector]) -> Result<ScalarKind> {
    let mut kind = ScalarKind::Exact;
    for (i, c) in coeffs.iter().enumerate() {
        if c.dimension() != n {
            return Err(Error::DimensionMismatch { left: c.dimension(), right: n });
        }
        if i == 0 {
            kind = c.kind();
        } else if c.kind() != kind {
            return Err(Error::ScalarKindMismatch);
        }
    }
    Ok(kind)
}

fn trim_trailing_zeros(coeffs: &[Multivector]) -> &[Multivector] {
    let mut len = coeffs.len();
    while len > 0 && coeffs[len - 1].is_zero() {
        len -= 1;
    }
    &coeffs[..len]
}

macro_rules! series_common {
    ($name:ident) => {
        impl $name {
            pub fn new(n: usize, coeffs: Vec<Multivector>) -> Result<Self> {
                validate_coefficients(n, &coeffs)?;
                Ok($name { n, coeffs })
            }

            pub fn zero(n: usize) -> Self {
                $name { n, coeffs: Vec::new() }
            }

            /// Basis element: coefficient 1 at index `k`.
            pub fn monomial(n: usize, k: usize) -> Self {
                let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); k + 1];
                coeffs[k] = Multivector::one(n, ScalarKind::Exact);
                $name { n, coeffs }
            }

            pub fn dimension(&self) -> usize {
                self.n
            }

            /// Highest stored index (trailing zeros permitted).
            pub fn order(&self) -> usize {
                self.coeffs.len().saturating_sub(1)
            }

            pub fn coefficient(&self, k: usize) -> Multivector {
                self.coeffs
                    .get(k)
                    .cloned()
                    .unwrap_or_else(|| Multivector::zero(self.n, ScalarKind::Exact))
            }

            pub fn coefficients(&self) -> &[Multivector] {
                &self.coeffs
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(|c| c.is_zero())
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                if self.n != other.n {
                    return Err(Error::DimensionMismatch { left: self.n, right: other.n });
                }
                let len = self.coeffs.len().max(other.coeffs.len());
                let mut coeffs = Vec::with_capacity(len);
                for k in 0..len {
                    coeffs.push(&self.coefficient(k) + &other.coefficient(k));
                }
                Self::new(self.n, coeffs)
            }

            pub fn scale_rational(&self, r: &Rational) -> Self {
                $name {
                    n: self.n,
                    coeffs: self.coeffs.iter().map(|c| c.scale_rational(r)).collect(),
                }
            }

            /// Multiply every coefficient by `c` from the right.
            pub fn scale_right(&self, c: &Multivector) -> Result<Self> {
                let mut coeffs = Vec::with_capacity(self.coeffs.len());
                for a in &self.coeffs {
                    coeffs.push(a.geometric_product(c)?);
                }
                Self::new(self.n, coeffs)
            }

            pub fn truncate(&self, order: usize) -> Self {
                let end = self.coeffs.len().min(order + 1);
                $name { n: self.n, coeffs: self.coeffs[..end].to_vec() }
            }
        }

        impl PartialEq for $name {
            fn eq(&self, other: &Self) -> bool {
                self.n == other.n
                    && trim_trailing_zeros(&self.coeffs) == trim_trailing_zeros(&other.coeffs)
            }
        }
    };
}

/// Taylor data on the real line: coefficient of `x0^k` at index `k`.
#[derive(Debug, Clone)]
pub struct TaylorSeries {
    n: usize,
    coeffs: Vec<Multivector>,
}

/// Appell data: coefficient of `P_k^n` at index `k`.
#[derive(Debug, Clone)]
pub struct AppellSeries {
    n: usize,
    coeffs: Vec<Multivector>,
}

series_common!(TaylorSeries);
series_common!(AppellSeries);

impl TaylorSeries {
    /// Formal derivative of given order: `a'_k = (k+m)!/k! a_{k+m}`.
    pub fn derivative(&self, order: usize) -> TaylorSeries {
        if self.coeffs.len() <= order {
            return TaylorSeries::zero(self.n);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - order);
        for k in 0..self.coeffs.len() - order {
            let factor = factorial(k + order) / factorial(k);
            coeffs.push(self.coeffs[k + order].scale_rational(&factor));
        }
        TaylorSeries { n: self.n, coeffs }
    }
}

/// Generalized CK-extension: Taylor data to Appell data. The bases are
/// aligned (`P_k^n = GCK[x0^k]`) so the coefficients carry over unchanged.
pub fn gck_extend(f0: &TaylorSeries) -> AppellSeries {
    AppellSeries { n: f0.n, coeffs: f0.coeffs.clone() }
}

/// Restriction to the real line; inverse of [`gck_extend`].
pub fn gck_restrict(f: &AppellSeries) -> TaylorSeries {
    TaylorSeries { n: f.n, coeffs: f.coeffs.clone() }
}

/// Slice extension `sum_k x^k a_k` as an exact polynomial.
pub fn slice_extend(f0: &TaylorSeries) -> Result<CliffordPolynomial> {
    let n = f0.n;
    let kind = validate_coefficients(n, &f0.coeffs)?;
    let x = CliffordPolynomial::paravector_variable(n, kind);
    let mut power = CliffordPolynomial::one(n, kind);
    let mut out = CliffordPolynomial::zero(n, kind);
    for (k, a) in f0.coeffs.iter().enumerate() {
        if k > 0 {
            power = power.mul(&x)?;
        }
        if !a.is_zero() {
            out = &out + &power.scale_right(a)?;
        }
    }
    Ok(out)
}

impl AppellSeries {
    /// `sum_k P_k^n(x) alpha_k` as an exact polynomial (monogenic by
    /// construction; `dirac` of the result certifies it independently).
    pub fn materialize(&self) -> Result<CliffordPolynomial> {
        require_odd_dimension(self.n)?;
        let kind = validate_coefficients(self.n, &self.coeffs)?;
        if kind != ScalarKind::Exact {
            return Err(Error::ScalarKindMismatch);
        }
        let table = appell_table(self.n, self.order())?;
        let mut out = CliffordPolynomial::zero(self.n, kind);
        for (k, alpha) in self.coeffs.iter().enumerate() {
            if !alpha.is_zero() {
                out = &out + &table[k].scale_right(alpha)?;
            }
        }
        Ok(out)
    }
}

/// GCK product: Cauchy product of the real-line restrictions, coefficients
/// multiplying in left-to-right argument order, truncated at `trunc`.
pub fn gck_product(a: &AppellSeries, b: &AppellSeries, trunc: usize) -> Result<AppellSeries> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n, right: b.n });
    }
    let n = a.n;
    let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); trunc + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() || i > trunc {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            let k = i + j;
            if k > trunc {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            coeffs[k] = &coeffs[k] + &ai.geometric_product(bj)?;
        }
    }
    AppellSeries::new(n, coeffs)
}

fn invertible_real_scalar(c: &Multivector) -> Result<Rational> {
    let scalar = c.real_part();
    let rest = c.grade_projection(0).map(|g| &(-&g) + c);
    match (scalar, rest) {
        (Scalar::Exact(r), Ok(rest)) if !r.is_zero() && rest.is_zero() => Ok(r),
        _ => Err(Error::NonInvertible {
            reason: "requires a nonzero real scalar constant term",
        }),
    }
}

/// GCK multiplicative inverse: the formal reciprocal of the restriction,
/// re-extended. The constant term must be a nonzero real scalar.
/// `gck_product(a, gck_inverse(a), K)` is `1` through order `K`.
pub fn gck_inverse(a: &AppellSeries, trunc: usize) -> Result<AppellSeries> {
    let a0 = invertible_real_scalar(&a.coefficient(0))?;
    let n = a.n;
    let inv_a0 = Rational::one() / a0;
    let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); trunc + 1];
    coeffs[0] = Multivector::scalar(n, Scalar::Exact(inv_a0.clone()));
    for k in 1..=trunc {
        let mut acc = Multivector::zero(n, ScalarKind::Exact);
        for i in 1..=k {
            let ai = a.coefficient(i);
            if ai.is_zero() {
                continue;
            }
            acc = &acc + &ai.geometric_product(&coeffs[k - i])?;
        }
        coeffs[k] = (-&acc).scale_rational(&inv_a0);
    }
    AppellSeries::new(n, coeffs)
}

/// Left GCK quotient `divisor^{-⊙} ⊙ f`, i.e. the extension of
/// `restriction(divisor)^{-1} * restriction(f)`.
///
/// The divisor's lowest nonzero coefficient must be a real scalar and `f`
/// must vanish to at least the same order, so the quotient is again a power
/// series (this is how `(P_1^n)^{-⊙} ⊙ P_k^n = P_{k-1}^n` is realized: the
/// inverse of `P_1` alone is not a power series).
pub fn gck_divide(f: &AppellSeries, divisor: &AppellSeries, trunc: usize) -> Result<AppellSeries> {
    if f.n != divisor.n {
        return Err(Error::DimensionMismatch { left: f.n, right: divisor.n });
    }
    let n = f.n;
    let valuation = divisor.coeffs.iter().position(|c| !c.is_zero()).ok_or(
        Error::NonInvertible { reason: "cannot divide by the zero series" },
    )?;
    let lead = invertible_real_scalar(&divisor.coefficient(valuation))?;
    for k in 0..valuation.min(f.coeffs.len()) {
        if !f.coeffs[k].is_zero() {
            return Err(Error::Domain(format!(
                "quotient is not a power series: dividend has order-{k} term below divisor valuation {valuation}"
            )));
        }
    }
    let inv_lead = Rational::one() / lead;
    let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); trunc + 1];
    for j in 0..=trunc {
        // solve sum_{i+l=k} b_i c_l = a_k at k = j + valuation
        let k = j + valuation;
        let mut acc = f.coefficient(k);
        for i in valuation + 1..=k {
            let bi = divisor.coefficient(i);
            if bi.is_zero() || k - i > trunc {
                continue;
            }
            acc = &acc - &bi.geometric_product(&coeffs[k - i])?;
        }
        coeffs[j] = acc.scale_rational(&inv_lead);
    }
    AppellSeries::new(n, coeffs)
}

/// Numeric evaluation of `P_k^n` at points of `R^{n+1}` without
/// materializing the polynomial.
///
/// `x` and `x̄` generate a commutative plane `span{1, ω}` with `ω^2 = -1`,
/// so the defining sum evaluates in complex arithmetic: `P_k(x) = A + ωB`
/// where `A + iB = sum_s T_s^k z^{k-s} z̄^s`, `z = x0 + i|x̲|`.
#[derive(Debug, Clone)]
pub struct AppellEvaluator {
    n: usize,
    t: Vec<Vec<f64>>,
}

/// Cached evaluator per dimension, grown on demand.
pub fn appell_evaluator(n: usize, max_k: usize) -> Result<Arc<AppellEvaluator>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<AppellEvaluator>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(evaluator) = cache.lock().unwrap().get(&n) {
        if evaluator.max_k() >= max_k {
            return Ok(evaluator.clone());
        }
    }
    let evaluator = Arc::new(AppellEvaluator::new(n, max_k)?);
    let mut guard = cache.lock().unwrap();
    let entry = guard.entry(n).or_insert_with(|| evaluator.clone());
    if entry.max_k() < evaluator.max_k() {
        *entry = evaluator.clone();
    }
    Ok(entry.clone())
}

impl AppellEvaluator {
    pub fn new(n: usize, max_k: usize) -> Result<Self> {
        require_odd_dimension(n)?;
        let t = t_coefficient_table(n, max_k)?
            .into_iter()
            .map(|row| row.iter().map(crate::scalar::rational_to_f64).collect())
            .collect();
        Ok(AppellEvaluator { n, t })
    }

    pub fn max_k(&self) -> usize {
        self.t.len() - 1
    }

    /// `P_k^n(point)` as an approximate multivector.
    pub fn eval(&self, k: usize, point: &[f64]) -> Multivector {
        assert_eq!(point.len(), self.n + 1, "point dimension mismatch");
        assert!(k < self.t.len(), "k beyond evaluator table");
        let x0 = point[0];
        let r2: f64 = point[1..].iter().map(|v| v * v).sum();
        let r = r2.sqrt();

        // complex powers of z = x0 + i r and z̄
        let mut zp = vec![(1.0f64, 0.0f64); k + 1];
        for j in 1..=k {
            let (a, b) = zp[j - 1];
            zp[j] = (a * x0 - b * r, a * r + b * x0);
        }
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for s in 0..=k {
            let (a, b) = zp[k - s];
            let (c, d) = (zp[s].0, -zp[s].1);
            let ts = self.t[k][s];
            re += ts * (a * c - b * d);
            im += ts * (a * d + b * c);
        }

        let mut terms = vec![(BladeIndex::SCALAR, Scalar::Approx(re))];
        if r > 0.0 {
            for (i, &v) in point[1..].iter().enumerate() {
                terms.push((BladeIndex::generator(i + 1), Scalar::Approx(im * v / r)));
            }
        }
        Multivector::from_terms(self.n, ScalarKind::Approx, terms)
            .expect("blades fit the dimension")
    }
}

/// Exact evaluation of `P_k^n` on the real axis: `P_k(x0) = x0^k`.
pub fn appell_on_real_axis(k: usize, x0: &Rational) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x0;
    }
    acc
}
