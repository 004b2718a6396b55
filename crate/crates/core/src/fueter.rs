//! The Fueter-Sce map `Δ^{(n-1)/2}` on paravector monomials and Taylor
//! series, its kernel and range, the constant `γ_n`, and the weight
//! transport `c_k -> b_k` between the slice-side and monogenic-side
//! coefficient Hilbert modules.

use crate::appell::{appell_polynomial, gck_extend, require_odd_dimension, slice_extend, AppellSeries, TaylorSeries};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::polynomial::CliffordPolynomial;
use crate::scalar::{factorial, rat, Rational, Scalar, ScalarKind};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// `γ_n = (-1)^{(n-1)/2} 2^{n-1} [Γ((n+1)/2)]^2 / (n-1)!`, exact.
///
/// For odd `n` the gamma factor is an integer factorial, so the constant is
/// rational: `Γ((n+1)/2) = ((n-1)/2)!`.
pub fn gamma(n: usize) -> Result<Rational> {
    require_odd_dimension(n)?;
    let half = (n - 1) / 2;
    let sign = if half % 2 == 0 { rat(1) } else { rat(-1) };
    let two_pow = pow_of_two(n - 1);
    let gamma_sq = factorial(half) * factorial(half);
    Ok(sign * two_pow * gamma_sq / factorial(n - 1))
}

fn pow_of_two(exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= rat(2);
    }
    acc
}

/// Closed form of `Δ^{(n-1)/2} x^j`:
/// `0` for `j < n-1`, `γ_n (n-1)!` for `j = n-1`, and
/// `γ_n j!/(j-n+1)! P^n_{j+1-n}` for `j > n-1`.
pub fn fueter_sce_monomial(n: usize, j: usize) -> Result<CliffordPolynomial> {
    let g = gamma(n)?;
    if j + 1 < n {
        return Ok(CliffordPolynomial::zero(n, ScalarKind::Exact));
    }
    if j + 1 == n {
        let value = g * factorial(n - 1);
        return Ok(CliffordPolynomial::constant(Multivector::scalar(n, Scalar::Exact(value))));
    }
    let factor = g * factorial(j) / factorial(j + 1 - n);
    Ok(appell_polynomial(n, j + 1 - n)?.scale_rational(&factor))
}

/// The Fueter-Sce map on Taylor data:
/// `β_k = γ_n (n+k-1)!/k! a_{k+n-1}`; the first `n-1` coefficients are
/// annihilated.
pub fn fueter_sce_series(n: usize, f: &TaylorSeries) -> Result<AppellSeries> {
    require_odd_dimension(n)?;
    if f.dimension() != n {
        return Err(Error::DimensionMismatch { left: f.dimension(), right: n });
    }
    let g = gamma(n)?;
    let len = f.coefficients().len().saturating_sub(n - 1);
    let mut coeffs = Vec::with_capacity(len);
    for k in 0..len {
        let factor = &g * factorial(n + k - 1) / factorial(k);
        coeffs.push(f.coefficient(k + n - 1).scale_rational(&factor));
    }
    AppellSeries::new(n, coeffs)
}

/// Preimage under the Fueter-Sce map: the Taylor series `f` with
/// `a_{k+n-1} = k!/(γ_n (n+k-1)!) g_k` and zeros below degree `n-1`, so
/// that `fueter_sce_series(n, f) = g` exactly (surjectivity witness).
pub fn fueter_sce_preimage(n: usize, g: &AppellSeries) -> Result<TaylorSeries> {
    require_odd_dimension(n)?;
    if g.dimension() != n {
        return Err(Error::DimensionMismatch { left: g.dimension(), right: n });
    }
    let gamma_n = gamma(n)?;
    let mut coeffs = vec![Multivector::zero(n, ScalarKind::Exact); g.coefficients().len() + n - 1];
    for (k, gk) in g.coefficients().iter().enumerate() {
        let factor = factorial(k) / (&gamma_n * factorial(n + k - 1));
        coeffs[k + n - 1] = gk.scale_rational(&factor);
    }
    TaylorSeries::new(n, coeffs)
}

/// True iff `f` is annihilated by the Fueter-Sce map, i.e. all Taylor
/// coefficients of degree `>= n-1` vanish (for `n = 1` only the zero
/// series qualifies).
pub fn kernel_membership(n: usize, f: &TaylorSeries) -> Result<bool> {
    require_odd_dimension(n)?;
    Ok(f
        .coefficients()
        .iter()
        .enumerate()
        .all(|(k, a)| k + 1 < n || a.is_zero()))
}

/// Both routes of the commuting diagram, compared exactly:
/// `Δ^{(n-1)/2}(slice extension of f)` versus
/// `γ_n * (GCK extension of f^{(n-1)})`.
pub fn diagram_check(n: usize, f: &TaylorSeries) -> Result<bool> {
    require_odd_dimension(n)?;
    let lhs = slice_extend(f)?.laplacian_power((n - 1) / 2);
    let rhs = gck_extend(&f.derivative(n - 1))
        .materialize()?
        .scale_rational(&gamma(n)?);
    Ok(lhs == rhs)
}

/// Where a coefficient space's elements converge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    UnitBall,
    FullSpace,
}

/// A weight sequence `k -> c_k` defining a coefficient inner product
/// `<f,g> = sum_k c_k conj(f_k) g_k`.
///
/// The built-ins use the classical generators verbatim: Hardy `1`,
/// Bergman `1/(k+1)`, Dirichlet `k`, Fock `k!`. Dirichlet starts at
/// `c_0 = 0` (its norm sum effectively starts at `k = 1`) and Bergman is
/// decreasing; the transport and norm identities below hold regardless.
#[derive(Clone)]
pub struct WeightSequence {
    name: String,
    domain: Domain,
    gen: Arc<dyn Fn(usize) -> Rational + Send + Sync>,
}

impl WeightSequence {
    pub fn hardy() -> Self {
        WeightSequence {
            name: "hardy".into(),
            domain: Domain::UnitBall,
            gen: Arc::new(|_| Rational::one()),
        }
    }

    pub fn bergman() -> Self {
        WeightSequence {
            name: "bergman".into(),
            domain: Domain::UnitBall,
            gen: Arc::new(|k| Rational::one() / rat(k as i64 + 1)),
        }
    }

    pub fn dirichlet() -> Self {
        WeightSequence {
            name: "dirichlet".into(),
            domain: Domain::UnitBall,
            gen: Arc::new(|k| rat(k as i64)),
        }
    }

    pub fn fock() -> Self {
        WeightSequence {
            name: "fock".into(),
            domain: Domain::FullSpace,
            gen: Arc::new(factorial),
        }
    }

    pub fn custom(
        name: impl Into<String>,
        domain: Domain,
        gen: impl Fn(usize) -> Rational + Send + Sync + 'static,
    ) -> Self {
        WeightSequence { name: name.into(), domain, gen: Arc::new(gen) }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "hardy" => Ok(Self::hardy()),
            "bergman" => Ok(Self::bergman()),
            "dirichlet" => Ok(Self::dirichlet()),
            "fock" => Ok(Self::fock()),
            other => Err(Error::Parse(format!(
                "unknown space '{other}', expected hardy|bergman|dirichlet|fock"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn weight(&self, k: usize) -> Rational {
        (self.gen)(k)
    }

    /// Weight transport onto the Fueter-Sce range:
    /// `b_k = c_{k+n-1} (k!)^2 / [(n+k-1)!]^2`. For `n = 1` this is the
    /// identity.
    pub fn transport(&self, n: usize) -> Result<WeightSequence> {
        require_odd_dimension(n)?;
        let base = self.gen.clone();
        Ok(WeightSequence {
            name: format!("{}-range(n={n})", self.name),
            domain: self.domain,
            gen: Arc::new(move |k| {
                let kf = factorial(k);
                let nf = factorial(n + k - 1);
                base(k + n - 1) * &kf * &kf / (&nf * &nf)
            }),
        })
    }
}

impl fmt::Debug for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightSequence")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

/// `|mv|^2` as an exact rational; panics on approximate coefficients.
pub fn norm_sq_rational(mv: &Multivector) -> Rational {
    match mv.norm_sq() {
        Scalar::Exact(r) => r,
        Scalar::Approx(_) => panic!("exact coefficients required"),
    }
}

/// Both sides of the range norm identity, computed independently.
///
/// Left: `||Δ^{(n-1)/2} f||^2` in `HM(Ω_b)` via the transported weights and
/// the mapped series. Right:
/// `γ_n^2 (||f||^2_c - sum_{k<=n-2} c_k |f^{(k)}(0)|^2/(k!)^2)`,
/// with `|·|^2` read as the Clifford component-square sum.
pub fn range_norm_identity(
    n: usize,
    weights: &WeightSequence,
    f: &TaylorSeries,
) -> Result<(Rational, Rational)> {
    require_odd_dimension(n)?;
    let transported = weights.transport(n)?;
    let image = fueter_sce_series(n, f)?;
    let mut lhs = Rational::zero();
    for (k, beta) in image.coefficients().iter().enumerate() {
        lhs += transported.weight(k) * norm_sq_rational(beta);
    }

    let mut full = Rational::zero();
    for (k, a) in f.coefficients().iter().enumerate() {
        full += weights.weight(k) * norm_sq_rational(a);
    }
    let mut head = Rational::zero();
    for k in 0..n.saturating_sub(1) {
        // f^(k)(0) read off the derivative series, |.|^2 / (k!)^2
        let dk0 = f.derivative(k).coefficient(0);
        let kf = factorial(k);
        head += weights.weight(k) * norm_sq_rational(&dk0) / (&kf * &kf);
    }
    let g = gamma(n)?;
    let rhs = &g * &g * (full - head);
    Ok((lhs, rhs))
}
