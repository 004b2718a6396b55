//! Symbolic multivariate polynomials in `x_0, ..., x_n` with Multivector
//! coefficients, and the differential operators of hypercomplex analysis:
//! partial derivatives, the Laplacian, the generalized Cauchy-Riemann
//! (Dirac-type) operator and the hypercomplex derivative.
//!
//! Variables commute with everything; coefficients sit to the LEFT of
//! monomials and the `e_i` in the operators multiply from the left (left
//! monogenicity throughout).

use crate::error::{Error, Result};
use crate::multivector::{point_norm, Multivector, Paravector};
use crate::scalar::{Rational, Scalar, ScalarKind};
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicUsize, Ordering};

/// Total-degree cap for products, to bound iterated-operator blowup.
static DEGREE_CAP: AtomicUsize = AtomicUsize::new(64);

pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

/// Exponents `(v_0, ..., v_n)` of one monomial, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<u16>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n + 1])
    }

    /// Monomial `x_i` in `n+1` variables.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zeros(n);
        e.0[i] = 1;
        e
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&v| v as usize).sum()
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    fn sum(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Sparse polynomial over `R_n`: exponent vector -> nonzero Multivector.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordPolynomial {
    n: usize,
    kind: ScalarKind,
    terms: BTreeMap<ExponentVector, Multivector>,
}

impl CliffordPolynomial {
    pub fn zero(n: usize, kind: ScalarKind) -> Self {
        CliffordPolynomial { n, kind, terms: BTreeMap::new() }
    }

    pub fn constant(coeff: Multivector) -> Self {
        let n = coeff.dimension();
        let kind = coeff.kind();
        let mut p = CliffordPolynomial::zero(n, kind);
        p.accumulate(ExponentVector::zeros(n), coeff);
        p
    }

    pub fn one(n: usize, kind: ScalarKind) -> Self {
        CliffordPolynomial::constant(Multivector::one(n, kind))
    }

    /// The variable `x_i` (0-based over `x_0..x_n`).
    pub fn variable(n: usize, i: usize, kind: ScalarKind) -> Self {
        assert!(i <= n, "variable index out of range");
        let mut p = CliffordPolynomial::zero(n, kind);
        p.accumulate(ExponentVector::unit(n, i), Multivector::one(n, kind));
        p
    }

    /// The paravector variable `x = x_0 + x_1 e_1 + ... + x_n e_n`.
    pub fn paravector_variable(n: usize, kind: ScalarKind) -> Self {
        let mut p = CliffordPolynomial::variable(n, 0, kind);
        for i in 1..=n {
            p.accumulate(ExponentVector::unit(n, i), Multivector::basis_vector(n, i, kind));
        }
        p
    }

    /// `x0^k` as a polynomial.
    pub fn x0_power(n: usize, k: usize, kind: ScalarKind) -> Self {
        let mut e = ExponentVector::zeros(n);
        e.0[0] = k as u16;
        let mut p = CliffordPolynomial::zero(n, kind);
        p.accumulate(e, Multivector::one(n, kind));
        p
    }

    pub fn from_terms(
        n: usize,
        kind: ScalarKind,
        terms: impl IntoIterator<Item = (ExponentVector, Multivector)>,
    ) -> Result<Self> {
        let mut p = CliffordPolynomial::zero(n, kind);
        for (exps, coeff) in terms {
            if exps.0.len() != n + 1 {
                return Err(Error::Parse(format!(
                    "exponent vector length {} does not match n+1 = {}",
                    exps.0.len(),
                    n + 1
                )));
            }
            if coeff.dimension() != n {
                return Err(Error::DimensionMismatch { left: coeff.dimension(), right: n });
            }
            if coeff.kind() != kind {
                return Err(Error::ScalarKindMismatch);
            }
            p.accumulate(exps, coeff);
        }
        Ok(p)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Multivector)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.total_degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> Multivector {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.n, self.kind))
    }

    fn accumulate(&mut self, exps: ExponentVector, coeff: Multivector) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(existing) => {
                let sum = &existing + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    pub fn check_compatible(&self, other: &CliffordPolynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.kind != other.kind {
            return Err(Error::ScalarKindMismatch);
        }
        Ok(())
    }

    /// Product; coefficients multiply by the geometric product in
    /// left-to-right argument order (self then rhs).
    pub fn mul(&self, rhs: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        self.check_compatible(rhs)?;
        let cap = degree_cap();
        if !self.is_zero() && !rhs.is_zero() {
            let degree = self.total_degree() + rhs.total_degree();
            if degree > cap {
                return Err(Error::DegreeCapExceeded { degree, cap });
            }
        }
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.accumulate(ea.sum(eb), ca.geometric_product(cb)?);
            }
        }
        Ok(out)
    }

    /// Multiply every coefficient by `c` from the left.
    pub fn scale_left(&self, c: &Multivector) -> Result<CliffordPolynomial> {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            out.accumulate(exps.clone(), c.geometric_product(coeff)?);
        }
        Ok(out)
    }

    /// Multiply every coefficient by `c` from the right.
    pub fn scale_right(&self, c: &Multivector) -> Result<CliffordPolynomial> {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            out.accumulate(exps.clone(), coeff.geometric_product(c)?);
        }
        Ok(out)
    }

    pub fn scale_rational(&self, r: &Rational) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            out.accumulate(exps.clone(), coeff.scale_rational(r));
        }
        out
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> CliffordPolynomial {
        assert!(i <= self.n, "variable index out of range");
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            let v = exps.0[i];
            if v == 0 {
                continue;
            }
            let mut e = exps.clone();
            e.0[i] = v - 1;
            out.accumulate(e, coeff.scale(&(Scalar::one(self.kind) * v as i64)));
        }
        out
    }

    /// `sum_{i=0}^{n} d^2/dx_i^2`.
    pub fn laplacian(&self) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for i in 0..=self.n {
            out = &out + &self.partial_derivative(i).partial_derivative(i);
        }
        out
    }

    /// Iterated Laplacian; `m = 0` is the identity.
    pub fn laplacian_power(&self, m: usize) -> CliffordPolynomial {
        let mut out = self.clone();
        for _ in 0..m {
            out = out.laplacian();
        }
        out
    }

    /// Generalized Cauchy-Riemann operator
    /// `∂ = ∂_{x0} + sum_i e_i ∂_{x_i}`, `e_i` acting from the left.
    /// A polynomial is (left) monogenic iff this vanishes.
    pub fn dirac(&self) -> CliffordPolynomial {
        let mut out = self.partial_derivative(0);
        for i in 1..=self.n {
            let ei = Multivector::basis_vector(self.n, i, self.kind);
            out = &out
                + &self
                    .partial_derivative(i)
                    .scale_left(&ei)
                    .expect("basis vector is compatible");
        }
        out
    }

    /// Iterated Dirac operator.
    pub fn dirac_power(&self, m: usize) -> CliffordPolynomial {
        let mut out = self.clone();
        for _ in 0..m {
            out = out.dirac();
        }
        out
    }

    /// Hypercomplex derivative `∂̄ = ∂_{x0} - sum_i e_i ∂_{x_i}`.
    pub fn conj_derivative(&self) -> CliffordPolynomial {
        let mut out = self.partial_derivative(0);
        for i in 1..=self.n {
            let ei = Multivector::basis_vector(self.n, i, self.kind);
            out = &out
                - &self
                    .partial_derivative(i)
                    .scale_left(&ei)
                    .expect("basis vector is compatible");
        }
        out
    }

    /// Substitute `x_1 = ... = x_n = 0`, leaving a polynomial in `x_0`.
    pub fn restrict_real(&self) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            if exps.0[1..].iter().all(|&v| v == 0) {
                out.accumulate(exps.clone(), coeff.clone());
            }
        }
        out
    }

    /// Evaluate at a point of `R^{n+1}` in double precision.
    pub fn evaluate(&self, point: &[f64]) -> Multivector {
        assert_eq!(point.len(), self.n + 1, "point dimension mismatch");
        let mut out = Multivector::zero(self.n, ScalarKind::Approx);
        for (exps, coeff) in &self.terms {
            let mut factor = 1.0;
            for (i, &v) in exps.0.iter().enumerate() {
                if v > 0 {
                    factor *= point[i].powi(v as i32);
                }
            }
            out = &out + &coeff.to_approx().scale(&Scalar::Approx(factor));
        }
        out
    }

    /// Evaluate at a rational point, exactly. Requires the exact kind.
    pub fn evaluate_exact(&self, point: &[Rational]) -> Multivector {
        assert_eq!(point.len(), self.n + 1, "point dimension mismatch");
        assert_eq!(self.kind, ScalarKind::Exact, "exact evaluation needs exact coefficients");
        let mut out = Multivector::zero(self.n, ScalarKind::Exact);
        for (exps, coeff) in &self.terms {
            let mut factor = Rational::one();
            for (i, &v) in exps.0.iter().enumerate() {
                for _ in 0..v {
                    factor *= &point[i];
                }
            }
            out = &out + &coeff.scale_rational(&factor);
        }
        out
    }

    /// Max residual of the slice Cauchy-Riemann equations
    /// `(∂_u + I ∂_v) p(u + I v)` over a grid, evaluated by exact
    /// differentiation followed by numeric substitution.
    pub fn slice_cr_residual(&self, direction: &[f64], grid: &[(f64, f64)]) -> Result<f64> {
        if direction.len() != self.n {
            return Err(Error::DimensionMismatch { left: direction.len(), right: self.n });
        }
        if (point_norm(direction) - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "direction must be a unit vector, |I| = {}",
                point_norm(direction)
            )));
        }
        let d0 = self.partial_derivative(0);
        let di: Vec<CliffordPolynomial> =
            (1..=self.n).map(|i| self.partial_derivative(i)).collect();
        let unit = {
            let mut coords = vec![0.0; self.n + 1];
            coords[1..].copy_from_slice(direction);
            Paravector::from_f64(&coords).to_multivector()
        };
        let mut max_resid = 0.0f64;
        for &(u, v) in grid {
            let mut point = vec![u];
            point.extend(direction.iter().map(|&c| c * v));
            // ∂_u p + I * sum_i I_i ∂_{x_i} p, all at x = u + I v
            let mut radial = Multivector::zero(self.n, ScalarKind::Approx);
            for (i, dp) in di.iter().enumerate() {
                radial = &radial + &dp.evaluate(&point).scale(&Scalar::Approx(direction[i]));
            }
            let resid = &d0.evaluate(&point) + &unit.geometric_product(&radial)?;
            max_resid = max_resid.max(resid.max_abs_component());
        }
        Ok(max_resid)
    }
}

/// `(x_0 + x̲)^k`, expanded by repeated multiplication; `x^0 = 1`.
pub fn paravector_power(n: usize, k: usize, kind: ScalarKind) -> CliffordPolynomial {
    let x = CliffordPolynomial::paravector_variable(n, kind);
    let mut out = CliffordPolynomial::one(n, kind);
    for _ in 0..k {
        out = out.mul(&x).expect("paravector power under degree cap");
    }
    out
}

/// `(x_0 - x̲)^k`.
pub fn conj_paravector_power(n: usize, k: usize, kind: ScalarKind) -> CliffordPolynomial {
    let mut xbar = CliffordPolynomial::variable(n, 0, kind);
    for i in 1..=n {
        let ei = CliffordPolynomial::constant(Multivector::basis_vector(n, i, kind));
        let xi = CliffordPolynomial::variable(n, i, kind);
        xbar = &xbar - &ei.mul(&xi).expect("degree 1");
    }
    let mut out = CliffordPolynomial::one(n, kind);
    for _ in 0..k {
        out = out.mul(&xbar).expect("paravector power under degree cap");
    }
    out
}

impl Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.check_compatible(rhs).expect("incompatible polynomials");
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.accumulate(exps.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.n, self.kind);
        for (exps, coeff) in &self.terms {
            out.accumulate(exps.clone(), -coeff);
        }
        out
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{coeff}]")?;
            for (i, &v) in exps.0.iter().enumerate() {
                if v == 1 {
                    write!(f, " x{i}")?;
                } else if v > 1 {
                    write!(f, " x{i}^{v}")?;
                }
            }
        }
        Ok(())
    }
}
