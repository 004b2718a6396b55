//! Truncated monogenic elementary functions EXP, SIN, COS, SINH, COSH with
//! certified tail bounds, plus their derivative, parity, and Pythagorean
//! identities.
//!
//! Each function is the image of its classical counterpart under the
//! Fueter-Sce map, expanded in the Appell system: the coefficient of
//! `P_k^n` is `γ_n * (classical Taylor coefficient)`, with an extra
//! `(-1)^{(n-1)/2}` for SIN and COS.

use crate::appell::{appell_evaluator, gck_product, AppellSeries};
use crate::error::{Error, Result};
use crate::fueter::gamma;
use crate::multivector::{point_norm, Multivector};
use crate::scalar::{factorial, rat, rational_to_f64, Rational, Scalar, ScalarKind};
use num_traits::Zero;

/// Which elementary function; carries the parity/sign pattern of the
/// real-restriction Taylor coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryKind {
    Exp,
    Sin,
    Cos,
    Sinh,
    Cosh,
}

impl ElementaryKind {
    pub const ALL: [ElementaryKind; 5] = [
        ElementaryKind::Exp,
        ElementaryKind::Sin,
        ElementaryKind::Cos,
        ElementaryKind::Sinh,
        ElementaryKind::Cosh,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ElementaryKind::Exp => "exp",
            ElementaryKind::Sin => "sin",
            ElementaryKind::Cos => "cos",
            ElementaryKind::Sinh => "sinh",
            ElementaryKind::Cosh => "cosh",
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "exp" => Ok(ElementaryKind::Exp),
            "sin" => Ok(ElementaryKind::Sin),
            "cos" => Ok(ElementaryKind::Cos),
            "sinh" => Ok(ElementaryKind::Sinh),
            "cosh" => Ok(ElementaryKind::Cosh),
            other => Err(Error::Parse(format!(
                "unknown function '{other}', expected exp|sin|cos|sinh|cosh"
            ))),
        }
    }

    /// Taylor coefficient of the classical function at degree `k`.
    pub fn classical_coefficient(&self, k: usize) -> Rational {
        let inv_kf = Rational::from_integer(1.into()) / factorial(k);
        match self {
            ElementaryKind::Exp => inv_kf,
            ElementaryKind::Sinh => {
                if k % 2 == 1 {
                    inv_kf
                } else {
                    Rational::zero()
                }
            }
            ElementaryKind::Cosh => {
                if k % 2 == 0 {
                    inv_kf
                } else {
                    Rational::zero()
                }
            }
            ElementaryKind::Sin => {
                if k % 2 == 1 {
                    let sign = if ((k - 1) / 2) % 2 == 0 { rat(1) } else { rat(-1) };
                    sign * inv_kf
                } else {
                    Rational::zero()
                }
            }
            ElementaryKind::Cos => {
                if k % 2 == 0 {
                    let sign = if (k / 2) % 2 == 0 { rat(1) } else { rat(-1) };
                    sign * inv_kf
                } else {
                    Rational::zero()
                }
            }
        }
    }

    /// Classical value at a real argument (for restriction cross-checks).
    pub fn classical_value(&self, x: f64) -> f64 {
        match self {
            ElementaryKind::Exp => x.exp(),
            ElementaryKind::Sin => x.sin(),
            ElementaryKind::Cos => x.cos(),
            ElementaryKind::Sinh => x.sinh(),
            ElementaryKind::Cosh => x.cosh(),
        }
    }

    pub fn is_trigonometric(&self) -> bool {
        matches!(self, ElementaryKind::Sin | ElementaryKind::Cos)
    }

    /// Hypercomplex-derivative partner: `∂̄ F = factor * partner`.
    pub fn derivative_partner(&self) -> (ElementaryKind, i64) {
        match self {
            ElementaryKind::Exp => (ElementaryKind::Exp, 2),
            ElementaryKind::Sinh => (ElementaryKind::Cosh, 2),
            ElementaryKind::Cosh => (ElementaryKind::Sinh, 2),
            ElementaryKind::Sin => (ElementaryKind::Cos, 2),
            ElementaryKind::Cos => (ElementaryKind::Sin, -2),
        }
    }
}

/// The sign `(-1)^{(n-1)/2}` carried by SIN/COS (the Fueter-Sce image of
/// cos/sin picks it up on top of `γ_n`).
pub fn trig_sign(n: usize) -> Rational {
    if ((n - 1) / 2) % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Appell coefficient of the monogenic elementary function at index `k`.
pub fn elementary_coefficient(kind: ElementaryKind, n: usize, k: usize) -> Result<Rational> {
    let mut c = gamma(n)? * kind.classical_coefficient(k);
    if kind.is_trigonometric() {
        c *= trig_sign(n);
    }
    Ok(c)
}

/// A monogenic elementary function truncated at order `K`, held as Appell
/// coefficient data.
#[derive(Debug, Clone)]
pub struct TruncatedMonogenic {
    pub kind: ElementaryKind,
    pub n: usize,
    series: AppellSeries,
}

impl TruncatedMonogenic {
    pub fn new(kind: ElementaryKind, n: usize, trunc: usize) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(trunc + 1);
        for k in 0..=trunc {
            coeffs.push(Multivector::scalar(
                n,
                Scalar::Exact(elementary_coefficient(kind, n, k)?),
            ));
        }
        Ok(TruncatedMonogenic { kind, n, series: AppellSeries::new(n, coeffs)? })
    }

    pub fn series(&self) -> &AppellSeries {
        &self.series
    }

    pub fn truncation(&self) -> usize {
        self.series.order()
    }
}

/// A certified point evaluation: partial sum plus a bound on the dropped
/// tail.
#[derive(Debug, Clone)]
pub struct ElementaryValue {
    pub value: Multivector,
    pub truncation: usize,
    pub tail_bound: f64,
}

/// Truncation tail of the elementary series at a point:
/// `|γ_n| e^{|x|} |x|^{K+1} / (K+1)!`, from `|P_k(x)| <= |x|^k` and
/// coefficient magnitudes `<= 1/k!`.
fn tail_bound(gamma_abs: f64, norm: f64, trunc: usize) -> f64 {
    let mut term = 1.0f64;
    for j in 1..=trunc + 1 {
        term *= norm / j as f64;
    }
    gamma_abs * norm.exp() * term
}

/// Evaluate a monogenic elementary function at a point of `R^{n+1}` with a
/// certified truncation: `K` doubles until the crude tail bound clears
/// `tol`.
pub fn eval_elementary(
    kind: ElementaryKind,
    n: usize,
    point: &[f64],
    tol: f64,
) -> Result<ElementaryValue> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if point.len() != n + 1 {
        return Err(Error::DimensionMismatch { left: point.len(), right: n + 1 });
    }
    let gamma_abs = rational_to_f64(&gamma(n)?).abs();
    let norm = point_norm(point);
    let mut trunc = 4usize;
    while tail_bound(gamma_abs, norm, trunc) >= tol {
        trunc *= 2;
        if trunc > 4096 {
            return Err(Error::Domain(format!(
                "tail bound does not clear tol={tol} at |x|={norm}"
            )));
        }
    }

    let evaluator = appell_evaluator(n, trunc)?;
    let mut value = Multivector::zero(n, ScalarKind::Approx);
    for k in 0..=trunc {
        let c = rational_to_f64(&elementary_coefficient(kind, n, k)?);
        if c != 0.0 {
            value = &value + &evaluator.eval(k, point).scale(&Scalar::Approx(c));
        }
    }
    Ok(ElementaryValue { value, truncation: trunc, tail_bound: tail_bound(gamma_abs, norm, trunc) })
}

/// Check `∂̄ F = factor * partner` exactly on the order-`K` truncation
/// (the partner compared at order `K-1`, which the derivative reaches).
pub fn derivative_identity_check(kind: ElementaryKind, n: usize, trunc: usize) -> Result<bool> {
    if trunc < 2 {
        return Err(Error::IndexOutOfRange { index: trunc, reason: "needs K >= 2" });
    }
    let f = TruncatedMonogenic::new(kind, n, trunc)?;
    let derived = f.series.materialize()?.conj_derivative();
    let (partner, factor) = kind.derivative_partner();
    let expected = TruncatedMonogenic::new(partner, n, trunc - 1)?
        .series
        .materialize()?
        .scale_rational(&rat(factor));
    Ok(derived == expected)
}

/// Check COSH = (EXP(x)+EXP(-x))/2 and SINH = (EXP(x)-EXP(-x))/2,
/// coefficient-wise and exactly through order `K`.
pub fn parity_identity_check(n: usize, trunc: usize) -> Result<bool> {
    for k in 0..=trunc {
        let exp_pos = elementary_coefficient(ElementaryKind::Exp, n, k)?;
        // EXP(-x): restriction e^{-x0} has Taylor coefficients (-1)^k/k!
        let exp_neg = if k % 2 == 0 { exp_pos.clone() } else { -exp_pos.clone() };
        let cosh = elementary_coefficient(ElementaryKind::Cosh, n, k)?;
        let sinh = elementary_coefficient(ElementaryKind::Sinh, n, k)?;
        let half = crate::scalar::ratio(1, 2);
        if cosh != (&exp_pos + &exp_neg) * &half {
            return Ok(false);
        }
        if sinh != (exp_pos - exp_neg) * half {
            return Ok(false);
        }
    }
    Ok(true)
}

fn constant_series(n: usize, value: Rational) -> AppellSeries {
    AppellSeries::new(n, vec![Multivector::scalar(n, Scalar::Exact(value))])
        .expect("constant series is well-formed")
}

/// Check `COS ⊙ COS + SIN ⊙ SIN = γ_n^2` and
/// `COSH ⊙ COSH - SINH ⊙ SINH = γ_n^2` exactly through order `K`: the
/// constant coefficient matches and every higher one vanishes.
pub fn pythagorean_check(n: usize, trunc: usize) -> Result<bool> {
    if trunc < 1 {
        return Err(Error::IndexOutOfRange { index: trunc, reason: "needs K >= 1" });
    }
    let g = gamma(n)?;
    let gamma_sq = constant_series(n, &g * &g);

    let cos = TruncatedMonogenic::new(ElementaryKind::Cos, n, trunc)?.series;
    let sin = TruncatedMonogenic::new(ElementaryKind::Sin, n, trunc)?.series;
    let circular = gck_product(&cos, &cos, trunc)?.add(&gck_product(&sin, &sin, trunc)?)?;
    if circular != gamma_sq {
        return Ok(false);
    }

    let cosh = TruncatedMonogenic::new(ElementaryKind::Cosh, n, trunc)?.series;
    let sinh = TruncatedMonogenic::new(ElementaryKind::Sinh, n, trunc)?.series;
    let neg_sinh_sq = gck_product(&sinh, &sinh, trunc)?.scale_rational(&rat(-1));
    let hyperbolic = gck_product(&cosh, &cosh, trunc)?.add(&neg_sinh_sq)?;
    Ok(hyperbolic == gamma_sq)
}
