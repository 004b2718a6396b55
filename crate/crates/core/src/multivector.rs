//! The real Clifford algebra `R_n` with `e_i^2 = -1` and anticommuting
//! generators: blades, sparse multivectors, paravectors.
//!
//! Blades are bitmasks over the generators; the geometric product computes
//! its sign by transposition counting on the masks plus one `-1` per
//! contracted generator pair.

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar, ScalarKind};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest supported algebra dimension (2^n blades; kept practical).
pub const MAX_DIMENSION: usize = 11;

/// A basis blade `e_A`, `A ⊆ {1..n}`, encoded as an n-bit mask.
///
/// Bit `i-1` set means the generator `e_i` is present; the empty mask is the
/// scalar blade `1`. Generators are stored in canonical ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    /// Blade for the single generator `e_i` (1-based).
    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are 1-based");
        BladeIndex(1 << (i - 1))
    }

    /// Blade from ascending 1-based generator indices.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut prev = 0usize;
        for &i in indices {
            if i < 1 || i > MAX_DIMENSION {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    reason: "generator index outside 1..=11",
                });
            }
            if i <= prev {
                return Err(Error::Parse(format!(
                    "blade indices must be strictly ascending, got {indices:?}"
                )));
            }
            bits |= 1 << (i - 1);
            prev = i;
        }
        Ok(BladeIndex(bits))
    }

    /// Ascending 1-based generator indices of this blade.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Number of generators in the blade.
    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn fits_dimension(&self, n: usize) -> bool {
        n <= 32 && self.0 < (1u32 << n)
    }
}

/// Sign and resulting blade of the product `e_A * e_B`.
///
/// Transpositions: for each generator of `B`, count the generators of `A`
/// strictly above it. Contractions: each common generator contributes
/// `e_i^2 = -1`.
fn blade_product(a: BladeIndex, b: BladeIndex) -> (i8, BladeIndex) {
    let mut swaps = 0u32;
    let mut rem = b.0;
    while rem != 0 {
        let bit = rem.trailing_zeros();
        swaps += (a.0 >> (bit + 1)).count_ones();
        rem &= rem - 1;
    }
    let contractions = (a.0 & b.0).count_ones();
    let sign = if (swaps + contractions) % 2 == 0 { 1 } else { -1 };
    (sign, BladeIndex(a.0 ^ b.0))
}

/// Clifford-conjugation sign of a grade-k blade: `(-1)^{k(k+1)/2}`.
fn conjugation_sign(grade: usize) -> i8 {
    if (grade * (grade + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sparse element of `R_n`: blade -> nonzero coefficient.
///
/// All stored coefficients share one scalar kind; zero coefficients are never
/// stored. Values are immutable after construction and safe to share.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    n: usize,
    kind: ScalarKind,
    components: BTreeMap<BladeIndex, Scalar>,
}

impl Multivector {
    pub fn zero(n: usize, kind: ScalarKind) -> Self {
        assert!(n >= 1 && n <= MAX_DIMENSION, "dimension out of range");
        Multivector { n, kind, components: BTreeMap::new() }
    }

    pub fn scalar(n: usize, value: Scalar) -> Self {
        let mut mv = Multivector::zero(n, value.kind());
        mv.set(BladeIndex::SCALAR, value);
        mv
    }

    pub fn one(n: usize, kind: ScalarKind) -> Self {
        Multivector::scalar(n, Scalar::one(kind))
    }

    pub fn from_int(n: usize, value: i64) -> Self {
        Multivector::scalar(n, Scalar::from_int(value))
    }

    /// The generator `e_i` as a multivector (1-based, `i <= n`).
    pub fn basis_vector(n: usize, i: usize, kind: ScalarKind) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut mv = Multivector::zero(n, kind);
        mv.set(BladeIndex::generator(i), Scalar::one(kind));
        mv
    }

    /// Build from blade/coefficient pairs (later pairs accumulate).
    pub fn from_terms(
        n: usize,
        kind: ScalarKind,
        terms: impl IntoIterator<Item = (BladeIndex, Scalar)>,
    ) -> Result<Self> {
        let mut mv = Multivector::zero(n, kind);
        for (blade, coeff) in terms {
            if !blade.fits_dimension(n) {
                return Err(Error::IndexOutOfRange {
                    index: blade.0 as usize,
                    reason: "blade does not fit the algebra dimension",
                });
            }
            if coeff.kind() != kind {
                return Err(Error::ScalarKindMismatch);
            }
            mv.accumulate(blade, coeff);
        }
        Ok(mv)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BladeIndex, &Scalar)> {
        self.components.iter()
    }

    pub fn coefficient(&self, blade: BladeIndex) -> Scalar {
        self.components
            .get(&blade)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.kind))
    }

    fn set(&mut self, blade: BladeIndex, value: Scalar) {
        if value.is_zero() {
            self.components.remove(&blade);
        } else {
            self.components.insert(blade, value);
        }
    }

    fn accumulate(&mut self, blade: BladeIndex, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.components.remove(&blade) {
            Some(existing) => self.set(blade, existing + value),
            None => {
                self.components.insert(blade, value);
            }
        }
    }

    pub fn check_compatible(&self, other: &Multivector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.kind != other.kind {
            return Err(Error::ScalarKindMismatch);
        }
        Ok(())
    }

    /// Geometric product. Bilinear, `e_i^2 = -1`, distinct generators
    /// anticommute.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.check_compatible(other)?;
        let mut out = Multivector::zero(self.n, self.kind);
        for (&ba, ca) in &self.components {
            for (&bb, cb) in &other.components {
                let (sign, blade) = blade_product(ba, bb);
                let term = ca.clone() * cb.clone() * sign as i64;
                out.accumulate(blade, term);
            }
        }
        Ok(out)
    }

    /// Clifford conjugation: `e_A -> (-1)^{|A|(|A|+1)/2} e_A`.
    ///
    /// Restricts to `x0 - x̲` on paravectors and is the anti-automorphism
    /// used by every inner product here (`Re(conj(a)·a) = |a|^2`).
    pub fn conjugate(&self) -> Multivector {
        let mut out = Multivector::zero(self.n, self.kind);
        for (&blade, coeff) in &self.components {
            let sign = conjugation_sign(blade.grade());
            out.set(blade, coeff.clone() * sign as i64);
        }
        out
    }

    /// Keep exactly the grade-k part.
    pub fn grade_projection(&self, k: usize) -> Result<Multivector> {
        if k > self.n {
            return Err(Error::IndexOutOfRange { index: k, reason: "grade exceeds dimension" });
        }
        let mut out = Multivector::zero(self.n, self.kind);
        for (&blade, coeff) in &self.components {
            if blade.grade() == k {
                out.set(blade, coeff.clone());
            }
        }
        Ok(out)
    }

    /// Scalar (grade-0) coefficient.
    pub fn real_part(&self) -> Scalar {
        self.coefficient(BladeIndex::SCALAR)
    }

    /// Sum of squared components, in the value's own scalar kind.
    pub fn norm_sq(&self) -> Scalar {
        let mut acc = Scalar::zero(self.kind);
        for coeff in self.components.values() {
            acc += coeff.clone() * coeff.clone();
        }
        acc
    }

    /// Euclidean norm as a double.
    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn scale(&self, s: &Scalar) -> Multivector {
        assert_eq!(self.kind, s.kind(), "scalar kind mismatch");
        let mut out = Multivector::zero(self.n, self.kind);
        for (&blade, coeff) in &self.components {
            out.set(blade, coeff.clone() * s.clone());
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Multivector {
        self.scale(&Scalar::Exact(r.clone()))
    }

    /// Convert an exact value to the approximate kind (identity on approx).
    pub fn to_approx(&self) -> Multivector {
        let mut out = Multivector::zero(self.n, ScalarKind::Approx);
        for (&blade, coeff) in &self.components {
            out.accumulate(blade, Scalar::Approx(coeff.to_f64()));
        }
        out
    }

    /// Max absolute component value, as f64 (residual measurement).
    pub fn max_abs_component(&self) -> f64 {
        self.components
            .values()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.check_compatible(rhs).expect("incompatible multivectors");
        let mut out = self.clone();
        for (&blade, coeff) in &rhs.components {
            out.accumulate(blade, coeff.clone());
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        let mut out = Multivector::zero(self.n, self.kind);
        for (&blade, coeff) in &self.components {
            out.set(blade, -coeff.clone());
        }
        out
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("incompatible multivectors")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (blade, coeff) in &self.components {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if blade.grade() == 0 {
                write!(f, "{coeff}")?;
            } else {
                let name: String =
                    blade.indices().iter().map(|i| i.to_string()).collect::<Vec<_>>().join("");
                write!(f, "({coeff})e{name}")?;
            }
        }
        Ok(())
    }
}

/// A paravector `x0 + x1 e_1 + ... + xn e_n`, i.e. a point of `R^{n+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Paravector {
    pub x0: Scalar,
    pub vec: Vec<Scalar>,
}

impl Paravector {
    pub fn new(x0: Scalar, vec: Vec<Scalar>) -> Self {
        let kind = x0.kind();
        assert!(vec.iter().all(|s| s.kind() == kind), "scalar kind mismatch");
        Paravector { x0, vec }
    }

    pub fn from_f64(coords: &[f64]) -> Self {
        assert!(!coords.is_empty());
        Paravector {
            x0: Scalar::Approx(coords[0]),
            vec: coords[1..].iter().map(|&v| Scalar::Approx(v)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.vec.len()
    }

    pub fn to_multivector(&self) -> Multivector {
        let n = self.vec.len();
        let mut mv = Multivector::zero(n, self.x0.kind());
        mv.accumulate(BladeIndex::SCALAR, self.x0.clone());
        for (i, c) in self.vec.iter().enumerate() {
            mv.accumulate(BladeIndex::generator(i + 1), c.clone());
        }
        mv
    }

    /// `x0 - x̲`.
    pub fn conjugate(&self) -> Paravector {
        Paravector {
            x0: self.x0.clone(),
            vec: self.vec.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// `x0^2 + x1^2 + ... + xn^2`.
    pub fn norm_sq(&self) -> Scalar {
        let mut acc = self.x0.clone() * self.x0.clone();
        for c in &self.vec {
            acc += c.clone() * c.clone();
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }
}

/// f64 norm of a coordinate tuple `(x0, ..., xn)`.
pub fn point_norm(coords: &[f64]) -> f64 {
    coords.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Multivector {
        Multivector::basis_vector(n, i, ScalarKind::Exact)
    }

    #[test]
    fn generator_squares_to_minus_one() {
        for n in 1..=4 {
            for i in 1..=n {
                let ei = e(n, i);
                assert_eq!(&ei * &ei, Multivector::from_int(n, -1));
            }
        }
    }

    #[test]
    fn distinct_generators_anticommute() {
        let n = 4;
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let lhs = &e(n, i) * &e(n, j);
                let rhs = -&(&e(n, j) * &e(n, i));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn identity_element() {
        let one = Multivector::one(3, ScalarKind::Exact);
        let a = Multivector::from_terms(
            3,
            ScalarKind::Exact,
            [
                (BladeIndex::SCALAR, Scalar::from_int(2)),
                (BladeIndex::from_indices(&[1, 3]).unwrap(), Scalar::from_ratio(-5, 7)),
            ],
        )
        .unwrap();
        assert_eq!(&one * &a, a);
        assert_eq!(&a * &one, a);
    }

    #[test]
    fn binomial_product_expands() {
        // (1 + e1)(1 - e1) = 1 - e1^2 = 2
        let n = 2;
        let one = Multivector::one(n, ScalarKind::Exact);
        let a = &one + &e(n, 1);
        let b = &one - &e(n, 1);
        assert_eq!(&a * &b, Multivector::from_int(n, 2));
    }

    #[test]
    fn conjugation_signs() {
        let n = 3;
        assert_eq!(Multivector::one(n, ScalarKind::Exact).conjugate(), Multivector::one(n, ScalarKind::Exact));
        assert_eq!(e(n, 1).conjugate(), -&e(n, 1));
        let e12 = &e(n, 1) * &e(n, 2);
        assert_eq!(e12.conjugate(), -&e12);
        let e123 = &e12 * &e(n, 3);
        assert_eq!(e123.conjugate(), e123);
    }

    #[test]
    fn paravector_conjugate_and_modulus() {
        let p = Paravector::new(
            Scalar::from_int(2),
            vec![Scalar::from_int(1), Scalar::from_ratio(-1, 2), Scalar::from_int(3)],
        );
        let x = p.to_multivector();
        let xbar = p.conjugate().to_multivector();
        assert_eq!(x.conjugate(), xbar);
        // x * conj(x) = |x|^2, a scalar
        let prod = &x * &xbar;
        assert_eq!(prod, Multivector::scalar(3, p.norm_sq()));
    }

    #[test]
    fn norm_sq_matches_component_sum() {
        let a = &(&e(3, 1) + &e(3, 2)) + &Multivector::from_int(3, 0);
        assert_eq!(a.norm_sq(), Scalar::from_int(2));
        // Re(conj(a)·a) = |a|^2
        let b = Multivector::from_terms(
            3,
            ScalarKind::Exact,
            [
                (BladeIndex::SCALAR, Scalar::from_int(3)),
                (BladeIndex::from_indices(&[2]).unwrap(), Scalar::from_int(-2)),
                (BladeIndex::from_indices(&[1, 2, 3]).unwrap(), Scalar::from_ratio(1, 3)),
            ],
        )
        .unwrap();
        let lhs = (&b.conjugate() * &b).real_part();
        assert_eq!(lhs, b.norm_sq());
    }

    #[test]
    fn grade_projection_partitions() {
        let a = Multivector::from_terms(
            2,
            ScalarKind::Exact,
            [
                (BladeIndex::SCALAR, Scalar::from_int(1)),
                (BladeIndex::from_indices(&[1]).unwrap(), Scalar::from_int(1)),
                (BladeIndex::from_indices(&[1, 2]).unwrap(), Scalar::from_int(1)),
            ],
        )
        .unwrap();
        let g1 = a.grade_projection(1).unwrap();
        assert_eq!(g1, e(2, 1));
        let mut sum = Multivector::zero(2, ScalarKind::Exact);
        for k in 0..=2 {
            sum = &sum + &a.grade_projection(k).unwrap();
        }
        assert_eq!(sum, a);
        assert!(a.grade_projection(3).is_err());
    }

    #[test]
    fn real_part_of_paravector() {
        let p = Paravector::new(Scalar::from_ratio(7, 2), vec![Scalar::from_int(1)]);
        assert_eq!(p.to_multivector().real_part(), Scalar::from_ratio(7, 2));
    }

    #[test]
    fn conjugation_is_anti_automorphism_spot() {
        let n = 3;
        let a = &(&e(n, 1) * &e(n, 2)) + &Multivector::from_int(n, 2);
        let b = &e(n, 3) + &e(n, 1);
        let lhs = (&a * &b).conjugate();
        let rhs = &b.conjugate() * &a.conjugate();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = Multivector::one(2, ScalarKind::Exact);
        let b = Multivector::one(3, ScalarKind::Exact);
        assert_eq!(
            a.geometric_product(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn kind_mismatch_rejected() {
        let a = Multivector::one(2, ScalarKind::Exact);
        let b = Multivector::one(2, ScalarKind::Approx);
        assert_eq!(a.geometric_product(&b), Err(Error::ScalarKindMismatch));
    }

    #[test]
    fn display_renders_blades() {
        let a = &Multivector::from_int(2, 2) + &(&e(2, 1) * &e(2, 2)).scale(&Scalar::from_ratio(1, 3));
        assert_eq!(a.to_string(), "2 + (1/3)e12");
        assert_eq!(Multivector::zero(2, ScalarKind::Exact).to_string(), "0");
    }
}
