//! Small deterministic generator (SplitMix64) used by the verification
//! suites. Seeded runs produce identical inputs on every platform, which
//! keeps the machine-readable reports byte-identical.

use crate::multivector::{BladeIndex, Multivector};
use crate::rkhs::CoefficientFunction;
use crate::appell::TaylorSeries;
use crate::scalar::{Rational, Scalar, ScalarKind};
use num_bigint::BigInt;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform in `[-radius, radius)`.
    pub fn f64_in(&mut self, radius: f64) -> f64 {
        (self.next_f64() * 2.0 - 1.0) * radius
    }

    /// Small exact rational with numerator in `[-bound, bound]` and
    /// denominator in `[1, bound]`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let num = self.int_in(-bound, bound);
        let den = self.int_in(1, bound);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Exact multivector with a handful of random blades.
    pub fn multivector(&mut self, n: usize, blades: usize, bound: i64) -> Multivector {
        let mut mv = Multivector::zero(n, ScalarKind::Exact);
        for _ in 0..blades {
            let blade = BladeIndex((self.next_u64() % (1u64 << n)) as u32);
            let coeff = Multivector::from_terms(
                n,
                ScalarKind::Exact,
                [(blade, Scalar::Exact(self.rational(bound)))],
            )
            .expect("blade fits dimension");
            mv = &mv + &coeff;
        }
        mv
    }

    /// Exact paravector (grades 0 and 1 only).
    pub fn paravector(&mut self, n: usize, bound: i64) -> Multivector {
        let mut terms = vec![(BladeIndex::SCALAR, Scalar::Exact(self.rational(bound)))];
        for i in 1..=n {
            terms.push((BladeIndex::generator(i), Scalar::Exact(self.rational(bound))));
        }
        Multivector::from_terms(n, ScalarKind::Exact, terms).expect("paravector fits")
    }

    /// Taylor data of the given degree with random Clifford coefficients.
    pub fn taylor_series(&mut self, n: usize, degree: usize, bound: i64) -> TaylorSeries {
        let coeffs: Vec<Multivector> =
            (0..=degree).map(|_| self.multivector(n, 3, bound)).collect();
        TaylorSeries::new(n, coeffs).expect("coefficients share n")
    }

    /// Finitely supported coefficient function with random support below
    /// `max_index`.
    pub fn coefficient_function(
        &mut self,
        n: usize,
        max_index: usize,
        terms: usize,
        bound: i64,
    ) -> CoefficientFunction {
        let entries: Vec<(usize, Multivector)> = (0..terms)
            .map(|_| {
                let k = (self.next_u64() % (max_index as u64 + 1)) as usize;
                (k, self.multivector(n, 2, bound))
            })
            .collect();
        CoefficientFunction::from_terms(n, entries).expect("valid entries")
    }

    /// Point of `R^{n+1}` within the given radius.
    pub fn point(&mut self, n: usize, radius: f64) -> Vec<f64> {
        loop {
            let p: Vec<f64> = (0..=n).map(|_| self.f64_in(radius)).collect();
            let norm = crate::multivector::point_norm(&p);
            if norm <= radius && norm > 1e-6 {
                return p;
            }
        }
    }

    /// Unit vector of `R^n` (a slice direction).
    pub fn unit_vector(&mut self, n: usize) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..n).map(|_| self.f64_in(1.0)).collect();
            let norm = crate::multivector::point_norm(&v);
            if norm > 1e-3 {
                return v.iter().map(|c| c / norm).collect();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(43);
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn generated_values_are_in_range() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..200 {
            let v = rng.int_in(-5, 5);
            assert!((-5..=5).contains(&v));
            let f = rng.next_f64();
            assert!((0.0..1.0).contains(&f));
        }
        let p = rng.point(3, 2.0);
        assert_eq!(p.len(), 4);
        let u = rng.unit_vector(3);
        assert!((crate::multivector::point_norm(&u) - 1.0).abs() < 1e-12);
    }
}
