//! JSON wire forms for multivectors, polynomials, and coefficient series.
//!
//! A multivector serializes as
//! `{"n": 3, "terms": [{"blade": [1,2], "num": "-1", "den": "3"}]}` in the
//! exact kind, with `"value": f` replacing `num`/`den` in the approximate
//! kind. Polynomials wrap terms as `{"exps": [...], "coeff": <mv>}` and
//! series as `{"basis": "taylor"|"appell", "coeffs": [...]}`. The optional
//! top-level `"schema"` field is the versioned envelope tag used by the
//! CLI.

use crate::appell::{AppellSeries, TaylorSeries};
use crate::error::{Error, Result};
use crate::multivector::{BladeIndex, Multivector};
use crate::polynomial::{CliffordPolynomial, ExponentVector};
use crate::scalar::{Rational, Scalar, ScalarKind};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

/// Envelope tag stamped on CLI outputs.
pub const SCHEMA: &str = "cliffordlab/v1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDto {
    Exact { num: String, den: String },
    Approx { value: f64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDto {
    pub blade: Vec<usize>,
    #[serde(flatten)]
    pub coeff: CoeffDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultivectorDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub n: usize,
    pub terms: Vec<TermDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyTermDto {
    pub exps: Vec<u16>,
    pub coeff: MultivectorDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub n: usize,
    pub terms: Vec<PolyTermDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub n: usize,
    pub basis: String,
    pub coeffs: Vec<MultivectorDto>,
}

fn scalar_to_dto(s: &Scalar) -> CoeffDto {
    match s {
        Scalar::Exact(r) => CoeffDto::Exact { num: r.numer().to_string(), den: r.denom().to_string() },
        Scalar::Approx(v) => CoeffDto::Approx { value: *v },
    }
}

fn scalar_from_dto(dto: &CoeffDto) -> Result<Scalar> {
    match dto {
        CoeffDto::Exact { num, den } => {
            let n = BigInt::from_str(num)
                .map_err(|e| Error::Parse(format!("bad numerator '{num}': {e}")))?;
            let d = BigInt::from_str(den)
                .map_err(|e| Error::Parse(format!("bad denominator '{den}': {e}")))?;
            if d == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Scalar::Exact(Rational::new(n, d)))
        }
        CoeffDto::Approx { value } => Ok(Scalar::Approx(*value)),
    }
}

pub fn multivector_to_dto(mv: &Multivector) -> MultivectorDto {
    let terms = mv
        .terms()
        .map(|(blade, coeff)| TermDto { blade: blade.indices(), coeff: scalar_to_dto(coeff) })
        .collect();
    MultivectorDto { schema: None, n: mv.dimension(), terms }
}

pub fn multivector_from_dto(dto: &MultivectorDto) -> Result<Multivector> {
    let mut kind = None;
    let mut terms = Vec::with_capacity(dto.terms.len());
    for term in &dto.terms {
        let blade = BladeIndex::from_indices(&term.blade)?;
        if !blade.fits_dimension(dto.n) {
            return Err(Error::Parse(format!(
                "blade {:?} does not fit n = {}",
                term.blade, dto.n
            )));
        }
        let coeff = scalar_from_dto(&term.coeff)?;
        match kind {
            None => kind = Some(coeff.kind()),
            Some(k) if k != coeff.kind() => return Err(Error::ScalarKindMismatch),
            _ => {}
        }
        terms.push((blade, coeff));
    }
    Multivector::from_terms(dto.n, kind.unwrap_or(ScalarKind::Exact), terms)
}

pub fn polynomial_to_dto(p: &CliffordPolynomial) -> PolynomialDto {
    let terms = p
        .terms()
        .map(|(exps, coeff)| PolyTermDto { exps: exps.0.clone(), coeff: multivector_to_dto(coeff) })
        .collect();
    PolynomialDto { schema: None, n: p.dimension(), terms }
}

pub fn polynomial_from_dto(dto: &PolynomialDto) -> Result<CliffordPolynomial> {
    let mut kind = None;
    let mut terms = Vec::with_capacity(dto.terms.len());
    for term in &dto.terms {
        let coeff = multivector_from_dto(&term.coeff)?;
        match kind {
            None => kind = Some(coeff.kind()),
            Some(k) if k != coeff.kind() => return Err(Error::ScalarKindMismatch),
            _ => {}
        }
        terms.push((ExponentVector(term.exps.clone()), coeff));
    }
    CliffordPolynomial::from_terms(dto.n, kind.unwrap_or(ScalarKind::Exact), terms)
}

pub fn taylor_series_to_dto(s: &TaylorSeries) -> SeriesDto {
    SeriesDto {
        schema: None,
        n: s.dimension(),
        basis: "taylor".into(),
        coeffs: s.coefficients().iter().map(multivector_to_dto).collect(),
    }
}

pub fn appell_series_to_dto(s: &AppellSeries) -> SeriesDto {
    SeriesDto {
        schema: None,
        n: s.dimension(),
        basis: "appell".into(),
        coeffs: s.coefficients().iter().map(multivector_to_dto).collect(),
    }
}

/// A parsed series, tagged by basis.
#[derive(Debug, Clone)]
pub enum ParsedSeries {
    Taylor(TaylorSeries),
    Appell(AppellSeries),
}

pub fn series_from_dto(dto: &SeriesDto) -> Result<ParsedSeries> {
    let coeffs: Result<Vec<Multivector>> =
        dto.coeffs.iter().map(multivector_from_dto).collect();
    match dto.basis.as_str() {
        "taylor" => Ok(ParsedSeries::Taylor(TaylorSeries::new(dto.n, coeffs?)?)),
        "appell" => Ok(ParsedSeries::Appell(AppellSeries::new(dto.n, coeffs?)?)),
        other => Err(Error::Parse(format!("unknown basis '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multivector_round_trip() {
        let mv = Multivector::from_terms(
            3,
            ScalarKind::Exact,
            [
                (BladeIndex::SCALAR, Scalar::from_ratio(-7, 3)),
                (BladeIndex::from_indices(&[1, 3]).unwrap(), Scalar::from_int(2)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&multivector_to_dto(&mv)).unwrap();
        assert!(json.contains("\"blade\":[1,3]"));
        assert!(json.contains("\"num\":\"-7\""));
        let parsed: MultivectorDto = serde_json::from_str(&json).unwrap();
        assert_eq!(multivector_from_dto(&parsed).unwrap(), mv);
    }

    #[test]
    fn approx_multivector_round_trip() {
        let mv = Multivector::from_terms(
            2,
            ScalarKind::Approx,
            [(BladeIndex::generator(2), Scalar::Approx(0.5))],
        )
        .unwrap();
        let json = serde_json::to_string(&multivector_to_dto(&mv)).unwrap();
        assert!(json.contains("\"value\":0.5"));
        let parsed: MultivectorDto = serde_json::from_str(&json).unwrap();
        assert_eq!(multivector_from_dto(&parsed).unwrap(), mv);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = crate::appell::appell_polynomial(3, 2).unwrap();
        let dto = polynomial_to_dto(&p);
        let json = serde_json::to_string(&dto).unwrap();
        let parsed: PolynomialDto = serde_json::from_str(&json).unwrap();
        assert_eq!(polynomial_from_dto(&parsed).unwrap(), p);
    }

    #[test]
    fn series_round_trip() {
        let s = TaylorSeries::new(
            3,
            vec![Multivector::from_int(3, 1), Multivector::basis_vector(3, 2, ScalarKind::Exact)],
        )
        .unwrap();
        let json = serde_json::to_string(&taylor_series_to_dto(&s)).unwrap();
        let parsed: SeriesDto = serde_json::from_str(&json).unwrap();
        match series_from_dto(&parsed).unwrap() {
            ParsedSeries::Taylor(t) => assert_eq!(t, s),
            ParsedSeries::Appell(_) => panic!("wrong basis"),
        }
    }

    #[test]
    fn malformed_inputs_rejected() {
        let bad_den: MultivectorDto = serde_json::from_str(
            r#"{"n":2,"terms":[{"blade":[1],"num":"1","den":"0"}]}"#,
        )
        .unwrap();
        assert!(multivector_from_dto(&bad_den).is_err());
        let bad_blade: MultivectorDto = serde_json::from_str(
            r#"{"n":2,"terms":[{"blade":[3],"num":"1","den":"1"}]}"#,
        )
        .unwrap();
        assert!(multivector_from_dto(&bad_blade).is_err());
        let descending: MultivectorDto = serde_json::from_str(
            r#"{"n":3,"terms":[{"blade":[2,1],"num":"1","den":"1"}]}"#,
        )
        .unwrap();
        assert!(multivector_from_dto(&descending).is_err());
    }
}
