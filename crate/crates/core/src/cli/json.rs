//! JSON documents read and written by the command-line tool.
//!
//! Field elements are accepted as integers (bit-vector value) or as strings
//! `"0"`, `"1"`, `"a"`, `"a^i"`. Output uses the `a^i` form unless integers
//! are requested. Object keys come out sorted.

use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::decoder::DecodeReport;
use crate::error::{Error, Result};
use crate::factorization::{CandidateMessage, CandidateStatus, RejectionReason};
use crate::galois::{FieldSpec, Gf};
use crate::koetter::{InterpolationPoint, InterpolationProblem};
use crate::poly::{BiPoly, UniPoly};
use crate::rs_codec::CodeSpec;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Int(u32),
    Text(String),
}

impl ElementRepr {
    pub fn resolve(&self, spec: &FieldSpec) -> Result<Gf> {
        match self {
            ElementRepr::Int(v) => spec.element(*v),
            ElementRepr::Text(s) => spec.parse_element(s),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct CodeFile {
    pub m: u32,
    pub prim_poly: Option<u32>,
    pub n: Option<usize>,
    pub k: usize,
    pub support: Option<Vec<ElementRepr>>,
}

impl CodeFile {
    pub fn build(&self) -> Result<CodeSpec> {
        let spec = Arc::new(match self.prim_poly {
            Some(p) => FieldSpec::new(self.m, p)?,
            None => FieldSpec::with_default_poly(self.m)?,
        });
        let code = match &self.support {
            Some(s) => {
                let support = s.iter().map(|e| e.resolve(&spec)).collect::<Result<Vec<_>>>()?;
                CodeSpec::new(spec, self.k, support)?
            }
            None => {
                let full = CodeSpec::full_length(spec.clone(), self.k)?;
                match self.n {
                    Some(n) if n < full.n() => CodeSpec::new(spec, self.k, full.support()[..n].to_vec())?,
                    _ => full,
                }
            }
        };
        if let Some(n) = self.n {
            if n != code.n() {
                return Err(Error::WrongCount { expected: n, got: code.n() });
            }
        }
        Ok(code)
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct PointRepr {
    pub x: ElementRepr,
    pub y: ElementRepr,
    pub mult: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ProblemFile {
    pub code: CodeFile,
    pub points: Vec<PointRepr>,
    pub tau: Option<usize>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<(CodeSpec, InterpolationProblem)> {
        let code = self.code.build()?;
        let spec = code.field().clone();
        let points = self
            .points
            .iter()
            .map(|p| Ok(InterpolationPoint::new(p.x.resolve(&spec)?, p.y.resolve(&spec)?, p.mult)))
            .collect::<Result<Vec<_>>>()?;
        let problem = InterpolationProblem::new(points, code.k())?;
        Ok((code, problem))
    }
}

/// Renders field elements as `a^i` strings or as integers.
#[derive(Clone, Copy)]
pub struct Render<'a> {
    pub spec: &'a FieldSpec,
    pub ints: bool,
}

impl Render<'_> {
    pub fn elem(&self, a: Gf) -> Value {
        if self.ints {
            json!(a.value())
        } else {
            json!(self.spec.display(a))
        }
    }

    pub fn elems(&self, v: &[Gf]) -> Value {
        Value::Array(v.iter().map(|&a| self.elem(a)).collect())
    }

    pub fn uni(&self, p: &UniPoly) -> Value {
        self.elems(p.coeffs())
    }

    pub fn bi(&self, p: &BiPoly) -> Value {
        Value::Array(p.ys().iter().map(|u| self.uni(u)).collect())
    }

    fn opt_uni(&self, p: &Option<UniPoly>) -> Value {
        p.as_ref().map_or(Value::Null, |p| self.uni(p))
    }

    pub fn candidate(&self, c: &CandidateMessage) -> Value {
        json!({
            "f": self.opt_uni(&c.f),
            "status": status_name(c.status),
            "sigma": self.opt_uni(&c.sigma),
            "omega": self.opt_uni(&c.omega),
            "error_positions": c.error_positions,
            "error_values": self.elems(&c.error_values),
            "branches": c.branches,
        })
    }

    pub fn report(&self, r: &DecodeReport) -> Value {
        let mut m = Map::new();
        m.insert("path".into(), serde_json::to_value(r.path).expect("serializable"));
        m.insert("candidates".into(), Value::Array(r.candidates.iter().map(|c| self.candidate(c)).collect()));
        m.insert("counters".into(), serde_json::to_value(r.counters).expect("serializable"));
        m.insert("stats".into(), serde_json::to_value(r.stats).expect("serializable"));
        m.insert("interpolant".into(), self.bi(&r.interpolant));
        Value::Object(m)
    }
}

pub fn status_name(s: CandidateStatus) -> &'static str {
    match s {
        CandidateStatus::Accepted => "accepted",
        CandidateStatus::Rejected(r) => match r {
            RejectionReason::DegreeExceedsTau => "degree_exceeds_tau",
            RejectionReason::ConvolutionNonzeroTail => "convolution_nonzero_tail",
            RejectionReason::InsufficientRoots => "insufficient_roots",
            RejectionReason::ZeroErrorValue => "zero_error_value",
            RejectionReason::NotAFactor => "not_a_factor",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_problem_with_mixed_elements() {
        let text = r#"{"code": {"m": 3, "prim_poly": 11, "k": 2, "support": [1, "a", "a^2", "a^3"]},
                       "points": [{"x": "a", "y": "a^4", "mult": 2}, {"x": 4, "y": 5, "mult": 1}], "tau": 2}"#;
        let f = ProblemFile::parse(text).unwrap();
        let (code, p) = f.build().unwrap();
        assert_eq!(code.n(), 4);
        assert_eq!(p.points()[0].x, Gf(2));
        assert_eq!(p.points()[1].y, Gf(5));
        assert_eq!(f.tau, Some(2));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(ProblemFile::parse("{").is_err());
        let text = r#"{"code": {"m": 3, "prim_poly": 15, "k": 2}, "points": [{"x": 1, "y": 1, "mult": 1}]}"#;
        assert_eq!(ProblemFile::parse(text).unwrap().build().unwrap_err(), Error::NonPrimitivePolynomial(15));
        let text = r#"{"code": {"m": 3, "k": 2}, "points": [{"x": 9, "y": 1, "mult": 1}]}"#;
        assert!(ProblemFile::parse(text).unwrap().build().is_err());
    }
}
