//! Python bindings: field arithmetic, encoding, interpolation and both
//! decoding paths.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use reencode::cli::json::{ProblemFile, Render};
use reencode::decoder::{decode as run_decode, DecodeOptions, DecodePath, DecodeReport};
use reencode::factorization::Validation;
use reencode::galois::{Field, FieldSpec, Gf};
use reencode::koetter::{self, solve, InterpolationPoint, InterpolationProblem};
use reencode::poly::reconstruct;
use reencode::poly::text::{format_bi, parse_uni};
use reencode::reencoding::{decode_interpolation_reduced, ReducedOptions};
use reencode::rs_codec::{encode, CodeSpec};
use reencode::Error;

create_exception!(reencode_py, ReencodeError, PyValueError);
create_exception!(reencode_py, TooManyErasures, ReencodeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TooManyErasures { .. } => TooManyErasures::new_err(e.to_string()),
        _ => ReencodeError::new_err(e.to_string()),
    }
}

fn elems(spec: &FieldSpec, values: &[u32]) -> PyResult<Vec<Gf>> {
    values.iter().map(|&v| spec.element(v).map_err(to_py)).collect()
}

fn ints(v: &[Gf]) -> Vec<u32> {
    v.iter().map(|a| a.value() as u32).collect()
}

/// GF(2^m) defined by a primitive polynomial given as a bit mask.
#[pyclass(name = "GaloisField", module = "reencode_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyField {
    spec: Arc<FieldSpec>,
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (m, prim_poly=None))]
    fn new(m: u32, prim_poly: Option<u32>) -> PyResult<Self> {
        let spec = match prim_poly {
            Some(p) => FieldSpec::new(m, p),
            None => FieldSpec::with_default_poly(m),
        }
        .map_err(to_py)?;
        Ok(Self { spec: Arc::new(spec) })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.spec.extension_degree()
    }

    #[getter]
    fn order(&self) -> usize {
        self.spec.order()
    }

    #[getter]
    fn prim_poly(&self) -> u32 {
        self.spec.primitive_polynomial()
    }

    /// Integer value of an element written as "0", "1", "a" or "a^i".
    fn parse(&self, text: &str) -> PyResult<u32> {
        self.spec.parse_element(text).map(|a| a.value() as u32).map_err(to_py)
    }

    fn display(&self, value: u32) -> PyResult<String> {
        Ok(self.spec.display(self.spec.element(value).map_err(to_py)?))
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        let v = elems(&self.spec, &[a, b])?;
        Ok(Field::new(self.spec.clone()).add(v[0], v[1]).value() as u32)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        let v = elems(&self.spec, &[a, b])?;
        Ok(Field::new(self.spec.clone()).mul(v[0], v[1]).value() as u32)
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        let v = elems(&self.spec, &[a])?;
        Field::new(self.spec.clone()).inv(v[0]).map(|x| x.value() as u32).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("GaloisField(m={}, prim_poly={:#x})", self.m(), self.prim_poly())
    }
}

/// Reed-Solomon code of dimension k over a support set (full length when
/// no support is given).
#[pyclass(name = "ReedSolomonCode", module = "reencode_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCode {
    code: CodeSpec,
}

#[pymethods]
impl PyCode {
    #[new]
    #[pyo3(signature = (field, k, support=None))]
    fn new(field: &PyField, k: usize, support: Option<Vec<u32>>) -> PyResult<Self> {
        let code = match support {
            Some(s) => CodeSpec::new(field.spec.clone(), k, elems(&field.spec, &s)?),
            None => CodeSpec::full_length(field.spec.clone(), k),
        }
        .map_err(to_py)?;
        Ok(Self { code })
    }

    #[getter]
    fn n(&self) -> usize {
        self.code.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.code.k()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField { spec: self.code.field().clone() }
    }

    #[getter]
    fn support(&self) -> Vec<u32> {
        ints(self.code.support())
    }

    /// Codeword of the message given by its coefficients, lowest first.
    fn encode(&self, message: Vec<u32>) -> PyResult<Vec<u32>> {
        let spec = self.code.field();
        let f = reencode::poly::UniPoly::from_coeffs(elems(spec, &message)?);
        let c = encode(&Field::new(spec.clone()), &self.code, &f).map_err(to_py)?;
        Ok(ints(&c.symbols))
    }

    /// Like `encode`, with the message written as text, e.g. "a^6 + a^2 X".
    fn encode_text(&self, message: &str) -> PyResult<Vec<u32>> {
        let f = parse_uni(self.code.field(), message).map_err(to_py)?;
        self.encode(ints(f.coeffs()))
    }
}

/// Interpolation points (x, y, multiplicity) for a code.
#[pyclass(name = "Problem", module = "reencode_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyProblem {
    code: CodeSpec,
    problem: InterpolationProblem,
}

#[pymethods]
impl PyProblem {
    #[new]
    fn new(code: &PyCode, points: Vec<(u32, u32, usize)>) -> PyResult<Self> {
        let spec = code.code.field();
        let mut pts = Vec::with_capacity(points.len());
        for (x, y, m) in points {
            pts.push(InterpolationPoint::new(spec.element(x).map_err(to_py)?, spec.element(y).map_err(to_py)?, m));
        }
        let problem = InterpolationProblem::new(pts, code.code.k()).map_err(to_py)?;
        Ok(Self { code: code.code.clone(), problem })
    }

    /// Parses the JSON problem format used by the command-line tool.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let (code, problem) = ProblemFile::parse(text).and_then(|f| f.build()).map_err(to_py)?;
        Ok(Self { code, problem })
    }

    #[getter]
    fn code(&self) -> PyCode {
        PyCode { code: self.code.clone() }
    }

    #[getter]
    fn points(&self) -> Vec<(u32, u32, usize)> {
        self.problem.points().iter().map(|p| (p.x.value() as u32, p.y.value() as u32, p.mult)).collect()
    }

    #[getter]
    fn n_constraints(&self) -> usize {
        self.problem.n_constraints()
    }

    /// (delta*, r): weighted-degree and Y-degree bounds.
    fn degree_bounds(&self) -> (usize, usize) {
        self.problem.degree_bounds()
    }

    /// Minimal interpolation polynomial Q as text.
    fn interpolate(&self) -> PyResult<String> {
        let spec = self.code.field();
        let (q, _) = solve(&Field::new(spec.clone()), &self.problem).map_err(to_py)?;
        Ok(format_bi(spec, &q))
    }

    /// (H, Q) from the reduced problem: H as solved, Q reconstructed from it.
    fn interpolate_reduced(&self) -> PyResult<(String, String)> {
        let spec = self.code.field();
        let gf = Field::new(spec.clone());
        let (sol, ctx) = decode_interpolation_reduced(&gf, &self.problem, &ReducedOptions::default()).map_err(to_py)?;
        let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).map_err(to_py)?;
        Ok((format_bi(spec, &sol.poly), format_bi(spec, &q)))
    }

    /// Decodes along "reduced" (default) or "direct". `validate` checks each
    /// reduced-path candidate against the reconstructed Q.
    #[pyo3(signature = (path="reduced", tau=None, validate=false))]
    fn decode(&self, path: &str, tau: Option<usize>, validate: bool) -> PyResult<DecodeResult> {
        let path = match path {
            "reduced" => DecodePath::Reduced,
            "direct" => DecodePath::Direct,
            other => return Err(ReencodeError::new_err(format!("unknown path {other:?}"))),
        };
        let validation = if validate { Validation::Reconstruct } else { Validation::RulesOnly };
        let opts = DecodeOptions { tau, validation, check_invariants: Some(false), ..Default::default() };
        let gf = Field::new(self.code.field().clone());
        let report = run_decode(&gf, &self.problem, path, &opts).map_err(to_py)?;
        Ok(DecodeResult::new(self.code.field(), report))
    }

    fn __repr__(&self) -> String {
        format!("Problem(points={}, k={}, constraints={})", self.problem.points().len(), self.problem.k(), self.n_constraints())
    }
}

#[pyclass(name = "DecodeResult", module = "reencode_py", frozen, get_all)]
pub struct DecodeResult {
    path: String,
    /// Accepted messages as coefficient lists, lowest first.
    accepted: Vec<Vec<u32>>,
    n_constraints: usize,
    reduced_constraints: Option<usize>,
    interpolation_multiplications: u64,
    total_multiplications: u64,
    interpolant: String,
    report_json: String,
}

impl DecodeResult {
    fn new(spec: &Arc<FieldSpec>, r: DecodeReport) -> Self {
        let c = r.counters;
        let report = Render { spec, ints: true }.report(&r);
        Self {
            path: match r.path {
                DecodePath::Direct => "direct".into(),
                DecodePath::Reduced => "reduced".into(),
            },
            accepted: r.accepted().into_iter().map(|f| ints(f.coeffs())).collect(),
            n_constraints: r.stats.n_constraints,
            reduced_constraints: r.stats.reduced_constraints,
            interpolation_multiplications: c.interpolation.multiplications,
            total_multiplications: c.reencoding.multiplications + c.interpolation.multiplications + c.factorization.multiplications,
            interpolant: format_bi(spec, &r.interpolant),
            report_json: serde_json::to_string(&report).expect("serializable"),
        }
    }
}

#[pymethods]
impl DecodeResult {
    fn __repr__(&self) -> String {
        format!("DecodeResult(path={:?}, accepted={:?})", self.path, self.accepted)
    }
}

/// (delta*, r) for n constraints and dimension k.
#[pyfunction]
fn delta_star(n: usize, k: usize) -> (usize, usize) {
    koetter::delta_star(n, k)
}

/// Runs the built-in golden checks; returns (passed, report lines).
#[pyfunction]
fn selftest() -> (bool, Vec<String>) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = reencode::cli::run(["rsreenc", "selftest"], &mut out, &mut err);
    let text = String::from_utf8_lossy(&out);
    (code == 0, text.lines().map(str::to_owned).collect())
}

#[pymodule]
fn reencode_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyProblem>()?;
    m.add_class::<DecodeResult>()?;
    m.add_function(wrap_pyfunction!(delta_star, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    m.add("ReencodeError", m.py().get_type::<ReencodeError>())?;
    m.add("TooManyErasures", m.py().get_type::<TooManyErasures>())?;
    Ok(())
}
