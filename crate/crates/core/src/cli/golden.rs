//! The worked GF(8) example: problem data, the three iteration tables of the
//! Koetter runs (original, shifted, reduced) and comparison helpers.
//!
//! Table rows use the compact hand-written form (juxtaposition, `a` for
//! the primitive element) and are compared after a parse/format round trip, so
//! the comparison is on the canonical text form.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldSpec};
use crate::koetter::{BasisState, InterpolationPoint, InterpolationProblem, TraceRow};
use crate::poly::text::{format_bi, parse_bi, parse_uni};
use crate::poly::{BiPoly, UniPoly};
use crate::reencoding::{remaining_points, select_reencoding_set, shift_points};
use crate::rs_codec::CodeSpec;

/// (x, y, multiplicity, basis in ascending order).
pub type GoldenRow = (&'static str, &'static str, usize, &'static str);

pub const PROBLEM_POINTS: [(&str, &str, usize); 7] =
    [("a", "a^4", 2), ("a^2", "a^6", 1), ("a^2", "a^3", 1), ("a^3", "1", 1), ("a^3", "a", 1), ("1", "a", 1), ("1", "1", 1)];

pub const CODE_SUPPORT: [&str; 4] = ["1", "a", "a^2", "a^3"];
pub const MESSAGE: &str = "a^6 + a^2 X";
pub const CODEWORD: &str = "1 a^4 a^3 a";
pub const OTHER_MESSAGE: &str = "a^5 + a^6 X";

pub const INTERPOLANT: &str = "(1 + a^5 X + a X^3) + (a^4 + X + X^2)Y + (a^3 + X)Y^2";
pub const SHIFTED_INTERPOLANT: &str = "(a^4 + X + X^2)Y + (a^3 + X)Y^2";
pub const REDUCED_INTERPOLANT: &str = "(a^3 + X)Y + (a^5 + a^5 X + X^2)Y^2";
pub const SYNDROME: [&str; 8] = ["a^5", "a^3", "a", "a^6", "a^4", "a^2", "1", "a^5"];

/// Original problem; the multiplicity-2 point is processed with the
/// derivative in X before the derivative in Y.
pub const TABLE_ORIGINAL: [GoldenRow; 9] = [
    ("a", "a^4", 2, "G_0 = a + X; G_1 = a^4 + Y; G_2 = a + Y^2; G_3 = a^5 + Y^3"),
    ("a", "a^4", 2, "G_1 = a^4 + Y; G_0 = a^2 + X^2; G_2 = a + Y^2; G_3 = a^5 + Y^3"),
    ("a", "a^4", 2, "G_0 = a^2 + X^2; G_1 = (a^5 + a^4 X) + (a + X)Y; G_2 = a + Y^2; G_3 = a Y + Y^3"),
    (
        "a^2",
        "a^6",
        1,
        "G_1 = (a^6 + a^4 X + a^6 X^2) + (a + X)Y; G_2 = (a^3 + a^5 X^2) + Y^2; \
         G_0 = a^4 + a^2 X + a^2 X^2 + X^3; G_3 = (a^6 + a^4 X^2) + a Y + Y^3",
    ),
    (
        "a^2",
        "a^3",
        1,
        "G_2 = (a^4 + a^4 X + a X^2) + (a + X)Y + Y^2; G_0 = a^4 + a^2 X + a^2 X^2 + X^3; \
         G_1 = (a + a^2 X^2 + a^6 X^3) + (a^3 + a^4 X + X^2)Y; G_3 = (a^3 + a^2 X) + (a^5 + a^5 X)Y + Y^3",
    ),
    (
        "a^3",
        "1",
        1,
        "G_0 = (1 + a^3 X + X^3) + (a^2 + a X)Y + a Y^2; \
         G_1 = (a^5 + a^6 X + a^5 X^2 + a^6 X^3) + (a X + X^2)Y + a^2 Y^2; \
         G_2 = (1 + a^5 X + a X^3) + (a^4 + X + X^2)Y + (a^3 + X)Y^2; G_3 = (a^3 + a^2 X) + (a^5 + a^5 X)Y + Y^3",
    ),
    (
        "a^3",
        "a",
        1,
        "G_1 = (a^4 + a^4 X + a^5 X^2 + a^2 X^3) + (a^2 + X^2)Y + a^4 Y^2; \
         G_2 = (1 + a^5 X + a X^3) + (a^4 + X + X^2)Y + (a^3 + X)Y^2; \
         G_3 = (a^4 + a^6 X^3) + (a^6 + a^4 X)Y + Y^2 + Y^3; \
         G_0 = (a^3 + a^2 X + a^3 X^2 + a^3 X^3 + X^4) + (a^5 + a X + a X^2)Y + (a^4 + a X)Y^2",
    ),
    (
        "1",
        "a",
        1,
        "G_2 = (1 + a^5 X + a X^3) + (a^4 + X + X^2)Y + (a^3 + X)Y^2; \
         G_3 = (a^5 + X + a X^2 + a X^3) + (a + a^4 X + a^3 X^2)Y + Y^3; \
         G_0 = (a^2 + a^3 X + a^4 X^2 + X^4) + (a^2 + a X)Y + (1 + a X)Y^2; \
         G_1 = (a^4 + X^2 + a^3 X^3 + a^2 X^4) + (a^2 + a^2 X + X^2 + X^3)Y + (a^4 + a^4 X)Y^2",
    ),
    (
        "1",
        "1",
        1,
        "G_2 = (1 + a^5 X + a X^3) + (a^4 + X + X^2)Y + (a^3 + X)Y^2; \
         G_3 = (a^5 + X + a X^2 + a X^3) + (a + a^4 X + a^3 X^2)Y + Y^3; \
         G_1 = (a^4 + X^2 + a^3 X^3 + a^2 X^4) + (a^2 + a^2 X + X^2 + X^3)Y + (a^4 + a^4 X)Y^2; \
         G_0 = (a^2 + a^5 X + a^6 X^2 + a^4 X^3 + X^4 + X^5) + (a^2 + a^4 X + a X^2)Y + (1 + a^3 X + a X^2)Y^2",
    ),
];

/// Shifted problem (points moved by the re-encoding polynomial).
pub const TABLE_SHIFTED: [GoldenRow; 9] = [
    ("a", "0", 2, "G_0 = a + X; G_1 = Y; G_2 = Y^2; G_3 = Y^3"),
    ("a", "0", 2, "G_0 = a + X; G_1 = (a + X)Y; G_2 = Y^2; G_3 = Y^3"),
    ("a", "0", 2, "G_0 = a^2 + X^2; G_1 = (a + X)Y; G_2 = Y^2; G_3 = Y^3"),
    ("a^2", "0", 1, "G_0 = a^4 + a^2 X + a^2 X^2 + X^3; G_1 = (a + X)Y; G_2 = Y^2; G_3 = Y^3"),
    (
        "a^3",
        "a",
        1,
        "G_2 = (a^2 + a X)Y + Y^2; G_0 = (a^4 + a^2 X + a^2 X^2 + X^3) + (a^5 + a^4 X)Y; \
         G_1 = (a^4 + X + X^2)Y; G_3 = (a^3 + a^2 X)Y + Y^3",
    ),
    (
        "a^3",
        "1",
        1,
        "G_0 = (a^4 + a^2 X + a^2 X^2 + X^3) + (a + X)Y + a^4 Y^2; G_1 = (a^4 + X + X^2)Y; \
         G_2 = (a^5 + a X + a X^2)Y + (a^3 + X)Y^2; G_3 = (a^2 + a X)Y + a^3 Y^2 + Y^3",
    ),
    (
        "1",
        "0",
        1,
        "G_1 = (a^4 + X + X^2)Y; G_2 = (a^5 + a X + a X^2)Y + (a^3 + X)Y^2; \
         G_3 = (a^2 + a X)Y + a^3 Y^2 + Y^3; \
         G_0 = (a^4 + a X + a^6 X^3 + X^4) + (a + a^3 X + X^2)Y + (a^4 + a^4 X)Y^2",
    ),
    (
        "1",
        "a^3",
        1,
        "G_2 = (a^4 + X + X^2)Y + (a^3 + X)Y^2; G_3 = (a + a^3 X + X^2)Y + a^3 Y^2 + Y^3; \
         G_0 = (a^4 + a X + a^6 X^3 + X^4) + (a + a^3 X + X^2)Y + (a^4 + a^4 X)Y^2; \
         G_1 = (a^4 + a^5 X + X^3)Y",
    ),
    (
        "a^2",
        "a^4",
        1,
        "G_2 = (a^4 + X + X^2)Y + (a^3 + X)Y^2; G_3 = (a + a^3 X + X^2)Y + a^3 Y^2 + Y^3; \
         G_1 = (a^4 + a X + a^6 X^3 + X^4) + (a^2 + a^2 X + X^2 + X^3)Y + (a^4 + a^4 X)Y^2; \
         G_0 = (a^6 + a^6 X + a X^2 + a X^3 + X^4 + X^5) + (a^3 + a^6 X + a^5 X^2 + X^3)Y + (a^6 + a^3 X + a^4 X^2)Y^2",
    ),
];

/// Reduced problem, rows labelled (x, z).
pub const TABLE_REDUCED: [GoldenRow; 5] = [
    (
        "a^3",
        "a^3",
        1,
        "G_2 = a Y + (a^2 + X)Y^2; G_0 = 1 + a^4 Y; G_1 = (a^3 + X)Y; \
         G_3 = a^2 Y + (a^5 + a^4 X + a X^2 + X^3)Y^3",
    ),
    (
        "a^3",
        "a^2",
        1,
        "G_0 = 1 + Y + (a^6 + a^4 X)Y^2; G_1 = (a^3 + X)Y; G_2 = (a^4 + a X)Y + (a^5 + a^5 X + X^2)Y^2; \
         G_3 = a Y + (a^5 + a^3 X)Y^2 + (a^5 + a^4 X + a X^2 + X^3)Y^3",
    ),
    (
        "1",
        "0",
        1,
        "G_1 = (a^3 + X)Y; G_2 = (a^4 + a X)Y + (a^5 + a^5 X + X^2)Y^2; \
         G_3 = a Y + (a^5 + a^3 X)Y^2 + (a^5 + a^4 X + a X^2 + X^3)Y^3; \
         G_0 = (1 + X) + (1 + X)Y + (a^6 + a^3 X + a^4 X^2)Y^2",
    ),
    (
        "1",
        "a",
        1,
        "G_2 = (a^3 + X)Y + (a^5 + a^5 X + X^2)Y^2; \
         G_3 = (1 + X)Y + (a^5 + a^3 X)Y^2 + (a^5 + a^4 X + a X^2 + X^3)Y^3; \
         G_0 = (1 + X) + (1 + X)Y + (a^6 + a^3 X + a^4 X^2)Y^2; G_1 = (a^3 + a X + X^2)Y",
    ),
    (
        "a^2",
        "1",
        1,
        "G_2 = (a^3 + X)Y + (a^5 + a^5 X + X^2)Y^2; \
         G_3 = (1 + X)Y + (a^5 + a^3 X)Y^2 + (a^5 + a^4 X + a X^2 + X^3)Y^3; \
         G_1 = (1 + X) + (a + a^3 X + X^2)Y + (a^6 + a^3 X + a^4 X^2)Y^2; \
         G_0 = (a^2 + a^6 X + X^2) + (a^2 + a^6 X + X^2)Y + (a + a X + a^4 X^2 + a^4 X^3)Y^2",
    ),
];

pub fn field() -> Arc<FieldSpec> {
    Arc::new(FieldSpec::new(3, 0b1011).expect("x^3 + x + 1 is primitive"))
}

pub fn code(spec: &Arc<FieldSpec>) -> CodeSpec {
    let support = CODE_SUPPORT.iter().map(|s| spec.parse_element(s).expect("valid element")).collect();
    CodeSpec::new(spec.clone(), 2, support).expect("valid code")
}

pub fn problem(spec: &FieldSpec) -> InterpolationProblem {
    let e = |s: &str| spec.parse_element(s).expect("valid element");
    let pts = PROBLEM_POINTS.iter().map(|&(x, y, m)| InterpolationPoint::new(e(x), e(y), m)).collect();
    InterpolationProblem::new(pts, 2).expect("valid problem")
}

pub fn message(spec: &Arc<FieldSpec>, text: &str) -> UniPoly {
    parse_uni(spec, text).expect("valid polynomial")
}

/// Canonical text of a bivariate polynomial written in any accepted form.
pub fn canonical_poly(spec: &Arc<FieldSpec>, text: &str) -> Result<String> {
    Ok(format_bi(spec, &parse_bi(spec, text)?))
}

/// Parses a row "G_j = poly; ..." into the basis polynomials by index.
pub fn parse_basis(spec: &Arc<FieldSpec>, text: &str) -> Result<Vec<BiPoly>> {
    let mut polys: Vec<Option<BiPoly>> = Vec::new();
    for part in text.split(';') {
        let (name, poly) = part.split_once('=').ok_or_else(|| Error::Parse(format!("missing '=' in {part:?}")))?;
        let j: usize = name
            .trim()
            .strip_prefix("G_")
            .and_then(|j| j.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad basis name {name:?}")))?;
        if polys.len() <= j {
            polys.resize(j + 1, None);
        }
        polys[j] = Some(parse_bi(spec, poly.trim())?);
    }
    polys.into_iter().enumerate().map(|(j, p)| p.ok_or_else(|| Error::Parse(format!("G_{j} missing")))).collect()
}

/// Compares a solver trace with a table. The transcribed polynomials are
/// arranged in ascending order under the solver's monomial order, then the
/// canonical row texts are compared. Returns one message per mismatching
/// row; empty means identical.
pub fn compare_trace(spec: &Arc<FieldSpec>, trace: &[TraceRow], table: &[GoldenRow]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if trace.len() != table.len() {
        out.push(format!("trace has {} rows, table has {}", trace.len(), table.len()));
    }
    for (i, (row, &(x, y, m, basis))) in trace.iter().zip(table).enumerate() {
        let want_point = (spec.parse_element(x)?, spec.parse_element(y)?, m);
        if (row.x, row.y, row.mult) != want_point {
            out.push(format!("row {}: point ({}, {}) m={}, expected ({x}, {y}) m={m}", i + 1, spec.display(row.x), spec.display(row.y), row.mult));
        }
        let want = BasisState::from_polys(parse_basis(spec, basis)?, row.basis.order()).describe(spec);
        let got = row.basis.describe(spec);
        if got != want {
            out.push(format!("row {}:\n  got      {got}\n  expected {want}", i + 1));
        }
    }
    Ok(out)
}

/// The problem shifted by the re-encoding polynomial. Points are ordered
/// as in the table: re-encoding points, then remaining points off the
/// re-encoding abscissas, then those sharing one.
pub fn shifted_problem(gf: &Field, problem: &InterpolationProblem) -> Result<InterpolationProblem> {
    let r = select_reencoding_set(gf, problem)?;
    let (shared, free): (Vec<_>, Vec<_>) = remaining_points(problem, &r).into_iter().partition(|p| r.xs().any(|x| x == p.x));
    let mut points = r.points.clone();
    points.extend(free);
    points.extend(shared);
    shift_points(gf, &InterpolationProblem::new(points, problem.k())?, &r.e)
}
