//! Koetter's Groebner-basis interpolation.
//!
//! The basis G_0..G_r starts as {1, Y, ..., Y^r}. Each linear constraint
//! "coefficient of X^a Y^b in G(X + x, Y + y) vanishes" is imposed by one
//! call to [`BasisState::update_basis`].

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldSpec, Gf};
use crate::poly::text::format_bi;
use crate::poly::{BiPoly, MonomialOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InterpolationPoint {
    pub x: Gf,
    pub y: Gf,
    pub mult: usize,
}

impl InterpolationPoint {
    pub fn new(x: Gf, y: Gf, mult: usize) -> Self {
        InterpolationPoint { x, y, mult }
    }
}

/// Points with multiplicities plus the code dimension k.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolationProblem {
    points: Vec<InterpolationPoint>,
    k: usize,
}

impl InterpolationProblem {
    pub fn new(points: Vec<InterpolationPoint>, k: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invalid("interpolation problem has no points".into()));
        }
        if k == 0 {
            return Err(Error::Invalid("k must be at least 1".into()));
        }
        let mut seen = HashSet::new();
        for p in &points {
            if p.mult == 0 {
                return Err(Error::Invalid("multiplicities must be positive".into()));
            }
            if !seen.insert((p.x, p.y)) {
                return Err(Error::Invalid(format!("duplicate point ({}, {})", p.x, p.y)));
            }
        }
        Ok(InterpolationProblem { points, k })
    }

    pub fn points(&self) -> &[InterpolationPoint] {
        &self.points
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_constraints(&self) -> usize {
        n_constraints(self.points.iter().map(|p| p.mult))
    }

    /// (delta*, r) for this problem.
    pub fn degree_bounds(&self) -> (usize, usize) {
        delta_star(self.n_constraints(), self.k)
    }
}

/// Number of linear constraints: sum of m(m+1)/2.
pub fn n_constraints(mults: impl IntoIterator<Item = usize>) -> usize {
    mults.into_iter().map(|m| m * (m + 1) / 2).sum()
}

/// Number of monomials X^i Y^j with i + (k-1) j <= delta. Requires k >= 2.
pub fn monomial_count_chi(delta: usize, k: usize) -> usize {
    assert!(k >= 2, "monomial count is infinite for k = 1");
    let w = k - 1;
    let jmax = delta / w;
    (jmax + 1) * (delta + 1) - w * jmax * (jmax + 1) / 2
}

/// Smallest delta with more monomials than `n` constraints, and the
/// corresponding Y-degree bound r = floor(delta / (k-1)).
///
/// For k = 1 every power of Y has weighted degree 0, so delta* = 0 and
/// r = n is used (n + 1 monomials Y^0..Y^n suffice).
pub fn delta_star(n: usize, k: usize) -> (usize, usize) {
    if k <= 1 {
        return (0, n);
    }
    let mut delta = 0;
    while monomial_count_chi(delta, k) <= n {
        delta += 1;
    }
    (delta, delta / (k - 1))
}

/// Order in which the constraints (a, b) of one point are imposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstraintSchedule {
    /// a = 0..m, then b = 0..m-a.
    #[default]
    AOuter,
    /// b = 0..m, then a = 0..m-b.
    BOuter,
}

impl ConstraintSchedule {
    pub fn constraints(self, mult: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(mult * (mult + 1) / 2);
        for u in 0..mult {
            for v in 0..mult - u {
                out.push(match self {
                    ConstraintSchedule::AOuter => (u, v),
                    ConstraintSchedule::BOuter => (v, u),
                });
            }
        }
        out
    }
}

/// The r+1 basis polynomials and the order they are compared under.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisState {
    polys: Vec<BiPoly>,
    order: MonomialOrder,
}

impl BasisState {
    /// {1, Y, ..., Y^r}
    pub fn initial(r: usize, order: MonomialOrder) -> Self {
        Self::from_polys((0..=r).map(|j| BiPoly::monomial(Gf::ONE, 0, j)).collect(), order)
    }

    pub fn from_polys(polys: Vec<BiPoly>, order: MonomialOrder) -> Self {
        BasisState { polys, order }
    }

    pub fn polys(&self) -> &[BiPoly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<BiPoly> {
        self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    fn key(&self, j: usize) -> (i64, usize) {
        let (i, l, _) = self.polys[j].leading_monomial(&self.order).expect("basis polynomials are nonzero");
        self.order.key(i, l)
    }

    /// Index of the least basis polynomial.
    pub fn least(&self) -> usize {
        (0..self.polys.len()).min_by_key(|&j| self.key(j)).expect("nonempty basis")
    }

    pub fn least_poly(&self) -> &BiPoly {
        &self.polys[self.least()]
    }

    /// Indices sorted ascending by leading monomial.
    pub fn ascending(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.polys.len()).collect();
        idx.sort_by_key(|&j| self.key(j));
        idx
    }

    /// Leading monomial Y-degrees, in index order.
    pub fn leading_y_degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.leading_monomial(&self.order).map_or(usize::MAX, |m| m.1)).collect()
    }

    /// Imposes one constraint. `disc` returns the discrepancy of a basis
    /// polynomial and `x` is the abscissa of the constraint's point.
    /// Returns the pivot index, or `None` when every discrepancy is zero.
    pub fn update_basis<F>(&mut self, gf: &Field, x: Gf, mut disc: F) -> Result<Option<usize>>
    where
        F: FnMut(&BiPoly) -> Result<Gf>,
    {
        let deltas = self.polys.iter().map(&mut disc).collect::<Result<Vec<Gf>>>()?;
        let mut pivot: Option<(usize, (i64, usize))> = None;
        for (j, d) in deltas.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let key = self.key(j);
            match pivot {
                Some((_, best)) => {
                    debug_assert_ne!(key, best, "basis leading monomials must be distinct");
                    if key < best {
                        pivot = Some((j, key));
                    }
                }
                None => pivot = Some((j, key)),
            }
        }
        let Some((t, _)) = pivot else {
            return Ok(None);
        };
        let dt = deltas[t];
        let gt = std::mem::take(&mut self.polys[t]);
        for (j, &dj) in deltas.iter().enumerate() {
            if j != t && !dj.is_zero() {
                let c = gf.div(dj, dt)?;
                self.polys[j].add_scaled_assign(gf, c, &gt);
            }
        }
        self.polys[t] = gt.mul_x_linear(gf, x);
        Ok(Some(t))
    }

    /// One line per state: "G_j = ..." entries joined by "; ", ascending.
    pub fn describe(&self, spec: &FieldSpec) -> String {
        self.ascending()
            .into_iter()
            .map(|j| format!("G_{j} = {}", format_bi(spec, &self.polys[j])))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Basis after one constraint, for golden comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub x: Gf,
    pub y: Gf,
    pub mult: usize,
    pub a: usize,
    pub b: usize,
    pub basis: BasisState,
}

impl TraceRow {
    pub fn display<'a>(&'a self, spec: &'a FieldSpec) -> TraceRowDisplay<'a> {
        TraceRowDisplay { row: self, spec }
    }
}

pub struct TraceRowDisplay<'a> {
    row: &'a TraceRow,
    spec: &'a FieldSpec,
}

impl fmt::Display for TraceRowDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.row;
        write!(
            f,
            "({}, {}) m={} [{},{}]: {}",
            self.spec.display(r.x),
            self.spec.display(r.y),
            r.mult,
            r.a,
            r.b,
            r.basis.describe(self.spec)
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub schedule: ConstraintSchedule,
    pub trace: bool,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub poly: BiPoly,
    pub basis: BasisState,
    pub trace: Vec<TraceRow>,
}

/// Runs Koetter's algorithm on `problem`, returning the least basis
/// polynomial under the (1, k-1) order.
pub fn solve(gf: &Field, problem: &InterpolationProblem) -> Result<(BiPoly, BasisState)> {
    let s = solve_with(gf, problem, &SolveOptions::default())?;
    Ok((s.poly, s.basis))
}

pub fn solve_with(gf: &Field, problem: &InterpolationProblem, opts: &SolveOptions) -> Result<Solution> {
    let (_, r) = problem.degree_bounds();
    let state = BasisState::initial(r, MonomialOrder::for_dimension(problem.k()));
    solve_points(gf, state, problem.points(), opts)
}

/// Imposes all constraints of `points` on `state` in order.
pub fn solve_points(gf: &Field, mut state: BasisState, points: &[InterpolationPoint], opts: &SolveOptions) -> Result<Solution> {
    let mut trace = Vec::new();
    for p in points {
        for (a, b) in opts.schedule.constraints(p.mult) {
            state.update_basis(gf, p.x, |g| Ok(g.shifted_coeff(gf, p.x, p.y, a, b)))?;
            if opts.trace {
                trace.push(TraceRow { x: p.x, y: p.y, mult: p.mult, a, b, basis: state.clone() });
            }
        }
    }
    Ok(Solution { poly: state.least_poly().clone(), basis: state, trace })
}
