//! Re-encoding and the coordinate transformation.
//!
//! k points R with distinct abscissas are interpolated by e(X). Subtracting
//! e moves them to Y = 0; dividing Y by g(X) = prod (X - x_i) then removes
//! the vanishing structure they impose. What is left is a much smaller
//! problem over the (1, -1) weighted order whose basis starts from the tail
//! polynomials t_j(X) Y^j.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::galois::{Field, Gf};
use crate::koetter::{BasisState, InterpolationPoint, InterpolationProblem, SolveOptions, Solution, TraceRow};
use crate::poly::{binom_odd, BiPoly, MonomialOrder, UniPoly};
use crate::rs_codec::reencode;

#[derive(Debug, Clone, PartialEq)]
pub struct ReencodingSet {
    pub points: Vec<InterpolationPoint>,
    pub e: UniPoly,
}

impl ReencodingSet {
    pub fn xs(&self) -> impl Iterator<Item = Gf> + '_ {
        self.points.iter().map(|p| p.x)
    }
}

/// Picks k points of highest multiplicity with distinct nonzero abscissas
/// and interpolates them.
///
/// For each abscissa the first point of maximal multiplicity represents it;
/// abscissas are then ranked by that multiplicity, ties keeping input order.
pub fn select_reencoding_set(gf: &Field, problem: &InterpolationProblem) -> Result<ReencodingSet> {
    let k = problem.k();
    let mut best: Vec<InterpolationPoint> = Vec::new();
    let mut slot: HashMap<Gf, usize> = HashMap::new();
    for p in problem.points() {
        if p.x.is_zero() {
            continue;
        }
        match slot.get(&p.x) {
            Some(&i) => {
                if p.mult > best[i].mult {
                    best[i] = *p;
                }
            }
            None => {
                slot.insert(p.x, best.len());
                best.push(*p);
            }
        }
    }
    if best.len() < k {
        return Err(Error::TooManyErasures { k, available: best.len() });
    }
    best.sort_by_key(|p| std::cmp::Reverse(p.mult));
    best.truncate(k);
    let pairs: Vec<(Gf, Gf)> = best.iter().map(|p| (p.x, p.y)).collect();
    let e = reencode(gf, &pairs, k)?;
    Ok(ReencodingSet { points: best, e })
}

/// Replaces every y by y - e(x).
pub fn shift_points(gf: &Field, problem: &InterpolationProblem, e: &UniPoly) -> Result<InterpolationProblem> {
    let pts = problem
        .points()
        .iter()
        .map(|p| InterpolationPoint::new(p.x, gf.sub(p.y, e.eval(gf, p.x)), p.mult))
        .collect();
    InterpolationProblem::new(pts, problem.k())
}

/// Everything the reduced solver and the reduced factorization need.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedContext {
    pub reencoding: ReencodingSet,
    pub r: usize,
    /// prod (X - x_i) over R
    pub g: UniPoly,
    /// t_j = prod (X - x_i)^[j - v_i]+ for j = 0..=r
    pub tails: Vec<UniPoly>,
    /// Points whose abscissa is not in R, with z = (y - e(x)) / g(x).
    pub s_star: Vec<InterpolationPoint>,
    /// Points sharing an abscissa with R, with z = (y - e(x)) / g'(x).
    pub t_star: Vec<InterpolationPoint>,
    v: HashMap<Gf, usize>,
}

impl ReducedContext {
    /// Re-encoding multiplicity at `x`, if `x` is a re-encoding abscissa.
    pub fn v_at(&self, x: Gf) -> Option<usize> {
        self.v.get(&x).copied()
    }

    /// psi = prod (X - x_i)^v_i, built on demand since the reduced solver
    /// never needs it.
    pub fn psi(&self, gf: &Field) -> UniPoly {
        let mut psi = UniPoly::one();
        for p in &self.reencoding.points {
            for _ in 0..p.mult {
                psi = psi.mul_linear(gf, p.x);
            }
        }
        psi
    }

    pub fn psi_degree(&self) -> usize {
        self.reencoding.points.iter().map(|p| p.mult).sum()
    }

    pub fn n_constraints(&self) -> usize {
        crate::koetter::n_constraints(self.s_star.iter().chain(&self.t_star).map(|p| p.mult))
    }
}

/// Builds g, the tails and the transformed point sets. `remaining` are the
/// points of the problem outside R.
pub fn build_context(gf: &Field, reencoding: ReencodingSet, r: usize, remaining: &[InterpolationPoint]) -> Result<ReducedContext> {
    let g = UniPoly::from_roots(gf, reencoding.xs());
    let v: HashMap<Gf, usize> = reencoding.points.iter().map(|p| (p.x, p.mult)).collect();
    let tails = (0..=r)
        .map(|j| {
            let mut t = UniPoly::one();
            for p in &reencoding.points {
                for _ in p.mult..j {
                    t = t.mul_linear(gf, p.x);
                }
            }
            t
        })
        .collect();
    let dg = g.derivative();
    let mut s_star = Vec::new();
    let mut t_star = Vec::new();
    for p in remaining {
        let shifted = gf.sub(p.y, reencoding.e.eval(gf, p.x));
        if v.contains_key(&p.x) {
            let z = gf.div(shifted, dg.eval(gf, p.x))?;
            t_star.push(InterpolationPoint::new(p.x, z, p.mult));
        } else {
            let z = gf.div(shifted, g.eval(gf, p.x))?;
            s_star.push(InterpolationPoint::new(p.x, z, p.mult));
        }
    }
    Ok(ReducedContext { reencoding, r, g, tails, s_star, t_star, v })
}

/// Coefficient of X^a Y^b in (X - x)^v G(X, Y / (X - x)) shifted to (x, z).
///
/// The Y^l coefficient of the transformed polynomial is (X - x)^(v - l)
/// times that of G, so its a-th Hasse derivative at x is the (a + l - v)-th
/// of G's (zero when a + l < v). For l > v this relies on the tail
/// structure, which makes the division by (X - x)^(l - v) exact.
pub fn reduced_discrepancy(gf: &Field, p: &BiPoly, x: Gf, z: Gf, v: usize, a: usize, b: usize) -> Result<Gf> {
    let ys = p.ys();
    let mut acc = Gf::ZERO;
    for l in (b..ys.len()).rev() {
        acc = gf.mul(acc, z);
        if !binom_odd(l, b) {
            continue;
        }
        if let Some(i) = (a + l).checked_sub(v) {
            acc = gf.add(acc, ys[l].hasse_at(gf, i, x));
        }
    }
    Ok(acc)
}

/// Checks that the Y^l coefficient of every polynomial is divisible by t_l.
pub fn check_tail_structure(gf: &Field, polys: &[BiPoly], tails: &[UniPoly]) -> Result<()> {
    let scratch = gf.fork();
    for p in polys {
        for (l, u) in p.ys().iter().enumerate() {
            let t = tails.get(l).ok_or_else(|| Error::Invalid(format!("Y-degree {l} exceeds the tail range")))?;
            if !u.is_zero() && !t.is_one() {
                u.exact_div(&scratch, t)?;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct ReducedOptions {
    pub solve: SolveOptions,
    /// Verify the tail structure after every update (on a scratch counter).
    pub check_invariants: bool,
}

impl Default for ReducedOptions {
    fn default() -> Self {
        ReducedOptions { solve: SolveOptions::default(), check_invariants: cfg!(debug_assertions) }
    }
}

/// Koetter's algorithm on the reduced problem: basis t_j Y^j, order
/// (1, -1), S* points first, then T* points with the modified discrepancy.
pub fn solve_reduced(gf: &Field, ctx: &ReducedContext, opts: &ReducedOptions) -> Result<Solution> {
    let polys = ctx.tails.iter().enumerate().map(|(j, t)| BiPoly::y_term(t.clone(), j)).collect();
    let mut state = BasisState::from_polys(polys, MonomialOrder::reduced());
    let mut trace = Vec::new();
    let schedule = opts.solve.schedule;
    for p in &ctx.s_star {
        for (a, b) in schedule.constraints(p.mult) {
            state.update_basis(gf, p.x, |g| Ok(g.shifted_coeff(gf, p.x, p.y, a, b)))?;
            if opts.check_invariants {
                check_tail_structure(gf, state.polys(), &ctx.tails)?;
            }
            if opts.solve.trace {
                trace.push(TraceRow { x: p.x, y: p.y, mult: p.mult, a, b, basis: state.clone() });
            }
        }
    }
    for p in &ctx.t_star {
        let v = ctx.v_at(p.x).expect("T* abscissas belong to R");
        for (a, b) in schedule.constraints(p.mult) {
            state.update_basis(gf, p.x, |g| reduced_discrepancy(gf, g, p.x, p.y, v, a, b))?;
            if opts.check_invariants {
                check_tail_structure(gf, state.polys(), &ctx.tails)?;
            }
            if opts.solve.trace {
                trace.push(TraceRow { x: p.x, y: p.y, mult: p.mult, a, b, basis: state.clone() });
            }
        }
    }
    Ok(Solution { poly: state.least_poly().clone(), basis: state, trace })
}

/// Points of `problem` not selected for R, in input order.
pub fn remaining_points(problem: &InterpolationProblem, reencoding: &ReencodingSet) -> Vec<InterpolationPoint> {
    problem
        .points()
        .iter()
        .filter(|p| !reencoding.points.iter().any(|q| q.x == p.x && q.y == p.y))
        .copied()
        .collect()
}

/// Re-encoding set, context and reduced solution for `problem`. The Y-degree
/// bound r comes from the original problem.
pub fn decode_interpolation_reduced(gf: &Field, problem: &InterpolationProblem, opts: &ReducedOptions) -> Result<(Solution, ReducedContext)> {
    let reencoding = select_reencoding_set(gf, problem)?;
    let remaining = remaining_points(problem, &reencoding);
    let (_, r) = problem.degree_bounds();
    let ctx = build_context(gf, reencoding, r, &remaining)?;
    let sol = solve_reduced(gf, &ctx, opts)?;
    Ok((sol, ctx))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::galois::FieldSpec;
    use crate::koetter::solve;
    use crate::poly::reconstruct;
    use crate::poly::text::{format_uni, parse_bi, parse_uni};

    fn gf8() -> (Arc<FieldSpec>, Field) {
        let spec = Arc::new(FieldSpec::new(3, 0b1011).unwrap());
        (spec.clone(), Field::new(spec))
    }

    fn example_problem(spec: &FieldSpec) -> InterpolationProblem {
        let pts = [("a", "a^4", 2), ("a^2", "a^6", 1), ("a^2", "a^3", 1), ("a^3", "1", 1), ("a^3", "a", 1), ("1", "a", 1), ("1", "1", 1)];
        let e = |s| spec.parse_element(s).unwrap();
        InterpolationProblem::new(pts.iter().map(|&(x, y, m)| InterpolationPoint::new(e(x), e(y), m)).collect(), 2).unwrap()
    }

    fn show(spec: &FieldSpec, pts: &[InterpolationPoint]) -> Vec<String> {
        pts.iter().map(|p| format!("({}, {})", spec.display(p.x), spec.display(p.y))).collect()
    }

    #[test]
    fn selects_first_points() {
        let (spec, gf) = gf8();
        let r = select_reencoding_set(&gf, &example_problem(&spec)).unwrap();
        assert_eq!(show(&spec, &r.points), ["(a, a^4)", "(a^2, a^6)"]);
        assert_eq!(format_uni(&spec, &r.e), "a^5 + a^6*X");
    }

    #[test]
    fn too_many_erasures() {
        let (_, gf) = gf8();
        let x = gf.from_exponent(2);
        let pts = (0..3).map(|i| InterpolationPoint::new(x, gf.from_exponent(i), 1)).collect();
        let p = InterpolationProblem::new(pts, 2).unwrap();
        assert_eq!(select_reencoding_set(&gf, &p), Err(Error::TooManyErasures { k: 2, available: 1 }));
        // Abscissa 0 is never eligible.
        let pts = vec![InterpolationPoint::new(Gf::ZERO, Gf::ONE, 3), InterpolationPoint::new(x, Gf::ONE, 1)];
        let p = InterpolationProblem::new(pts, 2).unwrap();
        assert_eq!(select_reencoding_set(&gf, &p), Err(Error::TooManyErasures { k: 2, available: 1 }));
    }

    #[test]
    fn shifts_points() {
        let (spec, gf) = gf8();
        let p = example_problem(&spec);
        let e = parse_uni(&spec, "a^5 + a^6*X").unwrap();
        let shifted = shift_points(&gf, &p, &e).unwrap();
        assert_eq!(
            show(&spec, shifted.points()),
            ["(a, 0)", "(a^2, 0)", "(a^2, a^4)", "(a^3, a)", "(a^3, 1)", "(1, 0)", "(1, a^3)"]
        );
        assert_eq!(shift_points(&gf, &p, &UniPoly::zero()).unwrap(), p);
        let (q, _) = solve(&gf, &shifted).unwrap();
        assert_eq!(q, parse_bi(&spec, "(a^4 + X + X^2)*Y + (a^3 + X)*Y^2").unwrap());
    }

    #[test]
    fn builds_context() {
        let (spec, gf) = gf8();
        let p = example_problem(&spec);
        let r = select_reencoding_set(&gf, &p).unwrap();
        let rest = remaining_points(&p, &r);
        let ctx = build_context(&gf, r, 3, &rest).unwrap();
        let tails: Vec<String> = ctx.tails.iter().map(|t| format_uni(&spec, t)).collect();
        assert_eq!(tails, ["1", "1", "a^2 + X", "a^5 + a^4*X + a*X^2 + X^3"]);
        assert_eq!(show(&spec, &ctx.s_star), ["(a^3, a^3)", "(a^3, a^2)", "(1, 0)", "(1, a)"]);
        assert_eq!(show(&spec, &ctx.t_star), ["(a^2, 1)"]);
        assert_eq!(ctx.n_constraints(), 5);
        assert_eq!(format_uni(&spec, &ctx.psi(&gf)), format_uni(&spec, &UniPoly::from_roots(&gf, [gf.from_exponent(1), gf.from_exponent(1), gf.from_exponent(2)])));
    }

    #[test]
    fn vacuous_tails_and_empty_remainder() {
        let (spec, gf) = gf8();
        let e = |s| spec.parse_element(s).unwrap();
        let pts = vec![InterpolationPoint::new(e("a"), e("1"), 3), InterpolationPoint::new(e("a^2"), e("a"), 3)];
        let p = InterpolationProblem::new(pts, 2).unwrap();
        let r = select_reencoding_set(&gf, &p).unwrap();
        let ctx = build_context(&gf, r, 3, &[]).unwrap();
        assert!(ctx.tails.iter().all(|t| t.is_one()));
        assert!(ctx.s_star.is_empty() && ctx.t_star.is_empty());
        // Without constraints the least element under (1, -1) is the top
        // power Y^r, which maps back to (Y - e)^r.
        let h = solve_reduced(&gf, &ctx, &ReducedOptions::default()).unwrap().poly;
        assert_eq!(h, BiPoly::monomial(Gf::ONE, 0, 3));
        let (sol, ctx) = decode_interpolation_reduced(&gf, &p, &ReducedOptions::default()).unwrap();
        let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).unwrap();
        assert_eq!(q, BiPoly::y_minus(&ctx.reencoding.e).mul(&gf, &BiPoly::y_minus(&ctx.reencoding.e)).mul(&gf, &BiPoly::y_minus(&ctx.reencoding.e)));
        assert_eq!(q.wdeg(1, 1), solve(&gf, &p).unwrap().0.wdeg(1, 1));
    }

    #[test]
    fn reduced_solution_reconstructs() {
        let (spec, gf) = gf8();
        let p = example_problem(&spec);
        let (sol, ctx) = decode_interpolation_reduced(&gf, &p, &ReducedOptions::default()).unwrap();
        assert_eq!(sol.poly, parse_bi(&spec, "(a^3 + X)*Y + (a^5 + a^5*X + X^2)*Y^2").unwrap());
        let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).unwrap();
        assert_eq!(q, solve(&gf, &p).unwrap().0);
    }
}
