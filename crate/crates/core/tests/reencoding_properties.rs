mod common;

use common::{force_zero, planted, random_elem, random_problem, rng, satisfies, structured, wdeg};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use reencode::galois::{Field, Gf};
use reencode::koetter::{solve, InterpolationProblem};
use reencode::poly::{reconstruct, unscale_y, MonomialOrder, UniPoly};
use reencode::reencoding::{
    build_context, decode_interpolation_reduced, remaining_points, select_reencoding_set, shift_points, ReducedOptions,
};

fn reencodable(seed: u64) -> (Field, InterpolationProblem) {
    let p = planted(seed, 10, 4);
    (p.gf, p.problem)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn scaled_multiplicity_off_reencoding_set(seed in any::<u64>(), s in 0usize..3, t in 0usize..3) {
        let st = structured(seed);
        let gf = &st.gf;
        let mut rng = rng(seed.wrapping_add(1));
        let spec = gf.spec_arc();
        let alpha = random_elem(&mut rng, &spec);
        prop_assume!(!st.g.eval(gf, alpha).is_zero());
        prop_assume!(!st.h.is_zero());
        let gamma = random_elem(&mut rng, &spec);
        let h = force_zero(gf, &st.h, &st.g, alpha, gamma, s, t);
        let q = unscale_y(gf, &h, &st.psi, &st.g).unwrap();
        let beta = gf.mul(gamma, st.g.eval(gf, alpha));
        prop_assert_eq!(q.multiplicity(gf, alpha, beta).unwrap(), h.multiplicity(gf, alpha, gamma).unwrap());
        prop_assert!(h.multiplicity(gf, alpha, gamma).unwrap() >= s + t);
    }

    #[test]
    fn scaled_multiplicity_on_reencoding_set(seed in any::<u64>(), s in 0usize..3, t in 0usize..3) {
        let st = structured(seed);
        let gf = &st.gf;
        let mut rng = rng(seed.wrapping_add(2));
        let &(alpha, v) = st.xs.choose(&mut rng).unwrap();
        prop_assume!(!st.h.is_zero());
        let gamma = random_elem(&mut rng, &gf.spec_arc());
        let h = force_zero(gf, &st.h, &st.g, alpha, gamma, s, t);
        let q = unscale_y(gf, &h, &st.psi, &st.g).unwrap();
        let lin = UniPoly::linear(alpha);
        let w = unscale_y(gf, &h, &lin.pow(gf, v), &lin).unwrap();
        let dg = st.g.derivative().eval(gf, alpha);
        let beta = gf.mul(gamma, dg);
        prop_assert_eq!(q.multiplicity(gf, alpha, beta).unwrap(), w.multiplicity(gf, alpha, gamma).unwrap());
    }

    #[test]
    fn unscaled_degree_identity(seed in any::<u64>()) {
        let st = structured(seed);
        prop_assume!(!st.h.is_zero());
        let k = st.xs.len();
        let q = unscale_y(&st.gf, &st.h, &st.psi, &st.g).unwrap();
        let deg_psi = st.psi.degree().unwrap() as i64;
        prop_assert_eq!(q.wdeg(1, k as i64 - 1), Some(deg_psi + st.h.wdeg(1, -1).unwrap()));
    }

    #[test]
    fn reduced_solution_degree_identity(seed in any::<u64>()) {
        let (gf, problem) = reencodable(seed);
        let (sol, ctx) = decode_interpolation_reduced(&gf, &problem, &ReducedOptions::default()).unwrap();
        let q = unscale_y(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g).unwrap();
        prop_assert_eq!(wdeg(&q, problem.k()), Some(ctx.psi_degree() as i64 + sol.poly.wdeg(1, -1).unwrap()));
    }

    #[test]
    fn shifted_problem_solution_shifts_back(seed in any::<u64>()) {
        let (gf, problem) = reencodable(seed);
        let r = select_reencoding_set(&gf, &problem).unwrap();
        let shifted = shift_points(&gf, &problem, &r.e).unwrap();
        let (q, _) = solve(&gf, &problem).unwrap();
        let (q_shifted, _) = solve(&gf, &shifted).unwrap();
        prop_assert_eq!(q_shifted.substitute_y_shift(&gf, &r.e), q);
    }

    #[test]
    fn reconstruction_matches_direct_solution(seed in any::<u64>()) {
        let (gf, problem) = reencodable(seed);
        let opts = ReducedOptions { check_invariants: true, ..Default::default() };
        let (sol, ctx) = decode_interpolation_reduced(&gf, &problem, &opts).unwrap();
        let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).unwrap();
        prop_assert!(satisfies(&gf, &q, &problem));
        let (direct, _) = solve(&gf, &problem).unwrap();
        prop_assert_eq!(wdeg(&q, problem.k()), wdeg(&direct, problem.k()));
        // Same leading monomial, so the two agree up to a scalar.
        let order = MonomialOrder::for_dimension(problem.k());
        let (i, j, c) = q.leading_monomial(&order).unwrap();
        let (i2, j2, c2) = direct.leading_monomial(&order).unwrap();
        prop_assert_eq!((i, j), (i2, j2));
        prop_assert_eq!(q.scale(&gf, gf.div(c2, c).unwrap()), direct);
    }

    #[test]
    fn reduction_removes_reencoding_constraints(seed in any::<u64>()) {
        let (gf, problem) = reencodable(seed);
        let r = select_reencoding_set(&gf, &problem).unwrap();
        let removed: usize = r.points.iter().map(|p| p.mult * (p.mult + 1) / 2).sum();
        let rest = remaining_points(&problem, &r);
        let (_, deg_y) = problem.degree_bounds();
        let ctx = build_context(&gf, r, deg_y, &rest).unwrap();
        prop_assert_eq!(ctx.n_constraints(), problem.n_constraints() - removed);
    }

    #[test]
    fn arbitrary_problems_reduce_or_report_erasures(seed in any::<u64>()) {
        let (gf, problem) = random_problem(seed, 12);
        let distinct: std::collections::BTreeSet<Gf> =
            problem.points().iter().filter(|p| !p.x.is_zero()).map(|p| p.x).collect();
        match decode_interpolation_reduced(&gf, &problem, &ReducedOptions { check_invariants: true, ..Default::default() }) {
            Ok((sol, ctx)) => {
                prop_assert!(distinct.len() >= problem.k());
                prop_assert!(ctx.reencoding.xs().all(|x| !x.is_zero()));
                let q = reconstruct(&gf, &sol.poly, &ctx.psi(&gf), &ctx.g, &ctx.reencoding.e).unwrap();
                prop_assert!(satisfies(&gf, &q, &problem));
            }
            Err(e) => {
                prop_assert!(distinct.len() < problem.k());
                prop_assert_eq!(e, reencode::Error::TooManyErasures { k: problem.k(), available: distinct.len() });
            }
        }
    }
}
