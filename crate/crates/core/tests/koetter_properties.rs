mod common;

use common::{random_problem, random_uni, rng, satisfies, small_field, wdeg};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use reencode::cli::bench::random_instance;
use reencode::cli::golden;
use reencode::galois::{Field, Gf};
use reencode::koetter::{solve, solve_with, SolveOptions};
use reencode::oracle::brute_force_interpolate;
use reencode::poly::text::{parse_bi, parse_uni};
use reencode::poly::{BiPoly, MonomialOrder};
use reencode::rs_codec::{encode, reencode as reencode_points, CodeSpec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn basis_satisfies_every_constraint_so_far(seed in any::<u64>()) {
        let (gf, problem) = random_problem(seed, 12);
        let sol = solve_with(&gf, &problem, &SolveOptions { trace: true, ..Default::default() }).unwrap();
        prop_assert_eq!(sol.trace.len(), problem.n_constraints());
        let (_, r) = problem.degree_bounds();
        for (i, row) in sol.trace.iter().enumerate() {
            for g in row.basis.polys() {
                for done in &sol.trace[..=i] {
                    prop_assert!(g.shifted_coeff(&gf, done.x, done.y, done.a, done.b).is_zero());
                }
            }
            prop_assert_eq!(row.basis.leading_y_degrees(), (0..=r).collect::<Vec<_>>());
        }
        prop_assert!(satisfies(&gf, &sol.poly, &problem));
    }

    #[test]
    fn koetter_matches_oracle(seed in any::<u64>()) {
        let (gf, problem) = random_problem(seed, 12);
        let (q, _) = solve(&gf, &problem).unwrap();
        let oracle = brute_force_interpolate(&gf, &problem).unwrap();
        prop_assert!(satisfies(&gf, &oracle, &problem));
        prop_assert!(satisfies(&gf, &q, &problem));
        prop_assert_eq!(wdeg(&q, problem.k()), wdeg(&oracle, problem.k()));
        let order = MonomialOrder::for_dimension(problem.k());
        let (_, _, c) = q.leading_monomial(&order).unwrap();
        prop_assert_eq!(oracle.scale(&gf, c), q);
    }

    #[test]
    fn reencoding_agrees_at_given_positions(seed in any::<u64>()) {
        let spec = small_field(seed);
        let gf = Field::new(spec.clone());
        let mut rng = rng(seed);
        let k = rng.gen_range(1..spec.order());
        let xs: Vec<Gf> = spec.all_elements().collect::<Vec<_>>().choose_multiple(&mut rng, k).copied().collect();
        let pts: Vec<(Gf, Gf)> = xs.iter().map(|&x| (x, Gf(rng.gen_range(0..spec.order()) as u16))).collect();
        let e = reencode_points(&gf, &pts, k).unwrap();
        prop_assert!(e.degree().is_none_or(|d| d < k));
        for &(x, y) in &pts {
            prop_assert_eq!(e.eval(&gf, x), y);
        }
    }

    #[test]
    fn encoding_is_injective(seed in any::<u64>()) {
        let spec = small_field(seed);
        let gf = Field::new(spec.clone());
        let mut rng = rng(seed);
        let n = rng.gen_range(2..spec.order());
        let k = rng.gen_range(1..=n);
        let support: Vec<Gf> = spec.all_elements().collect::<Vec<_>>().choose_multiple(&mut rng, n).copied().collect();
        let code = CodeSpec::new(spec.clone(), k, support).unwrap();
        let f1 = random_uni(&mut rng, &spec, k);
        let f2 = random_uni(&mut rng, &spec, k);
        let c1 = encode(&gf, &code, &f1).unwrap();
        let c2 = encode(&gf, &code, &f2).unwrap();
        prop_assert_eq!(c1 == c2, f1 == f2);
    }
}

#[test]
fn example_interpolant_factors_completely() {
    let spec = golden::field();
    let gf = Field::new(spec.clone());
    let (q, _) = solve(&gf, &golden::problem(&spec)).unwrap();
    let mut product = BiPoly::from_uni(parse_uni(&spec, "a^3 + X").unwrap());
    for m in [golden::MESSAGE, golden::OTHER_MESSAGE] {
        product = product.mul(&gf, &BiPoly::y_minus(&parse_uni(&spec, m).unwrap()));
    }
    assert_eq!(q, product);
    assert_eq!(q, parse_bi(&spec, golden::INTERPOLANT).unwrap());
    assert!(q.eval_y(&gf, &parse_uni(&spec, golden::MESSAGE).unwrap()).is_zero());
}

/// Multiplications per r N^2 stay within a constant band as N doubles.
#[test]
fn solve_cost_scales_as_r_n_squared() {
    let mut ratios = Vec::new();
    for n in [16, 32, 64, 128] {
        let inst = random_instance(n, 4, n / 4, 7).unwrap();
        let gf = Field::new(inst.code.field().clone());
        let before = gf.counter();
        solve(&gf, &inst.problem).unwrap();
        let mults = (gf.counter() - before).multiplications as f64;
        let big_n = inst.problem.n_constraints() as f64;
        let (_, r) = inst.problem.degree_bounds();
        ratios.push(mults / (r as f64 * big_n * big_n));
    }
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    assert!(max / min < 4.0, "{ratios:?}");
}
