#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use reencode::galois::{Field, FieldSpec, Gf};
use reencode::koetter::{InterpolationPoint, InterpolationProblem};
use reencode::poly::{BiPoly, UniPoly};
use reencode::rs_codec::{encode, CodeSpec};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// GF(8) for even seeds, GF(16) for odd ones.
pub fn small_field(seed: u64) -> Arc<FieldSpec> {
    if seed.is_multiple_of(2) {
        Arc::new(FieldSpec::new(3, 0b1011).unwrap())
    } else {
        Arc::new(FieldSpec::new(4, 0b10011).unwrap())
    }
}

pub fn random_elem(rng: &mut StdRng, spec: &FieldSpec) -> Gf {
    Gf(rng.gen_range(0..spec.order()) as u16)
}

pub fn random_uni(rng: &mut StdRng, spec: &FieldSpec, len: usize) -> UniPoly {
    UniPoly::from_coeffs((0..len).map(|_| random_elem(rng, spec)).collect())
}

/// Arbitrary problem (any x including 0, repeated abscissas allowed) with
/// at most `max_constraints` constraints.
pub fn random_problem(seed: u64, max_constraints: usize) -> (Field, InterpolationProblem) {
    let spec = small_field(seed);
    let mut rng = rng(seed);
    let k = rng.gen_range(2..=5);
    let n_points = rng.gen_range(1..=15);
    let mut points: Vec<InterpolationPoint> = Vec::new();
    let mut total = 0;
    for _ in 0..n_points * 4 {
        if points.len() == n_points {
            break;
        }
        let x = random_elem(&mut rng, &spec);
        let y = random_elem(&mut rng, &spec);
        let m = rng.gen_range(1..=3);
        if total + m * (m + 1) / 2 > max_constraints || points.iter().any(|p| p.x == x && p.y == y) {
            continue;
        }
        total += m * (m + 1) / 2;
        points.push(InterpolationPoint::new(x, y, m));
    }
    (Field::new(spec), InterpolationProblem::new(points, k).unwrap())
}

/// A codeword of a random code with nonzero support, some symbols replaced
/// by wrong values and some extra unreliable points.
pub struct Planted {
    pub gf: Field,
    pub code: CodeSpec,
    pub message: UniPoly,
    pub problem: InterpolationProblem,
    /// Support positions whose only point carries a wrong value.
    pub errors: Vec<usize>,
}

impl Planted {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.code.field()
    }

    /// Sum of multiplicities of the points lying on the planted message.
    pub fn score(&self) -> usize {
        self.problem.points().iter().filter(|p| self.message.eval(&self.gf, p.x) == p.y).map(|p| p.mult).sum()
    }
}

pub fn planted(seed: u64, max_n: usize, max_errors: usize) -> Planted {
    let spec = small_field(seed);
    let gf = Field::new(spec.clone());
    let mut rng = rng(seed ^ 0x9e37_79b9);
    let nonzero: Vec<Gf> = spec.all_elements().filter(|a| !a.is_zero()).collect();
    let n = rng.gen_range(3..=max_n.min(nonzero.len()));
    let k = rng.gen_range(2..=5.min(n - 1));
    let support: Vec<Gf> = nonzero.choose_multiple(&mut rng, n).copied().collect();
    let code = CodeSpec::new(spec.clone(), k, support).unwrap();
    let message = random_uni(&mut rng, &spec, k);
    let c = encode(&gf, &code, &message).unwrap();
    let n_errors = rng.gen_range(0..=max_errors.min(n));
    let mut positions: Vec<usize> = (0..n).collect();
    positions.shuffle(&mut rng);
    let mut errors: Vec<usize> = positions[..n_errors].to_vec();
    errors.sort_unstable();
    let mut points = Vec::new();
    for i in 0..n {
        let x = code.support()[i];
        let right = c.symbols[i];
        let y = if errors.contains(&i) { Gf(right.value() ^ rng.gen_range(1..spec.order()) as u16) } else { right };
        points.push(InterpolationPoint::new(x, y, rng.gen_range(1..=3)));
        if rng.gen_bool(0.2) {
            let extra = Gf(y.value() ^ rng.gen_range(1..spec.order()) as u16);
            if extra != right || !errors.contains(&i) {
                points.push(InterpolationPoint::new(x, extra, 1));
            }
        }
    }
    let problem = InterpolationProblem::new(points, k).unwrap();
    Planted { gf, code, message, problem, errors }
}

/// Whether every point of `problem` is a zero of `q` with its multiplicity.
pub fn satisfies(gf: &Field, q: &BiPoly, problem: &InterpolationProblem) -> bool {
    problem.points().iter().all(|p| q.multiplicity(gf, p.x, p.y).unwrap() >= p.mult)
}

pub fn wdeg(q: &BiPoly, k: usize) -> Option<i64> {
    q.wdeg(1, k as i64 - 1)
}

pub fn sorted(v: Vec<&UniPoly>) -> Vec<UniPoly> {
    let mut v: Vec<UniPoly> = v.into_iter().cloned().collect();
    v.sort_by_key(|f| f.coeffs().to_vec());
    v.dedup();
    v
}

/// Random re-encoding abscissas with multiplicities, g, psi and a random H
/// whose Y^j coefficient is a multiple of the tail t_j.
pub struct Structured {
    pub gf: Field,
    pub xs: Vec<(Gf, usize)>,
    pub g: UniPoly,
    pub psi: UniPoly,
    pub h: BiPoly,
}

pub fn structured(seed: u64) -> Structured {
    let spec = small_field(seed);
    let gf = Field::new(spec.clone());
    let mut rng = rng(seed);
    let nonzero: Vec<Gf> = spec.all_elements().filter(|a| !a.is_zero()).collect();
    let k = rng.gen_range(1..=4);
    let xs: Vec<(Gf, usize)> = nonzero.choose_multiple(&mut rng, k).map(|&x| (x, rng.gen_range(1..=3))).collect();
    let g = UniPoly::from_roots(&gf, xs.iter().map(|p| p.0));
    let mut psi = UniPoly::one();
    for &(x, v) in &xs {
        psi = psi.mul(&gf, &UniPoly::linear(x).pow(&gf, v));
    }
    let r = rng.gen_range(0..=3);
    let ys = (0..=r)
        .map(|j: usize| {
            let mut t = UniPoly::one();
            for &(x, v) in &xs {
                t = t.mul(&gf, &UniPoly::linear(x).pow(&gf, j.saturating_sub(v)));
            }
            t.mul(&gf, &random_uni(&mut rng, &spec, 3))
        })
        .collect();
    Structured { gf, xs, g, psi, h: BiPoly::from_ys(ys) }
}

/// Multiplies h by (X - a)^s (Y - c)^t g^t, which keeps the tail structure
/// and forces a zero of order s + t at (a, c).
pub fn force_zero(gf: &Field, h: &BiPoly, g: &UniPoly, a: Gf, c: Gf, s: usize, t: usize) -> BiPoly {
    let mut out = h.clone();
    for _ in 0..s {
        out = out.mul_x_linear(gf, a);
    }
    for _ in 0..t {
        out = out.mul(gf, &BiPoly::y_minus(&UniPoly::constant(c))).mul_uni(gf, g);
    }
    out
}
