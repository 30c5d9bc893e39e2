//! Benchmark instances.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::decoder::{decode, DecodeOptions, DecodePath};
use crate::error::Result;
use crate::galois::{Field, FieldSpec, Gf};
use crate::koetter::{InterpolationPoint, InterpolationProblem};
use crate::poly::UniPoly;
use crate::rs_codec::{encode, CodeSpec};

/// A problem together with the message it was planted from.
#[derive(Debug, Clone)]
pub struct Instance {
    pub code: CodeSpec,
    pub message: UniPoly,
    pub problem: InterpolationProblem,
}

fn random_message(rng: &mut StdRng, spec: &FieldSpec, k: usize) -> UniPoly {
    UniPoly::from_coeffs((0..k).map(|_| Gf(rng.gen_range(0..spec.order()) as u16)).collect())
}

fn wrong_value(rng: &mut StdRng, spec: &FieldSpec, right: Gf) -> Gf {
    Gf(right.value() ^ rng.gen_range(1..spec.order()) as u16)
}

/// Errors among the multiplicity-7 points in the default benchmark. With an
/// error-free re-encoding set every correct point maps to z = 0 and the
/// reduced problem degenerates.
pub const EXAMPLE1_RELIABLE_ERRORS: usize = 3;

/// Multiplicity profile of the large benchmark: (multiplicity, count).
pub const EXAMPLE1_PROFILE: [(usize, usize); 7] = [(7, 229), (6, 12), (5, 10), (4, 4), (3, 3), (2, 10), (1, 10)];

/// A (255, 239) code over GF(256) with the large benchmark's profile.
///
/// A random codeword supplies the y-values. Every position gets one correct
/// point; the 229 + 12 + 10 + 4 points of multiplicity 7, 6, 5 and 4 occupy
/// all 255 positions in that order. The 23 points of multiplicity 3, 2 and
/// 1 carry wrong values at positions 232..255, so some of them share an
/// abscissa with the re-encoding set and some do not. `reliable_errors`
/// of the multiplicity-7 points (spread evenly) also carry wrong values.
pub fn example1_instance(seed: u64, reliable_errors: usize) -> Result<Instance> {
    let spec = Arc::new(FieldSpec::new(8, 0x11d)?);
    let gf = Field::new(spec.clone());
    let code = CodeSpec::full_length(spec.clone(), 239)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let message = random_message(&mut rng, &spec, code.k());
    let c = encode(&gf, &code, &message)?;
    let stride = 229 / reliable_errors.clamp(1, 229);
    let wrong: Vec<usize> = (0..reliable_errors.min(229)).map(|i| i * stride).collect();
    let mut points = Vec::new();
    let mut pos = 0;
    for &(m, count) in &EXAMPLE1_PROFILE[..4] {
        for _ in 0..count {
            let y = if m == 7 && wrong.contains(&pos) {
                wrong_value(&mut rng, &spec, c.symbols[pos])
            } else {
                c.symbols[pos]
            };
            points.push(InterpolationPoint::new(code.support()[pos], y, m));
            pos += 1;
        }
    }
    let mut extra = 232;
    for &(m, count) in &EXAMPLE1_PROFILE[4..] {
        for _ in 0..count {
            let y = wrong_value(&mut rng, &spec, c.symbols[extra]);
            points.push(InterpolationPoint::new(code.support()[extra], y, m));
            extra += 1;
        }
    }
    let problem = InterpolationProblem::new(points, code.k())?;
    Ok(Instance { code, message, problem })
}

/// Random instance: a planted codeword of a full-length code over the
/// smallest field with n < q, `errors` positions replaced by wrong values,
/// multiplicities drawn from 1..=3.
pub fn random_instance(n: usize, k: usize, errors: usize, seed: u64) -> Result<Instance> {
    let m = (1..=16).find(|&m| (1usize << m) > n).unwrap_or(16);
    let spec = Arc::new(FieldSpec::with_default_poly(m)?);
    let gf = Field::new(spec.clone());
    let support: Vec<Gf> = spec.all_elements().skip(1).take(n).collect();
    let code = CodeSpec::new(spec.clone(), k, support)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let message = random_message(&mut rng, &spec, k);
    let c = encode(&gf, &code, &message)?;
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let y = if i >= n - errors.min(n) { wrong_value(&mut rng, &spec, c.symbols[i]) } else { c.symbols[i] };
        points.push(InterpolationPoint::new(code.support()[i], y, rng.gen_range(1..=3)));
    }
    let problem = InterpolationProblem::new(points, k)?;
    Ok(Instance { code, message, problem })
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub path: DecodePath,
    pub constraints: usize,
    pub multiplications: u64,
    pub interpolation_multiplications: u64,
    pub wall_time_ms: f64,
    pub decoded: bool,
}

/// Runs both paths `repeat` times on `inst`.
pub fn run_bench(inst: &Instance, repeat: usize, opts: &DecodeOptions) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for _ in 0..repeat.max(1) {
        for path in [DecodePath::Direct, DecodePath::Reduced] {
            let gf = Field::new(inst.code.field().clone());
            let t = Instant::now();
            let report = decode(&gf, &inst.problem, path, opts)?;
            let elapsed: Duration = t.elapsed();
            let c = report.counters;
            rows.push(BenchRow {
                path,
                constraints: report.stats.reduced_constraints.unwrap_or(report.stats.n_constraints),
                multiplications: c.reencoding.multiplications + c.interpolation.multiplications + c.factorization.multiplications,
                interpolation_multiplications: c.interpolation.multiplications,
                wall_time_ms: elapsed.as_secs_f64() * 1e3,
                decoded: report.accepted().contains(&&inst.message),
            });
        }
    }
    Ok(rows)
}
