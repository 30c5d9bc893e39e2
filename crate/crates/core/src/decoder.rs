//! End-to-end decoding along the direct and the reduced path.

use serde::Serialize;

use crate::error::Result;
use crate::factorization::{default_tau, factor_reduced, polynomial_roots, CandidateMessage, CandidateStatus, Validation};
use crate::galois::{Field, OpCounter};
use crate::koetter::{solve_with, ConstraintSchedule, InterpolationProblem, SolveOptions, TraceRow};
use crate::poly::{BiPoly, UniPoly};
use crate::reencoding::{build_context, remaining_points, select_reencoding_set, solve_reduced, ReducedContext, ReducedOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecodePath {
    Direct,
    Reduced,
}

/// Field operations spent in each phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PhaseCounters {
    /// Re-encoding and context construction (reduced path only).
    pub reencoding: OpCounter,
    pub interpolation: OpCounter,
    pub factorization: OpCounter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProblemStats {
    pub n_constraints: usize,
    pub delta_star: usize,
    pub r: usize,
    /// Constraints left after re-encoding (reduced path only).
    pub reduced_constraints: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct DecodeReport {
    pub path: DecodePath,
    pub candidates: Vec<CandidateMessage>,
    pub counters: PhaseCounters,
    pub stats: ProblemStats,
    /// Q for the direct path, H for the reduced path.
    pub interpolant: BiPoly,
    pub context: Option<ReducedContext>,
    pub trace: Vec<TraceRow>,
}

impl DecodeReport {
    pub fn accepted(&self) -> Vec<&UniPoly> {
        self.candidates.iter().filter(|c| c.is_accepted()).filter_map(|c| c.f.as_ref()).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct DecodeOptions {
    /// Error bound for the reduced factorization; `None` means min(k, 6).
    pub tau: Option<usize>,
    pub validation: Validation,
    pub schedule: ConstraintSchedule,
    pub trace: bool,
    /// Tail-structure checks in the reduced solver; `None` follows the
    /// build profile.
    pub check_invariants: Option<bool>,
}

fn stats(problem: &InterpolationProblem, reduced: Option<usize>) -> ProblemStats {
    let (delta_star, r) = problem.degree_bounds();
    ProblemStats { n_constraints: problem.n_constraints(), delta_star, r, reduced_constraints: reduced }
}

/// Koetter on the full problem, then every polynomial Y-root of degree < k.
pub fn decode_direct(gf: &Field, problem: &InterpolationProblem, opts: &DecodeOptions) -> Result<DecodeReport> {
    let start = gf.counter();
    let sol = solve_with(gf, problem, &SolveOptions { schedule: opts.schedule, trace: opts.trace })?;
    let mid = gf.counter();
    let roots = polynomial_roots(gf, &sol.poly, problem.k())?;
    let end = gf.counter();
    let candidates = roots
        .into_iter()
        .map(|f| CandidateMessage {
            f: Some(f),
            status: CandidateStatus::Accepted,
            sigma: None,
            omega: None,
            error_positions: Vec::new(),
            error_values: Vec::new(),
            branches: Vec::new(),
            syndrome: Vec::new(),
        })
        .collect();
    Ok(DecodeReport {
        path: DecodePath::Direct,
        candidates,
        counters: PhaseCounters { reencoding: OpCounter::default(), interpolation: mid - start, factorization: end - mid },
        stats: stats(problem, None),
        interpolant: sol.poly,
        context: None,
        trace: sol.trace,
    })
}

/// Re-encoding, reduced interpolation and reduced factorization.
pub fn decode_reduced(gf: &Field, problem: &InterpolationProblem, opts: &DecodeOptions) -> Result<DecodeReport> {
    let start = gf.counter();
    let reencoding = select_reencoding_set(gf, problem)?;
    let remaining = remaining_points(problem, &reencoding);
    let (_, r) = problem.degree_bounds();
    let ctx = build_context(gf, reencoding, r, &remaining)?;
    let after_ctx = gf.counter();
    let ropts = ReducedOptions {
        solve: SolveOptions { schedule: opts.schedule, trace: opts.trace },
        check_invariants: opts.check_invariants.unwrap_or(cfg!(debug_assertions)),
    };
    let sol = solve_reduced(gf, &ctx, &ropts)?;
    let after_interp = gf.counter();
    let tau = opts.tau.unwrap_or_else(|| default_tau(problem.k()));
    let candidates = factor_reduced(gf, &sol.poly, &ctx, tau, opts.validation)?;
    let end = gf.counter();
    Ok(DecodeReport {
        path: DecodePath::Reduced,
        candidates,
        counters: PhaseCounters {
            reencoding: after_ctx - start,
            interpolation: after_interp - after_ctx,
            factorization: end - after_interp,
        },
        stats: stats(problem, Some(ctx.n_constraints())),
        interpolant: sol.poly,
        context: Some(ctx),
        trace: sol.trace,
    })
}

pub fn decode(gf: &Field, problem: &InterpolationProblem, path: DecodePath, opts: &DecodeOptions) -> Result<DecodeReport> {
    match path {
        DecodePath::Direct => decode_direct(gf, problem, opts),
        DecodePath::Reduced => decode_reduced(gf, problem, opts),
    }
}
