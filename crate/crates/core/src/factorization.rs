//! Rational Y-roots of the reduced polynomial H.
//!
//! A rational root omega/sigma is expanded as a power series with a
//! depth-limited Roth-Ruckenstein recursion. Berlekamp-Massey then recovers
//! sigma (the error locator over the re-encoding positions) and omega, and
//! the corrected message is re-interpolated from the k re-encoding values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::galois::{Field, Gf};
use crate::poly::{lagrange_interpolate, reconstruct, BiPoly, UniPoly};
use crate::reencoding::{ReducedContext, ReencodingSet};

/// First 2*tau power-series coefficients of one Y-root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeBranch {
    pub gammas: Vec<Gf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorEvaluatorPair {
    /// Normalized so that sigma(0) = 1.
    pub sigma: UniPoly,
    pub omega: UniPoly,
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RejectionReason {
    DegreeExceedsTau,
    ConvolutionNonzeroTail,
    InsufficientRoots,
    ZeroErrorValue,
    /// Only produced with [`Validation::Reconstruct`].
    NotAFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CandidateStatus {
    Accepted,
    Rejected(RejectionReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateMessage {
    pub f: Option<UniPoly>,
    pub status: CandidateStatus,
    pub sigma: Option<UniPoly>,
    pub omega: Option<UniPoly>,
    pub error_positions: Vec<usize>,
    pub error_values: Vec<Gf>,
    /// Indices of the syndrome branches that produced this candidate.
    pub branches: Vec<usize>,
    pub syndrome: Vec<Gf>,
}

impl CandidateMessage {
    pub fn is_accepted(&self) -> bool {
        self.status == CandidateStatus::Accepted
    }

    fn rejected(reason: RejectionReason, branch: usize, syndrome: &[Gf]) -> Self {
        CandidateMessage {
            f: None,
            status: CandidateStatus::Rejected(reason),
            sigma: None,
            omega: None,
            error_positions: Vec::new(),
            error_values: Vec::new(),
            branches: vec![branch],
            syndrome: syndrome.to_vec(),
        }
    }
}

/// How accepted candidates are checked beyond rules a-d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    RulesOnly,
    /// Rebuild Q = psi H(X, (Y - e)/g) and require Q(X, f(X)) = 0.
    /// Expensive; meant for testing.
    Reconstruct,
}

/// Distinct roots in GF(q) of a univariate polynomial, by exhaustive search.
pub fn field_roots(gf: &Field, p: &UniPoly) -> Vec<Gf> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    gf.spec().all_elements().filter(|&a| p.eval(gf, a).is_zero()).collect()
}

/// Roth-Ruckenstein recursion to `depth` coefficients. Each surviving path
/// is one branch; repeated roots are followed once.
pub fn rr_power_series(gf: &Field, h: &BiPoly, depth: usize) -> Result<Vec<SyndromeBranch>> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let cap = h.y_degree().unwrap_or(0);
    let mut live: Vec<(BiPoly, Vec<Gf>)> = vec![(h.strip_x(), Vec::new())];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (p, prefix) in live {
            for gamma in field_roots(gf, &p.at_x_zero()) {
                let mut path = prefix.clone();
                path.push(gamma);
                next.push((p.rr_step(gf, gamma).strip_x(), path));
            }
        }
        next.truncate(cap);
        live = next;
    }
    Ok(live.into_iter().map(|(_, gammas)| SyndromeBranch { gammas }).collect())
}

/// Berlekamp-Massey: connection polynomial c (c(0) = 1) and length L of the
/// shortest LFSR generating `s`, i.e. sum_j c_j s_(n-j) = 0 for n = L..len.
pub fn shortest_lfsr(gf: &Field, s: &[Gf]) -> (UniPoly, usize) {
    let mut c = vec![Gf::ONE];
    let mut b = vec![Gf::ONE];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = Gf::ONE;
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l.min(c.len() - 1) {
            d = gf.add(d, gf.mul(c[i], s[n - i]));
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = gf.div(d, bd).expect("previous discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Gf::ZERO);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] = gf.add(c[i + m], gf.mul(coef, bi));
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    (UniPoly::from_coeffs(c), l)
}

/// Shortest LFSR for the branch, then omega by convolution. Rejects when
/// deg sigma exceeds tau = len/2 (rule a) or the convolution does not
/// vanish between deg sigma + 1 and 2 tau - 1 (rule b).
pub fn berlekamp_massey(gf: &Field, branch: &SyndromeBranch) -> std::result::Result<LocatorEvaluatorPair, RejectionReason> {
    let s = &branch.gammas;
    let tau = s.len() / 2;
    let (sigma, _) = shortest_lfsr(gf, s);
    let t = sigma.degree().expect("sigma(0) = 1");
    if t > tau {
        return Err(RejectionReason::DegreeExceedsTau);
    }
    let conv = |i: usize| {
        let mut acc = Gf::ZERO;
        for j in 0..=i.min(t) {
            acc = gf.add(acc, gf.mul(sigma.coeff(j), s[i - j]));
        }
        acc
    };
    let omega = UniPoly::from_coeffs((0..=t.min(s.len().saturating_sub(1))).map(conv).collect());
    for i in t + 1..s.len() {
        if !conv(i).is_zero() {
            return Err(RejectionReason::ConvolutionNonzeroTail);
        }
    }
    Ok(LocatorEvaluatorPair { sigma, omega, t })
}

/// Indices into R of the roots of sigma. Rejects (rule c) when sigma has
/// fewer than deg sigma distinct roots in the field or a root is not a
/// re-encoding abscissa.
pub fn find_error_locations(gf: &Field, sigma: &UniPoly, reencoding: &ReencodingSet) -> std::result::Result<Vec<usize>, RejectionReason> {
    let t = sigma.degree().unwrap_or(0);
    let roots = field_roots(gf, sigma);
    if roots.len() < t {
        return Err(RejectionReason::InsufficientRoots);
    }
    let mut positions = Vec::with_capacity(roots.len());
    for x in roots {
        match reencoding.points.iter().position(|p| p.x == x) {
            Some(i) => positions.push(i),
            None => return Err(RejectionReason::InsufficientRoots),
        }
    }
    positions.sort_unstable();
    Ok(positions)
}

/// e_i = omega(x_i) g'(x_i) / sigma'(x_i); rejects a zero value (rule d).
pub fn error_values(
    gf: &Field,
    pair: &LocatorEvaluatorPair,
    g: &UniPoly,
    positions: &[usize],
    reencoding: &ReencodingSet,
) -> std::result::Result<Vec<Gf>, RejectionReason> {
    let dg = g.derivative();
    let ds = pair.sigma.derivative();
    let mut out = Vec::with_capacity(positions.len());
    for &i in positions {
        let x = reencoding.points[i].x;
        let num = gf.mul(pair.omega.eval(gf, x), dg.eval(gf, x));
        let e = gf.div(num, ds.eval(gf, x)).map_err(|_| RejectionReason::InsufficientRoots)?;
        if e.is_zero() {
            return Err(RejectionReason::ZeroErrorValue);
        }
        out.push(e);
    }
    Ok(out)
}

/// Interpolates f from f(x_i) = y_i + e_i (i in E) and f(x_i) = y_i.
pub fn corrected_message(gf: &Field, reencoding: &ReencodingSet, positions: &[usize], values: &[Gf]) -> Result<UniPoly> {
    let mut pts: Vec<(Gf, Gf)> = reencoding.points.iter().map(|p| (p.x, p.y)).collect();
    for (&i, &e) in positions.iter().zip(values) {
        pts[i].1 = gf.add(pts[i].1, e);
    }
    lagrange_interpolate(gf, &pts)
}

/// Default bound on errors among the re-encoding positions.
pub fn default_tau(k: usize) -> usize {
    k.min(6)
}

/// Full reduced factorization. Accepted candidates are de-duplicated by f,
/// keeping every producing branch; rejected branches are reported too.
pub fn factor_reduced(gf: &Field, h: &BiPoly, ctx: &ReducedContext, tau: usize, validation: Validation) -> Result<Vec<CandidateMessage>> {
    if tau == 0 {
        return Err(Error::Invalid("tau must be at least 1".into()));
    }
    let branches = rr_power_series(gf, h, 2 * tau)?;
    let q = match validation {
        Validation::RulesOnly => None,
        Validation::Reconstruct => Some(reconstruct(gf, h, &ctx.psi(gf), &ctx.g, &ctx.reencoding.e)?),
    };
    let mut out: Vec<CandidateMessage> = Vec::new();
    for (bi, branch) in branches.iter().enumerate() {
        let pair = match berlekamp_massey(gf, branch) {
            Ok(p) => p,
            Err(r) => {
                out.push(CandidateMessage::rejected(r, bi, &branch.gammas));
                continue;
            }
        };
        let positions = match find_error_locations(gf, &pair.sigma, &ctx.reencoding) {
            Ok(p) => p,
            Err(r) => {
                out.push(CandidateMessage::rejected(r, bi, &branch.gammas));
                continue;
            }
        };
        let values = match error_values(gf, &pair, &ctx.g, &positions, &ctx.reencoding) {
            Ok(v) => v,
            Err(r) => {
                out.push(CandidateMessage::rejected(r, bi, &branch.gammas));
                continue;
            }
        };
        let f = corrected_message(gf, &ctx.reencoding, &positions, &values)?;
        let status = match &q {
            Some(q) if !q.eval_y(gf, &f).is_zero() => CandidateStatus::Rejected(RejectionReason::NotAFactor),
            _ => CandidateStatus::Accepted,
        };
        if status == CandidateStatus::Accepted {
            if let Some(prev) = out.iter_mut().find(|c| c.is_accepted() && c.f.as_ref() == Some(&f)) {
                prev.branches.push(bi);
                continue;
            }
        }
        out.push(CandidateMessage {
            f: Some(f),
            status,
            sigma: Some(pair.sigma),
            omega: Some(pair.omega),
            error_positions: positions,
            error_values: values,
            branches: vec![bi],
            syndrome: branch.gammas.clone(),
        });
    }
    Ok(out)
}

/// Polynomial Y-roots of degree < k, by a k-step Roth-Ruckenstein run
/// followed by substitution.
pub fn polynomial_roots(gf: &Field, q: &BiPoly, k: usize) -> Result<Vec<UniPoly>> {
    let mut out: Vec<UniPoly> = Vec::new();
    for b in rr_power_series(gf, q, k)? {
        let f = UniPoly::from_coeffs(b.gammas);
        if q.eval_y(gf, &f).is_zero() && !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}
