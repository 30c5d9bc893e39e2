//! Brute-force interpolation by dense linear algebra, used to check the
//! Koetter engine on small instances.

use crate::error::{Error, Result};
use crate::galois::{Field, Gf};
use crate::koetter::InterpolationProblem;
use crate::poly::{binom_odd, BiPoly, MonomialOrder};

/// Largest constraint count the oracle accepts.
pub const MAX_CONSTRAINTS: usize = 200;

/// Constraint matrix over the monomials of weighted degree <= delta*,
/// columns sorted ascending by the (1, k-1) order.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub monomials: Vec<(usize, usize)>,
    pub rows: Vec<Vec<Gf>>,
}

/// Direct count of monomials X^i Y^j with i + (k-1) j <= delta (k >= 2).
pub fn enumerate_monomials(delta: usize, k: usize) -> usize {
    assert!(k >= 2);
    let mut n = 0;
    for j in 0..=delta {
        for i in 0..=delta {
            if i + (k - 1) * j <= delta {
                n += 1;
            }
        }
    }
    n
}

fn monomials(problem: &InterpolationProblem) -> Vec<(usize, usize)> {
    let (delta, r) = problem.degree_bounds();
    let k = problem.k();
    let mut out = Vec::new();
    for j in 0..=r {
        for i in 0..=delta {
            if i + (k - 1) * j <= delta {
                out.push((i, j));
            }
        }
    }
    let order = MonomialOrder::for_dimension(k);
    out.sort_by_key(|&(i, j)| order.key(i, j));
    out
}

/// x^e with x^0 = 1 (including 0^0).
fn power(gf: &Field, x: Gf, e: usize) -> Gf {
    if e == 0 {
        Gf::ONE
    } else {
        gf.pow(x, e as u64)
    }
}

pub fn build_system(gf: &Field, problem: &InterpolationProblem) -> Result<LinearSystem> {
    let n = problem.n_constraints();
    if n > MAX_CONSTRAINTS {
        return Err(Error::InstanceTooLarge(n));
    }
    let monomials = monomials(problem);
    let mut rows = Vec::with_capacity(n);
    for p in problem.points() {
        for a in 0..p.mult {
            for b in 0..p.mult - a {
                // Coefficient of X^a Y^b in (X + x)^i (Y + y)^j.
                let row = monomials
                    .iter()
                    .map(|&(i, j)| {
                        if i < a || j < b || !binom_odd(i, a) || !binom_odd(j, b) {
                            Gf::ZERO
                        } else {
                            gf.mul(power(gf, p.x, i - a), power(gf, p.y, j - b))
                        }
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    Ok(LinearSystem { monomials, rows })
}

/// Nonzero solution whose leading monomial is least possible: reduces the
/// columns in ascending order and stops at the first column that depends
/// on its predecessors.
pub fn brute_force_interpolate(gf: &Field, problem: &InterpolationProblem) -> Result<BiPoly> {
    let sys = build_system(gf, problem)?;
    let mut rows = sys.rows;
    let ncols = sys.monomials.len();
    // pivots[c] = row index holding the pivot of column c
    let mut pivots: Vec<Option<usize>> = vec![None; ncols];
    let mut next_row = 0;
    for c in 0..ncols {
        let found = (next_row..rows.len()).find(|&i| !rows[i][c].is_zero());
        let Some(pr) = found else {
            // Column c is a combination of the pivot columns before it.
            let mut coeffs = vec![Gf::ZERO; ncols];
            coeffs[c] = Gf::ONE;
            for (pc, pivot) in pivots.iter().enumerate().take(c) {
                if let Some(row) = *pivot {
                    coeffs[pc] = rows[row][c];
                }
            }
            let mut q = BiPoly::zero();
            for (&(i, j), &v) in sys.monomials.iter().zip(&coeffs) {
                if !v.is_zero() {
                    q = q.add(gf, &BiPoly::monomial(v, i, j));
                }
            }
            return Ok(q);
        };
        rows.swap(next_row, pr);
        let inv = gf.inv(rows[next_row][c])?;
        for v in rows[next_row].iter_mut() {
            *v = gf.mul(*v, inv);
        }
        let pivot_row = rows[next_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next_row && !row[c].is_zero() {
                let f = row[c];
                for (v, &p) in row.iter_mut().zip(&pivot_row) {
                    *v = gf.add(*v, gf.mul(f, p));
                }
            }
        }
        pivots[c] = Some(next_row);
        next_row += 1;
    }
    Err(Error::Invalid("constraint system has full column rank".into()))
}
