//! Univariate and bivariate polynomials over GF(2^m).

mod bi;
pub mod text;
mod uni;

pub use bi::{BiPoly, MonomialOrder};
pub use uni::{binom_odd, lagrange_interpolate, UniPoly};

use crate::error::Result;
use crate::galois::Field;

/// psi(X) * h(X, Y / g(X)), computed coefficient-wise as psi * h_j / g^j.
/// Every division must be exact; `InexactDivision` means `h` does not have
/// the required tail structure.
pub fn unscale_y(gf: &Field, h: &BiPoly, psi: &UniPoly, g: &UniPoly) -> Result<BiPoly> {
    let mut g_pow = UniPoly::one();
    let mut ys = Vec::with_capacity(h.ys().len());
    for u in h.ys() {
        let num = u.mul(gf, psi);
        ys.push(if g_pow.is_one() { num } else { num.exact_div(gf, &g_pow)? });
        g_pow = g_pow.mul(gf, g);
    }
    Ok(BiPoly::from_ys(ys))
}

/// psi(X) * h(X, (Y - e(X)) / g(X)): maps a reduced solution back to the
/// original interpolation problem.
pub fn reconstruct(gf: &Field, h: &BiPoly, psi: &UniPoly, g: &UniPoly, e: &UniPoly) -> Result<BiPoly> {
    Ok(unscale_y(gf, h, psi, g)?.substitute_y_shift(gf, e))
}
