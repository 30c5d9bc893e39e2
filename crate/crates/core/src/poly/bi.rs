use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::galois::{Field, Gf};
use crate::poly::uni::{binom_odd, UniPoly};

/// Weighted-degree ordering on monomials X^i Y^j: compare i*wx + j*wy,
/// then the Y-degree (lower Y-degree is smaller).
///
/// With weights (1, k-1) this is a monomial order. With (1, -1) it is only
/// a total order (no least element), which is all the interpolation engine
/// needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialOrder {
    pub weight_x: i64,
    pub weight_y: i64,
}

impl MonomialOrder {
    pub fn new(weight_x: i64, weight_y: i64) -> Self {
        MonomialOrder { weight_x, weight_y }
    }

    /// (1, k-1) weighted order for a code of dimension k.
    pub fn for_dimension(k: usize) -> Self {
        Self::new(1, k as i64 - 1)
    }

    /// (1, -1) order used by the reduced problem.
    pub fn reduced() -> Self {
        Self::new(1, -1)
    }

    #[inline]
    pub fn key(&self, i: usize, j: usize) -> (i64, usize) {
        (i as i64 * self.weight_x + j as i64 * self.weight_y, j)
    }

    pub fn compare(&self, a: (usize, usize), b: (usize, usize)) -> Ordering {
        self.key(a.0, a.1).cmp(&self.key(b.0, b.1))
    }
}

/// Bivariate polynomial stored Y-major: `ys[j]` is the coefficient of Y^j.
/// Canonical: the top Y-coefficient is nonzero, zero is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    ys: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { ys: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_uni(UniPoly::one())
    }

    pub fn from_uni(u: UniPoly) -> Self {
        Self::from_ys(vec![u])
    }

    pub fn from_ys(mut ys: Vec<UniPoly>) -> Self {
        while ys.last().is_some_and(|c| c.is_zero()) {
            ys.pop();
        }
        BiPoly { ys }
    }

    /// c * X^i * Y^j
    pub fn monomial(c: Gf, i: usize, j: usize) -> Self {
        let mut ys = vec![UniPoly::zero(); j + 1];
        ys[j] = UniPoly::monomial(c, i);
        Self::from_ys(ys)
    }

    /// u(X) * Y^j
    pub fn y_term(u: UniPoly, j: usize) -> Self {
        let mut ys = vec![UniPoly::zero(); j + 1];
        ys[j] = u;
        Self::from_ys(ys)
    }

    /// Y - f(X)
    pub fn y_minus(f: &UniPoly) -> Self {
        Self::from_ys(vec![f.clone(), UniPoly::one()])
    }

    /// Y-major nested coefficient arrays, as in the JSON form.
    pub fn from_values(rows: &[Vec<u16>]) -> Self {
        Self::from_ys(rows.iter().map(|r| UniPoly::from_values(r)).collect())
    }

    pub fn to_values(&self) -> Vec<Vec<u16>> {
        self.ys.iter().map(|u| u.coeffs().iter().map(|c| c.0).collect()).collect()
    }

    pub fn ys(&self) -> &[UniPoly] {
        &self.ys
    }

    pub fn into_ys(self) -> Vec<UniPoly> {
        self.ys
    }

    pub fn is_zero(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn y_coeff(&self, j: usize) -> &UniPoly {
        static ZERO: UniPoly = UniPoly::zero_const();
        self.ys.get(j).unwrap_or(&ZERO)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.ys.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.ys.iter().filter_map(|u| u.degree()).max()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Gf {
        self.y_coeff(j).coeff(i)
    }

    /// Nonzero terms as (i, j, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Gf)> + '_ {
        self.ys.iter().enumerate().flat_map(|(j, u)| {
            u.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, &c)| (i, j, c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.ys.iter().map(|u| u.weight()).sum()
    }

    /// (wx, wy)-weighted degree; `None` stands for minus infinity.
    pub fn wdeg(&self, wx: i64, wy: i64) -> Option<i64> {
        self.ys
            .iter()
            .enumerate()
            .filter_map(|(j, u)| u.degree().map(|d| d as i64 * wx + j as i64 * wy))
            .max()
    }

    /// Greatest monomial under `order`, with its coefficient.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<(usize, usize, Gf)> {
        let mut best: Option<(usize, usize)> = None;
        for (j, u) in self.ys.iter().enumerate() {
            let cand = if order.weight_x >= 0 {
                u.degree()
            } else {
                u.coeffs().iter().position(|c| !c.is_zero())
            };
            if let Some(i) = cand {
                if best.is_none_or(|b| order.compare((i, j), b) == Ordering::Greater) {
                    best = Some((i, j));
                }
            }
        }
        let (i, j) = best.ok_or(Error::ZeroPolynomial)?;
        Ok((i, j, self.coeff(i, j)))
    }

    pub fn add(&self, gf: &Field, other: &BiPoly) -> BiPoly {
        let n = self.ys.len().max(other.ys.len());
        Self::from_ys((0..n).map(|j| self.y_coeff(j).add(gf, other.y_coeff(j))).collect())
    }

    /// self += c * other
    pub fn add_scaled_assign(&mut self, gf: &Field, c: Gf, other: &BiPoly) {
        if c.is_zero() {
            return;
        }
        if self.ys.len() < other.ys.len() {
            self.ys.resize(other.ys.len(), UniPoly::zero());
        }
        for (a, b) in self.ys.iter_mut().zip(&other.ys) {
            a.add_scaled_assign(gf, c, b);
        }
        while self.ys.last().is_some_and(|u| u.is_zero()) {
            self.ys.pop();
        }
    }

    pub fn scale(&self, gf: &Field, c: Gf) -> BiPoly {
        Self::from_ys(self.ys.iter().map(|u| u.scale(gf, c)).collect())
    }

    pub fn mul_uni(&self, gf: &Field, u: &UniPoly) -> BiPoly {
        Self::from_ys(self.ys.iter().map(|c| c.mul(gf, u)).collect())
    }

    /// (X - x) * self
    pub fn mul_x_linear(&self, gf: &Field, x: Gf) -> BiPoly {
        Self::from_ys(self.ys.iter().map(|c| c.mul_linear(gf, x)).collect())
    }

    pub fn mul(&self, gf: &Field, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut ys = vec![UniPoly::zero(); self.ys.len() + other.ys.len() - 1];
        for (j, a) in self.ys.iter().enumerate() {
            for (l, b) in other.ys.iter().enumerate() {
                let prod = a.mul(gf, b);
                ys[j + l].add_scaled_assign(gf, Gf::ONE, &prod);
            }
        }
        Self::from_ys(ys)
    }

    /// Y^s * self
    pub fn mul_y_power(&self, s: usize) -> BiPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut ys = vec![UniPoly::zero(); s];
        ys.extend(self.ys.iter().cloned());
        Self::from_ys(ys)
    }

    /// Coefficient of X^a Y^b in self(X + x, Y + y), without computing the
    /// full shift.
    pub fn shifted_coeff(&self, gf: &Field, x: Gf, y: Gf, a: usize, b: usize) -> Gf {
        let mut acc = Gf::ZERO;
        for l in (b..self.ys.len()).rev() {
            acc = gf.mul(acc, y);
            if binom_odd(l, b) {
                let h = self.ys[l].hasse_at(gf, a, x);
                acc = gf.add(acc, h);
            }
        }
        acc
    }

    /// self(X + x, Y + y)
    pub fn taylor_shift(&self, gf: &Field, x: Gf, y: Gf) -> BiPoly {
        let mut c: Vec<UniPoly> = self.ys.iter().map(|u| u.taylor_shift(gf, x)).collect();
        if !y.is_zero() {
            let n = c.len();
            for i in 0..n {
                for j in (i..n.saturating_sub(1)).rev() {
                    let upper = c[j + 1].clone();
                    c[j].add_scaled_assign(gf, y, &upper);
                }
            }
        }
        Self::from_ys(c)
    }

    /// Order of vanishing at (x, y): min of i + j over nonzero coefficients
    /// of the shifted polynomial.
    pub fn multiplicity(&self, gf: &Field, x: Gf, y: Gf) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let s = self.taylor_shift(gf, x, y);
        Ok(s.terms().map(|(i, j, _)| i + j).min().expect("nonzero"))
    }

    /// self(X, Y + e(X)). An involution in characteristic 2.
    pub fn substitute_y_shift(&self, gf: &Field, e: &UniPoly) -> BiPoly {
        let mut c = self.ys.clone();
        if e.is_zero() {
            return self.clone();
        }
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].mul(gf, e);
                c[j].add_scaled_assign(gf, Gf::ONE, &t);
            }
        }
        Self::from_ys(c)
    }

    /// self(X, Y * g(X))
    pub fn substitute_y_scale(&self, gf: &Field, g: &UniPoly) -> BiPoly {
        let mut pow = UniPoly::one();
        let mut ys = Vec::with_capacity(self.ys.len());
        for u in &self.ys {
            ys.push(u.mul(gf, &pow));
            pow = pow.mul(gf, g);
        }
        Self::from_ys(ys)
    }

    /// self(X, f(X))
    pub fn eval_y(&self, gf: &Field, f: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for u in self.ys.iter().rev() {
            acc = acc.mul(gf, f);
            acc.add_scaled_assign(gf, Gf::ONE, u);
        }
        acc
    }

    /// den^d * self(X, num/den) with d the Y-degree; zero exactly when
    /// num/den is a rational Y-root.
    pub fn eval_y_rational(&self, gf: &Field, num: &UniPoly, den: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        let mut den_pow = UniPoly::one();
        for u in self.ys.iter().rev() {
            // acc <- acc * num + u * den^(d-l)
            acc = acc.mul(gf, num);
            acc.add_scaled_assign(gf, Gf::ONE, &u.mul(gf, &den_pow));
            den_pow = den_pow.mul(gf, den);
        }
        acc
    }

    /// Y-coefficients evaluated at X = 0, as a polynomial in Y.
    pub fn at_x_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.ys.iter().map(|u| u.coeff(0)).collect())
    }

    /// Divides out the largest power of X common to all coefficients.
    pub fn strip_x(&self) -> BiPoly {
        let s = self.ys.iter().filter(|u| !u.is_zero()).map(|u| u.x_valuation()).min().unwrap_or(0);
        if s == 0 {
            return self.clone();
        }
        Self::from_ys(self.ys.iter().map(|u| u.shift_down(s)).collect())
    }

    /// self(X, X*Y + c), the Roth-Ruckenstein step.
    pub fn rr_step(&self, gf: &Field, c: Gf) -> BiPoly {
        let shifted = self.taylor_shift(gf, Gf::ZERO, c);
        Self::from_ys(shifted.ys.iter().enumerate().map(|(j, u)| u.shift_up(j)).collect())
    }
}
