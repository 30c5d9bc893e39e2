use crate::error::{Error, Result};
use crate::galois::{Field, Gf};

/// Binomial coefficient C(n, k) reduced modulo 2 (Lucas).
#[inline]
pub fn binom_odd(n: usize, k: usize) -> bool {
    k <= n && (n & k) == k
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of X^i.
/// Canonical: no trailing zeros, the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Gf>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::zero_const()
    }

    pub(crate) const fn zero_const() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Gf::ONE)
    }

    pub fn constant(c: Gf) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * X^i
    pub fn monomial(c: Gf, i: usize) -> Self {
        let mut v = vec![Gf::ZERO; i + 1];
        v[i] = c;
        Self::from_coeffs(v)
    }

    /// X - root
    pub fn linear(root: Gf) -> Self {
        Self::from_coeffs(vec![root, Gf::ONE])
    }

    pub fn from_coeffs(mut coeffs: Vec<Gf>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_values(values: &[u16]) -> Self {
        Self::from_coeffs(values.iter().map(|&v| Gf(v)).collect())
    }

    /// Product of (X - r) over `roots`.
    pub fn from_roots(gf: &Field, roots: impl IntoIterator<Item = Gf>) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = p.mul_linear(gf, r);
        }
        p
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Gf> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Gf::ONE
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Largest s with X^s dividing the polynomial (0 for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, gf: &Field, x: Gf) -> Gf {
        self.coeffs.iter().rev().fold(Gf::ZERO, |acc, &c| gf.add(gf.mul(acc, x), c))
    }

    pub fn add(&self, gf: &Field, other: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.coeffs.clone();
        for (a, &b) in v.iter_mut().zip(&short.coeffs) {
            *a = gf.add(*a, b);
        }
        Self::from_coeffs(v)
    }

    /// self += c * other
    pub fn add_scaled_assign(&mut self, gf: &Field, c: Gf, other: &UniPoly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Gf::ZERO);
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = gf.add(*a, gf.mul(c, b));
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, gf: &Field, c: Gf) -> UniPoly {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|&a| gf.mul(a, c)).collect())
    }

    pub fn mul(&self, gf: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Gf::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = gf.add(v[i + j], gf.mul(a, b));
                }
            }
        }
        Self::from_coeffs(v)
    }

    /// (X - root) * self
    pub fn mul_linear(&self, gf: &Field, root: Gf) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut v = vec![Gf::ZERO; n + 1];
        v[n] = self.coeffs[n - 1];
        for i in (1..n).rev() {
            v[i] = gf.add(self.coeffs[i - 1], gf.mul(root, self.coeffs[i]));
        }
        v[0] = gf.mul(root, self.coeffs[0]);
        Self::from_coeffs(v)
    }

    /// X^s * self
    pub fn shift_up(&self, s: usize) -> UniPoly {
        if self.is_zero() || s == 0 {
            return self.clone();
        }
        let mut v = vec![Gf::ZERO; s];
        v.extend_from_slice(&self.coeffs);
        UniPoly { coeffs: v }
    }

    /// self / X^s, dropping the low coefficients.
    pub fn shift_down(&self, s: usize) -> UniPoly {
        if s >= self.coeffs.len() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs[s..].to_vec() }
    }

    pub fn pow(&self, gf: &Field, e: usize) -> UniPoly {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(gf, self);
        }
        acc
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, gf: &Field, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = gf.inv(d.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Gf::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let qc = if d.coeffs[dd] == Gf::ONE { c } else { gf.mul(c, lead_inv) };
            quot[i] = qc;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = gf.add(rem[i + j], gf.mul(qc, dc));
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `d` divides `self`, otherwise `InexactDivision`.
    pub fn exact_div(&self, gf: &Field, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(gf, d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// self / (X - root), which must be exact. Synthetic division.
    pub fn div_linear_exact(&self, gf: &Field, root: Gf) -> Result<UniPoly> {
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(Self::zero());
        }
        let mut q = vec![Gf::ZERO; n - 1];
        let mut carry = Gf::ZERO;
        for i in (1..n).rev() {
            carry = gf.add(self.coeffs[i], gf.mul(carry, root));
            q[i - 1] = carry;
        }
        let rem = gf.add(self.coeffs[0], gf.mul(carry, root));
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(q))
    }

    /// First-order Hasse derivative; in characteristic 2 only odd-degree
    /// terms survive.
    pub fn derivative(&self) -> UniPoly {
        let v = (1..self.coeffs.len())
            .map(|i| if i % 2 == 1 { self.coeffs[i] } else { Gf::ZERO })
            .collect();
        Self::from_coeffs(v)
    }

    /// Coefficient of X^a in self(X + x), i.e. the a-th Hasse derivative at x.
    pub fn hasse_at(&self, gf: &Field, a: usize, x: Gf) -> Gf {
        let mut acc = Gf::ZERO;
        for i in (a..self.coeffs.len()).rev() {
            acc = gf.mul(acc, x);
            if binom_odd(i, a) {
                acc = gf.add(acc, self.coeffs[i]);
            }
        }
        acc
    }

    /// self(X + x), by repeated synthetic division.
    pub fn taylor_shift(&self, gf: &Field, x: Gf) -> UniPoly {
        let mut c = self.coeffs.clone();
        if x.is_zero() {
            return self.clone();
        }
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] = gf.add(c[j], gf.mul(x, c[j + 1]));
            }
        }
        Self::from_coeffs(c)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Gf::ONE)
    }
}

/// Unique polynomial of degree < points.len() through the given points.
pub fn lagrange_interpolate(gf: &Field, points: &[(Gf, Gf)]) -> Result<UniPoly> {
    if points.is_empty() {
        return Err(Error::Invalid("interpolation needs at least one point".into()));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.0 == p.0) {
            return Err(Error::DuplicateAbscissa(p.0 .0));
        }
    }
    let full = UniPoly::from_roots(gf, points.iter().map(|p| p.0));
    let mut acc = UniPoly::zero();
    for &(x, y) in points {
        if y.is_zero() {
            continue;
        }
        let basis = full.div_linear_exact(gf, x)?;
        let denom = basis.eval(gf, x);
        acc.add_scaled_assign(gf, gf.div(y, denom)?, &basis);
    }
    Ok(acc)
}
