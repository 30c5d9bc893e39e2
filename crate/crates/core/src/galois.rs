//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are bit-vector polynomials in a primitive element `a`, stored as
//! `u16`. Multiplication goes through log/antilog tables. A [`Field`] couples
//! the immutable tables with a pair of operation counters so that each decoding
//! run can report how many field multiplications it performed.

use std::cell::Cell;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of GF(2^m), in polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Immutable description of GF(2^m): defining polynomial plus lookup tables.
#[derive(Debug)]
pub struct FieldSpec {
    m: u32,
    prim_poly: u32,
    order: usize,
    // exp has length 2(q-1) so that exp[log a + log b] needs no reduction.
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl FieldSpec {
    /// Builds the tables for GF(2^m) defined by `prim_poly` (bit i is the
    /// coefficient of X^i). Rejects polynomials whose root does not have
    /// multiplicative order exactly 2^m - 1.
    pub fn new(m: u32, prim_poly: u32) -> Result<Self> {
        if !(2..=16).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        if prim_poly >> m != 1 || prim_poly & 1 == 0 {
            return Err(Error::DegreeMismatch { m, poly: prim_poly });
        }
        let order = 1usize << m;
        let n = order - 1;
        let mut exp = vec![0u16; 2 * n];
        let mut log = vec![0u16; order];
        let mut x: u32 = 1;
        for i in 0..n {
            if i > 0 && x == 1 {
                // The root cycled back early, its order is a proper divisor of q-1.
                return Err(Error::NonPrimitivePolynomial(prim_poly));
            }
            exp[i] = x as u16;
            log[x as usize] = i as u16;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= prim_poly;
            }
        }
        if x != 1 {
            return Err(Error::NonPrimitivePolynomial(prim_poly));
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Ok(FieldSpec { m, prim_poly, order, exp, log })
    }

    /// A conventional primitive polynomial for each supported degree.
    pub fn default_poly(m: u32) -> Option<u32> {
        let p = match m {
            2 => 0x7,
            3 => 0xb,
            4 => 0x13,
            5 => 0x25,
            6 => 0x43,
            7 => 0x89,
            8 => 0x11d,
            9 => 0x211,
            10 => 0x409,
            11 => 0x805,
            12 => 0x1053,
            13 => 0x201b,
            14 => 0x4443,
            15 => 0x8003,
            16 => 0x1100b,
            _ => return None,
        };
        Some(p)
    }

    pub fn with_default_poly(m: u32) -> Result<Self> {
        let p = Self::default_poly(m).ok_or(Error::UnsupportedDegree(m))?;
        Self::new(m, p)
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    pub fn primitive_polynomial(&self) -> u32 {
        self.prim_poly
    }

    /// Number of elements q = 2^m.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, value: u32) -> bool {
        (value as usize) < self.order
    }

    pub fn element(&self, value: u32) -> Result<Gf> {
        if self.contains(value) {
            Ok(Gf(value as u16))
        } else {
            Err(Error::Invalid(format!("{value} is not an element of GF({})", self.order)))
        }
    }

    /// a^i, exponent taken modulo q - 1.
    pub fn from_exponent(&self, i: i64) -> Gf {
        let n = (self.order - 1) as i64;
        Gf(self.exp[i.rem_euclid(n) as usize])
    }

    /// Discrete log of a nonzero element.
    pub fn exponent(&self, a: Gf) -> Option<usize> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize] as usize)
        }
    }

    /// 0, 1, a, a^2, ..., a^(q-2).
    pub fn all_elements(&self) -> impl Iterator<Item = Gf> + '_ {
        std::iter::once(Gf::ZERO).chain(self.exp[..self.order - 1].iter().map(|&v| Gf(v)))
    }

    /// Position of `a` in [`FieldSpec::all_elements`].
    pub fn enumeration_index(&self, a: Gf) -> usize {
        self.exponent(a).map_or(0, |e| e + 1)
    }

    #[inline]
    fn raw_mul(&self, a: Gf, b: Gf) -> Gf {
        if a.0 == 0 || b.0 == 0 {
            Gf::ZERO
        } else {
            Gf(self.exp[self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize])
        }
    }

    /// Renders `a` as `0`, `1`, `a` or `a^i`.
    pub fn display(&self, a: Gf) -> String {
        match self.exponent(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(1) => "a".to_string(),
            Some(e) => format!("a^{e}"),
        }
    }

    /// Accepts a decimal integer, `0`, `1`, `a` or `a^i`.
    pub fn parse_element(&self, s: &str) -> Result<Gf> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('a') {
            let e = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|r| r.trim().parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad element {s:?}")))?
            };
            return Ok(self.from_exponent(e));
        }
        let v: u32 = s.parse().map_err(|_| Error::Parse(format!("bad element {s:?}")))?;
        self.element(v)
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.prim_poly == other.prim_poly
    }
}

impl Eq for FieldSpec {}

/// Snapshot of the operation counters of a [`Field`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounter {
    pub multiplications: u64,
    pub additions: u64,
}

impl std::ops::Sub for OpCounter {
    type Output = OpCounter;
    fn sub(self, rhs: OpCounter) -> OpCounter {
        OpCounter {
            multiplications: self.multiplications - rhs.multiplications,
            additions: self.additions - rhs.additions,
        }
    }
}

/// Arithmetic context: shared tables plus counters owned by one decoding run.
///
/// `mul`, `div`, `inv` and `pow` each count as one multiplication; `add`
/// counts one addition. Trivial operands are counted too.
#[derive(Debug)]
pub struct Field {
    spec: Arc<FieldSpec>,
    muls: Cell<u64>,
    adds: Cell<u64>,
}

impl Clone for Field {
    fn clone(&self) -> Self {
        self.fork()
    }
}

impl Field {
    pub fn new(spec: Arc<FieldSpec>) -> Self {
        Field { spec, muls: Cell::new(0), adds: Cell::new(0) }
    }

    pub fn build(m: u32, prim_poly: u32) -> Result<Self> {
        Ok(Field::new(Arc::new(FieldSpec::new(m, prim_poly)?)))
    }

    /// Same tables, fresh counters.
    pub fn fork(&self) -> Field {
        Field::new(self.spec.clone())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn spec_arc(&self) -> Arc<FieldSpec> {
        self.spec.clone()
    }

    pub fn counter(&self) -> OpCounter {
        OpCounter { multiplications: self.muls.get(), additions: self.adds.get() }
    }

    pub fn reset_counter(&self) {
        self.muls.set(0);
        self.adds.set(0);
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        self.muls.set(self.muls.get() + 1);
        self.spec.raw_mul(a, b)
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        self.adds.set(self.adds.get() + 1);
        Gf(a.0 ^ b.0)
    }

    /// Same as [`Field::add`] in characteristic 2.
    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, b)
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        let e = self.spec.exponent(a).ok_or(Error::DivisionByZero)?;
        self.muls.set(self.muls.get() + 1);
        let n = self.spec.order - 1;
        Ok(Gf(self.spec.exp[(n - e) % n]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        let eb = self.spec.exponent(b).ok_or(Error::DivisionByZero)?;
        self.muls.set(self.muls.get() + 1);
        match self.spec.exponent(a) {
            None => Ok(Gf::ZERO),
            Some(ea) => {
                let n = self.spec.order - 1;
                Ok(Gf(self.spec.exp[ea + n - eb]))
            }
        }
    }

    pub fn pow(&self, a: Gf, e: u64) -> Gf {
        self.muls.set(self.muls.get() + 1);
        if e == 0 {
            return Gf::ONE;
        }
        match self.spec.exponent(a) {
            None => Gf::ZERO,
            Some(la) => {
                let n = (self.spec.order - 1) as u64;
                Gf(self.spec.exp[((la as u64 * (e % n)) % n) as usize])
            }
        }
    }

    pub fn from_exponent(&self, i: i64) -> Gf {
        self.spec.from_exponent(i)
    }

    pub fn display(&self, a: Gf) -> String {
        self.spec.display(a)
    }
}
