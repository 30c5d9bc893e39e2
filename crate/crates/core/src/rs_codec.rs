//! Reed-Solomon codes defined by evaluation on a support set.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldSpec, Gf};
use crate::poly::{lagrange_interpolate, UniPoly};

#[derive(Debug, Clone, PartialEq)]
pub struct CodeSpec {
    field: Arc<FieldSpec>,
    k: usize,
    support: Vec<Gf>,
}

impl CodeSpec {
    pub fn new(field: Arc<FieldSpec>, k: usize, support: Vec<Gf>) -> Result<Self> {
        let n = support.len();
        if k == 0 || k > n || n > field.order() {
            return Err(Error::Invalid(format!("need 1 <= k <= n <= q, got k={k}, n={n}, q={}", field.order())));
        }
        let mut seen = HashSet::new();
        for &x in &support {
            if !field.contains(x.value() as u32) {
                return Err(Error::Invalid(format!("support element {} outside the field", x.value())));
            }
            if !seen.insert(x) {
                return Err(Error::DuplicateAbscissa(x.value()));
            }
        }
        Ok(CodeSpec { field, k, support })
    }

    /// Full-length code on the nonzero elements 1, a, ..., a^(q-2).
    pub fn full_length(field: Arc<FieldSpec>, k: usize) -> Result<Self> {
        let support = field.all_elements().skip(1).collect();
        Self::new(field, k, support)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn support(&self) -> &[Gf] {
        &self.support
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub symbols: Vec<Gf>,
}

/// Evaluates `f` on the support.
pub fn encode(gf: &Field, code: &CodeSpec, f: &UniPoly) -> Result<Codeword> {
    if let Some(d) = f.degree() {
        if d >= code.k {
            return Err(Error::DegreeTooHigh { degree: d, k: code.k });
        }
    }
    Ok(Codeword { symbols: code.support.iter().map(|&x| f.eval(gf, x)).collect() })
}

/// The polynomial of degree < k through exactly k points.
pub fn reencode(gf: &Field, points: &[(Gf, Gf)], k: usize) -> Result<UniPoly> {
    if points.len() != k {
        return Err(Error::WrongCount { expected: k, got: points.len() });
    }
    lagrange_interpolate(gf, points)
}
