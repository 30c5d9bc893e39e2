//! Canonical text form, e.g. `(1 + a^5*X + a*X^3) + (a^4 + X + X^2)*Y + (a^3 + X)*Y^2`.
//!
//! Terms are listed by ascending X-power inside a Y-coefficient and by
//! ascending Y-power overall. A Y-coefficient is parenthesized when it has
//! more than one term and the polynomial has more than one Y-power.
//! The parser accepts any sum/product expression over `a`, `X`, `Y`, integer
//! constants, `^` and parentheses; `-` is read as `+`.

use crate::error::{Error, Result};
use crate::galois::{FieldSpec, Field, Gf};
use crate::poly::{BiPoly, UniPoly};

fn x_term(spec: &FieldSpec, c: Gf, i: usize) -> String {
    let xs = match i {
        0 => return spec.display(c),
        1 => "X".to_string(),
        _ => format!("X^{i}"),
    };
    if c == Gf::ONE {
        xs
    } else {
        format!("{}*{}", spec.display(c), xs)
    }
}

pub fn format_uni(spec: &FieldSpec, p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| x_term(spec, c, i))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_bi(spec: &FieldSpec, p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let nonzero: Vec<(usize, &UniPoly)> = p.ys().iter().enumerate().filter(|(_, u)| !u.is_zero()).collect();
    let several = nonzero.len() > 1;
    nonzero
        .iter()
        .map(|&(j, u)| {
            let inner = format_uni(spec, u);
            let coef = if u.weight() > 1 && (several || j > 0) { format!("({inner})") } else { inner };
            let ys = match j {
                0 => return coef,
                1 => "Y".to_string(),
                _ => format!("Y^{j}"),
            };
            if u.is_one() {
                ys
            } else {
                format!("{coef}*{ys}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u32),
    A,
    X,
    Y,
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n = 0u32;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n.checked_mul(10).and_then(|n| n.checked_add(d)).ok_or_else(|| Error::Parse("number too large".into()))?;
                    chars.next();
                }
                out.push(Tok::Num(n));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'a' | 'α' => Tok::A,
                    'X' | 'x' => Tok::X,
                    'Y' | 'y' => Tok::Y,
                    '+' | '-' => Tok::Plus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    gf: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.next();
            let t = self.term()?;
            acc = acc.add(self.gf, &t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                }
                // Juxtaposition, as in "a^3X" or "(a + X)Y".
                Some(Tok::Num(_) | Tok::A | Tok::X | Tok::Y | Tok::Open) => {}
                _ => break,
            }
            let f = self.factor()?;
            acc = acc.mul(self.gf, &f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) => Ok(n as usize),
                other => Err(Error::Parse(format!("expected exponent, got {other:?}"))),
            }
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<BiPoly> {
        let base = match self.next() {
            Some(Tok::Open) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::Close) {
                    return Err(Error::Parse("missing ')'".into()));
                }
                e
            }
            Some(Tok::Num(n)) => BiPoly::from_uni(UniPoly::constant(self.gf.spec().element(n)?)),
            Some(Tok::A) => {
                let e = self.exponent()?;
                return Ok(BiPoly::from_uni(UniPoly::constant(self.gf.from_exponent(e as i64))));
            }
            Some(Tok::X) => {
                let e = self.exponent()?;
                return Ok(BiPoly::monomial(Gf::ONE, e, 0));
            }
            Some(Tok::Y) => {
                let e = self.exponent()?;
                return Ok(BiPoly::monomial(Gf::ONE, 0, e));
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        let e = self.exponent()?;
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self.gf, &base);
        }
        Ok(acc)
    }
}

/// Parses a bivariate polynomial. Arithmetic is done on a scratch counter.
pub fn parse_bi(spec: &std::sync::Arc<FieldSpec>, s: &str) -> Result<BiPoly> {
    let gf = Field::new(spec.clone());
    let mut p = Parser { toks: tokenize(s)?, pos: 0, gf: &gf };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a polynomial in X only.
pub fn parse_uni(spec: &std::sync::Arc<FieldSpec>, s: &str) -> Result<UniPoly> {
    let p = parse_bi(spec, s)?;
    match p.y_degree() {
        None => Ok(UniPoly::zero()),
        Some(0) => Ok(p.into_ys().remove(0)),
        Some(_) => Err(Error::Parse(format!("{s:?} depends on Y"))),
    }
}
