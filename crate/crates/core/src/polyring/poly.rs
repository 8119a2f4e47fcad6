use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolyError;
use crate::exactalg::IntMatrix;

/// Polynomial in `T` with integer coefficients, stored from the constant term
/// upwards. The leading coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Trailing zero coefficients are dropped; the zero polynomial is rejected.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self, PolyError> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(IntPoly { coeffs })
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `T^d + lower[d-1] T^(d-1) + … + lower[0]`.
    pub fn monic(lower: &[BigInt]) -> Self {
        let mut coeffs = lower.to_vec();
        coeffs.push(BigInt::one());
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `T^i` (zero above the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// `1 + max |a_i|` over the non-leading coefficients; every complex root of
    /// a monic polynomial is smaller than this in absolute value.
    pub fn cauchy_bound(&self) -> BigInt {
        let lower = &self.coeffs[..self.degree()];
        BigInt::one() + lower.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn derivative(&self) -> Option<IntPoly> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Some(IntPoly { coeffs })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let n = m.rows();
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &IntMatrix::identity(n).scale(c);
        }
        acc
    }
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and last
/// column `(-a_0, …, -a_{d-1})`. It is the matrix of multiplication by a root
/// on `Z[λ]` in the basis `1, λ, …, λ^(d-1)`.
pub fn companion_matrix(f: &IntPoly) -> Result<IntMatrix, PolyError> {
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let d = f.degree();
    if d == 0 {
        return Err(PolyError::ConstantPolynomial);
    }
    let mut m = IntMatrix::zeros(d, d);
    for i in 1..d {
        m.set(i, i - 1, BigInt::one());
    }
    for i in 0..d {
        m.set(i, d - 1, -f.coeff(i));
    }
    Ok(m)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "T")?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

/// Parses `POLY := TERM (('+'|'-') TERM)*`, `TERM := INT | INT? 'T' ('^' UINT)?`.
/// Whitespace is ignored; a bare sign may stand for a unit coefficient.
pub fn parse_poly(text: &str) -> Result<IntPoly, PolyError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        chars: &chars,
        pos: 0,
        len: text.len(),
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    if chars.is_empty() {
        return Err(p.error("empty input"));
    }
    loop {
        let (c, e) = p.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += c;
        match p.peek() {
            None => break,
            Some('+') | Some('-') => {}
            Some(other) => return Err(p.error(&format!("unexpected character '{other}'"))),
        }
    }
    IntPoly::new(coeffs)
}

/// Largest exponent the parser accepts.
const MAX_EXPONENT: usize = 4096;

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Some(s.parse().expect("ascii digits"))
    }

    /// One signed term, returned as (coefficient, exponent).
    fn term(&mut self) -> Result<(BigInt, usize), PolyError> {
        let mut negative = false;
        let mut signs = 0;
        while let Some(c @ ('+' | '-')) = self.peek() {
            signs += 1;
            // a binary operator followed by a signed INT allows two signs
            if signs > 2 {
                return Err(self.error("too many signs"));
            }
            negative ^= c == '-';
            self.pos += 1;
        }
        let magnitude = self.digits();
        let exponent = if self.peek() == Some('T') {
            self.pos += 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                let e = self
                    .digits()
                    .ok_or_else(|| self.error("expected exponent after '^'"))?;
                usize::try_from(&e)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| self.error("exponent too large"))?
            } else {
                1
            }
        } else if magnitude.is_some() {
            0
        } else {
            return Err(self.error("expected integer or 'T'"));
        };
        let c = magnitude.unwrap_or_else(BigInt::one);
        Ok((if negative { -c } else { c }, exponent))
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        parse_poly(s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(serde::de::Error::custom)
    }
}
