use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer polynomial; `coefficients()[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients at all. All arithmetic is checked and reports overflow instead
/// of wrapping.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coefficients: Vec<i128>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<i128>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: i128) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * x`.
    pub fn linear(c: i128) -> Self {
        Polynomial::new(vec![0, c])
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, x: i128) -> Result<i128> {
        self.coefficients.iter().rev().try_fold(0i128, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow("polynomial evaluation"))
        })
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        let len = self.coefficients.len().max(other.coefficients.len());
        let coeff = |p: &Polynomial, i: usize| p.coefficients.get(i).copied().unwrap_or(0);
        (0..len)
            .map(|i| {
                coeff(self, i)
                    .checked_add(coeff(other, i))
                    .ok_or(Error::Overflow("polynomial addition"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero());
        }
        let mut out = vec![0i128; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                let term = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("polynomial product"))?;
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(Polynomial::new(out))
    }

    /// `self(inner(x))`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Result<Polynomial> {
        self.coefficients
            .iter()
            .rev()
            .try_fold(Polynomial::zero(), |acc, &c| {
                acc.checked_mul(inner)?
                    .checked_add(&Polynomial::constant(c))
            })
    }
}

impl fmt::Display for Polynomial {
    /// Conventional notation, highest power first: `x^2 - 3x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Comma-separated coefficients, constant term first: `"2,-3,1"` is
    /// `x^2 - 3x + 2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Polynomial::zero());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i128>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
    }
}

/// Drops every term with a negative coefficient. The result dominates `p` on
/// the nonnegative integers and, having only nonnegative coefficients, is
/// nondecreasing there.
pub fn nondecreasing_majorant(p: &Polynomial) -> Polynomial {
    Polynomial::new(p.coefficients.iter().map(|&c| c.max(0)).collect())
}

/// `h(x) = g(f(3x) + 1)`.
///
/// `f` is expected to be nondecreasing on the naturals; apply
/// [`nondecreasing_majorant`] first when it is not known to be.
pub fn compose_h(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let inner = f
        .compose(&Polynomial::linear(3))?
        .checked_add(&Polynomial::constant(1))?;
    g.compose(&inner)
}
