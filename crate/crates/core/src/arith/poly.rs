use std::fmt;

use num_traits::{One, Zero};

use super::{inv_factorial, BigRat};
use crate::error::{Error, Result};

/// Polynomial over the rationals truncated above degree `cap`, i.e. an element
/// of `Q[t]/(t^(cap+1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    coeffs: Vec<BigRat>,
}

impl TruncPoly {
    pub fn zero(cap: usize) -> Self {
        TruncPoly {
            coeffs: vec![BigRat::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = BigRat::one();
        p
    }

    /// Builds from low-to-high coefficients. Missing high coefficients are zero;
    /// coefficients above `cap` are dropped.
    pub fn from_coeffs(cap: usize, coeffs: impl IntoIterator<Item = BigRat>) -> Self {
        let mut p = Self::zero(cap);
        for (slot, c) in p.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        p
    }

    pub fn monomial(cap: usize, degree: usize, coeff: BigRat) -> Self {
        let mut p = Self::zero(cap);
        if degree <= cap {
            p.coeffs[degree] = coeff;
        }
        p
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^degree`; zero above the cap.
    pub fn coeff(&self, degree: usize) -> BigRat {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRat::zero)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncPoly) -> Result<TruncPoly> {
        trunc_mul(self, other)
    }

    pub fn add(&self, other: &TruncPoly) -> Result<TruncPoly> {
        check_caps(self, other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b);
        Ok(TruncPoly::from_coeffs(self.cap(), coeffs))
    }

    pub fn pow(&self, exp: u32) -> TruncPoly {
        let mut acc = TruncPoly::one(self.cap());
        for _ in 0..exp {
            acc = mul_unchecked(&acc, self);
        }
        acc
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn check_caps(p: &TruncPoly, q: &TruncPoly) -> Result<()> {
    if p.cap() != q.cap() {
        return Err(Error::CapMismatch {
            left: p.cap(),
            right: q.cap(),
        });
    }
    Ok(())
}

/// Product with every term of degree above the common cap discarded.
pub fn trunc_mul(p: &TruncPoly, q: &TruncPoly) -> Result<TruncPoly> {
    check_caps(p, q)?;
    Ok(mul_unchecked(p, q))
}

fn mul_unchecked(p: &TruncPoly, q: &TruncPoly) -> TruncPoly {
    let cap = p.cap();
    let mut out = TruncPoly::zero(cap);
    for (i, a) in p.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in q.coeffs[..=cap - i].iter().enumerate() {
            if !b.is_zero() {
                out.coeffs[i + j] += a * b;
            }
        }
    }
    out
}

/// `e^t - 1` truncated at `cap`: this is `ch(x)` for `x = L - 1` on `CP^N`.
pub fn exp_minus_one(cap: usize) -> TruncPoly {
    TruncPoly::from_coeffs(
        cap,
        (0..=cap).map(|d| {
            if d == 0 {
                BigRat::zero()
            } else {
                inv_factorial(d as u32)
            }
        }),
    )
}

/// `(e^t - 1)^j` truncated at `cap`, by repeated truncated multiplication.
pub fn exp_minus_one_pow(j: u32, cap: usize) -> TruncPoly {
    exp_minus_one(cap).pow(j)
}
