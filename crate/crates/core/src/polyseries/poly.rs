use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{to_integer, ExactInt, ExactRat};

/// Dense polynomial in one variable; `coeffs[k]` multiplies `x^k`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DensePoly {
    coeffs: Vec<ExactRat>,
}

fn trim(coeffs: &mut Vec<ExactRat>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

fn convolve(a: &[ExactRat], b: &[ExactRat]) -> Vec<ExactRat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ExactRat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<ExactRat>) -> Self {
        trim(&mut coeffs);
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactRat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![ExactRat::one()] }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ExactRat {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at a rational point (Horner).
    pub fn eval(&self, x: &ExactRat) -> ExactRat {
        self.coeffs.iter().rev().fold(ExactRat::zero(), |acc, c| acc * x + c)
    }

    /// `p(a x + b)`.
    pub fn compose_linear(&self, a: &ExactRat, b: &ExactRat) -> Self {
        let inner = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner);
            acc = acc.add(&Self::new(vec![c.clone()]));
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, factor: &ExactRat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Schoolbook multiplication.
    pub fn mul(&self, other: &Self) -> Self {
        Self::new(convolve(&self.coeffs, &other.coeffs))
    }

    /// `self^n` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        DensePoly::mul(self, rhs)
    }
}

/// Laurent polynomial: `coeffs[i]` multiplies `x^(offset + i)`.
///
/// Canonical form keeps the first and last stored coefficients nonzero; the
/// zero polynomial is empty with offset 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: Vec<ExactRat>,
    offset: i64,
}

impl LaurentPoly {
    pub fn new(mut coeffs: Vec<ExactRat>, mut offset: i64) -> Self {
        trim(&mut coeffs);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        offset += lead as i64;
        if coeffs.is_empty() {
            offset = 0;
        }
        Self { coeffs, offset }
    }

    pub fn from_ints(coeffs: &[i64], offset: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactRat::from_integer(c.into())).collect(), offset)
    }

    pub fn one() -> Self {
        Self { coeffs: vec![ExactRat::one()], offset: 0 }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coefficients(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// Lowest and highest exponents with nonzero coefficient.
    pub fn support(&self) -> Option<(i64, i64)> {
        (!self.coeffs.is_empty()).then(|| (self.offset, self.offset + self.coeffs.len() as i64 - 1))
    }

    pub fn coeff(&self, exponent: i64) -> ExactRat {
        usize::try_from(exponent - self.offset)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(ExactRat::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(convolve(&self.coeffs, &other.coeffs), self.offset + other.offset)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

fn integral(value: ExactRat) -> ExactInt {
    to_integer(&value).expect("integer polynomial power has integer coefficients")
}

/// Coefficient of `x^n` in `(1 + x + x^m_step)^n`.
///
/// `m_step = 2` gives the central trinomial coefficient.
pub fn central_coeff(n: u32, m_step: usize) -> Result<ExactInt> {
    if m_step < 2 {
        return Err(Error::InvalidParameter(format!("m_step must be at least 2, got {m_step}")));
    }
    let mut base = vec![0i64; m_step + 1];
    base[0] = 1;
    base[1] = 1;
    base[m_step] = 1;
    Ok(integral(DensePoly::from_ints(&base).pow(n).coeff(n as usize)))
}

/// Coefficient of `x^j` in `(1 + x + 1/x)^n`.
pub fn laurent_trinomial_coeff(n: u32, j: i64) -> ExactInt {
    integral(LaurentPoly::from_ints(&[1, 1, 1], -1).pow(n).coeff(j))
}
