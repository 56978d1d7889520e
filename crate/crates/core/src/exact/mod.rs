//! Exact arithmetic substrate.
//!
//! [`ExactInt`] and [`ExactRat`] are `num-bigint` / `num-rational` values;
//! rationals are always kept with a positive denominator in lowest terms, so
//! structural equality is numeric equality. [`QuadElem`] adds the quadratic
//! ring used for complex-argument Legendre evaluation.

mod quad;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use quad::QuadElem;

pub type ExactInt = num_bigint::BigInt;
pub type ExactRat = num_rational::BigRational;

/// Shorthand for the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> ExactRat {
    ExactRat::new(ExactInt::from(num), ExactInt::from(den))
}

pub fn int(value: i64) -> ExactInt {
    ExactInt::from(value)
}

pub fn rat_from_int(value: ExactInt) -> ExactRat {
    ExactRat::from_integer(value)
}

/// Returns the integer value of `r` if its denominator is one.
pub fn to_integer(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}

/// Square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &ExactRat) -> Option<ExactRat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    (&num * &num == *r.numer() && &den * &den == *r.denom()).then(|| ExactRat::new(num, den))
}

// Append-only: entries are pushed under the write lock, so readers only ever
// observe a fully built prefix.
static FACTORIALS: LazyLock<RwLock<Vec<ExactInt>>> =
    LazyLock::new(|| RwLock::new(vec![ExactInt::one()]));

/// `n!`, memoized in a process-wide table.
pub fn factorial(n: usize) -> ExactInt {
    {
        let table = FACTORIALS.read().expect("factorial table poisoned");
        if let Some(value) = table.get(n) {
            return value.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial table poisoned");
    while table.len() <= n {
        let next = table.last().expect("table is never empty") * ExactInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Signed entry point to [`factorial`]; negative arguments are rejected.
pub fn try_factorial(n: i64) -> Result<ExactInt> {
    usize::try_from(n)
        .map(factorial)
        .map_err(|_| Error::NegativeFactorial(n))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> ExactInt {
    match usize::try_from(k) {
        Ok(k) if k <= n => factorial(n) / (factorial(k) * factorial(n - k)),
        _ => ExactInt::zero(),
    }
}

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &ExactRat, k: usize) -> ExactRat {
    let mut acc = ExactRat::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += ExactInt::one();
    }
    acc
}

/// `n! / (n - len)!`, the product of `len` consecutive integers ending at `n`.
pub fn falling(n: usize, len: usize) -> ExactInt {
    debug_assert!(len <= n);
    ((n - len + 1)..=n).fold(ExactInt::one(), |acc, i| acc * ExactInt::from(i))
}

/// A commutative ring in which the polynomial families are evaluated.
///
/// Constants are created through [`Scalar::lift`] on an existing element so
/// that ring parameters (the discriminant of a [`QuadElem`]) carry over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The rational `value` embedded in the same ring as `self`.
    fn lift(&self, value: &ExactRat) -> Self;

    /// `self * factor` for a rational factor.
    fn scale(&self, factor: &ExactRat) -> Self;

    fn is_zero_elem(&self) -> bool;

    fn lift_int(&self, value: &ExactInt) -> Self {
        self.lift(&rat_from_int(value.clone()))
    }

    fn one_like(&self) -> Self {
        self.lift(&ExactRat::one())
    }

    fn zero_like(&self) -> Self {
        self.lift(&ExactRat::zero())
    }

    fn pow_u(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `[1, self, self^2, ..., self^max]`.
    fn powers(&self, max: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(self.one_like());
        for i in 0..max {
            let next = out[i].clone() * self.clone();
            out.push(next);
        }
        out
    }
}

impl Scalar for ExactRat {
    fn lift(&self, value: &ExactRat) -> Self {
        value.clone()
    }

    fn scale(&self, factor: &ExactRat) -> Self {
        self * factor
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}
