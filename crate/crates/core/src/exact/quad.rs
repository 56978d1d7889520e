use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactInt, ExactRat, Scalar};
use crate::error::{Error, Result};

/// Element `a + b*w` of `Q[w]/(w^2 - d)`.
///
/// The discriminant `d` travels with every element; combining elements of
/// different rings is an error (the `std::ops` impls panic, the `checked_*`
/// methods return [`Error::DiscriminantMismatch`]). With `d = -3`, `w` plays
/// the role of `i*sqrt(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    rational: ExactRat,
    radical: ExactRat,
    disc: ExactInt,
}

impl QuadElem {
    pub const DEFAULT_DISCRIMINANT: i64 = -3;

    pub fn new(rational: ExactRat, radical: ExactRat, disc: ExactInt) -> Self {
        Self { rational, radical, disc }
    }

    pub fn from_rat(value: ExactRat, disc: ExactInt) -> Self {
        Self::new(value, ExactRat::zero(), disc)
    }

    /// The generator `w` itself.
    pub fn omega(disc: ExactInt) -> Self {
        Self::new(ExactRat::zero(), ExactRat::one(), disc)
    }

    pub fn rational_part(&self) -> &ExactRat {
        &self.rational
    }

    pub fn radical_part(&self) -> &ExactRat {
        &self.radical
    }

    pub fn discriminant(&self) -> &ExactInt {
        &self.disc
    }

    /// The rational value, if the radical part vanishes.
    pub fn as_rational(&self) -> Option<&ExactRat> {
        self.radical.is_zero().then_some(&self.rational)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.rational.clone(), -&self.radical, self.disc.clone())
    }

    /// `a^2 - d b^2`, i.e. `x * conj(x)`.
    pub fn norm(&self) -> ExactRat {
        &self.rational * &self.rational - &self.radical * &self.radical * ExactRat::from_integer(self.disc.clone())
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::DiscriminantMismatch { left: self.disc.clone(), right: other.disc.clone() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new(&self.rational + &other.rational, &self.radical + &other.radical, self.disc.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::new(&self.rational - &other.rational, &self.radical - &other.radical, self.disc.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let d = ExactRat::from_integer(self.disc.clone());
        let rational = &self.rational * &other.rational + &self.radical * &other.radical * d;
        let radical = &self.rational * &other.radical + &self.radical * &other.rational;
        Ok(Self::new(rational, radical, self.disc.clone()))
    }

    /// Division by an element of nonzero norm (always the case for nonzero
    /// elements when `d` is not a perfect square).
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let norm = other.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.checked_mul(&other.conj())?.div_scalar(&norm)
    }

    pub fn div_scalar(&self, divisor: &ExactRat) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.rational / divisor, &self.radical / divisor, self.disc.clone()))
    }

    /// Binary exponentiation.
    pub fn pow(&self, exp: u32) -> Self {
        self.pow_u(exp)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*w [w^2 = {}]", self.rational, self.radical, self.disc)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem::new(-self.rational, -self.radical, self.disc)
    }
}

impl Scalar for QuadElem {
    fn lift(&self, value: &ExactRat) -> Self {
        Self::from_rat(value.clone(), self.disc.clone())
    }

    fn scale(&self, factor: &ExactRat) -> Self {
        Self::new(&self.rational * factor, &self.radical * factor, self.disc.clone())
    }

    fn is_zero_elem(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }
}
