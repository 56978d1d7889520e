use num_traits::{One, Zero};

use super::DensePoly;
use crate::error::{Error, Result};
use crate::exact::{factorial, ExactRat};

/// Formal power series in `t` known modulo `t^order`.
///
/// Coefficient `k` of every result depends only on coefficients `0..=k` of
/// the inputs, so truncating after the fact equals computing at the lower
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRat>,
}

impl TruncatedSeries {
    /// Pads with zeros or drops terms so exactly `order` coefficients remain.
    pub fn new(mut coeffs: Vec<ExactRat>, order: usize) -> Self {
        coeffs.resize(order, ExactRat::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![ExactRat::one()], order)
    }

    pub fn from_poly(poly: &DensePoly, order: usize) -> Self {
        Self::new(poly.coefficients().to_vec(), order)
    }

    /// Builds a series from a coefficient function.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ExactRat) -> Self {
        Self { coeffs: (0..order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// Exact coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Result<&ExactRat> {
        self.coeffs.get(k).ok_or(Error::IndexOutOfRange { index: k, order: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order)
    }

    /// `k! * [t^k]` for every k, reading the series as an exponential
    /// generating function.
    pub fn egf_terms(&self) -> Vec<ExactRat> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * ExactRat::from_integer(factorial(k)))
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, factor: &ExactRat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![ExactRat::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(self)`; requires a zero constant term.
    ///
    /// Uses `f' = a' f`, i.e. `k f_k = sum_{j=1..k} j a_j f_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        let order = self.order();
        if let Some(c0) = self.coeffs.first().filter(|c| !c.is_zero()) {
            return Err(Error::ConstantTerm { expected: Box::new(ExactRat::zero()), found: Box::new(c0.clone()) });
        }
        let mut f = Vec::with_capacity(order);
        if order > 0 {
            f.push(ExactRat::one());
        }
        let support: Vec<usize> = (1..order).filter(|&j| !self.coeffs[j].is_zero()).collect();
        for k in 1..order {
            let mut acc = ExactRat::zero();
            for &j in support.iter().take_while(|&&j| j <= k) {
                acc += &self.coeffs[j] * &f[k - j] * ExactRat::from_integer(j.into());
            }
            f.push(acc / ExactRat::from_integer(k.into()));
        }
        Ok(Self { coeffs: f })
    }

    /// `self^alpha` for rational `alpha`; requires constant term 1 and picks
    /// the branch with constant term 1.
    ///
    /// From `a f' = alpha a' f`: `k f_k = sum_{j=1..k} ((alpha + 1) j - k) a_j f_{k-j}`.
    pub fn pow_rat(&self, alpha: &ExactRat) -> Result<Self> {
        let order = self.order();
        if let Some(c0) = self.coeffs.first().filter(|c| !c.is_one()) {
            return Err(Error::ConstantTerm { expected: Box::new(ExactRat::one()), found: Box::new(c0.clone()) });
        }
        let alpha1 = alpha + ExactRat::one();
        let support: Vec<usize> = (1..order).filter(|&j| !self.coeffs[j].is_zero()).collect();
        let mut f = Vec::with_capacity(order);
        if order > 0 {
            f.push(ExactRat::one());
        }
        for k in 1..order {
            let kr = ExactRat::from_integer(k.into());
            let mut acc = ExactRat::zero();
            for &j in support.iter().take_while(|&&j| j <= k) {
                let weight = &alpha1 * ExactRat::from_integer(j.into()) - &kr;
                acc += weight * &self.coeffs[j] * &f[k - j];
            }
            f.push(acc / kr);
        }
        Ok(Self { coeffs: f })
    }

    /// The series `s` with `s^2 * self = 1` and `s(0) = 1`.
    pub fn inv_sqrt(&self) -> Result<Self> {
        self.pow_rat(&ExactRat::new((-1).into(), 2.into()))
    }
}
