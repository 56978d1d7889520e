//! Central trinomial coefficients, Motzkin numbers and their generalizations.
//!
//! The functions in this module are the direct factorial sums. The
//! [`stream`](mod@stream) module produces the same values through recurrences, and
//! [`identity`] checks the cross-relations between families.

pub mod identity;
mod paths;
mod spec;
pub mod stream;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, ExactInt, ExactRat};

pub use identity::{check_identity, Failure, Identity, IdentityReport};
pub use paths::{motzkin_path_oracle, motzkin_path_oracle_bounded, DEFAULT_ORACLE_BOUND};
pub use spec::{Family, SeqSpec};
pub use stream::stream;

pub(crate) fn check_m_step(m_step: usize) -> Result<()> {
    if m_step < 2 {
        Err(Error::InvalidParameter(format!("m_step must be at least 2, got {m_step}")))
    } else {
        Ok(())
    }
}

/// `n! * sum_{k=0..n/step} 1 / ((n - step k)! k! (k + p)!)`.
///
/// Each term times `(K + p)!` (with `K = n / step`) is an integer, so the sum
/// is accumulated over the integers and reduced once.
fn lacunary_sum(n: usize, step: usize, p: usize) -> ExactRat {
    let top = n / step;
    let common = factorial(top + p);
    let nf = factorial(n);
    let mut acc = ExactInt::zero();
    for k in 0..=top {
        let den = factorial(n - step * k) * factorial(k) * factorial(k + p);
        acc += &nf * &common / den;
    }
    ExactRat::new(acc, common)
}

/// Central trinomial coefficient `c_n = sum_k n! / ((k!)^2 (n-2k)!)`.
pub fn ctc(n: usize) -> ExactInt {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|k| {
            let fk = factorial(k);
            &nf / (&fk * &fk * factorial(n - 2 * k))
        })
        .sum()
}

/// Motzkin number `m_n = sum_k n! / (k! (k+1)! (n-2k)!)`.
pub fn motzkin(n: usize) -> ExactInt {
    let nf = factorial(n);
    (0..=n / 2)
        .map(|k| &nf / (factorial(k) * factorial(k + 1) * factorial(n - 2 * k)))
        .sum()
}

/// Trinomial coefficient `(n m)_2`: the coefficient of `x^m` in
/// `(1 + x + 1/x)^n`, summed over every `j >= 0` with nonnegative factorial
/// arguments.
pub fn trinomial_coeff(n: usize, m: i64) -> ExactInt {
    let n_i = n as i64;
    if m.abs() > n_i {
        return ExactInt::zero();
    }
    let nf = factorial(n);
    let first = (-m).max(0);
    (first..)
        .take_while(|&j| n_i - 2 * j - m >= 0)
        .map(|j| &nf / (factorial(j as usize) * factorial((m + j) as usize) * factorial((n_i - 2 * j - m) as usize)))
        .sum()
}

/// p-associated central trinomial coefficient `c_n^p`; integral for
/// `p <= 1`, with `c_n^0 = c_n` and `c_n^1 = m_n`.
pub fn assoc_ctc(n: usize, p: usize) -> ExactRat {
    lacunary_sum(n, 2, p)
}

/// m-th order p-associated coefficient `_m c_n^p`.
pub fn m_order_ctc(n: usize, m_step: usize, p: usize) -> Result<ExactRat> {
    check_m_step(m_step)?;
    Ok(lacunary_sum(n, m_step, p))
}

/// `_m d_n = n! sum_k 1 / (k! ((m-1)k)! (n-mk)!)`, the coefficient of `x^n`
/// in `(1 + x + x^m)^n`.
pub fn generalized_d(n: usize, m_step: usize) -> Result<ExactInt> {
    check_m_step(m_step)?;
    let nf = factorial(n);
    Ok((0..=n / m_step)
        .map(|k| &nf / (factorial(k) * factorial((m_step - 1) * k) * factorial(n - m_step * k)))
        .sum())
}
