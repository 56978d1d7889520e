use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, pochhammer, rat, ExactRat, Scalar};

fn nonpositive_integer(a: &ExactRat) -> Option<usize> {
    (a.is_integer() && !a.is_positive()).then(|| (-a.to_integer()).try_into().expect("fits in usize"))
}

/// Terminating `2F0(a, b; ; z) = sum_k (a)_k (b)_k z^k / k!`.
///
/// One of `a`, `b` must be a nonpositive integer `-N`; the sum stops at
/// `k = N`. Non-terminating parameters are rejected, since the series has
/// zero radius of convergence.
pub fn hyp2f0_terminating(a: &ExactRat, b: &ExactRat, z: &ExactRat) -> Result<ExactRat> {
    let last = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => {
            return Err(Error::Unsupported(format!("2F0({a}, {b}; z) does not terminate")));
        }
    };
    let mut acc = ExactRat::zero();
    let mut z_pow = ExactRat::one();
    for k in 0..=last {
        acc += pochhammer(a, k) * pochhammer(b, k) * &z_pow / ExactRat::from_integer(factorial(k));
        z_pow *= z;
    }
    Ok(acc)
}

/// `H_n(x, y) = x^n 2F0(-n/2, (1-n)/2; ; 4y/x^2)` for `x != 0`.
pub fn hkdf_via_2f0(n: usize, x: &ExactRat, y: &ExactRat) -> Result<ExactRat> {
    if x.is_zero() {
        return Err(Error::InvalidParameter("the 2F0 form needs x != 0".into()));
    }
    let n_i = n as i64;
    let z = y * rat(4, 1) / (x * x);
    let f = hyp2f0_terminating(&rat(-n_i, 2), &rat(1 - n_i, 2), &z)?;
    Ok(x.pow_u(n as u32) * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::hkdf;

    #[test]
    fn examples() {
        let x = rat(-3, 5);
        for n in 0..12 {
            assert_eq!(hkdf_via_2f0(n, &x, &rat(0, 1)).unwrap(), x.pow_u(n as u32));
        }
        assert_eq!(hkdf_via_2f0(3, &rat(1, 1), &rat(1, 2)).unwrap(), rat(4, 1));
        let scaled = hkdf_via_2f0(4, &rat(1, 2), &rat(1, 2)).unwrap() * rat(16, 1);
        assert_eq!(scaled, rat(73, 1));
        assert!(matches!(hkdf_via_2f0(2, &rat(0, 1), &rat(1, 1)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn non_terminating_rejected() {
        assert!(matches!(hyp2f0_terminating(&rat(1, 2), &rat(1, 1), &rat(1, 1)), Err(Error::Unsupported(_))));
        assert_eq!(hyp2f0_terminating(&rat(0, 1), &rat(7, 3), &rat(5, 1)).unwrap(), rat(1, 1));
        // 2F0(-1, b; z) = 1 - b z
        assert_eq!(hyp2f0_terminating(&rat(-1, 1), &rat(3, 1), &rat(2, 1)).unwrap(), rat(-5, 1));
    }

    #[test]
    fn linear_argument_disagrees() {
        // 4y/x instead of 4y/x^2: differs as soon as x != 1 and n >= 2
        let (x, y) = (rat(1, 2), rat(1, 2));
        let wrong = x.pow_u(2) * hyp2f0_terminating(&rat(-1, 1), &rat(-1, 2), &(&y * rat(4, 1) / &x)).unwrap();
        assert_ne!(wrong, hkdf(2, &x, &y));
        assert_eq!(hkdf_via_2f0(2, &x, &y).unwrap(), hkdf(2, &x, &y));
    }
}
