use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rational_sqrt, to_integer, ExactInt, ExactRat, QuadElem, Scalar};

/// Legendre polynomial `P_n(x)` by the three-term recurrence
/// `(n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}`, seeded with `P_0 = 1`,
/// `P_1 = x` (the first two coefficients of `1/sqrt(1 - 2xt + t^2)`).
pub fn legendre<S: Scalar>(n: usize, x: &S) -> S {
    let mut prev = x.one_like();
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for k in 1..n {
        let k = k as i64;
        let next = (x.clone() * cur.clone()).scale(&rat(2 * k + 1, 1)) - prev.scale(&rat(k, 1));
        prev = cur;
        cur = next.scale(&rat(1, k + 1));
    }
    cur
}

/// `s^n P_n(y / s)` where `s_inv` is the inverse of `s`.
fn scaled_legendre<S: Scalar>(n: usize, y: &S, s: &S, s_inv: &S) -> S {
    s.pow_u(n as u32) * legendre(n, &(y.clone() * s_inv.clone()))
}

/// Limit of `s^n P_n(y/s)` as `s -> 0`: the leading coefficient
/// `C(2n, n) / 2^n` of `P_n` times `y^n`.
fn degenerate_limit(n: usize, y: &ExactRat) -> ExactRat {
    let fnn = factorial(n);
    let lead = ExactRat::new(factorial(2 * n), &fnn * &fnn * (ExactInt::one() << n));
    lead * y.pow_u(n as u32)
}

/// `Pi_n(x, y)` through the Legendre bridge
/// `Pi_n(x, y) = s^n P_n(y/s)` with `s^2 = y^2 - 4x`, using the given root `s`.
///
/// `s = 0` is allowed and uses the limiting value.
pub fn pi_via_legendre_with_root(n: usize, x: &ExactRat, y: &ExactRat, s: &ExactRat) -> Result<ExactRat> {
    let disc = y * y - x * rat(4, 1);
    if s * s != disc {
        return Err(Error::InvalidParameter(format!("{s} is not a square root of {disc}")));
    }
    if s.is_zero() {
        return Ok(degenerate_limit(n, y));
    }
    Ok(scaled_legendre(n, y, s, &s.recip()))
}

/// [`pi_via_legendre_with_root`] with the nonnegative rational root; the
/// discriminant `y^2 - 4x` must be a rational square.
pub fn pi_via_legendre(n: usize, x: &ExactRat, y: &ExactRat) -> Result<ExactRat> {
    let disc = y * y - x * rat(4, 1);
    let s = rational_sqrt(&disc).ok_or(Error::NonSquareDiscriminant(disc))?;
    pi_via_legendre_with_root(n, x, y, &s)
}

/// The Legendre bridge for any rational discriminant, evaluated in
/// `Q[w]/(w^2 - num*den)` where `y^2 - 4x = num/den` and `s = w/den`.
///
/// The result must be rational; a nonzero radical part is reported as
/// [`Error::Inconsistent`].
pub fn pi_via_legendre_quad(n: usize, x: &ExactRat, y: &ExactRat) -> Result<ExactRat> {
    let disc = y * y - x * rat(4, 1);
    if disc.is_zero() {
        return Ok(degenerate_limit(n, y));
    }
    let den = disc.denom().clone();
    let ring = disc.numer() * &den;
    let w = QuadElem::omega(ring.clone());
    let s = w.scale(&ExactRat::new(ExactInt::one(), den.clone()));
    // 1/s = den / w = den * w / ring
    let s_inv = w.scale(&ExactRat::new(den, ring.clone()));
    let value = scaled_legendre(n, &w.lift(y), &s, &s_inv);
    value
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::Inconsistent(format!("Legendre bridge left radical part {} at n = {n}", value.radical_part())))
}

/// `c_n = w^n P_n(-w/3)` in `Q[w]/(w^2 + 3)`, i.e. `i^n sqrt(3)^n P_n(-i/sqrt(3))`.
///
/// Fails with [`Error::Inconsistent`] unless the result is a positive integer
/// with zero radical part.
pub fn ctc_via_legendre(n: usize) -> Result<ExactInt> {
    let w = QuadElem::omega(ExactInt::from(QuadElem::DEFAULT_DISCRIMINANT));
    let value = w.pow(n as u32) * legendre(n, &w.scale(&rat(-1, 3)));
    let r = value
        .as_rational()
        .ok_or_else(|| Error::Inconsistent(format!("radical part {} at n = {n}", value.radical_part())))?;
    match to_integer(r) {
        Some(c) if c.is_positive() => Ok(c),
        _ => Err(Error::Inconsistent(format!("rational part {r} at n = {n} is not a positive integer"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_from_int;
    use crate::genfun::legendre_ogf;
    use crate::hybrid::hybrid_pi;
    use crate::sequences::ctc;

    #[test]
    fn legendre_examples() {
        for n in 0..30 {
            assert_eq!(legendre(n, &rat(1, 1)), rat(1, 1));
        }
        let x = rat(-7, 9);
        assert_eq!(legendre(1, &x), x);
        assert_eq!(legendre(2, &rat(1, 2)), rat(-1, 8));
    }

    #[test]
    fn legendre_parity() {
        let z = rat(5, 11);
        for n in 0..40 {
            let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(legendre(n, &-z.clone()), sign * legendre(n, &z));
        }
    }

    #[test]
    fn legendre_matches_generating_function() {
        let x = rat(2, 7);
        let ogf = legendre_ogf(&x, 40).unwrap();
        for n in 0..40 {
            assert_eq!(ogf.coeff(n).unwrap(), &legendre(n, &x));
        }
    }

    #[test]
    fn bridge_examples() {
        for n in 0..20 {
            assert_eq!(pi_via_legendre(n, &rat(0, 1), &rat(1, 1)).unwrap(), rat(1, 1));
            assert_eq!(pi_via_legendre(n, &rat(-2, 1), &rat(1, 1)).unwrap(), hybrid_pi(n, &rat(-2, 1), &rat(1, 1)));
            assert_eq!(pi_via_legendre_quad(n, &rat(1, 1), &rat(1, 1)).unwrap(), rat_from_int(ctc(n)));
        }
    }

    #[test]
    fn bridge_rejects_non_squares_and_wrong_roots() {
        assert_eq!(pi_via_legendre(3, &rat(1, 1), &rat(1, 1)), Err(Error::NonSquareDiscriminant(rat(-3, 1))));
        assert!(matches!(
            pi_via_legendre_with_root(3, &rat(-2, 1), &rat(1, 1), &rat(2, 1)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn degenerate_discriminant() {
        // y^2 = 4x: Pi_n(1, 2)
        for n in 0..25 {
            let expected = hybrid_pi(n, &rat(1, 1), &rat(2, 1));
            assert_eq!(pi_via_legendre(n, &rat(1, 1), &rat(2, 1)).unwrap(), expected);
            assert_eq!(pi_via_legendre_quad(n, &rat(1, 1), &rat(2, 1)).unwrap(), expected);
        }
    }

    #[test]
    fn quadratic_bridge_on_non_square_rational_discriminants() {
        for (x, y) in [(rat(1, 3), rat(1, 2)), (rat(-5, 7), rat(2, 3)), (rat(3, 2), rat(-1, 1))] {
            for n in 0..30 {
                assert_eq!(pi_via_legendre_quad(n, &x, &y).unwrap(), hybrid_pi(n, &x, &y), "n = {n}");
            }
        }
    }

    #[test]
    fn ctc_bridge_small() {
        assert_eq!(ctc_via_legendre(0).unwrap(), ExactInt::from(1));
        assert_eq!(ctc_via_legendre(2).unwrap(), ExactInt::from(3));
        assert_eq!(ctc_via_legendre(5).unwrap(), ExactInt::from(51));
    }
}
