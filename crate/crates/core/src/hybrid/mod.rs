//! Hermite-Kampe de Feriet, two-variable Laguerre and hybrid polynomials
//! evaluated at exact points.
//!
//! Every family is generic over [`Scalar`], so the same code evaluates at
//! rationals and at elements of a quadratic ring.
//!
//! The hybrid polynomials are what the inverse-derivative construction
//! produces once `D^{-k} 1 = x^k / k!` (or `x^k / (k + p)!` for the associated
//! family) is substituted; they are evaluated from those closed sums.

mod hypergeometric;
mod legendre;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat, ExactInt, ExactRat, Scalar};
use crate::sequences::check_m_step;

pub use hypergeometric::{hkdf_via_2f0, hyp2f0_terminating};
pub use legendre::{
    ctc_via_legendre, legendre, pi_via_legendre, pi_via_legendre_quad, pi_via_legendre_with_root,
};

/// `sum_{k=0..n/step} weight(k) * lead^(n - step k) * tail^k`.
fn lacunary<S: Scalar>(n: usize, step: usize, lead: &S, tail: &S, weight: impl Fn(usize) -> ExactRat) -> S {
    let top = n / step;
    let lead_pows = lead.powers(n);
    let tail_pows = tail.powers(top);
    (0..=top).fold(lead.zero_like(), |acc, k| {
        acc + (lead_pows[n - step * k].clone() * tail_pows[k].clone()).scale(&weight(k))
    })
}

fn ratio(num: ExactInt, den: ExactInt) -> ExactRat {
    ExactRat::new(num, den)
}

/// `H_n(x, y) = n! sum_k x^(n-2k) y^k / (k! (n-2k)!)`.
pub fn hkdf<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    let nf = factorial(n);
    lacunary(n, 2, x, y, |k| ratio(nf.clone(), factorial(k) * factorial(n - 2 * k)))
}

/// Order-`m` analogue `n! sum_k x^(n-mk) y^k / (k! (n-mk)!)`.
pub fn hkdf_m<S: Scalar>(n: usize, m_step: usize, x: &S, y: &S) -> Result<S> {
    check_m_step(m_step)?;
    let nf = factorial(n);
    Ok(lacunary(n, m_step, x, y, |k| ratio(nf.clone(), factorial(k) * factorial(n - m_step * k))))
}

/// `L_n(x, y) = n! sum_k (-1)^k y^(n-k) x^k / ((k!)^2 (n-k)!)`.
pub fn laguerre2<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    let nf = factorial(n);
    lacunary(n, 1, y, x, |k| {
        let fk = factorial(k);
        let sign = if k % 2 == 0 { ExactInt::one() } else { -ExactInt::one() };
        ratio(&nf * sign, &fk * &fk * factorial(n - k))
    })
}

/// The same polynomial written as `sum_k C(n,k) (-1)^k y^(n-k) x^k / k!`.
pub fn laguerre2_binomial<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    let x_pows = x.powers(n);
    let y_pows = y.powers(n);
    let mut acc = x.zero_like();
    for k in 0..=n {
        let mut c = ratio(binomial(n, k as i64), factorial(k));
        if k % 2 == 1 {
            c = -c;
        }
        acc = acc + (y_pows[n - k].clone() * x_pows[k].clone()).scale(&c);
    }
    acc
}

/// `Pi_n(x, y) = n! sum_k y^(n-2k) x^k / ((k!)^2 (n-2k)!)`; `Pi_n(1, 1) = c_n`.
pub fn hybrid_pi<S: Scalar>(n: usize, x: &S, y: &S) -> S {
    hybrid_pi_assoc(n, 0, x, y)
}

/// `Pi_n^p(x, y) = n! sum_k x^k y^(n-2k) / ((n-2k)! k! (k+p)!)`;
/// `Pi_n^1(1, 1) = m_n`.
pub fn hybrid_pi_assoc<S: Scalar>(n: usize, p: usize, x: &S, y: &S) -> S {
    let nf = factorial(n);
    lacunary(n, 2, y, x, |k| ratio(nf.clone(), factorial(n - 2 * k) * factorial(k) * factorial(k + p)))
}

/// `(He_n(x), H_n(x))`: the probabilists' and physicists' Hermite polynomials
/// as `H_n(x, -1/2)` and `H_n(2x, -1)`.
pub fn hermite_reductions(n: usize, x: &ExactRat) -> (ExactRat, ExactRat) {
    let he = hkdf(n, x, &rat(-1, 2));
    let h = hkdf(n, &(x * rat(2, 1)), &rat(-1, 1));
    (he, h)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceFamily {
    Hkdf,
    Pi,
}

/// One step of the three-term recurrence, returning the value it predicts
/// for index `n + 1`:
///
/// * `Hkdf`: `H_{n+1} = x H_n + 2 y n H_{n-1}`
/// * `Pi`: `Pi_{n+1} = y Pi_n + 2 n x Pi^1_{n-1}`
pub fn recurrence_step<S: Scalar>(family: RecurrenceFamily, n: usize, x: &S, y: &S) -> Result<S> {
    if n == 0 {
        return Err(Error::InvalidParameter("recurrence step needs n >= 1".into()));
    }
    let two_n = rat(2 * n as i64, 1);
    Ok(match family {
        RecurrenceFamily::Hkdf => x.clone() * hkdf(n, x, y) + (y.clone() * hkdf(n - 1, x, y)).scale(&two_n),
        RecurrenceFamily::Pi => {
            y.clone() * hybrid_pi(n, x, y) + (x.clone() * hybrid_pi_assoc(n - 1, 1, x, y)).scale(&two_n)
        }
    })
}

/// The recurrences without the leading `x` (resp. `y`) factor:
/// `H_n + 2 y n H_{n-1}` and `Pi_n + 2 n x Pi^1_{n-1}`. These agree with
/// [`recurrence_step`] only when that factor is 1.
pub fn recurrence_step_unscaled<S: Scalar>(family: RecurrenceFamily, n: usize, x: &S, y: &S) -> Result<S> {
    if n == 0 {
        return Err(Error::InvalidParameter("recurrence step needs n >= 1".into()));
    }
    let two_n = rat(2 * n as i64, 1);
    Ok(match family {
        RecurrenceFamily::Hkdf => hkdf(n, x, y) + (y.clone() * hkdf(n - 1, x, y)).scale(&two_n),
        RecurrenceFamily::Pi => hybrid_pi(n, x, y) + (x.clone() * hybrid_pi_assoc(n - 1, 1, x, y)).scale(&two_n),
    })
}

impl RecurrenceFamily {
    /// Value at index `n` by direct summation.
    pub fn direct<S: Scalar>(self, n: usize, x: &S, y: &S) -> S {
        match self {
            RecurrenceFamily::Hkdf => hkdf(n, x, y),
            RecurrenceFamily::Pi => hybrid_pi(n, x, y),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat_from_int, QuadElem};
    use crate::sequences::{ctc, m_order_ctc, motzkin};
    use proptest::prelude::*;

    fn r(n: i64) -> ExactRat {
        rat(n, 1)
    }

    #[test]
    fn hkdf_examples() {
        let x = rat(7, 3);
        for n in 0..10 {
            assert_eq!(hkdf(n, &x, &r(0)), x.pow_u(n as u32));
        }
        assert_eq!(hkdf(2, &r(1), &rat(1, 2)), r(2));
        let y = rat(-5, 4);
        assert_eq!(hkdf(2, &x, &y), &x * &x + r(2) * &y);
    }

    #[test]
    fn hkdf_m_examples() {
        let (x, y) = (rat(2, 3), rat(5, 7));
        for n in 0..15 {
            assert_eq!(hkdf_m(n, 2, &x, &y).unwrap(), hkdf(n, &x, &y));
            assert_eq!(hkdf_m(n, 4, &x, &r(0)).unwrap(), x.pow_u(n as u32));
        }
        assert_eq!(hkdf_m(3, 3, &r(1), &r(1)).unwrap(), r(7));
        assert_eq!(hkdf_m(3, 3, &r(1), &r(1)).unwrap(), m_order_ctc(3, 3, 0).unwrap());
        assert!(hkdf_m(3, 1, &r(1), &r(1)).is_err());
    }

    #[test]
    fn laguerre_examples() {
        let (x, y) = (rat(3, 5), rat(-2, 7));
        assert_eq!(laguerre2(1, &x, &y), &y - &x);
        for n in 0..8 {
            assert_eq!(laguerre2(n, &r(0), &y), y.pow_u(n as u32));
        }
        assert_eq!(laguerre2(2, &r(1), &r(1)), rat(-1, 2));
    }

    #[test]
    fn laguerre_forms_agree() {
        let points = [(rat(1, 2), rat(3, 1)), (rat(-4, 3), rat(2, 5)), (r(0), r(1)), (rat(9, 7), rat(-1, 3))];
        for (x, y) in &points {
            for n in 0..=100 {
                assert_eq!(laguerre2(n, x, y), laguerre2_binomial(n, x, y), "n = {n}");
            }
        }
    }

    #[test]
    fn hybrid_examples() {
        for n in 0..30 {
            assert_eq!(hybrid_pi(n, &r(1), &r(1)), rat_from_int(ctc(n)));
            assert_eq!(hybrid_pi_assoc(n, 1, &r(1), &r(1)), rat_from_int(motzkin(n)));
        }
        let (x, y) = (rat(2, 9), rat(-3, 4));
        assert_eq!(hybrid_pi(2, &x, &y), &y * &y + r(2) * &x);
        assert_eq!(hybrid_pi_assoc(2, 1, &x, &y), &y * &y + &x);
        for n in 0..8 {
            assert_eq!(hybrid_pi(n, &r(0), &y), y.pow_u(n as u32));
        }
        for p in 0..5 {
            assert_eq!(hybrid_pi_assoc(0, p, &x, &y), ExactRat::new(int(1), factorial(p)));
        }
    }

    #[test]
    fn hermite_reduction_examples() {
        assert_eq!(hermite_reductions(0, &rat(3, 2)), (r(1), r(1)));
        assert_eq!(hermite_reductions(2, &r(1)), (r(0), r(2)));
        assert_eq!(hermite_reductions(3, &r(0)), (r(0), r(0)));
    }

    #[test]
    fn hermite_reductions_follow_classical_recurrences() {
        for x in [rat(1, 3), rat(-5, 2), r(2)] {
            let vals: Vec<_> = (0..40).map(|n| hermite_reductions(n, &x)).collect();
            for n in 1..39 {
                let nr = r(n as i64);
                assert_eq!(vals[n + 1].0, &x * &vals[n].0 - &nr * &vals[n - 1].0);
                assert_eq!(vals[n + 1].1, r(2) * &x * &vals[n].1 - r(2) * &nr * &vals[n - 1].1);
            }
        }
    }

    #[test]
    fn hermite_scaling_in_sqrt_two() {
        // H_n(x) = sqrt(2)^n He_n(sqrt(2) x), evaluated in Q(sqrt(2)).
        let sqrt2 = QuadElem::omega(int(2));
        for x in [rat(1, 3), rat(-5, 2), r(0), r(2)] {
            let point = sqrt2.scale(&x);
            for n in 0..30 {
                let he = hkdf(n, &point, &QuadElem::from_rat(rat(-1, 2), int(2)));
                let scaled = sqrt2.pow(n as u32) * he;
                assert_eq!(scaled.as_rational(), Some(&hermite_reductions(n, &x).1));
            }
        }
    }

    #[test]
    fn recurrence_examples() {
        let c3 = recurrence_step(RecurrenceFamily::Pi, 2, &r(1), &r(1)).unwrap();
        assert_eq!(c3, r(7));
        let (x, y) = (rat(4, 3), rat(-1, 5));
        assert_eq!(recurrence_step(RecurrenceFamily::Hkdf, 1, &x, &y).unwrap(), &x * &x + r(2) * &y);
        let lhs = recurrence_step(RecurrenceFamily::Pi, 2, &r(2), &r(3)).unwrap();
        assert_eq!(lhs, hybrid_pi(3, &r(2), &r(3)));
        assert!(recurrence_step(RecurrenceFamily::Pi, 0, &r(1), &r(1)).is_err());
    }

    #[test]
    fn unscaled_recurrences_fail_off_the_unit_point() {
        let (x, y) = (r(2), r(1));
        let unscaled = recurrence_step_unscaled(RecurrenceFamily::Hkdf, 1, &x, &y).unwrap();
        assert_eq!(unscaled, r(4)); // x + 2y
        assert_ne!(unscaled, hkdf(2, &x, &y)); // x^2 + 2y = 6
        let unscaled = recurrence_step_unscaled(RecurrenceFamily::Pi, 2, &r(1), &r(2)).unwrap();
        assert_ne!(unscaled, hybrid_pi(3, &r(1), &r(2)));
        for n in 1..30 {
            for family in [RecurrenceFamily::Hkdf, RecurrenceFamily::Pi] {
                assert_eq!(
                    recurrence_step_unscaled(family, n, &r(1), &r(1)).unwrap(),
                    family.direct(n + 1, &r(1), &r(1))
                );
            }
        }
    }

    #[test]
    fn families_evaluate_in_quadratic_ring() {
        let d = int(-3);
        let x = QuadElem::new(rat(1, 2), rat(1, 3), d.clone());
        let y = QuadElem::new(rat(-2, 1), rat(0, 1), d.clone());
        for n in 1..20 {
            for family in [RecurrenceFamily::Hkdf, RecurrenceFamily::Pi] {
                assert_eq!(recurrence_step(family, n, &x, &y).unwrap(), family.direct(n + 1, &x, &y));
            }
        }
    }

    fn arb_rat() -> impl Strategy<Value = ExactRat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn recurrences_hold(x in arb_rat(), y in arb_rat(), n in 1usize..100) {
            for family in [RecurrenceFamily::Hkdf, RecurrenceFamily::Pi] {
                prop_assert_eq!(recurrence_step(family, n, &x, &y).unwrap(), family.direct(n + 1, &x, &y));
            }
        }

        #[test]
        fn hkdf_parity(x in arb_rat(), y in arb_rat(), n in 0usize..100) {
            let flipped = hkdf(n, &-x.clone(), &y);
            let expected = if n % 2 == 0 { hkdf(n, &x, &y) } else { -hkdf(n, &x, &y) };
            prop_assert_eq!(flipped, expected);
        }
    }
}
