//! Generating functions as truncated exact series in the formal variable `t`.
//!
//! Parameters `x`, `y` enter as exact rationals; only `t` is a series
//! variable. Bessel-type factors are built directly from their rational
//! coefficients: for integer order `p`, `(x t^2)^(-p/2) I_p(2 t sqrt(x))` is the
//! rational series `sum_r x^r t^(2r) / (r! (r+p)!)`, so no radicals appear.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, ExactRat};
use crate::polyseries::TruncatedSeries;

pub const DEFAULT_ORDER: usize = 200;

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::InvalidParameter("truncation order must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn inv_factorials(a: usize, b: usize) -> ExactRat {
    ExactRat::new(One::one(), factorial(a) * factorial(b))
}

/// `exp(c t)`.
fn exp_linear(c: &ExactRat, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::new(vec![ExactRat::zero(), c.clone()], order).exp()
}

/// `I_p(2t) = sum_r t^(p+2r) / (r! (p+r)!)`.
pub fn bessel_i_series(p: usize, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    Ok(TruncatedSeries::from_fn(order, |k| {
        if k >= p && (k - p).is_multiple_of(2) {
            let r = (k - p) / 2;
            inv_factorials(r, r + p)
        } else {
            ExactRat::zero()
        }
    }))
}

/// Tricomi function `C_p(u) = sum_r u^r / (r! (r+p)!)`, as a series in its own
/// argument. `t^p C_p(t^2) = I_p(2t)`.
pub fn tricomi_series(p: usize, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    Ok(TruncatedSeries::from_fn(order, |r| inv_factorials(r, r + p)))
}

/// `exp(t) I_0(2t)`, the exponential generating function of `c_n`.
pub fn ctc_egf(order: usize) -> Result<TruncatedSeries> {
    exp_linear(&ExactRat::one(), order)?.mul(&bessel_i_series(0, order)?)
}

/// `exp(y t) (x t^2)^(-p/2) I_p(2 t sqrt(x))`, the exponential generating
/// function of `Pi_n^p(x, y)`. With `p = 1, x = y = 1` it is `exp(t) I_1(2t) / t`.
pub fn assoc_egf(p: usize, x: &ExactRat, y: &ExactRat, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let mut x_pow = ExactRat::one();
    let mut bessel = vec![ExactRat::zero(); order];
    for r in 0..order.div_ceil(2) {
        bessel[2 * r] = &x_pow * inv_factorials(r, r + p);
        x_pow *= x;
    }
    exp_linear(y, order)?.mul(&TruncatedSeries::new(bessel, order))
}

/// `1 / sqrt(1 - 2yt + (y^2 - 4x) t^2)`, the ordinary generating function of
/// `Pi_n(x, y)`.
pub fn pi_ogf(x: &ExactRat, y: &ExactRat, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    let radicand = vec![ExactRat::one(), y * rat(-2, 1), y * y - x * rat(4, 1)];
    TruncatedSeries::new(radicand, order).inv_sqrt()
}

/// `1 / sqrt(1 - 2xt + t^2)`, the ordinary generating function of `P_n(x)`.
pub fn legendre_ogf(x: &ExactRat, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    TruncatedSeries::new(vec![ExactRat::one(), x * rat(-2, 1), ExactRat::one()], order).inv_sqrt()
}

/// `exp(x t + y t^2)`, the exponential generating function of `H_n(x, y)`.
pub fn hkdf_egf(x: &ExactRat, y: &ExactRat, order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    TruncatedSeries::new(vec![ExactRat::zero(), x.clone(), y.clone()], order).exp()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenFunKind {
    HkdfEgf,
    CtcEgf,
    AssocEgf,
    PiOgf,
    LegendreOgf,
    BesselI,
    Tricomi,
}

impl fmt::Display for GenFunKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GenFunKind::HkdfEgf => "HKDF_EGF",
            GenFunKind::CtcEgf => "CTC_EGF",
            GenFunKind::AssocEgf => "ASSOC_EGF",
            GenFunKind::PiOgf => "PI_OGF",
            GenFunKind::LegendreOgf => "LEGENDRE_OGF",
            GenFunKind::BesselI => "BESSEL_I",
            GenFunKind::Tricomi => "TRICOMI",
        };
        f.write_str(name)
    }
}

/// A validated generating-function request. Parameters a kind does not use
/// must keep their defaults (`x = y = 1`, `alpha_p = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenFunSpec {
    kind: GenFunKind,
    order: usize,
    x: ExactRat,
    y: ExactRat,
    alpha_p: usize,
}

impl GenFunSpec {
    pub fn new(kind: GenFunKind, order: usize, x: ExactRat, y: ExactRat, alpha_p: usize) -> Result<Self> {
        check_order(order)?;
        let (uses_x, uses_y, uses_p) = match kind {
            GenFunKind::HkdfEgf | GenFunKind::PiOgf => (true, true, false),
            GenFunKind::AssocEgf => (true, true, true),
            GenFunKind::LegendreOgf => (true, false, false),
            GenFunKind::BesselI | GenFunKind::Tricomi => (false, false, true),
            GenFunKind::CtcEgf => (false, false, false),
        };
        if !uses_x && !x.is_one() {
            return Err(Error::InvalidParameter(format!("{kind} does not take x")));
        }
        if !uses_y && !y.is_one() {
            return Err(Error::InvalidParameter(format!("{kind} does not take y")));
        }
        if !uses_p && alpha_p != 0 {
            return Err(Error::InvalidParameter(format!("{kind} does not take an order parameter")));
        }
        Ok(Self { kind, order, x, y, alpha_p })
    }

    pub fn kind(&self) -> GenFunKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn build(&self) -> Result<TruncatedSeries> {
        let (x, y, p, order) = (&self.x, &self.y, self.alpha_p, self.order);
        match self.kind {
            GenFunKind::HkdfEgf => hkdf_egf(x, y, order),
            GenFunKind::CtcEgf => ctc_egf(order),
            GenFunKind::AssocEgf => assoc_egf(p, x, y, order),
            GenFunKind::PiOgf => pi_ogf(x, y, order),
            GenFunKind::LegendreOgf => legendre_ogf(x, order),
            GenFunKind::BesselI => bessel_i_series(p, order),
            GenFunKind::Tricomi => tricomi_series(p, order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_from_int, Scalar};
    use crate::hybrid::{hkdf, hybrid_pi, hybrid_pi_assoc, legendre};
    use crate::sequences::{ctc, motzkin};

    fn r(n: i64) -> ExactRat {
        rat(n, 1)
    }

    #[test]
    fn bessel_examples() {
        let i0 = bessel_i_series(0, 6).unwrap();
        assert_eq!(i0.coeff(2).unwrap(), &r(1));
        assert_eq!(i0.coeff(0).unwrap(), &r(1));
        assert_eq!(bessel_i_series(1, 6).unwrap().coeff(0).unwrap(), &r(0));
    }

    #[test]
    fn tricomi_examples() {
        assert_eq!(tricomi_series(0, 4).unwrap().coeff(1).unwrap(), &r(1));
        for p in 0..6 {
            assert_eq!(tricomi_series(p, 2).unwrap().coeff(0).unwrap(), &ExactRat::new(One::one(), factorial(p)));
        }
        assert_eq!(tricomi_series(1, 4).unwrap().coeff(2).unwrap(), &rat(1, 12));
    }

    #[test]
    fn bessel_tricomi_link() {
        for p in 0..=4 {
            let bessel = bessel_i_series(p, p + 2 * 50 + 1).unwrap();
            let tricomi = tricomi_series(p, 51).unwrap();
            for r in 0..=50 {
                assert_eq!(bessel.coeff(p + 2 * r).unwrap(), tricomi.coeff(r).unwrap());
            }
        }
    }

    #[test]
    fn ctc_egf_examples() {
        let egf = ctc_egf(5).unwrap();
        assert_eq!(egf.coeff(0).unwrap(), &r(1));
        assert_eq!(egf.coeff(2).unwrap(), &rat(3, 2));
        assert_eq!(egf.coeff(4).unwrap(), &rat(19, 24));
    }

    #[test]
    fn assoc_egf_examples() {
        let m = assoc_egf(1, &r(1), &r(1), 5).unwrap().egf_terms();
        assert_eq!(m[3], r(4));
        assert_eq!(assoc_egf(0, &r(1), &r(1), 30).unwrap(), ctc_egf(30).unwrap());
        assert_eq!(assoc_egf(2, &r(1), &r(1), 3).unwrap().coeff(0).unwrap(), &rat(1, 2));
    }

    #[test]
    fn ogf_examples() {
        assert_eq!(pi_ogf(&r(1), &r(1), 5).unwrap().coeff(3).unwrap(), &r(7));
        let y = rat(-2, 3);
        let s = pi_ogf(&r(0), &y, 10).unwrap();
        for n in 0..10 {
            assert_eq!(s.coeff(n).unwrap(), &y.pow_u(n as u32));
        }
        assert_eq!(pi_ogf(&r(2), &r(3), 4).unwrap().coeff(2).unwrap(), &r(13));
        assert_eq!(legendre_ogf(&r(1), 12).unwrap(), TruncatedSeries::new(vec![r(1); 12], 12));
        assert_eq!(legendre_ogf(&rat(1, 2), 3).unwrap().coeff(2).unwrap(), &rat(-1, 8));
    }

    #[test]
    fn hkdf_egf_examples() {
        let x = rat(5, 3);
        let e = hkdf_egf(&x, &r(0), 8).unwrap();
        for n in 0..8 {
            assert_eq!(e.coeff(n).unwrap(), &(x.pow_u(n as u32) / rat_from_int(factorial(n))));
        }
        assert_eq!(hkdf_egf(&r(1), &rat(1, 2), 5).unwrap().egf_terms()[4], r(10));
        assert_eq!(hkdf_egf(&r(1), &r(1), 3).unwrap().egf_terms()[2], r(3));
    }

    #[test]
    fn generating_functions_agree_with_closed_forms() {
        let c = ctc_egf(120).unwrap().egf_terms();
        let m = assoc_egf(1, &r(1), &r(1), 120).unwrap().egf_terms();
        for n in 0..120 {
            assert_eq!(c[n], rat_from_int(ctc(n)));
            assert_eq!(m[n], rat_from_int(motzkin(n)));
        }
        let (x, y) = (rat(-3, 4), rat(2, 5));
        let h = hkdf_egf(&x, &y, 60).unwrap().egf_terms();
        let pi = pi_ogf(&x, &y, 60).unwrap();
        let l = legendre_ogf(&y, 60).unwrap();
        for p in 0..4 {
            let a = assoc_egf(p, &x, &y, 60).unwrap().egf_terms();
            for (n, a_n) in a.iter().enumerate() {
                assert_eq!(*a_n, hybrid_pi_assoc(n, p, &x, &y));
            }
        }
        for (n, h_n) in h.iter().enumerate() {
            assert_eq!(*h_n, hkdf(n, &x, &y));
            assert_eq!(pi.coeff(n).unwrap(), &hybrid_pi(n, &x, &y));
            assert_eq!(l.coeff(n).unwrap(), &legendre(n, &y));
        }
    }

    #[test]
    fn spec_validation() {
        assert!(GenFunSpec::new(GenFunKind::CtcEgf, 0, r(1), r(1), 0).is_err());
        assert!(GenFunSpec::new(GenFunKind::CtcEgf, 4, r(2), r(1), 0).is_err());
        assert!(GenFunSpec::new(GenFunKind::LegendreOgf, 4, r(2), r(3), 0).is_err());
        assert!(GenFunSpec::new(GenFunKind::PiOgf, 4, r(2), r(3), 1).is_err());
        let spec = GenFunSpec::new(GenFunKind::AssocEgf, 10, r(1), r(1), 1).unwrap();
        assert_eq!(spec.build().unwrap(), assoc_egf(1, &r(1), &r(1), 10).unwrap());
        assert_eq!(spec.kind().to_string(), "ASSOC_EGF");
    }
}
