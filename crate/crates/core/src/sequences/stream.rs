//! Linear-time generation of every family by recurrence.
//!
//! * `CTC`: `(n+1) c_{n+1} = (2n+1) c_n + 3n c_{n-1}`.
//! * `MOTZKIN`: `m_n = (c_{n+2} - c_{n+1}) / (2(n+1))` over the CTC stream.
//! * `ASSOC_CTC`: the same difference step applied `p` times.
//! * `M_ORDER_CTC`: the order-`m` base family (`p = 0`) from its holonomic
//!   recurrence, then `p` applications of
//!   `_m c_{n+1}^p = _m c_n^p + m n!/(n-m+1)! _m c_{n-m+1}^{p+1}` solved for
//!   the `p + 1` term.
//! * `GENERALIZED_D`: its holonomic recurrence.
//! * `TRINOMIAL_COL`: `(n a)_2 = n!/(n-a)! c_{n-a}^a` with `a = |column|`.
//!
//! The first `max(2, m_step)` terms of every recurrence are seeded from the
//! direct sums.

use num_traits::{One, Zero};

use super::{ctc, generalized_d, m_order_ctc, Family, SeqSpec};
use crate::error::{Error, Result};
use crate::exact::{falling, rat_from_int, ExactInt, ExactRat};
use crate::polyseries::DensePoly;

/// First `limit` terms of `spec`, computed by recurrence.
pub fn stream(spec: &SeqSpec, limit: usize) -> Result<Vec<ExactRat>> {
    if limit == 0 {
        return Err(Error::InvalidParameter("stream limit must be at least 1".into()));
    }
    let m = spec.m_step();
    let p = spec.p();
    Ok(match spec.family() {
        Family::Ctc => ctc_stream(limit).into_iter().map(rat_from_int).collect(),
        Family::Motzkin => raise_p(ctc_stream(limit + 2).into_iter().map(rat_from_int).collect(), 2, 1),
        Family::AssocCtc => raise_p(ctc_stream(limit + 2 * p).into_iter().map(rat_from_int).collect(), 2, p),
        Family::MOrderCtc => {
            let base = LacunaryEgf::m_order(m, 0).terms(limit + p * m, |n| m_order_ctc(n, m, 0).expect("validated"));
            raise_p(base, m, p)
        }
        Family::GeneralizedD => LacunaryEgf::generalized_d(m)
            .terms(limit, |n| rat_from_int(generalized_d(n, m).expect("validated"))),
        Family::TrinomialCol => {
            let a = spec.column().unsigned_abs() as usize;
            let mut out = vec![ExactRat::zero(); limit.min(a)];
            if limit > a {
                let assoc = stream(&SeqSpec::assoc(a), limit - a)?;
                out.extend(assoc.into_iter().enumerate().map(|(j, v)| v * rat_from_int(falling(j + a, a))));
            }
            out
        }
    })
}

fn ctc_stream(limit: usize) -> Vec<ExactInt> {
    let mut c: Vec<ExactInt> = (0..limit.min(2)).map(ctc).collect();
    for n in 1..limit.saturating_sub(1) {
        let next = (ExactInt::from(2 * n + 1) * &c[n] + ExactInt::from(3 * n) * &c[n - 1]) / ExactInt::from(n + 1);
        c.push(next);
    }
    c
}

/// Maps `_m c^p` to `_m c^{p+1}` `times` times; each pass consumes `m`
/// trailing terms.
fn raise_p(mut terms: Vec<ExactRat>, m: usize, times: usize) -> Vec<ExactRat> {
    for _ in 0..times {
        terms = (0..terms.len() - m)
            .map(|j| {
                let divisor = rat_from_int(falling(j + m - 1, m - 1) * ExactInt::from(m));
                (&terms[j + m] - &terms[j + m - 1]) / divisor
            })
            .collect();
    }
    terms
}

/// Sequences `a_n = n! [t^n] e^t B(t^step)` where `B(u) = sum_k b_k u^k` and
/// `b_k = b_{k-1} / ratio(k)` with `ratio(0) = 0`.
///
/// With `theta = t d/dt`, `B(t^step)` is annihilated by
/// `ratio(theta / step) - t^step`; conjugating by `e^t` sends `theta` to
/// `theta - t`. Normal ordering `ratio((theta - t)/step) = sum_i t^i P_i(theta)`
/// and reading off `[t^n]` gives
/// `sum_i P_i(n - i) n!/(n-i)! a_{n-i} = n!/(n-step)! a_{n-step}`.
pub(crate) struct LacunaryEgf {
    step: usize,
    ops: Vec<DensePoly>,
}

impl LacunaryEgf {
    pub(crate) fn new(step: usize, ratio: &DensePoly) -> Self {
        let q = ratio.compose_linear(&ExactRat::new(ExactInt::one(), ExactInt::from(step)), &ExactRat::zero());
        let theta = DensePoly::from_ints(&[0, 1]);
        let mut ops: Vec<DensePoly> = Vec::new();
        for c in q.coefficients().iter().rev() {
            // ops <- ops * (theta - t) + c, using P(theta) t = t P(theta + 1)
            let mut next = vec![DensePoly::zero(); ops.len() + 1];
            for (i, op) in ops.iter().enumerate() {
                next[i] = next[i].add(&op.mul(&theta));
                next[i + 1] = next[i + 1].sub(&op.compose_linear(&ExactRat::one(), &ExactRat::one()));
            }
            next[0] = next[0].add(&DensePoly::new(vec![c.clone()]));
            ops = next;
        }
        Self { step, ops }
    }

    /// `_m c_n^p`: `b_k = 1/(k! (k+p)!)`.
    pub(crate) fn m_order(step: usize, p: usize) -> Self {
        Self::new(step, &DensePoly::from_ints(&[0, p as i64, 1]))
    }

    /// `_m d_n`: `b_k = 1/(k! ((m-1)k)!)`.
    pub(crate) fn generalized_d(step: usize) -> Self {
        let s = step as i64;
        let ratio = (1..s).fold(DensePoly::from_ints(&[0, 1]), |acc, i| {
            acc.mul(&DensePoly::from_ints(&[i - (s - 1), s - 1]))
        });
        Self::new(step, &ratio)
    }

    pub(crate) fn terms(&self, limit: usize, seed: impl Fn(usize) -> ExactRat) -> Vec<ExactRat> {
        let seeds = self.step.max(2).min(limit);
        let mut a: Vec<ExactRat> = (0..seeds).map(seed).collect();
        for n in seeds..limit {
            let mut acc = &a[n - self.step] * rat_from_int(falling(n, self.step));
            for (i, op) in self.ops.iter().enumerate().skip(1) {
                if op.is_zero() || i > n {
                    continue;
                }
                let at = rat_from_int(ExactInt::from(n - i));
                acc -= op.eval(&at) * rat_from_int(falling(n, i)) * &a[n - i];
            }
            let lead = self.ops[0].eval(&rat_from_int(ExactInt::from(n)));
            a.push(acc / lead);
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::sequences::{assoc_ctc, motzkin};

    fn ints(v: &[i64]) -> Vec<ExactRat> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn documented_prefixes() {
        assert_eq!(stream(&SeqSpec::ctc(), 5).unwrap(), ints(&[1, 1, 3, 7, 19]));
        assert_eq!(stream(&SeqSpec::motzkin(), 5).unwrap(), ints(&[1, 1, 2, 4, 9]));
        assert_eq!(stream(&SeqSpec::assoc(2), 3).unwrap(), vec![rat(1, 2), rat(1, 2), rat(5, 6)]);
        assert!(stream(&SeqSpec::ctc(), 0).is_err());
    }

    #[test]
    fn short_limits() {
        assert_eq!(stream(&SeqSpec::ctc(), 1).unwrap(), ints(&[1]));
        assert_eq!(stream(&SeqSpec::generalized_d(5).unwrap(), 2).unwrap(), ints(&[1, 1]));
        assert_eq!(stream(&SeqSpec::trinomial_col(4), 3).unwrap(), ints(&[0, 0, 0]));
    }

    #[test]
    fn ctc_operator_is_the_known_recurrence() {
        // (theta - t)^2 / 4: P_0 = theta^2/4, P_1 = -(2 theta + 1)/4, P_2 = 1/4
        let egf = LacunaryEgf::m_order(2, 0);
        assert_eq!(egf.ops[0], DensePoly::new(vec![rat(0, 1), rat(0, 1), rat(1, 4)]));
        assert_eq!(egf.ops[1], DensePoly::new(vec![rat(-1, 4), rat(-1, 2)]));
        assert_eq!(egf.ops[2], DensePoly::new(vec![rat(1, 4)]));
    }

    #[test]
    fn holonomic_route_with_p_matches_direct_sums() {
        for m in 2..=5 {
            for p in 0..=3 {
                let terms = LacunaryEgf::m_order(m, p).terms(80, |n| m_order_ctc(n, m, p).unwrap());
                for (n, v) in terms.iter().enumerate() {
                    assert_eq!(v, &m_order_ctc(n, m, p).unwrap(), "m = {m}, p = {p}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn every_family_matches_direct_sums() {
        let mut specs = vec![SeqSpec::ctc(), SeqSpec::motzkin()];
        specs.extend((-4..=4).map(SeqSpec::trinomial_col));
        specs.extend((0..=4).map(SeqSpec::assoc));
        for m in 2..=6 {
            specs.push(SeqSpec::generalized_d(m).unwrap());
            for p in 0..=3 {
                specs.push(SeqSpec::m_order(m, p).unwrap());
            }
        }
        for spec in specs {
            let got = stream(&spec, 120).unwrap();
            assert_eq!(got.len(), 120);
            for (n, v) in got.iter().enumerate() {
                assert_eq!(v, &spec.term(n), "{spec} at n = {n}");
            }
        }
    }

    #[test]
    fn long_streams() {
        let c = stream(&SeqSpec::ctc(), 501).unwrap();
        assert_eq!(c[500], rat_from_int(ctc(500)));
        let m = stream(&SeqSpec::motzkin(), 501).unwrap();
        assert_eq!(m[500], rat_from_int(motzkin(500)));
        let a = stream(&SeqSpec::assoc(3), 301).unwrap();
        assert_eq!(a[300], assoc_ctc(300, 3));
    }
}
