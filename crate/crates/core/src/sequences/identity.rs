//! Catalogue of cross-relations between the sequence families, checked by
//! exact evaluation of both sides at every index of a range.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{assoc_ctc, ctc, m_order_ctc, motzkin, trinomial_coeff};
use crate::error::{Error, Result};
use crate::exact::{falling, rat, rat_from_int, ExactInt, ExactRat};
use crate::genfun::{assoc_egf, ctc_egf};
use crate::hybrid::{hybrid_pi, hybrid_pi_assoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `m_n = (n+1 1)_2 / (n+1)`
    Eq2a,
    /// `c_n = Pi_n(1, 1)`
    Eq13,
    /// `n! [t^n] exp(t) I_0(2t) = c_n`
    Eq15,
    /// `(n+1) c_{n+1} = (2n+1) c_n + 3n c_{n-1}`
    Eq24,
    /// `m_n = c_n^1`
    Eq27,
    /// `m_n = Pi_n^1(1, 1)`
    Eq32,
    /// `n! [t^n] exp(t) I_1(2t) / t = m_n`
    Eq33,
    /// `c_{n+1} = c_n + 2n m_{n-1}`
    Eq34,
    /// `m_n = (c_{n+2} - c_{n+1}) / (2(n+1))`
    Eq39,
    /// `c_n^{p+1} = (c_{n+2}^p - c_{n+1}^p) / (2(n+1))`
    Eq41 { p: usize },
    /// `_m c_{n+1}^p = _m c_n^p + m n!/(n-m+1)! _m c_{n-m+1}^{p+1}`
    Eq43Corrected { m_step: usize, p: usize },
    /// The same with superscript `p` on the right; fails, kept as a negative
    /// control.
    Eq43Printed { m_step: usize, p: usize },
}

impl Identity {
    /// Every identity expected to hold, with the parameter grid used by
    /// `check all`.
    pub fn standard_suite() -> Vec<Identity> {
        let mut suite = vec![
            Identity::Eq2a,
            Identity::Eq13,
            Identity::Eq15,
            Identity::Eq24,
            Identity::Eq27,
            Identity::Eq32,
            Identity::Eq33,
            Identity::Eq34,
            Identity::Eq39,
        ];
        suite.extend((0..=3).map(|p| Identity::Eq41 { p }));
        for m_step in 2..=5 {
            suite.extend((0..=2).map(|p| Identity::Eq43Corrected { m_step, p }));
        }
        suite
    }

    /// Smallest index at which the identity is stated.
    pub fn min_index(&self) -> usize {
        match self {
            Identity::Eq24 | Identity::Eq34 => 1,
            _ => 0,
        }
    }

    /// Whether the identity compares against a generating function (the
    /// checked range is then bounded by a truncation order).
    pub fn uses_series(&self) -> bool {
        matches!(self, Identity::Eq15 | Identity::Eq33)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Identity::Eq43Corrected { m_step, .. } | Identity::Eq43Printed { m_step, .. } => {
                super::check_m_step(*m_step)
            }
            _ => Ok(()),
        }
    }

    /// Left and right side at index `n`. `egf` holds the exponential
    /// generating function terms for the series identities.
    fn sides(&self, n: usize, egf: &[ExactRat]) -> (ExactRat, ExactRat) {
        let c = |k: usize| rat_from_int(ctc(k));
        let m = |k: usize| rat_from_int(motzkin(k));
        let nr = |k: usize| rat_from_int(ExactInt::from(k));
        let one = ExactRat::one();
        match *self {
            Identity::Eq2a => (m(n), rat_from_int(trinomial_coeff(n + 1, 1)) / nr(n + 1)),
            Identity::Eq13 => (c(n), hybrid_pi(n, &one, &one)),
            Identity::Eq15 | Identity::Eq33 => {
                let closed = if *self == Identity::Eq15 { c(n) } else { m(n) };
                (egf[n].clone(), closed)
            }
            Identity::Eq24 => (nr(n + 1) * c(n + 1), nr(2 * n + 1) * c(n) + nr(3 * n) * c(n - 1)),
            Identity::Eq27 => (m(n), assoc_ctc(n, 1)),
            Identity::Eq32 => (m(n), hybrid_pi_assoc(n, 1, &one, &one)),
            Identity::Eq34 => (c(n + 1), c(n) + nr(2 * n) * m(n - 1)),
            Identity::Eq39 => (m(n), (c(n + 2) - c(n + 1)) / nr(2 * (n + 1))),
            Identity::Eq41 { p } => (
                assoc_ctc(n, p + 1),
                (assoc_ctc(n + 2, p) - assoc_ctc(n + 1, p)) / nr(2 * (n + 1)),
            ),
            Identity::Eq43Corrected { m_step, p } | Identity::Eq43Printed { m_step, p } => {
                let q = if matches!(self, Identity::Eq43Corrected { .. }) { p + 1 } else { p };
                let f = |k: usize, p: usize| m_order_ctc(k, m_step, p).expect("m_step validated");
                // n!/(n-m+1)! vanishes for n < m - 1
                let tail = if n + 1 >= m_step {
                    let j = n + 1 - m_step;
                    rat_from_int(falling(n, m_step - 1) * ExactInt::from(m_step)) * f(j, q)
                } else {
                    ExactRat::zero()
                };
                (f(n + 1, p), f(n, p) + tail)
            }
        }
    }

    fn egf_terms(&self, order: usize) -> Vec<ExactRat> {
        match self {
            Identity::Eq15 => ctc_egf(order).expect("order >= 1").egf_terms(),
            Identity::Eq33 => assoc_egf(1, &rat(1, 1), &rat(1, 1), order).expect("order >= 1").egf_terms(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Eq2a => f.write_str("EQ2A"),
            Identity::Eq13 => f.write_str("EQ13"),
            Identity::Eq15 => f.write_str("EQ15"),
            Identity::Eq24 => f.write_str("EQ24"),
            Identity::Eq27 => f.write_str("EQ27"),
            Identity::Eq32 => f.write_str("EQ32"),
            Identity::Eq33 => f.write_str("EQ33"),
            Identity::Eq34 => f.write_str("EQ34"),
            Identity::Eq39 => f.write_str("EQ39"),
            Identity::Eq41 { p } => write!(f, "EQ41(p={p})"),
            Identity::Eq43Corrected { m_step, p } => write!(f, "EQ43_CORRECTED(m={m_step},p={p})"),
            Identity::Eq43Printed { m_step, p } => write!(f, "EQ43_PRINTED(m={m_step},p={p})"),
        }
    }
}

/// Parses `NAME` or `NAME(key=value,...)`, e.g. `EQ41(p=2)` or
/// `EQ43_CORRECTED(m=3,p=1)`. Omitted parameters default to `p = 0`, `m = 2`.
impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.split_once('(') {
            Some((name, rest)) => {
                let args = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidParameter(format!("unbalanced parameters in `{s}`")))?;
                (name, args)
            }
            None => (s, ""),
        };
        let (mut p, mut m_step) = (0usize, 2usize);
        for arg in args.split(',').map(str::trim).filter(|a| !a.is_empty()) {
            let (key, value) = arg
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got `{arg}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad value in `{arg}`")))?;
            match key.trim() {
                "p" => p = value,
                "m" => m_step = value,
                other => return Err(Error::InvalidParameter(format!("unknown parameter `{other}`"))),
            }
        }
        let identity = match name.to_ascii_uppercase().as_str() {
            "EQ2A" => Identity::Eq2a,
            "EQ13" => Identity::Eq13,
            "EQ15" => Identity::Eq15,
            "EQ24" => Identity::Eq24,
            "EQ27" => Identity::Eq27,
            "EQ32" => Identity::Eq32,
            "EQ33" => Identity::Eq33,
            "EQ34" => Identity::Eq34,
            "EQ39" => Identity::Eq39,
            "EQ41" => Identity::Eq41 { p },
            "EQ43_CORRECTED" => Identity::Eq43Corrected { m_step, p },
            "EQ43_PRINTED" => Identity::Eq43Printed { m_step, p },
            _ => return Err(Error::InvalidParameter(format!("unknown identity `{name}`"))),
        };
        let takes_p = matches!(identity, Identity::Eq41 { .. } | Identity::Eq43Corrected { .. } | Identity::Eq43Printed { .. });
        let takes_m = matches!(identity, Identity::Eq43Corrected { .. } | Identity::Eq43Printed { .. });
        if (!takes_p && p != 0) || (!takes_m && m_step != 2) {
            return Err(Error::InvalidParameter(format!("`{name}` does not take those parameters")));
        }
        identity.validate()?;
        Ok(identity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub left: ExactRat,
    pub right: ExactRat,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: Identity,
    /// Indices actually checked (empty when `start > end`).
    pub n_range: RangeInclusive<usize>,
    /// Ordered by index.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checked(&self) -> usize {
        self.n_range.clone().count()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = if self.n_range.is_empty() {
            "empty range".to_string()
        } else {
            format!("n = {}..={}", self.n_range.start(), self.n_range.end())
        };
        if self.passed() {
            write!(f, "{}: pass ({range}, {} indices)", self.identity, self.checked())
        } else {
            let shown: Vec<String> = self
                .failures
                .iter()
                .take(5)
                .map(|fl| format!("n = {} ({} != {})", fl.index, fl.left, fl.right))
                .collect();
            let more = if self.failures.len() > shown.len() { ", ..." } else { "" };
            write!(
                f,
                "{}: FAIL ({range}, {} of {} indices failing) at {}{more}",
                self.identity,
                self.failures.len(),
                self.checked(),
                shown.join(", ")
            )
        }
    }
}

/// Evaluates both sides of `identity` at every index of `n_range` (clipped
/// below to [`Identity::min_index`]). Indices are checked in parallel; the
/// failures come back ordered by index.
pub fn check_identity(identity: Identity, n_range: RangeInclusive<usize>) -> IdentityReport {
    let started = Instant::now();
    let lo = (*n_range.start()).max(identity.min_index());
    let hi = *n_range.end();
    let failures = if lo > hi || identity.validate().is_err() {
        Vec::new()
    } else {
        let egf = identity.egf_terms(hi + 1);
        (lo..=hi)
            .into_par_iter()
            .filter_map(|n| {
                let (left, right) = identity.sides(n, &egf);
                (left != right).then_some(Failure { index: n, left, right })
            })
            .collect()
    };
    IdentityReport { identity, n_range: lo..=hi, failures, elapsed: started.elapsed() }
}
