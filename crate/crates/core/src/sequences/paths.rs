use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

pub const DEFAULT_ORACLE_BOUND: usize = 30;

/// Counts Motzkin paths of length `n` (steps up, down and flat, never below
/// the axis) by dynamic programming over heights.
pub fn motzkin_path_oracle(n: usize) -> Result<ExactInt> {
    motzkin_path_oracle_bounded(n, DEFAULT_ORACLE_BOUND)
}

pub fn motzkin_path_oracle_bounded(n: usize, bound: usize) -> Result<ExactInt> {
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    // ways[h]: paths of the current length ending at height h
    let mut ways = vec![ExactInt::zero(); n + 2];
    ways[0] = ExactInt::one();
    for _ in 0..n {
        let mut next = vec![ExactInt::zero(); n + 2];
        for h in 0..=n {
            if ways[h].is_zero() {
                continue;
            }
            next[h] += &ways[h];
            next[h + 1] += &ways[h];
            if h > 0 {
                next[h - 1] += &ways[h];
            }
        }
        ways = next;
    }
    Ok(ways.swap_remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn small_values() {
        assert_eq!(motzkin_path_oracle(0).unwrap(), int(1));
        assert_eq!(motzkin_path_oracle(3).unwrap(), int(4));
        assert_eq!(motzkin_path_oracle(6).unwrap(), int(51));
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(motzkin_path_oracle(31), Err(Error::OracleBound { n: 31, bound: 30 }));
        assert!(motzkin_path_oracle_bounded(40, 40).is_ok());
    }

    #[test]
    fn matches_direct_sum() {
        for n in 0..=30 {
            assert_eq!(motzkin_path_oracle(n).unwrap(), crate::sequences::motzkin(n));
        }
    }
}
