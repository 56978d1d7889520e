//! Exact computation of central trinomial coefficients, Motzkin numbers and
//! the hybrid Hermite-Laguerre polynomial families that contain them.
//!
//! Every value is an arbitrary-precision integer or rational; identities are
//! checked by exact equality. The crate is organised bottom-up:
//!
//! * [`exact`]: big integers, normalized rationals, the ring `Q[w]/(w^2 - d)`
//!   and factorial/binomial/Pochhammer helpers.
//! * [`polyseries`]: dense and Laurent polynomials plus truncated formal power
//!   series (product, exponential, inverse square root).
//! * [`sequences`]: direct sums, streaming recurrences, the Motzkin path oracle
//!   and the identity checker.
//! * [`hybrid`]: Hermite-Kampe de Feriet, two-variable Laguerre, hybrid and
//!   associated hybrid polynomials, Legendre bridge and the terminating `2F0`.
//! * [`genfun`]: exponential and ordinary generating functions as truncated
//!   series.
//! * [`cli`]: the `seqtool` commands (b-file I/O, the reference table, checks, benchmarks).

pub mod cli;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod hybrid;
pub mod polyseries;
pub mod sequences;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRat, QuadElem, Scalar};
