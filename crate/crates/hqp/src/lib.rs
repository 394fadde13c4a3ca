//! Exact computation of Hilbert quasi-polynomials for weighted-graded
//! polynomial rings and their quotients, with two applications on top:
//!
//! - deciding whether a quotient ring together with a generalized weighted
//!   degree ordering is an *order domain*, producing a checkable witness
//!   either way, and
//! - building evaluation codes over the rational points of the associated
//!   variety and bounding their minimum distance through the weight
//!   semigroup.
//!
//! Everything is exact: coefficients live in ℚ or in small finite fields,
//! Hilbert function values are arbitrary-precision integers, and the
//! quasi-polynomial pieces have rational coefficients. No floats anywhere.
//!
//! The crate is organized along the pipeline:
//!
//! | module        | contents                                                    |
//! |---------------|-------------------------------------------------------------|
//! | [`fields`]    | ℚ, prime fields, small extension fields                     |
//! | [`poly`]      | monomials, weighted orders, multivariate polynomials        |
//! | [`groebner`]  | division, Buchberger, initial ideals, staircases            |
//! | [`hilbert`]   | numerators, Hilbert function values, quasi-polynomials      |
//! | [`orderdomain`] | the two order-domain conditions and the full check        |
//! | [`codes`]     | variety points, evaluation codes, semigroup distance bounds |
//! | [`io`]        | problem-file parsing and JSON reports                       |
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability, and the `hqp` binary for a scriptable front end.

pub mod codes;
pub mod error;
pub mod fields;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod oracle;
pub mod orderdomain;
pub mod poly;

pub use error::{Error, Result};

/// Resource limits shared by the potentially expensive operations.
///
/// All limits are generous for desk-scale inputs; they exist so that an
/// accidental huge input fails with [`Error::ResourceExhausted`] instead of
/// running away.
#[derive(Debug, Clone)]
pub struct Budgets {
    /// Maximum number of S-pairs Buchberger's algorithm may process.
    pub pairs: usize,
    /// Maximum number of candidate points scanned when enumerating a variety
    /// (`q^n` for an exhaustive scan).
    pub points: u64,
    /// Maximum number of messages enumerated by the exact minimum-distance
    /// oracle (`q^k`).
    pub messages: u64,
    /// Maximum quasi-polynomial period (lcm of the weights).
    pub period: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            pairs: 100_000,
            points: 10_000_000,
            messages: 1_000_000,
            period: 1_000_000,
        }
    }
}
