//! Finite, truncated models of simplicial sets, categories and simplicial
//! categories, with exact homology and the adjunctions between them.

pub mod cat;
pub mod error;
pub mod homotopy;
pub mod scat;
pub mod spectra;
pub mod sset;
pub mod util;

pub use error::{Error, Result};

/// Arbitrary-precision integers used for reported invariants.
pub type Integer = num_bigint::BigInt;
/// Fixed-width integers tried first; overflow falls back to [`Integer`].
pub type FastInteger = i64;
/// Chain complexes on the fast path.
pub type IntChainComplex = homotopy::ChainComplex<FastInteger>;
/// Chain complexes over arbitrary-precision integers.
pub type BigChainComplex = homotopy::ChainComplex<Integer>;
