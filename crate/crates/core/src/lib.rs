//! Exact K-theoretic order computations for symplectic gauge groups over `S^{4m}`.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`]: big-integer combinatorics, Stirling numbers and truncated power
//!   series over the rationals.
//! - [`chern`]: Chern character coefficients of powers of the reduced Hopf class
//!   on `CP^N`, complexification multipliers and the integer images of the maps
//!   `psi`, `theta`, `psi'` and `beta_k`.
//! - [`orders`]: group orders derived from those images (Samelson products,
//!   mapping groups, `Im (alpha_k)_*`, gauge moduli and invariant classes).
//! - [`report`]: the recomputation-versus-printed-value harness.
//!
//! All arithmetic is exact. Nothing in here touches floating point.

pub mod arith;
pub mod chern;
mod error;
pub mod orders;
pub mod report;

pub use arith::{BigRat, TruncPoly};
pub use chern::{ChMode, GeneratorImage, KspGenerator, MapLabel};
pub use error::{Error, Result};
pub use orders::{CyclicGroup, Factorization, GaugeParams, ParityBranch, ZSubgroup};
pub use report::{Check, CheckClass, Discrepancy, VerifyReport};

pub use num_bigint::BigInt;
