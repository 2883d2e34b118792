//! Toolkit for binary polarization kernels.
//!
//! The crate covers the full pipeline around large polarization kernels:
//!
//! - [`gf2`]: bit-packed GF(2) vectors, matrices, and the supporting linear
//!   algebra (rank, inversion, minimum-span forms, coset distances).
//! - [`kernels`]: constructors for standard kernels.
//! - [`metrics`]: partial distance profiles and error exponents.
//! - [`rmld`]: recursive maximum-likelihood decoding of kernel phases over a
//!   binary section tree, with a per-phase complexity ledger and cross-phase
//!   reuse of the top-level maximizations.
//! - [`env`]: a row-building search environment over kernels with a shaped
//!   complexity reward, plus random and brute-force baselines.
//! - [`agent`]: a self-play tree-search agent (Gumbel root sampling,
//!   sequential halving) with a small native policy/value network.
//! - [`bler`]: AWGN block-error-rate simulation of polar codes built from
//!   arbitrary kernels, including Monte Carlo frozen-set design.

pub mod agent;
pub mod bler;
pub mod env;
mod error;
pub mod gf2;
pub mod kernels;
pub mod metrics;
pub mod rmld;

pub use error::{Error, Result};
pub use gf2::{BinMatrix, BinVector};
pub use metrics::{ErrorExponent, Pdp};
