//! Exact storage/repair-bandwidth tradeoff bounds for regenerating codes,
//! and concrete small-to-big code constructions that can be exhaustively
//! checked against them.
//!
//! - [`exactmath`]: rationals, binomials, hypergeometric weights.
//! - [`tradeoff`]: outer bound, MSR/MBR, baseline, constructions 1 and 2, regions.
//! - [`gf`]: GF(q) linear algebra.
//! - [`codes`]: the concrete MSR small code, empty-node extension, n! gluing.
//! - [`simulate`]: exhaustive repair sweeps and the brute-force information oracle.
//! - [`cli`]: record building and CSV/JSON rendering for the `regen` binary.

pub mod cli;
pub mod codes;
pub mod error;
pub mod exactmath;
pub mod gf;
pub mod simulate;
pub mod tradeoff;

pub use error::{Error, Result};
pub use exactmath::Rational;
pub use tradeoff::{Provenance, Region, SmallCode, SystemParams, TradeoffPoint};
