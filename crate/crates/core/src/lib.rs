//! Graded characters of the orthogonal-group action on the cohomology of
//! Hilbert schemes of points on a K3 surface, and their decomposition into
//! irreducible highest-weight representations.

pub mod decomp;
pub mod error;
pub mod hilb;
pub mod lie;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};

/// Crate version.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Bumped whenever a change alters computed results; part of cache keys.
pub const ALGORITHM_REVISION: u32 = 1;
