//! Exact Laurent-polynomial and truncated power-series arithmetic.

mod exponent;
mod laurent;
pub mod orbit;
mod series;

pub use exponent::Exponent;
pub use laurent::{laurent_mul, LaurentPoly};
pub use orbit::OrbitPoly;
pub use series::{geometric_factor, series_product, Rational, SeriesCoeff, TruncatedSeries};
