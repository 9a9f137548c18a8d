//! Truncated bivariate q-series with exact big-integer coefficients.
//!
//! Series are dense in `q` and store a trimmed `z`-polynomial per exponent.

mod floor;
mod json;
mod qseries;
pub mod uni;
mod zcoeffs;
mod zpoly;

pub use floor::{check_exponent, init_q_floor_from_env, q_floor, set_q_floor, DEFAULT_Q_FLOOR, Q_FLOOR_ENV};
pub use qseries::{Divergence, QSeries, ZPoint};
pub use zcoeffs::ZCoeffs;
pub use zpoly::ZPoly;

#[cfg(test)]
mod tests;
