//! Exact truncated q-series arithmetic and verification tools for A2 cylindric
//! partition identities.

pub mod asw;
pub mod cylindric;
pub mod error;
pub mod qfunctions;
pub mod series;
pub mod suite;
pub mod symbolic;

pub use cylindric::Profile;
pub use error::{Error, Result};
pub use series::{QSeries, ZPoint, ZPoly};
pub use suite::{Status, VerificationReport};
