//! The multisums `S_m(rho|sigma)`, their semi-infinite limits, the seed
//! expressions for `H_c` above the line, and the rank-one identities used as
//! self-checks.

pub mod a1;
mod infinite;
mod kernel;
mod seed;
mod spec;
mod sums;

pub use infinite::{eval_h_infinite, eval_s_infinite, h_infinite_conjecture, EIndex, InfIndex};
pub use seed::{eval_h_seed, evec, is_above_line, seed_terms};
pub use spec::{k_and_class, ModClass, SumSpec};
pub use sums::{eval_s, eval_s_at_one, eval_s_with};
