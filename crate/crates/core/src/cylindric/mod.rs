//! Cylindric partitions of rank 3: profiles, brute-force enumeration and the
//! functional recursion satisfied by `H_c(z, q) = (zq; q)_inf F_c(z, q) / (q; q)_inf`.

mod enumerate;
mod profile;
mod recursion;

pub use enumerate::{enumerate_fc, MAX_BRUTE_WEIGHT};
pub use profile::{all_profiles, canform, cj, nonzero_indices, subsets, Profile, Subset};
pub use recursion::{f_from_h, recurrence_residual_series, solve_g_recursion, solve_h_recursion};
