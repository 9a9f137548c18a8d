//! Formal algebra of sum symbols: relation lemmas, recursion residuals and
//! linear-combination certificates.

mod atom;
mod certificate;
mod eval;
mod expr;
mod htable;
mod relations;
mod search;

pub use atom::{SAtom, SCombo};
pub use certificate::{CertEntry, Certificate, Verdict};
pub use eval::{eval_combo, eval_combo_at_one, AtomCache};
pub use expr::{parse_combo, parse_poly, parse_value, Symbol, Value};
pub use htable::{
    combos, derive_below_line, h_symbolic, h_table, recurrence_residual_symbolic, residual_for, Origin,
};
pub use relations::{expand_relation, parse_relation_name, Family, RelInstance, RelationId};
pub use search::{search_certificate, SearchBounds, SearchStats};
