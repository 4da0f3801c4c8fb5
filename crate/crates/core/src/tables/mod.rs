//! Invariant tables, their monoid structure and the admissibility decision.

pub mod admissible;
pub mod table;

pub use admissible::{
    check_admissible, check_admissible_any, check_admissible_odd, is_regular, windows, AdmissibilityReport,
    Condition, Violation, Window, WindowType,
};
pub use table::{AnyTable, Flavor, OddTable, SigTable, Signature, Table};
