//! Classification of linking pairings and homogeneous quadratic forms on
//! finite abelian groups, with exact arithmetic throughout.

pub mod algebra;
pub mod arith;
pub mod error;
pub mod lens;
pub mod limits;
pub mod oracle;
pub mod realize;
pub mod summands;
pub mod tables;

pub use algebra::{Gen2, GenOdd, Pairing, QGen2, QuadraticForm, Sign, Z8Bar};
pub use error::{Error, Result};
pub use limits::Limits;
pub use tables::{AnyTable, Flavor, OddTable, SigTable};
