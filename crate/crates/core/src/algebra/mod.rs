//! Generator-based representations of pairings and quadratic forms.

pub mod generator;
pub mod pairing;
pub mod quadratic;
pub mod z8bar;

pub use generator::{normalize, Gen2, GenOdd, QGen2, MAX_LEVEL};
pub use pairing::{sigma2_gen, Pairing};
pub use quadratic::{generator_sigma0, QuadraticForm};
pub use z8bar::{Sign, Z8Bar};
