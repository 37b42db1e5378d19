//! Exact classification of dilation pairs `(α, β)` for which the dilated
//! floor functions satisfy `⌊α⌊βx⌋⌋ ≥ ⌊β⌊αx⌋⌋` for every real `x`, together
//! with the equivalent criteria: rounding functions, reduced Beatty
//! sequences, lattice and torus avoidance, and two-generator numerical
//! semigroups.

pub mod beatty;
pub mod classify;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod exec;
pub mod floorfn;
pub mod geometry;
pub mod plot;
pub mod preorder;
pub mod semigroup;
pub mod sweep;

pub use classify::{classify, find_witness, is_member, Verdict, Witness};
pub use error::{Error, Result};
pub use exact::Rat;
pub use exec::Execution;
pub use floorfn::{commutator, oracle_verify, DilationPair, OracleReport};
