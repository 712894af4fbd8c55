//! Noncrossing arc diagrams and lattice congruences of the weak order.
//!
//! Permutations of `1..=n` correspond bijectively to noncrossing arc
//! diagrams on `n` points through [`delta`]. Each arc is a join-irreducible
//! permutation, a diagram is a canonical join representation, and lattice
//! congruences of the weak order are described by subarc-closed sets of
//! uncontracted arcs.

pub mod arc;
pub mod congruence;
pub mod counting;
pub mod diagram;
pub mod dot;
pub mod error;
pub mod permutation;
pub mod render;
pub mod report;
pub mod text;

pub use arc::{all_arcs, Arc, ArcStats, Compatibility, Side};
pub use congruence::{has_pattern, ArcSet, Congruence, NamedCongruence, PatternTriple};
pub use counting::{count_by_arcs, sequence_value, CountTable, SequenceKind};
pub use diagram::{
    complex_faces, delta, enumerate_diagrams, for_each_diagram, Diagram, DiagramClass,
};
pub use error::{Error, Result};
pub use num_bigint::BigUint;
pub use permutation::{all_permutations, join, meet, InversionSet, Permutation, MAX_N};
pub use report::{verify_report, CheckRecord, Report, Status};
