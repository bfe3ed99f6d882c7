//! Longest-subsequence statistics of permutations under descent restrictions.
//!
//! The crate computes `ls_d` (longest subsequence with exactly `d` descents)
//! and `ls_D` (longest subsequence with descent set exactly `D`) together
//! with the tableau machinery they factor through: the Robinson–Schensted
//! correspondence, Fomin growth diagrams, Schützenberger evacuation, and the
//! triangle of per-factor `(is, ds)` pairs. Exponential-time reference
//! implementations live in [`oracle`] and back every fast path in the test
//! suites; [`census`] runs the exhaustive counting and classification
//! experiments.

pub mod census;
pub mod growth;
pub mod oracle;
pub mod perm;
pub mod render;
pub mod rsk;
pub mod stats;
pub mod tableau;

pub use growth::{GrowthDiagram, GrowthError};
pub use oracle::{LsProfile, OracleError};
pub use perm::{DescentSet, PermError, Permutation, Word};
pub use rsk::RskPair;
pub use stats::{Composition, DescentWord, Letter, StatTriangle, StatsError};
pub use tableau::{Partition, PartitionChain, StandardTableau, TableauError};
