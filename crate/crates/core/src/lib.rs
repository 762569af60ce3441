//! Sum-free (Schur) partitions of integer intervals.
//!
//! * [`partition`]: the partition model and elementary queries.
//! * [`verifier`]: plain and modular sum-freeness checks and blockage counts.
//! * [`search`]: symmetric seeded backtracking and exhaustive small-case search.
//! * [`template`]: template validation and the block-substitution composition.
//! * [`bounds`]: a provenance-tracked ledger of lower bounds for `S(k)` and `R_k(3)`.
//! * [`format`]: the text formats shared by all of the above.

pub mod bounds;
pub mod format;
pub mod partition;
pub mod search;
pub mod template;
pub mod verifier;

pub use partition::{Partition, PartitionError, Profile, SubsetView};
pub use verifier::{verify_mod_sum_free, verify_schur, verify_sum_free, VerifyReport, Violation};
