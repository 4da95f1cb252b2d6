//! Exact enumeration of products of two long cycles in the symmetric group.
//!
//! The crate has three layers:
//!
//! - combinatorial primitives: [`perm`], [`composition`], [`partition`],
//!   [`numbers`] and [`plane`] (two-row plane permutations);
//! - [`closed_forms`]: every closed-form count and probability, exact;
//! - [`oracle`] and [`verifier`]: brute-force ground truth by exhaustive
//!   enumeration, and the machinery that checks every formula and recurrence
//!   against it.
//!
//! All counts are arbitrary-precision integers and all probabilities exact
//! rationals.

pub mod closed_forms;
pub mod composition;
pub mod error;
pub mod exact;
pub mod numbers;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod plane;
pub mod verifier;

pub use composition::{compositions, Composition};
pub use error::{Error, Result};
pub use exact::{ExactInteger, ExactRational};
pub use partition::{partition_sequences, partitions, IntegerPartition, PartitionSequence};
pub use perm::{long_cycle_iter, Permutation};
pub use plane::PlanePermutation;

/// Serializes text-formatted types as their canonical strings.
macro_rules! serde_as_string {
    ($($ty:ty),*) => {$(
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = <String as serde::Deserialize>::deserialize(d)?;
                s.parse().map_err(<D::Error as serde::de::Error>::custom)
            }
        }
    )*};
}

serde_as_string!(Composition, IntegerPartition, PartitionSequence, Permutation);
