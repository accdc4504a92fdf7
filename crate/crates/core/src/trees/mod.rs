//! Trees: canonical codes, enumeration, and the family `T_r` of
//! `K_r`-amenable trees built from `K_{1,r}^+` by Type-a and Type-b steps.

mod canon;
mod enumerate;
mod family;
mod generate;
mod recognize;
mod trace;

pub use canon::{canonical_code, labeled_code, tree_centers, CanonicalCode};
pub use enumerate::{enumerate_coded_trees, enumerate_trees, prufer_decode, PRUFER_MAX_ORDER};
pub use family::{k1r_plus, type_a, type_b, Orientation, PartitionedTree};
pub use generate::{generate_family, generate_members};
pub use recognize::{recognize_tree, trace_from_partition, RecognizeOutcome};
pub use trace::TreeTrace;
