//! Weak partitions of a graph `G` that certify EOD-sets of `G □ H` for
//! `H ∈ {K_r, K_{m,n}, C_4, C_5}`, plus zig-zag sets for `H = K_2`.

mod cycle;
mod kmn;
mod kr;
mod partition;
mod rules;
mod zigzag;

pub use cycle::{
    check_cycle_parallel_amenable, cycle_partition_to_parallel_eod, find_cycle_parallel_amenable,
    parallel_eod_to_cycle_partition,
};
pub use kmn::{check_kmn_amenable, eod_to_kmn_partition, find_kmn_amenable, kmn_partition_to_eod};
pub use kr::{check_kr_amenable, eod_to_kr_partition, find_kr_amenable, kr_partition_to_eod};
pub use partition::{Flavor, Label, WeakPartition};
pub use rules::{CheckReport, Condition, Violation};
pub use zigzag::{find_zigzag_set, is_zigzag_set, k2_partition_to_zigzag, zigzag_to_k2_partition, ZigzagSet};

use crate::error::Result;
use crate::graph::Graph;

/// Dispatches to the checker matching the partition's flavor.
pub fn check_amenable(g: &Graph, p: &WeakPartition) -> Result<CheckReport> {
    match p.flavor() {
        Flavor::Kr(_) => check_kr_amenable(g, p),
        Flavor::Kmn(..) => check_kmn_amenable(g, p),
        Flavor::C4 | Flavor::C5 => check_cycle_parallel_amenable(g, p),
    }
}

/// Dispatches to the search matching `flavor`.
pub fn find_amenable(g: &Graph, flavor: Flavor) -> Result<Option<WeakPartition>> {
    match flavor {
        Flavor::Kr(r) => find_kr_amenable(g, r),
        Flavor::Kmn(m, n) => find_kmn_amenable(g, m, n),
        Flavor::C4 => find_cycle_parallel_amenable(g, 4),
        Flavor::C5 => find_cycle_parallel_amenable(g, 5),
    }
}
