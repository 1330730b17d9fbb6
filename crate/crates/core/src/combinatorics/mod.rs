//! Pairings, partial injections, the graphs they induce, and the exact counts
//! of those graphs by number of cycles.

mod coefficients;
mod enumerate;
mod graph;

use std::collections::BTreeMap;

pub use coefficients::{
    binomial, coeff_f, coeff_g, factorial, noncentral_stirling, odd_double_factorial,
    pair_partition_count, partial_injection_count, phi, psi, recurrence_polynomial, GraphFamily,
};
pub use enumerate::{
    enumerate_pair_partitions, enumerate_pair_partitions_with, enumerate_partial_injections,
    enumerate_partial_injections_with, EnumerationLimit, PairPartition, PairPartitions,
    PartialInjection, PartialInjections, DEFAULT_MAX_N,
};
pub use graph::{analyze_directed_graph, analyze_real_graph, ComponentSummary};

pub(crate) use graph::{walk_injection, walk_pairing};

use crate::error::Result;
use crate::exec::Exec;

/// Prefix depth used when fanning an enumeration out over workers.
pub(crate) const SPLIT_DEPTH: usize = 2;

/// Histogram of `(m, cycles)` over a full enumeration of one graph family.
pub fn cycle_histogram(
    family: GraphFamily,
    n: usize,
    limit: EnumerationLimit,
    exec: Exec,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let partials = match family {
        GraphFamily::Undirected => {
            let parts = enumerate_pair_partitions_with(n, limit)?.split(SPLIT_DEPTH);
            exec.map(parts, |mut stream| {
                let mut hist = BTreeMap::new();
                let mut visited = Vec::new();
                while let Some(mate) = stream.next_mates() {
                    let m = mate
                        .iter()
                        .enumerate()
                        .filter(|&(v, &w)| (v as u32) < w)
                        .count();
                    let cycles = walk_pairing(mate, &mut visited, |_, _| {});
                    *hist.entry((m, cycles)).or_insert(0u64) += 1;
                }
                hist
            })
        }
        GraphFamily::Directed => {
            let parts = enumerate_partial_injections_with(n, limit)?.split(SPLIT_DEPTH);
            exec.map(parts, |mut stream| {
                let mut hist = BTreeMap::new();
                let (mut pre, mut visited) = (Vec::new(), Vec::new());
                while let Some(image) = stream.next_images() {
                    let m = image.iter().filter(|&&t| t != u32::MAX).count();
                    let cycles = walk_injection(image, &mut pre, &mut visited, |_, _| {});
                    *hist.entry((m, cycles)).or_insert(0u64) += 1;
                }
                hist
            })
        }
    };
    let mut total = BTreeMap::new();
    for part in partials {
        for (key, count) in part {
            *total.entry(key).or_insert(0) += count;
        }
    }
    Ok(total)
}
