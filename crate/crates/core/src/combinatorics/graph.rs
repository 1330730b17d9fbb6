//! Cycle/chain decomposition of the graphs induced by pairings and injections.

use serde::{Deserialize, Serialize};

use super::enumerate::{PairPartition, PartialInjection};

/// Cycle count and chain terminals of one induced graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    /// Number of added edges.
    pub m: usize,
    pub cycles: usize,
    /// Terminal pairs, 1-based and sorted. Undirected graphs store `(min, max)`;
    /// directed graphs store `(end, start)`.
    pub chain_terminals: Vec<(u32, u32)>,
}

/// Walks the graph with solid edges `(2k, 2k+1)` (0-based) and dashed edges
/// from `mate`. Calls `chain(start, end)` once per chain and returns the
/// number of cycles.
pub(crate) fn walk_pairing(
    mate: &[u32],
    visited: &mut Vec<bool>,
    mut chain: impl FnMut(u32, u32),
) -> usize {
    visited.clear();
    visited.resize(mate.len(), false);
    for s in 0..mate.len() as u32 {
        if mate[s as usize] != s || visited[s as usize] {
            continue;
        }
        let mut v = s;
        let end = loop {
            visited[v as usize] = true;
            let u = v ^ 1;
            visited[u as usize] = true;
            let next = mate[u as usize];
            if next == u {
                break u;
            }
            v = next;
        };
        chain(s, end);
    }
    let mut cycles = 0;
    for s in 0..mate.len() as u32 {
        if visited[s as usize] {
            continue;
        }
        cycles += 1;
        let mut v = s;
        loop {
            visited[v as usize] = true;
            let u = v ^ 1;
            visited[u as usize] = true;
            v = mate[u as usize];
            if v == s {
                break;
            }
        }
    }
    cycles
}

/// Walks the functional digraph of a partial injection (`u32::MAX` = unmapped).
/// Calls `chain(end, start)` once per chain and returns the number of cycles.
pub(crate) fn walk_injection(
    image: &[u32],
    has_preimage: &mut Vec<bool>,
    visited: &mut Vec<bool>,
    mut chain: impl FnMut(u32, u32),
) -> usize {
    let n = image.len();
    has_preimage.clear();
    has_preimage.resize(n, false);
    visited.clear();
    visited.resize(n, false);
    for &t in image {
        if t != u32::MAX {
            has_preimage[t as usize] = true;
        }
    }
    for s in 0..n as u32 {
        if has_preimage[s as usize] {
            continue;
        }
        let mut v = s;
        visited[v as usize] = true;
        while image[v as usize] != u32::MAX {
            v = image[v as usize];
            visited[v as usize] = true;
        }
        chain(v, s);
    }
    let mut cycles = 0;
    for s in 0..n {
        if visited[s] {
            continue;
        }
        cycles += 1;
        let mut v = s;
        while !visited[v] {
            visited[v] = true;
            v = image[v] as usize;
        }
    }
    cycles
}

pub fn analyze_real_graph(p: &PairPartition) -> ComponentSummary {
    let mate = p.mates();
    let mut terminals = Vec::with_capacity(p.n - p.m());
    let cycles = walk_pairing(&mate, &mut Vec::new(), |s, e| {
        terminals.push((s.min(e) + 1, s.max(e) + 1));
    });
    terminals.sort_unstable();
    ComponentSummary {
        m: p.m(),
        cycles,
        chain_terminals: terminals,
    }
}

pub fn analyze_directed_graph(q: &PartialInjection) -> ComponentSummary {
    let image = q.images();
    let mut terminals = Vec::with_capacity(q.n - q.m());
    let cycles = walk_injection(&image, &mut Vec::new(), &mut Vec::new(), |e, s| {
        terminals.push((e + 1, s + 1));
    });
    terminals.sort_unstable();
    ComponentSummary {
        m: q.m(),
        cycles,
        chain_terminals: terminals,
    }
}
