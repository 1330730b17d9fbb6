//! Lazy enumeration of pair partitions and partial injections.
//!
//! Both streams are driven by the same depth-first backtracking engine. At each
//! step the next undecided *site* (a vertex) receives its next *choice*; the
//! "no partner" / "unmapped" option always sorts after every concrete partner,
//! which fixes the canonical output order. A stream can be cut into
//! independent sub-streams by freezing its first few decisions
//! ([`PairPartitions::split`]), which is how the expansion folds fan out.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest enumeration size accepted unless the caller raises it.
pub const DEFAULT_MAX_N: usize = 8;

const UNASSIGNED: u32 = u32::MAX;

/// Guard against factorial blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimit {
    pub max_n: usize,
}

impl Default for EnumerationLimit {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl EnumerationLimit {
    pub fn check(self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::LimitExceeded { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

pub(crate) trait Search: Clone {
    /// Next undecided site, or `None` once the object is complete.
    fn next_site(&self) -> Option<u32>;
    /// Choice following `after` for `site` (the first choice when `after` is `None`).
    fn next_choice(&self, site: u32, after: Option<u32>) -> Option<u32>;
    fn apply(&mut self, site: u32, choice: u32);
    fn undo(&mut self, site: u32, choice: u32);
}

#[derive(Debug, Clone)]
pub(crate) struct Backtrack<S> {
    search: S,
    stack: Vec<(u32, u32)>,
    floor: usize,
    depth_limit: usize,
    started: bool,
    exhausted: bool,
}

impl<S: Search> Backtrack<S> {
    fn new(search: S) -> Self {
        Self {
            search,
            stack: Vec::new(),
            floor: 0,
            depth_limit: usize::MAX,
            started: false,
            exhausted: false,
        }
    }

    fn descend(&mut self) {
        while self.stack.len() < self.depth_limit {
            let Some(site) = self.search.next_site() else {
                break;
            };
            let choice = self
                .search
                .next_choice(site, None)
                .expect("every site admits the empty choice");
            self.search.apply(site, choice);
            self.stack.push((site, choice));
        }
    }

    /// Moves to the next complete object; `false` when the stream is exhausted.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return true;
        }
        while self.stack.len() > self.floor {
            let (site, choice) = self.stack.pop().expect("stack above floor");
            self.search.undo(site, choice);
            if let Some(next) = self.search.next_choice(site, Some(choice)) {
                self.search.apply(site, next);
                self.stack.push((site, next));
                self.descend();
                return true;
            }
        }
        self.exhausted = true;
        false
    }

    /// Sub-streams obtained by freezing the first `depth` decisions.
    fn split(mut self, depth: usize) -> Vec<Self> {
        if self.started {
            // Only fresh streams can be split without losing objects.
            return vec![self];
        }
        let mut probe = Backtrack::new(self.search.clone());
        probe.depth_limit = depth;
        let mut parts = Vec::new();
        while probe.advance() {
            parts.push(Backtrack {
                search: probe.search.clone(),
                stack: probe.stack.clone(),
                floor: probe.stack.len(),
                depth_limit: usize::MAX,
                started: false,
                exhausted: false,
            });
        }
        self.exhausted = true;
        parts
    }
}

#[derive(Debug, Clone)]
pub(crate) struct PairingSearch {
    /// `mate[v]`: partner of v, v itself for a singleton, `UNASSIGNED` otherwise (0-based).
    mate: Vec<u32>,
}

impl Search for PairingSearch {
    fn next_site(&self) -> Option<u32> {
        self.mate
            .iter()
            .position(|&m| m == UNASSIGNED)
            .map(|v| v as u32)
    }

    fn next_choice(&self, site: u32, after: Option<u32>) -> Option<u32> {
        let from = match after {
            None => site + 1,
            Some(c) if c == site => return None,
            Some(c) => c + 1,
        };
        (from..self.mate.len() as u32)
            .find(|&w| self.mate[w as usize] == UNASSIGNED)
            .or(Some(site))
    }

    fn apply(&mut self, site: u32, choice: u32) {
        self.mate[site as usize] = choice;
        self.mate[choice as usize] = site;
    }

    fn undo(&mut self, site: u32, choice: u32) {
        self.mate[site as usize] = UNASSIGNED;
        self.mate[choice as usize] = UNASSIGNED;
    }
}

#[derive(Debug, Clone)]
pub(crate) struct InjectionSearch {
    /// `image[i]`: π(i) or `UNASSIGNED` when i is outside the domain (0-based).
    image: Vec<u32>,
    used: Vec<bool>,
    decided: usize,
}

const UNMAPPED: u32 = UNASSIGNED;

impl Search for InjectionSearch {
    fn next_site(&self) -> Option<u32> {
        (self.decided < self.image.len()).then_some(self.decided as u32)
    }

    fn next_choice(&self, _site: u32, after: Option<u32>) -> Option<u32> {
        let from = match after {
            None => 0,
            Some(UNMAPPED) => return None,
            Some(t) => t + 1,
        };
        (from..self.image.len() as u32)
            .find(|&t| !self.used[t as usize])
            .or(Some(UNMAPPED))
    }

    fn apply(&mut self, site: u32, choice: u32) {
        self.image[site as usize] = choice;
        if choice != UNMAPPED {
            self.used[choice as usize] = true;
        }
        self.decided += 1;
    }

    fn undo(&mut self, site: u32, choice: u32) {
        self.image[site as usize] = UNMAPPED;
        if choice != UNMAPPED {
            self.used[choice as usize] = false;
        }
        self.decided -= 1;
    }
}

/// Partition of the vertices `1..=2n` into unordered pairs and singletons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairPartition {
    pub n: usize,
    /// Pairs `(i, j)` with `i < j`, sorted.
    pub pairs: Vec<(u32, u32)>,
    /// Singleton vertices, sorted.
    pub singletons: Vec<u32>,
}

impl PairPartition {
    /// Builds and validates a partition from 1-based pairs.
    pub fn new(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut mate = vec![UNASSIGNED; 2 * n];
        for &(i, j) in pairs {
            for v in [i, j] {
                if v == 0 || v as usize > 2 * n {
                    return Err(Error::Domain(format!("vertex {v} outside 1..={}", 2 * n)));
                }
            }
            let (a, b) = ((i - 1) as usize, (j - 1) as usize);
            if a == b || mate[a] != UNASSIGNED || mate[b] != UNASSIGNED {
                return Err(Error::Domain(format!(
                    "pair ({i},{j}) overlaps another block"
                )));
            }
            mate[a] = b as u32;
            mate[b] = a as u32;
        }
        for (v, m) in mate.iter_mut().enumerate() {
            if *m == UNASSIGNED {
                *m = v as u32;
            }
        }
        Ok(Self::from_mates(&mate))
    }

    /// Builds the canonical form from a complete 0-based mate table.
    pub(crate) fn from_mates(mate: &[u32]) -> Self {
        let mut pairs = Vec::new();
        let mut singletons = Vec::new();
        for (v, &m) in mate.iter().enumerate() {
            let v = v as u32;
            if m == v {
                singletons.push(v + 1);
            } else if v < m {
                pairs.push((v + 1, m + 1));
            }
        }
        Self {
            n: mate.len() / 2,
            pairs,
            singletons,
        }
    }

    /// 0-based mate table (`mate[v] == v` for singletons).
    pub fn mates(&self) -> Vec<u32> {
        let mut mate: Vec<u32> = (0..2 * self.n as u32).collect();
        for &(i, j) in &self.pairs {
            mate[(i - 1) as usize] = j - 1;
            mate[(j - 1) as usize] = i - 1;
        }
        mate
    }

    /// Number of added (dashed) edges.
    pub fn m(&self) -> usize {
        self.pairs.len()
    }
}

/// Injection π from a subset of `1..=n` into `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialInjection {
    pub n: usize,
    /// `(i, π(i))`, sorted by source.
    pub mapping: Vec<(u32, u32)>,
}

impl PartialInjection {
    /// Builds and validates an injection from 1-based `(source, target)` pairs.
    pub fn new(n: usize, mapping: &[(u32, u32)]) -> Result<Self> {
        let mut image = vec![UNMAPPED; n];
        let mut used = vec![false; n];
        for &(i, t) in mapping {
            if i == 0 || t == 0 || i as usize > n || t as usize > n {
                return Err(Error::Domain(format!("edge ({i},{t}) outside 1..={n}")));
            }
            let (i0, t0) = ((i - 1) as usize, (t - 1) as usize);
            if image[i0] != UNMAPPED || used[t0] {
                return Err(Error::Domain(format!("edge ({i},{t}) breaks injectivity")));
            }
            image[i0] = t0 as u32;
            used[t0] = true;
        }
        Ok(Self::from_images(&image))
    }

    pub(crate) fn from_images(image: &[u32]) -> Self {
        let mapping = image
            .iter()
            .enumerate()
            .filter(|(_, &t)| t != UNMAPPED)
            .map(|(i, &t)| (i as u32 + 1, t + 1))
            .collect();
        Self {
            n: image.len(),
            mapping,
        }
    }

    /// 0-based image table (`u32::MAX` outside the domain).
    pub fn images(&self) -> Vec<u32> {
        let mut image = vec![UNMAPPED; self.n];
        for &(i, t) in &self.mapping {
            image[(i - 1) as usize] = t - 1;
        }
        image
    }

    pub fn m(&self) -> usize {
        self.mapping.len()
    }
}

/// Stream of every [`PairPartition`] of `1..=2n`, in canonical order.
#[derive(Debug, Clone)]
pub struct PairPartitions {
    inner: Backtrack<PairingSearch>,
}

impl PairPartitions {
    /// Advances and exposes the 0-based mate table without allocating.
    pub fn next_mates(&mut self) -> Option<&[u32]> {
        self.inner
            .advance()
            .then_some(self.inner.search.mate.as_slice())
    }

    /// Splits a fresh stream into disjoint sub-streams covering it exactly.
    pub fn split(self, depth: usize) -> Vec<PairPartitions> {
        self.inner
            .split(depth)
            .into_iter()
            .map(|inner| PairPartitions { inner })
            .collect()
    }
}

impl Iterator for PairPartitions {
    type Item = PairPartition;

    fn next(&mut self) -> Option<PairPartition> {
        self.next_mates().map(PairPartition::from_mates)
    }
}

/// Stream of every [`PartialInjection`] on `1..=n`, in canonical order.
#[derive(Debug, Clone)]
pub struct PartialInjections {
    inner: Backtrack<InjectionSearch>,
}

impl PartialInjections {
    /// Advances and exposes the 0-based image table (`u32::MAX` = unmapped).
    pub fn next_images(&mut self) -> Option<&[u32]> {
        self.inner
            .advance()
            .then_some(self.inner.search.image.as_slice())
    }

    pub fn split(self, depth: usize) -> Vec<PartialInjections> {
        self.inner
            .split(depth)
            .into_iter()
            .map(|inner| PartialInjections { inner })
            .collect()
    }
}

impl Iterator for PartialInjections {
    type Item = PartialInjection;

    fn next(&mut self) -> Option<PartialInjection> {
        self.next_images().map(PartialInjection::from_images)
    }
}

fn check_n(n: usize, limit: EnumerationLimit) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("enumeration needs n >= 1".into()));
    }
    limit.check(n)
}

pub fn enumerate_pair_partitions(n: usize) -> Result<PairPartitions> {
    enumerate_pair_partitions_with(n, EnumerationLimit::default())
}

pub fn enumerate_pair_partitions_with(n: usize, limit: EnumerationLimit) -> Result<PairPartitions> {
    check_n(n, limit)?;
    Ok(PairPartitions {
        inner: Backtrack::new(PairingSearch {
            mate: vec![UNASSIGNED; 2 * n],
        }),
    })
}

pub fn enumerate_partial_injections(n: usize) -> Result<PartialInjections> {
    enumerate_partial_injections_with(n, EnumerationLimit::default())
}

pub fn enumerate_partial_injections_with(
    n: usize,
    limit: EnumerationLimit,
) -> Result<PartialInjections> {
    check_n(n, limit)?;
    Ok(PartialInjections {
        inner: Backtrack::new(InjectionSearch {
            image: vec![UNMAPPED; n],
            used: vec![false; n],
            decided: 0,
        }),
    })
}
