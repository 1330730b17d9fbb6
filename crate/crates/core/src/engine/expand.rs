//! Symbolic expansion of Wishart moments by summing over pairings (real) or
//! partial injections (complex).
//!
//! A general product `w[a_1,b_1] ... w[a_n,b_n]` is handled through a label
//! map on the vertices of the canonical graph: in the real case vertex `2k-1`
//! carries `a_k` and vertex `2k` carries `b_k`; in the complex case vertex `k`
//! carries row label `a_k` and column label `b_k`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use super::poly::{MomentMonomial, MomentPolynomial};
use super::spec::{Flavor, MomentSpec};
use crate::combinatorics::{
    enumerate_pair_partitions_with, enumerate_partial_injections_with, walk_injection,
    walk_pairing, EnumerationLimit, SPLIT_DEPTH,
};
use crate::error::{Error, Result};
use crate::exec::Exec;

type Counts = HashMap<MomentMonomial, u64>;

pub fn expand_moment(spec: &MomentSpec) -> Result<MomentPolynomial> {
    expand_moment_with(spec, EnumerationLimit::default(), Exec::default())
}

pub fn expand_moment_with(
    spec: &MomentSpec,
    limit: EnumerationLimit,
    exec: Exec,
) -> Result<MomentPolynomial> {
    match spec.flavor() {
        Flavor::Real => expand_real_moment_with(spec, limit, exec),
        Flavor::Complex => expand_complex_moment_with(spec, limit, exec),
    }
}

pub fn expand_real_moment(spec: &MomentSpec) -> Result<MomentPolynomial> {
    expand_real_moment_with(spec, EnumerationLimit::default(), Exec::default())
}

pub fn expand_complex_moment(spec: &MomentSpec) -> Result<MomentPolynomial> {
    expand_complex_moment_with(spec, EnumerationLimit::default(), Exec::default())
}

fn empty_product(spec: &MomentSpec) -> MomentPolynomial {
    let mut terms = BTreeMap::new();
    terms.insert(
        MomentMonomial::canonical(spec.flavor(), 0, vec![], vec![]),
        BigUint::from(1u8),
    );
    MomentPolynomial::from_terms(spec.clone(), terms)
}

fn require(spec: &MomentSpec, flavor: Flavor) -> Result<()> {
    if spec.flavor() != flavor {
        return Err(Error::FlavorMismatch {
            expected: flavor,
            found: spec.flavor(),
        });
    }
    Ok(())
}

fn collect(spec: &MomentSpec, partials: Vec<Counts>) -> MomentPolynomial {
    let mut merged: BTreeMap<MomentMonomial, u64> = BTreeMap::new();
    for part in partials {
        for (mono, count) in part {
            // Counts are bounded by the number of enumerated objects, far below u64::MAX.
            *merged.entry(mono).or_insert(0) += count;
        }
    }
    let terms = merged
        .into_iter()
        .map(|(m, c)| (m, BigUint::from(c)))
        .collect();
    MomentPolynomial::from_terms(spec.clone(), terms)
}

pub fn expand_real_moment_with(
    spec: &MomentSpec,
    limit: EnumerationLimit,
    exec: Exec,
) -> Result<MomentPolynomial> {
    require(spec, Flavor::Real)?;
    let n = spec.n();
    if n == 0 {
        return Ok(empty_product(spec));
    }
    let labels: Vec<u32> = spec.factors().iter().flat_map(|&(a, b)| [a, b]).collect();
    let streams = enumerate_pair_partitions_with(n, limit)?.split(SPLIT_DEPTH);
    let partials = exec.map(streams, |mut stream| {
        let mut counts = Counts::new();
        let mut visited = Vec::new();
        while let Some(mate) = stream.next_mates() {
            let mut sigma = Vec::with_capacity(n);
            for (v, &w) in mate.iter().enumerate() {
                if (v as u32) < w {
                    sigma.push((labels[v], labels[w as usize]));
                }
            }
            let mut delta = Vec::with_capacity(n - sigma.len());
            let cycles = walk_pairing(mate, &mut visited, |s, e| {
                delta.push((labels[s as usize], labels[e as usize]));
            });
            let mono = MomentMonomial::canonical(Flavor::Real, cycles as u32, sigma, delta);
            *counts.entry(mono).or_insert(0) += 1;
        }
        counts
    });
    Ok(collect(spec, partials))
}

pub fn expand_complex_moment_with(
    spec: &MomentSpec,
    limit: EnumerationLimit,
    exec: Exec,
) -> Result<MomentPolynomial> {
    require(spec, Flavor::Complex)?;
    let n = spec.n();
    if n == 0 {
        return Ok(empty_product(spec));
    }
    let rows: Vec<u32> = spec.factors().iter().map(|&(a, _)| a).collect();
    let cols: Vec<u32> = spec.factors().iter().map(|&(_, b)| b).collect();
    let streams = enumerate_partial_injections_with(n, limit)?.split(SPLIT_DEPTH);
    let partials = exec.map(streams, |mut stream| {
        let mut counts = Counts::new();
        let (mut pre, mut visited) = (Vec::new(), Vec::new());
        while let Some(image) = stream.next_images() {
            let sigma: Vec<(u32, u32)> = image
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t != u32::MAX)
                .map(|(i, &t)| (rows[i], cols[t as usize]))
                .collect();
            let mut delta = Vec::with_capacity(n - sigma.len());
            let cycles = walk_injection(image, &mut pre, &mut visited, |end, start| {
                delta.push((rows[end as usize], cols[start as usize]));
            });
            let mono = MomentMonomial::canonical(Flavor::Complex, cycles as u32, sigma, delta);
            *counts.entry(mono).or_insert(0) += 1;
        }
        counts
    });
    Ok(collect(spec, partials))
}
