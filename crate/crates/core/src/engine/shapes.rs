//! Grouping of moment terms into shapes: orbits under relabelings of the
//! indices that leave the product of Wishart entries unchanged.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use super::poly::{MomentMonomial, MomentPolynomial};
use super::spec::{Flavor, MomentSpec};

/// One orbit of terms: a representative monomial and the total multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeClass {
    pub representative: MomentMonomial,
    pub multiplicity: BigUint,
}

fn factor_counts(spec: &MomentSpec) -> HashMap<(u32, u32), usize> {
    let mut counts = HashMap::new();
    for &f in spec.factors() {
        *counts.entry(f).or_insert(0) += 1;
    }
    counts
}

fn normalize(flavor: Flavor, (a, b): (u32, u32)) -> (u32, u32) {
    if flavor == Flavor::Real && a > b {
        (b, a)
    } else {
        (a, b)
    }
}

/// All index permutations (as maps on the indices used by `spec`) that map
/// the multiset of factors onto itself.
pub fn spec_automorphisms(spec: &MomentSpec) -> Vec<HashMap<u32, u32>> {
    let flavor = spec.flavor();
    let counts = factor_counts(spec);
    let mut used: Vec<u32> = spec.factors().iter().flat_map(|&(a, b)| [a, b]).collect();
    used.sort_unstable();
    used.dedup();

    let count = |pair: (u32, u32)| counts.get(&normalize(flavor, pair)).copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut image: Vec<u32> = Vec::with_capacity(used.len());
    let mut taken = vec![false; used.len()];

    fn search(
        k: usize,
        used: &[u32],
        image: &mut Vec<u32>,
        taken: &mut [bool],
        count: &dyn Fn((u32, u32)) -> usize,
        out: &mut Vec<HashMap<u32, u32>>,
    ) {
        if k == used.len() {
            out.push(used.iter().copied().zip(image.iter().copied()).collect());
            return;
        }
        for slot in 0..used.len() {
            if taken[slot] {
                continue;
            }
            let target = used[slot];
            let consistent = (0..=k).all(|j| {
                let (src, dst) = if j == k {
                    (used[k], target)
                } else {
                    (used[j], image[j])
                };
                count((used[k], src)) == count((target, dst))
                    && count((src, used[k])) == count((dst, target))
            });
            if !consistent {
                continue;
            }
            taken[slot] = true;
            image.push(target);
            search(k + 1, used, image, taken, count, out);
            image.pop();
            taken[slot] = false;
        }
    }

    search(0, &used, &mut image, &mut taken, &count, &mut out);
    out
}

fn relabel(flavor: Flavor, mono: &MomentMonomial, map: &HashMap<u32, u32>) -> MomentMonomial {
    let apply = |v: &[(u32, u32)]| -> Vec<(u32, u32)> {
        v.iter().map(|&(a, b)| (map[&a], map[&b])).collect()
    };
    MomentMonomial::canonical(flavor, mono.nu_exp, apply(&mono.sigma), apply(&mono.delta))
}

/// Orbits of the polynomial's terms under [`spec_automorphisms`], ordered by
/// number of δ factors, then descending ν power, then multiplicity.
pub fn group_by_shape(poly: &MomentPolynomial) -> Vec<ShapeClass> {
    let flavor = poly.spec().flavor();
    let group = spec_automorphisms(poly.spec());
    let mut orbits: BTreeMap<MomentMonomial, BigUint> = BTreeMap::new();
    for (mono, c) in poly.terms() {
        let rep = group
            .iter()
            .map(|g| relabel(flavor, mono, g))
            .min()
            .unwrap_or_else(|| mono.clone());
        *orbits.entry(rep).or_insert_with(BigUint::zero) += c;
    }
    let mut shapes: Vec<ShapeClass> = orbits
        .into_iter()
        .map(|(representative, multiplicity)| ShapeClass {
            representative,
            multiplicity,
        })
        .collect();
    shapes.sort_by(|a, b| {
        let key = |s: &ShapeClass| {
            (
                s.representative.delta.len(),
                Reverse(s.representative.nu_exp),
            )
        };
        key(a)
            .cmp(&key(b))
            .then_with(|| a.multiplicity.cmp(&b.multiplicity))
            .then_with(|| a.representative.cmp(&b.representative))
    });
    shapes
}
