//! The inflated-matrix route: rewrite any product of Wishart entries as a
//! product of distinct entries of a larger Wishart matrix whose parameters
//! repeat the original ones.
//!
//! The main expansion applies the label map directly; this module rebuilds
//! the same moment through the canonical distinct-index product so the two
//! routes can be checked against each other.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigUint;
use num_traits::Zero;

use super::params::WishartParams;
use super::poly::{MomentMonomial, MomentPolynomial};
use super::spec::{Flavor, MomentSpec};
use crate::error::Result;

/// Canonical distinct-index spec plus the map from its indices back to the original ones.
#[derive(Debug, Clone)]
pub struct Inflation {
    original: MomentSpec,
    canonical: MomentSpec,
    /// `labels[i - 1]` is the original index carried by inflated index `i`.
    labels: Vec<u32>,
}

impl Inflation {
    /// Real: `w[1,2] w[3,4] ... w[2n-1,2n]`. Complex: `w[1,n+1] ... w[n,2n]`.
    pub fn new(spec: &MomentSpec) -> Result<Self> {
        let n = spec.n() as u32;
        let (factors, labels) = match spec.flavor() {
            Flavor::Real => (
                (0..n).map(|k| (2 * k + 1, 2 * k + 2)).collect(),
                spec.factors().iter().flat_map(|&(a, b)| [a, b]).collect(),
            ),
            Flavor::Complex => (
                (0..n).map(|k| (k + 1, n + k + 1)).collect(),
                spec.factors()
                    .iter()
                    .map(|&(a, _)| a)
                    .chain(spec.factors().iter().map(|&(_, b)| b))
                    .collect(),
            ),
        };
        let p = (2 * n as usize).max(1);
        Ok(Self {
            original: spec.clone(),
            canonical: MomentSpec::new(spec.flavor(), p, factors)?,
            labels,
        })
    }

    pub fn canonical(&self) -> &MomentSpec {
        &self.canonical
    }

    /// Maps a polynomial of the canonical spec back onto the original indices.
    pub fn relabel(&self, poly: &MomentPolynomial) -> MomentPolynomial {
        let flavor = self.original.flavor();
        let map = |v: &[(u32, u32)]| -> Vec<(u32, u32)> {
            v.iter()
                .map(|&(i, j)| (self.labels[(i - 1) as usize], self.labels[(j - 1) as usize]))
                .collect()
        };
        let mut terms: BTreeMap<MomentMonomial, BigUint> = BTreeMap::new();
        for (mono, c) in poly.terms() {
            let m =
                MomentMonomial::canonical(flavor, mono.nu_exp, map(&mono.sigma), map(&mono.delta));
            *terms.entry(m).or_insert_with(BigUint::zero) += c;
        }
        MomentPolynomial::from_terms(self.original.clone(), terms)
    }

    /// Inflated parameters: entry (i, j) is the original entry (label(i), label(j)).
    pub fn inflate_params(&self, params: &WishartParams) -> Result<WishartParams> {
        let p = self.canonical.p();
        let pick = |m: &DMatrix<super::params::C64>| {
            DMatrix::from_fn(p, p, |i, j| {
                let (a, b) = (
                    *self.labels.get(i).unwrap_or(&1) as usize,
                    *self.labels.get(j).unwrap_or(&1) as usize,
                );
                m[(a - 1, b - 1)]
            })
        };
        let (sigma, delta) = (pick(params.sigma()), pick(params.delta()));
        match params.flavor() {
            Flavor::Real => {
                WishartParams::real(params.nu(), sigma.map(|z| z.re), delta.map(|z| z.re))
            }
            Flavor::Complex => WishartParams::complex(params.nu(), sigma, delta),
        }
    }
}
