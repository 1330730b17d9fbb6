use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::spec::{Flavor, MomentSpec};
use crate::closed_forms::BivariateMomentPoly;
use crate::error::{Error, Result};

/// ν^nu_exp · ∏ σ_{ij} · ∏ δ_{ij}.
///
/// Factor lists are sorted; real pairs are stored as `(min, max)`, complex
/// pairs as (row, column).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MomentMonomial {
    pub nu_exp: u32,
    pub sigma: Vec<(u32, u32)>,
    pub delta: Vec<(u32, u32)>,
}

impl MomentMonomial {
    /// Sorts factor lists (and real pairs) into canonical form.
    pub fn canonical(
        flavor: Flavor,
        nu_exp: u32,
        mut sigma: Vec<(u32, u32)>,
        mut delta: Vec<(u32, u32)>,
    ) -> Self {
        if flavor == Flavor::Real {
            for (a, b) in sigma.iter_mut().chain(delta.iter_mut()) {
                if a > b {
                    std::mem::swap(a, b);
                }
            }
        }
        sigma.sort_unstable();
        delta.sort_unstable();
        Self {
            nu_exp,
            sigma,
            delta,
        }
    }

    pub fn degree(&self) -> usize {
        self.sigma.len() + self.delta.len()
    }
}

/// Which parameter matrix an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entry {
    Sigma,
    Delta,
}

/// Value substituted for a single σ or δ entry: `coeff · ρ^rho · δ^delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    pub coeff: BigInt,
    pub rho: u32,
    pub delta: u32,
}

impl Substitution {
    pub fn constant(c: i64) -> Self {
        Self {
            coeff: BigInt::from(c),
            rho: 0,
            delta: 0,
        }
    }

    pub fn rho() -> Self {
        Self {
            coeff: BigInt::one(),
            rho: 1,
            delta: 0,
        }
    }

    pub fn delta() -> Self {
        Self {
            coeff: BigInt::one(),
            rho: 0,
            delta: 1,
        }
    }
}

/// Exact moment polynomial: collected monomials with positive integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPolynomial {
    spec: MomentSpec,
    terms: BTreeMap<MomentMonomial, BigUint>,
}

impl MomentPolynomial {
    /// Drops zero coefficients.
    pub fn from_terms(spec: MomentSpec, terms: BTreeMap<MomentMonomial, BigUint>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { spec, terms }
    }

    pub fn spec(&self) -> &MomentSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<MomentMonomial, BigUint> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients (the number of enumerated graphs).
    pub fn total_mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Terms without any δ factor (the Δ = 0 moment).
    pub fn central_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(mono, _)| mono.delta.is_empty())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self {
            spec: self.spec.clone(),
            terms,
        }
    }

    /// Swaps the indices of every σ and δ factor; pairs with [`MomentSpec::transposed`].
    pub fn transpose_indices(&self) -> Self {
        let flavor = self.spec.flavor();
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            let swap = |v: &[(u32, u32)]| v.iter().map(|&(a, b)| (b, a)).collect::<Vec<_>>();
            let t = MomentMonomial::canonical(
                flavor,
                mono.nu_exp,
                swap(&mono.sigma),
                swap(&mono.delta),
            );
            *terms.entry(t).or_insert_with(BigUint::zero) += c;
        }
        Self::from_terms(self.spec.transposed(), terms)
    }

    /// Substitutes each σ/δ entry symbolically, collecting a polynomial in
    /// (ν, ρ², δ). Entries mapped to `None` are zero. Fails if a surviving
    /// term carries an odd power of ρ.
    pub fn specialize<F>(&self, substitute: F) -> Result<BivariateMomentPoly>
    where
        F: Fn(Entry, u32, u32) -> Option<Substitution>,
    {
        let mut raw: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        'terms: for (mono, c) in &self.terms {
            let mut coeff = BigInt::from(c.clone());
            let (mut rho, mut delta) = (0u32, 0u32);
            let entries = mono
                .sigma
                .iter()
                .map(|&(i, j)| (Entry::Sigma, i, j))
                .chain(mono.delta.iter().map(|&(i, j)| (Entry::Delta, i, j)));
            for (kind, i, j) in entries {
                match substitute(kind, i, j) {
                    None => continue 'terms,
                    Some(s) => {
                        coeff *= s.coeff;
                        rho += s.rho;
                        delta += s.delta;
                    }
                }
            }
            *raw.entry((mono.nu_exp, rho, delta)).or_default() += coeff;
        }
        let mut out = BTreeMap::new();
        for ((nu, rho, delta), c) in raw {
            if c.is_zero() {
                continue;
            }
            if rho % 2 == 1 {
                return Err(Error::OddRhoPower);
            }
            out.insert((nu, rho / 2, delta), c);
        }
        Ok(BivariateMomentPoly::from_terms(out))
    }

    /// Polynomial JSON: one object per term in canonical order.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.term_rows()).expect("term rows serialize")
    }

    fn term_rows(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                nu_exp: m.nu_exp,
                sigma: m.sigma.iter().map(|&(i, j)| [i, j]).collect(),
                delta: m.delta.iter().map(|&(i, j)| [i, j]).collect(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.term_rows()).expect("term rows serialize")
    }

    /// Parses polynomial JSON emitted by [`Self::to_json_string`] for the given spec.
    pub fn from_json_str(text: &str, spec: MomentSpec) -> Result<Self> {
        let rows: Vec<TermJson> =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let flavor = spec.flavor();
        let mut terms = BTreeMap::new();
        for row in rows {
            let coeff: BigUint = row.coeff.parse().map_err(|_| {
                Error::Json(format!(
                    "coefficient {:?} is not a nonnegative integer",
                    row.coeff
                ))
            })?;
            for &[i, j] in row.sigma.iter().chain(&row.delta) {
                for index in [i, j] {
                    if index == 0 || index as usize > spec.p() {
                        return Err(Error::IndexOutOfRange { index, p: spec.p() });
                    }
                }
            }
            let pairs = |v: &[[u32; 2]]| v.iter().map(|&[i, j]| (i, j)).collect::<Vec<_>>();
            let mono =
                MomentMonomial::canonical(flavor, row.nu_exp, pairs(&row.sigma), pairs(&row.delta));
            *terms.entry(mono).or_insert_with(BigUint::zero) += coeff;
        }
        Ok(Self::from_terms(spec, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    nu_exp: u32,
    sigma: Vec<[u32; 2]>,
    delta: Vec<[u32; 2]>,
    coeff: String,
}
