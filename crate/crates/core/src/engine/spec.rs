use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real (symmetric, undirected graphs) or complex (Hermitian, directed graphs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Real,
    Complex,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Real => write!(f, "real"),
            Flavor::Complex => write!(f, "complex"),
        }
    }
}

/// A product of Wishart entries `w[a_1,b_1] * ... * w[a_n,b_n]` (1-based indices).
///
/// Real factors are stored with `a <= b`; complex factors keep their order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MomentSpec {
    flavor: Flavor,
    p: usize,
    factors: Vec<(u32, u32)>,
}

impl MomentSpec {
    pub fn new(flavor: Flavor, p: usize, factors: Vec<(u32, u32)>) -> Result<Self> {
        if p == 0 {
            return Err(Error::Domain("matrix dimension must be positive".into()));
        }
        let mut factors = factors;
        for (a, b) in factors.iter_mut() {
            for index in [*a, *b] {
                if index == 0 || index as usize > p {
                    return Err(Error::IndexOutOfRange { index, p });
                }
            }
            if flavor == Flavor::Real && a > b {
                std::mem::swap(a, b);
            }
        }
        Ok(Self { flavor, p, factors })
    }

    pub fn real(p: usize, factors: Vec<(u32, u32)>) -> Result<Self> {
        Self::new(Flavor::Real, p, factors)
    }

    pub fn complex(p: usize, factors: Vec<(u32, u32)>) -> Result<Self> {
        Self::new(Flavor::Complex, p, factors)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    /// Number of factors (the moment's total degree).
    pub fn n(&self) -> usize {
        self.factors.len()
    }

    /// Same product with every factor's indices swapped.
    pub fn transposed(&self) -> Self {
        let factors = self.factors.iter().map(|&(a, b)| (b, a)).collect();
        Self::new(self.flavor, self.p, factors).expect("transposition keeps indices in range")
    }
}

impl fmt::Display for MomentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, b)| format!("w[{a},{b}]"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
