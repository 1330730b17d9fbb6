//! Graph counts by cycle number: the recurrence tables f and g, the
//! noncentral Stirling numbers, and their generating polynomials Φ and Ψ.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::nupoly::NuPolynomial;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// (2k−1)!! for k ≥ 0, with (−1)!! = 1.
pub fn odd_double_factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Number of pair partitions of 2n vertices: Σ_m C(2n,2m)(2m−1)!!.
pub fn pair_partition_count(n: u64) -> BigUint {
    (0..=n)
        .map(|m| binomial(2 * n, 2 * m) * odd_double_factorial(m))
        .sum()
}

/// Number of partial injections on n vertices: Σ_m C(n,m)² m!.
pub fn partial_injection_count(n: u64) -> BigUint {
    (0..=n)
        .map(|m| {
            let c = binomial(n, m);
            &c * &c * factorial(m)
        })
        .sum()
}

/// Which graph family a recurrence table counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// Undirected graphs from pair partitions (f).
    Undirected,
    /// Directed graphs from partial injections (g).
    Directed,
}

/// `rows[n][m][l]` for n ≥ 1; row 0 is an unused placeholder.
#[derive(Debug)]
struct RecurrenceTable {
    family: GraphFamily,
    rows: Vec<Vec<Vec<BigUint>>>,
}

impl RecurrenceTable {
    fn new(family: GraphFamily) -> Self {
        let base = vec![vec![BigUint::one()], vec![BigUint::zero(), BigUint::one()]];
        Self {
            family,
            rows: vec![Vec::new(), base],
        }
    }

    fn built_to(&self) -> usize {
        self.rows.len() - 1
    }

    fn get(&self, l: usize, m: usize, n: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|row| row.get(m))
            .and_then(|col| col.get(l))
            .cloned()
            .unwrap_or_default()
    }

    fn extend_to(&mut self, n_max: usize) {
        while self.built_to() < n_max {
            let n = self.rows.len();
            let mut row = Vec::with_capacity(n + 1);
            row.push(vec![BigUint::one()]);
            for m in 1..=n {
                let weight = match self.family {
                    GraphFamily::Undirected => 2 * (2 * n - m - 1),
                    GraphFamily::Directed => 2 * n - m - 1,
                };
                let col: Vec<BigUint> = (0..=m)
                    .map(|l| {
                        let grow = self.get(l, m - 1, n - 1) * weight;
                        let close = if l > 0 {
                            self.get(l - 1, m - 1, n - 1)
                        } else {
                            BigUint::zero()
                        };
                        grow + close + self.get(l, m, n - 1)
                    })
                    .collect();
                row.push(col);
            }
            self.rows.push(row);
        }
    }
}

fn table(family: GraphFamily) -> &'static RwLock<RecurrenceTable> {
    static F: OnceLock<RwLock<RecurrenceTable>> = OnceLock::new();
    static G: OnceLock<RwLock<RecurrenceTable>> = OnceLock::new();
    let cell = match family {
        GraphFamily::Undirected => &F,
        GraphFamily::Directed => &G,
    };
    cell.get_or_init(|| RwLock::new(RecurrenceTable::new(family)))
}

fn lookup(family: GraphFamily, l: i64, m: i64, n: i64) -> BigUint {
    if n < 1 || m < 0 || l < 0 || m > n || l > m {
        return BigUint::zero();
    }
    let (l, m, n) = (l as usize, m as usize, n as usize);
    let lock = table(family);
    {
        let t = lock.read().expect("coefficient table poisoned");
        if t.built_to() >= n {
            return t.get(l, m, n);
        }
    }
    let mut t = lock.write().expect("coefficient table poisoned");
    t.extend_to(n);
    t.get(l, m, n)
}

/// f_{l,m,n}: undirected graphs with m dashed edges and l cycles on n solid edges.
/// Zero outside the support.
pub fn coeff_f(l: i64, m: i64, n: i64) -> BigUint {
    lookup(GraphFamily::Undirected, l, m, n)
}

/// g_{l,m,n}: directed graphs with m edges and l cycles on n vertices.
/// Zero outside the support.
pub fn coeff_g(l: i64, m: i64, n: i64) -> BigUint {
    lookup(GraphFamily::Directed, l, m, n)
}

/// Σ_l ν^l · table(l, m, n), read from the recurrence tables.
pub fn recurrence_polynomial(family: GraphFamily, m: usize, n: usize) -> NuPolynomial {
    let coeffs = (0..=m as i64)
        .map(|l| BigInt::from(lookup(family, l, m as i64, n as i64)))
        .collect();
    NuPolynomial::from_coefficients(coeffs)
}

fn check_mn(m: usize, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    Ok(())
}

/// Φ_{m,n}(ν) = C(n,m) ∏_{i=1}^{m} (ν + 2(n−i)).
pub fn phi(m: usize, n: usize) -> Result<NuPolynomial> {
    check_mn(m, n)?;
    let product = NuPolynomial::product_of_shifts((1..=m).map(|i| 2 * (n - i) as i64));
    Ok(product.scale(&BigInt::from(binomial(n as u64, m as u64))))
}

/// Ψ_{m,n}(ν) = C(n,m) ∏_{i=1}^{m} (ν + n − i).
pub fn psi(m: usize, n: usize) -> Result<NuPolynomial> {
    check_mn(m, n)?;
    let product = NuPolynomial::product_of_shifts((1..=m).map(|i| (n - i) as i64));
    Ok(product.scale(&BigInt::from(binomial(n as u64, m as u64))))
}

/// s_n(m, l): coefficient of ν^l in ∏_{i=1}^{m} (ν + n − i).
pub fn noncentral_stirling(n: usize, m: usize, l: usize) -> Result<BigUint> {
    if l > m || m > n {
        return Err(Error::Domain(format!(
            "noncentral Stirling number needs l <= m <= n, got n={n}, m={m}, l={l}"
        )));
    }
    let product = NuPolynomial::product_of_shifts((1..=m).map(|i| (n - i) as i64));
    Ok(product
        .coefficient(l)
        .to_biguint()
        .expect("products of nonnegative shifts have nonnegative coefficients"))
}
