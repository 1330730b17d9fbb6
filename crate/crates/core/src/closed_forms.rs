//! Closed-form moments that fall out of the graph counts: noncentral
//! chi-square, Laguerre and Hermite coefficients, Kibble's bivariate
//! chi-square, and the 2×2 real and complex Wishart laws with Σ = I.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, factorial, odd_double_factorial, phi};
use crate::nupoly::NuPolynomial;

/// Polynomial in ν, ρ² and δ; key is `(nu_exp, rho2_exp, delta_exp)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariateMomentPoly {
    terms: BTreeMap<(u32, u32, u32), BigInt>,
}

impl BivariateMomentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: BTreeMap<(u32, u32, u32), BigInt>) -> Self {
        Self {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `poly(ν) · ρ^(2·rho2_exp) · δ^delta_exp`.
    pub fn from_nu_poly(poly: &NuPolynomial, rho2_exp: u32, delta_exp: u32) -> Self {
        let mut out = Self::zero();
        out.add_nu_poly(poly, rho2_exp, delta_exp);
        out
    }

    fn add_nu_poly(&mut self, poly: &NuPolynomial, rho2_exp: u32, delta_exp: u32) {
        for (k, c) in poly.coefficients().iter().enumerate() {
            let slot = self
                .terms
                .entry((k as u32, rho2_exp, delta_exp))
                .or_default();
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(&(k as u32, rho2_exp, delta_exp));
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, u32), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes ν → factor·ν.
    pub fn rescale_nu(&self, factor: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(nu, r, d), c)| ((nu, r, d), c * BigInt::from(factor).pow(nu)))
            .collect();
        Self::from_terms(terms)
    }

    /// Substitutes ρ² → value, leaving a polynomial in (ν, δ).
    pub fn at_rho2(&self, value: i64) -> Self {
        let mut terms: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for (&(nu, r, d), c) in &self.terms {
            *terms.entry((nu, 0, d)).or_default() += c * BigInt::from(value).pow(r);
        }
        Self::from_terms(terms)
    }

    /// The ν-polynomial when no ρ² or δ powers are present.
    pub fn as_nu_poly(&self) -> Option<NuPolynomial> {
        if self.terms.keys().any(|&(_, r, d)| r != 0 || d != 0) {
            return None;
        }
        let degree = self
            .terms
            .keys()
            .map(|&(nu, _, _)| nu as usize)
            .max()
            .map_or(0, |d| d + 1);
        let mut coeffs = vec![BigInt::zero(); degree];
        for (&(nu, _, _), c) in &self.terms {
            coeffs[nu as usize] = c.clone();
        }
        Some(NuPolynomial::from_coefficients(coeffs))
    }

    pub fn eval(&self, nu: f64, rho2: f64, delta: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(a, r, d), c)| {
                c.to_f64().unwrap_or(f64::NAN)
                    * nu.powi(a as i32)
                    * rho2.powi(r as i32)
                    * delta.powi(d as i32)
            })
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct BivariateTermJson {
    nu_exp: u32,
    rho2_exp: u32,
    delta_exp: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BivariateJson {
    terms: Vec<BivariateTermJson>,
}

impl Serialize for BivariateMomentPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BivariateJson {
            terms: self
                .terms
                .iter()
                .map(|(&(nu_exp, rho2_exp, delta_exp), c)| BivariateTermJson {
                    nu_exp,
                    rho2_exp,
                    delta_exp,
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariateMomentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BivariateJson::deserialize(deserializer)?;
        let mut terms: BTreeMap<(u32, u32, u32), BigInt> = BTreeMap::new();
        for t in raw.terms {
            let c: BigInt = t.coeff.parse().map_err(serde::de::Error::custom)?;
            *terms
                .entry((t.nu_exp, t.rho2_exp, t.delta_exp))
                .or_default() += c;
        }
        Ok(Self::from_terms(terms))
    }
}

/// ∏_{i=1}^{count} (ν + 2(top − i)).
fn even_shift_product(count: u64, top: u64) -> NuPolynomial {
    NuPolynomial::product_of_shifts((1..=count).map(|i| 2 * (top as i64 - i as i64)))
}

/// ∏_{i=1}^{count} (ν + top − i).
fn unit_shift_product(count: u64, top: u64) -> NuPolynomial {
    NuPolynomial::product_of_shifts((1..=count).map(|i| top as i64 - i as i64))
}

/// E[w^n] for w ~ χ²_ν(δ): Σ_m C(n,m) ∏_{i=1}^{m}(ν+2(n−i)) δ^{n−m}.
///
/// The complex degenerate case (χ² with 2ν degrees of freedom) is this
/// polynomial after [`BivariateMomentPoly::rescale_nu`] with factor 2.
pub fn noncentral_chisq_moment(n: usize) -> BivariateMomentPoly {
    if n == 0 {
        return BivariateMomentPoly::from_nu_poly(&NuPolynomial::one(), 0, 0);
    }
    let mut out = BivariateMomentPoly::zero();
    for m in 0..=n {
        let term = phi(m, n).expect("0 <= m <= n");
        out.add_nu_poly(&term, 0, (n - m) as u32);
    }
    out
}

/// Coefficients of L_n^{(ν)}(x) in the gamma-weight normalization: entry k
/// multiplies x^k and equals (−1)^m Φ_{m,n}(ν) with k = n − m.
pub fn laguerre_coeffs(n: usize) -> Vec<NuPolynomial> {
    if n == 0 {
        return vec![NuPolynomial::one()];
    }
    (0..=n)
        .map(|k| {
            let m = n - k;
            let sign = if m.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            phi(m, n).expect("0 <= m <= n").scale(&sign)
        })
        .collect()
}

/// Numerical value of L_n^{(ν)}(x) from [`laguerre_coeffs`].
pub fn laguerre_eval(n: usize, nu: f64, x: f64) -> f64 {
    laguerre_coeffs(n)
        .iter()
        .enumerate()
        .map(|(k, c)| c.eval(nu) * x.powi(k as i32))
        .sum()
}

/// Coefficients of the probabilists' Hermite polynomial H_n(x); entry k multiplies x^k.
pub fn hermite_coeffs(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for m in 0..=n / 2 {
        // a_{m,n} = n! / ((n−2m)! 2^m m!) = C(n,2m)(2m−1)!!
        let count = BigInt::from(binomial(n as u64, 2 * m as u64) * odd_double_factorial(m as u64));
        out[n - 2 * m] = if m % 2 == 0 { count } else { -count };
    }
    out
}

/// E[w11^b w22^c] for the 2×2 central Wishart with unit variances and correlation ρ.
pub fn kibble_moment(b: u64, c: u64) -> BivariateMomentPoly {
    let mut out = BivariateMomentPoly::zero();
    for a in 0..=b.min(c) {
        let weight = BigInt::from(
            (num_bigint::BigUint::one() << a) * factorial(b) * factorial(c)
                / (factorial(b - a) * factorial(c - a) * factorial(a)),
        );
        let poly = &(&even_shift_product(a, a) * &even_shift_product(b - a, b))
            * &even_shift_product(c - a, c);
        out.add_nu_poly(&poly.scale(&weight), a as u32, 0);
    }
    out
}

/// E[w12^{2a} w11^b w22^c] for W ~ W_2(ν, I).
pub fn real_2x2_moment(a: u64, b: u64, c: u64) -> NuPolynomial {
    let poly = &(&even_shift_product(a, a) * &even_shift_product(b, a + b))
        * &even_shift_product(c, a + c);
    poly.scale(&BigInt::from(odd_double_factorial(a)))
}

/// Odd powers of the off-diagonal entry have zero mean.
pub fn real_2x2_vanishes(w12_exp: u64) -> bool {
    w12_exp % 2 == 1
}

/// E[w12^e w11^b w22^c] for any exponent e; zero when e is odd.
pub fn real_2x2_moment_by_exponent(w12_exp: u64, b: u64, c: u64) -> NuPolynomial {
    if real_2x2_vanishes(w12_exp) {
        NuPolynomial::zero()
    } else {
        real_2x2_moment(w12_exp / 2, b, c)
    }
}

/// E[w11^b (w12 w21)^a w22^c] for W ~ CW_2(ν, I).
pub fn complex_2x2_moment(a: u64, b: u64, c: u64) -> NuPolynomial {
    let poly = &(&unit_shift_product(a, a) * &unit_shift_product(b, a + b))
        * &unit_shift_product(c, a + c);
    poly.scale(&BigInt::from(factorial(a)))
}

/// Unequal powers of w12 and w21 have zero mean.
pub fn complex_2x2_vanishes(w12_exp: u64, w21_exp: u64) -> bool {
    w12_exp != w21_exp
}

/// E[w12^e w21^f w11^b w22^c]; zero unless e = f.
pub fn complex_2x2_moment_by_exponents(w12_exp: u64, w21_exp: u64, b: u64, c: u64) -> NuPolynomial {
    if complex_2x2_vanishes(w12_exp, w21_exp) {
        NuPolynomial::zero()
    } else {
        complex_2x2_moment(w12_exp, b, c)
    }
}
