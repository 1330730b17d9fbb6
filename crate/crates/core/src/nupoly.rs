//! Univariate polynomials in the degrees of freedom with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial in ν; `coefficients[k]` multiplies ν^k.
///
/// The representation is always trimmed: the last stored coefficient is
/// nonzero, and the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NuPolynomial {
    coefficients: Vec<BigInt>,
}

impl NuPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coefficients(vec![c.into()])
    }

    /// The monomial ν.
    pub fn nu() -> Self {
        Self::from_coefficients(vec![BigInt::zero(), BigInt::one()])
    }

    /// ν + shift.
    pub fn shifted_nu(shift: i64) -> Self {
        Self::from_coefficients(vec![BigInt::from(shift), BigInt::one()])
    }

    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    /// ∏ (ν + s) over the given shifts; the empty product is 1.
    pub fn product_of_shifts(shifts: impl IntoIterator<Item = i64>) -> Self {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, s| &acc * &Self::shifted_nu(s))
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of ν^k (zero past the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::from_coefficients(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Substitutes ν → factor·ν.
    pub fn rescale_nu(&self, factor: i64) -> Self {
        let factor = BigInt::from(factor);
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            out.push(c * &power);
            power *= &factor;
        }
        Self::from_coefficients(out)
    }

    pub fn eval_int(&self, nu: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * nu + c)
    }

    pub fn eval(&self, nu: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * nu + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }
}

impl Add for &NuPolynomial {
    type Output = NuPolynomial;

    fn add(self, rhs: &NuPolynomial) -> NuPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let sum = (0..len)
            .map(|k| self.coefficient(k) + rhs.coefficient(k))
            .collect();
        NuPolynomial::from_coefficients(sum)
    }
}

impl Mul for &NuPolynomial {
    type Output = NuPolynomial;

    fn mul(self, rhs: &NuPolynomial) -> NuPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return NuPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NuPolynomial::from_coefficients(out)
    }
}

impl fmt::Display for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "nu")?,
                (1, false) => write!(f, "{mag}*nu")?,
                (_, true) => write!(f, "nu^{k}")?,
                (_, false) => write!(f, "{mag}*nu^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NuPolynomialJson {
    coefficients: Vec<String>,
}

impl Serialize for NuPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        NuPolynomialJson {
            coefficients: self.coefficients.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NuPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = NuPolynomialJson::deserialize(deserializer)?;
        let coefficients = raw
            .coefficients
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coefficients(coefficients))
    }
}
