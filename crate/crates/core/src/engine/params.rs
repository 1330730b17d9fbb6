use nalgebra::{Complex, DMatrix};
use num_traits::ToPrimitive;

use super::poly::MomentPolynomial;
use super::spec::Flavor;
use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Numeric parameters (ν, Σ, Δ) of a real or complex noncentral Wishart law.
///
/// Both matrices are stored with complex entries; real-flavored parameters
/// have zero imaginary parts throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct WishartParams {
    flavor: Flavor,
    nu: f64,
    sigma: DMatrix<C64>,
    delta: DMatrix<C64>,
}

fn check_square(sigma_dim: (usize, usize), delta_dim: (usize, usize)) -> Result<usize> {
    let (r, c) = sigma_dim;
    if r != c || r == 0 {
        return Err(Error::Domain(format!(
            "sigma must be a nonempty square matrix, got {r}x{c}"
        )));
    }
    if delta_dim != sigma_dim {
        return Err(Error::DimensionMismatch {
            expected: r,
            found: if delta_dim.0 != r {
                delta_dim.0
            } else {
                delta_dim.1
            },
        });
    }
    Ok(r)
}

impl WishartParams {
    /// Real parameters; Σ and Δ must be exactly symmetric.
    pub fn real(nu: f64, sigma: DMatrix<f64>, delta: DMatrix<f64>) -> Result<Self> {
        check_square(sigma.shape(), delta.shape())?;
        if sigma != sigma.transpose() {
            return Err(Error::NotSymmetric("sigma"));
        }
        if delta != delta.transpose() {
            return Err(Error::NotSymmetric("delta"));
        }
        Ok(Self {
            flavor: Flavor::Real,
            nu,
            sigma: sigma.map(|x| C64::new(x, 0.0)),
            delta: delta.map(|x| C64::new(x, 0.0)),
        })
    }

    /// Complex parameters; Σ and Δ must be exactly Hermitian.
    pub fn complex(nu: f64, sigma: DMatrix<C64>, delta: DMatrix<C64>) -> Result<Self> {
        check_square(sigma.shape(), delta.shape())?;
        if sigma != sigma.adjoint() {
            return Err(Error::NotHermitian("sigma"));
        }
        if delta != delta.adjoint() {
            return Err(Error::NotHermitian("delta"));
        }
        Ok(Self {
            flavor: Flavor::Complex,
            nu,
            sigma,
            delta,
        })
    }

    /// Central parameters (Δ = 0) of the given flavor from a real Σ.
    pub fn central_real(nu: f64, sigma: DMatrix<f64>) -> Result<Self> {
        let p = sigma.nrows();
        Self::real(nu, sigma, DMatrix::zeros(p, p))
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn p(&self) -> usize {
        self.sigma.nrows()
    }

    pub fn sigma(&self) -> &DMatrix<C64> {
        &self.sigma
    }

    pub fn delta(&self) -> &DMatrix<C64> {
        &self.delta
    }

    pub fn sigma_real(&self) -> DMatrix<f64> {
        self.sigma.map(|z| z.re)
    }

    pub fn delta_real(&self) -> DMatrix<f64> {
        self.delta.map(|z| z.re)
    }

    pub fn with_nu(&self, nu: f64) -> Self {
        Self { nu, ..self.clone() }
    }
}

/// A moment value; complex-flavored moments may carry an imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MomentValue {
    Real(f64),
    Complex(C64),
}

impl MomentValue {
    pub fn re(self) -> f64 {
        match self {
            MomentValue::Real(x) => x,
            MomentValue::Complex(z) => z.re,
        }
    }

    pub fn as_complex(self) -> C64 {
        match self {
            MomentValue::Real(x) => C64::new(x, 0.0),
            MomentValue::Complex(z) => z,
        }
    }
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Substitutes numeric (ν, Σ, Δ) into a moment polynomial.
pub fn evaluate(poly: &MomentPolynomial, params: &WishartParams) -> Result<MomentValue> {
    let spec = poly.spec();
    if spec.flavor() != params.flavor() {
        return Err(Error::FlavorMismatch {
            expected: spec.flavor(),
            found: params.flavor(),
        });
    }
    if spec.p() != params.p() {
        return Err(Error::DimensionMismatch {
            expected: spec.p(),
            found: params.p(),
        });
    }
    let entry = |m: &DMatrix<C64>, (i, j): (u32, u32)| m[((i - 1) as usize, (j - 1) as usize)];
    let (mut re, mut im) = (CompensatedSum::default(), CompensatedSum::default());
    for (mono, c) in poly.terms() {
        let mut term =
            C64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0) * params.nu.powi(mono.nu_exp as i32);
        for &pair in &mono.sigma {
            term *= entry(&params.sigma, pair);
        }
        for &pair in &mono.delta {
            term *= entry(&params.delta, pair);
        }
        re.add(term.re);
        im.add(term.im);
    }
    Ok(match params.flavor {
        Flavor::Real => MomentValue::Real(re.value()),
        Flavor::Complex => MomentValue::Complex(C64::new(re.value(), im.value())),
    })
}
