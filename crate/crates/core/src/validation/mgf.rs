//! Moment generating functions and finite-difference moments.
//!
//! Real:    M(Θ) = det(I − 2ΘΣ)^{−ν/2} · exp(tr((I − 2ΘΣ)^{−1} Θ Δ))
//! Complex: M(Θ) = det(I − ΘΣ)^{−ν}    · exp(tr((I − ΘΣ)^{−1} Θ Δ))
//!
//! Under the real form, `tr(ΘW)` pairs θ_ij with w_ij, so a symmetric Θ with
//! off-diagonal entries t/2 differentiates to w_ij. Under the complex form
//! `tr(ΘW)` pairs θ_ji with w_ij, and the moment of w_ab is the derivative in
//! θ_ba. The complex MGF is analytic in Θ, so Θ need not be Hermitian.

use nalgebra::DMatrix;

use crate::engine::{Flavor, MomentSpec, MomentValue, WishartParams, C64};
use crate::error::{Error, Result};

/// Highest derivative order supported by [`mgf_moment_fd`].
pub const MAX_FD_ORDER: usize = 3;

/// Default central-difference step for a derivative of the given order.
pub fn default_fd_step(order: usize) -> f64 {
    if order <= 1 {
        1e-5
    } else {
        1e-4
    }
}

fn power(det: C64, exponent: f64) -> Result<C64> {
    if exponent.fract() == 0.0 {
        return Ok(det.powi(exponent as i32));
    }
    if det.im == 0.0 && det.re < 0.0 {
        return Err(Error::BranchUndefined {
            det: det.re,
            exponent,
        });
    }
    Ok(det.powf(exponent))
}

/// Evaluates the MGF of `params` at Θ.
pub fn mgf_eval(params: &WishartParams, theta: &DMatrix<C64>) -> Result<MomentValue> {
    let p = params.p();
    if theta.shape() != (p, p) {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: theta.nrows(),
        });
    }
    let (scale, exponent) = match params.flavor() {
        Flavor::Real => (2.0, -params.nu() / 2.0),
        Flavor::Complex => (1.0, -params.nu()),
    };
    let resolvent = DMatrix::<C64>::identity(p, p) - theta * params.sigma() * C64::new(scale, 0.0);
    let det = resolvent.determinant();
    if det.norm() == 0.0 {
        return Err(Error::Singular);
    }
    let inverse = resolvent.try_inverse().ok_or(Error::Singular)?;
    let trace = (inverse * theta * params.delta()).trace();
    let value = power(det, exponent)? * trace.exp();
    Ok(match params.flavor() {
        Flavor::Real => MomentValue::Real(value.re),
        Flavor::Complex => MomentValue::Complex(value),
    })
}

/// Direction in Θ whose derivative at 0 brings down the factor w_ab.
fn direction(flavor: Flavor, p: usize, a: u32, b: u32) -> DMatrix<C64> {
    let (i, j) = (a as usize - 1, b as usize - 1);
    let mut e = DMatrix::<C64>::zeros(p, p);
    match flavor {
        Flavor::Real if i == j => e[(i, i)] = C64::new(1.0, 0.0),
        Flavor::Real => {
            e[(i, j)] = C64::new(0.5, 0.0);
            e[(j, i)] = C64::new(0.5, 0.0);
        }
        Flavor::Complex => e[(j, i)] = C64::new(1.0, 0.0),
    }
    e
}

/// Mixed partial derivative of the MGF at Θ = 0 by a tensor product of
/// two-point central differences with step `h`; error is O(h²).
pub fn mgf_moment_fd(spec: &MomentSpec, params: &WishartParams, h: f64) -> Result<MomentValue> {
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
    let n = spec.n();
    if n > MAX_FD_ORDER {
        return Err(Error::OrderTooHigh {
            order: n,
            max: MAX_FD_ORDER,
        });
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!(
            "finite-difference step must be positive, got {h}"
        )));
    }
    let p = params.p();
    let dirs: Vec<DMatrix<C64>> = spec
        .factors()
        .iter()
        .map(|&(a, b)| direction(spec.flavor(), p, a, b))
        .collect();
    let mut total = C64::new(0.0, 0.0);
    for signs in 0u32..(1 << n) {
        let mut theta = DMatrix::<C64>::zeros(p, p);
        let mut weight = 1.0;
        for (k, d) in dirs.iter().enumerate() {
            let s = if signs >> k & 1 == 1 { -1.0 } else { 1.0 };
            weight *= s;
            theta += d * C64::new(s * h, 0.0);
        }
        total += mgf_eval(params, &theta)?.as_complex() * weight;
    }
    let value = total / (2.0 * h).powi(n as i32);
    Ok(match params.flavor() {
        Flavor::Real => MomentValue::Real(value.re),
        Flavor::Complex => MomentValue::Complex(value),
    })
}
