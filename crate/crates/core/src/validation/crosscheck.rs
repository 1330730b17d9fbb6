//! Three-way comparison of symbolic, Monte Carlo and finite-difference moments.

use serde::Serialize;

use super::mc::estimate_moments_mc;
use super::mgf::{default_fd_step, mgf_moment_fd, MAX_FD_ORDER};
use super::sampler::{SimulationConfig, RNG_ALGORITHM};
use crate::engine::{evaluate, expand_moment, MomentSpec};
use crate::error::Result;
use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Largest accepted |z| for the Monte Carlo estimate.
    pub z_max: f64,
    /// Largest accepted relative error of the finite-difference value.
    pub fd_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            z_max: 5.0,
            fd_rel: 1e-4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CrossCheckOptions {
    pub tolerances: Tolerances,
    /// Also differentiate the MGF when the order allows it.
    pub finite_difference: bool,
    /// Overrides [`default_fd_step`].
    pub fd_step: Option<f64>,
    pub exec: Exec,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McSummary {
    pub estimate: f64,
    pub se: f64,
    pub n: u64,
    pub z: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub imag: Option<ImagSummary>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImagSummary {
    pub estimate: f64,
    pub se: f64,
    pub reference: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FdSummary {
    pub value: f64,
    pub rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub symbolic: f64,
    pub mc: McSummary,
    pub fd: Option<FdSummary>,
    pub pass: bool,
    pub rng: String,
    pub seed: u64,
    pub streams: usize,
}

impl CrossCheckReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Relative error, or absolute error when the reference is zero.
pub fn relative_error(value: f64, reference: f64) -> f64 {
    let diff = (value - reference).abs();
    if reference == 0.0 {
        diff
    } else {
        diff / reference.abs()
    }
}

pub fn cross_check(
    spec: &MomentSpec,
    config: &SimulationConfig,
    options: &CrossCheckOptions,
) -> Result<CrossCheckReport> {
    let symbolic = evaluate(&expand_moment(spec)?, &config.params)?.as_complex();
    let est = estimate_moments_mc(std::slice::from_ref(spec), config, options.exec)?.remove(0);
    let tol = options.tolerances;

    let fd = if options.finite_difference && spec.n() <= MAX_FD_ORDER {
        let h = options.fd_step.unwrap_or_else(|| default_fd_step(spec.n()));
        let value = mgf_moment_fd(spec, &config.params, h)?.as_complex();
        let rel_err = if symbolic.norm() == 0.0 {
            value.norm()
        } else {
            (value - symbolic).norm() / symbolic.norm()
        };
        Some(FdSummary {
            value: value.re,
            rel_err,
        })
    } else {
        None
    };
    let pass = est.passes(tol.z_max) && fd.is_none_or(|f| f.rel_err < tol.fd_rel);

    Ok(CrossCheckReport {
        symbolic: symbolic.re,
        mc: McSummary {
            estimate: est.estimate,
            se: est.std_error,
            n: est.n_samples,
            z: est.z_score,
            imag: est.imaginary.map(|im| ImagSummary {
                estimate: im.estimate,
                se: im.std_error,
                reference: im.reference,
                z: im.z_score,
            }),
        },
        fd,
        pass,
        rng: RNG_ALGORITHM.to_string(),
        seed: config.seed,
        streams: config.streams,
    })
}
