//! Monte Carlo moment estimates with standard errors.

use serde::Serialize;

use super::sampler::{SimulationConfig, WishartSampler};
use crate::engine::{evaluate, expand_moment, Flavor, MomentSpec, C64};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Running (count, mean, squared-deviation sum) triple; merges associatively.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Running {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Running {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let d = x - self.mean;
        self.mean += d / self.count as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(&mut self, other: &Running) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let n = (self.count + other.count) as f64;
        let d = other.mean - self.mean;
        self.mean += d * other.count as f64 / n;
        self.m2 += other.m2 + d * d * self.count as f64 * other.count as f64 / n;
        self.count += other.count;
    }

    /// Standard error of the mean.
    fn std_error(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let n = self.count as f64;
        (self.m2.max(0.0) / (n - 1.0) / n).sqrt()
    }
}

/// Differences below `ROUNDING` times the moment's magnitude are floating-point
/// noise on both sides (e.g. the imaginary part of a real-valued complex
/// moment) and score as exact agreement.
const ROUNDING: f64 = 1e-12;

fn z_score(estimate: f64, reference: f64, se: f64, magnitude: f64) -> f64 {
    let diff = estimate - reference;
    if diff.abs() <= ROUNDING * magnitude {
        0.0
    } else if se > 0.0 {
        diff / se
    } else {
        diff.signum() * f64::INFINITY
    }
}

/// Imaginary-part check for complex-flavored specs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ImaginaryPart {
    pub estimate: f64,
    pub std_error: f64,
    pub reference: f64,
    pub z_score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimateReport {
    pub estimate: f64,
    pub std_error: f64,
    pub n_samples: u64,
    pub reference: f64,
    pub z_score: f64,
    pub imaginary: Option<ImaginaryPart>,
}

impl EstimateReport {
    /// True when every reported |z| is below `z_max`.
    pub fn passes(&self, z_max: f64) -> bool {
        self.z_score.abs() < z_max && self.imaginary.is_none_or(|im| im.z_score.abs() < z_max)
    }
}

/// Estimates a single moment; see [`estimate_moments_mc`].
pub fn estimate_moment_mc(spec: &MomentSpec, config: &SimulationConfig) -> Result<EstimateReport> {
    Ok(estimate_moments_mc(std::slice::from_ref(spec), config, Exec::default())?.remove(0))
}

/// Estimates several moments from one shared set of N samples.
///
/// Samples are split into `config.streams` contiguous index ranges; each
/// range is reduced on its own and the partial triples are merged in range
/// order, so the result is bit-identical for fixed (seed, streams, N).
pub fn estimate_moments_mc(
    specs: &[MomentSpec],
    config: &SimulationConfig,
    exec: Exec,
) -> Result<Vec<EstimateReport>> {
    let params = &config.params;
    let mut references = Vec::with_capacity(specs.len());
    for spec in specs {
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
        references.push(evaluate(&expand_moment(spec)?, params)?.as_complex());
    }
    if config.samples == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    let sampler = WishartSampler::new(config)?;
    let p = sampler.p();
    let offsets: Vec<Vec<usize>> = specs
        .iter()
        .map(|s| {
            s.factors()
                .iter()
                .map(|&(a, b)| (a as usize - 1) * p + (b as usize - 1))
                .collect()
        })
        .collect();

    let streams = (config.streams.max(1) as u64).min(config.samples);
    let ranges: Vec<(u64, u64)> = (0..streams)
        .map(|k| {
            (
                config.samples * k / streams,
                config.samples * (k + 1) / streams,
            )
        })
        .collect();
    let partials = exec.map(ranges, |(lo, hi)| {
        let mut acc = vec![(Running::default(), Running::default()); specs.len()];
        let mut w = vec![C64::new(0.0, 0.0); p * p];
        let mut noise = Vec::with_capacity(p);
        for t in lo..hi {
            sampler.sample_into(t, &mut w, &mut noise);
            for (slot, idx) in acc.iter_mut().zip(&offsets) {
                let product = idx.iter().fold(C64::new(1.0, 0.0), |z, &k| z * w[k]);
                slot.0.push(product.re);
                slot.1.push(product.im);
            }
        }
        acc
    });
    let mut total = vec![(Running::default(), Running::default()); specs.len()];
    for part in &partials {
        for (t, q) in total.iter_mut().zip(part) {
            t.0.merge(&q.0);
            t.1.merge(&q.1);
        }
    }

    Ok(total
        .iter()
        .zip(&references)
        .map(|((re, im), reference)| {
            let magnitude = reference.norm().max(re.mean.abs()).max(f64::MIN_POSITIVE);
            let imaginary = (params.flavor() == Flavor::Complex).then(|| ImaginaryPart {
                estimate: im.mean,
                std_error: im.std_error(),
                reference: reference.im,
                z_score: z_score(im.mean, reference.im, im.std_error(), magnitude),
            });
            EstimateReport {
                estimate: re.mean,
                std_error: re.std_error(),
                n_samples: re.count,
                reference: reference.re,
                z_score: z_score(re.mean, reference.re, re.std_error(), magnitude),
                imaginary,
            }
        })
        .collect())
}
