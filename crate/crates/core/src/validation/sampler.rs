//! Exact-law samplers for real and complex noncentral Wishart matrices.
//!
//! Sample `t` is drawn from a ChaCha8 generator seeded with the run seed and
//! switched to stream `t`, so every sample is reproducible on its own and the
//! result never depends on how samples are split across workers.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::engine::{Flavor, WishartParams, C64};
use crate::error::{Error, Result};

/// Name of the generator scheme, recorded in reports for replay.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng(seed_from_u64(seed), stream = sample index)";

const PD_RATIO: f64 = 1e-10;
const MEAN_TOLERANCE: f64 = 1e-12;

/// Everything needed to draw Wishart samples.
#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub params: WishartParams,
    /// Optional explicit means μ_1..μ_ν; Σ_t μ_t μ_t* must reproduce Δ.
    pub mean_vectors: Option<Vec<DVector<C64>>>,
    pub samples: u64,
    pub seed: u64,
    pub streams: usize,
}

impl SimulationConfig {
    pub fn new(params: WishartParams, samples: u64, seed: u64) -> Self {
        Self {
            params,
            mean_vectors: None,
            samples,
            seed,
            streams: 64,
        }
    }

    pub fn with_streams(mut self, streams: usize) -> Self {
        self.streams = streams.max(1);
        self
    }

    pub fn with_mean_vectors(mut self, means: Vec<DVector<C64>>) -> Self {
        self.mean_vectors = Some(means);
        self
    }
}

/// Validated sampler state: Cholesky factor of Σ and ν mean vectors.
#[derive(Debug, Clone)]
pub struct WishartSampler {
    flavor: Flavor,
    p: usize,
    /// Lower-triangular factor L with L L* = Σ, row-major.
    chol: Vec<C64>,
    means: Vec<Vec<C64>>,
    base: ChaCha8Rng,
}

fn integer_nu(nu: f64) -> Result<usize> {
    if nu.fract() != 0.0 || nu < 1.0 || !nu.is_finite() {
        return Err(Error::NonIntegerDegrees(nu));
    }
    Ok(nu as usize)
}

fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn check_positive_definite(sigma: &DMatrix<C64>) -> Result<()> {
    let eig = sigma.clone().symmetric_eigen().eigenvalues;
    let max = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
    if max.is_nan() || max <= 0.0 || min <= PD_RATIO * max {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(())
}

/// Mean vectors μ_t = √λ_t v_t from the eigendecomposition of Δ, padded with zeros.
fn synthesize_means(params: &WishartParams, nu: usize) -> Result<Vec<Vec<C64>>> {
    let p = params.p();
    let (values, vectors): (Vec<f64>, DMatrix<C64>) = match params.flavor() {
        Flavor::Real => {
            let eig = params.delta_real().symmetric_eigen();
            (
                eig.eigenvalues.iter().copied().collect(),
                eig.eigenvectors.map(|x| C64::new(x, 0.0)),
            )
        }
        Flavor::Complex => {
            let eig = params.delta().clone().symmetric_eigen();
            (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
        }
    };
    let scale = values.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let tol = MEAN_TOLERANCE * scale;
    if values.iter().any(|&v| v < -tol) {
        return Err(Error::NotPositiveSemidefinite);
    }
    let kept: Vec<usize> = (0..values.len()).filter(|&k| values[k] > tol).collect();
    if kept.len() > nu {
        return Err(Error::RankExceedsDegrees {
            rank: kept.len(),
            nu: nu as u64,
        });
    }
    let mut means = vec![vec![C64::new(0.0, 0.0); p]; nu];
    for (t, &k) in kept.iter().enumerate() {
        let root = values[k].sqrt();
        for i in 0..p {
            means[t][i] = vectors[(i, k)] * root;
        }
    }
    Ok(means)
}

fn check_means(params: &WishartParams, nu: usize, given: &[DVector<C64>]) -> Result<Vec<Vec<C64>>> {
    let p = params.p();
    if given.len() != nu {
        return Err(Error::MeanMismatch(format!(
            "expected {nu} mean vectors, got {}",
            given.len()
        )));
    }
    if let Some(bad) = given.iter().find(|m| m.len() != p) {
        return Err(Error::DimensionMismatch {
            expected: p,
            found: bad.len(),
        });
    }
    if params.flavor() == Flavor::Real && given.iter().flatten().any(|z| z.im != 0.0) {
        return Err(Error::MeanMismatch(
            "real flavor needs real mean vectors".into(),
        ));
    }
    let mut outer = DMatrix::<C64>::zeros(p, p);
    for mu in given {
        outer += mu * mu.adjoint();
    }
    let diff = max_abs(&(&outer - params.delta()));
    let scale = max_abs(params.delta());
    if diff > MEAN_TOLERANCE * scale || (scale == 0.0 && diff > 0.0) {
        return Err(Error::MeanMismatch(format!(
            "sum of outer products differs from delta by {diff:e}"
        )));
    }
    Ok(given.iter().map(|m| m.iter().copied().collect()).collect())
}

impl WishartSampler {
    pub fn new(config: &SimulationConfig) -> Result<Self> {
        let params = &config.params;
        let nu = integer_nu(params.nu())?;
        let p = params.p();
        check_positive_definite(params.sigma())?;
        let chol = nalgebra::Cholesky::new(params.sigma().clone())
            .ok_or(Error::NotPositiveDefinite)?
            .l();
        let means = match &config.mean_vectors {
            Some(given) => check_means(params, nu, given)?,
            None => synthesize_means(params, nu)?,
        };
        let mut flat = Vec::with_capacity(p * p);
        for i in 0..p {
            for j in 0..p {
                flat.push(chol[(i, j)]);
            }
        }
        Ok(Self {
            flavor: params.flavor(),
            p,
            chol: flat,
            means,
            base: ChaCha8Rng::seed_from_u64(config.seed),
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn p(&self) -> usize {
        self.p
    }

    fn rng_for(&self, t: u64) -> ChaCha8Rng {
        let mut rng = self.base.clone();
        rng.set_stream(t);
        rng.set_word_pos(0);
        rng
    }

    /// Writes sample `t` into `out` (row-major p×p) using `noise` as scratch.
    pub fn sample_into(&self, t: u64, out: &mut [C64], noise: &mut Vec<C64>) {
        let p = self.p;
        let mut rng = self.rng_for(t);
        out.iter_mut().for_each(|w| *w = C64::new(0.0, 0.0));
        noise.resize(p, C64::new(0.0, 0.0));
        let half = std::f64::consts::FRAC_1_SQRT_2;
        for mu in &self.means {
            for z in noise.iter_mut() {
                *z = match self.flavor {
                    Flavor::Real => C64::new(rng.sample(StandardNormal), 0.0),
                    Flavor::Complex => {
                        let re: f64 = rng.sample(StandardNormal);
                        let im: f64 = rng.sample(StandardNormal);
                        C64::new(re * half, im * half)
                    }
                };
            }
            // x = μ + L·noise, accumulated into W as x x*.
            let x: Vec<C64> = (0..p)
                .map(|i| {
                    mu[i]
                        + (0..=i)
                            .map(|j| self.chol[i * p + j] * noise[j])
                            .sum::<C64>()
                })
                .collect();
            for i in 0..p {
                for j in 0..p {
                    out[i * p + j] += x[i] * x[j].conj();
                }
            }
        }
    }

    pub fn sample(&self, t: u64) -> DMatrix<C64> {
        let mut buf = vec![C64::new(0.0, 0.0); self.p * self.p];
        self.sample_into(t, &mut buf, &mut Vec::new());
        DMatrix::from_row_slice(self.p, self.p, &buf)
    }
}

fn require(config: &SimulationConfig, flavor: Flavor) -> Result<()> {
    if config.params.flavor() != flavor {
        return Err(Error::FlavorMismatch {
            expected: flavor,
            found: config.params.flavor(),
        });
    }
    Ok(())
}

/// Sample `t` of the real noncentral Wishart law described by `config`.
pub fn sample_real_wishart(config: &SimulationConfig, t: u64) -> Result<DMatrix<f64>> {
    require(config, Flavor::Real)?;
    Ok(WishartSampler::new(config)?.sample(t).map(|z| z.re))
}

/// Sample `t` of the complex noncentral Wishart law described by `config`.
pub fn sample_complex_wishart(config: &SimulationConfig, t: u64) -> Result<DMatrix<C64>> {
    require(config, Flavor::Complex)?;
    Ok(WishartSampler::new(config)?.sample(t))
}
