//! Numerical oracles for the symbolic engine: exact-law Monte Carlo and
//! finite differences of the moment generating function.

mod crosscheck;
mod mc;
mod mgf;
mod sampler;

pub use crosscheck::{
    cross_check, relative_error, CrossCheckOptions, CrossCheckReport, FdSummary, ImagSummary,
    McSummary, Tolerances,
};
pub use mc::{estimate_moment_mc, estimate_moments_mc, EstimateReport, ImaginaryPart};
pub use mgf::{default_fd_step, mgf_eval, mgf_moment_fd, MAX_FD_ORDER};
pub use sampler::{
    sample_complex_wishart, sample_real_wishart, SimulationConfig, WishartSampler, RNG_ALGORITHM,
};
