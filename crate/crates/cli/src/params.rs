//! Parameter files.
//!
//! ```json
//! {"flavor": "complex", "nu": 4,
//!  "sigma": [[1, [0.2, 0.1]], [[0.2, -0.1], 1]],
//!  "delta": [[0, 0], [0, 0]]}
//! ```
//!
//! Complex entries are `[re, im]` pairs; plain numbers are real. `delta`
//! defaults to the zero matrix. An optional `means` list supplies the ν mean
//! vectors used for sampling.

use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::Deserialize;
use wishart_moments::{Flavor, WishartParams, C64};

use crate::CliError;

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    flavor: Flavor,
    nu: f64,
    sigma: Vec<Vec<Scalar>>,
    delta: Option<Vec<Vec<Scalar>>>,
    means: Option<Vec<Vec<Scalar>>>,
}

/// Parameters plus the optional explicit mean vectors.
#[derive(Debug, Clone)]
pub struct LoadedParams {
    pub params: WishartParams,
    pub means: Option<Vec<DVector<C64>>>,
}

fn scalar(flavor: Flavor, s: Scalar, what: &str) -> Result<C64, CliError> {
    match (flavor, s) {
        (_, Scalar::Real(x)) => Ok(C64::new(x, 0.0)),
        (Flavor::Complex, Scalar::Complex([re, im])) => Ok(C64::new(re, im)),
        (Flavor::Real, Scalar::Complex(_)) => Err(CliError::Schema(format!(
            "{what}: real flavor takes plain numbers"
        ))),
    }
}

fn matrix(flavor: Flavor, rows: &[Vec<Scalar>], what: &str) -> Result<DMatrix<C64>, CliError> {
    let p = rows.len();
    if p == 0 || rows.iter().any(|r| r.len() != p) {
        return Err(CliError::Schema(format!(
            "{what} must be a nonempty square matrix"
        )));
    }
    let mut m = DMatrix::zeros(p, p);
    for (i, row) in rows.iter().enumerate() {
        for (j, &s) in row.iter().enumerate() {
            m[(i, j)] = scalar(flavor, s, what)?;
        }
    }
    Ok(m)
}

/// Parses a parameter document.
pub fn parse_params(text: &str) -> Result<LoadedParams, CliError> {
    let file: ParamsFile =
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
    let flavor = file.flavor;
    let sigma = matrix(flavor, &file.sigma, "sigma")?;
    let p = sigma.nrows();
    let delta = match &file.delta {
        Some(rows) => matrix(flavor, rows, "delta")?,
        None => DMatrix::zeros(p, p),
    };
    let params = match flavor {
        Flavor::Real => WishartParams::real(file.nu, sigma.map(|z| z.re), delta.map(|z| z.re))?,
        Flavor::Complex => WishartParams::complex(file.nu, sigma, delta)?,
    };
    let means = file
        .means
        .map(|vs| {
            vs.iter()
                .map(|v| {
                    let entries = v
                        .iter()
                        .map(|&s| scalar(flavor, s, "means"))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(DVector::from_vec(entries))
                })
                .collect::<Result<Vec<_>, CliError>>()
        })
        .transpose()?;
    Ok(LoadedParams { params, means })
}

/// Reads and validates a parameter file.
pub fn load_params(path: &Path) -> Result<LoadedParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_params(&text)
}
