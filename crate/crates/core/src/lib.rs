//! Exact moments of real and complex noncentral Wishart matrices.
//!
//! A moment `E[w_{a1 b1} ... w_{an bn}]` is a polynomial in ν and the
//! entries of Σ and Δ with nonnegative integer coefficients. The real case
//! sums over pair partitions of `{1..2n}`; the complex case sums over partial
//! injections of `{1..n}`. Each term is read off the graph formed by the
//! fixed edges and the chosen ones: cycles give powers of ν, edges give σ
//! factors and chain ends give δ factors.
//!
//! ```
//! use wishart_moments::{expand_moment, MomentSpec};
//!
//! let spec = MomentSpec::real(6, vec![(1, 2), (3, 4), (5, 6)]).unwrap();
//! let poly = expand_moment(&spec).unwrap();
//! assert_eq!(poly.total_mass(), 76u32.into());
//! ```
//!
//! [`combinatorics`] holds the enumerators and the coefficient tables,
//! [`closed_forms`] the one- and two-dimensional formulas, and
//! [`validation`] the Monte Carlo and MGF oracles.

pub mod closed_forms;
pub mod combinatorics;
pub mod engine;
pub mod error;
pub mod exec;
pub mod nupoly;
pub mod validation;

pub use closed_forms::BivariateMomentPoly;
pub use engine::{
    evaluate, expand_complex_moment, expand_moment, expand_moment_with, expand_real_moment,
    group_by_shape, Flavor, MomentPolynomial, MomentSpec, MomentValue, ShapeClass, WishartParams,
    C64,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use nupoly::NuPolynomial;
