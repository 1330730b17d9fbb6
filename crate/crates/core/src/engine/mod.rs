//! Symbolic moments of real and complex noncentral Wishart matrices.

mod expand;
mod inflate;
mod params;
mod poly;
mod shapes;
mod spec;

pub use expand::{
    expand_complex_moment, expand_complex_moment_with, expand_moment, expand_moment_with,
    expand_real_moment, expand_real_moment_with,
};
pub use inflate::Inflation;
pub use params::{evaluate, MomentValue, WishartParams, C64};
pub use poly::{Entry, MomentMonomial, MomentPolynomial, Substitution};
pub use shapes::{group_by_shape, spec_automorphisms, ShapeClass};
pub use spec::{Flavor, MomentSpec};
