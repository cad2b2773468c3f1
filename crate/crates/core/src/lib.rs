//! Exact `gl_3` Gelfand–Tsetlin bases in the A-hypergeometric realization,
//! 3j-symbols and 6j-symbols.
//!
//! The crate is layered bottom-up:
//!
//! - [`poly`]: sparse polynomials over the Plücker-type variables `A_X`.
//! - [`gamma`]: Γ-series, weights, Gelfand–Tsetlin patterns and the basis
//!   vectors `F_μ`.
//! - [`lattice`]: shifted integer lattices and their nonnegative points.
//! - [`invariants`]: bracket semiinvariants `f^τ` and their supports.
//! - [`threej`]: 3j-symbols as pairings with `f^τ`.
//! - [`sixj`]: 6j-symbols by lattice sum, direct contraction and definition.

pub mod error;
pub mod gamma;
pub mod invariants;
pub(crate) mod join;
pub mod lattice;
pub(crate) mod linalg;
pub mod poly;
pub mod sixj;
pub mod threej;

/// Exact rational numbers backed by arbitrary-precision integers.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use gamma::{AgkzBasis, GTPattern, GtBasis, Weight3};
pub use invariants::TauLabel;
pub use sixj::{SixJConfig, SixJEvaluator, SixJMethod, SixJProblem};
pub use threej::ThreeJQuery;
pub use poly::{GroupId, MultiIndex6, SparsePoly};
