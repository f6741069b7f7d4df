//! Exact-arithmetic toolkit for two-dimensional monomial maps on complete
//! toric surfaces.
//!
//! A monomial map `(z, w) ↦ (z^a w^b, z^c w^d)` is encoded by the integer
//! matrix `[[a, b], [c, d]]` acting on the cocharacter lattice `N ≅ ℤ²`.
//! This crate decides, with no floating point anywhere in the kernel,
//! whether the induced rational self-map of the toric surface attached to a
//! complete fan is algebraically stable (AS), and when it is not, either
//! refines the fan until it is, produces a holomorphic model on an invariant
//! fan, or emits an exact impossibility certificate (irrational rotation
//! number).
//!
//! Layering, bottom up:
//!
//! - [`lattice`]: primitive vectors, exact orientation predicates, the
//!   counterclockwise angular order.
//! - [`exact`]: unbounded rationals, real quadratic irrationals with exact
//!   sign ([`exact::quad_sign`]), spectral data of integer matrices,
//!   isolated algebraic numbers, and Stern–Brocot direction search.
//! - [`matrix`]: the [`matrix::MonomialMap`] type (nonzero determinant
//!   enforced at construction).
//! - [`fan`]: complete 2-D fans, point location, star subdivision,
//!   regularity, sublattice reindexing and Hermite-normal-form enumeration.
//! - [`dynamics`]: holomorphy, contracted curves, indeterminacy points,
//!   orbit images, the exact AS decision procedure, and degree growth on ℙ².
//! - [`stabilizer`]: spectral classification and the stabilization
//!   pipelines (attracting/repelling cones, backward saturation,
//!   regularization, orbit closure, impossibility certificates).
//! - [`json`], [`svg`], [`cli`]: deterministic serialization, figure
//!   emission, and the command-line front end.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod fan;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod stabilizer;
pub mod svg;

pub use error::{Error, Result};
pub use exact::{quad_sign, QuadElem, Rat};
pub use fan::Fan;
pub use lattice::{Int, Ray, Vec2};
pub use matrix::MonomialMap;
