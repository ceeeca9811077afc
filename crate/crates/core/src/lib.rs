//! The Stampfli point `St(A)` of a square complex matrix: the unique scalar
//! `λ` minimizing the spectral norm `‖A − λI‖`.
//!
//! The crate provides
//! - a small dense complex kernel ([`matcore`]),
//! - numerical ranges and maximal numerical ranges as support-function
//!   polygons, with the zero-membership certificate ([`numrange`]),
//! - a reference minimizer used as ground truth ([`oracle`]),
//! - the explicit formulas and criteria for structured classes, with a
//!   dispatcher that falls back to the reference minimizer ([`closedform`]),
//! - Roberts orthogonality of `A` to the identity ([`roberts`]),
//! - named example matrices ([`gallery`]).

pub mod closedform;
pub mod error;
pub mod gallery;
pub mod hull;
pub mod matcore;
pub mod numrange;
pub mod oracle;
pub mod roberts;

pub use error::{Error, Result};
pub use matcore::CMatrix;
pub use num_complex::Complex64;
pub use oracle::{Method, StampfliResult};
