//! Exact computation of string-topology structures on fiberwise monoids:
//! shifted intersection rings, string products on trivial bundles, the
//! bigraded second-page algebra, twisted Steenrod actions, homology
//! operations dual to Steenrod squares, and pro-ring towers over the
//! manifold filtrations of classifying spaces.

pub mod graded_algebra;
pub mod manifold_catalog;
pub mod steenrod;
pub mod string_product;
pub mod pro_tower;
pub mod qops;
pub mod cli;

pub use graded_algebra::AlgebraError;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown space {0:?}")]
    UnknownSpace(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("Poincaré duality is unavailable for {space} over these coefficients")]
    DualityUnavailable { space: String },
    #[error("Stiefel-Whitney class of degree {degree} is not recorded for {space}")]
    SwClassUnavailable { space: String, degree: i64 },
    #[error("{0}")]
    Domain(String),
}

