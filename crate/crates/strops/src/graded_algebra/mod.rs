//! Exact arithmetic in finitely presented graded-commutative rings over
//! the integers and prime fields: the kernel the rest of the crate builds on.
//!
//! Degrees may be negative (shifted homology rings live in non-positive
//! degrees), integer coefficients are arbitrary precision, and odd-degree
//! generators square to zero away from characteristic 2.
//!
//! Coefficients are the integers or a prime field. Rational coefficients
//! are intentionally absent: over the rationals the structures downstream
//! of this kernel reduce to degree-shifted graded algebras, and nothing
//! here models that refinement.

pub mod coeff;
pub mod element;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod parse;
mod ring;

pub use coeff::{Coefficients, Scalar};
pub use element::{arith, ArithOp, GradedElement};
pub use json::RingPresentationJson;
pub use monomial::Monomial;
pub use ring::{Generator, Ring};

pub(crate) use ring::complete_relations;

use thiserror::Error;

#[derive(Error, Debug)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("relation {relation} is not homogeneous")]
    NonHomogeneousRelation { relation: String },
    #[error("relation {relation} has a non-unit leading coefficient")]
    NonUnitLeadingCoefficient { relation: String },
    #[error(
        "rewrite system is not locally confluent: critical pair ({left}, {right}) \
         reduces to both {nf_left} and {nf_right}"
    )]
    ConfluenceFailure {
        left: String,
        right: String,
        nf_left: String,
        nf_right: String,
    },
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("coefficient rings do not match")]
    CoefficientMismatch,
    #[error("degree {degree} exceeds the verified confluence bound {bound}")]
    DegreeOutsideBound { degree: i64, bound: i64 },
    #[error("degree {degree} is not finite-dimensional in this presentation")]
    NotFiniteInDegree { degree: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not homogeneous")]
    InhomogeneousElement,
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("relation completion is only implemented over prime fields")]
    CompletionRequiresField,
}

/// Build a presentation from generator/relation data given as strings.
///
/// Convenience entry point over [`Ring::make`]: relations are parsed in the
/// free graded-commutative algebra on the declared generators.
pub fn make_ring(
    gens: &[(&str, i64)],
    relations: &[&str],
    coeffs: Coefficients,
    degree_bound: i64,
) -> Result<Ring, AlgebraError> {
    let gens: Vec<Generator> = gens
        .iter()
        .map(|(n, d)| Generator {
            name: (*n).to_string(),
            degree: *d,
        })
        .collect();
    let free = Ring::make(gens.clone(), vec![], coeffs, degree_bound)?;
    let mut rels = Vec::new();
    for r in relations {
        rels.push(free.parse(r)?.terms().to_vec());
    }
    Ring::make(gens, rels, coeffs, degree_bound)
}
