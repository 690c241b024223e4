//! JSON serialization of ring presentations.
//!
//! Schema: `{coefficients, generators: [{name, degree}], relations:
//! [polynomial strings], degree_bound}`. Relations use the polynomial
//! string grammar, so a document round-trips to an equal presentation.

use serde::{Deserialize, Serialize};

use super::coeff::Coefficients;
use super::ring::{display_terms_raw, Generator, Ring};
use super::AlgebraError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RingPresentationJson {
    pub coefficients: Coefficients,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
    pub degree_bound: i64,
}

impl Ring {
    pub fn to_json(&self) -> RingPresentationJson {
        RingPresentationJson {
            coefficients: self.coefficients(),
            generators: self.generators().to_vec(),
            relations: self
                .relation_terms()
                .iter()
                .map(|r| display_terms_raw(r, self.generators()))
                .collect(),
            degree_bound: self.degree_bound(),
        }
    }

    pub fn from_json(doc: &RingPresentationJson) -> Result<Ring, AlgebraError> {
        // a relation-free ring over the same generators, used to parse
        let free = Ring::make(doc.generators.clone(), vec![], doc.coefficients, doc.degree_bound)?;
        let mut rels = Vec::new();
        for r in &doc.relations {
            rels.push(free.parse(r)?.terms().to_vec());
        }
        Ring::make(doc.generators.clone(), rels, doc.coefficients, doc.degree_bound)
    }
}
