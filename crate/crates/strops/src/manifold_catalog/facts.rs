//! Family fact files shipped with the catalog.
//!
//! Orientability rules, the degree-one class of the negated tangent bundle
//! of the Grassmannians, and the adjoint-bundle component facts are inputs
//! recorded here, not derived quantities.

use std::sync::LazyLock;

use serde::Deserialize;

use crate::graded_algebra::{Coefficients, Generator};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityRule {
    Always,
    Never,
    NEven,
    NOdd,
}

impl ParityRule {
    pub fn holds(self, n: u32) -> bool {
        match self {
            ParityRule::Always => true,
            ParityRule::Never => false,
            ParityRule::NEven => n % 2 == 0,
            ParityRule::NOdd => n % 2 == 1,
        }
    }
}

#[derive(Debug, Deserialize)]
pub struct Gr2Facts {
    pub family: String,
    pub description: String,
    pub coefficients: Coefficients,
    pub generators: Vec<Generator>,
    pub orientable_over_integers: ParityRule,
    pub simply_connected: bool,
    pub w1_of_minus_tangent: W1Rule,
    pub adjoint_o2_bundle: AdjointO2Facts,
}

#[derive(Debug, Deserialize)]
pub struct W1Rule {
    pub n_even: String,
    pub n_odd: String,
}

#[derive(Debug, Deserialize)]
pub struct AdjointO2Facts {
    pub components: Vec<String>,
    pub component_dim_offset_from_2n: i64,
    pub component_orientable: ParityRule,
    pub h1_rank: usize,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Deserialize)]
pub struct O2Facts {
    pub family: String,
    pub manifold: O2ManifoldFacts,
    pub pontrjagin: O2PontrjaginFacts,
}

#[derive(Debug, Deserialize)]
pub struct O2ManifoldFacts {
    pub coefficients: Coefficients,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
    pub dim: i64,
    pub components: usize,
    pub orientable_over_integers: ParityRule,
    pub simply_connected: bool,
    pub integral_support: Vec<String>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Deserialize)]
pub struct O2PontrjaginFacts {
    pub coefficients: Coefficients,
    pub generators: Vec<Generator>,
    pub relations: Vec<String>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Deserialize)]
pub struct ProjectiveFacts {
    pub family: String,
    pub coefficients: Coefficients,
    pub generator: Generator,
    pub orientable_over_integers: ParityRule,
    pub simply_connected: bool,
    pub sw_tangent_mod2: String,
    pub intersection_generator_name: String,
}

#[derive(Debug, Deserialize)]
pub struct SphereFacts {
    pub family: String,
    pub generator_name: String,
    pub orientable_over_integers: ParityRule,
    pub simply_connected_from: u32,
    pub sw_tangent_mod2: String,
}

pub static GR2: LazyLock<Gr2Facts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../../data/gr2.json")).expect("gr2.json parses")
});

pub static O2: LazyLock<O2Facts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../../data/o2.json")).expect("o2.json parses")
});

pub static CPN: LazyLock<ProjectiveFacts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../../data/cpn.json")).expect("cpn.json parses")
});

pub static RPN: LazyLock<ProjectiveFacts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../../data/rpn.json")).expect("rpn.json parses")
});

pub static SPHERES: LazyLock<SphereFacts> = LazyLock::new(|| {
    serde_json::from_str(include_str!("../../data/spheres.json")).expect("spheres.json parses")
});
