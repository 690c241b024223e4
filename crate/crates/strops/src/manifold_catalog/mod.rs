//! Presentations of the closed manifolds the toolkit computes with:
//! cohomology rings, duality data, orientability, Stiefel-Whitney classes,
//! and the Pontrjagin rings of the fiber monoids.

pub mod facts;
mod homology;
mod splitting;

pub use homology::HomologyClass;

use serde::Serialize;

use crate::graded_algebra::{
    complete_relations, make_ring, Coefficients, GradedElement, Monomial, Ring, Scalar,
};
use crate::Error;

/// A closed manifold's cohomology presentation together with the duality
/// and characteristic-class data the rest of the toolkit consumes.
#[derive(Clone, Debug)]
pub struct ManifoldData {
    pub name: String,
    pub dim: i64,
    pub cohomology: Ring,
    /// Orientability over the integers; every space here is mod-2 orientable.
    pub orientable_z: bool,
    pub simply_connected: bool,
    pub components: usize,
    /// Total Stiefel-Whitney class of the tangent bundle in the mod-2 model.
    pub sw_tangent: Option<GradedElement>,
    /// Total class of the negated tangent bundle, valid through
    /// `sw_known_through`. For the Grassmannians only the degree-one part
    /// is recorded; higher queries must error rather than guess.
    pub sw_minus_tangent: Option<GradedElement>,
    pub sw_known_through: i64,
    /// Top-degree functional: support monomials with weights. Connected
    /// spaces store the single top monomial with weight one.
    integral_support: Vec<(Monomial, Scalar)>,
    /// Steenrod squares of the ring generators, mod-2 models only.
    pub sq_table: Option<Vec<(String, Vec<GradedElement>)>>,
    /// Renames applied when passing to the shifted intersection presentation.
    pub intersection_names: Vec<(String, String)>,
}

/// A fiber monoid's homology with its Pontrjagin product.
#[derive(Clone, Debug)]
pub struct PontrjaginRing {
    pub name: String,
    pub homology: Ring,
}

impl PontrjaginRing {
    /// Component augmentation `H_0 -> coefficients`: every degree-zero
    /// monomial is a component class and maps to one.
    pub fn augmentation(&self, x: &GradedElement) -> Scalar {
        let c = self.homology.coefficients();
        let mut acc = c.zero();
        for (m, coeff) in x.terms() {
            if self.homology.monomial_degree(m) == 0 {
                acc = c.add(&acc, coeff);
            }
        }
        acc
    }
}

/// Total Stiefel-Whitney class of a twisting virtual bundle, living in the
/// ring of the space it acts on.
#[derive(Clone, Debug)]
pub struct VirtualBundleTwist {
    pub base_name: String,
    pub ring: Ring,
    pub sw_total: GradedElement,
    pub known_through: i64,
}

impl VirtualBundleTwist {
    /// The degree-`k` class `w_k` of the twist.
    pub fn class(&self, k: i64) -> Result<GradedElement, Error> {
        if k > self.known_through {
            return Err(Error::SwClassUnavailable {
                space: self.base_name.clone(),
                degree: k,
            });
        }
        Ok(self.sw_total.degree_component(k))
    }

    /// A twist with total class one: the orientable/trivial case.
    pub fn trivial(base_name: &str, ring: &Ring) -> VirtualBundleTwist {
        VirtualBundleTwist {
            base_name: base_name.to_string(),
            ring: ring.clone(),
            sw_total: ring.one(),
            known_through: i64::MAX,
        }
    }
}

fn default_bound(extra: i64) -> i64 {
    let env = std::env::var("STROPS_DEGREE_BOUND")
        .ok()
        .and_then(|s| s.parse::<i64>().ok())
        .unwrap_or(16);
    env.max(extra)
}

/// Spheres `S^n`: one positive-degree generator squaring to zero.
pub fn sphere(n: u32, coeffs: Coefficients) -> Result<ManifoldData, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("sphere dimension must be >= 1".into()));
    }
    let f = &facts::SPHERES;
    let name = format!("s{n}");
    let bound = default_bound(2 * i64::from(n) + 2);
    let rel = format!("{}^2", f.generator_name);
    let ring = make_ring(&[(f.generator_name.as_str(), i64::from(n))], &[rel.as_str()], coeffs, bound)?;
    let top = ring.basis_in_degree(i64::from(n))?;
    let sw = coeffs.char_two().then(|| ring.one());
    let m = ManifoldData {
        name,
        dim: i64::from(n),
        cohomology: ring.clone(),
        orientable_z: f.orientable_over_integers.holds(n),
        simply_connected: n >= f.simply_connected_from,
        components: 1,
        sw_tangent: sw.clone(),
        sw_minus_tangent: sw,
        sw_known_through: i64::from(n),
        integral_support: vec![(top[0].clone(), coeffs.one())],
        sq_table: coeffs.char_two().then(|| {
            let g = ring.gen_by_name(&f.generator_name).unwrap();
            let mut sqs = vec![g];
            sqs.extend(std::iter::repeat(ring.zero()).take(n as usize));
            vec![(f.generator_name.clone(), sqs)]
        }),
        intersection_names: Vec::new(),
    };
    m.verify_duality()?;
    Ok(m)
}

/// Complex projective spaces: a truncated polynomial ring on a degree-two
/// class.
pub fn cpn(n: u32, coeffs: Coefficients) -> Result<ManifoldData, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("cpn requires n >= 1".into()));
    }
    let f = &facts::CPN;
    let gname = f.generator.name.as_str();
    let bound = default_bound(2 * i64::from(n) + 2);
    let rel = format!("{gname}^{}", n + 1);
    let ring = make_ring(&[(gname, f.generator.degree)], &[rel.as_str()], coeffs, bound)?;
    let top = ring.basis_in_degree(2 * i64::from(n))?;
    let (sw_t, sw_mt) = if coeffs.char_two() {
        let g = ring.gen_by_name(gname)?;
        let one_plus = ring.one().add(&g)?;
        let sw = one_plus.pow(n + 1)?;
        let swm = invert_total_class(&sw)?;
        (Some(sw), Some(swm))
    } else {
        (None, None)
    };
    // Sq(x) = x + x^2 for the degree-two class: Sq^1 x vanishes
    let sq_table = if coeffs.char_two() {
        let g = ring.gen_by_name(gname)?;
        Some(vec![(
            gname.to_string(),
            vec![g.clone(), ring.zero(), g.pow(2)?],
        )])
    } else {
        None
    };
    let m = ManifoldData {
        name: format!("cp{n}"),
        dim: 2 * i64::from(n),
        cohomology: ring,
        orientable_z: f.orientable_over_integers.holds(n),
        simply_connected: f.simply_connected,
        components: 1,
        sw_tangent: sw_t,
        sw_minus_tangent: sw_mt,
        sw_known_through: 2 * i64::from(n),
        integral_support: vec![(top[0].clone(), coeffs.one())],
        sq_table,
        intersection_names: vec![(gname.to_string(), f.intersection_generator_name.clone())],
    };
    m.verify_duality()?;
    Ok(m)
}

/// Real projective spaces, mod-2 coefficients.
pub fn rpn(n: u32) -> Result<ManifoldData, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("rpn requires n >= 1".into()));
    }
    let f = &facts::RPN;
    let coeffs = f.coefficients;
    let gname = f.generator.name.as_str();
    let bound = default_bound(i64::from(n) + 2);
    let rel = format!("{gname}^{}", n + 1);
    let ring = make_ring(&[(gname, f.generator.degree)], &[rel.as_str()], coeffs, bound)?;
    let top = ring.basis_in_degree(i64::from(n))?;
    let a = ring.gen_by_name(gname)?;
    let sw = ring.one().add(&a)?.pow(n + 1)?;
    let sw_minus = invert_total_class(&sw)?;
    let m = ManifoldData {
        name: format!("rp{n}"),
        dim: i64::from(n),
        cohomology: ring.clone(),
        orientable_z: f.orientable_over_integers.holds(n),
        simply_connected: f.simply_connected,
        components: 1,
        sw_tangent: Some(sw),
        sw_minus_tangent: Some(sw_minus),
        sw_known_through: i64::from(n),
        integral_support: vec![(top[0].clone(), coeffs.one())],
        sq_table: Some(vec![(
            gname.to_string(),
            vec![a.clone(), a.pow(2)?],
        )]),
        intersection_names: vec![(gname.to_string(), f.intersection_generator_name.clone())],
    };
    m.verify_duality()?;
    Ok(m)
}

/// Grassmannians of 2-planes in `R^n`, `n >= 3`, mod-2 coefficients.
///
/// Relations are the degree `n-1` and `n` components of the formal inverse
/// of the tautological total class, completed to a confluent rewrite system
/// before presentation.
pub fn grassmannian2(n: u32) -> Result<ManifoldData, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter("grassmannian2 requires n >= 3".into()));
    }
    let f = &facts::GR2;
    let coeffs = f.coefficients;
    let dim = 2 * (i64::from(n) - 2);
    let bound = default_bound(2 * i64::from(n));
    let free = Ring::make(f.generators.clone(), vec![], coeffs, bound)?;
    let wbar = inverse_class_components(&free, i64::from(n))?;
    let rels = vec![
        wbar[(n - 1) as usize].terms().to_vec(),
        wbar[n as usize].terms().to_vec(),
    ];
    let completed = complete_relations(&f.generators, rels, coeffs, bound)?;
    let ring = Ring::make(f.generators.clone(), completed, coeffs, bound)?;
    let top = ring.basis_in_degree(dim)?;
    if top.len() != 1 {
        return Err(Error::Domain(format!(
            "gr2,{n} has unexpected top-degree rank {}",
            top.len()
        )));
    }
    let w1_minus = if n % 2 == 0 {
        ring.parse(&f.w1_of_minus_tangent.n_even)?
    } else {
        ring.parse(&f.w1_of_minus_tangent.n_odd)?
    };
    let sq_table = {
        let universal = splitting::gr2_generator_squares()?;
        let mut table = Vec::new();
        for (g, comps) in universal {
            let mut sqs = Vec::new();
            for c in comps {
                sqs.push(ring.parse(&c)?);
            }
            table.push((g, sqs));
        }
        Some(table)
    };
    let m = ManifoldData {
        name: format!("gr2,{n}"),
        dim,
        cohomology: ring.clone(),
        orientable_z: f.orientable_over_integers.holds(n),
        simply_connected: f.simply_connected,
        components: 1,
        sw_tangent: None,
        sw_minus_tangent: Some(ring.one().add(&w1_minus)?),
        sw_known_through: 1,
        integral_support: vec![(top[0].clone(), coeffs.one())],
        sq_table,
        intersection_names: Vec::new(),
    };
    m.verify_duality()?;
    Ok(m)
}

/// The group O(2) as a closed 1-manifold: two disjoint circles.
pub fn two_circles() -> Result<ManifoldData, Error> {
    let f = &facts::O2.manifold;
    let coeffs = f.coefficients;
    let bound = default_bound(48);
    let free = Ring::make(f.generators.clone(), vec![], coeffs, bound)?;
    let rels = f
        .relations
        .iter()
        .map(|r| Ok(free.parse(r)?.terms().to_vec()))
        .collect::<Result<Vec<_>, Error>>()?;
    let ring = Ring::make(f.generators.clone(), rels, coeffs, bound)?;
    let mut integral_support = Vec::new();
    for s in &f.integral_support {
        let e = ring.parse(s)?;
        let (m, c) = e.terms()[0].clone();
        integral_support.push((m, c));
    }
    let v = ring.gen_by_name("v")?;
    let u = ring.gen_by_name("u")?;
    let m = ManifoldData {
        name: "o2".into(),
        dim: f.dim,
        cohomology: ring.clone(),
        orientable_z: f.orientable_over_integers.holds(0),
        simply_connected: f.simply_connected,
        components: f.components,
        sw_tangent: Some(ring.one()),
        sw_minus_tangent: Some(ring.one()),
        sw_known_through: f.dim,
        integral_support,
        sq_table: Some(vec![
            ("u".into(), vec![u]),
            ("v".into(), vec![v, ring.zero()]),
        ]),
        intersection_names: Vec::new(),
    };
    m.verify_duality()?;
    Ok(m)
}

/// Künneth product of two catalog manifolds over the same coefficients.
pub fn product(a: &ManifoldData, b: &ManifoldData) -> Result<ManifoldData, Error> {
    let ring = a.cohomology.tensor(&b.cohomology)?;
    let (na, nb) = (a.cohomology.num_gens(), b.cohomology.num_gens());
    let embed_a = |m: &Monomial| -> Monomial {
        let mut e = m.0.clone();
        e.extend(std::iter::repeat(0).take(nb));
        Monomial(e)
    };
    let embed_b = |m: &Monomial| -> Monomial {
        let mut e = vec![0u16; na];
        e.extend_from_slice(&m.0);
        Monomial(e)
    };
    let embed_elem_a = |x: &GradedElement| -> GradedElement {
        ring.element_from_terms(x.terms().iter().map(|(m, c)| (embed_a(m), c.clone())).collect())
    };
    let embed_elem_b = |x: &GradedElement| -> GradedElement {
        ring.element_from_terms(x.terms().iter().map(|(m, c)| (embed_b(m), c.clone())).collect())
    };
    let coeffs = ring.coefficients();
    let mut integral_support = Vec::new();
    for (ma, ca) in &a.integral_support {
        for (mb, cb) in &b.integral_support {
            let mut e = ma.0.clone();
            e.extend_from_slice(&mb.0);
            integral_support.push((Monomial(e), coeffs.mul(ca, cb)));
        }
    }
    let sw_pair = |xa: &Option<GradedElement>, xb: &Option<GradedElement>| match (xa, xb) {
        (Some(xa), Some(xb)) => embed_elem_a(xa).mul(&embed_elem_b(xb)).ok(),
        _ => None,
    };
    let sw_tangent = sw_pair(&a.sw_tangent, &b.sw_tangent);
    let sw_minus_tangent = sw_pair(&a.sw_minus_tangent, &b.sw_minus_tangent);
    // the product total class is trustworthy only while both factors are
    let sw_known_through = a.sw_known_through.min(b.sw_known_through);
    let sq_table = match (&a.sq_table, &b.sq_table) {
        (Some(ta), Some(tb)) => {
            let mut table = Vec::new();
            for (g, sqs) in ta {
                let name = ring.generators()[a.cohomology.gen_index(g).unwrap()].name.clone();
                table.push((name, sqs.iter().map(&embed_elem_a).collect()));
            }
            for (g, sqs) in tb {
                let name =
                    ring.generators()[na + b.cohomology.gen_index(g).unwrap()].name.clone();
                table.push((name, sqs.iter().map(&embed_elem_b).collect()));
            }
            Some(table)
        }
        _ => None,
    };
    let m = ManifoldData {
        name: format!("{}x{}", a.name, b.name),
        dim: a.dim + b.dim,
        cohomology: ring,
        orientable_z: a.orientable_z && b.orientable_z,
        simply_connected: a.simply_connected && b.simply_connected,
        components: a.components * b.components,
        sw_tangent,
        sw_minus_tangent,
        sw_known_through,
        integral_support,
        sq_table,
        intersection_names: a
            .intersection_names
            .iter()
            .chain(&b.intersection_names)
            .cloned()
            .collect(),
    };
    m.verify_duality()?;
    Ok(m)
}

/// Standard-space constructor over each family's natural coefficients.
#[derive(Clone, Debug, PartialEq)]
pub enum StandardSpace {
    Sphere(u32),
    Cpn(u32),
    Rpn(u32),
    Product(Box<StandardSpace>, Box<StandardSpace>),
}

pub fn standard_space(kind: &StandardSpace) -> Result<ManifoldData, Error> {
    match kind {
        StandardSpace::Sphere(n) => sphere(*n, Coefficients::Integers),
        StandardSpace::Cpn(n) => cpn(*n, Coefficients::Integers),
        StandardSpace::Rpn(n) => rpn(*n),
        StandardSpace::Product(a, b) => {
            let a = standard_space(a)?;
            let b = standard_space(b)?;
            product(&a, &b)
        }
    }
}

/// Fiber monoids the towers use.
#[derive(Clone, Debug, PartialEq)]
pub enum FiberKind {
    Circle,
    O2,
    OmegaSphere { n: u32, truncation: Option<u32> },
    Point,
}

pub fn fiber_monoid(kind: &FiberKind, coeffs: Coefficients) -> Result<PontrjaginRing, Error> {
    // fiber rings are small; a generous bound keeps tensor products from
    // being capped below the base's own window
    let bound = default_bound(48);
    match kind {
        FiberKind::Circle => {
            let homology = make_ring(&[("t", 1)], &["t^2"], coeffs, bound)?;
            Ok(PontrjaginRing {
                name: "s1".into(),
                homology,
            })
        }
        FiberKind::O2 => {
            let f = &facts::O2.pontrjagin;
            if coeffs != f.coefficients {
                return Err(Error::InvalidParameter(
                    "the O(2) fiber is recorded mod 2".into(),
                ));
            }
            let free = Ring::make(f.generators.clone(), vec![], coeffs, bound)?;
            let rels = f
                .relations
                .iter()
                .map(|r| Ok(free.parse(r)?.terms().to_vec()))
                .collect::<Result<Vec<_>, Error>>()?;
            let homology = Ring::make(f.generators.clone(), rels, coeffs, bound)?;
            Ok(PontrjaginRing {
                name: "o2".into(),
                homology,
            })
        }
        FiberKind::OmegaSphere { n, truncation } => {
            if *n < 2 {
                return Err(Error::InvalidParameter(
                    "based loops need a sphere of dimension >= 2".into(),
                ));
            }
            let t = truncation.ok_or_else(|| {
                Error::InvalidParameter(
                    "omega_sphere has infinite-dimensional homology; a truncation is required"
                        .into(),
                )
            })?;
            let d = i64::from(*n) - 1;
            let rel = format!("x^{t}");
            let homology = make_ring(
                &[("x", d)],
                &[rel.as_str()],
                coeffs,
                default_bound(d * i64::from(t) + 2),
            )?;
            Ok(PontrjaginRing {
                name: format!("omega_s{n}"),
                homology,
            })
        }
        FiberKind::Point => {
            let homology = make_ring(&[], &[], coeffs, bound)?;
            Ok(PontrjaginRing {
                name: "point".into(),
                homology,
            })
        }
    }
}

/// The twist by the negated tangent bundle of `m`, in `m`'s own ring.
pub fn minus_tangent_twist(m: &ManifoldData) -> Result<VirtualBundleTwist, Error> {
    let sw = m
        .sw_minus_tangent
        .clone()
        .ok_or_else(|| Error::SwClassUnavailable {
            space: m.name.clone(),
            degree: 0,
        })?;
    Ok(VirtualBundleTwist {
        base_name: m.name.clone(),
        ring: m.cohomology.clone(),
        sw_total: sw,
        known_through: m.sw_known_through,
    })
}

/// Pull a base twist back to the product `base x fiber` (base factor first).
pub fn pullback_twist_to_product(
    twist: &VirtualBundleTwist,
    product: &ManifoldData,
    base_gens: usize,
) -> Result<VirtualBundleTwist, Error> {
    let total_gens = product.cohomology.num_gens();
    let terms = twist
        .sw_total
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = m.0.clone();
            assert_eq!(e.len(), base_gens);
            e.extend(std::iter::repeat(0).take(total_gens - base_gens));
            (Monomial(e), c.clone())
        })
        .collect();
    Ok(VirtualBundleTwist {
        base_name: twist.base_name.clone(),
        ring: product.cohomology.clone(),
        sw_total: product.cohomology.element_from_terms(terms),
        known_through: twist.known_through,
    })
}

/// Components of the formal inverse of a total class `1 + g_1 + g_2 + ...`
/// built from all ring generators, through degree `max_degree`.
pub fn inverse_class_components(
    ring: &Ring,
    max_degree: i64,
) -> Result<Vec<GradedElement>, Error> {
    let mut total = ring.one();
    for i in 0..ring.num_gens() {
        total = total.add(&ring.gen_elem(i))?;
    }
    invert_total_class_components(&total, max_degree)
}

/// Inverse of a total class with unit degree-zero part, inside its own ring.
pub fn invert_total_class(x: &GradedElement) -> Result<GradedElement, Error> {
    let ring = x.ring().clone();
    let comps = invert_total_class_components(x, ring.degree_bound())?;
    let mut acc = ring.zero();
    for c in comps {
        acc = acc.add(&c)?;
    }
    Ok(acc)
}

fn invert_total_class_components(
    x: &GradedElement,
    max_degree: i64,
) -> Result<Vec<GradedElement>, Error> {
    let ring = x.ring().clone();
    let mut comps: Vec<GradedElement> = vec![ring.one()];
    for k in 1..=max_degree {
        // y_k = -(sum_{j=1..k} x_j y_{k-j})
        let mut acc = ring.zero();
        for j in 1..=k {
            let xj = x.degree_component(j);
            if xj.is_zero() {
                continue;
            }
            acc = acc.add(&xj.mul(&comps[(k - j) as usize])?)?;
        }
        comps.push(acc.neg());
    }
    Ok(comps)
}

/// Serialized form of a catalog manifold: the presentation schema extended
/// by dimension, orientability, the tangent total class, and the pairing
/// matrices per degree.
#[derive(Debug, Serialize)]
pub struct ManifoldJson {
    #[serde(flatten)]
    pub presentation: crate::graded_algebra::RingPresentationJson,
    pub dim: i64,
    pub orientable: std::collections::BTreeMap<String, bool>,
    pub sw_tangent: Option<String>,
    /// Rows of the cup pairing against the complementary degree, one block
    /// per degree `0..=dim`.
    pub pairing: Vec<Vec<Vec<i64>>>,
}

impl ManifoldData {
    pub fn to_json(&self) -> Result<ManifoldJson, Error> {
        let mut orientable = std::collections::BTreeMap::new();
        orientable.insert("integers".to_string(), self.orientable_z);
        orientable.insert("mod_2".to_string(), true);
        let mut pairing = Vec::new();
        for k in 0..=self.dim {
            let m = self.pairing_matrix(k)?;
            let mut rows = Vec::new();
            for i in 0..m.rows {
                let mut row = Vec::new();
                for j in 0..m.cols {
                    row.push(m.get(i, j).to_i64().unwrap_or(0));
                }
                rows.push(row);
            }
            pairing.push(rows);
        }
        Ok(ManifoldJson {
            presentation: self.cohomology.to_json(),
            dim: self.dim,
            orientable,
            sw_tangent: self.sw_tangent.as_ref().map(|x| self.cohomology.print(x)),
            pairing,
        })
    }
}

/// Facts about the two components of the adjoint O(2) bundle at level `n`,
/// read straight from the catalog data.
#[derive(Clone, Debug, Serialize)]
pub struct AdjointComponent {
    pub name: String,
    pub dim: i64,
    pub orientable: bool,
}

pub fn adjoint_o2_components(n: u32) -> Vec<AdjointComponent> {
    let f = &facts::GR2.adjoint_o2_bundle;
    f.components
        .iter()
        .map(|name| AdjointComponent {
            name: name.clone(),
            dim: 2 * i64::from(n) + f.component_dim_offset_from_2n,
            orientable: f.component_orientable.holds(n),
        })
        .collect()
}
