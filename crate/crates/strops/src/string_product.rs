//! The shifted intersection ring, string products on trivial fiberwise
//! monoids, fiberwise module actions, the bigraded second-page algebra,
//! and the structural homomorphism verifiers.

use std::collections::BTreeMap;

use crate::graded_algebra::{GradedElement, Generator, Monomial, Ring, Scalar};
use crate::manifold_catalog::{HomologyClass, ManifoldData, PontrjaginRing};
use crate::Error;

/// `H_{*+d}(M)` with the intersection product, presented as the cohomology
/// ring with negated degrees: duality transport of the cup product.
#[derive(Clone, Debug)]
pub struct IntersectionRing {
    pub base: ManifoldData,
    pub ring: Ring,
}

/// Build the shifted intersection ring of a catalog manifold.
///
/// The product is `a . b = PD(PD^{-1}(a) cup PD^{-1}(b))`; since classes are
/// presented by their duals the transported multiplication is cup again,
/// now in non-positive degrees with the fundamental class as unit.
pub fn intersection_ring(m: &ManifoldData) -> Result<IntersectionRing, Error> {
    if !m.duality_available() {
        return Err(Error::DualityUnavailable {
            space: m.name.clone(),
        });
    }
    let gens: Vec<Generator> = m
        .cohomology
        .generators()
        .iter()
        .map(|g| {
            let name = m
                .intersection_names
                .iter()
                .find(|(from, _)| *from == g.name)
                .map(|(_, to)| to.clone())
                .unwrap_or_else(|| g.name.clone());
            Generator {
                name,
                degree: -g.degree,
            }
        })
        .collect();
    let ring = Ring::make(
        gens,
        m.cohomology.relation_terms().to_vec(),
        m.cohomology.coefficients(),
        m.cohomology.degree_bound(),
    )?;
    Ok(IntersectionRing {
        base: m.clone(),
        ring,
    })
}

impl IntersectionRing {
    /// Reinterpret a cohomology element in the shifted presentation.
    pub fn from_cohomology(&self, x: &GradedElement) -> GradedElement {
        self.ring.element_from_terms(x.terms().to_vec())
    }

    /// The cohomology element presenting a shifted class.
    pub fn to_cohomology(&self, x: &GradedElement) -> GradedElement {
        self.base.cohomology.element_from_terms(x.terms().to_vec())
    }

    /// The homology class (dual-basis coordinates) of a shifted element of
    /// degree `-j`: it lives in `H_{d-j}`.
    pub fn to_homology(&self, x: &GradedElement) -> Result<HomologyClass, Error> {
        self.base.pd_coh_to_hom(&self.to_cohomology(x))
    }

    /// Intersection product computed the long way: transport both factors
    /// to homology, solve the pairing back, cup, and return. Used to
    /// cross-check the presented multiplication.
    pub fn intersect_via_pd(
        &self,
        a: &GradedElement,
        b: &GradedElement,
    ) -> Result<GradedElement, Error> {
        let ya = self.to_homology(a)?;
        let yb = self.to_homology(b)?;
        let xa = self.base.pd_hom_to_coh(&ya)?;
        let xb = self.base.pd_hom_to_coh(&yb)?;
        let cup = xa.mul(&xb)?;
        Ok(self.from_cohomology(&cup))
    }

    /// The fundamental class, the unit of the intersection product.
    pub fn fundamental(&self) -> GradedElement {
        self.ring.one()
    }

    /// Ring map to the ground ring: the degree-zero coefficient.
    pub fn counit(&self, x: &GradedElement) -> Scalar {
        x.coefficient(&Monomial::one(self.ring.num_gens()))
    }
}

/// Which fiberwise monoids the toolkit computes exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum MonoidShape {
    TrivialProduct,
    AdjointO2 { n: u32 },
}

#[derive(Clone, Debug)]
pub struct FiberwiseMonoidModel {
    pub base: ManifoldData,
    pub fiber: PontrjaginRing,
    pub shape: MonoidShape,
}

impl FiberwiseMonoidModel {
    pub fn trivial(base: ManifoldData, fiber: PontrjaginRing) -> Self {
        FiberwiseMonoidModel {
            base,
            fiber,
            shape: MonoidShape::TrivialProduct,
        }
    }
}

/// The string ring of a trivial fiberwise monoid: shifted intersection ring
/// of the base tensored with the Pontrjagin ring of the fiber. Non-trivial
/// shapes are rejected here; they only carry a second-page computation.
pub fn string_ring(model: &FiberwiseMonoidModel, window: (i64, i64)) -> Result<Ring, Error> {
    if model.shape != MonoidShape::TrivialProduct {
        return Err(Error::Domain(
            "only trivial-product monoids have an exact string ring; \
             use the second-page computation or the adjoint catalog facts"
                .into(),
        ));
    }
    if model.base.cohomology.coefficients() != model.fiber.homology.coefficients() {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::CoefficientMismatch,
        ));
    }
    let needed = window.0.abs().max(window.1.abs());
    if needed > model.base.cohomology.degree_bound().min(model.fiber.homology.degree_bound()) {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::DegreeOutsideBound {
                degree: needed,
                bound: model
                    .base
                    .cohomology
                    .degree_bound()
                    .min(model.fiber.homology.degree_bound()),
            },
        ));
    }
    let ir = intersection_ring(&model.base)?;
    Ok(ir.ring.tensor(&model.fiber.homology)?)
}

/// Split a string-ring monomial into its base and fiber factors.
pub fn split_string_monomial(
    string_ring: &Ring,
    base_gens: usize,
    m: &Monomial,
) -> (Monomial, Monomial) {
    let _ = string_ring;
    let base = Monomial(m.0[..base_gens].to_vec());
    let fiber = Monomial(m.0[base_gens..].to_vec());
    (base, fiber)
}

/// A graded module over a Pontrjagin ring, given by generator actions on a
/// finite basis.
#[derive(Clone, Debug)]
pub struct FiberModule {
    pub name: String,
    pub fiber: Ring,
    /// Basis labels with homological degrees.
    pub basis: Vec<(String, i64)>,
    /// `gen_action[g][b]` is the combination produced by the `g`-th fiber
    /// generator acting on basis element `b`.
    gen_action: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl FiberModule {
    /// The fiber acting on itself within a degree window.
    pub fn self_module(fiber: &Ring, window: (i64, i64)) -> Result<FiberModule, Error> {
        let mut basis = Vec::new();
        let mut monos = Vec::new();
        for d in window.0..=window.1 {
            for m in fiber.basis_in_degree(d)? {
                basis.push((fiber.print(&fiber.monomial_elem(m.clone())), d));
                monos.push(m);
            }
        }
        let mut gen_action = Vec::new();
        for g in 0..fiber.num_gens() {
            let ge = fiber.gen_elem(g);
            let mut rows = Vec::new();
            for m in &monos {
                let prod = ge.mul(&fiber.monomial_elem(m.clone()))?;
                rows.push(combo_in_basis(&prod, &monos, window));
            }
            gen_action.push(rows);
        }
        Ok(FiberModule {
            name: "self".into(),
            fiber: fiber.clone(),
            basis,
            gen_action,
        })
    }

    /// Rank-one module where every positive-degree generator acts as zero
    /// and degree-zero generators act through the component augmentation.
    pub fn trivial_rank_one(fiber: &Ring) -> FiberModule {
        let c = fiber.coefficients();
        let mut gen_action = Vec::new();
        for g in fiber.generators() {
            if g.degree == 0 {
                gen_action.push(vec![vec![(0, c.one())]]);
            } else {
                gen_action.push(vec![vec![]]);
            }
        }
        FiberModule {
            name: "trivial".into(),
            fiber: fiber.clone(),
            basis: vec![("m".into(), 0)],
            gen_action,
        }
    }

    /// Free module on `rank` degree-zero generators, truncated to the
    /// window: products landing outside it are cut to zero.
    pub fn free_truncated(fiber: &Ring, rank: usize, window: (i64, i64)) -> Result<FiberModule, Error> {
        let single = FiberModule::self_module(fiber, window)?;
        let copies = rank;
        let n = single.basis.len();
        let mut basis = Vec::new();
        for r in 0..copies {
            for (label, d) in &single.basis {
                basis.push((format!("{label}[{r}]"), *d));
            }
        }
        let mut gen_action = Vec::new();
        for g in 0..fiber.num_gens() {
            let mut rows = Vec::new();
            for r in 0..copies {
                for b in 0..n {
                    rows.push(
                        single.gen_action[g][b]
                            .iter()
                            .map(|(i, c)| (r * n + i, c.clone()))
                            .collect(),
                    );
                }
            }
            gen_action.push(rows);
        }
        Ok(FiberModule {
            name: format!("free_rank{rank}"),
            fiber: fiber.clone(),
            basis,
            gen_action,
        })
    }

    /// Action of a fiber ring element on a basis element, composing
    /// generator actions.
    pub fn act(&self, f: &GradedElement, b: usize) -> Result<Vec<(usize, Scalar)>, Error> {
        let c = self.fiber.coefficients();
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (m, coeff) in f.terms() {
            let mut current: Vec<(usize, Scalar)> = vec![(b, coeff.clone())];
            // apply generator factors in declaration order, highest first so
            // the composite matches the monomial read left to right
            for (g, &e) in m.0.iter().enumerate().rev() {
                for _ in 0..e {
                    let mut next: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (idx, co) in &current {
                        for (j, cj) in &self.gen_action[g][*idx] {
                            let entry = next.entry(*j).or_insert_with(|| c.zero());
                            *entry = c.add(entry, &c.mul(co, cj));
                        }
                    }
                    current = next
                        .into_iter()
                        .filter(|(_, v)| !c.is_zero(v))
                        .collect();
                }
            }
            for (idx, co) in current {
                let entry = acc.entry(idx).or_insert_with(|| c.zero());
                *entry = c.add(entry, &co);
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !c.is_zero(v)).collect())
    }
}

fn combo_in_basis(
    x: &GradedElement,
    basis: &[Monomial],
    window: (i64, i64),
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::new();
    for (m, c) in x.terms() {
        let d = x.ring().monomial_degree(m);
        if d < window.0 || d > window.1 {
            continue; // truncated away
        }
        if let Some(i) = basis.iter().position(|b| b == m) {
            out.push((i, c.clone()));
        }
    }
    out
}

/// The module `H_*(M) shifted tensor module-fiber` over the string ring,
/// with the action table computed on basis elements and associativity
/// checked exhaustively within the window.
pub struct ModuleActionTable {
    /// Labels of acting basis elements (string-ring monomials).
    pub algebra_basis: Vec<String>,
    /// Labels of module basis elements.
    pub module_basis: Vec<String>,
    /// Action of each algebra basis element on each module basis element.
    pub table: BTreeMap<(String, String), Vec<(String, Scalar)>>,
    pub associativity_checked: usize,
    pub unit_checked: bool,
}

pub fn module_structure(
    model: &FiberwiseMonoidModel,
    module_fiber: &FiberModule,
    window: (i64, i64),
) -> Result<ModuleActionTable, Error> {
    if model.shape != MonoidShape::TrivialProduct {
        return Err(Error::Domain(
            "module actions are computed for trivial-product shapes".into(),
        ));
    }
    if module_fiber.fiber != model.fiber.homology {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::CoefficientMismatch,
        ));
    }
    let ir = intersection_ring(&model.base)?;
    let c = ir.ring.coefficients();
    // algebra basis: pairs of intersection monomials and fiber monomials
    let a_ring = string_ring(model, window)?;
    let base_gens = ir.ring.num_gens();
    let mut algebra: Vec<Monomial> = Vec::new();
    for d in window.0..=window.1 {
        algebra.extend(a_ring.basis_in_degree(d)?);
    }
    // module basis: pairs (intersection monomial, module basis index)
    let mut module: Vec<(Monomial, usize)> = Vec::new();
    for d in window.0..=0 {
        for m in ir.ring.basis_in_degree(d)? {
            for (j, (_, dj)) in module_fiber.basis.iter().enumerate() {
                let total = d + dj;
                if total >= window.0 && total <= window.1 {
                    module.push((m.clone(), j));
                }
            }
        }
    }
    let module_label = |(m, j): &(Monomial, usize)| -> String {
        format!(
            "{}(x){}",
            ir.ring.print(&ir.ring.monomial_elem(m.clone())),
            module_fiber.basis[*j].0
        )
    };
    // action of an algebra basis monomial on a module basis element
    let act =
        |am: &Monomial, mm: &(Monomial, usize)| -> Result<Vec<((Monomial, usize), Scalar)>, Error> {
            let (ab, af) = split_string_monomial(&a_ring, base_gens, am);
            let fiber_part = model.fiber.homology.monomial_elem(af.clone());
            let sign_pow = model.fiber.homology.monomial_degree(&af)
                * ir.ring.monomial_degree(&mm.0);
            let sign = if sign_pow.rem_euclid(2) == 1 && c.exterior_odd() {
                c.neg(&c.one())
            } else {
                c.one()
            };
            let base_prod = ir
                .ring
                .monomial_elem(ab)
                .mul(&ir.ring.monomial_elem(mm.0.clone()))?;
            let fib = module_fiber.act(&fiber_part, mm.1)?;
            let mut out = Vec::new();
            for (bm, bc) in base_prod.terms() {
                for (j, cj) in &fib {
                    let total =
                        ir.ring.monomial_degree(bm) + module_fiber.basis[*j].1;
                    if total < window.0 || total > window.1 {
                        continue;
                    }
                    out.push(((bm.clone(), *j), c.mul(&c.mul(bc, cj), &sign)));
                }
            }
            Ok(out)
        };

    let mut table = BTreeMap::new();
    for am in &algebra {
        for mm in &module {
            let result = act(am, mm)?;
            table.insert(
                (
                    a_ring.print(&a_ring.monomial_elem(am.clone())),
                    module_label(mm),
                ),
                result
                    .into_iter()
                    .map(|(k, v)| (module_label(&k), v))
                    .collect::<Vec<_>>(),
            );
        }
    }
    // associativity: a.(b.m) = (a.b).m whenever everything stays in window
    let mut checked = 0usize;
    for a in &algebra {
        for b in &algebra {
            let ab = a_ring
                .monomial_elem(a.clone())
                .mul(&a_ring.monomial_elem(b.clone()))?;
            let ab_deg = a_ring.monomial_degree(a) + a_ring.monomial_degree(b);
            if ab_deg < window.0 || ab_deg > window.1 {
                continue;
            }
            for mm in &module {
                // b.m first
                let bm = act(b, mm)?;
                let mut lhs: BTreeMap<(Monomial, usize), Scalar> = BTreeMap::new();
                for (k, v) in bm {
                    for (k2, v2) in act(a, &k)? {
                        let e = lhs.entry(k2).or_insert_with(|| c.zero());
                        *e = c.add(e, &c.mul(&v, &v2));
                    }
                }
                let mut rhs: BTreeMap<(Monomial, usize), Scalar> = BTreeMap::new();
                for (abm, abc) in ab.terms() {
                    for (k2, v2) in act(abm, mm)? {
                        let e = rhs.entry(k2).or_insert_with(|| c.zero());
                        *e = c.add(e, &c.mul(abc, &v2));
                    }
                }
                lhs.retain(|_, v| !c.is_zero(v));
                rhs.retain(|_, v| !c.is_zero(v));
                if lhs != rhs {
                    return Err(Error::Domain(format!(
                        "module action fails associativity on ({}, {}, {})",
                        a_ring.print(&a_ring.monomial_elem(a.clone())),
                        a_ring.print(&a_ring.monomial_elem(b.clone())),
                        module_label(mm)
                    )));
                }
                checked += 1;
            }
        }
    }
    // unit
    let unit = Monomial::one(a_ring.num_gens());
    let mut unit_ok = true;
    for mm in &module {
        let r = act(&unit, mm)?;
        unit_ok &= r.len() == 1 && r[0].0 == *mm && c.is_unit(&r[0].1);
    }
    Ok(ModuleActionTable {
        algebra_basis: algebra
            .iter()
            .map(|m| a_ring.print(&a_ring.monomial_elem(m.clone())))
            .collect(),
        module_basis: module.iter().map(module_label).collect(),
        table,
        associativity_checked: checked,
        unit_checked: unit_ok,
    })
}

/// The second-quadrant second page `E^2_{-m,n} = H^m(M; H_n(F))` with its
/// bigraded product: cup product with coefficients in the Pontrjagin ring.
///
/// Convergence is multiplicative, but the extension data relating the
/// limit to the string ring is not modeled; the only cross-check exposed
/// is the dimension count per total degree.
pub struct BigradedAlgebraPage {
    pub base: ManifoldData,
    pub fiber: Ring,
    /// `(-m, n)` to the chosen basis of `H^m(M) (x) H_n(F)`.
    pub entries: BTreeMap<(i64, i64), Vec<(Monomial, Monomial)>>,
    /// Present when every differential target vanishes for bidegree
    /// reasons on all pages, so the second page equals the limit as
    /// bigraded vector spaces.
    pub collapse_certificate: Option<String>,
    pub total_degree_bound: i64,
}

pub fn cjy_e2_page(
    m: &ManifoldData,
    f: &PontrjaginRing,
    total_degree_bound: i64,
) -> Result<BigradedAlgebraPage, Error> {
    if !m.simply_connected {
        return Err(Error::Domain(format!(
            "{} is not flagged simply connected; the second-page description requires it",
            m.name
        )));
    }
    if m.cohomology.coefficients() != f.homology.coefficients() {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::CoefficientMismatch,
        ));
    }
    let fiber_support = f.homology.support_bounds();
    let n_max = match fiber_support {
        Some((_, hi)) => hi,
        None => total_degree_bound + m.dim,
    };
    let mut entries = BTreeMap::new();
    for md in 0..=m.dim {
        for n in 0..=n_max {
            if n - md > total_degree_bound {
                continue;
            }
            let coh = m.cohomology.basis_in_degree(md)?;
            let fib = f.homology.basis_in_degree(n)?;
            if coh.is_empty() || fib.is_empty() {
                continue;
            }
            let mut basis = Vec::new();
            for bc in &coh {
                for bf in &fib {
                    basis.push((bc.clone(), bf.clone()));
                }
            }
            entries.insert((-md, n), basis);
        }
    }
    // collapse certificate: differentials d_r land in (-m-r, n+r-1); if the
    // fiber has bounded support we can decide vanishing of every target
    let collapse_certificate = if fiber_support.is_some() {
        let max_r = m.dim + n_max + 1;
        let mut ok = true;
        'outer: for (&(p, q), _) in &entries {
            for r in 2..=max_r {
                let target = (p - r, q + r - 1);
                if target.0 >= -m.dim && target.1 <= n_max && entries.contains_key(&target) {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok.then(|| {
            "every differential on every page has zero target for bidegree reasons; \
             the second page equals the limit as bigraded vector spaces"
                .to_string()
        })
    } else {
        None
    };
    Ok(BigradedAlgebraPage {
        base: m.clone(),
        fiber: f.homology.clone(),
        entries,
        collapse_certificate,
        total_degree_bound,
    })
}

impl BigradedAlgebraPage {
    pub fn dim(&self, bidegree: (i64, i64)) -> usize {
        self.entries.get(&bidegree).map_or(0, Vec::len)
    }

    /// Dimensions per total degree `n - m`.
    pub fn total_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (&(p, q), basis) in &self.entries {
            *out.entry(p + q).or_insert(0) += basis.len();
        }
        out
    }

    /// Product of two basis elements: `(x (x) f)(y (x) g) =
    /// (-1)^{|f||y|} (x cup y) (x) (f g)`, expanded in the target basis.
    pub fn product(
        &self,
        a: &(Monomial, Monomial),
        b: &(Monomial, Monomial),
    ) -> Result<Vec<((Monomial, Monomial), Scalar)>, Error> {
        let c = self.base.cohomology.coefficients();
        let coh = self
            .base
            .cohomology
            .monomial_elem(a.0.clone())
            .mul(&self.base.cohomology.monomial_elem(b.0.clone()))?;
        let fib = self
            .fiber
            .monomial_elem(a.1.clone())
            .mul(&self.fiber.monomial_elem(b.1.clone()))?;
        let sign_pow =
            self.fiber.monomial_degree(&a.1) * self.base.cohomology.monomial_degree(&b.0);
        let sign = if c.exterior_odd() && sign_pow.rem_euclid(2) == 1 {
            c.neg(&c.one())
        } else {
            c.one()
        };
        let mut out = Vec::new();
        for (mc, cc) in coh.terms() {
            for (mf, cf) in fib.terms() {
                out.push((
                    (mc.clone(), mf.clone()),
                    c.mul(&c.mul(cc, cf), &sign),
                ));
            }
        }
        Ok(out)
    }
}

/// Report of the three structural homomorphism checks on a trivial-product
/// string ring: the bundle projection, the unit section, and restriction to
/// a fiber.
#[derive(Debug)]
pub struct HomReport {
    pub space: String,
    pub window: (i64, i64),
    pub projection_pairs: usize,
    pub section_pairs: usize,
    pub fiber_restriction_pairs: usize,
    pub failures: Vec<String>,
}

impl HomReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively check, on basis pairs within the window, that
/// the projection, the unit section, and fiber restriction are ring maps.
pub fn verify_structure_homs(
    model: &FiberwiseMonoidModel,
    window: (i64, i64),
) -> Result<HomReport, Error> {
    let ir = intersection_ring(&model.base)?;
    let a_ring = string_ring(model, window)?;
    let fiber = &model.fiber.homology;
    let base_gens = ir.ring.num_gens();
    let c = a_ring.coefficients();

    let mut basis: Vec<Monomial> = Vec::new();
    for d in window.0..=window.1 {
        basis.extend(a_ring.basis_in_degree(d)?);
    }
    // p_*(x (x) f) = x . eps(f); c(x (x) f) = counit(x) . f
    let project = |m: &Monomial| -> Result<GradedElement, Error> {
        let (mb, mf) = split_string_monomial(&a_ring, base_gens, m);
        let eps = model
            .fiber
            .augmentation(&fiber.monomial_elem(mf));
        Ok(ir.ring.monomial_elem(mb).scale_scalar(&eps))
    };
    let restrict = |m: &Monomial| -> Result<GradedElement, Error> {
        let (mb, mf) = split_string_monomial(&a_ring, base_gens, m);
        let counit = ir.counit(&ir.ring.monomial_elem(mb));
        Ok(fiber.monomial_elem(mf).scale_scalar(&counit))
    };
    let apply_lin = |x: &GradedElement,
                     f: &dyn Fn(&Monomial) -> Result<GradedElement, Error>,
                     zero: GradedElement|
     -> Result<GradedElement, Error> {
        let mut acc = zero;
        for (m, co) in x.terms() {
            acc = acc.add(&f(m)?.scale_scalar(co))?;
        }
        Ok(acc)
    };

    let mut failures = Vec::new();
    let mut projection_pairs = 0;
    let mut fiber_restriction_pairs = 0;
    for a in &basis {
        for b in &basis {
            let total = a_ring.monomial_degree(a) + a_ring.monomial_degree(b);
            if total < window.0 || total > window.1 {
                continue;
            }
            let ea = a_ring.monomial_elem(a.clone());
            let eb = a_ring.monomial_elem(b.clone());
            let ab = ea.mul(&eb)?;

            let lhs_p = apply_lin(&ab, &project, ir.ring.zero())?;
            let rhs_p = project(a)?.mul(&project(b)?)?;
            projection_pairs += 1;
            if !lhs_p.equal(&rhs_p)? {
                failures.push(format!(
                    "projection fails on ({}, {})",
                    a_ring.print(&ea),
                    a_ring.print(&eb)
                ));
            }

            let lhs_c = apply_lin(&ab, &restrict, fiber.zero())?;
            let rhs_c = restrict(a)?.mul(&restrict(b)?)?;
            fiber_restriction_pairs += 1;
            if !lhs_c.equal(&rhs_c)? {
                failures.push(format!(
                    "fiber restriction fails on ({}, {})",
                    a_ring.print(&ea),
                    a_ring.print(&eb)
                ));
            }
        }
    }

    // s_*(x) = x (x) 1 on intersection-ring basis pairs
    let section = |m: &Monomial| -> Monomial {
        let mut e = m.0.clone();
        e.extend(std::iter::repeat(0).take(a_ring.num_gens() - base_gens));
        Monomial(e)
    };
    let mut section_pairs = 0;
    let mut ibasis: Vec<Monomial> = Vec::new();
    for d in window.0..=0.min(window.1) {
        ibasis.extend(ir.ring.basis_in_degree(d)?);
    }
    for a in &ibasis {
        for b in &ibasis {
            let total = ir.ring.monomial_degree(a) + ir.ring.monomial_degree(b);
            if total < window.0 {
                continue;
            }
            let prod = ir
                .ring
                .monomial_elem(a.clone())
                .mul(&ir.ring.monomial_elem(b.clone()))?;
            let lhs = a_ring.element_from_terms(
                prod.terms()
                    .iter()
                    .map(|(m, co)| (section(m), co.clone()))
                    .collect(),
            );
            let rhs = a_ring
                .monomial_elem(section(a))
                .mul(&a_ring.monomial_elem(section(b)))?;
            section_pairs += 1;
            if !lhs.equal(&rhs)? {
                failures.push(format!(
                    "section fails on ({}, {})",
                    ir.ring.print(&ir.ring.monomial_elem(a.clone())),
                    ir.ring.print(&ir.ring.monomial_elem(b.clone()))
                ));
            }
        }
    }
    let _ = c;
    Ok(HomReport {
        space: format!("{} x {}", model.base.name, model.fiber.name),
        window,
        projection_pairs,
        section_pairs,
        fiber_restriction_pairs,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_algebra::Coefficients;
    use crate::manifold_catalog::{cpn, fiber_monoid, grassmannian2, rpn, sphere, FiberKind};

    fn z() -> Coefficients {
        Coefficients::Integers
    }

    #[test]
    fn intersection_ring_of_cpn_is_truncated_power_series_generator() {
        let ir = intersection_ring(&cpn(3, z()).unwrap()).unwrap();
        let c = ir.ring.gen_by_name("c").unwrap();
        assert_eq!(c.degree(), Some(-2));
        assert!(c.pow(4).unwrap().is_zero());
        assert!(!c.pow(3).unwrap().is_zero());
        // unit law against the fundamental class
        for k in 0..=3 {
            let x = c.pow(k).unwrap();
            assert!(ir.fundamental().mul(&x).unwrap().equal(&x).unwrap());
        }
    }

    #[test]
    fn intersection_ring_of_rp3_is_truncated_on_alpha() {
        let ir = intersection_ring(&rpn(3).unwrap()).unwrap();
        let a = ir.ring.gen_by_name("α").unwrap();
        assert_eq!(a.degree(), Some(-1));
        assert!(a.pow(4).unwrap().is_zero());
        assert!(!a.pow(3).unwrap().is_zero());
    }

    #[test]
    fn presented_product_matches_pd_transport() {
        let ir = intersection_ring(&cpn(2, z()).unwrap()).unwrap();
        let c = ir.ring.gen_by_name("c").unwrap();
        for j in 0..=2u32 {
            for k in 0..=2u32 {
                let fast = c.pow(j).unwrap().mul(&c.pow(k).unwrap()).unwrap();
                let slow = ir
                    .intersect_via_pd(&c.pow(j).unwrap(), &c.pow(k).unwrap())
                    .unwrap();
                assert!(fast.equal(&slow).unwrap());
            }
        }
    }

    #[test]
    fn string_ring_of_cpn_circle() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(2, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let r = string_ring(&model, (-6, 2)).unwrap();
        // basis dims: degrees -4..1 are all rank one, like Lambda(t)(x)Z[c]/c^3
        let dims: Vec<usize> = (-4..=1)
            .map(|d| r.basis_in_degree(d).unwrap().len())
            .collect();
        assert_eq!(dims, vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn string_ring_with_point_fiber_is_intersection_ring() {
        let base = cpn(2, z()).unwrap();
        let model = FiberwiseMonoidModel::trivial(
            base.clone(),
            fiber_monoid(&FiberKind::Point, z()).unwrap(),
        );
        let r = string_ring(&model, (-4, 0)).unwrap();
        let ir = intersection_ring(&base).unwrap();
        assert_eq!(r, ir.ring);
    }

    #[test]
    fn string_ring_rejects_adjoint_shape() {
        let f2 = Coefficients::prime_field(2).unwrap();
        let model = FiberwiseMonoidModel {
            base: grassmannian2(4).unwrap(),
            fiber: fiber_monoid(&FiberKind::O2, f2).unwrap(),
            shape: MonoidShape::AdjointO2 { n: 4 },
        };
        assert!(string_ring(&model, (-4, 1)).is_err());
    }

    #[test]
    fn gr24_o2_string_ring_shifted_degree_one_rank() {
        let f2 = Coefficients::prime_field(2).unwrap();
        let model = FiberwiseMonoidModel::trivial(
            grassmannian2(4).unwrap(),
            fiber_monoid(&FiberKind::O2, f2).unwrap(),
        );
        let r = string_ring(&model, (-5, 1)).unwrap();
        assert_eq!(r.basis_in_degree(1).unwrap().len(), 2);
    }

    #[test]
    fn e2_page_of_cp2_circle() {
        let model_fiber = fiber_monoid(&FiberKind::Circle, z()).unwrap();
        let page = cjy_e2_page(&cpn(2, z()).unwrap(), &model_fiber, 8).unwrap();
        let mut expected = BTreeMap::new();
        for p in [0i64, -2, -4] {
            for q in [0i64, 1] {
                expected.insert((p, q), 1usize);
            }
        }
        let dims: BTreeMap<(i64, i64), usize> = page
            .entries
            .iter()
            .map(|(k, v)| (*k, v.len()))
            .collect();
        assert_eq!(dims, expected);
    }

    #[test]
    fn e2_rejects_non_simply_connected_base() {
        let model_fiber = fiber_monoid(&FiberKind::Circle, z()).unwrap();
        assert!(cjy_e2_page(&sphere(1, z()).unwrap(), &model_fiber, 4).is_err());
    }

    #[test]
    fn e2_bigraded_product_is_tensor_cup() {
        let model_fiber = fiber_monoid(&FiberKind::Circle, z()).unwrap();
        let m = cpn(2, z()).unwrap();
        let page = cjy_e2_page(&m, &model_fiber, 8).unwrap();
        let x = page.entries[&(-2, 0)][0].clone();
        let t = page.entries[&(0, 1)][0].clone();
        let xt = page.product(&x, &t).unwrap();
        assert_eq!(xt.len(), 1);
        assert_eq!(xt[0].0, page.entries[&(-2, 1)][0]);
    }

    #[test]
    fn module_self_action_is_string_product() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(1, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let selfmod = FiberModule::self_module(&model.fiber.homology, (0, 1)).unwrap();
        let table = module_structure(&model, &selfmod, (-2, 1)).unwrap();
        assert!(table.unit_checked);
        assert!(table.associativity_checked > 0);
    }

    #[test]
    fn trivial_module_kills_the_fiber_generator() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(1, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let trivial = FiberModule::trivial_rank_one(&model.fiber.homology);
        let t = model.fiber.homology.gen_by_name("t").unwrap();
        assert!(trivial.act(&t, 0).unwrap().is_empty());
        let table = module_structure(&model, &trivial, (-2, 1)).unwrap();
        assert!(table.unit_checked);
    }

    #[test]
    fn free_truncated_two_point_module_is_associative() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(1, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let free2 = FiberModule::free_truncated(&model.fiber.homology, 2, (0, 0)).unwrap();
        let table = module_structure(&model, &free2, (-2, 0)).unwrap();
        assert!(table.unit_checked);
        assert!(table.associativity_checked > 0);
    }

    #[test]
    fn structure_homs_pass_for_cp2_circle() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(2, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let report = verify_structure_homs(&model, (-4, 1)).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures);
        assert!(report.projection_pairs > 0);
        assert!(report.section_pairs > 0);
    }

    #[test]
    fn e2_total_dims_match_string_ring() {
        let model = FiberwiseMonoidModel::trivial(
            cpn(2, z()).unwrap(),
            fiber_monoid(&FiberKind::Circle, z()).unwrap(),
        );
        let r = string_ring(&model, (-6, 2)).unwrap();
        let page = cjy_e2_page(&model.base, &model.fiber, 8).unwrap();
        for (total, dim) in page.total_dims() {
            assert_eq!(
                r.basis_in_degree(total).unwrap().len(),
                dim,
                "total degree {total}"
            );
        }
    }
}
