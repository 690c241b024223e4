//! Steenrod squares on the catalog mod-2 rings, the bundle-twisted action
//! `Sq^i_t`, and the dual right action on homology.
//!
//! Shifted indexing follows the base dimension: on a total space over a
//! `d`-manifold, the shifted group `H^k` in degree `k` means `H^{k+d}`.

use crate::graded_algebra::{GradedElement, Monomial, Ring};
use crate::manifold_catalog::{
    AdjointComponent, HomologyClass, ManifoldData, VirtualBundleTwist,
};
use crate::Error;

/// A Steenrod action presented by the squares of the ring generators and
/// extended multiplicatively by the Cartan formula.
#[derive(Clone, Debug)]
pub struct SqAction {
    pub ring: Ring,
    table: Vec<(String, Vec<GradedElement>)>,
}

impl SqAction {
    /// Validates the instability conditions on the generator table:
    /// `Sq^0 g = g`, `Sq^{|g|} g = g^2`, entries homogeneous of the right
    /// degree, and nothing beyond `|g|`.
    pub fn new(ring: Ring, table: Vec<(String, Vec<GradedElement>)>) -> Result<SqAction, Error> {
        if !ring.coefficients().char_two() {
            return Err(Error::Domain(
                "Steenrod squares require mod-2 coefficients".into(),
            ));
        }
        for (gname, sqs) in &table {
            let g = ring.gen_by_name(gname)?;
            let d = g.degree().unwrap_or(0);
            if sqs.len() as i64 != d + 1 {
                return Err(Error::Domain(format!(
                    "square table for {gname} must list Sq^0..Sq^{d}"
                )));
            }
            if !sqs[0].equal(&g)? {
                return Err(Error::Domain(format!("Sq^0 {gname} must be {gname}")));
            }
            if !sqs[d as usize].equal(&g.pow(2)?)? {
                return Err(Error::Domain(format!(
                    "Sq^{d} {gname} must be the square of {gname}"
                )));
            }
            for (i, s) in sqs.iter().enumerate() {
                if !s.is_zero() && s.degree() != Some(d + i as i64) {
                    return Err(Error::Domain(format!(
                        "Sq^{i} {gname} is not homogeneous of degree {}",
                        d + i as i64
                    )));
                }
            }
        }
        Ok(SqAction { ring, table })
    }

    /// Build the registered action of a catalog space.
    pub fn for_space(m: &ManifoldData) -> Result<SqAction, Error> {
        let table = m.sq_table.clone().ok_or_else(|| Error::Domain(format!(
            "no Steenrod action registered for {}",
            m.name
        )))?;
        SqAction::new(m.cohomology.clone(), table)
    }

    fn total_sq_of_gen(&self, name: &str) -> Result<GradedElement, Error> {
        let (_, sqs) = self
            .table
            .iter()
            .find(|(g, _)| g == name)
            .ok_or_else(|| Error::Domain(format!("no square table entry for {name}")))?;
        let mut acc = self.ring.zero();
        for s in sqs {
            acc = acc.add(s)?;
        }
        Ok(acc)
    }

    /// Total square of a monomial via the Cartan formula.
    fn total_sq_monomial(&self, m: &Monomial) -> Result<GradedElement, Error> {
        let mut acc = self.ring.one();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let total = self.total_sq_of_gen(&self.ring.generators()[i].name)?;
            for _ in 0..e {
                acc = acc.mul(&total)?;
            }
        }
        Ok(acc)
    }

    /// `Sq^i x`, additive in `x`; vanishes for negative `i` and for
    /// `i` above the degree, squares the class at `i = deg x`.
    pub fn sq(&self, i: i64, x: &GradedElement) -> Result<GradedElement, Error> {
        if x.ring() != &self.ring {
            return Err(Error::Algebra(
                crate::graded_algebra::AlgebraError::MixedRings,
            ));
        }
        if i < 0 {
            return Ok(self.ring.zero());
        }
        let mut acc = self.ring.zero();
        for (m, c) in x.terms() {
            let d = self.ring.monomial_degree(m);
            let total = self.total_sq_monomial(m)?;
            let comp = total.degree_component(d + i).scale_scalar(c);
            acc = acc.add(&comp)?;
        }
        Ok(acc)
    }
}

/// `Sq^i` under a registered action.
pub fn sq(i: i64, x: &GradedElement, action: &SqAction) -> Result<GradedElement, Error> {
    action.sq(i, x)
}

/// Twisted square `Sq^i_t(x) = sum_j Sq^j(x) . w_{i-j}` of the twisting
/// virtual bundle; reduces to `sq` when the twist is trivial.
pub fn twisted_sq(
    i: i64,
    x: &GradedElement,
    twist: &VirtualBundleTwist,
    action: &SqAction,
) -> Result<GradedElement, Error> {
    if twist.ring != action.ring {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::MixedRings,
        ));
    }
    let mut acc = action.ring.zero();
    for j in 0..=i {
        let sq_j = action.sq(j, x)?;
        if sq_j.is_zero() {
            continue;
        }
        let w = twist.class(i - j)?;
        acc = acc.add(&sq_j.mul(&w)?)?;
    }
    Ok(acc)
}

/// Everything the right homology action needs: the space's pairing, its
/// registered action, and an optional twist.
pub struct RightSqContext<'a> {
    pub space: &'a ManifoldData,
    pub action: &'a SqAction,
    pub twist: Option<&'a VirtualBundleTwist>,
}

impl<'a> RightSqContext<'a> {
    pub fn apply_sq(&self, i: i64, x: &GradedElement) -> Result<GradedElement, Error> {
        match self.twist {
            Some(t) => twisted_sq(i, x, t, self.action),
            None => self.action.sq(i, x),
        }
    }
}

/// Right action on homology classes: the unique class with
/// `<x, y Sq^i_t> = <Sq^i_t x, y>` for every `x`; lowers degree by `i`.
///
/// Classes are stored against the dual of the monomial basis, so the
/// adjunction determines each coordinate directly; nondegeneracy of the
/// pairing makes the class unique.
pub fn right_action(
    y: &HomologyClass,
    i: i64,
    ctx: &RightSqContext,
) -> Result<HomologyClass, Error> {
    if y.ring != ctx.space.cohomology {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::MixedRings,
        ));
    }
    let target = y.degree - i;
    let basis = ctx.space.cohomology.basis_in_degree(target)?;
    let mut coords = Vec::with_capacity(basis.len());
    for b in &basis {
        let x = ctx.space.cohomology.monomial_elem(b.clone());
        let sx = ctx.apply_sq(i, &x)?;
        coords.push(ctx.space.kronecker(&sx, y)?);
    }
    Ok(HomologyClass {
        space: y.space.clone(),
        ring: y.ring.clone(),
        degree: target,
        coords,
    })
}

/// Does `Sq^1` map `H^{D-1}` of a closed connected mod-2 piece onto its top
/// degree? By the Wu identity that map is cup product with `w_1`, and its
/// pairing functional is nonzero exactly when the component is
/// non-orientable.
pub fn wu_surjectivity_test(component: &AdjointComponent) -> bool {
    !component.orientable
}

/// Direct route for the same question on a fully presented connected
/// manifold: does some class of degree `D-1` have a nonzero `Sq^1`?
pub fn sq1_hits_top(m: &ManifoldData) -> Result<bool, Error> {
    let action = SqAction::for_space(m)?;
    for b in m.cohomology.basis_in_degree(m.dim - 1)? {
        let x = m.cohomology.monomial_elem(b);
        if !action.sq(1, &x)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_algebra::Coefficients;
    use crate::manifold_catalog::{
        cpn, fiber_monoid, grassmannian2, minus_tangent_twist, product, rpn, two_circles,
        FiberKind,
    };

    #[test]
    fn sq_on_projective_space() {
        let m = rpn(4).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let r = &m.cohomology;
        let a2 = r.parse("a^2").unwrap();
        let a3 = r.parse("a^3").unwrap();
        assert!(action.sq(1, &a2).unwrap().is_zero());
        assert!(action
            .sq(1, &a3)
            .unwrap()
            .equal(&r.parse("a^4").unwrap())
            .unwrap());
        // Sq^0 is the identity
        assert!(action.sq(0, &a3).unwrap().equal(&a3).unwrap());
        // instability above the degree
        assert!(action.sq(4, &a3).unwrap().is_zero());
    }

    #[test]
    fn sq1_of_w2_on_grassmannian() {
        let m = grassmannian2(5).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let w2 = m.cohomology.parse("w2").unwrap();
        let expect = m.cohomology.parse("w1*w2").unwrap();
        assert!(action.sq(1, &w2).unwrap().equal(&expect).unwrap());
    }

    #[test]
    fn cartan_formula_on_basis_pairs() {
        let m = grassmannian2(4).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let r = &m.cohomology;
        for da in 0..=4i64 {
            for db in 0..=(4 - da) {
                for ma in r.basis_in_degree(da).unwrap() {
                    for mb in r.basis_in_degree(db).unwrap() {
                        let x = r.monomial_elem(ma.clone());
                        let y = r.monomial_elem(mb.clone());
                        let xy = x.mul(&y).unwrap();
                        for i in 0..=(da + db) {
                            let lhs = action.sq(i, &xy).unwrap();
                            let mut rhs = r.zero();
                            for j in 0..=i {
                                let t = action
                                    .sq(j, &x)
                                    .unwrap()
                                    .mul(&action.sq(i - j, &y).unwrap())
                                    .unwrap();
                                rhs = rhs.add(&t).unwrap();
                            }
                            assert!(lhs.equal(&rhs).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_formula_through_degree_ten() {
        let m = grassmannian2(7).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let r = &m.cohomology;
        for da in 0..=10i64 {
            for db in 0..=(10 - da) {
                for ma in r.basis_in_degree(da).unwrap() {
                    for mb in r.basis_in_degree(db).unwrap() {
                        let x = r.monomial_elem(ma.clone());
                        let y = r.monomial_elem(mb.clone());
                        let xy = x.mul(&y).unwrap();
                        for i in 0..=(da + db).min(10) {
                            let lhs = action.sq(i, &xy).unwrap();
                            let mut rhs = r.zero();
                            for j in 0..=i {
                                let t = action
                                    .sq(j, &x)
                                    .unwrap()
                                    .mul(&action.sq(i - j, &y).unwrap())
                                    .unwrap();
                                rhs = rhs.add(&t).unwrap();
                            }
                            assert!(lhs.equal(&rhs).unwrap(), "Sq^{i} on deg ({da},{db})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn right_action_with_index_zero_is_identity() {
        let m = rpn(4).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let ctx = RightSqContext {
            space: &m,
            action: &action,
            twist: None,
        };
        let a2 = m.cohomology.parse("a^2").unwrap();
        let y = m.pd_coh_to_hom(&a2).unwrap();
        let moved = right_action(&y, 0, &ctx).unwrap();
        assert_eq!(moved, y);
    }

    #[test]
    fn direct_route_on_disconnected_products_tracks_orientability() {
        let o2m = two_circles().unwrap();
        let even = product(&grassmannian2(4).unwrap(), &o2m).unwrap();
        assert!(!sq1_hits_top(&even).unwrap());
        let odd = product(&grassmannian2(5).unwrap(), &o2m).unwrap();
        assert!(sq1_hits_top(&odd).unwrap());
    }

    #[test]
    fn twisted_sq_with_trivial_twist_is_sq() {
        let m = rpn(3).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let twist = minus_tangent_twist(&m).unwrap();
        // RP^3 is orientable: w(-TM) = (1+a)^{-4} = 1+a^4+... = 1 here
        assert!(twist.sw_total.equal(&m.cohomology.one()).unwrap());
        for d in 0..=3 {
            for b in m.cohomology.basis_in_degree(d).unwrap() {
                let x = m.cohomology.monomial_elem(b);
                let a = twisted_sq(1, &x, &twist, &action).unwrap();
                let b = action.sq(1, &x).unwrap();
                assert!(a.equal(&b).unwrap());
            }
        }
    }

    #[test]
    fn twisted_sq1_on_rp2_kills_the_generator() {
        // Sq^1_t(a) = a^2 + a.a = 0 with w_1(-TM) = a
        let m = rpn(2).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let twist = minus_tangent_twist(&m).unwrap();
        let a = m.cohomology.parse("a").unwrap();
        assert!(twisted_sq(1, &a, &twist, &action).unwrap().is_zero());
        // while the untwisted square is nonzero
        assert!(!action.sq(1, &a).unwrap().is_zero());
    }

    #[test]
    fn right_action_adjunction_holds_on_basis_pairs() {
        let m = rpn(3).unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let ctx = RightSqContext {
            space: &m,
            action: &action,
            twist: None,
        };
        let r = &m.cohomology;
        let c = r.coefficients();
        for deg in 0..=3i64 {
            let hom_basis = r.basis_in_degree(deg).unwrap();
            for k in 0..hom_basis.len() {
                let mut coords = vec![c.zero(); hom_basis.len()];
                coords[k] = c.one();
                let y = HomologyClass {
                    space: m.name.clone(),
                    ring: r.clone(),
                    degree: deg,
                    coords,
                };
                let y1 = right_action(&y, 1, &ctx).unwrap();
                for b in r.basis_in_degree(deg - 1).unwrap() {
                    let x = r.monomial_elem(b);
                    let lhs = m.kronecker(&x, &y1).unwrap();
                    let rhs = m.kronecker(&action.sq(1, &x).unwrap(), &y).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn orientable_top_class_is_killed_by_sq1() {
        let m = rpn(3).unwrap();
        let top = m.fundamental_class().unwrap();
        let action = SqAction::for_space(&m).unwrap();
        let ctx = RightSqContext {
            space: &m,
            action: &action,
            twist: None,
        };
        let moved = right_action(&top, 1, &ctx).unwrap();
        assert!(moved.is_zero());
    }

    #[test]
    fn wu_rule_matches_direct_computation() {
        for (m, expect) in [
            (rpn(2).unwrap(), true),
            (rpn(3).unwrap(), false),
            (rpn(4).unwrap(), true),
            (grassmannian2(4).unwrap(), false),
            (grassmannian2(5).unwrap(), true),
        ] {
            assert_eq!(sq1_hits_top(&m).unwrap(), expect, "{}", m.name);
            assert_eq!(!m.orientable_z, expect, "{}", m.name);
        }
    }

    #[test]
    fn product_action_covers_the_o2_factor() {
        let f2 = Coefficients::prime_field(2).unwrap();
        let e = product(&grassmannian2(4).unwrap(), &two_circles().unwrap()).unwrap();
        let action = SqAction::for_space(&e).unwrap();
        let v = e.cohomology.parse("v").unwrap();
        assert!(action.sq(1, &v).unwrap().is_zero());
        let _ = fiber_monoid(&FiberKind::O2, f2).unwrap();
    }

    #[test]
    fn no_action_registered_over_integers() {
        let m = cpn(2, Coefficients::Integers).unwrap();
        assert!(SqAction::for_space(&m).is_err());
    }
}
