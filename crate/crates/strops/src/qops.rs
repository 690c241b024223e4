//! Homology operations on the shifted intersection ring at the prime 2,
//! defined through duality transport of Steenrod squares, together with
//! the vanishing bracket and the relation test-bench.

use crate::graded_algebra::GradedElement;
use crate::manifold_catalog::ManifoldData;
use crate::steenrod::SqAction;
use crate::string_product::{intersection_ring, IntersectionRing};
use crate::Error;

/// Everything the operations need about one space, mod 2.
pub struct QContext {
    pub manifold: ManifoldData,
    pub intersection: IntersectionRing,
    pub sq_action: SqAction,
}

impl QContext {
    pub fn for_space(m: &ManifoldData) -> Result<QContext, Error> {
        if !m.cohomology.coefficients().char_two() {
            return Err(Error::Domain(
                "the homology operations are defined mod 2".into(),
            ));
        }
        Ok(QContext {
            manifold: m.clone(),
            intersection: intersection_ring(m)?,
            sq_action: SqAction::for_space(m)?,
        })
    }
}

/// `Q_i` on a homogeneous class of shifted degree `-q`: transport to
/// cohomology, apply the `(q-i)`-th square, transport back. Lands in
/// shifted degree `-2q+i`; vanishes for `i > q`.
pub fn q_op(i: i64, x: &GradedElement, ctx: &QContext) -> Result<GradedElement, Error> {
    if i < 0 {
        return Err(Error::InvalidParameter("operation index must be >= 0".into()));
    }
    if !x.is_homogeneous() {
        return Err(Error::Algebra(
            crate::graded_algebra::AlgebraError::InhomogeneousElement,
        ));
    }
    if x.is_zero() {
        return Ok(ctx.intersection.ring.zero());
    }
    let q = -x.degree().unwrap();
    let xi = ctx.intersection.to_cohomology(x);
    let sq = ctx.sq_action.sq(q - i, &xi)?;
    Ok(ctx.intersection.from_cohomology(&sq))
}

/// The bracket with its degree bookkeeping. On an oriented base every
/// instance vanishes, which is what makes the downstream compatibility
/// relations trivially satisfiable.
pub struct BrowderResult {
    pub class: GradedElement,
    pub degree: i64,
}

pub fn browder(
    x: &GradedElement,
    y: &GradedElement,
    arity: u32,
    ctx: &QContext,
) -> Result<BrowderResult, Error> {
    if !ctx.manifold.orientable_z {
        return Err(Error::Domain(format!(
            "the bracket vanishing argument needs an orientable base; {} is not",
            ctx.manifold.name
        )));
    }
    let p = x.degree().unwrap_or(0);
    let q = y.degree().unwrap_or(0);
    Ok(BrowderResult {
        class: ctx.intersection.ring.zero(),
        degree: p + q + i64::from(arity) - 1,
    })
}

/// Relation test-bench over all basis classes through a degree bound.
#[derive(Debug)]
pub struct RelationReport {
    pub space: String,
    pub degree_bound: i64,
    pub identity_instances: usize,
    pub vanishing_instances: usize,
    pub square_instances: usize,
    pub additivity_instances: usize,
    pub failures: Vec<String>,
    /// Relations quoted from the operad literature that have no derivation
    /// from the duality formula; listed rather than asserted.
    pub unverified: Vec<String>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn relation_check(ctx: &QContext, degree_bound: i64) -> Result<RelationReport, Error> {
    let ring = &ctx.intersection.ring;
    let mut report = RelationReport {
        space: ctx.manifold.name.clone(),
        degree_bound,
        identity_instances: 0,
        vanishing_instances: 0,
        square_instances: 0,
        additivity_instances: 0,
        failures: Vec::new(),
        unverified: vec![
            "unstable composition relations quoted from the operad literature".into(),
        ],
    };
    let bound = degree_bound.min(ctx.manifold.dim);
    for q in 0..=bound {
        let basis = ring.basis_in_degree(-q)?;
        let elems: Vec<GradedElement> = basis
            .iter()
            .map(|m| ring.monomial_elem(m.clone()))
            .collect();
        for x in &elems {
            // the top operation is the identity
            let top = q_op(q, x, ctx)?;
            report.identity_instances += 1;
            if !top.equal(x)? {
                report
                    .failures
                    .push(format!("Q_q is not the identity on {}", ring.print(x)));
            }
            // indices above the degree vanish
            for i in (q + 1)..=(q + 2) {
                report.vanishing_instances += 1;
                if !q_op(i, x, ctx)?.is_zero() {
                    report
                        .failures
                        .push(format!("Q_{i} does not vanish on {}", ring.print(x)));
                }
            }
            // the bottom operation is the intersection square
            let q0 = q_op(0, x, ctx)?;
            let sq = x.mul(x)?;
            report.square_instances += 1;
            if !q0.equal(&sq)? {
                report.failures.push(format!(
                    "Q_0 differs from the intersection square on {}",
                    ring.print(x)
                ));
            }
        }
        // additivity with its mod-2 cross terms on same-degree pairs
        for a in &elems {
            for b in &elems {
                let sum = a.add(b)?;
                for i in 0..=q {
                    let lhs = q_op(i, &sum, ctx)?;
                    let rhs = q_op(i, a, ctx)?.add(&q_op(i, b, ctx)?)?;
                    report.additivity_instances += 1;
                    if !lhs.equal(&rhs)? {
                        report.failures.push(format!(
                            "Q_{i} is not additive on ({}, {})",
                            ring.print(a),
                            ring.print(b)
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}
