//! Finitely presented graded-commutative rings with exact rewriting.
//!
//! Relations are applied as a leading-term rewrite system under the
//! graded-lex order. Construction verifies local confluence on every
//! critical pair inside the degree window and rejects presentations that
//! fail, so normal forms below the bound are canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::coeff::{Coefficients, Scalar};
use super::monomial::{cmp_graded_lex, mul_monomials, Monomial};
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// A term list in normal form: sorted descending in graded-lex, no zeros.
pub(crate) type Terms = Vec<(Monomial, Scalar)>;

#[derive(Clone, Debug)]
pub(crate) struct RewriteRule {
    pub lhs: Monomial,
    /// `lhs` is congruent to `rhs` in the quotient; every monomial of
    /// `rhs` is strictly smaller than `lhs`.
    pub rhs: Terms,
}

#[derive(Debug)]
pub struct RingData {
    pub(crate) coeffs: Coefficients,
    pub(crate) gens: Vec<Generator>,
    pub(crate) gen_degrees: Vec<i64>,
    /// Relations as given, normalized and sorted.
    pub(crate) relations: Vec<Terms>,
    pub(crate) rules: Vec<RewriteRule>,
    pub(crate) degree_bound: i64,
}

impl PartialEq for RingData {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && self.gens == other.gens
            && self.relations == other.relations
            && self.degree_bound == other.degree_bound
    }
}

/// A shared handle to an immutable ring presentation.
#[derive(Clone, Debug)]
pub struct Ring(pub(crate) Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Ring {
    /// Construct a presentation, verifying homogeneity of every relation and
    /// local confluence of the induced rewrite system up to `degree_bound`.
    pub fn make(
        gens: Vec<Generator>,
        relations: Vec<Terms>,
        coeffs: Coefficients,
        degree_bound: i64,
    ) -> Result<Ring, AlgebraError> {
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() {
                return Err(AlgebraError::Parse("empty generator name".into()));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        let gen_degrees: Vec<i64> = gens.iter().map(|g| g.degree).collect();
        let mut normalized = Vec::new();
        for rel in relations {
            let terms = combine_terms(&coeffs, &gen_degrees, rel);
            if terms.is_empty() {
                // killed by the exterior rule (e.g. t^2 over the integers)
                continue;
            }
            let d0 = terms[0].0.degree(&gen_degrees);
            if terms.iter().any(|(m, _)| m.degree(&gen_degrees) != d0) {
                return Err(AlgebraError::NonHomogeneousRelation {
                    relation: display_terms_raw(&terms, &gens),
                });
            }
            normalized.push(terms);
        }
        let mut rules = Vec::new();
        for terms in &normalized {
            let (lead_mono, lead_coeff) = terms[0].clone();
            if !coeffs.is_unit(&lead_coeff) {
                return Err(AlgebraError::NonUnitLeadingCoefficient {
                    relation: display_terms_raw(terms, &gens),
                });
            }
            let inv_neg = coeffs.neg(&coeffs.inv(&lead_coeff));
            let rhs: Terms = terms[1..]
                .iter()
                .map(|(m, c)| (m.clone(), coeffs.mul(&inv_neg, c)))
                .collect();
            rules.push(RewriteRule { lhs: lead_mono, rhs });
        }
        let data = RingData {
            coeffs,
            gens,
            gen_degrees,
            relations: normalized,
            rules,
            degree_bound,
        };
        data.check_local_confluence()?;
        Ok(Ring(Arc::new(data)))
    }

    pub fn coefficients(&self) -> Coefficients {
        self.0.coeffs
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0.gens
    }

    pub fn degree_bound(&self) -> i64 {
        self.0.degree_bound
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.0.gens.iter().position(|g| g.name == name)
    }

    pub fn num_gens(&self) -> usize {
        self.0.gens.len()
    }

    pub(crate) fn gen_degrees(&self) -> &[i64] {
        &self.0.gen_degrees
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_graded_lex(a, b, &self.0.gen_degrees)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.degree(&self.0.gen_degrees)
    }

    /// Relations as normalized term lists (for serialization and display).
    pub(crate) fn relation_terms(&self) -> &[Terms] {
        &self.0.relations
    }

    pub(crate) fn is_reducible(&self, m: &Monomial) -> bool {
        self.0.rules.iter().any(|r| r.lhs.divides(m))
    }

    /// Full normal form of a raw term list.
    pub(crate) fn normal_form_terms(&self, terms: Terms) -> Terms {
        self.0.normal_form_terms(terms)
    }

    /// Normal-form monomials spanning degree `n`, sorted descending in the
    /// monomial order.
    pub fn basis_in_degree(&self, n: i64) -> Result<Vec<Monomial>, AlgebraError> {
        if n.abs() > self.0.degree_bound {
            return Err(AlgebraError::DegreeOutsideBound {
                degree: n,
                bound: self.0.degree_bound,
            });
        }
        let caps = self.exponent_caps();
        let mut out = Vec::new();
        let mut exps = vec![0u16; self.num_gens()];
        self.enumerate_rec(0, n, &caps, &mut exps, &mut out)?;
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        Ok(out)
    }

    /// Largest irreducible pure power per generator: `Some(cap)` when a rule
    /// bounds the generator (or it is exterior), `None` when unbounded.
    fn exponent_caps(&self) -> Vec<Option<u16>> {
        let exterior = self.0.coeffs.exterior_odd();
        (0..self.num_gens())
            .map(|i| {
                if exterior && self.0.gen_degrees[i].rem_euclid(2) == 1 {
                    return Some(1);
                }
                let mut best: Option<u16> = None;
                for r in &self.0.rules {
                    let pure = r
                        .lhs
                        .0
                        .iter()
                        .enumerate()
                        .all(|(j, &e)| j == i || e == 0);
                    if pure && r.lhs.0[i] > 0 {
                        let cap = r.lhs.0[i] - 1;
                        best = Some(best.map_or(cap, |b: u16| b.min(cap)));
                    }
                }
                best
            })
            .collect()
    }

    fn enumerate_rec(
        &self,
        idx: usize,
        remaining: i64,
        caps: &[Option<u16>],
        exps: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
    ) -> Result<(), AlgebraError> {
        if idx == self.num_gens() {
            if remaining == 0 {
                let m = Monomial(exps.clone());
                if !self.is_reducible(&m) {
                    out.push(m);
                }
            }
            return Ok(());
        }
        // Degree still reachable from the remaining generators?
        let (suf_min, suf_max) = self.suffix_range(idx + 1, caps);
        let d = self.0.gen_degrees[idx];
        let e_max: u16 = match caps[idx] {
            Some(c) => c,
            None => {
                if d == 0 {
                    return Err(AlgebraError::NotFiniteInDegree { degree: remaining });
                }
                // bound the exponent so the suffix can still close the gap
                let bound = if d > 0 {
                    match suf_min {
                        Some(m) => div_floor_i64(remaining - m, d),
                        None => return Err(AlgebraError::NotFiniteInDegree { degree: remaining }),
                    }
                } else {
                    match suf_max {
                        Some(m) => div_floor_i64(remaining - m, d),
                        None => return Err(AlgebraError::NotFiniteInDegree { degree: remaining }),
                    }
                };
                if bound < 0 {
                    exps[idx] = 0;
                    return Ok(());
                }
                u16::try_from(bound.min(u16::MAX as i64)).unwrap()
            }
        };
        for e in 0..=e_max {
            let rem = remaining - i64::from(e) * d;
            let lo_ok = suf_min.map_or(true, |m| rem >= m);
            let hi_ok = suf_max.map_or(true, |m| rem <= m);
            if lo_ok && hi_ok {
                exps[idx] = e;
                self.enumerate_rec(idx + 1, rem, caps, exps, out)?;
            }
        }
        exps[idx] = 0;
        Ok(())
    }

    /// Achievable degree range over generators `idx..`; `None` = unbounded.
    fn suffix_range(&self, idx: usize, caps: &[Option<u16>]) -> (Option<i64>, Option<i64>) {
        let mut lo = Some(0i64);
        let mut hi = Some(0i64);
        for i in idx..self.num_gens() {
            let d = self.0.gen_degrees[i];
            match caps[i] {
                Some(c) => {
                    let full = i64::from(c) * d;
                    lo = lo.map(|l| l + full.min(0));
                    hi = hi.map(|h| h + full.max(0));
                }
                None => {
                    if d > 0 {
                        hi = None;
                    } else if d < 0 {
                        lo = None;
                    } else {
                        lo = None;
                        hi = None;
                    }
                }
            }
        }
        (lo, hi)
    }

    /// Degree range outside of which every graded piece vanishes, when the
    /// presentation caps every generator; `None` if some generator is
    /// unbounded.
    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        let caps = self.exponent_caps();
        let mut lo = 0i64;
        let mut hi = 0i64;
        for (i, cap) in caps.iter().enumerate() {
            let d = self.0.gen_degrees[i];
            let full = i64::from((*cap)?) * d;
            lo += full.min(0);
            hi += full.max(0);
        }
        Some((lo, hi))
    }

    /// Graded tensor product; generator names from `other` are freshened on
    /// collision. Multiplication carries the Koszul sign automatically.
    pub fn tensor(&self, other: &Ring) -> Result<Ring, AlgebraError> {
        if self.0.coeffs != other.0.coeffs {
            return Err(AlgebraError::CoefficientMismatch);
        }
        let mut gens = self.0.gens.clone();
        for g in &other.0.gens {
            let mut name = g.name.clone();
            let mut k = 2;
            while gens.iter().any(|h| h.name == name) {
                name = format!("{}_{}", g.name, k);
                k += 1;
            }
            gens.push(Generator {
                name,
                degree: g.degree,
            });
        }
        let (na, nb) = (self.num_gens(), other.num_gens());
        let mut relations: Vec<Terms> = Vec::new();
        for rel in &self.0.relations {
            relations.push(
                rel.iter()
                    .map(|(m, c)| {
                        let mut e = m.0.clone();
                        e.extend(std::iter::repeat(0).take(nb));
                        (Monomial(e), c.clone())
                    })
                    .collect(),
            );
        }
        for rel in &other.0.relations {
            relations.push(
                rel.iter()
                    .map(|(m, c)| {
                        let mut e = vec![0u16; na];
                        e.extend_from_slice(&m.0);
                        (Monomial(e), c.clone())
                    })
                    .collect(),
            );
        }
        Ring::make(
            gens,
            relations,
            self.0.coeffs,
            self.0.degree_bound.min(other.0.degree_bound),
        )
    }
}

impl RingData {
    /// Local-confluence check on all critical pairs whose overlap lies
    /// within the degree window. Reports the first offending pair.
    fn check_local_confluence(&self) -> Result<(), AlgebraError> {
        for i in 0..self.rules.len() {
            for j in (i + 1)..self.rules.len() {
                let l = self.rules[i].lhs.lcm(&self.rules[j].lhs);
                if !self.valid_monomial(&l) {
                    continue;
                }
                if l.degree(&self.gen_degrees).abs() > self.degree_bound {
                    continue;
                }
                let a = self.reduce_once(&l, i);
                let b = self.reduce_once(&l, j);
                let nf_a = self.normal_form_terms(a);
                let nf_b = self.normal_form_terms(b);
                if nf_a != nf_b {
                    return Err(AlgebraError::ConfluenceFailure {
                        left: display_monomial_raw(&self.rules[i].lhs, &self.gens),
                        right: display_monomial_raw(&self.rules[j].lhs, &self.gens),
                        nf_left: display_terms_raw(&nf_a, &self.gens),
                        nf_right: display_terms_raw(&nf_b, &self.gens),
                    });
                }
            }
        }
        Ok(())
    }

    /// Exterior generators never exceed exponent 1 away from characteristic 2.
    fn valid_monomial(&self, m: &Monomial) -> bool {
        if !self.coeffs.exterior_odd() {
            return true;
        }
        m.0.iter()
            .zip(&self.gen_degrees)
            .all(|(&e, &d)| d.rem_euclid(2) == 0 || e <= 1)
    }

    /// Apply rule `rule_idx` once to the monomial `m` (with coefficient 1).
    fn reduce_once(&self, m: &Monomial, rule_idx: usize) -> Terms {
        let rule = &self.rules[rule_idx];
        let q = rule.lhs.quotient(m);
        let (back, sign0) = mul_monomials(&q, &rule.lhs, &self.gen_degrees, self.coeffs.exterior_odd())
            .expect("quotient times lhs is a valid monomial");
        debug_assert_eq!(&back, m);
        let sign0 = self.coeffs.from_i64(i64::from(sign0));
        let mut out = Vec::new();
        for (tm, tc) in &rule.rhs {
            if let Some((prod, s)) =
                mul_monomials(&q, tm, &self.gen_degrees, self.coeffs.exterior_odd())
            {
                let c = self
                    .coeffs
                    .mul(&self.coeffs.mul(&sign0, &self.coeffs.from_i64(i64::from(s))), tc);
                out.push((prod, c));
            }
        }
        combine_terms(&self.coeffs, &self.gen_degrees, out)
    }

    pub(crate) fn normal_form_terms(&self, terms: Terms) -> Terms {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in combine_terms(&self.coeffs, &self.gen_degrees, terms) {
            map.insert(m, c);
        }
        loop {
            let target = map
                .keys()
                .filter(|m| self.rules.iter().any(|r| r.lhs.divides(m)))
                .max_by(|a, b| cmp_graded_lex(a, b, &self.gen_degrees))
                .cloned();
            let Some(m) = target else { break };
            let c = map.remove(&m).unwrap();
            let rule_idx = self
                .rules
                .iter()
                .position(|r| r.lhs.divides(&m))
                .unwrap();
            for (rm, rc) in self.reduce_once(&m, rule_idx) {
                let add = self.coeffs.mul(&c, &rc);
                let entry = map.entry(rm.clone()).or_insert_with(|| self.coeffs.zero());
                *entry = self.coeffs.add(entry, &add);
                if self.coeffs.is_zero(entry) {
                    map.remove(&rm);
                }
            }
        }
        let mut out: Terms = map.into_iter().collect();
        out.sort_by(|a, b| cmp_graded_lex(&b.0, &a.0, &self.gen_degrees));
        out
    }
}

/// Merge duplicate monomials, drop zeros and exterior-invalid monomials,
/// sort descending.
pub(crate) fn combine_terms(
    coeffs: &Coefficients,
    gen_degrees: &[i64],
    terms: Terms,
) -> Terms {
    let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (m, c) in terms {
        if coeffs.is_zero(&c) {
            continue;
        }
        if coeffs.exterior_odd()
            && m.0
                .iter()
                .zip(gen_degrees)
                .any(|(&e, &d)| d.rem_euclid(2) == 1 && e > 1)
        {
            continue;
        }
        let entry = map.entry(m.clone()).or_insert_with(|| coeffs.zero());
        *entry = coeffs.add(entry, &c);
        if coeffs.is_zero(entry) {
            map.remove(&m);
        }
    }
    let mut out: Terms = map.into_iter().collect();
    out.sort_by(|a, b| cmp_graded_lex(&b.0, &a.0, gen_degrees));
    out
}

/// Bounded Buchberger completion over a prime field. Used by the catalog to
/// turn a generating set into a confluent rewrite system before `Ring::make`
/// verifies it; arbitrary input presentations are still rejected rather than
/// repaired.
pub(crate) fn complete_relations(
    gens: &[Generator],
    relations: Vec<Terms>,
    coeffs: Coefficients,
    degree_bound: i64,
) -> Result<Vec<Terms>, AlgebraError> {
    if matches!(coeffs, Coefficients::Integers) {
        return Err(AlgebraError::CompletionRequiresField);
    }
    let gen_degrees: Vec<i64> = gens.iter().map(|g| g.degree).collect();
    // working set of monic rules: (lhs, rhs)
    let mut rules: Vec<RewriteRule> = Vec::new();
    let push_relation = |rules: &mut Vec<RewriteRule>, terms: Terms| {
        if terms.is_empty() {
            return;
        }
        let (lhs, lc) = terms[0].clone();
        let inv_neg = coeffs.neg(&coeffs.inv(&lc));
        let rhs = terms[1..]
            .iter()
            .map(|(m, c)| (m.clone(), coeffs.mul(&inv_neg, c)))
            .collect();
        rules.push(RewriteRule { lhs, rhs });
    };
    for rel in relations {
        let t = combine_terms(&coeffs, &gen_degrees, rel);
        push_relation(&mut rules, t);
    }

    let scratch = |rules: &[RewriteRule]| RingData {
        coeffs,
        gens: gens.to_vec(),
        gen_degrees: gen_degrees.clone(),
        relations: Vec::new(),
        rules: rules.to_vec(),
        degree_bound,
    };

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..rules.len() {
        for j in (i + 1)..rules.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let l = rules[i].lhs.lcm(&rules[j].lhs);
        if l.degree(&gen_degrees).abs() > degree_bound {
            continue;
        }
        let data = scratch(&rules);
        if !data.valid_monomial(&l) {
            continue;
        }
        let nf_a = data.normal_form_terms(data.reduce_once(&l, i));
        let nf_b = data.normal_form_terms(data.reduce_once(&l, j));
        let mut diff = nf_a;
        for (m, c) in nf_b {
            diff.push((m, coeffs.neg(&c)));
        }
        let diff = combine_terms(&coeffs, &gen_degrees, diff);
        if !diff.is_empty() {
            push_relation(&mut rules, diff);
            let new = rules.len() - 1;
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }

    // minimalize: drop rules whose leading monomial another rule divides
    let mut keep = vec![true; rules.len()];
    for i in 0..rules.len() {
        for j in 0..rules.len() {
            if i != j
                && keep[j]
                && rules[j].lhs.divides(&rules[i].lhs)
                && (rules[j].lhs != rules[i].lhs || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<RewriteRule> = rules
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect();
    // reduce tails against the minimal set
    let data = scratch(&minimal);
    let mut out = Vec::new();
    for r in &minimal {
        let mut terms: Terms = vec![(r.lhs.clone(), coeffs.one())];
        for (m, c) in data.normal_form_terms(r.rhs.clone()) {
            terms.push((m, coeffs.neg(&c)));
        }
        out.push(combine_terms(&coeffs, &gen_degrees, terms));
    }
    out.sort_by(|a, b| cmp_graded_lex(&a[0].0, &b[0].0, &gen_degrees));
    Ok(out)
}

fn div_floor_i64(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

pub(crate) fn display_monomial_raw(m: &Monomial, gens: &[Generator]) -> String {
    if m.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 1 {
            parts.push(gens[i].name.clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", gens[i].name, e));
        }
    }
    parts.join("*")
}

pub(crate) fn display_terms_raw(terms: &Terms, gens: &[Generator]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let one = Scalar::Mod(1);
    let mut parts = Vec::new();
    for (m, c) in terms {
        let coeff_is_one = match c {
            Scalar::Mod(x) => *x == 1,
            Scalar::Int(x) => *x == num_bigint::BigInt::from(1),
        };
        let _ = &one;
        if m.is_one() {
            parts.push(format!("{c}"));
        } else if coeff_is_one {
            parts.push(display_monomial_raw(m, gens));
        } else {
            parts.push(format!("{}*{}", c, display_monomial_raw(m, gens)));
        }
    }
    parts.join("+")
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .0
            .gens
            .iter()
            .map(|g| format!("{}:{}", g.name, g.degree))
            .collect();
        let rels: Vec<String> = self
            .0
            .relations
            .iter()
            .map(|r| display_terms_raw(r, &self.0.gens))
            .collect();
        let c = match self.0.coeffs {
            Coefficients::Integers => "Z".to_string(),
            Coefficients::PrimeField { p } => format!("F{p}"),
        };
        write!(f, "{c}[{}]/({})", gens.join(", "), rels.join(", "))
    }
}
