//! Shared oracles for the integration suites: a dense linear-algebra
//! quotient-dimension computation, a self-contained splitting-principle
//! square calculator, and ring-comparison helpers. Nothing here goes
//! through the library's rewrite machinery; these are the independent
//! routes the suites compare against.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use strops::graded_algebra::{GradedElement, Monomial, Ring};

/// An exponent-vector term list with small integer coefficients, the raw
/// material of the oracle computations.
pub type RawPoly = Vec<(Vec<u16>, i64)>;

fn degree_of(exps: &[u16], gen_degrees: &[i64]) -> i64 {
    exps.iter()
        .zip(gen_degrees)
        .map(|(&e, &d)| i64::from(e) * d)
        .sum()
}

/// Koszul-signed product of two monomials; `None` when an exterior
/// generator collides.
fn mul_exps(
    a: &[u16],
    b: &[u16],
    gen_degrees: &[i64],
    exterior: bool,
) -> Option<(Vec<u16>, i64)> {
    let mut out = vec![0u16; a.len()];
    let mut sign = 1i64;
    for i in 0..a.len() {
        let odd = gen_degrees[i].rem_euclid(2) == 1;
        if exterior && odd && a[i] + b[i] > 1 {
            return None;
        }
        out[i] = a[i] + b[i];
        if exterior && odd && b[i] == 1 {
            let mut crossings = 0u32;
            for j in (i + 1)..a.len() {
                if gen_degrees[j].rem_euclid(2) == 1 {
                    crossings += u32::from(a[j]);
                }
            }
            if crossings % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Some((out, sign))
}

/// All free-algebra monomials of one degree, with exterior caps and a hard
/// cap for degree-zero generators.
pub fn free_monomials(gen_degrees: &[i64], exterior: bool, degree: i64) -> Vec<Vec<u16>> {
    let caps: Vec<u16> = gen_degrees
        .iter()
        .map(|&d| {
            if exterior && d.rem_euclid(2) == 1 {
                1
            } else if d == 0 {
                13
            } else {
                (degree.abs() / d.abs().max(1) + 1).min(64) as u16
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u16; gen_degrees.len()];
    fn rec(
        i: usize,
        remaining: i64,
        caps: &[u16],
        gen_degrees: &[i64],
        exps: &mut Vec<u16>,
        out: &mut Vec<Vec<u16>>,
    ) {
        if i == gen_degrees.len() {
            if remaining == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=caps[i] {
            exps[i] = e;
            rec(i + 1, remaining - i64::from(e) * gen_degrees[i], caps, gen_degrees, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, degree, &caps, gen_degrees, &mut exps, &mut out);
    out.sort();
    out
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inv(rows[rank][col] % p, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] % p != 0 {
                let f = rows[r][col] % p;
                for c in 0..cols {
                    let sub = rows[rank][c] * f % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime and a nonzero
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn rank_over_q(rows: Vec<Vec<BigInt>>) -> usize {
    let mut rows: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let a = rows[rank][col].clone();
                let b = rows[r][col].clone();
                for c in 0..cols {
                    let v = &rows[r][c] * &a - &rows[rank][c] * &b;
                    rows[r][c] = v;
                }
                // keep entries small
                let g = rows[r]
                    .iter()
                    .fold(BigInt::zero(), |acc, x| gcd(acc, x.abs()));
                if g > BigInt::from(1) {
                    for c in 0..cols {
                        rows[r][c] = &rows[r][c] / &g;
                    }
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn gcd(a: BigInt, b: BigInt) -> BigInt {
    if b.is_zero() {
        a
    } else {
        gcd(b.clone(), a % b)
    }
}

/// Dimension of one graded piece of the quotient of the free
/// graded-commutative algebra by homogeneous relations: dense row
/// reduction over the span of all monomials of the degree.
pub fn quotient_dim(
    gen_degrees: &[i64],
    relations: &[RawPoly],
    p: Option<u64>,
    degree: i64,
) -> usize {
    let exterior = p.map_or(true, |p| p != 2);
    let monomials = free_monomials(gen_degrees, exterior, degree);
    if monomials.is_empty() {
        return 0;
    }
    let index: BTreeMap<&Vec<u16>, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows_int: Vec<Vec<BigInt>> = Vec::new();
    let mut rows_p: Vec<Vec<u64>> = Vec::new();
    for rel in relations {
        let rel_degree = degree_of(&rel[0].0, gen_degrees);
        let mult_degree = degree - rel_degree;
        'mult: for m in free_monomials(gen_degrees, exterior, mult_degree) {
            let mut dense_int = vec![BigInt::zero(); monomials.len()];
            let mut dense_p = vec![0u64; monomials.len()];
            let mut hit = false;
            for (t, c) in rel {
                if let Some((prod, sign)) = mul_exps(&m, t, gen_degrees, exterior) {
                    let Some(&j) = index.get(&prod) else {
                        // a term escaped the monomial window: drop the
                        // whole multiple, a clipped row would quotient by
                        // something outside the ideal
                        continue 'mult;
                    };
                    hit = true;
                    match p {
                        None => dense_int[j] += BigInt::from(c * sign),
                        Some(p) => {
                            dense_p[j] =
                                (dense_p[j] + (c * sign).rem_euclid(p as i64) as u64) % p
                        }
                    }
                }
            }
            if hit {
                match p {
                    None => rows_int.push(dense_int),
                    Some(_) => rows_p.push(dense_p),
                }
            }
        }
    }
    let rank = match p {
        None => rank_over_q(rows_int),
        Some(p) => rank_mod_p(rows_p, p),
    };
    monomials.len() - rank
}

/// A mod-2 polynomial in two degree-one line classes, for the independent
/// splitting-principle computation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TwoVarF2(pub BTreeSet<(u32, u32)>);

impl TwoVarF2 {
    pub fn from_monomials(ms: &[(u32, u32)]) -> Self {
        let mut s = TwoVarF2::default();
        for &m in ms {
            s.toggle(m);
        }
        s
    }

    fn toggle(&mut self, m: (u32, u32)) {
        if !self.0.insert(m) {
            self.0.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &m in &other.0 {
            out.toggle(m);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TwoVarF2::default();
        for &(a1, b1) in &self.0 {
            for &(a2, b2) in &other.0 {
                out.toggle((a1 + a2, b1 + b2));
            }
        }
        out
    }

    pub fn degree_component(&self, d: u32) -> Self {
        TwoVarF2(self.0.iter().copied().filter(|(a, b)| a + b == d).collect())
    }

    /// Total square: substitute each line class by itself plus its square.
    pub fn total_sq(&self) -> Self {
        let mut out = TwoVarF2::default();
        for &(a, b) in &self.0 {
            let sa = TwoVarF2::from_monomials(&[(1, 0), (2, 0)]);
            let sb = TwoVarF2::from_monomials(&[(0, 1), (0, 2)]);
            let mut term = TwoVarF2::from_monomials(&[(0, 0)]);
            for _ in 0..a {
                term = term.mul(&sa);
            }
            for _ in 0..b {
                term = term.mul(&sb);
            }
            out = out.add(&term);
        }
        out
    }

    /// Express a symmetric polynomial in the elementary symmetric
    /// functions; returns exponent pairs `(e1 power, e2 power)`.
    pub fn to_elementary(&self) -> BTreeSet<(u32, u32)> {
        let e1 = TwoVarF2::from_monomials(&[(1, 0), (0, 1)]);
        let e2 = TwoVarF2::from_monomials(&[(1, 1)]);
        let mut rest = self.clone();
        let mut out = BTreeSet::new();
        while let Some(&(a, b)) = rest.0.iter().max_by_key(|&&(a, b)| (a + b, a.max(b))) {
            let (p, q) = (a.max(b), a.min(b));
            let mut term = TwoVarF2::from_monomials(&[(0, 0)]);
            for _ in 0..(p - q) {
                term = term.mul(&e1);
            }
            for _ in 0..q {
                term = term.mul(&e2);
            }
            rest = rest.add(&term);
            out.insert((p - q, q));
        }
        out
    }
}

/// Splitting-principle oracle: the components of the total squares of the
/// two tautological classes, as `(w1 exponent, w2 exponent)` sets per
/// output degree.
pub fn splitting_oracle_squares() -> Vec<(String, Vec<BTreeSet<(u32, u32)>>)> {
    let w1 = TwoVarF2::from_monomials(&[(1, 0), (0, 1)]);
    let w2 = TwoVarF2::from_monomials(&[(1, 1)]);
    let mut out = Vec::new();
    for (name, img, d) in [("w1", &w1, 1u32), ("w2", &w2, 2u32)] {
        let total = img.total_sq();
        let mut comps = Vec::new();
        for i in 0..=d {
            comps.push(total.degree_component(d + i).to_elementary());
        }
        out.push((name.to_string(), comps));
    }
    out
}

/// Compare an element of a two-generator mod-2 ring with an oracle
/// exponent set.
pub fn element_matches_exponents(x: &GradedElement, expect: &BTreeSet<(u32, u32)>) -> bool {
    let got: BTreeSet<(u32, u32)> = x
        .terms()
        .iter()
        .map(|(m, _)| (u32::from(m.0[0]), u32::from(m.0[1])))
        .collect();
    got == *expect
}

/// Exact structural match of two presentations under a generator-name map:
/// same degrees, bijective bases per degree, identical multiplication
/// tables, over a degree window.
pub fn rings_match_by_names(
    a: &Ring,
    b: &Ring,
    name_map: &[(&str, &str)],
    window: (i64, i64),
) -> Result<(), String> {
    let map_monomial = |m: &Monomial| -> Result<Monomial, String> {
        let mut exps = vec![0u16; b.num_gens()];
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let aname = &a.generators()[i].name;
            let bname = name_map
                .iter()
                .find(|(x, _)| x == aname)
                .map(|(_, y)| *y)
                .unwrap_or(aname.as_str());
            let j = b
                .gen_index(bname)
                .ok_or_else(|| format!("no generator {bname} in target"))?;
            exps[j] = e;
        }
        Ok(Monomial(exps))
    };
    for (an, bn) in name_map {
        let ai = a.gen_index(an).ok_or_else(|| format!("missing {an}"))?;
        let bi = b.gen_index(bn).ok_or_else(|| format!("missing {bn}"))?;
        if a.generators()[ai].degree != b.generators()[bi].degree {
            return Err(format!("degree mismatch on {an} -> {bn}"));
        }
    }
    let mut basis_a = Vec::new();
    for d in window.0..=window.1 {
        let ba = a.basis_in_degree(d).map_err(|e| e.to_string())?;
        let bb = b.basis_in_degree(d).map_err(|e| e.to_string())?;
        if ba.len() != bb.len() {
            return Err(format!(
                "dimension mismatch in degree {d}: {} vs {}",
                ba.len(),
                bb.len()
            ));
        }
        for m in &ba {
            let mapped = map_monomial(m)?;
            let e = b.monomial_elem(mapped.clone());
            if e.terms().len() != 1 || e.terms()[0].0 != mapped {
                return Err(format!("basis monomial maps to a non-basis element in degree {d}"));
            }
        }
        basis_a.extend(ba);
    }
    for x in &basis_a {
        for y in &basis_a {
            let prod_a = a
                .monomial_elem(x.clone())
                .mul(&a.monomial_elem(y.clone()))
                .map_err(|e| e.to_string())?;
            let mapped: Result<Vec<_>, String> = prod_a
                .terms()
                .iter()
                .map(|(m, c)| Ok((map_monomial(m)?, c.clone())))
                .collect();
            let lhs = b.element_from_terms(mapped?);
            let rhs = b
                .monomial_elem(map_monomial(x)?)
                .mul(&b.monomial_elem(map_monomial(y)?))
                .map_err(|e| e.to_string())?;
            if !lhs.equal(&rhs).map_err(|e| e.to_string())? {
                return Err(format!(
                    "product mismatch on ({}, {})",
                    a.print(&a.monomial_elem(x.clone())),
                    a.print(&a.monomial_elem(y.clone()))
                ));
            }
        }
    }
    Ok(())
}
