//! Exponent-vector monomials and the graded-lex monomial order.

use std::cmp::Ordering;

/// A monomial over a fixed generator list, stored as an exponent vector.
///
/// The vector length always equals the number of ring generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(num_gens: usize) -> Self {
        Monomial(vec![0; num_gens])
    }

    pub fn generator(num_gens: usize, idx: usize) -> Self {
        let mut e = vec![0; num_gens];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, gen_degrees: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(gen_degrees)
            .map(|(&e, &d)| i64::from(e) * d)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Raw exponent sum, ignoring generator degrees.
    pub fn total_exponent(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }
}

/// Graded-lex comparison: weighted degree first; ties broken on exponents
/// of the last declared generator downward (later generators weigh more).
///
/// This is the order under which the catalog's quotient presentations
/// rewrite confluently; see `grassmannian2` for the load-bearing case.
pub fn cmp_graded_lex(a: &Monomial, b: &Monomial, gen_degrees: &[i64]) -> Ordering {
    let da = a.degree(gen_degrees);
    let db = b.degree(gen_degrees);
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (ea, eb) in a.0.iter().zip(&b.0).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Product of two monomials together with its Koszul sign.
///
/// Returns `None` when exterior generators collide (an odd-degree generator
/// squaring to zero away from characteristic 2). The sign counts the odd-odd
/// transpositions needed to interleave `b`'s factors into `a`'s.
pub fn mul_monomials(
    a: &Monomial,
    b: &Monomial,
    gen_degrees: &[i64],
    exterior_odd: bool,
) -> Option<(Monomial, i32)> {
    let n = a.0.len();
    debug_assert_eq!(n, b.0.len());
    let mut exps = vec![0u16; n];
    let mut sign_exp: u64 = 0;
    for i in 0..n {
        let (ea, eb) = (a.0[i], b.0[i]);
        let odd = gen_degrees[i].rem_euclid(2) == 1;
        if exterior_odd && odd && ea + eb > 1 {
            return None;
        }
        exps[i] = ea.checked_add(eb).expect("exponent overflow");
        if exterior_odd && odd && eb == 1 {
            // moving this factor of b left past every odd factor of a
            // declared after position i
            for j in (i + 1)..n {
                if gen_degrees[j].rem_euclid(2) == 1 {
                    sign_exp += u64::from(a.0[j]);
                }
            }
        }
    }
    let sign = if exterior_odd && sign_exp % 2 == 1 { -1 } else { 1 };
    Some((Monomial(exps), sign))
}
