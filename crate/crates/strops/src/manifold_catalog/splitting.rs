//! Build-time derivation of the Steenrod generator table for the
//! Grassmannian families via the splitting principle.
//!
//! The tautological classes map to elementary symmetric functions of two
//! degree-one line classes; total squares are computed there and pulled
//! back along that embedding.

use crate::graded_algebra::{make_ring, Coefficients, GradedElement};
use crate::Error;

/// Total Steenrod square of the elementary symmetric classes `w1 = a+b`,
/// `w2 = ab` inside `F_2[a,b]`, re-expressed in `w1, w2` and returned as
/// strings in the ambient polynomial ring on `w1, w2`.
///
/// The result is independent of which truncation the classes land in.
pub fn gr2_generator_squares() -> Result<Vec<(String, Vec<String>)>, Error> {
    let f2 = Coefficients::prime_field(2)?;
    let split = make_ring(&[("a", 1), ("b", 1)], &[], f2, 24)?;
    let a = split.gen_by_name("a")?;
    let b = split.gen_by_name("b")?;
    // Sq(a) = a + a^2, Sq(b) = b + b^2
    let sq_a = a.add(&a.pow(2)?)?;
    let sq_b = b.add(&b.pow(2)?)?;
    let w1_img = a.add(&b)?;
    let w2_img = a.mul(&b)?;
    let sq_w1 = sq_a.add(&sq_b)?;
    let sq_w2 = sq_a.mul(&sq_b)?;

    let mut out = Vec::new();
    for (name, degree, total) in [("w1", 1i64, sq_w1), ("w2", 2, sq_w2)] {
        let mut comps = Vec::new();
        for i in 0..=degree {
            let comp = total.degree_component(degree + i);
            let sym = symmetric_to_elementary(&comp, &w1_img, &w2_img)?;
            comps.push(sym);
        }
        out.push((name.to_string(), comps));
    }
    Ok(out)
}

/// Rewrite a symmetric polynomial in `F_2[a,b]` as a polynomial string in
/// the elementary symmetric functions, by repeated leading-term subtraction.
fn symmetric_to_elementary(
    x: &GradedElement,
    e1: &GradedElement,
    e2: &GradedElement,
) -> Result<String, Error> {
    let mut rest = x.clone();
    let mut parts: Vec<String> = Vec::new();
    while !rest.is_zero() {
        // leading monomial a^p b^q with p >= q (symmetry guarantees one exists)
        let (m, _) = rest.terms()[0].clone();
        let (p, q) = (i64::from(m.0[0]), i64::from(m.0[1]));
        let (p, q) = if p >= q { (p, q) } else { (q, p) };
        let term = e1.pow((p - q) as u32)?.mul(&e2.pow(q as u32)?)?;
        rest = rest.sub(&term)?;
        let mut factors = Vec::new();
        if p - q == 1 {
            factors.push("w1".to_string());
        } else if p - q > 1 {
            factors.push(format!("w1^{}", p - q));
        }
        if q == 1 {
            factors.push("w2".to_string());
        } else if q > 1 {
            factors.push(format!("w2^{q}"));
        }
        parts.push(if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        });
    }
    Ok(if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_squares_of_tautological_classes() {
        let table = gr2_generator_squares().unwrap();
        let find = |g: &str| -> Vec<String> {
            table.iter().find(|(n, _)| n == g).unwrap().1.clone()
        };
        assert_eq!(find("w1"), vec!["w1", "w1^2"]);
        assert_eq!(find("w2"), vec!["w2", "w1*w2", "w2^2"]);
    }
}
