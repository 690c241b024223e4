//! Polynomial string grammar: terms joined by `+`, each term an optional
//! (signed) integer and `*`-joined powers `gen^k`.

use super::coeff::Scalar;
use super::element::GradedElement;
use super::monomial::{mul_monomials, Monomial};
use super::ring::{display_terms_raw, Ring, Terms};
use super::AlgebraError;

impl Ring {
    /// Parse a polynomial in this ring's generators, e.g. `w1^4+w1^2*w2+w2^2`
    /// or `-1*t*c^2`. The result is in normal form.
    pub fn parse(&self, input: &str) -> Result<GradedElement, AlgebraError> {
        let mut terms: Terms = Vec::new();
        for raw in split_terms(input) {
            let t = raw.trim();
            if t.is_empty() {
                return Err(AlgebraError::Parse(format!("empty term in {input:?}")));
            }
            if let Some((m, c)) = self.parse_term(t)? {
                terms.push((m, c));
            }
        }
        Ok(self.element_from_terms(terms))
    }

    fn parse_term(&self, term: &str) -> Result<Option<(Monomial, Scalar)>, AlgebraError> {
        let coeffs = self.coefficients();
        let mut mono = Monomial::one(self.num_gens());
        let mut scalar = coeffs.one();
        for factor in term.split('*') {
            let f = factor.trim();
            if f.is_empty() {
                return Err(AlgebraError::Parse(format!("empty factor in {term:?}")));
            }
            if f.starts_with('-') || f.chars().next().unwrap().is_ascii_digit() {
                let n: i64 = f
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad integer {f:?}")))?;
                scalar = coeffs.mul(&scalar, &coeffs.from_i64(n));
                continue;
            }
            let (name, exp) = match f.split_once('^') {
                Some((n, e)) => {
                    let exp: u16 = e
                        .trim()
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent {e:?}")))?;
                    (n.trim(), exp)
                }
                None => (f, 1),
            };
            let idx = self
                .gen_index(name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
            for _ in 0..exp {
                let g = Monomial::generator(self.num_gens(), idx);
                match mul_monomials(&mono, &g, self.gen_degrees(), coeffs.exterior_odd()) {
                    Some((m, sign)) => {
                        mono = m;
                        if sign < 0 {
                            scalar = coeffs.neg(&scalar);
                        }
                    }
                    None => return Ok(None), // exterior square collapses the term
                }
            }
        }
        if coeffs.is_zero(&scalar) {
            return Ok(None);
        }
        Ok(Some((mono, scalar)))
    }

    /// Canonical string form of an element; re-parses to an equal element.
    pub fn print(&self, x: &GradedElement) -> String {
        display_terms_raw(&x.terms, self.generators())
    }
}

/// Split on `+` at the top level, keeping a leading `-` attached to its term.
fn split_terms(input: &str) -> Vec<String> {
    input.split('+').map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::super::coeff::Coefficients;
    use super::super::ring::Generator;
    use super::*;

    fn f2_gr24() -> Ring {
        let gens = vec![
            Generator { name: "w1".into(), degree: 1 },
            Generator { name: "w2".into(), degree: 2 },
        ];
        let f2 = Coefficients::prime_field(2).unwrap();
        let pre = Ring::make(gens.clone(), vec![], f2, 16).unwrap();
        let rels = vec![
            pre.parse("w1^3").unwrap().terms().to_vec(),
            pre.parse("w1^4+w1^2*w2+w2^2").unwrap().terms().to_vec(),
        ];
        Ring::make(gens, rels, f2, 16).unwrap()
    }

    #[test]
    fn round_trip() {
        let r = f2_gr24();
        let x = r.parse("w1^2*w2+w1").unwrap();
        let s = r.print(&x);
        let y = r.parse(&s).unwrap();
        assert!(x.equal(&y).unwrap());
    }

    #[test]
    fn reduces_on_parse() {
        let r = f2_gr24();
        // w2^2 reduces to w1^2*w2 in H^*(Gr_{2,4}; F_2)
        let x = r.parse("w2^2").unwrap();
        assert_eq!(r.print(&x), "w1^2*w2");
    }

    #[test]
    fn unknown_generator_rejected() {
        let r = f2_gr24();
        assert!(matches!(
            r.parse("w3"),
            Err(AlgebraError::UnknownGenerator(_))
        ));
    }

    #[test]
    fn signed_integer_terms() {
        let z = Coefficients::Integers;
        let r = Ring::make(
            vec![Generator { name: "x".into(), degree: 2 }],
            vec![],
            z,
            16,
        )
        .unwrap();
        let a = r.parse("-2*x+3*x").unwrap();
        assert_eq!(r.print(&a), "x");
        let zero = r.parse("0").unwrap();
        assert!(zero.is_zero());
    }
}
