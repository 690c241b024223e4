//! Homology classes, the cup pairing against the fundamental class, and
//! Poincaré duality in both directions.
//!
//! A class in `H_k(M)` is stored by its coordinates in the basis dual to
//! the normal-form monomial basis of `H^k(M)`. Duality from cohomology is
//! evaluation of the pairing; duality back is a pairing-matrix solve.

use crate::graded_algebra::linalg::Matrix;
use crate::graded_algebra::{GradedElement, Monomial, Ring, Scalar};
use crate::Error;

use super::ManifoldData;

/// A homology class of `space`, written in the dual of the degree-`degree`
/// cohomology monomial basis.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyClass {
    pub space: String,
    pub ring: Ring,
    /// Homological degree.
    pub degree: i64,
    /// Coordinates aligned with `ring.basis_in_degree(degree)`.
    pub coords: Vec<Scalar>,
}

impl HomologyClass {
    pub fn is_zero(&self) -> bool {
        let c = self.ring.coefficients();
        self.coords.iter().all(|x| c.is_zero(x))
    }

    pub fn add(&self, other: &HomologyClass) -> Result<HomologyClass, Error> {
        if self.space != other.space || self.degree != other.degree {
            return Err(Error::Domain(
                "homology classes live in different groups".into(),
            ));
        }
        let c = self.ring.coefficients();
        Ok(HomologyClass {
            space: self.space.clone(),
            ring: self.ring.clone(),
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| c.add(a, b))
                .collect(),
        })
    }
}

impl ManifoldData {
    /// Evaluate the top-degree functional (integration against the
    /// fundamental class) on an element.
    pub fn integral(&self, x: &GradedElement) -> Scalar {
        let c = self.cohomology.coefficients();
        let mut acc = c.zero();
        for (m, coeff) in x.terms() {
            if self.cohomology.monomial_degree(m) != self.dim {
                continue;
            }
            if let Some((_, w)) = self.integral_support.iter().find(|(sm, _)| sm == m) {
                acc = c.add(&acc, &c.mul(coeff, w));
            }
        }
        acc
    }

    /// Kronecker pairing of `x` in `H^k` against `y` in `H_k`.
    pub fn kronecker(&self, x: &GradedElement, y: &HomologyClass) -> Result<Scalar, Error> {
        let k = y.degree;
        let basis = self.cohomology.basis_in_degree(k)?;
        let c = self.cohomology.coefficients();
        let mut acc = c.zero();
        for (m, coeff) in x.terms() {
            if self.cohomology.monomial_degree(m) != k {
                return Err(Error::Algebra(
                    crate::graded_algebra::AlgebraError::InhomogeneousElement,
                ));
            }
            let idx = basis
                .iter()
                .position(|b| b == m)
                .expect("normal-form monomial appears in its degree basis");
            acc = c.add(&acc, &c.mul(coeff, &y.coords[idx]));
        }
        Ok(acc)
    }

    /// Does Poincaré duality hold over the coefficient ring in use?
    pub fn duality_available(&self) -> bool {
        self.cohomology.coefficients().char_two() || self.orientable_z
    }

    fn require_duality(&self) -> Result<(), Error> {
        if self.duality_available() {
            Ok(())
        } else {
            Err(Error::DualityUnavailable {
                space: self.name.clone(),
            })
        }
    }

    /// Matrix of the cup pairing `H^k x H^{d-k} -> coefficients`,
    /// rows indexed by the degree-`k` basis.
    pub fn pairing_matrix(&self, k: i64) -> Result<Matrix, Error> {
        let c = self.cohomology.coefficients();
        let rows_basis = self.cohomology.basis_in_degree(k)?;
        let cols_basis = self.cohomology.basis_in_degree(self.dim - k)?;
        let mut rows = Vec::with_capacity(rows_basis.len());
        for bi in &rows_basis {
            let xi = self.cohomology.monomial_elem(bi.clone());
            let mut row = Vec::with_capacity(cols_basis.len());
            for bj in &cols_basis {
                let xj = self.cohomology.monomial_elem(bj.clone());
                row.push(self.integral(&xi.mul(&xj)?));
            }
            rows.push(row);
        }
        Ok(Matrix::from_rows(c, rows))
    }

    /// Nondegeneracy of the cup pairing in every degree.
    pub fn verify_duality(&self) -> Result<(), Error> {
        self.require_duality()?;
        for k in 0..=self.dim {
            let m = self.pairing_matrix(k)?;
            if m.rows != m.cols || !m.invertible() {
                return Err(Error::Domain(format!(
                    "cup pairing of {} is degenerate in degree {k}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// `PD: H^k -> H_{d-k}`, evaluation of the pairing against `x`.
    pub fn pd_coh_to_hom(&self, x: &GradedElement) -> Result<HomologyClass, Error> {
        self.require_duality()?;
        if !x.is_homogeneous() {
            return Err(Error::Algebra(
                crate::graded_algebra::AlgebraError::InhomogeneousElement,
            ));
        }
        let k = x.degree().unwrap_or(0);
        let hom_degree = self.dim - k;
        let basis = self.cohomology.basis_in_degree(hom_degree)?;
        let mut coords = Vec::with_capacity(basis.len());
        for b in &basis {
            let bj = self.cohomology.monomial_elem(b.clone());
            coords.push(self.integral(&bj.mul(x)?));
        }
        Ok(HomologyClass {
            space: self.name.clone(),
            ring: self.cohomology.clone(),
            degree: hom_degree,
            coords,
        })
    }

    /// `PD^{-1}: H_m -> H^{d-m}`, a pairing-matrix solve.
    pub fn pd_hom_to_coh(&self, y: &HomologyClass) -> Result<GradedElement, Error> {
        self.require_duality()?;
        let k = self.dim - y.degree;
        let matrix = self.pairing_matrix(y.degree)?;
        // solve pairing * xi = y.coords for the coordinates of xi in H^k
        let xi = matrix.solve(&y.coords)?;
        let basis = self.cohomology.basis_in_degree(k)?;
        let terms: Vec<(Monomial, Scalar)> = basis.into_iter().zip(xi).collect();
        Ok(self.cohomology.element_from_terms(terms))
    }

    /// The fundamental class, dual of the unit.
    pub fn fundamental_class(&self) -> Result<HomologyClass, Error> {
        self.pd_coh_to_hom(&self.cohomology.one())
    }
}
