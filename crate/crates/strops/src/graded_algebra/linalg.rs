//! Small exact matrices over the coefficient rings, enough for pairing
//! inversion and rank checks. Integer elimination is fraction-free (Bareiss).

use super::coeff::{Coefficients, Scalar};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub coeffs: Coefficients,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(coeffs: Coefficients, rows: usize, cols: usize) -> Self {
        Matrix {
            coeffs,
            rows,
            cols,
            data: vec![coeffs.zero(); rows * cols],
        }
    }

    pub fn from_rows(coeffs: Coefficients, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix {
            coeffs,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_echelon()
    }

    /// Fraction-free row reduction; returns the rank. Over a field this is
    /// ordinary Gaussian elimination.
    fn row_echelon(&mut self) -> usize {
        let c = self.coeffs;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            let Some(src) = (pivot_row..self.rows).find(|&r| !c.is_zero(self.get(r, col))) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            for r in (pivot_row + 1)..self.rows {
                if c.is_zero(self.get(r, col)) {
                    continue;
                }
                // row_r := pivot*row_r - entry*row_pivot (kills column col)
                let p = self.get(pivot_row, col).clone();
                let e = self.get(r, col).clone();
                for j in 0..self.cols {
                    let v = c.sub(
                        &c.mul(&p, self.get(r, j)),
                        &c.mul(&e, self.get(pivot_row, j)),
                    );
                    self.set(r, j, v);
                }
            }
            pivot_row += 1;
            if pivot_row == self.rows {
                break;
            }
        }
        pivot_row
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant of a square matrix (Bareiss over the integers).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let c = self.coeffs;
        if n == 0 {
            return c.one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = c.one();
        for k in 0..n - 1 {
            if c.is_zero(m.get(k, k)) {
                let Some(src) = ((k + 1)..n).find(|&r| !c.is_zero(m.get(r, k))) else {
                    return c.zero();
                };
                m.swap_rows(k, src);
                sign_flip = !sign_flip;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = c.sub(
                        &c.mul(m.get(k, k), m.get(i, j)),
                        &c.mul(m.get(i, k), m.get(k, j)),
                    );
                    let v = c
                        .div_exact(&num, &prev)
                        .expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
                m.set(i, k, c.zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign_flip {
            c.neg(&d)
        } else {
            d
        }
    }

    /// Is this square matrix invertible over its coefficient ring?
    /// Over the integers that means determinant `±1`.
    pub fn invertible(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        self.coeffs.is_unit(&self.det())
    }

    /// Solve `A x = b` for square invertible `A`; exact over both rings.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let c = self.coeffs;
        let det = self.det();
        if !c.is_unit(&det) {
            return Err(AlgebraError::SingularPairing);
        }
        // Cramer's rule; matrices here are small.
        let mut x = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut m = self.clone();
            for i in 0..self.rows {
                m.set(i, j, b[i].clone());
            }
            let dj = m.det();
            let v = c
                .div_exact(&dj, &det)
                .ok_or(AlgebraError::SingularPairing)?;
            x.push(v);
        }
        Ok(x)
    }

}
