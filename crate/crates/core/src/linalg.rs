//! Dense matrices over a finite field and exact Gaussian elimination.

use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<'f> {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement<'f>>,
}

impl<'f> Matrix<'f> {
    pub fn zeros(field: &'f FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &'f FieldSpec, size: usize) -> Self {
        let mut m = Self::zeros(field, size, size);
        for i in 0..size {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> FieldElement<'f>,
    ) -> Self {
        let data = (0..rows * cols)
            .map(|k| entry(k / cols, k % cols))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement<'f> {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement<'f>) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Matrix<'f>) -> Matrix<'f> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .reduce(|a, b| a + b)
                .expect("inner dimension is positive")
        })
    }

    pub fn sub(&self, other: &Matrix<'f>) -> Matrix<'f> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        })
    }

    /// Kronecker product; entry `((i, k), (j, l))` of `A ⊗ B` sits at row
    /// `i * B.rows + k`, column `j * B.cols + l`.
    pub fn kron(&self, other: &Matrix<'f>) -> Matrix<'f> {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols)
        })
    }

    /// Rank via row reduction to echelon form.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot != rank {
                for c in 0..m.cols {
                    m.data.swap(pivot * m.cols + c, rank * m.cols + c);
                }
            }
            let inv = m.get(rank, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(rank, c) * inv;
                m.set(rank, c, v);
            }
            for r in 0..m.rows {
                if r == rank || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col);
                for c in col..m.cols {
                    let v = m.get(r, c) - factor * m.get(rank, c);
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Dimension of the right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}
