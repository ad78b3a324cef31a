use alloc::vec;
use alloc::vec::Vec;

use super::field::PrimeField;

/// Dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        Self {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows of integers, reducing each entry modulo `p`.
    pub fn from_rows(rows: &[Vec<i64>], field: PrimeField) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.reduce(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let p = self.field.modulus() as u64;
        let mut out = FpMatrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                out.set(i, j, (acc % p) as u32);
            }
        }
        out
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.rows, k, self.field);
        for i in 0..self.rows {
            for j in 0..k {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows, "shape mismatch");
        let mut out = FpMatrix::zeros(self.rows, self.cols + other.cols, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(pivot, rank);
            let inv = f.inv(m.get(rank, col));
            for r in rank + 1..m.rows {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(rank, c)));
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

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Inverse by Gauss–Jordan; `None` if singular or not square.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut m = self.clone();
        let mut inv = FpMatrix::identity(n, f);
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0)?;
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let scale = f.inv(m.get(col, col));
            for j in 0..n {
                m.set(col, j, f.mul(m.get(col, j), scale));
                inv.set(col, j, f.mul(inv.get(col, j), scale));
            }
            for r in 0..n {
                let factor = m.get(r, col);
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    m.set(r, j, f.sub(m.get(r, j), f.mul(factor, m.get(col, j))));
                    inv.set(r, j, f.sub(inv.get(r, j), f.mul(factor, inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }

    /// Column reduction by right multiplication with upper triangular matrices.
    ///
    /// On return column `j` has a 1 in row `pivots[j]`, zeros below it, and
    /// zeros in the pivot rows of earlier columns. This is the unique
    /// representative of the flag spanned by the columns. Returns `None` if
    /// the matrix is singular.
    pub fn column_echelon(&mut self) -> Option<Vec<usize>> {
        let n = self.rows;
        let f = self.field;
        let mut pivots = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            // clear the bottom-most entries that sit in earlier pivot rows
            let pivot = loop {
                let bottom = (0..n).rev().find(|&i| self.get(i, j) != 0)?;
                match pivots.iter().position(|&r| r == bottom) {
                    Some(k) => self.eliminate(j, k, bottom),
                    None => break bottom,
                }
            };
            for (k, &r) in pivots.iter().enumerate() {
                if r < pivot && self.get(r, j) != 0 {
                    self.eliminate(j, k, r);
                }
            }
            let scale = f.inv(self.get(pivot, j));
            for i in 0..=pivot {
                self.set(i, j, f.mul(self.get(i, j), scale));
            }
            pivots.push(pivot);
        }
        Some(pivots)
    }

    // col_j -= col_j[row] · col_k, where col_k is already normalized with a 1 at `row`
    fn eliminate(&mut self, j: usize, k: usize, row: usize) {
        let f = self.field;
        let factor = self.get(row, j);
        for i in 0..=row {
            let v = f.sub(self.get(i, j), f.mul(factor, self.get(i, k)));
            self.set(i, j, v);
        }
    }

    /// Pivot rows of the column echelon form, without keeping the reduced matrix.
    pub fn echelon_pivots(&self) -> Option<Vec<usize>> {
        self.clone().column_echelon()
    }
}
