//! Exact ranks of integer matrices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Prime used for the modular rank check, `2³⁰ − 35`.
pub const CHECK_PRIME: u64 = 1_073_741_789;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    fn sparse_rows(&self) -> impl Iterator<Item = Vec<(usize, i64)>> + '_ {
        (0..self.rows).map(move |i| {
            (0..self.cols)
                .filter_map(|j| {
                    let v = self.get(i, j);
                    (v != 0).then_some((j, v))
                })
                .collect()
        })
    }
}

type SparseRow = Vec<(usize, BigInt)>;

// a·x − b·y over sparse rows sorted by column
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(usize::MAX, |e| e.0);
        let cy = y.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if cx < cy {
            i += 1;
            (cx, a * &x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (cx, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn remove_content(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

/// Rank over the rationals by fraction-free row reduction over the integers.
///
/// Rows are reduced against the pivot rows one by one (`r ← p·r − c·P`, which
/// preserves the rational row space) and divided by their content to keep
/// entries small.
pub fn rank_exact(m: &IntMatrix) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for row in m.sparse_rows() {
        let mut row: SparseRow = row.into_iter().map(|(j, v)| (j, BigInt::from(v))).collect();
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = pivots.get(lead) else {
                break;
            };
            let a = pivot[0].1.clone();
            let b = row[0].1.clone();
            row = combine(&a, &row, &b, pivot);
            remove_content(&mut row);
        }
        if let Some(&(lead, _)) = row.first() {
            pivots.insert(lead, row);
        }
    }
    pivots.len()
}

/// Rank over `F_p`.
pub fn rank_mod_prime(m: &IntMatrix, p: u64) -> usize {
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let inv = |a: u64| {
        let (mut base, mut exp, mut acc) = (a, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % p as u128) as u64;
            }
            base = (base as u128 * base as u128 % p as u128) as u64;
            exp >>= 1;
        }
        acc
    };
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in m.sparse_rows() {
        let mut row: Vec<(usize, u64)> = row
            .into_iter()
            .map(|(j, v)| (j, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, c)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                break;
            };
            // pivot rows are monic
            let mut next = Vec::with_capacity(row.len() + pivot.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < pivot.len() {
                let ci = row.get(i).map_or(usize::MAX, |e| e.0);
                let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
                let (col, v) = if ci < cj {
                    i += 1;
                    (ci, row[i - 1].1)
                } else if cj < ci {
                    j += 1;
                    (
                        cj,
                        (p - (c as u128 * pivot[j - 1].1 as u128 % p as u128) as u64) % p,
                    )
                } else {
                    i += 1;
                    j += 1;
                    let sub = (c as u128 * pivot[j - 1].1 as u128 % p as u128) as u64;
                    (ci, (row[i - 1].1 + p - sub) % p)
                };
                if v != 0 {
                    next.push((col, v));
                }
            }
            row = next;
        }
        if let Some(&(lead, c)) = row.first() {
            let scale = inv(c);
            for e in row.iter_mut() {
                e.1 = (e.1 as u128 * scale as u128 % p as u128) as u64;
            }
            pivots.insert(lead, row);
        }
    }
    pivots.len()
}

/// Exact rank, cross-checked against the rank modulo [`CHECK_PRIME`].
pub fn rank(m: &IntMatrix) -> Result<usize> {
    let exact = rank_exact(m);
    let modular = rank_mod_prime(m, CHECK_PRIME);
    if exact != modular {
        return Err(Error::RankMismatch {
            exact,
            modular,
            prime: CHECK_PRIME,
        });
    }
    Ok(exact)
}
