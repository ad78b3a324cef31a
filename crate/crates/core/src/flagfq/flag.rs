use alloc::format;
use alloc::vec::Vec;

use super::field::PrimeField;
use super::matrix::FpMatrix;
use crate::error::{Error, Result};
use crate::weyl::{self, Permutation};

/// Default cap on the size of any enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// A complete flag in `F_p^n`: the `i`-th subspace is spanned by the first `i`
/// columns of an invertible matrix. The matrix is kept in column echelon form
/// (see [`FpMatrix::column_echelon`]), so equal flags have equal
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    basis: FpMatrix,
    // row index (0-based) of the pivot of each column
    pivots: Vec<usize>,
}

impl Flag {
    pub fn from_matrix(matrix: &FpMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() || matrix.rows() == 0 {
            return Err(Error::invalid("a flag needs a nonempty square matrix"));
        }
        let mut basis = matrix.clone();
        let pivots = basis
            .column_echelon()
            .ok_or_else(|| Error::invalid("flag basis matrix is singular"))?;
        Ok(Self { basis, pivots })
    }

    /// The flag `e_1 ⊂ (e_1, e_2) ⊂ ...`.
    pub fn standard(n: usize, field: PrimeField) -> Self {
        Self::from_matrix(&FpMatrix::identity(n, field)).unwrap()
    }

    /// The flag `e_n ⊂ (e_n, e_{n-1}) ⊂ ...`.
    pub fn antistandard(n: usize, field: PrimeField) -> Self {
        canonical_cell_point(&weyl::longest_element(n), field)
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.basis
    }

    /// The Schubert cell containing this flag, i.e. its position relative to
    /// the standard flag.
    pub fn cell(&self) -> Permutation {
        Permutation::from_window(&self.pivots.iter().map(|&r| r + 1).collect::<Vec<_>>())
            .expect("pivots of an invertible matrix form a permutation")
    }

    /// `g · F` for an invertible `g`.
    pub fn transform(&self, g: &FpMatrix) -> Result<Flag> {
        if g.rows() != self.rank() || g.cols() != self.rank() || g.field() != self.field() {
            return Err(Error::invalid("transformation does not match the flag"));
        }
        Flag::from_matrix(&g.mul(&self.basis))
    }
}

/// An upper triangular matrix with unit diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnipotentMatrix {
    matrix: FpMatrix,
}

impl UnipotentMatrix {
    pub fn new(matrix: FpMatrix) -> Result<Self> {
        let n = matrix.rows();
        if matrix.cols() != n {
            return Err(Error::invalid("unipotent matrix must be square"));
        }
        for i in 0..n {
            for j in 0..=i {
                let expected = u32::from(i == j);
                if matrix.get(i, j) != expected {
                    return Err(Error::invalid(format!(
                        "entry ({i},{j}) of a unipotent matrix must be {expected}"
                    )));
                }
            }
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn act(&self, flag: &Flag) -> Flag {
        flag.transform(&self.matrix)
            .expect("unipotent matrices are invertible")
    }
}

/// `[n]_p! = Π_{k=1}^{n} (1 + p + ... + p^{k-1})`, the number of flags over `F_p`.
pub fn flag_count(n: usize, p: u64) -> u128 {
    let p = p as u128;
    let mut total: u128 = 1;
    let mut bracket: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        bracket = bracket.saturating_add(power);
        power = power.saturating_mul(p);
        total = total.saturating_mul(bracket);
    }
    total
}

/// `p^{n(n-1)/2}`, the order of the unipotent group.
pub fn unipotent_count(n: usize, p: u64) -> u128 {
    let exp = (n * n.saturating_sub(1) / 2) as u32;
    (p as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

pub(crate) fn check_cap(what: &'static str, required: u128, cap: u128) -> Result<()> {
    if required > cap {
        return Err(Error::ResourceLimit {
            what,
            required,
            cap,
        });
    }
    Ok(())
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > weyl::MAX_ENUMERATION_RANK {
        return Err(Error::invalid(format!(
            "rank {n} outside 1..={}",
            weyl::MAX_ENUMERATION_RANK
        )));
    }
    Ok(())
}

/// Odometer over `slots.len()` digits in `0..p`, calling `visit` on each assignment.
fn for_each_assignment(slots: usize, p: u32, mut visit: impl FnMut(&[u32])) {
    let mut digits = alloc::vec![0u32; slots];
    loop {
        visit(&digits);
        let Some(k) = (0..slots).rev().find(|&k| digits[k] + 1 < p) else {
            return;
        };
        digits[k] += 1;
        for d in &mut digits[k + 1..] {
            *d = 0;
        }
    }
}

/// Every flag of the Schubert cell `X_w` (position `w` relative to the
/// standard flag), as `p^{l(w)}` echelon representatives.
pub fn enumerate_cell(w: &Permutation, field: PrimeField) -> Vec<Flag> {
    let n = w.rank();
    let window = w.to_vec();
    // free entries: column j, rows above w(j) not used by an earlier pivot
    let mut slots = Vec::new();
    for j in 0..n {
        for i in 0..window[j] - 1 {
            if !window[..j].contains(&(i + 1)) {
                slots.push((i, j));
            }
        }
    }
    let base = canonical_cell_point(w, field);
    let mut out = Vec::new();
    for_each_assignment(slots.len(), field.modulus(), |digits| {
        let mut m = base.basis.clone();
        for (&(i, j), &d) in slots.iter().zip(digits) {
            m.set(i, j, d);
        }
        out.push(Flag {
            basis: m,
            pivots: base.pivots.clone(),
        });
    });
    out
}

/// All `[n]_p!` flags of `F_p^n`, cell by cell in lexicographic order of `S_n`.
pub fn enumerate_flags(n: usize, p: u64, cap: u128) -> Result<Vec<Flag>> {
    check_rank(n)?;
    let field = PrimeField::new(p)?;
    check_cap("flag enumeration", flag_count(n, p), cap)?;
    let mut out = Vec::with_capacity(flag_count(n, p) as usize);
    for w in weyl::enumerate(n)? {
        out.extend(enumerate_cell(&w, field));
    }
    Ok(out)
}

/// All unit upper triangular `n × n` matrices over `F_p`.
pub fn enumerate_unipotent(n: usize, p: u64, cap: u128) -> Result<Vec<UnipotentMatrix>> {
    check_rank(n)?;
    let field = PrimeField::new(p)?;
    check_cap("unipotent enumeration", unipotent_count(n, p), cap)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::with_capacity(unipotent_count(n, p) as usize);
    for_each_assignment(slots.len(), field.modulus(), |digits| {
        let mut m = FpMatrix::identity(n, field);
        for (&(i, j), &d) in slots.iter().zip(digits) {
            m.set(i, j, d);
        }
        out.push(UnipotentMatrix { matrix: m });
    });
    Ok(out)
}

/// The permutation-matrix flag with columns `e_{w(1)}, ..., e_{w(n)}`.
pub fn canonical_cell_point(w: &Permutation, field: PrimeField) -> Flag {
    let n = w.rank();
    let mut m = FpMatrix::zeros(n, n, field);
    for j in 0..n {
        m.set(w.apply(j + 1) - 1, j, 1);
    }
    Flag {
        basis: m,
        pivots: w.window().map(|v| v - 1).collect(),
    }
}
