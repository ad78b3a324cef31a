//! The Iwahori–Hecke algebra of `S_n` over `Z[q]` in the `T` basis, normalized
//! by `T_s² = (q − 1) T_s + q T_e`.
//!
//! With this normalization the structure constants are point counts: if flags
//! `x, z` over `F_q` are in relative position `w`, then the coefficient of
//! `T_w` in `T_u T_v` is the number of flags `y` with `pos(x, y) = u` and
//! `pos(y, z) = v`. The brute-force tests in `flagfq` pin this orientation.
//!
//! [`HeckeElement`] is the sparse, map-backed public type. [`DenseHecke`]
//! indexes all of `S_n` once and is what the heavier computations run on.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use crate::weyl::{self, Permutation, PermutationTable};

/// Largest rank accepted by [`t_w0_squared`].
pub const MAX_SQUARE_RANK: usize = weyl::MAX_ENUMERATION_RANK;

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, IntPolynomial>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `T_e`.
    pub fn one(n: usize) -> Self {
        Self::basis(&Permutation::identity(n))
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), IntPolynomial::one());
        Self { n: w.rank(), terms }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &IntPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Permutation) -> IntPolynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Adds `c · T_w`, dropping the term if it cancels.
    pub fn add_term(&mut self, w: &Permutation, c: &IntPolynomial) -> Result<()> {
        self.check_rank(w.rank())?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(w);
        }
        Ok(())
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::invalid(format!(
                "Hecke algebra of S_{} cannot take an element of S_{n}",
                self.n
            )));
        }
        Ok(())
    }

    /// Right multiplication by `T_{s_i}`.
    pub fn mul_by_generator(&self, i: usize) -> Result<HeckeElement> {
        if i == 0 || i >= self.n {
            return Err(Error::invalid(format!(
                "generator index {i} out of range 1..{}",
                self.n
            )));
        }
        let mut out = HeckeElement::zero(self.n);
        let q = IntPolynomial::q();
        let q_minus_one = IntPolynomial::from_coefficients([-1, 1]);
        for (w, c) in &self.terms {
            let ws = w.right_mul_simple(i);
            if w.has_right_descent(i) {
                out.add_term(w, &(c * &q_minus_one))?;
                out.add_term(&ws, &(c * &q))?;
            } else {
                out.add_term(&ws, c)?;
            }
        }
        Ok(out)
    }

    /// The product `self · other`. Each `T_v` of `other` is expanded along a
    /// reduced word of `v`.
    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_rank(other.n)?;
        let mut out = HeckeElement::zero(self.n);
        for (v, c) in &other.terms {
            let mut partial = self.clone();
            for i in v.reduced_word() {
                partial = partial.mul_by_generator(i)?;
            }
            for (w, d) in &partial.terms {
                out.add_term(w, &(d * c))?;
            }
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `q = q0`; zero values are kept.
    pub fn specialize(&self, q0: &BigInt) -> BTreeMap<Permutation, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.evaluate(q0)))
            .collect()
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·T{w}")?;
        }
        Ok(())
    }
}

pub fn mul_by_generator(h: &HeckeElement, i: usize) -> Result<HeckeElement> {
    h.mul_by_generator(i)
}

pub fn mul(h1: &HeckeElement, h2: &HeckeElement) -> Result<HeckeElement> {
    h1.mul(h2)
}

/// The coefficient of `T_w` in `T_u · T_v`.
pub fn structure_coefficient(
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
) -> Result<IntPolynomial> {
    if u.rank() != v.rank() || u.rank() != w.rank() {
        return Err(Error::invalid("structure coefficient of mixed ranks"));
    }
    Ok(HeckeElement::basis(u)
        .mul(&HeckeElement::basis(v))?
        .coefficient(w))
}

/// `T_{w₀}²` for `S_n`, `n <= 8`.
pub fn t_w0_squared(n: usize) -> Result<HeckeElement> {
    let algebra = DenseHecke::new(n)?;
    Ok(algebra.to_sparse(&algebra.t_w0_squared()))
}

pub fn specialize(h: &HeckeElement, q0: &BigInt) -> BTreeMap<Permutation, BigInt> {
    h.specialize(q0)
}

/// Hecke elements stored as one coefficient per element of `S_n`, indexed by
/// [`PermutationTable`].
#[derive(Debug, Clone)]
pub struct DenseHecke {
    table: PermutationTable,
}

pub type DenseElement = Vec<IntPolynomial>;

impl DenseHecke {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            table: PermutationTable::new(n)?,
        })
    }

    pub fn table(&self) -> &PermutationTable {
        &self.table
    }

    pub fn zero(&self) -> DenseElement {
        vec![IntPolynomial::zero(); self.table.len()]
    }

    pub fn basis(&self, index: usize) -> DenseElement {
        let mut h = self.zero();
        h[index] = IntPolynomial::one();
        h
    }

    /// In place `h ← h · T_{s_i}`.
    pub fn right_mul_generator(&self, h: &mut DenseElement, i: usize) {
        self.mul_generator(h, |k| self.table.right_mul_simple(k, i));
    }

    /// In place `h ← T_{s_i} · h`.
    pub fn left_mul_generator(&self, h: &mut DenseElement, i: usize) {
        self.mul_generator(h, |k| self.table.left_mul_simple(k, i));
    }

    // The generator action pairs each x with its neighbour y = x·s (or s·x).
    // For l(x) < l(y): T_x ↦ T_y and T_y ↦ (q−1) T_y + q T_x.
    fn mul_generator(&self, h: &mut DenseElement, neighbour: impl Fn(usize) -> usize) {
        for lower in 0..h.len() {
            let upper = neighbour(lower);
            if self.table.length(upper) < self.table.length(lower) {
                continue;
            }
            if h[lower].is_zero() && h[upper].is_zero() {
                continue;
            }
            let c_lower = core::mem::take(&mut h[lower]);
            let c_upper = core::mem::take(&mut h[upper]);
            let mut new_upper = c_lower;
            new_upper.add_shifted_scaled(&c_upper, 1, 1);
            new_upper.add_shifted_scaled(&c_upper, 0, -1);
            h[lower] = c_upper.shift(1);
            h[upper] = new_upper;
        }
    }

    /// `h · T_w`.
    pub fn right_mul_basis(&self, h: &mut DenseElement, w: usize) {
        for i in self.table.element(w).reduced_word() {
            self.right_mul_generator(h, i);
        }
    }

    /// `T_w · h`.
    pub fn left_mul_basis(&self, h: &mut DenseElement, w: usize) {
        for i in self.table.element(w).reduced_word().into_iter().rev() {
            self.left_mul_generator(h, i);
        }
    }

    pub fn t_w0_squared(&self) -> DenseElement {
        let w0 = self.table.longest_index();
        let mut h = self.basis(w0);
        self.right_mul_basis(&mut h, w0);
        h
    }

    pub fn to_sparse(&self, h: &DenseElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.table.rank());
        for (k, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(self.table.element(k).clone(), c.clone());
            }
        }
        out
    }

    pub fn from_sparse(&self, h: &HeckeElement) -> Result<DenseElement> {
        if h.rank() != self.table.rank() {
            return Err(Error::invalid("rank mismatch"));
        }
        let mut out = self.zero();
        for (w, c) in h.terms() {
            out[self.table.index_of(w)] = c.clone();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::longest_element;

    fn p(window: &[usize]) -> Permutation {
        Permutation::from_window(window).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coefficients(c.iter().copied())
    }

    #[test]
    fn generator_examples() {
        let e = Permutation::identity(2);
        let s1 = p(&[2, 1]);
        let t_s1 = HeckeElement::one(2).mul_by_generator(1).unwrap();
        assert_eq!(t_s1, HeckeElement::basis(&s1));

        let square = t_s1.mul_by_generator(1).unwrap();
        assert_eq!(square.coefficient(&s1), poly(&[-1, 1]));
        assert_eq!(square.coefficient(&e), poly(&[0, 1]));

        // T_s³ = (q² − q + 1) T_s + (q² − q) T_e
        let cube = square.mul_by_generator(1).unwrap();
        assert_eq!(cube.coefficient(&s1), poly(&[1, -1, 1]));
        assert_eq!(cube.coefficient(&e), poly(&[0, -1, 1]));

        assert!(t_s1.mul_by_generator(2).is_err());
        assert!(t_s1.mul_by_generator(0).is_err());
    }

    #[test]
    fn mul_examples() {
        let s1 = p(&[2, 1]);
        let h = HeckeElement::basis(&s1);
        assert_eq!(HeckeElement::one(2).mul(&h).unwrap(), h);
        let square = h.mul(&h).unwrap();
        assert_eq!(square.coefficient(&s1), poly(&[-1, 1]));
        assert_eq!(
            square.coefficient(&Permutation::identity(2)),
            IntPolynomial::q()
        );
        assert_eq!(square.support_len(), 2);
        assert!(h.mul(&HeckeElement::one(3)).is_err());
    }

    #[test]
    fn structure_coefficient_examples() {
        let e = Permutation::identity(2);
        let s1 = p(&[2, 1]);
        assert_eq!(
            structure_coefficient(&s1, &s1, &e).unwrap(),
            IntPolynomial::q()
        );
        assert_eq!(
            structure_coefficient(&s1, &s1, &s1).unwrap(),
            poly(&[-1, 1])
        );
        let w0 = longest_element(3);
        assert_eq!(
            structure_coefficient(&w0, &w0, &Permutation::identity(3)).unwrap(),
            IntPolynomial::monomial(3)
        );
        assert!(structure_coefficient(&s1, &w0, &w0).is_err());
    }

    #[test]
    fn t_w0_squared_examples() {
        let sq = t_w0_squared(2).unwrap();
        assert_eq!(
            sq.coefficient(&Permutation::identity(2)),
            IntPolynomial::q()
        );
        assert_eq!(sq.coefficient(&p(&[2, 1])), poly(&[-1, 1]));
        assert_eq!(
            t_w0_squared(3)
                .unwrap()
                .coefficient(&Permutation::identity(3)),
            IntPolynomial::monomial(3)
        );
        assert!(t_w0_squared(9).unwrap_err().is_resource_limit());
    }

    #[test]
    fn specialize_examples() {
        let sq = t_w0_squared(2).unwrap();
        let e = Permutation::identity(2);
        let s1 = p(&[2, 1]);
        let at1 = sq.specialize(&BigInt::from(1));
        assert_eq!(at1[&e], BigInt::from(1));
        assert_eq!(at1[&s1], BigInt::from(0));
        let at2 = sq.specialize(&BigInt::from(2));
        assert_eq!(at2[&e], BigInt::from(2));
        assert_eq!(at2[&s1], BigInt::from(1));
        let unit = HeckeElement::one(3).specialize(&BigInt::from(7));
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[&Permutation::identity(3)], BigInt::from(1));
    }

    #[test]
    fn dense_matches_sparse() {
        for n in 1..=4 {
            let w0 = longest_element(n);
            let sparse = HeckeElement::basis(&w0)
                .mul(&HeckeElement::basis(&w0))
                .unwrap();
            assert_eq!(t_w0_squared(n).unwrap(), sparse);
        }
        let algebra = DenseHecke::new(3).unwrap();
        for u in 0..6 {
            for v in 0..6 {
                let mut left = algebra.basis(v);
                algebra.left_mul_basis(&mut left, u);
                let mut right = algebra.basis(u);
                algebra.right_mul_basis(&mut right, v);
                assert_eq!(left, right);
                let sparse = HeckeElement::basis(algebra.table().element(u))
                    .mul(&HeckeElement::basis(algebra.table().element(v)))
                    .unwrap();
                assert_eq!(algebra.to_sparse(&left), sparse);
            }
        }
    }

    #[test]
    fn add_term_cancels() {
        let s1 = p(&[2, 1]);
        let mut h = HeckeElement::basis(&s1);
        h.add_term(&s1, &poly(&[-1])).unwrap();
        assert!(h.is_zero());
        assert!(h.add_term(&Permutation::identity(3), &poly(&[1])).is_err());
    }
}
