//! The Weyl group of `SL_n`: the symmetric group `S_n` in one-line notation.
//!
//! A [`Permutation`] stores its window `[w(1), ..., w(n)]` with 1-based
//! values. Composition is function composition: `compose(u, v)(i) = u(v(i))`.
//! Simple transpositions `s_i` (`1 <= i < n`) swap `i` and `i + 1`; multiplying
//! on the right by `s_i` swaps the entries at positions `i` and `i + 1`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;

/// Largest rank for which the whole group may be enumerated.
pub const MAX_ENUMERATION_RANK: usize = 8;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its window, checking that it is a bijection of `1..=n`.
    pub fn from_window(window: &[usize]) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::invalid("permutation of an empty set"));
        }
        if n > u8::MAX as usize {
            return Err(Error::invalid(format!("rank {n} is too large")));
        }
        let mut seen = vec![false; n];
        for &value in window {
            if value == 0 || value > n || seen[value - 1] {
                return Err(Error::invalid(format!(
                    "{window:?} is not a permutation of 1..={n}"
                )));
            }
            seen[value - 1] = true;
        }
        Ok(Self {
            window: window.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=u8::MAX as usize).contains(&n), "rank out of range");
        Self {
            window: (1..=n as u8).collect(),
        }
    }

    /// The simple transposition `s_i`, `1 <= i < n`.
    pub fn simple_reflection(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::invalid(format!(
                "generator index {i} out of range 1..{n}"
            )));
        }
        let mut w = Self::identity(n);
        w.window.swap(i - 1, i);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1] as usize
    }

    pub fn window(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.window.iter().map(|&v| v as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.window().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `u ∘ v`.
    pub fn compose(&self, v: &Permutation) -> Result<Permutation> {
        if self.rank() != v.rank() {
            return Err(Error::invalid(format!(
                "cannot compose permutations of rank {} and {}",
                self.rank(),
                v.rank()
            )));
        }
        Ok(Self {
            window: v
                .window
                .iter()
                .map(|&j| self.window[j as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0u8; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v as usize - 1] = (i + 1) as u8;
        }
        Self { window }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    /// `w · s_i` (swap positions `i` and `i + 1`). Panics if `i` is out of range.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut window = self.window.clone();
        window.swap(i - 1, i);
        Self { window }
    }

    /// `s_i · w` (swap the values `i` and `i + 1`). Panics if `i` is out of range.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.rank());
        let (a, b) = (i as u8, i as u8 + 1);
        Self {
            window: self
                .window
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.window[i - 1] > self.window[i]
    }

    /// `l(s_i w) < l(w)`: the value `i + 1` sits left of `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.window.iter().position(|&x| x == v).unwrap();
        pos(i as u8 + 1) < pos(i as u8)
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ⋯ s_{i_k}` and `k = l(w)`.
    ///
    /// Strips the leftmost right descent until the identity is reached.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| w.has_right_descent(i)) {
            letters.push(i);
            w.window.swap(i - 1, i);
        }
        letters.reverse();
        letters
    }

    /// Position of `self` in the lexicographic enumeration of `S_n` (Lehmer code).
    pub fn lex_index(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut index = 0;
        for i in 0..n {
            let smaller_after = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
            index = index * (n - i) + smaller_after;
        }
        index
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    u.compose(v)
}

pub fn inverse(w: &Permutation) -> Permutation {
    w.inverse()
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// `w₀ = [n, n-1, ..., 1]`.
pub fn longest_element(n: usize) -> Permutation {
    assert!((1..=u8::MAX as usize).contains(&n), "rank out of range");
    Permutation {
        window: (1..=n as u8).rev().collect(),
    }
}

pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    w.reduced_word()
}

fn check_enumerable(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("rank must be positive"));
    }
    if n > MAX_ENUMERATION_RANK {
        return Err(Error::ResourceLimit {
            what: "enumeration of S_n",
            required: factorial(n),
            cap: factorial(MAX_ENUMERATION_RANK),
        });
    }
    Ok(())
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All of `S_n` in lexicographic order of windows.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    check_enumerable(n)?;
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut window: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation {
            window: window.clone(),
        });
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| window[i] < window[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| window[j] > window[i]).unwrap();
        window.swap(i, j);
        window[i + 1..].reverse();
    }
    Ok(out)
}

/// `Σ_{w ∈ S_n} t^{l(w)}`, the Poincaré polynomial of the flag variety.
pub fn length_generating_function(n: usize) -> Result<IntPolynomial> {
    let elements = enumerate(n)?;
    let mut counts = vec![BigInt::from(0); n * (n - 1) / 2 + 1];
    for w in &elements {
        counts[w.length()] += 1;
    }
    Ok(IntPolynomial::from_coefficients(counts))
}

/// Dense index of `S_n` with precomputed generator actions, for the Hecke engine.
#[derive(Debug, Clone)]
pub struct PermutationTable {
    n: usize,
    elements: Vec<Permutation>,
    lengths: Vec<u32>,
    inverses: Vec<u32>,
    // right[k * (n - 1) + (i - 1)] = index of elements[k] · s_i
    right: Vec<u32>,
    left: Vec<u32>,
}

impl PermutationTable {
    pub fn new(n: usize) -> Result<Self> {
        let elements = enumerate(n)?;
        let gens = n - 1;
        let mut right = Vec::with_capacity(elements.len() * gens);
        let mut left = Vec::with_capacity(elements.len() * gens);
        for w in &elements {
            for i in 1..n {
                right.push(w.right_mul_simple(i).lex_index() as u32);
                left.push(w.left_mul_simple(i).lex_index() as u32);
            }
        }
        Ok(Self {
            n,
            lengths: elements.iter().map(|w| w.length() as u32).collect(),
            inverses: elements
                .iter()
                .map(|w| w.inverse().lex_index() as u32)
                .collect(),
            elements,
            right,
            left,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, w: &Permutation) -> usize {
        debug_assert_eq!(w.rank(), self.n);
        w.lex_index()
    }

    pub fn length(&self, index: usize) -> usize {
        self.lengths[index] as usize
    }

    pub fn inverse(&self, index: usize) -> usize {
        self.inverses[index] as usize
    }

    pub fn right_mul_simple(&self, index: usize, i: usize) -> usize {
        self.right[index * (self.n - 1) + i - 1] as usize
    }

    pub fn left_mul_simple(&self, index: usize, i: usize) -> usize {
        self.left[index * (self.n - 1) + i - 1] as usize
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn longest_index(&self) -> usize {
        self.elements.len() - 1
    }
}
