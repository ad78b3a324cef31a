use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::linalg::{self, IntMatrix};
use super::presentation::AlgebraPresentation;
use crate::error::{Error, Result};

/// Default cap on the dimension of a single cochain space.
pub const DEFAULT_COCHAIN_CAP: usize = 100_000;

/// A composable word `b_k ⊗ ... ⊗ b_1` in `J^{⊗_E k}`; `letters[0]` is `b_k`.
/// The empty word at vertex `v` stands for `e_v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Word {
    letters: Vec<usize>,
    source: usize,
    target: usize,
}

/// Basis of the cochain space `C^k`: pairs (word, basis element of the hom space
/// `e_{t(word)} A e_{s(word)}`), laid out word by word.
#[derive(Debug, Clone)]
struct CochainBasis {
    words: Vec<Word>,
    offsets: BTreeMap<Word, usize>,
    dim: usize,
}

/// The normalized Hochschild complex of `A` relative to the span `E` of its
/// idempotents: `C^k = Hom_{E-E}(J^{⊗_E k}, A)`.
#[derive(Debug, Clone)]
pub struct RelativeComplex<'a> {
    algebra: &'a AlgebraPresentation,
    // homs[t][s] = basis elements of e_t A e_s
    homs: Vec<Vec<Vec<usize>>>,
    arrows: Vec<usize>,
}

impl<'a> RelativeComplex<'a> {
    /// Validates `algebra` first; the complex is only well defined for valid presentations.
    pub fn new(algebra: &'a AlgebraPresentation) -> Result<Self> {
        algebra.validate().map_err(Error::InvalidPresentation)?;
        let m = algebra.vertex_count();
        let mut homs = alloc::vec![alloc::vec![Vec::new(); m]; m];
        for b in 0..algebra.dim() {
            let (t, s) = algebra.endpoints(b);
            homs[t][s].push(b);
        }
        Ok(Self {
            algebra,
            homs,
            arrows: algebra.arrows(),
        })
    }

    fn hom(&self, word: &Word) -> &[usize] {
        &self.homs[word.target][word.source]
    }

    fn words(&self, k: usize) -> Vec<Word> {
        let mut words: Vec<Word> = (0..self.algebra.vertex_count())
            .map(|v| Word {
                letters: Vec::new(),
                source: v,
                target: v,
            })
            .collect();
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &words {
                for &b in &self.arrows {
                    let (t, s) = self.algebra.endpoints(b);
                    if s == w.target {
                        let mut letters = alloc::vec![b];
                        letters.extend_from_slice(&w.letters);
                        next.push(Word {
                            letters,
                            source: w.source,
                            target: t,
                        });
                    }
                }
            }
            next.sort();
            words = next;
        }
        words
    }

    /// Number of composable words of length `k` (without building them).
    fn word_count(&self, k: usize) -> u128 {
        let m = self.algebra.vertex_count();
        // counts[v] = words ending (leftmost target) at v
        let mut counts = alloc::vec![1u128; m];
        for _ in 0..k {
            let mut next = alloc::vec![0u128; m];
            for &b in &self.arrows {
                let (t, s) = self.algebra.endpoints(b);
                next[t] = next[t].saturating_add(counts[s]);
            }
            counts = next;
        }
        counts.iter().fold(0, |a: u128, &c| a.saturating_add(c))
    }

    fn basis(&self, k: usize, cap: usize) -> Result<CochainBasis> {
        // every hom space has dimension at most dim A
        let bound = self
            .word_count(k)
            .saturating_mul(self.algebra.dim() as u128);
        if bound > cap as u128 {
            let exact = self.cochain_dimension(k);
            if exact > cap as u128 {
                return Err(Error::ResourceLimit {
                    what: "cochain space",
                    required: exact,
                    cap: cap as u128,
                });
            }
        }
        let words = self.words(k);
        let mut offsets = BTreeMap::new();
        let mut dim = 0;
        for w in &words {
            offsets.insert(w.clone(), dim);
            dim += self.hom(w).len();
        }
        Ok(CochainBasis {
            words,
            offsets,
            dim,
        })
    }

    /// `dim C^k`, by dynamic programming over word endpoints.
    pub fn cochain_dimension(&self, k: usize) -> u128 {
        let m = self.algebra.vertex_count();
        // paths[s][t] = number of composable words of length k from s to t
        let mut paths = alloc::vec![alloc::vec![0u128; m]; m];
        for (v, row) in paths.iter_mut().enumerate() {
            row[v] = 1;
        }
        for _ in 0..k {
            let mut next = alloc::vec![alloc::vec![0u128; m]; m];
            for (s, row) in paths.iter().enumerate() {
                for &b in &self.arrows {
                    let (t, bs) = self.algebra.endpoints(b);
                    next[s][t] = next[s][t].saturating_add(row[bs]);
                }
            }
            paths = next;
        }
        let mut total: u128 = 0;
        for (s, row) in paths.iter().enumerate() {
            for (t, &count) in row.iter().enumerate() {
                total = total.saturating_add(count.saturating_mul(self.homs[t][s].len() as u128));
            }
        }
        total
    }

    fn position(&self, basis: &CochainBasis, word: &Word, element: usize) -> usize {
        let offset = basis.offsets[word];
        let slot = self
            .hom(word)
            .iter()
            .position(|&x| x == element)
            .expect("product lands in the expected hom space");
        offset + slot
    }

    /// Matrix of `d^k : C^k → C^{k+1}`.
    pub fn differential_matrix(&self, k: usize) -> Result<IntMatrix> {
        self.differential_with_cap(k, DEFAULT_COCHAIN_CAP)
    }

    fn differential_with_cap(&self, k: usize, cap: usize) -> Result<IntMatrix> {
        let domain = self.basis(k, cap)?;
        let codomain = self.basis(k + 1, cap)?;
        Ok(self.differential(k, &domain, &codomain))
    }

    // (df)(b_{k+1} ⊗ … ⊗ b_1) = b_{k+1} f(b_k ⊗ … ⊗ b_1)
    //     + Σ_{m=1}^{k} (−1)^{k+1−m} f(… ⊗ b_{m+1} b_m ⊗ …)
    //     + (−1)^{k+1} f(b_{k+1} ⊗ … ⊗ b_2) b_1
    fn differential(&self, k: usize, domain: &CochainBasis, codomain: &CochainBasis) -> IntMatrix {
        let a = self.algebra;
        let mut d = IntMatrix::zeros(codomain.dim, domain.dim);
        for word in &codomain.words {
            let letters = &word.letters;
            let first = letters[0];
            let last = letters[k];

            // b_{k+1} · f(rest)
            let rest = Word {
                letters: letters[1..].to_vec(),
                source: word.source,
                target: a.endpoints(first).1,
            };
            for &x in self.hom(&rest) {
                let col = self.position(domain, &rest, x);
                for &(y, c) in a.product(first, x) {
                    d.add_to(self.position(codomain, word, y), col, c);
                }
            }

            // interior contractions; letters[k - m] = b_{m+1}, letters[k + 1 - m] = b_m
            for m in 1..=k {
                let sign = if (k + 1 - m).is_multiple_of(2) { 1 } else { -1 };
                let left = letters[k - m];
                let right = letters[k + 1 - m];
                for &(j, c) in a.product(left, right) {
                    let mut contracted = Vec::with_capacity(k);
                    contracted.extend_from_slice(&letters[..k - m]);
                    contracted.push(j);
                    contracted.extend_from_slice(&letters[k + 2 - m..]);
                    let inner = Word {
                        letters: contracted,
                        source: word.source,
                        target: word.target,
                    };
                    for &x in self.hom(&inner) {
                        let col = self.position(domain, &inner, x);
                        d.add_to(self.position(codomain, word, x), col, sign * c);
                    }
                }
            }

            // f(front) · b_1
            let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
            let front = Word {
                letters: letters[..k].to_vec(),
                source: a.endpoints(last).0,
                target: word.target,
            };
            for &x in self.hom(&front) {
                let col = self.position(domain, &front, x);
                for &(y, c) in a.product(x, last) {
                    d.add_to(self.position(codomain, word, y), col, sign * c);
                }
            }
        }
        d
    }
}

/// Hochschild cohomology dimensions in degrees `0..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HHReport {
    pub dims: Vec<usize>,
    pub max_degree: usize,
    /// `dim C^k` for `k = 0..=max_degree + 1`.
    pub cochain_dims: Vec<usize>,
    /// `rank d^k` for `k = 0..=max_degree`.
    pub ranks: Vec<usize>,
}

/// `dim C^k` of the relative complex.
pub fn cochain_dimension(algebra: &AlgebraPresentation, k: usize) -> Result<u128> {
    Ok(RelativeComplex::new(algebra)?.cochain_dimension(k))
}

/// Matrix of `d^k` in the word bases.
pub fn differential_matrix(algebra: &AlgebraPresentation, k: usize) -> Result<IntMatrix> {
    RelativeComplex::new(algebra)?.differential_matrix(k)
}

/// `dim HH^k = dim C^k − rank d^k − rank d^{k−1}` for `k <= max_degree`,
/// with exact ranks over the rationals.
pub fn hh_dimensions(algebra: &AlgebraPresentation, max_degree: usize) -> Result<HHReport> {
    hh_dimensions_with_cap(algebra, max_degree, DEFAULT_COCHAIN_CAP)
}

pub fn hh_dimensions_with_cap(
    algebra: &AlgebraPresentation,
    max_degree: usize,
    cap: usize,
) -> Result<HHReport> {
    let complex = RelativeComplex::new(algebra)?;
    let bases = (0..=max_degree + 1)
        .map(|k| complex.basis(k, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut ranks = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let d = complex.differential(k, &bases[k], &bases[k + 1]);
        ranks.push(linalg::rank(&d)?);
    }
    let cochain_dims: Vec<usize> = bases.iter().map(|b| b.dim).collect();
    let dims = (0..=max_degree)
        .map(|k| cochain_dims[k] - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect();
    Ok(HHReport {
        dims,
        max_degree,
        cochain_dims,
        ranks,
    })
}

/// Dimension of the center, from the equations `x b_i = b_i x`.
pub fn center_dimension(algebra: &AlgebraPresentation) -> Result<usize> {
    let d = algebra.dim();
    // column j: coordinates of (b_j b_i − b_i b_j) for all i, stacked
    let mut m = IntMatrix::zeros(d * d, d);
    for j in 0..d {
        for i in 0..d {
            for &(k, c) in algebra.product(j, i) {
                m.add_to(i * d + k, j, c);
            }
            for &(k, c) in algebra.product(i, j) {
                m.add_to(i * d + k, j, -c);
            }
        }
    }
    Ok(d - linalg::rank(&m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hhalgebra::builtin;
    use alloc::vec;

    #[test]
    fn cochain_dimension_examples() {
        let sl2 = builtin("sl2-catO").unwrap();
        assert_eq!(cochain_dimension(&sl2, 0).unwrap(), 3);
        assert_eq!(cochain_dimension(&sl2, 1).unwrap(), 4);
        let ground = builtin("ground-field").unwrap();
        assert_eq!(cochain_dimension(&ground, 0).unwrap(), 1);
        for k in 1..5 {
            assert_eq!(cochain_dimension(&ground, k).unwrap(), 0);
        }
    }

    #[test]
    fn basis_matches_dimension_formula() {
        let sl2 = builtin("sl2-catO").unwrap();
        let complex = RelativeComplex::new(&sl2).unwrap();
        for k in 0..8 {
            let basis = complex.basis(k, DEFAULT_COCHAIN_CAP).unwrap();
            assert_eq!(basis.dim as u128, complex.cochain_dimension(k));
        }
    }

    #[test]
    fn differential_examples() {
        let sl2 = builtin("sl2-catO").unwrap();
        let d0 = differential_matrix(&sl2, 0).unwrap();
        let d1 = differential_matrix(&sl2, 1).unwrap();
        assert!(d1.mul(&d0).is_zero());
        assert_eq!(d0.cols() - linalg::rank(&d0).unwrap(), 2);
        let ss = builtin("semisimple-2").unwrap();
        for k in 0..3 {
            assert!(differential_matrix(&ss, k).unwrap().is_zero());
        }
    }

    #[test]
    fn hh_examples() {
        let sl2 = builtin("sl2-catO").unwrap();
        assert_eq!(
            hh_dimensions(&sl2, 6).unwrap().dims,
            vec![2, 1, 1, 0, 0, 0, 0]
        );
        assert_eq!(
            hh_dimensions(&builtin("ground-field").unwrap(), 4)
                .unwrap()
                .dims,
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(
            hh_dimensions(&builtin("semisimple-2").unwrap(), 4)
                .unwrap()
                .dims,
            vec![2, 0, 0, 0, 0]
        );
    }

    #[test]
    fn cochain_cap() {
        let sl2 = builtin("sl2-catO").unwrap();
        let err = hh_dimensions_with_cap(&sl2, 6, 10).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn center_examples() {
        assert_eq!(center_dimension(&builtin("sl2-catO").unwrap()).unwrap(), 2);
        assert_eq!(
            center_dimension(&builtin("semisimple-2").unwrap()).unwrap(),
            2
        );
        assert_eq!(
            center_dimension(&builtin("ground-field").unwrap()).unwrap(),
            1
        );
    }
}
