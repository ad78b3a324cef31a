//! The normalized bar complex over the ground ring, `C^k = Hom(Ā^{⊗k}, A)`
//! with `Ā = A / k·1`. Cochain spaces grow like `(dim A − 1)^k · dim A`, so
//! this is only used as an independent check of [`super::hh_dimensions`] in
//! low degrees.

use alloc::vec;
use alloc::vec::Vec;

use super::linalg::{self, IntMatrix};
use super::presentation::AlgebraPresentation;
use crate::error::{Error, Result};

/// Default cap on `dim C^{k+1}` for the bar complex.
pub const DEFAULT_BAR_CAP: usize = 20_000;

/// `Ā` is spanned by the images of every basis vector except the last
/// idempotent `e_m`, which is `1 − Σ_{v<m} e_v` there.
struct Bar<'a> {
    algebra: &'a AlgebraPresentation,
    // basis indices of A whose images span Ā
    reduced: Vec<usize>,
    // position of each A-basis index in `reduced`
    slot: Vec<Option<usize>>,
    dropped: usize,
}

impl<'a> Bar<'a> {
    fn new(algebra: &'a AlgebraPresentation) -> Self {
        let dropped = *algebra.idempotents().last().unwrap();
        let reduced: Vec<usize> = (0..algebra.dim()).filter(|&b| b != dropped).collect();
        let mut slot = vec![None; algebra.dim()];
        for (k, &b) in reduced.iter().enumerate() {
            slot[b] = Some(k);
        }
        Self {
            algebra,
            reduced,
            slot,
            dropped,
        }
    }

    /// Image in `Ā` of an element of `A`, in `reduced` coordinates.
    fn project(&self, combination: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let at_dropped: i64 = combination
            .iter()
            .filter(|(b, _)| *b == self.dropped)
            .map(|(_, c)| c)
            .sum();
        let mut out = vec![0i64; self.reduced.len()];
        for &(b, c) in combination {
            if let Some(k) = self.slot[b] {
                out[k] += c;
            }
        }
        // e_m = 1 − Σ e_v, and 1 vanishes in Ā
        for &e in self.algebra.idempotents() {
            if e != self.dropped {
                out[self.slot[e].unwrap()] -= at_dropped;
            }
        }
        out.into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    fn dimension(&self, k: usize) -> u128 {
        (self.reduced.len() as u128)
            .checked_pow(k as u32)
            .unwrap_or(u128::MAX)
            .saturating_mul(self.algebra.dim() as u128)
    }

    // index of (tuple, target) with tuple entries in 0..r, most significant first
    fn index(&self, tuple: &[usize], target: usize) -> usize {
        let r = self.reduced.len();
        tuple.iter().fold(0, |acc, &t| acc * r + t) * self.algebra.dim() + target
    }

    fn differential(&self, k: usize) -> IntMatrix {
        let a = self.algebra;
        let d = a.dim();
        let r = self.reduced.len();
        let rows = r.pow(k as u32 + 1) * d;
        let cols = r.pow(k as u32) * d;
        let mut m = IntMatrix::zeros(rows, cols);
        let mut tuple = vec![0usize; k + 1];
        for code in 0..r.pow(k as u32 + 1) {
            let mut c = code;
            for t in tuple.iter_mut().rev() {
                *t = c % r;
                c /= r;
            }
            let lift = |t: usize| self.reduced[t];
            for x in 0..d {
                // a_1 f(a_2, …, a_{k+1})
                for &(y, c) in a.product(lift(tuple[0]), x) {
                    m.add_to(self.index(&tuple, y), self.index(&tuple[1..], x), c);
                }
                // Σ (−1)^i f(…, a_i a_{i+1}, …)
                for i in 1..=k {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let product = a.product(lift(tuple[i - 1]), lift(tuple[i]));
                    for (j, c) in self.project(product) {
                        let mut inner = Vec::with_capacity(k);
                        inner.extend_from_slice(&tuple[..i - 1]);
                        inner.push(j);
                        inner.extend_from_slice(&tuple[i + 1..]);
                        m.add_to(self.index(&tuple, x), self.index(&inner, x), sign * c);
                    }
                }
                // (−1)^{k+1} f(a_1, …, a_k) a_{k+1}
                let sign = if (k + 1).is_multiple_of(2) { 1 } else { -1 };
                for &(y, c) in a.product(x, lift(tuple[k])) {
                    m.add_to(self.index(&tuple, y), self.index(&tuple[..k], x), sign * c);
                }
            }
        }
        m
    }
}

/// Hochschild cohomology dimensions in degrees `0..=max_degree` from the
/// normalized bar complex over the ground ring.
pub fn hh_dimensions_bar(algebra: &AlgebraPresentation, max_degree: usize) -> Result<Vec<usize>> {
    algebra.validate().map_err(Error::InvalidPresentation)?;
    let bar = Bar::new(algebra);
    let needed = bar.dimension(max_degree + 1);
    if needed > DEFAULT_BAR_CAP as u128 {
        return Err(Error::ResourceLimit {
            what: "bar complex cochain space",
            required: needed,
            cap: DEFAULT_BAR_CAP as u128,
        });
    }
    let mut ranks = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        ranks.push(linalg::rank(&bar.differential(k))?);
    }
    Ok((0..=max_degree)
        .map(|k| bar.dimension(k) as usize - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect())
}

/// `d^{k+1} ∘ d^k` for the bar complex, for tests of the complex itself.
pub fn bar_differential(algebra: &AlgebraPresentation, k: usize) -> Result<IntMatrix> {
    algebra.validate().map_err(Error::InvalidPresentation)?;
    Ok(Bar::new(algebra).differential(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hhalgebra::builtin;

    #[test]
    fn squares_to_zero() {
        let sl2 = builtin("sl2-catO").unwrap();
        for k in 0..2 {
            let d0 = bar_differential(&sl2, k).unwrap();
            let d1 = bar_differential(&sl2, k + 1).unwrap();
            assert!(d1.mul(&d0).is_zero(), "k = {k}");
        }
    }

    #[test]
    fn small_algebras() {
        assert_eq!(
            hh_dimensions_bar(&builtin("ground-field").unwrap(), 3).unwrap(),
            vec![1, 0, 0, 0]
        );
        assert_eq!(
            hh_dimensions_bar(&builtin("semisimple-2").unwrap(), 3).unwrap(),
            vec![2, 0, 0, 0]
        );
    }
}
