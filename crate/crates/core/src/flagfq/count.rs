use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use super::field::PrimeField;
use super::flag::{
    canonical_cell_point, check_cap, enumerate_flags, enumerate_unipotent, flag_count,
    unipotent_count, Flag, UnipotentMatrix, DEFAULT_ENUMERATION_CAP,
};
use super::matrix::FpMatrix;
use crate::error::{Error, Result};
use crate::weyl::{self, Permutation};

/// Default cap on `|U(F_p)| · |X(F_p)|`, the work unit of a stratum count.
pub const DEFAULT_HOCH_BUDGET: u128 = 200_000;

fn check_compatible(f1: &Flag, f2: &Flag) -> Result<()> {
    if f1.rank() != f2.rank() || f1.field() != f2.field() {
        return Err(Error::invalid(format!(
            "flags over F_{}^{} and F_{}^{} cannot be compared",
            f1.field().modulus(),
            f1.rank(),
            f2.field().modulus(),
            f2.rank()
        )));
    }
    Ok(())
}

/// The relative position of two flags, read off the rank table
/// `d_ij = dim(F1_i ∩ F2_j) = i + j − rank[F1 first i columns | F2 first j columns]`:
/// `w(j) = i` exactly where `d_ij − d_{i−1,j} − d_{i,j−1} + d_{i−1,j−1} = 1`.
pub fn relative_position(f1: &Flag, f2: &Flag) -> Result<Permutation> {
    check_compatible(f1, f2)?;
    let n = f1.rank();
    let mut d = alloc::vec![alloc::vec![0usize; n + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate().skip(1) {
        let left = f1.matrix().leading_columns(i);
        for (j, entry) in row.iter_mut().enumerate().skip(1) {
            let rank = left.hconcat(&f2.matrix().leading_columns(j)).rank();
            *entry = i + j - rank;
        }
    }
    let mut window = alloc::vec![0usize; n];
    for j in 1..=n {
        for i in 1..=n {
            let jump = d[i][j] + d[i - 1][j - 1] - d[i - 1][j] - d[i][j - 1];
            if jump == 1 {
                window[j - 1] = i;
            }
        }
    }
    Permutation::from_window(&window)
}

/// Relative positions `pos(x, ·)` from a fixed flag `x`, via
/// `pos(x, y) = pos(standard, x⁻¹ y)`, which is the pivot pattern of the
/// column echelon form of `x⁻¹ y`.
#[derive(Debug, Clone)]
pub struct PositionProbe {
    inverse: FpMatrix,
}

impl PositionProbe {
    pub fn new(x: &Flag) -> Self {
        Self {
            inverse: x.matrix().inverse().expect("flag matrices are invertible"),
        }
    }

    /// Pivot rows (0-based) of `x⁻¹ m`; entry `j` is `pos(x, m)(j + 1) − 1`.
    pub fn pivots(&self, m: &FpMatrix) -> Vec<usize> {
        self.inverse
            .mul(m)
            .column_echelon()
            .expect("product of invertible matrices")
    }

    pub fn position(&self, y: &Flag) -> Permutation {
        pivots_to_permutation(&self.pivots(y.matrix()))
    }
}

fn pivots_to_permutation(pivots: &[usize]) -> Permutation {
    Permutation::from_window(&pivots.iter().map(|&r| r + 1).collect::<Vec<_>>())
        .expect("pivots form a permutation")
}

fn to_pivots(w: &Permutation) -> Vec<usize> {
    w.window().map(|v| v - 1).collect()
}

/// Counts flags `y` with prescribed positions to two fixed flags, by
/// scanning a prepared list of all flags.
#[derive(Debug, Clone)]
pub struct MiddleFlagCounter {
    flags: Vec<Flag>,
}

impl MiddleFlagCounter {
    pub fn new(n: usize, p: u64, cap: u128) -> Result<Self> {
        Ok(Self {
            flags: enumerate_flags(n, p, cap)?,
        })
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    /// `#{y : pos(x1, y) = u, pos(y, x2) = v}`.
    pub fn count(&self, x1: &Flag, x2: &Flag, u: &Permutation, v: &Permutation) -> u64 {
        let from_x1 = PositionProbe::new(x1);
        let from_x2 = PositionProbe::new(x2);
        self.count_with(&from_x1, &from_x2.inverse, u, v)
    }

    fn count_with(
        &self,
        from_x1: &PositionProbe,
        x2_inverse: &FpMatrix,
        u: &Permutation,
        v: &Permutation,
    ) -> u64 {
        let u_target = to_pivots(u);
        // pos(y, x2) = v  ⟺  pos(x2, y) = v⁻¹
        let v_target = to_pivots(&v.inverse());
        let from_x2 = PositionProbe {
            inverse: x2_inverse.clone(),
        };
        self.flags
            .iter()
            .filter(|y| {
                from_x1.pivots(y.matrix()) == u_target && from_x2.pivots(y.matrix()) == v_target
            })
            .count() as u64
    }
}

/// `#{y ∈ X(F_p) : pos(x1, y) = u and pos(y, x2) = v}`, enumerating all flags.
pub fn count_middle_flags(x1: &Flag, x2: &Flag, u: &Permutation, v: &Permutation) -> Result<u64> {
    check_compatible(x1, x2)?;
    let n = x1.rank();
    if u.rank() != n || v.rank() != n {
        return Err(Error::invalid(
            "positions must lie in the Weyl group of the flags",
        ));
    }
    let counter = MiddleFlagCounter::new(n, x1.field().modulus() as u64, DEFAULT_ENUMERATION_CAP)?;
    Ok(counter.count(x1, x2, u, v))
}

/// How a Hochschild stratum is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountLevel {
    /// Every triple `(a, b, u)`.
    Full,
    /// One base point `a_w` per cell, scaled by `|X_w| = p^{l(w)}`.
    Orbit,
}

/// Brute-force count of the stratum
/// `H_w = {(a, b, u) : a ∈ X_w, pos(a, b) = w₀, pos(b, u·a) = w₀}` over `F_p`.
///
/// The work is a sum over the unipotent group, so it can be split into
/// disjoint index ranges ([`count_range`](Self::count_range)) and the partial
/// sums added up before [`finish`](Self::finish).
#[derive(Debug, Clone)]
pub struct HochStratumCounter {
    w: Permutation,
    w0: Permutation,
    field: PrimeField,
    level: CountLevel,
    middle: MiddleFlagCounter,
    unipotents: Vec<UnipotentMatrix>,
}

impl HochStratumCounter {
    pub fn new(n: usize, p: u64, w: &Permutation, level: CountLevel) -> Result<Self> {
        Self::with_budget(n, p, w, level, DEFAULT_HOCH_BUDGET)
    }

    pub fn with_budget(
        n: usize,
        p: u64,
        w: &Permutation,
        level: CountLevel,
        budget: u128,
    ) -> Result<Self> {
        if w.rank() != n {
            return Err(Error::invalid(format!("{w} is not in S_{n}")));
        }
        let field = PrimeField::new(p)?;
        check_cap("stratum count", stratum_work(n, p, level), budget)?;
        if level == CountLevel::Full && n > 2 {
            return Err(Error::invalid(
                "full triple enumeration is only supported for n <= 2",
            ));
        }
        Ok(Self {
            w: w.clone(),
            w0: weyl::longest_element(n),
            field,
            level,
            middle: MiddleFlagCounter::new(n, p, DEFAULT_ENUMERATION_CAP)?,
            unipotents: enumerate_unipotent(n, p, DEFAULT_ENUMERATION_CAP)?,
        })
    }

    /// Number of unipotent matrices, the length of the splittable index range.
    pub fn len(&self) -> usize {
        self.unipotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unipotents.is_empty()
    }

    /// Partial count over the unipotent matrices with indices in `range`.
    pub fn count_range(&self, range: Range<usize>) -> u64 {
        let unipotents = &self.unipotents[range];
        match self.level {
            CountLevel::Orbit => {
                let a = canonical_cell_point(&self.w, self.field);
                let from_a = PositionProbe::new(&a);
                unipotents
                    .iter()
                    .map(|u| {
                        let ua = u.act(&a);
                        let ua_inverse = ua.matrix().inverse().expect("invertible");
                        self.middle
                            .count_with(&from_a, &ua_inverse, &self.w0, &self.w0)
                    })
                    .sum()
            }
            CountLevel::Full => {
                let w0 = to_pivots(&self.w0);
                let flags = self.middle.flags();
                let mut total = 0;
                for a in flags.iter().filter(|a| a.cell() == self.w) {
                    let from_a = PositionProbe::new(a);
                    for b in flags.iter().filter(|b| from_a.pivots(b.matrix()) == w0) {
                        let from_b = PositionProbe::new(b);
                        total += unipotents
                            .iter()
                            .filter(|u| from_b.pivots(&u.matrix().mul(a.matrix())) == w0)
                            .count() as u64;
                    }
                }
                total
            }
        }
    }

    /// Turns the sum of all partial counts into `|H_w(F_p)|`.
    pub fn finish(&self, partial_sum: u64) -> u64 {
        match self.level {
            CountLevel::Full => partial_sum,
            CountLevel::Orbit => {
                let cell = (self.field.modulus() as u64).pow(self.w.length() as u32);
                partial_sum * cell
            }
        }
    }

    pub fn count(&self) -> u64 {
        self.finish(self.count_range(0..self.len()))
    }
}

/// Work estimate used for budgeting: `|U| · |X|`, times `|X|` again for full enumeration.
pub fn stratum_work(n: usize, p: u64, level: CountLevel) -> u128 {
    let base = unipotent_count(n, p).saturating_mul(flag_count(n, p));
    match level {
        CountLevel::Orbit => base,
        CountLevel::Full => base.saturating_mul(flag_count(n, p)),
    }
}

pub fn count_hoch_stratum_bruteforce(
    n: usize,
    p: u64,
    w: &Permutation,
    level: CountLevel,
) -> Result<u64> {
    Ok(HochStratumCounter::new(n, p, w, level)?.count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::longest_element;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn relative_position_examples() {
        let f = field(3);
        let std_flag = Flag::standard(3, f);
        assert!(relative_position(&std_flag, &std_flag)
            .unwrap()
            .is_identity());
        assert_eq!(
            relative_position(&std_flag, &Flag::antistandard(3, f)).unwrap(),
            longest_element(3)
        );
        let f2 = field(2);
        for w in weyl::enumerate(3).unwrap() {
            let point = canonical_cell_point(&w, f2);
            assert_eq!(
                relative_position(&Flag::standard(3, f2), &point).unwrap(),
                w
            );
        }
        for w in weyl::enumerate(3).unwrap() {
            let point = canonical_cell_point(&w, f);
            assert_eq!(relative_position(&Flag::standard(3, f), &point).unwrap(), w);
        }
        assert!(relative_position(&std_flag, &Flag::standard(2, f)).is_err());
        assert!(relative_position(&std_flag, &Flag::standard(3, field(5))).is_err());
    }

    #[test]
    fn probe_matches_rank_recipe() {
        let flags = enumerate_flags(3, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        for x in &flags {
            let probe = PositionProbe::new(x);
            for y in &flags {
                assert_eq!(probe.position(y), relative_position(x, y).unwrap());
            }
        }
    }

    #[test]
    fn cells_match_echelon_pivots() {
        let f = field(3);
        let std_flag = Flag::standard(3, f);
        for y in enumerate_flags(3, 3, DEFAULT_ENUMERATION_CAP).unwrap() {
            assert_eq!(relative_position(&std_flag, &y).unwrap(), y.cell());
        }
    }

    #[test]
    fn count_middle_flags_examples() {
        let f = field(3);
        let w0 = longest_element(2);
        let x = Flag::standard(2, f);
        assert_eq!(count_middle_flags(&x, &x, &w0, &w0).unwrap(), 3);

        let f = field(2);
        let x = Flag::standard(2, f);
        let opposite = Flag::antistandard(2, f);
        assert_eq!(count_middle_flags(&x, &opposite, &w0, &w0).unwrap(), 1);

        let e = Permutation::identity(3);
        let f = field(2);
        let flags = enumerate_flags(3, 2, DEFAULT_ENUMERATION_CAP).unwrap();
        let x1 = &flags[5];
        for x2 in flags.iter().step_by(4) {
            let pos = relative_position(x1, x2).unwrap();
            for v in weyl::enumerate(3).unwrap() {
                let expected = u64::from(pos == v);
                assert_eq!(count_middle_flags(x1, x2, &e, &v).unwrap(), expected);
            }
        }
        assert!(
            count_middle_flags(&Flag::standard(3, f), &Flag::standard(3, f), &w0, &w0).is_err()
        );
    }

    #[test]
    fn stratum_examples() {
        let e = Permutation::identity(2);
        let w0 = longest_element(2);
        for level in [CountLevel::Full, CountLevel::Orbit] {
            assert_eq!(count_hoch_stratum_bruteforce(2, 2, &e, level).unwrap(), 4);
            assert_eq!(count_hoch_stratum_bruteforce(2, 2, &w0, level).unwrap(), 6);
            assert_eq!(count_hoch_stratum_bruteforce(2, 3, &w0, level).unwrap(), 21);
        }
        assert_eq!(
            count_hoch_stratum_bruteforce(1, 5, &Permutation::identity(1), CountLevel::Full)
                .unwrap(),
            1
        );
    }

    #[test]
    fn stratum_budget() {
        let w = Permutation::identity(4);
        let err = count_hoch_stratum_bruteforce(4, 5, &w, CountLevel::Full).unwrap_err();
        assert!(err.is_resource_limit());
        let err = count_hoch_stratum_bruteforce(4, 3, &w, CountLevel::Orbit).unwrap_err();
        assert!(err.is_resource_limit());
        let w3 = Permutation::identity(3);
        assert!(count_hoch_stratum_bruteforce(3, 2, &w3, CountLevel::Full).is_err());
        assert!(count_hoch_stratum_bruteforce(3, 2, &w, CountLevel::Orbit).is_err());
    }

    #[test]
    fn split_ranges_add_up() {
        let w = Permutation::from_window(&[2, 3, 1]).unwrap();
        let counter = HochStratumCounter::new(3, 3, &w, CountLevel::Orbit).unwrap();
        let whole = counter.count_range(0..counter.len());
        let mid = counter.len() / 3;
        let split = counter.count_range(0..mid) + counter.count_range(mid..counter.len());
        assert_eq!(whole, split);
    }
}
