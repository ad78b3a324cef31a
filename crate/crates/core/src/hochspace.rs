//! Point counts of the Hochschild space
//! `H = {(a, b, u) ∈ X × X × U : pos(a, b) = w₀, pos(b, u·a) = w₀}`
//! and its strata `H_w = {(a, b, u) ∈ H : a ∈ X_w}`.
//!
//! Over `F_q` the strata are counted symbolically:
//!
//! 1. `U` acts on `H_w` by `v·(a, b, u) = (va, vb, v u v⁻¹)`, and transitively
//!    on `X_w`, so `|H_w| = q^{l(w)} · Σ_{u ∈ U} N(a_w, u·a_w)` with
//!    `a_w = w·B` and `N(x, z) = #{b : pos(x, b) = w₀ = pos(b, z)}`.
//! 2. `N(x, z)` only depends on `τ = pos(x, z)`; it is the coefficient `N_τ`
//!    of `T_τ` in `T_{w₀}²`.
//! 3. `u ↦ u·a_w` maps `U` onto `X_w` with fibres of size `q^{l(w₀) − l(w)}`,
//!    so `#{u : pos(a_w, u·a_w) = τ} = q^{l(w₀) − l(w)} · c^w_{w, τ⁻¹}`, where
//!    `c^w_{w, τ⁻¹}` counts `y` with `pos(B, y) = w` and `pos(y, a_w) = τ⁻¹`.
//!
//! Together: `|H_w| = q^{l(w₀)} · Σ_τ c^w_{w, τ⁻¹}(q) · N_τ(q)`. By linearity
//! the sum is the `T_w` coefficient of `T_w · M` with `M = Σ_τ N_τ T_{τ⁻¹}`,
//! which is how it is evaluated here; the brute-force counts in `flagfq`
//! check the whole chain.
//!
//! The Euler characteristic with compact supports is the value at `q = 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flagfq::{CountLevel, HochStratumCounter};
use crate::hecke::{DenseElement, DenseHecke, HeckeElement};
use crate::polynomial::IntPolynomial;
use crate::weyl::{self, Permutation};

/// Largest rank for the symbolic stratum polynomials.
pub const MAX_SYMBOLIC_RANK: usize = 7;

/// Largest rank for [`verify_lemma42`].
pub const MAX_INDICATOR_RANK: usize = crate::hecke::MAX_SQUARE_RANK;

/// Symbolic counting engine for one rank `n`.
#[derive(Debug, Clone)]
pub struct HochSpace {
    algebra: DenseHecke,
    // N_τ, the coefficients of T_{w₀}²
    configurations: DenseElement,
    // Σ_τ N_τ T_{τ⁻¹}
    reflected: DenseElement,
}

impl HochSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("rank must be positive"));
        }
        if n > MAX_SYMBOLIC_RANK {
            return Err(Error::ResourceLimit {
                what: "symbolic Hochschild count",
                required: weyl::factorial(n),
                cap: weyl::factorial(MAX_SYMBOLIC_RANK),
            });
        }
        let algebra = DenseHecke::new(n)?;
        let configurations = algebra.t_w0_squared();
        let table = algebra.table();
        let mut reflected = algebra.zero();
        for (tau, c) in configurations.iter().enumerate() {
            reflected[table.inverse(tau)] = c.clone();
        }
        Ok(Self {
            algebra,
            configurations,
            reflected,
        })
    }

    pub fn rank(&self) -> usize {
        self.algebra.table().rank()
    }

    fn longest_length(&self) -> usize {
        let n = self.rank();
        n * (n - 1) / 2
    }

    /// `T_{w₀}² = Σ_τ N_τ T_τ`.
    pub fn configuration_counts(&self) -> HeckeElement {
        self.algebra.to_sparse(&self.configurations)
    }

    /// `|H_w(F_q)|` as a polynomial in `q`.
    pub fn stratum_polynomial(&self, w: &Permutation) -> Result<IntPolynomial> {
        if w.rank() != self.rank() {
            return Err(Error::invalid(format!("{w} is not in S_{}", self.rank())));
        }
        let index = self.algebra.table().index_of(w);
        let mut h = self.reflected.clone();
        self.algebra.left_mul_basis(&mut h, index);
        Ok(h[index].shift(self.longest_length()))
    }

    /// All stratum polynomials in lexicographic order of `w`.
    ///
    /// `T_w · M` is built once per `w` by walking `S_n` as a tree in which
    /// each `w ≠ e` hangs below `s_i w`, `i` its first left descent.
    pub fn strata(&self) -> Vec<(Permutation, IntPolynomial)> {
        let table = self.algebra.table();
        let mut out: Vec<Option<IntPolynomial>> = alloc::vec![None; table.len()];
        self.visit(table.identity_index(), self.reflected.clone(), &mut out);
        let shift = self.longest_length();
        out.into_iter()
            .enumerate()
            .map(|(k, c)| {
                let c = c.expect("every element is reached");
                (table.element(k).clone(), c.shift(shift))
            })
            .collect()
    }

    fn visit(&self, x: usize, h: DenseElement, out: &mut [Option<IntPolynomial>]) {
        let table = self.algebra.table();
        let n = table.rank();
        out[x] = Some(h[x].clone());
        for i in 1..n {
            let y = table.left_mul_simple(x, i);
            if table.length(y) < table.length(x) || self.first_left_descent(y) != i {
                continue;
            }
            let mut child = h.clone();
            self.algebra.left_mul_generator(&mut child, i);
            self.visit(y, child, out);
        }
    }

    fn first_left_descent(&self, y: usize) -> usize {
        let table = self.algebra.table();
        (1..table.rank())
            .find(|&i| table.length(table.left_mul_simple(y, i)) < table.length(y))
            .expect("non-identity element has a left descent")
    }

    /// `|H(F_q)| = Σ_w |H_w(F_q)|`.
    pub fn hoch_polynomial(&self) -> IntPolynomial {
        let mut total = IntPolynomial::zero();
        for (_, p) in self.strata() {
            total += &p;
        }
        total
    }

    /// Stratum polynomial with its values at `primes`.
    pub fn stratum_report(&self, w: &Permutation, primes: &[u64]) -> Result<StratumReport> {
        let polynomial = self.stratum_polynomial(w)?;
        Ok(StratumReport {
            n: self.rank(),
            w: w.clone(),
            evaluations: primes
                .iter()
                .map(|&p| (p, polynomial.evaluate(&BigInt::from(p))))
                .collect(),
            polynomial,
            brute_force: None,
        })
    }
}

/// One stratum's counting polynomial, its values, and optionally brute-force counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub n: usize,
    pub w: Permutation,
    pub polynomial: IntPolynomial,
    pub evaluations: BTreeMap<u64, BigInt>,
    pub brute_force: Option<BTreeMap<u64, u64>>,
}

impl StratumReport {
    /// Brute-force counts (if any) agree with the evaluations, and the degree
    /// respects `dim H ≤ 3·l(w₀)`.
    pub fn is_consistent(&self) -> bool {
        let bound = 3 * self.n * (self.n - 1) / 2;
        let degree_ok = self.polynomial.degree().is_none_or(|d| d <= bound);
        let counts_ok = self.brute_force.as_ref().is_none_or(|counts| {
            counts.len() == self.evaluations.len()
                && counts
                    .iter()
                    .all(|(p, c)| self.evaluations.get(p) == Some(&BigInt::from(*c)))
        });
        degree_ok && counts_ok
    }
}

pub fn stratum_polynomial(n: usize, w: &Permutation) -> Result<IntPolynomial> {
    if w.rank() != n {
        return Err(Error::invalid(format!("{w} is not in S_{n}")));
    }
    HochSpace::new(n)?.stratum_polynomial(w)
}

pub fn hoch_polynomial(n: usize) -> Result<IntPolynomial> {
    Ok(HochSpace::new(n)?.hoch_polynomial())
}

/// `χ_c(H)`: the counting polynomial at `q = 1`. The even degree shift
/// relating `H_c(H)` to Hochschild cohomology does not change it.
pub fn euler_characteristic(n: usize) -> Result<BigInt> {
    Ok(hoch_polynomial(n)?.evaluate(&BigInt::one()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorEntry {
    pub sigma: Permutation,
    /// `N_σ(1)`.
    pub value: BigInt,
    pub expected: BigInt,
}

impl IndicatorEntry {
    pub fn passed(&self) -> bool {
        self.value == self.expected
    }
}

/// `N_σ(1)` for every `σ`, against the indicator of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorReport {
    pub n: usize,
    pub entries: Vec<IndicatorEntry>,
}

impl IndicatorReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(IndicatorEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IndicatorEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }
}

/// Checks that the configuration counts `N_σ(q)` vanish at `q = 1` except at `σ = e`.
pub fn verify_lemma42(n: usize) -> Result<IndicatorReport> {
    if n == 0 {
        return Err(Error::invalid("rank must be positive"));
    }
    let algebra = DenseHecke::new(n)?;
    let square = algebra.t_w0_squared();
    let one = BigInt::one();
    let entries = square
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let sigma = algebra.table().element(k).clone();
            let expected = if sigma.is_identity() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            IndicatorEntry {
                sigma,
                value: c.evaluate(&one),
                expected,
            }
        })
        .collect();
    Ok(IndicatorReport { n, entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub w: Permutation,
    pub p: u64,
    pub symbolic: BigInt,
    pub brute_force: u64,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.symbolic == BigInt::from(self.brute_force)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub n: usize,
    pub primes: Vec<u64>,
    pub comparisons: Vec<Comparison>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(Comparison::agrees)
    }

    /// Brute-force total `|H(F_p)|`.
    pub fn brute_force_total(&self, p: u64) -> u64 {
        self.comparisons
            .iter()
            .filter(|c| c.p == p)
            .map(|c| c.brute_force)
            .sum()
    }

    pub fn symbolic_total(&self, p: u64) -> BigInt {
        self.comparisons
            .iter()
            .filter(|c| c.p == p)
            .map(|c| c.symbolic.clone())
            .sum()
    }
}

/// Compares every stratum polynomial at every prime with the orbit-level brute-force count.
pub fn cross_validate(n: usize, primes: &[u64]) -> Result<CrossValidation> {
    cross_validate_with(n, primes, |p, w| {
        HochStratumCounter::new(n, p, w, CountLevel::Orbit).map(|c| c.count())
    })
}

/// [`cross_validate`] with a caller-supplied stratum counter `(p, w) ↦ |H_w(F_p)|`.
pub fn cross_validate_with(
    n: usize,
    primes: &[u64],
    mut count: impl FnMut(u64, &Permutation) -> Result<u64>,
) -> Result<CrossValidation> {
    if primes.is_empty() {
        return Err(Error::invalid("no primes given"));
    }
    let space = HochSpace::new(n)?;
    let strata = space.strata();
    let mut comparisons = Vec::with_capacity(strata.len() * primes.len());
    for &p in primes {
        for (w, poly) in &strata {
            comparisons.push(Comparison {
                w: w.clone(),
                p,
                symbolic: poly.evaluate(&BigInt::from(p)),
                brute_force: count(p, w)?,
            });
        }
    }
    Ok(CrossValidation {
        n,
        primes: primes.to_vec(),
        comparisons,
    })
}
