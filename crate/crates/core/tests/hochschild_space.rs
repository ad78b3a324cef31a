use hochschild_core::flagfq::{count_hoch_stratum_bruteforce, CountLevel, HochStratumCounter};
use hochschild_core::hochspace::{
    cross_validate, euler_characteristic, hoch_polynomial, verify_lemma42, HochSpace,
};
use hochschild_core::polynomial::IntPolynomial;
use hochschild_core::weyl::{self, Permutation};
use num_bigint::BigInt;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn euler_characteristic_is_n_factorial() {
    for n in 1..=6 {
        assert_eq!(euler_characteristic(n).unwrap(), factorial(n), "n = {n}");
    }
}

#[test]
#[ignore = "slow: about half a minute"]
fn euler_characteristic_rank_seven() {
    assert_eq!(euler_characteristic(7).unwrap(), factorial(7));
}

#[test]
fn configuration_counts_at_one_are_the_identity_indicator() {
    for n in 1..=6 {
        let report = verify_lemma42(n).unwrap();
        assert_eq!(report.entries.len(), weyl::enumerate(n).unwrap().len());
        assert!(
            report.passed(),
            "n = {n}: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn rank_two_strata() {
    let space = HochSpace::new(2).unwrap();
    let e = Permutation::identity(2);
    let w0 = weyl::longest_element(2);
    assert_eq!(
        space.stratum_polynomial(&e).unwrap(),
        IntPolynomial::from_coefficients([0, 0, 1])
    );
    assert_eq!(
        space.stratum_polynomial(&w0).unwrap(),
        IntPolynomial::from_coefficients([0, 1, -1, 1])
    );
    assert_eq!(
        hoch_polynomial(2).unwrap(),
        IntPolynomial::from_coefficients([0, 1, 0, 1])
    );
}

#[test]
fn rank_two_full_triple_counts() {
    let e = Permutation::identity(2);
    let w0 = weyl::longest_element(2);
    let poly = hoch_polynomial(2).unwrap();
    for (p, total) in [(2u64, 10u64), (3, 30), (5, 130), (7, 350)] {
        let counted = count_hoch_stratum_bruteforce(2, p, &e, CountLevel::Full).unwrap()
            + count_hoch_stratum_bruteforce(2, p, &w0, CountLevel::Full).unwrap();
        assert_eq!(counted, total, "p = {p}");
        assert_eq!(poly.evaluate(&BigInt::from(p)), BigInt::from(total));
    }
}

#[test]
fn full_and_orbit_levels_agree() {
    for p in [2u64, 3, 5] {
        for w in weyl::enumerate(2).unwrap() {
            let full = count_hoch_stratum_bruteforce(2, p, &w, CountLevel::Full).unwrap();
            let orbit = count_hoch_stratum_bruteforce(2, p, &w, CountLevel::Orbit).unwrap();
            assert_eq!(full, orbit, "p = {p}, w = {w}");
        }
    }
}

#[test]
fn symbolic_and_brute_force_strata_agree() {
    for (n, primes) in [(2usize, &[2u64, 3, 5, 7][..]), (3, &[2, 3, 5]), (4, &[2])] {
        let validation = cross_validate(n, primes).unwrap();
        assert_eq!(
            validation.comparisons.len(),
            primes.len() * weyl::enumerate(n).unwrap().len()
        );
        for c in &validation.comparisons {
            assert!(
                c.agrees(),
                "n = {n}, p = {}, w = {}: {} vs {}",
                c.p,
                c.w,
                c.symbolic,
                c.brute_force
            );
        }
    }
}

#[test]
fn split_counting_matches_whole_count() {
    let w = Permutation::from_window(&[2, 3, 1]).unwrap();
    let counter = HochStratumCounter::new(3, 3, &w, CountLevel::Orbit).unwrap();
    let mid = counter.len() / 3;
    let partial = counter.count_range(0..mid) + counter.count_range(mid..counter.len());
    assert_eq!(counter.finish(partial), counter.count());
}

#[test]
fn over_budget_counts_are_refused() {
    let w = Permutation::identity(4);
    let err = HochStratumCounter::new(4, 5, &w, CountLevel::Full).unwrap_err();
    assert!(err.is_resource_limit(), "{err}");
}

#[test]
fn stratum_degrees_are_bounded() {
    for n in 1..=5 {
        let top = n * (n - 1) / 2;
        for (w, poly) in HochSpace::new(n).unwrap().strata() {
            assert!(
                poly.degree().is_some_and(|d| d <= 3 * top),
                "n = {n}, w = {w}: {poly}"
            );
        }
    }
}
