use std::collections::BTreeSet;

use hochschild_core::flagfq::{
    canonical_cell_point, flag_count, is_prime, CountLevel, Flag, HochStratumCounter,
    MiddleFlagCounter, PrimeField,
};
use hochschild_core::hecke::{self, DenseHecke};
use hochschild_core::hhalgebra::{self, AlgebraPresentation};
use hochschild_core::hochspace::{self, HochSpace};
use hochschild_core::polynomial::lagrange_interpolate;
use hochschild_core::weyl;
use hochschild_core::Error;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::algebra_file;
use crate::parallel::count_stratum;
use crate::report::{coefficients, label, number, number_value, polynomial_value, RunReport};
use crate::CliError;

/// Largest rank accepted by `euler`.
pub const MAX_EULER_RANK: usize = hochspace::MAX_SYMBOLIC_RANK;
/// Largest rank accepted by `lemma42` and `hecke-square`.
pub const MAX_SQUARE_RANK: usize = hecke::MAX_SQUARE_RANK;
/// Largest number of flags enumerated to check `hecke-square --at P`.
pub const SQUARE_CHECK_FLAGS: u128 = 5_000;

fn check_rank(n: usize, max: usize) -> Result<(), CliError> {
    if n == 0 || n > max {
        return Err(CliError::Invalid(format!(
            "--n must be between 1 and {max}, got {n}"
        )));
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn euler(n: usize) -> Result<RunReport, CliError> {
    check_rank(n, MAX_EULER_RANK)?;
    let space = HochSpace::new(n)?;
    let mut report = RunReport::new("euler");
    report.param("n", n);
    report.n = Some(n);
    let mut total = hochschild_core::IntPolynomial::zero();
    for (w, poly) in space.strata() {
        report.strata.insert(label(&w), polynomial_value(&poly));
        total += &poly;
    }
    let euler = total.evaluate_at(1);
    report.polynomial = Some(coefficients(&total));
    report.euler = Some(number(&euler));
    report.check(
        "euler == n!",
        number_value(&factorial(n)),
        number_value(&euler),
    );
    Ok(report)
}

pub fn lemma42(n: usize) -> Result<RunReport, CliError> {
    check_rank(n, MAX_SQUARE_RANK)?;
    let result = hochspace::verify_lemma42(n)?;
    let mut report = RunReport::new("lemma42");
    report.param("n", n);
    report.n = Some(n);
    for entry in &result.entries {
        report
            .strata
            .insert(label(&entry.sigma), number_value(&entry.value));
    }
    let failures: Vec<Value> = result
        .failures()
        .map(|e| Value::String(label(&e.sigma)))
        .collect();
    report.check(
        "N_sigma(1) is the identity indicator",
        json!([]),
        Value::Array(failures),
    );
    report.detail("values_checked", result.entries.len());
    Ok(report)
}

fn parse_level(level: &str) -> Result<CountLevel, CliError> {
    match level {
        "full" => Ok(CountLevel::Full),
        "orbit" => Ok(CountLevel::Orbit),
        other => Err(CliError::Invalid(format!(
            "--level must be full or orbit, got {other:?}"
        ))),
    }
}

pub fn bruteforce(
    n: usize,
    p: u64,
    level: &str,
    compare: bool,
    threads: usize,
) -> Result<RunReport, CliError> {
    check_rank(n, weyl::MAX_ENUMERATION_RANK)?;
    let count_level = parse_level(level)?;
    let elements = weyl::enumerate(n)?;
    // build every counter first so budget errors surface before any work
    let counters = elements
        .iter()
        .map(|w| HochStratumCounter::new(n, p, w, count_level))
        .collect::<Result<Vec<_>, Error>>()?;
    let mut report = RunReport::new("bruteforce");
    report
        .param("n", n)
        .param("p", p)
        .param("level", level)
        .param("compare", compare);
    report.n = Some(n);
    let mut counts = Vec::with_capacity(elements.len());
    for (w, counter) in elements.iter().zip(&counters) {
        let c = count_stratum(counter, threads);
        report.strata.insert(label(w), json!(c));
        counts.push(c);
    }
    let total: u64 = counts.iter().sum();
    report.detail("total", total);
    if compare {
        let validation = hochspace::cross_validate_with(n, &[p], |_, w| {
            let k = elements
                .iter()
                .position(|x| x == w)
                .expect("same enumeration");
            Ok(counts[k])
        })?;
        for c in &validation.comparisons {
            report.check(
                &format!("stratum {} at p = {p}", label(&c.w)),
                number_value(&c.symbolic),
                json!(c.brute_force),
            );
        }
        report.check(
            "total",
            number_value(&validation.symbolic_total(p)),
            json!(total),
        );
    }
    Ok(report)
}

pub fn hecke_square(n: usize, at: Option<i64>) -> Result<RunReport, CliError> {
    check_rank(n, MAX_SQUARE_RANK)?;
    let algebra = DenseHecke::new(n)?;
    let square = algebra.t_w0_squared();
    let table = algebra.table();
    let mut report = RunReport::new("hecke-square");
    report.param("n", n);
    report.n = Some(n);
    let Some(q) = at else {
        for (k, c) in square.iter().enumerate() {
            report
                .strata
                .insert(label(table.element(k)), polynomial_value(c));
        }
        return Ok(report);
    };
    report.param("at", q);
    let values: Vec<BigInt> = square.iter().map(|c| c.evaluate_at(q)).collect();
    for (k, v) in values.iter().enumerate() {
        report
            .strata
            .insert(label(table.element(k)), number_value(v));
    }
    if q == 1 {
        let indicator: Vec<Value> = (0..table.len())
            .map(|k| json!(u8::from(k == table.identity_index())))
            .collect();
        let actual: Vec<Value> = values.iter().map(number_value).collect();
        report.check("values at 1 are the identity indicator", indicator, actual);
    }
    if q > 1 && is_prime(q as u64) && flag_count(n, q as u64) <= SQUARE_CHECK_FLAGS {
        // N_τ(p) = #{b : pos(x, b) = w₀ = pos(b, z)} for pos(x, z) = τ
        let p = q as u64;
        let field = PrimeField::new(p)?;
        let counter = MiddleFlagCounter::new(n, p, SQUARE_CHECK_FLAGS)?;
        let x = Flag::standard(n, field);
        let w0 = weyl::longest_element(n);
        for (k, v) in values.iter().enumerate() {
            let tau = table.element(k);
            let counted = counter.count(&x, &canonical_cell_point(tau, field), &w0, &w0);
            report.check(
                &format!("flag count for {}", label(tau)),
                number_value(v),
                json!(counted),
            );
        }
    }
    Ok(report)
}

/// The dimensions the sl2 block must have in degrees `0..=max_degree`.
pub fn expected_sl2_dims(max_degree: usize) -> Vec<usize> {
    (0..=max_degree)
        .map(|k| [2, 1, 1].get(k).copied().unwrap_or(0))
        .collect()
}

pub fn hh(source: &str, max_degree: usize) -> Result<RunReport, CliError> {
    let algebra: AlgebraPresentation = algebra_file::load(source)?;
    if let Err(violations) = hhalgebra::validate(&algebra) {
        return Err(Error::InvalidPresentation(violations).into());
    }
    let result = hhalgebra::hh_dimensions(&algebra, max_degree)?;
    let center = hhalgebra::center_dimension(&algebra)?;
    let mut report = RunReport::new("hh");
    report
        .param("algebra", source)
        .param("max_degree", max_degree);
    report
        .detail("dim", algebra.dim())
        .detail("dims", result.dims.clone())
        .detail("cochain_dims", result.cochain_dims.clone())
        .detail("ranks", result.ranks.clone());
    report.check("HH^0 == center", json!(center), json!(result.dims[0]));
    if source == "builtin:sl2-catO" {
        report.check(
            "HH dims",
            json!(expected_sl2_dims(max_degree)),
            json!(result.dims),
        );
        let betti = weyl::length_generating_function(2)?;
        report.check(
            "HH^0 == total Betti number of P^1",
            number_value(&betti.evaluate_at(1)),
            json!(result.dims[0]),
        );
        if max_degree >= 2 {
            let h2 = betti.coefficient(1);
            let room = BigInt::from(result.dims[2]) >= h2;
            report.check("dim HH^2 >= dim H^2(P^1)", true, room);
        }
    }
    Ok(report)
}

pub fn interp(n: usize, primes: &[u64], threads: usize) -> Result<RunReport, CliError> {
    if n != 2 {
        return Err(CliError::Invalid(format!(
            "interp supports --n 2 only, got {n}"
        )));
    }
    let distinct: BTreeSet<u64> = primes.iter().copied().collect();
    if distinct.len() != primes.len() {
        return Err(CliError::Invalid(
            "--primes contains repeated values".into(),
        ));
    }
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(CliError::Invalid(format!("{p} is not prime")));
    }
    let symbolic = hochspace::hoch_polynomial(n)?;
    let degree_bound = 3 * n * (n - 1) / 2;
    if primes.len() <= degree_bound {
        return Err(CliError::Invalid(format!(
            "need at least {} distinct primes for degree bound {degree_bound}, got {}",
            degree_bound + 1,
            primes.len()
        )));
    }
    let elements = weyl::enumerate(n)?;
    let mut report = RunReport::new("interp");
    report.param("n", n).param("primes", primes.to_vec());
    report.n = Some(n);
    let mut points = Vec::with_capacity(primes.len());
    let mut totals = Vec::with_capacity(primes.len());
    for &p in primes {
        let mut total = 0u64;
        for w in &elements {
            let counter = HochStratumCounter::new(n, p, w, CountLevel::Full)?;
            total += count_stratum(&counter, threads);
        }
        totals.push(json!({"p": p, "total": total}));
        points.push((BigInt::from(p), BigInt::from(total)));
    }
    report.detail("totals", totals);
    match lagrange_interpolate(&points) {
        Ok(poly) => {
            report.polynomial = Some(coefficients(&poly));
            report.check(
                "interpolant == symbolic count",
                polynomial_value(&symbolic),
                polynomial_value(&poly),
            );
        }
        Err(e @ Error::InterpolationNotIntegral { .. }) => {
            report.detail("error", e.to_string());
            report.check("interpolant is integral", true, false);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_small() {
        let r = euler(2).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.polynomial
                .unwrap()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            ["0", "1", "0", "1"]
        );
        assert_eq!(r.strata["12"], json!([0, 0, 1]));
        assert_eq!(r.strata["21"], json!([0, 1, -1, 1]));
        assert!(matches!(euler(0), Err(CliError::Invalid(_))));
        assert!(matches!(euler(8), Err(CliError::Invalid(_))));
    }

    #[test]
    fn hecke_square_values() {
        let r = hecke_square(2, None).unwrap();
        assert_eq!(r.strata["12"], json!([0, 1]));
        assert_eq!(r.strata["21"], json!([-1, 1]));
        let r = hecke_square(3, Some(2)).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 6);
        assert!(hecke_square(3, Some(1)).unwrap().passed());
    }

    #[test]
    fn bruteforce_compare() {
        let r = bruteforce(2, 2, "full", true, 2).unwrap();
        assert_eq!(r.strata["12"], json!(4));
        assert_eq!(r.strata["21"], json!(6));
        assert_eq!(r.details["total"], json!(10));
        assert!(r.passed());
        let err = bruteforce(4, 5, "full", false, 1).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("needs"), "{err}");
    }

    #[test]
    fn interp_reconstructs() {
        let r = interp(2, &[2, 3, 5, 7], 1).unwrap();
        assert!(r.passed());
        assert!(matches!(interp(2, &[2, 3], 1), Err(CliError::Invalid(_))));
        assert!(matches!(
            interp(2, &[2, 3, 5, 9], 1),
            Err(CliError::Invalid(_))
        ));
    }

    #[test]
    fn sl2_dims() {
        assert_eq!(expected_sl2_dims(6), [2, 1, 1, 0, 0, 0, 0]);
        assert_eq!(expected_sl2_dims(1), [2, 1]);
        assert!(hh("builtin:sl2-catO", 6).unwrap().passed());
    }
}
