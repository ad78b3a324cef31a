//! Dense univariate polynomials in `q` with arbitrary-precision integer coefficients.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient `k` multiplies `q^k`. Trailing zeros are never stored, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coefficients(vec![c.into()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `q`.
    pub fn q() -> Self {
        Self::monomial(1)
    }

    pub fn from_coefficients<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_at(&self, x: i64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// `self += q^shift * other * factor`, the workhorse of the Hecke engine.
    pub(crate) fn add_shifted_scaled(&mut self, other: &IntPolynomial, shift: usize, factor: i64) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            match factor {
                1 => self.coeffs[k + shift] += c,
                -1 => self.coeffs[k + shift] -= c,
                _ => self.coeffs[k + shift] += c * factor,
            }
        }
        self.normalize();
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Descending-degree rendering, e.g. `q^3 - q^2 + q`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("q")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        self.add_shifted_scaled(rhs, 0, 1);
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        self.add_shifted_scaled(rhs, 0, -1);
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coefficients(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

pub fn add(p: &IntPolynomial, r: &IntPolynomial) -> IntPolynomial {
    p + r
}

pub fn mul(p: &IntPolynomial, r: &IntPolynomial) -> IntPolynomial {
    p * r
}

pub fn scale(p: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    p.scale(c)
}

pub fn evaluate(p: &IntPolynomial, x: &BigInt) -> BigInt {
    p.evaluate(x)
}

/// The unique polynomial of degree `< points.len()` through `points`.
///
/// Runs in exact rational arithmetic and fails with
/// [`Error::InterpolationNotIntegral`] unless every coefficient is an integer.
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    if points.is_empty() {
        return Err(Error::invalid("interpolation needs at least one point"));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::invalid(alloc::format!("repeated abscissa {xi}")));
        }
    }

    let m = points.len();
    let mut acc = vec![BigRational::zero(); m];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // numerator Π_{j≠i} (q - x_j), denominator Π_{j≠i} (x_i - x_j)
        let mut basis = IntPolynomial::one();
        let mut denominator = BigInt::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j != i {
                basis = &basis * &IntPolynomial::from_coefficients([-xj.clone(), BigInt::one()]);
                denominator *= xi - xj;
            }
        }
        let weight = BigRational::new(yi.clone(), denominator);
        for (k, c) in basis.coeffs.iter().enumerate() {
            acc[k] += &weight * BigRational::from_integer(c.clone());
        }
    }

    let mut coeffs = Vec::with_capacity(m);
    for (degree, c) in acc.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::InterpolationNotIntegral {
                degree,
                value: c.to_string(),
            });
        }
        coeffs.push(c.to_integer());
    }
    let poly = IntPolynomial::from_coefficients(coeffs);
    assert!(
        points.iter().all(|(x, y)| &poly.evaluate(x) == y),
        "interpolant does not reproduce its data"
    );
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coefficients(c.iter().copied())
    }

    fn points(data: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        data.iter().map(|&(x, y)| (x.into(), y.into())).collect()
    }

    #[test]
    fn ring_examples() {
        assert!((&poly(&[1, 1]) + &poly(&[-1, -1])).is_zero());
        assert_eq!(&poly(&[-1, 1]) * &poly(&[1, 1]), poly(&[-1, 0, 1]));
        assert_eq!(
            poly(&[0, 1, 0, 1]).scale(&BigInt::one()),
            poly(&[0, 1, 0, 1])
        );
        assert!(poly(&[3, 2]).scale(&BigInt::zero()).is_zero());
    }

    #[test]
    fn canonical_form() {
        assert_eq!(poly(&[1, 0, 0]).coefficients().len(), 1);
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(poly(&[0, 0, 5]).degree(), Some(2));
        assert_eq!(poly(&[1, 2]) - poly(&[0, 2]), IntPolynomial::one());
    }

    #[test]
    fn evaluate_examples() {
        // q^3 + q at 2 is the n = 2 Hochschild count over F_2
        assert_eq!(poly(&[0, 1, 0, 1]).evaluate_at(2), BigInt::from(10));
        assert_eq!(poly(&[0, 1, 0, 1]).evaluate_at(1), BigInt::from(2));
        assert_eq!(IntPolynomial::zero().evaluate_at(7), BigInt::zero());
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            lagrange_interpolate(&points(&[(1, 1), (2, 2)])).unwrap(),
            IntPolynomial::q()
        );
        assert_eq!(
            lagrange_interpolate(&points(&[(2, 10), (3, 30), (5, 130), (7, 350)])).unwrap(),
            poly(&[0, 1, 0, 1])
        );
        assert_eq!(
            lagrange_interpolate(&points(&[(0, 5)])).unwrap(),
            IntPolynomial::constant(5)
        );
    }

    #[test]
    fn interpolation_errors() {
        assert!(matches!(
            lagrange_interpolate(&[]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            lagrange_interpolate(&points(&[(1, 1), (1, 2)])),
            Err(Error::InvalidInput(_))
        ));
        // (0,0),(2,1) forces slope 1/2
        assert!(matches!(
            lagrange_interpolate(&points(&[(0, 0), (2, 1)])),
            Err(Error::InterpolationNotIntegral { degree: 1, .. })
        ));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[0, 1, -1, 1]).to_string(), "q^3 - q^2 + q");
        assert_eq!(poly(&[-1, 1]).to_string(), "q - 1");
        assert_eq!(poly(&[0, 0, -3]).to_string(), "-3*q^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn shift_and_monomial() {
        assert_eq!(poly(&[1, 1]).shift(2), poly(&[0, 0, 1, 1]));
        assert_eq!(IntPolynomial::monomial(3), poly(&[0, 0, 0, 1]));
        assert!(IntPolynomial::zero().shift(4).is_zero());
    }
}
