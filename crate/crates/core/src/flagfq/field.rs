use alloc::format;

use crate::error::{Error, Result};

/// The prime field `F_p`, `p < 2³¹`. Elements are residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldScalar {
    pub residue: u32,
    pub field: PrimeField,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::invalid(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn element(self, value: i64) -> PrimeFieldScalar {
        PrimeFieldScalar {
            residue: self.reduce(value),
            field: self,
        }
    }

    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 {
            s - self.p as u64
        } else {
            s
        }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; `a` must be nonzero.
    #[inline]
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2_147_483_647).is_ok());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.element(-1).residue, 6);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let big = PrimeField::new(2_147_483_647).unwrap();
        let a = 2_147_483_646;
        assert_eq!(big.mul(a, big.inv(a)), 1);
        assert_eq!(big.add(a, a), a - 1);
    }
}
