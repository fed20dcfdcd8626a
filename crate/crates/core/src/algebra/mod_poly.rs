use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::int_poly::{write_terms, IntPoly};
use crate::error::{Error, Result};

/// Rejects anything but an odd prime.
pub fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidPrime { p });
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::InvalidPrime { p });
        }
        d += 2;
    }
    Ok(())
}

/// Least nonnegative residue of `x` modulo `p`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Dense polynomial over `F_p`, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn from_residues(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    /// Coefficientwise reduction of an integer polynomial.
    pub fn reduce(f: &IntPoly, p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(ModPoly::from_residues(
            p,
            f.coeffs().iter().map(|c| residue(c, p)).collect(),
        ))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `f(x^p)`: the degree is multiplied by `p`.
    pub fn inflate(&self) -> Self {
        let p = self.p as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![0; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * p] = c;
        }
        ModPoly {
            p: self.p,
            coeffs: out,
        }
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.p, other.p, "moduli differ");
        let len = self.coeffs.len().max(other.coeffs.len());
        ModPoly::from_residues(
            self.p,
            (0..len)
                .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.p, other.p, "moduli differ");
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        ModPoly::from_residues(self.p, out.into_iter().map(|c| c as u64).collect())
    }

    pub fn pow(&self, mut e: u64) -> ModPoly {
        let mut base = self.clone();
        let mut acc = ModPoly::from_residues(self.p, vec![1]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exponents carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i, BigInt::from(c)))
                .collect(),
        )?;
        write!(f, " (mod {})", self.p)
    }
}
