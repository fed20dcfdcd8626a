//! Cyclotomic integers `Z[ζ]` for a primitive `p`-th root of unity `ζ`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(p-2)` of
//! `Z[t] / Φ_p(t)`, where `Φ_p(t) = 1 + t + … + t^(p-1)`. The representation
//! is canonical, so structural equality is ring equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::int_poly::IntPoly;
use super::mod_poly::{residue, ModPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycElem {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CycElem {
    pub fn zero(p: u32) -> Self {
        assert!(p >= 3, "cyclotomic order must be an odd prime");
        CycElem {
            p,
            coeffs: vec![BigInt::zero(); p as usize - 1],
        }
    }

    pub fn one(p: u32) -> Self {
        CycElem::from_int(p, BigInt::one())
    }

    pub fn from_int(p: u32, c: BigInt) -> Self {
        let mut e = CycElem::zero(p);
        e.coeffs[0] = c;
        e
    }

    /// Element with the given power-basis coordinates; the length must be `p - 1`.
    pub fn from_coeffs(p: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != p as usize - 1 {
            return Err(Error::DimensionMismatch(format!(
                "cyclotomic element for p = {p} needs {} coordinates, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        Ok(CycElem { p, coeffs })
    }

    /// `ζ^m` for any integer exponent `m >= 0`.
    pub fn zeta_pow(p: u32, m: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); p as usize];
        coeffs[(m % p as u64) as usize] = BigInt::one();
        CycElem::reduce_full(p, coeffs)
    }

    /// Reduces a coefficient vector in `t^0..t^(p-1)` (length exactly `p`)
    /// using `t^(p-1) = -(1 + t + … + t^(p-2))`.
    fn reduce_full(p: u32, mut full: Vec<BigInt>) -> Self {
        debug_assert_eq!(full.len(), p as usize);
        let top = full.pop().expect("nonempty");
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CycElem { p, coeffs: full }
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the element is the rational integer `c`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    /// The ring map `Σ n_i ζ^i ↦ Σ n_i (mod p)`, well defined since `Φ_p(1) = p`.
    pub fn f_p(&self) -> u64 {
        let s: BigInt = self.coeffs.iter().sum();
        residue(&s, self.p as u64)
    }

    fn same_order(&self, other: &CycElem) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MismatchedOrder {
                left: self.p,
                right: other.p,
            })
        }
    }

    pub fn try_add(&self, other: &CycElem) -> Result<CycElem> {
        self.same_order(other)?;
        Ok(CycElem {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &CycElem) -> Result<CycElem> {
        self.same_order(other)?;
        let p = self.p as usize;
        // t^p = 1 folds the product into length p before eliminating t^(p-1).
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % p] += a * b;
                }
            }
        }
        Ok(CycElem::reduce_full(self.p, full))
    }

    pub fn scale(&self, k: &BigInt) -> CycElem {
        CycElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Division by a rational integer, `None` unless every coordinate is divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<CycElem> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(CycElem { p: self.p, coeffs })
    }
}

impl Add for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        self.try_add(rhs).expect("cyclotomic orders agree")
    }
}

impl Sub for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        self.try_add(&-rhs).expect("cyclotomic orders agree")
    }
}

impl Mul for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        self.try_mul(rhs).expect("cyclotomic orders agree")
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}ζ"),
                _ => format!("{c}ζ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "({})", terms.join(" + "))
        }
    }
}

/// Dense polynomial in `x` over `Z[ζ]`, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycPoly {
    p: u32,
    coeffs: Vec<CycElem>,
}

impl CycPoly {
    pub fn zero(p: u32) -> Self {
        CycPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u32) -> Self {
        CycPoly {
            p,
            coeffs: vec![CycElem::one(p)],
        }
    }

    pub fn from_coeffs(p: u32, mut coeffs: Vec<CycElem>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.p != p) {
            return Err(Error::MismatchedOrder {
                left: p,
                right: bad.p,
            });
        }
        while coeffs.last().is_some_and(CycElem::is_zero) {
            coeffs.pop();
        }
        Ok(CycPoly { p, coeffs })
    }

    pub fn from_int_poly(p: u32, f: &IntPoly) -> Self {
        CycPoly {
            p,
            coeffs: f
                .coeffs()
                .iter()
                .map(|c| CycElem::from_int(p, c.clone()))
                .collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[CycElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&CycElem::one(self.p))
    }

    pub fn try_add(&self, other: &CycPoly) -> Result<CycPoly> {
        if self.p != other.p {
            return Err(Error::MismatchedOrder {
                left: self.p,
                right: other.p,
            });
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = CycElem::zero(self.p);
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                a + b
            })
            .collect();
        CycPoly::from_coeffs(self.p, coeffs)
    }

    pub fn try_mul(&self, other: &CycPoly) -> Result<CycPoly> {
        if self.p != other.p {
            return Err(Error::MismatchedOrder {
                left: self.p,
                right: other.p,
            });
        }
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(CycPoly::zero(self.p));
        }
        let mut out = vec![CycElem::zero(self.p); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        CycPoly::from_coeffs(self.p, out)
    }

    /// Coefficientwise `f_p`.
    pub fn f_p(&self) -> ModPoly {
        ModPoly::from_residues(
            self.p as u64,
            self.coeffs.iter().map(CycElem::f_p).collect(),
        )
    }

    /// The integer polynomial, when every coefficient is ζ-free.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.as_integer().cloned())
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::from_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: u32, xs: &[i64]) -> CycElem {
        CycElem::from_coeffs(p, xs.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    #[test]
    fn zeta_squared_p3() {
        let z = CycElem::zeta_pow(3, 1);
        assert_eq!(&z * &z, v(3, &[-1, -1]));
    }

    #[test]
    fn identity_and_wraparound() {
        let a = v(5, &[2, -1, 0, 7]);
        assert_eq!(&a * &CycElem::one(5), a);
        let z4 = CycElem::zeta_pow(5, 4);
        assert_eq!(z4, v(5, &[-1, -1, -1, -1]));
        assert_eq!(&z4 * &CycElem::zeta_pow(5, 1), v(5, &[1, 0, 0, 0]));
    }

    #[test]
    fn zeta_to_the_p_is_one() {
        for p in [3u32, 5, 7, 11, 13] {
            let z = CycElem::zeta_pow(p, 1);
            let mut acc = CycElem::one(p);
            for _ in 0..p {
                acc = &acc * &z;
            }
            assert_eq!(acc, CycElem::one(p), "p = {p}");
        }
    }

    #[test]
    fn f_p_values() {
        assert_eq!(v(3, &[0, 1]).f_p(), 1);
        assert_eq!(CycElem::zero(3).f_p(), 0);
        assert_eq!(v(3, &[-1, -1]).f_p(), 1);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = CycElem::one(3);
        let b = CycElem::one(5);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::MismatchedOrder { left: 3, right: 5 })
        );
        assert!(a.try_add(&b).is_err());
        assert!(CycElem::from_coeffs(5, vec![BigInt::one()]).is_err());
    }

    #[test]
    fn cyclotomic_polynomial_vanishes_at_zeta() {
        for p in [3u32, 5, 7] {
            let mut sum = CycElem::zero(p);
            for m in 0..p as u64 {
                sum = &sum + &CycElem::zeta_pow(p, m);
            }
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn exact_division() {
        let a = v(5, &[6, -9, 0, 3]);
        assert_eq!(a.div_exact(&BigInt::from(3)), Some(v(5, &[2, -3, 0, 1])));
        assert_eq!(a.div_exact(&BigInt::from(2)), None);
    }
}
