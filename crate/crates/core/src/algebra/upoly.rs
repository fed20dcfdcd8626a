//! The multivariate U-polynomial in variables `x_1, x_2, …` and `y`, and its
//! normal form modulo the ideal `(p, x_k^p - x_k, x_{pk} - x_k, y^p - y)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::mod_poly::{check_odd_prime, residue};
use crate::error::{Error, Result};

/// `x_{n_1} ⋯ x_{n_k} · y^d`, with the sizes kept in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UMonomial {
    sizes: Vec<u32>,
    ydeg: u32,
}

impl UMonomial {
    pub fn new(mut sizes: Vec<u32>, ydeg: u32) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::Malformed("component size 0 in monomial".into()));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(UMonomial { sizes, ydeg })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn ydeg(&self) -> u32 {
        self.ydeg
    }

    /// Number of `x` factors.
    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn mul(&self, other: &UMonomial) -> UMonomial {
        let mut sizes = self.sizes.clone();
        sizes.extend_from_slice(&other.sizes);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        UMonomial {
            sizes,
            ydeg: self.ydeg + other.ydeg,
        }
    }
}

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.sizes.len() {
            let k = self.sizes[i];
            let run = self.sizes[i..].iter().take_while(|&&s| s == k).count();
            parts.push(if run == 1 {
                format!("x_{k}")
            } else {
                format!("x_{k}^{run}")
            });
            i += run;
        }
        match self.ydeg {
            0 => {}
            1 => parts.push("y".into()),
            d => parts.push(format!("y^{d}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    terms: BTreeMap<UMonomial, BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn terms(&self) -> &BTreeMap<UMonomial, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &UMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: UMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &UMonomial, c: &BigInt) -> UPoly {
        let mut out = UPoly::zero();
        for (mm, cc) in &self.terms {
            out.add_term(mm.mul(m), cc * c);
        }
        out
    }

    /// Evaluates with every `x_k` set to `x` and `y` set to `y`.
    pub fn eval_uniform(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                c * num_traits::pow(x.clone(), m.parts())
                    * num_traits::pow(y.clone(), m.ydeg as usize)
            })
            .sum()
    }

    pub fn to_json(&self) -> Vec<UTermJson> {
        self.terms
            .iter()
            .map(|(m, c)| UTermJson {
                sizes: m.sizes.clone(),
                ydeg: m.ydeg,
                coeff: crate::json::big_number(c),
            })
            .collect()
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("{c}·{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `{"sizes": [n1, ...], "ydeg": d, "coeff": c}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UTermJson {
    pub sizes: Vec<u32>,
    pub ydeg: u32,
    pub coeff: serde_json::Number,
}

/// A reduced monomial: indices coprime to `p`, exponents in `1..p`, y-degree in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    /// `(index, exponent)` sorted by index.
    vars: Vec<(u32, u32)>,
    ydeg: u32,
}

impl NormalMonomial {
    pub fn vars(&self) -> &[(u32, u32)] {
        &self.vars
    }

    pub fn ydeg(&self) -> u32 {
        self.ydeg
    }

    /// The same monomial written as a `UMonomial`.
    pub fn to_umonomial(&self) -> UMonomial {
        let mut sizes = Vec::new();
        for &(k, e) in &self.vars {
            sizes.extend(std::iter::repeat(k).take(e as usize));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        UMonomial {
            sizes,
            ydeg: self.ydeg,
        }
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_umonomial().fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalUPoly {
    p: u64,
    terms: BTreeMap<NormalMonomial, u64>,
}

impl NormalUPoly {
    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<NormalMonomial, u64> {
        &self.terms
    }

    pub fn to_upoly(&self) -> UPoly {
        let mut out = UPoly::zero();
        for (m, &c) in &self.terms {
            out.add_term(m.to_umonomial(), BigInt::from(c));
        }
        out
    }

    /// First monomial (in key order) where the two normal forms disagree.
    pub fn first_difference(&self, other: &NormalUPoly) -> Option<(NormalMonomial, u64, u64)> {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let a = self.terms.get(k).copied().unwrap_or(0);
            let b = other.terms.get(k).copied().unwrap_or(0);
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

impl fmt::Display for NormalUPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (mod {})", self.p);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *c == 1 {
                    m.to_string()
                } else {
                    format!("{c}·{m}")
                }
            })
            .collect();
        write!(f, "{} (mod {})", parts.join(" + "), self.p)
    }
}

/// Reduces an exponent `e >= 1` modulo `z^p = z`: `e ↦ ((e-1) mod (p-1)) + 1`.
pub fn fold_exponent(e: u32, p: u64) -> u32 {
    if e == 0 {
        0
    } else {
        ((e as u64 - 1) % (p - 1) + 1) as u32
    }
}

/// Strips every factor of `p` from an index.
fn strip_p(mut k: u32, p: u64) -> u32 {
    while k as u64 % p == 0 {
        k /= p as u32;
    }
    k
}

/// Canonical representative of `u` modulo `(p, x_k^p - x_k, x_{pk} - x_k, y^p - y)`.
///
/// Indices lose all factors of `p` first; collided variables merge their
/// exponents; then exponents fold into `1..p` and coefficients reduce mod `p`.
pub fn u_normal_form(u: &UPoly, p: u64) -> Result<NormalUPoly> {
    check_odd_prime(p)?;
    let mut terms: BTreeMap<NormalMonomial, u64> = BTreeMap::new();
    for (m, c) in &u.terms {
        let c = residue(c, p);
        if c == 0 {
            continue;
        }
        let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in &m.sizes {
            *exps.entry(strip_p(k, p)).or_default() += 1;
        }
        let key = NormalMonomial {
            vars: exps
                .into_iter()
                .map(|(k, e)| (k, fold_exponent(e, p)))
                .collect(),
            ydeg: fold_exponent(m.ydeg, p),
        };
        let slot = terms.entry(key).or_default();
        *slot = (*slot + c) % p;
    }
    terms.retain(|_, c| *c != 0);
    Ok(NormalUPoly { p, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(sizes: &[u32], y: u32) -> UMonomial {
        UMonomial::new(sizes.to_vec(), y).unwrap()
    }

    fn upoly(terms: &[(&[u32], u32, i64)]) -> UPoly {
        let mut u = UPoly::zero();
        for &(s, y, c) in terms {
            u.add_term(mono(s, y), BigInt::from(c));
        }
        u
    }

    #[test]
    fn index_divisible_by_p_strips() {
        let nf = u_normal_form(&upoly(&[(&[3], 0, 1)]), 3).unwrap();
        assert_eq!(nf.to_upoly(), upoly(&[(&[1], 0, 1)]));
    }

    #[test]
    fn coprime_indices_unchanged() {
        let u = upoly(&[(&[1, 1], 0, 1), (&[2], 0, 1)]);
        assert_eq!(u_normal_form(&u, 3).unwrap().to_upoly(), u);
    }

    #[test]
    fn exponents_fold() {
        let u = upoly(&[(&[1, 1, 1, 1], 5, 1)]);
        let nf = u_normal_form(&u, 3).unwrap();
        assert_eq!(nf.to_upoly(), upoly(&[(&[1, 1], 1, 1)]));
    }

    #[test]
    fn collided_indices_merge_before_folding() {
        // x_1 · x_3 · x_9 → x_1^3 → x_1 for p = 3.
        let u = upoly(&[(&[9, 3, 1], 0, 2)]);
        let nf = u_normal_form(&u, 3).unwrap();
        assert_eq!(nf.to_upoly(), upoly(&[(&[1], 0, 2)]));
    }

    #[test]
    fn coefficients_reduce_and_cancel() {
        let u = upoly(&[(&[2], 0, 5), (&[2], 3, -2)]);
        // y^3 ≡ y for p = 3; 5 ≡ 2.
        let nf = u_normal_form(&u, 3).unwrap();
        assert_eq!(nf.to_upoly(), upoly(&[(&[2], 0, 2), (&[2], 1, 1)]));
        let v = upoly(&[(&[1], 0, 3)]);
        assert!(u_normal_form(&v, 3).unwrap().terms().is_empty());
    }

    #[test]
    fn rejects_bad_prime() {
        assert!(u_normal_form(&UPoly::zero(), 9).is_err());
    }

    #[test]
    fn add_term_cancels() {
        let mut u = upoly(&[(&[1], 0, 1), (&[2], 0, 1)]);
        u.add_term(mono(&[1], 0), BigInt::from(-1));
        assert_eq!(u, upoly(&[(&[2], 0, 1)]));
    }

    #[test]
    fn display() {
        let u = upoly(&[(&[1, 1], 0, 1), (&[2], 1, 3)]);
        assert_eq!(u.to_string(), "x_1^2 + 3·x_2·y");
    }
}
