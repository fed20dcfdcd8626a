use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::mod_poly::residue;
use super::upoly::fold_exponent;

/// Sparse polynomial `Σ a_{i,j} s^i t^j` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct TwoVarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TwoVarPoly {
    pub fn zero() -> Self {
        TwoVarPoly::default()
    }

    pub fn one() -> Self {
        TwoVarPoly::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut p = TwoVarPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = TwoVarPoly::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
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

    pub fn add(&self, other: &TwoVarPoly) -> TwoVarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TwoVarPoly) -> TwoVarPoly {
        let mut out = TwoVarPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    /// Multiplies by `s^ds · t^dt`.
    pub fn shift(&self, ds: u32, dt: u32) -> TwoVarPoly {
        TwoVarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + ds, j + dt), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(s.clone(), i as usize) * num_traits::pow(t.clone(), j as usize)
            })
            .sum()
    }

    /// `f(s + 1, t + 1)`: converts a polynomial in `(x, y)` to the shifted
    /// variables `s = x - 1`, `t = y - 1`.
    pub fn shift_variables(&self) -> TwoVarPoly {
        let mut out = TwoVarPoly::zero();
        for (&(i, j), c) in &self.terms {
            for a in 0..=i {
                let ci = binomial(BigInt::from(i), BigInt::from(a));
                for b in 0..=j {
                    let cj = binomial(BigInt::from(j), BigInt::from(b));
                    out.add_term(a, b, c * &ci * cj);
                }
            }
        }
        out
    }

    /// Representative modulo `(p, s^p - s, t^p - t)`: both exponents fold into
    /// `1..p` (0 stays 0) and coefficients reduce to `0..p`.
    pub fn fold_mod_p(&self, p: u64) -> BTreeMap<(u32, u32), u64> {
        self.reduce_with(p, |e| fold_exponent(e, p))
    }

    /// Representative modulo `(p, s^(p-1) - 1, t^p - t)`.
    pub fn fold_mod_p_units(&self, p: u64) -> BTreeMap<(u32, u32), u64> {
        self.reduce_with(p, |e| (e as u64 % (p - 1)) as u32)
    }

    fn reduce_with(&self, p: u64, fold_s: impl Fn(u32) -> u32) -> BTreeMap<(u32, u32), u64> {
        let mut out: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let r = residue(c, p);
            if r == 0 {
                continue;
            }
            let slot = out.entry((fold_s(i), fold_exponent(j, p))).or_default();
            *slot = (*slot + r) % p;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn to_json(&self) -> Vec<TwoVarTermJson> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| TwoVarTermJson {
                i,
                j,
                coeff: crate::json::big_number(c),
            })
            .collect()
    }
}

/// `{"i": …, "j": …, "coeff": …}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoVarTermJson {
    pub i: u32,
    pub j: u32,
    pub coeff: serde_json::Number,
}

impl fmt::Display for TwoVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            format_bivariate(self.terms.iter().map(|(k, c)| (*k, c.clone())))
        )
    }
}

/// Renders terms highest total degree first, e.g. `s^2 + 3s + t + 3`.
pub fn format_bivariate(terms: impl Iterator<Item = ((u32, u32), BigInt)>) -> String {
    let mut terms: Vec<_> = terms.filter(|(_, c)| !c.is_zero()).collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| (b.0 .0 + b.0 .1, b.0).cmp(&(a.0 .0 + a.0 .1, a.0)));
    let mut out = String::new();
    for (n, ((i, j), c)) in terms.into_iter().enumerate() {
        let neg = c < BigInt::zero();
        let mag = if neg { -c } else { c };
        if n == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut vars = String::new();
        for (name, e) in [("s", i), ("t", j)] {
            match e {
                0 => {}
                1 => vars.push_str(name),
                _ => vars.push_str(&format!("{name}^{e}")),
            }
        }
        if vars.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&vars);
        } else {
            out.push_str(&format!("{mag}{vars}"));
        }
    }
    out
}
