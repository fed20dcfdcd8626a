//! Exact characteristic polynomials over `Z` and `Z[ζ]`.
//!
//! Both rings are torsion-free, so the Faddeev–LeVerrier recurrence
//! `c_{n-k} = -tr(A·M_k) / k` only ever divides exactly. Every division is
//! checked; a remainder means a bug, not bad input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{CycElem, CycPoly, IntPoly};
use crate::error::{Error, Result};
use crate::graph::{Graph, IntMatrix};

/// The ring operations the recurrence needs.
trait ExactRing: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, k: &BigInt) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let (q, r) = self.div_rem(k);
        r.is_zero().then_some(q)
    }
}

impl ExactRing for CycElem {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, k: &BigInt) -> Option<Self> {
        CycElem::div_exact(self, k)
    }
}

/// Coefficients of `det(xI - A)`, constant term first. `a` is row-major `n×n`.
fn faddeev_leverrier<R: ExactRing>(n: usize, a: &[R], zero: &R, one: &R) -> Result<Vec<R>> {
    let mut coeffs = vec![zero.clone(); n + 1];
    coeffs[n] = one.clone();
    // M_1 = I, and A·M_k is formed in place each round.
    let mut m: Vec<R> = (0..n * n)
        .map(|idx| {
            if idx / n == idx % n {
                one.clone()
            } else {
                zero.clone()
            }
        })
        .collect();
    for k in 1..=n {
        let mut am = vec![zero.clone(); n * n];
        for i in 0..n {
            for l in 0..n {
                let ail = &a[i * n + l];
                for j in 0..n {
                    am[i * n + j] = am[i * n + j].add(&ail.mul(&m[l * n + j]));
                }
            }
        }
        let mut tr = zero.clone();
        for i in 0..n {
            tr = tr.add(&am[i * n + i]);
        }
        let c = tr.neg().div_exact(&BigInt::from(k)).ok_or_else(|| {
            Error::InexactDivision(format!("trace at step {k} not divisible by {k}"))
        })?;
        coeffs[n - k] = c.clone();
        if k < n {
            for i in 0..n {
                am[i * n + i] = am[i * n + i].add(&c);
            }
            m = am;
        }
    }
    Ok(coeffs)
}

/// `det(xI - m)`.
pub fn charpoly_int(m: &IntMatrix) -> IntPoly {
    let coeffs = faddeev_leverrier(m.dim(), m.entries(), &BigInt::zero(), &BigInt::one())
        .expect("integer Faddeev-LeVerrier divides exactly");
    IntPoly::from_coeffs(coeffs)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant_bareiss(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let mut a = m.rows();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    if sign {
        -det
    } else {
        det
    }
}

/// Sign convention for the Laplacian characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum PsiSign {
    /// `det(xI + L)`: nonnegative coefficients.
    #[default]
    Plus,
    /// `det(xI - L)`.
    Minus,
}

impl PsiSign {
    pub fn describe(self) -> &'static str {
        match self {
            PsiSign::Plus => "psi(x) = det(xI + L)",
            PsiSign::Minus => "psi(x) = det(xI - L)",
        }
    }
}

impl std::str::FromStr for PsiSign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plus" => Ok(PsiSign::Plus),
            "minus" => Ok(PsiSign::Minus),
            other => Err(format!("expected plus or minus, got {other}")),
        }
    }
}

/// Laplacian characteristic polynomial under the chosen sign convention.
pub fn laplacian_charpoly(g: &Graph, sign: PsiSign) -> IntPoly {
    let l = g.laplacian_matrix();
    match sign {
        PsiSign::Plus => charpoly_int(&l.neg()),
        PsiSign::Minus => charpoly_int(&l),
    }
}

/// `det(xI + L(g)) = Π (x + λ_i)`.
pub fn signed_laplacian_charpoly(g: &Graph) -> IntPoly {
    laplacian_charpoly(g, PsiSign::Plus)
}

/// Square matrix over `Z[ζ]` for a fixed odd prime `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    p: u32,
    dim: usize,
    entries: Vec<CycElem>,
}

impl CycMatrix {
    pub fn new(p: u32, dim: usize, entries: Vec<CycElem>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} entries do not form a nonempty {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.order() != p) {
            return Err(Error::MismatchedOrder {
                left: p,
                right: bad.order(),
            });
        }
        Ok(CycMatrix { p, dim, entries })
    }

    pub fn from_int(p: u32, m: &IntMatrix) -> Self {
        CycMatrix {
            p,
            dim: m.dim(),
            entries: m
                .entries()
                .iter()
                .map(|c| CycElem::from_int(p, c.clone()))
                .collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.entries[i * self.dim + j]
    }

    /// The integer matrix, when no entry involves ζ.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let rows: Option<Vec<Vec<BigInt>>> = self
            .entries
            .chunks(self.dim)
            .map(|r| r.iter().map(|e| e.as_integer().cloned()).collect())
            .collect();
        rows.map(|r| IntMatrix::from_rows(&r).expect("square"))
    }
}

/// `det(xI - m)` over `Z[ζ]`.
pub fn charpoly_cyc(m: &CycMatrix) -> Result<CycPoly> {
    let coeffs = faddeev_leverrier(m.dim, &m.entries, &CycElem::zero(m.p), &CycElem::one(m.p))?;
    CycPoly::from_coeffs(m.p, coeffs)
}
