//! Necessary conditions for a free `Z/p` symmetry, and congruences that must
//! hold once an action is known.
//!
//! Screening checks look only at the graph and answer `obstruction` or
//! `consistent`; they never claim a symmetry exists. Checks that take an
//! action compare the graph against its quotient and answer `verified` or
//! `violated`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{
    check_odd_prime, format_bivariate, residue, u_normal_form, ModPoly, TwoVarPoly,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{charpoly_int, laplacian_charpoly, PsiSign};
use crate::rank_poly::{tutte_rank_expansion, u_polynomial};
use crate::symmetry::{edge_orbit_graph, quotient_graph, CyclicAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The graph has no free automorphism of order `p`.
    Obstruction,
    /// No obstruction found; says nothing about existence.
    Consistent,
    /// The congruence holds for the supplied action.
    Verified,
    /// The congruence fails for the supplied action.
    Violated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    PeriodDoesNotDivideOrder,
    Coefficient,
    DivisibilityByXP,
    SupportInXP,
    TutteCoefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub p: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<ObstructionKind>,
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl CheckResult {
    fn new(check: &'static str, p: u64, verdict: Verdict, witness: String) -> Self {
        CheckResult {
            check,
            p,
            verdict,
            kind: None,
            witness,
            lhs: None,
            rhs: None,
        }
    }

    fn obstruction(check: &'static str, p: u64, kind: ObstructionKind, witness: String) -> Self {
        CheckResult {
            kind: Some(kind),
            ..CheckResult::new(check, p, Verdict::Obstruction, witness)
        }
    }

    fn sides(mut self, lhs: String, rhs: String) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    /// `verified` when `equal`, else `violated`.
    fn comparison(check: &'static str, p: u64, equal: bool, witness: String) -> Self {
        let verdict = if equal {
            Verdict::Verified
        } else {
            Verdict::Violated
        };
        CheckResult::new(check, p, verdict, witness)
    }
}

pub const CHECK_CHARPOLY: &str = "charpoly";
pub const CHECK_CHARPOLY_WITH_ACTION: &str = "charpoly_with_action";
pub const CHECK_LAPLACIAN: &str = "laplacian";
pub const CHECK_TUTTE_COEFFS: &str = "tutte_coeffs";
pub const CHECK_U_CONGRUENCE: &str = "u_congruence";
pub const CHECK_TUTTE_CONGRUENCE: &str = "tutte_congruence";
pub const CHECK_TUTTE_CONGRUENCE_UNITS: &str = "tutte_congruence_units";

/// A free action of prime order has every orbit of size `p`.
fn order_prefilter(check: &'static str, g: &Graph, p: u64) -> Option<CheckResult> {
    let n = g.n();
    (n as u64 % p != 0).then(|| {
        CheckResult::obstruction(
            check,
            p,
            ObstructionKind::PeriodDoesNotDivideOrder,
            format!("{p} does not divide the vertex count {n}"),
        )
    })
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// `φ_G mod p` must lie in `F_p[x^p]`.
///
/// The witness names the highest offending exponent and lists all of them.
pub fn check_charpoly(g: &Graph, p: u64) -> Result<CheckResult> {
    check_odd_prime(p)?;
    if let Some(r) = order_prefilter(CHECK_CHARPOLY, g, p) {
        return Ok(r);
    }
    let phi = charpoly_int(&g.adjacency_matrix());
    let reduced = ModPoly::reduce(&phi, p)?;
    let bad: Vec<usize> = reduced.support().filter(|&k| k as u64 % p != 0).collect();
    let result = match bad.last() {
        None => CheckResult::new(
            CHECK_CHARPOLY,
            p,
            Verdict::Consistent,
            format!("phi mod {p} = {reduced}"),
        ),
        Some(&k) => CheckResult::obstruction(
            CHECK_CHARPOLY,
            p,
            ObstructionKind::Coefficient,
            format!(
                "coefficient of x^{k} is {} ≡ {} (mod {p}); offending exponents: {}",
                phi.coeff(k),
                reduced.coeff(k),
                list(&bad)
            ),
        ),
    };
    Ok(result.sides(phi.to_string(), reduced.to_string()))
}

/// `φ_G ≡ φ_Ḡ(x^p) (mod p)` for the given action.
pub fn check_charpoly_with_action(g: &Graph, a: &CyclicAction) -> CheckResult {
    let p = a.p();
    let q = quotient_graph(g, a);
    let lhs = ModPoly::reduce(&charpoly_int(&g.adjacency_matrix()), p).expect("validated prime");
    let rhs = ModPoly::reduce(&charpoly_int(&q.adjacency_matrix()), p)
        .expect("validated prime")
        .inflate();
    let equal = lhs == rhs;
    let witness = if equal {
        format!("phi_G ≡ phi_quotient(x^{p}) ≡ {lhs}")
    } else {
        format!("phi_G ≡ {lhs} but phi_quotient(x^{p}) ≡ {rhs}")
    };
    CheckResult::comparison(CHECK_CHARPOLY_WITH_ACTION, p, equal, witness)
        .sides(lhs.to_string(), rhs.to_string())
}

/// `ψ_G mod p` must be divisible by `x^p` and supported on multiples of `p`.
pub fn check_laplacian(g: &Graph, p: u64, sign: PsiSign) -> Result<CheckResult> {
    check_odd_prime(p)?;
    if let Some(r) = order_prefilter(CHECK_LAPLACIAN, g, p) {
        return Ok(r);
    }
    let psi = laplacian_charpoly(g, sign);
    let reduced = ModPoly::reduce(&psi, p)?;
    let low: Vec<usize> = reduced.support().filter(|&k| (k as u64) < p).collect();
    let off: Vec<usize> = reduced.support().filter(|&k| k as u64 % p != 0).collect();
    let result = if let Some(&k) = low.first() {
        CheckResult::obstruction(
            CHECK_LAPLACIAN,
            p,
            ObstructionKind::DivisibilityByXP,
            format!(
                "psi mod {p} is not divisible by x^{p}: coefficient of x^{k} is {} ≡ {} (mod {p})",
                psi.coeff(k),
                reduced.coeff(k)
            ),
        )
    } else if let Some(&k) = off.first() {
        CheckResult::obstruction(
            CHECK_LAPLACIAN,
            p,
            ObstructionKind::SupportInXP,
            format!(
                "psi mod {p} is not a polynomial in x^{p}: coefficient of x^{k} is {} ≡ {} (mod {p})",
                psi.coeff(k),
                reduced.coeff(k)
            ),
        )
    } else {
        CheckResult::new(
            CHECK_LAPLACIAN,
            p,
            Verdict::Consistent,
            format!("psi mod {p} = {reduced}"),
        )
    };
    Ok(result.sides(psi.to_string(), reduced.to_string()))
}

/// Every coefficient `a_{i,j}` of `T_G(s, t)` that is nonzero mod `p` must
/// satisfy `i - j ≡ n - 1 (mod p)`. Requires a connected graph.
pub fn check_tutte_coeffs(g: &Graph, p: u64, cap: usize) -> Result<CheckResult> {
    check_odd_prime(p)?;
    if let Some(r) = order_prefilter(CHECK_TUTTE_COEFFS, g, p) {
        return Ok(r);
    }
    require_connected(g)?;
    let t = tutte_rank_expansion(g, cap)?;
    let target = (g.n() as i64 - 1).rem_euclid(p as i64);
    let bad: Vec<(u32, u32, u64)> = t
        .terms()
        .iter()
        .map(|(&(i, j), c)| (i, j, residue(c, p)))
        .filter(|&(i, j, r)| r != 0 && (i as i64 - j as i64).rem_euclid(p as i64) != target)
        .collect();
    let result = match bad.first() {
        None => CheckResult::new(
            CHECK_TUTTE_COEFFS,
            p,
            Verdict::Consistent,
            format!("every surviving coefficient has i - j ≡ {target} (mod {p})"),
        ),
        Some(_) => CheckResult::obstruction(
            CHECK_TUTTE_COEFFS,
            p,
            ObstructionKind::TutteCoefficient,
            format!(
                "coefficients with i - j ≢ {target} (mod {p}), as (i, j, a mod {p}): {}",
                bad.iter()
                    .map(|(i, j, c)| format!("({i}, {j}, {c})"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        ),
    };
    Ok(result)
}

fn require_connected(g: &Graph) -> Result<()> {
    let components = g.component_count();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

/// `U_G ≡ U_Ḡ` modulo `(p, x_k^p - x_k, x_{pk} - x_k, y^p - y)`, where `Ḡ`
/// has one edge per edge orbit (see [`edge_orbit_graph`]).
pub fn check_u_congruence(g: &Graph, a: &CyclicAction, cap: usize) -> Result<CheckResult> {
    let p = a.p();
    let q = edge_orbit_graph(g, a);
    let lhs = u_normal_form(&u_polynomial(g, cap)?, p)?;
    let rhs = u_normal_form(&u_polynomial(&q, cap)?, p)?;
    let witness = match lhs.first_difference(&rhs) {
        None => format!("normal forms agree ({} terms)", lhs.terms().len()),
        Some((m, l, r)) => format!("coefficient of {m}: {l} for the graph, {r} for the quotient"),
    };
    Ok(
        CheckResult::comparison(CHECK_U_CONGRUENCE, p, lhs == rhs, witness)
            .sides(lhs.to_string(), rhs.to_string()),
    )
}

fn folded_string(terms: &BTreeMap<(u32, u32), u64>, p: u64) -> String {
    let body = format_bivariate(terms.iter().map(|(&k, &c)| (k, c.into())));
    format!("{body} (mod {p})")
}

fn tutte_pair(g: &Graph, a: &CyclicAction, cap: usize) -> Result<(TwoVarPoly, TwoVarPoly)> {
    require_connected(g)?;
    let q = edge_orbit_graph(g, a);
    Ok((
        tutte_rank_expansion(g, cap)?,
        tutte_rank_expansion(&q, cap)?,
    ))
}

fn compare_folded(
    check: &'static str,
    p: u64,
    lhs: BTreeMap<(u32, u32), u64>,
    rhs: BTreeMap<(u32, u32), u64>,
) -> CheckResult {
    let equal = lhs == rhs;
    let witness = if equal {
        "reduced forms agree".to_string()
    } else {
        let key = lhs
            .keys()
            .chain(rhs.keys())
            .find(|k| lhs.get(k) != rhs.get(k))
            .expect("forms differ");
        format!(
            "coefficient of s^{} t^{}: {} for the graph, {} for the quotient",
            key.0,
            key.1,
            lhs.get(key).copied().unwrap_or(0),
            rhs.get(key).copied().unwrap_or(0)
        )
    };
    CheckResult::comparison(check, p, equal, witness)
        .sides(folded_string(&lhs, p), folded_string(&rhs, p))
}

/// `T_G ≡ T_Ḡ` modulo `(p, s^p - s, t^p - t)`.
pub fn check_tutte_congruence(g: &Graph, a: &CyclicAction, cap: usize) -> Result<CheckResult> {
    let p = a.p();
    let (tg, tq) = tutte_pair(g, a, cap)?;
    Ok(compare_folded(
        CHECK_TUTTE_CONGRUENCE,
        p,
        tg.fold_mod_p(p),
        tq.fold_mod_p(p),
    ))
}

/// `T_G ≡ T_Ḡ` modulo `(p, s^(p-1) - 1, t^p - t)`.
///
/// Specializing the U-congruence gives `s·T_G ≡ s·T_Ḡ` modulo
/// `(p, s^p - s, t^p - t)`; `s` is a zero divisor there, so cancelling it
/// is only valid after passing to `s^(p-1) = 1`.
pub fn check_tutte_congruence_units(
    g: &Graph,
    a: &CyclicAction,
    cap: usize,
) -> Result<CheckResult> {
    let p = a.p();
    let (tg, tq) = tutte_pair(g, a, cap)?;
    Ok(compare_folded(
        CHECK_TUTTE_CONGRUENCE_UNITS,
        p,
        tg.fold_mod_p_units(p),
        tq.fold_mod_p_units(p),
    ))
}

/// One check inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ReportEntry {
    Completed(CheckResult),
    Failed { check: &'static str, error: String },
    Skipped { check: &'static str, reason: String },
}

impl ReportEntry {
    /// Caps and unmet hypotheses skip a check; anything else is a failure.
    pub fn from_result(check: &'static str, r: Result<CheckResult>) -> Self {
        match r {
            Ok(c) => ReportEntry::Completed(c),
            Err(e @ (Error::CapExceeded { .. } | Error::Disconnected { .. })) => {
                ReportEntry::Skipped {
                    check,
                    reason: e.to_string(),
                }
            }
            Err(e) => ReportEntry::Failed {
                check,
                error: e.to_string(),
            },
        }
    }

    pub fn result(&self) -> Option<&CheckResult> {
        match self {
            ReportEntry::Completed(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: u64,
    pub loops: u64,
    pub components: usize,
    pub connected: bool,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        let components = g.component_count();
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            loops: g.loop_count(),
            components,
            connected: components == 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub degree: &'static str,
    pub psi: &'static str,
    pub psi_sign: PsiSign,
    pub edge_cap: usize,
}

impl Conventions {
    pub fn new(sign: PsiSign, edge_cap: usize) -> Self {
        Conventions {
            degree: "d_ii = sum_j w(v_i, v_j), loops counted once, so every row of L sums to 0",
            psi: sign.describe(),
            psi_sign: sign,
            edge_cap,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub p: u64,
    /// `obstruction` if any completed check found one, else `consistent`.
    pub verdict: Verdict,
    pub checks: Vec<ReportEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub graph: GraphSummary,
    pub conventions: Conventions,
    pub primes: Vec<PrimeReport>,
}

impl ObstructionReport {
    pub fn to_json(&self) -> String {
        crate::json::to_pretty(self)
    }

    pub fn prime(&self, p: u64) -> Option<&PrimeReport> {
        self.primes.iter().find(|r| r.p == p)
    }
}

/// Runs every screening check at every prime. Sub-check errors become
/// entries of the report; the report itself never fails.
pub fn run_report(g: &Graph, primes: &[u64], sign: PsiSign, edge_cap: usize) -> ObstructionReport {
    let primes = primes
        .iter()
        .map(|&p| {
            let checks = vec![
                ReportEntry::from_result(CHECK_CHARPOLY, check_charpoly(g, p)),
                ReportEntry::from_result(CHECK_LAPLACIAN, check_laplacian(g, p, sign)),
                ReportEntry::from_result(CHECK_TUTTE_COEFFS, check_tutte_coeffs(g, p, edge_cap)),
            ];
            let obstructed = checks
                .iter()
                .filter_map(ReportEntry::result)
                .any(|c| c.verdict == Verdict::Obstruction);
            PrimeReport {
                p,
                verdict: if obstructed {
                    Verdict::Obstruction
                } else {
                    Verdict::Consistent
                },
                checks,
            }
        })
        .collect();
    ObstructionReport {
        graph: GraphSummary::of(g),
        conventions: Conventions::new(sign, edge_cap),
        primes,
    }
}

/// The with-action checks, in a fixed order.
pub fn verify_action(g: &Graph, a: &CyclicAction, edge_cap: usize) -> Vec<ReportEntry> {
    vec![
        ReportEntry::Completed(check_charpoly_with_action(g, a)),
        ReportEntry::from_result(CHECK_U_CONGRUENCE, check_u_congruence(g, a, edge_cap)),
        ReportEntry::from_result(
            CHECK_TUTTE_CONGRUENCE,
            check_tutte_congruence(g, a, edge_cap),
        ),
        ReportEntry::from_result(
            CHECK_TUTTE_CONGRUENCE_UNITS,
            check_tutte_congruence_units(g, a, edge_cap),
        ),
    ]
}
