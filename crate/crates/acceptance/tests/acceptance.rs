use std::io::Write;
use std::time::{Duration, Instant};

use clap::Parser;
use graphpoly::algebra::{CycPoly, IntPoly};
use graphpoly::cli::{execute, Cli};
use graphpoly::families;
use graphpoly::graph::{Graph, IntMatrix};
use graphpoly::linalg::{charpoly_cyc, charpoly_int, PsiSign};
use graphpoly::obstruct::{
    check_charpoly, check_charpoly_with_action, check_laplacian, check_tutte_coeffs,
    check_tutte_congruence, check_tutte_congruence_units, check_u_congruence, run_report, Verdict,
};
use graphpoly::rank_poly::{
    specialize_u, tutte_deletion_contraction, tutte_rank_expansion, u_polynomial, PivotRule,
    DEFAULT_EDGE_CAP,
};
use graphpoly::symmetry::{
    circulant_blocks, find_free_actions, generate_periodic, t_matrix, CyclicAction,
};
use graphpoly_acceptance::Outcome;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

/// In-process CLI invocation: parses `args` exactly as the binary does.
fn cli(args: &[&str]) -> Result<String, String> {
    let argv = std::iter::once("graphpoly").chain(args.iter().copied());
    let parsed = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    execute(parsed).map_err(|f| format!("exit {}: {}", f.code, f.message))
}

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures");

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .expect("coefficient list")
        .iter()
        .map(|c| c.to_string())
        .collect()
}

fn strs(xs: &[i64]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

/// The 200-instance corpus: every `(p, s)` with `p ∈ {3, 5, 7}`, `s ∈ 1..=4`,
/// cycled with seeds `0..200`.
fn periodic_corpus() -> Vec<(u64, usize, u64, Graph, CyclicAction)> {
    let combos: Vec<(u64, usize)> = [3u64, 5, 7]
        .iter()
        .flat_map(|&p| (1..=4).map(move |s| (p, s)))
        .collect();
    (0..200u64)
        .map(|seed| {
            let (p, s) = combos[seed as usize % combos.len()];
            let (g, a) = generate_periodic(s, p, seed, 3).expect("valid parameters");
            (p, s, seed, g, a)
        })
        .collect()
}

/// Random multigraph: `m` edges with uniformly drawn endpoints (loops allowed,
/// repeats become parallel edges).
fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let mut rows = vec![vec![0u64; n]; n];
    for _ in 0..m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        rows[u][v] += 1;
        if u != v {
            rows[v][u] += 1;
        }
    }
    Graph::from_weight_rows(&rows).expect("symmetric by construction")
}

fn timed(
    number: u32,
    title: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (ok, mut detail) = body();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    if !in_time {
        detail.push_str(&format!("; time limit {:?} exceeded", limit.unwrap()));
    }
    Outcome {
        number,
        title,
        passed: ok && in_time,
        elapsed,
        detail,
    }
}

fn criterion_1() -> Outcome {
    timed(
        1,
        "6-vertex example polynomials",
        Some(Duration::from_secs(1)),
        || {
            let out = match cli(&["polys", "--input", &fixture("periodic6.json")]) {
                Ok(o) => o,
                Err(e) => return (false, e),
            };
            let v: Value = serde_json::from_str(&out).unwrap();
            let phi_ok = coeffs(&v["phi"]) == strs(&[-81, 36, 66, -14, -18, 0, 1]);
            let psi_ok = coeffs(&v["psi"]) == strs(&[0, 1350, 1845, 936, 219, 24, 1]);
            (
                phi_ok && psi_ok,
                format!("phi = {}, psi = {}", v["phi_text"], v["psi_text"]),
            )
        },
    )
}

fn criterion_2() -> Outcome {
    timed(2, "quotient and charpoly congruence", None, || {
        let g = fixture("periodic6.json");
        let a = fixture("periodic6_action.json");
        let q_text = match cli(&["quotient", "--input", &g, "--action", &a]) {
            Ok(o) => o,
            Err(e) => return (false, e),
        };
        let q = Graph::from_json(&q_text).unwrap();
        let adj_ok =
            q.adjacency_matrix() == IntMatrix::from_rows(&[vec![0, 3], vec![3, 2]]).unwrap();

        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(q_text.as_bytes()).unwrap();
        let polys: Value = serde_json::from_str(
            &cli(&["polys", "--input", file.path().to_str().unwrap()]).unwrap(),
        )
        .unwrap();
        let phi_ok = coeffs(&polys["phi"]) == strs(&[-9, -2, 1]);

        let verify: Value =
            serde_json::from_str(&cli(&["verify", "--input", &g, "--action", &a]).unwrap())
                .unwrap();
        let c = &verify["checks"][0];
        let want = "x^6 + x^3 (mod 3)";
        let cong_ok = c["check"] == "charpoly_with_action"
            && c["verdict"] == "verified"
            && c["lhs"] == want
            && c["rhs"] == want;
        (
            adj_ok && phi_ok && cong_ok,
            format!(
                "quotient {}, phi_quotient = {}, congruence {} with sides {} / {}",
                q_text.trim(),
                polys["phi_text"],
                c["verdict"],
                c["lhs"],
                c["rhs"]
            ),
        )
    })
}

fn criterion_3() -> Outcome {
    timed(
        3,
        "Frucht graph screening",
        Some(Duration::from_secs(1)),
        || {
            let f = families::frucht();
            let from_file =
                Graph::from_json(&std::fs::read_to_string(fixture("frucht.json")).unwrap())
                    .unwrap();
            let expected =
                IntPoly::from_i64s(&[0, -48, -68, 244, 309, -226, -309, 66, 115, -6, -18, 0, 1]);
            let phi_ok = charpoly_int(&f.adjacency_matrix()) == expected && from_file == f;

            let out = cli(&[
                "check",
                "--input",
                &fixture("frucht.json"),
                "--primes",
                "3,5,7,11",
            ])
            .unwrap();
            let v: Value = serde_json::from_str(&out).unwrap();
            let primes = v["primes"].as_array().unwrap();
            let all_obstructed =
                primes.len() == 4 && primes.iter().all(|p| p["verdict"] == "obstruction");
            let kind = |i: usize| v["primes"][i]["checks"][0]["kind"].clone();
            let kinds_ok = kind(0) == "coefficient"
                && (1..4).all(|i| kind(i) == "period_does_not_divide_order");
            (
                phi_ok && all_obstructed && kinds_ok,
                format!(
                    "charpoly matches: {phi_ok}; p=3 witness: {}",
                    v["primes"][0]["checks"][0]["witness"]
                ),
            )
        },
    )
}

#[derive(Default)]
struct Tally {
    run: usize,
    failed: Vec<String>,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.run += 1;
        if !ok {
            self.failed.push(label());
        }
    }

    fn summary(&self, name: &str) -> String {
        let mut s = format!("{name}: {}/{} pass", self.run - self.failed.len(), self.run);
        if self.skipped > 0 {
            s.push_str(&format!(", {} over the edge cap", self.skipped));
        }
        if let Some(first) = self.failed.first() {
            s.push_str(&format!(" (first failure: {first})"));
        }
        s
    }
}

fn criterion_4(corpus: &[(u64, usize, u64, Graph, CyclicAction)]) -> Outcome {
    timed(
        4,
        "soundness sweep over 200 periodic graphs",
        Some(Duration::from_secs(300)),
        || {
            let cap = DEFAULT_EDGE_CAP;
            let mut with_action = Tally::default();
            let mut screening = Tally::default();
            let mut laplacian = Tally::default();
            let mut u_cong = Tally::default();
            let mut tutte_cong = Tally::default();
            let mut tutte_units = Tally::default();
            let mut tutte_coeffs = Tally::default();
            for (p, s, seed, g, a) in corpus {
                let (p, label) = (*p, || format!("p={p} s={s} seed={seed}"));
                with_action.record(
                    check_charpoly_with_action(g, a).verdict == Verdict::Verified,
                    label,
                );
                screening.record(
                    check_charpoly(g, p).unwrap().verdict == Verdict::Consistent,
                    label,
                );
                laplacian.record(
                    check_laplacian(g, p, PsiSign::Plus).unwrap().verdict == Verdict::Consistent,
                    label,
                );
                if g.edge_count() as usize <= cap {
                    u_cong.record(
                        check_u_congruence(g, a, cap).unwrap().verdict == Verdict::Verified,
                        label,
                    );
                } else {
                    u_cong.skipped += 1;
                }
                if !g.is_connected() {
                    continue;
                }
                if g.edge_count() as usize > cap {
                    tutte_cong.skipped += 1;
                    tutte_units.skipped += 1;
                    tutte_coeffs.skipped += 1;
                    continue;
                }
                tutte_cong.record(
                    check_tutte_congruence(g, a, cap).unwrap().verdict == Verdict::Verified,
                    label,
                );
                tutte_units.record(
                    check_tutte_congruence_units(g, a, cap).unwrap().verdict == Verdict::Verified,
                    label,
                );
                tutte_coeffs.record(
                    check_tutte_coeffs(g, p, cap).unwrap().verdict == Verdict::Consistent,
                    label,
                );
            }
            let required = [
                &with_action,
                &screening,
                &laplacian,
                &u_cong,
                &tutte_cong,
                &tutte_coeffs,
            ];
            let ok = required.iter().all(|t| t.failed.is_empty());
            let detail = [
                with_action.summary("charpoly_with_action"),
                screening.summary("charpoly"),
                laplacian.summary("laplacian"),
                u_cong.summary("u_congruence"),
                tutte_cong.summary("tutte_congruence"),
                tutte_coeffs.summary("tutte_coeffs"),
                tutte_units.summary("tutte_congruence_units (informational)"),
            ]
            .join("; ");
            (ok, detail)
        },
    )
}

fn criterion_5(corpus: &[(u64, usize, u64, Graph, CyclicAction)]) -> Outcome {
    timed(5, "block-circulant factorization", None, || {
        let mut bad = Vec::new();
        for (p, s, seed, g, a) in corpus {
            let blocks = circulant_blocks(g, a);
            let mut prod = CycPoly::one(*p as u32);
            let mut images = Vec::new();
            for k in 0..*p {
                let f = charpoly_cyc(&t_matrix(&blocks, k).unwrap()).unwrap();
                images.push(f.f_p());
                prod = prod.try_mul(&f).unwrap();
            }
            let product_ok = prod.to_int_poly() == Some(charpoly_int(&g.adjacency_matrix()));
            let images_ok = images.windows(2).all(|w| w[0] == w[1]);
            if !(product_ok && images_ok) {
                bad.push(format!("p={p} s={s} seed={seed}"));
            }
        }
        (
            bad.is_empty(),
            format!(
                "{}/{} instances factor exactly; mismatches {bad:?}",
                corpus.len() - bad.len(),
                corpus.len()
            ),
        )
    })
}

fn criterion_6() -> Outcome {
    timed(
        6,
        "Tutte cross-oracles",
        Some(Duration::from_secs(60)),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(6);
            let (mut loops, mut parallels, mut bad) = (0, 0, Vec::new());
            for i in 0..100 {
                let g = random_multigraph(&mut rng, 6, 12);
                loops += usize::from(g.loop_count() > 0);
                parallels += usize::from(g.support().iter().any(|&(u, v, w)| u != v && w > 1));
                let rank = tutte_rank_expansion(&g, DEFAULT_EDGE_CAP).unwrap();
                let dc =
                    tutte_deletion_contraction(&g, DEFAULT_EDGE_CAP, PivotRule::Lowest).unwrap();
                let spec = specialize_u(
                    &u_polynomial(&g, DEFAULT_EDGE_CAP).unwrap(),
                    g.component_count(),
                )
                .unwrap();
                let one = BigInt::one();
                let total_ok = rank.eval(&one, &one) == BigInt::one() << g.edge_count();
                if !(dc == rank && spec == rank && total_ok) {
                    bad.push(i);
                }
            }
            (
            bad.is_empty(),
            format!(
                "{}/100 agree; {loops} graphs with loops, {parallels} with parallel edges; mismatches {bad:?}",
                100 - bad.len()
            ),
        )
        },
    )
}

fn criterion_7() -> Outcome {
    timed(7, "screening agrees with exhaustive search", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut graphs: Vec<Graph> = (0..300)
            .map(|_| random_multigraph(&mut rng, 8, 14))
            .collect();
        for seed in 0..40 {
            for (s, p) in [(1, 3), (2, 3), (1, 5), (1, 7)] {
                graphs.push(generate_periodic(s, p, seed, 2).unwrap().0);
            }
        }
        let (mut obstructed, mut periodic, mut counterexamples) = (0, 0, Vec::new());
        for (i, g) in graphs.iter().enumerate() {
            let report = run_report(g, &[3, 5, 7], PsiSign::Plus, DEFAULT_EDGE_CAP);
            for pr in &report.primes {
                let found = find_free_actions(g, pr.p, 12).unwrap();
                if !found.actions.is_empty() {
                    periodic += 1;
                }
                if pr.verdict == Verdict::Obstruction {
                    obstructed += 1;
                    if !found.actions.is_empty() {
                        counterexamples.push((i, pr.p));
                    }
                }
            }
        }
        (
            counterexamples.is_empty(),
            format!(
                "{} graphs x 3 primes: {obstructed} obstructions, {periodic} (graph, p) pairs with a free action, counterexamples {counterexamples:?}",
                graphs.len()
            ),
        )
    })
}

fn criterion_8() -> Outcome {
    timed(8, "deterministic check output", None, || {
        let mut same = true;
        for name in ["frucht.json", "periodic6.json"] {
            let args = ["check", "--input", &fixture(name), "--primes", "3,5,7,11"];
            let first = cli(&args).unwrap();
            let second = cli(&args).unwrap();
            same &= first.as_bytes() == second.as_bytes();
        }
        (same, format!("byte-identical: {same}"))
    })
}

fn main() {
    let corpus = periodic_corpus();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(&corpus),
        criterion_5(&corpus),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.number)
        .collect();
    println!(
        "acceptance: {}/{} criteria pass",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
