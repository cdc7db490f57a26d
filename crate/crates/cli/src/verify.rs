//! Randomized cross-checks of every route against the brute-force oracles and
//! the standard identities.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use nilgraph_core::oracle::{brute_clique, brute_cover, brute_cut, brute_independence};
use nilgraph_core::random::erdos_renyi;
use nilgraph_core::{
    clique_polynomial, cover_poly_by_extraction, cut_polynomial_laurent, cut_polynomial_xor,
    enumerate_independent_sets, expected_random_cut, indep_poly_by_extraction, independence_polynomial,
    nilpotency_index, vertex_cover_polynomial, Error, Graph, Poly,
};

/// Largest order accepted by `--n-max`; the oracles are exponential.
pub const MAX_N: u64 = 20;
/// Live-term cap for the extraction routes during verification.
pub const DEFAULT_WORK: usize = 1 << 18;
/// The Laurent route is only exercised on graphs this small.
const LAURENT_MAX_N: usize = 7;
const LAURENT_MAX_M: usize = 10;

/// Deliberate corruption used to check that failures are reported.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Adds one to the constant term of the cover polynomial.
    Cover,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    pub max_work: usize,
    pub fault: Option<Fault>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
    /// First failing graph as an edge list, for replay.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub seed: u64,
    pub count: usize,
    pub n_max: usize,
    pub properties: Vec<PropertyResult>,
    pub passed: bool,
}

const PROPERTIES: [&str; 13] = [
    "independence_vs_oracle",
    "clique_vs_oracle",
    "cover_vs_oracle",
    "cut_vs_oracle",
    "low_order_coefficients",
    "cover_reversal",
    "gallai_identity",
    "cut_total",
    "expected_cut_half_m",
    "enumeration_counts",
    "nilpotency_index",
    "extraction_routes",
    "laurent_vs_xor",
];

enum Check {
    Pass,
    Skip,
    Fail(String),
}

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Check::Pass
    } else {
        Check::Fail(detail())
    }
}

fn compare(what: &str, got: &Poly, want: &Poly) -> Check {
    expect(got == want, || format!("{what} {got}, expected {want}"))
}

fn skip_on_limit(r: nilgraph_core::Result<Check>) -> Check {
    match r {
        Ok(c) => c,
        Err(Error::WorkLimit { .. }) => Check::Skip,
        Err(e) => Check::Fail(e.to_string()),
    }
}

fn oracle(r: nilgraph_core::Result<Poly>) -> Poly {
    r.expect("verification orders stay within the oracle limit")
}

fn check_graph(g: &Graph, cfg: &Config) -> Vec<Check> {
    let (n, m) = (g.order(), g.size());
    let a = independence_polynomial(g);
    let mut b = vertex_cover_polynomial(g);
    if cfg.fault == Some(Fault::Cover) {
        let mut coeffs = b.coeffs().to_vec();
        coeffs[0] += 1u8;
        b = Poly::new(coeffs);
    }
    let d = cut_polynomial_xor(g).expect("order is within the XOR limit");
    let alpha = a.degree().expect("A_0 = 1");
    let beta = b.low_degree().expect("V covers every edge");

    let pairs = n * n.saturating_sub(1) / 2;
    let low = a.coeff(0) == BigUint::from(1u8)
        && a.coeff(1) == BigUint::from(n)
        && a.coeff(2) == BigUint::from(pairs - m);
    let counts = (0..=alpha).find(|&k| {
        BigUint::from(enumerate_independent_sets(g, k).unwrap().len()) != a.coeff(k)
    });

    vec![
        compare("A =", &a, &oracle(brute_independence(g))),
        compare("C =", &clique_polynomial(g), &oracle(brute_clique(g))),
        compare("B =", &b, &oracle(brute_cover(g))),
        compare("D =", &d, &oracle(brute_cut(g))),
        expect(low, || format!("A = {a}, n={n}, m={m}")),
        expect((0..=n).all(|k| b.coeff(k) == a.coeff(n - k)), || {
            format!("B = {b} is not the reversal of A = {a} in degree {n}")
        }),
        expect(alpha + beta == n, || format!("alpha={alpha} beta={beta} n={n}")),
        expect(d.sum() == BigUint::from(1u8) << (n - 1), || {
            format!("D(1) = {}, expected 2^{}", d.sum(), n - 1)
        }),
        match expected_random_cut(&d) {
            Ok(e) => {
                let half = BigRational::new(BigInt::from(m), BigInt::from(2));
                expect(e == half, || format!("D'(1)/D(1) = {e}, expected {half}"))
            }
            Err(e) => Check::Fail(e.to_string()),
        },
        match counts {
            None => Check::Pass,
            Some(k) => Check::Fail(format!("enumeration of order {k} disagrees with A_{k}")),
        },
        {
            let eta = nilpotency_index(g);
            expect(eta == alpha + 1, || format!("eta={eta} alpha={alpha}"))
        },
        skip_on_limit((|| {
            let ai = indep_poly_by_extraction(g, cfg.max_work)?;
            let bi = cover_poly_by_extraction(g, cfg.max_work)?;
            Ok(match compare("extracted A =", &ai, &a) {
                Check::Pass => compare("extracted B =", &bi, &vertex_cover_polynomial(g)),
                other => other,
            })
        })()),
        if n <= LAURENT_MAX_N && m <= LAURENT_MAX_M {
            skip_on_limit(cut_polynomial_laurent(g, cfg.max_work).map(|l| compare("Laurent D =", &l, &d)))
        } else {
            Check::Skip
        },
    ]
}

pub fn run(cfg: &Config) -> Summary {
    let mut results: Vec<PropertyResult> = PROPERTIES
        .iter()
        .map(|name| PropertyResult {
            name: name.to_string(),
            checked: 0,
            skipped: 0,
            failures: 0,
            counterexample: None,
            detail: None,
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.count {
        let n = rng.gen_range(1..=cfg.n_max);
        let p = rng.gen_range(0.1..0.6);
        let g = erdos_renyi(&mut rng, n, p);
        for (res, check) in results.iter_mut().zip(check_graph(&g, cfg)) {
            match check {
                Check::Pass => res.checked += 1,
                Check::Skip => res.skipped += 1,
                Check::Fail(detail) => {
                    res.checked += 1;
                    res.failures += 1;
                    if res.counterexample.is_none() {
                        res.counterexample = Some(g.to_edge_list());
                        res.detail = Some(detail);
                    }
                }
            }
        }
    }
    let passed = results.iter().all(|r| r.failures == 0);
    Summary {
        seed: cfg.seed,
        count: cfg.count,
        n_max: cfg.n_max,
        properties: results,
        passed,
    }
}

impl Summary {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify: seed={} count={} n_max={}",
            self.seed, self.count, self.n_max
        );
        for r in &self.properties {
            let status = if r.failures == 0 { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status}  {:<24} {} checked", r.name, r.checked);
            if r.skipped > 0 {
                let _ = write!(out, ", {} skipped", r.skipped);
            }
            if r.failures > 0 {
                let _ = write!(out, ", {} failed", r.failures);
            }
            out.push('\n');
            if let (Some(detail), Some(graph)) = (&r.detail, &r.counterexample) {
                let _ = writeln!(out, "      {detail}");
                let _ = writeln!(out, "      graph:");
                for line in graph.lines() {
                    let _ = writeln!(out, "        {line}");
                }
            }
        }
        let _ = writeln!(out, "result: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
