use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use nilgraph_core::Poly;

/// One computed polynomial plus the scalars derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub polynomial: PolynomialReport,
    pub scalars: Scalars,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReport {
    pub name: String,
    pub method: String,
    /// Lowest degree first, decimal so arbitrary precision survives JSON.
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scalars {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<usize>,
    /// Exact rational, e.g. `"7/2"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_cut: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self, timing: bool) -> String {
        let poly = Poly::from_decimal_strings(&self.polynomial.coeffs)
            .expect("coefficients were produced from a Poly");
        let mut out = String::new();
        let _ = writeln!(out, "graph: n={} m={}", self.n, self.m);
        let _ = writeln!(
            out,
            "{} polynomial ({}): {}",
            self.polynomial.name, self.polynomial.method, poly
        );
        let s = &self.scalars;
        let named = [("alpha", s.alpha), ("beta", s.beta), ("gamma", s.gamma), ("eta", s.eta)];
        for (name, value) in named {
            if let Some(v) = value {
                let _ = writeln!(out, "{name}={v}");
            }
        }
        if let Some(e) = &s.expected_cut {
            let _ = writeln!(out, "expected_cut={e}");
        }
        if timing {
            let _ = writeln!(out, "time: {} ms", self.ms);
        }
        out
    }
}

/// Output of the `enumerate` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub count: usize,
    pub sets: Vec<Vec<usize>>,
    pub ms: u64,
}

impl EnumerationReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for set in &self.sets {
            if set.is_empty() {
                out.push_str("{}\n");
                continue;
            }
            let line: Vec<String> = set.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}
