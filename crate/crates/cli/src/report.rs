//! Run reports and their text / JSON renderings.

use std::fmt::Write as _;

use cartan_core::{CartanResult, LieAlgebra, Vector};
use serde::{Deserialize, Serialize};

use crate::seed::format_combination;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    InvalidSeed,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportElement {
    pub expr: String,
    /// Exact coordinates as `"p/q"` or integer strings.
    pub coords: Vec<String>,
}

impl ReportElement {
    pub fn from_coords(coords: &[cartan_core::Scalar]) -> Self {
        ReportElement {
            expr: format_combination(coords),
            coords: coords.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub algebra: String,
    pub ambient: usize,
    pub dim: usize,
    pub seed: Vec<String>,
    pub status: Status,
    pub rank: Option<usize>,
    pub cartan: Vec<ReportElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    pub elapsed_ms: u64,
}

impl RunReport {
    fn base(alg: &LieAlgebra, seed: &[Vector], status: Status, elapsed_ms: u64) -> Self {
        RunReport {
            algebra: alg.name().to_string(),
            ambient: alg.ambient(),
            dim: alg.dim(),
            seed: seed.iter().map(|c| format_combination(c)).collect(),
            status,
            rank: None,
            cartan: Vec::new(),
            certificate: None,
            diagnostic: None,
            elapsed_ms,
        }
    }

    pub fn success(alg: &LieAlgebra, seed: &[Vector], result: &CartanResult, elapsed_ms: u64) -> Self {
        RunReport {
            rank: Some(result.rank()),
            cartan: result
                .elements
                .iter()
                .map(|e| ReportElement::from_coords(e.element.coords()))
                .collect(),
            certificate: Some(result.certificate.to_string()),
            ..RunReport::base(alg, seed, Status::Ok, elapsed_ms)
        }
    }

    pub fn failure(
        alg: &LieAlgebra,
        seed: &[Vector],
        status: Status,
        diagnostic: String,
        elapsed_ms: u64,
    ) -> Self {
        RunReport {
            diagnostic: Some(diagnostic),
            ..RunReport::base(alg, seed, status, elapsed_ms)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    /// Human-readable output. `quiet` keeps only the result lines.
    pub fn to_text(&self, quiet: bool) -> String {
        let mut out = String::new();
        if !quiet {
            let _ = writeln!(
                out,
                "Algebra {}: {}x{} matrices, dimension {}",
                self.algebra, self.ambient, self.ambient, self.dim
            );
            if !self.seed.is_empty() {
                let _ = writeln!(out, "Seed: {{{}}}", self.seed.join(", "));
            }
        }
        match self.status {
            Status::Ok => {
                let _ = writeln!(
                    out,
                    "The rank is {}, and a Cartan subalgebra:",
                    self.rank.unwrap_or_default()
                );
                for (i, e) in self.cartan.iter().enumerate() {
                    let _ = writeln!(out, "v{} = {}", i + 1, e.expr);
                }
                if !quiet {
                    if let Some(c) = &self.certificate {
                        let _ = writeln!(out, "Maximal: {c}");
                    }
                }
            }
            Status::InvalidSeed => {
                let _ = writeln!(out, "False");
                if let Some(d) = &self.diagnostic {
                    let _ = writeln!(out, "{d}");
                }
            }
            Status::Undecided => {
                let _ = writeln!(out, "Undecided");
                if let Some(d) = &self.diagnostic {
                    let _ = writeln!(out, "{d}");
                }
            }
        }
        if !quiet {
            let _ = writeln!(out, "Elapsed: {} ms", self.elapsed_ms);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_core::catalog::so_basis;
    use cartan_core::solver::{rank_and_cartan, SearchBudget};

    fn so6_report() -> RunReport {
        let so6 = so_basis(6).unwrap();
        let seed = vec![cartan_core::linalg::unit_vector(15, 0)];
        let result = rank_and_cartan(&so6, &[so6.basis()[0].clone()], &SearchBudget::default()).unwrap();
        RunReport::success(&so6, &seed, &result, 7)
    }

    #[test]
    fn text_mirrors_the_classic_output() {
        let text = so6_report().to_text(false);
        assert!(text.contains("The rank is 3, and a Cartan subalgebra:"));
        assert!(text.contains("v1 = b1\n"));
        assert!(text.contains("Elapsed: 7 ms"));
        let quiet = so6_report().to_text(true);
        assert!(quiet.starts_with("The rank is 3"));
        assert!(!quiet.contains("Elapsed"));
    }

    #[test]
    fn json_round_trips() {
        let report = so6_report();
        let json = report.to_json();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["algebra", "ambient", "dim", "seed", "status", "rank", "cartan", "elapsed_ms"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["status"], "ok");
        assert_eq!(value["cartan"][0]["coords"][0], "1");
    }

    #[test]
    fn invalid_seed_prints_false() {
        let so6 = so_basis(6).unwrap();
        let r = RunReport::failure(&so6, &[], Status::InvalidSeed, "bad".into(), 0);
        assert!(r.to_text(true).starts_with("False\nbad"));
        assert_eq!(r.rank, None);
    }
}
