//! Report shapes emitted by the CLI. Field order is fixed by the struct
//! definitions and every collection is sorted, so the same invocation
//! always produces byte-identical output.

use bvls::search::{RoundRecord, StructureReport, Verdict};
use bvls::{AffineSolutionSet, Fraction};
use serde::Serialize;

/// Sets up to this many elements are listed exhaustively; larger ones
/// are reported as basis plus offset only.
pub const ENUMERATE_LIMIT: u64 = 64;

pub fn format_point(w: u32, n: u32) -> String {
    format!("{:0>width$b}", w, width = n as usize)
}

#[derive(Serialize)]
pub struct FractionJson {
    pub num: i64,
    pub den: u64,
    pub decimal: f64,
}

impl From<Fraction> for FractionJson {
    fn from(f: Fraction) -> Self {
        FractionJson {
            num: f.num,
            den: f.den,
            decimal: f.to_f64(),
        }
    }
}

#[derive(Serialize)]
pub struct SolutionSetJson {
    pub size: u64,
    pub dim: Option<u32>,
    pub particular: Option<String>,
    pub basis: Vec<String>,
    /// Present when the set is small enough to list exhaustively.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
}

impl SolutionSetJson {
    pub fn from_set(set: &AffineSolutionSet, n: u32) -> Self {
        let elements = (set.len() <= ENUMERATE_LIMIT).then(|| {
            set.elements_sorted()
                .into_iter()
                .map(|x| format_point(x, n))
                .collect()
        });
        SolutionSetJson {
            size: set.len(),
            dim: set.dim(),
            particular: set.particular().map(|p| format_point(p, n)),
            basis: set.kernel_basis().iter().map(|&b| format_point(b, n)).collect(),
            elements,
        }
    }
}

#[derive(Serialize)]
pub struct RoundJson {
    pub round: u32,
    pub distinct_rows: usize,
    pub a0_dim: u32,
    pub a1_dim: Option<u32>,
}

impl From<&RoundRecord> for RoundJson {
    fn from(r: &RoundRecord) -> Self {
        RoundJson {
            round: r.round,
            distinct_rows: r.distinct_rows,
            a0_dim: r.a0_dim,
            a1_dim: r.a1_dim,
        }
    }
}

#[derive(Serialize)]
pub struct AuditEntryJson {
    pub vector: String,
    pub side: u8,
    pub deficiency: FractionJson,
    pub is_quasi: bool,
}

#[derive(Serialize)]
pub struct SearchJson {
    pub n: u32,
    pub verdict: &'static str,
    pub rounds_used: u32,
    pub bv_runs: u64,
    pub epsilon: f64,
    /// Per-vector tail bound exp(-2 m epsilon^2); not a simultaneous
    /// bound over the whole candidate set.
    pub failure_bound: f64,
    pub a0: SolutionSetJson,
    pub a1: SolutionSetJson,
    pub history: Vec<RoundJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<AuditEntryJson>>,
}

impl SearchJson {
    pub fn from_report(n: u32, report: &StructureReport) -> Self {
        SearchJson {
            n,
            verdict: match report.verdict {
                Verdict::NoLinearStructure => "NoLinearStructure",
                Verdict::QuasiStructures => "QuasiStructures",
            },
            rounds_used: report.rounds_used,
            bv_runs: report.bv_runs,
            epsilon: report.epsilon,
            failure_bound: report.failure_bound,
            a0: SolutionSetJson::from_set(&report.a0, n),
            a1: SolutionSetJson::from_set(&report.a1, n),
            history: report.history.iter().map(RoundJson::from).collect(),
            audit: None,
        }
    }
}

/// Human-readable rendering of a solution set for the text reports.
pub fn print_set(label: &str, set: &AffineSolutionSet, n: u32) {
    match set.dim() {
        None => println!("{label}: empty"),
        Some(dim) => {
            println!("{label}: size {} (dim {dim})", set.len());
            if set.len() <= ENUMERATE_LIMIT {
                let elements: Vec<String> = set
                    .elements_sorted()
                    .into_iter()
                    .map(|x| format_point(x, n))
                    .collect();
                println!("{label} elements: {}", elements.join(" "));
            } else {
                println!(
                    "{label} offset: {}",
                    format_point(set.particular().unwrap(), n)
                );
                let basis: Vec<String> = set
                    .kernel_basis()
                    .iter()
                    .map(|&b| format_point(b, n))
                    .collect();
                println!("{label} basis: {}", basis.join(" "));
            }
        }
    }
}

pub fn format_fraction(f: Fraction) -> String {
    format!("{f} ({:.6})", f.to_f64())
}
