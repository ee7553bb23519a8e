//! The sampling search for linear structures.
//!
//! Each round draws n+1 measurement outcomes, adds them to the collected
//! row set H and solves the two uniform-RHS systems x.H = 0 and x.H = 1.
//! Every true structure satisfies every sampled row, so the candidate
//! sets A0 and A1 always contain the true sets U0 and U1; the moment A0
//! collapses to {0} and A1 to nothing, the absence of nonzero structures
//! is certain, for any seed. If the round budget runs out first, the
//! surviving candidates are reported together with a per-vector
//! confidence bound.

use crate::boolfn::BooleanFunction;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::gf2::{AffineSolutionSet, Gf2System};
use crate::sampler::BvSampler;
use crate::spectrum::{derivative_counts, walsh_transform};

/// Samples drawn per round. The round granularity is n+1 so that one
/// round can in principle pin down n independent rows plus one row
/// refuting the odd side.
fn round_sample_count(n: u32) -> usize {
    n as usize + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Certain: no nonzero direction is a linear structure.
    NoLinearStructure,
    /// The round budget elapsed with surviving candidates; they are
    /// quasi structures with high probability, and true structures are
    /// always among them.
    QuasiStructures,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Round budget r; the total number of measurements is at most
    /// r * (n + 1).
    pub max_rounds: u32,
    pub seed: u64,
    /// Accuracy parameter for the confidence bound. Defaults to
    /// m^(-1/2) evaluated at the final measurement count m.
    pub epsilon: Option<f64>,
    /// Stop at the first round that certifies absence. Disable to pin
    /// the measurement count at exactly max_rounds * (n + 1), e.g. for
    /// coverage experiments.
    pub halt_early: bool,
}

impl SearchConfig {
    pub fn new(max_rounds: u32, seed: u64) -> Self {
        SearchConfig {
            max_rounds,
            seed,
            epsilon: None,
            halt_early: true,
        }
    }
}

/// Sizes recorded after each round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundRecord {
    pub round: u32,
    /// Distinct rows collected so far.
    pub distinct_rows: usize,
    /// Dimension of the surviving even-side candidate set.
    pub a0_dim: u32,
    /// Dimension of the odd-side candidate set, absent once refuted.
    pub a1_dim: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub verdict: Verdict,
    pub a0: AffineSolutionSet,
    pub a1: AffineSolutionSet,
    /// Total measurements m = rounds_used * (n + 1).
    pub bv_runs: u64,
    pub rounds_used: u32,
    pub epsilon: f64,
    /// The per-vector tail bound exp(-2 m epsilon^2): each individual
    /// reported vector exceeds deficiency epsilon with at most this
    /// probability. It is not a simultaneous bound over the whole
    /// candidate set.
    pub failure_bound: f64,
    pub history: Vec<RoundRecord>,
}

/// Runs the search against a function oracle. Deterministic in
/// (function, config).
pub fn run(f: &BooleanFunction, config: &SearchConfig) -> Result<StructureReport> {
    if config.max_rounds == 0 {
        return Err(Error::ParameterRange {
            name: "max_rounds",
            value: 0.0,
            requirement: "at least 1",
        });
    }
    if let Some(eps) = config.epsilon {
        check_epsilon(eps)?;
    }
    let n = f.var_count();
    let spectrum = walsh_transform(f);
    let mut sampler = BvSampler::new(&spectrum, config.seed)?;
    let mut system = Gf2System::new(n);
    let mut history = Vec::new();
    let mut a0 = AffineSolutionSet::full_space(n);
    let mut a1 = AffineSolutionSet::full_space(n);
    let mut rounds_used = 0;

    for round in 1..=config.max_rounds {
        system.extend(sampler.sample_batch(round_sample_count(n)));
        a0 = system.solve(false);
        a1 = system.solve(true);
        rounds_used = round;
        history.push(RoundRecord {
            round,
            distinct_rows: system.len(),
            a0_dim: a0.dim().expect("the even system always has solution 0"),
            a1_dim: a1.dim(),
        });
        if config.halt_early && a0.is_zero_only() && a1.is_empty() {
            break;
        }
    }

    let verdict = if a0.is_zero_only() && a1.is_empty() {
        Verdict::NoLinearStructure
    } else {
        Verdict::QuasiStructures
    };
    let bv_runs = rounds_used as u64 * round_sample_count(n) as u64;
    let epsilon = config
        .epsilon
        .unwrap_or_else(|| 1.0 / (bv_runs as f64).sqrt());
    let failure_bound = hoeffding_failure_bound(bv_runs, epsilon)?;
    Ok(StructureReport {
        verdict,
        a0,
        a1,
        bv_runs,
        rounds_used,
        epsilon,
        failure_bound,
        history,
    })
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::ParameterRange {
            name: "epsilon",
            value: epsilon,
            requirement: "in (0, 1]",
        });
    }
    Ok(())
}

/// The tail bound exp(-2 m epsilon^2) on the probability that a single
/// surviving vector has deficiency at least epsilon after m
/// measurements; 1 minus this is the per-vector confidence.
pub fn hoeffding_failure_bound(m: u64, epsilon: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::ParameterRange {
            name: "m",
            value: 0.0,
            requirement: "at least 1",
        });
    }
    check_epsilon(epsilon)?;
    Ok((-2.0 * m as f64 * epsilon * epsilon).exp())
}

/// The confidence-interval form of the same bound: with
/// epsilon = m^(-lambda) for lambda in (0, 1/2], each surviving vector
/// has deficiency below epsilon with confidence
/// 1 - exp(-2 m^(1 - 2 lambda)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoeffdingConfidence {
    pub epsilon: f64,
    pub confidence: f64,
}

pub fn hoeffding_confidence(m: u64, lambda: f64) -> Result<HoeffdingConfidence> {
    if !(lambda > 0.0 && lambda <= 0.5) {
        return Err(Error::ParameterRange {
            name: "lambda",
            value: lambda,
            requirement: "in (0, 1/2]",
        });
    }
    let epsilon = (m as f64).powf(-lambda);
    Ok(HoeffdingConfidence {
        epsilon,
        confidence: 1.0 - hoeffding_failure_bound(m, epsilon)?,
    })
}

/// Planning heuristic: ceil((n+1) c / (1 - delta)) measurements are
/// expected to suffice for the search to certify absence on a function
/// of differential uniformity delta < 1. The constant convention c >= 1
/// is an artifact choice validated statistically, not an exact count.
pub fn expected_bv_runs(delta: Fraction, n: u32, c: f64) -> Result<u64> {
    crate::boolfn::check_var_count(n)?;
    if c < 1.0 {
        return Err(Error::ParameterRange {
            name: "c",
            value: c,
            requirement: "at least 1",
        });
    }
    if delta.is_one() || delta.num as u64 > delta.den {
        return Err(Error::DeltaIsOne);
    }
    if delta.num < 0 || (delta.num as u64) * 2 < delta.den {
        return Err(Error::ParameterRange {
            name: "delta",
            value: delta.to_f64(),
            requirement: "in [1/2, 1)",
        });
    }
    let gap = delta.den - delta.num as u64;
    // (n+1) * den fits far below 2^53, so the quotient is exact whenever
    // it is an integer and ceil never overshoots.
    let runs = ((n as f64 + 1.0) * c * delta.den as f64 / gap as f64).ceil();
    Ok(runs as u64)
}

/// Ground-truth audit of a reported vector: the deficiency
/// 1 - |{x : f(x xor a) + f(x) = i}| / 2^n as an exact rational, and
/// whether it clears the threshold. Brute force over the table, n <= 16.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasiCheck {
    pub deficiency: Fraction,
    pub is_quasi: bool,
}

pub fn quasi_check(f: &BooleanFunction, a: u32, i: bool, epsilon: f64) -> Result<QuasiCheck> {
    assert!(f.var_count() <= 16, "quasi audit is gated to n <= 16");
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::ParameterRange {
            name: "epsilon",
            value: epsilon,
            requirement: "positive",
        });
    }
    let full = f.table_len() as u64;
    let count = derivative_counts(f, a).get(i);
    let deficiency = Fraction::new((full - count) as i64, full);
    Ok(QuasiCheck {
        is_quasi: deficiency.lt_f64(epsilon),
        deficiency,
    })
}
