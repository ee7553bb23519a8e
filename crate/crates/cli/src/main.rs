mod report;
mod source;

use anyhow::bail;
use bvls::search::{self, quasi_check, SearchConfig};
use bvls::spectrum::{
    correlation, derivative_counts, differential_profile, differential_profile_naive,
    hyperplane_mass, walsh_transform, walsh_value_naive,
};
use bvls::structures::{
    brute_force_linear_structures, spectral_linear_structures, SpectralSupport,
};
use bvls::BvSampler;
use clap::{Parser, Subcommand};
use report::{format_fraction, format_point, print_set, AuditEntryJson, SearchJson};
use source::SourceArgs;
use std::cmp::Reverse;

/// Linear-structure analysis of Boolean functions: exact spectral
/// computation cross-checked against brute force, and a simulated
/// sampling search with confidence reporting.
#[derive(Parser)]
#[command(name = "bvls", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the scaled spectral coefficients W(w) = 2^n S_f(w)
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        /// Sort by descending |W(w)| instead of index order
        #[arg(long)]
        by_magnitude: bool,
    },
    /// Exact linear structures (spectral route) with support diagnostics
    Exact {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Draw simulated measurement outcomes, one bitstring per line
    Sample {
        #[command(flatten)]
        source: SourceArgs,
        /// Generator seed for the measurement stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of draws
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Iterated sampling search for quasi linear structures (JSON report)
    Algorithm1 {
        #[command(flatten)]
        source: SourceArgs,
        /// Round budget r (n+1 draws per round); default n^2
        #[arg(long)]
        rounds: Option<u32>,
        /// Generator seed for the measurement stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Accuracy parameter in (0, 1]; default m^(-1/2) at the final
        /// measurement count m
        #[arg(long)]
        epsilon: Option<f64>,
        /// Audit every reported vector against its exact deficiency
        /// (n <= 16)
        #[arg(long)]
        audit: bool,
    },
    /// Differential profile and differential uniformity
    Profile {
        #[command(flatten)]
        source: SourceArgs,
        /// Also print the per-direction derivative counts
        #[arg(long)]
        full: bool,
    },
    /// Run every exact cross-check on one function (n <= 12)
    Check {
        #[command(flatten)]
        source: SourceArgs,
    },
}

fn main() {
    // Die quietly on a closed pipe instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Spectrum {
            source,
            by_magnitude,
        } => spectrum_cmd(&source, by_magnitude),
        Command::Exact { source } => exact_cmd(&source),
        Command::Sample {
            source,
            seed,
            count,
        } => sample_cmd(&source, seed, count),
        Command::Algorithm1 {
            source,
            rounds,
            seed,
            epsilon,
            audit,
        } => algorithm1_cmd(&source, rounds, seed, epsilon, audit),
        Command::Profile { source, full } => profile_cmd(&source, full),
        Command::Check { source } => check_cmd(&source),
    }
}

fn spectrum_cmd(source: &SourceArgs, by_magnitude: bool) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    let spectrum = walsh_transform(&f);
    let mut order: Vec<u32> = (0..f.table_len()).collect();
    if by_magnitude {
        order.sort_by_key(|&w| (Reverse(spectrum.coeff(w).unsigned_abs()), w));
    }
    for w in order {
        println!(
            "{} {} {}",
            format_point(w, n),
            spectrum.coeff(w),
            spectrum.normalized(w)
        );
    }
    Ok(())
}

fn exact_cmd(source: &SourceArgs) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    let spectrum = walsh_transform(&f);
    let sets = spectral_linear_structures(&spectrum);
    let support = SpectralSupport::from_spectrum(&spectrum);

    println!("n = {n}");
    print_set("u0", &sets.u0, n);
    print_set("u1", &sets.u1, n);
    println!("nonzero structure: {}", yes_no(sets.has_nonzero_structure()));
    println!("support size: {}", support.len());
    println!("support rank: {}", support.rank());
    println!("zero in support: {}", yes_no(support.contains_zero()));
    if support.len() <= 1 << 16 {
        match support.xor_closed_witness() {
            Some((w1, w2)) => println!(
                "xor-closed witness: ({}, {})",
                format_point(w1, n),
                format_point(w2, n)
            ),
            None => println!("xor-closed witness: none"),
        }
    } else {
        println!("xor-closed witness: not computed (support exceeds 65536 points)");
    }
    println!("u1 nonempty: {}", yes_no(!sets.u1.is_empty()));
    Ok(())
}

fn sample_cmd(source: &SourceArgs, seed: u64, count: u64) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    let spectrum = walsh_transform(&f);
    let mut sampler = BvSampler::new(&spectrum, seed)?;
    for _ in 0..count {
        println!("{}", format_point(sampler.sample(), n));
    }
    Ok(())
}

fn algorithm1_cmd(
    source: &SourceArgs,
    rounds: Option<u32>,
    seed: u64,
    epsilon: Option<f64>,
    audit: bool,
) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    if audit && n > 16 {
        bail!("--audit: requires n <= 16, function has n = {n}");
    }
    let max_rounds = rounds.unwrap_or(n * n);
    if max_rounds == 0 {
        bail!("--rounds: must be at least 1");
    }
    if let Some(eps) = epsilon {
        if eps.is_nan() || eps <= 0.0 || eps > 1.0 {
            bail!("--epsilon: must be in (0, 1], got {eps}");
        }
    }
    let config = SearchConfig {
        max_rounds,
        seed,
        epsilon,
        halt_early: true,
    };
    let report = search::run(&f, &config)?;
    let mut json = SearchJson::from_report(n, &report);
    if audit {
        let mut entries = Vec::new();
        for (set, side) in [(&report.a0, false), (&report.a1, true)] {
            let mut vectors = set.elements_sorted();
            vectors.sort_unstable();
            for a in vectors {
                let check = quasi_check(&f, a, side, report.epsilon)?;
                entries.push(AuditEntryJson {
                    vector: format_point(a, n),
                    side: side as u8,
                    deficiency: check.deficiency.into(),
                    is_quasi: check.is_quasi,
                });
            }
        }
        json.audit = Some(entries);
    }
    println!("{}", serde_json::to_string_pretty(&json)?);
    Ok(())
}

fn profile_cmd(source: &SourceArgs, full: bool) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    let profile = differential_profile(&f);
    let (a, i) = profile.witness();
    println!("n = {n}");
    println!("delta = {}", format_fraction(profile.delta()));
    println!(
        "witness: a={} i={} count={}",
        format_point(a, n),
        i as u8,
        profile.count(a, i)
    );
    if full {
        for a in 0..f.table_len() {
            let counts = profile.counts(a);
            println!(
                "{} count0={} count1={}",
                format_point(a, n),
                counts.zero,
                counts.one
            );
        }
    }
    Ok(())
}

fn check_cmd(source: &SourceArgs) -> anyhow::Result<()> {
    let f = source.resolve()?;
    let n = f.var_count();
    if n > 12 {
        bail!("check: exhaustive cross-checks require n <= 12, function has n = {n}");
    }
    let mut passed = 0u32;
    let mut total = 0u32;
    let mut verdict = |name: &str, ok: bool, detail: String| {
        total += 1;
        passed += ok as u32;
        let state = if ok { "PASS" } else { "FAIL" };
        if detail.is_empty() {
            println!("{name}: {state}");
        } else {
            println!("{name}: {state} ({detail})");
        }
    };

    println!("n = {n}");
    let spectrum = walsh_transform(&f);
    verdict(
        "parseval",
        spectrum.parseval_ok(),
        format!("sum of squares = {}", spectrum.squared_sum()),
    );

    let naive_ok = (0..f.table_len()).all(|w| spectrum.coeff(w) as i64 == walsh_value_naive(&f, w));
    verdict(
        "transform vs naive",
        naive_ok,
        format!("{} points", f.table_len()),
    );

    let mut correlation_ok = true;
    let mut mass_count_ok = true;
    for a in 0..f.table_len() {
        let mass0 = hyperplane_mass(&spectrum, a, false);
        let mass1 = hyperplane_mass(&spectrum, a, true);
        let counts = derivative_counts(&f, a);
        correlation_ok &= (1i64 << n) * correlation(&f, a) == mass0 as i64 - mass1 as i64;
        mass_count_ok &= mass0 == (1u64 << n) * counts.zero && mass1 == (1u64 << n) * counts.one;
    }
    verdict(
        "correlation identity",
        correlation_ok,
        format!("{} directions", f.table_len()),
    );
    verdict(
        "mass-count identity",
        mass_count_ok,
        format!("{} pairs", 2 * f.table_len()),
    );

    let brute = brute_force_linear_structures(&f);
    let spectral = spectral_linear_structures(&spectrum);
    verdict("structure route equivalence", brute == spectral, String::new());

    let profile = differential_profile(&f);
    verdict(
        "profile route equivalence",
        profile == differential_profile_naive(&f),
        String::new(),
    );

    verdict(
        "delta consistency",
        profile.delta().is_one() == brute.has_nonzero_structure(),
        format!(
            "delta = {}, nonzero structure: {}",
            format_fraction(profile.delta()),
            yes_no(brute.has_nonzero_structure())
        ),
    );

    println!("summary: {passed}/{total} PASS");
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
