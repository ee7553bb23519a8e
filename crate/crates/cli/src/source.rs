use anyhow::{anyhow, Context};
use bvls::{AnfExpression, BooleanFunction};
use clap::Args;
use std::path::PathBuf;

/// Where the analyzed function comes from. Exactly one source must be
/// given.
#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("fn_source").required(true)))]
pub struct SourceArgs {
    /// Truth-table file: line 1 is `n=<int>`, line 2 is either 2^n
    /// characters of 0/1 in index order or `hex:` followed by 2^n/4 hex
    /// digits (most significant nibble bit = lowest index)
    #[arg(long, value_name = "PATH", group = "fn_source")]
    pub table: Option<PathBuf>,

    /// Algebraic normal form such as "x1+x2+x1x2+x2x3+x1x3"; terms are
    /// products of variables x1..xn joined by '+' (XOR), with '1' for
    /// the constant term and '0' for the empty sum. Requires -n
    #[arg(long, value_name = "EXPR", group = "fn_source", requires = "vars")]
    pub anf: Option<String>,

    /// Variable count for --anf
    #[arg(short = 'n', long = "vars", value_name = "N", requires = "anf")]
    pub vars: Option<u32>,

    /// Built-in fixture: paper-eq37, bent-n2, bent-n4, bent-n6, bent-n8,
    /// or linear-BITS (e.g. linear-101)
    #[arg(long, value_name = "NAME", group = "fn_source")]
    pub fixture: Option<String>,

    /// Random function on N variables, drawn from --random-seed
    #[arg(long, value_name = "N", group = "fn_source")]
    pub random: Option<u32>,

    /// Seed for --random
    #[arg(long, value_name = "SEED", default_value_t = 0, requires = "random")]
    pub random_seed: u64,
}

impl SourceArgs {
    pub fn resolve(&self) -> anyhow::Result<BooleanFunction> {
        if let Some(path) = &self.table {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("--table: cannot read {}", path.display()))?;
            return bvls::boolfn::parse_table_file(&text)
                .map_err(|e| anyhow!("--table: {e}"));
        }
        if let Some(expr) = &self.anf {
            let n = self.vars.expect("clap enforces -n with --anf");
            let parsed = AnfExpression::parse(expr, n).map_err(|e| anyhow!("--anf: {e}"))?;
            return Ok(parsed.to_function());
        }
        if let Some(name) = &self.fixture {
            return bvls::fixtures::builtin(name).ok_or_else(|| {
                anyhow!(
                    "--fixture: unknown name {name:?} (expected one of {}, or linear-<bits>)",
                    bvls::fixtures::FIXED_NAMES.join(", ")
                )
            });
        }
        if let Some(n) = self.random {
            return BooleanFunction::random(n, self.random_seed)
                .map_err(|e| anyhow!("--random: {e}"));
        }
        unreachable!("clap enforces exactly one source")
    }
}
