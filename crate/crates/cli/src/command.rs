use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "polygap",
    version,
    about = "Arity gap and decompositions of polynomial functions"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "human", global = true)]
    pub format: Format,
    /// Seed for the randomized verification batteries.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Essential arity, quasi-arity, arity gap and the minor table.
    Gap(Input),
    /// Every identification minor with its essential arity.
    Minors(Input),
    /// The unique decomposition f = g + h with h a multiple of DELTA.
    Decompose(Input),
    /// Whether f (or its restriction to repeated tuples) is determined by oddsupp.
    Oddsupp(Input),
    /// The canonical polynomial of a value table.
    Interpolate(Input),
    /// Run a verification suite.
    Verify(Suite),
    /// Check the odd-characteristic product polynomial.
    Counterexample(Bounds),
}

#[derive(Debug, Args)]
pub struct Input {
    /// Q, a prime p, or p,k for GF(p^k). Defaults to Q for expressions and
    /// to GF(k) for tables over a k-element domain.
    #[arg(long)]
    pub field: Option<String>,
    /// Value table file: header `k m n`, then the k^n values.
    #[arg(long, conflicts_with = "expr")]
    pub table: Option<PathBuf>,
    /// Polynomial such as "x1*x3 - x2*x3" or "x4 + DELTA4"; read from
    /// standard input when neither this nor --table is given.
    pub expr: Option<String>,
}

#[derive(Debug, Args)]
pub struct Suite {
    #[arg(long)]
    pub suite: String,
    #[command(flatten)]
    pub bounds: Bounds,
    /// Random instances per battery.
    #[arg(long)]
    pub count: Option<u64>,
}

#[derive(Debug, Args, Default)]
pub struct Bounds {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}
