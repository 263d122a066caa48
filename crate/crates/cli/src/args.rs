use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Generate, verify and analyse Galileo sequences (S_2n = k S_n).
///
/// Sequences are read and written as `index value` lines with exact
/// rational values; `-` in place of a file name reads standard input.
#[derive(Debug, Parser)]
#[command(name = "galileo", version)]
pub struct Cli {
    /// Summary layout
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Suppress the version banner on standard error
    #[arg(long, short = 'q', global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a prefix of a Galileo family
    #[command(subcommand)]
    Generate(Generate),
    /// Check S_2n = k S_n and a_(2n-1) + a_2n = k a_n
    Verify {
        /// Sequence file, or `-`
        input: String,
        #[arg(long)]
        k: String,
    },
    /// Extract splitting factors (b_n, c_n) as `n b c` lines
    Factors {
        input: String,
        #[arg(long)]
        k: String,
    },
    /// Path from node 2 to node n in the tree m -> (2m-1, 2m)
    Path { n: u64 },
    /// a_n as a path product of splitting factors
    Product {
        n: u64,
        /// `n b c` lines
        #[arg(long)]
        factors_file: String,
        #[arg(long, default_value = "1")]
        a1: String,
        /// Defaults to b + c of the first factor pair
        #[arg(long)]
        k: Option<String>,
    },
    /// Decide whether a_n = p(n) is a Galileo sequence with ratio k
    Classify {
        /// Coefficients c0,c1,... of p(n) = c0 + c1 n + ...
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        k: String,
    },
    /// Check the growth bounds of a monotone solution
    Growth {
        input: String,
        #[arg(long)]
        k: String,
        /// Starting precision in fractional bits
        #[arg(long, default_value_t = 128)]
        precision: u32,
        /// Add one record per checked index
        #[arg(long)]
        per_index: bool,
    },
    /// Enumerate monotone integer prefixes
    Search {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        a1: u64,
        #[arg(long)]
        length: usize,
        /// Survivors to print; the count is always exact
        #[arg(long, default_value_t = 1000)]
        max_survivors: usize,
        /// Largest admissible term; larger ones cut the search
        #[arg(long)]
        cap: Option<u64>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Extinction depth for every seed a1 = 1..=a1-max
    Extinction {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        a1_max: u64,
        #[arg(long)]
        length_max: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Continuous Galileo functions f(x) = g(log_a x) x^(log_a(b/a))
    #[command(subcommand)]
    Continuous(Continuous),
    /// OEIS b-file lookup and term matching
    #[command(subcommand)]
    Oeis(Oeis),
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Node budget per top-level branch; 0 removes the limit
    #[arg(long, default_value_t = 50_000_000)]
    pub node_budget: u64,
}

impl Budget {
    pub fn limit(&self) -> Option<u64> {
        (self.node_budget > 0).then_some(self.node_budget)
    }
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// a_n = C (n^d - (n-1)^d) with k = 2^d
    Poly {
        #[arg(long = "C", allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    /// Tattersall floor recursion for integer k >= 4
    Tattersall {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: usize,
    },
    /// Tree generation from a splitting rule
    Tree {
        #[arg(long, default_value = "4")]
        k: String,
        #[arg(long, default_value = "1")]
        a1: String,
        #[arg(long, value_enum)]
        rule: Rule,
        /// `n b c` lines, required with `--rule file`
        #[arg(long)]
        factors_file: Option<String>,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// b = c = k/2
    Equal,
    /// b = 1, c = k - 1
    Unequal,
    /// factors of the odd numbers (k = 4)
    Odd,
    /// per-node pairs from --factors-file
    File,
}

#[derive(Debug, Subcommand)]
pub enum Continuous {
    /// Check the integral relation and the pointwise identity
    Verify {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// const:<v> | sin:<offset>,<amp>,<freq> | file:<samples>
        #[arg(long)]
        profile: String,
        /// Comma separated evaluation points
        #[arg(long, default_value = "0.5,1,2.718281828459045,10,100")]
        x: String,
        /// Relative tolerance for the integral relation
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Relative tolerance for a f(ax) = b f(x)
        #[arg(long, default_value_t = 1e-12)]
        pointwise_tol: f64,
    },
}

#[derive(Debug, Args)]
pub struct Remote {
    /// Use only the cache and the shipped fixtures
    #[arg(long)]
    pub offline: bool,
    /// Cache directory; defaults to $GALILEO_CACHE_DIR
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Oeis {
    /// Print an entry as a b-file
    Fetch {
        id: String,
        #[command(flatten)]
        remote: Remote,
    },
    /// Compare a sequence with OEIS entries under shifts and scalars
    Match {
        input: String,
        /// Comma separated A-numbers
        #[arg(long)]
        candidates: String,
        /// Inclusive range lo..hi
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        shifts: String,
        /// Comma separated rationals
        #[arg(long, default_value = "1,3")]
        scalars: String,
        #[arg(long, default_value_t = 50)]
        min_length: usize,
        #[command(flatten)]
        remote: Remote,
    },
}
