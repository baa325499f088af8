use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "adp",
    version,
    about = "Exact additive differential probabilities of XOR and XOR-rotation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// adp⊕(α, β → γ)
    AdpXor(TripleArgs),
    /// adp^XR(α, β → γ, r): (x ⊕ y) ⋘ r
    AdpXr(RotTripleArgs),
    /// adp^RX(α, β → γ, r): (x ⋘ r) ⊕ y
    AdpRx(RotTripleArgs),
    /// cadp_c(α, β → γ)
    Cadp(CadpArgs),
    /// padp_{a,b}(α, β → γ)
    Padp(PadpArgs),
    /// Maximum of adp^XR over the free input and the output
    Max(MaxArgs),
    /// Impossible differentials of adp^XR
    Impossible {
        #[command(subcommand)]
        action: ImpossibleCmd,
    },
    /// Regenerate a reference table
    Tables(TablesArgs),
    /// Match or count octal-word patterns
    Pattern {
        #[command(subcommand)]
        action: PatternCmd,
    },
    /// Compare formulas with the brute-force oracle on random triples
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `k/4^n = p/q`
    Exact,
    /// approximate decimal, prefixed with `~`
    Decimal,
    Both,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    /// Word length in bits
    #[arg(long)]
    pub n: usize,
    /// α β γ as 0b… or 0x…
    #[arg(num_args = 0..=3, allow_hyphen_values = false)]
    pub words: Vec<String>,
    /// File with one "α β γ" triple per line; `#` starts a comment
    #[arg(long, conflicts_with = "words")]
    pub batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Exact)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RotTripleArgs {
    /// Rotation amount, 1 ≤ r ≤ n − 1
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub triple: TripleArgs,
}

#[derive(Debug, Args)]
pub struct CadpArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub c: u8,
    #[command(flatten)]
    pub triple: TripleArgs,
}

#[derive(Debug, Args)]
pub struct PadpArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub a: u8,
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub b: u8,
    #[command(flatten)]
    pub triple: TripleArgs,
}

#[derive(Debug, Args)]
pub struct MaxArgs {
    #[arg(long)]
    pub n: usize,
    /// `1`, `n-1`, or a number; other rotations need `--exhaustive`
    #[arg(long)]
    pub r: String,
    /// The fixed input difference
    pub fixed: String,
    /// Search every pair instead of using a closed form
    #[arg(long)]
    pub exhaustive: bool,
    /// Hold α fixed (the default)
    #[arg(long, conflicts_with = "fix_beta")]
    pub fix_alpha: bool,
    /// Hold β fixed and maximize over α
    #[arg(long)]
    pub fix_beta: bool,
    /// Re-check the result by exhaustive search
    #[arg(long)]
    pub verify: bool,
    /// List every maximizing pair
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum, default_value_t = Format::Exact)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum ImpossibleCmd {
    /// Decide whether adp^XR(α, β → γ, r) = 0 and name the pattern
    Check(RotTripleArgs),
    /// Exact number N(n, r) of impossible triples
    Count {
        #[arg(long)]
        n: usize,
        /// Rotation; all of 1..n−1 when omitted
        #[arg(long)]
        r: Option<usize>,
        /// Count by evaluating every triple (n ≤ 7)
        #[arg(long)]
        brute: bool,
    },
    /// Closed-form lower and upper bounds on N(n, r)
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Exact)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// padp and cadp for single bits
    Table1,
    /// N(n, r) for n ≤ 4
    Table6,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(value_enum)]
    pub which: TableKind,
    /// Compare with the reference values; exit 3 on mismatch
    #[arg(long)]
    pub diff: bool,
    /// Also count by brute force (table6)
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Subcommand)]
pub enum PatternCmd {
    /// Whether an octal word (e.g. 5630) matches a pattern (e.g. "[.* d 0*]")
    Match { pattern: String, word: String },
    /// Number of length-k octal words matching a pattern
    Count {
        pattern: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyOp {
    Xor,
    Xr,
    Rx,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Rotations to test, comma separated; all of 1..n−1 when omitted
    #[arg(long, value_delimiter = ',')]
    pub r: Vec<usize>,
    #[arg(long, value_enum, default_value_t = VerifyOp::Xr)]
    pub op: VerifyOp,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
