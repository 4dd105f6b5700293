//! Command-line grammar.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use palintiple::instance::{parse_list, Literal};
use palintiple::palinomial::{DEFAULT_SEED, DEFAULT_TOLERANCE};
use palintiple::{DerivationMode, Palintiple, Theorem};

const FORMATS: &str = "\
Formats:
  palintiple literal   d_k,...,d_0@b*n, digits most significant first (8,7,1,2@10*4)
  carries              c_k,...,c_0, most significant first
  families             affine values {\"a0\",\"a1\",\"den\"} meaning (a0 + a1*alpha)/den
  polynomials          {\"coeffs\":[c0,c1,...]}, constant term first
  ranges               A..B inclusive; lengths L or L..L2

Output is pretty JSON unless --tsv is given. Exit status: 0 success,
1 failed verification or computation, 2 usage error.";

#[derive(Debug, Parser)]
#[command(name = "palintiple", version, about = "Reverse multiples: search, derivation, palinomials and Young graphs", after_help = FORMATS)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit pretty-printed JSON (default)
    #[arg(long, global = true, conflicts_with = "tsv")]
    pub json: bool,

    /// Emit tab-separated rows with a header line
    #[arg(long, global = true)]
    pub tsv: bool,

    /// Worker threads for parallel searches
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Seed for the numeric root finder
    #[arg(long, global = true, value_name = "S", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Largest base visited by scans and multi-base searches
    #[arg(long, global = true, value_name = "B")]
    pub max_base: Option<u64>,

    /// Number of family members to instantiate
    #[arg(long, global = true, value_name = "A")]
    pub alphas: Option<usize>,

    /// Distance from the unit circle accepted by root checks
    #[arg(long, global = true, value_name = "T", default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List palintiples of given lengths by exhaustive carry search
    Enumerate(EnumerateArgs),
    /// Validate a literal and report its carries and class
    Classify(ClassifyArgs),
    /// Derive a parametric family by the generic construction
    Derive(DeriveArgs),
    /// Build a named family from a source instance
    Family(FamilyArgs),
    /// Evaluate one member of a family
    Instantiate(InstantiateArgs),
    /// Search bases and multipliers for permutiples of a digit multiset
    Permutiple(PermutipleArgs),
    /// Palinomial, digit and carry polynomials with exact identity checks
    Palinomial(PalinomialArgs),
    /// Young graphs: structure, isomorphism and carry correspondences
    Young(YoungArgs),
    /// Bounded scans
    Scan {
        #[command(subcommand)]
        scan: ScanCommand,
    },
    /// Re-check every worked example in the built-in corpus
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Base; every base from 3 to --max-base (default 16) when omitted
    #[arg(long)]
    pub base: Option<u64>,
    /// Single multiplier
    #[arg(long, conflicts_with = "all_mults")]
    pub mult: Option<u64>,
    /// Every multiplier 2 <= n < b (the default)
    #[arg(long)]
    pub all_mults: bool,
    /// Number of digits, L or L..L2
    #[arg(long, value_name = "L[..L2]", value_parser = parse_lengths, default_value = "2..4")]
    pub digits: RangeInclusive<usize>,
    /// Stop after this many results
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Palintiple literal, e.g. 8,7,1,2@10*4
    #[arg(long, value_parser = parse_literal)]
    pub input: Literal,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[arg(long, value_parser = parse_palintiple)]
    pub input: Palintiple,
    #[arg(long, value_parser = parse_mode)]
    pub mode: DerivationMode,
    /// New multiplier
    #[arg(long)]
    pub nhat: u64,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: Theorem,
    #[arg(long, value_parser = parse_palintiple)]
    pub input: Palintiple,
    /// New multiplier; chosen automatically when the theorem allows
    #[arg(long)]
    pub nhat: Option<u64>,
}

#[derive(Debug, Args)]
pub struct InstantiateArgs {
    #[arg(long, value_parser = parse_palintiple)]
    pub input: Palintiple,
    #[arg(long, value_parser = parse_theorem, conflicts_with = "mode", required_unless_present = "mode")]
    pub theorem: Option<Theorem>,
    #[arg(long, value_parser = parse_mode, requires = "nhat")]
    pub mode: Option<DerivationMode>,
    #[arg(long)]
    pub nhat: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: i128,
    /// Accept alpha = 0 when the family constraint allows it
    #[arg(long)]
    pub allow_zero: bool,
}

#[derive(Debug, Args)]
pub struct PermutipleArgs {
    /// Digit multiset, e.g. 3,8,9
    #[arg(long, value_delimiter = ',', required = true)]
    pub digits: Vec<u64>,
    #[arg(long, value_parser = parse_range, default_value = "2..36")]
    pub bases: RangeInclusive<u64>,
    #[arg(long, value_parser = parse_range, default_value = "2..35")]
    pub mults: RangeInclusive<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityGroup {
    All,
    Linear,
    Digit,
    Derived,
    None,
}

#[derive(Debug, Args)]
pub struct PalinomialArgs {
    #[arg(long, value_parser = parse_palintiple)]
    pub input: Palintiple,
    /// Identities to verify; those whose hypotheses fail are listed as skipped
    #[arg(long, value_enum, default_value = "all")]
    pub check: IdentityGroup,
    /// Instance derived from the input; repeat for the two-family identity
    #[arg(long, value_parser = parse_palintiple, value_name = "LIT")]
    pub derived_from: Vec<Palintiple>,
    /// Locate roots numerically and test for one on the unit circle
    #[arg(long)]
    pub roots: bool,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct YoungArgs {
    #[command(subcommand)]
    pub command: Option<YoungCommand>,
    #[arg(long)]
    pub base: Option<u64>,
    #[arg(long)]
    pub mult: Option<u64>,
    /// Also write Graphviz DOT to this file
    #[arg(long, value_name = "FILE")]
    pub dot: Option<PathBuf>,
    /// Include the canonical form
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Debug, Subcommand)]
pub enum YoungCommand {
    /// Whether Y(N1,B1) and Y(N2,B2) are isomorphic
    Iso {
        #[arg(value_parser = parse_pair, value_name = "N1,B1")]
        first: (u64, u64),
        #[arg(value_parser = parse_pair, value_name = "N2,B2")]
        second: (u64, u64),
    },
    /// Compare carries of (NH,BH)-palintiples with (N,B)-palintiples
    Correspond {
        #[arg(value_parser = parse_pair, value_name = "N,B")]
        lower: (u64, u64),
        #[arg(value_parser = parse_pair, value_name = "NH,BH")]
        upper: (u64, u64),
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(3..=12))]
        max_len: u64,
    },
    /// Evidence table: family members whose graphs match a reference graph
    Evidence {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        /// Reference graph; defaults to Y(3,14), Y(7,11) or Y(5,8) by theorem
        #[arg(long, value_parser = parse_pair, value_name = "N,B")]
        reference: Option<(u64, u64)>,
        /// Largest source length
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Skip members whose base exceeds this
        #[arg(long, default_value_t = 20_000)]
        max_member_base: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanCommand {
    /// Doubly-derived families with a new multiplier other than the base
    Pudwell {
        /// Source lengths, comma separated
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        lengths: Vec<u64>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Restrict to one topic: instances, search, families, permutiples, palinomials, young
    #[arg(long, value_name = "TOPIC")]
    pub section: Option<palintiple::corpus::Topic>,
    /// Include long-running fixtures
    #[arg(long)]
    pub long: bool,
    /// Corrupt one fixture to confirm failures are reported
    #[arg(long)]
    pub inject_fault: bool,
}

fn parse_literal(s: &str) -> Result<Literal, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_palintiple(s: &str) -> Result<Palintiple, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_mode(s: &str) -> Result<DerivationMode, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_digits(s: &str) -> Result<Vec<u64>, String> {
    parse_list(s).ok_or_else(|| format!("expected comma-separated integers, got {s:?}"))
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    match parse_digits(s)?.as_slice() {
        [n, b] => Ok((*n, *b)),
        _ => Err(format!("expected N,B, got {s:?}")),
    }
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let err = || format!("expected A..B or A, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: u64 = a.trim().parse().map_err(|_| err())?;
    let b: u64 = b.trim().parse().map_err(|_| err())?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn parse_lengths(s: &str) -> Result<RangeInclusive<usize>, String> {
    let r = parse_range(s)?;
    if *r.start() < 2 {
        return Err("lengths start at 2".into());
    }
    Ok(*r.start() as usize..=*r.end() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("10..64"), Ok(10..=64));
        assert_eq!(parse_range("3..=5"), Ok(3..=5));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("5..3").is_err());
        assert!(parse_lengths("1..3").is_err());
        assert_eq!(parse_pair("3,14"), Ok((3, 14)));
        assert!(parse_pair("3").is_err());
    }
}
