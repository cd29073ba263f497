use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use k3hilb::hilb::{DEFAULT_T_ORDER, MAX_RANK};
use k3hilb::lie::Family;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    B,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::B => Family::B,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Ring,
    Lie,
    Hilb,
    Decomp,
    #[value(alias = "paper")]
    Tables,
    All,
}

impl From<SuiteArg> for k3hilb::verify::Suite {
    fn from(s: SuiteArg) -> Self {
        use k3hilb::verify::Suite;
        match s {
            SuiteArg::Ring => Suite::Ring,
            SuiteArg::Lie => Suite::Lie,
            SuiteArg::Hilb => Suite::Hilb,
            SuiteArg::Decomp => Suite::Decomp,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::All => Suite::All,
        }
    }
}

fn parse_rank(s: &str) -> Result<usize, String> {
    let r: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_RANK).contains(&r) {
        Ok(r)
    } else {
        Err(format!("rank must be in 1..={MAX_RANK}"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "k3hilb", version, about = "Orthogonal-group characters on the cohomology of Hilbert schemes of points on a K3 surface")]
pub struct Cli {
    /// More progress output on stderr.
    #[arg(short, long, action = ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    /// Working rank for every n (default min(11, n+1)).
    #[arg(long, value_parser = parse_rank)]
    pub rank: Option<usize>,

    /// Truncation order of the generating series; must be at least the largest n.
    #[arg(long, default_value_t = DEFAULT_T_ORDER)]
    pub order: usize,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached tables.
    #[arg(long, env = "K3HILB_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity matrix: rows are highest weights, columns H^{degree,n}.
    Table {
        #[arg(long)]
        n_max: usize,
        /// Comma-separated even degrees (default 2, 4, .., 2n for each n).
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<usize>>,
        #[command(flatten)]
        common: Common,
    },
    /// Canonical Hodge classes in the middle cohomology H^{2n}.
    Hodge {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        n_max: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Even Betti numbers b_0, b_2, .., b_{4n}.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension of an irreducible representation.
    Dim {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_rank)]
        rank: usize,
        /// Comma-separated highest weight, padded with zeros.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Runs the invariant suites and prints a pass/fail/discrepancy report.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}
