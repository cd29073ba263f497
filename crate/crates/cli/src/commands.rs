use std::collections::BTreeMap;

use k3hilb::decomp::{decompose_all, default_rank, family_for, DecompositionTable};
use k3hilb::hilb::k3_betti_numbers;
use k3hilb::lie::{parse_parts, Family, RootSystem, Weight};
use k3hilb::verify::run_suite;
use serde::{Deserialize, Serialize};

use crate::args::{Cli, Command, Common, Format};
use crate::cache::{Cache, CacheKey};
use crate::error::{CliError, CliResult};
use crate::output;

/// Options echoed in the JSON envelope. The cache directory is left out so
/// that output does not depend on where results were stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub tool_version: String,
    pub config: Config,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesBody {
    pub tables: Vec<DecompositionTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeRow {
    pub n: usize,
    pub degree: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeBody {
    pub hodge: Vec<HodgeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiBody {
    pub n: usize,
    pub degrees: Vec<usize>,
    pub betti: Vec<String>,
}

pub fn envelope<T>(config: Config, body: T) -> Envelope<T> {
    Envelope {
        tool_version: k3hilb::VERSION.to_string(),
        config,
        body,
    }
}

struct Log(u8);

impl Log {
    fn info(&self, msg: impl FnOnce() -> String) {
        if self.0 > 0 {
            eprintln!("{}", msg());
        }
    }
}

/// Runs a parsed command and returns what it prints on stdout.
pub fn run(cli: Cli) -> CliResult<String> {
    let log = Log(cli.verbose);
    match cli.command {
        Command::Table {
            n_max,
            degrees,
            common,
        } => cmd_table(n_max, degrees, &common, &log),
        Command::Hodge { n_max, n, common } => cmd_hodge(n_max, n, &common, &log),
        Command::Betti { n, format } => cmd_betti(n, format),
        Command::Dim {
            family,
            rank,
            weight,
        } => cmd_dim(family.into(), rank, &weight),
        Command::Verify { suite } => {
            let report = run_suite(suite.into());
            let text = report.to_string();
            if report.ok() {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::Verification(report.count(k3hilb::verify::Outcome::Fail)))
            }
        }
    }
}

fn check_order(n_max: usize, common: &Common) -> CliResult<()> {
    if n_max > common.order {
        return Err(CliError::Usage(format!(
            "n = {n_max} exceeds the truncation order {}",
            common.order
        )));
    }
    Ok(())
}

/// Tables for the requested `(n, degree)` cells, read from the cache when
/// every cell is present and computed (and stored) otherwise.
fn tables_for(
    cells: &[(usize, usize)],
    common: &Common,
    log: &Log,
) -> CliResult<Vec<DecompositionTable>> {
    let n_max = cells.iter().map(|c| c.0).max().unwrap_or(0);
    check_order(n_max, common)?;
    let rank_of = |n: usize| common.rank.unwrap_or_else(|| default_rank(n));
    let key = |&(n, degree): &(usize, usize)| CacheKey::new(n, degree, family_for(n), rank_of(n));
    let cache = common.cache_dir.as_ref().map(Cache::new);
    if let Some(cache) = &cache {
        let hits: Option<Vec<DecompositionTable>> = cells.iter().map(|c| cache.get(&key(c))).collect();
        if let Some(tables) = hits {
            log.info(|| format!("cache hit for {} cells in {}", cells.len(), cache.dir().display()));
            return Ok(tables);
        }
    }
    log.info(|| format!("computing tables for n <= {n_max}"));
    let all: BTreeMap<(usize, usize), DecompositionTable> = decompose_all(n_max, common.rank, common.order)?
        .into_iter()
        .map(|t| ((t.n, t.degree), t))
        .collect();
    let tables: Vec<DecompositionTable> = cells.iter().map(|c| all[c].clone()).collect();
    if let Some(cache) = &cache {
        for (c, t) in cells.iter().zip(&tables) {
            cache.put(key(c), t)?;
        }
        log.info(|| format!("stored {} cells in {}", cells.len(), cache.dir().display()));
    }
    Ok(tables)
}

fn cmd_table(
    n_max: usize,
    degrees: Option<Vec<usize>>,
    common: &Common,
    log: &Log,
) -> CliResult<String> {
    if let Some(ds) = &degrees {
        if let Some(d) = ds.iter().find(|d| *d % 2 == 1) {
            return Err(CliError::Usage(format!("degree {d} is odd; odd cohomology vanishes")));
        }
    }
    let cells: Vec<(usize, usize)> = (1..=n_max)
        .flat_map(|n| {
            let wanted = degrees.clone();
            (1..=n)
                .map(|k| 2 * k)
                .filter(move |d| wanted.as_ref().is_none_or(|w| w.contains(d)))
                .map(move |d| (n, d))
        })
        .collect();
    let tables = if cells.is_empty() {
        check_order(n_max, common)?;
        Vec::new()
    } else {
        tables_for(&cells, common, log)?
    };
    let config = Config {
        command: "table".into(),
        n_max: Some(n_max),
        degrees,
        rank: common.rank,
        order: Some(common.order),
        format: common.format,
        ..Config::default()
    };
    match common.format {
        Format::Json => output::json(&envelope(config, TablesBody { tables })),
        Format::Csv => output::table_csv(&tables),
        Format::Text => Ok(output::table_text(&tables)),
    }
}

fn cmd_hodge(n_max: Option<usize>, n: Option<usize>, common: &Common, log: &Log) -> CliResult<String> {
    let ns: Vec<usize> = match (n_max, n) {
        (_, Some(n)) => vec![n],
        (Some(m), None) => (0..=m).collect(),
        (None, None) => return Err(CliError::Usage("one of --n-max, --n is required".into())),
    };
    let cells: Vec<(usize, usize)> = ns.iter().map(|&n| (n, 2 * n)).collect();
    let tables = tables_for(&cells, common, log)?;
    let rows: Vec<HodgeRow> = tables
        .iter()
        .map(|t| HodgeRow {
            n: t.n,
            degree: t.degree,
            count: t.mult(&[]),
        })
        .collect();
    let config = Config {
        command: "hodge".into(),
        n_max,
        n,
        rank: common.rank,
        order: Some(common.order),
        format: common.format,
        ..Config::default()
    };
    match common.format {
        Format::Json => output::json(&envelope(config, HodgeBody { hodge: rows })),
        Format::Csv => output::hodge_csv(&rows),
        Format::Text if n.is_some() => Ok(format!("{}\n", rows[0].count)),
        Format::Text => Ok(rows
            .iter()
            .map(|r| format!("n = {}: {}\n", r.n, r.count))
            .collect()),
    }
}

fn cmd_betti(n: usize, format: Format) -> CliResult<String> {
    let all = k3_betti_numbers(n)?;
    let degrees: Vec<usize> = (0..all.len()).step_by(2).collect();
    let betti: Vec<String> = degrees.iter().map(|&d| all[d].to_string()).collect();
    let config = Config {
        command: "betti".into(),
        n: Some(n),
        format,
        ..Config::default()
    };
    match format {
        Format::Json => output::json(&envelope(config, BettiBody { n, degrees, betti })),
        Format::Csv => output::betti_csv(&degrees, &betti),
        Format::Text => Ok(format!("{}\n", betti.join(", "))),
    }
}

fn cmd_dim(family: Family, rank: usize, weight: &str) -> CliResult<String> {
    let rs = RootSystem::new(family, rank)?;
    let w = Weight::padded(&parse_parts(weight)?, rank)?;
    Ok(format!("{}\n", rs.weyl_dim(&w)?))
}
