use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::decompose::{decompose, Decomposition};
use crate::error::{Error, Result};
use crate::hilb::{k3_betti_numbers, molien_pg, GradedCharSeries, MAX_RANK};
use crate::lie::{Family, RootSystem, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub weight: Vec<i64>,
    pub mult: u64,
}

/// Decomposition of `H^degree` of the Hilbert scheme of `n` points into
/// irreducibles of the given family at the given working rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTable {
    pub n: usize,
    pub degree: usize,
    pub family: Family,
    pub rank: usize,
    pub entries: Vec<TableEntry>,
    /// `sum mult * dim`, with dimensions taken at full rank.
    pub betti: u64,
}

fn to_u64(c: &BigInt, what: &'static str) -> Result<u64> {
    u64::try_from(c).map_err(|_| Error::Overflow(what))
}

/// `sum mult * dim V(lambda)` with every weight padded to rank 11.
pub fn betti_checksum(family: Family, parts: &Decomposition) -> Result<BigInt> {
    let rs = RootSystem::new(family, MAX_RANK)?;
    let mut total = BigInt::from(0);
    for (w, c) in parts {
        total += c * rs.weyl_dim(&Weight::padded(w.trimmed(), MAX_RANK)?)?;
    }
    Ok(total)
}

impl DecompositionTable {
    pub fn new(
        n: usize,
        degree: usize,
        family: Family,
        rank: usize,
        parts: &Decomposition,
    ) -> Result<Self> {
        let entries = parts
            .iter()
            .map(|(w, c)| {
                Ok(TableEntry {
                    weight: w.coords().to_vec(),
                    mult: to_u64(c, "multiplicity")?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let betti = to_u64(&betti_checksum(family, parts)?, "Betti number")?;
        Ok(DecompositionTable {
            n,
            degree,
            family,
            rank,
            entries,
            betti,
        })
    }

    /// Multiplicity of the weight given by its nonzero leading parts.
    pub fn mult(&self, parts: &[i64]) -> u64 {
        self.entries
            .iter()
            .find(|e| trim(&e.weight) == trim(parts))
            .map_or(0, |e| e.mult)
    }

    /// Entries keyed by weights with trailing zeros removed.
    pub fn trimmed_entries(&self) -> BTreeMap<Vec<i64>, u64> {
        self.entries
            .iter()
            .map(|e| (trim(&e.weight).to_vec(), e.mult))
            .collect()
    }

    /// Compares the checksum with the Betti number from the product formula.
    pub fn check_betti(&self) -> Result<()> {
        let expected = k3_betti_numbers(self.n)?
            .get(self.degree)
            .cloned()
            .unwrap_or_default();
        if BigInt::from(self.betti) != expected {
            return Err(Error::Inconsistent(format!(
                "H^{{{},{}}}: checksum {} but b_{} = {}",
                self.degree, self.n, self.betti, self.degree, expected
            )));
        }
        Ok(())
    }
}

fn trim(w: &[i64]) -> &[i64] {
    let end = w.iter().rposition(|&a| a != 0).map_or(0, |i| i + 1);
    &w[..end]
}

/// Default working rank for `n` points.
pub fn default_rank(n: usize) -> usize {
    (n + 1).min(MAX_RANK)
}

/// Group acting on the cohomology of the Hilbert scheme of `n` points: for
/// `n = 1` there is no exceptional class and `H^2` is the 22-dimensional
/// standard representation of `D_11`.
pub fn family_for(n: usize) -> Family {
    if n == 1 {
        Family::D
    } else {
        Family::B
    }
}

/// Decomposes `H^degree` of the Hilbert scheme of `n` points using an
/// already computed Molien series.
pub fn decompose_cell(
    pg: &GradedCharSeries,
    n: usize,
    degree: usize,
    family: Family,
) -> Result<DecompositionTable> {
    let chi = pg.cohomology_character(n, degree, family)?;
    DecompositionTable::new(n, degree, family, pg.rank(), &decompose(&chi)?)
}

/// Errors unless two tables agree after padding weights with zeros.
pub fn check_stable(a: &DecompositionTable, b: &DecompositionTable) -> Result<()> {
    if a.trimmed_entries() != b.trimmed_entries() {
        return Err(Error::Inconsistent(format!(
            "H^{{{},{}}} differs between ranks {} and {}",
            a.degree, a.n, a.rank, b.rank
        )));
    }
    Ok(())
}

/// Tables for every `n <= n_max` and every even degree `0..=2n`, in the
/// family given by [`family_for`]. Each cell passes the Betti checksum and, when
/// the working rank is below 11, agrees with the computation one rank up.
pub fn decompose_all(
    n_max: usize,
    rank: Option<usize>,
    order: usize,
) -> Result<Vec<DecompositionTable>> {
    if n_max > order {
        return Err(Error::OutOfRange {
            index: n_max,
            max: order,
        });
    }
    let rank_of = |n: usize| rank.unwrap_or_else(|| default_rank(n));
    let mut ranks: Vec<usize> = Vec::new();
    for n in 0..=n_max {
        let r = rank_of(n);
        ranks.push(r);
        if r < MAX_RANK {
            ranks.push(r + 1);
        }
    }
    ranks.sort_unstable();
    ranks.dedup();
    let series: BTreeMap<usize, GradedCharSeries> = ranks
        .par_iter()
        .map(|&r| Ok((r, molien_pg(r, n_max)?)))
        .collect::<Result<_>>()?;
    let cells: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=n).map(move |k| (n, 2 * k)))
        .collect();
    cells
        .par_iter()
        .map(|&(n, degree)| {
            let r = rank_of(n);
            let family = family_for(n);
            let table = decompose_cell(&series[&r], n, degree, family)?;
            table.check_betti()?;
            if r < MAX_RANK {
                let up = decompose_cell(&series[&(r + 1)], n, degree, family)?;
                check_stable(&table, &up)?;
            }
            Ok(table)
        })
        .collect()
}
