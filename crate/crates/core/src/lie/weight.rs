use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type of split orthogonal Lie algebra: `B_r = so(2r+1)`, `D_r = so(2r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::D => 'D',
        }
    }

    /// Dimension of the standard representation at rank `r`.
    pub fn standard_dim(self, rank: usize) -> usize {
        match self {
            Family::B => 2 * rank + 1,
            Family::D => 2 * rank,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Integer weight in the `L_i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// Pads `parts` with zeros up to `rank`.
    pub fn padded(parts: &[i64], rank: usize) -> Result<Self> {
        if parts.len() > rank {
            return Err(Error::WeightLength(parts.to_vec(), rank));
        }
        let mut v = parts.to_vec();
        v.resize(rank, 0);
        Ok(Weight(v))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn l1(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Coordinates with trailing zeros removed; `(2,1,0,0)` gives `[2,1]`.
    pub fn trimmed(&self) -> &[i64] {
        let end = self.0.iter().rposition(|&a| a != 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    /// Re-embeds at another rank, failing if nonzero coordinates would be cut.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Weight::padded(self.trimmed(), rank)
    }

    pub(crate) fn to_torus(&self) -> Vec<i32> {
        self.0.iter().map(|&a| a as i32).collect()
    }

    pub(crate) fn from_torus(t: &[i32]) -> Self {
        Weight(t.iter().map(|&a| a as i64).collect())
    }

    pub fn is_dominant(&self, family: Family) -> bool {
        let c = &self.0;
        match family {
            Family::B => c.windows(2).all(|w| w[0] >= w[1]) && c.last().is_none_or(|&a| a >= 0),
            Family::D => {
                let r = c.len();
                if r < 2 {
                    return c.iter().all(|&a| a >= 0);
                }
                c[..r - 1].windows(2).all(|w| w[0] >= w[1]) && c[r - 2] >= c[r - 1].abs()
            }
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Parses a comma-separated list such as `1,1` into raw coordinates.
pub fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_by_family() {
        assert!(Weight::new(vec![2, 1, 0]).is_dominant(Family::B));
        assert!(!Weight::new(vec![1, 2, 0]).is_dominant(Family::B));
        assert!(!Weight::new(vec![1, 1, -1]).is_dominant(Family::B));
        assert!(Weight::new(vec![1, 1, -1]).is_dominant(Family::D));
        assert!(!Weight::new(vec![1, 0, -1]).is_dominant(Family::D));
    }

    #[test]
    fn trimming_and_rank_changes() {
        let w = Weight::new(vec![3, 1, 0, 0]);
        assert_eq!(w.trimmed(), &[3, 1]);
        assert_eq!(w.with_rank(2).unwrap(), Weight::new(vec![3, 1]));
        assert!(w.with_rank(1).is_err());
        assert_eq!(parse_parts("1,1").unwrap(), vec![1, 1]);
        assert_eq!(parse_parts("").unwrap(), Vec::<i64>::new());
    }
}
