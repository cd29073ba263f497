use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `t_1^a_1 ... t_r^a_r * z^b`.
///
/// The last slot always holds the `z` exponent, so a rank-`r` exponent has
/// `r + 1` entries. The derived ordering is lexicographic with the `z` slot
/// compared last, which is the canonical monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<i32>);

impl Exponent {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ExponentLength {
                expected: 1,
                got: 0,
            });
        }
        Ok(Exponent(entries))
    }

    /// Builds an exponent from torus exponents and a separate `z` exponent.
    pub fn from_parts(torus: &[i32], z: i32) -> Self {
        let mut entries = Vec::with_capacity(torus.len() + 1);
        entries.extend_from_slice(torus);
        entries.push(z);
        Exponent(entries)
    }

    pub fn zero(rank: usize) -> Self {
        Exponent(vec![0; rank + 1])
    }

    /// `z^b` at the given rank.
    pub fn z_power(rank: usize, b: i32) -> Self {
        let mut e = Self::zero(rank);
        e.0[rank] = b;
        e
    }

    /// `t_i^a` (1-based `i`) at the given rank.
    pub fn t_power(rank: usize, i: usize, a: i32) -> Self {
        let mut e = Self::zero(rank);
        e.0[i - 1] = a;
        e
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn torus(&self) -> &[i32] {
        &self.0[..self.0.len() - 1]
    }

    pub fn z(&self) -> i32 {
        self.0[self.0.len() - 1]
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        if self.0.len() != other.0.len() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Exponent(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn neg(&self) -> Exponent {
        Exponent(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
