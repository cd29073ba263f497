use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::weight::{Family, Weight};
use crate::error::{Error, Result};
use crate::ring::Rational;

/// Root data for `B_r` or `D_r` in the standard `L_i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    positive_roots: Vec<Vec<i64>>,
    /// Twice the Weyl vector, so that every entry is an integer.
    two_rho: Vec<i64>,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min_rank = match family {
            Family::B => 1,
            Family::D => 2,
        };
        if rank < min_rank {
            return Err(Error::UnsupportedRootSystem {
                family: family.letter(),
                rank,
            });
        }
        let mut positive_roots = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                let mut minus = vec![0; rank];
                minus[i] = 1;
                minus[j] = -1;
                let mut plus = vec![0; rank];
                plus[i] = 1;
                plus[j] = 1;
                positive_roots.push(minus);
                positive_roots.push(plus);
            }
            if family == Family::B {
                let mut short = vec![0; rank];
                short[i] = 1;
                positive_roots.push(short);
            }
        }
        let r = rank as i64;
        let two_rho = (1..=r)
            .map(|i| match family {
                Family::B => 2 * (r - i) + 1,
                Family::D => 2 * (r - i),
            })
            .collect();
        Ok(RootSystem {
            family,
            rank,
            positive_roots,
            two_rho,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn weyl_vector(&self) -> Vec<Rational> {
        self.two_rho
            .iter()
            .map(|&a| Rational::new(BigInt::from(a), BigInt::from(2)))
            .collect()
    }

    pub(crate) fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// Order of the Weyl group.
    pub fn weyl_group_order(&self) -> u128 {
        let fact: u128 = (1..=self.rank as u128).product();
        match self.family {
            Family::B => fact << self.rank,
            Family::D => fact << (self.rank - 1),
        }
    }

    pub(crate) fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::WeightLength(w.coords().to_vec(), self.rank));
        }
        if !w.is_dominant(self.family) {
            return Err(Error::NonDominant(w.coords().to_vec()));
        }
        Ok(())
    }

    /// Whether `hi - lo` is a nonnegative integer combination of simple roots.
    pub fn dominates(&self, hi: &Weight, lo: &Weight) -> bool {
        let r = self.rank;
        let mut partial = Vec::with_capacity(r);
        let mut acc = 0i64;
        for (a, b) in hi.coords().iter().zip(lo.coords()) {
            acc += a - b;
            partial.push(acc);
        }
        match self.family {
            Family::B => partial.iter().all(|&p| p >= 0),
            Family::D => {
                let last = partial[r - 1];
                partial[..r - 2].iter().all(|&p| p >= 0)
                    && last >= 0
                    && last % 2 == 0
                    && partial[r - 2] - last / 2 >= 0
            }
        }
    }

    /// Weyl dimension formula: product over positive roots of
    /// `<lambda + rho, alpha> / <rho, alpha>`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_weight(lambda)?;
        let shifted: Vec<i64> = lambda
            .coords()
            .iter()
            .zip(&self.two_rho)
            .map(|(l, r)| 2 * l + r)
            .collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            let top: i64 = shifted.iter().zip(alpha).map(|(a, b)| a * b).sum();
            let bottom: i64 = self.two_rho.iter().zip(alpha).map(|(a, b)| a * b).sum();
            num *= top;
            den *= bottom;
        }
        let (q, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!(
                "Weyl dimension of {lambda} is not an integer"
            )));
        }
        Ok(q)
    }
}

/// Dimension of the irreducible representation with highest weight `lambda`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    rs.weyl_dim(lambda)
}
