use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::decompose::{decompose, Decomposition};
use crate::error::Result;
use crate::lie::{branch_b_to_d, Character, Family, Weight};

/// Result of comparing the `B`-side decomposition, branched to `D`, with the
/// direct `D`-side decomposition of the same character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub b_side: Decomposition,
    pub branched: BTreeMap<Weight, BigInt>,
    pub d_side: BTreeMap<Weight, BigInt>,
    /// `(weight, branched multiplicity, direct multiplicity)` where they differ.
    pub mismatches: Vec<(Weight, BigInt, BigInt)>,
}

impl BranchReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn branch_consistency_check(chi: &Character) -> Result<BranchReport> {
    let b_side = decompose(&chi.reinterpret(Family::B))?;
    let mut branched: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (lambda, c) in &b_side {
        for mu in branch_b_to_d(lambda)? {
            *branched.entry(mu).or_default() += c;
        }
    }
    let d_side: BTreeMap<Weight, BigInt> =
        decompose(&chi.reinterpret(Family::D))?.into_iter().collect();
    let mut mismatches = Vec::new();
    let keys: std::collections::BTreeSet<&Weight> = branched.keys().chain(d_side.keys()).collect();
    for w in keys {
        let a = branched.get(w).cloned().unwrap_or_else(BigInt::zero);
        let b = d_side.get(w).cloned().unwrap_or_else(BigInt::zero);
        if a != b {
            mismatches.push((w.clone(), a, b));
        }
    }
    Ok(BranchReport {
        b_side,
        branched,
        d_side,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilb::molien_pg;

    #[test]
    fn four_and_six_forms_of_three_points() {
        let pg = molien_pg(4, 3).unwrap();
        let w = |p: &[i64]| Weight::padded(p, 4).unwrap();
        let chi = pg.cohomology_character(3, 4, Family::B).unwrap();
        let report = branch_consistency_check(&chi).unwrap();
        assert!(report.passed());
        let expected: BTreeMap<Weight, BigInt> = [(w(&[]), 3), (w(&[1]), 2), (w(&[2]), 1)]
            .into_iter()
            .map(|(w, c)| (w, BigInt::from(c)))
            .collect();
        assert_eq!(report.d_side, expected);

        let chi = pg.cohomology_character(3, 6, Family::B).unwrap();
        let report = branch_consistency_check(&chi).unwrap();
        assert!(report.passed());
        let expected: BTreeMap<Weight, BigInt> =
            [(w(&[]), 3), (w(&[1]), 3), (w(&[2]), 1), (w(&[1, 1]), 1), (w(&[3]), 1)]
                .into_iter()
                .map(|(w, c)| (w, BigInt::from(c)))
                .collect();
        assert_eq!(report.d_side, expected);
    }

    #[test]
    fn trivial_character() {
        let report = branch_consistency_check(&Character::trivial(Family::B, 3)).unwrap();
        assert!(report.passed());
        assert_eq!(report.d_side.len(), 1);
    }
}
