//! Weight multiplicities of irreducible representations via Freudenthal's
//! recursion, working only with dominant weights.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::roots::RootSystem;
use super::weight::{Family, Weight};
use crate::error::{Error, Result};
use crate::ring::orbit::{dominant_torus, orbit_size};

/// Dominant member of the Weyl orbit of `w` for the given family.
pub fn dominant_rep(family: Family, w: &[i64]) -> Vec<i64> {
    let negatives = w.iter().filter(|&&a| a < 0).count();
    let mut v: Vec<i64> = w.iter().map(|a| a.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    if family == Family::D && negatives % 2 == 1 {
        if let Some(last) = v.last_mut() {
            *last = -*last;
        }
    }
    v
}

/// Size of the Weyl orbit of a dominant weight.
pub fn weyl_orbit_size(family: Family, dom: &[i64]) -> u128 {
    let t: Vec<i32> = dom.iter().map(|&a| a as i32).collect();
    let full = orbit_size(&dominant_torus(&t));
    match family {
        Family::B => full,
        Family::D if dom.iter().all(|&a| a != 0) => full / 2,
        Family::D => full,
    }
}

/// Nonincreasing sequences of nonnegative integers with `rank` entries,
/// entries at most `max_part`, and sum at most `max_sum`.
fn bounded_partitions(rank: usize, max_part: i64, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(
        prefix: &mut Vec<i64>,
        rank: usize,
        max_part: i64,
        remaining: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        if prefix.len() == rank {
            out.push(prefix.clone());
            return;
        }
        for a in (0..=max_part.min(remaining)).rev() {
            prefix.push(a);
            rec(prefix, rank, a, remaining - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), rank, max_part, max_sum, &mut out);
    out
}

/// Dominant weights `mu <= lambda` in the dominance order.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let max_part = lambda.coords().first().map_or(0, |a| a.abs());
    let mut out = Vec::new();
    for p in bounded_partitions(rs.rank(), max_part, lambda.l1()) {
        let w = Weight::new(p.clone());
        if rs.dominates(lambda, &w) {
            out.push(w);
        }
        if rs.family() == Family::D && p.last().is_some_and(|&a| a != 0) {
            let mut q = p;
            let last = q.len() - 1;
            q[last] = -q[last];
            let w = Weight::new(q);
            if rs.dominates(lambda, &w) {
                out.push(w);
            }
        }
    }
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Multiplicity of every dominant weight of the irreducible representation
/// with highest weight `lambda`. Weights of multiplicity zero are omitted.
pub fn freudenthal_mults(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, BigInt>> {
    rs.check_weight(lambda)?;
    let family = rs.family();
    let two_rho = rs.two_rho();
    let norm = |w: &[i64]| -> i64 {
        let s: Vec<i64> = w.iter().zip(two_rho).map(|(a, r)| 2 * a + r).collect();
        dot(&s, &s)
    };
    let top = norm(lambda.coords());

    let mut candidates = dominant_weights_below(rs, lambda);
    // |mu + rho|^2 strictly decreases down the dominance order on dominant
    // weights, so this visits every weight after all weights above it.
    candidates.sort_by_key(|w| std::cmp::Reverse(norm(w.coords())));

    let mut mult: HashMap<Vec<i64>, i128> = HashMap::with_capacity(candidates.len());
    let bound = lambda.l1();
    for mu in &candidates {
        let m = mu.coords();
        if m == lambda.coords() {
            mult.insert(m.to_vec(), 1);
            continue;
        }
        let gap = top - norm(m);
        if gap <= 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal denominator vanishes at {mu} below {lambda}"
            )));
        }
        let mut sum: i128 = 0;
        let max_k = bound + mu.l1() + 2;
        for alpha in rs.positive_roots() {
            let mut shifted = m.to_vec();
            for _ in 1..=max_k {
                for (s, a) in shifted.iter_mut().zip(alpha) {
                    *s += a;
                }
                let key = dominant_rep(family, &shifted);
                if let Some(&c) = mult.get(&key) {
                    let ip = dot(&shifted, alpha) as i128;
                    sum = ip
                        .checked_mul(c)
                        .and_then(|x| sum.checked_add(x))
                        .ok_or(Error::Overflow("Freudenthal recursion"))?;
                }
            }
        }
        // (|lambda+rho|^2 - |mu+rho|^2) m = 2 sum, with norms scaled by 4
        let numerator = 8 * sum;
        let gap = gap as i128;
        if numerator % gap != 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal recursion produced a fractional multiplicity at {mu}"
            )));
        }
        let value = numerator / gap;
        if value < 0 {
            return Err(Error::Inconsistent(format!(
                "negative weight multiplicity at {mu}"
            )));
        }
        if value > 0 {
            mult.insert(m.to_vec(), value);
        }
    }
    Ok(mult
        .into_iter()
        .map(|(k, v)| (Weight::new(k), BigInt::from(v)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mults(family: Family, rank: usize, parts: &[i64]) -> BTreeMap<Vec<i64>, i64> {
        let rs = RootSystem::new(family, rank).unwrap();
        let lam = Weight::padded(parts, rank).unwrap();
        freudenthal_mults(&rs, &lam)
            .unwrap()
            .into_iter()
            .map(|(w, m)| (w.coords().to_vec(), i64::try_from(m).unwrap()))
            .collect()
    }

    #[test]
    fn standard_rep_of_b2() {
        let m = mults(Family::B, 2, &[1]);
        assert_eq!(m, BTreeMap::from([(vec![1, 0], 1), (vec![0, 0], 1)]));
    }

    #[test]
    fn exterior_square_of_b2() {
        let m = mults(Family::B, 2, &[1, 1]);
        assert_eq!(
            m,
            BTreeMap::from([(vec![1, 1], 1), (vec![1, 0], 1), (vec![0, 0], 2)])
        );
    }

    #[test]
    fn trivial_weight() {
        for (f, r) in [(Family::B, 3), (Family::D, 4)] {
            let m = mults(f, r, &[]);
            assert_eq!(m, BTreeMap::from([(vec![0; r], 1)]));
        }
    }

    #[test]
    fn half_spin_weights_of_d3_are_kept_apart() {
        // D3 = A3: (1,1,1) and (1,1,-1) are the two three-dimensional
        // representations, Sym^2 of the two spin representations.
        let plus = mults(Family::D, 3, &[1, 1, 1]);
        let rs = RootSystem::new(Family::D, 3).unwrap();
        let total: u128 = plus
            .iter()
            .map(|(w, m)| *m as u128 * weyl_orbit_size(Family::D, w))
            .sum();
        assert_eq!(
            BigInt::from(total),
            rs.weyl_dim(&Weight::new(vec![1, 1, 1])).unwrap()
        );
        assert!(!plus.contains_key(&vec![1, 1, -1]));
    }

    #[test]
    fn dominant_representatives() {
        assert_eq!(dominant_rep(Family::B, &[0, -2, 1]), vec![2, 1, 0]);
        assert_eq!(dominant_rep(Family::D, &[-1, 2, 1]), vec![2, 1, -1]);
        assert_eq!(dominant_rep(Family::D, &[-1, 2, 0]), vec![2, 1, 0]);
    }
}
