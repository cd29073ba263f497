//! Laurent polynomials invariant under signed permutations of the torus
//! variables, stored with one coefficient per orbit.
//!
//! The group is the hyperoctahedral group acting on `t_1..t_r` by permuting
//! the variables and inverting any subset of them; `z` is left fixed. Each
//! orbit is represented by its dominant member, the torus exponent sorted
//! into a nonincreasing sequence of nonnegative integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::exponent::Exponent;
use super::laurent::LaurentPoly;
use super::series::SeriesCoeff;
use crate::error::{Error, Result};

/// Dominant representative of the signed-permutation orbit of `t`.
pub fn dominant_torus(t: &[i32]) -> Vec<i32> {
    let mut v: Vec<i32> = t.iter().map(|a| a.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn is_dominant_torus(t: &[i32]) -> bool {
    t.windows(2).all(|w| w[0] >= w[1]) && t.last().is_none_or(|&a| a >= 0)
}

/// Size of the orbit of a dominant torus exponent, computed from the
/// multiplicities of its distinct entries.
pub fn orbit_size(dom: &[i32]) -> u128 {
    let r = dom.len() as u128;
    let mut size: u128 = (1..=r).product();
    let mut i = 0;
    while i < dom.len() {
        let mut j = i;
        while j < dom.len() && dom[j] == dom[i] {
            j += 1;
        }
        let run = (j - i) as u128;
        size /= (1..=run).product::<u128>();
        if dom[i] != 0 {
            size <<= run;
        }
        i = j;
    }
    size
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All members of the signed-permutation orbit of a dominant exponent.
pub fn orbit(dom: &[i32]) -> Vec<Vec<i32>> {
    let mut base: Vec<i32> = dom.iter().map(|a| a.abs()).collect();
    base.sort_unstable();
    let mut out = Vec::with_capacity(orbit_size(&dominant_torus(dom)) as usize);
    loop {
        let nonzero: Vec<usize> = (0..base.len()).filter(|&i| base[i] != 0).collect();
        for mask in 0u32..(1u32 << nonzero.len()) {
            let mut v = base.clone();
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    v[i] = -v[i];
                }
            }
            out.push(v);
        }
        if !next_permutation(&mut base) {
            break;
        }
    }
    out
}

/// Signed-permutation-invariant Laurent polynomial in orbit basis.
///
/// Keys are exponents whose torus part is dominant; the `z` slot is free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrbitPoly {
    rank: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl OrbitPoly {
    pub fn zero(rank: usize) -> Self {
        OrbitPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(Exponent::zero(rank), &c.into());
        p
    }

    /// The orbit sum of `torus` (any member of the orbit) times `coeff * z^z`.
    pub fn orbit_sum(torus: &[i32], z: i32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(torus.len());
        p.add_term(Exponent::from_parts(&dominant_torus(torus), z), &coeff.into());
        p
    }

    /// Builds from orbit coefficients; every key must already be dominant.
    pub fn from_orbit_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            if e.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: e.rank(),
                });
            }
            if !is_dominant_torus(e.torus()) {
                return Err(Error::NonDominant(
                    e.torus().iter().map(|&a| a as i64).collect(),
                ));
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    /// Compresses an expanded polynomial, checking that it is constant on
    /// every orbit.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Self> {
        let rank = p.rank();
        let mut out = Self::zero(rank);
        let mut seen: HashMap<Exponent, (BigInt, u128)> = HashMap::new();
        for (e, c) in p.terms() {
            let key = Exponent::from_parts(&dominant_torus(e.torus()), e.z());
            let slot = seen.entry(key).or_insert_with(|| (c.clone(), 0));
            if &slot.0 != c {
                return Err(Error::NotInvariant(format!("{e:?}")));
            }
            slot.1 += 1;
        }
        for (key, (c, count)) in seen {
            if count != orbit_size(key.torus()) {
                return Err(Error::NotInvariant(format!("orbit of {key:?} incomplete")));
            }
            out.add_term(key, &c);
        }
        Ok(out)
    }

    pub fn expand(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (e, c) in &self.terms {
            for t in orbit(e.torus()) {
                out.add_term(Exponent::from_parts(&t, e.z()), c);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the orbit of `torus` (any member) at `z^z`.
    pub fn coeff(&self, torus: &[i32], z: i32) -> BigInt {
        self.terms
            .get(&Exponent::from_parts(&dominant_torus(torus), z))
            .cloned()
            .unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        OrbitPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Divides every coefficient by `d`, failing unless all are multiples.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!("{d} at {e:?}")));
            }
            terms.insert(e.clone(), q);
        }
        Ok(OrbitPoly {
            rank: self.rank,
            terms,
        })
    }

    /// Product in orbit basis.
    ///
    /// For dominant `lam`, `mu` the coefficient of `m_nu` in `m_lam * m_mu`
    /// is `|W lam| / |W nu| * #{y in W mu : lam + y in W nu}`; the smaller
    /// orbit of each pair is the one enumerated.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut orbits: HashMap<Vec<i32>, Vec<Vec<i32>>> = HashMap::new();
        let mut sizes: HashMap<Vec<i32>, u128> = HashMap::new();
        let mut size_of = |d: &[i32]| -> u128 {
            *sizes
                .entry(d.to_vec())
                .or_insert_with(|| orbit_size(d))
        };
        let mut out = Self::zero(self.rank);
        let mut counts: HashMap<Vec<i32>, u128> = HashMap::new();
        for (ea, ca) in &self.terms {
            let size_a = size_of(ea.torus());
            for (eb, cb) in &other.terms {
                let size_b = size_of(eb.torus());
                let (rep, rep_size, expanded) = if size_b <= size_a {
                    (ea.torus(), size_a, eb.torus())
                } else {
                    (eb.torus(), size_b, ea.torus())
                };
                let z = ea.z() + eb.z();
                counts.clear();
                let members = orbits
                    .entry(expanded.to_vec())
                    .or_insert_with(|| orbit(expanded));
                for y in members.iter() {
                    let s: Vec<i32> = rep.iter().zip(y).map(|(a, b)| a + b).collect();
                    *counts.entry(dominant_torus(&s)).or_insert(0) += 1;
                }
                let prod = ca * cb;
                for (nu, count) in counts.drain() {
                    let size_nu = size_of(&nu);
                    let pairs = count
                        .checked_mul(rep_size)
                        .ok_or(Error::Overflow("orbit product"))?;
                    debug_assert_eq!(pairs % size_nu, 0);
                    let mult = BigInt::from(pairs / size_nu);
                    out.add_term(Exponent::from_parts(&nu, z), &(&prod * mult));
                }
            }
        }
        Ok(out)
    }

    /// Distinct `z` exponents that occur, ascending.
    pub fn z_exponents(&self) -> Vec<i32> {
        let mut zs: Vec<i32> = self.terms.keys().map(Exponent::z).collect();
        zs.sort_unstable();
        zs.dedup();
        zs
    }

    /// Coefficient of `z^b` as an orbit polynomial with zero `z` slot.
    pub fn z_slice(&self, b: i32) -> OrbitPoly {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            if e.z() == b {
                out.add_term(Exponent::from_parts(e.torus(), 0), c);
            }
        }
        out
    }

    /// Multiplies by `z^b`.
    pub fn shift_z(&self, b: i32) -> OrbitPoly {
        OrbitPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::from_parts(e.torus(), e.z() + b), c.clone()))
                .collect(),
        }
    }

    /// Replaces `z` by `z^{-1}`.
    pub fn invert_z(&self) -> OrbitPoly {
        OrbitPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::from_parts(e.torus(), -e.z()), c.clone()))
                .collect(),
        }
    }

    /// Sets all torus variables to 1, leaving a polynomial in `z` alone.
    pub fn specialize_torus_ones(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(0);
        for (e, c) in &self.terms {
            let size = BigInt::from(orbit_size(e.torus()));
            out.add_term(Exponent::from_parts(&[], e.z()), &(c * size));
        }
        out
    }

    /// Value at all variables equal to 1.
    pub fn eval_ones(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * BigInt::from(orbit_size(e.torus())))
            .sum()
    }
}

impl SeriesCoeff for OrbitPoly {
    fn zero_like(&self) -> Self {
        OrbitPoly::zero(self.rank)
    }
    fn one_like(&self) -> Self {
        OrbitPoly::one(self.rank)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        OrbitPoly::try_add(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        OrbitPoly::try_mul(self, other)
    }
    fn negated(&self) -> Self {
        self.scale(&-BigInt::one())
    }
}

impl fmt::Display for OrbitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} * m{:?}", e.torus())?;
            if e.z() != 0 {
                write!(f, " * z^{}", e.z())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrbitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrbitPoly[r={}]({})", self.rank, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes_match_enumeration() {
        for dom in [
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![2, 1, 0],
            vec![2, 2, 2],
            vec![3, 1, 1],
        ] {
            let members = orbit(&dom);
            assert_eq!(members.len() as u128, orbit_size(&dom), "{dom:?}");
            let mut uniq = members.clone();
            uniq.sort();
            uniq.dedup();
            assert_eq!(uniq.len(), members.len());
        }
    }

    #[test]
    fn full_hyperoctahedral_order_at_rank_eleven() {
        // 2^11 * 11! for a weight with distinct nonzero entries
        let dom: Vec<i32> = (1..=11).rev().collect();
        assert_eq!(orbit_size(&dom), 2048 * 39_916_800);
    }

    #[test]
    fn product_matches_expanded_product() {
        let a = OrbitPoly::orbit_sum(&[1, 0], 0, 1)
            .try_add(&OrbitPoly::one(2))
            .unwrap();
        let b = OrbitPoly::orbit_sum(&[1, 1], 2, 3)
            .try_add(&OrbitPoly::orbit_sum(&[2, 0], -2, -1))
            .unwrap();
        let fast = a.try_mul(&b).unwrap();
        let slow = a.expand().try_mul(&b.expand()).unwrap();
        assert_eq!(fast.expand(), slow);
        assert_eq!(OrbitPoly::from_laurent(&slow).unwrap(), fast);
    }

    #[test]
    fn non_invariant_polynomial_is_rejected() {
        let p = LaurentPoly::parse(2, "1 * t1^1").unwrap();
        assert!(matches!(
            OrbitPoly::from_laurent(&p),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn eval_counts_orbit_members() {
        let p = OrbitPoly::orbit_sum(&[1, 0, 0], 0, 1)
            .try_add(&OrbitPoly::one(3))
            .unwrap();
        assert_eq!(p.eval_ones(), BigInt::from(7));
    }
}
