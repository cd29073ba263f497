use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use parking_lot::Mutex;

use super::freudenthal::freudenthal_mults;
use super::roots::RootSystem;
use super::weight::{Family, Weight};
use crate::error::{Error, Result};
use crate::ring::{Exponent, LaurentPoly, OrbitPoly};

/// Weyl-invariant virtual character of `B_r` or `D_r`.
///
/// Stored in the orbit basis of the full signed-permutation group. Every
/// character this crate handles is invariant under single sign changes too,
/// because `D`-type highest weights with a nonzero last coordinate are
/// rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct Character {
    family: Family,
    poly: OrbitPoly,
}

impl Character {
    pub fn zero(family: Family, rank: usize) -> Self {
        Character {
            family,
            poly: OrbitPoly::zero(rank),
        }
    }

    pub fn trivial(family: Family, rank: usize) -> Self {
        Character {
            family,
            poly: OrbitPoly::one(rank),
        }
    }

    /// Wraps an orbit polynomial; it must not involve `z`.
    pub fn from_orbit_poly(family: Family, poly: OrbitPoly) -> Result<Self> {
        if let Some((e, _)) = poly.terms().find(|(e, _)| e.z() != 0) {
            return Err(Error::Inconsistent(format!(
                "character has a z-graded term {e:?}"
            )));
        }
        Ok(Character { family, poly })
    }

    pub fn from_laurent(family: Family, p: &LaurentPoly) -> Result<Self> {
        Self::from_orbit_poly(family, OrbitPoly::from_laurent(p)?)
    }

    /// Builds from `(dominant weight, coefficient)` pairs.
    pub fn from_weights<I>(family: Family, rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, BigInt)>,
    {
        let poly = OrbitPoly::from_orbit_terms(
            rank,
            terms
                .into_iter()
                .map(|(w, c)| (Exponent::from_parts(&w.to_torus(), 0), c)),
        )?;
        Ok(Character { family, poly })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.poly.rank()
    }

    pub fn poly(&self) -> &OrbitPoly {
        &self.poly
    }

    pub fn expand(&self) -> LaurentPoly {
        self.poly.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Orbit coefficients keyed by dominant weight.
    pub fn orbit_coeffs(&self) -> impl Iterator<Item = (Weight, &BigInt)> {
        self.poly
            .terms()
            .map(|(e, c)| (Weight::from_torus(e.torus()), c))
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.poly.coeff(&w.to_torus(), 0)
    }

    /// Value at the identity, i.e. the dimension of the (virtual) module.
    pub fn dim(&self) -> BigInt {
        self.poly.eval_ones()
    }

    /// Same polynomial read as a character of the other family.
    pub fn reinterpret(&self, family: Family) -> Character {
        Character {
            family,
            poly: self.poly.clone(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.family != other.family || self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Character {
            family: self.family,
            poly: self.poly.try_add(&other.poly)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Character {
            family: self.family,
            poly: self.poly.try_sub(&other.poly)?,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Character {
            family: self.family,
            poly: self.poly.try_mul(&other.poly)?,
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Character {
            family: self.family,
            poly: self.poly.scale(k),
        }
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{}{}]({})", self.family, self.rank(), self.poly)
    }
}

type IrrepKey = (Family, usize, Vec<i64>);

fn irrep_cache() -> &'static Mutex<HashMap<IrrepKey, Arc<Character>>> {
    static CACHE: OnceLock<Mutex<HashMap<IrrepKey, Arc<Character>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Character of the irreducible representation with highest weight `lambda`.
pub fn irrep_char(rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
    rs.check_weight(lambda)?;
    if rs.family() == Family::D && lambda.coords().last().is_some_and(|&a| a != 0) {
        return Err(Error::HalfSpinPair(lambda.coords().to_vec()));
    }
    let key = (rs.family(), rs.rank(), lambda.coords().to_vec());
    if let Some(c) = irrep_cache().lock().get(&key) {
        return Ok(Arc::clone(c));
    }
    // computed outside the lock; a racing duplicate computes the same value
    let mults = freudenthal_mults(rs, lambda)?;
    let mut terms = Vec::with_capacity(mults.len());
    for (w, m) in &mults {
        let c = w.coords();
        if c.last().is_some_and(|&a| a < 0) {
            let mut flipped = c.to_vec();
            let last = flipped.len() - 1;
            flipped[last] = -flipped[last];
            let twin = mults.get(&Weight::new(flipped)).cloned().unwrap_or_default();
            if &twin != m {
                return Err(Error::NotInvariant(format!("{w} in irrep {lambda}")));
            }
            continue;
        }
        terms.push((w.clone(), m.clone()));
    }
    let ch = Arc::new(Character::from_weights(rs.family(), rs.rank(), terms)?);
    irrep_cache().lock().insert(key, Arc::clone(&ch));
    Ok(ch)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Character of the `k`-th exterior power of the standard representation.
pub fn elementary_char(rs: &RootSystem, k: usize) -> Result<Character> {
    let r = rs.rank();
    let max = rs.family().standard_dim(r);
    if k > max {
        return Err(Error::OutOfRange { index: k, max });
    }
    // Coefficient of a dominant 0/1 weight with j ones in e_k(t_i, t_i^{-1})
    // is C(r - j, (k - j) / 2): each remaining pair contributes 0 or both.
    let even_part = |k: usize| -> Vec<(Weight, BigInt)> {
        let mut terms = Vec::new();
        for j in 0..=r.min(k) {
            if !(k - j).is_multiple_of(2) {
                continue;
            }
            let c = binomial(r - j, (k - j) / 2);
            if c.is_zero() {
                continue;
            }
            let mut w = vec![0i64; r];
            w[..j].iter_mut().for_each(|a| *a = 1);
            terms.push((Weight::new(w), c));
        }
        terms
    };
    let mut terms = even_part(k);
    if rs.family() == Family::B && k >= 1 {
        terms.extend(even_part(k - 1));
    }
    Character::from_weights(rs.family(), r, terms)
}
