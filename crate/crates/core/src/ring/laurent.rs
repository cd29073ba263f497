use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::exponent::Exponent;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `t_1..t_r` and `z` with integer coefficients.
///
/// Stored coefficients are never zero, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Exponent::zero(rank), BigInt::one())
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Exponent::zero(rank), c.into())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let rank = exp.rank();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { rank, terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
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
            p.add_term(e, &c);
        }
        Ok(p)
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

    pub fn coeff(&self, e: &Exponent) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
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

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.checked_add(eb)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplies every exponent by `k`; the Adams operation on characters.
    pub fn dilate(&self, k: i32) -> Self {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(e.scale(k), c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Sets every torus variable to 1, keeping only the `z` grading.
    pub fn specialize_torus_ones(&self) -> LaurentPoly {
        let mut out = Self::zero(0);
        for (e, c) in &self.terms {
            out.add_term(Exponent::from_parts(&[], e.z()), c);
        }
        out
    }

    /// Sum of all coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Coefficient of `z^b` as a polynomial in the torus variables (z slot 0).
    pub fn z_coeff(&self, b: i32) -> LaurentPoly {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            if e.z() == b {
                out.add_term(Exponent::from_parts(e.torus(), 0), c);
            }
        }
        out
    }

    /// Replaces `z` by `z^{-1}`.
    pub fn invert_z(&self) -> LaurentPoly {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(Exponent::from_parts(e.torus(), -e.z()), c);
        }
        out
    }

    /// Multiplies by `z^b`.
    pub fn shift_z(&self, b: i32) -> LaurentPoly {
        let mut out = Self::zero(self.rank);
        for (e, c) in &self.terms {
            out.add_term(Exponent::from_parts(e.torus(), e.z() + b), c);
        }
        out
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut p = Self::zero(rank);
        if s == "0" {
            return Ok(p);
        }
        for term in s.split(" + ") {
            let mut coeff = BigInt::one();
            let mut exp = vec![0i32; rank + 1];
            for (idx, factor) in term.split('*').map(str::trim).enumerate() {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {term:?}")));
                }
                if idx == 0 {
                    if let Ok(c) = factor.parse::<BigInt>() {
                        coeff = c;
                        continue;
                    }
                }
                let (var, power) = match factor.split_once('^') {
                    Some((v, a)) => (
                        v,
                        a.parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let slot = if var == "z" {
                    rank
                } else if let Some(i) = var.strip_prefix('t') {
                    let i: usize = i
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {var:?}")))?;
                    if i == 0 || i > rank {
                        return Err(Error::Parse(format!("variable {var} outside rank {rank}")));
                    }
                    i - 1
                } else {
                    return Err(Error::Parse(format!("unknown variable {var:?}")));
                };
                exp[slot] += power;
            }
            p.add_term(Exponent::new(exp)?, &coeff);
        }
        Ok(p)
    }
}

/// Product of two Laurent polynomials over the same rank.
pub fn laurent_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    a.try_mul(b)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, a) in e.torus().iter().enumerate() {
                if *a != 0 {
                    write!(f, " * t{}^{}", i + 1, a)?;
                }
            }
            if e.z() != 0 {
                write!(f, " * z^{}", e.z())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[r={}]({})", self.rank, self)
    }
}

// Operator forms panic on rank mismatch; use the `try_*` methods for
// fallible arithmetic.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("rank mismatch in LaurentPoly addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs)
            .expect("rank mismatch in LaurentPoly subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs)
            .expect("rank mismatch in LaurentPoly multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigInt::one())
    }
}
