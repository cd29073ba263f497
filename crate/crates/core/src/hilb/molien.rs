//! The graded character `p_g(z, t) = prod_m 1 / det(I_24 - g t^m)`.
//!
//! A generic element `g` acts on `H^2(S)` with eigenvalues `t_i^{+-1}` and on
//! `H^0`, `H^4` with weights `z^{-2}`, `z^2`. The fast route never expands
//! orbits: with `V` the 24 eigenvalues and `p_d(V)` their power sums,
//! `log p_g = sum_m sum_d p_d(V) t^{md} / d`, which gives the recurrence
//! `n F_n = sum_{k=1}^n B_k F_{n-k}` with `B_k = sum_{d | k} (k/d) p_d(V)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{Character, Family};
use crate::ring::{geometric_factor, series_product, Exponent, LaurentPoly, OrbitPoly, TruncatedSeries};

/// Largest rank: `H^2` of a K3 surface has dimension 22.
pub const MAX_RANK: usize = 11;

/// Default truncation order for series in `t`.
pub const DEFAULT_T_ORDER: usize = 12;

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if !(1..=MAX_RANK).contains(&rank) {
        return Err(Error::RankOutOfRange {
            rank,
            min: 1,
            max: MAX_RANK,
        });
    }
    Ok(())
}

/// `sum_n F_n t^n = prod_{m >= 1} prod_{x in V} 1/(1 - x t^m)` where
/// `power_sum(d)` returns `p_d(V)` in orbit basis.
pub(crate) fn plethystic_product(
    rank: usize,
    order: usize,
    power_sum: impl Fn(usize) -> OrbitPoly,
) -> Result<Vec<OrbitPoly>> {
    let sums: Vec<OrbitPoly> = (0..=order)
        .map(|d| if d == 0 { OrbitPoly::zero(rank) } else { power_sum(d) })
        .collect();
    let mut b = vec![OrbitPoly::zero(rank); order + 1];
    for (k, bk) in b.iter_mut().enumerate().skip(1) {
        for d in (1..=k).filter(|d| k % d == 0) {
            *bk = bk.try_add(&sums[d].scale(&BigInt::from(k / d)))?;
        }
    }
    let mut f = vec![OrbitPoly::one(rank)];
    for n in 1..=order {
        let mut acc = OrbitPoly::zero(rank);
        for k in 1..=n {
            acc = acc.try_add(&b[k].try_mul(&f[n - k])?)?;
        }
        f.push(acc.div_exact(&BigInt::from(n))?);
    }
    Ok(f)
}

/// `p_d` of the 22 + 2 eigenvalues at reduced rank: `z^{-2d} + z^{2d} + m_(d)`.
fn full_power_sum(rank: usize, d: usize) -> OrbitPoly {
    let d = d as i32;
    let mut torus = vec![0; rank];
    torus[0] = d;
    let mut p = OrbitPoly::orbit_sum(&torus, 0, 1);
    let one = BigInt::from(1);
    p.add_term(Exponent::z_power(rank, 2 * d), &one);
    p.add_term(Exponent::z_power(rank, -2 * d), &one);
    p
}

/// Truncated `p_g(z, t)`: coefficient `n` is `p(z)_n`, the `z`-graded
/// character of the cohomology of the Hilbert scheme of `n` points.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCharSeries {
    rank: usize,
    order: usize,
    coeffs: Vec<OrbitPoly>,
}

impl GradedCharSeries {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `p(z)_n` in orbit basis.
    pub fn pzn(&self, n: usize) -> Option<&OrbitPoly> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[OrbitPoly] {
        &self.coeffs
    }

    /// Fully expanded series; only sensible at small rank.
    pub fn to_laurent_series(&self) -> TruncatedSeries<LaurentPoly> {
        let zero = LaurentPoly::zero(self.rank);
        TruncatedSeries::from_coeffs(
            self.coeffs.iter().map(OrbitPoly::expand).collect(),
            self.order,
            &zero,
        )
    }

    /// Specialization `t_i = 1`, a series in `t` over polynomials in `z`.
    pub fn specialize_torus_ones(&self) -> TruncatedSeries<LaurentPoly> {
        TruncatedSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(OrbitPoly::specialize_torus_ones)
                .collect(),
            self.order,
            &LaurentPoly::zero(0),
        )
    }

    /// Character of `H^degree` of the Hilbert scheme of `n` points: the
    /// `z^{degree - 2n}` slice of `p(z)_n`.
    pub fn cohomology_character(&self, n: usize, degree: usize, family: Family) -> Result<Character> {
        let p = self.pzn(n).ok_or(Error::OutOfRange {
            index: n,
            max: self.order,
        })?;
        let z = degree as i32 - 2 * n as i32;
        Character::from_orbit_poly(family, p.z_slice(z))
    }
}

/// Molien product at the given rank, truncated at `order`.
pub fn molien_pg(rank: usize, order: usize) -> Result<GradedCharSeries> {
    check_rank(rank)?;
    let coeffs = plethystic_product(rank, order, |d| full_power_sum(rank, d))?;
    Ok(GradedCharSeries {
        rank,
        order,
        coeffs,
    })
}

/// Literal product of the `2r + 2` geometric factors for every `m <= order`,
/// in fully expanded Laurent form. Exponential in the rank; this is the
/// reference route for small ranks.
pub fn molien_pg_expanded(rank: usize, order: usize) -> Result<TruncatedSeries<LaurentPoly>> {
    check_rank(rank)?;
    let mut eigen = vec![Exponent::z_power(rank, -2), Exponent::z_power(rank, 2)];
    for i in 1..=rank {
        eigen.push(Exponent::t_power(rank, i, 1));
        eigen.push(Exponent::t_power(rank, i, -1));
    }
    let mut factors = Vec::new();
    for m in 1..=order {
        for mu in &eigen {
            factors.push(geometric_factor(mu, m, order)?);
        }
    }
    if factors.is_empty() {
        return Ok(TruncatedSeries::one(order, &LaurentPoly::zero(rank)));
    }
    series_product(&factors, order)
}

/// The slices `z^{2k} -> Char` of `p(z)_n` for `k = -n..=n`, read as
/// characters of the given family.
pub fn extract_pzn(
    pg: &GradedCharSeries,
    n: usize,
    family: Family,
) -> Result<BTreeMap<i32, Character>> {
    let p = pg.pzn(n).ok_or(Error::OutOfRange {
        index: n,
        max: pg.order,
    })?;
    let n = n as i32;
    for z in p.z_exponents() {
        if z % 2 != 0 || z.abs() > 2 * n {
            return Err(Error::Inconsistent(format!(
                "p(z)_{n} has a term at z^{z}"
            )));
        }
    }
    let mut out = BTreeMap::new();
    for k in -n..=n {
        let slice = p.z_slice(2 * k);
        if slice != p.z_slice(-2 * k) {
            return Err(Error::NotInvariant(format!(
                "p(z)_{n} is not symmetric under z -> 1/z at z^{}",
                2 * k
            )));
        }
        out.insert(2 * k, Character::from_orbit_poly(family, slice)?);
    }
    Ok(out)
}
