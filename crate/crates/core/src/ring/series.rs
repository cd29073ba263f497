use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::exponent::Exponent;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient ring of a [`TruncatedSeries`].
///
/// `zero_like`/`one_like` exist because some coefficient rings carry a rank
/// that a bare `Zero` impl could not know.
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn try_add(&self, other: &Self) -> Result<Self>;
    fn try_mul(&self, other: &Self) -> Result<Self>;
    fn negated(&self) -> Self;
}

impl SeriesCoeff for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.rank())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.rank())
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        LaurentPoly::try_add(self, other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        LaurentPoly::try_mul(self, other)
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl SeriesCoeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn try_mul(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Power series in one formal variable, exact through degree `order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> TruncatedSeries<C> {
    /// Builds a series from its leading coefficients; missing ones are zero
    /// and anything past `order` is dropped.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize, proto: &C) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(proto.zero_like());
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn one(order: usize, proto: &C) -> Self {
        Self::from_coeffs(vec![proto.one_like()], order, proto)
    }

    pub fn zero(order: usize, proto: &C) -> Self {
        Self::from_coeffs(Vec::new(), order, proto)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].try_add(&other.coeffs[k]))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { order, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(SeriesCoeff::negated).collect(),
        }
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let order = self.order.min(other.order);
        let mut coeffs: Vec<C> = (0..=order).map(|_| self.coeffs[0].zero_like()).collect();
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero_coeff() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero_coeff() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(TruncatedSeries { order, coeffs })
    }

    /// Multiplies every coefficient by `c`.
    pub fn try_scale(&self, c: &C) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.try_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn map<D: SeriesCoeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl TruncatedSeries<Rational> {
    /// Integer-coefficient series from machine integers.
    pub fn from_integers(values: &[i64], order: usize) -> Self {
        let coeffs = values
            .iter()
            .map(|&v| Rational::from_integer(BigInt::from(v)))
            .collect();
        Self::from_coeffs(coeffs, order, &Rational::zero())
    }

    /// Returns the coefficients as integers, or `None` if any is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// `1 / (1 - mu * t^m)` truncated at `order`.
pub fn geometric_factor(
    mu: &Exponent,
    m: usize,
    order: usize,
) -> Result<TruncatedSeries<LaurentPoly>> {
    if m == 0 {
        return Err(Error::NonConvergentFactor);
    }
    let rank = mu.rank();
    let zero = LaurentPoly::zero(rank);
    let mut coeffs = vec![zero.clone(); order + 1];
    let mut power = Exponent::zero(rank);
    for k in (0..=order).step_by(m) {
        coeffs[k] = LaurentPoly::monomial(power.clone(), BigInt::one());
        power = power.checked_add(mu)?;
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, order, &zero))
}

/// Truncated product of `factors`, exact through degree `order`.
pub fn series_product<C: SeriesCoeff>(
    factors: &[TruncatedSeries<C>],
    order: usize,
) -> Result<TruncatedSeries<C>> {
    let first = factors.first().ok_or(Error::EmptyProduct)?;
    let proto = first.coeffs[0].zero_like();
    let mut acc = TruncatedSeries::one(order, &proto);
    for f in factors {
        acc = acc.try_mul(f)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rank: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(rank, s).unwrap()
    }

    #[test]
    fn geometric_series_in_one() {
        let g = geometric_factor(&Exponent::zero(0), 1, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(g.coeff(k).unwrap(), &LaurentPoly::one(0));
        }
    }

    #[test]
    fn geometric_series_in_z_squared() {
        let g = geometric_factor(&Exponent::z_power(0, 2), 1, 2).unwrap();
        assert_eq!(g.coeff(0).unwrap(), &poly(0, "1"));
        assert_eq!(g.coeff(1).unwrap(), &poly(0, "1 * z^2"));
        assert_eq!(g.coeff(2).unwrap(), &poly(0, "1 * z^4"));
    }

    #[test]
    fn geometric_series_with_step_two() {
        let g = geometric_factor(&Exponent::t_power(1, 1, 1), 2, 5).unwrap();
        let expected = ["1", "0", "1 * t1^1", "0", "1 * t1^2", "0"];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(g.coeff(k).unwrap(), &poly(1, e), "degree {k}");
        }
    }

    #[test]
    fn zero_step_is_rejected() {
        assert_eq!(
            geometric_factor(&Exponent::zero(0), 0, 3).unwrap_err(),
            Error::NonConvergentFactor
        );
    }

    #[test]
    fn product_of_linear_factors() {
        let one_plus_t = TruncatedSeries::from_coeffs(
            vec![poly(0, "1"), poly(0, "1")],
            2,
            &LaurentPoly::zero(0),
        );
        let p = series_product(&[one_plus_t.clone(), one_plus_t], 2).unwrap();
        assert_eq!(p.coeffs(), &[poly(0, "1"), poly(0, "2"), poly(0, "1")]);
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let inv = geometric_factor(&Exponent::zero(0), 1, 5).unwrap();
        let lin = TruncatedSeries::from_coeffs(
            vec![poly(0, "1"), poly(0, "-1")],
            5,
            &LaurentPoly::zero(0),
        );
        let p = series_product(&[inv, lin], 5).unwrap();
        assert_eq!(p, TruncatedSeries::one(5, &LaurentPoly::zero(0)));
    }

    #[test]
    fn empty_product_is_an_error() {
        let factors: Vec<TruncatedSeries<Rational>> = Vec::new();
        assert_eq!(series_product(&factors, 3).unwrap_err(), Error::EmptyProduct);
    }
}
