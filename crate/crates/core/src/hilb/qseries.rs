//! Exact `q`-expansions: the middle-cohomology series `M(q)`, the theta-like
//! series `a_k(q)`, and the modular forms `Delta`, `epsilon`, `delta`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::molien::{check_rank, plethystic_product};
use crate::error::Result;
use crate::ring::{
    geometric_factor, series_product, Exponent, LaurentPoly, OrbitPoly, Rational, TruncatedSeries,
};

pub type QSeries = TruncatedSeries<Rational>;

/// Default truncation order for series in `q`.
pub const DEFAULT_Q_ORDER: usize = 24;

fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> QSeries {
    QSeries::from_coeffs((0..=order).map(f).collect(), order, &Rational::zero())
}

fn divisor_sum(n: usize, keep: impl Fn(usize) -> bool, power: u32) -> i64 {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d) && keep(*d))
        .map(|d| (d as i64).pow(power))
        .sum()
}

/// `a_k(q) = sum_{l >= 1} (-1)^{l+1} q^{l(l+2k-1)/2}`.
pub fn ak_series(k: usize, order: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let k = k as i64;
    for l in 1i64.. {
        let e = l * (l + 2 * k - 1) / 2;
        if e > order as i64 {
            break;
        }
        let sign = if l % 2 == 1 { 1 } else { -1 };
        coeffs[e as usize] += rational(sign);
    }
    QSeries::from_coeffs(coeffs, order, &Rational::zero())
}

/// `Delta(q) = q prod_{k >= 1} (1 - q^k)^24`, expanded as a product.
pub fn delta_series(order: usize) -> Result<QSeries> {
    let zero = Rational::zero();
    let mut euler = QSeries::one(order, &zero);
    for k in 1..=order {
        let mut c = vec![Rational::one()];
        c.resize(k + 1, zero.clone());
        c[k] = rational(-1);
        euler = euler.try_mul(&QSeries::from_coeffs(c, order, &zero))?;
    }
    let mut p24 = QSeries::one(order, &zero);
    for _ in 0..24 {
        p24 = p24.try_mul(&euler)?;
    }
    let mut shifted = vec![zero.clone()];
    shifted.extend(p24.coeffs().iter().cloned());
    Ok(QSeries::from_coeffs(shifted, order, &zero))
}

/// `q / Delta(q) = prod (1 - q^k)^{-24}`, the Euler characteristics of the
/// Hilbert schemes. Uses `n e_n = 24 sum_{k=1}^n sigma(k) e_{n-k}`.
pub fn euler_series(order: usize) -> QSeries {
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=order {
        let s: BigInt = (1..=n)
            .map(|k| BigInt::from(divisor_sum(k, |_| true, 1)) * &e[n - k])
            .sum();
        e.push(s * 24 / n);
    }
    from_fn(order, |n| Rational::from_integer(e[n].clone()))
}

/// `sum_n dim H^{2n+2k} q^n = (q / Delta) (a_k - a_{k+1})`.
pub fn dim_series(k: usize, order: usize) -> Result<QSeries> {
    let diff = ak_series(k, order).try_sub(&ak_series(k + 1, order))?;
    euler_series(order).try_mul(&diff)
}

/// `epsilon = sum_{n >= 1} (sum_{d | n, n/d odd} d^3) q^n`.
pub fn eps_series(order: usize) -> QSeries {
    from_fn(order, |n| {
        if n == 0 {
            Rational::zero()
        } else {
            let s: i64 = (1..=n)
                .filter(|d| n % d == 0 && (n / d) % 2 == 1)
                .map(|d| (d as i64).pow(3))
                .sum();
            rational(s)
        }
    })
}

/// `delta = -1/8 - 3 sum_{n >= 1} (sum_{d | n, d odd} d) q^n`.
pub fn delta2_series(order: usize) -> QSeries {
    from_fn(order, |n| {
        if n == 0 {
            Rational::new(BigInt::from(-1), BigInt::from(8))
        } else {
            rational(-3 * divisor_sum(n, |d| d % 2 == 1, 1))
        }
    })
}

/// `4096 epsilon (delta^2 - epsilon)^2`, which should reproduce `Delta`.
pub fn modular_identity_rhs(order: usize) -> Result<QSeries> {
    let eps = eps_series(order);
    let delta = delta2_series(order);
    let inner = delta.try_mul(&delta)?.try_sub(&eps)?;
    let sq = inner.try_mul(&inner)?;
    eps.try_mul(&sq)?.try_scale(&rational(4096))
}

/// `prod_{m <= order} (1 - q^m)^2 / ((1 - z^{-2} q^m)(1 - z^2 q^m))` with
/// polynomial-in-`z` coefficients.
pub fn weight_factor_series(order: usize) -> Result<TruncatedSeries<LaurentPoly>> {
    let zero = LaurentPoly::zero(0);
    let mut factors = vec![TruncatedSeries::one(order, &zero)];
    for m in 1..=order {
        let mut lin = vec![LaurentPoly::one(0)];
        lin.resize(m + 1, zero.clone());
        lin[m] = LaurentPoly::constant(0, -1);
        let lin = TruncatedSeries::from_coeffs(lin, order, &zero);
        factors.push(lin.clone());
        factors.push(lin);
        factors.push(geometric_factor(&Exponent::z_power(0, -2), m, order)?);
        factors.push(geometric_factor(&Exponent::z_power(0, 2), m, order)?);
    }
    series_product(&factors, order)
}

/// The `z^{2k}` coefficient of [`weight_factor_series`] as a `q`-series.
pub fn weight_factor_z_coeff(series: &TruncatedSeries<LaurentPoly>, k: i32) -> QSeries {
    from_fn(series.order(), |n| {
        Rational::from_integer(series.coeff(n).map(|p| p.coeff(&Exponent::z_power(0, 2 * k))).unwrap_or_default())
    })
}

/// `M(q) = (a_0 - a_1)(q) / prod_m ((1 - q^m)^2 det(I_22 - g q^m))`, the
/// characters of the middle cohomology `H^{2n}` in orbit basis.
pub fn mq_series(rank: usize, order: usize) -> Result<TruncatedSeries<OrbitPoly>> {
    check_rank(rank)?;
    let prefactor = ak_series(0, order).try_sub(&ak_series(1, order))?;
    let body = plethystic_product(rank, order, |d| {
        let mut torus = vec![0; rank];
        torus[0] = d as i32;
        let mut p = OrbitPoly::orbit_sum(&torus, 0, 1);
        p.add_term(Exponent::zero(rank), &BigInt::from(2));
        p
    })?;
    let mut coeffs = vec![OrbitPoly::zero(rank); order + 1];
    for (i, c) in prefactor.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = c.to_integer();
        for (j, f) in body.iter().enumerate().take(order + 1 - i) {
            coeffs[i + j] = coeffs[i + j].try_add(&f.scale(&c))?;
        }
    }
    Ok(TruncatedSeries::from_coeffs(
        coeffs,
        order,
        &OrbitPoly::zero(rank),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn ak_low_orders() {
        assert_eq!(ints(&ak_series(0, 6)), vec![1, -1, 0, 1, 0, 0, -1]);
        assert_eq!(ints(&ak_series(1, 6)), vec![0, 1, 0, -1, 0, 0, 1]);
        let diff = ak_series(0, 6).try_sub(&ak_series(1, 6)).unwrap();
        assert_eq!(ints(&diff), vec![1, -2, 0, 2, 0, 0, -2]);
    }

    #[test]
    fn ramanujan_tau() {
        let d = delta_series(6).unwrap();
        assert_eq!(ints(&d), vec![0, 1, -24, 252, -1472, 4830, -6048]);
    }

    #[test]
    fn euler_numbers() {
        let e = euler_series(3);
        assert_eq!(ints(&e), vec![1, 24, 324, 3200]);
    }

    #[test]
    fn middle_dimensions() {
        let d = dim_series(0, 3).unwrap();
        assert_eq!(ints(&d), vec![1, 22, 276, 2554]);
    }

    #[test]
    fn eisenstein_like_series() {
        assert_eq!(ints(&eps_series(4)), vec![0, 1, 8, 28, 64]);
        let d = delta2_series(3);
        assert_eq!(d.coeff(0).unwrap(), &Rational::new(BigInt::from(-1), BigInt::from(8)));
        assert_eq!(&d.coeffs()[1..], &[rational(-3), rational(-3), rational(-12)]);
    }

    #[test]
    fn modular_identity_first_coefficient() {
        let rhs = modular_identity_rhs(1).unwrap();
        assert_eq!(rhs.coeff(1).unwrap(), &rational(1));
        assert_eq!(rhs.coeff(0).unwrap(), &rational(0));
    }
}
