use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::ring::{geometric_factor, Exponent, LaurentPoly, TruncatedSeries};

fn raise(
    factor: &TruncatedSeries<LaurentPoly>,
    power: u32,
    acc: TruncatedSeries<LaurentPoly>,
) -> Result<TruncatedSeries<LaurentPoly>> {
    let mut acc = acc;
    for _ in 0..power {
        acc = acc.try_mul(factor)?;
    }
    Ok(acc)
}

/// Generating series of Poincaré polynomials of Hilbert schemes of points on
/// a surface with Betti numbers `b0, b1, b2`: the coefficient of `t^n` is
/// `sum_i beta_i(S^[n]) z^i`.
pub fn gottsche_series(b0: u32, b1: u32, b2: u32, order: usize) -> Result<TruncatedSeries<LaurentPoly>> {
    let zero = LaurentPoly::zero(0);
    let mut acc = TruncatedSeries::one(order, &zero);
    for m in 1..=order {
        let mi = m as i32;
        for (z, power) in [(2 * mi - 1, b1), (2 * mi + 1, b1)] {
            let mut coeffs = vec![LaurentPoly::one(0)];
            coeffs.resize(m + 1, zero.clone());
            coeffs[m] = LaurentPoly::monomial(Exponent::z_power(0, z), BigInt::one());
            let numerator = TruncatedSeries::from_coeffs(coeffs, order, &zero);
            acc = raise(&numerator, power, acc)?;
        }
        for (z, power) in [(2 * mi - 2, b0), (2 * mi, b2), (2 * mi + 2, b0)] {
            let denominator = geometric_factor(&Exponent::z_power(0, z), m, order)?;
            acc = raise(&denominator, power, acc)?;
        }
    }
    Ok(acc)
}

/// Betti numbers `beta_0 .. beta_{4n}` of the Hilbert scheme of `n` points
/// on a K3 surface.
pub fn k3_betti_numbers(n: usize) -> Result<Vec<BigInt>> {
    let series = gottsche_series(1, 0, 22, n)?;
    let poly = series.coeff(n).cloned().unwrap_or_else(|| LaurentPoly::zero(0));
    Ok((0..=4 * n as i32)
        .map(|i| poly.coeff(&Exponent::z_power(0, i)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_surface_itself() {
        let g = gottsche_series(1, 0, 22, 1).unwrap();
        assert_eq!(
            g.coeff(1).unwrap(),
            &LaurentPoly::parse(0, "1 + 22 * z^2 + 1 * z^4").unwrap()
        );
    }

    #[test]
    fn two_points() {
        let g = gottsche_series(1, 0, 22, 2).unwrap();
        let p = g.coeff(2).unwrap();
        assert_eq!(
            p,
            &LaurentPoly::parse(0, "1 + 23 * z^2 + 276 * z^4 + 23 * z^6 + 1 * z^8").unwrap()
        );
        assert_eq!(p.eval_ones(), BigInt::from(324));
    }

    #[test]
    fn three_points_middle() {
        let b = k3_betti_numbers(3).unwrap();
        assert_eq!(b[6], BigInt::from(2554));
        assert_eq!(b[4], BigInt::from(299));
        assert_eq!(b[6], BigInt::from(3200 - 2 * (1 + 23 + 299)));
    }

    #[test]
    fn odd_betti_numbers_give_odd_degrees() {
        // an abelian surface: b0 = 1, b1 = 4, b2 = 6, Poincaré polynomial (1+z)^4
        let g = gottsche_series(1, 4, 6, 1).unwrap();
        assert_eq!(
            g.coeff(1).unwrap(),
            &LaurentPoly::parse(0, "1 + 4 * z^1 + 6 * z^2 + 4 * z^3 + 1 * z^4").unwrap()
        );
    }
}
