use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{Character, RootSystem};
use crate::ring::{Exponent, LaurentPoly};

/// Largest rank the constant-term oracle accepts.
pub const CT_RANK_CAP: usize = 5;

/// Dimension of the invariants of `chi` by Weyl integration in constant-term
/// form: `(1/|W|) CT[chi * prod_{alpha} (1 - t^alpha)]` over all roots.
pub fn invariant_dim_ct(chi: &Character) -> Result<BigInt> {
    invariant_dim_ct_capped(chi, CT_RANK_CAP)
}

pub fn invariant_dim_ct_capped(chi: &Character, cap: usize) -> Result<BigInt> {
    let rank = chi.rank();
    if rank > cap {
        return Err(Error::OracleRankCap { rank, cap });
    }
    let rs = RootSystem::new(chi.family(), rank)?;
    let mut acc = chi.expand();
    for alpha in rs.positive_roots() {
        for sign in [1, -1] {
            let torus: Vec<i32> = alpha.iter().map(|&a| sign * a as i32).collect();
            let factor = LaurentPoly::from_terms(
                rank,
                [
                    (Exponent::zero(rank), BigInt::from(1)),
                    (Exponent::from_parts(&torus, 0), BigInt::from(-1)),
                ],
            )?;
            acc = acc.try_mul(&factor)?;
        }
    }
    let ct = acc.coeff(&Exponent::zero(rank));
    let order = BigInt::from(rs.weyl_group_order());
    let (q, r) = ct.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("constant term {ct} by |W| = {order}")));
    }
    Ok(q)
}
