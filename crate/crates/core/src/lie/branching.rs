use super::roots::RootSystem;
use super::weight::{Family, Weight};
use crate::error::Result;

/// Restriction of the `B_r` irreducible `lambda` to `D_r`: all integer
/// `mu` with `l_1 >= m_1 >= l_2 >= m_2 >= ... >= m_{r-1} >= l_r >= |m_r|`,
/// each with multiplicity one.
pub fn branch_b_to_d(lambda: &Weight) -> Result<Vec<Weight>> {
    let r = lambda.rank();
    RootSystem::new(Family::B, r)?.check_weight(lambda)?;
    let l = lambda.coords();
    let mut out = Vec::new();
    let mut current = vec![0i64; r];
    fn rec(i: usize, l: &[i64], current: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let r = l.len();
        if i == r {
            out.push(Weight::new(current.clone()));
            return;
        }
        let (lo, hi) = if i + 1 < r {
            (l[i + 1], l[i])
        } else {
            (-l[i], l[i])
        };
        for m in (lo..=hi).rev() {
            current[i] = m;
            rec(i + 1, l, current, out);
        }
    }
    rec(0, l, &mut current, &mut out);
    Ok(out)
}
