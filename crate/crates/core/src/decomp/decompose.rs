use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie::{irrep_char, Character, Family, RootSystem, Weight};

/// `(highest weight, multiplicity)` pairs in row order.
pub type Decomposition = Vec<(Weight, BigInt)>;

/// Row order of the tables: total degree ascending, then lexicographically
/// descending, so `(2)` precedes `(1,1)`.
pub fn row_order(a: &[i64], b: &[i64]) -> Ordering {
    let la: i64 = a.iter().map(|x| x.abs()).sum();
    let lb: i64 = b.iter().map(|x| x.abs()).sum();
    la.cmp(&lb).then_with(|| b.cmp(a))
}

fn leading_key(w: &Weight) -> (i64, &[i64]) {
    (w.l1(), w.coords())
}

/// Decomposes a character into irreducibles by repeatedly stripping the
/// leading weight, maximal by total degree and then lexicographically.
pub fn decompose(chi: &Character) -> Result<Decomposition> {
    decompose_by(chi, |rem, _| {
        rem.orbit_coeffs()
            .map(|(w, _)| w)
            .max_by(|a, b| leading_key(a).cmp(&leading_key(b)))
            .expect("nonzero character has a term")
    })
}

/// Weights with nonzero coefficient that no other such weight dominates.
pub fn maximal_weights(chi: &Character, rs: &RootSystem) -> Vec<Weight> {
    let weights: Vec<Weight> = chi.orbit_coeffs().map(|(w, _)| w).collect();
    weights
        .iter()
        .filter(|w| {
            !weights
                .iter()
                .any(|v| v != *w && rs.dominates(v, w))
        })
        .cloned()
        .collect()
}

/// Like [`decompose`], but at every step `choose` picks the index of the
/// weight to strip among the dominance-maximal ones.
pub fn decompose_with_chooser<F>(chi: &Character, mut choose: F) -> Result<Decomposition>
where
    F: FnMut(&[Weight]) -> usize,
{
    decompose_by(chi, |rem, rs| {
        let mut candidates = maximal_weights(rem, rs);
        let i = choose(&candidates).min(candidates.len() - 1);
        candidates.swap_remove(i)
    })
}

fn decompose_by<F>(chi: &Character, mut pick: F) -> Result<Decomposition>
where
    F: FnMut(&Character, &RootSystem) -> Weight,
{
    let rs = RootSystem::new(chi.family(), chi.rank())?;
    let mut rem = chi.clone();
    let mut out: Decomposition = Vec::new();
    while !rem.is_zero() {
        let lambda = pick(&rem, &rs);
        let c = rem.coeff(&lambda);
        if c.is_negative() {
            return Err(Error::NotACharacter {
                weight: lambda.coords().to_vec(),
                coeff: c.to_string(),
            });
        }
        if chi.family() == Family::D && lambda.coords().last().is_some_and(|&a| a != 0) {
            return Err(Error::HalfSpinPair(lambda.coords().to_vec()));
        }
        let irr = irrep_char(&rs, &lambda)?;
        rem = rem.try_sub(&irr.scale(&c))?;
        out.push((lambda, c));
    }
    out.sort_by(|a, b| row_order(a.0.coords(), b.0.coords()));
    Ok(out)
}

/// Multiplicity of the trivial representation.
pub fn trivial_multiplicity(chi: &Character) -> Result<BigInt> {
    Ok(decompose(chi)?
        .into_iter()
        .find(|(w, _)| w.is_zero())
        .map(|(_, c)| c)
        .unwrap_or_else(BigInt::zero))
}

/// Recombines a decomposition into a character.
pub fn reconstruct(family: Family, rank: usize, parts: &Decomposition) -> Result<Character> {
    let rs = RootSystem::new(family, rank)?;
    let mut acc = Character::zero(family, rank);
    for (w, c) in parts {
        acc = acc.try_add(&irrep_char(&rs, w)?.scale(c))?;
    }
    Ok(acc)
}
