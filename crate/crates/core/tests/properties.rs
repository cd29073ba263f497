use k3hilb::decomp::{decompose, decompose_with_chooser, reconstruct};
use k3hilb::hilb::{extract_pzn, molien_pg};
use k3hilb::lie::{branch_b_to_d, irrep_char, Family, RootSystem, Weight};
use k3hilb::ring::{Exponent, LaurentPoly, OrbitPoly, TruncatedSeries};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANK: usize = 2;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3, -3i32..=3, -2i32..=2), -5i64..=5), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(
            RANK,
            terms
                .into_iter()
                .map(|((a, b, z), c)| (Exponent::from_parts(&[a, b], z), BigInt::from(c))),
        )
        .unwrap()
    })
}

fn dominant(rank: usize, max: i64) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(0..=max as i32, rank).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn small_weight(rank: usize, max_l1: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max_l1, rank).prop_filter_map("too large", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        (v.iter().sum::<i64>() <= max_l1).then(|| Weight::new(v))
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.try_mul(&LaurentPoly::one(RANK)).unwrap(), a.clone());
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn parse_print_round_trip(a in laurent()) {
        prop_assert_eq!(LaurentPoly::parse(RANK, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn truncation_commutes_with_products(
        xs in prop::collection::vec(laurent(), 1..6),
        ys in prop::collection::vec(laurent(), 1..6),
        cut in 0usize..5,
    ) {
        let zero = LaurentPoly::zero(RANK);
        let x = TruncatedSeries::from_coeffs(xs, 5, &zero);
        let y = TruncatedSeries::from_coeffs(ys, 5, &zero);
        prop_assert_eq!(
            x.try_mul(&y).unwrap().truncate(cut),
            x.truncate(cut).try_mul(&y.truncate(cut)).unwrap()
        );
    }

    #[test]
    fn orbit_product_matches_expansion(a in dominant(3, 2), b in dominant(3, 2), za in -2i32..=2, zb in -2i32..=2) {
        let x = OrbitPoly::orbit_sum(&a, za, 2);
        let y = OrbitPoly::orbit_sum(&b, zb, -1);
        prop_assert_eq!(x.try_mul(&y).unwrap().expand(), x.expand().try_mul(&y.expand()).unwrap());
    }

    #[test]
    fn character_dimension_equals_weyl_dimension(w in small_weight(4, 5)) {
        let rs = RootSystem::new(Family::B, 4).unwrap();
        prop_assert_eq!(irrep_char(&rs, &w).unwrap().dim(), rs.weyl_dim(&w).unwrap());
    }

    #[test]
    fn branching_dimension_law(rank in 2usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=3)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        while v.iter().sum::<i64>() > 5 {
            let i = v.iter().rposition(|&a| a > 0).unwrap();
            v[i] -= 1;
        }
        let w = Weight::new(v);
        let b = RootSystem::new(Family::B, rank).unwrap();
        let d = RootSystem::new(Family::D, rank).unwrap();
        let total: BigInt = branch_b_to_d(&w).unwrap().iter().map(|mu| d.weyl_dim(mu).unwrap()).sum();
        prop_assert_eq!(total, b.weyl_dim(&w).unwrap());
    }

    #[test]
    fn irreducible_round_trip(w in small_weight(3, 4), d_type in any::<bool>()) {
        let family = if d_type { Family::D } else { Family::B };
        let mut coords = w.coords().to_vec();
        if d_type {
            coords[2] = 0;
        }
        let w = Weight::new(coords);
        let rs = RootSystem::new(family, 3).unwrap();
        let d = decompose(&irrep_char(&rs, &w).unwrap()).unwrap();
        prop_assert_eq!(d, vec![(w, BigInt::from(1))]);
    }

    #[test]
    fn decomposition_reconstructs(n in 2usize..=4, k in 0usize..=4) {
        let k = k.min(n);
        let pg = molien_pg(n + 1, n).unwrap();
        let chi = pg.cohomology_character(n, 2 * k, Family::B).unwrap();
        let d = decompose(&chi).unwrap();
        prop_assert!(d.iter().all(|(_, c)| c > &BigInt::from(0)));
        prop_assert_eq!(reconstruct(Family::B, n + 1, &d).unwrap(), chi);
    }
}

#[test]
fn palindromic_graded_characters() {
    let pg = molien_pg(4, 6).unwrap();
    for n in 0..=6 {
        let slices = extract_pzn(&pg, n, Family::B).unwrap();
        for k in 1..=n as i32 {
            assert_eq!(slices[&(2 * k)], slices[&(-2 * k)]);
        }
    }
}

#[test]
fn ordering_independence_under_random_tie_breaking() {
    let pg = molien_pg(7, 6).unwrap();
    for (n, degree) in [(5, 8), (5, 10), (6, 12)] {
        let chi = pg.cohomology_character(n, degree, Family::B).unwrap();
        let reference = decompose(&chi).unwrap();
        for seed in 0..60 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let got = decompose_with_chooser(&chi, |c| rng.gen_range(0..c.len())).unwrap();
            assert_eq!(got, reference, "H^{{{degree},{n}}} seed {seed}");
        }
    }
}
