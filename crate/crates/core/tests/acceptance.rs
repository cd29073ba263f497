//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use k3hilb::decomp::reference::{compare_column, reference_tables, ColumnStatus, PUBLISHED_DIMS};
use k3hilb::decomp::{
    branch_consistency_check, check_stable, decompose, decompose_all, decompose_cell,
    decompose_with_chooser, default_rank, family_for, invariant_dim_ct, trivial_multiplicity,
};
use k3hilb::hilb::{
    ak_series, delta2_series, delta_series, dim_series, eps_series, euler_series, extract_pzn,
    gottsche_series, k3_betti_numbers, molien_pg, mq_series, weight_factor_series,
    weight_factor_z_coeff, QSeries, MAX_RANK,
};
use k3hilb::lie::{Family, RootSystem, Weight};
use k3hilb::ring::{Exponent, LaurentPoly, Rational};
use k3hilb::verify::DIMENSION_BOUNDS;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

const N: usize = 8;

fn c1_betti() -> Outcome {
    let b2 = k3_betti_numbers(2).map_err(e)?;
    let b3 = k3_betti_numbers(3).map_err(e)?;
    ensure(b2[4] == 276.into(), || format!("b4(S^[2]) = {}", b2[4]))?;
    ensure(b3[4] == 299.into(), || format!("b4(S^[3]) = {}", b3[4]))?;
    ensure(b3[6] == 2554.into(), || format!("b6(S^[3]) = {}", b3[6]))?;
    let g = gottsche_series(1, 0, 22, N).map_err(e)?;
    let ones = molien_pg(MAX_RANK, N).map_err(e)?.specialize_torus_ones();
    for n in 0..=N {
        let shifted = ones.coeff(n).unwrap().shift_z(2 * n as i32);
        ensure(Some(&shifted) == g.coeff(n), || format!("Poincare polynomial n = {n}"))?;
    }
    Ok(format!("b4 = 276, 299; b6 = 2554; Molien at identity agrees for n <= {N}"))
}

#[allow(clippy::needless_range_loop)]
fn c2_euler() -> Outcome {
    let e_ser = euler_series(N).integer_coeffs().ok_or("non-integral Euler series")?;
    ensure(e_ser[1..4] == [24.into(), 324.into(), 3200.into()], || format!("{:?}", &e_ser[..4]))?;
    for n in 0..=N {
        let total: BigInt = k3_betti_numbers(n).map_err(e)?.into_iter().sum();
        ensure(total == e_ser[n], || format!("n = {n}: {total} vs {}", e_ser[n]))?;
    }
    Ok(format!("24, 324, 3200; sums of Betti numbers agree for n <= {N}"))
}

#[allow(clippy::needless_range_loop)]
fn c3_dim_series() -> Outcome {
    let pg = molien_pg(MAX_RANK, N).map_err(e)?;
    for k in 0..=3 {
        let d = dim_series(k, N).map_err(e)?.integer_coeffs().ok_or("non-integral")?;
        for n in 0..=N {
            let slice = pg.pzn(n).unwrap().z_slice(2 * k as i32).eval_ones();
            ensure(slice == d[n], || format!("k = {k}, n = {n}: {slice} vs {}", d[n]))?;
        }
    }
    let d0 = dim_series(0, N).map_err(e)?.integer_coeffs().ok_or("non-integral")?;
    ensure(d0[1..4] == [22.into(), 276.into(), 2554.into()], || format!("{:?}", &d0[..4]))?;
    Ok(format!("k <= 3, n <= {N}; spot values 22, 276, 2554"))
}

fn c4_middle_series() -> Outcome {
    let pg = molien_pg(MAX_RANK, N).map_err(e)?;
    let m = mq_series(MAX_RANK, N).map_err(e)?;
    for n in 0..=N {
        let expected = pg.pzn(n).unwrap().z_slice(0);
        ensure(m.coeff(n) == Some(&expected), || format!("q^{n}"))?;
    }
    const Q: usize = 24;
    let series = weight_factor_series(Q).map_err(e)?;
    let kmax: i32 = 6;
    for k in -kmax..=kmax {
        let j = k.unsigned_abs() as usize;
        let want = ak_series(j, Q).try_sub(&ak_series(j + 1, Q)).map_err(e)?;
        ensure(weight_factor_z_coeff(&series, k) == want, || format!("z^{}", 2 * k))?;
    }
    Ok(format!("n <= {N}; z^2k coefficients |k| <= {kmax} through q^{Q}"))
}

fn c5_tables() -> Outcome {
    let t0 = Instant::now();
    let tables = decompose_all(9, None, 9).map_err(e)?;
    let mut matched = 0;
    let mut flagged = Vec::new();
    let mut hodge = Vec::new();
    for rt in reference_tables() {
        for col in rt.columns {
            let table = tables
                .iter()
                .find(|t| t.n == col.n && t.degree == col.degree)
                .ok_or_else(|| format!("H^{{{},{}}} not computed", col.degree, col.n))?;
            let pg = molien_pg(default_rank(col.n), col.n).map_err(e)?;
            let chi = pg.cohomology_character(col.n, col.degree, Family::B).map_err(e)?;
            let branch_ok = branch_consistency_check(&chi).map_err(e)?.passed();
            let report = compare_column(rt.rows, col, table, branch_ok);
            match report.status {
                ColumnStatus::Match => matched += 1,
                ColumnStatus::Discrepancy => flagged.push(format!("H^{{{},{}}}", col.degree, col.n)),
                ColumnStatus::Failure => {
                    return Err(format!("H^{{{},{}}}: {:?}", col.degree, col.n, report.mismatches))
                }
            }
            hodge.push(table.mult(&[]).to_string());
        }
    }
    let hodge = hodge.join(",");
    let published = "2,1,4,2,2,5,4,7,5,5,10,7,6,6,13,12,18,6,15,15,25,21";
    ensure(hodge == published, || format!("Hodge row {hodge}"))?;
    let secs = t0.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "{matched} columns match, {} flagged {:?}; Hodge row {hodge}",
        flagged.len(),
        flagged
    ))
}

fn c6_dimensions() -> Outcome {
    let rs = RootSystem::new(Family::B, MAX_RANK).map_err(e)?;
    let mut exact = Vec::new();
    let mut report = Vec::new();
    for (parts, published) in PUBLISHED_DIMS {
        let d = rs.weyl_dim(&Weight::padded(parts, MAX_RANK).map_err(e)?).map_err(e)?;
        let bound = DIMENSION_BOUNDS.iter().find(|(p, _, _)| p == parts);
        match bound {
            None => {
                ensure(d == BigInt::from(*published), || format!("V{parts:?}: {d} vs {published}"))?;
                exact.push(d.to_string());
            }
            Some((_, b, what)) => {
                ensure(d <= BigInt::from(*b), || format!("V{parts:?} = {d} exceeds {what} = {b}"))?;
                report.push(format!(
                    "DISCREPANCY V{parts:?}: computed {d}, published {published}, bound {what} = {b}"
                ));
            }
        }
    }
    ensure(exact.join(",") == "1,23,275,253,2277,4025,1771,14674", || exact.join(","))?;
    Ok(format!("{}\n    {}", exact.join(", "), report.join("\n    ")))
}

fn c7_branching() -> Outcome {
    let mut cells = 0;
    for n in 0..=5 {
        if family_for(n) != Family::B {
            continue;
        }
        let pg = molien_pg(default_rank(n).max(2), n).map_err(e)?;
        for k in 0..=n {
            let chi = pg.cohomology_character(n, 2 * k, Family::B).map_err(e)?;
            let r = branch_consistency_check(&chi).map_err(e)?;
            ensure(r.passed(), || format!("H^{{{},{n}}}: {:?}", 2 * k, r.mismatches))?;
            cells += 1;
        }
    }
    Ok(format!("{cells} graded pieces, n <= 5 (n = 1 is a type D character only)"))
}

fn c8_oracle() -> Outcome {
    let mut count = 0;
    for rank in 1..=4 {
        for n in 0..=4 {
            let family = family_for(n);
            if family == Family::D && rank < 2 {
                continue;
            }
            let pg = molien_pg(rank, n).map_err(e)?;
            for k in 0..=n {
                let chi = pg.cohomology_character(n, 2 * k, family).map_err(e)?;
                let a = trivial_multiplicity(&chi).map_err(e)?;
                let b = invariant_dim_ct(&chi).map_err(e)?;
                ensure(a == b, || format!("rank {rank}, H^{{{},{n}}}: {a} vs {b}", 2 * k))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} characters, rank <= 4, n <= 4"))
}

fn c9_modular() -> Outcome {
    const Q: usize = 20;
    let eps = eps_series(Q);
    let d2 = delta2_series(Q);
    let inner = d2.try_mul(&d2).and_then(|s| s.try_sub(&eps)).map_err(e)?;
    let rhs = eps
        .try_mul(&inner)
        .and_then(|s| s.try_mul(&inner))
        .and_then(|s| s.try_scale(&Rational::from_integer(4096.into())))
        .map_err(e)?;
    let lhs: QSeries = delta_series(Q).map_err(e)?;
    ensure(lhs == rhs, || "coefficients differ".into())?;
    Ok(format!("exact through q^{Q}"))
}

fn random_poly(rng: &mut ChaCha8Rng, rank: usize) -> LaurentPoly {
    let terms = (0..rng.gen_range(0..6)).map(|_| {
        let t: Vec<i32> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
        (Exponent::from_parts(&t, rng.gen_range(-2..=2)), BigInt::from(rng.gen_range(-4..=4)))
    });
    LaurentPoly::from_terms(rank, terms).unwrap()
}

fn c10_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let [a, b, c] = [0; 3].map(|_| random_poly(&mut rng, 3));
        let ab = a.try_mul(&b).map_err(e)?;
        ensure(ab == b.try_mul(&a).map_err(e)?, || "commutativity".into())?;
        ensure(
            ab.try_mul(&c).map_err(e)? == a.try_mul(&b.try_mul(&c).map_err(e)?).map_err(e)?,
            || "associativity".into(),
        )?;
        let lhs = a.try_mul(&b.try_add(&c).map_err(e)?).map_err(e)?;
        let rhs = ab.try_add(&a.try_mul(&c).map_err(e)?).map_err(e)?;
        ensure(lhs == rhs, || "distributivity".into())?;
    }

    let pg = molien_pg(MAX_RANK, N).map_err(e)?;
    for n in 0..=N {
        let slices = extract_pzn(&pg, n, family_for(n)).map_err(e)?;
        for k in 1..=n as i32 {
            ensure(slices[&(2 * k)] == slices[&(-2 * k)], || format!("palindromicity n = {n}"))?;
        }
    }

    for n in 0..=5 {
        let family = family_for(n);
        let r = default_rank(n).max(if family == Family::D { 2 } else { 1 });
        let lo = molien_pg(r, n).map_err(e)?;
        let hi = molien_pg(r + 1, n).map_err(e)?;
        for k in 0..=n {
            let a = decompose_cell(&lo, n, 2 * k, family).map_err(e)?;
            let b = decompose_cell(&hi, n, 2 * k, family).map_err(e)?;
            check_stable(&a, &b).map_err(e)?;
        }
    }

    const SEEDS: u64 = 50;
    for (n, degree) in [(5, 8), (5, 10), (6, 12)] {
        let pg = molien_pg(default_rank(n), n).map_err(e)?;
        let chi = pg.cohomology_character(n, degree, Family::B).map_err(e)?;
        let reference = decompose(&chi).map_err(e)?;
        for seed in 0..SEEDS {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let got = decompose_with_chooser(&chi, |c| rng.gen_range(0..c.len())).map_err(e)?;
            ensure(got == reference, || format!("H^{{{degree},{n}}} seed {seed}"))?;
        }
    }
    Ok(format!(
        "ring laws (200 triples), palindromic n <= {N}, rank r vs r+1 for n <= 5, {SEEDS} seeds"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Betti reproduction", c1_betti),
        ("Euler numbers", c2_euler),
        ("dimension series", c3_dim_series),
        ("middle cohomology series", c4_middle_series),
        ("table reproduction", c5_tables),
        ("dimension column", c6_dimensions),
        ("branching", c7_branching),
        ("oracle equivalence", c8_oracle),
        ("modular identity", c9_modular),
        ("property suites", c10_properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = f();
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2} s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2} s): {detail}", i + 1)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
