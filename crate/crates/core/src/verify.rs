//! Invariant suites with a pass/fail/discrepancy report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::reference::{compare_column, reference_tables, ColumnStatus, PUBLISHED_DIMS};
use crate::decomp::{
    branch_consistency_check, check_stable, decompose, decompose_all, decompose_cell,
    decompose_with_chooser, default_rank, family_for, invariant_dim_ct, trivial_multiplicity,
    DecompositionTable,
};
use crate::error::{Error, Result};
use crate::hilb::{
    ak_series, delta_series, dim_series, euler_series, extract_pzn, gottsche_series,
    k3_betti_numbers, modular_identity_rhs, molien_pg, molien_pg_expanded, mq_series,
    weight_factor_series, weight_factor_z_coeff, MAX_RANK,
};
use crate::lie::{
    branch_b_to_d, elementary_char, irrep_char, Character, Family, RootSystem, Weight,
};
use crate::ring::{LaurentPoly, OrbitPoly, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Ring,
    Lie,
    Hilb,
    Decomp,
    Tables,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Ring, Suite::Lie, Suite::Hilb, Suite::Decomp, Suite::Tables];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Lie => "lie",
            Suite::Hilb => "hilb",
            Suite::Decomp => "decomp",
            Suite::Tables => "tables",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring" => Ok(Suite::Ring),
            "lie" => Ok(Suite::Lie),
            "hilb" => Ok(Suite::Hilb),
            "decomp" => Ok(Suite::Decomp),
            "tables" | "paper" => Ok(Suite::Tables),
            "all" => Ok(Suite::All),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Disagrees with published data while every internal check passes.
    Discrepancy,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Discrepancy => "DISCREPANCY",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    /// True when nothing failed; discrepancies are allowed.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.checks.iter().filter(|c| c.outcome == outcome).count()
    }

    fn push(&mut self, suite: Suite, name: &str, result: Result<Outcome>, detail: impl Into<String>) {
        let (outcome, detail) = match result {
            Ok(o) => (o, detail.into()),
            Err(e) => (Outcome::Fail, e.to_string()),
        };
        self.checks.push(Check {
            suite,
            name: name.to_string(),
            outcome,
            detail,
        });
    }

    fn check(&mut self, suite: Suite, name: &str, f: impl FnOnce() -> Result<String>) {
        match f() {
            Ok(detail) => self.push(suite, name, Ok(Outcome::Pass), detail),
            Err(e) => self.push(suite, name, Err(e), ""),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<11} {}/{}", c.outcome, c.suite, c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "{} passed, {} failed, {} discrepancies",
            self.count(Outcome::Pass),
            self.count(Outcome::Fail),
            self.count(Outcome::Discrepancy)
        )
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistent(msg()))
    }
}

/// Dominant `B`-type weights of the given rank with `|lambda| <= max_l1`.
pub fn small_weights(rank: usize, max_l1: i64) -> Vec<Weight> {
    fn rec(rank: usize, max_part: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == rank {
            out.push(Weight::new(cur.clone()));
            return;
        }
        for a in 0..=max_part.min(left) {
            cur.push(a);
            rec(rank, a, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_l1, max_l1, &mut Vec::new(), &mut out);
    out
}

pub fn run_suite(suite: Suite) -> Report {
    let mut report = Report::default();
    match suite {
        Suite::All => {
            for s in Suite::ALL {
                report.checks.extend(run_suite(s).checks);
            }
        }
        Suite::Ring => ring_suite(&mut report),
        Suite::Lie => lie_suite(&mut report),
        Suite::Hilb => hilb_suite(&mut report),
        Suite::Decomp => decomp_suite(&mut report),
        Suite::Tables => tables_suite(&mut report),
    }
    report
}

fn sample_polys() -> Result<Vec<LaurentPoly>> {
    [
        "1 + 2 * t1^1 + -1 * t2^-1 * z^2",
        "3 * t1^-2 * t2^1 + 1 * z^-1",
        "1 * t1^1 * t2^1 + -4",
    ]
    .iter()
    .map(|s| LaurentPoly::parse(2, s))
    .collect()
}

fn ring_suite(report: &mut Report) {
    let s = Suite::Ring;
    report.check(s, "laurent ring laws", || {
        let p = sample_polys()?;
        let (a, b, c) = (&p[0], &p[1], &p[2]);
        ensure(a.try_mul(b)? == b.try_mul(a)?, || "commutativity".into())?;
        ensure(a.try_mul(b)?.try_mul(c)? == a.try_mul(&b.try_mul(c)?)?, || "associativity".into())?;
        ensure(
            a.try_mul(&b.try_add(c)?)? == a.try_mul(b)?.try_add(&a.try_mul(c)?)?,
            || "distributivity".into(),
        )?;
        ensure(a.try_sub(a)?.is_zero(), || "additive inverse".into())?;
        Ok("commutative, associative, distributive".into())
    });
    report.check(s, "parse/print round trip", || {
        for p in sample_polys()? {
            let back = LaurentPoly::parse(2, &p.to_string())?;
            ensure(back == p, || format!("{p}"))?;
        }
        Ok(String::new())
    });
    report.check(s, "orbit product matches expansion", || {
        let orbits = [vec![1, 0, 0], vec![2, 1, 0], vec![1, 1, 1], vec![0, 0, 0]];
        for a in &orbits {
            for b in &orbits {
                let x = OrbitPoly::orbit_sum(a, 1, 2);
                let y = OrbitPoly::orbit_sum(b, -2, 3);
                let fast = x.try_mul(&y)?.expand();
                let slow = x.expand().try_mul(&y.expand())?;
                ensure(fast == slow, || format!("m{a:?} * m{b:?}"))?;
            }
        }
        Ok("rank 3".into())
    });
    report.check(s, "truncation consistency", || {
        let p = sample_polys()?;
        let series = |order| {
            TruncatedSeries::from_coeffs(p.clone(), order, &LaurentPoly::zero(2))
        };
        let hi = series(6).try_mul(&series(6))?.truncate(3);
        let lo = series(3).try_mul(&series(3))?;
        ensure(hi == lo, || "product then truncate".into())?;
        Ok(String::new())
    });
}

fn lie_suite(report: &mut Report) {
    let s = Suite::Lie;
    report.check(s, "Weyl dimension equals weight count", || {
        let mut n = 0;
        for (family, rank) in [(Family::B, 2), (Family::B, 3), (Family::B, 4), (Family::D, 3), (Family::D, 4)] {
            let rs = RootSystem::new(family, rank)?;
            for w in small_weights(rank, 4) {
                if family == Family::D && w.coords()[rank - 1] != 0 {
                    continue;
                }
                let ch = irrep_char(&rs, &w)?;
                ensure(ch.dim() == rs.weyl_dim(&w)?, || format!("{family}{rank} {w}"))?;
                n += 1;
            }
        }
        Ok(format!("{n} weights"))
    });
    report.check(s, "tensor square of the standard representation", || {
        for (family, rank) in [(Family::B, 2), (Family::B, 3), (Family::B, 4), (Family::D, 3), (Family::D, 4)] {
            let rs = RootSystem::new(family, rank)?;
            let v = elementary_char(&rs, 1)?;
            let got: Vec<Vec<i64>> = decompose(&v.try_mul(&v)?)?
                .into_iter()
                .map(|(w, c)| {
                    ensure(c == BigInt::from(1), || format!("multiplicity {c}"))?;
                    Ok(w.trimmed().to_vec())
                })
                .collect::<Result<_>>()?;
            ensure(got == vec![vec![], vec![2], vec![1, 1]], || format!("{family}{rank}: {got:?}"))?;
        }
        Ok("V(2) + V(1,1) + V(0)".into())
    });
    report.check(s, "branching preserves dimension", || {
        let mut n = 0;
        for rank in 2..=6 {
            let b = RootSystem::new(Family::B, rank)?;
            let d = RootSystem::new(Family::D, rank)?;
            for w in small_weights(rank, 5) {
                let total: BigInt = branch_b_to_d(&w)?
                    .iter()
                    .map(|mu| d.weyl_dim(mu))
                    .sum::<Result<BigInt>>()?;
                ensure(total == b.weyl_dim(&w)?, || format!("B{rank} {w}"))?;
                n += 1;
            }
        }
        Ok(format!("{n} weights"))
    });
    report.check(s, "irreducibles decompose to themselves", || {
        for (family, rank) in [(Family::B, 3), (Family::D, 4)] {
            let rs = RootSystem::new(family, rank)?;
            for w in small_weights(rank, 4) {
                if family == Family::D && w.coords()[rank - 1] != 0 {
                    continue;
                }
                let d = decompose(&*irrep_char(&rs, &w)?)?;
                ensure(d == vec![(w.clone(), BigInt::from(1))], || format!("{family}{rank} {w}"))?;
            }
        }
        Ok(String::new())
    });
}

#[allow(clippy::needless_range_loop)]
fn hilb_suite(report: &mut Report) {
    let s = Suite::Hilb;
    const N: usize = 8;
    report.check(s, "Betti numbers", || {
        let b2 = k3_betti_numbers(2)?;
        let b3 = k3_betti_numbers(3)?;
        ensure(b2[4] == BigInt::from(276), || format!("b4(S^[2]) = {}", b2[4]))?;
        ensure(b3[4] == BigInt::from(299), || format!("b4(S^[3]) = {}", b3[4]))?;
        ensure(b3[6] == BigInt::from(2554), || format!("b6(S^[3]) = {}", b3[6]))?;
        Ok("276, 299, 2554".into())
    });
    let pg = molien_pg(MAX_RANK, N);
    report.check(s, "graded character at identity matches Poincare polynomials", || {
        let pg = pg.as_ref().map_err(Clone::clone)?;
        let ones = pg.specialize_torus_ones();
        let g = gottsche_series(1, 0, 22, N)?;
        for n in 0..=N {
            let shifted = ones.coeff(n).expect("within order").shift_z(2 * n as i32);
            ensure(&shifted == g.coeff(n).expect("within order"), || format!("n = {n}"))?;
        }
        Ok(format!("n <= {N}"))
    });
    report.check(s, "Euler numbers", || {
        let e = euler_series(N);
        let e: Vec<BigInt> = e.integer_coeffs().ok_or(Error::Inconsistent("non-integral".into()))?;
        ensure(e[1..4] == [24.into(), 324.into(), 3200.into()], || format!("{:?}", &e[..4]))?;
        for n in 0..=N {
            let total: BigInt = k3_betti_numbers(n)?.into_iter().sum();
            ensure(total == e[n], || format!("n = {n}"))?;
        }
        Ok(format!("n <= {N}"))
    });
    report.check(s, "dimension series match graded slices", || {
        let pg = pg.as_ref().map_err(Clone::clone)?;
        for k in 0..=3 {
            let d = dim_series(k, N)?.integer_coeffs().ok_or(Error::Inconsistent("non-integral".into()))?;
            for n in 0..=N {
                let slice = pg.pzn(n).expect("within order").z_slice(2 * k as i32).eval_ones();
                ensure(slice == d[n], || format!("k = {k}, n = {n}: {slice} vs {}", d[n]))?;
            }
        }
        Ok(format!("k <= 3, n <= {N}"))
    });
    report.check(s, "middle cohomology series", || {
        let pg = pg.as_ref().map_err(Clone::clone)?;
        let m = mq_series(MAX_RANK, N)?;
        for n in 0..=N {
            let expected = pg.pzn(n).expect("within order").z_slice(0);
            ensure(m.coeff(n) == Some(&expected), || format!("n = {n}"))?;
        }
        Ok(format!("n <= {N}"))
    });
    report.check(s, "weight factor coefficients", || {
        const Q: usize = 24;
        let series = weight_factor_series(Q)?;
        for k in 0..=4usize {
            let want = ak_series(k, Q).try_sub(&ak_series(k + 1, Q))?;
            for sign in [1, -1] {
                let got = weight_factor_z_coeff(&series, sign * k as i32);
                ensure(got == want, || format!("z^{}", 2 * sign * k as i32))?;
            }
        }
        Ok(format!("|k| <= 4 through q^{Q}"))
    });
    report.check(s, "modular identity", || {
        const Q: usize = 20;
        ensure(delta_series(Q)? == modular_identity_rhs(Q)?, || "coefficients differ".into())?;
        Ok(format!("through q^{Q}"))
    });
    report.check(s, "palindromic graded characters", || {
        let pg = pg.as_ref().map_err(Clone::clone)?;
        for n in 0..=N {
            extract_pzn(pg, n, Family::B)?;
        }
        Ok(format!("n <= {N}"))
    });
    report.check(s, "orbit route matches literal product", || {
        for (rank, order) in [(1, 5), (2, 4), (3, 3)] {
            let fast = molien_pg(rank, order)?.to_laurent_series();
            ensure(fast == molien_pg_expanded(rank, order)?, || format!("rank {rank}"))?;
        }
        Ok(String::new())
    });
}

fn oracle_cells() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for rank in 1..=4 {
        for n in 0..=4 {
            if family_for(n) == Family::D && rank < 2 {
                continue;
            }
            for k in 0..=n {
                out.push((rank, n, 2 * k));
            }
        }
    }
    out
}

fn decomp_suite(report: &mut Report) {
    let s = Suite::Decomp;
    report.check(s, "Betti checksum and rank cross-check", || {
        let tables = decompose_all(8, None, 8)?;
        Ok(format!("{} tables, n <= 8", tables.len()))
    });
    report.check(s, "branch consistency", || {
        let mut n_checked = 0;
        for n in (0..=5).filter(|&n| family_for(n) == Family::B) {
            let pg = molien_pg(default_rank(n).max(2), n)?;
            for k in 0..=n {
                let chi = pg.cohomology_character(n, 2 * k, Family::B)?;
                let r = branch_consistency_check(&chi)?;
                ensure(r.passed(), || format!("H^{{{},{n}}}: {:?}", 2 * k, r.mismatches))?;
                n_checked += 1;
            }
        }
        Ok(format!("{n_checked} cells, n <= 5"))
    });
    report.check(s, "constant-term oracle", || {
        let mut n_checked = 0;
        for (rank, n, degree) in oracle_cells() {
            let pg = molien_pg(rank, n)?;
            let chi = pg.cohomology_character(n, degree, family_for(n))?;
            let a = trivial_multiplicity(&chi)?;
            let b = invariant_dim_ct(&chi)?;
            ensure(a == b, || format!("rank {rank}, H^{{{degree},{n}}}: {a} vs {b}"))?;
            n_checked += 1;
        }
        Ok(format!("{n_checked} characters, rank <= 4, n <= 4"))
    });
    report.check(s, "rank stability", || {
        for n in 0..=5usize {
            let family = family_for(n);
            let ranks: Vec<usize> = (n..=n + 2)
                .filter(|&r| (1..=MAX_RANK).contains(&r))
                .filter(|&r| family == Family::B || r >= 2)
                .collect();
            let series = ranks
                .iter()
                .map(|&r| molien_pg(r, n))
                .collect::<Result<Vec<_>>>()?;
            for k in 0..=n {
                let tables = series
                    .iter()
                    .map(|pg| decompose_cell(pg, n, 2 * k, family))
                    .collect::<Result<Vec<DecompositionTable>>>()?;
                for pair in tables.windows(2) {
                    check_stable(&pair[0], &pair[1])?;
                }
            }
        }
        Ok("n <= 5, r in {n, n+1, n+2}".into())
    });
    report.check(s, "ordering independence", || {
        let seeds = 50u64;
        let cells = [(5usize, 8usize), (6, 12)];
        for (n, degree) in cells {
            let pg = molien_pg(default_rank(n), n)?;
            let chi: Character = pg.cohomology_character(n, degree, Family::B)?;
            let reference = decompose(&chi)?;
            for seed in 0..seeds {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let got = decompose_with_chooser(&chi, |c| rng.gen_range(0..c.len()))?;
                ensure(got == reference, || format!("H^{{{degree},{n}}} seed {seed}"))?;
            }
        }
        Ok(format!("{seeds} seeds"))
    });
}

/// Dimension bounds from an ambient module: `V(3,1)` in `Sym^3 V (x) V`,
/// `V(2,2)` in `Sym^2 (Lambda^2 V)`, `V(5)` in `Sym^5 V`, with `dim V = 23`.
pub const DIMENSION_BOUNDS: &[(&[i64], u64, &str)] = &[
    (&[3, 1], 52900, "dim(Sym^3 V (x) V)"),
    (&[2, 2], 32131, "dim(Sym^2 Lambda^2 V)"),
    (&[5], 80730, "dim(Sym^5 V)"),
];

fn tables_suite(report: &mut Report) {
    let s = Suite::Tables;
    let b11 = RootSystem::new(Family::B, MAX_RANK);
    for (parts, published) in PUBLISHED_DIMS {
        let name = format!("dim V{:?}", parts);
        let computed = b11
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|rs| rs.weyl_dim(&Weight::padded(parts, MAX_RANK)?));
        match computed {
            Ok(d) if d == BigInt::from(*published) => {
                report.push(s, &name, Ok(Outcome::Pass), d.to_string())
            }
            Ok(d) => {
                let bound = DIMENSION_BOUNDS.iter().find(|(p, _, _)| p == parts);
                let detail = match bound {
                    Some((_, b, what)) => format!(
                        "computed {d}, published {published}; bound {what} = {b}"
                    ),
                    None => format!("computed {d}, published {published}"),
                };
                let within = bound.is_none_or(|(_, b, _)| d <= BigInt::from(*b));
                let outcome = if within { Outcome::Discrepancy } else { Outcome::Fail };
                report.push(s, &name, Ok(outcome), detail)
            }
            Err(e) => report.push(s, &name, Err(e), ""),
        }
    }
    let tables = match decompose_all(9, None, 9) {
        Ok(t) => t,
        Err(e) => {
            report.push(s, "tables n <= 9", Err(e), "");
            return;
        }
    };
    let series: Result<Vec<_>> = (5..=9).map(|n| molien_pg(default_rank(n), n)).collect();
    let series = match series {
        Ok(v) => v,
        Err(e) => {
            report.push(s, "Molien series", Err(e), "");
            return;
        }
    };
    for rt in reference_tables() {
        for col in rt.columns {
            let name = format!("{} H^{{{},{}}}", rt.name, col.degree, col.n);
            let Some(table) = tables.iter().find(|t| t.n == col.n && t.degree == col.degree) else {
                report.push(s, &name, Ok(Outcome::Fail), "not computed");
                continue;
            };
            let branch = series[col.n - 5]
                .cohomology_character(col.n, col.degree, Family::B)
                .and_then(|chi| branch_consistency_check(&chi));
            let branch_ok = matches!(&branch, Ok(r) if r.passed());
            let cmp = compare_column(rt.rows, col, table, branch_ok);
            let outcome = match cmp.status {
                ColumnStatus::Match => Outcome::Pass,
                ColumnStatus::Discrepancy => Outcome::Discrepancy,
                ColumnStatus::Failure => Outcome::Fail,
            };
            let detail = if cmp.mismatches.is_empty() {
                format!("{} cells", cmp.compared)
            } else {
                cmp.mismatches
                    .iter()
                    .map(|m| format!("{:?}: published {}, computed {}", m.weight, m.published, m.computed))
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            report.push(s, &name, Ok(outcome), detail);
        }
    }
    report.check(s, "canonical Hodge classes", || {
        let mut row = Vec::new();
        for rt in reference_tables() {
            for col in rt.columns {
                let table = tables
                    .iter()
                    .find(|t| t.n == col.n && t.degree == col.degree)
                    .ok_or(Error::Inconsistent("missing table".into()))?;
                ensure(Some(table.mult(&[])) == col.cells[0], || {
                    format!("H^{{{},{}}}", col.degree, col.n)
                })?;
                row.push(table.mult(&[]).to_string());
            }
        }
        Ok(row.join(","))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("paper".parse::<Suite>().unwrap(), Suite::Tables);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_weights_count() {
        // partitions of 0..=3 into at most 2 parts: 1 + 1 + 2 + 2
        assert_eq!(small_weights(2, 3).len(), 6);
    }

    #[test]
    fn ring_suite_passes() {
        let r = run_suite(Suite::Ring);
        assert!(r.ok(), "{r}");
    }
}
