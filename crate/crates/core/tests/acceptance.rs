//! Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
//! Exits non-zero if any criterion outside `KNOWN_FAILURES` fails, or if a
//! known failure starts passing (so the list gets updated).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use metaplectic_ice::coeffring::{gauss_sums_numeric, rational_eq, CoeffElement, LaurentPoly, RationalFunction};
use metaplectic_ice::lattice::*;
use metaplectic_ice::rmatrix::{kojima_match, BasisChange, KojimaOptions, RTable, Rep, TwistFunction};
use metaplectic_ice::scattering::{scattering_identity_check, taumatch_check};
use metaplectic_ice::ybe::*;

type Check = fn() -> (bool, String);

/// Criteria that fail on the current tables, with the observed reason.
const KNOWN_FAILURES: &[(&str, &str)] = &[(
    "kojima",
    "case III differs from the reference column by -1 for n >= 2; no basis change or twist reaches it",
)];

fn part(p: &[i64]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn gamma_system(lam: &[i64], r: usize, n: u32, ncols: usize) -> IceSystem {
    build_system(&part(lam), r, n, ncols, vec![LeftBoundary::Free; r], Variant::Gamma).unwrap()
}

fn sample_state_weight() -> (bool, String) {
    let sys = gamma_system(&[3, 2, 0], 3, 1, 6);
    let gt = GTPattern::new(vec![vec![5, 3, 0], vec![5, 2], vec![2]]).unwrap();
    let state = gt_to_state(&gt, &sys).unwrap();
    let w = state_weight(&state, &WeightTable::gamma(1));
    let c = -CoeffElement::v(1) * CoeffElement::one_minus_v(1);
    let want = LaurentPoly::monomial(vec![1, 5, 2], c);
    (w == want, format!("weight {w}"))
}

fn poly(n: u32, terms: &[(i64, i64, CoeffElement)]) -> RationalFunction {
    terms
        .iter()
        .fold(LaurentPoly::zero(2, n), |acc, (a, b, c)| {
            acc + LaurentPoly::monomial(vec![*a, *b], c.clone())
        })
        .into()
}

fn case10() -> (bool, String) {
    let (n, k) = (3u32, 1i64);
    let nn = n as i64;
    let v = CoeffElement::v(n);
    let one = CoeffElement::one(n);
    let g = |a| CoeffElement::g(n, a);
    let diff = |c: CoeffElement| poly(n, &[(nn, 0, c.clone()), (0, nn, -c)]);
    let row = |l: [&str; 3], w: RationalFunction| (l.map(String::from), w);
    let expected = [
        (
            vec![row(["+2", "+1", "-"], diff(g(k) * g(-k)))],
            vec![row(["+1", "-0", "+"], diff(v.clone()))],
        ),
        (
            vec![row(
                ["+2", "+1", "-"],
                poly(n, &[(k, nn - k, (one.clone() - v.clone()) * g(k))]),
            )],
            vec![row(
                ["-0", "+1", "-"],
                poly(n, &[(k, nn - k, (one.clone() - v.clone()) * g(k))]),
            )],
        ),
        (
            vec![row(
                ["+1", "+1", "-"],
                poly(n, &[(nn, 0, v.clone() * v.clone()), (0, nn, -v.clone())]),
            )],
            vec![
                row(
                    ["-0", "+0", "-"],
                    poly(n, &[(nn, 0, (v.clone() - one.clone()) * v.clone())]),
                ),
                row(["+0", "-0", "+"], diff(v.clone())),
            ],
        ),
    ];
    let tables = case10_tables(n, k).unwrap();
    let mut ok = tables.len() == 3;
    let mut notes = Vec::new();
    for (t, (lhs, rhs)) in tables.iter().zip(&expected) {
        let side = |got: &[Case10Row], want: &[([String; 3], RationalFunction)]| {
            got.len() == want.len()
                && want.iter().all(|(labels, w)| {
                    got.iter()
                        .any(|r| &r.internal == labels && rational_eq(&r.weight, w).unwrap())
                })
        };
        let good = t.equal && side(&t.lhs, lhs) && side(&t.rhs, rhs);
        ok &= good;
        notes.push(format!("{}={}", t.name, if good { "ok" } else { "mismatch" }));
    }
    (ok, notes.join(" "))
}

fn rtt() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=4 {
        for variant in [Variant::Gamma, Variant::Modified] {
            let mut cfg = RttConfig::new(n, variant);
            cfg.max_cases = None;
            let rep = rtt_check_all(&cfg).unwrap();
            ok &= rep.pass() && !rep.truncated;
            notes.push(format!(
                "n={n}/{variant}:{}/{}",
                rep.cases - rep.failure_count,
                rep.cases
            ));
        }
    }
    (ok, notes.join(" "))
}

fn rrr() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let tables = [
            RTable::gamma(n),
            RTable::gamma(n).change_basis(BasisChange::plus_power(Rep::One)),
            RTable::gamma(n).twist(TwistFunction::kojima(n)).unwrap(),
        ];
        for t in tables {
            let rep = rrr_check(&t).unwrap();
            ok &= rep.pass();
            notes.push(format!(
                "n={n}/{}:{}",
                t.label(),
                if rep.pass() { "ok" } else { "fail" }
            ));
        }
    }
    (ok, notes.join(" "))
}

fn unitarity() -> (bool, String) {
    let mut ok = true;
    let mut cases = 0;
    for n in 1..=3 {
        let rep = unitarity_check(n).unwrap();
        ok &= rep.pass();
        cases += rep.cases;
    }
    (ok, format!("{cases} tuples"))
}

fn kojima() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let rep = kojima_match(n, &KojimaOptions::default()).unwrap();
        ok &= rep.pass;
        let bad: Vec<String> = rep
            .cases
            .iter()
            .filter(|c| c.mismatches > 0)
            .map(|c| {
                let ratio = c.example.as_ref().map_or("?", |e| e.ratio.as_str());
                format!("{}({}/{}, ratio {ratio})", c.case, c.mismatches, c.entries)
            })
            .collect();
        notes.push(format!(
            "n={n}:{}",
            if bad.is_empty() { "ok".into() } else { bad.join(",") }
        ));
    }
    (ok, notes.join(" "))
}

fn scattering() -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    for (lam, r, n, i) in [
        (vec![1, 0], 2, 2, 1),
        (vec![2, 1, 0], 3, 2, 1),
        (vec![2, 1, 0], 3, 3, 2),
    ] {
        let rep = scattering_identity_check(&part(&lam), r, n, i).unwrap();
        ok &= rep.pass;
        notes.push(format!("{lam:?},r={r},n={n},i={i}:{}", rep.cases.len()));
    }
    (ok, notes.join(" "))
}

fn taumatch() -> (bool, String) {
    let ok = (1..=4).all(|n| taumatch_check(n).unwrap().pass);
    (ok, "n=1..4".into())
}

fn structural() -> (bool, String) {
    // Nonzero weight implies n-admissible.
    let systems: &[(&[i64], usize)] = &[(&[0], 1), (&[1], 1), (&[2, 1], 2), (&[2, 1], 3), (&[3, 2, 0], 3)];
    let mut admissible = true;
    let mut states_seen = 0;
    for &(lam, r) in systems {
        for n in 1..=4 {
            let sys = IceSystem::for_partition(&part(lam), r, n).unwrap();
            for v in [Variant::Gamma, Variant::Modified] {
                for s in enumerate_states(&sys) {
                    states_seen += 1;
                    if !state_weight(&s, &WeightTable::new(v, n)).is_zero() {
                        admissible &= s.is_n_admissible(n);
                    }
                }
            }
        }
    }

    // GT bijection.
    let sys = gamma_system(&[3, 2, 0], 3, 1, 6);
    let states = enumerate_states(&sys);
    let patterns = enumerate_gt(&[5, 3, 0]).unwrap();
    let mut bijection = states.len() == patterns.len();
    for s in &states {
        let p = state_to_gt(s).unwrap();
        bijection &= gt_to_state(&p, &sys).unwrap() == *s;
    }
    for p in &patterns {
        bijection &= state_to_gt(&gt_to_state(p, &sys).unwrap()).unwrap() == *p;
    }

    // One state per permuted boundary, weight constant * z^{w(lambda + rho)}.
    let lr = [5i64, 3, 0];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut unique = true;
    for n in 1..=3 {
        let sys = gamma_system(&[3, 2, 0], 3, n, 6);
        for w in perms {
            let mu: Vec<i64> = w.iter().map(|&k| lr[k]).collect();
            let a: Vec<i64> = mu.iter().map(|m| 6 - m).collect();
            let opts = EnumOptions {
                filter: Some(ChargeFilter::exact(&a)),
                n_admissible_only: false,
            };
            let found = enumerate_states_with(&sys, Engine::Dfs, &opts);
            unique &= found.len() == 1
                && state_weight(&found[0], &WeightTable::gamma(n))
                    .as_monomial()
                    .is_some_and(|(e, c)| e == &mu && !c.is_zero());
        }
    }
    (
        admissible && bijection && unique,
        format!(
            "admissible={admissible} ({states_seen} states) gt={bijection} ({} patterns) single-states={unique}",
            patterns.len()
        ),
    )
}

fn numeric() -> (bool, String) {
    let mut ok = true;
    let mut worst_rel = 0f64;
    for (p, n) in [(7, 1), (7, 3), (13, 1), (13, 2), (13, 3)] {
        ok &= gauss_sums_numeric(p, n).unwrap().relation_defect() < 1e-9;
    }
    let mut checked = 0;
    let runs = [(7, 1), (7, 3), (13, 1), (13, 2), (13, 3)];
    for (seed, &(p, n)) in runs.iter().enumerate() {
        let backend = gauss_sums_numeric(p, n).unwrap();
        for suite in [NumericSuite::Rtt, NumericSuite::Rrr, NumericSuite::Unitarity] {
            let rep = numeric_sample(suite, n, &backend, seed as u64, 0.1).unwrap();
            ok &= rep.pass;
            worst_rel = worst_rel.max(rep.max_error);
            checked += rep.checked;
        }
    }
    // n = 4 needs 8 | p - 1, so no prime in {7, 13} carries it; 17 does.
    let backend = gauss_sums_numeric(17, 4).unwrap();
    ok &= backend.relation_defect() < 1e-9;
    let rep = numeric_sample(NumericSuite::Rtt, 4, &backend, 99, 0.1).unwrap();
    ok &= rep.pass;
    worst_rel = worst_rel.max(rep.max_error);
    checked += rep.checked;
    (ok, format!("{checked} cases, max rel err {worst_rel:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, Check); 10] = [
        ("state-weight", 1, sample_state_weight),
        ("case10-tables", 1, case10),
        ("rtt", 120, rtt),
        ("rrr", 120, rrr),
        ("unitarity", 30, unitarity),
        ("kojima", 10, kojima),
        ("scattering", 300, scattering),
        ("taumatch", 5, taumatch),
        ("structural", 60, structural),
        ("numeric", 60, numeric),
    ];
    let mut failed = 0;
    let mut unexpected = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let (ok, detail) = result.unwrap_or_else(|_| (false, "panicked".into()));
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = ok && in_time;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == name);
        if !pass {
            failed += 1;
        }
        if pass == known.is_some() {
            unexpected += 1;
        }
        let timing = format!(
            "{:.2}s/{limit}s{}",
            elapsed.as_secs_f64(),
            if in_time { "" } else { " OVER" }
        );
        println!(
            "{} {:>2} {name:<14} {timing:<16} {detail}",
            if pass { "PASS" } else { "FAIL" },
            i + 1
        );
        if let Some((_, why)) = known {
            println!("          known failure: {why}");
        }
    }
    println!("{} passed, {failed} failed, {unexpected} unexpected", 10 - failed);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
