use metaplectic_ice::coeffring::{gauss_sums_numeric, rational_eq, CoeffElement, LaurentPoly, NumericBackend};
use metaplectic_ice::lattice::{DecoratedSpin, Mutation, Spin, Variant};
use metaplectic_ice::rmatrix::*;
use metaplectic_ice::ybe::*;

fn cfg(n: u32, variant: Variant) -> RttConfig {
    let mut c = RttConfig::new(n, variant);
    c.max_cases = None;
    c
}

#[test]
fn train_equation_small_n() {
    for n in 1..=2 {
        for variant in [Variant::Gamma, Variant::Modified] {
            let rep = rtt_check_all(&cfg(n, variant)).unwrap();
            assert!(rep.pass(), "n={n} {variant}: {:?}", rep.failures.first());
            assert!(!rep.truncated);
        }
    }
}

#[test]
fn boundary_count() {
    // 6 edges with even parity: half of the 2^6 spin patterns, with every
    // `+` horizontal edge running over 2n integer charges.
    for n in 1..=3u32 {
        let k = 2 * n as usize;
        let mut want = 0;
        for mask in 0u32..64 {
            if mask.count_ones() % 2 == 0 {
                want += [0, 1, 3, 4]
                    .iter()
                    .map(|b| if mask >> b & 1 == 1 { k } else { 1 })
                    .product::<usize>();
            }
        }
        assert_eq!(rtt_boundaries(n, 2).len(), want);
    }
}

#[test]
fn mutated_row_weight_is_caught() {
    for n in 2..=3 {
        let mut c = cfg(n, Variant::Gamma);
        c.mutation = Some(Mutation::B1Shift);
        let rep = rtt_check_all(&c).unwrap();
        assert!(!rep.pass());
        assert!(rep.failure_count > 0 && !rep.failures.is_empty());
        assert!(rep.failures.len() <= KEPT_FAILURES);
    }
}

#[test]
fn case_cap_truncates() {
    let mut c = cfg(2, Variant::Gamma);
    c.max_cases = Some(10);
    let rep = rtt_check_all(&c).unwrap();
    assert_eq!(rep.cases, 10);
    assert!(rep.truncated);
}

#[test]
fn braid_equation() {
    for n in 1..=3 {
        let tables = [
            RTable::gamma(n),
            RTable::rhat(n),
            RTable::gamma(n).change_basis(BasisChange::plus_power(Rep::One)),
            RTable::rhat(n).twist(TwistFunction::kojima(n)).unwrap(),
            RTable::gamma(n).twist(TwistFunction::kojima(n)).unwrap(),
        ];
        for t in tables {
            let rep = rrr_check(&t).unwrap();
            assert!(rep.pass(), "n={n} {}: {:?}", t.label(), rep.failures.first());
        }
    }
}

#[test]
fn braid_equation_detects_a_sign_error() {
    let t = RTable::gamma(2).negate(&[RCase::V]);
    assert!(!rrr_check(&t).unwrap().pass());
}

#[test]
fn unitarity() {
    for n in 1..=3 {
        assert!(unitarity_check(n).unwrap().pass());
        assert!(unitarity_normalized_check(n).unwrap().pass());
    }
}

fn poly(n: u32, terms: &[(i64, i64, CoeffElement)]) -> LaurentPoly {
    terms.iter().fold(LaurentPoly::zero(2, n), |acc, (a, b, c)| {
        acc + LaurentPoly::monomial(vec![*a, *b], c.clone())
    })
}

#[test]
fn case10_tables_by_hand() {
    for (n, k) in [(2u32, 1i64), (3, 1), (3, 2), (4, 3)] {
        let nn = n as i64;
        let v = CoeffElement::v(n);
        let one = CoeffElement::one(n);
        let g = |a| CoeffElement::g(n, a);
        let tables = case10_tables(n, k).unwrap();
        assert_eq!(tables.len(), 3);
        for t in &tables {
            assert!(t.equal, "{} n={n} k={k}", t.name);
        }
        let diff = |c: CoeffElement| poly(n, &[(nn, 0, c.clone()), (0, nn, -c)]);

        let a = &tables[0];
        assert_eq!(a.lhs.len(), 1);
        assert_eq!(a.lhs[0].internal, [format!("+{}", k + 1), "+1".into(), "-".into()]);
        let want = diff(g(k) * g(-k));
        assert!(rational_eq(&a.lhs[0].weight, &want.clone().into()).unwrap());
        assert_eq!(a.rhs.len(), 1);
        assert_eq!(a.rhs[0].internal, [format!("+{k}"), "-0".into(), "+".into()]);
        assert!(rational_eq(&a.rhs[0].weight, &diff(v.clone()).into()).unwrap());

        let b = &tables[1];
        let want = poly(n, &[(k, nn - k, (one.clone() - v.clone()) * g(k))]);
        assert_eq!(b.lhs.len(), 1);
        assert!(rational_eq(&b.lhs[0].weight, &want.clone().into()).unwrap());
        assert_eq!(b.rhs.len(), 1);
        assert_eq!(b.rhs[0].internal, ["-0".to_string(), format!("+{k}"), "-".into()]);
        assert!(rational_eq(&b.rhs[0].weight, &want.into()).unwrap());

        let c = &tables[2];
        assert_eq!(c.lhs.len(), 1);
        let want = poly(n, &[(nn, 0, v.clone() * v.clone()), (0, nn, -v.clone())]);
        assert!(rational_eq(&c.lhs[0].weight, &want.into()).unwrap());
        assert_eq!(c.rhs.len(), 2);
        let mut seen = 0;
        for row in &c.rhs {
            let want = match row.internal[2].as_str() {
                "-" => poly(n, &[(nn, 0, (v.clone() - one.clone()) * v.clone())]),
                _ => diff(v.clone()),
            };
            assert!(rational_eq(&row.weight, &want.into()).unwrap());
            seen += 1;
        }
        assert_eq!(seen, 2);
    }
}

#[test]
fn case10_rejects_divisible_k() {
    assert!(case10_tables(3, 3).is_err());
    assert!(case10_tables(1, 1).is_err());
}

#[test]
fn single_boundary_sides() {
    let c = cfg(3, Variant::Gamma);
    let p = DecoratedSpin::plus;
    let b = RTTBoundary {
        sigma: p(2),
        tau: p(1),
        beta: Spin::Minus,
        theta: p(1),
        rho: DecoratedSpin::minus0(),
        alpha: Spin::Plus,
    };
    let (lhs, rhs) = rtt_check(&c, &b);
    assert!(!lhs.is_zero());
    assert!(rational_eq(&lhs, &rhs).unwrap());
    let (l, r) = rtt_terms(&c, &b);
    assert_eq!((l.len(), r.len()), (1, 1));
}

#[test]
fn numeric_samples() {
    for (p, n) in [(7, 1), (13, 2), (7, 3)] {
        let backend = gauss_sums_numeric(p, n).unwrap();
        for suite in [NumericSuite::Rtt, NumericSuite::Rrr, NumericSuite::Unitarity] {
            let rep = numeric_sample(suite, n, &backend, 11, 0.1).unwrap();
            assert!(rep.pass, "{suite} n={n}: {}", rep.max_error);
            assert!(rep.checked > 0);
        }
    }
}

#[test]
fn numeric_sample_is_seeded() {
    let b = NumericBackend::sqrt_v(13, 2);
    let x = numeric_sample(NumericSuite::Rtt, 2, &b, 5, 0.1).unwrap();
    let y = numeric_sample(NumericSuite::Rtt, 2, &b, 5, 0.1).unwrap();
    assert_eq!(x, y);
    assert!(numeric_sample(NumericSuite::Rtt, 3, &b, 5, 0.1).is_err());
    assert!(numeric_sample(NumericSuite::Rtt, 2, &b, 5, 0.0).is_err());
}

#[test]
fn numeric_full_sweep_n2() {
    let backend = gauss_sums_numeric(13, 2).unwrap();
    let rep = numeric_sample(NumericSuite::Rtt, 2, &backend, 1, 1.0).unwrap();
    assert!(rep.pass);
    assert!(rep.max_error < NUMERIC_TOLERANCE);
}
