use metaplectic_ice::coeffring::*;
use num::complex::Complex64;
use num::BigRational;
use proptest::prelude::*;

/// Rewrites by firing one applicable rule at a time, chosen by `choices`.
fn reduce_in_order(raw: &[(i64, i64)], n: u32, choices: &[usize]) -> (Vec<u32>, i64, i8) {
    let n = n as usize;
    let mut e = vec![0u32; n];
    for &(a, k) in raw {
        e[a.rem_euclid(n as i64) as usize] += k as u32;
    }
    let (mut v2, mut sign) = (0i64, 1i8);
    let mut step = 0;
    loop {
        // Rule 0: g(0) -> -v.  Rule a (1 <= a <= n/2): g(a) g(n-a) -> v.
        let mut rules = Vec::new();
        if e[0] > 0 {
            rules.push(0);
        }
        for a in 1..=n / 2 {
            let b = n - a;
            if (a != b && e[a] > 0 && e[b] > 0) || (a == b && e[a] >= 2) {
                rules.push(a);
            }
        }
        if rules.is_empty() {
            break;
        }
        let pick = rules[choices.get(step).copied().unwrap_or(0) % rules.len()];
        step += 1;
        if pick == 0 {
            e[0] -= 1;
            sign = -sign;
        } else {
            e[pick] -= 1;
            e[n - pick] -= 1;
        }
        v2 += 2;
    }
    (e[1..].to_vec(), v2, sign)
}

fn raw_monomial() -> impl Strategy<Value = (u32, Vec<(i64, i64)>, Vec<usize>)> {
    (1u32..=8).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..2 * n as i64, 0i64..5), 0..8),
            prop::collection::vec(0usize..16, 0..64),
        )
    })
}

fn coeff(n: u32) -> impl Strategy<Value = CoeffElement> {
    prop::collection::vec((-3i64..=3, -2i64..=4, prop::collection::vec(0i64..3, 2)), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(CoeffElement::zero(n), |acc, (c, k, gs)| {
            let mut t = CoeffElement::from_int(n, c) * CoeffElement::v_half_power(n, k);
            for (i, e) in gs.into_iter().enumerate() {
                for _ in 0..e {
                    t = t * CoeffElement::g(n, i as i64 + 1);
                }
            }
            acc + t
        })
    })
}

fn poly(n: u32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i64..=3, 2), coeff(n)), 0..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(2, n), |acc, (e, c)| acc + LaurentPoly::monomial(e, c))
    })
}

const PRIMES: &[(u64, u32)] = &[
    (5, 2),
    (13, 2),
    (101, 2),
    (7, 3),
    (13, 3),
    (97, 3),
    (17, 4),
    (41, 4),
    (11, 5),
    (61, 5),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn rewriting_is_confluent((n, raw, choices) in raw_monomial()) {
        let normal = normalize_monomial(raw.iter().copied(), n).unwrap();
        let (exps, v2, sign) = reduce_in_order(&raw, n, &choices);
        prop_assert_eq!(normal.monomial.exponents(), exps.as_slice());
        prop_assert_eq!(normal.v_half_shift, v2);
        prop_assert_eq!(normal.sign, sign);
        prop_assert!(normal.monomial.is_normal());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn coefficient_ring_axioms((a, b, c) in (coeff(4), coeff(4), coeff(4))) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() - a.clone(), CoeffElement::zero(4));
        prop_assert_eq!(a.clone() * CoeffElement::one(4), a);
    }

    #[test]
    fn laurent_ring_axioms((a, b, c) in (poly(3), poly(3), poly(3))) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &LaurentPoly::zero(2, 3), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(2, 3), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        idx in 0..PRIMES.len(),
        seed in prop::collection::vec((0.5f64..1.5, 0.0f64..std::f64::consts::TAU), 2),
        raw in prop::collection::vec((prop::collection::vec(-2i64..=3, 2), -3i64..=3, -2i64..=4, 0i64..6, 0i64..3), 0..12),
    ) {
        let (p, n) = PRIMES[idx];
        let z = seed.iter().map(|&(m, t)| Complex64::from_polar(m, t)).collect();
        let b = gauss_sums_numeric(p, n).unwrap().with_z(z);
        // Split the raw terms into three polynomials over the chosen n.
        let mut ps = vec![LaurentPoly::zero(2, n); 3];
        for (j, (e, c, k, a, pw)) in raw.into_iter().enumerate() {
            let mut t = CoeffElement::from_int(n, c) * CoeffElement::v_half_power(n, k);
            for _ in 0..pw {
                t = t * CoeffElement::g(n, a);
            }
            ps[j % 3] = &ps[j % 3] + &LaurentPoly::monomial(e, t);
        }
        let [x, y, w] = [&ps[0], &ps[1], &ps[2]];
        let lhs = (&(x * y) + w).evaluate(&b).unwrap();
        let rhs = x.evaluate(&b).unwrap() * y.evaluate(&b).unwrap() + w.evaluate(&b).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-6, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn rational_eq_is_an_equivalence((p, q, s) in (poly(2), poly(2), poly(2)), t in poly(2)) {
        prop_assume!(!q.is_zero() && !s.is_zero() && !t.is_zero());
        let a = RationalFunction::new(p.clone(), q.clone()).unwrap();
        let b = RationalFunction::new(&p * &s, &q * &s).unwrap();
        let c = RationalFunction::new(&(&p * &s) * &t, &(&q * &s) * &t).unwrap();
        prop_assert!(rational_eq(&a, &a).unwrap());
        prop_assert_eq!(rational_eq(&a, &b).unwrap(), rational_eq(&b, &a).unwrap());
        prop_assert!(rational_eq(&a, &b).unwrap() && rational_eq(&b, &c).unwrap());
        prop_assert!(rational_eq(&a, &c).unwrap());
        let shifted = RationalFunction::new(&p + &q, q.clone()).unwrap();
        prop_assert!(!rational_eq(&a, &shifted).unwrap());
    }
}

#[test]
fn gauss_sums_satisfy_relations() {
    for &(p, n) in PRIMES {
        let b = gauss_sums_numeric(p, n).unwrap();
        assert!(b.relation_defect() < 1e-9, "p = {p}, n = {n}");
    }
}

#[test]
fn inverse_of_gauss_monomial() {
    for n in 2..7u32 {
        for a in 1..n as i64 {
            let g = CoeffElement::g(n, a) * CoeffElement::g(n, a) * CoeffElement::q(n);
            let inv = g.inverse().unwrap();
            assert!((g * inv).is_one());
        }
    }
    assert!((CoeffElement::one(3) + CoeffElement::v(3)).inverse().is_none());
}

#[test]
fn negative_v_powers() {
    let n = 3;
    let q_inv = CoeffElement::v_half_power(n, -1);
    assert_eq!(q_inv.clone() * CoeffElement::q(n), CoeffElement::one(n));
    assert_eq!(q_inv.clone() * q_inv, CoeffElement::v(n).inverse().unwrap());
    let half = CoeffElement::from_rational(n, BigRational::new(1.into(), 2.into()));
    assert_eq!(half.inverse().unwrap(), CoeffElement::from_int(n, 2));
}

#[test]
fn json_is_deterministic() {
    let n = 3;
    let x = LaurentPoly::var(2, n, 0);
    let y = LaurentPoly::var(2, n, 1);
    let p = &(&x - &y.scale(&CoeffElement::g(n, 1))) * &(&x + &y);
    let a = serde_json::to_string(&poly_to_json(&p)).unwrap();
    let b = serde_json::to_string(&poly_to_json(&p.clone())).unwrap();
    assert_eq!(a, b);
    assert_eq!(poly_from_json(&poly_to_json(&p), 2, n).unwrap(), p);
}
