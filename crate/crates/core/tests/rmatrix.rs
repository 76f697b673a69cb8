use metaplectic_ice::coeffring::{rational_eq, CoeffElement, LaurentPoly, RationalFunction};
use metaplectic_ice::lattice::DecoratedSpin;
use metaplectic_ice::rmatrix::*;

fn p(a: i64) -> DecoratedSpin {
    DecoratedSpin::plus(a)
}

fn m0() -> DecoratedSpin {
    DecoratedSpin::minus0()
}

/// `(X - v) / (1 - v X)` style entries with `X = (z2/z1)^n`, written out by hand.
fn x_ratio(n: u32, num: &[(i64, i64, CoeffElement)]) -> RationalFunction {
    let k = n as i64;
    let mono = |e1, e2, c: &CoeffElement| LaurentPoly::monomial(vec![e1, e2], c.clone());
    let top = num
        .iter()
        .fold(LaurentPoly::zero(2, n), |acc, (e1, e2, c)| acc + mono(*e1, *e2, c));
    let bottom = mono(k, 0, &CoeffElement::one(n)) - mono(0, k, &CoeffElement::v(n));
    RationalFunction::new(top, bottom).unwrap()
}

#[test]
fn gamma_entries_by_hand() {
    let n = 3;
    let vars = Vars::pair();
    let t = RTable::gamma(n);
    let v = CoeffElement::v(n);
    let one = CoeffElement::one(n);
    let z = |e1, e2, c: CoeffElement| LaurentPoly::monomial(vec![e1, e2], c);
    let cases = [
        ((p(1), p(1), p(1), p(1)), z(0, 3, one.clone()) - z(3, 0, v.clone())),
        ((m0(), m0(), m0(), m0()), z(3, 0, one.clone()) - z(0, 3, v.clone())),
        ((p(2), m0(), p(2), m0()), z(3, 0, v.clone()) - z(0, 3, v.clone())),
        ((m0(), p(2), m0(), p(2)), z(3, 0, one.clone()) - z(0, 3, one.clone())),
        ((m0(), p(1), p(1), m0()), z(1, 2, one.clone() - v.clone())),
        ((p(1), m0(), m0(), p(1)), z(2, 1, one.clone() - v.clone())),
    ];
    for ((a, b, c, d), want) in cases {
        let got = t.weight(a, b, c, d, &vars);
        assert!(rational_eq(&got, &want.into()).unwrap(), "{a} {b} {c} {d}: {got}");
    }
    assert_eq!(gamma_r_weight(n, p(0), p(1), p(0), p(0)), LaurentPoly::zero(2, n));
}

#[test]
fn only_permutations_of_the_inputs() {
    for n in 1..=3 {
        let t = RTable::gamma(n);
        let vars = Vars::pair();
        for ([a, b, c, d], _, _) in t.entries(&vars) {
            assert!((a, b) == (c, d) || (a, b) == (d, c));
        }
        let ls = labels(n);
        for &a in &ls {
            for &b in &ls {
                assert!(t.outputs(a, b, &vars).len() <= 2);
            }
        }
    }
}

#[test]
fn rhat_all_minus_entry_is_one() {
    for n in 1..=4 {
        let w = rhat_weight(n, m0(), m0(), m0(), m0());
        assert!(rational_eq(&w, &RationalFunction::one(2, n)).unwrap());
        let w = rhat_printed_weight(n, m0(), m0(), m0(), m0());
        assert!(rational_eq(&w, &RationalFunction::one(2, n)).unwrap());
    }
}

#[test]
fn rhat_coincidence_identity() {
    // I = II at a = b plus III on its a > b branch, with g(0) = -v.
    for n in 1..=4 {
        let k = n as i64;
        let v = CoeffElement::v(n);
        let one = CoeffElement::one(n);
        let two = x_ratio(n, &[(k, 0, -v.clone()), (0, k, v.clone())]);
        let three = x_ratio(n, &[(0, k, one.clone() - v.clone())]);
        for a in 0..k {
            let w = rhat_weight(n, p(a), p(a), p(a), p(a));
            assert!(rational_eq(&w, &(two.clone() + three.clone())).unwrap());
        }
    }
}

#[test]
fn rhat_printed_agrees_except_zero_charge_crossings() {
    for n in 1..=4 {
        let vars = Vars::pair();
        let derived = RTable::rhat(n);
        let printed = RTable::new(RBase::RhatPrinted, n);
        for &a in &labels(n) {
            for &b in &labels(n) {
                for &c in &labels(n) {
                    for &d in &labels(n) {
                        let x = derived.weight(a, b, c, d, &vars);
                        let y = printed.weight(a, b, c, d, &vars);
                        let same = rational_eq(&x, &y).unwrap();
                        let case = derived.case_of(a, b, c, d);
                        let zero_crossing = matches!(case, Some(RCase::VII | RCase::VIII))
                            && [a, b].iter().any(|s| s.is_plus() && s.charge.rem_euclid(n as i64) == 0);
                        assert_eq!(same, !zero_crossing, "n={n} {a} {b} {c} {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn basis_change_round_trip() {
    let n = 3;
    let vars = Vars::pair();
    let f = BasisChange::plus_power(Rep::One);
    let t = RTable::gamma(n).change_basis(f).change_basis(f.inverse());
    let g = RTable::gamma(n);
    for ([a, b, c, d], _, w) in g.entries(&vars) {
        assert!(rational_eq(&t.weight(a, b, c, d, &vars), &w).unwrap());
    }
    assert_eq!(t.label(), "gamma-r+basis+basis");
}

#[test]
fn twist_needs_reciprocal_values() {
    let n = 2;
    let q = CoeffElement::q(n);
    let bad = TwistFunction::from_table(n, vec![((p(0), p(1)), q.clone())]);
    assert!(bad.is_err());
    let good = TwistFunction::from_table(n, vec![((p(0), p(1)), q.clone()), ((p(1), p(0)), q.inverse().unwrap())]);
    assert!(good.is_ok());
    assert!(TwistFunction::kojima(n).validate().is_ok());
    assert!(RTable::gamma(3).twist(TwistFunction::kojima(2)).is_err());
}

#[test]
fn twist_touches_only_transmission_entries() {
    let n = 3;
    let vars = Vars::pair();
    let plain = RTable::rhat(n);
    let twisted = RTable::rhat(n).twist(TwistFunction::kojima(n)).unwrap();
    let phi = TwistFunction::kojima(n);
    for ([a, b, c, d], case, w) in plain.entries(&vars) {
        let t = twisted.weight(a, b, c, d, &vars);
        let want = if case.is_transmission() {
            w.scale(&phi.phi(a, b))
        } else {
            w
        };
        assert!(rational_eq(&t, &want).unwrap(), "{a} {b} {c} {d}");
    }
}

#[test]
fn kojima_all_cases_but_one_match() {
    for n in 1..=4 {
        let rep = kojima_match(n, &KojimaOptions::default()).unwrap();
        for c in &rep.cases {
            if c.case == RCase::III && n >= 2 {
                assert!(c.mismatches > 0);
                assert_eq!(c.mismatches, c.entries);
                assert_eq!(c.example.as_ref().unwrap().ratio, "-1");
            } else {
                assert_eq!(c.mismatches, 0, "n={n} case {}", c.case);
            }
        }
        assert_eq!(rep.pass, n == 1);
    }
}

#[test]
fn kojima_with_extra_sign_on_crossings_matches() {
    let opts = KojimaOptions {
        flip_iii: true,
        ..KojimaOptions::default()
    };
    for n in 2..=3 {
        assert!(kojima_match(n, &opts).unwrap().pass);
    }
}

#[test]
fn kojima_needs_positive_representatives_at_n1() {
    let opts = KojimaOptions {
        rep: Rep::Zero,
        ..KojimaOptions::default()
    };
    assert!(!kojima_match(1, &opts).unwrap().pass);
}

#[test]
fn endomorphism_layout() {
    let n = 2;
    let vars = Vars::pair();
    let t = RTable::gamma(n);
    let m = as_endomorphism(&t, &vars);
    let dim = labels(n).len();
    assert_eq!(m.len(), dim * dim);
    let i = label_index(p(1), n);
    let j = label_index(m0(), n);
    let col = i * dim + j;
    assert!(rational_eq(&m[col][col], &t.weight(p(1), m0(), p(1), m0(), &vars)).unwrap());
    let swapped = j * dim + i;
    assert!(rational_eq(&m[swapped][col], &t.weight(p(1), m0(), m0(), p(1), &vars)).unwrap());
}

#[test]
fn integer_mode_separates_congruent_charges() {
    let n = 2;
    let t = RTable::gamma(n).with_mode(ChargeMode::Integer);
    assert_eq!(t.case_of(p(3), p(1), p(1), p(3)), Some(RCase::III));
    assert_eq!(t.case_of(p(1), p(1), p(1), p(1)), Some(RCase::I));
    let r = RTable::gamma(n);
    assert_eq!(r.case_of(p(3), p(1), p(1), p(3)), Some(RCase::I));
}
