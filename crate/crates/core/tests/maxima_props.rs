mod common;

use adp_core::maxima::all_maximizers;
use adp_core::{
    adp_xor, adp_xr, cadp, max_exhaustive, max_r1, max_r_right, padp, CaseTag, Dyadic, FixedArg, MaxReport, RotAmount,
    Word,
};
use common::{w, words, xr};

fn max_xor(a: &Word) -> Dyadic {
    let n = a.len();
    words(n)
        .flat_map(|b| words(n).map(move |g| (b.clone(), g)))
        .map(|(b, g)| adp_xor(a, &b, &g).unwrap())
        .max()
        .unwrap()
}

fn check_against_exhaustive(report: &MaxReport) {
    let n = report.fixed.len();
    let exact = max_exhaustive(&report.fixed, report.r, FixedArg::Alpha).unwrap();
    assert_eq!(report.value, exact.value, "{} r={}", report.fixed, report.r.get());
    assert_eq!(
        report.evaluate(&report.witness_beta, &report.witness_gamma),
        report.value
    );
    if let Some((b, g)) = &report.second_witness {
        assert_eq!(report.evaluate(b, g), report.value);
        assert_ne!(*b, report.witness_beta);
    }
    let (best, all) = all_maximizers(&report.fixed, report.r, FixedArg::Alpha).unwrap();
    assert_eq!(best, report.value);
    assert!(all.contains(&(report.witness_beta.clone(), report.witness_gamma.clone())));
    assert!(all.len() <= 1 << (2 * n));
}

#[test]
fn one_bit_left_is_exact() {
    for n in 2..=4 {
        for a in words(n) {
            let rep = max_r1(&a).unwrap();
            assert_eq!(rep.case_tag, CaseTag::R1);
            assert_eq!((&rep.witness_beta, rep.witness_gamma.is_zero()), (&a, true));
            let distinct = !a.is_zero() && a != Word::msb(n).unwrap();
            assert_eq!(rep.second_witness.is_some(), distinct);
            check_against_exhaustive(&rep);
        }
    }
}

#[test]
fn one_bit_right_is_exact() {
    for n in 2..=4 {
        for a in words(n) {
            let rep = max_r_right(&a).unwrap();
            let tag = match (n, a.bit(n - 2), a.bit(n - 1)) {
                (_, _, false) => CaseTag::RRightCase1,
                (2, _, true) => CaseTag::Exhaustive,
                (_, false, true) => CaseTag::RRightCase2,
                (_, true, true) => CaseTag::RRightCase3,
            };
            assert_eq!(rep.case_tag, tag, "{a}");
            check_against_exhaustive(&rep);
        }
    }
}

#[test]
fn one_bit_maxima_match_xor_maxima() {
    for n in 2..=4 {
        let zero = Word::zero(n).unwrap();
        for a in words(n) {
            let best_xor = max_xor(&a);
            let self_xor = adp_xor(&a, &a, &zero).unwrap();
            assert_eq!(best_xor, self_xor);
            assert_eq!(max_r1(&a).unwrap().value, self_xor);
            if !a.bit(n - 1) {
                assert_eq!(max_r_right(&a).unwrap().value, self_xor);
            }
        }
    }
}

#[test]
fn fixing_either_input_gives_the_same_maximum() {
    for n in 2..=4 {
        for r in 1..n {
            let rot = RotAmount::new(r, n).unwrap();
            for a in words(n) {
                let x = max_exhaustive(&a, rot, FixedArg::Alpha).unwrap();
                let y = max_exhaustive(&a, rot, FixedArg::Beta).unwrap();
                assert_eq!(x.value, y.value);
                assert_eq!(y.evaluate(&y.witness_beta, &y.witness_gamma), y.value);
                assert_eq!(adp_xr(&xr(&y.witness_beta, &a, &y.witness_gamma, r)), y.value);
            }
        }
    }
}

#[test]
fn padp_pair_bound() {
    for n in 1..=4 {
        let zero = Word::zero(n).unwrap();
        for a in words(n) {
            let cap = padp(false, false, &a, &a, &zero).unwrap() + padp(true, true, &a, &a, &zero).unwrap();
            for b in words(n) {
                for g in words(n) {
                    for a1 in [false, true] {
                        let v = padp(a1, false, &a, &b, &g).unwrap() + padp(!a1, true, &a, &b, &g).unwrap();
                        assert!(v <= cap, "{a} {b} {g} a'={a1}");
                    }
                }
            }
        }
    }
}

#[test]
fn cadp_maximum_bound() {
    for n in 1..=4 {
        let zero = Word::zero(n).unwrap();
        for a in words(n) {
            let cap = adp_xor(&a, &a, &zero).unwrap();
            let best = |c| {
                words(n)
                    .flat_map(|b| words(n).map(move |g| (b.clone(), g)))
                    .map(|(b, g)| cadp(c, &a, &b, &g).unwrap())
                    .max()
                    .unwrap()
            };
            assert_eq!(best(false), cap);
            assert!(best(true) <= cap);
        }
    }
}

#[test]
fn complement_never_increases_self_probability() {
    for n in 1..=6 {
        let zero = Word::zero(n).unwrap();
        for a in words(n).filter(|a| !a.bit(n - 1)) {
            let na = a.not();
            assert!(adp_xor(&na, &na, &zero).unwrap() <= adp_xor(&a, &a, &zero).unwrap());
        }
    }
}

#[test]
fn fixed_witnesses() {
    let rep = max_r1(&w(0b0110, 4)).unwrap();
    assert_eq!(rep.second_witness, Some((w(0b1010, 4), w(0, 4))));
    let rep = max_r_right(&w(0b1101, 4)).unwrap();
    assert_eq!(rep.case_tag, CaseTag::RRightCase2);
    assert_eq!(
        (rep.witness_beta.clone(), rep.witness_gamma.clone()),
        (w(0b1100, 4), w(0b1000, 4))
    );
    assert_eq!(rep.second_witness, Some((w(0b0100, 4), w(0b1000, 4))));
}
