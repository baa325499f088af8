//! Acceptance criteria 1-10. Runs as a plain program (no libtest harness) so
//! the per-criterion verdicts are always printed; exits nonzero if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use adp_core::maxima::all_maximizers;
use adp_core::patterns::{
    adp_xr_zero, count_impossible, count_impossible_brute, impossible_bounds, n1_closed_form, padp_zero,
    xor_impossible_closed_form,
};
use adp_core::{
    adp_xor, adp_xr, cadp, cadp_rec, max_exhaustive, max_r1, max_r_right, oracle_adp, padp, padp_rec, AdpFunction,
    Dyadic, FixedArg, MaxReport, RotAmount, Word, XrInstance,
};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn w(v: u64, n: usize) -> Word {
    Word::from_u64(v, n).unwrap()
}

fn words(n: usize) -> impl Iterator<Item = Word> + Clone {
    (0..1u64 << n).map(move |v| w(v, n))
}

fn triples(n: usize) -> impl Iterator<Item = (Word, Word, Word)> {
    (0..1u64 << (3 * n)).map(move |t| {
        let m = (1u64 << n) - 1;
        (w(t >> (2 * n), n), w((t >> n) & m, n), w(t & m, n))
    })
}

fn xr(a: &Word, b: &Word, g: &Word, r: usize) -> XrInstance {
    XrInstance::new(a.clone(), b.clone(), g.clone(), RotAmount::new(r, a.len()).unwrap()).unwrap()
}

fn big(v: u64) -> num_bigint::BigUint {
    num_bigint::BigUint::from(v)
}

fn c1_example() -> Outcome {
    let (a, b, g) = (w(0b1100, 4), w(0b0110, 4), w(0b1010, 4));
    let start = Instant::now();
    let v = adp_xor(&a, &b, &g).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure!(v == Dyadic::from_parts(1, 2), "got {}", v.to_fraction_string());
    ensure!(took < Duration::from_millis(1), "took {took:?}");
    Ok(format!("adp_xor = {} in {took:?}", v.to_fraction_string()))
}

fn c2_table1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_adp"))
        .args(["tables", "table1", "--diff"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.code() == Some(0),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(text.contains("110: 1/4 1/4 1/4 1/4 | 1 0"), "row 110 missing");
    Ok("tables table1 --diff exits 0".into())
}

fn c3_oracle() -> Outcome {
    let mut checked = 0u64;
    for r in 1..=2 {
        for (a, b, g) in triples(3) {
            let f = adp_xr(&xr(&a, &b, &g, r));
            let o = oracle_adp(AdpFunction::Xr(RotAmount::new(r, 3).unwrap()), &a, &b, &g).unwrap();
            ensure!(f == o.prob, "n=3 r={r} {a} {b} {g}");
            checked += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for r in [1, 4, 7] {
        for _ in 0..1000 {
            let [a, b, g] = [(); 3].map(|_| w(rng.random_range(0..256), 8));
            let f = adp_xr(&xr(&a, &b, &g, r));
            let o = oracle_adp(AdpFunction::Xr(RotAmount::new(r, 8).unwrap()), &a, &b, &g).unwrap();
            ensure!(f == o.prob, "n=8 r={r} {a} {b} {g}");
            checked += 1;
        }
    }
    Ok(format!("{checked} triples agree"))
}

fn c4_recurrence() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=4 {
        for (a, b, g) in triples(n) {
            for c in [false, true] {
                ensure!(
                    cadp_rec(c, &a, &b, &g).unwrap() == cadp(c, &a, &b, &g).unwrap(),
                    "cadp {c} {a} {b} {g}"
                );
            }
            for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
                ensure!(
                    padp_rec(x, y, &a, &b, &g).unwrap() == padp(x, y, &a, &b, &g).unwrap(),
                    "padp {x} {y} {a} {b} {g}"
                );
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} triples, 6 flags each"))
}

fn c5_symmetries() -> Outcome {
    let n = 4;
    let top = Word::msb(n).unwrap();
    for r in 1..n {
        for (a, b, g) in triples(n) {
            let v = adp_xr(&xr(&a, &b, &g, r));
            ensure!(adp_xr(&xr(&b, &a, &g, r)) == v, "swap {a} {b} {g} r={r}");
            ensure!(
                adp_xr(&xr(&a.add(&top).unwrap(), &b.add(&top).unwrap(), &g, r)) == v,
                "shift {a} {b} {g} r={r}"
            );
            for signs in 1..8u8 {
                let pick = |x: &Word, bit: u8| if signs >> bit & 1 == 1 { x.neg() } else { x.clone() };
                ensure!(
                    adp_xr(&xr(&pick(&a, 2), &pick(&b, 1), &pick(&g, 0), r)) == v,
                    "signs {signs:03b} {a} {b} {g} r={r}"
                );
            }
        }
    }
    Ok("swap, msb shift and 8 sign patterns at n = 4".into())
}

fn check_report(rep: &MaxReport) -> Result<(), String> {
    let exact = max_exhaustive(&rep.fixed, rep.r, FixedArg::Alpha).map_err(|e| e.to_string())?;
    ensure!(
        exact.value == rep.value,
        "{} r={}: {:?} vs {:?}",
        rep.fixed,
        rep.r.get(),
        rep.value,
        exact.value
    );
    ensure!(
        rep.evaluate(&rep.witness_beta, &rep.witness_gamma) == rep.value,
        "witness of {}",
        rep.fixed
    );
    if let Some((b, g)) = &rep.second_witness {
        ensure!(rep.evaluate(b, g) == rep.value, "second witness of {}", rep.fixed);
    }
    let (_, all) = all_maximizers(&rep.fixed, rep.r, FixedArg::Alpha).map_err(|e| e.to_string())?;
    ensure!(
        all.contains(&(rep.witness_beta.clone(), rep.witness_gamma.clone())),
        "witness not a maximizer"
    );
    Ok(())
}

fn c6_maxima() -> Outcome {
    for n in [4, 5] {
        let zero = Word::zero(n).unwrap();
        for a in words(n) {
            let left = max_r1(&a).map_err(|e| e.to_string())?;
            let right = max_r_right(&a).map_err(|e| e.to_string())?;
            check_report(&left)?;
            check_report(&right)?;
            let best_xor = words(n)
                .flat_map(|b| words(n).map(move |g| (b.clone(), g)))
                .map(|(b, g)| adp_xor(&a, &b, &g).unwrap())
                .max()
                .unwrap();
            ensure!(adp_xor(&a, &a, &zero).unwrap() == best_xor, "self probability of {a}");
            ensure!(left.value == best_xor, "r=1 maximum differs from max adp_xor at {a}");
            if !a.bit(n - 1) {
                ensure!(right.value == best_xor, "r=n-1 maximum differs from max adp_xor at {a}");
            }
        }
    }
    Ok("closed forms equal exhaustive maxima at n = 4, 5".into())
}

fn c7_zero_rules() -> Outcome {
    let mut zeros = 0u64;
    for n in [3, 4] {
        for r in 1..n {
            let rot = RotAmount::new(r, n).unwrap();
            for (a, b, g) in triples(n) {
                let inst = xr(&a, &b, &g, r);
                let rule = adp_xr_zero(&inst).is_zero;
                let exact = adp_xr(&inst).is_zero();
                let oracle = oracle_adp(AdpFunction::Xr(rot), &a, &b, &g).unwrap().hits == 0;
                ensure!(
                    rule == exact && exact == oracle,
                    "n={n} r={r} {a} {b} {g}: rule {rule} exact {exact}"
                );
                zeros += u64::from(exact);
            }
        }
    }
    for n in 1..=5 {
        for (a, b, g) in triples(n) {
            for (x, y) in [(false, false), (false, true), (true, false), (true, true)] {
                let rule = padp_zero(x, y, &a, &b, &g).unwrap().is_zero;
                ensure!(
                    rule == padp(x, y, &a, &b, &g).unwrap().is_zero(),
                    "padp{} {a} {b} {g}",
                    u8::from(x) * 2 + u8::from(y)
                );
            }
        }
    }
    Ok(format!(
        "{zeros} impossible xr triples classified; padp rule exact to n = 5"
    ))
}

const TABLE6: [(usize, usize, u64); 6] = [
    (2, 1, 22),
    (3, 1, 182),
    (3, 2, 150),
    (4, 1, 1462),
    (4, 2, 1166),
    (4, 3, 1046),
];

fn c8_table6() -> Outcome {
    for (n, r, v) in TABLE6 {
        let auto = count_impossible(n, r).map_err(|e| e.to_string())?;
        let brute = count_impossible_brute(n, r).map_err(|e| e.to_string())?;
        ensure!(
            auto == big(v) && brute == big(v),
            "N({n},{r}): automaton {auto}, brute {brute}, want {v}"
        );
    }
    Ok("22 182 150 1462 1166 1046".into())
}

fn c9_closed_form() -> Outcome {
    for n in 2..=6 {
        let exact = BigRational::from_integer(count_impossible(n, 1).unwrap().into());
        ensure!(exact == n1_closed_form(n), "N({n},1) = {exact}");
        for r in 1..n {
            let v = BigRational::from_integer(count_impossible(n, r).unwrap().into());
            let (lo, hi) = impossible_bounds(n, r).unwrap();
            ensure!(lo <= v && v <= hi, "N({n},{r}) = {v} outside [{lo}, {hi}]");
        }
    }
    for n in [5, 6] {
        let n1 = count_impossible(n, 1).unwrap();
        for r in 2..n {
            let v = count_impossible(n, r).unwrap();
            ensure!(v < n1, "N({n},{r}) = {v} ≥ N({n},1) = {n1}");
        }
    }
    Ok("closed form n = 2..6, bounds bracket, r = 1 maximal at n = 5, 6".into())
}

fn c10_xor_contrast() -> Outcome {
    for n in 1..=4 {
        let zero = triples(n)
            .filter(|(a, b, g)| adp_xor(a, b, g).unwrap().is_zero())
            .count() as u64;
        let floor = (4u64 << (3 * n)) / 7;
        ensure!(zero == floor, "xor zeros at n={n}: {zero} vs {floor}");
        ensure!(xor_impossible_closed_form(n) == big(floor), "closed form at n={n}");
        if n >= 2 {
            ensure!(
                count_impossible(n, 1).unwrap() < big(zero),
                "N({n},1) not below the xor count"
            );
        }
    }
    let target_xr = BigRational::new(5.into(), 14.into());
    let target_xor = BigRational::new(4.into(), 7.into());
    let mut prev: Option<(BigRational, BigRational)> = None;
    let mut last = (0.0, 0.0);
    for n in 2..=8 {
        let scale = BigRational::from_integer(num_bigint::BigInt::from(8u64.pow(n as u32)));
        let xr_ratio = BigRational::from_integer(count_impossible(n, 1).unwrap().into()) / &scale;
        let xor_ratio = BigRational::from_integer(xor_impossible_closed_form(n).into()) / &scale;
        let gaps = ((&xr_ratio - &target_xr).abs(), (&xor_ratio - &target_xor).abs());
        if let Some((px, po)) = &prev {
            ensure!(gaps.0 < *px && gaps.1 <= *po, "ratios not converging at n={n}");
        }
        last = (xr_ratio.to_f64().unwrap(), xor_ratio.to_f64().unwrap());
        prev = Some(gaps);
    }
    Ok(format!("n = 8: N(n,1)/8^n ≈ {:.6}, xor ≈ {:.6}", last.0, last.1))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("example triple adp_xor = 1/4", Duration::from_secs(1), c1_example),
        ("single-bit padp/cadp table", Duration::from_secs(60), c2_table1),
        ("adp_xr agrees with the oracle", Duration::from_secs(120), c3_oracle),
        (
            "recurrence equals matrix product",
            Duration::from_secs(30),
            c4_recurrence,
        ),
        ("adp_xr symmetries", Duration::from_secs(120), c5_symmetries),
        ("maxima closed forms", Duration::from_secs(300), c6_maxima),
        (
            "impossibility rules sound and complete",
            Duration::from_secs(600),
            c7_zero_rules,
        ),
        (
            "N(n,r) table by automaton and brute force",
            Duration::from_secs(600),
            c8_table6,
        ),
        (
            "N(n,1) closed form and bounds",
            Duration::from_secs(600),
            c9_closed_form,
        ),
        (
            "xor contrast and ratio trends",
            Duration::from_secs(600),
            c10_xor_contrast,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took <= limit => Ok(detail),
            Ok(_) => Err(format!("exceeded {limit:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({:.2?}): {detail}", i + 1, took),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2?}): {e}", i + 1, took);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
