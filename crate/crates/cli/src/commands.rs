//! Command dispatch. Every command writes its result to `out` and reports
//! failures as [`CliError`].

use std::fs;
use std::io::Write;

use adp_core::maxima::all_maximizers;
use adp_core::oracle::ORACLE_MAX_N;
use adp_core::patterns::{
    adp_xr_zero, count_impossible, count_impossible_brute, count_pattern, impossible_bounds, xor_impossible_closed_form,
};
use adp_core::{
    adp_rx, adp_xor, adp_xr, cadp, max_exhaustive, max_r1, max_r_right, oracle_adp, padp, AdpFunction, Dyadic,
    FixedArg, MaxReport, OctalWord, Pattern, RotAmount, Word, XrInstance,
};
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::args::{
    Cli, Command, Format, ImpossibleCmd, MaxArgs, PatternCmd, TableKind, TablesArgs, TripleArgs, VerifyArgs, VerifyOp,
};
use crate::batch;
use crate::error::CliError;
use crate::render;
use crate::tables;

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<(), CliError> {
    match &cli.command {
        Command::AdpXor(t) => probabilities(t, out, adp_xor),
        Command::AdpXr(args) => {
            let r = RotAmount::new(args.r, args.triple.n)?;
            probabilities(&args.triple, out, |a, b, g| {
                Ok(adp_xr(&XrInstance::new(a.clone(), b.clone(), g.clone(), r)?))
            })
        }
        Command::AdpRx(args) => {
            let r = RotAmount::new(args.r, args.triple.n)?;
            probabilities(&args.triple, out, |a, b, g| adp_rx(a, b, g, r))
        }
        Command::Cadp(args) => {
            let c = args.c == 1;
            probabilities(&args.triple, out, |a, b, g| cadp(c, a, b, g))
        }
        Command::Padp(args) => {
            let (x, y) = (args.a == 1, args.b == 1);
            probabilities(&args.triple, out, |a, b, g| padp(x, y, a, b, g))
        }
        Command::Max(args) => maximum(args, out),
        Command::Impossible { action } => impossible(action, out),
        Command::Tables(args) => table(args, out),
        Command::Pattern { action } => pattern(action, out),
        Command::Verify(args) => verify(args, out),
    }
}

/// A triple of word strings with its batch line number, if any.
type Numbered = (Option<usize>, [String; 3]);

/// Resolves the triples of a command: the three positional words, or every
/// record of the batch file (with its line number).
fn triples(args: &TripleArgs) -> Result<Vec<Numbered>, CliError> {
    if let Some(path) = &args.batch {
        let text = fs::read_to_string(path)?;
        return Ok(batch::parse(&text, 3)?
            .into_iter()
            .map(|rec| {
                let [a, b, g]: [String; 3] = rec.fields.try_into().expect("arity checked");
                (Some(rec.line), [a, b, g])
            })
            .collect());
    }
    match <[String; 3]>::try_from(args.words.clone()) {
        Ok(words) => Ok(vec![(None, words)]),
        Err(_) => Err(CliError::Usage("expected three words α β γ, or --batch FILE".into())),
    }
}

fn with_line<T>(line: Option<usize>, r: Result<T, adp_core::Error>) -> Result<T, CliError> {
    match (r, line) {
        (Ok(v), _) => Ok(v),
        (Err(e @ adp_core::Error::GuardExceeded { .. }), _) => Err(e.into()),
        (Err(e), Some(line)) => Err(CliError::Batch {
            line,
            message: e.to_string(),
        }),
        (Err(e), None) => Err(e.into()),
    }
}

fn parse_triple(n: usize, line: Option<usize>, words: &[String; 3]) -> Result<[Word; 3], CliError> {
    let mut parsed = Vec::with_capacity(3);
    for w in words {
        parsed.push(with_line(line, Word::parse(w, n))?);
    }
    Ok(parsed.try_into().expect("three words"))
}

fn probabilities(
    args: &TripleArgs,
    out: &mut impl Write,
    f: impl Fn(&Word, &Word, &Word) -> adp_core::Result<Dyadic>,
) -> Result<(), CliError> {
    for (line, words) in triples(args)? {
        let [a, b, g] = parse_triple(args.n, line, &words)?;
        let v = with_line(line, f(&a, &b, &g))?;
        writeln!(out, "{}", render::probability(&v, args.n, args.format))?;
    }
    Ok(())
}

fn maximum(args: &MaxArgs, out: &mut impl Write) -> Result<(), CliError> {
    let n = args.n;
    if n < 2 {
        return Err(CliError::Usage("maxima need n ≥ 2".into()));
    }
    let fixed = Word::parse(&args.fixed, n)?;
    let r = match args.r.as_str() {
        "1" => 1,
        "n-1" => n - 1,
        s => s
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("--r must be 1, n-1 or a number, got {s:?}")))?,
    };
    let rot = RotAmount::new(r, n)?;
    let fix = if args.fix_beta { FixedArg::Beta } else { FixedArg::Alpha };
    let mut report = if args.exhaustive {
        max_exhaustive(&fixed, rot, fix)?
    } else if r == 1 {
        max_r1(&fixed)?
    } else if r == n - 1 {
        max_r_right(&fixed)?
    } else {
        return Err(CliError::Usage(format!(
            "no closed form for r = {r}: closed forms exist for r = 1 and r = n-1; pass --exhaustive"
        )));
    };
    // The closed forms fix α; by the α ↔ β symmetry the same pairs serve a fixed β.
    report.fixed_arg = fix;
    let free = match fix {
        FixedArg::Alpha => "beta",
        FixedArg::Beta => "alpha",
    };
    writeln!(out, "value: {}", render::probability(&report.value, n, args.format))?;
    writeln!(
        out,
        "witness: {free}={} gamma={}",
        render::word(&report.witness_beta),
        render::word(&report.witness_gamma)
    )?;
    if let Some((b, g)) = &report.second_witness {
        writeln!(
            out,
            "second witness: {free}={} gamma={}",
            render::word(b),
            render::word(g)
        )?;
    }
    writeln!(out, "case: {}", report.case_tag)?;
    if args.verify {
        verify_max(&report, out)?;
    }
    if args.all {
        let (_, pairs) = all_maximizers(&fixed, rot, fix)?;
        writeln!(out, "maximizers: {}", pairs.len())?;
        for (b, g) in pairs {
            writeln!(out, "  {free}={} gamma={}", render::word(&b), render::word(&g))?;
        }
    }
    Ok(())
}

fn verify_max(report: &MaxReport, out: &mut impl Write) -> Result<(), CliError> {
    let n = report.fixed.len();
    let exact = max_exhaustive(&report.fixed, report.r, report.fixed_arg)?;
    let attained = report.evaluate(&report.witness_beta, &report.witness_gamma) == report.value;
    let second_ok = report
        .second_witness
        .as_ref()
        .is_none_or(|(b, g)| report.evaluate(b, g) == report.value);
    if exact.value != report.value || !attained || !second_ok {
        return Err(CliError::Mismatch(format!(
            "exhaustive maximum {} disagrees with the reported maximum",
            render::exact(&exact.value, n)
        )));
    }
    writeln!(out, "verified: exhaustive maximum {}", render::exact(&exact.value, n))?;
    Ok(())
}

fn impossible(cmd: &ImpossibleCmd, out: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        ImpossibleCmd::Check(args) => {
            let n = args.triple.n;
            let r = RotAmount::new(args.r, n)?;
            for (line, words) in triples(&args.triple)? {
                let [a, b, g] = parse_triple(n, line, &words)?;
                let inst = XrInstance::new(a, b, g, r)?;
                let rep = adp_xr_zero(&inst);
                match rep.matched {
                    Some(id) => writeln!(out, "impossible {id}")?,
                    None => writeln!(out, "possible")?,
                }
            }
            Ok(())
        }
        ImpossibleCmd::Count { n, r, brute } => {
            let rs: Vec<usize> = match r {
                Some(r) => vec![*r],
                None => (1..*n).collect(),
            };
            if rs.is_empty() {
                return Err(CliError::Usage("counts need n ≥ 2".into()));
            }
            for r in rs {
                let v = if *brute {
                    count_impossible_brute(*n, r)?
                } else {
                    count_impossible(*n, r)?
                };
                writeln!(out, "N({n},{r}) = {v}")?;
            }
            writeln!(out, "xor: {}", xor_impossible_closed_form(*n))?;
            Ok(())
        }
        ImpossibleCmd::Bounds { n, r, format } => {
            let (lo, hi) = impossible_bounds(*n, *r)?;
            let exact = count_impossible(*n, *r)?;
            let show = |x: &num_rational::BigRational| match format {
                Format::Exact => x.to_string(),
                Format::Decimal => format!("~{}", x.to_f64().unwrap_or(f64::NAN)),
                Format::Both => format!("{x} ~{}", x.to_f64().unwrap_or(f64::NAN)),
            };
            writeln!(out, "lower: {}", show(&lo))?;
            writeln!(out, "N({n},{r}) = {exact}")?;
            writeln!(out, "upper: {}", show(&hi))?;
            Ok(())
        }
    }
}

fn table(args: &TablesArgs, out: &mut impl Write) -> Result<(), CliError> {
    let (name, header, rows, want) = match args.which {
        TableKind::Table1 => (
            "table1",
            tables::TABLE1_HEADER.to_string(),
            tables::table1()?,
            tables::TABLE1_EXPECTED.map(String::from).to_vec(),
        ),
        TableKind::Table6 => {
            let header = if args.brute {
                format!("{} brute", tables::TABLE6_HEADER)
            } else {
                tables::TABLE6_HEADER.to_string()
            };
            (
                "table6",
                header,
                tables::table6(args.brute)?,
                tables::table6_expected(args.brute),
            )
        }
    };
    writeln!(out, "{header}")?;
    for row in &rows {
        writeln!(out, "{row}")?;
    }
    if args.diff {
        let d = tables::diff(&rows, &want);
        if !d.is_empty() {
            for line in &d {
                writeln!(out, "{line}")?;
            }
            return Err(CliError::Mismatch(format!("{name} differs from the reference values")));
        }
        writeln!(out, "{name}: all {} rows match", rows.len())?;
    }
    Ok(())
}

fn pattern(cmd: &PatternCmd, out: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        PatternCmd::Match { pattern, word } => {
            let p = Pattern::parse(pattern)?;
            let w = OctalWord::parse(word)?;
            writeln!(out, "{}", if p.matches(w.symbols()) { "match" } else { "no match" })?;
        }
        PatternCmd::Count { pattern, k } => {
            let p = Pattern::parse(pattern)?;
            writeln!(out, "{}", count_pattern(&p, *k))?;
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> Result<(), CliError> {
    let n = args.n;
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > ORACLE_MAX_N {
        return Err(adp_core::Error::GuardExceeded { n, limit: ORACLE_MAX_N }.into());
    }
    let rotations: Vec<Option<usize>> = match args.op {
        VerifyOp::Xor => vec![None],
        _ if args.r.is_empty() => (1..n).map(Some).collect(),
        _ => args.r.iter().copied().map(Some).collect(),
    };
    if rotations.is_empty() {
        return Err(CliError::Usage("rotations need n ≥ 2".into()));
    }
    let mask = (1u64 << n) - 1;
    let mut failures = Vec::new();
    for r in rotations {
        let f = match (args.op, r) {
            (VerifyOp::Xr, Some(r)) => AdpFunction::Xr(RotAmount::new(r, n)?),
            (VerifyOp::Rx, Some(r)) => AdpFunction::Rx(RotAmount::new(r, n)?),
            _ => AdpFunction::Xor,
        };
        let mut rng = StdRng::seed_from_u64(args.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ r.unwrap_or(0) as u64);
        let samples: Vec<[u64; 3]> = (0..args.samples)
            .map(|_| [(); 3].map(|_| rng.random_range(0..=mask)))
            .collect();
        let bad: Vec<[u64; 3]> = samples
            .par_iter()
            .filter(|t| {
                let [a, b, g] = t.map(|v| Word::from_u64(v, n).expect("n ≥ 1"));
                let formula = match f {
                    AdpFunction::Xor => adp_xor(&a, &b, &g),
                    AdpFunction::Xr(r) => XrInstance::new(a.clone(), b.clone(), g.clone(), r).map(|i| adp_xr(&i)),
                    AdpFunction::Rx(r) => adp_rx(&a, &b, &g, r),
                }
                .expect("valid triple");
                let oracle = oracle_adp(f, &a, &b, &g).expect("guard checked");
                formula != oracle.prob
            })
            .copied()
            .collect();
        let op = match args.op {
            VerifyOp::Xor => "xor",
            VerifyOp::Xr => "xr",
            VerifyOp::Rx => "rx",
        };
        let label = match r {
            Some(r) => format!("n={n} r={r} op={op}"),
            None => format!("n={n} op={op}"),
        };
        writeln!(out, "{label}: {}/{} agree", samples.len() - bad.len(), samples.len())?;
        failures.extend(bad.into_iter().map(|t| (label.clone(), t)));
    }
    if !failures.is_empty() {
        for (label, [a, b, g]) in failures.iter().take(10) {
            writeln!(out, "mismatch {label}: {a:#x} {b:#x} {g:#x}")?;
        }
        return Err(CliError::Mismatch(format!(
            "{} samples disagree with the oracle",
            failures.len()
        )));
    }
    Ok(())
}
