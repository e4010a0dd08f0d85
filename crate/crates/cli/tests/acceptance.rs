//! The acceptance suite. Runs as a plain binary (no test harness) so that
//! every criterion prints exactly one PASS/FAIL line; exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qcong::cyclotomic::{cyclotomic, divisors, totient};
use qcong::family::{generate, FamilySpec, Sequence};
use qcong::poly::{BiPoly, Coeff, LaurentPoly, RatExpr};
use qcong::qcalc::qpoch_x;
use qcong::theorems::{
    check_chu_vandermonde, check_even_sign_fact, thm_1_1_sides, thm_1_2_sides, thm_2_1_sides, AlphaParams, Sides,
    SymParams,
};
use qcong::transforms::{hat, PolySeq};
use qcong_cli::{run_sweep_to, SweepConfig, SweepSummary};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SYM_FAMILIES: &str = "ones, delta:0, delta:1, monomial_q:1, random_poly:1:3, random_poly:2:3, random_poly:3:3";

fn sweep(settings: &[(&str, &str)]) -> Result<SweepSummary, String> {
    let mut cfg = SweepConfig { workers: 8, ..Default::default() };
    for (k, v) in settings {
        cfg.set(k, v).map_err(|e| e.to_string())?;
    }
    let (summary, records) = run_sweep_to(&cfg, std::io::sink()).map_err(|e| e.to_string())?;
    if let Some(bad) = records.iter().find(|r| !r.holds) {
        return Err(format!("{summary}; first failure: {}", bad.summary_line()));
    }
    Ok(summary)
}

fn expect_all(summary: SweepSummary, expected_total: usize) -> Outcome {
    if summary.total != expected_total {
        return Err(format!("ran {} cases, expected {expected_total}", summary.total));
    }
    if summary.failed != 0 {
        return Err(summary.to_string());
    }
    Ok(format!("{} cases, all hold, {} skipped", summary.total, summary.skipped))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn coprime_cells(ns: impl Iterator<Item = i64> + Clone, ds: std::ops::RangeInclusive<i64>, rs: usize) -> usize {
    ds.flat_map(|d| ns.clone().map(move |n| gcd(n, d))).filter(|&g| g == 1).count() * rs
}

fn symmetric_sweep(theorem: &str) -> Outcome {
    let s = sweep(&[("n", "2..12"), ("d", "1..6"), ("r", "-5..5"), ("families", SYM_FAMILIES), ("theorems", theorem)])?;
    expect_all(s, coprime_cells(2..=12, 1..=6, 11) * 7)
}

fn criterion_3() -> Outcome {
    let s = sweep(&[
        ("n", "2..10"),
        ("s", "-3..3"),
        ("families", "ones, delta:1, random_poly:1:3, random_poly:2:3"),
        ("theorems", "2.1"),
    ])?;
    let cells: usize = (2..=10).sum();
    // seven values of s, plus one exact identity record per s = 0 case
    expect_all(s, cells * 4 * 7 + cells * 4).map(|m| format!("{m} (includes {} exact s = 0 identities)", cells * 4))
}

fn criterion_4() -> Outcome {
    for k in 0..=12u32 {
        let f = PolySeq::new((0..=k).map(BiPoly::x_pow).collect());
        if hat(&f).entries[k as usize] != qpoch_x(1, k) {
            return Err(format!("hat(x^j)_{k} differs from (xq;q)_{k}"));
        }
    }
    let s = sweep(&[("n", "2..8"), ("d", "1..4"), ("r", "-3..3"), ("theorems", "guo_zeng")])?;
    expect_all(s, coprime_cells(2..=8, 1..=4, 7)).map(|m| format!("{m}; hat(x^k) = (xq;q)_k for k <= 12"))
}

fn criterion_5() -> Outcome {
    let s = sweep(&[("n", "3, 5, 7, 9"), ("d", "1..4"), ("r", "-3..3"), ("theorems", "sun_p")])?;
    expect_all(s, coprime_cells([3, 5, 7, 9].into_iter(), 1..=4, 7))
}

fn criterion_6() -> Outcome {
    let s = sweep(&[("n", "2..12"), ("s", "-3..3"), ("theorems", "lemmas")])?;
    let pairs: usize = (2..=12).map(|n: usize| n - 1).sum();
    let even: usize = (2..=12).filter(|n| n % 2 == 0).count();
    // lemma-sn for six nonzero s, lemma-sn-minus1 for all seven
    let lemma = expect_all(s, pairs * 6 + pairs * 7 + even)?;
    for n in (2..=30).step_by(2) {
        if !check_even_sign_fact(n).map_err(|e| e.to_string())? {
            return Err(format!("even sign fact fails at n = {n}"));
        }
    }
    let mut cv = 0;
    for a in -8..=8 {
        for b in -8..=8 {
            for k in 0..=8 {
                if !check_chu_vandermonde(a, b, k) {
                    return Err(format!("Chu-Vandermonde fails at a={a} b={b} k={k}"));
                }
                cv += 1;
            }
        }
    }
    Ok(format!("{lemma}; even sign fact for even n <= 30; {cv} Chu-Vandermonde identities"))
}

fn criterion_7() -> Outcome {
    let s = sweep(&[
        ("theorems", "classical"),
        ("classical_primes", "3, 5, 7, 11"),
        ("classical_alphas", "2, 1/2, -1/3, 5/2"),
        ("classical_trials", "10"),
    ])?;
    // -1/3 is not 3-integral
    expect_all(s, (4 * 4 - 1) * 10)
}

fn random_sym(rng: &mut ChaCha8Rng) -> SymParams {
    loop {
        let (n, d, r) = (rng.gen_range(2..=10u64), rng.gen_range(1..=6u64), rng.gen_range(-5..=5i64));
        if let Ok(p) = SymParams::new(n, d, r) {
            return p;
        }
    }
}

fn uni(fam: &FamilySpec, n: u64) -> PolySeq<LaurentPoly> {
    match generate(fam, n as usize) {
        Ok(Sequence::Uni(f)) => f,
        _ => unreachable!("random families are univariate"),
    }
}

fn decide(s: &Sides<LaurentPoly>, n: u64) -> Result<bool, String> {
    s.decide(n, 2).map(|d| d.0).map_err(|e| e.to_string())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // adding c * Phi_n to the left side
    for trial in 0..50u64 {
        let p = random_sym(&mut rng);
        let c: i64 = loop {
            let c = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        let f = uni(&FamilySpec::random(trial, 3), p.n);
        let sides =
            if trial % 2 == 0 { thm_1_1_sides(&p, &f) } else { thm_1_2_sides(&p, &f) }.map_err(|e| e.to_string())?;
        if !decide(&sides, p.n)? {
            return Err(format!("unperturbed instance fails: {p:?}"));
        }
        let bump = (&cyclotomic(p.n).unwrap() * &sides.lhs.den).scale(&c.into());
        let lhs = RatExpr { num: &sides.lhs.num + &bump, den: sides.lhs.den.clone() };
        if decide(&Sides { lhs, rhs: sides.rhs }, p.n)? {
            return Err(format!("adding {c}*Phi_{} did not break {p:?}", p.n));
        }
    }
    // the wrong sign is the negation of the branch's sign; generic instances
    // exclude those whose two sides both vanish modulo Phi_n^2
    let zero = RatExpr::from_poly(LaurentPoly::zero());
    let (mut tried, mut failed) = (0, 0);
    while tried < 60 {
        let use_alpha = tried % 3 == 2;
        let (sides, n) = if use_alpha {
            let n = rng.gen_range(2..=9u64);
            let p = AlphaParams::new(n, rng.gen_range(0..n as i64), rng.gen_range(-3..=3)).unwrap();
            (thm_2_1_sides(&p, &uni(&FamilySpec::random(rng.gen(), 3), n)), n)
        } else {
            let p = random_sym(&mut rng);
            (thm_1_1_sides(&p, &uni(&FamilySpec::random(rng.gen(), 3), p.n)), p.n)
        };
        let sides = sides.map_err(|e| e.to_string())?;
        let rhs_zero = qcong::congruence::congruent(&sides.rhs, &zero, n, 2).map_err(|e| e.to_string())?;
        if rhs_zero {
            continue;
        }
        tried += 1;
        if !decide(&Sides { lhs: sides.lhs.neg(), rhs: sides.rhs }, n)? {
            failed += 1;
        }
    }
    if failed * 10 < tried * 9 {
        return Err(format!("wrong sign failed on only {failed}/{tried} generic instances"));
    }
    Ok(format!("50/50 Phi_n offsets detected; wrong sign fails on {failed}/{tried} generic instances"))
}

fn random_poly(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> LaurentPoly {
    let terms = rng.gen_range(0..6);
    LaurentPoly::from_terms(
        (0..terms).map(|_| (rng.gen_range(lo..=hi), Coeff::from_frac(rng.gen_range(-9..=9), rng.gen_range(1..=3)))),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let trials = 500;
    for _ in 0..trials {
        let (a, b, c) = (random_poly(&mut rng, -5, 5), random_poly(&mut rng, -5, 5), random_poly(&mut rng, -5, 5));
        let ring = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-a.clone())).is_zero();
        if !ring {
            return Err(format!("ring axioms fail on {a}, {b}, {c}"));
        }
        let t = [-3, -2, -1, 2, 3][rng.gen_range(0..5)];
        let sub = |p: &LaurentPoly| p.substitute_power(t).unwrap();
        if sub(&(&a * &b)) != &sub(&a) * &sub(&b) || sub(&(&a + &b)) != &sub(&a) + &sub(&b) {
            return Err(format!("q -> q^{t} is not multiplicative on {a}, {b}"));
        }
        let (x, y) = (random_poly(&mut rng, 0, 8), random_poly(&mut rng, 0, 8));
        if !y.is_zero() {
            let (quot, rem) = x.divrem(&y).map_err(|e| e.to_string())?;
            if &(&quot * &y) + &rem != x || rem.degree().is_some_and(|d| d >= y.degree().unwrap()) {
                return Err(format!("divrem fails on {x} / {y}"));
            }
        }
        if !x.is_zero() || !y.is_zero() {
            let (g, u, v) = LaurentPoly::ext_gcd(&x, &y).map_err(|e| e.to_string())?;
            if &(&u * &x) + &(&v * &y) != g {
                return Err(format!("Bezout fails on {x}, {y}"));
            }
        }
    }
    for n in 1..=50u64 {
        let prod: LaurentPoly = divisors(n).into_iter().map(|d| cyclotomic(d).unwrap()).product();
        if prod != LaurentPoly::q_pow(n as i64) - LaurentPoly::one() {
            return Err(format!("product of Phi_d over d | {n} is not q^{n} - 1"));
        }
        if n >= 2 {
            let phi = cyclotomic(n).unwrap();
            if phi.substitute_power(-1).unwrap().shift(totient(n) as i64) != phi {
                return Err(format!("Phi_{n} is not self-reciprocal"));
            }
        }
    }
    Ok(format!("{trials} random instances each of ring axioms, substitution, divrem, Bezout; cyclotomic product and reciprocal identities for n <= 50"))
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for workers in [1, 8] {
        let path = dir.path().join(format!("w{workers}.jsonl"));
        let mut cfg = SweepConfig::parse(
            "n = 2..8\nd = 1..3\nr = -3..3\ns = -1..1\n\
             families = ones, delta:1, random_poly:4:2, monomial_x\n\
             theorems = 1.1, 1.2, 2.1, guo_zeng, sun_p, lemmas, classical\n\
             classical_trials = 2\n",
        )
        .map_err(|e| e.to_string())?;
        cfg.workers = workers;
        cfg.output = Some(path.clone());
        let summary = qcong_cli::run_sweep(&cfg).map_err(|e| e.to_string())?;
        if !summary.success() {
            return Err(format!("determinism sweep has failures: {summary}"));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if outputs[0] != outputs[1] {
        return Err("reports differ between workers = 1 and workers = 8".into());
    }
    Ok(format!("{} byte-identical bytes at workers = 1 and workers = 8", outputs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Theorem 1.1 sweep", || symmetric_sweep("1.1")),
        ("Theorem 1.2 sweep", || symmetric_sweep("1.2")),
        ("Theorem 2.1 sweep with exact s = 0 identities", criterion_3),
        ("Guo-Zeng bivariate sweep", criterion_4),
        ("P_n analogue sweep", criterion_5),
        ("lemma suite", criterion_6),
        ("classical p-adic oracle", criterion_7),
        ("negative controls", criterion_8),
        ("kernel properties", criterion_9),
        ("determinism across worker counts", criterion_10),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS [{}] {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                all = false;
                println!("FAIL [{}] {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
