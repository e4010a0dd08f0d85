//! Grid sweeps: expand a config into independent cases, run them on a worker
//! pool, and emit the records sorted by (theorem, parameters, family).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use num_integer::Integer;
use qcong::family::FamilySpec;
use qcong::theorems::{self, AlphaParams, SymParams, TheoremId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{Format, SweepConfig, SweepTheorem};
use crate::record::{write_csv, write_jsonl, CaseRecord};

/// Entries of the random sequences fed to the classical check lie in
/// `[-CLASSICAL_BOUND, CLASSICAL_BOUND]`.
pub const CLASSICAL_BOUND: i64 = 20;

#[derive(Clone, Debug)]
pub enum Case {
    Thm11(SymParams, FamilySpec),
    Thm12(SymParams, FamilySpec),
    Thm21(AlphaParams, FamilySpec),
    S0Identity(u64, i64, FamilySpec),
    GuoZeng(SymParams),
    SunP(SymParams),
    LemmaSn(u64, i64, i64),
    LemmaSnMinus1(u64, i64, i64),
    EvenSign(u64),
    Classical { p: u64, num: i64, den: i64, trial: u64, f: Vec<i64> },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    /// Cases run (`passed + failed`).
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Grid cells outside a statement's hypotheses; not run, not emitted.
    pub skipped: usize,
    pub wall: Duration,
}

impl SweepSummary {
    pub fn success(&self) -> bool {
        self.failed == 0
    }
}

impl std::fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "total={} passed={} failed={} skipped={} wall={:.3}s",
            self.total,
            self.passed,
            self.failed,
            self.skipped,
            self.wall.as_secs_f64()
        )
    }
}

fn sym(n: i64, d: i64, r: i64) -> Option<SymParams> {
    if n < 2 || d < 1 || n.gcd(&d) != 1 {
        return None;
    }
    SymParams::new(n as u64, d as u64, r).ok()
}

fn is_odd_prime(p: i64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|i| i * i <= p).all(|i| p % i != 0)
}

/// Expands the grid into cases; the second value counts skipped cells.
pub fn expand(cfg: &SweepConfig) -> (Vec<Case>, usize) {
    let mut cases = Vec::new();
    let mut skipped = 0;
    let sym_grid = || {
        cfg.n
            .iter()
            .flat_map(move |&n| cfg.d.iter().flat_map(move |&d| cfg.r.iter().map(move |&r| (n, d, r, sym(n, d, r)))))
    };
    for &thm in &cfg.theorems {
        match thm {
            SweepTheorem::Thm11 | SweepTheorem::Thm12 => {
                for (_, _, _, p) in sym_grid() {
                    for fam in &cfg.families {
                        match p {
                            Some(p) if thm == SweepTheorem::Thm12 => cases.push(Case::Thm12(p, fam.clone())),
                            Some(p) if !fam.is_rational() => cases.push(Case::Thm11(p, fam.clone())),
                            _ => skipped += 1,
                        }
                    }
                }
            }
            SweepTheorem::Thm21 => {
                for &n in &cfg.n {
                    let a_values: Vec<i64> = match &cfg.a {
                        Some(v) => v.clone(),
                        None => (0..n.max(0)).collect(),
                    };
                    for &a in &a_values {
                        for &s in &cfg.s {
                            for fam in &cfg.families {
                                let Ok(p) = AlphaParams::new(n.max(0) as u64, a, s) else {
                                    skipped += 1;
                                    continue;
                                };
                                cases.push(Case::Thm21(p, fam.clone()));
                                if s == 0 {
                                    cases.push(Case::S0Identity(p.n, a, fam.clone()));
                                }
                            }
                        }
                    }
                }
            }
            SweepTheorem::GuoZeng => {
                for (_, _, _, p) in sym_grid() {
                    match p {
                        Some(p) => cases.push(Case::GuoZeng(p)),
                        None => skipped += 1,
                    }
                }
            }
            SweepTheorem::SunP => {
                for (n, _, _, p) in sym_grid() {
                    match p {
                        Some(p) if n % 2 == 1 => cases.push(Case::SunP(p)),
                        _ => skipped += 1,
                    }
                }
            }
            SweepTheorem::Lemmas => {
                for &n in &cfg.n {
                    if n < 2 {
                        skipped += 1;
                        continue;
                    }
                    let nu = n as u64;
                    for &s in &cfg.s {
                        for j in 1..n {
                            if s != 0 {
                                cases.push(Case::LemmaSn(nu, s, j));
                            } else {
                                skipped += 1;
                            }
                            cases.push(Case::LemmaSnMinus1(nu, s, j));
                        }
                    }
                    if n % 2 == 0 {
                        cases.push(Case::EvenSign(nu));
                    }
                }
            }
            SweepTheorem::Classical => {
                for &p in &cfg.classical_primes {
                    for &(num, den) in &cfg.classical_alphas {
                        if !is_odd_prime(p) || den % p == 0 {
                            skipped += 1;
                            continue;
                        }
                        for trial in 0..cfg.classical_trials {
                            let mut rng = ChaCha8Rng::seed_from_u64(cfg.classical_seed.wrapping_add(trial));
                            let f = (0..p).map(|_| rng.gen_range(-CLASSICAL_BOUND..=CLASSICAL_BOUND)).collect();
                            cases.push(Case::Classical { p: p as u64, num, den, trial, f });
                        }
                    }
                }
            }
        }
    }
    (cases, skipped)
}

fn bool_record(
    id: TheoremId,
    params: Vec<(&str, i64)>,
    family: Option<String>,
    out: qcong::Result<bool>,
) -> CaseRecord {
    let mut rec = CaseRecord::new(id, params, family);
    match out {
        Ok(holds) => rec.holds = holds,
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

fn report_record(
    id: TheoremId,
    params: Vec<(&str, i64)>,
    family: Option<String>,
    out: qcong::Result<theorems::CheckReport>,
) -> CaseRecord {
    match out {
        Ok(rep) => CaseRecord::from_report(rep),
        Err(e) => {
            let mut rec = CaseRecord::new(id, params, family);
            rec.error = Some(e.to_string());
            rec
        }
    }
}

/// Runs one case. Errors become failing records carrying the message.
pub fn run_case(case: &Case) -> CaseRecord {
    let fam = |f: &FamilySpec| Some(f.to_string());
    match case {
        Case::Thm11(p, f) => report_record(TheoremId::Thm11, p.named(), fam(f), theorems::check_thm_1_1(p, f)),
        Case::Thm12(p, f) => report_record(TheoremId::Thm12, p.named(), fam(f), theorems::check_thm_1_2(p, f)),
        Case::Thm21(p, f) => report_record(TheoremId::Thm21, p.named(), fam(f), theorems::check_thm_2_1(p, f)),
        Case::S0Identity(n, a, f) => bool_record(
            TheoremId::S0Identity,
            vec![("n", *n as i64), ("a", *a)],
            fam(f),
            theorems::check_s0_identity(*n, *a, f),
        ),
        Case::GuoZeng(p) => report_record(TheoremId::GuoZeng, p.named(), None, theorems::check_guo_zeng(p)),
        Case::SunP(p) => report_record(TheoremId::SunP, p.named(), None, theorems::check_sun_p_analogue(p)),
        Case::LemmaSn(n, s, j) => bool_record(
            TheoremId::LemmaSnBinom,
            vec![("n", *n as i64), ("s", *s), ("j", *j)],
            None,
            theorems::check_lemma_sn_binom(*n, *s, *j),
        ),
        Case::LemmaSnMinus1(n, s, j) => bool_record(
            TheoremId::LemmaSnMinus1,
            vec![("n", *n as i64), ("s", *s), ("j", *j)],
            None,
            theorems::check_lemma_sn_minus1(*n, *s, *j),
        ),
        Case::EvenSign(n) => {
            bool_record(TheoremId::EvenSign, vec![("n", *n as i64)], None, theorems::check_even_sign_fact(*n))
        }
        Case::Classical { p, num, den, trial, f } => {
            let params = vec![("p", *p as i64), ("alpha_num", *num), ("alpha_den", *den), ("trial", *trial as i64)];
            let mut rec = report_record(
                TheoremId::Classical,
                params.clone(),
                None,
                theorems::classical_report(*p, *num, *den, f),
            );
            rec.params = params.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            rec
        }
    }
}

/// Runs every case on a pool of `cfg.workers` threads and returns the records
/// in report order.
pub fn run_cases(cfg: &SweepConfig, cases: &[Case]) -> Result<Vec<CaseRecord>> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().context("building the worker pool")?;
    let timing = cfg.timing;
    let mut records: Vec<CaseRecord> = pool.install(|| {
        cases
            .par_iter()
            .map(|c| {
                let start = Instant::now();
                let rec = run_case(c);
                if timing {
                    rec.with_elapsed(start.elapsed())
                } else {
                    rec
                }
            })
            .collect()
    });
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(records)
}

pub fn write_records<W: Write>(out: W, format: Format, records: &[CaseRecord]) -> Result<()> {
    let mut out = BufWriter::new(out);
    match format {
        Format::JsonLines => write_jsonl(&mut out, records)?,
        Format::Csv => write_csv(&mut out, records)?,
    }
    out.flush()?;
    Ok(())
}

/// Runs the sweep, writing the records to `out`.
pub fn run_sweep_to<W: Write>(cfg: &SweepConfig, out: W) -> Result<(SweepSummary, Vec<CaseRecord>)> {
    let start = Instant::now();
    let (cases, skipped) = expand(cfg);
    let records = run_cases(cfg, &cases)?;
    write_records(out, cfg.format, &records)?;
    let passed = records.iter().filter(|r| r.holds).count();
    let summary =
        SweepSummary { total: records.len(), passed, failed: records.len() - passed, skipped, wall: start.elapsed() };
    Ok((summary, records))
}

/// Runs the sweep, writing to the configured output (stdout when unset).
/// The output file is created before any case runs.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    let summary = match &cfg.output {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
            run_sweep_to(cfg, file)?.0
        }
        None => run_sweep_to(cfg, std::io::stdout().lock())?.0,
    };
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(text: &str) -> SweepConfig {
        let mut c = SweepConfig::parse(text).unwrap();
        c.workers = 2;
        c
    }

    #[test]
    fn small_grid() {
        let c = cfg("n = 3, 5\nd = 1\nr = 0, 1\nfamilies = ones\ntheorems = 1.1");
        let (s, recs) = run_sweep_to(&c, Vec::new()).unwrap();
        assert_eq!((s.total, s.passed, s.failed, s.skipped), (4, 4, 0, 0));
        assert_eq!(recs[0].params, vec![("n".to_string(), 3), ("d".to_string(), 1), ("r".to_string(), 0)]);
    }

    #[test]
    fn non_coprime_cell_skipped() {
        let c = cfg("n = 4\nd = 1, 2\nr = 1\ntheorems = 1.1, sun_p");
        let (s, _) = run_sweep_to(&c, Vec::new()).unwrap();
        // 1.1: (4,1) runs, (4,2) skipped; sun_p: both skipped (even n)
        assert_eq!((s.total, s.skipped), (1, 3));
    }

    #[test]
    fn rational_family_skipped_for_thm_1_1() {
        let c = cfg("n = 3\nd = 1\nr = 1\nfamilies = sun_p_x\ntheorems = 1.1, 1.2");
        let (s, recs) = run_sweep_to(&c, Vec::new()).unwrap();
        assert_eq!((s.total, s.skipped, s.failed), (1, 1, 0));
        assert_eq!(recs[0].theorem, "thm1.2");
    }

    #[test]
    fn alpha_sweep_emits_identity_records_at_s0() {
        let c = cfg("n = 3\ns = 0, 1\ntheorems = 2.1");
        let (s, recs) = run_sweep_to(&c, Vec::new()).unwrap();
        assert_eq!(s.total, 3 * 2 + 3);
        assert!(s.success());
        assert_eq!(recs.iter().filter(|r| r.theorem == "s0-identity").count(), 3);
    }
}
