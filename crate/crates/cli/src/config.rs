//! Sweep configuration.
//!
//! A config file is a list of `key = value` lines. Blank lines and text after
//! `#` are ignored. Integer lists mix single values and inclusive ranges, e.g.
//! `r = -5..5` or `n = 3, 5, 7..9`. Keys:
//!
//! | key                | value                                      | default            |
//! |--------------------|--------------------------------------------|--------------------|
//! | `n`                | integer list                               | `2..6`             |
//! | `d`                | integer list                               | `1..3`             |
//! | `r`                | integer list                               | `-3..3`            |
//! | `a`                | integer list (out-of-range values dropped) | `0..n-1` per `n`   |
//! | `s`                | integer list                               | `-1..1`            |
//! | `families`         | family list, e.g. `ones, random_poly:1:3`  | `ones`             |
//! | `theorems`         | subset of `1.1, 1.2, 2.1, guo_zeng, sun_p, lemmas, classical` | `1.1` |
//! | `workers`          | integer >= 1                               | `$QCONG_WORKERS`, else the number of CPUs |
//! | `output`           | path, or `-` for stdout                    | `-`                |
//! | `format`           | `jsonl` or `csv`                           | `jsonl`            |
//! | `timing`           | `true` / `false`: per-case wall time       | `false`            |
//! | `classical_primes` | integer list                               | `3, 5, 7, 11`      |
//! | `classical_alphas` | list of integers or fractions `p/q`        | `2, 1/2, -1/3, 5/2`|
//! | `classical_trials` | integer >= 1                               | `10`               |
//! | `classical_seed`   | integer >= 0                               | `0`                |

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use qcong::family::FamilySpec;

pub const WORKERS_ENV: &str = "QCONG_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepTheorem {
    Thm11,
    Thm12,
    Thm21,
    GuoZeng,
    SunP,
    Lemmas,
    Classical,
}

impl SweepTheorem {
    pub const ALL: [SweepTheorem; 7] = [
        SweepTheorem::Thm11,
        SweepTheorem::Thm12,
        SweepTheorem::Thm21,
        SweepTheorem::GuoZeng,
        SweepTheorem::SunP,
        SweepTheorem::Lemmas,
        SweepTheorem::Classical,
    ];

    fn as_str(self) -> &'static str {
        match self {
            SweepTheorem::Thm11 => "1.1",
            SweepTheorem::Thm12 => "1.2",
            SweepTheorem::Thm21 => "2.1",
            SweepTheorem::GuoZeng => "guo_zeng",
            SweepTheorem::SunP => "sun_p",
            SweepTheorem::Lemmas => "lemmas",
            SweepTheorem::Classical => "classical",
        }
    }
}

impl fmt::Display for SweepTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SweepTheorem {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepTheorem::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| {
            anyhow!("unknown theorem `{s}` (expected one of 1.1, 1.2, 2.1, guo_zeng, sun_p, lemmas, classical)")
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    JsonLines,
    Csv,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" | "json-lines" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            _ => bail!("unknown output format `{s}` (expected jsonl or csv)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub n: Vec<i64>,
    pub d: Vec<i64>,
    pub r: Vec<i64>,
    /// `None` means every `a` in `0..n`.
    pub a: Option<Vec<i64>>,
    pub s: Vec<i64>,
    pub families: Vec<FamilySpec>,
    pub theorems: BTreeSet<SweepTheorem>,
    pub workers: usize,
    /// `None` writes to stdout.
    pub output: Option<PathBuf>,
    pub format: Format,
    pub timing: bool,
    pub classical_primes: Vec<i64>,
    pub classical_alphas: Vec<(i64, i64)>,
    pub classical_trials: u64,
    pub classical_seed: u64,
}

fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w| w >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n: (2..=6).collect(),
            d: (1..=3).collect(),
            r: (-3..=3).collect(),
            a: None,
            s: (-1..=1).collect(),
            families: vec![FamilySpec::Ones],
            theorems: [SweepTheorem::Thm11].into(),
            workers: default_workers(),
            output: None,
            format: Format::JsonLines,
            timing: false,
            classical_primes: vec![3, 5, 7, 11],
            classical_alphas: vec![(2, 1), (1, 2), (-1, 3), (5, 2)],
            classical_trials: 10,
            classical_seed: 0,
        }
    }
}

/// Parses `3, 5, 7..9` into `[3, 5, 7, 8, 9]`, keeping first occurrences.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: i64 = lo.trim().parse().with_context(|| format!("bad range start in `{item}`"))?;
            let hi: i64 = hi.trim().parse().with_context(|| format!("bad range end in `{item}`"))?;
            if hi < lo {
                bail!("empty range `{item}`");
            }
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().with_context(|| format!("bad integer `{item}`"))?);
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|v| seen.insert(*v));
    Ok(out)
}

fn parse_fraction(s: &str) -> Result<(i64, i64)> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse()?, b.trim().parse()?),
        None => (s.trim().parse()?, 1),
    };
    if den == 0 {
        bail!("zero denominator in `{s}`");
    }
    Ok((num, den))
}

fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => bail!("expected true or false, got `{s}`"),
    }
}

fn list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

impl SweepConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let ctx = || format!("invalid value for `{key}`: `{value}`");
        match key.trim() {
            "n" => self.n = parse_int_list(value).with_context(ctx)?,
            "d" => self.d = parse_int_list(value).with_context(ctx)?,
            "r" => self.r = parse_int_list(value).with_context(ctx)?,
            "a" => self.a = Some(parse_int_list(value).with_context(ctx)?),
            "s" => self.s = parse_int_list(value).with_context(ctx)?,
            "families" => {
                self.families = list(value).map(str::parse).collect::<Result<_, _>>().with_context(ctx)?;
            }
            "theorems" => self.theorems = list(value).map(str::parse).collect::<Result<_>>().with_context(ctx)?,
            "workers" => {
                let w: usize = value.parse().with_context(ctx)?;
                if w == 0 {
                    bail!("workers must be at least 1");
                }
                self.workers = w;
            }
            "output" => self.output = if value == "-" { None } else { Some(PathBuf::from(value)) },
            "format" => self.format = value.parse()?,
            "timing" => self.timing = parse_bool(value).with_context(ctx)?,
            "classical_primes" => self.classical_primes = parse_int_list(value).with_context(ctx)?,
            "classical_alphas" => {
                self.classical_alphas = list(value).map(parse_fraction).collect::<Result<_>>().with_context(ctx)?;
            }
            "classical_trials" => self.classical_trials = value.parse().with_context(ctx)?,
            "classical_seed" => self.classical_seed = value.parse().with_context(ctx)?,
            other => bail!("unknown config key `{other}`"),
        }
        Ok(())
    }

    /// Applies a `key=value` override as given on the command line.
    pub fn set_pair(&mut self, pair: &str) -> Result<()> {
        let (k, v) = pair.split_once('=').ok_or_else(|| anyhow!("expected key=value, got `{pair}`"))?;
        self.set(k, v)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SweepConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| anyhow!("line {}: expected `key = value`", i + 1))?;
            cfg.set(k, v).with_context(|| format!("line {}", i + 1))?;
        }
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }
}
