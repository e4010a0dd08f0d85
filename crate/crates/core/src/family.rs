//! Named, reproducible generators of test sequences `f_0, ..., f_{n-1}`.
//!
//! Families are written `name[:param...]` on the command line and in
//! reports:
//!
//! | text                          | `f_k`                                   |
//! |-------------------------------|-----------------------------------------|
//! | `ones`                        | `1`                                     |
//! | `delta:m`                     | `1` if `k = m`, else `0`                |
//! | `monomial_q:c`                | `q^{c k}`                               |
//! | `random_poly:seed:deg[:bound]`| random integer polynomial, see below    |
//! | `monomial_x`                  | `x^k`                                   |
//! | `sun_p_x`                     | `q^k (x;q)_k / (q;q)_k`                 |
//!
//! `random_poly` draws, for `k = 0..n` and then `e = 0..=deg`, the
//! coefficient of `q^e` in `f_k` uniformly from `[-bound, bound]` (default
//! bound 5) using `rand::Rng::gen_range` on a ChaCha8 stream seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. ChaCha8 is specified bit-for-bit, so
//! the sequence is identical on every platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, LaurentPoly, QPoly};
use crate::qcalc::{qpoch, qpoch_x};
use crate::transforms::PolySeq;

pub const DEFAULT_COEFF_BOUND: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RandomFamilyConfig {
    pub seed: u64,
    pub degmax: u32,
    pub coeff_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Ones,
    Delta(u32),
    MonomialQ(i64),
    RandomPoly(RandomFamilyConfig),
    MonomialX,
    SunPX,
}

impl FamilySpec {
    pub fn random(seed: u64, degmax: u32) -> Self {
        FamilySpec::RandomPoly(RandomFamilyConfig { seed, degmax, coeff_bound: DEFAULT_COEFF_BOUND })
    }

    /// True for families whose entries involve `x`.
    pub fn is_bivariate(&self) -> bool {
        matches!(self, FamilySpec::MonomialX | FamilySpec::SunPX)
    }

    /// True for families whose entries are genuine quotients.
    pub fn is_rational(&self) -> bool {
        matches!(self, FamilySpec::SunPX)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Ones => f.write_str("ones"),
            FamilySpec::Delta(m) => write!(f, "delta:{m}"),
            FamilySpec::MonomialQ(c) => write!(f, "monomial_q:{c}"),
            FamilySpec::RandomPoly(cfg) if cfg.coeff_bound == DEFAULT_COEFF_BOUND => {
                write!(f, "random_poly:{}:{}", cfg.seed, cfg.degmax)
            }
            FamilySpec::RandomPoly(cfg) => write!(f, "random_poly:{}:{}:{}", cfg.seed, cfg.degmax, cfg.coeff_bound),
            FamilySpec::MonomialX => f.write_str("monomial_x"),
            FamilySpec::SunPX => f.write_str("sun_p_x"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let bad = || Error::UnknownFamily(s.to_string());
        let num = |i: usize| -> Result<i64> { args.get(i).ok_or_else(bad)?.trim().parse().map_err(|_| bad()) };
        let fam = match (name, args.len()) {
            ("ones", 0) => FamilySpec::Ones,
            ("delta", 1) => FamilySpec::Delta(u32::try_from(num(0)?).map_err(|_| bad())?),
            ("monomial_q", 1) => FamilySpec::MonomialQ(num(0)?),
            ("random_poly", 2 | 3) => {
                let seed = u64::try_from(num(0)?).map_err(|_| bad())?;
                let degmax = u32::try_from(num(1)?).map_err(|_| bad())?;
                let coeff_bound = if args.len() == 3 {
                    u32::try_from(num(2)?).ok().filter(|&b| b >= 1).ok_or_else(bad)?
                } else {
                    DEFAULT_COEFF_BOUND
                };
                FamilySpec::RandomPoly(RandomFamilyConfig { seed, degmax, coeff_bound })
            }
            ("monomial_x", 0) => FamilySpec::MonomialX,
            ("sun_p_x", 0) => FamilySpec::SunPX,
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

/// A generated sequence, univariate or bivariate.
#[derive(Clone, Debug, PartialEq)]
pub enum Sequence {
    Uni(PolySeq<LaurentPoly>),
    Bi(PolySeq<BiPoly>),
}

impl Sequence {
    pub fn len(&self) -> usize {
        match self {
            Sequence::Uni(s) => s.len(),
            Sequence::Bi(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn den(&self) -> &LaurentPoly {
        match self {
            Sequence::Uni(s) => &s.den,
            Sequence::Bi(s) => &s.den,
        }
    }
}

fn random_entries(cfg: &RandomFamilyConfig, n: usize) -> Vec<LaurentPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let b = cfg.coeff_bound as i64;
    (0..n).map(|_| LaurentPoly::from_terms((0..=cfg.degmax as i64).map(|e| (e, rng.gen_range(-b..=b))))).collect()
}

/// The first `n` entries of a family.
pub fn generate(fam: &FamilySpec, n: usize) -> Result<Sequence> {
    if n < 2 {
        return Err(Error::Precondition(format!("sequence length must be at least 2, got {n}")));
    }
    let uni = |entries: Vec<LaurentPoly>| Ok(Sequence::Uni(PolySeq::new(entries)));
    match fam {
        FamilySpec::Ones => uni(vec![LaurentPoly::one(); n]),
        FamilySpec::Delta(m) => {
            uni((0..n).map(|k| if k == *m as usize { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        }
        FamilySpec::MonomialQ(c) => uni((0..n as i64).map(|k| LaurentPoly::q_pow(c * k)).collect()),
        FamilySpec::RandomPoly(cfg) => uni(random_entries(cfg, n)),
        FamilySpec::MonomialX => Ok(Sequence::Bi(PolySeq::new((0..n as u32).map(BiPoly::x_pow).collect()))),
        FamilySpec::SunPX => {
            // over the shared denominator (q;q)_{n-1}
            let last = (n - 1) as u32;
            let entries =
                (0..n as u32).map(|k| &qpoch_x(0, k).shift(k as i64) * &qpoch(k as i64 + 1, 1, last - k)).collect();
            Ok(Sequence::Bi(PolySeq::with_den(entries, qpoch(1, 1, last))?))
        }
    }
}
