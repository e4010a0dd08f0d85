use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

fn sign_of_power(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Parameters `(n, d, r)` of the base-`q^d` symmetric congruences, with the
/// derived residue `a = <-r/d>_n`, prefactor exponent
/// `E = d C(a+1, 2) + (a d + r)(n - 1 - 2a) / 2` and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymParams {
    pub n: u64,
    pub d: u64,
    pub r: i64,
    pub a: i64,
    pub exponent: i64,
    pub sign: i8,
    pub branch: Parity,
}

impl SymParams {
    pub fn new(n: u64, d: u64, r: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n must be at least 2, got {n}")));
        }
        if d < 1 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        if n.gcd(&d) != 1 {
            return Err(Error::InvalidParams(format!("gcd(n, d) = gcd({n}, {d}) is not 1")));
        }
        let (ni, di) = (n as i64, d as i64);
        let a = (0..ni).find(|a| (a * di + r).rem_euclid(ni) == 0).expect("d is invertible modulo n");
        let ad_r = a * di + r;
        debug_assert_eq!(ad_r % ni, 0);
        let twice = ad_r * (ni - 1 - 2 * a);
        if twice % 2 != 0 {
            return Err(Error::InvalidParams(format!("prefactor exponent is not an integer for n={n}, d={d}, r={r}")));
        }
        let exponent = di * binom2(a + 1) + twice / 2;
        let branch = Parity::of(n);
        let sign = match branch {
            Parity::Odd => sign_of_power(a),
            Parity::Even => sign_of_power(a + ad_r / ni),
        };
        Ok(SymParams { n, d, r, a, exponent, sign, branch })
    }

    pub fn named(&self) -> Vec<(&'static str, i64)> {
        vec![("n", self.n as i64), ("d", self.d as i64), ("r", self.r)]
    }
}

/// Parameters of the integer-top congruence: `alpha = a + s n` with
/// `0 <= a < n`, prefactor exponent `F = C(a+1, 2) + s n a - s C(n, 2)` and
/// sign `(-1)^a` (odd `n`) or `(-1)^{a+s}` (even `n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaParams {
    pub n: u64,
    pub a: i64,
    pub s: i64,
    pub alpha: i64,
    pub exponent: i64,
    pub sign: i8,
    pub branch: Parity,
}

impl AlphaParams {
    pub fn new(n: u64, a: i64, s: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n must be at least 2, got {n}")));
        }
        let ni = n as i64;
        if !(0..ni).contains(&a) {
            return Err(Error::InvalidParams(format!("a must lie in [0, {}], got {a}", ni - 1)));
        }
        let alpha = a + s * ni;
        let exponent = binom2(a + 1) + s * ni * a - s * binom2(ni);
        let branch = Parity::of(n);
        let sign = match branch {
            Parity::Odd => sign_of_power(a),
            Parity::Even => sign_of_power(a + s),
        };
        Ok(AlphaParams { n, a, s, alpha, exponent, sign, branch })
    }

    /// Splits an integer `alpha` as `a + s n`.
    pub fn from_alpha(n: u64, alpha: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n must be at least 2, got {n}")));
        }
        let ni = n as i64;
        Self::new(n, alpha.rem_euclid(ni), alpha.div_euclid(ni))
    }

    pub fn named(&self) -> Vec<(&'static str, i64)> {
        vec![("n", self.n as i64), ("a", self.a), ("s", self.s)]
    }
}
