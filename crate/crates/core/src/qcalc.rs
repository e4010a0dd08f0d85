//! q-integers, q-Pochhammer symbols and q-binomial coefficients.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, LaurentPoly, RatExpr};

/// `[n]_q = (1 - q^n) / (1 - q)`, for any integer `n`.
pub fn q_int(n: i64) -> LaurentPoly {
    if n >= 0 {
        LaurentPoly::from_terms((0..n).map(|e| (e, 1i64)))
    } else {
        // [-m]_q = -q^{-m} [m]_q
        LaurentPoly::from_terms((n..0).map(|e| (e, -1i64)))
    }
}

/// `(q^r; q^d)_k = prod_{j=0}^{k-1} (1 - q^{r + j d})`; the empty product is 1.
pub fn qpoch(r: i64, d: i64, k: u32) -> LaurentPoly {
    (0..k as i64).fold(LaurentPoly::one(), |acc, j| acc.mul_one_minus_q_pow(r + j * d))
}

/// `(x q^s; q)_k = prod_{j=0}^{k-1} (1 - x q^{s + j})`.
pub fn qpoch_x(s: i64, k: u32) -> BiPoly {
    qpoch_x_base(s, 1, k)
}

/// `(x q^s; q^d)_k = prod_{j=0}^{k-1} (1 - x q^{s + j d})`.
pub fn qpoch_x_base(s: i64, d: i64, k: u32) -> BiPoly {
    (0..k as i64).fold(BiPoly::one(), |acc, j| acc.mul_one_minus_x_q_pow(s + j * d))
}

/// The Gaussian binomial `[n over k]_q` for `n >= 0`; zero outside `0..=n`.
pub fn gauss_binomial(n: u64, k: i64) -> LaurentPoly {
    qbinom_int(n as i64, k)
}

type BinomMemo = RwLock<HashMap<(i64, i64), LaurentPoly>>;

fn binom_memo() -> &'static BinomMemo {
    static MEMO: OnceLock<BinomMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `[alpha over k]_q = (q^{alpha-k+1}; q)_k / (q; q)_k` for any integer
/// `alpha`, as an exact Laurent polynomial; zero when `k < 0`.
pub fn qbinom_int(alpha: i64, k: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    if k == 0 {
        return LaurentPoly::one();
    }
    if let Some(v) = binom_memo().read().unwrap().get(&(alpha, k)) {
        return v.clone();
    }
    let k32 = u32::try_from(k).expect("q-binomial lower index out of range");
    let num = qpoch(alpha - k + 1, 1, k32);
    let den = qpoch(1, 1, k32);
    let value = num
        .exact_div(&den)
        .expect("(q;q)_k is nonzero")
        .unwrap_or_else(|| panic!("(q;q)_{k} does not divide the numerator of [{alpha} over {k}]_q"));
    binom_memo().write().unwrap().insert((alpha, k), value.clone());
    value
}

/// The q-binomial in base `q^d`: `[alpha over k]_{q^d}`.
pub fn qbinom_base(alpha: i64, k: i64, d: i64) -> Result<LaurentPoly> {
    qbinom_int(alpha, k).substitute_power(d)
}

/// `[t/d over k]_{q^d} = (q^{t - d(k-1)}; q^d)_k / (q^d; q^d)_k` for a rational
/// top `t/d`. Kept as a quotient since it is not a Laurent polynomial in
/// general.
pub fn qbinom_frac(t: i64, d: i64, k: i64) -> Result<RatExpr> {
    if d == 0 {
        return Err(Error::InvalidParams("q-binomial base exponent must be nonzero".into()));
    }
    if k < 0 {
        return Ok(RatExpr::from_poly(LaurentPoly::zero()));
    }
    let k32 = u32::try_from(k).map_err(|_| Error::InvalidParams("lower index too large".into()))?;
    RatExpr::new(qpoch(t - d * (k - 1), d, k32), qpoch(d, d, k32))
}
