//! Cyclotomic polynomials and their powers as congruence moduli.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

type Memo = RwLock<HashMap<u64, Arc<LaurentPoly>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient of zero");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `Phi_n(q)`, computed as `(q^n - 1) / prod_{d | n, d < n} Phi_d(q)` with
/// every intermediate memoized.
pub fn cyclotomic(n: u64) -> Result<LaurentPoly> {
    cyclotomic_shared(n).map(|p| (*p).clone())
}

pub(crate) fn cyclotomic_shared(n: u64) -> Result<Arc<LaurentPoly>> {
    if n == 0 {
        return Err(Error::InvalidParams("cyclotomic index must be at least 1".into()));
    }
    if let Some(p) = memo().read().unwrap().get(&n) {
        return Ok(Arc::clone(p));
    }
    let mut acc = LaurentPoly::from_terms([(0, -1i64), (n as i64, 1)]);
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let phi_d = cyclotomic_shared(d)?;
        acc = acc.exact_div(&phi_d)?.expect("Phi_d divides q^n - 1 for every d | n");
    }
    let acc = Arc::new(acc);
    memo().write().unwrap().entry(n).or_insert_with(|| Arc::clone(&acc));
    Ok(acc)
}

/// `Phi_n(q)^m` together with its base.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclotomicModulus {
    pub n: u64,
    pub m: u32,
    pub phi_n: LaurentPoly,
    pub modulus: LaurentPoly,
}

impl CyclotomicModulus {
    pub fn new(n: u64, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("modulus power must be at least 1".into()));
        }
        let phi_n = cyclotomic(n)?;
        let modulus = phi_n.pow(m);
        Ok(CyclotomicModulus { n, m, phi_n, modulus })
    }

    /// Degree of the full modulus, `m * phi(n)`.
    pub fn degree(&self) -> i64 {
        self.modulus.degree().unwrap()
    }
}
