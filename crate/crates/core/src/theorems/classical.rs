//! The classical `p`-adic congruence
//! `sum_k C(alpha,k) C(-1-alpha,k) f_k = (-1)^<alpha>_p sum_k C(alpha,k) C(-1-alpha,k) hat(f)_k (mod p^2)`
//! for integer sequences and `p`-integral rational `alpha`, checked on exact
//! rationals.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CheckReport, TheoremId};
use crate::error::{Error, Result};

/// The exponent of `p` in a nonzero rational; `None` for zero.
pub fn p_adic_valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let count = |mut v: BigInt| {
        let mut c = 0i64;
        loop {
            let (quot, rem) = v.div_rem(&p);
            if !rem.is_zero() {
                return c;
            }
            v = quot;
            c += 1;
        }
    };
    Some(count(x.numer().abs()) - count(x.denom().abs()))
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

/// `C(alpha, k)` for `k = 0..len`.
fn binomials(alpha: &BigRational, len: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigRational::one();
    for k in 0..len {
        out.push(c.clone());
        c = c * (alpha - BigRational::from_integer(k.into())) / BigRational::from_integer((k + 1).into());
    }
    out
}

struct Outcome {
    residue: i64,
    valuation: Option<i64>,
}

fn evaluate(p: u64, alpha_num: i64, alpha_den: i64, f: &[i64]) -> Result<Outcome> {
    if !is_odd_prime(p) {
        return Err(Error::InvalidParams(format!("p must be an odd prime, got {p}")));
    }
    if alpha_den == 0 || alpha_den.rem_euclid(p as i64) == 0 {
        return Err(Error::InvalidParams(format!("alpha = {alpha_num}/{alpha_den} is not {p}-integral")));
    }
    let len = p as usize;
    if f.len() < len {
        return Err(Error::InvalidParams(format!("need at least {len} sequence entries, got {}", f.len())));
    }
    let pi = p as i64;
    let residue =
        (0..pi).find(|a| (a * alpha_den - alpha_num).rem_euclid(pi) == 0).expect("alpha_den is invertible modulo p");

    let alpha = BigRational::new(alpha_num.into(), alpha_den.into());
    let neg = -BigRational::one() - &alpha;
    let (ba, bn) = (binomials(&alpha, len), binomials(&neg, len));
    let f: Vec<BigInt> = f[..len].iter().map(|&v| BigInt::from(v)).collect();

    let mut plain = BigRational::zero();
    let mut hatted = BigRational::zero();
    let mut row = vec![BigInt::one()];
    for k in 0..len {
        let w = &ba[k] * &bn[k];
        let fhat: BigInt =
            row.iter().zip(&f).enumerate().map(|(j, (c, fj))| if j % 2 == 0 { c * fj } else { -(c * fj) }).sum();
        plain += &w * BigRational::from_integer(f[k].clone());
        hatted += &w * BigRational::from_integer(fhat);
        let mut next = vec![BigInt::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    if residue % 2 == 1 {
        hatted = -hatted;
    }
    for side in [&plain, &hatted] {
        if side.denom().is_multiple_of(&BigInt::from(p)) {
            return Err(Error::InvalidParams(format!("a side has a denominator divisible by {p}")));
        }
    }
    Ok(Outcome { residue, valuation: p_adic_valuation(&(plain - hatted), p) })
}

pub fn check_classical_sun(p: u64, alpha_num: i64, alpha_den: i64, f: &[i64]) -> Result<bool> {
    let o = evaluate(p, alpha_num, alpha_den, f)?;
    Ok(o.valuation.is_none_or(|v| v >= 2))
}

pub fn classical_report(p: u64, alpha_num: i64, alpha_den: i64, f: &[i64]) -> Result<CheckReport> {
    let start = Instant::now();
    let o = evaluate(p, alpha_num, alpha_den, f)?;
    let holds = o.valuation.is_none_or(|v| v >= 2);
    let mut rep = CheckReport::bare(
        TheoremId::Classical,
        vec![("p", p as i64), ("alpha_num", alpha_num), ("alpha_den", alpha_den)],
        holds,
    );
    rep.a = Some(o.residue);
    rep.sign = Some(if o.residue % 2 == 0 { 1 } else { -1 });
    rep.detail = Some(match o.valuation {
        None => "difference is 0".to_string(),
        Some(v) => format!("v_p(difference) = {v}"),
    });
    rep.elapsed = start.elapsed();
    Ok(rep)
}
