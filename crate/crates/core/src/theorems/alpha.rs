//! The integer-top congruence
//! `sign q^F sum_k w_k f_k = sum_k w_k hat(f)_k (mod Phi_n^2)` with
//! `w_k = q^{k^2+k} [alpha over k] [-1-alpha over k]`, and its exact `s = 0`
//! identity.

use std::time::Instant;

use super::{sign_coeff, AlphaParams, CheckReport, Sides, TheoremId, MODULUS_POWER};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec, Sequence};
use crate::poly::{LaurentPoly, QPoly, RatExpr};
use crate::qcalc::qbinom_int;
use crate::transforms::{hat, PolySeq};

fn weights(alpha: i64, len: usize) -> Vec<LaurentPoly> {
    (0..len as i64).map(|k| (qbinom_int(alpha, k) * qbinom_int(-1 - alpha, k)).shift(k * k + k)).collect()
}

fn weighted_sums<T: QPoly>(alpha: i64, f: &PolySeq<T>) -> (T, T) {
    let h = hat(f);
    let mut plain = T::zero();
    let mut hatted = T::zero();
    for (k, w) in weights(alpha, f.len()).iter().enumerate() {
        plain += &f.entries[k].mul_q(w);
        hatted += &h.entries[k].mul_q(w);
    }
    (plain, hatted)
}

fn check_len<T: QPoly>(n: u64, f: &PolySeq<T>) -> Result<()> {
    if f.len() != n as usize {
        return Err(Error::InvalidParams(format!("sequence has {} entries, expected n = {n}", f.len())));
    }
    Ok(())
}

pub fn thm_2_1_sides<T: QPoly>(p: &AlphaParams, f: &PolySeq<T>) -> Result<Sides<T>> {
    check_len(p.n, f)?;
    let (plain, hatted) = weighted_sums(p.alpha, f);
    Ok(Sides {
        lhs: RatExpr { num: plain.shift(p.exponent).mul_q(&sign_coeff(p.sign)), den: f.den.clone() },
        rhs: RatExpr { num: hatted, den: f.den.clone() },
    })
}

/// Sides of `sum_k w_k hat(f)_k = (-1)^a q^{C(a+1,2)} sum_k w_k f_k` at
/// `alpha = a`, which hold as an exact identity.
pub fn s0_identity_sides<T: QPoly>(n: u64, a: i64, f: &PolySeq<T>) -> Result<Sides<T>> {
    if !(0..n as i64).contains(&a) {
        return Err(Error::Precondition(format!("a must lie in [0, {}], got {a}", n as i64 - 1)));
    }
    check_len(n, f)?;
    let (plain, hatted) = weighted_sums(a, f);
    let sign = if a % 2 == 0 { 1 } else { -1 };
    Ok(Sides {
        lhs: RatExpr { num: hatted, den: f.den.clone() },
        rhs: RatExpr { num: plain.shift(a * (a + 1) / 2).mul_q(&sign_coeff(sign)), den: f.den.clone() },
    })
}

pub fn check_thm_2_1(p: &AlphaParams, fam: &FamilySpec) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = CheckReport::bare(TheoremId::Thm21, p.named(), false);
    rep.family = Some(fam.to_string());
    rep.a = Some(p.a);
    rep.exponent = Some(p.exponent);
    rep.sign = Some(p.sign);
    rep.branch = Some(p.branch);
    let (holds, residual) = match generate(fam, p.n as usize)? {
        Sequence::Uni(f) => thm_2_1_sides(p, &f)?.decide(p.n, MODULUS_POWER)?,
        Sequence::Bi(f) => thm_2_1_sides(p, &f)?.decide(p.n, MODULUS_POWER)?,
    };
    rep.holds = holds;
    rep.residual = residual;
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// Whether the `s = 0` identity holds exactly (not merely as a congruence).
pub fn check_s0_identity(n: u64, a: i64, fam: &FamilySpec) -> Result<bool> {
    Ok(match generate(fam, n as usize)? {
        Sequence::Uni(f) => s0_identity_sides(n, a, &f)?.identical(),
        Sequence::Bi(f) => s0_identity_sides(n, a, &f)?.identical(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(check_thm_2_1(&AlphaParams::new(3, 1, 0).unwrap(), &FamilySpec::Ones).unwrap().holds);
        let rep = check_thm_2_1(&AlphaParams::new(4, 1, 1).unwrap(), &FamilySpec::random(7, 3)).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.sign, Some(1));
        assert!(check_thm_2_1(&AlphaParams::new(5, 2, 1).unwrap(), &FamilySpec::Ones).unwrap().holds);
    }

    #[test]
    fn s0_identity_examples() {
        assert!(check_s0_identity(5, 0, &FamilySpec::random(1, 3)).unwrap());
        assert!(check_s0_identity(5, 3, &FamilySpec::Ones).unwrap());
        assert!(check_s0_identity(7, 5, &FamilySpec::random(3, 4)).unwrap());
        assert!(check_s0_identity(4, 2, &FamilySpec::MonomialX).unwrap());
        assert!(check_s0_identity(5, 5, &FamilySpec::Ones).is_err());
    }

    #[test]
    fn a_zero_collapses_to_first_entry() {
        let Sequence::Uni(f) = generate(&FamilySpec::random(9, 2), 5).unwrap() else { panic!() };
        let s = s0_identity_sides(5, 0, &f).unwrap();
        assert_eq!(s.lhs.num, f.entries[0]);
        assert_eq!(s.rhs.num, f.entries[0]);
    }
}
