//! The base-`q^d` symmetric congruences, their `x`-specialisations, and the
//! q-analogue of the sum `P_n`.
//!
//! With `T_k = (q^r;q^d)_k (q^{d-r};q^d)_k / (q^d;q^d)_k^2`, every sum is
//! written over the shared denominator `(q^d;q^d)_{n-1}^2`, so term `k`
//! contributes the numerator
//! `(q^r;q^d)_k (q^{d-r};q^d)_k ((q^{d(k+1)};q^d)_{n-1-k})^2`.

use std::time::Instant;

use super::{sign_coeff, CheckReport, Sides, SymParams, TheoremId, MODULUS_POWER};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec, Sequence};
use crate::poly::{BiPoly, LaurentPoly, QPoly, RatExpr};
use crate::qcalc::{qbinom_frac, qpoch, qpoch_x, qpoch_x_base};
use crate::transforms::{hat, tilde, PolySeq};

/// Numerators of `T_k` over `(q^d;q^d)_{n-1}^2`, and that denominator.
fn weight_numerators(p: &SymParams) -> (Vec<LaurentPoly>, LaurentPoly) {
    let (n, d, r) = (p.n as i64, p.d as i64, p.r);
    let full = qpoch(d, d, (n - 1) as u32);
    let mut head = LaurentPoly::one();
    let mut out = Vec::with_capacity(n as usize);
    for k in 0..n {
        if k > 0 {
            head = head.mul_one_minus_q_pow(r + (k - 1) * d).mul_one_minus_q_pow(d - r + (k - 1) * d);
        }
        let tail = qpoch(d * (k + 1), d, (n - 1 - k) as u32);
        out.push(&head * &(&tail * &tail));
    }
    (out, &full * &full)
}

fn check_len<T: QPoly>(p: &SymParams, f: &PolySeq<T>) -> Result<()> {
    if f.len() != p.n as usize {
        return Err(Error::InvalidParams(format!("sequence has {} entries, expected n = {}", f.len(), p.n)));
    }
    Ok(())
}

/// `q^E sum_k T_k q^{dk} f_k(q^d)` against `sign sum_k T_k q^{dk} hat(f)_k(q^d)`.
pub fn thm_1_1_sides<T: QPoly>(p: &SymParams, f: &PolySeq<T>) -> Result<Sides<T>> {
    check_len(p, f)?;
    let d = p.d as i64;
    let (weights, den) = weight_numerators(p);
    let fd = f.substitute_power(d)?;
    let hd = hat(f).substitute_power(d)?;
    let mut lhs = T::zero();
    let mut rhs = T::zero();
    for (k, w) in weights.iter().enumerate() {
        let w = w.shift(d * k as i64);
        lhs += &fd.entries[k].mul_q(&w);
        rhs += &hd.entries[k].mul_q(&w);
    }
    let den = &den * &fd.den;
    Ok(Sides {
        lhs: RatExpr { num: lhs.shift(p.exponent), den: den.clone() },
        rhs: RatExpr { num: rhs.mul_q(&sign_coeff(p.sign)), den },
    })
}

/// `sum_k T_k f_k(q^d)` against `sign q^E sum_k T_k tilde(f)_k(q^d)`.
pub fn thm_1_2_sides<T: QPoly>(p: &SymParams, f: &PolySeq<T>) -> Result<Sides<T>> {
    check_len(p, f)?;
    let d = p.d as i64;
    let (weights, den) = weight_numerators(p);
    let fd = f.substitute_power(d)?;
    let td = tilde(f).substitute_power(d)?;
    let mut lhs = T::zero();
    let mut rhs = T::zero();
    for (k, w) in weights.iter().enumerate() {
        lhs += &fd.entries[k].mul_q(w);
        rhs += &td.entries[k].mul_q(w);
    }
    let den = &den * &fd.den;
    Ok(Sides {
        lhs: RatExpr { num: lhs, den: den.clone() },
        rhs: RatExpr { num: rhs.shift(p.exponent).mul_q(&sign_coeff(p.sign)), den },
    })
}

fn sym_report(id: TheoremId, p: &SymParams, family: Option<String>) -> CheckReport {
    let mut rep = CheckReport::bare(id, p.named(), false);
    rep.family = family;
    rep.a = Some(p.a);
    rep.exponent = Some(p.exponent);
    rep.sign = Some(p.sign);
    rep.branch = Some(p.branch);
    rep
}

fn decide_family(
    id: TheoremId,
    p: &SymParams,
    fam: &FamilySpec,
    build_uni: fn(&SymParams, &PolySeq<LaurentPoly>) -> Result<Sides<LaurentPoly>>,
    build_bi: fn(&SymParams, &PolySeq<BiPoly>) -> Result<Sides<BiPoly>>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = sym_report(id, p, Some(fam.to_string()));
    let (holds, residual) = match generate(fam, p.n as usize)? {
        Sequence::Uni(f) => build_uni(p, &f)?.decide(p.n, MODULUS_POWER)?,
        Sequence::Bi(f) => build_bi(p, &f)?.decide(p.n, MODULUS_POWER)?,
    };
    rep.holds = holds;
    rep.residual = residual;
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// The base-`q^d` congruence with `hat`, for polynomial families.
pub fn check_thm_1_1(p: &SymParams, fam: &FamilySpec) -> Result<CheckReport> {
    if fam.is_rational() {
        return Err(Error::InvalidParams(format!("{} takes polynomial families only, got `{fam}`", TheoremId::Thm11)));
    }
    decide_family(TheoremId::Thm11, p, fam, thm_1_1_sides, thm_1_1_sides)
}

/// The base-`q^d` congruence with `tilde`; quotient families allowed.
pub fn check_thm_1_2(p: &SymParams, fam: &FamilySpec) -> Result<CheckReport> {
    decide_family(TheoremId::Thm12, p, fam, thm_1_2_sides, thm_1_2_sides)
}

/// The `f_k = x^k` case: first confirms `hat(x^k) = (xq;q)_k` exactly, then
/// decides the congruence coefficient-wise in `x`.
pub fn check_guo_zeng(p: &SymParams) -> Result<CheckReport> {
    let start = Instant::now();
    let mut rep = sym_report(TheoremId::GuoZeng, p, Some(FamilySpec::MonomialX.to_string()));
    let Sequence::Bi(f) = generate(&FamilySpec::MonomialX, p.n as usize)? else {
        unreachable!("monomial_x is bivariate");
    };
    let h = hat(&f);
    if let Some(k) = (0..f.len()).find(|&k| h.entries[k] != qpoch_x(1, k as u32)) {
        rep.detail = Some(format!("hat(x^k) differs from (xq;q)_k at k = {k}"));
        rep.elapsed = start.elapsed();
        return Ok(rep);
    }
    let (holds, residual) = thm_1_1_sides(p, &f)?.decide(p.n, MODULUS_POWER)?;
    rep.holds = holds;
    rep.residual = residual;
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// `P_n(-r/d, x; q^d)` against `sign q^E P_n(-r/d, x q^{-d}; q^{-d})`, with
/// `P_n(alpha, x; q) = sum_k q^{k^2+k} [alpha over k] [-1-alpha over k] (x;q)_k / (q;q)_k`
/// built from its definition.
pub fn sun_p_sides(p: &SymParams) -> Result<Sides<BiPoly>> {
    if p.n.is_multiple_of(2) || p.n < 3 {
        return Err(Error::InvalidParams(format!("the P_n congruence needs odd n >= 3, got {}", p.n)));
    }
    let (n, d, r) = (p.n as i64, p.d as i64, p.r);
    let mut num = BiPoly::zero();
    for k in 0..n {
        // [-r/d over k] and [(r-d)/d over k], both in base q^d over (q^d;q^d)_k
        let upper = qbinom_frac(-r, d, k)?;
        let lower = qbinom_frac(r - d, d, k)?;
        let tail = qpoch(d * (k + 1), d, (n - 1 - k) as u32);
        let scalar = (&upper.num * &lower.num).shift(d * (k * k + k)) * &tail * &tail * &tail;
        num += &(&qpoch_x_base(0, d, k as u32) * &scalar);
    }
    let full = qpoch(d, d, (n - 1) as u32);
    let lhs = RatExpr::new(num, full.pow(3))?;
    let flipped = lhs.substitute_power(-1)?;
    let rhs_num = flipped.num.rescale_x(-d).shift(p.exponent).mul_q(&sign_coeff(p.sign));
    Ok(Sides { lhs, rhs: RatExpr::new(rhs_num, flipped.den)? })
}

pub fn check_sun_p_analogue(p: &SymParams) -> Result<CheckReport> {
    let start = Instant::now();
    let sides = sun_p_sides(p)?;
    let mut rep = sym_report(TheoremId::SunP, p, None);
    let (holds, residual) = sides.decide(p.n, MODULUS_POWER)?;
    rep.holds = holds;
    rep.residual = residual;
    rep.elapsed = start.elapsed();
    Ok(rep)
}
