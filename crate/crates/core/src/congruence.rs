//! Congruences modulo `Phi_n(q)^m`.
//!
//! Expressions are Laurent polynomials (or polynomials in `x` over them)
//! divided by Laurent polynomials coprime to `Phi_n`. Powers of `q` are units
//! modulo `Phi_n^m`, so a negative exponent is never an obstacle. Two
//! expressions are congruent when the numerator of their cross-multiplied
//! difference is divisible by `Phi_n^m`, coefficient-wise in `x`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclotomic::{cyclotomic_shared, CyclotomicModulus};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, QPoly, RatExpr};

/// A class in `Q[q] / (Phi_n(q)^m)`, held by its unique representative of
/// degree below `m * phi(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Residue {
    n: u64,
    m: u32,
    rep: LaurentPoly,
    modulus: LaurentPoly,
}

impl Residue {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same_ring(&self, other: &Residue) {
        assert!(
            self.n == other.n && self.m == other.m,
            "residues modulo Phi_{}^{} and Phi_{}^{} do not mix",
            self.n,
            self.m,
            other.n,
            other.m
        );
    }

    fn wrap(&self, p: LaurentPoly) -> Residue {
        Residue { n: self.n, m: self.m, rep: rem_ordinary(&p, &self.modulus), modulus: self.modulus.clone() }
    }
}

impl Add<&Residue> for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        self.wrap(&self.rep + &rhs.rep)
    }
}

impl Sub<&Residue> for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        self.wrap(&self.rep - &rhs.rep)
    }
}

impl Mul<&Residue> for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.same_ring(rhs);
        self.wrap(&self.rep * &rhs.rep)
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.wrap(-&self.rep)
    }
}

fn rem_ordinary(p: &LaurentPoly, modulus: &LaurentPoly) -> LaurentPoly {
    p.divrem(modulus).expect("ordinary dividend and nonzero modulus").1
}

/// Representative of `q^{-1}` modulo `modulus`: writing `modulus = c0 + q R`
/// gives `q (-R / c0) = 1`.
fn inverse_of_q(modulus: &LaurentPoly) -> LaurentPoly {
    let c0 = modulus.coeff(0);
    assert!(!c0.is_zero(), "q is not a unit modulo a multiple of q");
    let r = (modulus - &LaurentPoly::constant(c0.clone())).shift(-1);
    r.scale(&(-c0.recip()))
}

fn pow_mod(base: &LaurentPoly, mut e: u64, modulus: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut b = rem_ordinary(base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem_ordinary(&(&acc * &b), modulus);
        }
        b = rem_ordinary(&(&b * &b), modulus);
        e >>= 1;
    }
    rem_ordinary(&acc, modulus)
}

/// Canonical representative of `p` modulo `modulus` (which must have a
/// nonzero constant term), accepting negative exponents.
pub(crate) fn reduce_laurent(p: &LaurentPoly, modulus: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let (v, body) = p.split_valuation();
    let body = rem_ordinary(&body, modulus);
    let unit = if v >= 0 {
        pow_mod(&LaurentPoly::q_pow(1), v as u64, modulus)
    } else {
        pow_mod(&inverse_of_q(modulus), v.unsigned_abs(), modulus)
    };
    rem_ordinary(&(&body * &unit), modulus)
}

/// The class of `p` in `Q[q] / (Phi_n^m)`.
pub fn reduce(p: &LaurentPoly, n: u64, m: u32) -> Result<Residue> {
    let cm = CyclotomicModulus::new(n, m)?;
    let rep = reduce_laurent(p, &cm.modulus);
    Ok(Residue { n, m, rep, modulus: cm.modulus })
}

/// The inverse of `p` modulo `Phi_n^m`, which exists iff `gcd(p, Phi_n) = 1`.
pub fn invert(p: &LaurentPoly, n: u64, m: u32) -> Result<Residue> {
    let cm = CyclotomicModulus::new(n, m)?;
    let (v, body) = p.split_valuation();
    let body = rem_ordinary(&body, &cm.modulus);
    if body.is_zero() {
        return Err(Error::NotInvertible { n, m, gcd: cm.phi_n });
    }
    let (g, u, _) = LaurentPoly::ext_gcd(&body, &cm.modulus)?;
    if !g.is_one() {
        let gcd = LaurentPoly::gcd(&body, &cm.phi_n)?;
        return Err(Error::NotInvertible { n, m, gcd });
    }
    // p = q^v body, so p^{-1} = q^{-v} body^{-1}
    let rep = reduce_laurent(&u.shift(-v), &cm.modulus);
    Ok(Residue { n, m, rep, modulus: cm.modulus })
}

/// Whether `gcd(p, Phi_n) = 1` (powers of `q` ignored, being units).
pub fn coprime_certify(p: &LaurentPoly, n: u64) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let phi = cyclotomic_shared(n)?;
    let (_, body) = p.split_valuation();
    Ok(LaurentPoly::gcd(&body, &phi)?.is_one())
}

fn certify_denominators<N: QPoly>(lhs: &RatExpr<N>, rhs: &RatExpr<N>, n: u64) -> Result<()> {
    if !coprime_certify(&lhs.den, n)? {
        return Err(Error::NonCoprimeDenominator { n, den: lhs.den.clone() });
    }
    if rhs.den != lhs.den && !coprime_certify(&rhs.den, n)? {
        return Err(Error::NonCoprimeDenominator { n, den: rhs.den.clone() });
    }
    Ok(())
}

/// Whether the Laurent polynomial `p` is divisible by `Phi_n^m`.
pub fn divisible(p: &LaurentPoly, n: u64, m: u32) -> Result<bool> {
    let cm = CyclotomicModulus::new(n, m)?;
    p.is_divisible_by(&cm.modulus)
}

/// Decides `lhs = rhs (mod Phi_n^m)` for expressions whose denominators are
/// coprime to `Phi_n`.
pub fn congruent<N: QPoly>(lhs: &RatExpr<N>, rhs: &RatExpr<N>, n: u64, m: u32) -> Result<bool> {
    certify_denominators(lhs, rhs, n)?;
    let cm = CyclotomicModulus::new(n, m)?;
    for c in lhs.cross_difference(rhs).q_components() {
        if !c.is_divisible_by(&cm.modulus)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The cross-multiplied difference of `lhs` and `rhs` with each
/// `q`-component replaced by its canonical residue; zero exactly when the
/// congruence holds.
pub fn residual<N: QPoly>(lhs: &RatExpr<N>, rhs: &RatExpr<N>, n: u64, m: u32) -> Result<N> {
    certify_denominators(lhs, rhs, n)?;
    let cm = CyclotomicModulus::new(n, m)?;
    lhs.cross_difference(rhs).try_map_q(&mut |c| Ok(reduce_laurent(c, &cm.modulus)))
}

/// Convenience wrapper for plain Laurent polynomials.
pub fn congruent_poly(a: &LaurentPoly, b: &LaurentPoly, n: u64, m: u32) -> Result<bool> {
    divisible(&(a - b), n, m)
}
