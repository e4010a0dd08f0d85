//! Sparse Laurent polynomials in `q` with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// A finitely supported map from integer exponents to nonzero rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Coeff>,
}

pub(crate) fn checked_exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("q-exponent overflow")
}

pub(crate) fn checked_exp_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("q-exponent overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<Coeff>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Coeff::one(), e)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<Coeff>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, &c.into());
        }
        out
    }

    /// Dense integer coefficients, `coeffs[i]` multiplying `q^i`.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Coeff::is_one)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> Coeff {
        self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.values().next_back()
    }

    /// True when no exponent is negative.
    pub fn is_ordinary(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Coeff::is_integer)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Coeff::is_one)
    }

    /// True when the polynomial is `c * q^e` for a single term.
    pub fn as_monomial(&self) -> Option<(i64, &Coeff)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: i64, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, e: i64, c: &Coeff) {
        self.add_term(e, &-c);
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if e == 0 {
            return self.clone();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (checked_exp_add(k, e), c.clone())).collect() }
    }

    /// The polynomial `a(q^t)`.
    pub fn substitute_power(&self, t: i64) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroSubstitution);
        }
        Ok(LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (checked_exp_mul(k, t), c.clone())).collect() })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// `self * (1 - q^e)`, the building block of every q-Pochhammer product.
    pub fn mul_one_minus_q_pow(&self, e: i64) -> Self {
        let mut out = self.clone();
        for (&k, c) in &self.terms {
            out.sub_term(checked_exp_add(k, e), c);
        }
        out
    }

    /// Exact value at a rational point. Panics on `q = 0` when negative
    /// exponents are present.
    pub fn eval(&self, q: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for (&e, c) in &self.terms {
            let qe = if e >= 0 {
                pow_coeff(q, e as u64)
            } else {
                assert!(!q.is_zero(), "evaluating negative powers at q = 0");
                pow_coeff(&q.recip(), e.unsigned_abs())
            };
            acc += &(c * &qe);
        }
        acc
    }

    /// Splits `self = q^v * p` where `p` has nonzero constant term.
    /// The zero polynomial maps to `(0, 0)`.
    pub fn split_valuation(&self) -> (i64, LaurentPoly) {
        match self.valuation() {
            None => (0, LaurentPoly::zero()),
            Some(v) => (v, self.shift(-v)),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to a monic polynomial. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => LaurentPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division of ordinary polynomials: `self = quot * b + rem`
    /// with `deg rem < deg b`.
    pub fn divrem(&self, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_ordinary() || !b.is_ordinary() {
            return Err(Error::NegativeExponent);
        }
        let db = b.degree().unwrap();
        match self.degree() {
            None => return Ok((LaurentPoly::zero(), LaurentPoly::zero())),
            Some(da) if da < db => return Ok((LaurentPoly::zero(), self.clone())),
            _ => {}
        }
        if b.is_monic() && b.is_integral() && self.is_integral() {
            if let Some(res) = divrem_monic_i128(self, b) {
                return Ok(res);
            }
            return Ok(divrem_monic_bigint(self, b));
        }
        Ok(divrem_rational(self, b))
    }

    /// Divisibility in the Laurent ring, where powers of `q` are units.
    pub fn is_divisible_by(&self, b: &LaurentPoly) -> Result<bool> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(true);
        }
        let (_, a) = self.split_valuation();
        let (_, b) = b.split_valuation();
        Ok(a.divrem(&b)?.1.is_zero())
    }

    /// Exact quotient `self / b` in the Laurent ring, or `None` when `b` does
    /// not divide `self`.
    pub fn exact_div(&self, b: &LaurentPoly) -> Result<Option<LaurentPoly>> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero()));
        }
        let (va, a) = self.split_valuation();
        let (vb, bb) = b.split_valuation();
        let (quot, rem) = a.divrem(&bb)?;
        Ok(rem.is_zero().then(|| quot.shift(va - vb)))
    }

    /// Monic gcd of two ordinary polynomials with Bézout cofactors:
    /// `u * a + v * b = g`.
    pub fn ext_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly, LaurentPoly)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !a.is_ordinary() || !b.is_ordinary() {
            return Err(Error::NegativeExponent);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (LaurentPoly::one(), LaurentPoly::zero());
        let (mut v0, mut v1) = (LaurentPoly::zero(), LaurentPoly::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1)?;
            let u2 = &u0 - &(&quot * &u1);
            let v2 = &v0 - &(&quot * &v1);
            r0 = std::mem::replace(&mut r1, rem);
            u0 = std::mem::replace(&mut u1, u2);
            v0 = std::mem::replace(&mut v1, v2);
        }
        let inv = r0.leading_coeff().unwrap().recip();
        Ok((r0.scale(&inv), u0.scale(&inv), v0.scale(&inv)))
    }

    /// Monic gcd of two ordinary polynomials.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        if r0.is_zero() && r1.is_zero() {
            return Err(Error::ZeroInput);
        }
        while !r1.is_zero() {
            let rem = r0.divrem(&r1)?.1;
            r0 = std::mem::replace(&mut r1, rem);
        }
        Ok(r0.monic())
    }

    /// Largest coefficient bit length, used to pick an arithmetic fast path.
    fn max_int_bits(&self) -> Option<u64> {
        let mut bits = 0;
        for c in self.terms.values() {
            if !c.is_integer() {
                return None;
            }
            bits = bits.max(c.numer().bits());
        }
        Some(bits)
    }
}

fn pow_coeff(base: &Coeff, mut e: u64) -> Coeff {
    let mut acc = Coeff::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

fn divrem_monic_i128(a: &LaurentPoly, b: &LaurentPoly) -> Option<(LaurentPoly, LaurentPoly)> {
    let da = a.degree().unwrap() as usize;
    let db = b.degree().unwrap() as usize;
    let mut rem = vec![0i128; da + 1];
    for (e, c) in a.terms() {
        rem[e as usize] = c.to_i128()?;
    }
    let bc: Vec<(usize, i128)> = b
        .terms()
        .filter(|&(e, _)| e as usize != db)
        .map(|(e, c)| c.to_i128().map(|v| (e as usize, v)))
        .collect::<Option<_>>()?;
    let mut quot = vec![0i128; da - db + 1];
    for i in (0..=da - db).rev() {
        let lead = rem[i + db];
        if lead == 0 {
            continue;
        }
        quot[i] = lead;
        rem[i + db] = 0;
        for &(e, c) in &bc {
            let t = lead.checked_mul(c)?;
            rem[i + e] = rem[i + e].checked_sub(t)?;
        }
    }
    let q = LaurentPoly::from_terms(quot.into_iter().enumerate().map(|(i, c)| (i as i64, BigInt::from(c))));
    let r = LaurentPoly::from_terms(rem.into_iter().enumerate().map(|(i, c)| (i as i64, BigInt::from(c))));
    Some((q, r))
}

fn divrem_monic_bigint(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let da = a.degree().unwrap() as usize;
    let db = b.degree().unwrap() as usize;
    let mut rem = vec![BigInt::zero(); da + 1];
    for (e, c) in a.terms() {
        rem[e as usize] = c.numer().clone();
    }
    let bc: Vec<(usize, BigInt)> =
        b.terms().filter(|&(e, _)| e as usize != db).map(|(e, c)| (e as usize, c.numer().clone())).collect();
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for i in (0..=da - db).rev() {
        let lead = std::mem::take(&mut rem[i + db]);
        if lead.is_zero() {
            continue;
        }
        for (e, c) in &bc {
            rem[i + e] -= &lead * c;
        }
        quot[i] = lead;
    }
    let q = LaurentPoly::from_terms(quot.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
    let r = LaurentPoly::from_terms(rem.into_iter().enumerate().map(|(i, c)| (i as i64, c)));
    (q, r)
}

fn divrem_rational(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let db = b.degree().unwrap();
    let lc_inv = b.leading_coeff().unwrap().recip();
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(dr) = rem.degree() {
        if dr < db {
            break;
        }
        let factor = rem.coeff(dr) * &lc_inv;
        let shift = dr - db;
        for (e, c) in b.terms() {
            rem.sub_term(e + shift, &(c * &factor));
        }
        quot.add_term(shift, &factor);
    }
    (quot, rem)
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if let Some((e, c)) = a.as_monomial() {
        return b.scale(c).shift(e);
    }
    if let Some((e, c)) = b.as_monomial() {
        return a.scale(c).shift(e);
    }
    let lo = checked_exp_add(a.valuation().unwrap(), b.valuation().unwrap());
    let hi = checked_exp_add(a.degree().unwrap(), b.degree().unwrap());
    let span = (hi - lo) as u128 + 1;
    let dense = span <= 8 * (a.len() as u128) * (b.len() as u128) + 64;

    if let (Some(ba), Some(bb)) = (a.max_int_bits(), b.max_int_bits()) {
        let len_bits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
        if ba + bb + len_bits < 126 {
            let av: Vec<(i64, i128)> = a.terms().map(|(e, c)| (e, c.to_i128().unwrap())).collect();
            let bv: Vec<(i64, i128)> = b.terms().map(|(e, c)| (e, c.to_i128().unwrap())).collect();
            if dense {
                let mut acc = vec![0i128; span as usize];
                for &(ea, ca) in &av {
                    for &(eb, cb) in &bv {
                        acc[(ea + eb - lo) as usize] += ca * cb;
                    }
                }
                return LaurentPoly {
                    terms: acc
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != 0)
                        .map(|(i, c)| (lo + i as i64, Coeff::from_int(c)))
                        .collect(),
                };
            }
            let mut acc: BTreeMap<i64, i128> = BTreeMap::new();
            for &(ea, ca) in &av {
                for &(eb, cb) in &bv {
                    *acc.entry(ea + eb).or_insert(0) += ca * cb;
                }
            }
            return LaurentPoly {
                terms: acc.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (e, Coeff::from_int(c))).collect(),
            };
        }
        if dense {
            let mut acc = vec![BigInt::zero(); span as usize];
            for (ea, ca) in a.terms() {
                for (eb, cb) in b.terms() {
                    acc[(ea + eb - lo) as usize] += ca.numer() * cb.numer();
                }
            }
            return LaurentPoly {
                terms: acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (lo + i as i64, Coeff::from_int(c)))
                    .collect(),
            };
        }
    }

    let mut out = LaurentPoly::zero();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            out.add_term(ea + eb, &(ca * cb));
        }
    }
    out
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_impl(self, rhs)
    }
}

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_impl(&self, &rhs)
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_impl(&self, rhs)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.sub_term(e, c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl From<Coeff> for LaurentPoly {
    fn from(c: Coeff) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}
