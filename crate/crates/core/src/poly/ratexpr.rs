use std::fmt;

use super::{LaurentPoly, QPoly};
use crate::error::{Error, Result};

/// `num / den` with a nonzero Laurent-polynomial denominator. Not kept in
/// reduced form; comparisons cross-multiply.
#[derive(Clone, Debug, PartialEq)]
pub struct RatExpr<N: QPoly = LaurentPoly> {
    pub num: N,
    pub den: LaurentPoly,
}

impl<N: QPoly> RatExpr<N> {
    pub fn new(num: N, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatExpr { num, den })
    }

    pub fn from_poly(num: N) -> Self {
        RatExpr { num, den: LaurentPoly::one() }
    }

    pub fn mul_q(&self, p: &LaurentPoly) -> Self {
        RatExpr { num: self.num.mul_q(p), den: self.den.clone() }
    }

    pub fn shift(&self, e: i64) -> Self {
        RatExpr { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn neg(&self) -> Self {
        RatExpr { num: -self.num.clone(), den: self.den.clone() }
    }

    /// Both numerator and denominator evaluated at `q^t`.
    pub fn substitute_power(&self, t: i64) -> Result<Self> {
        Ok(RatExpr { num: self.num.substitute_power(t)?, den: self.den.substitute_power(t)? })
    }

    /// `self.num * other.den - other.num * self.den`, the numerator of the
    /// difference over the product of denominators. When the denominators
    /// coincide the common factor is dropped.
    pub fn cross_difference(&self, other: &Self) -> N {
        if self.den == other.den {
            let mut d = self.num.clone();
            d -= &other.num;
            d
        } else {
            let mut d = self.num.mul_q(&other.den);
            d -= &other.num.mul_q(&self.den);
            d
        }
    }

    /// Exact equality of the represented rational functions.
    pub fn equals(&self, other: &Self) -> bool {
        self.cross_difference(other).is_zero()
    }
}

impl<N: QPoly> fmt::Display for RatExpr<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}\n/\n{}", self.num, self.den)
        }
    }
}
