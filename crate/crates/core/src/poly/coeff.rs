//! Exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coeff(BigRational);

impl Coeff {
    pub fn zero() -> Self {
        Coeff(BigRational::zero())
    }

    pub fn one() -> Self {
        Coeff(BigRational::one())
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Coeff(BigRational::from_integer(v.into()))
    }

    /// `num / den`; panics if `den` is zero.
    pub fn from_frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Coeff(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coeff(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Coeff(self.0.abs())
    }

    /// The value as an `i128` when it is an integer that fits.
    pub fn to_i128(&self) -> Option<i128> {
        if self.0.is_integer() {
            self.0.numer().to_i128()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        Coeff(self.0.recip())
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_int(v)
    }
}

impl From<i32> for Coeff {
    fn from(v: i32) -> Self {
        Coeff::from_int(v)
    }
}

impl From<BigInt> for Coeff {
    fn from(v: BigInt) -> Self {
        Coeff::from_int(v)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coeff {
    type Err = String;

    /// Accepts `7`, `-3`, `+2`, `3/2`, `-10/4` (reduced on construction).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, String> {
            let t = t.trim();
            let t = t.strip_prefix('+').unwrap_or(t);
            if t.is_empty() || !t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
                return Err(format!("not an integer: `{t}`"));
            }
            t.parse::<BigInt>().map_err(|e| e.to_string())
        };
        match s.split_once('/') {
            None => Ok(Coeff::from_int(parse_int(s)?)),
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Coeff::from_frac(parse_int(n)?, d))
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Coeff> for &Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &Coeff) -> Coeff {
                Coeff((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: Coeff) -> Coeff {
                Coeff(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Coeff> for Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &Coeff) -> Coeff {
                Coeff(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff(-self.0)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff(-&self.0)
    }
}
