//! Polynomials in an auxiliary variable `x` with Laurent-polynomial
//! coefficients in `q`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::laurent::{checked_exp_mul, LaurentPoly};
use crate::error::Result;

/// `sum_j c_j(q) x^j`. `x` commutes with `q` and is never substituted.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<u32, LaurentPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// `c(q) * x^j`.
    pub fn monomial(c: LaurentPoly, j: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(j, c);
        }
        BiPoly { coeffs }
    }

    /// `x^j`.
    pub fn x_pow(j: u32) -> Self {
        Self::monomial(LaurentPoly::one(), j)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (u32, LaurentPoly)>>(it: I) -> Self {
        let mut out = BiPoly::zero();
        for (j, c) in it {
            out.add_coeff(j, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: u32) -> LaurentPoly {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    /// Nonzero `(x-degree, coefficient)` pairs in ascending order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The `x^0` coefficient when nothing else is present.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        match self.x_degree() {
            None => Some(LaurentPoly::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    fn add_coeff(&mut self, j: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(j).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    /// Applies `f` to every `q`-coefficient, dropping any that become zero.
    pub fn map_q(&self, mut f: impl FnMut(&LaurentPoly) -> LaurentPoly) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|(&j, c)| (j, f(c))).filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn try_map_q(&self, mut f: impl FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (&j, c) in &self.coeffs {
            let v = f(c)?;
            if !v.is_zero() {
                coeffs.insert(j, v);
            }
        }
        Ok(BiPoly { coeffs })
    }

    /// The substitution `x -> x q^e`: coefficient `j` picks up `q^{e j}`.
    pub fn rescale_x(&self, e: i64) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|(&j, c)| (j, c.shift(checked_exp_mul(e, j as i64)))).collect() }
    }

    /// `self * (1 - x q^e)`.
    pub fn mul_one_minus_x_q_pow(&self, e: i64) -> Self {
        let mut out = self.clone();
        for (&j, c) in &self.coeffs {
            out.add_coeff(j + 1, &-c.shift(e));
        }
        out
    }
}

impl From<LaurentPoly> for BiPoly {
    fn from(p: LaurentPoly) -> Self {
        BiPoly::monomial(p, 0)
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&j, c) in &rhs.coeffs {
            self.add_coeff(j, c);
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (&j, c) in &rhs.coeffs {
            self.add_coeff(j, &-c);
        }
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.map_q(|c| -c)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_coeff(i + j, &(a * b));
            }
        }
        out
    }
}

impl Mul<&LaurentPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &LaurentPoly) -> BiPoly {
        self.map_q(|c| c * rhs)
    }
}
