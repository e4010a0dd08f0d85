//! Exact polynomial arithmetic: rational coefficients, Laurent polynomials in
//! `q`, polynomials in an auxiliary `x` over them, and quotients with a
//! Laurent-polynomial denominator.

mod bipoly;
mod coeff;
mod laurent;
mod ratexpr;
mod text;

use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

pub use bipoly::BiPoly;
pub use coeff::Coeff;
pub use laurent::LaurentPoly;
pub use ratexpr::RatExpr;
pub use text::{parse_bipoly, parse_ratexpr};

use crate::error::Result;

/// Values that are polynomial over `Q[q, 1/q]`: plain Laurent polynomials and
/// polynomials in `x` with Laurent coefficients. Transforms and theorem
/// checks are written once against this trait.
pub trait QPoly:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + From<LaurentPoly>
    + 'static
{
    fn zero() -> Self;

    fn is_zero(&self) -> bool;

    /// Multiplication by a polynomial in `q` alone.
    fn mul_q(&self, p: &LaurentPoly) -> Self;

    fn shift(&self, e: i64) -> Self;

    fn substitute_power(&self, t: i64) -> Result<Self>;

    /// The `q`-polynomials this value is made of: itself, or its
    /// `x`-coefficients. Congruences are decided on each separately.
    fn q_components(&self) -> Vec<LaurentPoly>;

    /// Applies `f` to every `q`-component.
    fn try_map_q(&self, f: &mut dyn FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self>;
}

impl QPoly for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn mul_q(&self, p: &LaurentPoly) -> Self {
        self * p
    }

    fn shift(&self, e: i64) -> Self {
        LaurentPoly::shift(self, e)
    }

    fn substitute_power(&self, t: i64) -> Result<Self> {
        LaurentPoly::substitute_power(self, t)
    }

    fn q_components(&self) -> Vec<LaurentPoly> {
        vec![self.clone()]
    }

    fn try_map_q(&self, f: &mut dyn FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        f(self)
    }
}

impl QPoly for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }

    fn mul_q(&self, p: &LaurentPoly) -> Self {
        self * p
    }

    fn shift(&self, e: i64) -> Self {
        self.map_q(|c| c.shift(e))
    }

    fn substitute_power(&self, t: i64) -> Result<Self> {
        self.try_map_q(|c| c.substitute_power(t))
    }

    fn q_components(&self) -> Vec<LaurentPoly> {
        self.coeffs().map(|(_, c)| c.clone()).collect()
    }

    fn try_map_q(&self, f: &mut dyn FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        BiPoly::try_map_q(self, f)
    }
}
