//! The signed q-binomial transforms
//!
//! ```text
//! hat(f)_k   = sum_{j=0}^{k} (-1)^j q^{C(j+1,2)}   [k over j]_q f_j
//! tilde(f)_k = sum_{j=0}^{k} (-1)^j q^{C(j,2)-kj}  [k over j]_q f_j
//! ```
//!
//! Both are lower-triangular with unit diagonal (up to sign and a power of
//! `q`), so they are invertible over Laurent polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, QPoly, RatExpr};
use crate::qcalc::gauss_binomial;

/// A sequence `f_0, ..., f_{L-1}` over a shared denominator:
/// `f_k = entries[k] / den`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySeq<T: QPoly> {
    pub entries: Vec<T>,
    pub den: LaurentPoly,
}

impl<T: QPoly> PolySeq<T> {
    pub fn new(entries: Vec<T>) -> Self {
        PolySeq { entries, den: LaurentPoly::one() }
    }

    pub fn with_den(entries: Vec<T>, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(PolySeq { entries, den })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when the shared denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn get(&self, k: usize) -> RatExpr<T> {
        RatExpr { num: self.entries[k].clone(), den: self.den.clone() }
    }

    /// Every entry (and the denominator) evaluated at `q^t`.
    pub fn substitute_power(&self, t: i64) -> Result<Self> {
        Ok(PolySeq {
            entries: self.entries.iter().map(|e| e.substitute_power(t)).collect::<Result<_>>()?,
            den: self.den.substitute_power(t)?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    Hat,
    Tilde,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::Hat => "hat",
            TransformKind::Tilde => "tilde",
        })
    }
}

impl std::str::FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hat" => Ok(TransformKind::Hat),
            "tilde" => Ok(TransformKind::Tilde),
            other => Err(Error::InvalidParams(format!("unknown transform kind `{other}`"))),
        }
    }
}

/// Sign and `q`-exponent of the kernel entry `(k, j)`.
fn kernel_monomial(kind: TransformKind, k: i64, j: i64) -> (i64, i64) {
    let sign = if j % 2 == 0 { 1 } else { -1 };
    let exp = match kind {
        TransformKind::Hat => j * (j + 1) / 2,
        TransformKind::Tilde => j * (j - 1) / 2 - k * j,
    };
    (sign, exp)
}

/// The kernel entry `M[k][j]`; zero above the diagonal.
pub fn kernel(kind: TransformKind, k: usize, j: usize) -> LaurentPoly {
    if j > k {
        return LaurentPoly::zero();
    }
    let (sign, exp) = kernel_monomial(kind, k as i64, j as i64);
    gauss_binomial(k as u64, j as i64).shift(exp).scale(&sign.into())
}

/// The `L x L` lower-triangular kernel matrix.
pub fn transform_matrix(kind: TransformKind, len: usize) -> Vec<Vec<LaurentPoly>> {
    (0..len).map(|k| (0..len).map(|j| kernel(kind, k, j)).collect()).collect()
}

pub fn apply<T: QPoly>(kind: TransformKind, f: &PolySeq<T>) -> PolySeq<T> {
    let entries = (0..f.len())
        .map(|k| {
            let mut acc = T::zero();
            for (j, fj) in f.entries.iter().enumerate().take(k + 1) {
                acc += &fj.mul_q(&kernel(kind, k, j));
            }
            acc
        })
        .collect();
    PolySeq { entries, den: f.den.clone() }
}

pub fn hat<T: QPoly>(f: &PolySeq<T>) -> PolySeq<T> {
    apply(TransformKind::Hat, f)
}

pub fn tilde<T: QPoly>(f: &PolySeq<T>) -> PolySeq<T> {
    apply(TransformKind::Tilde, f)
}

/// Recovers `f` from `apply(kind, f)` by forward substitution.
pub fn invert<T: QPoly>(kind: TransformKind, g: &PolySeq<T>) -> PolySeq<T> {
    let mut out: Vec<T> = Vec::with_capacity(g.len());
    for k in 0..g.len() {
        let mut rest = g.entries[k].clone();
        for (j, fj) in out.iter().enumerate() {
            rest -= &fj.mul_q(&kernel(kind, k, j));
        }
        let (sign, exp) = kernel_monomial(kind, k as i64, k as i64);
        let inv_diag = LaurentPoly::monomial(sign, -exp);
        out.push(rest.mul_q(&inv_diag));
    }
    PolySeq { entries: out, den: g.den.clone() }
}

/// Checks `hat(f)_k(1/q) = tilde(g)_k(q)` with `g_j(q) = f_j(1/q)`, for every
/// `k`, as exact Laurent equalities.
pub fn hat_tilde_bridge_check(f: &PolySeq<LaurentPoly>) -> Result<bool> {
    let lhs = hat(f).substitute_power(-1)?;
    let rhs = tilde(&f.substitute_power(-1)?);
    Ok(lhs.entries.iter().zip(&rhs.entries).all(|(a, b)| {
        RatExpr { num: a.clone(), den: lhs.den.clone() }.equals(&RatExpr { num: b.clone(), den: rhs.den.clone() })
    }))
}
