//! Both sides of each symmetric q-congruence, assembled from the kernel and
//! decided modulo `Phi_n(q)^2`; plus the auxiliary identities and
//! congruences the symmetric ones rest on, and the classical `p`-adic
//! statement they specialise to.
//!
//! Every check is a pure function of its parameters.

mod alpha;
mod classical;
mod lemmas;
mod params;
mod symmetric;

use std::fmt;
use std::time::Duration;

pub use alpha::{check_s0_identity, check_thm_2_1, s0_identity_sides, thm_2_1_sides};
pub use classical::{check_classical_sun, classical_report, p_adic_valuation};
pub use lemmas::{
    check_chu_vandermonde, check_even_sign_fact, check_lemma_sn_binom, check_lemma_sn_minus1, check_negation_bridge,
};
pub use params::{AlphaParams, Parity, SymParams};
pub use symmetric::{
    check_guo_zeng, check_sun_p_analogue, check_thm_1_1, check_thm_1_2, sun_p_sides, thm_1_1_sides, thm_1_2_sides,
};

use crate::congruence::{congruent, residual};
use crate::error::Result;
use crate::poly::{QPoly, RatExpr};

/// Every modulus in the symmetric congruences is `Phi_n(q)^2`.
pub const MODULUS_POWER: u32 = 2;

/// Which statement a report is about. The declaration order is the report
/// sort order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Thm11,
    Thm12,
    Thm21,
    S0Identity,
    GuoZeng,
    SunP,
    LemmaSnBinom,
    LemmaSnMinus1,
    EvenSign,
    ChuVandermonde,
    NegationBridge,
    Classical,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Thm11,
        TheoremId::Thm12,
        TheoremId::Thm21,
        TheoremId::S0Identity,
        TheoremId::GuoZeng,
        TheoremId::SunP,
        TheoremId::LemmaSnBinom,
        TheoremId::LemmaSnMinus1,
        TheoremId::EvenSign,
        TheoremId::ChuVandermonde,
        TheoremId::NegationBridge,
        TheoremId::Classical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm11 => "thm1.1",
            TheoremId::Thm12 => "thm1.2",
            TheoremId::Thm21 => "thm2.1",
            TheoremId::S0Identity => "s0-identity",
            TheoremId::GuoZeng => "guo-zeng",
            TheoremId::SunP => "sun-p",
            TheoremId::LemmaSnBinom => "lemma-sn",
            TheoremId::LemmaSnMinus1 => "lemma-sn-minus1",
            TheoremId::EvenSign => "even-sign",
            TheoremId::ChuVandermonde => "chu-vandermonde",
            TheoremId::NegationBridge => "negation-bridge",
            TheoremId::Classical => "classical",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| crate::Error::InvalidParams(format!("unknown theorem id `{s}`")))
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub theorem: TheoremId,
    /// Named integer parameters in a fixed order, e.g. `n, d, r`.
    pub params: Vec<(&'static str, i64)>,
    pub family: Option<String>,
    pub holds: bool,
    /// `<-r/d>_n` or `<alpha>_n`.
    pub a: Option<i64>,
    /// The `q`-exponent of the prefactor (`E` or `F`).
    pub exponent: Option<i64>,
    pub sign: Option<i8>,
    pub branch: Option<Parity>,
    /// Canonical text of the reduced difference when the check fails.
    pub residual: Option<String>,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub(crate) fn bare(theorem: TheoremId, params: Vec<(&'static str, i64)>, holds: bool) -> Self {
        CheckReport {
            theorem,
            params,
            family: None,
            holds,
            a: None,
            exponent: None,
            sign: None,
            branch: None,
            residual: None,
            detail: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.holds { "PASS" } else { "FAIL" }, self.theorem)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(fam) = &self.family {
            write!(f, " family={fam}")?;
        }
        if let Some(a) = self.a {
            write!(f, " a={a}")?;
        }
        if let Some(e) = self.exponent {
            let name = if self.theorem == TheoremId::Thm21 { "F" } else { "E" };
            write!(f, " {name}={e}")?;
        }
        if let Some(s) = self.sign {
            write!(f, " sign={}", if s > 0 { "+1" } else { "-1" })?;
        }
        if let Some(b) = self.branch {
            write!(f, " branch={b}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        if let Some(r) = &self.residual {
            write!(f, "\n  residual: {r}")?;
        }
        Ok(())
    }
}

/// Left- and right-hand sides of a congruence.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides<N: QPoly> {
    pub lhs: RatExpr<N>,
    pub rhs: RatExpr<N>,
}

impl<N: QPoly> Sides<N> {
    /// Decides the congruence modulo `Phi_n^m`, returning the residual text on
    /// failure.
    pub fn decide(&self, n: u64, m: u32) -> Result<(bool, Option<String>)> {
        if congruent(&self.lhs, &self.rhs, n, m)? {
            Ok((true, None))
        } else {
            Ok((false, Some(residual(&self.lhs, &self.rhs, n, m)?.to_string())))
        }
    }

    /// Exact equality of the two sides.
    pub fn identical(&self) -> bool {
        self.lhs.equals(&self.rhs)
    }
}

pub(crate) fn sign_coeff(sign: i8) -> crate::poly::LaurentPoly {
    crate::poly::LaurentPoly::constant(sign as i64)
}
