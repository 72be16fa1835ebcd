//! Milnor numbers and local ideal-quotient dimensions.
//!
//! The primary engine is a local standard basis (see [`standard_basis`]);
//! [`truncated_dim_oracle`] is an independent linear-algebra check and
//! [`milnor_fast_class_a`] the closed form for germs whose initial form has
//! an isolated singularity.

mod oracle;
mod standard_basis;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};

use standard_basis::quotient_basis;

pub use oracle::{truncated_dim_oracle, OracleDim, DEFAULT_DMAX};
pub use standard_basis::{
    standard_basis, standard_basis_with, LocalOrder, QuotientDim, Staircase, StandardBasisOptions, StandardBasisResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MilnorValue {
    Finite(u64),
    NotIsolated,
}

impl MilnorValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            MilnorValue::Finite(m) => Some(m),
            MilnorValue::NotIsolated => None,
        }
    }
}

impl std::fmt::Display for MilnorValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MilnorValue::Finite(m) => write!(f, "{m}"),
            MilnorValue::NotIsolated => f.write_str("not-isolated"),
        }
    }
}

/// Integers serialize as numbers, the non-isolated flag as a string.
impl Serialize for MilnorValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MilnorValue::Finite(m) => s.serialize_u64(*m),
            MilnorValue::NotIsolated => s.serialize_str("not-isolated"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    StandardBasis,
    TruncatedOracle,
    ClassAFastPath,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::StandardBasis => "standard-basis",
            Method::TruncatedOracle => "truncated-oracle",
            Method::ClassAFastPath => "class-a-fast-path",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorResult {
    pub mu: MilnorValue,
    pub method: Method,
    /// Basis of the Jacobian quotient when it is finite and was enumerated.
    pub staircase: Option<Vec<Monomial>>,
}

/// `dim O_n / <gens>`; infinite when the leading ideal misses a pure power.
pub fn ideal_quotient_dim(gens: &[Poly]) -> Result<QuotientDim> {
    Ok(match quotient_basis(gens, &StandardBasisOptions::default())? {
        Some(r) => r.dim(),
        None => QuotientDim::Infinite,
    })
}

fn check_germ(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let c = f.constant_term();
    if !c.is_zero() {
        return Err(Error::NotAGerm(c.to_string()));
    }
    Ok(())
}

/// Milnor number of `f` at the origin via a local standard basis of the
/// Jacobian ideal.
pub fn milnor_number(f: &Poly) -> Result<MilnorResult> {
    milnor_number_with(f, &StandardBasisOptions::default())
}

pub fn milnor_number_with(f: &Poly, opts: &StandardBasisOptions) -> Result<MilnorResult> {
    check_germ(f)?;
    let sb = quotient_basis(&f.jacobian(), opts)?.map(|r| r.staircase);
    Ok(match sb {
        Some(Staircase::Finite(s)) => {
            MilnorResult { mu: MilnorValue::Finite(s.len() as u64), method: Method::StandardBasis, staircase: Some(s) }
        }
        _ => MilnorResult { mu: MilnorValue::NotIsolated, method: Method::StandardBasis, staircase: None },
    })
}

pub fn is_isolated(f: &Poly) -> Result<bool> {
    Ok(milnor_number(f)?.mu.finite().is_some())
}

/// Whether the initial form of `f` has an isolated singularity at 0.
pub fn in_class_a(f: &Poly) -> Result<bool> {
    check_germ(f)?;
    let k = f.order()?;
    if k < 2 {
        return Err(Error::Precondition(format!("class A membership needs order >= 2, got {k}")));
    }
    is_isolated(&f.initial_form()?)
}

/// `(order(f) - 1)^n`, valid for class-A germs.
pub fn milnor_fast_class_a(f: &Poly) -> Result<u64> {
    if !in_class_a(f)? {
        return Err(Error::Precondition("germ is not in class A".into()));
    }
    let k = u64::from(f.order()?);
    Ok((k - 1).pow(f.nvars() as u32))
}

/// Local Milnor number of `f` at a critical point `p`.
pub fn local_milnor_at(f: &Poly, p: &[Coeff]) -> Result<MilnorResult> {
    if p.len() != f.nvars() {
        return Err(Error::VarCountMismatch { expected: f.nvars(), found: p.len() });
    }
    let grad: Vec<Coeff> = f.jacobian().iter().map(|d| d.eval(p)).collect::<Result<_>>()?;
    if grad.iter().any(|g| !g.is_zero()) {
        let shown: Vec<String> = grad.iter().map(ToString::to_string).collect();
        return Err(Error::NotCritical(shown.join(", ")));
    }
    let g = f.translate(p)?;
    let g = &g - &Poly::constant(g.nvars(), g.constant_term());
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    milnor_number(&g)
}
