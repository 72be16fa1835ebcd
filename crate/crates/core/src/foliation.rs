//! Holomorphic vector-field germs `X = (X_1, ..., X_n)` with `X(0) = 0`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::milnor::{ideal_quotient_dim, MilnorValue, QuotientDim};
use crate::poly::{parse_poly, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Poly>,
}

impl VectorField {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let n = components
            .first()
            .map(Poly::nvars)
            .ok_or_else(|| Error::InvalidInput("vector field needs at least one component".into()))?;
        if components.len() != n {
            return Err(Error::VarCountMismatch { expected: n, found: components.len() });
        }
        for c in &components {
            if c.nvars() != n {
                return Err(Error::VarCountMismatch { expected: n, found: c.nvars() });
            }
            let k = c.constant_term();
            if !k.is_zero() {
                return Err(Error::NotAGerm(format!("component has constant term {k}")));
            }
        }
        if components.iter().all(Poly::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(VectorField { components })
    }

    pub fn parse<S: AsRef<str>>(texts: &[S], vars: &[S]) -> Result<Self> {
        let comps = texts.iter().map(|t| Ok(parse_poly(t.as_ref(), vars)?)).collect::<Result<Vec<_>>>()?;
        VectorField::new(comps)
    }

    /// `(df/dy, -df/dx)` for a plane germ.
    pub fn hamiltonian(f: &Poly) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::VarCountMismatch { expected: 2, found: f.nvars() });
        }
        VectorField::new(vec![f.derivative(1), -&f.derivative(0)])
    }

    pub fn gradient(f: &Poly) -> Result<Self> {
        VectorField::new(f.jacobian())
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }
}

/// Degree of the first nonzero jet.
pub fn vf_multiplicity(x: &VectorField) -> u32 {
    x.components
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.order().expect("nonzero component"))
        .min()
        .expect("validated nonzero field")
}

/// `dim O_n / <X_1, ..., X_n>`.
pub fn vf_milnor(x: &VectorField) -> Result<MilnorValue> {
    Ok(match ideal_quotient_dim(&x.components)? {
        QuotientDim::Finite(d) => MilnorValue::Finite(d as u64),
        QuotientDim::Infinite => MilnorValue::NotIsolated,
    })
}
