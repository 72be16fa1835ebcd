//! Exact invariants of isolated complex hypersurface singularities.

pub mod coeff;
pub mod corpus;
pub mod deformation;
pub mod equisingularity;
pub mod error;
pub mod foliation;
pub mod milnor;
pub mod monodromy;
pub mod poly;

pub use coeff::Coeff;
pub use error::{Error, ParseError, Result};
pub use poly::{parse_poly, LineDirection, Monomial, Poly};
