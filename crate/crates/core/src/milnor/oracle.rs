//! Degree-by-degree linear algebra for local quotient dimensions.
//!
//! Independent of the standard-basis engine: it only uses exact Gaussian
//! elimination on truncated multiples of the generators. For each `D` it
//! computes `q_D = dim O/(I + m^D)`. Once `q_D = q_{D-1}` we have
//! `m^{D-1} ⊆ I + m^D`, hence `m^{D-1} ⊆ I` by Nakayama, and the answer is
//! `q_{D-1}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use super::standard_basis::common_nvars;
use crate::coeff::Coeff;
use crate::error::Result;
use crate::poly::{Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleDim {
    Dim(usize),
    /// No stabilization up to the degree horizon; expected for ideals with
    /// infinite colength, inconclusive otherwise.
    Unstable,
}

pub const DEFAULT_DMAX: u32 = 32;

/// Returns `dim O_n / <gens>` once the truncated dimensions stabilize, or
/// [`OracleDim::Unstable`] if they have not by degree `dmax`.
pub fn truncated_dim_oracle(gens: &[Poly], dmax: u32) -> Result<OracleDim> {
    let nvars = common_nvars(gens)?;
    let gens: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let mut previous = 0usize;
    for d in 1..=dmax {
        let q = truncated_codim(nvars, &gens, d);
        if q == previous {
            return Ok(OracleDim::Dim(previous));
        }
        previous = q;
    }
    Ok(OracleDim::Unstable)
}

/// `dim O/(I + m^d)`, i.e. the codimension of the span of all multiples
/// `mono * g` truncated below degree `d`.
fn truncated_codim(nvars: usize, gens: &[&Poly], d: u32) -> usize {
    let monos = monomials_below(nvars, d);
    let index: HashMap<&[u32], usize> = monos.iter().enumerate().map(|(i, m)| (m.exponents(), i)).collect();
    let mut echelon = Echelon::default();
    for g in gens {
        let ord = g.order().expect("nonzero generator");
        if ord >= d {
            continue;
        }
        for m in monos.iter().filter(|m| m.degree() + ord < d) {
            let mut row = BTreeMap::new();
            for (t, c) in g.terms() {
                let prod = m * t;
                if prod.degree() < d {
                    row.insert(index[prod.exponents()], c.clone());
                }
            }
            echelon.insert(row);
            if echelon.rank() == monos.len() {
                return 0;
            }
        }
    }
    monos.len() - echelon.rank()
}

fn monomials_below(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(var: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=budget {
            cur[var] = e;
            rec(var + 1, budget - e, cur, out);
        }
        cur[var] = 0;
    }
    if d > 0 {
        rec(0, d - 1, &mut cur, &mut out);
    }
    out.sort();
    out
}

/// Row echelon form over `Q(i)` with sparse rows keyed by column.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, BTreeMap<usize, Coeff>>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut row: BTreeMap<usize, Coeff>) {
        while let Some((&col, lead)) = row.iter().next() {
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = lead.clone();
                    for (c, v) in pivot {
                        let entry = row.entry(*c).or_insert_with(Coeff::zero);
                        *entry -= &(&factor * v);
                        if entry.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("stored entries are nonzero");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(col, row);
                    return;
                }
            }
        }
    }
}
