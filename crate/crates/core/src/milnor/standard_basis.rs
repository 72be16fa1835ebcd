//! Standard bases of ideals in the localization of `Q(i)[x_1..x_n]` at the
//! origin, via Mora's tangent-cone normal form.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};

/// Anti-graded reverse-lexicographic order: lower total degree is larger,
/// so `1` is the largest monomial. Ties are broken as in degrevlex: `a > b`
/// when the last nonzero entry of `a - b` is negative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LocalOrder;

impl LocalOrder {
    /// `Greater` means `a` is the larger (more leading) monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match b.degree().cmp(&a.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn leading_monomial(&self, f: &Poly) -> Option<Monomial> {
        f.terms().map(|(m, _)| m).max_by(|a, b| self.cmp(a, b)).cloned()
    }
}

/// Monomials outside the leading ideal. They form a vector-space basis of
/// the local quotient ring when there are finitely many.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Dimension of a local quotient `O_n / I` over the complex numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(d) => Some(d),
            QuotientDim::Infinite => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StandardBasisResult {
    pub basis: Vec<Poly>,
    pub leading_ideal_gens: Vec<Monomial>,
    pub staircase: Staircase,
}

impl StandardBasisResult {
    pub fn dim(&self) -> QuotientDim {
        match &self.staircase {
            Staircase::Finite(s) => QuotientDim::Finite(s.len()),
            Staircase::Infinite => QuotientDim::Infinite,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StandardBasisOptions {
    /// Maximum number of critical pairs reduced before giving up.
    pub max_pairs: usize,
    /// Maximum number of term operations spent in reductions before
    /// giving up.
    pub max_work: usize,
    /// Largest truncation degree tried before falling back to Mora's
    /// normal form on the untruncated ideal.
    pub max_truncation_degree: u32,
}

impl Default for StandardBasisOptions {
    fn default() -> Self {
        StandardBasisOptions { max_pairs: 200_000, max_work: 20_000_000, max_truncation_degree: 96 }
    }
}

struct Budget {
    pairs: usize,
    work: usize,
    max_pairs: usize,
    max_work: usize,
}

impl Budget {
    fn new(opts: &StandardBasisOptions) -> Self {
        Budget { pairs: 0, work: 0, max_pairs: opts.max_pairs, max_work: opts.max_work }
    }

    fn pair(&mut self) -> Result<()> {
        self.pairs += 1;
        if self.pairs > self.max_pairs {
            return Err(Error::IterationCap { limit: self.max_pairs });
        }
        Ok(())
    }

    /// Charges one reduction step, weighted by coefficient size in 64-bit
    /// limbs so that coefficient growth counts against the budget.
    fn reduction(&mut self, h: &LocalPoly, g: &LocalPoly) -> Result<()> {
        self.work += h.size() + g.size();
        if self.work > self.max_work {
            return Err(Error::IterationCap { limit: self.max_work });
        }
        Ok(())
    }
}

/// Polynomial with terms sorted by [`LocalOrder`], leading term first.
#[derive(Clone, Debug)]
struct LocalPoly {
    terms: Vec<(Monomial, Coeff)>,
    max_degree: u32,
}

impl LocalPoly {
    fn from_poly(f: &Poly) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|x, y| LocalOrder.cmp(&y.0, &x.0));
        LocalPoly::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<(Monomial, Coeff)>) -> Self {
        let max_degree = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        LocalPoly { terms, max_degree }
    }

    fn to_poly(&self, nvars: usize) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())))
            .expect("terms share the variable count")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    fn lc(&self) -> &Coeff {
        &self.terms[0].1
    }

    fn ecart(&self) -> u32 {
        self.lm().map_or(0, |m| self.max_degree - m.degree())
    }

    fn zero() -> Self {
        LocalPoly { terms: Vec::new(), max_degree: 0 }
    }

    fn size(&self) -> usize {
        let limbs = |r: &num_rational::BigRational| (r.numer().bits() + r.denom().bits()) as usize / 64 + 1;
        self.terms.iter().map(|(_, c)| limbs(c.re()) + limbs(c.im())).sum()
    }

    /// Drops every term of degree `>= bound`.
    fn truncate(&mut self, bound: u32) {
        if self.max_degree < bound {
            return;
        }
        self.terms.retain(|(m, _)| m.degree() < bound);
        self.max_degree = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
    }

    /// Drops every non-leading term of degree `>= bound`.
    fn truncate_tail(&mut self, bound: u32) {
        if self.max_degree < bound || self.terms.is_empty() {
            return;
        }
        let lead = self.terms[0].0.degree();
        let mut first = true;
        self.terms.retain(|(m, _)| std::mem::replace(&mut first, false) || m.degree() < bound);
        self.max_degree = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(lead);
    }

    fn make_monic(&mut self) {
        if let Some(inv) = self.terms.first().and_then(|(_, c)| c.inv()) {
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c = &*c * &inv;
                }
            }
        }
    }

    /// `self - c * m * other`; multiplication by a monomial keeps the local
    /// order, so this is a plain merge.
    fn sub_scaled(&self, c: &Coeff, m: &Monomial, other: &LocalPoly) -> LocalPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(mb, cb)| (m * mb, -(c * cb))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => LocalOrder.cmp(ma, mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (ma, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let s = ca + &cb;
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                }
            }
        }
        LocalPoly::from_sorted(out)
    }

    /// Cancels the leading term of `self` against `g`, whose leading
    /// monomial must divide it.
    fn reduce_by(&self, g: &LocalPoly) -> LocalPoly {
        let m = g.lm().unwrap().quotient_of(self.lm().unwrap()).expect("leading monomial divides");
        let c = self.lc() / g.lc();
        self.sub_scaled(&c, &m, g)
    }
}

fn s_poly(f: &LocalPoly, g: &LocalPoly) -> LocalPoly {
    let (lf, lg) = (f.lm().unwrap(), g.lm().unwrap());
    let l = lf.lcm(lg);
    let mf = lf.quotient_of(&l).unwrap();
    let mg = lg.quotient_of(&l).unwrap();
    let a = LocalPoly::zero().sub_scaled(&-(&Coeff::one() / f.lc()), &mf, f);
    a.sub_scaled(&(&Coeff::one() / g.lc()), &mg, g)
}

/// Mora's weak normal form of `h` with respect to `basis`: the result is zero
/// or has a leading monomial outside the leading ideal of `basis`.
///
/// With `corner = Some(d)` the ideal is known to contain every monomial of
/// degree `d`, so such terms are discarded.
fn mora_normal_form(
    mut h: LocalPoly,
    basis: &[LocalPoly],
    corner: Option<u32>,
    budget: &mut Budget,
) -> Result<LocalPoly> {
    let mut extra: Vec<LocalPoly> = Vec::new();
    loop {
        if let Some(d) = corner {
            if h.lm().is_some_and(|m| m.degree() >= d) {
                return Ok(LocalPoly::zero());
            }
            h.truncate_tail(d);
        }
        let Some(lm) = h.lm() else { return Ok(h) };
        let best = basis.iter().chain(extra.iter()).filter(|g| g.lm().unwrap().divides(lm)).min_by_key(|g| g.ecart());
        let Some(g) = best else { return Ok(h) };
        budget.reduction(&h, g)?;
        let next = h.reduce_by(g);
        if g.ecart() > h.ecart() {
            extra.push(h);
        }
        h = next;
    }
}

/// Leading-term reduction modulo `m^d`. Every step strictly lowers the
/// leading monomial among the finitely many monomials of degree `< d`.
fn truncated_normal_form(mut h: LocalPoly, basis: &[LocalPoly], d: u32, budget: &mut Budget) -> Result<LocalPoly> {
    loop {
        h.truncate(d);
        let Some(lm) = h.lm() else { return Ok(h) };
        let Some(g) = basis.iter().find(|g| g.lm().unwrap().divides(lm)) else { return Ok(h) };
        budget.reduction(&h, g)?;
        h = h.reduce_by(g);
    }
}

/// Buchberger loop shared by both strategies. Pairs with coprime leading
/// monomials are skipped: their S-polynomials have a standard
/// representation in any monomial order.
fn complete_basis<F>(mut basis: Vec<LocalPoly>, budget: &mut Budget, mut reduce: F) -> Result<Vec<LocalPoly>>
where
    F: FnMut(LocalPoly, &mut Vec<LocalPoly>, &mut Budget) -> Result<Option<LocalPoly>>,
{
    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let push_pairs = |pairs: &mut BinaryHeap<_>, basis: &[LocalPoly], j: usize| {
        for i in 0..j {
            let (a, b) = (basis[i].lm().unwrap(), basis[j].lm().unwrap());
            if !a.is_coprime(b) {
                pairs.push(Reverse((a.lcm(b).degree(), i, j)));
            }
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &basis, j);
    }
    while !basis.iter().any(|g| g.lm().unwrap().is_one()) {
        let Some(Reverse((_, i, j))) = pairs.pop() else { break };
        budget.pair()?;
        let s = s_poly(&basis[i], &basis[j]);
        if let Some(mut h) = reduce(s, &mut basis, budget)? {
            h.make_monic();
            basis.push(h);
            push_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }
    Ok(basis)
}

/// Standard basis with the default iteration cap.
pub fn standard_basis(gens: &[Poly], ord: LocalOrder) -> Result<StandardBasisResult> {
    standard_basis_with(gens, ord, &StandardBasisOptions::default())
}

/// Local standard basis. Ideals of finite colength are handled exactly by
/// truncation; only when that is inconclusive does the computation run
/// Mora's algorithm on the full ideal.
pub fn standard_basis_with(
    gens: &[Poly],
    _ord: LocalOrder,
    opts: &StandardBasisOptions,
) -> Result<StandardBasisResult> {
    let nvars = common_nvars(gens)?;
    let mut budget = Budget::new(opts);
    let polys = local_polys(gens);
    if let Colength::Finite(r) = finite_colength_basis(nvars, &polys, opts, &mut budget)? {
        return Ok(r);
    }
    mora_basis(nvars, polys, &mut budget)
}

/// Like [`standard_basis_with`] but skips building a basis when the
/// quotient is certified to be infinite-dimensional.
pub(crate) fn quotient_basis(gens: &[Poly], opts: &StandardBasisOptions) -> Result<Option<StandardBasisResult>> {
    let nvars = common_nvars(gens)?;
    let mut budget = Budget::new(opts);
    let polys = local_polys(gens);
    match finite_colength_basis(nvars, &polys, opts, &mut budget)? {
        Colength::Finite(r) => Ok(Some(r)),
        Colength::Infinite => Ok(None),
        Colength::Undecided => {
            let r = mora_basis(nvars, polys, &mut budget)?;
            Ok(matches!(r.staircase, Staircase::Finite(_)).then_some(r))
        }
    }
}

fn local_polys(gens: &[Poly]) -> Vec<LocalPoly> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut lp = LocalPoly::from_poly(g);
            lp.make_monic();
            lp
        })
        .collect()
}

enum Colength {
    Finite(StandardBasisResult),
    Infinite,
    Undecided,
}

/// If `I` has finite colength `q`, then `m^q ⊆ I`, and `q` is at most the
/// product of the generator degrees (the degree of `n` generic
/// combinations when there are more generators than variables). For each
/// truncation degree `d` a standard basis of `I + m^d` is computed; once
/// its leading ideal contains `m^(d-1)`, Nakayama gives `m^(d-1) ⊆ I` and
/// the truncated basis is a standard basis of `I`.
fn finite_colength_basis(
    nvars: usize,
    gens: &[LocalPoly],
    opts: &StandardBasisOptions,
    budget: &mut Budget,
) -> Result<Colength> {
    let bound = colength_bound(nvars, gens);
    let cap = bound.saturating_add(1);
    let min_order = gens.iter().filter_map(|g| g.lm()).map(Monomial::degree).min().unwrap_or(0);
    let mut d = u64::from(2 * min_order + 2).min(cap).max(1);
    loop {
        let Ok(d32) = u32::try_from(d) else { return Ok(Colength::Undecided) };
        if d32 > opts.max_truncation_degree {
            return Ok(Colength::Undecided);
        }
        let truncated: Vec<LocalPoly> = gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                g.truncate(d32);
                g.make_monic();
                g
            })
            .filter(|g| !g.is_zero())
            .collect();
        let basis = complete_basis(truncated, budget, |s, basis, budget| {
            let h = truncated_normal_form(s, basis, d32, budget)?;
            Ok((!h.is_zero()).then_some(h))
        })?;
        let lead: Vec<Monomial> = basis.iter().filter_map(|g| g.lm().cloned()).collect();
        // Below degree d the leading ideals of I and I + m^d agree, so the
        // staircase found so far is part of the true one.
        let stairs = staircase_below(nvars, &lead, d32);
        if stairs.iter().all(|m| m.degree() + 1 < d32) {
            return Ok(Colength::Finite(finished_basis(nvars, basis, d32.saturating_sub(1), stairs)));
        }
        if d >= cap || stairs.len() as u64 > bound {
            return Ok(Colength::Infinite);
        }
        // The cost grows steeply with d, so overshooting is expensive.
        d = (d + 1 + d / 8).min(cap);
    }
}

fn colength_bound(nvars: usize, gens: &[LocalPoly]) -> u64 {
    let mut degrees: Vec<u64> = gens.iter().map(|g| u64::from(g.max_degree)).collect();
    if degrees.len() < nvars {
        return 0;
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let factors: Vec<u64> = if degrees.len() == nvars { degrees } else { vec![degrees[0]; nvars] };
    factors.iter().fold(1u64, |acc, &d| acc.saturating_mul(d.max(1)))
}

/// Adds the degree-`corner` monomials missing from the leading ideal and
/// keeps one element per minimal leading monomial.
fn finished_basis(nvars: usize, mut basis: Vec<LocalPoly>, corner: u32, stairs: Vec<Monomial>) -> StandardBasisResult {
    let lead: Vec<Monomial> = basis.iter().filter_map(|g| g.lm().cloned()).collect();
    if !lead.iter().any(Monomial::is_one) {
        for m in monomials_of_degree(nvars, corner) {
            if !lead.iter().any(|l| l.divides(&m)) {
                basis.push(LocalPoly::from_sorted(vec![(m, Coeff::one())]));
            }
        }
    }
    let (basis, leading_ideal_gens) = minimalize(nvars, &basis);
    StandardBasisResult { basis, leading_ideal_gens, staircase: Staircase::Finite(stairs) }
}

fn minimalize(nvars: usize, basis: &[LocalPoly]) -> (Vec<Poly>, Vec<Monomial>) {
    let mut keep: Vec<usize> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.lm().unwrap();
        let dominated = basis.iter().enumerate().any(|(o, other)| {
            let lo = other.lm().unwrap();
            o != idx && lo.divides(lm) && (lo != lm || o < idx)
        });
        if !dominated {
            keep.push(idx);
        }
    }
    let lead = keep.iter().map(|&k| basis[k].lm().unwrap().clone()).collect();
    (keep.iter().map(|&k| basis[k].to_poly(nvars)).collect(), lead)
}

/// Mora's algorithm on the untruncated ideal, switching to truncation as
/// soon as the leading ideal has a highest corner.
fn mora_basis(nvars: usize, mut basis: Vec<LocalPoly>, budget: &mut Budget) -> Result<StandardBasisResult> {
    let mut corner = highest_corner(nvars, &basis);
    if let Some(d) = corner {
        basis.iter_mut().for_each(|g| g.truncate_tail(d));
    }
    let basis = complete_basis(basis, budget, |s, basis, budget| {
        let h = mora_normal_form(s, basis, corner, budget)?;
        if h.is_zero() {
            return Ok(None);
        }
        let mut lead: Vec<Monomial> = basis.iter().filter_map(|g| g.lm().cloned()).collect();
        lead.extend(h.lm().cloned());
        if let Some(d) = corner_of(nvars, &lead) {
            if corner.is_none_or(|c| d < c) {
                corner = Some(d);
                basis.iter_mut().for_each(|g| g.truncate_tail(d));
            }
        }
        Ok(Some(h))
    })?;
    let (polys, leading_ideal_gens) = minimalize(nvars, &basis);
    let staircase = staircase_of(nvars, &leading_ideal_gens);
    Ok(StandardBasisResult { basis: polys, leading_ideal_gens, staircase })
}

/// Smallest `d` such that every monomial of degree `d` lies in the leading
/// ideal of `basis`, if the staircase is already finite. For a degree-
/// compatible local order this puts `m^d` inside the ideal itself.
fn highest_corner(nvars: usize, basis: &[LocalPoly]) -> Option<u32> {
    let lead: Vec<Monomial> = basis.iter().filter_map(|g| g.lm().cloned()).collect();
    corner_of(nvars, &lead)
}

fn corner_of(nvars: usize, lead: &[Monomial]) -> Option<u32> {
    match staircase_of(nvars, lead) {
        Staircase::Finite(s) => Some(s.iter().map(Monomial::degree).max().map_or(0, |d| d + 1)),
        Staircase::Infinite => None,
    }
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(var + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        rec(0, d, &mut vec![0; nvars], &mut out);
    }
    out
}

/// Monomials of degree `< d` outside the ideal generated by `lead`.
fn staircase_below(nvars: usize, lead: &[Monomial], d: u32) -> Vec<Monomial> {
    fn rec(var: usize, left: u32, lead: &[Monomial], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            if lead.iter().any(|g| g.divides(&Monomial::new(cur.clone()))) {
                break;
            }
            rec(var + 1, left - e, lead, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(0, d - 1, lead, &mut vec![0; nvars], &mut out);
    }
    out.sort();
    out
}

pub(crate) fn common_nvars(gens: &[Poly]) -> Result<usize> {
    let first = gens.first().ok_or_else(|| Error::InvalidInput("ideal needs at least one generator".into()))?;
    for g in gens {
        first.check_same_vars(g)?;
    }
    Ok(first.nvars())
}

/// The staircase is finite exactly when every variable has a pure power in
/// the leading ideal.
fn staircase_of(nvars: usize, lead: &[Monomial]) -> Staircase {
    if lead.iter().any(Monomial::is_one) {
        return Staircase::Finite(Vec::new());
    }
    let mut bounds = vec![u32::MAX; nvars];
    for m in lead {
        if let Some(v) = m.pure_power_var() {
            bounds[v] = bounds[v].min(m.exponents()[v]);
        }
    }
    if bounds.contains(&u32::MAX) {
        return Staircase::Infinite;
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    enumerate_box(0, &bounds, lead, &mut current, &mut out);
    out.sort();
    Staircase::Finite(out)
}

fn enumerate_box(var: usize, bounds: &[u32], lead: &[Monomial], current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == bounds.len() {
        let m = Monomial::new(current.clone());
        if !lead.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[var] {
        current[var] = e;
        // Every extension of a monomial in the leading ideal stays there.
        let partial = Monomial::new(current.clone());
        if lead.iter().any(|g| g.divides(&partial)) {
            break;
        }
        enumerate_box(var + 1, bounds, lead, current, out);
    }
    current[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn gens(exprs: &[&str]) -> Vec<Poly> {
        exprs.iter().map(|e| parse_poly(e, &["x", "y"]).unwrap()).collect()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn local_order_prefers_low_degree() {
        let o = LocalOrder;
        assert_eq!(o.cmp(&mono(&[0, 0]), &mono(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 3]), &mono(&[2, 0])), Ordering::Less);
        // Same degree: x*y vs y^2, last nonzero entry of (1,1)-(0,2) is -1.
        assert_eq!(o.cmp(&mono(&[1, 1]), &mono(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[2, 0]), &mono(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn maximal_ideal() {
        let r = standard_basis(&gens(&["x", "y"]), LocalOrder).unwrap();
        assert_eq!(r.staircase, Staircase::Finite(vec![mono(&[0, 0])]));
    }

    #[test]
    fn cusp_jacobian() {
        let r = standard_basis(&gens(&["2*x", "3*y^2"]), LocalOrder).unwrap();
        assert_eq!(r.staircase, Staircase::Finite(vec![mono(&[0, 0]), mono(&[0, 1])]));
    }

    #[test]
    fn fermat_cubic_jacobian() {
        let r = standard_basis(&gens(&["3*x^2", "3*y^2"]), LocalOrder).unwrap();
        let expected = vec![mono(&[0, 0]), mono(&[1, 0]), mono(&[0, 1]), mono(&[1, 1])];
        assert_eq!(r.staircase, Staircase::Finite(expected));
    }

    #[test]
    fn unit_generates_everything() {
        let r = standard_basis(&gens(&["1 + x", "y"]), LocalOrder).unwrap();
        assert_eq!(r.dim(), QuotientDim::Finite(0));
    }

    #[test]
    fn missing_pure_power_is_infinite() {
        let r = standard_basis(&gens(&["x", "0"]), LocalOrder).unwrap();
        assert_eq!(r.dim(), QuotientDim::Infinite);
    }

    #[test]
    fn local_not_global_dimension() {
        // Globally x - x^2 has two zeros; locally at 0 only one counts.
        let r = standard_basis(&gens(&["x - x^2", "y"]), LocalOrder).unwrap();
        assert_eq!(r.dim(), QuotientDim::Finite(1));
    }

    #[test]
    fn iteration_cap_is_a_diagnostic() {
        let opts = StandardBasisOptions { max_pairs: 0, ..Default::default() };
        let err = standard_basis_with(&gens(&["x^2 + y^3", "x*y"]), LocalOrder, &opts).unwrap_err();
        assert_eq!(err, Error::IterationCap { limit: 0 });
        assert!(err.is_engine_diagnostic());
    }

    #[test]
    fn mismatched_vars_rejected() {
        let g = vec![parse_poly("x", &["x"]).unwrap(), parse_poly("y", &["x", "y"]).unwrap()];
        assert!(matches!(standard_basis(&g, LocalOrder), Err(Error::VarCountMismatch { .. })));
    }
}
