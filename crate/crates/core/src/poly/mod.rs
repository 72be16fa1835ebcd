//! Sparse multivariate polynomials over the Gaussian rationals, together with
//! the germ-level structure used everywhere else: order, homogeneous parts,
//! initial form, Jacobian, restriction to a line, translation and jets.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{Error, Result};

pub use parse::{infer_vars, parse_poly};

/// Exponent vector of a monomial, one entry per variable.
///
/// The ordering is graded lexicographic with lower total degree first and,
/// inside a degree, `x` before `y` before `z`. It only fixes iteration and
/// printing order; the standard-basis engine uses its own local order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `Some(i)` when the monomial is a pure power `x_i^a` with `a >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    fn write_with(&self, names: &[String], out: &mut String) {
        let mut first = true;
        for (e, name) in self.0.iter().zip(names) {
            if *e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(name);
            if *e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

impl<'a> Mul<&'a Monomial> for &'a Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names used when a polynomial is printed without explicit names.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    match nvars {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        n => (1..=n).map(|i| format!("z{i}")).collect(),
    }
}

/// A sparse polynomial in a fixed number of variables.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// term map and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Coeff::one())
    }

    /// The coordinate function `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        Poly::monomial(Monomial::var(nvars, index), Coeff::one())
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Coeff)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VarCountMismatch { expected: nvars, found: e.len() });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// `z_1^l + ... + z_n^l`.
    pub fn fermat(l: u32, n: usize) -> Self {
        let mut p = Poly::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = l;
            p.add_term(Monomial(e), Coeff::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order, lowest degree first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_same_vars(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_vars(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_vars(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Lowest total degree in the support: the algebraic multiplicity when
    /// `f(0) = 0`.
    pub fn order(&self) -> Result<u32> {
        self.terms.keys().next().map(Monomial::degree).ok_or(Error::ZeroPolynomial)
    }

    /// Highest total degree in the support, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Lowest nonzero homogeneous part; its zero set is the tangent cone.
    pub fn initial_form(&self) -> Result<Poly> {
        let k = self.order()?;
        Ok(self.homogeneous_component(k))
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    /// Sum of the homogeneous components of degree at most `max_degree`.
    pub fn truncate_jet(&self, max_degree: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[var] -= 1;
            out.add_term(dm, c * &Coeff::from_int(i64::from(e)));
        }
        out
    }

    /// The formal partial derivatives `(df/dz_1, ..., df/dz_n)`.
    pub fn jacobian(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: point.len() });
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v = &v * &x.pow(e);
                }
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Composition `f(images[0], ..., images[n-1])`. All images must share a
    /// variable count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map_or(0, Poly::nvars);
        for im in images {
            if im.nvars != target {
                return Err(Error::VarCountMismatch { expected: target, found: im.nvars });
            }
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &table[1];
                    table.push(next);
                }
                term = &term * &table[e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `g(z) = f(z + p)`, the germ recentred at `p`.
    pub fn translate(&self, p: &[Coeff]) -> Result<Poly> {
        if p.len() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: p.len() });
        }
        let images: Vec<Poly> = p
            .iter()
            .enumerate()
            .map(|(i, c)| &Poly::var(self.nvars, i) + &Poly::constant(self.nvars, c.clone()))
            .collect();
        self.substitute(&images)
    }

    /// The univariate polynomial `t -> f(t * direction)`.
    pub fn restrict_to_line(&self, line: &LineDirection) -> Result<Poly> {
        let v = line.components();
        if v.len() != self.nvars {
            return Err(Error::VarCountMismatch { expected: self.nvars, found: v.len() });
        }
        let mut out = Poly::zero(1);
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (x, &e) in v.iter().zip(&m.0) {
                if e > 0 {
                    val = &val * &x.pow(e);
                }
            }
            out.add_term(Monomial(vec![m.degree()]), val);
        }
        Ok(out)
    }

    /// Prints with the given variable names in the same grammar
    /// [`parse_poly`] accepts.
    pub fn to_string_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        assert_eq!(names.len(), self.nvars, "wrong number of variable names");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let mag = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                mag.write_factor(&mut out);
            } else {
                if !mag.is_one() {
                    mag.write_factor(&mut out);
                    out.push('*');
                }
                m.write_with(&names, &mut out);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_names(self.nvars)))
    }
}

/// Panics on a variable-count mismatch; use [`Poly::checked_add`] for
/// untrusted operands.
impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Coeff::from_int(-1))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Direction vector of a line through the origin; never the zero vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineDirection(Vec<Coeff>);

impl LineDirection {
    pub fn new(direction: Vec<Coeff>) -> Result<Self> {
        if direction.is_empty() || direction.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("line direction must have a nonzero entry".into()));
        }
        Ok(LineDirection(direction))
    }

    pub fn from_ints(direction: &[i64]) -> Result<Self> {
        LineDirection::new(direction.iter().map(|&v| Coeff::from_int(v)).collect())
    }

    pub fn components(&self) -> &[Coeff] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for LineDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
