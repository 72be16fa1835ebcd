//! Monodromy arithmetic from normal-crossing resolution data.
//!
//! A resolution contributes strata `S_m` (points where the pulled-back
//! hypersurface is locally `z_1^m = 0`) with Euler characteristics
//! `chi(S_m)`. From those we get the Lefschetz numbers of the powers of the
//! monodromy, the integers `s_i` with `Lambda(h^k) = sum_{i | k} s_i`, the
//! zeta function `prod (1 - t^i)^(-s_i / i)`, the Milnor number and the
//! characteristic polynomial of the monodromy.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stratum {
    pub m: u32,
    pub chi: i64,
}

/// Strata of the exceptional set of an embedded resolution, keyed by the
/// multiplicity `m`. Serialized as a JSON array of `{"m": .., "chi": ..}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionData {
    nvars: usize,
    strata: Vec<Stratum>,
}

impl ResolutionData {
    pub fn new(nvars: usize, mut strata: Vec<Stratum>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidInput("resolution data needs n >= 1".into()));
        }
        strata.sort_by_key(|s| s.m);
        for w in strata.windows(2) {
            if w[0].m == w[1].m {
                return Err(Error::InvalidInput(format!("duplicate stratum multiplicity {}", w[0].m)));
            }
        }
        if strata.first().is_some_and(|s| s.m == 0) {
            return Err(Error::InvalidInput("stratum multiplicity must be >= 1".into()));
        }
        Ok(ResolutionData { nvars, strata })
    }

    /// Like [`ResolutionData::new`] but adds up the Euler characteristics of
    /// strata sharing a multiplicity (Euler characteristic is additive over
    /// disjoint pieces) and drops the ones that become zero.
    pub fn merged(nvars: usize, strata: impl IntoIterator<Item = Stratum>) -> Result<Self> {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for s in strata {
            *acc.entry(s.m).or_default() += s.chi;
        }
        let strata = acc.into_iter().filter(|(_, chi)| *chi != 0).map(|(m, chi)| Stratum { m, chi }).collect();
        ResolutionData::new(nvars, strata)
    }

    pub fn from_json(text: &str, nvars: usize) -> Result<Self> {
        let strata: Vec<Stratum> =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("resolution data: {e}")))?;
        ResolutionData::new(nvars, strata)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.strata).expect("strata serialize")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.strata.last().map_or(0, |s| s.m)
    }
}

/// `Lambda(h^k)` for `k = 1..=horizon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzSequence {
    values: Vec<i64>,
}

impl LefschetzSequence {
    /// `values[k - 1]` is `Lambda(h^k)`.
    pub fn new(values: Vec<i64>) -> Self {
        LefschetzSequence { values }
    }

    pub fn horizon(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, k: u32) -> Option<i64> {
        k.checked_sub(1).and_then(|i| self.values.get(i as usize)).copied()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// The integers `s_i`, stored sparsely (absent means zero).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SSequence {
    values: BTreeMap<u32, i64>,
}

impl SSequence {
    pub fn from_map(values: impl IntoIterator<Item = (u32, i64)>) -> Self {
        SSequence { values: values.into_iter().filter(|&(i, v)| i >= 1 && v != 0).collect() }
    }

    pub fn get(&self, i: u32) -> i64 {
        self.values.get(&i).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.values.iter().map(|(&i, &v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.values.values().sum()
    }

    /// The Lefschetz numbers through the divisor-sum recurrence
    /// `Lambda(h^k) = sum_{i | k} s_i`.
    pub fn lefschetz(&self, horizon: u32) -> LefschetzSequence {
        let values = (1..=horizon).map(|k| self.nonzero().filter(|(i, _)| k % i == 0).map(|(_, v)| v).sum()).collect();
        LefschetzSequence::new(values)
    }
}

/// `Lambda(h^k) = sum_{m | k} m * chi(S_m)`.
pub fn lefschetz(res: &ResolutionData, k: u32) -> i64 {
    assert!(k >= 1, "Lefschetz numbers are indexed from k = 1");
    res.strata.iter().filter(|s| k.is_multiple_of(s.m)).map(|s| i64::from(s.m) * s.chi).sum()
}

pub fn lefschetz_sequence(res: &ResolutionData, horizon: u32) -> LefschetzSequence {
    LefschetzSequence::new((1..=horizon).map(|k| lefschetz(res, k)).collect())
}

/// `s_m = m * chi(S_m)`.
pub fn s_sequence(res: &ResolutionData) -> SSequence {
    SSequence::from_map(res.strata.iter().map(|s| (s.m, i64::from(s.m) * s.chi)))
}

/// Number-theoretic Möbius function.
pub fn mobius(mut n: u32) -> i64 {
    assert!(n >= 1);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Solves `Lambda(h^k) = sum_{i | k} s_i` for `k` up to the horizon by
/// Möbius inversion.
pub fn invert_lefschetz(lam: &LefschetzSequence) -> SSequence {
    let horizon = lam.horizon();
    SSequence::from_map((1..=horizon).map(|k| {
        let s: i64 = (1..=k).filter(|d| k % d == 0).map(|d| mobius(k / d) * lam.get(d).unwrap()).sum();
        (k, s)
    }))
}

/// `Z(t) = prod_i (1 - t^i)^(e_i)`, exponents stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ZetaFunction {
    factors: BTreeMap<u32, i64>,
}

impl ZetaFunction {
    pub fn from_factors(factors: impl IntoIterator<Item = (u32, i64)>) -> Self {
        ZetaFunction { factors: factors.into_iter().filter(|&(_, e)| e != 0).collect() }
    }

    pub fn exponent(&self, i: u32) -> i64 {
        self.factors.get(&i).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.factors.iter().map(|(&i, &e)| (i, e))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.factors().map(|(i, e)| if i == 1 { format!("(1-t)^{e}") } else { format!("(1-t^{i})^{e}") }).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Exponents `e_i = -s_i / i`; every `i` must divide `s_i`.
pub fn zeta(s: &SSequence) -> Result<ZetaFunction> {
    let mut factors = BTreeMap::new();
    for (i, v) in s.nonzero() {
        if v % i64::from(i) != 0 {
            return Err(Error::MalformedSSequence { index: i, value: v });
        }
        factors.insert(i, -v / i64::from(i));
    }
    Ok(ZetaFunction { factors })
}

/// Euler characteristic of the Milnor fiber, `sum m * chi(S_m)`.
pub fn euler_fiber(res: &ResolutionData) -> i64 {
    res.strata.iter().map(|s| i64::from(s.m) * s.chi).sum()
}

fn signed_milnor(total: i64, n: usize) -> i64 {
    let sign = if (n - 1).is_multiple_of(2) { 1 } else { -1 };
    sign * (total - 1)
}

/// `mu = (-1)^(n-1) * (-1 + sum m * chi(S_m))`.
pub fn milnor_from_resolution(res: &ResolutionData, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".into()));
    }
    let mu = signed_milnor(euler_fiber(res), n);
    u64::try_from(mu).map_err(|_| Error::InconsistentResolution(format!("Milnor number would be {mu}")))
}

/// Same formula in terms of the `s_i`. When all `s_i` vanish it gives
/// `(-1)^n`, so that case is only consistent for even `n` with `mu = 1`.
pub fn milnor_from_s(s: &SSequence, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".into()));
    }
    let mu = signed_milnor(s.sum(), n);
    u64::try_from(mu).map_err(|_| Error::InconsistentResolution(format!("Milnor number would be {mu}")))
}

/// `(1 - (1 - l)^n) / l`: Euler characteristic of the complement of the
/// projectivized tangent cone of a Fermat-type germ of degree `l`.
pub fn chi_tangent_cone_complement(l: u32, n: usize) -> Result<i64> {
    if l == 0 || n == 0 {
        return Err(Error::InvalidInput("need l >= 1 and n >= 1".into()));
    }
    let l = i128::from(l);
    let power = (1 - l).checked_pow(n as u32).ok_or_else(|| Error::InvalidInput("(1-l)^n overflows".into()))?;
    let num = 1 - power;
    debug_assert_eq!(num % l, 0);
    if num % l != 0 {
        return Err(Error::InconsistentResolution(format!("{l} does not divide {num}")));
    }
    i64::try_from(num / l).map_err(|_| Error::InvalidInput("Euler characteristic overflows".into()))
}

/// Resolution of `z_1^l + ... + z_n^l` by one blow-up: a single stratum of
/// multiplicity `l`, the complement of the projective Fermat hypersurface.
pub fn homogeneous_resolution(l: u32, n: usize) -> Result<ResolutionData> {
    if l < 2 {
        return Err(Error::Precondition(format!("homogeneous singularity needs l >= 2, got {l}")));
    }
    let chi = chi_tangent_cone_complement(l, n)?;
    ResolutionData::merged(n, [Stratum { m: l, chi }])
}

/// Strata of the minimal embedded resolution of the plane curve `x^a + y^b`.
///
/// The end divisors of the two chains carry multiplicities `a` and `b` and
/// meet one other divisor each; the rupture divisor has multiplicity
/// `lcm(a, b)` and meets both chains and the `gcd(a, b)` branches. Chains
/// that are absent (when one exponent divides the other) merge into the same
/// multiplicities.
pub fn brieskorn_curve_resolution(a: u32, b: u32) -> Result<ResolutionData> {
    if a < 2 || b < 2 {
        return Err(Error::Precondition("x^a + y^b needs a, b >= 2".into()));
    }
    let d = a.gcd(&b);
    let l = a.lcm(&b);
    ResolutionData::merged(
        2,
        [Stratum { m: a, chi: 1 }, Stratum { m: b, chi: 1 }, Stratum { m: l, chi: -i64::from(d) }],
    )
}

/// Characteristic polynomial of the monodromy, coefficients in ascending
/// powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn at_zero(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

type UniPoly = Vec<BigInt>;

fn uni_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `t^i - 1`.
fn cyclic(i: u32) -> UniPoly {
    let mut p = vec![BigInt::zero(); i as usize + 1];
    p[0] = BigInt::from(-1);
    p[i as usize] = BigInt::one();
    p
}

fn monomial_t(k: usize) -> UniPoly {
    let mut p = vec![BigInt::zero(); k + 1];
    p[k] = BigInt::one();
    p
}

/// Exact division by a polynomial with leading coefficient `±1`.
fn uni_div_exact(num: &UniPoly, den: &UniPoly) -> Option<UniPoly> {
    let mut rem: UniPoly = num.clone();
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    let dl = den.len() - 1;
    let lead = &den[dl];
    if rem.len() < den.len() {
        return if rem.is_empty() { Some(vec![BigInt::zero()]) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dl];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl] / lead;
        if !(&c * lead - &rem[k + dl]).is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// `Delta(t) = t^mu * [((t - 1)/t) * Z(1/t)]^((-1)^n)`.
///
/// With `H^0 = C` and the reduced cohomology concentrated in degree `n - 1`,
/// this sign is the one under which the A1 singularity gives `t - 1`; see
/// the tests for the opposite sign failing.
pub fn char_poly(z: &ZetaFunction, mu: u64, n: usize) -> Result<CharPoly> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".into()));
    }
    assemble_char_poly(z, mu, n % 2 == 1)
}

fn assemble_char_poly(z: &ZetaFunction, mu: u64, invert: bool) -> Result<CharPoly> {
    // W(t) = (t - 1) * t^shift * prod (t^i - 1)^e_i, with
    // shift = -1 - sum i*e_i from the t^-i factors of Z(1/t).
    let mut num: UniPoly = cyclic(1);
    let mut den: UniPoly = vec![BigInt::one()];
    let mut shift: i64 = -1;
    for (i, e) in z.factors() {
        shift -= i64::from(i) * e;
        let factor = cyclic(i);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                num = uni_mul(&num, &factor);
            } else {
                den = uni_mul(&den, &factor);
            }
        }
    }
    if invert {
        std::mem::swap(&mut num, &mut den);
        shift = -shift;
    }
    shift += i64::try_from(mu).map_err(|_| Error::InvalidInput("mu too large".into()))?;
    if shift >= 0 {
        num = uni_mul(&num, &monomial_t(shift as usize));
    } else {
        den = uni_mul(&den, &monomial_t(shift.unsigned_abs() as usize));
    }
    let quot = uni_div_exact(&num, &den)
        .ok_or_else(|| Error::ConventionViolation(format!("Z(t) = {z} with mu = {mu} does not give a polynomial")))?;
    let delta = CharPoly::from_coeffs(quot);
    if delta.degree() as u64 != mu || delta.coeffs.is_empty() {
        return Err(Error::ConventionViolation(format!(
            "characteristic polynomial has degree {} but mu = {mu}",
            delta.degree()
        )));
    }
    if !delta.at_zero().abs().is_one() {
        return Err(Error::ConventionViolation(format!("Delta(0) = {} is not a unit", delta.at_zero())));
    }
    Ok(delta)
}

/// First index at which a Lefschetz sequence is nonzero, read as
/// information about the multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum MultiplicityBound {
    /// The multiplicity itself; only when the tangent-cone Euler
    /// characteristic hypothesis has been certified.
    Exact(u32),
    /// `Lambda(h^k)` vanishes below the multiplicity, so the first nonzero
    /// index bounds the multiplicity from above.
    AtMost(u32),
    /// All values vanish up to this horizon.
    Unknown { horizon: u32 },
}

pub fn multiplicity_bound(lam: &LefschetzSequence, hypothesis_certified: bool) -> MultiplicityBound {
    match (1..=lam.horizon()).find(|&k| lam.get(k) != Some(0)) {
        Some(s) if hypothesis_certified => MultiplicityBound::Exact(s),
        Some(s) => MultiplicityBound::AtMost(s),
        None => MultiplicityBound::Unknown { horizon: lam.horizon() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn res(n: usize, pairs: &[(u32, i64)]) -> ResolutionData {
        ResolutionData::new(n, pairs.iter().map(|&(m, chi)| Stratum { m, chi }).collect()).unwrap()
    }

    fn ints(p: &CharPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn lefschetz_examples() {
        for l in 2..6u32 {
            let r = res(2, &[(l, 2 - i64::from(l))]);
            assert_eq!(lefschetz(&r, l), i64::from(l) * (2 - i64::from(l)));
            for k in 1..l {
                assert_eq!(lefschetz(&r, k), 0);
            }
        }
        assert_eq!(lefschetz(&res(2, &[(1, 3), (2, -1)]), 2), 1);
    }

    #[test]
    fn s_sequence_examples() {
        let s = s_sequence(&res(2, &[(4, -2)]));
        assert_eq!(s.get(4), -8);
        assert_eq!(s.nonzero().count(), 1);
        assert!(s_sequence(&res(2, &[])).is_zero());
        let s = s_sequence(&res(2, &[(2, -1), (3, 1)]));
        assert_eq!((s.get(2), s.get(3)), (-2, 3));
    }

    #[test]
    fn inversion_examples() {
        assert!(invert_lefschetz(&LefschetzSequence::new(vec![0; 12])).is_zero());
        let regular = invert_lefschetz(&LefschetzSequence::new(vec![1; 12]));
        assert_eq!(regular, SSequence::from_map([(1, 1)]));
        let l = 4u32;
        let lam: Vec<i64> = (1..=12u32).map(|k| if k % l == 0 { -8 } else { 0 }).collect();
        assert_eq!(invert_lefschetz(&LefschetzSequence::new(lam)), SSequence::from_map([(4, -8)]));
    }

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, &m) in (1..=12).zip(&expect) {
            assert_eq!(mobius(n), m, "mu({n})");
        }
    }

    #[test]
    fn zeta_examples() {
        for l in 2..6u32 {
            let li = i64::from(l);
            let z = zeta(&SSequence::from_map([(l, li * (2 - li))])).unwrap();
            assert_eq!(z, ZetaFunction::from_factors([(l, li - 2)]));
        }
        assert!(zeta(&SSequence::default()).unwrap().is_one());
        assert_eq!(zeta(&SSequence::from_map([(1, 2), (2, 3)])), Err(Error::MalformedSSequence { index: 2, value: 3 }));
    }

    #[test]
    fn zeta_display() {
        assert_eq!(ZetaFunction::from_factors([(3, 1)]).to_string(), "(1-t^3)^1");
        assert_eq!(ZetaFunction::from_factors([(1, -1), (6, 1)]).to_string(), "(1-t)^-1*(1-t^6)^1");
        assert_eq!(ZetaFunction::default().to_string(), "1");
    }

    #[test]
    fn euler_and_milnor() {
        assert_eq!(euler_fiber(&res(2, &[(3, -1)])), -3);
        assert_eq!(euler_fiber(&res(2, &[])), 0);
        assert_eq!(euler_fiber(&res(2, &[(1, 1)])), 1);
        for l in 2..6u32 {
            let r = res(2, &[(l, 2 - i64::from(l))]);
            assert_eq!(milnor_from_resolution(&r, 2).unwrap(), u64::from((l - 1) * (l - 1)));
        }
        assert_eq!(milnor_from_resolution(&res(2, &[(2, 0)]), 2).unwrap(), 1);
        assert_eq!(milnor_from_resolution(&res(2, &[(3, -1)]), 2).unwrap(), 4);
        assert!(matches!(milnor_from_resolution(&res(2, &[(2, 5)]), 2), Err(Error::InconsistentResolution(_))));
    }

    #[test]
    fn vanishing_s_forces_even_dimension() {
        let zero = SSequence::default();
        for n in 1..8usize {
            match milnor_from_s(&zero, n) {
                Ok(mu) => {
                    assert_eq!(n % 2, 0);
                    assert_eq!(mu, 1);
                }
                Err(Error::InconsistentResolution(_)) => assert_eq!(n % 2, 1),
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous_resolution(2, 2).unwrap(), res(2, &[]));
        assert_eq!(homogeneous_resolution(3, 2).unwrap(), res(2, &[(3, -1)]));
        assert_eq!(homogeneous_resolution(3, 3).unwrap(), res(3, &[(3, 3)]));
        assert!(homogeneous_resolution(1, 3).is_err());
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_tangent_cone_complement(2, 2).unwrap(), 0);
        assert_eq!(chi_tangent_cone_complement(3, 3).unwrap(), 3);
        for n in 1..6 {
            assert_eq!(chi_tangent_cone_complement(1, n).unwrap(), 1);
        }
    }

    #[test]
    fn char_poly_examples() {
        // A1: Z = 1, mu = 1.
        assert_eq!(ints(&char_poly(&ZetaFunction::default(), 1, 2).unwrap()), vec![-1, 1]);
        // x^3 + y^3: (t - 1)(t^3 - 1) = t^4 - t^3 - t + 1.
        let z = ZetaFunction::from_factors([(3, 1)]);
        assert_eq!(ints(&char_poly(&z, 4, 2).unwrap()), vec![1, -1, 0, -1, 1]);
        assert_eq!(char_poly(&z, 4, 2).unwrap().to_string(), "t^4 - t^3 - t + 1");
    }

    #[test]
    fn printed_sign_fails_on_a1() {
        let err = assemble_char_poly(&ZetaFunction::default(), 1, true).unwrap_err();
        assert!(matches!(err, Error::ConventionViolation(_)));
    }

    #[test]
    fn wrong_mu_is_a_convention_violation() {
        let z = ZetaFunction::from_factors([(3, 1)]);
        assert!(matches!(char_poly(&z, 5, 2), Err(Error::ConventionViolation(_))));
    }

    #[test]
    fn multiplicity_bounds() {
        let r = homogeneous_resolution(3, 3).unwrap();
        assert_eq!(multiplicity_bound(&lefschetz_sequence(&r, 9), true), MultiplicityBound::Exact(3));
        assert_eq!(multiplicity_bound(&lefschetz_sequence(&r, 9), false), MultiplicityBound::AtMost(3));
        let zero = LefschetzSequence::new(vec![0; 7]);
        assert_eq!(multiplicity_bound(&zero, true), MultiplicityBound::Unknown { horizon: 7 });
        let regular = LefschetzSequence::new(vec![1, 1, 1]);
        assert_eq!(multiplicity_bound(&regular, true), MultiplicityBound::Exact(1));
    }

    #[test]
    fn brieskorn_curve_strata() {
        // Cusp: chain ends of multiplicity 2 and 3, rupture divisor 6.
        assert_eq!(brieskorn_curve_resolution(2, 3).unwrap(), res(2, &[(2, 1), (3, 1), (6, -1)]));
        // A3 = x^2 + y^4: E1 (mult 2) and E2 (mult 4) carrying both branches.
        assert_eq!(brieskorn_curve_resolution(2, 4).unwrap(), res(2, &[(2, 1), (4, -1)]));
        // Equal exponents reduce to the homogeneous case.
        for l in 2..6 {
            assert_eq!(brieskorn_curve_resolution(l, l).unwrap(), homogeneous_resolution(l, 2).unwrap());
        }
    }

    #[test]
    fn resolution_json() {
        let r = ResolutionData::from_json(r#"[{"m": 3, "chi": -1}]"#, 2).unwrap();
        assert_eq!(r, res(2, &[(3, -1)]));
        assert_eq!(r.to_json(), r#"[{"m":3,"chi":-1}]"#);
        assert!(ResolutionData::from_json(r#"[{"m": 3, "chi": 1}, {"m": 3, "chi": 2}]"#, 2).is_err());
        assert!(ResolutionData::from_json(r#"[{"m": 0, "chi": 1}]"#, 2).is_err());
    }
}
