//! One-parameter families of germs: Milnor-number profiles, the rescaling
//! family `f_k + t f_{k+1} + t^2 f_{k+2} + ...`, the search for a linear
//! path to the Fermat germ, and multiplicity along transverse lines.
//!
//! All statements are checked at finitely many rational parameter values
//! only.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::milnor::{is_isolated, milnor_number, MilnorValue};
use crate::poly::{parse_poly, LineDirection, Poly};

/// Parameter samples used when the caller gives none.
pub fn default_samples() -> Vec<BigRational> {
    [(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)]
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect()
}

/// `f_t = sum_j t^(p_j) * piece_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermFamily {
    nvars: usize,
    pieces: Vec<(Poly, u32)>,
}

/// On-disk family description:
/// `{"pieces": [{"poly": "<text>", "tpower": 1}], "vars": ["x", "y"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub pieces: Vec<PieceSpec>,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceSpec {
    pub poly: String,
    pub tpower: u32,
}

impl GermFamily {
    pub fn new(pieces: Vec<(Poly, u32)>) -> Result<Self> {
        let nvars = pieces
            .first()
            .map(|(p, _)| p.nvars())
            .ok_or_else(|| Error::InvalidInput("family needs at least one piece".into()))?;
        for (p, _) in &pieces {
            if p.nvars() != nvars {
                return Err(Error::VarCountMismatch { expected: nvars, found: p.nvars() });
            }
        }
        Ok(GermFamily { nvars, pieces })
    }

    pub fn from_spec(spec: &FamilySpec) -> Result<Self> {
        let pieces =
            spec.pieces.iter().map(|p| Ok((parse_poly(&p.poly, &spec.vars)?, p.tpower))).collect::<Result<Vec<_>>>()?;
        GermFamily::new(pieces)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: FamilySpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("family spec: {e}")))?;
        GermFamily::from_spec(&spec)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn pieces(&self) -> &[(Poly, u32)] {
        &self.pieces
    }

    pub fn eval(&self, t: &Coeff) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (p, power) in &self.pieces {
            out = &out + &p.scale(&t.pow(*power));
        }
        out
    }
}

/// `H_t = f_k + t f_{k+1} + t^2 f_{k+2} + ...` with `k = order(f)`, so that
/// `H_1 = f` and `H_0` is the initial form.
pub fn rescaling_family(f: &Poly) -> Result<GermFamily> {
    let k = f.order()?;
    let top = f.degree().ok_or(Error::ZeroPolynomial)?;
    let pieces = (k..=top).map(|d| (f.homogeneous_component(d), d - k)).filter(|(p, _)| !p.is_zero()).collect();
    GermFamily::new(pieces)
}

fn serialize_ratio<S: Serializer>(t: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuSample {
    #[serde(serialize_with = "serialize_ratio")]
    pub t: BigRational,
    pub mu: MilnorValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuProfile {
    pub samples: Vec<MuSample>,
    /// `mu(f_0) - mu(f_t)` for the nonzero sample closest to 0, when both
    /// are finite and `t = 0` was sampled.
    pub jump: Option<i64>,
}

impl MuProfile {
    pub fn is_constant(&self) -> bool {
        self.samples.windows(2).all(|w| w[0].mu == w[1].mu)
    }
}

fn check_distinct(ts: &[BigRational]) -> Result<()> {
    if ts.is_empty() {
        return Err(Error::InvalidInput("need at least one parameter sample".into()));
    }
    let mut seen = HashSet::new();
    for t in ts {
        if !seen.insert(t) {
            return Err(Error::InvalidInput(format!("duplicate sample t = {t}")));
        }
    }
    Ok(())
}

/// Milnor number of the family member at a parameter value. The zero
/// polynomial is recorded as non-isolated.
fn sample_mu(fam: &GermFamily, t: &BigRational) -> Result<MilnorValue> {
    let ft = fam.eval(&Coeff::real(t.clone()));
    if ft.is_zero() {
        return Ok(MilnorValue::NotIsolated);
    }
    Ok(milnor_number(&ft)?.mu)
}

pub fn mu_profile(fam: &GermFamily, ts: &[BigRational]) -> Result<MuProfile> {
    check_distinct(ts)?;
    let samples =
        ts.iter().map(|t| Ok(MuSample { t: t.clone(), mu: sample_mu(fam, t)? })).collect::<Result<Vec<_>>>()?;
    let at_zero = samples.iter().find(|s| s.t.is_zero()).and_then(|s| s.mu.finite());
    let nearest = samples
        .iter()
        .filter(|s| !s.t.is_zero())
        .min_by(|a, b| a.t.abs().cmp(&b.t.abs()).then_with(|| a.t.cmp(&b.t)))
        .and_then(|s| s.mu.finite());
    let jump = match (at_zero, nearest) {
        (Some(a), Some(b)) => Some(a as i64 - b as i64),
        _ => None,
    };
    Ok(MuProfile { samples, jump })
}

/// Deterministic start of the alpha search, followed by `random` seeded
/// Gaussian rationals of small height.
pub fn default_alpha_candidates(random: usize, seed: u64) -> Vec<Coeff> {
    let mut out = vec![
        Coeff::from_int(1),
        Coeff::from_int(-1),
        Coeff::i(),
        -Coeff::i(),
        Coeff::from_int(2),
        Coeff::gaussian(1, 1),
        Coeff::gaussian(1, -1),
        Coeff::from_ratio(1, 2),
        Coeff::from_int(3),
        Coeff::gaussian(2, 1),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let den: i64 = rng.gen_range(1..=9);
        let re = Coeff::from_ratio(rng.gen_range(-9..=9), den);
        let im = Coeff::from_ratio(rng.gen_range(-9..=9), den);
        out.push(&re + &(&im * &Coeff::i()));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaResult {
    #[serde(serialize_with = "serialize_display")]
    pub alpha: Coeff,
    pub samples: Vec<MuSample>,
}

fn serialize_display<S: Serializer>(c: &Coeff, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// First nonzero `alpha` among `candidates` for which
/// `F_t = (1 - t)(z_1^k + ... + z_n^k) + t * alpha * P` has an isolated
/// singularity at every sampled `t`.
pub fn find_alpha(p: &Poly, ts: &[BigRational], candidates: &[Coeff]) -> Result<AlphaResult> {
    check_distinct(ts)?;
    if p.is_zero() || !p.is_homogeneous() {
        return Err(Error::Precondition("P must be a nonzero homogeneous polynomial".into()));
    }
    let k = p.order()?;
    if k < 2 || !is_isolated(p)? {
        return Err(Error::Precondition("P must have an isolated singularity at 0".into()));
    }
    let fermat = Poly::fermat(k, p.nvars());
    'candidates: for alpha in candidates.iter().filter(|a| !a.is_zero()) {
        let scaled = p.scale(alpha);
        let mut samples = Vec::with_capacity(ts.len());
        for t in ts {
            let tc = Coeff::real(t.clone());
            let one_minus = &Coeff::one() - &tc;
            let ft = &fermat.scale(&one_minus) + &scaled.scale(&tc);
            let mu = if ft.is_zero() { MilnorValue::NotIsolated } else { milnor_number(&ft)?.mu };
            if mu == MilnorValue::NotIsolated {
                continue 'candidates;
            }
            samples.push(MuSample { t: t.clone(), mu });
        }
        return Ok(AlphaResult { alpha: alpha.clone(), samples });
    }
    Err(Error::NotFound(format!("no admissible alpha among {} candidates", candidates.len())))
}

/// Primitive integer directions of max-norm `height`, one representative
/// per line (first nonzero entry positive).
fn lattice_directions(n: usize, height: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-height; n];
    loop {
        let maxabs = cur.iter().map(|v| v.abs()).max().unwrap_or(0);
        let first = cur.iter().find(|&&v| v != 0).copied().unwrap_or(0);
        let g = cur.iter().fold(0i64, |g, &v| g.gcd(&v));
        if maxabs == height && first > 0 && g == 1 {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < height {
                cur[i] += 1;
                break;
            }
            cur[i] = -height;
        }
    }
}

const LATTICE_HEIGHT: i64 = 3;

/// Searches for a direction on which no initial form vanishes, i.e. a line
/// meeting every sampled tangent cone only at the origin. Tries the
/// all-ones vector, then the small-integer lattice, then seeded random
/// rational directions, `trials` candidates in total.
pub fn find_transverse_line(initial_forms: &[Poly], trials: usize, seed: u64) -> Result<LineDirection> {
    let n = initial_forms
        .first()
        .map(Poly::nvars)
        .ok_or_else(|| Error::InvalidInput("need at least one initial form".into()))?;
    for f in initial_forms {
        if f.nvars() != n {
            return Err(Error::VarCountMismatch { expected: n, found: f.nvars() });
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let accept = |v: &[Coeff]| -> Result<bool> {
        for f in initial_forms {
            if f.eval(v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    };

    let ones = vec![1i64; n];
    let lattice = std::iter::once(ones.clone())
        .chain((1..=LATTICE_HEIGHT).flat_map(|h| lattice_directions(n, h)).filter(|v| *v != ones));
    let mut tried = 0usize;
    for v in lattice {
        if tried >= trials {
            break;
        }
        tried += 1;
        let coeffs: Vec<Coeff> = v.iter().map(|&x| Coeff::from_int(x)).collect();
        if accept(&coeffs)? {
            return LineDirection::new(coeffs);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while tried < trials {
        tried += 1;
        let coeffs: Vec<Coeff> =
            (0..n).map(|_| Coeff::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=10))).collect();
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        if accept(&coeffs)? {
            return LineDirection::new(coeffs);
        }
    }
    Err(Error::NotFound(format!("no transverse direction in {trials} trials")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineOrderSample {
    #[serde(serialize_with = "serialize_ratio")]
    pub t: BigRational,
    pub order: u32,
}

/// Order at 0 of `f_t` restricted to the line, per sample. Along a line
/// transverse to the tangent cone of `f_t` this is the multiplicity.
pub fn line_order_profile(fam: &GermFamily, line: &LineDirection, ts: &[BigRational]) -> Result<Vec<LineOrderSample>> {
    check_distinct(ts)?;
    ts.iter()
        .map(|t| {
            let ft = fam.eval(&Coeff::real(t.clone()));
            let restricted = ft.restrict_to_line(line)?;
            let order = restricted.order().map_err(|_| Error::LineInsideCone(t.to_string()))?;
            Ok(LineOrderSample { t: t.clone(), order })
        })
        .collect()
}

/// Caveats attached to every family report.
pub fn family_caveats(nvars: usize) -> Vec<String> {
    let mut out = vec!["sampled-parameters only: results hold at the listed t values".to_string()];
    if nvars == 3 {
        out.push("n=3 exclusion: topological triviality of mu-constant families is not guaranteed for n = 3".into());
    }
    out
}

/// Convenience: `num/den` as a sample value.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(s: &str) -> Poly {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    fn ts(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn rescaling_pieces() {
        let fam = rescaling_family(&p2("x^3 + y^3 + x^4")).unwrap();
        assert_eq!(fam.pieces(), &[(p2("x^3 + y^3"), 0), (p2("x^4"), 1)]);
        let t = Coeff::from_ratio(1, 2);
        assert_eq!(fam.eval(&t), p2("x^3 + y^3 + 1/2*x^4"));
        let h = Poly::fermat(3, 2);
        assert_eq!(rescaling_family(&h).unwrap().pieces(), &[(h.clone(), 0)]);
        let one = parse_poly("x^2 + x^3 + x^4", &["x"]).unwrap();
        let fam = rescaling_family(&one).unwrap();
        assert_eq!(fam.eval(&Coeff::from_int(2)), parse_poly("x^2 + 2*x^3 + 4*x^4", &["x"]).unwrap());
        assert!(rescaling_family(&Poly::zero(2)).is_err());
    }

    #[test]
    fn class_a_family_is_mu_constant() {
        let fam = rescaling_family(&p2("x^3 + y^3 + x^4")).unwrap();
        let prof = mu_profile(&fam, &ts(&[(0, 1), (1, 2), (1, 1)])).unwrap();
        assert!(prof.is_constant());
        assert_eq!(prof.samples[0].mu, MilnorValue::Finite(4));
        assert_eq!(prof.jump, Some(0));
    }

    #[test]
    fn jumping_family() {
        let fam = GermFamily::new(vec![(p2("x^3 + y^3"), 0), (p2("x*y"), 1)]).unwrap();
        let prof = mu_profile(&fam, &ts(&[(0, 1), (1, 1)])).unwrap();
        assert_eq!(prof.samples[1].mu, MilnorValue::Finite(1));
        assert_eq!(prof.jump, Some(3));
    }

    #[test]
    fn constant_family_has_no_jump() {
        let fam = GermFamily::new(vec![(p2("x^2 + y^5"), 0)]).unwrap();
        assert_eq!(mu_profile(&fam, &default_samples()).unwrap().jump, Some(0));
    }

    #[test]
    fn duplicate_samples_rejected() {
        let fam = GermFamily::new(vec![(p2("x^2 + y^2"), 0)]).unwrap();
        assert!(mu_profile(&fam, &ts(&[(1, 2), (2, 4)])).is_err());
        assert!(mu_profile(&fam, &[]).is_err());
    }

    #[test]
    fn alpha_for_fermat_itself() {
        let p = Poly::fermat(3, 3);
        let r = find_alpha(&p, &default_samples(), &default_alpha_candidates(0, 7)).unwrap();
        assert_eq!(r.alpha, Coeff::from_int(1));
        assert!(r.samples.iter().all(|s| s.mu == MilnorValue::Finite(8)));
    }

    #[test]
    fn alpha_skips_bad_candidates() {
        let p = p2("x^3 + 2*y^3");
        let samples = ts(&[(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]);
        // alpha = -1 makes the y^3 coefficient vanish at t = 1/3.
        let r = find_alpha(&p, &samples, &[Coeff::from_int(-1), Coeff::i()]).unwrap();
        assert_eq!(r.alpha, Coeff::i());
        assert!(r.samples.iter().all(|s| s.mu == MilnorValue::Finite(4)));
        assert!(matches!(find_alpha(&p, &samples, &[Coeff::zero()]), Err(Error::NotFound(_))));
        assert!(matches!(find_alpha(&p2("x^3 + y^4"), &samples, &[Coeff::one()]), Err(Error::Precondition(_))));
    }

    #[test]
    fn transverse_line_search() {
        let ones = find_transverse_line(&[Poly::fermat(4, 3)], 1, 0).unwrap();
        assert_eq!(ones, LineDirection::from_ints(&[1, 1, 1]).unwrap());
        let v = find_transverse_line(&[p2("x"), p2("y")], 10, 0).unwrap();
        assert_eq!(v, LineDirection::from_ints(&[1, 1]).unwrap());
        // The four height-one lines are exactly the lines of this cone.
        let cone = p2("x*y*(x + y)*(x - y)");
        assert!(matches!(find_transverse_line(std::slice::from_ref(&cone), 4, 0), Err(Error::NotFound(_))));
        let v = find_transverse_line(std::slice::from_ref(&cone), 5, 0).unwrap();
        assert!(!cone.eval(v.components()).unwrap().is_zero());
    }

    #[test]
    fn random_phase_after_lattice() {
        // Lattice of height <= 3 in one variable is only (1); a cone
        // vanishing there is impossible, so exercise the 2-D case where
        // every lattice line is killed by a product of many linear forms.
        let mut cone = Poly::one(2);
        for v in (1..=LATTICE_HEIGHT).flat_map(|h| lattice_directions(2, h)) {
            // linear form vanishing on direction v: v[1]*x - v[0]*y
            let form = &p2("x").scale(&Coeff::from_int(v[1])) - &p2("y").scale(&Coeff::from_int(v[0]));
            cone = &cone * &form;
        }
        let lattice_len = 1 + (1..=LATTICE_HEIGHT).map(|h| lattice_directions(2, h).len()).sum::<usize>() - 1;
        assert!(find_transverse_line(&[cone.clone()], lattice_len, 3).is_err());
        let v = find_transverse_line(&[cone.clone()], lattice_len + 20, 3).unwrap();
        assert!(!cone.eval(v.components()).unwrap().is_zero());
    }

    #[test]
    fn line_orders() {
        let fam = rescaling_family(&p2("x^3 + y^3 + x^4")).unwrap();
        let line = LineDirection::from_ints(&[1, 1]).unwrap();
        let prof = line_order_profile(&fam, &line, &ts(&[(0, 1), (1, 2), (1, 1)])).unwrap();
        assert!(prof.iter().all(|s| s.order == 3));
        let fam = GermFamily::new(vec![(Poly::fermat(5, 3), 0)]).unwrap();
        let line = LineDirection::from_ints(&[1, 1, 1]).unwrap();
        assert_eq!(line_order_profile(&fam, &line, &ts(&[(1, 1)])).unwrap()[0].order, 5);
        let fam = GermFamily::new(vec![(p2("x^2"), 0), (p2("x*y"), 1)]).unwrap();
        let axis = LineDirection::from_ints(&[0, 1]).unwrap();
        assert!(matches!(line_order_profile(&fam, &axis, &ts(&[(1, 2)])), Err(Error::LineInsideCone(_))));
    }

    #[test]
    fn spec_file_round_trip() {
        let text =
            r#"{"pieces": [{"poly": "x^3 + y^3", "tpower": 0}, {"poly": "x*y", "tpower": 1}], "vars": ["x", "y"]}"#;
        let fam = GermFamily::from_json(text).unwrap();
        assert_eq!(fam.eval(&Coeff::one()), p2("x^3 + y^3 + x*y"));
        assert!(GermFamily::from_json(r#"{"pieces": [], "vars": ["x"]}"#).is_err());
    }

    #[test]
    fn caveats() {
        assert_eq!(family_caveats(2).len(), 1);
        assert!(family_caveats(3)[1].starts_with("n=3"));
    }
}
