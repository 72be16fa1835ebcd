//! Necessary conditions for topological equisingularity of two germs and
//! the conditional equimultiplicity criterion.
//!
//! Nothing here ever claims that two germs *are* equisingular. A pair is
//! either ruled out by a failed necessary condition, shown to have equal
//! multiplicities provided it is equisingular, or left inconclusive.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::milnor::{in_class_a, milnor_number, MilnorValue};
use crate::monodromy::chi_tangent_cone_complement;
use crate::poly::Poly;

/// Lowest and highest total degree of the support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub low: u32,
    pub high: u32,
}

impl fmt::Display for DegreeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.low, self.high)
    }
}

pub fn degree_window(f: &Poly) -> Result<DegreeWindow> {
    let low = f.order()?;
    let high = f.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(DegreeWindow { low, high })
}

/// True when the degree windows are disjoint: all monodromy `s_i` of both
/// germs would have to vanish, which is impossible for singular germs.
pub fn check_window_obstruction(f: &Poly, g: &Poly) -> Result<bool> {
    let (a, b) = (degree_window(f)?, degree_window(g)?);
    Ok(a.high < b.low || b.high < a.low)
}

/// True when exactly one of the germs is regular (order 1) at the origin,
/// detected by the first Lefschetz number being 1 versus 0.
pub fn check_regular_singular_mismatch(f: &Poly, g: &Poly) -> Result<bool> {
    Ok((f.order()? == 1) != (g.order()? == 1))
}

/// Status of the hypothesis that both projectivized tangent-cone
/// complements have nonzero Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Certified,
    NotSatisfied,
    Unknown,
}

/// Euler characteristic of the complement of the projectivized tangent
/// cone, when it is computable: a hyperplane for regular germs, the
/// Fermat value for class-A germs.
pub fn tangent_cone_complement_chi(f: &Poly) -> Result<Option<i64>> {
    let k = f.order()?;
    if k == 1 {
        return chi_tangent_cone_complement(1, f.nvars()).map(Some);
    }
    if in_class_a(f)? {
        return chi_tangent_cone_complement(k, f.nvars()).map(Some);
    }
    Ok(None)
}

/// Certifies the hypothesis under which equisingularity implies equal
/// multiplicities. Outside class A the Euler characteristic is not
/// computed and the status is `Unknown`.
pub fn check_equimultiplicity_hypothesis(f: &Poly, g: &Poly) -> Result<HypothesisStatus> {
    f.check_same_vars(g)?;
    let chis = [tangent_cone_complement_chi(f)?, tangent_cone_complement_chi(g)?];
    if chis.contains(&Some(0)) {
        return Ok(HypothesisStatus::NotSatisfied);
    }
    if chis.iter().all(Option::is_some) {
        Ok(HypothesisStatus::Certified)
    } else {
        Ok(HypothesisStatus::Unknown)
    }
}

/// Outcome of the mixed-pair argument: if a non-class-A germ of order `k`
/// were equisingular to a class-A germ of order `l`, equal Milnor numbers
/// with `mu > (k-1)^n` on one side and `mu = (l-1)^n` on the other force
/// `k < l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedPairConstraint {
    pub non_a_order: u32,
    pub a_order: u32,
    pub non_a_mu: u64,
    pub a_mu: u64,
    /// `k < l`, the multiplicity relation an equivalence would require.
    pub order_constraint_holds: bool,
    /// True when the pair is already ruled out.
    pub obstruction: bool,
}

pub fn check_class_a_mixed_pair(f: &Poly, g: &Poly) -> Result<MixedPairConstraint> {
    f.check_same_vars(g)?;
    let (fa, ga) = (class_a_flag(f)?, class_a_flag(g)?);
    if fa == ga {
        return Err(Error::Precondition("exactly one germ must be in class A".into()));
    }
    let (non_a, a) = if fa { (g, f) } else { (f, g) };
    let non_a_mu = isolated_mu(non_a)?;
    let a_mu = isolated_mu(a)?;
    let k = non_a.order()?;
    let l = a.order()?;
    let order_constraint_holds = k < l;
    Ok(MixedPairConstraint {
        non_a_order: k,
        a_order: l,
        non_a_mu,
        a_mu,
        order_constraint_holds,
        obstruction: non_a_mu != a_mu || !order_constraint_holds,
    })
}

fn class_a_flag(f: &Poly) -> Result<bool> {
    Ok(f.order()? >= 2 && in_class_a(f)?)
}

fn isolated_mu(f: &Poly) -> Result<u64> {
    match milnor_number(f)?.mu {
        MilnorValue::Finite(m) => Ok(m),
        MilnorValue::NotIsolated => Err(Error::NotIsolated(f.to_string())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotEquisingular,
    EquimultipleIfEquisingular,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotEquisingular => "NOT_EQUISINGULAR",
            Verdict::EquimultipleIfEquisingular => "EQUIMULTIPLE_IF_EQUISINGULAR",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Regular versus singular germ.
    RegularSingularMismatch,
    /// Equisingular germs have the same Milnor number.
    MilnorNumberEquality,
    /// Disjoint degree windows.
    DegreeWindow,
    /// Class-A versus non-class-A multiplicity constraint.
    MixedClassA,
    /// Nonzero tangent-cone Euler characteristics on both sides.
    TangentConeEulerCharacteristic,
}

impl Rule {
    /// Rules whose firing rules out equisingularity.
    pub fn is_necessary_condition(self) -> bool {
        !matches!(self, Rule::TangentConeEulerCharacteristic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub rule: Rule,
    pub fired: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminationReport {
    pub verdict: Verdict,
    pub mu: [u64; 2],
    pub windows: [DegreeWindow; 2],
    #[serde(rename = "classA")]
    pub class_a: [bool; 2],
    pub checks: Vec<Check>,
    pub caveats: Vec<String>,
}

impl DiscriminationReport {
    pub fn fired(&self, rule: Rule) -> bool {
        self.checks.iter().any(|c| c.rule == rule && c.fired)
    }
}

/// Runs every check on the pair and derives the verdict.
pub fn discriminate(f: &Poly, g: &Poly) -> Result<DiscriminationReport> {
    f.check_same_vars(g)?;
    for p in [f, g] {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.constant_term().is_zero() {
            return Err(Error::NotAGerm(p.constant_term().to_string()));
        }
    }
    let mu = [isolated_mu(f)?, isolated_mu(g)?];
    let windows = [degree_window(f)?, degree_window(g)?];
    let class_a = [class_a_flag(f)?, class_a_flag(g)?];
    let orders = [windows[0].low, windows[1].low];
    let mut checks = Vec::new();
    let mut caveats = Vec::new();

    checks.push(Check {
        rule: Rule::RegularSingularMismatch,
        fired: check_regular_singular_mismatch(f, g)?,
        detail: format!("orders {} and {}", orders[0], orders[1]),
    });
    checks.push(Check {
        rule: Rule::MilnorNumberEquality,
        fired: mu[0] != mu[1],
        detail: format!("mu = {} and {}", mu[0], mu[1]),
    });
    let window_fired = check_window_obstruction(f, g)?;
    checks.push(Check {
        rule: Rule::DegreeWindow,
        fired: window_fired,
        detail: format!(
            "windows {} and {}{}",
            windows[0],
            windows[1],
            if window_fired { " are disjoint" } else { " overlap" }
        ),
    });

    let mixed = orders[0] >= 2 && orders[1] >= 2 && class_a[0] != class_a[1];
    if mixed {
        let c = check_class_a_mixed_pair(f, g)?;
        checks.push(Check {
            rule: Rule::MixedClassA,
            fired: c.obstruction,
            detail: format!(
                "non-class-A order k = {} (mu = {}), class-A order l = {} (mu = {}); equivalence requires equal mu and k < l",
                c.non_a_order, c.non_a_mu, c.a_order, c.a_mu
            ),
        });
        if !c.obstruction {
            caveats.push("class-A versus non-class-A pair with k < l: equisingularity is an open question".into());
        }
    } else {
        checks.push(Check {
            rule: Rule::MixedClassA,
            fired: false,
            detail: "not applicable: needs exactly one singular class-A germ".into(),
        });
    }

    let hypothesis = check_equimultiplicity_hypothesis(f, g)?;
    let chis = [tangent_cone_complement_chi(f)?, tangent_cone_complement_chi(g)?];
    let show = |c: Option<i64>| c.map_or_else(|| "unknown".to_string(), |v| v.to_string());
    checks.push(Check {
        rule: Rule::TangentConeEulerCharacteristic,
        fired: hypothesis == HypothesisStatus::Certified,
        detail: format!(
            "chi = {} and {}: {}",
            show(chis[0]),
            show(chis[1]),
            match hypothesis {
                HypothesisStatus::Certified => "certified",
                HypothesisStatus::NotSatisfied => "not satisfied",
                HypothesisStatus::Unknown => "unknown",
            }
        ),
    });
    match hypothesis {
        HypothesisStatus::Unknown => {
            caveats.push("tangent-cone Euler characteristic is not computed outside class A".into())
        }
        HypothesisStatus::NotSatisfied => caveats
            .push("a tangent-cone Euler characteristic vanishes; Lefschetz numbers do not pin the multiplicity".into()),
        HypothesisStatus::Certified => {}
    }

    let verdict = if checks.iter().any(|c| c.fired && c.rule.is_necessary_condition()) {
        Verdict::NotEquisingular
    } else if hypothesis == HypothesisStatus::Certified {
        Verdict::EquimultipleIfEquisingular
    } else {
        Verdict::Inconclusive
    };
    Ok(DiscriminationReport { verdict, mu, windows, class_a, checks, caveats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p2(s: &str) -> Poly {
        parse_poly(s, &["x", "y"]).unwrap()
    }

    fn p3(s: &str) -> Poly {
        parse_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn windows() {
        assert_eq!(degree_window(&p2("x^2 + y^3")).unwrap(), DegreeWindow { low: 2, high: 3 });
        assert_eq!(degree_window(&Poly::fermat(4, 2)).unwrap(), DegreeWindow { low: 4, high: 4 });
        assert_eq!(degree_window(&p2("x^3 + x^7*y")).unwrap(), DegreeWindow { low: 3, high: 8 });
        assert_eq!(degree_window(&Poly::zero(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn window_obstruction() {
        let f = p2("x^2 + y^3");
        assert!(check_window_obstruction(&f, &Poly::fermat(5, 2)).unwrap());
        assert!(check_window_obstruction(&Poly::fermat(5, 2), &f).unwrap());
        assert!(!check_window_obstruction(&f, &f).unwrap());
        assert!(!check_window_obstruction(&p2("x^2 + y^9"), &Poly::fermat(5, 2)).unwrap());
    }

    #[test]
    fn regular_singular() {
        assert!(check_regular_singular_mismatch(&p2("x"), &p2("x^2")).unwrap());
        assert!(!check_regular_singular_mismatch(&p2("x^2"), &p2("y^3")).unwrap());
        assert!(!check_regular_singular_mismatch(&p2("x + y^2"), &p2("y + x^7")).unwrap());
    }

    #[test]
    fn hypothesis_status() {
        let f = p3("x^2 + y^2 + z^2 + x^3");
        let g = Poly::fermat(3, 3);
        assert_eq!(check_equimultiplicity_hypothesis(&f, &g).unwrap(), HypothesisStatus::Certified);
        assert_eq!(
            check_equimultiplicity_hypothesis(&p2("x^2 + y^2"), &p2("x*y + y^3")).unwrap(),
            HypothesisStatus::NotSatisfied
        );
        assert_eq!(
            check_equimultiplicity_hypothesis(&Poly::fermat(3, 2), &p2("x^2*y + y^5")).unwrap(),
            HypothesisStatus::Unknown
        );
    }

    #[test]
    fn mixed_pair() {
        let c = check_class_a_mixed_pair(&p2("x^2*y + y^5"), &Poly::fermat(3, 2)).unwrap();
        assert_eq!((c.non_a_order, c.a_order, c.non_a_mu, c.a_mu), (3, 3, 6, 4));
        assert!(c.obstruction);
        assert!(!c.order_constraint_holds);
        assert!(matches!(
            check_class_a_mixed_pair(&Poly::fermat(3, 2), &Poly::fermat(4, 2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn fermat_mu_mismatch() {
        let r = discriminate(&Poly::fermat(3, 2), &Poly::fermat(4, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::NotEquisingular);
        assert!(r.fired(Rule::MilnorNumberEquality));
        assert_eq!(r.mu, [4, 9]);
    }

    #[test]
    fn window_separated_pair() {
        let r = discriminate(&p2("x^2 + y^3"), &Poly::fermat(5, 2)).unwrap();
        assert_eq!(r.verdict, Verdict::NotEquisingular);
        assert!(r.fired(Rule::DegreeWindow));
    }

    #[test]
    fn class_a_pair_is_equimultiple() {
        let r = discriminate(&p2("x^3 + y^3 + x^4"), &p2("x^3 + y^3 + y^5")).unwrap();
        assert_eq!(r.verdict, Verdict::EquimultipleIfEquisingular);
        assert_eq!(r.mu, [4, 4]);
        assert_eq!(r.class_a, [true, true]);
        assert!(r.checks.iter().any(|c| c.detail.starts_with("chi = -1 and -1")));
    }

    #[test]
    fn quadratic_plane_pair_is_inconclusive() {
        let r = discriminate(&Poly::fermat(2, 2), &p2("x*y")).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn rejects_non_isolated() {
        assert!(matches!(discriminate(&p2("x^2*y^2"), &p2("x^2 + y^2")), Err(Error::NotIsolated(_))));
        assert!(matches!(discriminate(&p2("x + 1"), &p2("x")), Err(Error::NotAGerm(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = discriminate(&p2("x^2 + y^3"), &p2("x^5 + y^5")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "NOT_EQUISINGULAR");
        assert_eq!(v["classA"], serde_json::json!([false, true]));
        assert_eq!(v["mu"], serde_json::json!([2, 16]));
        assert_eq!(v["windows"][1], serde_json::json!({"low": 5, "high": 5}));
        assert_eq!(v["checks"][2]["rule"], "degree-window");
        assert_eq!(v["checks"][2]["fired"], true);
    }
}
