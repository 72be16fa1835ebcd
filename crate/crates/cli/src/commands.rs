use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use zmult_core::corpus::{bundled, CorpusEntry};
use zmult_core::deformation::{
    default_alpha_candidates, default_samples, family_caveats, find_alpha, find_transverse_line, line_order_profile,
    mu_profile, rescaling_family, GermFamily,
};
use zmult_core::equisingularity::{discriminate, Rule, Verdict};
use zmult_core::foliation::{vf_milnor, vf_multiplicity, VectorField};
use zmult_core::milnor::{in_class_a, local_milnor_at, milnor_number, truncated_dim_oracle, MilnorValue, OracleDim, DEFAULT_DMAX};
use zmult_core::monodromy::{
    brieskorn_curve_resolution, char_poly, chi_tangent_cone_complement, euler_fiber, homogeneous_resolution,
    lefschetz_sequence, milnor_from_resolution, multiplicity_bound, s_sequence, zeta, ResolutionData,
};
use zmult_core::{LineDirection, Poly};

use crate::args::{Cli, Command, FamilySource, ResolutionSource};
use crate::input::{
    parse_coeff, parse_int_list, parse_int_pairs, parse_point, parse_poly_arg, parse_polys, parse_samples, read_arg,
};
use crate::CliError;

/// A report, plus an error to exit with after it has been printed.
pub struct Outcome {
    pub report: Value,
    pub failure: Option<CliError>,
}

impl From<Value> for Outcome {
    fn from(report: Value) -> Self {
        Outcome { report, failure: None }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let vars = cli.vars.as_deref();
    let (name, outcome) = match &cli.command {
        Command::Mult { poly } => ("mult", mult(poly, vars)?),
        Command::Milnor { poly, oracle, dmax, staircase, at } => {
            ("milnor", milnor(poly, vars, *oracle, *dmax, *staircase, at.as_deref())?)
        }
        Command::Zeta { source, n, horizon } => ("zeta", zeta_cmd(source, *n, *horizon)?),
        Command::Charpoly { source, n } => ("charpoly", charpoly(source, *n)?),
        Command::Discriminate { f, g } => ("discriminate", discriminate_cmd(f, g, vars)?),
        Command::Family { family, samples, line, transverse, trials, candidates } => {
            let ts = match samples {
                Some(s) => parse_samples(s)?,
                None => default_samples(),
            };
            let opts = FamilyOpts { line: line.as_deref(), transverse: *transverse, trials: *trials, seed: cli.seed };
            ("family", family_cmd(family, vars, &ts, &opts, *candidates)?)
        }
        Command::Foliation { components, hamiltonian, gradient } => {
            ("foliation", foliation(components, hamiltonian.as_deref(), gradient.as_deref(), vars)?)
        }
        Command::Corpus { dmax, jobs, only } => ("corpus", corpus(*dmax, *jobs, only.as_deref())?),
    };
    let mut report = object(outcome.report);
    report.insert("command".into(), json!(name));
    Ok(Outcome { report: Value::Object(report), failure: outcome.failure })
}

fn germ(poly: &str, vars: Option<&[String]>) -> Result<(Poly, Vec<String>), CliError> {
    let (f, names) = parse_poly_arg(poly, vars)?;
    if f.is_zero() {
        return Err(zmult_core::Error::ZeroPolynomial.into());
    }
    if f.constant_term() != zmult_core::Coeff::from_int(0) {
        return Err(zmult_core::Error::NotAGerm(f.constant_term().to_string()).into());
    }
    Ok((f, names))
}

fn mult(poly: &str, vars: Option<&[String]>) -> Result<Outcome, CliError> {
    let (f, names) = germ(poly, vars)?;
    let m = f.order()?;
    Ok(json!({
        "multiplicity": m,
        "initial_form": f.initial_form()?.to_string_with(&names),
        "degree": f.degree(),
    })
    .into())
}

/// Oracle horizon for cross-checking an engine result.
fn cross_check_dmax(mu: MilnorValue, dmax: Option<u32>) -> u32 {
    dmax.unwrap_or(match mu {
        MilnorValue::Finite(m) => u32::try_from(2 * m + 4).unwrap_or(u32::MAX),
        MilnorValue::NotIsolated => DEFAULT_DMAX,
    })
}

fn oracle_value(d: OracleDim) -> Value {
    match d {
        OracleDim::Dim(n) => json!(n),
        OracleDim::Unstable => json!("unstable"),
    }
}

fn milnor(
    poly: &str,
    vars: Option<&[String]>,
    oracle: bool,
    dmax: Option<u32>,
    staircase: bool,
    at: Option<&[String]>,
) -> Result<Outcome, CliError> {
    let (f, names) = parse_poly_arg(poly, vars)?;
    let res = match at {
        Some(p) => local_milnor_at(&f, &parse_point(p, f.nvars())?)?,
        None => {
            let (f, _) = germ(poly, vars)?;
            milnor_number(&f)?
        }
    };
    let mut out = Map::new();
    out.insert("mu".into(), to_value(&res.mu));
    out.insert("method".into(), json!(res.method.as_str()));
    if staircase {
        let basis: Option<Vec<String>> = res.staircase.as_ref().map(|s| {
            s.iter().map(|m| Poly::monomial(m.clone(), zmult_core::Coeff::from_int(1)).to_string_with(&names)).collect()
        });
        out.insert("staircase".into(), to_value(&basis));
    }
    let mut failure = None;
    if oracle {
        let g = match at {
            Some(p) => {
                let shifted = f.translate(&parse_point(p, f.nvars())?)?;
                &shifted - &Poly::constant(shifted.nvars(), shifted.constant_term())
            }
            None => f.clone(),
        };
        let o = truncated_dim_oracle(&g.jacobian(), cross_check_dmax(res.mu, dmax))?;
        let agree = match (res.mu, o) {
            (MilnorValue::Finite(m), OracleDim::Dim(d)) => m as usize == d,
            (MilnorValue::NotIsolated, OracleDim::Unstable) => true,
            _ => false,
        };
        if !agree {
            failure = Some(CliError::Engine(format!("engine gives {} but the oracle gives {o:?}", res.mu)));
        }
        out.insert("oracle".into(), oracle_value(o));
        out.insert("agree".into(), json!(agree));
    }
    Ok(Outcome { report: Value::Object(out), failure })
}

struct Resolved {
    res: ResolutionData,
    n: usize,
    /// Tangent-cone Euler characteristic hypothesis, when known to hold.
    certified: bool,
    source: Value,
}

fn resolution(source: &ResolutionSource, n: Option<usize>) -> Result<Resolved, CliError> {
    if let Some(text) = &source.fermat {
        let v = parse_int_pairs(text, &["l", "n"])?;
        let (l, n) = (v[0], v[1] as usize);
        let res = homogeneous_resolution(l, n)?;
        let certified = chi_tangent_cone_complement(l, n)? != 0;
        return Ok(Resolved { res, n, certified, source: json!({"fermat": {"l": l, "n": n}}) });
    }
    if let Some(text) = &source.brieskorn {
        let v = parse_int_list(text, 2)?;
        let res = brieskorn_curve_resolution(v[0], v[1])?;
        return Ok(Resolved { res, n: 2, certified: false, source: json!({"brieskorn": {"a": v[0], "b": v[1]}}) });
    }
    let text = read_arg(source.resolution.as_deref().expect("clap enforces one source"))?;
    let n = n.ok_or_else(|| CliError::Input("--resolution needs --n".into()))?;
    let res = ResolutionData::from_json(&text, n)?;
    let strata: Value = serde_json::from_str(&res.to_json()).expect("strata are JSON");
    Ok(Resolved { res, n, certified: false, source: json!({"resolution": strata, "n": n}) })
}

fn zeta_cmd(source: &ResolutionSource, n: Option<usize>, horizon: Option<u32>) -> Result<Outcome, CliError> {
    let r = resolution(source, n)?;
    let k = horizon.unwrap_or_else(|| (2 * r.res.max_multiplicity()).max(1));
    if k == 0 {
        return Err(CliError::Input("--K must be at least 1".into()));
    }
    let lam = lefschetz_sequence(&r.res, k);
    let s = s_sequence(&r.res);
    let z = zeta(&s)?;
    let s_map: Map<String, Value> = s.nonzero().map(|(i, v)| (i.to_string(), json!(v))).collect();
    Ok(json!({
        "Lambda": lam.values(),
        "s": s_map,
        "Z": z.to_string(),
        "chi": euler_fiber(&r.res),
        "mu": milnor_from_resolution(&r.res, r.n)?,
        "multiplicity": to_value(&multiplicity_bound(&lam, r.certified)),
        "source": r.source,
    })
    .into())
}

fn charpoly(source: &ResolutionSource, n: Option<usize>) -> Result<Outcome, CliError> {
    let r = resolution(source, n)?;
    let z = zeta(&s_sequence(&r.res))?;
    let mu = milnor_from_resolution(&r.res, r.n)?;
    let delta = char_poly(&z, mu, r.n)?;
    let coeffs: Vec<Value> = delta
        .coeffs()
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        })
        .collect();
    Ok(json!({
        "Delta": delta.to_string(),
        "coeffs": coeffs,
        "degree": delta.degree(),
        "mu": mu,
        "Z": z.to_string(),
        "source": r.source,
    })
    .into())
}

/// Structural obstructions are named ahead of the generic Milnor number check.
const RULE_PRIORITY: [Rule; 4] =
    [Rule::RegularSingularMismatch, Rule::DegreeWindow, Rule::MixedClassA, Rule::MilnorNumberEquality];

fn deciding_rule(report: &zmult_core::equisingularity::DiscriminationReport) -> Option<Rule> {
    match report.verdict {
        Verdict::NotEquisingular => RULE_PRIORITY.into_iter().find(|r| report.fired(*r)),
        Verdict::EquimultipleIfEquisingular => Some(Rule::TangentConeEulerCharacteristic),
        Verdict::Inconclusive => None,
    }
}

fn discriminate_cmd(f: &str, g: &str, vars: Option<&[String]>) -> Result<Outcome, CliError> {
    let (polys, _) = parse_polys(&[f, g], vars)?;
    let report = discriminate(&polys[0], &polys[1])?;
    let mut out = object(to_value(&report));
    out.insert("rule".into(), to_value(&deciding_rule(&report)));
    let fired: Vec<Rule> = report.checks.iter().filter(|c| c.fired).map(|c| c.rule).collect();
    out.insert("fired".into(), to_value(&fired));
    Ok(Value::Object(out).into())
}

struct FamilyOpts<'a> {
    line: Option<&'a [String]>,
    transverse: bool,
    trials: usize,
    seed: u64,
}

fn family_cmd(
    source: &FamilySource,
    vars: Option<&[String]>,
    ts: &[BigRational],
    opts: &FamilyOpts,
    candidates: usize,
) -> Result<Outcome, CliError> {
    if let Some(p) = &source.alpha {
        let (p, _) = germ(p, vars)?;
        let found = find_alpha(&p, ts, &default_alpha_candidates(candidates, opts.seed))?;
        let mut out = object(to_value(&found));
        out.insert("caveats".into(), to_value(&family_caveats(p.nvars())));
        return Ok(Value::Object(out).into());
    }
    let fam = match (&source.rescaling, &source.spec) {
        (Some(f), _) => rescaling_family(&germ(f, vars)?.0)?,
        (_, Some(spec)) => GermFamily::from_json(&read_arg(spec)?)?,
        _ => unreachable!("clap enforces one family source"),
    };
    let profile = mu_profile(&fam, ts)?;
    let mut out = object(to_value(&profile));
    out.insert("mu_constant".into(), json!(profile.is_constant()));
    out.insert("caveats".into(), to_value(&family_caveats(fam.nvars())));

    let line = match (opts.line, opts.transverse) {
        (Some(parts), _) => {
            let coeffs = parts.iter().map(|s| parse_coeff(s)).collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() != fam.nvars() {
                return Err(CliError::Input(format!("line needs {} coordinates", fam.nvars())));
            }
            Some(LineDirection::new(coeffs)?)
        }
        (None, true) => {
            let forms = ts
                .iter()
                .map(|t| fam.eval(&zmult_core::Coeff::real(t.clone())))
                .filter(|f| !f.is_zero())
                .map(|f| f.initial_form())
                .collect::<Result<Vec<_>, _>>()?;
            Some(find_transverse_line(&forms, opts.trials, opts.seed)?)
        }
        (None, false) => None,
    };
    if let Some(line) = line {
        let orders = line_order_profile(&fam, &line, ts)?;
        out.insert("line".into(), json!(line.to_string()));
        out.insert("line_orders".into(), to_value(&orders));
    }
    Ok(Value::Object(out).into())
}

fn foliation(
    components: &[String],
    hamiltonian: Option<&str>,
    gradient: Option<&str>,
    vars: Option<&[String]>,
) -> Result<Outcome, CliError> {
    let field = match (hamiltonian, gradient) {
        (Some(f), _) => VectorField::hamiltonian(&germ(f, vars)?.0)?,
        (_, Some(f)) => VectorField::gradient(&germ(f, vars)?.0)?,
        _ => {
            if components.is_empty() {
                return Err(CliError::Input("give the field components, --hamiltonian or --gradient".into()));
            }
            let refs: Vec<&str> = components.iter().map(String::as_str).collect();
            VectorField::new(parse_polys(&refs, vars)?.0)?
        }
    };
    Ok(json!({
        "multiplicity": vf_multiplicity(&field),
        "milnor": to_value(&vf_milnor(&field)?),
        "nvars": field.nvars(),
    })
    .into())
}

fn corpus_entry(e: &CorpusEntry, dmax: Option<u32>) -> Value {
    let run = || -> Result<Value, zmult_core::Error> {
        let f = e.germ()?;
        let mu = milnor_number(&f)?.mu;
        let oracle = truncated_dim_oracle(&f.jacobian(), cross_check_dmax(mu, dmax))?;
        let agree = matches!((mu, oracle), (MilnorValue::Finite(m), OracleDim::Dim(d)) if m as usize == d);
        Ok(json!({
            "name": e.name,
            "poly": e.poly,
            "order": f.order()?,
            "class_a": in_class_a(&f)?,
            "expected": e.mu,
            "mu": to_value(&mu),
            "oracle": oracle_value(oracle),
            "agree": agree && mu == MilnorValue::Finite(e.mu),
        }))
    };
    run().unwrap_or_else(|err| json!({"name": e.name, "poly": e.poly, "error": err.to_string(), "agree": false}))
}

fn corpus(dmax: Option<u32>, jobs: usize, only: Option<&[String]>) -> Result<Outcome, CliError> {
    let entries: Vec<CorpusEntry> = match only {
        Some(names) => {
            let all = bundled();
            names
                .iter()
                .map(|n| {
                    all.iter()
                        .find(|e| &e.name == n)
                        .cloned()
                        .ok_or_else(|| CliError::Input(format!("no corpus entry named `{n}`")))
                })
                .collect::<Result<_, _>>()?
        }
        None => bundled(),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Input(format!("cannot start workers: {e}")))?;
    // par_iter().collect() keeps input order.
    let rows: Vec<Value> = pool.install(|| entries.par_iter().map(|e| corpus_entry(e, dmax)).collect());
    let discrepancies = rows.iter().filter(|r| r["agree"] != json!(true)).count();
    let failure = (discrepancies > 0).then(|| {
        CliError::Engine(format!("{discrepancies} corpus entries disagree with the oracle or the recorded value"))
    });
    Ok(Outcome { report: json!({"entries": rows, "total": rows.len(), "discrepancies": discrepancies}), failure })
}
