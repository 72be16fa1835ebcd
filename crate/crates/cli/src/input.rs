//! Reading and parsing command-line inputs.

use num_rational::BigRational;
use zmult_core::poly::infer_vars;
use zmult_core::{parse_poly, Coeff, Poly};

use crate::CliError;

/// Inline text, or the contents of a file for `@path`.
pub fn read_arg(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// Parses several polynomials over a common variable list.
pub fn parse_polys(args: &[&str], vars: Option<&[String]>) -> Result<(Vec<Poly>, Vec<String>), CliError> {
    let texts = args.iter().map(|a| read_arg(a)).collect::<Result<Vec<_>, _>>()?;
    let vars = match vars {
        Some(v) => v.to_vec(),
        None => infer_vars(&texts),
    };
    if vars.is_empty() {
        return Err(CliError::Input("no variables found; pass --vars".into()));
    }
    let polys = texts.iter().map(|t| parse_poly(t, &vars)).collect::<Result<Vec<_>, _>>()?;
    Ok((polys, vars))
}

pub fn parse_poly_arg(arg: &str, vars: Option<&[String]>) -> Result<(Poly, Vec<String>), CliError> {
    let (mut polys, vars) = parse_polys(&[arg], vars)?;
    Ok((polys.remove(0), vars))
}

/// A Gaussian rational such as `3`, `-1/2` or `1+2*i`.
pub fn parse_coeff(text: &str) -> Result<Coeff, CliError> {
    let p = parse_poly::<&str>(text, &[])?;
    Ok(p.constant_term())
}

pub fn parse_point(parts: &[String], nvars: usize) -> Result<Vec<Coeff>, CliError> {
    if parts.len() != nvars {
        return Err(CliError::Input(format!("expected {nvars} coordinates, got {}", parts.len())));
    }
    parts.iter().map(|s| parse_coeff(s)).collect()
}

pub fn parse_samples(parts: &[String]) -> Result<Vec<BigRational>, CliError> {
    parts
        .iter()
        .map(|s| {
            s.trim().parse::<BigRational>().map_err(|e| CliError::Input(format!("bad parameter sample `{s}`: {e}")))
        })
        .collect()
}

/// `key=value,key=value` with integer values; every key in `keys` is required.
pub fn parse_int_pairs(text: &str, keys: &[&str]) -> Result<Vec<u32>, CliError> {
    let mut out = vec![None; keys.len()];
    for part in text.split(',') {
        let (k, v) =
            part.split_once('=').ok_or_else(|| CliError::Input(format!("expected key=value, got `{part}`")))?;
        let idx = keys
            .iter()
            .position(|key| *key == k.trim())
            .ok_or_else(|| CliError::Input(format!("unknown key `{}`", k.trim())))?;
        let v = v.trim().parse::<u32>().map_err(|e| CliError::Input(format!("bad value for {k}: {e}")))?;
        out[idx] = Some(v);
    }
    keys.iter().zip(out).map(|(k, v)| v.ok_or_else(|| CliError::Input(format!("missing {k}")))).collect()
}

pub fn parse_int_list(text: &str, len: usize) -> Result<Vec<u32>, CliError> {
    let vals = text
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|e| CliError::Input(format!("bad integer `{s}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if vals.len() != len {
        return Err(CliError::Input(format!("expected {len} integers, got {}", vals.len())));
    }
    Ok(vals)
}
