//! `key = value` configuration files. Polynomial colourings must declare
//! their ring with `ring = Q[u,v][[h]]`.

use std::collections::BTreeMap;

use crystal::{parse_poly_series, Colouring};

use crate::error::CliError;

/// Keys a configuration file may set.
pub const KEYS: &[&str] =
    &["psi", "psi2", "degree", "order", "order_hp", "pmax", "format", "seed", "n", "g", "depth", "type", "weight", "max_rank", "ring"];

pub const POLY_RING: &str = "Q[u,v][[h]]";

/// Parses a configuration file. Blank lines and lines starting with `#`
/// are ignored; unknown or repeated keys are errors.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| CliError::Config { line: i + 1, msg };
        let (k, v) = line.split_once('=').ok_or_else(|| err("expected 'key = value'".into()))?;
        let (k, v) = (k.trim(), v.trim());
        if !KEYS.contains(&k) {
            return Err(err(format!("unknown key '{}'", k)));
        }
        if v.is_empty() {
            return Err(err(format!("empty value for '{}'", k)));
        }
        if out.insert(k.to_string(), v.to_string()).is_some() {
            return Err(err(format!("duplicate key '{}'", k)));
        }
    }
    let poly = ["psi", "psi2"].iter().any(|k| out.get(*k).is_some_and(|v| v.starts_with("poly:")));
    match out.get("ring").map(String::as_str) {
        Some(POLY_RING) | None if !poly => {}
        Some(POLY_RING) => {}
        Some(r) => return Err(CliError::Config { line: 0, msg: format!("unsupported ring '{}', expected {}", r, POLY_RING) }),
        None => return Err(CliError::Config { line: 0, msg: format!("polynomial colourings need 'ring = {}'", POLY_RING) }),
    }
    Ok(out)
}

/// `classical`, `quantum`, `quantum:D`, `poly:EXPR` (both signs) or
/// `poly:MINUS;PLUS`, with expressions in `h`, `u`, `v`.
pub fn parse_colouring(spec: &str, order: usize) -> Result<Colouring, CliError> {
    let spec = spec.trim();
    if spec == "classical" {
        return Ok(Colouring::Classical);
    }
    if spec == "quantum" {
        return Ok(Colouring::quantum());
    }
    if let Some(d) = spec.strip_prefix("quantum:") {
        let d: i64 = d.trim().parse().map_err(|_| CliError::Usage(format!("bad quantum parameter '{}'", d)))?;
        if d < 1 {
            return Err(CliError::Usage("quantum parameter must be positive".into()));
        }
        return Ok(Colouring::Quantum { d });
    }
    if let Some(body) = spec.strip_prefix("poly:") {
        return Ok(match body.split_once(';') {
            Some((m, p)) => Colouring::PolySeries { minus: parse_poly_series(m, order)?, plus: parse_poly_series(p, order)? },
            None => Colouring::symmetric_poly(parse_poly_series(body, order)?),
        });
    }
    Err(CliError::Usage(format!("unknown colouring '{}'", spec)))
}

/// Comma-separated integers such as `1,0`.
pub fn parse_weight(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad weight '{}'", s)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let c = parse_config("# run\npsi = quantum\norder = 4\n").unwrap();
        assert_eq!(c["psi"], "quantum");
        assert!(matches!(parse_config("psi = quantum\npsi = classical"), Err(CliError::Config { line: 2, .. })));
        assert!(matches!(parse_config("colour = red"), Err(CliError::Config { .. })));
        assert!(parse_config("psi = poly:v + h").is_err());
        assert!(parse_config("psi = poly:v + h\nring = Q[u,v][[h]]").is_ok());
    }

    #[test]
    fn colourings() {
        assert!(matches!(parse_colouring("quantum:2", 3).unwrap(), Colouring::Quantum { d: 2 }));
        assert!(parse_colouring("quantum:0", 3).is_err());
        assert!(parse_colouring("poly:v;v + h*u", 3).is_ok());
        assert!(parse_colouring("what", 3).is_err());
        assert_eq!(parse_weight("1, -2").unwrap(), vec![1, -2]);
    }
}
