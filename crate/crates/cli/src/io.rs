//! Configuration and norm file formats.
//!
//! Configurations are JSON objects {"dim", "scalar", "points",
//! "multiplicities"}: rational coordinates are "p/q" strings, float
//! coordinates are JSON numbers, and the optional multiplicities expand in
//! place. Emission is canonical: fixed key order, reduced rationals, floats
//! with 17 significant digits, so parse(emit(parse(f))) == parse(f).

use diametral::norm::Norm;
use diametral::point::{AnyConfig, Point, PointConfiguration};
use diametral::polytope::convex_hull;
use diametral::scalar::{format_rational, parse_rational};
use diametral::Rational;
use serde_json::Value;

pub fn parse_configuration(text: &str) -> Result<AnyConfig, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {}", e))?;
    let obj = v.as_object().ok_or("configuration must be a JSON object")?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "dim" | "scalar" | "points" | "multiplicities") {
            return Err(format!("unknown configuration key {:?}", key));
        }
    }
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or("configuration needs a positive integer \"dim\"")? as usize;
    if dim == 0 {
        return Err("configuration needs a positive integer \"dim\"".into());
    }
    let declared = match obj.get("scalar") {
        None => None,
        Some(Value::String(s)) if s == "rational" || s == "float" => Some(s.as_str()),
        Some(other) => {
            return Err(format!(
                "\"scalar\" must be \"rational\" or \"float\", got {}",
                other
            ))
        }
    };
    let rows = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or("configuration needs a \"points\" array")?;

    let multiplicities = match obj.get("multiplicities") {
        None => None,
        Some(Value::Array(ms)) => {
            if ms.len() != rows.len() {
                return Err(format!(
                    "{} multiplicities for {} points",
                    ms.len(),
                    rows.len()
                ));
            }
            let mut out = Vec::with_capacity(ms.len());
            for (i, m) in ms.iter().enumerate() {
                match m.as_u64() {
                    Some(m) if m >= 1 => out.push(m as usize),
                    _ => {
                        return Err(format!(
                            "multiplicity of point {} must be a positive integer",
                            i
                        ))
                    }
                }
            }
            Some(out)
        }
        Some(_) => return Err("\"multiplicities\" must be an array".into()),
    };

    // The first coordinate entry decides the scalar kind; everything after
    // it must agree, and any declared kind must match.
    let mut kind: Option<&str> = declared;
    let mut exact_rows: Vec<Point<Rational>> = Vec::new();
    let mut float_rows: Vec<Point<f64>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let coords = row
            .as_array()
            .ok_or_else(|| format!("point {} is not an array", i))?;
        if coords.len() != dim {
            return Err(format!(
                "point {} has {} coordinates, expected {}",
                i,
                coords.len(),
                dim
            ));
        }
        for (j, c) in coords.iter().enumerate() {
            let seen = match c {
                Value::String(_) => "rational",
                Value::Number(_) => "float",
                _ => {
                    return Err(format!(
                        "coordinate {} of point {} is neither a \"p/q\" string nor a number",
                        j, i
                    ))
                }
            };
            match kind {
                None => kind = Some(seen),
                Some(k) if k == seen => {}
                Some(k) => {
                    return Err(format!(
                    "mixed scalar kinds: configuration is {} but coordinate {} of point {} is {}",
                    k, j, i, seen
                ))
                }
            }
        }
        match kind {
            Some("rational") => {
                let mut p = Vec::with_capacity(dim);
                for (j, c) in coords.iter().enumerate() {
                    let s = c.as_str().expect("kind check passed");
                    let r = parse_rational(s)
                        .map_err(|e| format!("coordinate {} of point {}: {}", j, i, e))?;
                    p.push(r);
                }
                exact_rows.push(Point(p));
            }
            Some("float") => {
                let mut p = Vec::with_capacity(dim);
                for (j, c) in coords.iter().enumerate() {
                    let x = c.as_f64().ok_or_else(|| {
                        format!("coordinate {} of point {} is not a finite number", j, i)
                    })?;
                    p.push(x);
                }
                float_rows.push(Point(p));
            }
            _ => unreachable!("kind fixed by the first coordinate"),
        }
    }
    if kind.is_none() {
        // No points and no declaration: default to exact.
        kind = Some("rational");
    }

    fn expand<S: Clone>(rows: Vec<Point<S>>, mult: &Option<Vec<usize>>) -> Vec<Point<S>> {
        match mult {
            None => rows,
            Some(ms) => {
                let mut out = Vec::new();
                for (p, &m) in rows.iter().zip(ms) {
                    for _ in 0..m {
                        out.push(p.clone());
                    }
                }
                out
            }
        }
    }

    match kind {
        Some("rational") => {
            let pts = expand(exact_rows, &multiplicities);
            let cfg = PointConfiguration::new(dim, pts).map_err(|e| e.to_string())?;
            Ok(AnyConfig::Exact(cfg))
        }
        _ => {
            let pts = expand(float_rows, &multiplicities);
            let cfg = PointConfiguration::new(dim, pts).map_err(|e| e.to_string())?;
            Ok(AnyConfig::Float(cfg))
        }
    }
}

/// 17 significant digits, enough for f64 round-trips.
fn format_float(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Canonical JSON text of a configuration: fixed key order, multiplicities
/// already expanded into repeated points.
pub fn emit_configuration(cfg: &AnyConfig) -> String {
    let mut out = String::new();
    out.push_str("{\"dim\":");
    out.push_str(&cfg.dim().to_string());
    out.push_str(",\"scalar\":");
    match cfg {
        AnyConfig::Exact(c) => {
            out.push_str("\"rational\",\"points\":[");
            for (i, p) in c.points().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for (j, x) in p.0.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    out.push('"');
                    out.push_str(&format_rational(x));
                    out.push('"');
                }
                out.push(']');
            }
        }
        AnyConfig::Float(c) => {
            out.push_str("\"float\",\"points\":[");
            for (i, p) in c.points().iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for (j, x) in p.0.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    out.push_str(&format_float(*x));
                }
                out.push(']');
            }
        }
    }
    out.push_str("]}");
    out
}

/// A norm as specified on the command line or in a file, before committing
/// to a numeric mode.
#[derive(Clone, Debug)]
pub enum NormSpec {
    Euclidean,
    Linf,
    L1,
    Gauge(Vec<Point<Rational>>),
}

impl NormSpec {
    pub fn from_name(name: &str) -> Option<NormSpec> {
        match name {
            "euclidean" => Some(NormSpec::Euclidean),
            "linf" => Some(NormSpec::Linf),
            "l1" => Some(NormSpec::L1),
            _ => None,
        }
    }
}

/// Norm file: {"type":"euclidean"|"linf"|"l1"} or
/// {"type":"gauge","vertices":[["p/q",...],...]}. Gauge vertices are exact
/// and the body is validated when the norm is materialized.
pub fn parse_norm_spec(text: &str) -> Result<NormSpec, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid norm JSON: {}", e))?;
    let obj = v.as_object().ok_or("norm spec must be a JSON object")?;
    let ty = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or("norm spec needs a \"type\" string")?;
    match ty {
        "euclidean" | "linf" | "l1" => {
            if obj.len() != 1 {
                return Err(format!("norm type {:?} takes no other keys", ty));
            }
            Ok(NormSpec::from_name(ty).expect("matched above"))
        }
        "gauge" => {
            let rows = obj
                .get("vertices")
                .and_then(Value::as_array)
                .ok_or("gauge norm needs a \"vertices\" array")?;
            if rows.is_empty() {
                return Err("gauge norm needs at least one vertex".into());
            }
            let mut verts = Vec::with_capacity(rows.len());
            let mut dim = None;
            for (i, row) in rows.iter().enumerate() {
                let coords = row
                    .as_array()
                    .ok_or_else(|| format!("gauge vertex {} is not an array", i))?;
                match dim {
                    None => dim = Some(coords.len()),
                    Some(d) if d == coords.len() => {}
                    Some(d) => {
                        return Err(format!(
                            "gauge vertex {} has {} coordinates, expected {}",
                            i,
                            coords.len(),
                            d
                        ))
                    }
                }
                let mut p = Vec::with_capacity(coords.len());
                for (j, c) in coords.iter().enumerate() {
                    let s = c.as_str().ok_or_else(|| {
                        format!(
                            "gauge vertex coordinates are exact \"p/q\" strings; vertex {} coordinate {} is not",
                            i, j
                        )
                    })?;
                    p.push(
                        parse_rational(s)
                            .map_err(|e| format!("gauge vertex {} coordinate {}: {}", i, j, e))?,
                    );
                }
                verts.push(Point(p));
            }
            Ok(NormSpec::Gauge(verts))
        }
        other => Err(format!(
            "unknown norm type {:?}; expected euclidean, linf, l1, or gauge",
            other
        )),
    }
}

pub fn exact_norm(spec: &NormSpec) -> Result<Norm<Rational>, String> {
    match spec {
        NormSpec::Euclidean => Ok(Norm::Euclidean),
        NormSpec::Linf => Ok(Norm::Linf),
        NormSpec::L1 => Ok(Norm::L1),
        NormSpec::Gauge(verts) => {
            let body = convex_hull(verts).map_err(|e| format!("gauge body: {}", e))?;
            Norm::gauge(body).map_err(|e| format!("gauge body: {}", e))
        }
    }
}

pub fn float_norm(spec: &NormSpec) -> Result<Norm<f64>, String> {
    match spec {
        NormSpec::Euclidean => Ok(Norm::Euclidean),
        NormSpec::Linf => Ok(Norm::Linf),
        NormSpec::L1 => Ok(Norm::L1),
        NormSpec::Gauge(_) => Err("gauge norms require exact mode; rerun with --mode exact".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use diametral::rat;

    #[test]
    fn parses_the_documented_rational_example() {
        let cfg = parse_configuration(
            r#"{"dim":2,"scalar":"rational","points":[["0","0"],["1","0"],["0","1"]]}"#,
        )
        .unwrap();
        assert_eq!(cfg.dim(), 2);
        assert_eq!(cfg.len(), 3);
        assert!(matches!(cfg, AnyConfig::Exact(_)));
    }

    #[test]
    fn multiplicities_expand_in_place() {
        let cfg = parse_configuration(
            r#"{"dim":2,"scalar":"rational","points":[["0","0"],["1","0"],["0","1"]],"multiplicities":[2,2,2]}"#,
        )
        .unwrap();
        assert_eq!(cfg.len(), 6);
        let AnyConfig::Exact(c) = cfg else {
            panic!("expected exact")
        };
        assert_eq!(c.points()[0], c.points()[1]);
        assert_ne!(c.points()[1], c.points()[2]);
    }

    #[test]
    fn scalar_kind_is_inferred_from_entries() {
        let cfg = parse_configuration(r#"{"dim":2,"points":[["1/3","0"]]}"#).unwrap();
        let AnyConfig::Exact(c) = cfg else {
            panic!("expected exact")
        };
        assert_eq!(c.points()[0].0[0], rat(1, 3));

        let cfg = parse_configuration(r#"{"dim":2,"points":[[0.5,1.0]]}"#).unwrap();
        assert!(matches!(cfg, AnyConfig::Float(_)));
    }

    #[test]
    fn mixed_scalars_are_rejected() {
        let err = parse_configuration(r#"{"dim":2,"points":[["1/3",0.5]]}"#).unwrap_err();
        assert!(err.contains("mixed scalar"), "{}", err);
        let err =
            parse_configuration(r#"{"dim":2,"scalar":"float","points":[["1","0"]]}"#).unwrap_err();
        assert!(
            err.contains("mixed scalar") || err.contains("float"),
            "{}",
            err
        );
    }

    #[test]
    fn dimension_and_multiplicity_errors_carry_the_offender() {
        let err = parse_configuration(r#"{"dim":2,"points":[["0","0"],["1"]]}"#).unwrap_err();
        assert!(err.contains("point 1"), "{}", err);
        let err =
            parse_configuration(r#"{"dim":1,"points":[["0"]],"multiplicities":[0]}"#).unwrap_err();
        assert!(err.contains("positive"), "{}", err);
    }

    #[test]
    fn round_trip_is_identity_for_both_scalars() {
        for text in [
            r#"{"dim":2,"scalar":"rational","points":[["0","-1/2"],["22/7","0"]],"multiplicities":[2,1]}"#,
            r#"{"dim":3,"points":[[0.1,-2.5,3.0],[1e-300,0.3333333333333333,2.0]]}"#,
        ] {
            let once = parse_configuration(text).unwrap();
            let twice = parse_configuration(&emit_configuration(&once)).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn norm_specs_parse_and_materialize() {
        assert!(matches!(
            parse_norm_spec(r#"{"type":"linf"}"#).unwrap(),
            NormSpec::Linf
        ));
        let gauge = parse_norm_spec(
            r#"{"type":"gauge","vertices":[["1","0"],["-1","0"],["0","1"],["0","-1"]]}"#,
        )
        .unwrap();
        assert!(exact_norm(&gauge).is_ok());
        assert!(float_norm(&gauge).is_err());
        let asymmetric =
            parse_norm_spec(r#"{"type":"gauge","vertices":[["0","0"],["1","0"],["0","1"]]}"#)
                .unwrap();
        assert!(exact_norm(&asymmetric).is_err());
    }

    #[test]
    fn unknown_keys_and_types_are_rejected() {
        assert!(parse_configuration(r#"{"dim":2,"points":[],"extra":1}"#).is_err());
        assert!(parse_norm_spec(r#"{"type":"l7"}"#).is_err());
    }
}
