//! JSON serialization for the tabulated categories and their inputs.
//!
//! All numeric payloads are exact strings: rationals as `"p/q"` in
//! lowest terms, phases as their exponent string, values `√m·e(r)` as
//! `{"m": "p/q", "r": "p/q"}`.  Enumeration orders are deterministic, so
//! identical data serializes to identical bytes.

use crate::abgroup::AbGroup;
use crate::crossedcat::{CrossedCat, FMat, SimpleId};
use crate::error::{Result, ZcrossError};
use crate::qform::QuadForm;
use crate::scalar::{format_rational, parse_rational, Phase, Rational, ScaledScalar};
use num::Signed;
use serde_json::{json, Map, Value};

fn bad(msg: &str) -> ZcrossError {
    ZcrossError::InvalidInput(msg.to_string())
}

fn phase_value(p: Phase) -> Value {
    Value::String(format_rational(p.exponent()))
}

fn parse_phase(v: &Value) -> Result<Phase> {
    let s = v.as_str().ok_or_else(|| bad("phase must be a string exponent"))?;
    let r = parse_rational(s).ok_or_else(|| bad("phase exponent must be a rational \"p/q\""))?;
    Ok(Phase::new(r))
}

fn scaled_value(s: ScaledScalar) -> Value {
    json!({ "m": format_rational(s.m), "r": format_rational(s.phase.exponent()) })
}

fn parse_scaled(v: &Value) -> Result<ScaledScalar> {
    let obj = v.as_object().ok_or_else(|| bad("scalar must be an object {\"m\", \"r\"}"))?;
    let m = obj
        .get("m")
        .and_then(Value::as_str)
        .and_then(parse_rational)
        .ok_or_else(|| bad("scalar magnitude \"m\" must be a rational string"))?;
    let r = obj
        .get("r")
        .and_then(Value::as_str)
        .and_then(parse_rational)
        .ok_or_else(|| bad("scalar phase \"r\" must be a rational string"))?;
    if !m.is_positive() {
        return Err(bad("scalar magnitude must be positive"));
    }
    Ok(ScaledScalar::new(m, Phase::new(r)))
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| bad(&format!("missing or invalid index field \"{}\"", key)))
}

// ---------------------------------------------------------------------------
// Groups, forms, grams, subgroup generators
// ---------------------------------------------------------------------------

pub fn group_to_json(g: &AbGroup) -> Value {
    json!({ "invariant_factors": g.factors })
}

pub fn group_from_json(v: &Value) -> Result<AbGroup> {
    let factors = v
        .get("invariant_factors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("group must have \"invariant_factors\""))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad("invariant factors must be integers")))
        .collect::<Result<Vec<i64>>>()?;
    AbGroup::new(factors)
}

pub fn form_to_json(q: &QuadForm) -> Value {
    json!({
        "group": group_to_json(&q.group),
        "gen_values": q.gen_values.iter().map(|r| format_rational(*r)).collect::<Vec<_>>(),
        "gen_pairs": q.gen_pairs.iter().map(|r| format_rational(*r)).collect::<Vec<_>>(),
    })
}

pub fn form_from_json(v: &Value) -> Result<QuadForm> {
    let group = group_from_json(v.get("group").ok_or_else(|| bad("form must have \"group\""))?)?;
    let parse_list = |key: &str| -> Result<Vec<Rational>> {
        v.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(&format!("form must have \"{}\"", key)))?
            .iter()
            .map(|x| {
                x.as_str()
                    .and_then(parse_rational)
                    .ok_or_else(|| bad("form entries must be rational strings"))
            })
            .collect()
    };
    QuadForm::new(group, parse_list("gen_values")?, parse_list("gen_pairs")?)
}

pub fn gram_from_json(v: &Value) -> Result<Vec<Vec<i64>>> {
    v.get("gram")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected {\"gram\": [[...]]}"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("gram rows must be arrays"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("gram entries must be integers")))
                .collect()
        })
        .collect()
}

/// Parse `{"generators": [[...], ...]}` (subgroup generators as element
/// coordinate vectors).
pub fn generators_from_json(v: &Value) -> Result<Vec<Vec<i64>>> {
    v.get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected {\"generators\": [[...]]}"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("generators must be arrays"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("generator entries must be integers")))
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// CrossedCat
// ---------------------------------------------------------------------------

pub fn cat_to_json(cat: &CrossedCat) -> Value {
    let mut out = Map::new();
    out.insert("group".into(), group_to_json(&cat.group));
    out.insert("twisted".into(), json!(cat.twisted));
    out.insert("fusion".into(), json!(cat.fusion));

    let mut f_keys: Vec<_> = cat.f.keys().copied().collect();
    f_keys.sort();
    let f_list: Vec<Value> = f_keys
        .iter()
        .map(|&(x, y, z, s)| {
            let m = &cat.f[&(x, y, z, s)];
            json!({
                "x": x, "y": y, "z": z, "s": s,
                "rows": m.rows,
                "cols": m.cols,
                "entries": m.entries.iter().map(|e| scaled_value(*e)).collect::<Vec<_>>(),
            })
        })
        .collect();
    out.insert("f".into(), Value::Array(f_list));

    let phase_table = |table: &std::collections::HashMap<(SimpleId, SimpleId, SimpleId), Phase>| {
        let mut keys: Vec<_> = table.keys().copied().collect();
        keys.sort();
        Value::Array(
            keys.iter()
                .map(|&(x, y, t)| json!({"x": x, "y": y, "t": t, "r": phase_value(table[&(x, y, t)])}))
                .collect(),
        )
    };
    out.insert("r".into(), phase_table(&cat.r));
    out.insert("tau".into(), phase_table(&cat.tau));
    out.insert("t2".into(), Value::Array(cat.t2.iter().map(|p| phase_value(*p)).collect()));
    out.insert("action".into(), json!(cat.action));
    out.insert("theta".into(), Value::Array(cat.theta.iter().map(|p| phase_value(*p)).collect()));
    out.insert("epsilon".into(), json!(cat.epsilon_sign));
    out.insert("alpha".into(), phase_value(cat.alpha));
    out.insert("beta".into(), phase_value(cat.beta));
    out.insert("dims".into(), Value::Array(cat.dims.iter().map(|d| scaled_value(*d)).collect()));
    Value::Object(out)
}

pub fn cat_from_json(v: &Value) -> Result<CrossedCat> {
    let group = group_from_json(v.get("group").ok_or_else(|| bad("missing \"group\""))?)?;
    let twisted: Vec<String> = v
        .get("twisted")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"twisted\""))?
        .iter()
        .map(|x| x.as_str().map(String::from).ok_or_else(|| bad("twisted labels must be strings")))
        .collect::<Result<_>>()?;
    let n = group.order() as usize + twisted.len();

    let fusion: Vec<Vec<Vec<SimpleId>>> = serde_json::from_value(
        v.get("fusion").cloned().ok_or_else(|| bad("missing \"fusion\""))?,
    )
    .map_err(|e| bad(&format!("invalid fusion table: {}", e)))?;
    if fusion.len() != n || fusion.iter().any(|row| row.len() != n) {
        return Err(bad("fusion table shape does not match the simple count"));
    }
    if fusion.iter().flatten().flatten().any(|&t| t >= n) {
        return Err(bad("fusion table references an unknown simple"));
    }

    let mut f = std::collections::HashMap::new();
    for item in v.get("f").and_then(Value::as_array).ok_or_else(|| bad("missing \"f\""))? {
        let (x, y, z, s) = (
            usize_field(item, "x")?,
            usize_field(item, "y")?,
            usize_field(item, "z")?,
            usize_field(item, "s")?,
        );
        let rows: Vec<SimpleId> =
            serde_json::from_value(item.get("rows").cloned().ok_or_else(|| bad("F block missing rows"))?)
                .map_err(|e| bad(&format!("invalid F rows: {}", e)))?;
        let cols: Vec<SimpleId> =
            serde_json::from_value(item.get("cols").cloned().ok_or_else(|| bad("F block missing cols"))?)
                .map_err(|e| bad(&format!("invalid F cols: {}", e)))?;
        let entries = item
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("F block missing entries"))?
            .iter()
            .map(parse_scaled)
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != rows.len() * cols.len() {
            return Err(bad("F block entry count does not match its shape"));
        }
        if x >= n || y >= n || z >= n || s >= n || rows.iter().chain(&cols).any(|&t| t >= n) {
            return Err(bad("F block references an unknown simple"));
        }
        f.insert((x, y, z, s), FMat { rows, cols, entries });
    }

    let phase_table = |key: &str| -> Result<std::collections::HashMap<(SimpleId, SimpleId, SimpleId), Phase>> {
        let mut out = std::collections::HashMap::new();
        for item in v.get(key).and_then(Value::as_array).ok_or_else(|| bad(&format!("missing \"{}\"", key)))? {
            let (x, y, t) =
                (usize_field(item, "x")?, usize_field(item, "y")?, usize_field(item, "t")?);
            if x >= n || y >= n || t >= n {
                return Err(bad(&format!("\"{}\" table references an unknown simple", key)));
            }
            let p = parse_phase(item.get("r").ok_or_else(|| bad("phase table entry missing \"r\""))?)?;
            out.insert((x, y, t), p);
        }
        Ok(out)
    };
    let r = phase_table("r")?;
    let tau = phase_table("tau")?;

    let phase_list = |key: &str| -> Result<Vec<Phase>> {
        let list = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad(&format!("missing \"{}\"", key)))?
            .iter()
            .map(parse_phase)
            .collect::<Result<Vec<_>>>()?;
        if list.len() != n {
            return Err(bad(&format!("\"{}\" must have one entry per simple", key)));
        }
        Ok(list)
    };
    let t2 = phase_list("t2")?;
    let theta = phase_list("theta")?;

    let action: Vec<SimpleId> =
        serde_json::from_value(v.get("action").cloned().ok_or_else(|| bad("missing \"action\""))?)
            .map_err(|e| bad(&format!("invalid action table: {}", e)))?;
    if action.len() != n || action.iter().any(|&x| x >= n) {
        return Err(bad("action must be a permutation of the simples"));
    }
    let epsilon_sign = v
        .get("epsilon")
        .and_then(Value::as_i64)
        .filter(|&e| e == 1 || e == -1)
        .ok_or_else(|| bad("\"epsilon\" must be ±1"))? as i8;
    let alpha = parse_phase(v.get("alpha").ok_or_else(|| bad("missing \"alpha\""))?)?;
    let beta = parse_phase(v.get("beta").ok_or_else(|| bad("missing \"beta\""))?)?;
    let dims = v
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"dims\""))?
        .iter()
        .map(parse_scaled)
        .collect::<Result<Vec<_>>>()?;
    if dims.len() != n {
        return Err(bad("\"dims\" must have one entry per simple"));
    }

    Ok(CrossedCat {
        group,
        twisted,
        fusion,
        f,
        r,
        tau,
        t2,
        action,
        theta,
        epsilon_sign,
        alpha,
        beta,
        dims,
    })
}

/// Render a value as a deterministic pretty JSON string with trailing
/// newline (`serde_json` object keys are ordered, so output is
/// byte-stable).
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_glm, build_ty};
    use crate::lattice::LatticeData;

    #[test]
    fn form_round_trip() {
        let q = QuadForm::cyclic(9, 1).unwrap();
        let v = form_to_json(&q);
        let q2 = form_from_json(&v).unwrap();
        assert_eq!(q2.group.factors, vec![9]);
        assert_eq!(q2.gen_values, q.gen_values);
        assert_eq!(to_string(&form_to_json(&q2)), to_string(&v));
    }

    #[test]
    fn cat_round_trip_is_byte_identical() {
        let cat = build_ty(&QuadForm::cyclic(3, 1).unwrap(), 1).unwrap();
        let s1 = to_string(&cat_to_json(&cat));
        let cat2 = cat_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
        let s2 = to_string(&cat_to_json(&cat2));
        assert_eq!(s1, s2);
        // The deserialized category still verifies.
        assert!(cat2.verify_fusion_ring().pass());
        assert!(cat2.verify_pentagon(None).pass());
        assert!(cat2.verify_crossed_braiding(None).pass());
    }

    #[test]
    fn glm_cat_round_trip() {
        let cat = build_glm(&LatticeData::new(vec![vec![2, 0], vec![0, 4]]).unwrap(), -1).unwrap();
        let s1 = to_string(&cat_to_json(&cat));
        let cat2 = cat_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
        assert_eq!(to_string(&cat_to_json(&cat2)), s1);
        assert_eq!(cat2.epsilon_sign, -1);
        assert_eq!(cat2.alpha, cat.alpha);
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(form_from_json(&serde_json::json!({"group": {}})).is_err());
        assert!(cat_from_json(&serde_json::json!({"group": {"invariant_factors": [3]}})).is_err());
        assert!(gram_from_json(&serde_json::json!({"gram": [[2, "x"]]})).is_err());
    }
}
