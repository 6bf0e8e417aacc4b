//! JSON document types: canonical serialization is compact JSON with
//! sorted keys and a trailing newline, so files diff byte-stably.

use serde_json::{json, Map, Value};
use shifted_hooks::{HookTabloid, ShiftedTabloid, StrictPartition};

pub fn parts_json(shape: &StrictPartition) -> Value {
    Value::Array(
        shape
            .parts()
            .iter()
            .map(|&p| Value::Number(p.into()))
            .collect(),
    )
}

pub fn tabloid_doc(t: &ShiftedTabloid) -> Value {
    let kind = if t.is_standard() {
        "standard"
    } else {
        "tabloid"
    };
    json!({
        "kind": kind,
        "rows": t.rows(),
        "shape": parts_json(t.shape()),
    })
}

pub fn hook_doc(h: &HookTabloid) -> Value {
    let rows: Vec<Value> = h
        .rows()
        .into_iter()
        .map(|row| {
            Value::Array(
                row.into_iter()
                    .map(|p| match p {
                        Some(c) => json!([c.row, c.col]),
                        None => Value::Null,
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "rows": rows,
        "shape": parts_json(h.shape()),
    })
}

pub fn split_doc(s: &ShiftedTabloid, h: &HookTabloid) -> Value {
    json!({
        "hook_tabloid": hook_doc(h),
        "standard": tabloid_doc(s),
    })
}

fn field<'v>(v: &'v Value, key: &str) -> Result<&'v Value, String> {
    v.get(key).ok_or_else(|| format!("missing field \"{key}\""))
}

fn parse_usize(v: &Value, what: &str) -> Result<usize, String> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| format!("{what} must be a non-negative integer"))
}

pub fn parse_shape(v: &Value) -> Result<StrictPartition, String> {
    let arr = v
        .as_array()
        .ok_or_else(|| "\"shape\" must be an array".to_string())?;
    let parts: Vec<usize> = arr
        .iter()
        .map(|p| parse_usize(p, "shape part"))
        .collect::<Result<_, _>>()?;
    StrictPartition::new(parts).map_err(|e| e.to_string())
}

pub fn parse_tabloid(v: &Value) -> Result<ShiftedTabloid, String> {
    let obj = v
        .as_object()
        .ok_or_else(|| "tabloid document must be an object".to_string())?;
    let shape = parse_shape(field(v, "shape")?)?;
    if let Some(kind) = obj.get("kind") {
        let kind = kind
            .as_str()
            .ok_or_else(|| "\"kind\" must be a string".to_string())?;
        if kind != "tabloid" && kind != "standard" {
            return Err(format!("unknown kind \"{kind}\""));
        }
    }
    let rows = field(v, "rows")?
        .as_array()
        .ok_or_else(|| "\"rows\" must be an array".to_string())?;
    let rows: Vec<Vec<usize>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "row must be an array".to_string())?
                .iter()
                .map(|e| parse_usize(e, "entry"))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    ShiftedTabloid::from_rows(shape, &rows).map_err(|e| e.to_string())
}

pub fn parse_hook(v: &Value) -> Result<HookTabloid, String> {
    let shape = parse_shape(field(v, "shape")?)?;
    let rows = field(v, "rows")?
        .as_array()
        .ok_or_else(|| "\"rows\" must be an array".to_string())?;
    let rows: Vec<Vec<Option<(usize, usize)>>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "row must be an array".to_string())?
                .iter()
                .map(|p| match p {
                    Value::Null => Ok(None),
                    Value::Array(pair) if pair.len() == 2 => {
                        let a = parse_usize(&pair[0], "pointer row")?;
                        let b = parse_usize(&pair[1], "pointer column")?;
                        Ok(Some((a, b)))
                    }
                    _ => Err("pointer must be null or a two-element array".to_string()),
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    HookTabloid::from_rows(shape, &rows).map_err(|e| e.to_string())
}

pub fn parse_pair(v: &Value) -> Result<(ShiftedTabloid, HookTabloid), String> {
    let s = parse_tabloid(field(v, "standard")?)?;
    let h = parse_hook(field(v, "hook_tabloid")?)?;
    if s.shape() != h.shape() {
        return Err("tableau and hook tabloid shapes differ".to_string());
    }
    Ok((s, h))
}

/// Compact JSON with sorted keys (the map type is ordered) plus a final
/// newline.
pub fn emit(v: &Value) -> String {
    let mut out = serde_json::to_string(v).expect("serializable");
    out.push('\n');
    out
}

pub fn sorted_object(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// Aligned grid rendering of a tabloid.
pub fn pretty_tabloid(t: &ShiftedTabloid) -> String {
    format!("{t}\n")
}

/// Aligned rendering of a hook tabloid, one pointer per cell.
pub fn pretty_hook(h: &HookTabloid) -> String {
    let mut out = String::new();
    let width = h
        .rows()
        .iter()
        .flatten()
        .map(|p| match p {
            Some(c) => format!("({},{})", c.row, c.col).len(),
            None => 5,
        })
        .max()
        .unwrap_or(5);
    for (i, row) in h.rows().iter().enumerate() {
        out.push_str(&" ".repeat(i * (width + 1)));
        for (k, p) in row.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let cell = match p {
                Some(c) => format!("({},{})", c.row, c.col),
                None => "(-,-)".to_string(),
            };
            out.push_str(&format!("{cell:width$}"));
        }
        out.push('\n');
    }
    out
}
