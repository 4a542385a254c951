//! Deterministic JSON interchange for frames.
//!
//! Layout: `{"field":"real"|"complex","dim":n,"vectors":[...],"weights":[...]}`
//! with real coordinates as plain numbers and complex coordinates as
//! two-element `[re, im]` arrays. Writers emit every coordinate with 17
//! significant digits, which round-trips `f64` exactly, so parse-then-emit is
//! byte-identical.

use crate::error::FrameError;
use crate::frame::{Field, Frame};
use crate::{C64, CVector};
use serde_json::Value;
use std::fmt::Write as _;

/// 17-significant-digit scientific format; exact round-trip for `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{:.16e}", v)
}

pub fn frame_to_json(frame: &Frame) -> String {
    let mut s = String::new();
    let _ = write!(s, "{{\"field\":\"{}\",\"dim\":{}", frame.field().as_str(), frame.dim());
    s.push_str(",\"vectors\":[");
    for j in 0..frame.len() {
        if j > 0 {
            s.push(',');
        }
        s.push('[');
        let v = frame.vector(j);
        for (k, z) in v.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            match frame.field() {
                Field::Real => s.push_str(&fmt_f64(z.re)),
                Field::Complex => {
                    let _ = write!(s, "[{},{}]", fmt_f64(z.re), fmt_f64(z.im));
                }
            }
        }
        s.push(']');
    }
    s.push(']');
    if let Some(w) = frame.weights() {
        s.push_str(",\"weights\":[");
        for (k, x) in w.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&fmt_f64(*x));
        }
        s.push(']');
    }
    s.push('}');
    s
}

pub fn frame_from_json(text: &str) -> Result<Frame, FrameError> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| FrameError::InvalidInput(format!("malformed JSON: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| FrameError::InvalidInput("top-level JSON value must be an object".into()))?;

    let field = match obj.get("field").and_then(Value::as_str) {
        Some("real") => Field::Real,
        Some("complex") => Field::Complex,
        Some(other) => {
            return Err(FrameError::InvalidInput(format!(
                "field must be \"real\" or \"complex\", got \"{other}\""
            )))
        }
        None => return Err(FrameError::InvalidInput("missing \"field\"".into())),
    };
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| FrameError::InvalidInput("missing or non-integer \"dim\"".into()))?
        as usize;
    let raw_vectors = obj
        .get("vectors")
        .and_then(Value::as_array)
        .ok_or_else(|| FrameError::InvalidInput("missing \"vectors\" array".into()))?;

    let mut vectors = Vec::with_capacity(raw_vectors.len());
    for (j, rv) in raw_vectors.iter().enumerate() {
        let entries = rv
            .as_array()
            .ok_or_else(|| FrameError::InvalidInput(format!("vector {j} is not an array")))?;
        let mut v = CVector::zeros(entries.len());
        for (k, e) in entries.iter().enumerate() {
            v[k] = parse_coordinate(field, e).map_err(|msg| {
                FrameError::InvalidInput(format!("vector {j} entry {k}: {msg}"))
            })?;
        }
        vectors.push(v);
    }

    let weights = match obj.get("weights") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => {
            let mut w = Vec::with_capacity(a.len());
            for (k, e) in a.iter().enumerate() {
                let x = e.as_f64().ok_or_else(|| {
                    FrameError::InvalidInput(format!("weight {k} is not a number"))
                })?;
                w.push(x);
            }
            Some(w)
        }
        Some(_) => return Err(FrameError::InvalidInput("\"weights\" must be an array".into())),
    };

    Frame::new(field, dim, vectors, weights)
}

fn parse_coordinate(field: Field, e: &Value) -> Result<C64, String> {
    match field {
        Field::Real => {
            let x = e.as_f64().ok_or("real coordinate must be a number")?;
            Ok(C64::new(x, 0.0))
        }
        Field::Complex => {
            let pair = e.as_array().ok_or("complex coordinate must be [re, im]")?;
            if pair.len() != 2 {
                return Err(format!("complex coordinate has {} parts, expected 2", pair.len()));
            }
            let re = pair[0].as_f64().ok_or("re part must be a number")?;
            let im = pair[1].as_f64().ok_or("im part must be a number")?;
            Ok(C64::new(re, im))
        }
    }
}
