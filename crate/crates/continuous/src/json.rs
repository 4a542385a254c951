//! Deterministic JSON interchange for continuous frame models and sampling
//! results.
//!
//! Model layout:
//! `{"domain":[{"box":[[lo,hi],...],"density":d}|{"atoms":[{"t":[...],"mass":m},...]}],
//!   "evaluator":"...","params":{...}}`
//! with optional top-level `"norm_bound"`, `"lipschitz"` and
//! `"truncation_defect"` keys. `"density"` also accepts the string
//! `"uniform"` for 1. Every float is written with 17 significant digits, so
//! emit -> parse -> emit is byte-identical. Transformed evaluators are an
//! internal device of the bounded reduction and have no interchange form.

use crate::discretize::SampledContinuousFrame;
use crate::error::{ContinuousError, Result};
use crate::model::{ContinuousFrameModel, DomainRegion, Evaluator, GaborWindow, Point};
use frameforge_core::json::fmt_f64;
use frameforge_core::{C64, CVector, Field};
use serde_json::Value;
use std::fmt::Write as _;

fn push_floats(s: &mut String, xs: &[f64]) {
    s.push('[');
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&fmt_f64(*x));
    }
    s.push(']');
}

fn push_vectors(s: &mut String, field: Field, vectors: &[CVector]) {
    s.push('[');
    for (j, v) in vectors.iter().enumerate() {
        if j > 0 {
            s.push(',');
        }
        s.push('[');
        for (k, z) in v.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            match field {
                Field::Real => s.push_str(&fmt_f64(z.re)),
                Field::Complex => {
                    let _ = write!(s, "[{},{}]", fmt_f64(z.re), fmt_f64(z.im));
                }
            }
        }
        s.push(']');
    }
    s.push(']');
}

fn push_point(s: &mut String, t: Point, axes: usize) {
    if axes == 2 {
        let _ = write!(s, "[{},{}]", fmt_f64(t[0]), fmt_f64(t[1]));
    } else {
        let _ = write!(s, "[{}]", fmt_f64(t[0]));
    }
}

pub fn model_to_json(model: &ContinuousFrameModel) -> Result<String> {
    let axes = model.domain_dim();
    let mut s = String::from("{\"domain\":[");
    for (i, region) in model.domain.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        match region {
            DomainRegion::Box { bounds, density } => {
                s.push_str("{\"box\":[");
                for (k, (lo, hi)) in bounds.iter().enumerate() {
                    if k > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "[{},{}]", fmt_f64(*lo), fmt_f64(*hi));
                }
                let _ = write!(s, "],\"density\":{}}}", fmt_f64(*density));
            }
            DomainRegion::Atoms { atoms } => {
                s.push_str("{\"atoms\":[");
                for (k, (t, mass)) in atoms.iter().enumerate() {
                    if k > 0 {
                        s.push(',');
                    }
                    s.push_str("{\"t\":");
                    push_point(&mut s, *t, axes);
                    let _ = write!(s, ",\"mass\":{}}}", fmt_f64(*mass));
                }
                s.push_str("]}");
            }
        }
    }
    s.push_str("],\"evaluator\":");
    match &model.evaluator {
        Evaluator::Constant { vector } => {
            let _ = write!(s, "\"constant\",\"params\":{{\"field\":\"{}\",\"dim\":{},\"vectors\":",
                model.field().as_str(), model.dim());
            push_vectors(&mut s, model.field(), std::slice::from_ref(vector));
            s.push('}');
        }
        Evaluator::Atomic { vectors } => {
            let _ = write!(s, "\"atomic\",\"params\":{{\"field\":\"{}\",\"dim\":{},\"vectors\":",
                model.field().as_str(), model.dim());
            push_vectors(&mut s, model.field(), vectors);
            s.push('}');
        }
        Evaluator::Piecewise { breakpoints, vectors } => {
            let _ = write!(s, "\"piecewise\",\"params\":{{\"field\":\"{}\",\"dim\":{},\"breakpoints\":",
                model.field().as_str(), model.dim());
            push_floats(&mut s, breakpoints);
            s.push_str(",\"vectors\":");
            push_vectors(&mut s, model.field(), vectors);
            s.push('}');
        }
        Evaluator::Exponential { intervals, freqs, .. } => {
            s.push_str("\"exponential\",\"params\":{\"intervals\":[");
            for (k, (a, b)) in intervals.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                let _ = write!(s, "[{},{}]", fmt_f64(*a), fmt_f64(*b));
            }
            s.push_str("],\"freqs\":");
            push_floats(&mut s, freqs);
            s.push('}');
        }
        Evaluator::Gabor { window, grid, x_half } => {
            s.push_str("\"gabor\",\"params\":{\"coeffs\":");
            push_floats(&mut s, window.coeffs());
            let _ = write!(
                s,
                ",\"sigma\":{},\"grid\":{},\"x_half\":{}}}",
                fmt_f64(window.sigma()),
                grid,
                fmt_f64(*x_half)
            );
        }
        Evaluator::Unbounded { dim } => {
            let _ = write!(s, "\"unbounded\",\"params\":{{\"dim\":{dim}}}");
        }
        Evaluator::Transformed { .. } => {
            return Err(ContinuousError::InvalidInput(
                "transformed evaluators have no interchange form".into(),
            ));
        }
    }
    if let Some(nb) = model.norm_bound {
        let _ = write!(s, ",\"norm_bound\":{}", fmt_f64(nb));
    }
    if let Some(l) = model.lipschitz {
        let _ = write!(s, ",\"lipschitz\":{}", fmt_f64(l));
    }
    if let Some(d) = model.truncation_defect {
        let _ = write!(s, ",\"truncation_defect\":{}", fmt_f64(d));
    }
    s.push('}');
    Ok(s)
}

fn bad(msg: impl Into<String>) -> ContinuousError {
    ContinuousError::InvalidInput(msg.into())
}

fn as_f64(v: &Value, what: &str) -> Result<f64> {
    v.as_f64().ok_or_else(|| bad(format!("{what} must be a number")))
}

fn float_array(v: &Value, what: &str) -> Result<Vec<f64>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?
        .iter()
        .map(|e| as_f64(e, what))
        .collect()
}

fn parse_point(v: &Value) -> Result<Point> {
    let parts = float_array(v, "\"t\"")?;
    match parts.len() {
        1 => Ok([parts[0], 0.0]),
        2 => Ok([parts[0], parts[1]]),
        n => Err(bad(format!("points have 1 or 2 coordinates, got {n}"))),
    }
}

fn parse_field(params: &Value) -> Result<Field> {
    match params.get("field").and_then(Value::as_str) {
        Some("real") => Ok(Field::Real),
        Some("complex") => Ok(Field::Complex),
        Some(other) => Err(bad(format!("field must be \"real\" or \"complex\", got \"{other}\""))),
        None => Err(bad("missing \"field\" in params")),
    }
}

fn parse_vectors(params: &Value, field: Field) -> Result<Vec<CVector>> {
    let raw = params
        .get("vectors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"vectors\" array in params"))?;
    let mut out = Vec::with_capacity(raw.len());
    for (j, rv) in raw.iter().enumerate() {
        let entries =
            rv.as_array().ok_or_else(|| bad(format!("vector {j} is not an array")))?;
        let mut v = CVector::zeros(entries.len());
        for (k, e) in entries.iter().enumerate() {
            v[k] = match field {
                Field::Real => C64::new(as_f64(e, "real coordinate")?, 0.0),
                Field::Complex => {
                    let pair = e
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| bad(format!("vector {j} entry {k} must be [re, im]")))?;
                    C64::new(as_f64(&pair[0], "re part")?, as_f64(&pair[1], "im part")?)
                }
            };
        }
        out.push(v);
    }
    Ok(out)
}

pub fn model_from_json(text: &str) -> Result<ContinuousFrameModel> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| bad(format!("malformed JSON: {e}")))?;
    let obj = root.as_object().ok_or_else(|| bad("top-level JSON value must be an object"))?;

    let mut domain = Vec::new();
    for (i, rv) in obj
        .get("domain")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"domain\" array"))?
        .iter()
        .enumerate()
    {
        let region = rv.as_object().ok_or_else(|| bad(format!("domain entry {i} must be an object")))?;
        if let Some(b) = region.get("box") {
            let axes = b.as_array().ok_or_else(|| bad("\"box\" must be an array of [lo, hi]"))?;
            let mut bounds = Vec::with_capacity(axes.len());
            for axis in axes {
                let pair = float_array(axis, "box axis")?;
                if pair.len() != 2 {
                    return Err(bad("box axes are [lo, hi] pairs"));
                }
                bounds.push((pair[0], pair[1]));
            }
            let density = match region.get("density") {
                None => 1.0,
                Some(Value::String(s)) if s == "uniform" => 1.0,
                Some(v) => as_f64(v, "\"density\"")?,
            };
            domain.push(DomainRegion::Box { bounds, density });
        } else if let Some(a) = region.get("atoms") {
            let raw = a.as_array().ok_or_else(|| bad("\"atoms\" must be an array"))?;
            let mut atoms = Vec::with_capacity(raw.len());
            for atom in raw {
                let t = parse_point(atom.get("t").ok_or_else(|| bad("atom missing \"t\""))?)?;
                let mass = as_f64(atom.get("mass").ok_or_else(|| bad("atom missing \"mass\""))?, "\"mass\"")?;
                atoms.push((t, mass));
            }
            domain.push(DomainRegion::Atoms { atoms });
        } else {
            return Err(bad(format!("domain entry {i} needs a \"box\" or \"atoms\" key")));
        }
    }

    let kind = obj
        .get("evaluator")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"evaluator\" string"))?;
    let params = obj.get("params").cloned().unwrap_or(Value::Null);
    let evaluator = match kind {
        "constant" => {
            let field = parse_field(&params)?;
            let vectors = parse_vectors(&params, field)?;
            if vectors.len() != 1 {
                return Err(bad("constant evaluators carry exactly one vector"));
            }
            Evaluator::Constant { vector: vectors.into_iter().next().unwrap() }
        }
        "atomic" => {
            let field = parse_field(&params)?;
            Evaluator::Atomic { vectors: parse_vectors(&params, field)? }
        }
        "piecewise" => {
            let field = parse_field(&params)?;
            let breakpoints = float_array(
                params.get("breakpoints").ok_or_else(|| bad("missing \"breakpoints\""))?,
                "\"breakpoints\"",
            )?;
            Evaluator::Piecewise { breakpoints, vectors: parse_vectors(&params, field)? }
        }
        "exponential" => {
            let raw = params
                .get("intervals")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"intervals\" array"))?;
            let mut intervals = Vec::with_capacity(raw.len());
            for iv in raw {
                let pair = float_array(iv, "interval")?;
                if pair.len() != 2 {
                    return Err(bad("intervals are [a, b] pairs"));
                }
                intervals.push((pair[0], pair[1]));
            }
            let freqs = float_array(
                params.get("freqs").ok_or_else(|| bad("missing \"freqs\""))?,
                "\"freqs\"",
            )?;
            let whiten = crate::generators::whitening(&intervals, &freqs)?;
            Evaluator::Exponential { intervals, freqs, whiten }
        }
        "gabor" => {
            let coeffs = float_array(
                params.get("coeffs").ok_or_else(|| bad("missing \"coeffs\""))?,
                "\"coeffs\"",
            )?;
            let sigma = as_f64(params.get("sigma").ok_or_else(|| bad("missing \"sigma\""))?, "\"sigma\"")?;
            let grid = params
                .get("grid")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing or non-integer \"grid\""))? as usize;
            let x_half =
                as_f64(params.get("x_half").ok_or_else(|| bad("missing \"x_half\""))?, "\"x_half\"")?;
            Evaluator::Gabor { window: GaborWindow::new(coeffs, sigma)?, grid, x_half }
        }
        "unbounded" => {
            let dim = params
                .get("dim")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("missing or non-integer \"dim\""))? as usize;
            Evaluator::Unbounded { dim }
        }
        other => {
            return Err(bad(format!(
                "unknown evaluator \"{other}\"; expected constant, atomic, piecewise, \
                 exponential, gabor, or unbounded"
            )))
        }
    };

    let mut model = ContinuousFrameModel::new(domain, evaluator)?;
    if let Some(v) = obj.get("norm_bound") {
        model = model.with_norm_bound(as_f64(v, "\"norm_bound\"")?)?;
    }
    if let Some(v) = obj.get("lipschitz") {
        model = model.with_lipschitz(as_f64(v, "\"lipschitz\"")?)?;
    }
    if let Some(v) = obj.get("truncation_defect") {
        model = model.with_truncation_defect(as_f64(v, "\"truncation_defect\"")?);
    }
    Ok(model)
}

/// Deterministic JSON for a certified sampling; mirrors the sampler's report
/// layout with domain points in place of base indices.
pub fn sampled_to_json(sampled: &SampledContinuousFrame) -> String {
    let mut s = String::from("{\"points\":[");
    for (i, p) in sampled.points.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "[{},{}]", fmt_f64(p[0]), fmt_f64(p[1]));
    }
    s.push_str("],\"multiplicities\":[");
    for (i, m) in sampled.multiplicities.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{m}");
    }
    let _ = write!(
        s,
        "],\"bounds\":[{},{}],\"epsilon\":{},\"epsilon_zero\":{},\"parseval_deviation\":{},\
         \"max_sample_norm\":{},\"rescale\":{},\"rigorous\":{},\"certificates\":{{",
        fmt_f64(sampled.bounds.lower),
        fmt_f64(sampled.bounds.upper),
        fmt_f64(sampled.epsilon),
        fmt_f64(sampled.epsilon_zero),
        fmt_f64(sampled.parseval_deviation),
        fmt_f64(sampled.max_sample_norm),
        fmt_f64(sampled.rescale),
        sampled.rigorous,
    );
    for (i, c) in sampled.certificates.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "\"{}\":{}", c.name, fmt_f64(c.slack()));
    }
    s.push_str("}}");
    s
}
