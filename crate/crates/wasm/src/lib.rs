//! Browser bindings. Every export takes a geometric type as JSON text and returns JSON text.

use geotype::{
    check_injectivity, format, incidence_matrix, refine_if_needed, BiCode, BoundaryCodes, Error,
    GeometricType, Subshift,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn load(src: &str) -> Result<GeometricType, String> {
    format::parse_type(src).map_err(|e| e.to_string())
}

fn type_json(t: &GeometricType) -> Value {
    serde_json::to_value(format::GeoTypeFile::from_type(t)).expect("serializable")
}

/// Binary refinement of `src` together with its incidence matrix.
pub fn refine_json(src: &str) -> Result<String, String> {
    let t = load(src)?;
    let (b, applied) = refine_if_needed(&t);
    let a = incidence_matrix(&b);
    let out = json!({
        "applied": applied,
        "type": type_json(&b),
        "file": format::to_file_string(&b),
        "matrix": a.rows(),
        "mixing": a.is_mixing(),
    });
    Ok(out.to_string())
}

/// Boundary codes of every s- and u-label of `src`.
pub fn boundary_codes_json(src: &str) -> Result<String, String> {
    let t = load(src)?;
    let codes = BoundaryCodes::new(&t);
    let rows: Vec<Value> = codes
        .s
        .iter()
        .chain(&codes.u)
        .map(|(lbl, c)| json!({ "label": lbl, "code": c.to_string() }))
        .collect();
    Ok(json!({ "codes": rows, "injective": check_injectivity(&t) }).to_string())
}

/// Stratum and identification class of `code` in the refinement of `src`.
pub fn class_json(src: &str, code: &str, cap: usize) -> Result<String, String> {
    let (b, _) = refine_if_needed(&load(src)?);
    let sub = Subshift::new(&b).map_err(|e| e.to_string())?;
    let w: BiCode = code.parse().map_err(|e: Error| e.to_string())?;
    if w.max_symbol() > b.n() {
        return Err(format!(
            "code uses symbol {} but the refined type has n={}",
            w.max_symbol(),
            b.n()
        ));
    }
    let f = sub.classify(&w).map_err(|e| e.to_string())?;
    let r = sub.class_of(&w, cap.max(1)).map_err(|e| e.to_string())?;
    let out = json!({
        "code": w,
        "in_s": f.in_s,
        "in_u": f.in_u,
        "truncated": r.truncated,
        "members": r.members,
        "chain": r.chain,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn refine(src: &str) -> Result<String, JsError> {
    refine_json(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = boundaryCodes)]
pub fn boundary_codes(src: &str) -> Result<String, JsError> {
    boundary_codes_json(src).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classOf)]
pub fn class_of(src: &str, code: &str, cap: usize) -> Result<String, JsError> {
    class_json(src, code, cap).map_err(|e| JsError::new(&e))
}
