//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function returns a JSON string. The logic lives in plain
//! functions so it can be tested natively.

use noncrossing::render::{render_ascii, render_svg};
use noncrossing::text::{format_diagram, parse_diagram, parse_permutation};
use noncrossing::{count_by_arcs, delta, Congruence, NamedCongruence};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest `n` the page will enumerate.
pub const DEMO_MAX_N: usize = 8;

fn drawing(d: &noncrossing::Diagram) -> Value {
    json!({
        "diagram": format_diagram(d),
        "arcs": d.arcs().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "svg": render_svg(d),
        "ascii": render_ascii(d),
    })
}

pub fn diagram_json(perm: &str) -> Result<String, String> {
    let x = parse_permutation(perm).map_err(|e| e.to_string())?;
    let d = delta(&x);
    let mut out = drawing(&d);
    out["permutation"] = json!(x.to_string());
    out["descents"] = json!(x.descents());
    Ok(out.to_string())
}

pub fn permutation_json(diagram: &str) -> Result<String, String> {
    let d = parse_diagram(diagram).map_err(|e| e.to_string())?;
    let mut out = drawing(&d);
    out["permutation"] = json!(d.to_permutation().to_string());
    Ok(out.to_string())
}

/// Counts of the quotient by arcs, plus the projection of `perm` when it
/// is nonempty.
pub fn quotient_json(n: usize, congruence: &str, perm: &str) -> Result<String, String> {
    if n == 0 || n > DEMO_MAX_N {
        return Err(format!("n must lie in 1..={DEMO_MAX_N}"));
    }
    let name: NamedCongruence = congruence
        .parse()
        .map_err(|e: noncrossing::Error| e.to_string())?;
    let c = Congruence::named(n, &name).map_err(|e| e.to_string())?;
    let table = count_by_arcs(&c, congruence);
    let mut out = json!({
        "n": n,
        "congruence": name.to_string(),
        "arcs": c.uncontracted().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "counts": table.counts,
        "total": table.total,
    });
    if !perm.trim().is_empty() {
        let x = parse_permutation(perm).map_err(|e| e.to_string())?;
        let bottom = c.project_down(&x).map_err(|e| e.to_string())?;
        out["projection"] = json!(bottom.to_string());
        out["projection_svg"] = json!(render_svg(&delta(&bottom)));
    }
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn diagram_of(perm: &str) -> Result<String, JsError> {
    diagram_json(perm).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn permutation_of(diagram: &str) -> Result<String, JsError> {
    permutation_json(diagram).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn quotient(n: usize, congruence: &str, perm: &str) -> Result<String, JsError> {
    quotient_json(n, congruence, perm).map_err(|e| JsError::new(&e))
}
