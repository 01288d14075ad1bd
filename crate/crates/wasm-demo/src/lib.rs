//! Browser bindings for `qonash`. Every export takes and returns strings so
//! the page can stay plain JavaScript; errors come back as `{"error": ...}`
//! objects thrown on the JS side.

use qonash::cli::{analyze_text, to_json};
use qonash::conegeom::{all_faces, barycenter, minimal_toric_divisors};
use qonash::{build_tower, BranchSpec, RatVec};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Limits for interactive use.
pub const MAX_DIM: usize = 6;
pub const MAX_INDEX: u64 = 100_000;
pub const MAX_PLOT_BOUND: u32 = 40;

fn error_json(code: &str, message: impl ToString) -> String {
    json!({"error": {"code": code, "message": message.to_string()}}).to_string()
}

fn domain(e: qonash::Error) -> String {
    error_json(e.code(), e)
}

/// Parses one exponent per line (or separated by `;`), e.g. `(1/2, 1/3)`.
pub fn parse_exponents(text: &str) -> Result<Vec<RatVec>, String> {
    text.split(['\n', ';'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<RatVec>().map_err(|e| error_json("SCHEMA", format!("{s:?}: {e}"))))
        .collect()
}

fn spec_from(text: &str, dim: usize) -> Result<BranchSpec, String> {
    if dim == 0 || dim > MAX_DIM {
        return Err(error_json("BAD_DIMENSION", format!("dimension must be between 1 and {MAX_DIM}")));
    }
    Ok(BranchSpec::new("demo", dim, parse_exponents(text)?))
}

/// Full analysis of a variety file; returns the report JSON.
pub fn analyze_report(input: &str) -> Result<String, String> {
    analyze_text(input, MAX_DIM, MAX_INDEX)
        .map(|r| to_json(&r))
        .map_err(|e| match e {
            qonash::cli::InputError::Schema { path, message } => {
                error_json("SCHEMA", format!("at {path}: {message}"))
            }
            qonash::cli::InputError::Domain(e) => domain(e),
        })
}

/// Lattice tower, faces and minimal vectors for a single branch.
pub fn tower_summary(exponents: &str, dim: usize) -> Result<String, String> {
    let spec = spec_from(exponents, dim)?;
    let t = build_tower(&spec).map_err(domain)?;
    if t.degree_n > MAX_INDEX {
        return Err(error_json("LIMIT_EXCEEDED", format!("degree {} exceeds {MAX_INDEX}", t.degree_n)));
    }
    let faces = all_faces(&t.n).map_err(domain)?;
    let s_min = minimal_toric_divisors(&t.n).map_err(domain)?;
    let out = json!({
        "step_indices": t.step_indices,
        "degree_n": t.degree_n,
        "M": t.m.basis().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "N": t.n.basis().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "faces": faces.iter().map(|f| json!({
            "indices": f.indices.to_one_based(),
            "index": f.index,
            "regular": f.regular,
        })).collect::<Vec<_>>(),
        "s_min": s_min.iter().map(|d| d.vector.to_string()).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

fn int_pair(v: &RatVec) -> Value {
    let p = v.to_pairs().expect("small coordinates");
    json!([p[0].0, p[1].0])
}

/// Points of `N` in `[0, bound]^2` for a surface branch, together with the
/// primitive edge generators, the minimal vectors and the barycenters.
pub fn plot_points(exponents: &str, bound: u32) -> Result<String, String> {
    if !(1..=MAX_PLOT_BOUND).contains(&bound) {
        return Err(error_json("LIMIT_EXCEEDED", format!("bound must be between 1 and {MAX_PLOT_BOUND}")));
    }
    let spec = spec_from(exponents, 2)?;
    let t = build_tower(&spec).map_err(domain)?;
    let n = &t.n;
    let mut points = Vec::new();
    let b = i64::from(bound);
    for x in 0..=b {
        for y in 0..=b {
            let p = RatVec::from_ints(&[x, y]);
            if n.contains(&p).map_err(domain)? {
                points.push(json!([x, y]));
            }
        }
    }
    let edges = (0..2)
        .map(|a| n.primitive_on_ray(a).map(|p| int_pair(&p)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(domain)?;
    let s_min = minimal_toric_divisors(n).map_err(domain)?;
    let mut barycenters = Vec::new();
    for face in all_faces(n).map_err(domain)?.into_iter().filter(|f| f.regular) {
        let d = barycenter(n, face.indices).map_err(domain)?;
        barycenters.push(json!({"face": face.indices.to_one_based(), "point": int_pair(&d.vector)}));
    }
    let out = json!({
        "bound": bound,
        "points": points,
        "edges": edges,
        "s_min": s_min.iter().map(|d| int_pair(&d.vector)).collect::<Vec<_>>(),
        "barycenters": barycenters,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsValue> {
    analyze_report(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tower(exponents: &str, dim: usize) -> Result<String, JsValue> {
    tower_summary(exponents, dim).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lattice_plot(exponents: &str, bound: u32) -> Result<String, JsValue> {
    plot_points(exponents, bound).map_err(|e| JsValue::from_str(&e))
}
