//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns plain strings (graph files in, JSON out)
//! so the page needs no glue beyond what `wasm-bindgen` generates. The
//! `*_json` functions hold the logic and are what the native tests call.

use graphpoly::harness::{describe, run_identity};
use graphpoly::{
    chromatic_polynomial, flow_polynomial, format::render_plane_graph, parse_graph_file, planar, Identity, IntPoly,
    Limits,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// The demo runs on the UI thread; keep enumeration small.
const WEB_EDGE_CAP: usize = 14;

fn limits() -> Limits {
    Limits { edge_cap: WEB_EDGE_CAP, ..Limits::default() }
}

fn poly_json(p: &IntPoly) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    json!({ "pretty": p.to_string(), "coeffs": coeffs })
}

pub fn polynomials_json(text: &str) -> Result<String, String> {
    let file = parse_graph_file(text).map_err(|e| e.to_string())?;
    let g = &file.graph;
    let mut out = json!({
        "n": g.n(),
        "m": g.m(),
        "chromatic": poly_json(&chromatic_polynomial(g)),
        "flow": poly_json(&flow_polynomial(g)),
    });
    if let Some(pg) = &file.plane {
        let dual = pg.dual();
        out["faces"] = json!(pg.face_count());
        out["dual_chromatic"] = poly_json(&chromatic_polynomial(dual.graph()));
        out["dual"] = json!(render_plane_graph(&dual));
    }
    Ok(out.to_string())
}

/// Runs one identity (or `all` that apply) and returns an array of records.
pub fn verify_json(text: &str, identity: &str, k: u32) -> Result<String, String> {
    let file = parse_graph_file(text).map_err(|e| e.to_string())?;
    let identities: Vec<Identity> = if identity == "all" {
        Identity::ALL.iter().copied().filter(|i| file.plane.is_some() || !i.needs_embedding()).collect()
    } else {
        vec![identity.parse().map_err(|e: graphpoly::Error| e.to_string())?]
    };
    let graph = describe(&file.graph, file.plane.as_ref());
    let mut records = Vec::new();
    for id in identities {
        let record = match run_identity(id, &file.graph, file.plane.as_ref(), k, &limits()) {
            Ok(v) => json!({
                "identity": id.name(),
                "graph": graph,
                "verdict": if v.passed { "pass" } else { "fail" },
                "lhs": v.lhs.render(false),
                "rhs": v.rhs.render(false),
                "note": v.note,
            }),
            Err(e) => json!({ "identity": id.name(), "graph": graph, "verdict": "skip", "reason": e.to_string() }),
        };
        records.push(record);
    }
    Ok(Value::Array(records).to_string())
}

/// A random plane multigraph as a graph file, reproducible from `seed`.
pub fn random_plane_graph_text(seed: u64, edges: usize) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    render_plane_graph(&planar::random_plane_graph(&mut rng, edges.min(WEB_EDGE_CAP)))
}

#[wasm_bindgen]
pub fn polynomials(text: &str) -> Result<String, JsError> {
    polynomials_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(text: &str, identity: &str, k: u32) -> Result<String, JsError> {
    verify_json(text, identity, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn random_plane_graph(seed: u64, edges: usize) -> String {
    random_plane_graph_text(seed, edges)
}

#[wasm_bindgen]
pub fn corpus_graph(name: &str) -> Option<String> {
    graphpoly::corpus::source(name).map(str::to_owned)
}
