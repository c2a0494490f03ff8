//! wasm-bindgen bindings for the static demo in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! string, either the payload or `{"error": "..."}`. The `*_value` functions
//! hold the logic and run natively in tests.

use std::sync::Arc;

use adjsq::casdecomp::{exceptional_table, tensor_square_table, Part};
use adjsq::dimform::{weyl_dim, weyl_factors, IrrepLabel};
use adjsq::oracle::irrep_character_capped;
use adjsq::rational::{fmt_q, parse_q};
use adjsq::{AlgebraId, RootSystem, Weight};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Weight diagrams stop here; the SVG gets unreadable well before.
const DIAGRAM_CAP: u64 = 2000;

fn algebra(name: &str, n: u32) -> Result<AlgebraId, String> {
    let n = if n == 0 { None } else { Some(n) };
    AlgebraId::parse(name, n).map_err(|e| e.to_string())
}

fn parse_hw(rs: &Arc<RootSystem>, s: &str) -> Result<IrrepLabel, String> {
    let s = s.trim();
    if let Some(k) = s.strip_suffix("theta") {
        let k: i64 = if k.is_empty() { 1 } else { k.parse().map_err(|_| format!("bad multiple {k:?}"))? };
        return Ok(IrrepLabel::theta_multiple(rs.clone(), k.max(0)));
    }
    let labels: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("expected comma-separated Dynkin labels, got {s:?}"))?;
    if labels.len() != rs.rank() {
        return Err(format!("{} needs {} labels", rs.algebra(), rs.rank()));
    }
    IrrepLabel::from_labels(rs.clone(), &labels).map_err(|e| e.to_string())
}

fn wrap(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

pub fn weyl_dimension_value(name: &str, n: u32, hw: &str) -> Result<Value, String> {
    let id = algebra(name, n)?;
    let rs = Arc::new(RootSystem::new(id).map_err(|e| e.to_string())?);
    let label = parse_hw(&rs, hw)?;
    let factors: Vec<Value> = weyl_factors(&label)
        .iter()
        .map(|f| json!({ "root": f.root.to_string(), "num": fmt_q(&f.numerator), "den": fmt_q(&f.denominator) }))
        .collect();
    Ok(json!({
        "algebra": id.name(),
        "weight": label.hw().to_string(),
        "labels": rs.dynkin_labels(label.hw()).map_err(|e| e.to_string())?,
        "dim": weyl_dim(&label),
        "factors": factors,
    }))
}

#[derive(Serialize)]
struct Row {
    tag: String,
    dim: u64,
    casimir: Option<String>,
    split_eig: Option<String>,
    note: Option<String>,
}

pub fn tensor_square_value(name: &str, n: u32, part: &str) -> Result<Value, String> {
    let id = algebra(name, n)?;
    let part = Part::parse(part).map_err(|e| e.to_string())?;
    let table = if id.family().is_classical() {
        tensor_square_table(id, part).map_err(|e| e.to_string())?
    } else {
        exceptional_table().into_iter().find(|t| t.algebra == id && t.part == part).ok_or("no table")?
    };
    let rows: Vec<Row> = table
        .constituents
        .iter()
        .map(|c| Row {
            tag: c.tag.clone(),
            dim: c.dim,
            casimir: c.casimir.as_ref().map(fmt_q),
            split_eig: c.split_eig.as_ref().map(fmt_q),
            note: c.note.clone(),
        })
        .collect();
    Ok(json!({ "algebra": id.name(), "part": part.name(), "parent_dim": table.parent_dim, "rows": rows }))
}

/// Plane coordinates for the weights of a rank-2 irrep, with multiplicities.
pub fn weight_diagram_value(name: &str, n: u32, hw: &str) -> Result<Value, String> {
    let id = algebra(name, n)?;
    let rs = Arc::new(RootSystem::new(id).map_err(|e| e.to_string())?);
    if rs.rank() != 2 {
        return Err(format!("weight diagrams need rank 2; {id} has rank {}", rs.rank()));
    }
    let label = parse_hw(&rs, hw)?;
    let chi = irrep_character_capped(&label, DIAGRAM_CAP).map_err(|e| e.to_string())?;
    // Gram matrix of the fundamental weights, then a Cholesky frame in the plane.
    let w = rs.fundamental_weights();
    let g = |a: &Weight, b: &Weight| rs.inner(a, b).unwrap().to_f64().unwrap();
    let (g11, g12, g22) = (g(&w[0], &w[0]), g(&w[0], &w[1]), g(&w[1], &w[1]));
    let a = g11.sqrt();
    let (bx, by) = (g12 / a, (g22 - g12 * g12 / g11).sqrt());
    let points: Vec<Value> = chi
        .iter()
        .map(|(l, m)| {
            let (x, y) = (l[0] as f64 * a + l[1] as f64 * bx, l[1] as f64 * by);
            json!({ "labels": l, "x": x, "y": y, "mult": m })
        })
        .collect();
    let roots: Vec<Value> = rs
        .roots()
        .iter()
        .map(|r| {
            let l = rs.dynkin_labels(r).unwrap();
            json!({ "x": l[0] as f64 * a + l[1] as f64 * bx, "y": l[1] as f64 * by })
        })
        .collect();
    Ok(json!({ "algebra": id.name(), "dim": chi.total(), "points": points, "roots": roots }))
}

#[wasm_bindgen]
pub fn weyl_dimension(name: &str, n: u32, hw: &str) -> String {
    wrap(weyl_dimension_value(name, n, hw))
}

#[wasm_bindgen]
pub fn tensor_square(name: &str, n: u32, part: &str) -> String {
    wrap(tensor_square_value(name, n, part))
}

#[wasm_bindgen]
pub fn weight_diagram(name: &str, n: u32, hw: &str) -> String {
    wrap(weight_diagram_value(name, n, hw))
}

/// Parses a rational the way the page displays them; exposed for input echo.
#[wasm_bindgen]
pub fn normalize_rational(s: &str) -> Option<String> {
    parse_q(s).map(|x| fmt_q(&x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_cube_of_theta() {
        let v = weyl_dimension_value("g2", 0, "3theta").unwrap();
        assert_eq!(v["dim"], 273);
        assert_eq!(v["factors"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn su3_alt_square() {
        let v = tensor_square_value("su", 3, "alt").unwrap();
        let dims: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["dim"].as_u64().unwrap()).collect();
        assert_eq!(dims, vec![10, 10, 8]);
        assert!(tensor_square_value("e8", 0, "sym").is_ok());
    }

    #[test]
    fn adjoint_diagram_of_su3() {
        let v = weight_diagram_value("su", 3, "1,1").unwrap();
        assert_eq!(v["dim"], 8);
        let pts = v["points"].as_array().unwrap();
        assert_eq!(pts.len(), 7);
        let zero = pts.iter().find(|p| p["labels"] == json!([0, 0])).unwrap();
        assert_eq!(zero["mult"], 2);
        // all six roots have the same length
        let len: Vec<f64> = v["roots"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["x"].as_f64().unwrap().hypot(r["y"].as_f64().unwrap()))
            .collect();
        assert!(len.iter().all(|l| (l - len[0]).abs() < 1e-9));
    }

    #[test]
    fn errors_are_json() {
        let s = weight_diagram("f4", 0, "1,0,0,0");
        assert!(s.contains("rank 2"));
        assert!(weyl_dimension("su", 3, "1,x").contains("error"));
        assert_eq!(normalize_rational("6/4").as_deref(), Some("3/2"));
    }
}
