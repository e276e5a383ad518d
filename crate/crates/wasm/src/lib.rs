//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string. The `*_json` functions hold the logic
//! and are what the native tests call.

use polygram_core::dirichlet::{expand_v, verify_expansion};
use polygram_core::oracle::{enumerate_polyominoes_bounded, SizeBound, MAX_POLYOMINO_EXTENT_SUM};
use polygram_core::polycube::table_c;
use polygram_core::polyomino::{count_width_height, table_b, table_g};
use polygram_core::CountTable;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest `k` or `n` the table explorer accepts.
pub const MAX_TABLE_SIZE: u32 = 30;
/// Polyominoes returned by the gallery at most; the count is always exact.
pub const MAX_GALLERY_SHAPES: usize = 240;
/// Largest truncation accepted by the expansion check.
pub const MAX_CHECK_BOUND: u64 = 12;

fn table_value(table: &CountTable) -> Value {
    json!({
        "table": table.name(),
        "columns": table.col_keys(),
        "rows": table.rows().map(|(key, values)| json!({
            "k": key[0],
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn table_json(kind: &str, k: u32, n: u32) -> Result<String, String> {
    if !(1..=MAX_TABLE_SIZE).contains(&k) || !(1..=MAX_TABLE_SIZE).contains(&n) {
        return Err(format!("k and n must be in 1..={MAX_TABLE_SIZE}"));
    }
    let table = match kind {
        "b" => table_b(k as usize, n as usize),
        "c" => table_c(k as usize, n as usize),
        "g" => table_g(u64::from(k), u64::from(n)),
        other => return Err(format!("unknown table {other:?}; expected b, c or g")),
    };
    Ok(table_value(&table).to_string())
}

pub fn expand_json(k: u32) -> Result<String, String> {
    let e = expand_v(k as usize).map_err(|e| e.to_string())?;
    Ok(json!({
        "k": k,
        "count": e.len(),
        "terms": e.terms().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
    .to_string())
}

/// Every parallelogram polyomino with the given bounding box, as column
/// extents `[bottom, top]`, plus the closed-form count for comparison.
pub fn gallery_json(width: u32, height: u32) -> Result<String, String> {
    if width == 0 || height == 0 || width + height > MAX_POLYOMINO_EXTENT_SUM {
        return Err(format!(
            "width and height must be positive with width + height <= {MAX_POLYOMINO_EXTENT_SUM}"
        ));
    }
    let stream = enumerate_polyominoes_bounded(SizeBound::ExtentSum(width + height))
        .map_err(|e| e.to_string())?;
    let mut total = 0u64;
    let mut shapes = Vec::new();
    for p in stream.filter(|p| p.width() == u64::from(width) && p.height() == u64::from(height)) {
        total += 1;
        if shapes.len() < MAX_GALLERY_SHAPES {
            shapes.push(
                p.columns()
                    .iter()
                    .map(|c| [c.bottom, c.top])
                    .collect::<Vec<_>>(),
            );
        }
    }
    Ok(json!({
        "width": width,
        "height": height,
        "enumerated": total,
        "formula": count_width_height(u64::from(width), u64::from(height)).to_string(),
        "shapes": shapes,
    })
    .to_string())
}

/// Both sides of the truncated expansion identity at `x` (comma-separated).
pub fn check_expansion_json(k: u32, x: &str, bound: u32) -> Result<String, String> {
    let x: Vec<i64> = x
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| format!("not an integer: {s:?}"))
        })
        .collect::<Result<_, _>>()?;
    let bound = u64::from(bound);
    if !(1..=MAX_CHECK_BOUND).contains(&bound) {
        return Err(format!("N must be in 1..={MAX_CHECK_BOUND}"));
    }
    let r = verify_expansion(k as usize, &x, bound).map_err(|e| e.to_string())?;
    Ok(json!({
        "holds": r.holds(),
        "direct": r.direct.to_string(),
        "expanded": r.expanded.to_string(),
        "terms": r.per_term.iter().map(|(t, v)| json!([t.to_string(), v.to_string()])).collect::<Vec<_>>(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn table(kind: &str, k: u32, n: u32) -> Result<String, JsError> {
    table_json(kind, k, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expand(k: u32) -> Result<String, JsError> {
    expand_json(k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gallery(width: u32, height: u32) -> Result<String, JsError> {
    gallery_json(width, height).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check_expansion(k: u32, x: &str, bound: u32) -> Result<String, JsError> {
    check_expansion_json(k, x, bound).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn table_explorer() {
        let v = parse(&table_json("b", 10, 10).unwrap());
        assert_eq!(v["rows"][2]["values"][7], "55");
        let v = parse(&table_json("c", 4, 7).unwrap());
        assert_eq!(v["rows"][3]["values"][6], "132");
        assert!(table_json("x", 3, 3).is_err());
        assert!(table_json("b", 0, 3).is_err());
        assert!(table_json("g", 3, MAX_TABLE_SIZE + 1).is_err());
    }

    #[test]
    fn expansion() {
        let v = parse(&expand_json(2).unwrap());
        assert_eq!(v["count"], 3);
        assert_eq!(v["terms"][0], "zeta(x1, x2-1)");
        assert!(expand_json(9).is_err());
    }

    #[test]
    fn gallery_matches_narayana() {
        for (w, h) in [(1, 1), (2, 2), (3, 3), (4, 2)] {
            let v = parse(&gallery_json(w, h).unwrap());
            assert_eq!(v["enumerated"].to_string(), v["formula"].as_str().unwrap());
        }
        let v = parse(&gallery_json(2, 2).unwrap());
        assert_eq!(v["shapes"].as_array().unwrap().len(), 3);
        let big = parse(&gallery_json(6, 6).unwrap());
        assert_eq!(big["enumerated"], 19404);
        assert_eq!(big["shapes"].as_array().unwrap().len(), MAX_GALLERY_SHAPES);
        assert!(gallery_json(0, 2).is_err());
        assert!(gallery_json(8, 8).is_err());
    }

    #[test]
    fn expansion_check() {
        let v = parse(&check_expansion_json(2, "3, 3", 2).unwrap());
        assert_eq!(v["holds"], true);
        assert_eq!(v["direct"], "41/32");
        assert!(check_expansion_json(2, "3", 2).is_err());
        assert!(check_expansion_json(2, "3,a", 2).is_err());
        assert!(check_expansion_json(2, "3,3", 99).is_err());
    }
}
