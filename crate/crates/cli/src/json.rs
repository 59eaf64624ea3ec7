//! JSON encodings. Permutations are integer arrays, tiles `[low, high]`,
//! words arrays of generator indices, frequencies `{"num", "den"}`.

use elnitsky::forced::{Frequency, TypeReport};
use elnitsky::{ForcedReport, PerimeterType, Permutation, Tiling, ValuePair, VerifyReport};
use serde_json::{json, Map, Value};

pub fn perm(w: &Permutation) -> Value {
    json!(w.entries())
}

pub fn pair(p: ValuePair) -> Value {
    json!([p.low, p.high])
}

pub fn pairs(ps: &[ValuePair]) -> Value {
    Value::Array(ps.iter().copied().map(pair).collect())
}

pub fn frequency(f: Frequency) -> Value {
    json!({ "num": f.numer(), "den": f.denom() })
}

pub fn tiling(index: usize, t: &Tiling) -> Value {
    let mut tiles: Vec<_> = t.tiles.iter().collect();
    tiles.sort_by_key(|tile| tile.label);
    let tiles: Vec<Value> = tiles
        .into_iter()
        .map(|tile| json!({ "label": pair(tile.label), "row": tile.row }))
        .collect();
    let mut perimeter = Map::new();
    for ty in PerimeterType::ALL {
        perimeter.insert(ty.name().into(), pairs(&t.perimeter_labels(ty)));
    }
    json!({
        "index": index,
        "word": t.class.canonical().letters(),
        "tiles": tiles,
        "perimeter": perimeter,
    })
}

fn type_frequencies(r: &TypeReport) -> Value {
    Value::Array(
        r.frequencies
            .iter()
            .map(|(&t, &f)| json!({ "tile": pair(t), "freq": frequency(f) }))
            .collect(),
    )
}

pub fn forced(report: &ForcedReport, types: &[PerimeterType]) -> Value {
    let mut forced = Map::new();
    let mut freqs = Map::new();
    for &ty in types {
        forced.insert(ty.name().into(), pairs(report.forced(ty)));
        freqs.insert(ty.name().into(), type_frequencies(report.of_type(ty)));
    }
    json!({
        "permutation": perm(&report.owner),
        "tiling_count": report.tiling_count,
        "forced": forced,
        "frequencies": freqs,
    })
}

pub fn verify(report: &VerifyReport) -> Value {
    let size_key = if report.theorem.sized_by_m() {
        "m"
    } else {
        "n"
    };
    let counterexamples: Vec<Value> = report
        .counterexamples
        .iter()
        .map(|c| json!({ "permutation": perm(&c.permutation), "detail": c.detail }))
        .collect();
    let mut out = Map::new();
    out.insert("theorem".into(), json!(report.theorem.name()));
    out.insert(size_key.into(), json!(report.size));
    out.insert("checked".into(), json!(report.checked));
    out.insert("counterexamples".into(), Value::Array(counterexamples));
    Value::Object(out)
}

pub fn error(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}
