//! Machine-readable views of decompositions: structured JSON for the full
//! record set and a flat CSV of the stratum table. Output is deterministic —
//! records keep engine order, JSON object keys are sorted — so byte-for-byte
//! comparison of two runs is meaningful.

use serde_json::{json, Value};

use crate::decomp::{Decomposition, RealizationMode, StratumIndex, StratumRecord};
use crate::poly::GradedPoly;

fn partition_json(parts: &[u32]) -> Value {
    Value::Array(parts.iter().map(|&p| json!(p)).collect())
}

fn index_to_json(index: &StratumIndex) -> Value {
    match index {
        StratumIndex::Hilbert { nu } => json!({
            "kind": "hilbert",
            "nu": partition_json(nu.parts()),
        }),
        StratumIndex::Nested { a, j } => json!({
            "kind": "nested",
            "a": partition_json(a.parts()),
            "j": j,
        }),
        StratumIndex::Parabolic { chi } => json!({
            "kind": "parabolic",
            "chi": chi
                .entries()
                .iter()
                .map(|(v, m)| json!({"v": v.entries(), "mult": m}))
                .collect::<Vec<_>>(),
        }),
        StratumIndex::Surface { i, nu, labels } => json!({
            "kind": "surface",
            "i": i,
            "nu": partition_json(nu.parts()),
            "labels": labels
                .iter()
                .map(|clp| {
                    clp.assignments()
                        .iter()
                        .map(|(curve, parts)| json!({
                            "curve": curve,
                            "parts": partition_json(parts.parts()),
                        }))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn record_to_json(record: &StratumRecord) -> Value {
    json!({
        "index": index_to_json(&record.index),
        "stratum_dim": record.stratum_dim,
        "fiber_dim": record.fiber_dim,
        "codim": record.codim,
        "twist": record.twist,
        "relevant": record.relevant,
        "cover": record.cover.to_string(),
    })
}

/// One summand per relevant stratum; multiplicities in the aggregated motive
/// arise from distinct strata sharing a cover class.
pub fn summands_to_json(decomposition: &Decomposition) -> Value {
    Value::Array(
        decomposition
            .records
            .iter()
            .filter(|r| r.relevant)
            .map(|r| {
                json!({
                    "index": index_to_json(&r.index),
                    "atom_factors": r
                        .cover
                        .factors()
                        .iter()
                        .map(|(atom, sym)| json!({"atom": atom.name(), "sym": sym}))
                        .collect::<Vec<_>>(),
                    "twist": r.cover.twist(),
                })
            })
            .collect(),
    )
}

pub fn decomposition_to_json(decomposition: &Decomposition) -> Value {
    json!({
        "ambient_dim": decomposition.ambient_dim,
        "motive": decomposition.sum.to_string(),
        "summands": summands_to_json(decomposition),
        "strata": decomposition
            .records
            .iter()
            .map(record_to_json)
            .collect::<Vec<_>>(),
    })
}

/// Flat stratum table. The index column is always double-quoted (its display
/// form contains commas); remaining columns are plain integers/booleans.
pub fn records_to_csv(records: &[StratumRecord]) -> String {
    let mut out = String::from("index,stratum_dim,fiber_dim,codim,twist,relevant\n");
    for r in records {
        let index = r.index.to_string().replace('"', "\"\"");
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{}\n",
            index, r.stratum_dim, r.fiber_dim, r.codim, r.twist, r.relevant
        ));
    }
    out
}

/// A realized polynomial as {"mode", "coefficients"}; coefficient keys are
/// `"d"` (Poincaré/Euler) or `"p,q"` (Hodge), values canonical rationals.
pub fn realization_to_json(poly: &GradedPoly, mode: RealizationMode) -> Value {
    json!({
        "mode": mode.to_string(),
        "coefficients": poly.to_coeff_map(mode.poly_vars()),
    })
}
