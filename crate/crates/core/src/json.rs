//! JSON import/export of the exact domain objects. Rationals travel as
//! plain numbers when they are small integers and as `"p/q"` strings
//! otherwise, so a round trip reconstructs the exact same Gram matrix.

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::enumerate::Shell;
use crate::lattice::{HolePoint, Lattice};
use crate::potential::CriticalReport;
use crate::ratio::{format_rat, parse_rat, rat_from_f64, rat_to_f64, Rat};
use crate::{Error, Result};

/// One exact rational as a JSON value.
pub fn rat_to_json(r: &Rat) -> Value {
    if r.denom().is_one() && r.numer().abs() <= 9_007_199_254_740_992u64.into() {
        Value::from(r.numer().to_i64().expect("fits i64"))
    } else {
        Value::from(format_rat(r))
    }
}

/// Reads a rational from a number (integers and exact doubles) or a
/// `"p/q"` string.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(f) = n.as_f64() {
                rat_from_f64(f)
            } else {
                Err(Error::Parse(format!("unsupported number {n}")))
            }
        }
        Value::String(s) => parse_rat(s),
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

fn vec_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_to_json).collect())
}

fn vec_from_json(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of rationals".into()))?
        .iter()
        .map(rat_from_json)
        .collect()
}

fn mat_to_json(m: &[Vec<Rat>]) -> Value {
    Value::Array(m.iter().map(|row| vec_to_json(row)).collect())
}

fn mat_from_json(v: &Value) -> Result<Vec<Vec<Rat>>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array of coordinate rows".into()))?
        .iter()
        .map(vec_from_json)
        .collect()
}

/// Serializes a lattice to the interchange format. The Gram matrix is not
/// stored; it is recomputed exactly from the basis on import.
pub fn lattice_to_json(l: &Lattice) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("name".into(), Value::from(l.name()));
    obj.insert("rank".into(), Value::from(l.rank()));
    obj.insert("ambient_dim".into(), Value::from(l.ambient_dim()));
    obj.insert("basis".into(), mat_to_json(l.basis()));
    if !l.deep_holes().is_empty() {
        obj.insert(
            "deep_holes".into(),
            Value::Array(l.deep_holes().iter().map(|h| vec_to_json(&h.coords)).collect()),
        );
    }
    if let Some(mu) = l.stored_covering_radius_sq() {
        obj.insert("covering_radius_sq".into(), rat_to_json(mu));
    }
    if let Some(sv) = l.simplex_vertices() {
        obj.insert("simplex_vertices".into(), mat_to_json(sv));
    }
    Value::Object(obj)
}

/// Imports a lattice, validating the basis and (when hole data is
/// present) checking every stored deep hole against enumeration.
pub fn lattice_from_json(v: &Value) -> Result<Lattice> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("lattice JSON must be an object".into()))?;
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .unwrap_or("user-lattice")
        .to_string();
    let basis = mat_from_json(
        obj.get("basis").ok_or_else(|| Error::Parse("missing `basis`".into()))?,
    )?;
    let mut lattice = Lattice::from_basis(name, basis)?;
    if let Some(rank) = obj.get("rank").and_then(Value::as_u64) {
        if rank as usize != lattice.rank() {
            return Err(Error::InvalidLattice(format!(
                "declared rank {rank} does not match basis rank {}",
                lattice.rank()
            )));
        }
    }
    if let Some(m) = obj.get("ambient_dim").and_then(Value::as_u64) {
        if m as usize != lattice.ambient_dim() {
            return Err(Error::InvalidLattice("declared ambient_dim mismatch".into()));
        }
    }
    if let Some(mu) = obj.get("covering_radius_sq") {
        lattice.set_covering_radius_sq(rat_from_json(mu)?);
    }
    if let Some(holes) = obj.get("deep_holes") {
        let coords = mat_from_json(holes)?;
        let holes = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| HolePoint::new(format!("h{i}"), c))
            .collect();
        lattice.set_deep_holes(holes);
    }
    if let Some(sv) = obj.get("simplex_vertices") {
        lattice.set_simplex_vertices(mat_from_json(sv)?);
    }
    lattice.verify_hole_data()?;
    Ok(lattice)
}

/// Shell dump: center, exact squared radius, count, vectors sorted
/// lexicographically.
pub fn shell_to_json(s: &Shell) -> Value {
    serde_json::json!({
        "center": vec_to_json(&s.center),
        "radius_sq": rat_to_json(&s.radius_sq),
        "count": s.count(),
        "vectors": mat_to_json(&s.vectors),
    })
}

#[derive(Serialize, Deserialize)]
struct CriticalReportJson {
    center: Value,
    cutoff_radius_sq: Value,
    shells_checked: usize,
    all_one_designs: bool,
    first_failing_radius_sq: Option<Value>,
    failing_defect: Option<f64>,
}

pub fn critical_report_to_json(r: &CriticalReport) -> Value {
    serde_json::to_value(CriticalReportJson {
        center: vec_to_json(&r.center),
        cutoff_radius_sq: rat_to_json(&r.cutoff_radius_sq),
        shells_checked: r.shells_checked,
        all_one_designs: r.all_one_designs,
        first_failing_radius_sq: r.first_failing_radius_sq.as_ref().map(rat_to_json),
        failing_defect: r.failing_defect,
    })
    .expect("serializable")
}

/// Convenience used by tests: exact equality of Gram matrices after an
/// export/import round trip.
pub fn gram_as_f64(l: &Lattice) -> Vec<Vec<f64>> {
    l.gram().iter().map(|row| row.iter().map(rat_to_f64).collect()).collect()
}
