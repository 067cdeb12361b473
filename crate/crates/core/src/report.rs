//! The full analysis of a pair `(k0, v)` as a serializable report.

use crate::catalog::{self, Expected};
use crate::cr::{cohomology_ranges, cr_type, fiber_data, levi_report};
use crate::error::{CrError, Result};
use crate::lie::Subalgebra;
use crate::parabolic::{hnr_verdict, nilradical_is_module, parabolic_flag, parabolic_regularization, q_max, q_min};
use crate::spec_io::{matrix_to_spec, MatrixSpec, SubalgebraSpec};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "crmostow/1";

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub hd: usize,
    pub levi_grid: usize,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { hd: 0, levi_grid: 64, seed: 0 }
    }
}

/// A value together with where it came from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sourced {
    pub value: Value,
    pub source: &'static str,
}

fn computed(value: Value) -> Sourced {
    Sourced { value, source: "computed" }
}

#[derive(Clone, Debug, Serialize)]
pub struct Dims {
    pub ambient: usize,
    pub v: usize,
    pub nr: usize,
    pub levi: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicSummary {
    pub dim: usize,
    pub levi_dim: usize,
    pub nilradical_dim: usize,
    /// Dimensions of the stabilized subspaces, block by block.
    pub flag: Vec<Vec<usize>>,
}

fn summarize(q: &Subalgebra) -> ParabolicSummary {
    let flag = parabolic_flag(q)
        .map(|f| f.chains.iter().map(|c| c.iter().map(|s| s.dim()).collect()).collect())
        .unwrap_or_default();
    ParabolicSummary { dim: q.dim(), levi_dim: q.levi().dim(), nilradical_dim: q.nr().dim(), flag }
}

#[derive(Clone, Debug, Serialize)]
pub struct LeviSummary {
    pub char_dim: usize,
    pub witt_lower_bound: usize,
    pub levi_flat: bool,
    pub vector_form_rank: usize,
    pub samples: usize,
    pub grid: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cohomology {
    pub r: usize,
    pub hd: usize,
    pub low: Vec<usize>,
    pub high: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub input: SubalgebraSpec,
    pub n_reductive: bool,
    pub dims: Dims,
    pub regularization: Option<Vec<usize>>,
    pub q_min: Option<ParabolicSummary>,
    pub q_max: Option<ParabolicSummary>,
    pub w_basis: Option<Vec<MatrixSpec>>,
    pub levi: Option<LeviSummary>,
    pub cohomology: Option<Cohomology>,
    /// Quantities that mirror stated values, keyed by name.
    pub invariants: BTreeMap<String, Sourced>,
    /// Stated values for catalog inputs.
    pub expected: BTreeMap<String, Sourced>,
    /// Names whose computed and stated values differ.
    pub discrepancies: Vec<String>,
    pub warnings: Vec<String>,
}

/// Stated values of a catalog entry as a name-keyed map.
pub fn expected_map(e: &Expected) -> BTreeMap<String, Value> {
    let mut m = BTreeMap::new();
    let mut put = |k: &str, v: Option<Value>| {
        if let Some(v) = v {
            m.insert(k.to_string(), v);
        }
    };
    put("n_reductive", e.n_reductive.map(Value::from));
    put("strict_hnr", e.strict_hnr.map(Value::from));
    put("hnr", e.hnr.map(Value::from));
    put("nu", e.nu.map(Value::from));
    put("d", e.d.map(Value::from));
    put("witt_lower_bound", e.witt_index.map(Value::from));
    put("f0_dim", e.f0_dim.map(Value::from));
    put("w_dim", e.w_dim.map(Value::from));
    put("q_max_dim", e.q_max_dim.map(Value::from));
    put("q_max_nilradical_dim", e.q_max_nilradical_dim.map(Value::from));
    put("dim_m_minus", e.dim_m_minus.map(Value::from));
    m
}

pub fn analyze(spec: &SubalgebraSpec, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let v = spec.build()?;
    let k = v.ambient();
    let mut warnings = Vec::new();
    let mut inv: BTreeMap<String, Sourced> = BTreeMap::new();
    let n_reductive = v.is_n_reductive();
    inv.insert("n_reductive".into(), computed(json!(n_reductive)));
    let ty = cr_type(&v)?;
    inv.insert("nu".into(), computed(json!(ty.nu)));
    inv.insert("d".into(), computed(json!(ty.d)));
    inv.insert("dim_m_minus".into(), computed(json!(ty.dim_m_minus)));
    inv.insert("generic".into(), computed(json!(ty.is_generic())));
    let dims = Dims { ambient: k.dim(), v: v.dim(), nr: v.nr().dim(), levi: v.levi().dim() };
    let mut report = AnalysisReport {
        schema: SCHEMA,
        input: spec.clone(),
        n_reductive,
        dims,
        regularization: None,
        q_min: None,
        q_max: None,
        w_basis: None,
        levi: None,
        cohomology: None,
        invariants: BTreeMap::new(),
        expected: BTreeMap::new(),
        discrepancies: Vec::new(),
        warnings: Vec::new(),
    };
    if n_reductive {
        let reg = parabolic_regularization(&v)?;
        report.regularization = Some(reg.chain.iter().map(Subalgebra::dim).collect());
        let qmin = q_min(&v)?;
        let qmax = q_max(&v, &qmin)?;
        report.q_min = Some(summarize(&qmin));
        report.q_max = Some(summarize(&qmax));
        inv.insert("q_max_dim".into(), computed(json!(qmax.dim())));
        inv.insert("q_max_nilradical_dim".into(), computed(json!(qmax.nr().dim())));
        inv.insert("q_max_nilradical_is_module".into(), computed(json!(nilradical_is_module(&v, &qmax))));
        let verdict = hnr_verdict(&v)?;
        inv.insert("hnr".into(), computed(json!(verdict.hnr)));
        inv.insert("strict_hnr".into(), computed(json!(verdict.strict_hnr)));
        inv.insert("w_dim".into(), computed(json!(verdict.w.dim())));
        report.w_basis = Some(verdict.w.basis().iter().map(matrix_to_spec).collect());
        let w = &verdict.w;
        let q = q_max(w, &q_min(w)?)?;
        let fd = fiber_data(&v, w, &q)?;
        inv.insert("f0_dim".into(), computed(json!(fd.f0.dim())));
        inv.insert("l_dim".into(), computed(json!(fd.l.dim())));
        match levi_report(&v, opts.levi_grid, opts.seed) {
            Ok(l) => {
                inv.insert("witt_lower_bound".into(), computed(json!(l.witt_lower_bound)));
                let (low, high) = cohomology_ranges(l.witt_lower_bound, ty.nu, opts.hd);
                report.cohomology = Some(Cohomology { r: l.witt_lower_bound, hd: opts.hd, low, high });
                report.levi = Some(LeviSummary {
                    char_dim: l.char_dim,
                    witt_lower_bound: l.witt_lower_bound,
                    levi_flat: l.levi_flat,
                    vector_form_rank: l.vector_form_rank,
                    samples: l.samples.len(),
                    grid: opts.levi_grid,
                    seed: opts.seed,
                });
            }
            Err(CrError::EmptyCharacteristicSpace) => {
                warnings.push("characteristic space is zero; M0 is complex and no Levi form is defined".into());
            }
            Err(e) => return Err(e),
        }
    } else {
        warnings.push("v is not n-reductive; parabolic and fiber data skipped".into());
    }
    if let Some(entry) = spec.name.as_deref().and_then(|n| catalog::load_label(n).ok()) {
        for (key, value) in expected_map(&entry.expected) {
            if let Some(c) = inv.get(&key) {
                if c.value != value {
                    report.discrepancies.push(key.clone());
                }
            }
            report.expected.insert(key, Sourced { value, source: "paper-expected" });
        }
    }
    report.invariants = inv;
    report.warnings = warnings;
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        render_json(&serde_json::to_value(self).expect("report serializes"))
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Indented JSON with scalar arrays and arrays of scalar arrays kept on one line.
pub fn render_json(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(xs) if xs.iter().all(is_flat) => out.push_str(&serde_json::to_string(v).expect("json")),
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad);
                render(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(k).expect("json"));
                out.push_str(": ");
                render(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("json")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_report_carries_both_dimensions() {
        let e = catalog::load_label("grassmann_pair(1,2,3,1)").unwrap();
        let r = analyze(&SubalgebraSpec::from_entry(&e), &AnalysisOptions::default()).unwrap();
        assert_eq!(r.invariants["dim_m_minus"].value, json!(7));
        assert_eq!(r.expected["dim_m_minus"].value, json!(5));
        assert_eq!(r.discrepancies, vec!["dim_m_minus".to_string()]);
        let c = r.cohomology.unwrap();
        assert_eq!((c.low, c.high), (vec![0], vec![3]));
    }
}
