//! JSON form of a subalgebra: ambient shape plus a basis of exact matrices.

use crate::catalog::CatalogEntry;
use crate::error::{CrError, Result};
use crate::exact::{ExactMatrix, Qi, Rat};
use crate::lie::{make_subalgebra, AmbientAlgebra, AmbientKind, Closure, Subalgebra};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// A rational number written as an integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Str(String),
}

impl Scalar {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            Scalar::Int(k) => Ok(Rat::from_int(*k)),
            Scalar::Str(s) => s.trim().parse().map_err(|_| CrError::InvalidInput(format!("bad rational {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AmbientSpec {
    /// Only `"sl"` is accepted.
    Named(String),
    Blocks { blocks: Vec<usize> },
}

/// Matrix entries as `[re, im]` pairs, row by row.
pub type MatrixSpec = Vec<Vec<[Scalar; 2]>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub ambient: AmbientSpec,
    pub basis: Vec<MatrixSpec>,
}

pub fn matrix_to_spec(m: &ExactMatrix) -> MatrixSpec {
    let n = m.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let z = m.get(i, j);
                    [Scalar::Str(z.re.to_string()), Scalar::Str(z.im.to_string())]
                })
                .collect()
        })
        .collect()
}

pub fn matrix_from_spec(n: usize, rows: &MatrixSpec) -> Result<ExactMatrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CrError::IncompatibleShapes(format!("basis matrix is not {n}x{n}")));
    }
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        for [re, im] in row {
            data.push(Qi::new(re.to_rat()?, im.to_rat()?));
        }
    }
    Ok(ExactMatrix::from_flat(n, data))
}

impl SubalgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CrError::InvalidInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        crate::report::render_json(&serde_json::to_value(self).expect("spec serializes"))
    }

    pub fn from_entry(entry: &CatalogEntry) -> Self {
        let ambient = match entry.ambient.kind() {
            AmbientKind::SpecialLinear => AmbientSpec::Named("sl".into()),
            AmbientKind::BlockSpecialLinear(b) => AmbientSpec::Blocks { blocks: b.clone() },
        };
        SubalgebraSpec {
            name: Some(entry.label()),
            n: entry.ambient.n(),
            ambient,
            basis: entry.generators.iter().map(matrix_to_spec).collect(),
        }
    }

    pub fn ambient(&self) -> Result<AmbientAlgebra> {
        let a = match &self.ambient {
            AmbientSpec::Named(s) if s == "sl" => AmbientAlgebra::sl(self.n),
            AmbientSpec::Named(s) => return Err(CrError::InvalidInput(format!("unknown ambient {s:?}"))),
            AmbientSpec::Blocks { blocks } => AmbientAlgebra::blocks(blocks)?,
        };
        if a.n() != self.n {
            return Err(CrError::IncompatibleShapes(format!("blocks sum to {}, n = {}", a.n(), self.n)));
        }
        Ok(a)
    }

    pub fn matrices(&self) -> Result<Vec<ExactMatrix>> {
        self.basis.iter().map(|m| matrix_from_spec(self.n, m)).collect()
    }

    /// Parses and checks closure; a failure names the offending bracket.
    pub fn build(&self) -> Result<Subalgebra> {
        let ambient = Arc::new(self.ambient()?);
        let gens = self.matrices()?;
        for g in &gens {
            if !ambient.contains(g) {
                return Err(CrError::NotInAmbient(format!("{g}")));
            }
        }
        make_subalgebra(&ambient, &gens, Closure::RequireClosed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_export_round_trips() {
        let e = catalog::load("su23_f12", None).unwrap();
        let spec = SubalgebraSpec::from_entry(&e);
        let back = SubalgebraSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back, spec);
        assert_eq!(back.build().unwrap().space(), e.subalgebra().unwrap().space());
    }

    #[test]
    fn integers_and_fractions_parse() {
        let text = r#"{"n": 2, "ambient": "sl", "basis": [[[[1, 0], ["0", "0"]], [["0", 0], ["-1/1", 0]]]]}"#;
        let v = SubalgebraSpec::from_json(text).unwrap().build().unwrap();
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn open_basis_reports_bracket() {
        let text = r#"{"n": 2, "ambient": "sl", "basis": [
            [[[0,0],[1,0]],[[0,0],[0,0]]],
            [[[0,0],[0,0]],[[1,0],[0,0]]]]}"#;
        let err = SubalgebraSpec::from_json(text).unwrap().build().unwrap_err();
        assert!(matches!(err, CrError::NotClosed { .. }));
    }
}
