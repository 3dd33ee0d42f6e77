//! JSON input format: a ground field, a Hopf algebra (builtin or given
//! by explicit structure matrices), and an optional list of modules.
//!
//! Matrix entries are JSON integers or `"a/b"` strings; parsing and
//! re-serialization round-trip exactly. The machine-readable schema
//! ships in `docs/schema.json`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builtin::builtin;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebra;
use crate::matrix::Matrix;
use crate::modcat::{regular_module, unit_module, HModule};

/// Raw document shape, before field-aware interpretation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputDoc {
    pub field: String,
    pub hopf: HopfInput,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleInput>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfInput {
    Builtin { builtin: String },
    Explicit(Box<HopfMatrices>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfMatrices {
    pub name: String,
    pub dim: usize,
    pub mul: Vec<Vec<Value>>,
    pub unit: Vec<Vec<Value>>,
    pub comul: Vec<Vec<Value>>,
    pub counit: Vec<Vec<Value>>,
    pub antipode: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleInput {
    pub name: String,
    pub dim: usize,
    pub action: Vec<Vec<Value>>,
}

/// The interpreted problem: field, validated-shape Hopf algebra, and the
/// module suite to check.
#[derive(Clone, Debug)]
pub struct Problem {
    pub field: FieldSpec,
    pub hopf: HopfAlgebra,
    pub modules: Vec<HModule>,
}

fn entry_to_scalar(field: &FieldSpec, v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| Error::Input {
                path: path.into(),
                message: format!("entry {n} is not an exact integer; use an \"a/b\" string"),
            })?;
            Ok(field.from_i64(i))
        }
        Value::String(s) => Scalar::parse_literal(field, s),
        other => Err(Error::Input {
            path: path.into(),
            message: format!("matrix entry must be an integer or string, found {other}"),
        }),
    }
}

/// Parses a nested-array matrix literal with an exact shape check.
pub fn parse_matrix(
    field: &FieldSpec,
    rows: &[Vec<Value>],
    expect_rows: usize,
    expect_cols: usize,
    path: &str,
) -> Result<Matrix> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        return Err(Error::Input {
            path: path.into(),
            message: format!(
                "expected a {expect_rows}x{expect_cols} matrix, found {}x{}",
                rows.len(),
                rows.first().map_or(0, Vec::len)
            ),
        });
    }
    let mut out = Matrix::zeros(expect_rows, expect_cols, *field);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let s = entry_to_scalar(field, v, path)?;
            if !s.is_zero() {
                out.set(i, j, s);
            }
        }
    }
    Ok(out)
}

/// Serializes a matrix to the literal form: integers as JSON numbers,
/// everything else as `"a/b"` strings.
pub fn matrix_to_values(m: &Matrix) -> Vec<Vec<Value>> {
    m.to_dense()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|s| {
                    let lit = s.literal();
                    match lit.parse::<i64>() {
                        Ok(i) if !lit.contains('/') => Value::from(i),
                        _ => Value::from(lit),
                    }
                })
                .collect()
        })
        .collect()
}

impl InputDoc {
    pub fn from_json(text: &str) -> Result<InputDoc> {
        serde_json::from_str(text).map_err(|e| Error::Input {
            path: "document".into(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Interprets the document over its declared field. When no modules
    /// are listed, the builtin suite (or trivial + regular for explicit
    /// data) is used.
    pub fn interpret(&self) -> Result<Problem> {
        let field = FieldSpec::parse(&self.field)?;
        let (hopf, default_mods) = match &self.hopf {
            HopfInput::Builtin { builtin: name } => builtin(name, field)?,
            HopfInput::Explicit(m) => {
                let d = m.dim;
                let hopf = HopfAlgebra::new(
                    m.name.clone(),
                    field,
                    parse_matrix(&field, &m.mul, d, d * d, "hopf.mul")?,
                    parse_matrix(&field, &m.unit, d, 1, "hopf.unit")?,
                    parse_matrix(&field, &m.comul, d * d, d, "hopf.comul")?,
                    parse_matrix(&field, &m.counit, 1, d, "hopf.counit")?,
                    parse_matrix(&field, &m.antipode, d, d, "hopf.antipode")?,
                )?;
                let mods = vec![unit_module(&hopf), regular_module(&hopf)];
                (hopf, mods)
            }
        };
        let modules = if self.modules.is_empty() {
            default_mods
        } else {
            self.modules
                .iter()
                .map(|m| {
                    let action = parse_matrix(
                        &field,
                        &m.action,
                        m.dim,
                        hopf.dim * m.dim,
                        &format!("modules.{}.action", m.name),
                    )?;
                    HModule::new(m.name.clone(), &hopf, m.dim, action)
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Problem {
            field,
            hopf,
            modules,
        })
    }
}

/// Renders a Hopf algebra (with optional modules) back into document
/// form, for exporting builtins as editable input files.
pub fn export_doc(field: FieldSpec, hopf: &HopfAlgebra, modules: &[HModule]) -> InputDoc {
    let field_name = match field {
        FieldSpec::Rational => "q".to_string(),
        FieldSpec::Prime(p) => format!("gf:{p}"),
    };
    InputDoc {
        field: field_name,
        hopf: HopfInput::Explicit(Box::new(HopfMatrices {
            name: hopf.name.clone(),
            dim: hopf.dim,
            mul: matrix_to_values(&hopf.mul),
            unit: matrix_to_values(&hopf.unit),
            comul: matrix_to_values(&hopf.comul),
            counit: matrix_to_values(&hopf.counit),
            antipode: matrix_to_values(&hopf.antipode),
        })),
        modules: modules
            .iter()
            .map(|m| ModuleInput {
                name: m.name.clone(),
                dim: m.dim,
                action: matrix_to_values(&m.action),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_document() {
        let doc = InputDoc::from_json(r#"{"field": "q", "hopf": {"builtin": "c2"}}"#).unwrap();
        let p = doc.interpret().unwrap();
        assert_eq!(p.hopf.dim, 2);
        assert_eq!(p.modules.len(), 3);
    }

    #[test]
    fn explicit_document_round_trips() {
        let h = crate::hopf::sweedler(FieldSpec::Rational).unwrap();
        let mods = vec![regular_module(&h)];
        let doc = export_doc(FieldSpec::Rational, &h, &mods);
        let text = doc.to_json();
        let back = InputDoc::from_json(&text).unwrap();
        let p = back.interpret().unwrap();
        assert_eq!(p.hopf.mul, h.mul);
        assert_eq!(p.hopf.comul, h.comul);
        assert_eq!(p.hopf.antipode, h.antipode);
        assert_eq!(p.modules[0].action, h.mul);
        // and the re-serialization is byte-identical
        assert_eq!(InputDoc::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn fraction_entries() {
        let doc = InputDoc::from_json(
            r#"{
              "field": "q",
              "hopf": {
                "name": "t",
                "dim": 1,
                "mul": [["2/2"]],
                "unit": [[1]],
                "comul": [[1]],
                "counit": [[1]],
                "antipode": [["-3/-3"]]
              }
            }"#,
        )
        .unwrap();
        let p = doc.interpret().unwrap();
        assert!(p.hopf.validate().all_pass());
    }

    #[test]
    fn shape_errors_are_reported() {
        let doc = InputDoc::from_json(
            r#"{"field": "q", "hopf": {"name": "t", "dim": 2,
              "mul": [[1]], "unit": [[1],[0]], "comul": [[1],[0],[0],[1]],
              "counit": [[1,1]], "antipode": [[1,0],[0,1]]}}"#,
        )
        .unwrap();
        let err = doc.interpret().unwrap_err();
        assert!(matches!(err, Error::Input { .. }));
    }

    #[test]
    fn bad_field_and_float_entries_rejected() {
        assert!(
            InputDoc::from_json(r#"{"field": "r", "hopf": {"builtin": "c2"}}"#)
                .unwrap()
                .interpret()
                .is_err()
        );
        let doc = InputDoc::from_json(
            r#"{"field": "q", "hopf": {"name": "t", "dim": 1,
              "mul": [[0.5]], "unit": [[1]], "comul": [[1]],
              "counit": [[1]], "antipode": [[1]]}}"#,
        )
        .unwrap();
        assert!(doc.interpret().is_err());
    }
}
