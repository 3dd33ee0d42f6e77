//! Pass/fail reports with counterexample witnesses.

use serde::Serialize;

use crate::matrix::Matrix;

/// The two composites that were compared, and their difference.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub lhs: Matrix,
    pub rhs: Matrix,
    pub difference: Matrix,
}

/// One checked identity: a named axiom at a particular object tuple.
#[derive(Clone, Debug)]
pub struct ReportItem {
    pub axiom: String,
    pub objects: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// A list of checked identities under one heading.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl AxiomReport {
    pub fn new(title: impl Into<String>) -> AxiomReport {
        AxiomReport {
            title: title.into(),
            items: Vec::new(),
        }
    }

    /// Records an exact matrix equality; on failure the witness keeps both
    /// composites and their difference.
    pub fn check_eq(&mut self, axiom: impl Into<String>, objects: impl Into<String>, lhs: &Matrix, rhs: &Matrix) {
        let axiom = axiom.into();
        let objects = objects.into();
        let item = match lhs.sub(rhs) {
            Ok(difference) if difference.is_zero() => ReportItem {
                axiom,
                objects,
                pass: true,
                witness: None,
            },
            Ok(difference) => ReportItem {
                axiom,
                objects,
                pass: false,
                witness: Some(Witness {
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    difference,
                }),
            },
            Err(_) => ReportItem {
                axiom,
                objects,
                pass: false,
                witness: Some(Witness {
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    difference: Matrix::zeros(0, 0, lhs.field()),
                }),
            },
        };
        self.items.push(item);
    }

    /// Records a boolean fact that has no matrix witness (rank conditions,
    /// dimension counts).
    pub fn check_flag(&mut self, axiom: impl Into<String>, objects: impl Into<String>, pass: bool) {
        self.items.push(ReportItem {
            axiom: axiom.into(),
            objects: objects.into(),
            pass,
            witness: None,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.items.extend(other.items);
    }

    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&ReportItem> {
        self.failures().next()
    }
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

fn matrix_json(m: &Matrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m
            .to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(|s| s.literal()).collect())
            .collect(),
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Witness", 3)?;
        s.serialize_field("lhs", &matrix_json(&self.lhs))?;
        s.serialize_field("rhs", &matrix_json(&self.rhs))?;
        s.serialize_field("difference", &matrix_json(&self.difference))?;
        s.end()
    }
}

impl Serialize for ReportItem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ReportItem", 4)?;
        s.serialize_field("axiom", &self.axiom)?;
        s.serialize_field("objects", &self.objects)?;
        s.serialize_field("pass", &self.pass)?;
        s.serialize_field("witness", &self.witness)?;
        s.end()
    }
}

impl Serialize for AxiomReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AxiomReport", 3)?;
        s.serialize_field("title", &self.title)?;
        s.serialize_field("pass", &self.all_pass())?;
        s.serialize_field("items", &self.items)?;
        s.end()
    }
}
