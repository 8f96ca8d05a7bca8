//! The JSON file format for posets and lattices.

use priestley::{DistLattice, Poset};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poset,
    Lattice,
}

/// A poset given by generating pairs `[i, j]` meaning `i <= j`. The reader
/// closes them reflexively and transitively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub schema_version: String,
    pub kind: Kind,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub leq_pairs: Vec<[usize; 2]>,
}

impl PosetDocument {
    /// Writes cover pairs only; labels are omitted when they are the indices.
    pub fn from_poset(p: &Poset, kind: Kind) -> PosetDocument {
        let default = p.labels().iter().enumerate().all(|(i, l)| *l == i.to_string());
        PosetDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            kind,
            size: p.size(),
            labels: (!default).then(|| p.labels().to_vec()),
            leq_pairs: p.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_lattice(l: &DistLattice) -> PosetDocument {
        PosetDocument::from_poset(l.order(), Kind::Lattice)
    }

    pub fn parse(text: &str) -> Result<PosetDocument, CliError> {
        let doc: PosetDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Parse(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                doc.schema_version
            )));
        }
        if let Some(labels) = &doc.labels {
            if labels.len() != doc.size {
                return Err(CliError::Parse(format!(
                    "{} labels for {} elements",
                    labels.len(),
                    doc.size
                )));
            }
        }
        if let Some(&[i, j]) = doc.leq_pairs.iter().find(|[i, j]| *i >= doc.size || *j >= doc.size) {
            return Err(CliError::Parse(format!(
                "pair [{i}, {j}] out of range for size {}",
                doc.size
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Closes the generating pairs. Cycles surface as
    /// [`priestley::Error::AntisymmetryViolation`].
    pub fn to_poset(&self) -> priestley::Result<Poset> {
        let pairs: Vec<(usize, usize)> = self.leq_pairs.iter().map(|&[i, j]| (i, j)).collect();
        let p = Poset::new(self.size, &pairs)?;
        match &self.labels {
            Some(labels) => p.with_labels(labels.clone()),
            None => Ok(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use priestley::Limits;

    #[test]
    fn round_trip_is_exact() {
        let limits = Limits::default();
        for p in [
            Poset::chain(4),
            Poset::antichain(3),
            Poset::cube(3, &limits).unwrap(),
            Poset::chain(0),
            Poset::chain(2).with_labels(vec!["a".into(), "b".into()]).unwrap(),
        ] {
            let doc = PosetDocument::from_poset(&p, Kind::Poset);
            let back = PosetDocument::parse(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_poset().unwrap(), p);
        }
    }

    #[test]
    fn default_labels_are_omitted() {
        let doc = PosetDocument::from_poset(&Poset::chain(3), Kind::Poset);
        assert!(doc.labels.is_none());
        assert_eq!(doc.leq_pairs, vec![[0, 1], [1, 2]]);
        assert!(!doc.to_json().contains("labels"));
    }

    #[test]
    fn rejects_bad_documents() {
        let bad = [
            "{",
            r#"{"schema_version":"2","kind":"poset","size":1,"leq_pairs":[]}"#,
            r#"{"schema_version":"1","kind":"poset","size":1,"leq_pairs":[[0,1]]}"#,
            r#"{"schema_version":"1","kind":"poset","size":2,"labels":["a"],"leq_pairs":[]}"#,
            r#"{"schema_version":"1","kind":"set","size":1,"leq_pairs":[]}"#,
            r#"{"schema_version":"1","kind":"poset","size":1,"leq_pairs":[],"extra":0}"#,
        ];
        for text in bad {
            assert!(matches!(PosetDocument::parse(text), Err(CliError::Parse(_))), "{text}");
        }
    }

    #[test]
    fn cycles_are_invalid_not_unparseable() {
        let doc = PosetDocument::parse(r#"{"schema_version":"1","kind":"poset","size":2,"leq_pairs":[[0,1],[1,0]]}"#)
            .unwrap();
        assert!(matches!(
            doc.to_poset(),
            Err(priestley::Error::AntisymmetryViolation(0, 1))
        ));
    }
}
