//! Curated facts that the lattice computation cannot decide: whether a
//! numerical wall is actual, and which birational model lies across it.
//!
//! ```text
//! gieseker | M_S[2,1,3]
//! wall | 3,1,3 | actual | M_S[5,2,6] | flop along a P2-bundle over S
//! wall | 1,1,9 | not-actual | |
//! ```
//!
//! Wall lines are keyed by the witness class of the wall. Model and note may
//! be empty.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::MukaiVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WallStatus {
    Actual,
    NotActual,
}

impl fmt::Display for WallStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallStatus::Actual => "actual",
            WallStatus::NotActual => "not-actual",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallAnnotation {
    pub status: WallStatus,
    pub model: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Annotations {
    pub gieseker_model: Option<String>,
    pub walls: BTreeMap<MukaiVector, WallAnnotation>,
}

impl Annotations {
    pub fn wall(&self, witness: &MukaiVector) -> Option<&WallAnnotation> {
        self.walls.get(witness)
    }
}

fn non_empty(s: Option<&str>) -> Option<String> {
    s.map(str::trim).filter(|s| !s.is_empty()).map(str::to_string)
}

pub fn parse_annotations(text: &str) -> Result<Annotations> {
    let mut out = Annotations::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Annotation { line, message };
        let fields: Vec<&str> = content.split('|').map(str::trim).collect();
        match fields[0] {
            "gieseker" => {
                let model =
                    non_empty(fields.get(1).copied()).ok_or_else(|| err("gieseker: missing model name".into()))?;
                out.gieseker_model = Some(model);
            }
            "wall" => {
                if fields.len() < 3 {
                    return Err(err("wall: expected `wall | r,c,s | status | model | note`".into()));
                }
                let witness = MukaiVector::parse_triple(fields[1])
                    .ok_or_else(|| err(format!("wall: bad class `{}`", fields[1])))?;
                let status = match fields[2] {
                    "actual" => WallStatus::Actual,
                    "not-actual" => WallStatus::NotActual,
                    other => return Err(err(format!("wall: unknown status `{other}`"))),
                };
                let ann = WallAnnotation {
                    status,
                    model: non_empty(fields.get(3).copied()),
                    note: non_empty(fields.get(4).copied()),
                };
                if out.walls.insert(witness.clone(), ann).is_some() {
                    return Err(err(format!("wall: duplicate entry for {witness}")));
                }
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_records() {
        let a = parse_annotations(
            "# header\ngieseker | M\nwall | 3,1,3 | actual | N | a flop\nwall | 1,1,9 | not-actual | |\n",
        )
        .unwrap();
        assert_eq!(a.gieseker_model.as_deref(), Some("M"));
        let w = a.wall(&MukaiVector::new(3, 1, 3)).unwrap();
        assert_eq!(w.status, WallStatus::Actual);
        assert_eq!(w.model.as_deref(), Some("N"));
        assert_eq!(w.note.as_deref(), Some("a flop"));
        let w9 = a.wall(&MukaiVector::new(1, 1, 9)).unwrap();
        assert_eq!((w9.status, w9.model.clone()), (WallStatus::NotActual, None));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_annotations("wall | 1,1 | actual"), Err(Error::Annotation { line: 1, .. })));
        assert!(matches!(parse_annotations("\nwall | 1,1,8 | maybe"), Err(Error::Annotation { line: 2, .. })));
        assert!(matches!(parse_annotations("model | x"), Err(Error::Annotation { line: 1, .. })));
        assert!(parse_annotations("wall | 1,1,8 | actual\nwall | 1,1,8 | actual").is_err());
    }
}
