//! JSON documents for spaces, families and hypertopology subbases.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hyperlab_core::{FiniteTopology, SetFamily};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// A finite space: number of points and its open sets.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

/// A family of nonempty subsets.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub sets: Vec<Vec<usize>>,
}

/// Subbase of a hypertopology: each entry is a subfamily of the family.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SubbaseDocument {
    pub subbase: Vec<Vec<Vec<usize>>>,
}

fn check_sorted(what: &str, lists: &[Vec<usize>]) -> Result<()> {
    for l in lists {
        if l.windows(2).any(|w| w[0] >= w[1]) {
            bail!("{what}: {l:?} is not a strictly increasing point list");
        }
    }
    Ok(())
}

impl SpaceDocument {
    pub fn from_topology(t: &FiniteTopology) -> Self {
        Self {
            points: t.ground_size(),
            opens: t.opens().to_point_lists(),
        }
    }

    pub fn to_topology(&self) -> Result<FiniteTopology> {
        check_sorted("opens", &self.opens)?;
        let opens = SetFamily::from_point_lists(self.points, &self.opens)?;
        if opens.len() != self.opens.len() {
            bail!("opens: duplicate sets");
        }
        Ok(FiniteTopology::new(opens)?)
    }
}

impl FamilyDocument {
    pub fn from_family(f: &SetFamily) -> Self {
        Self {
            sets: f.to_point_lists(),
        }
    }

    pub fn to_family(&self, points: usize) -> Result<SetFamily> {
        check_sorted("sets", &self.sets)?;
        if self.sets.iter().any(Vec::is_empty) {
            bail!("sets: the empty set is not allowed");
        }
        let f = SetFamily::from_point_lists(points, &self.sets)?;
        if f.len() != self.sets.len() {
            bail!("sets: duplicate sets");
        }
        if f.is_empty() {
            bail!("sets: family is empty");
        }
        Ok(f)
    }
}

impl SubbaseDocument {
    pub fn to_families(&self, points: usize) -> Result<Vec<SetFamily>> {
        self.subbase
            .iter()
            .map(|f| {
                check_sorted("subbase", f)?;
                Ok(SetFamily::from_point_lists(points, f)?)
            })
            .collect()
    }
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn save<T: Serialize>(path: &Path, doc: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_rejects_unsorted_and_duplicates() {
        let doc = |opens: Vec<Vec<usize>>| SpaceDocument { points: 2, opens };
        assert!(doc(vec![vec![], vec![1, 0]]).to_topology().is_err());
        assert!(doc(vec![vec![], vec![0, 1], vec![0, 1]])
            .to_topology()
            .is_err());
        assert!(doc(vec![vec![], vec![2], vec![0, 1]])
            .to_topology()
            .is_err());
        assert!(doc(vec![vec![0, 1], vec![]]).to_topology().is_ok());
    }

    #[test]
    fn save_is_canonical() {
        let doc = SpaceDocument {
            points: 2,
            opens: vec![vec![0, 1], vec![1], vec![]],
        };
        let canon = SpaceDocument::from_topology(&doc.to_topology().unwrap());
        assert_eq!(canon.opens, vec![vec![], vec![1], vec![0, 1]]);
        assert_eq!(
            SpaceDocument::from_topology(&canon.to_topology().unwrap()),
            canon
        );
    }

    #[test]
    fn family_rejects_empty_set() {
        let doc = |sets: Vec<Vec<usize>>| FamilyDocument { sets };
        assert!(doc(vec![vec![], vec![0]]).to_family(2).is_err());
        assert!(doc(vec![]).to_family(2).is_err());
        assert!(doc(vec![vec![0], vec![0, 1]]).to_family(2).is_ok());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(serde_json::from_str::<FamilyDocument>(r#"{"sets": [[0]], "extra": 1}"#).is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("f.json");
        let doc = FamilyDocument {
            sets: vec![vec![0], vec![1, 2]],
        };
        save(&p, &doc).unwrap();
        assert_eq!(load::<FamilyDocument>(&p).unwrap(), doc);
    }
}
