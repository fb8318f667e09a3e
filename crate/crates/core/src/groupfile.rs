//! JSON group definitions for the `jordan` command.
//!
//! ```json
//! { "kind": "perm", "degree": 4, "generators": [[[1, 2, 3, 4]], [[1, 2]]] }
//! { "kind": "modmatrix", "degree": 2, "modulus": 3, "generators": [[1, 1, 0, 1], [0, -1, 1, 0]] }
//! { "kind": "lemma52", "modulus": 5 }
//! ```
//!
//! Permutation generators are lists of one-based cycles; matrix generators are row-major
//! integer arrays, reduced modulo `modulus`.

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::{close_generators, FiniteGroup, GroupElement, ModMatrix, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Perm,
    Modmatrix,
    Lemma52,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDefinition {
    pub kind: GroupKind,
    pub degree: Option<usize>,
    pub modulus: Option<u32>,
    #[serde(default)]
    pub generators: Vec<Value>,
}

impl GroupDefinition {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::GroupDefinition(e.to_string()))
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let missing = |field: &str| Error::GroupDefinition(format!("`{field}` is required"));
        match self.kind {
            GroupKind::Lemma52 => {
                let n = self.modulus.ok_or_else(|| missing("modulus"))?;
                crate::lemma52::build_group(n, cap)
            }
            GroupKind::Perm => {
                let degree = self.degree.ok_or_else(|| missing("degree"))?;
                let gens = self
                    .generators
                    .iter()
                    .map(|g| {
                        let cycles: Vec<Vec<usize>> = serde_json::from_value(g.clone())
                            .map_err(|e| Error::GroupDefinition(format!("bad cycle list: {e}")))?;
                        Perm::from_cycles(degree, &cycles).map(GroupElement::from)
                    })
                    .collect::<Result<Vec<_>>>()?;
                close_generators(&gens, cap)
            }
            GroupKind::Modmatrix => {
                let dim = self.degree.ok_or_else(|| missing("degree"))?;
                let modulus = self.modulus.ok_or_else(|| missing("modulus"))?;
                let gens = self
                    .generators
                    .iter()
                    .map(|g| {
                        let entries: Vec<i64> = serde_json::from_value(g.clone())
                            .map_err(|e| Error::GroupDefinition(format!("bad matrix: {e}")))?;
                        ModMatrix::from_signed(modulus, dim, &entries).map(GroupElement::from)
                    })
                    .collect::<Result<Vec<_>>>()?;
                close_generators(&gens, cap)
            }
        }
    }
}

pub fn load(text: &str, cap: usize) -> Result<FiniteGroup> {
    GroupDefinition::parse(text)?.build(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn kinds() {
        let s4 = load(r#"{"kind":"perm","degree":4,"generators":[[[1,2,3,4]],[[1,2]]]}"#, DEFAULT_CAP).unwrap();
        assert_eq!(s4.order(), 24);
        let sl = load(
            r#"{"kind":"modmatrix","degree":2,"modulus":3,"generators":[[1,1,0,1],[0,-1,1,0]]}"#,
            DEFAULT_CAP,
        )
        .unwrap();
        assert_eq!(sl.order(), 24);
        let h = load(r#"{"kind":"lemma52","modulus":5}"#, DEFAULT_CAP).unwrap();
        assert_eq!(h.order(), 300);
    }

    #[test]
    fn errors() {
        assert!(matches!(load("{", DEFAULT_CAP), Err(Error::GroupDefinition(_))));
        assert!(matches!(load(r#"{"kind":"perm","generators":[]}"#, DEFAULT_CAP), Err(Error::GroupDefinition(_))));
        assert_eq!(load(r#"{"kind":"perm","degree":3,"generators":[]}"#, DEFAULT_CAP).unwrap_err(), Error::NoGenerators);
        assert!(load(r#"{"kind":"cube"}"#, DEFAULT_CAP).is_err());
    }
}
