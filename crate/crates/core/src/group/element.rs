use std::fmt;

use super::modmatrix::ModMatrix;
use super::perm::Perm;
use crate::lemma52::SemidirectElement;

const TAG_PERM: u8 = 1;
const TAG_SEMIDIRECT: u8 = 2;
const TAG_MODMATRIX: u8 = 3;

/// A group element with one of the supported payloads.
///
/// Equality and hashing go through [`GroupElement::key`], which prefixes the payload bytes
/// with a kind tag so payloads of different kinds never collide.
#[derive(Debug, Clone)]
pub enum GroupElement {
    Perm(Perm),
    Semidirect(SemidirectElement),
    ModMatrix(ModMatrix),
}

impl GroupElement {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupElement::Perm(_) => "perm",
            GroupElement::Semidirect(_) => "semidirect",
            GroupElement::ModMatrix(_) => "modmatrix",
        }
    }

    /// Whether the two elements live in a common ambient group (same kind and shape).
    pub fn compatible(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.degree() == b.degree(),
            (GroupElement::Semidirect(a), GroupElement::Semidirect(b)) => a.same_ambient(b),
            (GroupElement::ModMatrix(a), GroupElement::ModMatrix(b)) => {
                a.modulus() == b.modulus() && a.dim() == b.dim()
            }
            _ => false,
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(Perm::identity(p.degree())),
            GroupElement::Semidirect(s) => GroupElement::Semidirect(s.identity_like()),
            GroupElement::ModMatrix(m) => {
                GroupElement::ModMatrix(ModMatrix::identity(m.modulus(), m.dim()))
            }
        }
    }

    /// `self · other`. Panics if the payloads are incompatible.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.compose(b)),
            (GroupElement::Semidirect(a), GroupElement::Semidirect(b)) => {
                GroupElement::Semidirect(a.compose(b))
            }
            (GroupElement::ModMatrix(a), GroupElement::ModMatrix(b)) => {
                GroupElement::ModMatrix(a.compose(b))
            }
            (a, b) => panic!("cannot compose {} with {}", a.kind(), b.kind()),
        }
    }

    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16);
        match self {
            GroupElement::Perm(p) => {
                out.push(TAG_PERM);
                p.write_key(&mut out);
            }
            GroupElement::Semidirect(s) => {
                out.push(TAG_SEMIDIRECT);
                s.write_key(&mut out);
            }
            GroupElement::ModMatrix(m) => {
                out.push(TAG_MODMATRIX);
                m.write_key(&mut out);
            }
        }
        out
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            GroupElement::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_semidirect(&self) -> Option<&SemidirectElement> {
        match self {
            GroupElement::Semidirect(s) => Some(s),
            _ => None,
        }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl From<Perm> for GroupElement {
    fn from(p: Perm) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<SemidirectElement> for GroupElement {
    fn from(s: SemidirectElement) -> Self {
        GroupElement::Semidirect(s)
    }
}

impl From<ModMatrix> for GroupElement {
    fn from(m: ModMatrix) -> Self {
        GroupElement::ModMatrix(m)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Semidirect(s) => write!(f, "{s}"),
            GroupElement::ModMatrix(m) => {
                let rows: Vec<String> = (0..m.dim())
                    .map(|i| {
                        let row: Vec<String> =
                            (0..m.dim()).map(|j| m.get(i, j).to_string()).collect();
                        format!("[{}]", row.join(","))
                    })
                    .collect();
                write!(f, "[{}] mod {}", rows.join(","), m.modulus())
            }
        }
    }
}
