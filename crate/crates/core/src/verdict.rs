use std::fmt;

use crate::superpoly::SuperPoly;

/// Three-valued answer of a restricted decision procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn is_false(self) -> bool {
        self == Tri::False
    }

    /// Conjunction: any False wins, then any Unknown.
    pub fn and(self, o: Tri) -> Tri {
        match (self, o) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Unknown,
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::True => "true",
            Tri::False => "false",
            Tri::Unknown => "unknown",
        })
    }
}

/// A tri-state answer with a human-readable certificate and an optional
/// witness element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: Tri,
    pub reason: String,
    pub witness: Option<SuperPoly>,
}

impl Verdict {
    pub fn new(value: Tri, reason: impl Into<String>) -> Verdict {
        Verdict {
            value,
            reason: reason.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: SuperPoly) -> Verdict {
        self.witness = Some(w);
        self
    }
}
