//! Witness-carrying verdicts.

use crate::target::TargetPattern;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// Outcome of a verification. On FAIL the witness is the pattern that
/// survives in G - N[D] (a k-clique as a sorted vertex list, or a cycle in
/// traversal order), in original-graph labels; `class` names the failing
/// color class when a partition was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub class: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub target: TargetPattern,
}

impl Certificate {
    pub fn pass(target: TargetPattern) -> Self {
        Certificate {
            verdict: Verdict::Pass,
            class: None,
            witness: None,
            target,
        }
    }

    pub fn fail(target: TargetPattern, class: Option<usize>, witness: Vec<usize>) -> Self {
        Certificate {
            verdict: Verdict::Fail,
            class,
            witness: Some(witness),
            target,
        }
    }

    #[inline]
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Pass => write!(f, "PASS ({})", self.target),
            Verdict::Fail => {
                write!(f, "FAIL ({})", self.target)?;
                if let Some(class) = self.class {
                    write!(f, " class {class}")?;
                }
                if let Some(w) = &self.witness {
                    write!(f, " witness {w:?}")?;
                }
                Ok(())
            }
        }
    }
}
