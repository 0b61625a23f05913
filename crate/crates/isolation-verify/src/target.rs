//! What must be absent from a residual graph.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// The pattern an isolating set must eliminate from G - N[D].
///
/// `KClique(1)` is plain domination and `KClique(2)` ordinary isolation;
/// `AnyCycle` asks the residual to be a forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetPattern {
    KClique(usize),
    AnyCycle,
}

impl TargetPattern {
    pub const DOMINATION: TargetPattern = TargetPattern::KClique(1);
    pub const ISOLATION: TargetPattern = TargetPattern::KClique(2);

    /// Parses the CLI spelling: `kclique:<k>`, `cycle`, or `dominate`.
    pub fn parse(text: &str) -> Result<Self, String> {
        match text {
            "cycle" => Ok(TargetPattern::AnyCycle),
            "dominate" => Ok(TargetPattern::DOMINATION),
            other => {
                let k = other
                    .strip_prefix("kclique:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| {
                        format!("expected kclique:<k>, cycle or dominate, got {other:?}")
                    })?;
                if k == 0 {
                    return Err("kclique target needs k >= 1".into());
                }
                Ok(TargetPattern::KClique(k))
            }
        }
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetPattern::KClique(k) => write!(f, "kclique:{k}"),
            TargetPattern::AnyCycle => write!(f, "cycle"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TargetRepr {
    kind: String,
    k: Option<usize>,
}

impl Serialize for TargetPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            TargetPattern::KClique(k) => TargetRepr {
                kind: "kclique".into(),
                k: Some(*k),
            },
            TargetPattern::AnyCycle => TargetRepr {
                kind: "cycle".into(),
                k: None,
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TargetPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TargetRepr::deserialize(deserializer)?;
        match repr.kind.as_str() {
            "kclique" => {
                let k = repr.k.ok_or_else(|| D::Error::custom("kclique needs k"))?;
                if k == 0 {
                    return Err(D::Error::custom("kclique needs k >= 1"));
                }
                Ok(TargetPattern::KClique(k))
            }
            "cycle" => Ok(TargetPattern::AnyCycle),
            other => Err(D::Error::custom(format!("unknown target kind {other:?}"))),
        }
    }
}
