//! The product bound: an isomatic partition into iso classes, each of size
//! at least the isolation number, needs iso * iota <= n vertices.

use crate::budget::{SearchAborted, SearchBudget};
use crate::isomatic::{max_isomatic_with_budget, IsomaticValue};
use crate::solver::min_isolating_with_budget;
use graph_core::Graph;
use isolation_verify::TargetPattern;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub holds: bool,
    /// True when the graph has no target pattern: iota = 0 and the bound
    /// says nothing.
    pub vacuous: bool,
    pub iota: usize,
    pub iso: IsomaticValue,
}

pub fn check_iso_iota_bound(g: &Graph, target: TargetPattern) -> Result<BoundCheck, SearchAborted> {
    check_iso_iota_bound_with_budget(
        g,
        target,
        &SearchBudget::for_min_isolating(),
        &SearchBudget::for_isomatic(),
    )
}

pub fn check_iso_iota_bound_with_budget(
    g: &Graph,
    target: TargetPattern,
    min_budget: &SearchBudget,
    iso_budget: &SearchBudget,
) -> Result<BoundCheck, SearchAborted> {
    let iota = min_isolating_with_budget(g, target, min_budget)?.value;
    if iota == 0 {
        return Ok(BoundCheck {
            holds: true,
            vacuous: true,
            iota: 0,
            iso: IsomaticValue::Unbounded,
        });
    }
    let iso = max_isomatic_with_budget(g, target, iso_budget)?.value;
    let holds = match iso {
        // A patterned graph cannot report unbounded.
        IsomaticValue::Unbounded => unreachable!("patterned graph has finite isomatic number"),
        IsomaticValue::Finite(m) => m * iota <= g.n(),
    };
    Ok(BoundCheck {
        holds,
        vacuous: false,
        iota,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::builders::{complete, cycle, path};

    #[test]
    fn bound_examples() {
        // C_3 with cycles: iso 3, iota 1, 3 * 1 <= 3.
        let b = check_iso_iota_bound(&complete(3), TargetPattern::AnyCycle).unwrap();
        assert!(b.holds && !b.vacuous);
        assert_eq!((b.iota, b.iso), (1, IsomaticValue::Finite(3)));

        // K_4 with 4-cliques: iso 4, iota 1.
        let b = check_iso_iota_bound(&complete(4), TargetPattern::KClique(4)).unwrap();
        assert!(b.holds && !b.vacuous);
        assert_eq!((b.iota, b.iso), (1, IsomaticValue::Finite(4)));

        // Forests are cycle-free: vacuously true.
        let b = check_iso_iota_bound(&path(6), TargetPattern::AnyCycle).unwrap();
        assert!(b.holds && b.vacuous);
        assert_eq!(b.iota, 0);

        let b = check_iso_iota_bound(&cycle(5), TargetPattern::ISOLATION).unwrap();
        assert!(b.holds && !b.vacuous);
        assert_eq!(b.iota, 2);
    }
}
