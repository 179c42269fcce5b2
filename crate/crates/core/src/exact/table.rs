use std::collections::BTreeSet;

use super::LineId;
use crate::error::{RepairError, Result};
use crate::model::FaultCoord;

/// Incidence between candidate lines (table rows) and faults (table columns).
///
/// Lines are every touched column in ascending order followed by every
/// touched row in ascending order; that position is the variable number
/// used by [`super::Term`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageTable {
    faults: Vec<FaultCoord>,
    lines: Vec<LineId>,
    incidence: Vec<Vec<bool>>,
}

impl CoverageTable {
    pub fn faults(&self) -> &[FaultCoord] {
        &self.faults
    }

    pub fn lines(&self) -> &[LineId] {
        &self.lines
    }

    /// `incidence()[line][fault]`.
    pub fn incidence(&self) -> &[Vec<bool>] {
        &self.incidence
    }

    pub fn covers(&self, line: usize, fault: usize) -> bool {
        self.incidence[line][fault]
    }

    pub(crate) fn slot_of(&self, line: LineId) -> usize {
        self.lines
            .binary_search(&line)
            .expect("fault line missing from coverage table")
    }
}

pub fn build_coverage_table(faults: &[FaultCoord]) -> Result<CoverageTable> {
    if faults.is_empty() {
        return Err(RepairError::invalid(
            "coverage table needs at least one fault",
        ));
    }
    let mut seen = BTreeSet::new();
    for f in faults {
        if !seen.insert(*f) {
            return Err(RepairError::invalid(format!("duplicate fault {f}")));
        }
    }
    let cols: BTreeSet<usize> = faults.iter().map(|f| f.col).collect();
    let rows: BTreeSet<usize> = faults.iter().map(|f| f.row).collect();
    // LineAxis::Column < LineAxis::Row, so this is already sorted.
    let lines: Vec<LineId> = cols
        .into_iter()
        .map(LineId::column)
        .chain(rows.into_iter().map(LineId::row))
        .collect();
    let incidence = lines
        .iter()
        .map(|&l| {
            faults
                .iter()
                .map(|f| l == LineId::column(f.col) || l == LineId::row(f.row))
                .collect()
        })
        .collect();
    Ok(CoverageTable {
        faults: faults.to_vec(),
        lines,
        incidence,
    })
}
