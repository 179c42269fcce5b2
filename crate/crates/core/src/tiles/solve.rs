use serde::Serialize;

use super::{
    choose_strategy, compress, greedy_cover, ratio, structurization, to_f64, BandAxis, GreedyCover,
    Rational, Strategy, TilePlacement,
};
use crate::error::{RepairError, Result};
use crate::model::FaultMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileRepairResult {
    pub n: usize,
    pub strategy: Strategy,
    pub q_r: Rational,
    pub q_c: Rational,
    pub placements: Vec<TilePlacement>,
    pub per_band: Vec<usize>,
    pub spares_used: usize,
    pub spares_other_strategy: usize,
    /// Faulty blocks per spare tile; `None` when nothing needed repair.
    pub quality: Option<Rational>,
    pub fault_total: usize,
}

impl TileRepairResult {
    pub fn spares_for(&self, s: Strategy) -> usize {
        if s == self.strategy {
            self.spares_used
        } else {
            self.spares_other_strategy
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TileReport {
    pub strategy: Strategy,
    pub q_r: f64,
    pub q_c: f64,
    pub spares_used: usize,
    pub spares_other_strategy: usize,
    pub quality: Option<f64>,
    pub placements: Vec<TilePlacement>,
    pub fault_total: usize,
}

impl TileRepairResult {
    pub fn report(&self) -> TileReport {
        TileReport {
            strategy: self.strategy,
            q_r: to_f64(&self.q_r),
            q_c: to_f64(&self.q_c),
            spares_used: self.spares_used,
            spares_other_strategy: self.spares_other_strategy,
            quality: self.quality.as_ref().map(to_f64),
            placements: self.placements.clone(),
            fault_total: self.fault_total,
        }
    }
}

/// Faulty blocks repaired per spare tile.
pub fn coverage_quality(fault_total: usize, spares: usize) -> Result<Option<Rational>> {
    match (fault_total, spares) {
        (0, 0) => Ok(None),
        (_, 0) => Err(RepairError::Internal(format!(
            "{fault_total} faults but no spare tiles placed"
        ))),
        (f, n) => Ok(Some(ratio(f, n))),
    }
}

/// Picks the traversal by the structurization criteria and covers greedily.
pub fn solve_tiles(m: &FaultMatrix, n: usize) -> Result<TileRepairResult> {
    solve_tiles_with(m, n, None)
}

/// As [`solve_tiles`], optionally overriding the strategy the criteria would pick.
pub fn solve_tiles_with(
    m: &FaultMatrix,
    n: usize,
    forced: Option<Strategy>,
) -> Result<TileRepairResult> {
    let rows = compress(m, n, BandAxis::RowBands)?;
    let cols = compress(m, n, BandAxis::ColBands)?;
    let q_r = structurization(&rows).value;
    let q_c = structurization(&cols).value;
    let strategy = forced.unwrap_or_else(|| choose_strategy(&q_r, &q_c));

    let by_rows = greedy_cover(&rows);
    let by_cols = greedy_cover(&cols);
    let (chosen, other): (GreedyCover, GreedyCover) = match strategy {
        Strategy::Rows => (by_rows, by_cols),
        Strategy::Cols => (by_cols, by_rows),
    };
    let fault_total = m.fault_count();
    let spares_used = chosen.total();
    Ok(TileRepairResult {
        n,
        strategy,
        q_r,
        q_c,
        quality: coverage_quality(fault_total, spares_used)?,
        placements: chosen.placements,
        per_band: chosen.per_band,
        spares_used,
        spares_other_strategy: other.total(),
        fault_total,
    })
}
