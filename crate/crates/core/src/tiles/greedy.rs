use serde::Serialize;

use super::{BandAxis, CompressedMatrix};
use crate::error::{RepairError, Result};

/// One spare tile: band index and first covered position along the band,
/// both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TilePlacement {
    pub axis: BandAxis,
    pub band: usize,
    pub start: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyCover {
    pub placements: Vec<TilePlacement>,
    pub per_band: Vec<usize>,
}

impl GreedyCover {
    pub fn total(&self) -> usize {
        self.placements.len()
    }
}

/// 1-based window starts chosen by a left-to-right scan: at each uncovered
/// one, place a window starting there and skip `n` positions. A window that
/// would overrun the band is shifted back to end at the last position.
pub fn greedy_band(band: &[bool], n: usize) -> Vec<usize> {
    let span = band.len();
    let mut starts = Vec::new();
    let mut j = 0;
    while j < span {
        if band[j] {
            starts.push(j.min(span.saturating_sub(n)) + 1);
            j += n;
        } else {
            j += 1;
        }
    }
    starts
}

pub fn greedy_cover(c: &CompressedMatrix) -> GreedyCover {
    let mut placements = Vec::new();
    let mut per_band = Vec::with_capacity(c.bands());
    for (b, band) in c.iter_bands().enumerate() {
        let starts = greedy_band(band, c.n);
        per_band.push(starts.len());
        placements.extend(starts.into_iter().map(|start| TilePlacement {
            axis: c.axis,
            band: b + 1,
            start,
        }));
    }
    GreedyCover {
        placements,
        per_band,
    }
}

/// Longest band the exhaustive window search accepts.
pub const BAND_ORACLE_CAP: usize = 24;

/// Minimum number of length-`n` windows covering every one in `band`.
///
/// Exhaustive: the leftmost uncovered one must lie in some window, so every
/// window containing it is tried in turn.
pub fn brute_force_band_cover(band: &[bool], n: usize) -> Result<usize> {
    if band.len() > BAND_ORACLE_CAP {
        return Err(RepairError::Capacity {
            what: "band span",
            actual: band.len(),
            limit: BAND_ORACLE_CAP,
            hint: None,
        });
    }
    if n == 0 {
        return Err(RepairError::invalid("tile side must be at least 1"));
    }
    let target: u32 = band
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .fold(0, |acc, (i, _)| acc | 1 << i);
    let span = band.len();
    let last_start = span.saturating_sub(n);
    let window = |s: usize| -> u32 {
        let end = (s + n).min(span);
        (s..end).fold(0, |acc, i| acc | 1 << i)
    };

    fn search(uncovered: u32, best: &mut usize, used: usize, windows: &dyn Fn(usize) -> Vec<u32>) {
        if uncovered == 0 {
            *best = (*best).min(used);
            return;
        }
        if used + 1 >= *best {
            return;
        }
        let first = uncovered.trailing_zeros() as usize;
        for w in windows(first) {
            search(uncovered & !w, best, used + 1, windows);
        }
    }

    let windows_at = |pos: usize| -> Vec<u32> {
        let lo = (pos + 1).saturating_sub(n);
        (lo..=pos.min(last_start)).map(window).collect()
    };
    let mut best = usize::MAX;
    search(target, &mut best, 0, &windows_at);
    Ok(best)
}
