//! Independent checks for the exact solver: exhaustive subset search and
//! maximum bipartite matching (König: in a bipartite graph the minimum
//! vertex cover equals the maximum matching).

use std::collections::BTreeSet;

use super::LineId;
use crate::error::{RepairError, Result};
use crate::model::FaultCoord;

/// Largest number of distinct lines the exhaustive search accepts.
pub const ORACLE_LINE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCover {
    /// A minimum covering line set: columns ascending, then rows ascending.
    pub lines: Vec<LineId>,
    pub matching_size: usize,
}

impl OracleCover {
    pub fn size(&self) -> usize {
        self.lines.len()
    }
}

pub fn brute_force_min_cover(faults: &[FaultCoord]) -> Result<OracleCover> {
    let cols: Vec<usize> = faults
        .iter()
        .map(|f| f.col)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows: Vec<usize> = faults
        .iter()
        .map(|f| f.row)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let width = cols.len() + rows.len();
    if width > ORACLE_LINE_CAP {
        return Err(RepairError::Capacity {
            what: "distinct line count",
            actual: width,
            limit: ORACLE_LINE_CAP,
            hint: None,
        });
    }
    let bit = |slot: usize| 1u32 << slot;
    let masks: Vec<u32> = faults
        .iter()
        .map(|f| {
            let c = cols.binary_search(&f.col).unwrap();
            let r = rows.binary_search(&f.row).unwrap();
            bit(c) | bit(cols.len() + r)
        })
        .collect();

    let best = (0..=width)
        .find_map(|size| subsets_of_size(width, size).find(|&s| masks.iter().all(|&m| m & s != 0)))
        .expect("the full line set always covers");

    let lines = (0..width)
        .filter(|&s| best & bit(s) != 0)
        .map(|s| {
            if s < cols.len() {
                LineId::column(cols[s])
            } else {
                LineId::row(rows[s - cols.len()])
            }
        })
        .collect();
    Ok(OracleCover {
        lines,
        matching_size: max_bipartite_matching(faults),
    })
}

/// All `width`-bit masks with `size` bits set, ascending (Gosper's hack).
fn subsets_of_size(width: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << width;
    let mut next = if size == 0 {
        Some(0u64)
    } else {
        Some((1u64 << size) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as u32)
    })
}

/// Size of a maximum matching between fault rows and fault columns, with
/// each fault as an edge. Simple augmenting paths (Kuhn).
pub fn max_bipartite_matching(faults: &[FaultCoord]) -> usize {
    let rows: Vec<usize> = faults
        .iter()
        .map(|f| f.row)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cols: Vec<usize> = faults
        .iter()
        .map(|f| f.col)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut adj = vec![Vec::new(); rows.len()];
    for f in faults {
        let r = rows.binary_search(&f.row).unwrap();
        let c = cols.binary_search(&f.col).unwrap();
        adj[r].push(c);
    }

    fn augment(
        r: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &c in &adj[r] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; cols.len()];
    (0..rows.len())
        .filter(|&r| {
            let mut seen = vec![false; cols.len()];
            augment(r, &adj, &mut seen, &mut owner)
        })
        .count()
}
