//! Plain-text view of a block matrix.
//!
//! `.` healthy, `X` faulty, `o` healthy but replaced by a spare, `x` faulty
//! and repaired. With tiles larger than one block, `|` and `-` rules mark
//! tile boundaries.

use crate::exact::{LineAxis, LineId};
use crate::model::{FaultMatrix, TileConfig};
use crate::tiles::{BandAxis, TilePlacement};

/// Repair regions to draw on top of the matrix.
#[derive(Debug, Clone, Copy)]
pub enum Overlay<'a> {
    Lines(&'a [LineId]),
    /// Tile placements; each covers `n × n` blocks for the render's tile side.
    Tiles(&'a [TilePlacement]),
}

fn coverage(m: &FaultMatrix, n: usize, overlay: Option<Overlay<'_>>) -> Vec<Vec<bool>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut covered = vec![vec![false; cols]; rows];
    let mut mark = |r0: usize, r1: usize, c0: usize, c1: usize| {
        for row in covered.iter_mut().take(r1.min(rows)).skip(r0) {
            for cell in row.iter_mut().take(c1.min(cols)).skip(c0) {
                *cell = true;
            }
        }
    };
    match overlay {
        None => {}
        Some(Overlay::Lines(lines)) => {
            for l in lines {
                let k = l.index - 1;
                match l.axis {
                    LineAxis::Column => mark(0, rows, k, k + 1),
                    LineAxis::Row => mark(k, k + 1, 0, cols),
                }
            }
        }
        Some(Overlay::Tiles(tiles)) => {
            for t in tiles {
                let band = (t.band - 1) * n;
                let start = t.start - 1;
                match t.axis {
                    BandAxis::RowBands => mark(band, band + n, start, start + n),
                    BandAxis::ColBands => mark(start, start + n, band, band + n),
                }
            }
        }
    }
    covered
}

pub fn render_ascii(m: &FaultMatrix, tile: TileConfig, overlay: Option<Overlay<'_>>) -> String {
    let n = tile.side();
    let covered = coverage(m, n, overlay);
    let ruled = n > 1;
    let mut out = String::new();
    for (i, cov_row) in covered.iter().enumerate() {
        if ruled && i > 0 && i % n == 0 {
            for j in 0..m.cols() {
                if j > 0 && j % n == 0 {
                    out.push('+');
                }
                out.push('-');
            }
            out.push('\n');
        }
        for (j, &cov) in cov_row.iter().enumerate() {
            if ruled && j > 0 && j % n == 0 {
                out.push('|');
            }
            out.push(match (m.is_faulty(i, j), cov) {
                (true, true) => 'x',
                (true, false) => 'X',
                (false, true) => 'o',
                (false, false) => '.',
            });
        }
        out.push('\n');
    }
    out
}
