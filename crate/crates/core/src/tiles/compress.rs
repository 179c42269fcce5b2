use super::BandAxis;
use crate::error::{RepairError, Result};
use crate::model::FaultMatrix;

/// OR-folded fault matrix, stored band-major regardless of axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedMatrix {
    pub axis: BandAxis,
    pub n: usize,
    cells: Vec<Vec<bool>>,
    span: usize,
}

impl CompressedMatrix {
    /// Builds from the natural (printed) orientation: `bands × span` for row
    /// bands, `span × bands` for column bands.
    pub fn from_printed(axis: BandAxis, n: usize, grid: &[Vec<bool>]) -> Result<Self> {
        if n == 0 {
            return Err(RepairError::invalid("tile side must be at least 1"));
        }
        let width = grid.first().map_or(0, Vec::len);
        if grid.iter().any(|r| r.len() != width) {
            return Err(RepairError::invalid("ragged compressed matrix"));
        }
        let cells = match axis {
            BandAxis::RowBands => grid.to_vec(),
            BandAxis::ColBands => (0..width)
                .map(|b| grid.iter().map(|r| r[b]).collect())
                .collect(),
        };
        let span = match axis {
            BandAxis::RowBands => width,
            BandAxis::ColBands => grid.len(),
        };
        Ok(CompressedMatrix {
            axis,
            n,
            cells,
            span,
        })
    }

    /// Inverse of [`CompressedMatrix::from_printed`].
    pub fn to_printed(&self) -> Vec<Vec<bool>> {
        match self.axis {
            BandAxis::RowBands => self.cells.clone(),
            BandAxis::ColBands => (0..self.span)
                .map(|i| self.cells.iter().map(|band| band[i]).collect())
                .collect(),
        }
    }

    pub fn bands(&self) -> usize {
        self.cells.len()
    }

    pub fn span(&self) -> usize {
        self.span
    }

    /// Zero-based band.
    pub fn band(&self, b: usize) -> &[bool] {
        &self.cells[b]
    }

    pub fn iter_bands(&self) -> impl Iterator<Item = &[bool]> {
        self.cells.iter().map(Vec::as_slice)
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().flatten().filter(|&&c| c).count()
    }
}

pub fn compress(m: &FaultMatrix, n: usize, axis: BandAxis) -> Result<CompressedMatrix> {
    if n == 0 {
        return Err(RepairError::invalid("tile side must be at least 1"));
    }
    let (folded, span, name) = match axis {
        BandAxis::RowBands => (m.rows(), m.cols(), "rows"),
        BandAxis::ColBands => (m.cols(), m.rows(), "columns"),
    };
    if folded % n != 0 {
        return Err(RepairError::invalid(format!(
            "{name} ({folded}) not divisible by tile side {n}"
        )));
    }
    let cells = (0..folded / n)
        .map(|b| {
            (0..span)
                .map(|s| {
                    (b * n..(b + 1) * n).any(|k| match axis {
                        BandAxis::RowBands => m.is_faulty(k, s),
                        BandAxis::ColBands => m.is_faulty(s, k),
                    })
                })
                .collect()
        })
        .collect();
    Ok(CompressedMatrix {
        axis,
        n,
        cells,
        span,
    })
}
