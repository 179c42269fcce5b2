//! Fault-marked block matrices and their text file formats.
//!
//! Two input forms are accepted. The grid form is a `p q n` header followed
//! by `p` lines of `q` characters from `{0, 1}`. The fault-list form shares
//! the header and then lists one 1-based `i j` coordinate per line.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{RepairError, Result};

/// 1-based coordinate of a faulty logic block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaultCoord {
    pub row: usize,
    pub col: usize,
}

impl FaultCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        FaultCoord { row, col }
    }
}

impl fmt::Display for FaultCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.row, self.col)
    }
}

/// Side length of a square spare tile, in logic blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TileConfig(usize);

impl TileConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(RepairError::invalid("tile side must be at least 1"));
        }
        Ok(TileConfig(n))
    }

    pub fn side(self) -> usize {
        self.0
    }
}

/// A `rows × cols` grid of logic blocks; `true` marks a faulty block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaultMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl FaultMatrix {
    /// All-healthy matrix.
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(RepairError::invalid(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(FaultMatrix {
            rows,
            cols,
            cells: vec![false; rows * cols],
        })
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = FaultMatrix::new(rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(RepairError::invalid(format!(
                    "ragged row {}: expected {cols} cells, got {}",
                    i + 1,
                    r.len()
                )));
            }
            m.cells[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        Ok(m)
    }

    pub fn from_faults(rows: usize, cols: usize, faults: &[FaultCoord]) -> Result<Self> {
        let mut m = FaultMatrix::new(rows, cols)?;
        for &f in faults {
            m.check_coord(f)?;
            m.set(f, true);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based cell access.
    #[inline]
    pub fn is_faulty(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.cols + j]
    }

    pub fn get(&self, at: FaultCoord) -> bool {
        self.is_faulty(at.row - 1, at.col - 1)
    }

    pub fn set(&mut self, at: FaultCoord, faulty: bool) {
        let idx = (at.row - 1) * self.cols + (at.col - 1);
        self.cells[idx] = faulty;
    }

    pub fn contains(&self, at: FaultCoord) -> bool {
        (1..=self.rows).contains(&at.row) && (1..=self.cols).contains(&at.col)
    }

    fn check_coord(&self, at: FaultCoord) -> Result<()> {
        if self.contains(at) {
            Ok(())
        } else {
            Err(RepairError::invalid(format!(
                "fault {at} outside {}x{} matrix",
                self.rows, self.cols
            )))
        }
    }

    pub fn fault_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Zero-based row slice.
    pub fn row(&self, i: usize) -> &[bool] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    /// Zero-pads the matrix so both dimensions are multiples of `n`.
    pub fn padded_to_multiple(&self, n: usize) -> FaultMatrix {
        let rows = self.rows.div_ceil(n) * n;
        let cols = self.cols.div_ceil(n) * n;
        let mut out = FaultMatrix {
            rows,
            cols,
            cells: vec![false; rows * cols],
        };
        for i in 0..self.rows {
            out.cells[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
        }
        out
    }
}

/// Row-major list of faulty block coordinates.
pub fn fault_coords(m: &FaultMatrix) -> Vec<FaultCoord> {
    m.cells
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(idx, _)| FaultCoord::new(idx / m.cols + 1, idx % m.cols + 1))
        .collect()
}

/// Marks exactly `k` distinct blocks faulty, sampled without replacement
/// from a ChaCha8 stream seeded with `seed`.
pub fn inject_faults(rows: usize, cols: usize, k: usize, seed: u64) -> Result<FaultMatrix> {
    let mut m = FaultMatrix::new(rows, cols)?;
    let total = rows * cols;
    if k > total {
        return Err(RepairError::invalid(format!(
            "cannot inject {k} faults into {total} blocks"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in index::sample(&mut rng, total, k) {
        m.cells[idx] = true;
    }
    Ok(m)
}

/// Spare lines available for row/column readdressing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpareBudget {
    pub spare_cols: usize,
    pub spare_rows: usize,
    /// Physical 1-based indices of the spare columns, if not just past the grid.
    pub spare_col_ids: Option<Vec<usize>>,
    pub spare_row_ids: Option<Vec<usize>>,
}

impl SpareBudget {
    pub fn new(spare_cols: usize, spare_rows: usize) -> Self {
        SpareBudget {
            spare_cols,
            spare_rows,
            spare_col_ids: None,
            spare_row_ids: None,
        }
    }

    pub fn with_ids(mut self, col_ids: Vec<usize>, row_ids: Vec<usize>) -> Self {
        self.spare_col_ids = Some(col_ids);
        self.spare_row_ids = Some(row_ids);
        self
    }

    /// Checks explicit ids against the functional `rows × cols` region.
    pub fn validate(&self, rows: usize, cols: usize) -> Result<()> {
        fn check(ids: &Option<Vec<usize>>, count: usize, limit: usize, axis: &str) -> Result<()> {
            let Some(ids) = ids else { return Ok(()) };
            if ids.len() != count {
                return Err(RepairError::invalid(format!(
                    "{} spare {axis} ids given for {count} spare {axis}s",
                    ids.len()
                )));
            }
            let mut seen = ids.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != ids.len() {
                return Err(RepairError::invalid(format!("duplicate spare {axis} id")));
            }
            if let Some(bad) = ids.iter().find(|&&id| id == 0 || id <= limit) {
                return Err(RepairError::invalid(format!(
                    "spare {axis} id {bad} overlaps the functional region 1..={limit}"
                )));
            }
            Ok(())
        }
        check(&self.spare_col_ids, self.spare_cols, cols, "column")?;
        check(&self.spare_row_ids, self.spare_rows, rows, "row")
    }

    /// Spare column ids in ascending order, synthesized as `cols+1, cols+2, …`
    /// when none were given.
    pub fn col_ids(&self, cols: usize) -> Vec<usize> {
        resolve_ids(&self.spare_col_ids, self.spare_cols, cols)
    }

    pub fn row_ids(&self, rows: usize) -> Vec<usize> {
        resolve_ids(&self.spare_row_ids, self.spare_rows, rows)
    }
}

fn resolve_ids(ids: &Option<Vec<usize>>, count: usize, base: usize) -> Vec<usize> {
    match ids {
        Some(ids) => {
            let mut v = ids.clone();
            v.sort_unstable();
            v
        }
        None => (base + 1..=base + count).collect(),
    }
}

/// Which textual layout an input file uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Grid,
    FaultList,
}

impl FromStr for InputFormat {
    type Err = RepairError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(InputFormat::Grid),
            "faultlist" => Ok(InputFormat::FaultList),
            other => Err(RepairError::invalid(format!(
                "unknown input format `{other}`"
            ))),
        }
    }
}

/// A parsed matrix file: the block grid plus the tile side from its header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: FaultMatrix,
    pub tile: TileConfig,
}

struct Header {
    rows: usize,
    cols: usize,
    tile: TileConfig,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
}

fn parse_header(line_no: usize, line: &str) -> Result<Header> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(RepairError::parse(
            line_no,
            format!("malformed header: expected \"p q n\", got {line:?}"),
        ));
    }
    let mut nums = [0usize; 3];
    for (slot, field) in nums.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| {
            RepairError::parse(
                line_no,
                format!("malformed header: {field:?} is not a count"),
            )
        })?;
    }
    let [rows, cols, n] = nums;
    if rows == 0 || cols == 0 || n == 0 {
        return Err(RepairError::parse(
            line_no,
            "malformed header: p, q and n must be positive",
        ));
    }
    Ok(Header {
        rows,
        cols,
        tile: TileConfig(n),
    })
}

/// Parses the grid form.
pub fn parse_fault_matrix(text: &str) -> Result<MatrixFile> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| RepairError::parse(1, "malformed header: empty input"))?;
    let Header { rows, cols, tile } = parse_header(hl, header)?;
    let mut cells = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == rows {
            if line.trim().is_empty() {
                continue;
            }
            return Err(RepairError::parse(
                line_no,
                format!("unexpected content after {rows} rows"),
            ));
        }
        let len = line.chars().count();
        if len != cols {
            return Err(RepairError::parse(
                line_no,
                format!("ragged row: expected {cols} cells, got {len}"),
            ));
        }
        for ch in line.chars() {
            match ch {
                '0' => cells.push(false),
                '1' => cells.push(true),
                other => {
                    return Err(RepairError::parse(
                        line_no,
                        format!("invalid cell character {other:?}"),
                    ))
                }
            }
        }
        seen += 1;
    }
    if seen != rows {
        return Err(RepairError::parse(
            hl + seen + 1,
            format!("expected {rows} rows, found {seen}"),
        ));
    }
    Ok(MatrixFile {
        matrix: FaultMatrix { rows, cols, cells },
        tile,
    })
}

/// Parses the fault-list form.
pub fn parse_fault_list(text: &str) -> Result<MatrixFile> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| RepairError::parse(1, "malformed header: empty input"))?;
    let Header { rows, cols, tile } = parse_header(hl, header)?;
    let mut matrix = FaultMatrix::new(rows, cols)?;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [i, j] => {
                let coord = match (i.parse(), j.parse()) {
                    (Ok(i), Ok(j)) => FaultCoord::new(i, j),
                    _ => {
                        return Err(RepairError::parse(
                            line_no,
                            format!("expected \"i j\", got {line:?}"),
                        ))
                    }
                };
                if !matrix.contains(coord) {
                    return Err(RepairError::parse(
                        line_no,
                        format!("fault {coord} outside {rows}x{cols} matrix"),
                    ));
                }
                if matrix.get(coord) {
                    return Err(RepairError::parse(
                        line_no,
                        format!("duplicate fault {coord}"),
                    ));
                }
                matrix.set(coord, true);
            }
            _ => {
                return Err(RepairError::parse(
                    line_no,
                    format!("expected \"i j\", got {line:?}"),
                ))
            }
        }
    }
    Ok(MatrixFile { matrix, tile })
}

pub fn parse_input(text: &str, format: InputFormat) -> Result<MatrixFile> {
    match format {
        InputFormat::Grid => parse_fault_matrix(text),
        InputFormat::FaultList => parse_fault_list(text),
    }
}

/// Guesses the layout from the first content line after the header.
pub fn detect_format(text: &str) -> InputFormat {
    let body = text.lines().skip(1).find(|l| !l.trim().is_empty());
    match body {
        Some(l) if l.split_whitespace().count() == 2 => InputFormat::FaultList,
        _ => InputFormat::Grid,
    }
}

/// Canonical grid-form serialization; `parse_fault_matrix` inverts it.
pub fn to_grid_text(m: &FaultMatrix, tile: TileConfig) -> String {
    let mut out = format!("{} {} {}\n", m.rows, m.cols, tile.side());
    for i in 0..m.rows {
        out.extend(m.row(i).iter().map(|&c| if c { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn to_fault_list_text(m: &FaultMatrix, tile: TileConfig) -> String {
    let mut out = format!("{} {} {}\n", m.rows, m.cols, tile.side());
    for f in fault_coords(m) {
        out.push_str(&format!("{} {}\n", f.row, f.col));
    }
    out
}
