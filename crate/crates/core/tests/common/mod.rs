#![allow(dead_code)]

use std::path::PathBuf;

use fpga_repair::tiles::{BandAxis, CompressedMatrix};
use fpga_repair::{FaultCoord, FaultMatrix};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

/// The ten faults of the worked row/column example.
pub fn example_faults() -> Vec<FaultCoord> {
    [
        (2, 2),
        (2, 5),
        (2, 8),
        (4, 3),
        (5, 5),
        (5, 8),
        (7, 2),
        (8, 5),
        (9, 3),
        (9, 7),
    ]
    .into_iter()
    .map(|(i, j)| FaultCoord::new(i, j))
    .collect()
}

pub fn bits(rows: &[&str]) -> Vec<Vec<bool>> {
    rows.iter()
        .map(|r| {
            r.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c == '1')
                .collect()
        })
        .collect()
}

pub fn six_by_six() -> FaultMatrix {
    FaultMatrix::from_rows(&bits(&[
        "000011", "000001", "011010", "100001", "000010", "010101",
    ]))
    .unwrap()
}

pub fn six_by_six_row_bands() -> Vec<Vec<bool>> {
    bits(&["011011", "110111"])
}

pub fn six_by_six_col_bands() -> Vec<Vec<bool>> {
    bits(&["01", "01", "11", "11", "01", "11"])
}

/// Printed 5 × 15 row-band matrix of the 15 × 15, n = 3 example.
pub fn fig2_row_bands_printed() -> Vec<Vec<bool>> {
    bits(&[
        "010110010010101",
        "001010010011010",
        "011110101001010",
        "001000100101110",
        "010101010101010",
    ])
}

/// Printed 15 × 5 column-band matrix of the same example.
pub fn fig2_col_bands_printed() -> Vec<Vec<bool>> {
    bits(&[
        "00100", "11011", "01100", "10001", "01110", "00010", "10101", "01010", "11101", "00000",
        "10111", "00011", "11000", "01110", "00001",
    ])
}

pub fn fig2_row_bands() -> CompressedMatrix {
    CompressedMatrix::from_printed(BandAxis::RowBands, 3, &fig2_row_bands_printed()).unwrap()
}

pub fn fig2_col_bands() -> CompressedMatrix {
    CompressedMatrix::from_printed(BandAxis::ColBands, 3, &fig2_col_bands_printed()).unwrap()
}
