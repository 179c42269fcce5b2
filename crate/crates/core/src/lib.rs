//! Repair planning for FPGA logic-block matrices with multiple faults.
//!
//! - [`exact`]: minimum spare row/column covers by product-of-sums expansion.
//! - [`tiles`]: quasi-optimal `n × n` spare-tile covers by criterion-guided
//!   greedy traversal.
//! - [`experiment`]: seeded batches that measure how often the traversal
//!   criterion picks the cheaper direction.

pub mod error;
pub mod exact;
pub mod experiment;
pub mod fsutil;
pub mod model;
pub mod render;
pub mod tiles;

pub use error::{RepairError, Result};
pub use model::{
    detect_format, fault_coords, inject_faults, parse_fault_list, parse_fault_matrix, parse_input,
    FaultCoord, FaultMatrix, InputFormat, MatrixFile, SpareBudget, TileConfig,
};
pub use render::{render_ascii, Overlay};
