//! Quasi-optimal repair with `n × n` spare tiles.
//!
//! The block matrix is OR-folded into row bands (`n` block rows per band)
//! or column bands. A structurization criterion (ones per spread interval,
//! summed over bands) picks the traversal direction, and each band is then
//! covered greedily with length-`n` windows.

mod compress;
mod criteria;
mod greedy;
mod solve;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::RepairError;

pub use compress::{compress, CompressedMatrix};
pub use criteria::{choose_strategy, structurization, BandStats, Criterion};
pub use greedy::{
    brute_force_band_cover, greedy_band, greedy_cover, GreedyCover, TilePlacement, BAND_ORACLE_CAP,
};
pub use solve::{coverage_quality, solve_tiles, solve_tiles_with, TileRepairResult, TileReport};

pub type Rational = Ratio<BigInt>;

/// Direction of OR-folding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BandAxis {
    /// `n` consecutive block rows fold into one band; bands run along columns.
    RowBands,
    ColBands,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Rows,
    Cols,
}

impl Strategy {
    pub fn axis(self) -> BandAxis {
        match self {
            Strategy::Rows => BandAxis::RowBands,
            Strategy::Cols => BandAxis::ColBands,
        }
    }

    pub fn other(self) -> Strategy {
        match self {
            Strategy::Rows => Strategy::Cols,
            Strategy::Cols => Strategy::Rows,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Rows => "rows",
            Strategy::Cols => "cols",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = RepairError;

    fn from_str(s: &str) -> Result<Self, RepairError> {
        match s {
            "rows" => Ok(Strategy::Rows),
            "cols" => Ok(Strategy::Cols),
            other => Err(RepairError::invalid(format!("unknown strategy `{other}`"))),
        }
    }
}

pub(crate) fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
