use num_traits::Zero;

use super::{ratio, CompressedMatrix, Rational, Strategy};

/// Per-band summary: how many ones and how widely they spread.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandStats {
    pub ones: usize,
    /// 1-based index of the first one; 0 for an empty band.
    pub low: usize,
    pub high: usize,
    /// `ones / (high - low + 1)`, zero for an empty band.
    pub contribution: Rational,
}

impl BandStats {
    pub fn of(band: &[bool]) -> BandStats {
        let ones = band.iter().filter(|&&b| b).count();
        match (band.iter().position(|&b| b), band.iter().rposition(|&b| b)) {
            (Some(lo), Some(hi)) => BandStats {
                ones,
                low: lo + 1,
                high: hi + 1,
                contribution: ratio(ones, hi - lo + 1),
            },
            _ => BandStats {
                ones: 0,
                low: 0,
                high: 0,
                contribution: Rational::zero(),
            },
        }
    }

    pub fn interval(&self) -> usize {
        if self.ones == 0 {
            0
        } else {
            self.high - self.low + 1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criterion {
    pub value: Rational,
    pub bands: Vec<BandStats>,
}

/// Sum over bands of ones per spread interval, in exact arithmetic.
pub fn structurization(c: &CompressedMatrix) -> Criterion {
    let bands: Vec<BandStats> = c.iter_bands().map(BandStats::of).collect();
    let value = bands
        .iter()
        .fold(Rational::zero(), |acc, b| acc + &b.contribution);
    Criterion { value, bands }
}

/// Traverse rows only when the row criterion is strictly lower; ties go to columns.
pub fn choose_strategy(q_r: &Rational, q_c: &Rational) -> Strategy {
    if q_r < q_c {
        Strategy::Rows
    } else {
        Strategy::Cols
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::BandAxis;

    #[test]
    fn band_stats() {
        let s = BandStats::of(&[false, true, false, true, true, false]);
        assert_eq!((s.ones, s.low, s.high, s.interval()), (3, 2, 5, 4));
        assert_eq!(s.contribution, ratio(3, 4));
        let e = BandStats::of(&[false; 4]);
        assert_eq!(e.contribution, Rational::zero());
        assert_eq!(e.interval(), 0);
    }

    #[test]
    fn single_one_scores_one() {
        let mut grid = vec![vec![false; 7]; 3];
        grid[2][5] = true;
        let c = CompressedMatrix::from_printed(BandAxis::RowBands, 2, &grid).unwrap();
        assert_eq!(structurization(&c).value, ratio(1, 1));
    }

    #[test]
    fn strategy_rule() {
        assert_eq!(choose_strategy(&ratio(1, 1), &ratio(2, 1)), Strategy::Rows);
        assert_eq!(choose_strategy(&ratio(3, 2), &ratio(3, 2)), Strategy::Cols);
        assert_eq!(
            choose_strategy(&ratio(2654, 1000), &ratio(2577, 1000)),
            Strategy::Cols
        );
    }
}
