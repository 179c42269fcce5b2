//! Seeded Monte-Carlo check of the traversal criterion.
//!
//! Each trial injects `k` faults into an `(n·p) × (n·q)` block matrix
//! (`p`, `q` count tiles), covers it greedily both ways and asks whether the
//! criterion picked a direction that needs no more spares than the other.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{RepairError, Result};
use crate::fsutil::write_atomic;
use crate::model::{inject_faults, FaultMatrix};
use crate::tiles::{solve_tiles, to_f64, Rational, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub trials: usize,
    /// Tile rows.
    pub p_range: RangeInclusive<usize>,
    /// Tile columns.
    pub q_range: RangeInclusive<usize>,
    pub n_range: RangeInclusive<usize>,
    /// `k` is drawn uniformly from `k_min..=n·p·q`.
    pub k_min: usize,
    pub master_seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            trials: 200,
            p_range: 3..=7,
            q_range: 3..=7,
            n_range: 2..=5,
            k_min: 3,
            master_seed: 0,
        }
    }
}

impl ExperimentConfig {
    /// Ten trials on a fixed 5 × 4 grid of 3 × 3 tiles.
    pub fn fixed_dimension(master_seed: u64) -> Self {
        ExperimentConfig {
            trials: 10,
            p_range: 5..=5,
            q_range: 4..=4,
            n_range: 3..=3,
            master_seed,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, r) in [
            ("p", &self.p_range),
            ("q", &self.q_range),
            ("n", &self.n_range),
        ] {
            if r.is_empty() || *r.start() == 0 {
                return Err(RepairError::invalid(format!(
                    "{name} range {}..={} must be non-empty and positive",
                    r.start(),
                    r.end()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrialParams {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    /// 1-based position in the batch.
    pub trial: usize,
    pub params: TrialParams,
    pub q_r: Rational,
    pub q_c: Rational,
    pub n_rows: usize,
    pub n_cols: usize,
    pub chosen: Strategy,
    pub positive: bool,
}

impl TrialRecord {
    pub fn spares(&self, s: Strategy) -> usize {
        match s {
            Strategy::Rows => self.n_rows,
            Strategy::Cols => self.n_cols,
        }
    }
}

/// Scores one already-built block matrix.
pub fn evaluate_matrix(trial: usize, params: TrialParams, m: &FaultMatrix) -> Result<TrialRecord> {
    let r = solve_tiles(m, params.n)?;
    let n_rows = r.spares_for(Strategy::Rows);
    let n_cols = r.spares_for(Strategy::Cols);
    Ok(TrialRecord {
        trial,
        params,
        positive: r.spares_for(r.strategy) <= r.spares_for(r.strategy.other()),
        q_r: r.q_r,
        q_c: r.q_c,
        n_rows,
        n_cols,
        chosen: r.strategy,
    })
}

pub fn run_trial(p: usize, q: usize, n: usize, k: usize, seed: u64) -> Result<TrialRecord> {
    run_numbered_trial(1, TrialParams { p, q, n, k, seed })
}

fn run_numbered_trial(trial: usize, params: TrialParams) -> Result<TrialRecord> {
    let TrialParams { p, q, n, k, seed } = params;
    if p == 0 || q == 0 || n == 0 {
        return Err(RepairError::invalid("p, q and n must be positive"));
    }
    let m = inject_faults(n * p, n * q, k, seed)?;
    evaluate_matrix(trial, params, &m)
}

/// Draws every trial's parameters up front from the master seed, so the
/// batch does not depend on evaluation order.
pub fn derive_trials(cfg: &ExperimentConfig) -> Result<Vec<TrialParams>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.master_seed);
    Ok((0..cfg.trials)
        .map(|_| {
            let p = rng.random_range(cfg.p_range.clone());
            let q = rng.random_range(cfg.q_range.clone());
            let n = rng.random_range(cfg.n_range.clone());
            let hi = n * p * q;
            let k = rng.random_range(cfg.k_min.min(hi)..=hi);
            let seed = rng.random();
            TrialParams { p, q, n, k, seed }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BreakdownRow {
    pub parameter: &'static str,
    pub value: usize,
    pub trials: usize,
    pub positives: usize,
    pub positive_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchSummary {
    pub trials_run: usize,
    pub positives: usize,
    /// `None` for an empty batch.
    pub positive_rate: Option<f64>,
    pub breakdown: Vec<BreakdownRow>,
}

type ParamKey = fn(&TrialParams) -> usize;

pub fn summarize(records: &[TrialRecord]) -> BatchSummary {
    let positives = records.iter().filter(|r| r.positive).count();
    let mut breakdown = Vec::new();
    let keys: [(&'static str, ParamKey); 3] = [("p", |t| t.p), ("q", |t| t.q), ("n", |t| t.n)];
    for (name, key) in keys {
        let mut groups: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for r in records {
            let g = groups.entry(key(&r.params)).or_default();
            g.0 += 1;
            g.1 += usize::from(r.positive);
        }
        breakdown.extend(
            groups
                .into_iter()
                .map(|(value, (trials, positives))| BreakdownRow {
                    parameter: name,
                    value,
                    trials,
                    positives,
                    positive_rate: positives as f64 / trials as f64,
                }),
        );
    }
    BatchSummary {
        trials_run: records.len(),
        positives,
        positive_rate: (!records.is_empty()).then(|| positives as f64 / records.len() as f64),
        breakdown,
    }
}

pub fn run_batch(cfg: &ExperimentConfig) -> Result<(BatchSummary, Vec<TrialRecord>)> {
    let records = derive_trials(cfg)?
        .into_iter()
        .enumerate()
        .map(|(i, params)| run_numbered_trial(i + 1, params))
        .collect::<Result<Vec<_>>>()?;
    Ok((summarize(&records), records))
}

pub const CSV_HEADER: [&str; 12] = [
    "trial", "p", "q", "n", "k", "seed", "q_r", "q_c", "n_rows", "n_cols", "chosen", "positive",
];

pub fn records_to_csv(records: &[TrialRecord]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| RepairError::Internal(format!("csv encoding: {e}"));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        let t = &r.params;
        w.write_record([
            r.trial.to_string(),
            t.p.to_string(),
            t.q.to_string(),
            t.n.to_string(),
            t.k.to_string(),
            t.seed.to_string(),
            format!("{:.6}", to_f64(&r.q_r)),
            format!("{:.6}", to_f64(&r.q_c)),
            r.n_rows.to_string(),
            r.n_cols.to_string(),
            r.chosen.to_string(),
            r.positive.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.into_inner()
        .map_err(|e| RepairError::Internal(format!("csv flush: {e}")))
}

/// Writes `<prefix>.csv` (one row per trial) and `<prefix>.json` (summary).
pub fn export_report(
    records: &[TrialRecord],
    summary: &BatchSummary,
    prefix: &Path,
) -> Result<(PathBuf, PathBuf)> {
    let with_ext = |ext: &str| {
        let mut s = prefix.as_os_str().to_os_string();
        s.push(ext);
        PathBuf::from(s)
    };
    let (csv_path, json_path) = (with_ext(".csv"), with_ext(".json"));
    let json = serde_json::to_vec_pretty(summary)
        .map_err(|e| RepairError::Internal(format!("json encoding: {e}")))?;
    write_atomic(&csv_path, &records_to_csv(records)?)?;
    write_atomic(&json_path, &json)?;
    Ok((csv_path, json_path))
}
