use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use fpga_repair::exact::{select_repair_plan, RepairPlan, DEFAULT_FAULT_CAP};
use fpga_repair::experiment::{export_report, run_batch, ExperimentConfig};
use fpga_repair::fsutil::write_atomic;
use fpga_repair::tiles::{solve_tiles_with, to_f64, BandAxis, Strategy, TileRepairResult};
use fpga_repair::{
    detect_format, fault_coords, parse_input, render_ascii, InputFormat, MatrixFile, Overlay,
    SpareBudget,
};

use crate::args::{
    ExperimentArgs, InputArgs, InputFormatArg, LinesArgs, OutputFormat, OverlayArg, RenderArgs,
    StrategyArg, TilesArgs,
};
use crate::{Outcome, UsageError};

fn load(input: &InputArgs) -> Result<MatrixFile> {
    let text = fs::read_to_string(&input.input)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", input.input.display())))?;
    let format = match input.input_format {
        InputFormatArg::Auto => detect_format(&text),
        InputFormatArg::Grid => InputFormat::Grid,
        InputFormatArg::Faultlist => InputFormat::FaultList,
    };
    parse_input(&text, format).with_context(|| format!("parsing {}", input.input.display()))
}

fn emit(output: Option<&Path>, body: &str) -> Result<()> {
    match output {
        Some(path) => write_atomic(path, body.as_bytes())?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn repair_lines(args: &LinesArgs) -> Result<Outcome> {
    let file = load(&args.input)?;
    let m = &file.matrix;
    let faults = fault_coords(m);
    let mut budget = SpareBudget::new(args.spare_cols, args.spare_rows);
    budget.spare_col_ids = args.spare_col_ids.clone();
    budget.spare_row_ids = args.spare_row_ids.clone();
    let plan = select_repair_plan(&faults, m.rows(), m.cols(), &budget, args.fault_cap)?;

    let body = match args.format {
        OutputFormat::Json => to_json(&plan.report(&faults, args.all_solutions))?,
        OutputFormat::Text => lines_text(&plan, faults.len(), args.all_solutions),
    };
    emit(args.output.as_deref(), &body)?;
    if plan.feasible {
        Ok(Outcome::Success)
    } else {
        eprintln!(
            "error: no cover fits {} spare columns and {} spare rows",
            args.spare_cols, args.spare_rows
        );
        Ok(Outcome::Infeasible)
    }
}

fn lines_text(plan: &RepairPlan, fault_count: usize, all: bool) -> String {
    let mut s = String::new();
    let show = |t: &fpga_repair::exact::Term| t.display(&plan.lines).to_string();
    let _ = writeln!(s, "faults:     {fault_count}");
    let lines: Vec<String> = plan.lines.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "lines:      {}", lines.join(" "));
    let cnf: String = plan.cnf.clauses.iter().map(ToString::to_string).collect();
    let _ = writeln!(s, "cnf:        {cnf}");
    if all {
        let _ = writeln!(s, "all covers ({}):", plan.dnf.len());
        for t in &plan.dnf {
            let _ = writeln!(s, "  {}", show(t));
        }
    }
    let size = plan.all_minimum.first().map_or(0, |t| t.len());
    let _ = writeln!(s, "minimum covers (size {size}):");
    for t in &plan.all_minimum {
        let _ = writeln!(s, "  {}", show(t));
    }
    let _ = writeln!(
        s,
        "feasible:   {}",
        if plan.feasible { "yes" } else { "no" }
    );
    let _ = writeln!(s, "chosen:     {}", show(&plan.chosen));
    if !plan.readdress.is_empty() {
        let _ = writeln!(s, "readdress:");
        for r in &plan.readdress {
            let axis = match r.axis {
                fpga_repair::exact::LineAxis::Column => "column",
                fpga_repair::exact::LineAxis::Row => "row",
            };
            let _ = writeln!(s, "  {axis} {} -> {}", r.from, r.to);
        }
    }
    match plan.cost_estimate {
        Some(c) => {
            let _ = writeln!(s, "cost:       {c}");
        }
        None => {
            let _ = writeln!(s, "cost:       exceeds 64 bits");
        }
    }
    s
}

fn prepared(file: MatrixFile, pad: bool) -> MatrixFile {
    if pad {
        let n = file.tile.side();
        MatrixFile {
            matrix: file.matrix.padded_to_multiple(n),
            tile: file.tile,
        }
    } else {
        file
    }
}

pub fn repair_tiles(args: &TilesArgs) -> Result<Outcome> {
    let file = prepared(load(&args.input)?, args.pad);
    let forced = match args.strategy {
        StrategyArg::Auto => None,
        StrategyArg::Rows => Some(Strategy::Rows),
        StrategyArg::Cols => Some(Strategy::Cols),
    };
    let result = solve_tiles_with(&file.matrix, file.tile.side(), forced)?;
    let body = match args.format {
        OutputFormat::Json => to_json(&result.report())?,
        OutputFormat::Text => {
            let mut s = tiles_text(&result);
            s.push('\n');
            s.push_str(&render_ascii(
                &file.matrix,
                file.tile,
                Some(Overlay::Tiles(&result.placements)),
            ));
            s
        }
    };
    emit(args.output.as_deref(), &body)?;
    Ok(Outcome::Success)
}

fn tiles_text(r: &TileRepairResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "strategy:   {}", r.strategy);
    let _ = writeln!(s, "Q_r:        {} ({:.4})", r.q_r, to_f64(&r.q_r));
    let _ = writeln!(s, "Q_c:        {} ({:.4})", r.q_c, to_f64(&r.q_c));
    let _ = writeln!(
        s,
        "spares:     {} ({} with {})",
        r.spares_used,
        r.spares_other_strategy,
        r.strategy.other()
    );
    let _ = writeln!(s, "faults:     {}", r.fault_total);
    match &r.quality {
        Some(q) => {
            let _ = writeln!(s, "quality:    {q} ({:.4})", to_f64(q));
        }
        None => {
            let _ = writeln!(s, "quality:    n/a (no faults)");
        }
    }
    let _ = writeln!(s, "placements:");
    for t in &r.placements {
        let axis = match t.axis {
            BandAxis::RowBands => "row band",
            BandAxis::ColBands => "column band",
        };
        let _ = writeln!(s, "  {axis} {} at {}", t.band, t.start);
    }
    s
}

pub fn experiment(args: &ExperimentArgs) -> Result<Outcome> {
    let cfg = ExperimentConfig {
        trials: args.trials,
        p_range: args.p.clone(),
        q_range: args.q.clone(),
        n_range: args.n.clone(),
        k_min: args.k_min,
        master_seed: args.seed,
    };
    let (summary, records) = run_batch(&cfg)?;
    if let Some(prefix) = &args.out {
        let (csv, json) = export_report(&records, &summary, prefix)?;
        eprintln!("wrote {} and {}", csv.display(), json.display());
    }
    emit(None, &to_json(&summary)?)?;
    Ok(Outcome::Success)
}

pub fn render(args: &RenderArgs) -> Result<Outcome> {
    let file = prepared(load(&args.input)?, args.pad);
    let m = &file.matrix;
    let body = match args.overlay {
        OverlayArg::None => render_ascii(m, file.tile, None),
        OverlayArg::Lines => {
            let budget = SpareBudget::new(
                args.spare_cols.unwrap_or(m.cols()),
                args.spare_rows.unwrap_or(m.rows()),
            );
            let plan = select_repair_plan(
                &fault_coords(m),
                m.rows(),
                m.cols(),
                &budget,
                DEFAULT_FAULT_CAP,
            )?;
            let lines = plan.chosen_lines();
            let text = render_ascii(m, file.tile, Some(Overlay::Lines(&lines)));
            if !plan.feasible {
                emit(args.output.as_deref(), &text)?;
                return Ok(Outcome::Infeasible);
            }
            text
        }
        OverlayArg::Tiles => {
            let r = solve_tiles_with(m, file.tile.side(), None)?;
            render_ascii(m, file.tile, Some(Overlay::Tiles(&r.placements)))
        }
    };
    emit(args.output.as_deref(), &body)?;
    Ok(Outcome::Success)
}
