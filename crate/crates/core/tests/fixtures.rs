mod common;

use fpga_repair::exact::{
    brute_force_min_cover, build_coverage_table, expand_to_dnf, select_repair_plan, synthesize_cnf,
    LineId, DEFAULT_FAULT_CAP,
};
use fpga_repair::experiment::{
    evaluate_matrix, export_report, run_batch, ExperimentConfig, TrialParams,
};
use fpga_repair::tiles::{compress, solve_tiles, BandAxis, Strategy};
use fpga_repair::{
    fault_coords, parse_fault_list, parse_fault_matrix, render_ascii, Overlay, SpareBudget,
};

use common::*;

#[test]
fn example_files_agree() {
    let grid = parse_fault_matrix(&read_data("ex22.grid")).unwrap();
    let list = parse_fault_list(&read_data("ex22.faults")).unwrap();
    assert_eq!(grid, list);
    assert_eq!(fault_coords(&grid.matrix), example_faults());
}

#[test]
fn worked_example_needs_three_lines_of_one_kind() {
    let plan = select_repair_plan(
        &example_faults(),
        10,
        10,
        &SpareBudget::new(1, 0),
        DEFAULT_FAULT_CAP,
    )
    .unwrap();
    assert!(!plan.feasible);
    assert_eq!(plan.chosen.len(), 5);

    let oracle = brute_force_min_cover(&example_faults()).unwrap();
    assert_eq!((oracle.size(), oracle.matching_size), (5, 5));
}

#[test]
fn worked_example_dnf_has_no_term_under_five() {
    let cnf = synthesize_cnf(&build_coverage_table(&example_faults()).unwrap());
    let dnf = expand_to_dnf(&cnf, DEFAULT_FAULT_CAP).unwrap();
    assert!(dnf.terms.iter().all(|t| t.len() >= 5));
    assert_eq!(dnf.terms.iter().filter(|t| t.len() == 5).count(), 3);
}

#[test]
fn reconstructed_fig2_layout() {
    let file = parse_fault_matrix(&read_data("fig2.grid")).unwrap();
    assert_eq!(
        (file.matrix.rows(), file.matrix.cols(), file.tile.side()),
        (15, 15, 3)
    );
    assert_eq!(file.matrix.fault_count(), 36);

    let rows = compress(&file.matrix, 3, BandAxis::RowBands).unwrap();
    let cols = compress(&file.matrix, 3, BandAxis::ColBands).unwrap();
    assert_eq!(rows.to_printed(), fig2_row_bands_printed());
    assert_eq!(cols.to_printed(), fig2_col_bands_printed());

    let r = solve_tiles(&file.matrix, 3).unwrap();
    assert_eq!(r.strategy, Strategy::Cols);
    assert_eq!((r.spares_used, r.spares_other_strategy), (20, 21));
    assert_eq!(r.fault_total, 36);
    assert_eq!(fpga_repair::tiles::to_f64(r.quality.as_ref().unwrap()), 1.8);

    let params = TrialParams {
        p: 5,
        q: 5,
        n: 3,
        k: 36,
        seed: 0,
    };
    let rec = evaluate_matrix(1, params, &file.matrix).unwrap();
    assert_eq!(
        (rec.chosen, rec.n_cols, rec.n_rows),
        (Strategy::Cols, 20, 21)
    );
    assert!(rec.positive);
}

#[test]
fn fig2_render_counts_faults() {
    let file = parse_fault_matrix(&read_data("fig2.grid")).unwrap();
    let text = render_ascii(&file.matrix, file.tile, None);
    assert_eq!(text.matches('X').count(), fault_coords(&file.matrix).len());
    assert_eq!(text.lines().count(), 15 + 4);
    assert!(text.lines().all(|l| l.chars().count() == 15 + 4));

    let r = solve_tiles(&file.matrix, 3).unwrap();
    let covered = render_ascii(&file.matrix, file.tile, Some(Overlay::Tiles(&r.placements)));
    assert_eq!(covered.matches('X').count(), 0);
    assert_eq!(covered.matches('x').count(), 36);
}

#[test]
fn lines_overlay_repairs_worked_example() {
    let file = parse_fault_matrix(&read_data("ex22.grid")).unwrap();
    let plan = select_repair_plan(
        &example_faults(),
        10,
        10,
        &SpareBudget::new(5, 2),
        DEFAULT_FAULT_CAP,
    )
    .unwrap();
    let lines: Vec<LineId> = plan.chosen_lines();
    let text = render_ascii(&file.matrix, file.tile, Some(Overlay::Lines(&lines)));
    assert_eq!(text.matches('X').count(), 0);
    assert_eq!(text.matches('x').count(), 10);
}

#[test]
fn fixed_dimension_study_runs() {
    let (summary, records) = run_batch(&ExperimentConfig::fixed_dimension(3)).unwrap();
    assert_eq!(records.len(), 10);
    assert!(records
        .iter()
        .all(|r| (r.params.p, r.params.q, r.params.n) == (5, 4, 3)));
    assert_eq!(summary.trials_run, 10);
}

#[test]
fn batch_export_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = ExperimentConfig {
        trials: 25,
        master_seed: 77,
        ..Default::default()
    };
    let mut outputs = Vec::new();
    for name in ["a", "b"] {
        let (summary, records) = run_batch(&cfg).unwrap();
        let (csv, json) = export_report(&records, &summary, &dir.path().join(name)).unwrap();
        outputs.push((std::fs::read(csv).unwrap(), std::fs::read(json).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs[0].0.clone()).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "trial,p,q,n,k,seed,q_r,q_c,n_rows,n_cols,chosen,positive"
    );
    assert_eq!(text.lines().count(), 26);
}
