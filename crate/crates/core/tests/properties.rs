mod common;

use std::collections::BTreeSet;

use fpga_repair::exact::{
    brute_force_min_cover, build_coverage_table, expand_to_dnf, minimal_covers, select_repair_plan,
    synthesize_cnf, LineAxis, Term, DEFAULT_FAULT_CAP,
};
use fpga_repair::experiment::run_trial;
use fpga_repair::tiles::{
    brute_force_band_cover, choose_strategy, compress, greedy_band, solve_tiles, structurization,
    BandAxis, BandStats,
};
use fpga_repair::{fault_coords, FaultCoord, FaultMatrix, SpareBudget};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Distinct faults on a grid of at most 8 × 8, at most `max` of them.
fn fault_set(max: usize) -> impl Strategy<Value = (usize, usize, Vec<FaultCoord>)> {
    (1usize..=8, 1usize..=8).prop_flat_map(move |(r, c)| {
        proptest::collection::btree_set((1..=r, 1..=c), 1..=max.min(r * c)).prop_map(move |set| {
            let faults = set
                .into_iter()
                .map(|(i, j)| FaultCoord::new(i, j))
                .collect();
            (r, c, faults)
        })
    })
}

fn block_matrix() -> impl Strategy<Value = (usize, FaultMatrix)> {
    (1usize..=4, 1usize..=5, 1usize..=5).prop_flat_map(|(n, p, q)| {
        proptest::collection::vec(prop::bool::weighted(0.2), n * p * n * q).prop_map(move |cells| {
            let rows: Vec<Vec<bool>> = cells.chunks(n * q).map(<[bool]>::to_vec).collect();
            (n, FaultMatrix::from_rows(&rows).unwrap())
        })
    })
}

/// All minimal covers by enumerating every subset of the table's lines.
fn all_minimal_covers(width: usize, masks: &[u128]) -> BTreeSet<u128> {
    let covers: Vec<u128> = (0u128..1 << width)
        .filter(|s| masks.iter().all(|m| m & s != 0))
        .collect();
    covers
        .iter()
        .copied()
        .filter(|&s| !covers.iter().any(|&o| o != s && o & !s == 0))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn clauses_have_one_literal_per_axis((_, _, faults) in fault_set(10)) {
        let cnf = synthesize_cnf(&build_coverage_table(&faults).unwrap());
        prop_assert_eq!(cnf.clauses.len(), faults.len());
        for (c, f) in cnf.clauses.iter().zip(&faults) {
            prop_assert_eq!(c.column.axis, LineAxis::Column);
            prop_assert_eq!(c.row.axis, LineAxis::Row);
            prop_assert_eq!((c.row.index, c.column.index), (f.row, f.col));
        }
    }

    #[test]
    fn dnf_is_sound_closed_and_ordered((_, _, faults) in fault_set(10)) {
        let cnf = synthesize_cnf(&build_coverage_table(&faults).unwrap());
        let dnf = expand_to_dnf(&cnf, DEFAULT_FAULT_CAP).unwrap();
        for t in &dnf.terms {
            prop_assert!(cnf.is_satisfied_by(t));
        }
        for (i, a) in dnf.terms.iter().enumerate() {
            for b in &dnf.terms[i + 1..] {
                prop_assert!(a < b, "not strictly ordered");
                prop_assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
            }
        }
    }

    #[test]
    fn dnf_is_exactly_the_minimal_covers((_, _, faults) in fault_set(7)) {
        let cnf = synthesize_cnf(&build_coverage_table(&faults).unwrap());
        let dnf = expand_to_dnf(&cnf, DEFAULT_FAULT_CAP).unwrap();
        let masks: Vec<u128> = cnf.clauses.iter().map(|c| c.mask()).collect();
        let expected = all_minimal_covers(cnf.lines.len(), &masks);
        let got: BTreeSet<u128> = dnf.terms.iter().map(Term::bits).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn minimum_covers_are_irredundant((_, _, faults) in fault_set(10)) {
        let cnf = synthesize_cnf(&build_coverage_table(&faults).unwrap());
        let dnf = expand_to_dnf(&cnf, DEFAULT_FAULT_CAP).unwrap();
        for t in minimal_covers(&dnf.terms).unwrap() {
            for s in t.slots() {
                prop_assert!(!cnf.is_satisfied_by(&t.without(s)));
            }
        }
    }

    #[test]
    fn exact_matches_oracles((_, _, faults) in fault_set(10)) {
        let cnf = synthesize_cnf(&build_coverage_table(&faults).unwrap());
        let dnf = expand_to_dnf(&cnf, DEFAULT_FAULT_CAP).unwrap();
        let min = minimal_covers(&dnf.terms).unwrap()[0].len();
        let oracle = brute_force_min_cover(&faults).unwrap();
        prop_assert_eq!(min, oracle.size());
        prop_assert_eq!(min, oracle.matching_size);
    }

    #[test]
    fn plans_cover_and_respect_budget(
        (rows, cols, faults) in fault_set(10),
        sc in 0usize..6,
        sr in 0usize..6,
    ) {
        let plan = select_repair_plan(&faults, rows, cols, &SpareBudget::new(sc, sr), DEFAULT_FAULT_CAP).unwrap();
        prop_assert!(plan.covers(&faults));
        if plan.feasible {
            prop_assert!(plan.chosen.count_axis(&plan.lines, LineAxis::Column) <= sc);
            prop_assert!(plan.chosen.count_axis(&plan.lines, LineAxis::Row) <= sr);
            let froms: BTreeSet<_> = plan.readdress.iter().map(|r| (r.axis, r.from)).collect();
            let tos: BTreeSet<_> = plan.readdress.iter().map(|r| (r.axis, r.to)).collect();
            prop_assert_eq!(froms.len(), plan.readdress.len());
            prop_assert_eq!(tos.len(), plan.readdress.len());
            prop_assert_eq!(plan.readdress.len(), plan.chosen.len());
        }
        let again = select_repair_plan(&faults, rows, cols, &SpareBudget::new(sc, sr), DEFAULT_FAULT_CAP).unwrap();
        prop_assert_eq!(plan, again);
    }

    #[test]
    fn larger_budget_never_breaks_feasibility(
        (rows, cols, faults) in fault_set(10),
        sc in 0usize..5,
        sr in 0usize..5,
        dc in 0usize..3,
        dr in 0usize..3,
    ) {
        let small = select_repair_plan(&faults, rows, cols, &SpareBudget::new(sc, sr), DEFAULT_FAULT_CAP).unwrap();
        let big = select_repair_plan(&faults, rows, cols, &SpareBudget::new(sc + dc, sr + dr), DEFAULT_FAULT_CAP).unwrap();
        if small.feasible {
            prop_assert!(big.feasible);
            prop_assert!(big.chosen.len() <= small.chosen.len());
        }
    }

    #[test]
    fn compression_is_or_folding((n, m) in block_matrix()) {
        for axis in [BandAxis::RowBands, BandAxis::ColBands] {
            let c = compress(&m, n, axis).unwrap();
            for b in 0..c.bands() {
                for s in 0..c.span() {
                    let or = (b * n..(b + 1) * n).any(|x| match axis {
                        BandAxis::RowBands => m.is_faulty(x, s),
                        BandAxis::ColBands => m.is_faulty(s, x),
                    });
                    prop_assert_eq!(c.band(b)[s], or);
                }
            }
        }
    }

    #[test]
    fn greedy_band_is_optimal(band in proptest::collection::vec(any::<bool>(), 0..=24), n in 1usize..=6) {
        prop_assert_eq!(greedy_band(&band, n).len(), brute_force_band_cover(&band, n).unwrap());
    }

    #[test]
    fn tiles_cover_every_fault((n, m) in block_matrix()) {
        let r = solve_tiles(&m, n).unwrap();
        prop_assert_eq!(r.strategy, choose_strategy(&r.q_r, &r.q_c));
        prop_assert_eq!(r.spares_used, r.placements.len());
        for f in fault_coords(&m) {
            let (i, j) = (f.row - 1, f.col - 1);
            let hit = r.placements.iter().any(|t| {
                let (band, along) = match t.axis {
                    BandAxis::RowBands => (i / n, j),
                    BandAxis::ColBands => (j / n, i),
                };
                band + 1 == t.band && (t.start - 1..t.start - 1 + n).contains(&along)
            });
            prop_assert!(hit, "fault {} uncovered", f);
        }
        if let Some(q) = &r.quality {
            let spares = Ratio::from_integer(BigInt::from(r.spares_used));
            prop_assert_eq!(q * spares, Ratio::from_integer(BigInt::from(r.fault_total)));
        }
        prop_assert_eq!(&r, &solve_tiles(&m, n).unwrap());
    }

    #[test]
    fn band_contribution_bounds(band in proptest::collection::vec(any::<bool>(), 1..=30)) {
        let s = BandStats::of(&band);
        if s.ones == 0 {
            prop_assert!(s.contribution.is_zero());
        } else {
            prop_assert!(s.low <= s.high);
            prop_assert!(s.contribution > BigRational::zero());
            prop_assert!(s.contribution <= BigRational::one());
            let contiguous = band[s.low - 1..s.high].iter().all(|&b| b);
            prop_assert_eq!(s.contribution.is_one(), contiguous);
        }
    }

    #[test]
    fn criterion_is_sum_of_bands((n, m) in block_matrix()) {
        let c = compress(&m, n, BandAxis::RowBands).unwrap();
        let crit = structurization(&c);
        let sum = crit.bands.iter().fold(BigRational::zero(), |a, b| a + &b.contribution);
        prop_assert_eq!(crit.value, sum);
    }

    #[test]
    fn trial_records_are_consistent(
        p in 1usize..=5, q in 1usize..=5, n in 1usize..=4, frac in 0.0f64..=1.0, seed: u64,
    ) {
        let k = ((n * p * q) as f64 * frac) as usize;
        let r = run_trial(p, q, n, k, seed).unwrap();
        prop_assert_eq!(r.chosen, choose_strategy(&r.q_r, &r.q_c));
        prop_assert_eq!(r.positive, r.spares(r.chosen) <= r.spares(r.chosen.other()));
        let floor = k.div_ceil(n * n);
        prop_assert!(r.n_rows >= floor && r.n_cols >= floor);
        prop_assert_eq!(r, run_trial(p, q, n, k, seed).unwrap());
    }
}
