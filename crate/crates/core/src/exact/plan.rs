use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    build_coverage_table, estimate_complexity, expand_to_dnf, minimal_covers, synthesize_cnf, Cnf,
    LineAxis, LineId, Term,
};
use crate::error::{RepairError, Result};
use crate::model::{FaultCoord, SpareBudget};

/// Move one faulty line's address onto a spare line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Readdress {
    pub axis: LineAxis,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairPlan {
    /// Variable ordering shared by every term in the plan.
    pub lines: Vec<LineId>,
    pub cnf: Cnf,
    /// Every irredundant cover.
    pub dnf: Vec<Term>,
    /// When infeasible, the best global minimum cover (as a diagnostic).
    pub chosen: Term,
    /// Feasible covers of the chosen size, or the global minima when infeasible.
    pub all_minimum: Vec<Term>,
    pub readdress: Vec<Readdress>,
    /// Cost model value `2^m + |lines|·2^m`; `None` if it overflows 64 bits.
    pub cost_estimate: Option<u64>,
    pub feasible: bool,
}

impl RepairPlan {
    pub fn chosen_lines(&self) -> Vec<LineId> {
        self.chosen.lines(&self.lines)
    }

    pub fn covers(&self, faults: &[FaultCoord]) -> bool {
        let chosen: BTreeSet<LineId> = self.chosen_lines().into_iter().collect();
        faults.iter().all(|f| {
            chosen.contains(&LineId::column(f.col)) || chosen.contains(&LineId::row(f.row))
        })
    }
}

/// Serializable plan report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanReport {
    pub faults: Vec<[usize; 2]>,
    pub lines: Vec<LineId>,
    pub cnf: Vec<[LineId; 2]>,
    pub minimum_covers: Vec<Vec<LineId>>,
    pub chosen: Vec<LineId>,
    pub readdress: Vec<Readdress>,
    pub feasible: bool,
    pub cost_estimate: Option<u64>,
    /// Every irredundant cover, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_covers: Option<Vec<Vec<LineId>>>,
}

impl RepairPlan {
    pub fn report(&self, faults: &[FaultCoord], all_solutions: bool) -> PlanReport {
        let expand = |terms: &[Term]| terms.iter().map(|t| t.lines(&self.lines)).collect();
        PlanReport {
            faults: faults.iter().map(|f| [f.row, f.col]).collect(),
            lines: self.lines.clone(),
            cnf: self.cnf.clauses.iter().map(|c| [c.column, c.row]).collect(),
            minimum_covers: expand(&self.all_minimum),
            chosen: self.chosen_lines(),
            readdress: self.readdress.clone(),
            feasible: self.feasible,
            cost_estimate: self.cost_estimate,
            all_covers: all_solutions.then(|| expand(&self.dnf)),
        }
    }
}

fn fits(term: &Term, lines: &[LineId], budget: &SpareBudget) -> bool {
    term.count_axis(lines, LineAxis::Column) <= budget.spare_cols
        && term.count_axis(lines, LineAxis::Row) <= budget.spare_rows
}

/// Fewest lines, then fewest rows, then canonical order.
fn preference(term: &Term, lines: &[LineId]) -> (usize, usize, Term) {
    (term.len(), term.count_axis(lines, LineAxis::Row), *term)
}

/// Computes a minimum spare-line repair for `faults` on a `rows × cols` grid.
///
/// Without explicit spare ids, spares are numbered just past the grid
/// (`cols+1, …` and `rows+1, …`).
pub fn select_repair_plan(
    faults: &[FaultCoord],
    rows: usize,
    cols: usize,
    budget: &SpareBudget,
    fault_cap: usize,
) -> Result<RepairPlan> {
    budget.validate(rows, cols)?;
    if let Some(f) = faults
        .iter()
        .find(|f| !(1..=rows).contains(&f.row) || !(1..=cols).contains(&f.col))
    {
        return Err(RepairError::invalid(format!(
            "fault {f} outside {rows}x{cols} matrix"
        )));
    }
    if faults.is_empty() {
        return Ok(RepairPlan {
            lines: Vec::new(),
            cnf: Cnf {
                lines: Vec::new(),
                clauses: Vec::new(),
            },
            dnf: vec![Term::EMPTY],
            chosen: Term::EMPTY,
            all_minimum: vec![Term::EMPTY],
            readdress: Vec::new(),
            cost_estimate: estimate_complexity(0, 0),
            feasible: true,
        });
    }

    let table = build_coverage_table(faults)?;
    let cnf = synthesize_cnf(&table);
    let dnf = expand_to_dnf(&cnf, fault_cap)?;
    let lines = dnf.lines;
    let cost_estimate = estimate_complexity(faults.len(), lines.len());

    let feasible_terms: Vec<Term> = dnf
        .terms
        .iter()
        .copied()
        .filter(|t| fits(t, &lines, budget))
        .collect();

    let (chosen, all_minimum, feasible) = match feasible_terms.iter().map(Term::len).min() {
        Some(size) => {
            let all: Vec<Term> = feasible_terms
                .into_iter()
                .filter(|t| t.len() == size)
                .collect();
            let chosen = *all
                .iter()
                .min_by_key(|t| preference(t, &lines))
                .expect("non-empty");
            (chosen, all, true)
        }
        None => {
            let all = minimal_covers(&dnf.terms)?;
            let chosen = *all
                .iter()
                .min_by_key(|t| preference(t, &lines))
                .expect("non-empty");
            (chosen, all, false)
        }
    };

    let readdress = if feasible {
        let mut out = Vec::new();
        for (axis, spares) in [
            (LineAxis::Column, budget.col_ids(cols)),
            (LineAxis::Row, budget.row_ids(rows)),
        ] {
            // Term slots follow the line ordering, which is ascending per axis.
            let faulty = chosen.lines(&lines).into_iter().filter(|l| l.axis == axis);
            out.extend(faulty.zip(spares).map(|(l, to)| Readdress {
                axis,
                from: l.index,
                to,
            }));
        }
        out
    } else {
        Vec::new()
    };

    Ok(RepairPlan {
        lines,
        cnf,
        dnf: dnf.terms,
        chosen,
        all_minimum,
        readdress,
        cost_estimate,
        feasible,
    })
}
