//! Exact minimum spare row/column cover.
//!
//! Each fault `F(i,j)` can be repaired by replacing either column `C_j` or
//! row `R_i`, so the set of valid repairs is the product of two-literal
//! clauses `(C_j ∨ R_i)`. Multiplying the clauses out (with absorption after
//! every step) yields every irredundant cover; the shortest ones are the
//! minimum repairs.

mod complexity;
mod expr;
mod oracle;
mod plan;
mod table;

use std::fmt;

use serde::{Serialize, Serializer};

pub use complexity::{estimate_complexity, worst_case_complexity};
pub use expr::{expand_to_dnf, minimal_covers, synthesize_cnf, Clause, Cnf, Dnf, Term, MAX_LINES};
pub use oracle::{brute_force_min_cover, max_bipartite_matching, OracleCover, ORACLE_LINE_CAP};
pub use plan::{select_repair_plan, PlanReport, Readdress, RepairPlan};
pub use table::{build_coverage_table, CoverageTable};

/// Default limit on the number of faults fed to the DNF expansion.
pub const DEFAULT_FAULT_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineAxis {
    Column,
    Row,
}

/// A physical column `C_index` or row `R_index` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineId {
    pub axis: LineAxis,
    pub index: usize,
}

impl LineId {
    pub const fn column(index: usize) -> Self {
        LineId {
            axis: LineAxis::Column,
            index,
        }
    }

    pub const fn row(index: usize) -> Self {
        LineId {
            axis: LineAxis::Row,
            index,
        }
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.axis {
            LineAxis::Column => 'C',
            LineAxis::Row => 'R',
        };
        write!(f, "{tag}{}", self.index)
    }
}

impl Serialize for LineId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
