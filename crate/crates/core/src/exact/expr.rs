use std::cmp::Ordering;
use std::fmt;

use super::{CoverageTable, LineAxis, LineId};
use crate::error::{RepairError, Result};

/// Widest line ordering a [`Term`] can index.
pub const MAX_LINES: usize = 128;

/// `(column ∨ row)`: the two ways to repair one fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Clause {
    pub column: LineId,
    pub row: LineId,
    column_slot: usize,
    row_slot: usize,
}

impl Clause {
    /// Bit mask of both literals over the table's line ordering.
    pub fn mask(&self) -> u128 {
        (1u128 << self.column_slot) | (1u128 << self.row_slot)
    }

    pub fn is_satisfied_by(&self, term: &Term) -> bool {
        term.bits & self.mask() != 0
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ∨ {})", self.column, self.row)
    }
}

/// A product of clauses over a fixed line ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub lines: Vec<LineId>,
    pub clauses: Vec<Clause>,
}

impl Cnf {
    pub fn is_satisfied_by(&self, term: &Term) -> bool {
        self.clauses.iter().all(|c| c.is_satisfied_by(term))
    }
}

/// One clause per fault, in fault order.
pub fn synthesize_cnf(table: &CoverageTable) -> Cnf {
    let clauses = table
        .faults()
        .iter()
        .map(|f| {
            let column = LineId::column(f.col);
            let row = LineId::row(f.row);
            Clause {
                column,
                row,
                column_slot: table.slot_of(column),
                row_slot: table.slot_of(row),
            }
        })
        .collect();
    Cnf {
        lines: table.lines().to_vec(),
        clauses,
    }
}

/// A set of lines, stored as a bit vector over the coverage table ordering.
///
/// Terms order canonically: by size, then by the sorted index lists
/// compared lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Term {
    bits: u128,
}

impl Term {
    pub const EMPTY: Term = Term { bits: 0 };

    pub fn from_slots<I: IntoIterator<Item = usize>>(slots: I) -> Self {
        Term {
            bits: slots.into_iter().fold(0, |acc, s| acc | (1u128 << s)),
        }
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, slot: usize) -> bool {
        self.bits >> slot & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Term) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn with(self, slot: usize) -> Term {
        Term {
            bits: self.bits | 1u128 << slot,
        }
    }

    pub fn without(self, slot: usize) -> Term {
        Term {
            bits: self.bits & !(1u128 << slot),
        }
    }

    /// Ascending slot indices.
    pub fn slots(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(s)
        })
    }

    pub fn lines(&self, ordering: &[LineId]) -> Vec<LineId> {
        self.slots().map(|s| ordering[s]).collect()
    }

    pub fn count_axis(&self, ordering: &[LineId], axis: LineAxis) -> usize {
        self.slots().filter(|&s| ordering[s].axis == axis).count()
    }

    pub fn display<'a>(&'a self, ordering: &'a [LineId]) -> impl fmt::Display + 'a {
        TermDisplay {
            term: self,
            ordering,
        }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits >> diff.trailing_zeros() & 1 == 1 {
                // Equal sizes: whoever owns the first differing index is smaller.
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct TermDisplay<'a> {
    term: &'a Term,
    ordering: &'a [LineId],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.term.is_empty() {
            return f.write_str("1");
        }
        for s in self.term.slots() {
            write!(f, "{}", self.ordering[s])?;
        }
        Ok(())
    }
}

/// Sum-of-products form: every irredundant cover of a [`Cnf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dnf {
    pub lines: Vec<LineId>,
    pub terms: Vec<Term>,
}

/// Multiplies out `cnf` clause by clause, absorbing after each product.
///
/// The result is absorption-closed and duplicate-free, so it is exactly the
/// set of minimal covers, sorted canonically.
pub fn expand_to_dnf(cnf: &Cnf, fault_cap: usize) -> Result<Dnf> {
    if cnf.clauses.len() > fault_cap {
        return Err(RepairError::Capacity {
            what: "fault count",
            actual: cnf.clauses.len(),
            limit: fault_cap,
            hint: Some("use the tile-cover heuristic for large fault sets"),
        });
    }
    if cnf.lines.len() > MAX_LINES {
        return Err(RepairError::Capacity {
            what: "line count",
            actual: cnf.lines.len(),
            limit: MAX_LINES,
            hint: None,
        });
    }

    let mut terms = vec![Term::EMPTY];
    for clause in &cnf.clauses {
        let (a, b) = (clause.column_slot, clause.row_slot);
        let mut kept = Vec::with_capacity(terms.len());
        let mut lacking = Vec::new();
        for t in terms {
            if t.contains(a) || t.contains(b) {
                kept.push(t);
            } else {
                lacking.push(t);
            }
        }
        // Old terms form an antichain. A term already satisfying the clause
        // can't be absorbed, and `t ∪ {a}` can only be absorbed by a kept term
        // `s ∋ a` with `s \ {a} ⊆ t`.
        let residue = |slot: usize| -> Vec<Term> {
            kept.iter()
                .filter(|s| s.contains(slot))
                .map(|s| s.without(slot))
                .collect()
        };
        let (res_a, res_b) = (residue(a), residue(b));
        let mut next = kept.clone();
        for t in lacking {
            if !res_a.iter().any(|r| r.is_subset_of(&t)) {
                next.push(t.with(a));
            }
            if !res_b.iter().any(|r| r.is_subset_of(&t)) {
                next.push(t.with(b));
            }
        }
        terms = next;
    }
    terms.sort_unstable();
    terms.dedup();
    Ok(Dnf {
        lines: cnf.lines.clone(),
        terms,
    })
}

/// Every term of least cardinality, in canonical order.
pub fn minimal_covers(terms: &[Term]) -> Result<Vec<Term>> {
    let min = terms
        .iter()
        .map(Term::len)
        .min()
        .ok_or_else(|| RepairError::invalid("minimal_covers needs a non-empty DNF"))?;
    let mut out: Vec<Term> = terms.iter().copied().filter(|t| t.len() == min).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
