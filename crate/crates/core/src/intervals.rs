//! Interesting intervals: rank ranges where separator-based variants may
//! disagree, with their Parikh vectors, the max-runs bound and variability.
//!
//! A suffix `U` shared by at least two strings occupies the consecutive rows
//! starting with `U $` in every separator-based matrix. The range is
//! interesting when the symbols preceding `U` are not all equal. Strings equal
//! to `U` contribute a separator.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::symbol::Symbol;
use crate::transform::{mdol_rows, preceding};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterestingInterval {
    /// 1-based first row.
    pub b: usize,
    /// 1-based last row.
    pub e: usize,
    pub shared_suffix: Vec<u8>,
    pub parikh: BTreeMap<Symbol, usize>,
    /// 1-based input indices, ascending.
    pub members: Vec<usize>,
}

impl InterestingInterval {
    pub fn len(&self) -> usize {
        self.e - self.b + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct preceding symbols.
    pub fn distinct(&self) -> usize {
        self.parikh.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub intervals: Vec<InterestingInterval>,
    pub count_intervals: usize,
    pub total_interval_length: usize,
    /// `N + k`.
    pub positions: usize,
    pub fraction_positions: Ratio<u64>,
    /// Zero when there are no intervals.
    pub variability: Ratio<u64>,
}

impl IntervalReport {
    /// Whether 1-based row `i` lies in some interval.
    pub fn contains(&self, i: usize) -> bool {
        let at = self.intervals.partition_point(|iv| iv.e < i);
        self.intervals.get(at).is_some_and(|iv| iv.b <= i)
    }

    /// TSV dump: `b, e, length, suffix, parikh`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("b\te\tlength\tsuffix\tparikh\n");
        for iv in &self.intervals {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                iv.b,
                iv.e,
                iv.len(),
                iv.shared_suffix.escape_ascii(),
                format_parikh(&iv.parikh)
            );
        }
        out
    }
}

/// `sym:count,…` in symbol order.
pub fn format_parikh(parikh: &BTreeMap<Symbol, usize>) -> String {
    parikh.iter().map(|(s, n)| format!("{s}:{n}")).collect::<Vec<_>>().join(",")
}

/// Groups of equal-suffix rows as `(first row, rows)`, 0-based, in matrix order.
pub(crate) fn suffix_groups(c: &Collection) -> Vec<(usize, Vec<(usize, usize)>)> {
    let rows = mdol_rows(c);
    let mut groups: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (r, (i, o)) in rows.into_iter().enumerate() {
        let suffix = &c.seq(i)[o..];
        match groups.last_mut() {
            Some((_, g)) if &c.seq(g[0].0)[g[0].1..] == suffix => g.push((i, o)),
            _ => groups.push((r, vec![(i, o)])),
        }
    }
    groups
}

pub fn interesting_intervals(c: &Collection) -> IntervalReport {
    let mut intervals = Vec::new();
    for (start, rows) in suffix_groups(c) {
        if rows.len() < 2 {
            continue;
        }
        let mut parikh = BTreeMap::new();
        for &(i, o) in &rows {
            *parikh.entry(preceding(c.seq(i), o)).or_insert(0) += 1;
        }
        if parikh.len() < 2 {
            continue;
        }
        let (i0, o0) = rows[0];
        let mut members: Vec<usize> = rows.iter().map(|&(i, _)| i + 1).collect();
        members.sort_unstable();
        intervals.push(InterestingInterval {
            b: start + 1,
            e: start + rows.len(),
            shared_suffix: c.seq(i0)[o0..].to_vec(),
            parikh,
            members,
        });
    }
    let total: usize = intervals.iter().map(InterestingInterval::len).sum();
    let bound: usize = intervals.iter().map(|iv| max_runs_bound(&iv.parikh).expect("non-empty")).sum();
    let positions = c.total_length() + c.k();
    IntervalReport {
        count_intervals: intervals.len(),
        total_interval_length: total,
        positions,
        fraction_positions: Ratio::new(total as u64, positions.max(1) as u64),
        variability: if total == 0 { Ratio::from_integer(0) } else { Ratio::new(bound as u64, total as u64) },
        intervals,
    }
}

/// Maximum number of runs over arrangements of a multiset: the total if the
/// most frequent symbol can be separated, otherwise `2 N_a + 1`.
pub fn max_runs_bound<K>(parikh: &BTreeMap<K, usize>) -> Result<usize> {
    let total: usize = parikh.values().sum();
    let top = parikh.values().copied().max().filter(|_| total > 0).ok_or(Error::EmptyInput)?;
    let rest = total - top;
    Ok(if top - 1 <= rest { total } else { 2 * rest + 1 })
}

/// Sum of the per-interval bounds over the sum of the interval lengths.
pub fn variability(c: &Collection) -> Ratio<u64> {
    interesting_intervals(c).variability
}

/// Upper bound on the Hamming distance between any two separator-based
/// transforms.
pub fn hamming_upper_bound(c: &Collection) -> usize {
    interesting_intervals(c).total_interval_length
}
