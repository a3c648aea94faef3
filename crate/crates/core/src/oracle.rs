//! Brute-force references: explicit rotation matrices, exhaustive search for
//! the run-minimizing input order, and exhaustive arrangement of interval
//! contents. Slow on purpose; the fast paths are tested against these.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use itertools::Itertools;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::ordering::{colex_compare, omega_cmp, RotationRef};
use crate::perm::Perm;
use crate::symbol::{ExtSymbol, Symbol};
use crate::transform::{Transform, Variant};

/// Limits for the brute-force routines.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Largest `N + k` accepted by [`naive_rotation_sort`].
    pub max_symbols: usize,
    /// Largest `k` accepted by [`brute_force_optimal_runs`].
    pub max_k: usize,
    /// Largest total accepted by [`brute_force_interval_max_runs`].
    pub max_interval: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_symbols: 4096, max_k: 8, max_interval: 12 }
    }
}

/// How a matrix row is identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowLabel {
    /// Conjugate of one (possibly separator-terminated) string.
    Conjugate(RotationRef),
    /// 1-based start position in the concatenated text.
    TextPosition(usize),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Conjugate(r) => r.fmt(f),
            RowLabel::TextPosition(p) => p.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRow {
    pub label: RowLabel,
    pub rotation: Vec<ExtSymbol>,
    pub last: ExtSymbol,
}

/// How separators are shown in the last column of a rendered matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LastColumn {
    /// `$_i`.
    Indexed,
    /// `$`.
    Plain,
}

/// Sorted rotations of one variant, materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationMatrix {
    pub variant: Variant,
    pub rows: Vec<MatrixRow>,
}

impl RotationMatrix {
    pub fn last_column(&self) -> Vec<Symbol> {
        self.rows.iter().map(|r| r.last.display()).collect()
    }

    /// For a raw concatenated matrix: drops the terminator's row and shows
    /// the terminator in the last column as a separator.
    pub fn normalized(&self) -> RotationMatrix {
        if self.variant != Variant::Conc || self.rows.first().map(|r| r.rotation[0]) != Some(ExtSymbol::Term) {
            return self.clone();
        }
        let rows = self.rows[1..]
            .iter()
            .map(|r| MatrixRow {
                last: if r.last == ExtSymbol::Term { ExtSymbol::Sep(0) } else { r.last },
                ..r.clone()
            })
            .collect();
        RotationMatrix { variant: self.variant, rows }
    }

    /// `index | last | rotation` table. Separators in the last column carry
    /// their index for the multidollar variant only.
    pub fn render(&self) -> String {
        let style = if self.variant == Variant::Mdol { LastColumn::Indexed } else { LastColumn::Plain };
        self.render_as(style)
    }

    pub fn render_as(&self, style: LastColumn) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let rotation: String = r.rotation.iter().map(ExtSymbol::to_string).collect();
            let last = match style {
                LastColumn::Indexed => r.last.to_string(),
                LastColumn::Plain => r.last.display().to_string(),
            };
            let _ = writeln!(out, "{} | {} | {}", r.label, last, rotation);
        }
        out
    }
}

fn ext(seq: &[u8]) -> impl Iterator<Item = ExtSymbol> + '_ {
    seq.iter().map(|&b| ExtSymbol::Char(b))
}

fn rotate<T: Clone>(s: &[T], j: usize) -> Vec<T> {
    s[j..].iter().chain(&s[..j]).cloned().collect()
}

/// Conjugate rows of each string in `words`, sorted by `cmp` with ties on
/// `(string, offset)`.
fn conjugate_rows(
    words: &[Vec<ExtSymbol>],
    cmp: impl Fn(&[ExtSymbol], &[ExtSymbol]) -> std::cmp::Ordering,
) -> Vec<MatrixRow> {
    let mut rows: Vec<MatrixRow> = words
        .iter()
        .enumerate()
        .flat_map(|(i, w)| {
            (0..w.len()).map(move |j| MatrixRow {
                label: RowLabel::Conjugate(RotationRef { string_index: i + 1, offset: j + 1 }),
                rotation: rotate(w, j),
                last: w[(j + w.len() - 1) % w.len()],
            })
        })
        .collect();
    rows.sort_by(|a, b| cmp(&a.rotation, &b.rotation).then_with(|| label_key(a).cmp(&label_key(b))));
    rows
}

fn label_key(r: &MatrixRow) -> (usize, usize) {
    match r.label {
        RowLabel::Conjugate(c) => (c.string_index, c.offset),
        RowLabel::TextPosition(p) => (0, p),
    }
}

fn mdol_words(seqs: &[&[u8]]) -> Vec<Vec<ExtSymbol>> {
    seqs.iter().enumerate().map(|(i, s)| ext(s).chain([ExtSymbol::Sep(i + 1)]).collect()).collect()
}

/// Materializes and sorts every rotation of variant `v`, reading off the
/// last column. The concatenated variant is returned raw.
pub fn naive_rotation_sort(v: Variant, c: &Collection, limits: &OracleLimits) -> Result<(RotationMatrix, Transform)> {
    if let Some(e) = c.validate().into_iter().next() {
        return Err(e);
    }
    let size = c.total_length() + c.k() + 1;
    if size > limits.max_symbols {
        return Err(Error::SizeGuard { size, limit: limits.max_symbols });
    }
    let seqs: Vec<&[u8]> = c.seqs().collect();
    let rows = match v {
        Variant::Ebwt => {
            let words: Vec<Vec<ExtSymbol>> = seqs.iter().map(|s| ext(s).collect()).collect();
            conjugate_rows(&words, omega_cmp)
        }
        Variant::Single => {
            if c.k() != 1 {
                return Err(Error::KOutOfRange { k: c.k(), min: 1, max: 1 });
            }
            conjugate_rows(&[ext(seqs[0]).collect()], |a, b| a.cmp(b))
        }
        Variant::DolEbwt => {
            let words: Vec<Vec<ExtSymbol>> =
                seqs.iter().map(|s| ext(s).chain([ExtSymbol::Sep(0)]).collect()).collect();
            conjugate_rows(&words, omega_cmp)
        }
        Variant::Mdol => conjugate_rows(&mdol_words(&seqs), |a, b| a.cmp(b)),
        Variant::Colex => {
            let mut sorted = seqs.clone();
            sorted.sort_by(|a, b| colex_compare(a, b));
            conjugate_rows(&mdol_words(&sorted), |a, b| a.cmp(b))
        }
        Variant::Conc => {
            let text: Vec<ExtSymbol> = seqs
                .iter()
                .flat_map(|s| ext(s).chain([ExtSymbol::Sep(0)]))
                .chain([ExtSymbol::Term])
                .collect();
            let n = text.len();
            let mut rows: Vec<MatrixRow> = (0..n)
                .map(|p| MatrixRow {
                    label: RowLabel::TextPosition(p + 1),
                    rotation: rotate(&text, p),
                    last: text[(p + n - 1) % n],
                })
                .collect();
            rows.sort_by(|a, b| a.rotation.cmp(&b.rotation));
            rows
        }
    };
    let matrix = RotationMatrix { variant: v, rows };
    let t = Transform {
        variant: v,
        symbols: matrix.last_column(),
        source_k: c.k(),
        source_n: c.total_length(),
        normalized: false,
    };
    Ok((matrix, t))
}

fn count_runs(symbols: impl IntoIterator<Item = Symbol>) -> usize {
    symbols.into_iter().dedup().count()
}

/// Minimum number of runs of the multidollar transform over all `k!` input
/// orders, with the lexicographically least order attaining it.
///
/// The returned order lists input positions: position `p` holds input string
/// `order(p)`.
pub fn brute_force_optimal_runs(c: &Collection, limits: &OracleLimits) -> Result<(usize, Perm)> {
    let k = c.k();
    if k == 0 || k > limits.max_k {
        return Err(Error::KOutOfRange { k, min: 1, max: limits.max_k });
    }
    let seqs: Vec<&[u8]> = c.seqs().collect();
    // every suffix followed by its separator, as (string, start); the
    // separator index only matters between equal suffixes
    let mut suffixes: Vec<(usize, usize)> =
        seqs.iter().enumerate().flat_map(|(i, s)| (0..=s.len()).map(move |j| (i, j))).collect();
    suffixes.sort_by(|&(a, x), &(b, y)| seqs[a][x..].cmp(&seqs[b][y..]));
    let groups: Vec<Vec<(usize, usize)>> = suffixes
        .into_iter()
        .chunk_by(|&(i, j)| &seqs[i][j..])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let before = |(i, j): (usize, usize)| if j == 0 { Symbol::Sep } else { Symbol::Char(seqs[i][j - 1]) };

    let mut best: Option<(usize, Perm)> = None;
    let mut position = vec![0; k];
    let mut column = Vec::with_capacity(c.total_length() + k);
    for order in (1..=k).permutations(k) {
        for (p, &i) in order.iter().enumerate() {
            position[i - 1] = p;
        }
        column.clear();
        for g in &groups {
            if g.len() == 1 {
                column.push(before(g[0]));
            } else {
                let mut rows = g.clone();
                rows.sort_by_key(|&(i, _)| position[i]);
                column.extend(rows.into_iter().map(before));
            }
        }
        let runs = count_runs(column.iter().copied());
        if best.as_ref().is_none_or(|(r, _)| runs < *r) {
            best = Some((runs, Perm::new(order)?));
        }
    }
    Ok(best.expect("k >= 1"))
}

/// Maximum number of runs over all arrangements of a multiset, by
/// enumerating its distinct arrangements.
pub fn brute_force_interval_max_runs<K: Ord + Clone>(
    parikh: &BTreeMap<K, usize>,
    limits: &OracleLimits,
) -> Result<usize> {
    let total: usize = parikh.values().sum();
    if total == 0 {
        return Err(Error::EmptyInput);
    }
    if total > limits.max_interval {
        return Err(Error::SizeGuard { size: total, limit: limits.max_interval });
    }
    let mut counts: Vec<usize> = parikh.values().copied().collect();
    fn go(counts: &mut [usize], last: Option<usize>, left: usize, runs: usize) -> usize {
        if left == 0 {
            return runs;
        }
        let mut best = 0;
        for s in 0..counts.len() {
            if counts[s] == 0 {
                continue;
            }
            counts[s] -= 1;
            let r = runs + usize::from(last != Some(s));
            best = best.max(go(counts, Some(s), left - 1, r));
            counts[s] += 1;
        }
        best
    }
    Ok(go(&mut counts, None, total, 0))
}
