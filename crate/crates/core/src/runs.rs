//! Run counting, run-length encoding and the run-minimizing input order.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::fixed::Fixed;
use crate::intervals::{interesting_intervals, IntervalReport};
use crate::perm::Perm;
use crate::symbol::Symbol;
use crate::transform::{colex_bwt, mdol_bwt, Transform, Variant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub r: usize,
    pub n: usize,
    pub rle: Vec<(Symbol, usize)>,
}

impl RunStats {
    /// `n / r` with three decimals.
    pub fn mean_run_length(&self) -> Fixed {
        Fixed::new(Ratio::new(self.n as u64, self.r as u64), 3)
    }

    /// One `symbol<TAB>count` line per run.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, n) in &self.rle {
            let _ = writeln!(out, "{s}\t{n}");
        }
        out
    }
}

/// Number of maximal blocks of equal symbols. Separators form one class.
pub fn runs_of(symbols: &[Symbol]) -> usize {
    if symbols.is_empty() {
        return 0;
    }
    1 + symbols.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn count_runs(t: &Transform) -> Result<RunStats> {
    rle_encode(t)
}

pub fn rle_encode(t: &Transform) -> Result<RunStats> {
    if t.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rle: Vec<(Symbol, usize)> = Vec::new();
    for &s in &t.symbols {
        match rle.last_mut() {
            Some((last, n)) if *last == s => *n += 1,
            _ => rle.push((s, 1)),
        }
    }
    Ok(RunStats { r: rle.len(), n: t.len(), rle })
}

/// Expands runs into a transform of variant `v`.
pub fn rle_decode(v: Variant, rle: &[(Symbol, usize)]) -> Result<Transform> {
    let mut symbols = Vec::new();
    for (i, &(s, n)) in rle.iter().enumerate() {
        if n == 0 {
            return Err(Error::InvalidRle(format!("run {} has length 0", i + 1)));
        }
        if i > 0 && rle[i - 1].0 == s {
            return Err(Error::InvalidRle(format!("runs {} and {} repeat symbol {s}", i, i + 1)));
        }
        symbols.extend(std::iter::repeat_n(s, n));
    }
    if symbols.is_empty() {
        return Err(Error::InvalidRle("no runs".into()));
    }
    let text: Vec<u8> = symbols.iter().map(|s| s.glyph()).collect();
    Ok(Transform::from_text(v, &text))
}

/// Parses the `symbol<TAB>count` format.
pub fn parse_rle(text: &str) -> Result<Vec<(Symbol, usize)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(no, line)| {
            let bad = || Error::InvalidRle(format!("line {}: {line:?}", no + 1));
            let (sym, count) = line.split_once('\t').ok_or_else(bad)?;
            let sym = match sym.as_bytes() {
                [b] => Symbol::from_glyph(*b),
                _ => return Err(bad()),
            };
            Ok((sym, count.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

/// Chosen order of the preceding symbols inside one interesting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalArrangement {
    pub b: usize,
    pub e: usize,
    /// One entry per distinct symbol, each a single run.
    pub groups: Vec<(Symbol, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalOrderResult {
    /// Position `p` of the reordered collection holds input `permutation(p)`.
    pub permutation: Perm,
    pub r_opt: usize,
    pub arrangements: Vec<IntervalArrangement>,
}

/// For each possible last symbol of an interval: the cheapest cost through
/// that interval, its first symbol and the previous interval's last symbol.
type Choices = BTreeMap<Symbol, (usize, Symbol, Option<Symbol>)>;

/// Picks the first and last group of every interval by dynamic programming
/// over the intervals in row order. The state is the last symbol of the
/// previous interval, which matters only when the two intervals abut.
fn choose_boundaries(fixed: &[Symbol], report: &IntervalReport) -> Vec<(Symbol, Symbol)> {
    let ivs = &report.intervals;
    let n = fixed.len();
    let mut best: Vec<Choices> = Vec::with_capacity(ivs.len());
    for (t, iv) in ivs.iter().enumerate() {
        let symbols: Vec<Symbol> = iv.parikh.keys().copied().collect();
        let abuts_prev = t > 0 && ivs[t - 1].e + 1 == iv.b;
        let abuts_next = ivs.get(t + 1).is_some_and(|nx| iv.e + 1 == nx.b);
        let right = (!abuts_next && iv.e < n).then(|| fixed[iv.e]);
        let left_options: Vec<(Option<Symbol>, usize, Option<Symbol>)> = if abuts_prev {
            best[t - 1].iter().map(|(&l, &(cost, _, _))| (Some(l), cost, Some(l))).collect()
        } else {
            let base = best.last().map_or(0, |m| m.values().map(|v| v.0).min().unwrap());
            let left = (iv.b > 1).then(|| fixed[iv.b - 2]);
            vec![(left, base, None)]
        };
        let mut here = Choices::new();
        for &(left, base, prev) in &left_options {
            for &f in &symbols {
                for &l in &symbols {
                    if f == l && symbols.len() > 1 {
                        continue;
                    }
                    let cost = base
                        + (symbols.len() - 1)
                        + usize::from(left.is_some_and(|x| x != f))
                        + usize::from(right.is_some_and(|x| x != l));
                    let slot = here.entry(l).or_insert((usize::MAX, f, prev));
                    if cost < slot.0 {
                        *slot = (cost, f, prev);
                    }
                }
            }
        }
        best.push(here);
    }
    let mut chosen = vec![(Symbol::Sep, Symbol::Sep); ivs.len()];
    let mut want: Option<Symbol> = None;
    for t in (0..ivs.len()).rev() {
        let l = match want {
            Some(l) => l,
            None => *best[t].iter().min_by_key(|(_, v)| v.0).unwrap().0,
        };
        let (_, f, prev) = best[t][&l];
        chosen[t] = (f, l);
        want = prev;
    }
    chosen
}

fn arrange(parikh: &BTreeMap<Symbol, usize>, first: Symbol, last: Symbol) -> Vec<(Symbol, usize)> {
    let mut groups = vec![(first, parikh[&first])];
    groups.extend(parikh.iter().filter(|(s, _)| **s != first && **s != last).map(|(s, n)| (*s, *n)));
    if last != first {
        groups.push((last, parikh[&last]));
    }
    groups
}

fn common_suffix_len(a: &[u8], b: &[u8]) -> usize {
    a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count()
}

fn label_before(s: &[u8], suffix_len: usize) -> Symbol {
    if suffix_len == s.len() {
        Symbol::Sep
    } else {
        Symbol::Char(s[s.len() - suffix_len - 1])
    }
}

/// An input order minimizing the runs of the multidollar transform.
///
/// Inside an interesting interval every group of equal preceding symbols can
/// be made one run, and the group order of each interval can be chosen
/// independently of the others: the strings below a shared suffix `U` split
/// into groups by the symbol before `U`, and each group is ordered by the
/// longer suffixes only. The first and last groups are chosen to merge with
/// the neighbouring rows.
pub fn optimal_order(c: &Collection) -> Result<OptimalOrderResult> {
    let report = interesting_intervals(c);
    let fixed = mdol_bwt(c)?.symbols;
    let boundaries = choose_boundaries(&fixed, &report);
    let mut arrangements = Vec::with_capacity(report.intervals.len());
    let mut rank: HashMap<&[u8], HashMap<Symbol, usize>> = HashMap::new();
    for (iv, &(f, l)) in report.intervals.iter().zip(&boundaries) {
        let groups = arrange(&iv.parikh, f, l);
        rank.insert(&iv.shared_suffix, groups.iter().enumerate().map(|(r, (s, _))| (*s, r)).collect());
        arrangements.push(IntervalArrangement { b: iv.b, e: iv.e, groups });
    }
    let mut order: Vec<usize> = (1..=c.k()).collect();
    order.sort_by(|&a, &b| {
        let (sa, sb) = (c.seq(a - 1), c.seq(b - 1));
        let m = common_suffix_len(sa, sb);
        let (la, lb) = (label_before(sa, m), label_before(sb, m));
        if la == lb {
            return a.cmp(&b);
        }
        let ranks = &rank[&sa[sa.len() - m..]];
        ranks[&la].cmp(&ranks[&lb])
    });
    let permutation = Perm::new(order)?;
    let r_opt = runs_of(&mdol_bwt(&c.permuted(&permutation)?)?.symbols);
    Ok(OptimalOrderResult { permutation, r_opt, arrangements })
}

/// The colex order against the optimum: `runs(colex) <= r_opt + 2 c_M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColexGap {
    pub runs_colex: usize,
    pub r_opt: usize,
    pub c_m: usize,
    pub bound_holds: bool,
}

pub fn colex_gap(c: &Collection) -> Result<ColexGap> {
    let runs_colex = runs_of(&colex_bwt(c)?.symbols);
    let r_opt = optimal_order(c)?.r_opt;
    let c_m = interesting_intervals(c).count_intervals;
    Ok(ColexGap { runs_colex, r_opt, c_m, bound_holds: runs_colex <= r_opt + 2 * c_m })
}
