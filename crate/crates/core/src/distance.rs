//! Hamming and edit distances between transforms.

use std::fmt::Write as _;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixed::Fixed;
use crate::symbol::Symbol;
use crate::transform::Transform;

/// Default cap on `|a| * |b|` for [`edit_distance`].
pub const EDIT_GUARD_CELLS: u128 = 100_000_000;

/// Number of mismatching positions. All separators are equal.
pub fn hamming(a: &Transform, b: &Transform) -> Result<usize> {
    hamming_symbols(&a.symbols, &b.symbols)
}

pub fn hamming_symbols(a: &[Symbol], b: &[Symbol]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// Unit-cost Levenshtein distance under the default guard.
pub fn edit_distance(a: &Transform, b: &Transform) -> Result<usize> {
    edit_distance_limited(&a.symbols, &b.symbols, EDIT_GUARD_CELLS)
}

pub fn edit_distance_limited(a: &[Symbol], b: &[Symbol], limit: u128) -> Result<usize> {
    let cells = a.len() as u128 * b.len() as u128;
    if cells > limit {
        return Err(Error::EditGuard { cells, limit });
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = (prev[j] + usize::from(x != y)).min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[b.len()])
}

/// `d / max(|a|, |b|)` with five decimals.
pub fn normalize(d: usize, a_len: usize, b_len: usize) -> Fixed {
    Fixed::new(Ratio::new(d as u64, a_len.max(b_len).max(1) as u64), 5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceKind {
    Hamming,
    Edit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    pub kind: DistanceKind,
    pub labels: Vec<String>,
    pub absolute: Vec<Vec<usize>>,
    pub normalized: Vec<Vec<Fixed>>,
}

impl DistanceMatrix {
    /// Normalized values below the diagonal, absolute values above.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\t{}", self.labels.join("\t"));
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(label);
            for j in 0..self.labels.len() {
                let cell = match i.cmp(&j) {
                    std::cmp::Ordering::Greater => self.normalized[i][j].to_string(),
                    std::cmp::Ordering::Less => self.absolute[i][j].to_string(),
                    std::cmp::Ordering::Equal => "-".to_string(),
                };
                out.push('\t');
                out.push_str(&cell);
            }
            out.push('\n');
        }
        out
    }
}

/// All pairwise distances, labelled by variant.
pub fn distance_matrix(ts: &[Transform], kind: DistanceKind) -> Result<DistanceMatrix> {
    distance_matrix_limited(ts, kind, EDIT_GUARD_CELLS)
}

pub fn distance_matrix_limited(ts: &[Transform], kind: DistanceKind, limit: u128) -> Result<DistanceMatrix> {
    let m = ts.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let values = pairs
        .par_iter()
        .map(|&(i, j)| match kind {
            DistanceKind::Hamming => hamming(&ts[i], &ts[j]),
            DistanceKind::Edit => edit_distance_limited(&ts[i].symbols, &ts[j].symbols, limit),
        })
        .collect::<Result<Vec<usize>>>()?;
    let mut absolute = vec![vec![0; m]; m];
    let mut normalized = vec![vec![Fixed::new(Ratio::from_integer(0), 5); m]; m];
    for (&(i, j), &d) in pairs.iter().zip(&values) {
        absolute[i][j] = d;
        absolute[j][i] = d;
        let x = normalize(d, ts[i].len(), ts[j].len());
        normalized[i][j] = x;
        normalized[j][i] = x;
    }
    Ok(DistanceMatrix { kind, labels: ts.iter().map(|t| t.variant.label().to_string()).collect(), absolute, normalized })
}
