//! Permutations of `{1..k}` and the dollar-order algebra of the separator-based
//! variants.
//!
//! All dollar-order permutations map a position of the `k`-length dollar
//! prefix to the lexicographic rank of the string whose dollar sits there.
//! The input order `rho` maps input position `i` to the lexicographic rank of
//! the `i`-th input string.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::ordering::colex_compare;

/// A bijection on `{1..k}`, stored as its one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(mapping: Vec<usize>) -> Result<Perm> {
        let k = mapping.len();
        let mut seen = vec![false; k + 1];
        for &v in &mapping {
            if v == 0 || v > k || seen[v] {
                return Err(Error::InvalidPermutation(format!("{mapping:?} is not a bijection on 1..={k}")));
            }
            seen[v] = true;
        }
        Ok(Perm(mapping))
    }

    pub fn identity(k: usize) -> Perm {
        Perm((1..=k).collect())
    }

    /// `k, k-1, …, 1`.
    pub fn reversal(k: usize) -> Perm {
        Perm((1..=k).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `i` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.iter().map(|i| self.at(i)).collect())
    }

    /// Number of cycles in the cycle decomposition.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] - 1;
            }
        }
        cycles
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() < 10 { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `25134` (single digits) or `2,5,1,3,4`.
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?}"));
        let values: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Perm::new(values)
    }
}

/// Input positions listed in lexicographic order of their strings (stable).
pub fn lex_order(c: &Collection) -> Perm {
    let mut idx: Vec<usize> = (1..=c.k()).collect();
    idx.sort_by(|&a, &b| c.seq(a - 1).cmp(c.seq(b - 1)));
    Perm(idx)
}

/// Input positions listed in colexicographic order of their strings (stable).
pub fn colex_order(c: &Collection) -> Perm {
    let mut idx: Vec<usize> = (1..=c.k()).collect();
    idx.sort_by(|&a, &b| colex_compare(c.seq(a - 1), c.seq(b - 1)));
    Perm(idx)
}

/// `rho`: the lexicographic rank of each input string, equal strings ranked
/// in input order.
pub fn input_rank_permutation(c: &Collection) -> Perm {
    lex_order(c).inverse()
}

/// `gamma`: lexicographic ranks of the strings listed in colex order.
pub fn gamma(c: &Collection) -> Perm {
    input_rank_permutation(c).compose(&colex_order(c))
}

/// The linking permutation: each value maps to its successor in `rho`'s
/// one-line notation, the last value to the first.
pub fn linking_permutation(rho: &Perm) -> Perm {
    let k = rho.len();
    let mut phi = vec![0; k];
    for i in 0..k {
        phi[rho.0[i] - 1] = rho.0[(i + 1) % k];
    }
    Perm(phi)
}

/// The concatenated variant's dollar order for input order `rho`.
pub fn pi_conc(rho: &Perm) -> Result<Perm> {
    let k = rho.len();
    if k < 2 {
        return Err(Error::KOutOfRange { k, min: 2, max: usize::MAX });
    }
    let mut out = vec![0; k];
    let mut phi = vec![0; k];
    pi_conc_into(&rho.0, &mut phi, &mut out);
    Ok(Perm(out))
}

// rank of i in {1..k} \ {j}
fn skip_rank(j: usize, i: usize) -> usize {
    if i < j {
        i
    } else {
        i - 1
    }
}

fn pi_conc_into(rho: &[usize], phi: &mut [usize], out: &mut [usize]) {
    let k = rho.len();
    for i in 0..k {
        phi[rho[i] - 1] = rho[(i + 1) % k];
    }
    let first = rho[0];
    let last = rho[k - 1];
    out[0] = last;
    for i in 1..=k {
        if i != last {
            let pos = skip_rank(first, phi[i - 1]) + 1;
            out[pos - 1] = i;
        }
    }
}

/// Searches for an input order `rho` with `pi_conc(rho) = pi`.
///
/// For each candidate first value the linking permutation is forced, so the
/// search is `O(k^2)` rather than over all `k!` orders.
pub fn is_feasible(pi: &Perm) -> Result<Option<Perm>> {
    let k = pi.len();
    if k < 2 {
        return Err(Error::KOutOfRange { k, min: 2, max: usize::MAX });
    }
    let inv = pi.inverse();
    let last = pi.at(1);
    for first in (1..=k).filter(|&j| j != last) {
        let mut phi = vec![0; k];
        phi[last - 1] = first;
        for i in (1..=k).filter(|&i| i != last) {
            let x = inv.at(i) - 1;
            phi[i - 1] = if x < first { x } else { x + 1 };
        }
        let Ok(phi) = Perm::new(phi) else { continue };
        if phi.cycle_count() != 1 {
            continue;
        }
        let mut rho = Vec::with_capacity(k);
        let mut v = first;
        for _ in 0..k {
            rho.push(v);
            v = phi.at(v);
        }
        let rho = Perm(rho);
        if pi_conc(&rho)? == *pi {
            return Ok(Some(rho));
        }
    }
    Ok(None)
}

/// Largest `k` accepted by [`enumerate_feasible`] unless overridden.
pub const DEFAULT_FEASIBLE_CAP: usize = 10;

/// Size of the image of `rho -> pi_conc(rho)` over all `k!` input orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleCount {
    pub k: usize,
    pub feasible: u64,
    pub total: u64,
}

impl FeasibleCount {
    pub fn fraction(&self) -> Ratio<u64> {
        Ratio::new(self.feasible, self.total)
    }

    /// Percentage with two decimals, rounded half-up.
    pub fn percentage(&self) -> String {
        crate::fixed::format_fixed(self.feasible * 100, self.total, 2)
    }
}

impl fmt::Display for FeasibleCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = {}%", self.feasible, self.total, self.percentage())
    }
}

fn lehmer_rank(p: &[usize]) -> usize {
    let k = p.len();
    let mut rank = 0;
    for i in 0..k {
        let smaller_after = p[i + 1..].iter().filter(|&&v| v < p[i]).count();
        rank = rank * (k - i) + smaller_after;
    }
    rank
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Counts feasible dollar orders of the concatenated variant for `k` strings.
pub fn enumerate_feasible(k: usize, cap: usize) -> Result<FeasibleCount> {
    if k < 2 || k > cap || k > 12 {
        return Err(Error::KOutOfRange { k, min: 2, max: cap.min(12) });
    }
    let total: usize = (1..=k).product();
    let seen: Vec<AtomicU64> = (0..total.div_ceil(64)).map(|_| AtomicU64::new(0)).collect();
    (1..=k).into_par_iter().for_each(|head| {
        let mut rho: Vec<usize> = std::iter::once(head).chain((1..=k).filter(|&v| v != head)).collect();
        let mut phi = vec![0; k];
        let mut out = vec![0; k];
        loop {
            pi_conc_into(&rho, &mut phi, &mut out);
            let r = lehmer_rank(&out);
            seen[r / 64].fetch_or(1 << (r % 64), AtomicOrdering::Relaxed);
            if !next_permutation(&mut rho[1..]) {
                break;
            }
        }
    });
    let feasible = seen.iter().map(|w| w.load(AtomicOrdering::Relaxed).count_ones() as u64).sum();
    Ok(FeasibleCount { k, feasible, total: total as u64 })
}

/// The induced dollar orders of one collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationProfile {
    pub rho: Perm,
    /// Input positions in dollar order of the dollar-eBWT, i.e. `rho^-1`.
    pub pi_de: Perm,
    pub pi_md: Perm,
    /// `None` for a single string.
    pub pi_conc: Option<Perm>,
    pub gamma: Perm,
}

impl PermutationProfile {
    pub fn of(c: &Collection) -> PermutationProfile {
        let rho = input_rank_permutation(c);
        PermutationProfile {
            pi_de: rho.inverse(),
            pi_md: rho.clone(),
            pi_conc: pi_conc(&rho).ok(),
            gamma: gamma(c),
            rho,
        }
    }
}

/// All `pi_conc` images for `k`, by brute force. Used by tests.
pub fn feasible_set(k: usize) -> BTreeSet<Perm> {
    let mut rho: Vec<usize> = (1..=k).collect();
    let mut set = BTreeSet::new();
    loop {
        set.insert(pi_conc(&Perm(rho.clone())).unwrap());
        if !next_permutation(&mut rho) {
            return set;
        }
    }
}
