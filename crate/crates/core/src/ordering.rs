//! Order relations on strings: lexicographic, colexicographic and the
//! omega-order used by the extended BWT, plus primitive-root decomposition.
//!
//! Everything here is generic over the symbol type so the same comparators
//! work on raw bytes and on sentinel-extended sequences.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// `s = root^exponent` with `root` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition<T> {
    pub root: Vec<T>,
    pub exponent: usize,
}

/// A conjugate of one string of a collection, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationRef {
    pub string_index: usize,
    pub offset: usize,
}

impl std::fmt::Display for RotationRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.string_index, self.offset)
    }
}

/// Length of the smallest period of `s` that divides `|s|`.
pub(crate) fn primitive_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    // KMP failure function; the shortest period is n - border(n).
    let mut fail = vec![0usize; n + 1];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i + 1] = k;
    }
    let p = n - fail[n];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Exponent of `s` as a power of its primitive root.
pub(crate) fn exponent<T: Eq>(s: &[T]) -> usize {
    if s.is_empty() {
        return 0;
    }
    s.len() / primitive_period(s)
}

/// Decomposes `s` as a power of its primitive root.
pub fn primitive_root<T: Eq + Clone>(s: &[T]) -> Result<RootDecomposition<T>> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let p = primitive_period(s);
    Ok(RootDecomposition { root: s[..p].to_vec(), exponent: s.len() / p })
}

/// Lexicographic order with proper prefixes first.
pub fn lex_compare<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    u.cmp(v)
}

/// Lexicographic order of the reversed strings.
pub fn colex_compare<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    u.iter().rev().cmp(v.iter().rev())
}

/// Omega-order: compares `u^ω` with `v^ω`, breaking ties between powers
/// of the same primitive root by exponent.
///
/// Two infinite powers that agree on their first `|u| + |v|` symbols are
/// equal (Fine and Wilf), so that window decides every other case.
pub fn omega_compare<T: Ord>(u: &[T], v: &[T]) -> Result<Ordering> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(omega_cmp(u, v))
}

pub(crate) fn omega_cmp<T: Ord>(u: &[T], v: &[T]) -> Ordering {
    let window = u.len() + v.len();
    let powers = u.iter().cycle().zip(v.iter().cycle()).take(window);
    for (a, b) in powers {
        match a.cmp(b) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    exponent(u).cmp(&exponent(v))
}

/// Start offset (0-based) of the lexicographically least rotation (Booth).
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// The lexicographically least rotation of `s`.
pub fn canonical_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let k = least_rotation(s);
    s[k..].iter().chain(&s[..k]).cloned().collect()
}
