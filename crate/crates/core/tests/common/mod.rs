#![allow(dead_code)]

use multibwt::intervals::interesting_intervals;
use multibwt::perm::{input_rank_permutation, pi_conc};
use multibwt::runs::{optimal_order, runs_of};
use multibwt::synth::{generate, GenSpec, LengthSpec, SplitMix64};
use multibwt::{build, build_comparable, Collection, Perm, Symbol, Variant};

pub const TOY: [&str; 5] = ["ATATG", "TGA", "ACG", "ATCA", "GGA"];

pub fn toy() -> Collection {
    Collection::from_seqs(TOY).unwrap()
}

/// Random generator settings for corpus member `i`: k <= 8, N <= 200,
/// alphabet of at most four symbols.
pub fn corpus_spec(i: u64) -> GenSpec {
    let mut r = SplitMix64::new(0x5EED_0000 + i);
    let k = 1 + r.below(8);
    let sigma = 1 + r.below(4);
    let cap = (200 / k).min(24);
    let lo = 1 + r.below(cap);
    let hi = lo + r.below(cap - lo + 1);
    GenSpec {
        seed: r.next_u64(),
        k,
        length: LengthSpec::Range { min: lo, max: hi },
        alphabet: b"ACGT"[..sigma].to_vec(),
        mutation_rate: [0.0, 0.05, 0.2, 0.5][r.below(4)],
        suffix_bias: [0.0, 0.3, 0.8][r.below(3)],
        ancestor_len: Some(hi + r.below(10)),
    }
}

pub fn corpus(n: u64) -> Vec<Collection> {
    (0..n).map(|i| generate(&corpus_spec(i)).unwrap()).collect()
}

pub fn describe(c: &Collection) -> String {
    let seqs: Vec<String> = c.seqs().map(|s| String::from_utf8_lossy(s).into_owned()).collect();
    format!("{seqs:?}")
}

fn sep_positions(symbols: &[Symbol]) -> Vec<usize> {
    symbols.iter().enumerate().filter(|(_, s)| **s == Symbol::Sep).map(|(i, _)| i).collect()
}

fn has_proper_suffix(c: &Collection) -> bool {
    let seqs: Vec<&[u8]> = c.seqs().collect();
    seqs.iter().any(|a| seqs.iter().any(|b| a.len() < b.len() && b.ends_with(a)))
}

/// Reorderings used to probe input-order dependence: every transposition,
/// rotations to the front and back, and the reversal.
pub fn shuffles(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let mut p: Vec<usize> = (1..=k).collect();
            p.swap(i, j);
            out.push(Perm::new(p).unwrap());
        }
    }
    for i in 1..k {
        let mut p: Vec<usize> = (1..=k).collect();
        p.rotate_left(i);
        out.push(Perm::new(p).unwrap());
    }
    out.push(Perm::reversal(k));
    out
}

/// Checks the structural statements relating the variants, the intervals
/// and the run counts. With `shuffle` set, also checks input-order
/// (in)dependence.
pub fn check_invariants(c: &Collection, shuffle: bool) -> Result<(), String> {
    let ctx = || describe(c);
    let report = interesting_intervals(c);
    let seps: Vec<Vec<Symbol>> =
        Variant::SEPARATOR_BASED.iter().map(|&v| build_comparable(v, c).unwrap().symbols).collect();
    for a in 0..seps.len() {
        for b in a + 1..seps.len() {
            let mut diff = 0;
            for (i, (x, y)) in seps[a].iter().zip(&seps[b]).enumerate() {
                if x != y {
                    diff += 1;
                    if !report.contains(i + 1) {
                        return Err(format!("difference at row {} outside intervals for {}", i + 1, ctx()));
                    }
                }
            }
            if diff > report.total_interval_length {
                return Err(format!("hamming {diff} above bound {} for {}", report.total_interval_length, ctx()));
            }
        }
    }
    if !has_proper_suffix(c) {
        let first = sep_positions(&seps[0]);
        if seps.iter().any(|s| sep_positions(s) != first) {
            return Err(format!("separator positions differ for {}", ctx()));
        }
    }
    let colex = &seps[3];
    let r_opt = optimal_order(c).map_err(|e| e.to_string())?.r_opt;
    if runs_of(colex) > r_opt + 2 * report.count_intervals {
        return Err(format!("colex runs {} above {} + 2*{} for {}", runs_of(colex), r_opt, report.count_intervals, ctx()));
    }
    for iv in &report.intervals {
        if runs_of(&colex[iv.b - 1..iv.e]) != iv.distinct() {
            return Err(format!("colex interval [{},{}] is not grouped for {}", iv.b, iv.e, ctx()));
        }
    }
    if c.k() >= 2 {
        let rho = input_rank_permutation(c);
        let pc = pi_conc(&rho).map_err(|e| e.to_string())?;
        if pc.at(1) != rho.at(c.k()) {
            return Err(format!("pi_conc(1) != rho(k) for {}", ctx()));
        }
    }
    if shuffle && c.k() >= 2 {
        check_shuffles(c)?;
    }
    Ok(())
}

fn check_shuffles(c: &Collection) -> Result<(), String> {
    let fixed = [Variant::Ebwt, Variant::DolEbwt, Variant::Colex];
    let base: Vec<Vec<Symbol>> = Variant::ALL.iter().map(|&v| build(v, c).unwrap().symbols).collect();
    let mut changed = [false; 5];
    for p in shuffles(c.k()) {
        let d = c.permuted(&p).unwrap();
        for (slot, &v) in Variant::ALL.iter().enumerate() {
            let t = build(v, &d).unwrap().symbols;
            if t != base[slot] {
                if fixed.contains(&v) {
                    return Err(format!("{v} changed under reordering {p} for {}", describe(c)));
                }
                changed[slot] = true;
            }
        }
    }
    let interesting = interesting_intervals(c).count_intervals > 0;
    if interesting && !(changed[2] && changed[3]) {
        return Err(format!("mdol/conc unchanged under every reordering for {}", describe(c)));
    }
    Ok(())
}
