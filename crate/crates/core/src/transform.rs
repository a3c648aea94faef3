//! The five BWT variants for string collections, plus the classic
//! single-string BWT, and their inverses.
//!
//! | variant   | definition                                   |
//! |-----------|----------------------------------------------|
//! | `Ebwt`    | omega-sorted conjugates of every string       |
//! | `DolEbwt` | `Ebwt` of `{T_i $}`                           |
//! | `Mdol`    | `BWT(T_1 $_1 T_2 $_2 … T_k $_k)`              |
//! | `Conc`    | `BWT(T_1 $ T_2 $ … T_k $ #)`                  |
//! | `Colex`   | `Mdol` with the strings in colex order        |
//!
//! Separators are emitted as a single display symbol whatever their index.

use std::fmt;
use std::str::FromStr;

use crate::collection::{Collection, SeqRecord};
use crate::error::{Error, Result};
use crate::ordering::{canonical_rotation, exponent};
use crate::perm::{colex_order, lex_order};
use crate::sa::{sort_conjugates, suffix_array};
use crate::symbol::{parse_symbols, render, Symbol, SEP_GLYPH, TERM_GLYPH};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Ebwt,
    DolEbwt,
    Mdol,
    Conc,
    Colex,
    Single,
}

impl Variant {
    /// The five collection variants in report order.
    pub const ALL: [Variant; 5] = [Variant::Ebwt, Variant::DolEbwt, Variant::Mdol, Variant::Conc, Variant::Colex];
    pub const SEPARATOR_BASED: [Variant; 4] = [Variant::DolEbwt, Variant::Mdol, Variant::Conc, Variant::Colex];

    pub fn is_separator_based(self) -> bool {
        Self::SEPARATOR_BASED.contains(&self)
    }

    /// Name used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Variant::Ebwt => "eBWT",
            Variant::DolEbwt => "dolEBWT",
            Variant::Mdol => "mdolBWT",
            Variant::Conc => "concBWT",
            Variant::Colex => "colexBWT",
            Variant::Single => "BWT",
        }
    }

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Variant::Ebwt => "ebwt",
            Variant::DolEbwt => "dolebwt",
            Variant::Mdol => "mdol",
            Variant::Conc => "conc",
            Variant::Colex => "colex",
            Variant::Single => "single",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        let v = match s.to_ascii_lowercase().as_str() {
            "ebwt" => Variant::Ebwt,
            "dolebwt" | "dol" | "dol-ebwt" => Variant::DolEbwt,
            "mdol" | "mdolbwt" => Variant::Mdol,
            "conc" | "concbwt" => Variant::Conc,
            "colex" | "colexbwt" => Variant::Colex,
            "single" | "bwt" => Variant::Single,
            _ => {
                return Err(Error::WrongVariant {
                    expected: "one of ebwt, dolebwt, mdol, conc, colex, single".into(),
                    found: s.into(),
                })
            }
        };
        Ok(v)
    }
}

/// The output of one variant on one collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    pub variant: Variant,
    pub symbols: Vec<Symbol>,
    pub source_k: usize,
    pub source_n: usize,
    /// Set once a raw concatenated transform has been normalized.
    pub normalized: bool,
}

impl Transform {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Rendered with `$` and `#`.
    pub fn to_text(&self) -> String {
        String::from_utf8_lossy(&render(&self.symbols, SEP_GLYPH, TERM_GLYPH)).into_owned()
    }

    /// Parses displayed text. The string count is taken to be the number of
    /// sentinels (zero for the eBWT).
    pub fn from_text(variant: Variant, text: &[u8]) -> Transform {
        let symbols = parse_symbols(text);
        let seps = symbols.iter().filter(|s| **s == Symbol::Sep).count();
        let has_term = symbols.contains(&Symbol::Term);
        let sentinels = symbols.iter().filter(|s| s.is_sentinel()).count();
        Transform {
            variant,
            source_n: symbols.len() - sentinels,
            source_k: seps,
            normalized: variant == Variant::Conc && !has_term && !symbols.is_empty(),
            symbols,
        }
    }

    /// Normalizes a raw concatenated transform; other transforms pass through.
    pub fn comparable(self) -> Transform {
        if self.variant == Variant::Conc && !self.normalized {
            normalize_conc(&self).expect("raw concatenated transform")
        } else {
            self
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn transform(variant: Variant, symbols: Vec<Symbol>, c: &Collection) -> Transform {
    Transform { variant, symbols, source_k: c.k(), source_n: c.total_length(), normalized: false }
}

fn check(c: &Collection) -> Result<()> {
    match c.validate().into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Builds variant `v` of `c`. The concatenated variant is returned raw.
pub fn build(v: Variant, c: &Collection) -> Result<Transform> {
    match v {
        Variant::Ebwt => ebwt(c),
        Variant::DolEbwt => dol_ebwt(c),
        Variant::Mdol => mdol_bwt(c),
        Variant::Conc => conc_bwt(c),
        Variant::Colex => colex_bwt(c),
        Variant::Single => single_bwt(c),
    }
}

/// Like [`build`], with the concatenated variant normalized.
pub fn build_comparable(v: Variant, c: &Collection) -> Result<Transform> {
    build(v, c).map(Transform::comparable)
}

/// Extended BWT: last symbols of all conjugates in omega-order.
pub fn ebwt(c: &Collection) -> Result<Transform> {
    check(c)?;
    let strings: Vec<&[u8]> = c.seqs().collect();
    let exps: Vec<usize> = strings.iter().map(|s| exponent(s)).collect();
    let symbols = sort_conjugates(&strings, &exps)
        .into_iter()
        .map(|(s, o)| {
            let t = strings[s];
            Symbol::Char(t[(o + t.len() - 1) % t.len()])
        })
        .collect();
    Ok(transform(Variant::Ebwt, symbols, c))
}

/// Classic BWT of a single string without an end marker.
pub fn single_bwt(c: &Collection) -> Result<Transform> {
    if c.k() != 1 {
        return Err(Error::KOutOfRange { k: c.k(), min: 1, max: 1 });
    }
    let mut t = ebwt(c)?;
    t.variant = Variant::Single;
    Ok(t)
}

/// Row layout of the multidollar transform: for every row, the string
/// (0-based) and the start of the suffix within it; a start equal to the
/// string length is the row of its separator.
pub(crate) fn mdol_rows(c: &Collection) -> Vec<(usize, usize)> {
    let k = c.k() as u32;
    let mut text = Vec::with_capacity(c.total_length() + c.k());
    let mut owner = Vec::with_capacity(text.capacity());
    for (i, s) in c.seqs().enumerate() {
        text.extend(s.iter().map(|&b| k + 1 + b as u32));
        text.push(i as u32 + 1);
        owner.extend((0..=s.len()).map(|o| (i, o)));
    }
    suffix_array(&text).into_iter().map(|p| owner[p]).collect()
}

/// The symbol preceding suffix `start` of `seq` inside `seq $`.
pub(crate) fn preceding(seq: &[u8], start: usize) -> Symbol {
    if start == 0 {
        Symbol::Sep
    } else {
        Symbol::Char(seq[start - 1])
    }
}

fn mdol_symbols(c: &Collection) -> Vec<Symbol> {
    mdol_rows(c).into_iter().map(|(i, o)| preceding(c.seq(i), o)).collect()
}

/// Multidollar BWT: distinct separators ordered by input position.
pub fn mdol_bwt(c: &Collection) -> Result<Transform> {
    check(c)?;
    Ok(transform(Variant::Mdol, mdol_symbols(c), c))
}

/// Dollar-eBWT: the eBWT of the separator-terminated strings.
///
/// Within a block of rotations `U $ …` the omega-order compares the
/// infinite powers of the whole `T_i $`, which is the lexicographic order of
/// the strings. So this is the multidollar transform of the strings listed
/// in lexicographic order.
pub fn dol_ebwt(c: &Collection) -> Result<Transform> {
    check(c)?;
    let sorted = c.permuted(&lex_order(c))?;
    Ok(transform(Variant::DolEbwt, mdol_symbols(&sorted), c))
}

/// Colex BWT: the multidollar transform of the strings in colex order.
pub fn colex_bwt(c: &Collection) -> Result<Transform> {
    check(c)?;
    let sorted = c.permuted(&colex_order(c))?;
    Ok(transform(Variant::Colex, mdol_symbols(&sorted), c))
}

/// Concatenated BWT, raw: length `N + k + 1` with one terminator.
pub fn conc_bwt(c: &Collection) -> Result<Transform> {
    check(c)?;
    let mut text = Vec::with_capacity(c.total_length() + c.k() + 1);
    for s in c.seqs() {
        text.extend(s.iter().map(|&b| 2 + b as u32));
        text.push(1);
    }
    text.push(0);
    let n = text.len();
    let symbols = suffix_array(&text)
        .into_iter()
        .map(|p| match text[(p + n - 1) % n] {
            0 => Symbol::Term,
            1 => Symbol::Sep,
            x => Symbol::Char((x - 2) as u8),
        })
        .collect();
    Ok(transform(Variant::Conc, symbols, c))
}

/// Drops the leading separator of a raw concatenated transform and turns the
/// terminator into a separator.
pub fn normalize_conc(t: &Transform) -> Result<Transform> {
    if t.variant != Variant::Conc {
        return Err(Error::WrongVariant { expected: Variant::Conc.label().into(), found: t.variant.label().into() });
    }
    if t.normalized {
        return Err(Error::AlreadyNormalized);
    }
    if t.symbols.first() != Some(&Symbol::Sep) || t.symbols.iter().filter(|s| **s == Symbol::Term).count() != 1 {
        return Err(Error::MalformedTransform("raw concatenated transform must start with $ and hold one #".into()));
    }
    let symbols = t.symbols[1..].iter().map(|&s| if s == Symbol::Term { Symbol::Sep } else { s }).collect();
    Ok(Transform { symbols, normalized: true, ..t.clone() })
}

/// `C` array: number of symbols smaller than each byte, separators first.
fn first_column_offsets(symbols: &[Symbol]) -> Result<(usize, [usize; 256])> {
    let mut counts = [0usize; 256];
    let mut seps = 0;
    for s in symbols {
        match s {
            Symbol::Char(b) => counts[*b as usize] += 1,
            Symbol::Sep => seps += 1,
            Symbol::Term => return Err(Error::MalformedTransform("unexpected terminator".into())),
        }
    }
    let mut offsets = [0usize; 256];
    let mut acc = seps;
    for b in 0..256 {
        offsets[b] = acc;
        acc += counts[b];
    }
    Ok((seps, offsets))
}

fn lf_map(symbols: &[Symbol], offsets: &[usize; 256]) -> Vec<usize> {
    let mut seen = [0usize; 256];
    symbols
        .iter()
        .map(|s| match s {
            Symbol::Char(b) => {
                let r = offsets[*b as usize] + seen[*b as usize];
                seen[*b as usize] += 1;
                r
            }
            _ => usize::MAX,
        })
        .collect()
}

/// Recovers the strings of a separator-based transform, listed in the
/// variant's dollar order.
///
/// Row `p < k` is the rotation starting with the `p`-th separator; walking
/// LF from it spells the string that precedes that separator, backwards,
/// until a separator is reached.
pub fn invert_separator_based(t: &Transform) -> Result<Collection> {
    if !t.variant.is_separator_based() {
        return Err(Error::WrongVariant { expected: "a separator-based variant".into(), found: t.variant.label().into() });
    }
    let t = if t.variant == Variant::Conc && !t.normalized { normalize_conc(t)? } else { t.clone() };
    let symbols = &t.symbols;
    let (k, offsets) = first_column_offsets(symbols)?;
    if k == 0 {
        return Err(Error::MalformedTransform("no separators".into()));
    }
    let lf = lf_map(symbols, &offsets);
    let mut visited = vec![false; symbols.len()];
    let mut records = Vec::with_capacity(k);
    for start in 0..k {
        let mut row = start;
        let mut seq = Vec::new();
        loop {
            if visited[row] {
                return Err(Error::MalformedTransform(format!("LF walk from row {} revisits row {}", start + 1, row + 1)));
            }
            visited[row] = true;
            match symbols[row] {
                Symbol::Char(b) => {
                    seq.push(b);
                    row = lf[row];
                }
                _ => break,
            }
        }
        if seq.is_empty() {
            return Err(Error::MalformedTransform(format!("empty string at separator {}", start + 1)));
        }
        seq.reverse();
        records.push(SeqRecord::new((start + 1).to_string(), seq));
    }
    if visited.iter().any(|v| !v) {
        return Err(Error::MalformedTransform("rows not reached from any separator".into()));
    }
    Collection::new(records)
}

/// Decomposes an eBWT into its LF cycles; every cycle yields one primitive
/// string, reported as its least rotation. Cycles are listed by their
/// smallest row.
pub fn invert_ebwt(t: &Transform) -> Result<Vec<Vec<u8>>> {
    if t.variant != Variant::Ebwt && t.variant != Variant::Single {
        return Err(Error::WrongVariant { expected: Variant::Ebwt.label().into(), found: t.variant.label().into() });
    }
    let symbols = &t.symbols;
    let (seps, offsets) = first_column_offsets(symbols)?;
    if seps > 0 {
        return Err(Error::MalformedTransform("separator in an eBWT".into()));
    }
    let lf = lf_map(symbols, &offsets);
    let mut visited = vec![false; symbols.len()];
    let mut out = Vec::new();
    for start in 0..symbols.len() {
        if visited[start] {
            continue;
        }
        let mut row = start;
        let mut seq = Vec::new();
        while !visited[row] {
            visited[row] = true;
            seq.push(symbols[row].glyph());
            row = lf[row];
        }
        seq.reverse();
        out.push(canonical_rotation(&seq));
    }
    Ok(out)
}
