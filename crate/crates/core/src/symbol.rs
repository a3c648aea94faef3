//! Output alphabet of the transforms.
//!
//! Input strings are opaque bytes compared by byte value. Two end-of-string
//! symbols sit below every byte: the string separator (`$`) and the single
//! text terminator used by the concatenated variant (`#`), with `# < $`.

use std::cmp::Ordering;
use std::fmt;

/// Display glyph for the separator.
pub const SEP_GLYPH: u8 = b'$';
/// Display glyph for the terminator.
pub const TERM_GLYPH: u8 = b'#';
/// Bytes that may not appear in input sequences.
pub const RESERVED_BYTES: [u8; 3] = [0x00, TERM_GLYPH, SEP_GLYPH];

/// A symbol of a transform as displayed: every separator is the same `$`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Term,
    Sep,
    Char(u8),
}

impl Symbol {
    pub fn is_sentinel(self) -> bool {
        !matches!(self, Symbol::Char(_))
    }

    pub fn glyph(self) -> u8 {
        match self {
            Symbol::Term => TERM_GLYPH,
            Symbol::Sep => SEP_GLYPH,
            Symbol::Char(c) => c,
        }
    }

    pub fn from_glyph(b: u8) -> Symbol {
        match b {
            TERM_GLYPH => Symbol::Term,
            SEP_GLYPH => Symbol::Sep,
            c => Symbol::Char(c),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Char(c) => write!(f, "{}", c.escape_ascii()),
            s => write!(f, "{}", s.glyph() as char),
        }
    }
}

/// A symbol carrying the index of its separator, used as a sort key.
///
/// The derived order is the sentinel order: the terminator first, then
/// separators by index, then bytes by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtSymbol {
    Term,
    Sep(usize),
    Char(u8),
}

impl ExtSymbol {
    pub fn display(self) -> Symbol {
        match self {
            ExtSymbol::Term => Symbol::Term,
            ExtSymbol::Sep(_) => Symbol::Sep,
            ExtSymbol::Char(c) => Symbol::Char(c),
        }
    }
}

impl fmt::Display for ExtSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtSymbol::Sep(i) if *i > 0 => write!(f, "$_{i}"),
            s => s.display().fmt(f),
        }
    }
}

/// Orders extended symbols: `TERM < SEP_1 < … < SEP_k < bytes`.
pub fn sentinel_compare(a: ExtSymbol, b: ExtSymbol) -> Ordering {
    a.cmp(&b)
}

/// Renders a symbol sequence with the given sentinel glyphs.
pub fn render(symbols: &[Symbol], sep: u8, term: u8) -> Vec<u8> {
    symbols
        .iter()
        .map(|s| match s {
            Symbol::Sep => sep,
            Symbol::Term => term,
            Symbol::Char(c) => *c,
        })
        .collect()
}

/// Parses displayed text (`$`, `#`, bytes) back into symbols.
pub fn parse_symbols(text: &[u8]) -> Vec<Symbol> {
    text.iter().map(|&b| Symbol::from_glyph(b)).collect()
}
