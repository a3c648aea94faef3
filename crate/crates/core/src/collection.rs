//! String collections: parsing, validation and canonical representation.
//!
//! Sequences are opaque bytes. Nothing is case-folded and no symbol gets
//! special treatment, so the alphabet order is plain byte order. The input
//! order of the records is kept as read because several transforms depend on it.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::symbol::RESERVED_BYTES;

/// One input string with its label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeqRecord {
    pub id: String,
    pub seq: Vec<u8>,
}

impl SeqRecord {
    pub fn new(id: impl Into<String>, seq: impl Into<Vec<u8>>) -> Self {
        SeqRecord { id: id.into(), seq: seq.into() }
    }
}

/// An ordered list of sequences (a multiset with a presentation order).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Collection {
    records: Vec<SeqRecord>,
    total_length: usize,
}

impl Collection {
    /// Builds and validates a collection.
    pub fn new(records: Vec<SeqRecord>) -> Result<Self> {
        let c = Self::new_unchecked(records);
        match c.validate().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(c),
        }
    }

    /// Builds a collection without validating it.
    pub fn new_unchecked(records: Vec<SeqRecord>) -> Self {
        let total_length = records.iter().map(|r| r.seq.len()).sum();
        Collection { records, total_length }
    }

    /// Builds a collection with ids "1", "2", … from raw sequences.
    pub fn from_seqs<I, S>(seqs: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        let records = seqs
            .into_iter()
            .enumerate()
            .map(|(i, s)| SeqRecord::new((i + 1).to_string(), s.as_ref()))
            .collect();
        Self::new(records)
    }

    pub fn records(&self) -> &[SeqRecord] {
        &self.records
    }

    /// Number of strings.
    pub fn k(&self) -> usize {
        self.records.len()
    }

    /// Sum of the string lengths.
    pub fn total_length(&self) -> usize {
        self.total_length
    }

    pub fn seq(&self, i: usize) -> &[u8] {
        &self.records[i].seq
    }

    pub fn seqs(&self) -> impl ExactSizeIterator<Item = &[u8]> + '_ {
        self.records.iter().map(|r| r.seq.as_slice())
    }

    /// Returns every invariant violation; empty means valid.
    pub fn validate(&self) -> Vec<Error> {
        let mut errors = Vec::new();
        if self.records.is_empty() {
            errors.push(Error::EmptyCollection);
        }
        for (index, r) in self.records.iter().enumerate() {
            if r.seq.is_empty() {
                errors.push(Error::EmptySequence { index: index + 1 });
            }
            if let Some(offset) = r.seq.iter().position(|b| RESERVED_BYTES.contains(b)) {
                errors.push(Error::ReservedByte { index: index + 1, offset: offset + 1, byte: r.seq[offset] });
            }
        }
        errors
    }

    /// Re-orders the collection so that position `p` holds input record `order(p)`.
    pub fn permuted(&self, order: &Perm) -> Result<Collection> {
        if order.len() != self.k() {
            return Err(Error::InvalidPermutation(format!(
                "order has length {} but the collection has {} strings",
                order.len(),
                self.k()
            )));
        }
        let records = order.iter().map(|i| self.records[i - 1].clone()).collect();
        Ok(Collection { records, total_length: self.total_length })
    }

    /// Number of records whose sequence equals an earlier record's.
    pub fn duplicate_count(&self) -> usize {
        let mut seen = std::collections::HashSet::new();
        self.seqs().filter(|s| !seen.insert(*s)).count()
    }

    /// Serializes as newline-separated sequences.
    pub fn to_lines(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_length + self.k());
        for s in self.seqs() {
            out.extend_from_slice(s);
            out.push(b'\n');
        }
        out
    }

    /// Serializes as FASTA, one sequence line per record.
    pub fn to_fasta(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.total_length + 8 * self.k());
        for r in &self.records {
            out.push(b'>');
            out.extend_from_slice(r.id.as_bytes());
            out.push(b'\n');
            out.extend_from_slice(&r.seq);
            out.push(b'\n');
        }
        out
    }
}

fn lines(raw: &[u8]) -> impl Iterator<Item = &[u8]> {
    raw.split(|&b| b == b'\n').map(|l| l.strip_suffix(b"\r").unwrap_or(l))
}

/// Parses FASTA: `>` header lines, sequence lines concatenated verbatim.
pub fn parse_fasta(raw: &[u8]) -> Result<Collection> {
    if raw.iter().all(u8::is_ascii_whitespace) {
        return Err(Error::EmptyInput);
    }
    let mut records: Vec<SeqRecord> = Vec::new();
    for (lineno, line) in lines(raw).enumerate() {
        if let Some(header) = line.strip_prefix(b">") {
            let id = String::from_utf8_lossy(header).trim().to_string();
            records.push(SeqRecord { id, seq: Vec::new() });
        } else if !line.is_empty() {
            match records.last_mut() {
                Some(r) => r.seq.extend_from_slice(line),
                None => {
                    return Err(Error::Fasta(format!("line {}: sequence data before the first header", lineno + 1)))
                }
            }
        }
    }
    Collection::new(records)
}

/// Parses one sequence per non-empty line; ids are "1", "2", ….
pub fn parse_lines(raw: &[u8]) -> Result<Collection> {
    let records: Vec<SeqRecord> = lines(raw)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| SeqRecord::new((i + 1).to_string(), l))
        .collect();
    Collection::new(records)
}

/// Input format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Fasta,
    Lines,
}

impl InputFormat {
    /// FASTA when the first non-blank byte is `>`, lines otherwise.
    pub fn detect(raw: &[u8]) -> InputFormat {
        match raw.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'>') => InputFormat::Fasta,
            _ => InputFormat::Lines,
        }
    }

    pub fn parse(self, raw: &[u8]) -> Result<Collection> {
        match self {
            InputFormat::Fasta => parse_fasta(raw),
            InputFormat::Lines => parse_lines(raw),
        }
    }
}
