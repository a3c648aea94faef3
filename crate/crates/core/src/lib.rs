//! BWT variants for string collections.
//!
//! Builds the extended BWT, its dollar-terminated form, the multidollar,
//! concatenated and colex-ordered transforms, and analyzes how they differ:
//! interesting intervals, dollar-order permutations, run counts and the
//! run-minimizing input order.
//!
//! ```
//! use multibwt::{build, Collection, Variant};
//!
//! let c = Collection::from_seqs(["ATATG", "TGA", "ACG", "ATCA", "GGA"]).unwrap();
//! assert_eq!(build(Variant::Ebwt, &c).unwrap().to_text(), "CGGGATGTACGTTAAAAA");
//! ```

pub mod collection;
pub mod distance;
pub mod error;
pub mod fixed;
pub mod intervals;
pub mod oracle;
pub mod ordering;
pub mod perm;
pub mod report;
pub mod runs;
mod sa;
pub mod symbol;
pub mod synth;
pub mod transform;

pub use collection::{Collection, InputFormat, SeqRecord};
pub use error::{Error, Result};
pub use fixed::Fixed;
pub use perm::Perm;
pub use symbol::Symbol;
pub use transform::{build, build_comparable, Transform, Variant};

/// Exact ratios used for fractions and variability.
pub type Rational = num_rational::Ratio<u64>;
