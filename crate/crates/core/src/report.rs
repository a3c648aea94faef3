//! Per-collection summary: dataset properties, run counts, distances and
//! dollar orders.
//!
//! The JSON layout is
//!
//! ```text
//! {
//!   "dataset": { k, total_length, avg_length, max_length, min_length,
//!                interesting_intervals, interval_length,
//!                fraction_in_intervals, variability },
//!   "runs": [ { variant, n, r, mean_run_length } … ],   // five variants, then "opt"
//!   "optimal_order": "…",
//!   "hamming": { kind, labels, absolute, normalized },  // separator-based only
//!   "edit": null | { …, "subset": n },
//!   "permutations": { rho, pi_de, pi_md, pi_conc, gamma }
//! }
//! ```
//!
//! Keys keep this order. `avg_length`, `mean_run_length`,
//! `fraction_in_intervals` and `variability` carry three decimals, normalized
//! distances five; all are rounded half-up.

use std::fmt::Write as _;

use num_rational::Ratio;
use serde::Serialize;

use crate::collection::Collection;
use crate::distance::{distance_matrix, DistanceKind, DistanceMatrix};
use crate::error::Result;
use crate::fixed::Fixed;
use crate::intervals::{interesting_intervals, IntervalReport};
use crate::perm::PermutationProfile;
use crate::runs::{optimal_order, runs_of};
use crate::transform::{build_comparable, Transform, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DatasetProperties {
    pub k: usize,
    pub total_length: usize,
    pub avg_length: Fixed,
    pub max_length: usize,
    pub min_length: usize,
    pub interesting_intervals: usize,
    pub interval_length: usize,
    pub fraction_in_intervals: Fixed,
    pub variability: Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunRow {
    pub variant: String,
    pub n: usize,
    pub r: usize,
    pub mean_run_length: Fixed,
}

impl RunRow {
    fn new(variant: &str, n: usize, r: usize) -> RunRow {
        RunRow { variant: variant.into(), n, r, mean_run_length: Fixed::new(Ratio::new(n as u64, r as u64), 3) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EditSection {
    pub subset: usize,
    #[serde(flatten)]
    pub matrix: DistanceMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationSection {
    pub rho: String,
    pub pi_de: String,
    pub pi_md: String,
    pub pi_conc: Option<String>,
    pub gamma: String,
}

impl From<&PermutationProfile> for PermutationSection {
    fn from(p: &PermutationProfile) -> Self {
        PermutationSection {
            rho: p.rho.to_string(),
            pi_de: p.pi_de.to_string(),
            pi_md: p.pi_md.to_string(),
            pi_conc: p.pi_conc.as_ref().map(ToString::to_string),
            gamma: p.gamma.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub dataset: DatasetProperties,
    pub runs: Vec<RunRow>,
    pub optimal_order: String,
    pub hamming: DistanceMatrix,
    pub edit: Option<EditSection>,
    pub permutations: PermutationSection,
    #[serde(skip)]
    pub intervals: IntervalReport,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Compute the edit matrix on the first `n` records.
    pub edit_subset: Option<usize>,
}

fn transforms(c: &Collection) -> Result<Vec<Transform>> {
    Variant::ALL.iter().map(|&v| build_comparable(v, c)).collect()
}

pub fn analyze(c: &Collection, opts: &AnalyzeOptions) -> Result<AnalyzeReport> {
    let intervals = interesting_intervals(c);
    let ts = transforms(c)?;
    let opt = optimal_order(c)?;
    let lengths: Vec<usize> = c.seqs().map(<[u8]>::len).collect();
    let dataset = DatasetProperties {
        k: c.k(),
        total_length: c.total_length(),
        avg_length: Fixed::new(Ratio::new(c.total_length() as u64, c.k() as u64), 3),
        max_length: lengths.iter().copied().max().unwrap_or(0),
        min_length: lengths.iter().copied().min().unwrap_or(0),
        interesting_intervals: intervals.count_intervals,
        interval_length: intervals.total_interval_length,
        fraction_in_intervals: Fixed::new(intervals.fraction_positions, 3),
        variability: Fixed::new(intervals.variability, 3),
    };
    let mut runs: Vec<RunRow> = ts.iter().map(|t| RunRow::new(t.variant.label(), t.len(), runs_of(&t.symbols))).collect();
    runs.push(RunRow::new("opt", c.total_length() + c.k(), opt.r_opt));
    let separated: Vec<Transform> = ts.iter().filter(|t| t.variant.is_separator_based()).cloned().collect();
    let hamming = distance_matrix(&separated, DistanceKind::Hamming)?;
    let edit = match opts.edit_subset {
        Some(n) => {
            let n = n.clamp(1, c.k());
            let sub = Collection::new(c.records()[..n].to_vec())?;
            Some(EditSection { subset: n, matrix: distance_matrix(&transforms(&sub)?, DistanceKind::Edit)? })
        }
        None => None,
    };
    Ok(AnalyzeReport {
        dataset,
        runs,
        optimal_order: opt.permutation.to_string(),
        hamming,
        edit,
        permutations: (&PermutationProfile::of(c)).into(),
        intervals,
    })
}

impl AnalyzeReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Sections separated by blank lines.
    pub fn to_tsv(&self) -> String {
        let d = &self.dataset;
        let mut out = String::from(
            "k\ttotal_length\tavg_length\tmax_length\tmin_length\tinteresting_intervals\tinterval_length\tfraction_in_intervals\tvariability\n",
        );
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            d.k,
            d.total_length,
            d.avg_length,
            d.max_length,
            d.min_length,
            d.interesting_intervals,
            d.interval_length,
            d.fraction_in_intervals,
            d.variability
        );
        out.push_str("\nvariant\tn\tr\tmean_run_length\n");
        for r in &self.runs {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", r.variant, r.n, r.r, r.mean_run_length);
        }
        out.push_str("\nhamming\n");
        out.push_str(&self.hamming.to_tsv());
        if let Some(e) = &self.edit {
            let _ = writeln!(out, "\nedit (first {} records)", e.subset);
            out.push_str(&e.matrix.to_tsv());
        }
        let p = &self.permutations;
        let _ = writeln!(
            out,
            "\nrho\tpi_de\tpi_md\tpi_conc\tgamma\n{}\t{}\t{}\t{}\t{}",
            p.rho,
            p.pi_de,
            p.pi_md,
            p.pi_conc.as_deref().unwrap_or("-"),
            p.gamma
        );
        out
    }
}
