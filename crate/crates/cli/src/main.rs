use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use multibwt::distance::{distance_matrix, DistanceKind};
use multibwt::intervals::interesting_intervals;
use multibwt::oracle::{brute_force_optimal_runs, naive_rotation_sort, OracleLimits};
use multibwt::perm::{colex_order, enumerate_feasible, lex_order, DEFAULT_FEASIBLE_CAP};
use multibwt::report::{analyze, AnalyzeOptions};
use multibwt::runs::{optimal_order, parse_rle, rle_decode, rle_encode, runs_of};
use multibwt::synth::{generate, GenSpec, LengthSpec};
use multibwt::transform::{invert_ebwt, invert_separator_based};
use multibwt::{build, build_comparable, Collection, InputFormat, Perm, SeqRecord, Transform, Variant};

/// BWT variants for string collections.
#[derive(Parser)]
#[command(name = "multibwt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one BWT variant
    Transform {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, default_value = "mdol")]
        variant: Variant,
        /// Keep the terminator of the concatenated variant
        #[arg(long)]
        raw: bool,
        /// Emit `symbol<TAB>count` runs
        #[arg(long)]
        rle: bool,
        /// Cross-check against the explicit rotation sort
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full report: dataset properties, runs, distances, dollar orders
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Edit-distance matrix on the first N records
        #[arg(long, value_name = "N")]
        edit_subset: Option<usize>,
        #[arg(long)]
        tsv: bool,
        /// Cross-check every transform against the explicit rotation sort
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Pairwise distances between variants
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Variants to compare (default: the separator-based ones)
        #[arg(short, long, value_delimiter = ',')]
        variants: Vec<Variant>,
        #[arg(long, value_enum, default_value = "hamming")]
        kind: Kind,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run-minimizing input order
    Optimal {
        #[command(flatten)]
        input: InputArgs,
        /// Confirm the optimum by exhaustive search (k <= 8)
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Count dollar orders attainable by the concatenated variant
    Feasible {
        k: usize,
        #[arg(long, default_value_t = DEFAULT_FEASIBLE_CAP)]
        cap: usize,
    },
    /// Recover the strings from a transform
    Invert {
        /// Transform file, `-` for stdin
        path: PathBuf,
        #[arg(short, long)]
        variant: Variant,
        /// Input is `symbol<TAB>count` runs
        #[arg(long)]
        rle: bool,
        /// Output format
        #[arg(long, value_enum, default_value = "fasta")]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Interesting intervals as TSV
    Intervals {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sorted rotation matrix of one variant
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, default_value = "mdol")]
        variant: Variant,
        /// Show the concatenated variant without its terminator row
        #[arg(long)]
        normalized: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generate a synthetic collection as FASTA
    Synth {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, default_value_t = 10)]
        k: usize,
        /// Fixed length, or `MIN-MAX`
        #[arg(long, default_value = "100")]
        length: String,
        #[arg(long, default_value = "ACGT")]
        alphabet: String,
        #[arg(long, default_value_t = 0.01)]
        mutation: f64,
        #[arg(long, default_value_t = 0.0)]
        suffix_bias: f64,
        #[arg(long)]
        ancestor_len: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// FASTA or one sequence per line, `-` for stdin
    path: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Reorder the input: colex, lex, reverse, or a permutation like 25134
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Fasta,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hamming,
    Edit,
}

#[derive(Debug)]
struct OracleMismatch(String);

impl fmt::Display for OracleMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "oracle mismatch: {}", self.0)
    }
}

impl std::error::Error for OracleMismatch {}

fn read_source(path: &PathBuf) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load(args: &InputArgs) -> Result<Collection> {
    let raw = read_source(&args.path)?;
    let format = match args.format {
        Some(Format::Fasta) => InputFormat::Fasta,
        Some(Format::Lines) => InputFormat::Lines,
        None => InputFormat::detect(&raw),
    };
    let c = format.parse(&raw).with_context(|| format!("parsing {}", args.path.display()))?;
    let Some(order) = &args.order else {
        return Ok(c);
    };
    let perm = match order.as_str() {
        "colex" => colex_order(&c),
        "lex" => lex_order(&c),
        "reverse" => Perm::reversal(c.k()),
        literal => literal.parse::<Perm>()?,
    };
    if perm.len() != c.k() {
        bail!("order {perm} has length {}, the collection has {} records", perm.len(), c.k());
    }
    Ok(c.permuted(&perm)?)
}

fn emit(output: &OutputArgs, text: &[u8]) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn check_oracle(v: Variant, c: &Collection, fast: &Transform) -> Result<()> {
    let (_, naive) = naive_rotation_sort(v, c, &OracleLimits::default())?;
    if naive.symbols != fast.symbols {
        return Err(OracleMismatch(format!("{v}: fast {fast} vs naive {naive}")).into());
    }
    Ok(())
}

fn parse_length(s: &str) -> Result<LengthSpec> {
    match s.split_once('-') {
        Some((a, b)) => Ok(LengthSpec::Range { min: a.trim().parse()?, max: b.trim().parse()? }),
        None => Ok(LengthSpec::Fixed(s.trim().parse()?)),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Transform { input, variant, raw, rle, oracle, output } => {
            let c = load(&input)?;
            let t = build(variant, &c)?;
            if oracle {
                check_oracle(variant, &c, &t)?;
            }
            let t = if raw { t } else { t.comparable() };
            let text = if rle { rle_encode(&t)?.to_text() } else { format!("{t}\n") };
            emit(&output, text.as_bytes())
        }
        Command::Analyze { input, edit_subset, tsv, oracle, output } => {
            let c = load(&input)?;
            if oracle {
                for v in Variant::ALL {
                    check_oracle(v, &c, &build(v, &c)?)?;
                }
            }
            let report = analyze(&c, &AnalyzeOptions { edit_subset })?;
            if report.dataset.interesting_intervals == 0 {
                eprintln!("warning: no interesting intervals; variability reported as 0");
            }
            let text = if tsv { report.to_tsv() } else { report.to_json() };
            emit(&output, text.as_bytes())
        }
        Command::Compare { input, variants, kind, output } => {
            let c = load(&input)?;
            let variants = if variants.is_empty() { Variant::SEPARATOR_BASED.to_vec() } else { variants };
            let ts = variants.iter().map(|&v| build_comparable(v, &c)).collect::<Result<Vec<_>, _>>()?;
            let kind = match kind {
                Kind::Hamming => DistanceKind::Hamming,
                Kind::Edit => DistanceKind::Edit,
            };
            emit(&output, distance_matrix(&ts, kind)?.to_tsv().as_bytes())
        }
        Command::Optimal { input, oracle, output } => {
            let c = load(&input)?;
            let opt = optimal_order(&c)?;
            if oracle {
                let (best, _) = brute_force_optimal_runs(&c, &OracleLimits::default())?;
                if best != opt.r_opt {
                    return Err(OracleMismatch(format!("optimal order gives {} runs, exhaustive search {best}", opt.r_opt)).into());
                }
            }
            let mut text = format!("permutation\t{}\nr_opt\t{}\n\nvariant\tr\n", opt.permutation, opt.r_opt);
            for v in Variant::ALL {
                text.push_str(&format!("{v}\t{}\n", runs_of(&build_comparable(v, &c)?.symbols)));
            }
            text.push_str(&format!("opt\t{}\n", opt.r_opt));
            emit(&output, text.as_bytes())
        }
        Command::Feasible { k, cap } => {
            let count = enumerate_feasible(k, cap)?;
            println!("{count}");
            Ok(())
        }
        Command::Invert { path, variant, rle, format, output } => {
            let raw = read_source(&path)?;
            let t = if rle {
                rle_decode(variant, &parse_rle(std::str::from_utf8(&raw).context("RLE input is not UTF-8")?)?)?
            } else {
                let text: &[u8] = raw.trim_ascii_end();
                Transform::from_text(variant, text)
            };
            let c = if variant.is_separator_based() {
                invert_separator_based(&t)?
            } else {
                let records = invert_ebwt(&t)?
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| SeqRecord::new((i + 1).to_string(), s))
                    .collect();
                Collection::new(records)?
            };
            let bytes = match format {
                Format::Fasta => c.to_fasta(),
                Format::Lines => c.to_lines(),
            };
            emit(&output, &bytes)
        }
        Command::Intervals { input, output } => {
            let c = load(&input)?;
            emit(&output, interesting_intervals(&c).to_tsv().as_bytes())
        }
        Command::Matrix { input, variant, normalized, output } => {
            let c = load(&input)?;
            let (m, _) = naive_rotation_sort(variant, &c, &OracleLimits::default())?;
            let m = if normalized { m.normalized() } else { m };
            emit(&output, m.render().as_bytes())
        }
        Command::Synth { seed, k, length, alphabet, mutation, suffix_bias, ancestor_len, output } => {
            let spec = GenSpec {
                seed,
                k,
                length: parse_length(&length).with_context(|| format!("bad length {length:?}"))?,
                alphabet: alphabet.into_bytes(),
                mutation_rate: mutation,
                suffix_bias,
                ancestor_len,
            };
            emit(&output, &generate(&spec)?.to_fasta())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<OracleMismatch>().is_some() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
