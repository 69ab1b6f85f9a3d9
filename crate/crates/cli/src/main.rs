use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use isodual::sweep::PairSummary;
use isodual::{
    alexander_dual, build_l, enumerate_hom, generate_posets, minimal_covers, run_sweep,
    verify_pair, Ideal, Limits, Poset, SweepConfig,
};
use serde::Serialize;

/// Isotone-map ideals L(P,Q), their Alexander duals, and the classification
/// of when the dual of L(P,Q) is L(Q,P) with indices swapped.
///
/// Posets are given as inline JSON ({"n":3,"covers":[[2,0],[2,1]]}), as a path
/// to a JSON file, or by name: Cn (chain), An (antichain), V, Lambda, N.
#[derive(Parser, Debug)]
#[command(name = "isodual", version)]
struct Cli {
    /// Largest poset size for `sweep` (default 4); also raises the `gen` bound.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Smallest poset size for `sweep`.
    #[arg(long, global = true, default_value_t = 1)]
    min_n: usize,

    /// Maximum number of isotone maps per enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().hom_cap)]
    hom_cap: usize,

    /// Maximum number of minimal covers per dualization.
    #[arg(long, global = true, default_value_t = Limits::default().cover_cap)]
    cover_cap: usize,

    /// Worker threads for `sweep`.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report format for `sweep`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One poset per isomorphism class of n-element posets, one JSON per line.
    Gen { n: usize },
    /// All isotone maps P -> Q.
    Hom { p: String, q: String },
    /// The ideal L(P,Q).
    Ideal { p: String, q: String },
    /// Alexander dual of L(P,Q), or of an ideal given with --ideal.
    Dual {
        p: Option<String>,
        q: Option<String>,
        /// Ideal JSON (inline or file) to dualize instead of L(P,Q).
        #[arg(long, conflicts_with_all = ["p", "q"])]
        ideal: Option<String>,
        /// Print the minimal covers as a JSON array instead of the dual ideal.
        #[arg(long)]
        covers: bool,
    },
    /// Predicted versus computed duality for one pair.
    Check { p: String, q: String },
    /// Verify every pair of small posets.
    Sweep,
}

#[derive(Serialize)]
struct HomListing<'a> {
    #[serde(rename = "P")]
    p: &'a Poset,
    #[serde(rename = "Q")]
    q: &'a Poset,
    maps: Vec<&'a [usize]>,
}

const EXIT_INPUT: u8 = 1;
const EXIT_DISAGREE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_DISAGREE),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        let defaults = Limits::default();
        Limits {
            hom_cap: self.hom_cap,
            cover_cap: self.cover_cap,
            generate_max_n: defaults.generate_max_n.max(self.max_n.unwrap_or(0)),
            ..defaults
        }
    }

    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

/// Returns `Ok(false)` when a prediction disagrees with computation.
fn run(cli: &Cli) -> Result<bool> {
    let limits = cli.limits();
    let mut out = cli.writer()?;
    let mut consistent = true;
    match &cli.command {
        Command::Gen { n } => {
            for p in generate_posets(*n, limits.generate_max_n)? {
                writeln!(out, "{}", serde_json::to_string(&p)?)?;
            }
        }
        Command::Hom { p, q } => {
            let (p, q) = (parse_poset(p)?, parse_poset(q)?);
            let homs = enumerate_hom(&p, &q, limits.hom_cap)?;
            let maps: Vec<&[usize]> = homs.iter().map(|m| m.image()).collect();
            let listing = HomListing { p: &p, q: &q, maps };
            writeln!(out, "{}", serde_json::to_string(&listing)?)?;
        }
        Command::Ideal { p, q } => {
            let (p, q) = (parse_poset(p)?, parse_poset(q)?);
            writeln!(
                out,
                "{}",
                serde_json::to_string(&build_l(&p, &q, limits.hom_cap)?)?
            )?;
        }
        Command::Dual {
            p,
            q,
            ideal,
            covers,
        } => {
            let ideal = match (ideal, p, q) {
                (Some(text), _, _) => parse_ideal(text)?,
                (None, Some(p), Some(q)) => {
                    build_l(&parse_poset(p)?, &parse_poset(q)?, limits.hom_cap)?
                }
                _ => bail!("dual needs two posets or --ideal"),
            };
            if *covers {
                let list = minimal_covers(&ideal, limits.cover_cap)?;
                writeln!(out, "{}", serde_json::to_string(&list)?)?;
            } else {
                let dual = alexander_dual(&ideal, limits.cover_cap)?;
                writeln!(out, "{}", serde_json::to_string(&dual)?)?;
            }
        }
        Command::Check { p, q } => {
            let (p, q) = (parse_poset(p)?, parse_poset(q)?);
            let report = verify_pair(&p, &q, &limits)?;
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            consistent = report.is_consistent();
        }
        Command::Sweep => {
            let config = SweepConfig {
                min_n: cli.min_n,
                max_n: cli.max_n.unwrap_or(4),
                workers: cli.workers,
                limits,
            };
            let report = run_sweep(&config)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                Format::Csv => write_csv(&mut out, &report.pairs)?,
            }
            eprintln!(
                "checked {} pairs: {} agree, {} disagree ({:.2}s)",
                report.pairs_checked,
                report.agreements,
                report.disagreements.len(),
                report.wall_time_secs
            );
            consistent = report.is_clean();
        }
    }
    out.flush()?;
    Ok(consistent)
}

fn write_csv(out: &mut dyn Write, pairs: &[PairSummary]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "p_index",
        "q_index",
        "p_size",
        "q_size",
        "predicted",
        "clause",
        "computed",
        "agree",
        "witness_verified",
    ])?;
    for s in pairs {
        w.write_record([
            s.p_index.to_string(),
            s.q_index.to_string(),
            s.p_size.to_string(),
            s.q_size.to_string(),
            s.predicted.to_string(),
            s.clause.to_string(),
            s.computed.to_string(),
            s.agree.to_string(),
            s.witness_verified.map_or(String::new(), |v| v.to_string()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Inline JSON, a named poset, or a path to a JSON file.
fn parse_poset(arg: &str) -> Result<Poset> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return serde_json::from_str(arg).with_context(|| format!("invalid poset JSON: {arg}"));
    }
    if let Some(p) = named_poset(arg)? {
        return Ok(p);
    }
    let text =
        std::fs::read_to_string(arg).with_context(|| format!("cannot read poset file {arg}"))?;
    serde_json::from_str(&text).with_context(|| format!("invalid poset JSON in {arg}"))
}

fn named_poset(name: &str) -> Result<Option<Poset>> {
    let sized = |prefix: char| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    let poset = match name {
        "V" => Poset::new(3, &[(2, 0), (2, 1)])?,
        "Lambda" | "L" => Poset::new(3, &[(0, 2), (1, 2)])?,
        "N" => Poset::new(4, &[(0, 2), (1, 2), (1, 3)])?,
        _ => match (sized('C'), sized('A')) {
            (Some(n), _) => Poset::chain(n)?,
            (_, Some(n)) => Poset::antichain(n)?,
            _ => return Ok(None),
        },
    };
    Ok(Some(poset))
}

fn parse_ideal(arg: &str) -> Result<Ideal> {
    let arg = arg.trim();
    let text = if arg.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("cannot read ideal file {arg}"))?
    };
    serde_json::from_str(&text).context("invalid ideal JSON")
}
