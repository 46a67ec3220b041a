use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use kmgrowth::formats::{self, AlgebraSpec, FitReport, FormatError, SeriesFile};
use kmgrowth::verify;
use kmgrowth_core::catalog::{self, KnownType};
use kmgrowth_core::orbit::{self, OrbitBfs, Strategy};
use kmgrowth_core::{lattice, ratfit, GeneralizedCartanMatrix, SubsetJ, TruncatedSeries, WeightVector};

#[derive(Parser)]
#[command(name = "kmgrowth", version, about = "Growth series of Kac–Moody Weyl groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré series `Σ |W^k| t^k`.
    Poincare {
        /// Built-in name (A4, paperH, affD4, ...) or algebra spec file.
        #[arg(long)]
        algebra: String,
        /// Truncation order; may be omitted for finite types.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Frontier)]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value_t = Method::Bfs)]
        method: Method,
        /// Write every element as JSON Lines {length, image, word}.
        #[arg(long, value_name = "PATH")]
        dump_elements: Option<PathBuf>,
        /// Cap on stored weights per level [default: 8 GiB worth for the rank].
        #[arg(long)]
        max_frontier: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Minimal coset representatives of a parabolic subgroup, by length.
    Cosets {
        #[arg(long)]
        algebra: String,
        /// Generators of the parabolic subgroup, e.g. 1,2,3,4 (empty: trivial subgroup).
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Emit each representative as JSON Lines {length, image, word}.
        #[arg(long)]
        list_words: bool,
        #[arg(long)]
        max_frontier: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Rational form of a truncated series.
    Fit {
        /// Series file {"coeffs": [...], "order": N}.
        #[arg(long)]
        series: PathBuf,
        /// Fixed numerator: finite type name (its Poincaré polynomial) or polynomial file.
        #[arg(long, requires = "dmax")]
        numerator: Option<String>,
        #[arg(long, conflicts_with_all = ["dnum_max", "dden_max"])]
        dmax: Option<usize>,
        #[arg(long, requires = "dden_max")]
        dnum_max: Option<usize>,
        #[arg(long, requires = "dnum_max")]
        dden_max: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run named reproduction cases; JSON Lines, exit 0 iff all pass.
    Verify {
        /// Case name or `all`; may be repeated.
        #[arg(long = "case", default_value = "all")]
        cases: Vec<String>,
        /// Cases run concurrently.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Reorder generators: new generator k is old generator ORDER[k].
    Relabel {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<usize>,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Principal submatrix on a subset of generators.
    Sub {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Apply one simple reflection to a weight.
    Reflect {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weight: Vec<i64>,
        #[arg(long)]
        generator: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Γ = ρ − image in the simple-root basis.
    Gamma {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        image: Vec<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Lex-least reduced word carrying the seed (ρ by default) to an image.
    Word {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        image: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seed: Vec<i64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Frontier,
    Global,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Frontier => Strategy::FrontierSign,
            StrategyArg::Global => Strategy::GlobalDedup,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Bfs,
    Formula,
    Bott,
}

/// Errors that map to exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct UsageError(String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn algebra(source: &str) -> anyhow::Result<GeneralizedCartanMatrix> {
    formats::resolve_algebra(source).map_err(source_error)
}

/// Unreadable, unparsable or invalid input files are usage errors.
fn source_error(e: FormatError) -> anyhow::Error {
    usage(e.to_string())
}

fn subset_of(a: &GeneralizedCartanMatrix, indices: Vec<usize>) -> anyhow::Result<SubsetJ> {
    SubsetJ::from_unsorted(indices, a.rank()).map_err(|e| usage(format!("--subset: {e}")))
}

struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    fn open(path: Option<&PathBuf>) -> anyhow::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Self { out })
    }

    fn json(&mut self, value: &impl serde::Serialize, pretty: bool) -> anyhow::Result<()> {
        if pretty {
            serde_json::to_writer_pretty(&mut self.out, value)?;
        } else {
            serde_json::to_writer(&mut self.out, value)?;
        }
        self.out.write_all(b"\n")?;
        Ok(())
    }

    fn text(&mut self, s: &str) -> anyhow::Result<()> {
        self.out.write_all(s.as_bytes())?;
        Ok(())
    }

    fn finish(mut self) -> anyhow::Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

fn series_table(coeffs: &[i64]) -> String {
    let mut s = String::from("degree  count\n");
    for (k, c) in coeffs.iter().enumerate() {
        let _ = writeln!(s, "{k:>6}  {c}");
    }
    s
}

fn emit_series(sink: &mut Sink, file: &SeriesFile, pretty: bool) -> anyhow::Result<()> {
    if pretty {
        sink.text(&series_table(&file.coeffs))
    } else {
        sink.json(file, false)
    }
}

fn require_degree(max_degree: Option<usize>, what: &str) -> anyhow::Result<usize> {
    max_degree.ok_or_else(|| usage(format!("--max-degree is required for {what}")))
}

fn enumeration(
    a: &GeneralizedCartanMatrix,
    seed: WeightVector,
    max_degree: Option<usize>,
    strategy: Strategy,
    words: bool,
    max_frontier: Option<usize>,
) -> anyhow::Result<orbit::OrbitLevels> {
    if max_degree.is_none() && !matches!(catalog::identify(a), Some(KnownType::Finite(_))) {
        return Err(usage(format!(
            "{} is not recognised as finite; --max-degree is required",
            catalog::describe(a)
        )));
    }
    let mut bfs = OrbitBfs::new(a, seed).max_level_opt(max_degree).strategy(strategy).collect_words(words);
    if let Some(limit) = max_frontier {
        bfs = bfs.max_frontier(limit);
    }
    Ok(bfs.run()?)
}

fn levels_to_file(levels: &orbit::OrbitLevels, max_degree: Option<usize>) -> SeriesFile {
    match max_degree {
        Some(order) => SeriesFile::from_series(&levels.series(order)),
        None => SeriesFile::from_polynomial(&levels.series(levels.counts.len() - 1).to_polynomial()),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Poincare {
            algebra: src,
            max_degree,
            strategy,
            method,
            dump_elements,
            max_frontier,
            output,
        } => {
            let a = algebra(&src)?;
            let file = match method {
                Method::Bfs => {
                    let levels = enumeration(
                        &a,
                        lattice::weyl_vector(&a),
                        max_degree,
                        strategy.into(),
                        dump_elements.is_some(),
                        max_frontier,
                    )?;
                    if let Some(path) = &dump_elements {
                        let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
                        let mut w = BufWriter::new(f);
                        formats::write_elements(&levels, &mut w)?;
                        w.flush()?;
                    }
                    levels_to_file(&levels, max_degree)
                }
                Method::Formula => {
                    let Some(KnownType::Finite(t)) = catalog::identify(&a) else {
                        return Err(usage(format!("--method formula needs a finite type, got {}", catalog::describe(&a))));
                    };
                    let p = t.poincare_polynomial();
                    match max_degree {
                        Some(order) => SeriesFile::from_series(&p.to_series(order)),
                        None => SeriesFile::from_polynomial(&p),
                    }
                }
                Method::Bott => {
                    let Some(KnownType::Affine(t)) = catalog::identify(&a) else {
                        return Err(usage(format!("--method bott needs an affine type, got {}", catalog::describe(&a))));
                    };
                    let order = require_degree(max_degree, "--method bott")?;
                    SeriesFile::from_series(&t.bott_series(order)?)
                }
            };
            let mut sink = Sink::open(output.out.as_ref())?;
            emit_series(&mut sink, &file, output.pretty)?;
            sink.finish()?;
        }
        Command::Cosets {
            algebra: src,
            subset,
            max_degree,
            list_words,
            max_frontier,
            output,
        } => {
            let a = algebra(&src)?;
            let j = subset_of(&a, subset)?;
            let seed = WeightVector::parabolic_seed(a.rank(), &j);
            // finiteness of the quotient is not decided up front; a bound is required
            // unless the whole group is finite
            let levels = enumeration(&a, seed, max_degree, Strategy::FrontierSign, list_words, max_frontier)?;
            let mut sink = Sink::open(output.out.as_ref())?;
            if list_words {
                let mut buf = Vec::new();
                formats::write_elements(&levels, &mut buf)?;
                sink.text(std::str::from_utf8(&buf)?)?;
            } else {
                emit_series(&mut sink, &levels_to_file(&levels, max_degree), output.pretty)?;
            }
            sink.finish()?;
        }
        Command::Fit {
            series,
            numerator,
            dmax,
            dnum_max,
            dden_max,
            output,
        } => {
            let s: TruncatedSeries = formats::read_series(&series).map_err(source_error)?;
            let fit = match (numerator, dmax, dnum_max, dden_max) {
                (Some(p), Some(d), None, None) => {
                    let p = formats::resolve_polynomial(&p).map_err(source_error)?;
                    ratfit::recover_denominator(&s, &p, d)?
                }
                (None, None, Some(dn), Some(dd)) => ratfit::recover_rational(&s, dn, dd)?,
                _ => return Err(usage("give either --numerator with --dmax, or --dnum-max with --dden-max")),
            };
            let report = FitReport::from(&fit);
            let mut sink = Sink::open(output.out.as_ref())?;
            if output.pretty {
                sink.text(&format!(
                    "numerator:   {:?}\ndenominator: {:?}\nverified to: t^{}\nslack:       {}\n",
                    report.numerator, report.denominator, report.verified_to, report.slack
                ))?;
            } else {
                sink.json(&report, false)?;
            }
            sink.finish()?;
        }
        Command::Verify { cases, threads, output } => {
            let mut names = Vec::new();
            for c in cases {
                if c == "all" {
                    names.extend(verify::CASES.iter().map(|s| s.to_string()));
                } else if verify::CASES.contains(&c.as_str()) {
                    names.push(c);
                } else {
                    return Err(usage(verify::VerifyError::UnknownCase(c).to_string()));
                }
            }
            let mut sink = Sink::open(output.out.as_ref())?;
            let mut all_pass = true;
            for (name, result) in names.iter().zip(verify::run_cases(&names, threads)) {
                match result {
                    Ok(rep) => {
                        all_pass &= rep.pass;
                        if output.pretty {
                            let verdict = if rep.pass { "PASS" } else { "FAIL" };
                            let failed = rep.failed_checks().count();
                            sink.text(&format!(
                                "{verdict}  {:<16} {:>4} checks, {failed} failed, {} ms\n",
                                rep.case,
                                rep.checks.len(),
                                rep.wall_time_ms
                            ))?;
                        } else {
                            sink.json(&rep, false)?;
                        }
                    }
                    Err(e) => {
                        all_pass = false;
                        eprintln!("kmgrowth: case {name}: {e}");
                    }
                }
            }
            sink.finish()?;
            return Ok(all_pass);
        }
        Command::Relabel {
            algebra: src,
            order,
            name,
            output,
        } => {
            let a = algebra(&src)?;
            let b = lattice::relabel(&a, &order).map_err(|e| usage(format!("--order: {e}")))?;
            let b = b.with_name(name.unwrap_or_else(|| format!("{}-relabelled", catalog::describe(&a))));
            let mut sink = Sink::open(output.out.as_ref())?;
            sink.json(&AlgebraSpec::from_gcm(&b), output.pretty)?;
            sink.finish()?;
        }
        Command::Sub {
            algebra: src,
            subset,
            name,
            output,
        } => {
            let a = algebra(&src)?;
            let j = subset_of(&a, subset)?;
            let b = lattice::sub_gcm(&a, &j).map_err(|e| usage(format!("--subset: {e}")))?;
            let name = name.unwrap_or_else(|| catalog::describe(&b));
            let mut sink = Sink::open(output.out.as_ref())?;
            sink.json(&AlgebraSpec::from_gcm(&b.with_name(name)), output.pretty)?;
            sink.finish()?;
        }
        Command::Reflect {
            algebra: src,
            weight,
            generator,
            output,
        } => {
            let a = algebra(&src)?;
            let y = lattice::reflect(&a, &WeightVector(weight), generator).map_err(|e| usage(e.to_string()))?;
            let mut sink = Sink::open(output.out.as_ref())?;
            sink.json(&y.0, output.pretty)?;
            sink.finish()?;
        }
        Command::Gamma {
            algebra: src,
            image,
            output,
        } => {
            let a = algebra(&src)?;
            let g = lattice::gamma_of(&a, &WeightVector(image)).map_err(|e| usage(e.to_string()))?;
            let coords = g
                .to_integers()
                .ok_or_else(|| anyhow!("Γ is not integral: {:?}", g.0.iter().map(|c| c.to_string()).collect::<Vec<_>>()))?;
            let mut sink = Sink::open(output.out.as_ref())?;
            sink.json(&coords, output.pretty)?;
            sink.finish()?;
        }
        Command::Word {
            algebra: src,
            image,
            seed,
            output,
        } => {
            let a = algebra(&src)?;
            let seed = if seed.is_empty() { lattice::weyl_vector(&a) } else { WeightVector(seed) };
            let w = orbit::canonical_word(&a, &WeightVector(image), &seed).map_err(|e| usage(e.to_string()))?;
            let mut sink = Sink::open(output.out.as_ref())?;
            sink.json(&w.0, output.pretty)?;
            sink.finish()?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("kmgrowth: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
