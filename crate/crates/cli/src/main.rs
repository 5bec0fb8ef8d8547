use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_limits::census::{census_parallel, tv_distance};
use graph_limits::fraction::{big_f64, big_string, fraction_f64, fraction_string, parse_fraction, Fraction};
use graph_limits::harness::{self, Family, SequenceSpec};
use graph_limits::io::{self as gio, GoodSetReport};
use graph_limits::isoperimetry::{self as iso, Status};
use graph_limits::spectral::{self, moment_global, moment_local};
use graph_limits::{proper_edge_coloring, EdgeColoring, Error, Graph, Result};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "graph-limits", version, about = "Local statistics, spectra and isoperimetry of bounded-degree graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cycle,
    Torus2d,
    RandomRegular,
    BinaryTree,
}

#[derive(Args)]
struct Output {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file in `n m d` format, `-` for stdin.
    graph: PathBuf,
    /// Override the degree bound from the file header.
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct ColoredInput {
    #[command(flatten)]
    input: GraphInput,
    /// Coloring file (`u v c` lines); Misra–Gries when omitted.
    #[arg(long)]
    coloring: Option<PathBuf>,
}

#[derive(Args)]
struct GoodSetArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Boundary ratio threshold, decimal or `a/b`.
    #[arg(long, value_parser = parse_eps)]
    eps: Fraction,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = iso::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct SequenceArgs {
    #[arg(long, value_enum, required_unless_present = "files")]
    family: Option<FamilyArg>,
    /// Comma-separated member sizes.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Graph files, one per member, instead of a generated family.
    #[arg(long, value_delimiter = ',', conflicts_with = "family")]
    files: Vec<PathBuf>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SequenceArgs {
    fn spec(&self) -> SequenceSpec {
        let family = match self.family {
            Some(FamilyArg::Cycle) => Family::Cycle,
            Some(FamilyArg::Torus2d) => Family::Torus2d,
            Some(FamilyArg::RandomRegular) => Family::RandomRegular,
            Some(FamilyArg::BinaryTree) => Family::BinaryTree,
            None => Family::FromFiles(self.files.clone()),
        };
        let spec = SequenceSpec::new(family, self.sizes.clone(), self.seed);
        match self.d {
            Some(d) => spec.with_d(d),
            None => spec,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate one graph of a family.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the family's coloring here.
        #[arg(long)]
        coloring_out: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Proper edge coloring with at most d + 1 colors.
    Color {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of radius-r colored balls.
    Census {
        #[command(flatten)]
        input: ColoredInput,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Total variation distance between two census files.
    Tv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Laplacian eigenvalues (csv) or their histogram (json).
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 20)]
        bins: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Exact moments Tr(Δᵖ)/n, computed globally and from the census.
    Moments {
        #[command(flatten)]
        input: ColoredInput,
        /// Highest power.
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Fraction of eigenvalues at most delta.
    Sfrac {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cheeger constant (exact for n ≤ 18, otherwise a sweep bound).
    Cheeger {
        #[command(flatten)]
        input: GraphInput,
        /// Always use the Fiedler sweep.
        #[arg(long)]
        sweep: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected sets of size ≤ k with boundary ratio ≤ eps.
    Goodsets {
        #[command(flatten)]
        args: GoodSetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Disjoint family of good sets.
    Pack {
        #[command(flatten)]
        args: GoodSetArgs,
        /// Maximum-cardinality family instead of greedy.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census TV distances along a sequence.
    Converge {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Spectra, histograms and moments along a sequence.
    Ids {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long, default_value_t = 20)]
        bins: usize,
        /// Highest moment power.
        #[arg(long, default_value_t = 4)]
        p: usize,
        /// Comma-separated thresholds for s(G, δ).
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        delta: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Small eigenvalues against good-set packings along a sequence.
    Thm2 {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        delta: f64,
        #[arg(long, value_parser = parse_eps)]
        eps: Fraction,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = iso::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_eps(s: &str) -> std::result::Result<Fraction, String> {
    parse_fraction(s).map_err(|e| e.to_string())
}

fn reader(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(gio::open(path)?))
    }
}

fn writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(p) => Ok(Box::new(gio::create(p)?)),
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    gio::read_graph(reader(&input.graph)?, input.d)
}

fn load_colored(input: &ColoredInput) -> Result<(Graph, EdgeColoring)> {
    let g = load_graph(&input.input)?;
    let col = match &input.coloring {
        Some(path) => gio::read_coloring(reader(path)?, &g)?,
        None => proper_edge_coloring(&g),
    };
    Ok((g, col))
}

fn emit_json<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<()> {
    let mut w = writer(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn emit_csv(out: &Option<PathBuf>, header: &str, rows: &[String]) -> Result<()> {
    let mut w = writer(out)?;
    writeln!(w, "{header}")?;
    for row in rows {
        writeln!(w, "{row}")?;
    }
    w.flush()?;
    Ok(())
}

fn budget_check(status: Status, budget: u64) -> Result<()> {
    match status {
        Status::Complete => Ok(()),
        Status::BudgetExceeded => Err(Error::BudgetExceeded { budget }),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            family,
            size,
            d,
            seed,
            coloring_out,
            out,
        } => {
            let args = SequenceArgs {
                family: Some(family),
                sizes: vec![size],
                files: Vec::new(),
                d,
                seed,
            };
            let (g, col) = harness::generate(&args.spec(), 0)?;
            let mut w = writer(&out)?;
            gio::write_graph(&mut w, &g)?;
            w.flush()?;
            if let Some(path) = coloring_out {
                let mut w = gio::create(&path)?;
                gio::write_coloring(&mut w, &g, &col)?;
                w.flush()?;
            }
        }
        Command::Color { input, out } => {
            let g = load_graph(&input)?;
            let col = proper_edge_coloring(&g);
            col.validate(&g).map_err(|e| Error::CheckFailed(e.to_string()))?;
            let mut w = writer(&out)?;
            gio::write_coloring(&mut w, &g, &col)?;
            w.flush()?;
        }
        Command::Census { input, r, out } => {
            let (g, col) = load_colored(&input)?;
            let c = census_parallel(&g, &col, r);
            let mut w = writer(&out)?;
            writeln!(w, "{}", gio::census_to_json(&c)?)?;
            w.flush()?;
        }
        Command::Tv { a, b, out } => {
            let read = |p: &Path| -> Result<_> {
                let s = std::fs::read_to_string(p)
                    .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                gio::census_from_json(&s)
            };
            let t = tv_distance(&read(&a)?, &read(&b)?)?;
            emit_json(&out, &json!({ "tv": big_string(&t), "tv_float": big_f64(&t) }))?;
        }
        Command::Spectrum {
            input,
            bins,
            output,
        } => {
            let m = spectral::spectrum(&load_graph(&input)?)?;
            match output.format {
                Format::Csv => {
                    let mut w = writer(&output.out)?;
                    gio::write_spectrum_csv(&mut w, &m)?;
                    w.flush()?;
                }
                Format::Json => emit_json(&output.out, &spectral::ids_histogram(&m, bins)?)?,
            }
        }
        Command::Moments { input, p, output } => {
            let (g, col) = load_colored(&input)?;
            let mut rows = Vec::new();
            let mut mismatch = None;
            for q in 0..=p {
                let global = moment_global(&g, q);
                let local = moment_local(&g, &col, q)?;
                if global != local && mismatch.is_none() {
                    mismatch = Some(q);
                }
                rows.push((q, global, local));
            }
            match output.format {
                Format::Json => emit_json(
                    &output.out,
                    &rows
                        .iter()
                        .map(|(q, gl, lo)| {
                            json!({ "p": q, "global": big_string(gl), "local": big_string(lo), "equal": gl == lo })
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Csv => emit_csv(
                    &output.out,
                    "p,global,local,equal",
                    &rows
                        .iter()
                        .map(|(q, gl, lo)| format!("{q},{},{},{}", big_string(gl), big_string(lo), gl == lo))
                        .collect::<Vec<_>>(),
                )?,
            }
            if let Some(q) = mismatch {
                return Err(Error::CheckFailed(format!("local and global moments differ at p = {q}")));
            }
        }
        Command::Sfrac { input, delta, out } => {
            if delta.is_nan() || delta < 0.0 {
                return Err(Error::BadParams("delta must be non-negative".into()));
            }
            let s = spectral::s_fraction(&spectral::spectrum(&load_graph(&input)?)?, delta);
            emit_json(&out, &json!({ "delta": delta, "s": fraction_string(&s), "s_float": fraction_f64(&s) }))?;
        }
        Command::Cheeger { input, sweep, out } => {
            let g = load_graph(&input)?;
            let (cut, method) = if !sweep && g.n() <= iso::MAX_EXACT_CHEEGER {
                (iso::cheeger_exact(&g)?, "exact")
            } else {
                (iso::cheeger_sweep(&g)?, "sweep")
            };
            let check = iso::boundary_ratio(&g, &cut.witness)?;
            if check != cut.ratio {
                return Err(Error::CheckFailed("witness does not reproduce the ratio".into()));
            }
            emit_json(
                &out,
                &json!({ "method": method, "ratio": fraction_string(&cut.ratio), "ratio_float": fraction_f64(&cut.ratio), "witness": cut.witness }),
            )?;
        }
        Command::Goodsets { args, out } => {
            let g = load_graph(&args.input)?;
            let e = iso::enumerate_good_sets(&g, args.eps, args.k, args.budget)?;
            emit_json(
                &out,
                &json!({
                    "eps": fraction_string(&args.eps),
                    "k": args.k,
                    "n": g.n(),
                    "visited": e.visited,
                    "status": e.status,
                    "h_cover": fraction_string(&iso::covered_fraction(g.n(), &e.sets)),
                    "sets": e.sets,
                }),
            )?;
            budget_check(e.status, args.budget)?;
        }
        Command::Pack { args, exact, out } => {
            let g = load_graph(&args.input)?;
            let e = iso::enumerate_good_sets(&g, args.eps, args.k, args.budget)?;
            let h_cover = iso::covered_fraction(g.n(), &e.sets);
            let family = if exact {
                iso::pack_exact(&g, args.eps, args.k, args.budget)?
            } else {
                iso::pack_greedy(&g, args.eps, args.k, args.budget)?
            };
            if !family.disjoint {
                return Err(Error::CheckFailed("packing is not disjoint".into()));
            }
            emit_json(&out, &GoodSetReport::new(args.eps, args.k, g.n(), h_cover, &family))?;
            budget_check(e.status, args.budget)?;
        }
        Command::Converge { seq, r, output } => {
            let report = harness::run_convergence(&seq.spec(), r)?;
            match output.format {
                Format::Json => emit_json(&output.out, &report)?,
                Format::Csv => emit_csv(
                    &output.out,
                    "member,n,classes,tv_to_next,plateau",
                    &report
                        .members
                        .iter()
                        .enumerate()
                        .map(|(i, m)| {
                            let next = report.consecutive.get(i).map_or(String::new(), |t| t.to_string());
                            let flat = report.plateau.get(i).map_or(String::new(), |p| p.to_string());
                            format!("{i},{},{},{next},{flat}", m.member.n, m.classes)
                        })
                        .collect::<Vec<_>>(),
                )?,
            }
        }
        Command::Ids {
            seq,
            bins,
            p,
            delta,
            output,
        } => {
            let report = harness::run_ids(&seq.spec(), bins, p, &delta)?;
            match output.format {
                Format::Json => emit_json(&output.out, &report)?,
                Format::Csv => emit_csv(
                    &output.out,
                    "member,n,p,global,local,equal,spectral",
                    &report
                        .members
                        .iter()
                        .flat_map(|m| {
                            m.moments.iter().map(move |row| {
                                format!(
                                    "{},{},{},{},{},{},{:.16e}",
                                    m.member.index,
                                    m.member.n,
                                    row.p,
                                    big_string(&row.global),
                                    big_string(&row.local),
                                    row.equal,
                                    row.spectral
                                )
                            })
                        })
                        .collect::<Vec<_>>(),
                )?,
            }
            if !report.moments_agree {
                return Err(Error::CheckFailed("local and global moments differ".into()));
            }
        }
        Command::Thm2 {
            seq,
            delta,
            eps,
            k,
            budget,
            output,
        } => {
            let report = harness::run_theorem2(&seq.spec(), delta, eps, k, budget)?;
            match output.format {
                Format::Json => emit_json(&output.out, &report)?,
                Format::Csv => emit_csv(
                    &output.out,
                    "n,s,h_cover,m_norm,m_count,status",
                    &report
                        .rows
                        .iter()
                        .map(|r| {
                            format!(
                                "{},{},{},{},{},{}",
                                r.member.n,
                                fraction_string(&r.s),
                                fraction_string(&r.h_cover),
                                fraction_string(&r.m_norm),
                                r.m_count,
                                match r.status {
                                    Status::Complete => "complete",
                                    Status::BudgetExceeded => "budget_exceeded",
                                }
                            )
                        })
                        .collect::<Vec<_>>(),
                )?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
