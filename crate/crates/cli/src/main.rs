use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lgtw::appendix::{verify_appendix_a, verify_appendix_b, verify_appendix_c, CMode, GridSearchResult, Parity};
use lgtw::bounds::{
    bounds_report, improved_upper_construction, improved_upper_construction_path, tree_line_decomposition,
};
use lgtw::congestion::{
    cutwidth, min_path_congestion, min_tree_congestion, ordering_cutwidth, path_vertex_congestion, vertex_congestion,
    CongestionCertificate, Witness,
};
use lgtw::decomposition::{expand_to_line, line_to_graph_decomposition, normalize_line_decomposition, validate};
use lgtw::exact::{exact_pathwidth, exact_treewidth};
use lgtw::families::{generate, identify, sharp_embedding, FamilySpec};
use lgtw::graph::line_graph;
use lgtw::io::{parse_emb, parse_gr, parse_ord, parse_td, td_subject_hint, write_emb, write_gr, write_ord, write_td};
use lgtw::theorems::verify_theorems;
use lgtw::{Graph, Rational, Subject, TreeDecomposition};

#[derive(Parser)]
#[command(
    name = "lgtw",
    version,
    about = "Treewidth and pathwidth of line graphs via congestion"
)]
struct Cli {
    /// Cap on worker threads for parallel solvers.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print input sizes to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    /// Do not write witness files.
    #[arg(long, global = true)]
    no_witness: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one width or congestion measure exactly.
    Exact {
        measure: Measure,
        graph: PathBuf,
        /// Apply tw/pw to the line graph instead of the graph itself.
        #[arg(long)]
        line: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report every lower and upper bound on tw(L(G)) and pw(L(G)).
    Bounds {
        graph: PathBuf,
        /// Also compute the exact widths and check them against the bounds.
        #[arg(long)]
        exact: bool,
    },
    /// Build a decomposition of L(G).
    Construct {
        kind: ConstructKind,
        graph: PathBuf,
        /// Decomposition of G to start from; defaults to an optimal one.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Start from a path decomposition and keep the result a path.
        #[arg(long)]
        path: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Put a decomposition of L(G) into normal form.
    Normalize {
        td: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert between decomposition subjects.
    Transform {
        kind: TransformKind,
        td: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a member of a graph family.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Width of the known good ordering for a family member.
    Sharp {
        graph: PathBuf,
        /// Require the graph to be this family.
        #[arg(long)]
        family: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a .td, .emb or .ord file against a graph.
    Validate {
        file: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        /// Read a .td file as a decomposition of L(G).
        #[arg(long)]
        line: bool,
    },
    /// Numerical and exhaustive verifications.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Tw,
    Pw,
    Cw,
    Con,
    Pcon,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Expand,
    Improved,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    LgToG,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Grid searches behind the lower bounds.
    Appendix {
        part: AppendixPart,
        #[command(flatten)]
        opts: AppendixOpts,
    },
    /// Check the identities and bounds on every small graph.
    Theorems {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AppendixPart {
    A,
    B,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Full,
}

#[derive(Args)]
struct AppendixOpts {
    /// `p/q` or a decimal.
    #[arg(long, default_value = "1/10", value_parser = parse_rational)]
    s: Rational,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    parity: ParityArg,
    #[arg(long, default_value_t = 64)]
    resolution: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
    mode: ModeArg,
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("expected p/q or a decimal, found {s:?}");
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        if digits > 12 {
            return Err(bad());
        }
        let denom = 10i64.pow(digits);
        let whole: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let part: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        return Ok(Rational::new(whole * denom + part, denom));
    }
    let r: Rational = s.parse().map_err(|_| bad())?;
    Ok(r)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path, verbose: bool) -> Result<Graph> {
    let g = parse_gr(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    if verbose {
        eprintln!(
            "graph {}: n {} m {} max-degree {}",
            path.display(),
            g.vertex_count(),
            g.edge_count(),
            g.max_degree()
        );
    }
    Ok(g)
}

/// `graph.gr` becomes `graph.<tag>.<ext>` beside it.
fn sibling(input: &Path, tag: &str, ext: &str) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    input.with_file_name(format!("{stem}.{tag}.{ext}"))
}

struct Ctx {
    verbose: bool,
    no_witness: bool,
}

impl Ctx {
    fn witness(&self, path: PathBuf, contents: &str) -> Result<()> {
        if self.no_witness {
            return Ok(());
        }
        fs::write(&path, contents).with_context(|| format!("cannot write {}", path.display()))?;
        println!("witness {}", path.display());
        Ok(())
    }
}

fn certificate_file(c: &CongestionCertificate) -> (&'static str, String) {
    match &c.witness {
        Witness::Tree(e) => ("emb", write_emb(e)),
        Witness::Ordering(o) => ("ord", write_ord(o)),
    }
}

fn exact(ctx: &Ctx, measure: Measure, path: &Path, line: bool, output: Option<PathBuf>) -> Result<()> {
    let g = read_graph(path, ctx.verbose)?;
    let (name, tag) = match measure {
        Measure::Tw => ("tw", "tw"),
        Measure::Pw => ("pw", "pw"),
        Measure::Cw => ("cw", "cw"),
        Measure::Con => ("con", "con"),
        Measure::Pcon => ("pcon", "pcon"),
    };
    match measure {
        Measure::Tw | Measure::Pw => {
            let target = if line { line_graph(&g) } else { g.clone() };
            let (width, d) = if matches!(measure, Measure::Tw) {
                let r = exact_treewidth(&target)?;
                (r.width, r.decomposition)
            } else {
                let r = exact_pathwidth(&target)?;
                (r.width, r.decomposition.to_tree())
            };
            let d = if line {
                TreeDecomposition::new(Subject::Line, d.tree, d.bags)
            } else {
                d
            };
            println!("{}{} {width}", name, if line { "(L)" } else { "" });
            let tag = if line { format!("{tag}-line") } else { tag.to_string() };
            ctx.witness(
                output.unwrap_or_else(|| sibling(path, &tag, "td")),
                &write_td(&d, target.vertex_count()),
            )
        }
        Measure::Cw | Measure::Con | Measure::Pcon => {
            let c = match measure {
                Measure::Cw => cutwidth(&g)?,
                Measure::Con => min_tree_congestion(&g)?,
                _ => min_path_congestion(&g)?,
            };
            println!("{name} {}", c.value);
            let (ext, text) = certificate_file(&c);
            ctx.witness(output.unwrap_or_else(|| sibling(path, tag, ext)), &text)
        }
    }
}

fn load_td(path: &Path, subject: Subject) -> Result<TreeDecomposition> {
    let text = read(path)?;
    Ok(parse_td(&text, subject)
        .with_context(|| format!("in {}", path.display()))?
        .decomposition)
}

fn construct(
    ctx: &Ctx,
    kind: ConstructKind,
    path: &Path,
    td: Option<PathBuf>,
    as_path: bool,
    output: Option<PathBuf>,
) -> Result<()> {
    let g = read_graph(path, ctx.verbose)?;
    let start = || -> Result<TreeDecomposition> {
        Ok(match &td {
            Some(p) => load_td(p, Subject::Graph)?,
            None if as_path => exact_pathwidth(&g)?.decomposition.to_tree(),
            None => exact_treewidth(&g)?.decomposition,
        })
    };
    let (d, tag) = match kind {
        ConstructKind::Expand => (expand_to_line(&start()?, &g)?, "expand"),
        ConstructKind::Improved => {
            let input = start()?;
            let c = if as_path {
                let p = input
                    .as_path()
                    .context("--path needs a decomposition whose tree is a path numbered in order")?;
                improved_upper_construction_path(&g, &p)?
            } else {
                improved_upper_construction(&g, &input)?
            };
            println!(
                "closed-form {} ({:.4})",
                c.closed_form,
                lgtw::bounds::approx(c.closed_form)
            );
            if c.fallback {
                println!("fallback expansion");
            }
            (c.decomposition, "improved")
        }
        ConstructKind::Tree => (tree_line_decomposition(&g)?, "tree"),
    };
    let report = validate(&d, &g)?;
    if !report.ok() {
        bail!("internal error: constructed decomposition is invalid: {report}");
    }
    println!("width {}", d.width()?);
    ctx.witness(
        output.unwrap_or_else(|| sibling(path, tag, "td")),
        &write_td(&d, g.edge_count()),
    )
}

fn print_grid(r: &GridSearchResult) {
    let point: Vec<String> = r.point.iter().map(|x| x.to_string()).collect();
    println!("value {} ({:.6})", r.value, r.value_f64());
    println!("point ({})", point.join(", "));
    println!("closed-form {}", r.closed_form);
    println!("gap {}", r.gap);
    if let Some(c) = &r.corner {
        let point: Vec<String> = c.point.iter().map(|x| x.to_string()).collect();
        println!(
            "corner ({}) value {} gap {} {}",
            point.join(", "),
            c.value,
            c.gap,
            if c.feasible { "feasible" } else { "infeasible" }
        );
    }
    println!("resolution {}", r.resolution);
    println!("evaluated {}", r.evaluated);
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global()?;
    }
    let ctx = Ctx {
        verbose: cli.verbose,
        no_witness: cli.no_witness,
    };
    match cli.command {
        Command::Exact {
            measure,
            graph,
            line,
            output,
        } => exact(&ctx, measure, &graph, line, output)?,
        Command::Bounds { graph, exact } => {
            let g = read_graph(&graph, ctx.verbose)?;
            let report = bounds_report(&g, exact)?;
            print!("{report}");
            if exact {
                if let Err(e) = report.check() {
                    println!("violation {e}");
                    return Ok(false);
                }
            }
        }
        Command::Construct {
            kind,
            graph,
            td,
            path,
            output,
        } => construct(&ctx, kind, &graph, td, path, output)?,
        Command::Normalize { td, graph, output } => {
            let g = read_graph(&graph, ctx.verbose)?;
            let d = load_td(&td, Subject::Line)?;
            let nf = normalize_line_decomposition(&d, &g)?;
            println!("width {} -> {}", d.width()?, nf.decomposition.width()?);
            println!("nodes {} -> {}", d.node_count(), nf.decomposition.node_count());
            ctx.witness(
                output.unwrap_or_else(|| sibling(&td, "normal", "td")),
                &write_td(&nf.decomposition, g.edge_count()),
            )?;
        }
        Command::Transform {
            kind: TransformKind::LgToG,
            td,
            graph,
            output,
        } => {
            let g = read_graph(&graph, ctx.verbose)?;
            let d = load_td(&td, Subject::Line)?;
            let back = line_to_graph_decomposition(&d, &g)?;
            println!("width {} -> {}", d.width()?, back.width()?);
            ctx.witness(
                output.unwrap_or_else(|| sibling(&td, "graph", "td")),
                &write_td(&back, g.vertex_count()),
            )?;
        }
        Command::Gen { family, params, output } => {
            let spec = FamilySpec::from_parts(&family, &params)?;
            let g = generate(&spec)?;
            fs::write(&output, write_gr(&g)).with_context(|| format!("cannot write {}", output.display()))?;
            println!("{spec}: n {} m {}", g.vertex_count(), g.edge_count());
        }
        Command::Sharp { graph, family, output } => {
            let g = read_graph(&graph, ctx.verbose)?;
            let spec = identify(&g).context("graph is not a labelled member of a supported family")?;
            if let Some(name) = family {
                if spec.name() != name {
                    bail!("graph is {spec}, not {name}");
                }
            }
            let s = sharp_embedding(&spec)?;
            println!("family {spec}");
            println!("width {}", s.width);
            println!(
                "closed-form {}{}",
                s.closed_form,
                if s.exact_closed_form { "" } else { " (upper bound)" }
            );
            ctx.witness(
                output.unwrap_or_else(|| sibling(&graph, "sharp", "ord")),
                &write_ord(&s.ordering),
            )?;
        }
        Command::Validate { file, graph, line } => {
            let g = read_graph(&graph, ctx.verbose)?;
            let text = read(&file)?;
            let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
            match ext {
                "td" => {
                    let subject = if line {
                        Subject::Line
                    } else {
                        td_subject_hint(&text).unwrap_or(Subject::Graph)
                    };
                    let d = parse_td(&text, subject)?.decomposition;
                    let report = validate(&d, &g)?;
                    if !report.ok() {
                        println!("invalid {report}");
                        return Ok(false);
                    }
                    println!("valid width {}", d.width()?);
                }
                "emb" => {
                    let e = parse_emb(&text)?;
                    println!("valid congestion {}", vertex_congestion(&e, &g)?.value);
                }
                "ord" => {
                    let o = parse_ord(&text, g.vertex_count())?;
                    println!(
                        "valid pcon {} cw {}",
                        path_vertex_congestion(&o, &g)?,
                        ordering_cutwidth(&o, &g)?
                    );
                }
                other => bail!("unknown witness extension {other:?}; expected td, emb or ord"),
            }
        }
        Command::Verify { what } => match what {
            VerifyCommand::Appendix { part, opts } => {
                let r = match part {
                    AppendixPart::A => verify_appendix_a(opts.s, opts.resolution)?,
                    AppendixPart::B => {
                        let parity = match opts.parity {
                            ParityArg::Even => Parity::Even,
                            ParityArg::Odd => Parity::Odd,
                        };
                        verify_appendix_b(opts.s, parity, opts.resolution)?
                    }
                    AppendixPart::C => {
                        let mode = match opts.mode {
                            ModeArg::Fast => CMode::Fast,
                            ModeArg::Full => CMode::Full,
                        };
                        verify_appendix_c(opts.resolution, mode)?
                    }
                };
                print_grid(&r);
            }
            VerifyCommand::Theorems { max_n, random, seed } => {
                let r = verify_theorems(max_n, random, seed)?;
                print!("{r}");
                return Ok(r.ok());
            }
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
