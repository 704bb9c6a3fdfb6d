use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use logtw::error::CliError;
use logtw::families::{default_t, generate};
use logtw::format::{parse_gr, parse_td, write_gr, write_report, write_td, GrFile};
use logtw::{bench, corpus};
use logtw_core::builder::{decompose, BuildOptions, ClassCheck};
use logtw_core::detect::{self, Caps, Certificate, Kind};
use logtw_core::treedec::{
    solve_chromatic, solve_dominating_set, solve_q_coloring, solve_stable_set, solve_vertex_cover,
};
use logtw_core::{Graph, TreeDecomposition, VertexSet};

#[derive(Parser)]
#[command(name = "logtw", version, about = "Tree decompositions for theta-, pyramid- and prism-free graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a named graph in .gr format.
    Gen {
        family: String,
        args: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Look for a forbidden structure.
    Detect {
        input: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        /// Clique size for `clique`, class parameter for `class`.
        #[arg(short, long)]
        t: Option<usize>,
        #[arg(long, value_parser = parse_caps)]
        caps: Option<Caps>,
    },
    /// Build a decomposition and its report.
    Decompose {
        input: PathBuf,
        /// Defaults to a `c t` comment in the input, else the clique number plus one.
        #[arg(short, long)]
        t: Option<usize>,
        #[arg(long)]
        out_td: Option<PathBuf>,
        #[arg(long)]
        out_report: Option<PathBuf>,
        /// Decompose inputs outside the class or beyond the detection limits.
        #[arg(long)]
        uncertified_ok: bool,
        /// `MAX_ATOM[,HOLE_STEPS]` for the detectors.
        #[arg(long, value_parser = parse_caps)]
        caps: Option<Caps>,
        /// Largest piece solved by exact search.
        #[arg(long)]
        exact_cap: Option<usize>,
    },
    /// Check a decomposition against a graph.
    Verify { graph: PathBuf, td: PathBuf },
    /// Solve an optimisation problem by dynamic programming over a decomposition.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(short, long)]
        q: Option<usize>,
    },
    /// Tabulate width, bound and certification.
    Bench {
        /// Run on the .gr files of a directory instead of samples.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = [16, 32, 64, 128, 256])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        seeds: u64,
    },
    /// Write the test corpus.
    Corpus {
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Theta,
    Pyramid,
    Prism,
    PinchedPrism,
    Cube,
    Clique,
    Hubs,
    Class,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    StableSet,
    VertexCover,
    DominatingSet,
    Coloring,
    QColoring,
}

fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    let mut it = s.split(',');
    if let Some(m) = it.next() {
        caps.max_n = m.parse().map_err(|_| format!("bad atom limit {m:?}"))?;
    }
    if let Some(h) = it.next() {
        caps.hole_steps = h.parse().map_err(|_| format!("bad hole step limit {h:?}"))?;
    }
    if it.next().is_some() {
        return Err("expected MAX_ATOM[,HOLE_STEPS]".into());
    }
    Ok(caps)
}

fn read_graph(p: &Path) -> Result<GrFile, CliError> {
    let text = std::fs::read_to_string(p).map_err(|e| CliError::Other(format!("{}: {e}", p.display())))?;
    parse_gr(&text)
}

fn read_td(p: &Path) -> Result<TreeDecomposition, CliError> {
    let text = std::fs::read_to_string(p).map_err(|e| CliError::Other(format!("{}: {e}", p.display())))?;
    parse_td(&text)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn one_based(x: impl IntoIterator<Item = usize>) -> String {
    x.into_iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn describe(c: &Certificate) -> String {
    format!("{} {}", c.kind().name(), one_based(&c.vertices()))
}

fn check(g: &Graph, td: &TreeDecomposition) -> Result<(), CliError> {
    td.validate(g).map_err(|v| CliError::Validation(v.to_string()))
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Gen { family, args, seed, out } => {
            let g = generate(&family, &args, seed)?;
            let mut comments = vec![format!("family {} {}", family, args.join(" ")).trim_end().to_string()];
            if matches!(family.as_str(), "random" | "class") {
                comments.push(format!("seed {seed}"));
            }
            let t = if family == "class" { args[2].parse().unwrap_or(3) } else { default_t(&g) };
            comments.push(format!("t {t}"));
            emit(out.as_deref(), &write_gr(&g, &comments))
        }
        Cmd::Detect { input, what, t, caps } => {
            let g = read_graph(&input)?.graph;
            let caps = caps.unwrap_or_default();
            let found = match what {
                What::Hubs => {
                    println!("hubs {}", one_based(&detect::hubs(&g, &caps)?));
                    return Ok(());
                }
                What::Class => detect::in_class_ct(&g, t.unwrap_or_else(|| default_t(&g)), &caps)?,
                What::Clique => match t {
                    Some(t) => detect::find(&g, Kind::CliqueKt, t, &caps)?,
                    None => Some(Certificate::Clique(detect::max_clique(&g))),
                },
                What::Theta => detect::find_theta(&g, &caps)?,
                What::Pyramid => detect::find_pyramid(&g, &caps)?,
                What::Prism => detect::find_prism(&g, &caps)?,
                What::PinchedPrism => detect::find_pinched_prism(&g, &caps)?,
                What::Cube => detect::find_cube(&g, &caps)?,
            };
            match found {
                Some(c) => println!("found {}", describe(&c)),
                None if matches!(what, What::Class) => println!("in-class"),
                None => println!("none"),
            }
            Ok(())
        }
        Cmd::Decompose { input, t, out_td, out_report, uncertified_ok, caps, exact_cap } => {
            let gr = read_graph(&input)?;
            let t = match (t, gr.comment("t")) {
                (Some(t), _) => t,
                (None, Some(c)) => c.parse().map_err(|_| CliError::Parse(format!("bad t comment {c:?}")))?,
                (None, None) => default_t(&gr.graph),
            };
            let mut opts = BuildOptions::default();
            if let Some(c) = caps {
                opts.caps = c;
            }
            if let Some(e) = exact_cap {
                opts.exact_cap = e;
            }
            let (td, report) = decompose(&gr.graph, t, &opts)?;
            if !uncertified_ok {
                match &report.class {
                    ClassCheck::Violated(c) => {
                        println!("certificate {}", describe(c));
                        return Err(CliError::Class(format!("input contains a {}", c.kind().name())));
                    }
                    ClassCheck::Skipped(why) => return Err(CliError::Cap(why.clone())),
                    ClassCheck::Passed | ClassCheck::Disabled => {}
                }
            }
            check(&gr.graph, &td)?;
            emit(out_td.as_deref(), &write_td(&td))?;
            let rep = write_report(&report);
            match out_report {
                Some(p) => std::fs::write(p, rep)?,
                None => eprint!("{rep}"),
            }
            Ok(())
        }
        Cmd::Verify { graph, td } => {
            let g = read_graph(&graph)?.graph;
            let td = read_td(&td)?;
            check(&g, &td)?;
            println!("valid width={} bags={}", td.width(), td.len());
            Ok(())
        }
        Cmd::Solve { graph, td, problem, q } => {
            let g = read_graph(&graph)?.graph;
            let td = match td {
                Some(p) => read_td(&p)?,
                None => {
                    let opts = BuildOptions { check_class: false, ..BuildOptions::default() };
                    decompose(&g, default_t(&g), &opts)?.0
                }
            };
            check(&g, &td)?;
            let set_answer = |(k, s): (usize, VertexSet)| {
                println!("{k}");
                println!("vertices {}", one_based(&s));
            };
            match problem {
                Problem::StableSet => set_answer(solve_stable_set(&g, &td)?),
                Problem::VertexCover => set_answer(solve_vertex_cover(&g, &td)?),
                Problem::DominatingSet => set_answer(solve_dominating_set(&g, &td)?),
                Problem::Coloring => {
                    let (k, col) = solve_chromatic(&g, &td)?;
                    println!("{k}");
                    println!("colors {}", one_based(col));
                }
                Problem::QColoring => {
                    let q = q.ok_or_else(|| CliError::Parse("q-coloring needs -q".into()))?;
                    match solve_q_coloring(&g, &td, q)? {
                        Some(col) => {
                            println!("yes");
                            println!("colors {}", one_based(col));
                        }
                        None => println!("no"),
                    }
                }
            }
            Ok(())
        }
        Cmd::Bench { corpus, sizes, seeds } => {
            let opts = BuildOptions::default();
            let rows = match corpus {
                Some(dir) => bench::directory(&dir, &opts)?,
                None => bench::sampled(&sizes, seeds, &opts)?,
            };
            print!("{}", bench::table(&rows));
            Ok(())
        }
        Cmd::Corpus { out } => {
            let n = corpus::write(&out)?;
            println!("wrote {n} graphs to {}", out.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("logtw: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
