//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text to print, so it can be tested without a process.
//!
//! Exit codes: 0 for a YES answer, 1 for NO, 2 for usage, I/O or parse
//! errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::core_solver::{
    compute_core, decide_core_chi, decide_core_with_k_vertices, find_nonsurjective_endomorphism,
    solve_slice_with, solve_sub, CoreVerdict, DoubleTuple, SliceSemantics, SliceTargets,
    SliceWitness,
};
use crate::error::{Error, Result};
use crate::gadgets::{
    brute_force_multicolored_clique, brute_force_x13, clique_gadget, extract_assignment,
    extract_clique, extract_slice_assignment, hypergraph_gadget, slice_gadget,
};
use crate::graph::{interval_chromatic_number, MonotoneMap, OrderedGraph};
use crate::hypergraph::find_nonsurjective_hyper_endomorphism;
use crate::io;
use crate::matchings::mc;
use crate::retraction::{decide_retraction, encode, Encoding};

#[derive(Parser, Debug)]
#[command(
    name = "ordcore",
    version,
    about = "Exact solvers for ordered graph retractions and cores"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Retract a graph onto the subgraph induced by the kept vertices.
    Retract {
        graph: PathBuf,
        /// Comma-separated vertices to keep.
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<usize>,
        /// Also write the 2-SAT encoding in DIMACS CNF.
        #[arg(long)]
        emit_cnf: Option<PathBuf>,
    },
    /// Compute the core and a retraction onto it.
    Core { graph: PathBuf },
    /// Print CORE if no non-surjective endomorphism exists.
    IsCore { graph: PathBuf },
    /// Decide whether the core has at most k vertices.
    CoreK {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Look for a subgraph with g vertices and h edges that the graph maps onto.
    Slice {
        graph: PathBuf,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        h: usize,
        /// Accept any homomorphism onto H instead of a retraction.
        #[arg(long)]
        strict_hom: bool,
    },
    /// Slice over every pair of vertex and edge deficits.
    Sub {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<usize>,
    },
    /// Decide between "core has χ< vertices" and "graph is a core".
    CoreChi { graph: PathBuf },
    /// Interval chromatic number with a witness partition.
    Chi { graph: PathBuf },
    /// Print the matching M^C_i.
    GenMatching {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a reduction gadget from a source instance.
    GenGadget {
        kind: GadgetKind,
        instance: PathBuf,
        /// Uniformity of the hypergraph gadget.
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the layout description.
        #[arg(long)]
        layout: Option<PathBuf>,
    },
    /// Solve a source instance by brute force and its gadget with the
    /// matching solver, and check that the answers agree.
    VerifyGadget {
        kind: GadgetKind,
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    /// Hypergraph from a 1-in-3 formula.
    X13Hyper,
    /// Slice instance from a 1-in-3 formula.
    Slice,
    /// Ordered graph from a multicolored clique instance.
    Clique,
}

/// Exit code and the text destined for stdout (or stderr when the code is 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub text: String,
}

impl Report {
    fn yes(text: String) -> Self {
        Report { code: 0, text }
    }

    fn no(text: String) -> Self {
        Report { code: 1, text }
    }

    fn error(text: String) -> Self {
        Report { code: 2, text }
    }

    fn answer(yes: bool, text: String) -> Self {
        if yes {
            Self::yes(text)
        } else {
            Self::no(text)
        }
    }
}

pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Report {
                code,
                text: e.to_string(),
            };
        }
    };
    match execute(cli.command) {
        Ok(r) => r,
        Err(e) => Report::error(format!("error: {e}\n")),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

/// Reading errors are prefixed with the file name.
fn load_graph(path: &Path) -> Result<OrderedGraph> {
    io::parse_graph(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    Error::InFile {
        path: path.display().to_string(),
        source: Box::new(e),
    }
}

fn map_line(f: &MonotoneMap) -> String {
    format!("map: {}\n", f.display_line())
}

fn vertices_line(vs: &[usize]) -> String {
    format!(
        "vertices: {}\n",
        vs.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn slice_report(w: Option<SliceWitness>) -> Report {
    match w {
        None => Report::no("NONE\n".into()),
        Some(w) => {
            let mut out = vertices_line(&w.vertices);
            let edges: Vec<String> = w.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = writeln!(out, "edges: {}", edges.join(" "));
            out.push_str(&map_line(&w.map));
            Report::yes(out)
        }
    }
}

fn emit_output(out: &Option<PathBuf>, text: &str) -> Result<String> {
    match out {
        Some(p) => {
            write(p, text)?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text.to_string()),
    }
}

fn execute(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Retract {
            graph,
            keep,
            emit_cnf,
        } => {
            let g = load_graph(&graph)?;
            if let Some(path) = emit_cnf {
                let cnf = match encode(&g, &keep)? {
                    Encoding::Instance(enc) => enc.instance().to_dimacs(),
                    Encoding::EarlyUnsat { edge: (u, v) } => {
                        format!(
                            "c no retraction: edge {u} {v} has no admissible image\np cnf 0 1\n0\n"
                        )
                    }
                };
                write(&path, &cnf)?;
            }
            Ok(match decide_retraction(&g, &keep)? {
                Some(f) => Report::yes(map_line(&f)),
                None => Report::no("NONE\n".into()),
            })
        }
        Command::Core { graph } => {
            let g = load_graph(&graph)?;
            let core = compute_core(&g);
            let mut out = vertices_line(&core.embedding);
            out.push_str(&io::write_graph(&core.graph));
            out.push_str(&map_line(&core.retraction));
            Ok(Report::yes(out))
        }
        Command::IsCore { graph } => {
            let g = load_graph(&graph)?;
            Ok(match find_nonsurjective_endomorphism(&g) {
                None => Report::yes("CORE\n".into()),
                Some(f) => Report::no(format!("NOT CORE\n{}", map_line(&f))),
            })
        }
        Command::CoreK { graph, k } => {
            let g = load_graph(&graph)?;
            Ok(match decide_core_with_k_vertices(&g, k)? {
                Some(w) => Report::yes(vertices_line(&w.vertices) + &map_line(&w.map)),
                None => Report::no("NONE\n".into()),
            })
        }
        Command::Slice {
            graph,
            g: gv,
            h,
            strict_hom,
        } => {
            let g = load_graph(&graph)?;
            let targets = SliceTargets::new(&g, gv, h)?;
            let semantics = if strict_hom {
                SliceSemantics::Homomorphism
            } else {
                SliceSemantics::Retraction
            };
            Ok(slice_report(solve_slice_with(&g, targets, semantics)))
        }
        Command::Sub { graph, t, u } => {
            let g = load_graph(&graph)?;
            let dt = DoubleTuple::new(&g, t, u)?;
            Ok(match solve_sub(&g, &dt) {
                None => Report::no("NONE\n".into()),
                Some(w) => {
                    let mut r = slice_report(Some(w.slice));
                    r.text = format!(
                        "targets: {} {}\n{}",
                        w.targets.vertices, w.targets.edges, r.text
                    );
                    r
                }
            })
        }
        Command::CoreChi { graph } => {
            let g = load_graph(&graph)?;
            let chi = interval_chromatic_number(&g).0;
            Ok(match decide_core_chi(&g) {
                CoreVerdict::CoreHasChiVertices(w) => Report::yes(format!(
                    "CORE HAS {chi} VERTICES\n{}{}",
                    vertices_line(&w.vertices),
                    map_line(&w.map)
                )),
                CoreVerdict::InstanceIsCore => Report::no("INSTANCE IS CORE\n".into()),
                CoreVerdict::Neither(f) => Report::no(format!(
                    "NEITHER: not a core, core larger than {chi}\n{}",
                    map_line(&f)
                )),
            })
        }
        Command::Chi { graph } => {
            let g = load_graph(&graph)?;
            let (chi, part) = interval_chromatic_number(&g);
            let cuts: Vec<String> = part.cuts().iter().map(usize::to_string).collect();
            Ok(Report::yes(format!(
                "chi: {chi}\ncuts: {}\n",
                cuts.join(" ")
            )))
        }
        Command::GenMatching { i, out } => {
            let m = mc(i)?;
            Ok(Report::yes(emit_output(&out, &io::write_graph(m.graph()))?))
        }
        Command::GenGadget {
            kind,
            instance,
            k,
            out,
            layout,
        } => {
            let text = read(&instance)?;
            let (graph_text, layout_text) = match kind {
                GadgetKind::X13Hyper => {
                    let phi = io::parse_x13(&text).map_err(|e| in_file(&instance, e))?;
                    let (h, lay) = hypergraph_gadget(&phi, k)?;
                    (io::write_hypergraph(&h), io::write_hyper_layout(&lay))
                }
                GadgetKind::Slice => {
                    let phi = io::parse_x13(&text).map_err(|e| in_file(&instance, e))?;
                    let sg = slice_gadget(&phi)?;
                    (io::write_graph(&sg.graph), io::write_slice_layout(&sg))
                }
                GadgetKind::Clique => {
                    let f = io::parse_partitioned(&text).map_err(|e| in_file(&instance, e))?;
                    let (g, lay) = clique_gadget(&f)?;
                    (io::write_graph(&g), io::write_clique_layout(&lay))
                }
            };
            let mut report = emit_output(&out, &graph_text)?;
            if let Some(p) = layout {
                write(&p, &layout_text)?;
                let _ = writeln!(report, "wrote {}", p.display());
            }
            Ok(Report::yes(report))
        }
        Command::VerifyGadget { kind, instance, k } => verify_gadget(kind, &instance, k),
    }
}

fn verify_gadget(kind: GadgetKind, instance: &Path, k: usize) -> Result<Report> {
    let text = read(instance)?;
    let (source, gadget, extracted) = match kind {
        GadgetKind::X13Hyper => {
            let phi = io::parse_x13(&text).map_err(|e| in_file(instance, e))?;
            let (h, layout) = hypergraph_gadget(&phi, k)?;
            let witness = find_nonsurjective_hyper_endomorphism(&h);
            let extracted = witness
                .as_ref()
                .map(|f| extract_assignment(&layout, f).is_ok());
            (
                brute_force_x13(&phi)?.is_some(),
                witness.is_some(),
                extracted,
            )
        }
        GadgetKind::Slice => {
            let phi = io::parse_x13(&text).map_err(|e| in_file(instance, e))?;
            let sg = slice_gadget(&phi)?;
            let witness = solve_slice_with(&sg.graph, sg.targets, SliceSemantics::Retraction);
            let extracted = witness
                .as_ref()
                .map(|w| extract_slice_assignment(&phi, &sg.layout, &w.vertices).is_ok());
            (
                brute_force_x13(&phi)?.is_some(),
                witness.is_some(),
                extracted,
            )
        }
        GadgetKind::Clique => {
            let f = io::parse_partitioned(&text).map_err(|e| in_file(instance, e))?;
            let (g, layout) = clique_gadget(&f)?;
            let (found, extracted) = match decide_core_chi(&g) {
                CoreVerdict::CoreHasChiVertices(w) => {
                    (true, Some(extract_clique(&layout, &w.map).is_ok()))
                }
                CoreVerdict::InstanceIsCore => (false, None),
                CoreVerdict::Neither(_) => (true, Some(false)),
            };
            (
                brute_force_multicolored_clique(&f)?.is_some(),
                found,
                extracted,
            )
        }
    };
    let word = |b: bool| if b { "YES" } else { "NO" };
    let mut out = format!("source: {}\ngadget: {}\n", word(source), word(gadget));
    if let Some(ok) = extracted {
        let _ = writeln!(out, "witness decodes: {}", word(ok));
    }
    let agree = source == gadget && extracted.unwrap_or(true);
    out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
    Ok(Report::answer(agree, out))
}
