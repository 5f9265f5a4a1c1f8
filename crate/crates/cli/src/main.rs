//! `fatlas`: generate graphs, validate FAT colorings, compute FAT chromatic
//! numbers (brute force or closed form), emit normalized-Laplacian spectra,
//! run theorem-backed lifts, and execute the verification suites.
//!
//! Exit codes: 0 success, 1 validation/verification failure, 2 parse/IO or
//! usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatlas_core::coloring::{validate_fat, Coloring, FatWitness};
use fatlas_core::graph::{complete_multipartite, turan, Graph, MultipartiteSpec};
use fatlas_core::io::{read_edge_list, write_edge_list};
use fatlas_core::lift::{
    cartesian_lift, complement_lift, remove_classes, strong_lift, tensor_lift, LiftResult,
};
use fatlas_core::multipartite::{detect_multipartite, fat_chromatic_multipartite};
use fatlas_core::search::{search_with, SearchOptions};
use fatlas_core::spectral::spectrum;
use fatlas_core::verify::run_suite;
use serde_json::json;
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fatlas", version, about = "Fair-and-Tolerant graph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it in edge-list format.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Validate a coloring; prints the witness or the rejection diagnostics.
    Validate {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'c', long)]
        coloring: PathBuf,
    },
    /// FAT chromatic number, by brute force or by the closed form.
    Chroma {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Override the enumeration size cap (env FATLAS_MAX_N also works).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Normalized-Laplacian spectrum.
    Spectrum {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Lift a FAT coloring to a graph product.
    Lift {
        #[arg(long, value_enum)]
        kind: LiftKind,
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
    },
    /// Transfer a FAT coloring of a regular graph to its complement.
    Complement {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'c', long)]
        coloring: PathBuf,
    },
    /// Remove coloring classes and restrict to the induced subgraph.
    Remove {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'c', long)]
        coloring: PathBuf,
        /// Comma-separated class ids to remove, e.g. `1,3`.
        #[arg(long)]
        classes: String,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Write a DOT rendering with one fill color per class.
    ExportDot {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 'c', long)]
        coloring: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Complete multipartite graph from part sizes, e.g. `--parts 6,4,4,2`.
    Multipartite {
        #[arg(long)]
        parts: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Output file; stdout when omitted.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftKind {
    Tensor,
    Cartesian,
    Strong,
}

/// Failure carrying its exit code: 1 = validation, 2 = parse/IO/usage.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fatlas: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
    read_edge_list(&text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, g: &Graph) -> Result<Coloring, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
    let c: Coloring = serde_json::from_str(&text)
        .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    c.check_compatible(g)
        .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    Ok(c)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serialization cannot fail")
    );
}

/// Validate and surface the rejection as diagnostics JSON + exit 1.
fn require_witness(g: &Graph, c: &Coloring) -> Result<FatWitness, Failure> {
    match validate_fat(g, c) {
        Ok(w) => Ok(w),
        Err(r) => {
            print_json(&json!({
                "rejected": true,
                "vertex": r.vertex,
                "class": r.class,
                "found": r.found,
                "expected": fatlas_core::rational::format_ratio(&r.expected),
            }));
            Err(Failure::validation(format!("not a FAT coloring: {r}")))
        }
    }
}

fn print_lift(lift: &LiftResult) {
    print_json(lift);
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { family } => {
            let (graph, out) = match family {
                GenFamily::Complete { n, out } => (
                    Graph::complete(n).map_err(|e| Failure::io(e.to_string()))?,
                    out,
                ),
                GenFamily::Cycle { n, out } => (
                    Graph::cycle(n).map_err(|e| Failure::io(e.to_string()))?,
                    out,
                ),
                GenFamily::Turan { n, t, out } => (
                    turan(n, t).map_err(|e| Failure::io(e.to_string()))?.graph,
                    out,
                ),
                GenFamily::Multipartite { parts, out } => {
                    let sizes = parse_usize_list(&parts)?;
                    let spec = MultipartiteSpec::from_sizes(&sizes)
                        .map_err(|e| Failure::io(e.to_string()))?;
                    (complete_multipartite(&spec).graph, out)
                }
            };
            emit(&out.output, &write_edge_list(&graph))
        }

        Command::Validate { graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let w = require_witness(&g, &c)?;
            print_json(&w);
            Ok(())
        }

        Command::Chroma {
            graph,
            method,
            workers,
            max_n,
        } => {
            let g = load_graph(&graph)?;
            match method {
                Method::Brute => {
                    let max_n = max_n.or_else(|| {
                        std::env::var("FATLAS_MAX_N")
                            .ok()
                            .and_then(|v| v.parse().ok())
                    });
                    let report = search_with(
                        &g,
                        &SearchOptions {
                            max_n,
                            workers,
                            k_filter: None,
                        },
                    )
                    .map_err(|e| Failure::validation(e.to_string()))?;
                    print_json(&report);
                }
                Method::Closed => {
                    let (spec, canonical_to_actual) = detect_multipartite(&g).ok_or_else(|| {
                        Failure::io("closed form requires a complete multipartite graph")
                    })?;
                    let verdict = fat_chromatic_multipartite(&spec);
                    // Transport the construction back to the input labeling.
                    let mut assignment = vec![0usize; g.vertex_count()];
                    for (canon, &actual) in canonical_to_actual.iter().enumerate() {
                        assignment[actual] = verdict.construction.class_of(canon);
                    }
                    let construction = Coloring::new(verdict.chi_fat.max(1), assignment)
                        .expect("transported coloring stays surjective");
                    print_json(&json!({
                        "chi_fat": verdict.chi_fat,
                        "case": verdict.case,
                        "construction": construction,
                        "predicted_alpha":
                            fatlas_core::rational::format_ratio(&verdict.predicted_alpha),
                        "spec": spec.parts(),
                    }));
                }
            }
            Ok(())
        }

        Command::Spectrum { graph, tol } => {
            let g = load_graph(&graph)?;
            let dec = spectrum(&g, tol).map_err(|e| Failure::validation(e.to_string()))?;
            print_json(&dec.to_json_payload());
            Ok(())
        }

        Command::Lift { kind, g1, c1, g2 } => {
            let graph1 = load_graph(&g1)?;
            let coloring1 = load_coloring(&c1, &graph1)?;
            let graph2 = load_graph(&g2)?;
            let w = require_witness(&graph1, &coloring1)?;
            let lift = match kind {
                LiftKind::Tensor => tensor_lift(&graph1, &coloring1, &w, &graph2),
                LiftKind::Cartesian => cartesian_lift(&graph1, &coloring1, &w, &graph2),
                LiftKind::Strong => strong_lift(&graph1, &coloring1, &w, &graph2),
            }
            .map_err(|e| Failure::validation(e.to_string()))?;
            print_lift(&lift);
            Ok(())
        }

        Command::Complement { graph, coloring } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let w = require_witness(&g, &c)?;
            let lift =
                complement_lift(&g, &c, &w).map_err(|e| Failure::validation(e.to_string()))?;
            print_lift(&lift);
            Ok(())
        }

        Command::Remove {
            graph,
            coloring,
            classes,
        } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            let removed: BTreeSet<usize> = parse_usize_list(&classes)?.into_iter().collect();
            let w = require_witness(&g, &c)?;
            let lift = remove_classes(&g, &c, &w, &removed)
                .map_err(|e| Failure::validation(e.to_string()))?;
            print_lift(&lift);
            Ok(())
        }

        Command::Verify {
            suite,
            seed,
            trials,
        } => {
            let report = run_suite(&suite, seed, trials).ok_or_else(|| {
                Failure::io(format!(
                    "unknown suite {suite:?}; available: {}",
                    fatlas_core::verify::SUITES.join(", ")
                ))
            })?;
            for check in &report.checks {
                let status = if check.passed { "ok" } else { "FAIL" };
                println!("[{}] {}: {} ({})", report.suite, check.name, status, check.detail);
            }
            let passed = report.passed_count();
            let total = report.checks.len();
            println!(
                "suite {}: {}/{} checks passed — {}",
                report.suite,
                passed,
                total,
                if report.all_passed() { "PASS" } else { "FAIL" }
            );
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::validation(format!(
                    "suite {} failed {}/{} checks",
                    report.suite,
                    total - passed,
                    total
                )))
            }
        }

        Command::ExportDot {
            graph,
            coloring,
            output,
        } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring, &g)?;
            fs::write(&output, render_dot(&g, &c))
                .map_err(|e| Failure::io(format!("cannot write {}: {e}", output.display())))
        }
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| Failure::io(format!("invalid integer {tok:?} in list")))
        })
        .collect()
}

/// ColorBrewer-style palette, cycled over class ids.
const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
];

fn render_dot(g: &Graph, c: &Coloring) -> String {
    use std::fmt::Write;
    let mut out = String::from("graph fatlas {\n  node [style=filled];\n");
    for v in 0..g.vertex_count() {
        let color = PALETTE[c.class_of(v) % PALETTE.len()];
        let _ = writeln!(out, "  {v} [fillcolor=\"{color}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
