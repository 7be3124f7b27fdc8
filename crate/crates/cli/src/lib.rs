//! `hfx` command dispatch.
//!
//! Exit codes: 0 when every requested audit passes, 1 when at least one
//! fails, 2 for invalid input (unreadable files, parse and validation
//! errors, bad arguments). Errors go to stderr prefixed with their `E_*`
//! code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hfx_core::hallfusion::validate_promonoidal_scoped;
use hfx_core::io::{
    parse_spec_file, render_contractions_text, render_dimensions, render_export, render_report_json,
    render_report_text, render_spec_file, render_table, SpecFile, TableOp,
};
use hfx_core::{
    build_antipode, build_face_algebra, build_hall_fusion, catalog_get, graph_to_procategory, run_face, run_graph,
    run_vertex, AlgebraPresentation, AuditOptions, Axiom, Condition, EntrySource, SuiteReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hfx", version, about = "Exact audits of Hall-fusion and face algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the structure data of a spec file.
    Validate { file: PathBuf },
    /// Construct the algebra and print its dimensions.
    Build { file: PathBuf },
    /// Run the axiom audits and contraction checks.
    Audit {
        file: PathBuf,
        /// Comma-separated axiom or condition ids to report.
        #[arg(long, value_delimiter = ',')]
        axioms: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = AuditOptions::default().witness_cap)]
        witness_cap: usize,
    },
    /// Print the nonzero entries of a structure table.
    Table {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
    },
    /// Write the full JSON export.
    Export {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print (or write) a built-in example as a spec file.
    Catalog {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    Mul,
    Comul,
}

/// Failure of a command: message for stderr, already carrying its code.
struct Invalid(String);

impl From<hfx_core::Error> for Invalid {
    fn from(e: hfx_core::Error) -> Self {
        Invalid(e.to_string())
    }
}

type Outcome = Result<i32, Invalid>;

pub fn run<I: IntoIterator<Item = String>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_INVALID;
            }
            let _ = write!(out, "{text}");
            return EXIT_PASS;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Validate { file } => validate(&load(&file)?, out),
        Command::Build { file } => {
            let alg = build(&load(&file)?)?;
            emit(out, &render_dimensions(&alg))
        }
        Command::Audit {
            file,
            axioms,
            json,
            witness_cap,
        } => {
            if witness_cap == 0 {
                return Err(Invalid("E_RANGE: --witness-cap must be at least 1".into()));
            }
            let wanted = match axioms {
                Some(ids) => Some(check_ids(ids)?),
                None => None,
            };
            let spec = load(&file)?;
            let mut report = suite(&spec, &AuditOptions { witness_cap })?;
            if let Some(ids) = &wanted {
                report.retain(|id| ids.iter().any(|w| w == id));
            }
            let text = if json {
                render_report_json(&report)
            } else {
                render_report_text(&report)
            };
            emit(out, &text)?;
            Ok(if report.any_fail() { EXIT_FAIL } else { EXIT_PASS })
        }
        Command::Table { file, op } => {
            let alg = build(&load(&file)?)?;
            let op = match op {
                Op::Mul => TableOp::Mul,
                Op::Comul => TableOp::Comul,
            };
            emit(out, &render_table(&alg, op))
        }
        Command::Export { file, output } => {
            let report = suite(&load(&file)?, &AuditOptions::default())?;
            write_file(&output, &render_export(&report.algebra, &report))?;
            Ok(EXIT_PASS)
        }
        Command::Catalog { name, output } => {
            let entry = catalog_get(&name)?;
            let spec = match entry.source {
                EntrySource::Vertex(s) => SpecFile::Vertex(s),
                EntrySource::Graph { graph, max_deg } => SpecFile::Graph { graph, max_deg },
            };
            let text = render_spec_file(&spec);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => {
                    emit(out, &text)?;
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

fn check_ids(ids: Vec<String>) -> Result<Vec<String>, Invalid> {
    let ids: Vec<String> = ids.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    for id in &ids {
        if Axiom::parse(id).is_none() && Condition::parse(id).is_none() {
            return Err(Invalid(format!("E_NAME: unknown axiom or condition `{id}`")));
        }
    }
    Ok(ids)
}

fn load(path: &Path) -> Result<SpecFile, Invalid> {
    let text =
        fs::read_to_string(path).map_err(|e| Invalid(format!("E_IO: cannot read {}: {e}", path.display())))?;
    Ok(parse_spec_file(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Invalid> {
    fs::write(path, text).map_err(|e| Invalid(format!("E_IO: cannot write {}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Invalid(format!("E_IO: cannot write output: {e}")))?;
    Ok(EXIT_PASS)
}

fn build(spec: &SpecFile) -> Result<AlgebraPresentation, Invalid> {
    Ok(match spec {
        SpecFile::Vertex(s) => build_hall_fusion(s)?,
        SpecFile::Face { data, max_deg } => build_face_algebra(data, *max_deg)?,
        SpecFile::Graph { graph, max_deg } => build_face_algebra(&graph_to_procategory(graph, *max_deg), *max_deg)?,
    })
}

fn suite(spec: &SpecFile, opts: &AuditOptions) -> Result<SuiteReport, Invalid> {
    Ok(match spec {
        SpecFile::Vertex(s) => run_vertex(s, opts)?,
        SpecFile::Face { data, max_deg } => run_face(data, *max_deg, opts)?,
        SpecFile::Graph { graph, max_deg } => run_graph(graph, *max_deg, opts)?,
    })
}

fn validate(spec: &SpecFile, out: &mut dyn Write) -> Outcome {
    match spec {
        SpecFile::Vertex(s) => {
            let mut report = validate_promonoidal_scoped(s.p(), Some("p"));
            report.merge(validate_promonoidal_scoped(s.q(), Some("q")));
            if s.sigma().is_some() {
                build_antipode(s)?;
            }
            let failed = report.any_fail();
            emit(out, &render_contractions_text(&report))?;
            emit(out, if failed { "invalid\n" } else { "valid\n" })?;
            Ok(if failed { EXIT_FAIL } else { EXIT_PASS })
        }
        SpecFile::Face { data, max_deg } => {
            build_face_algebra(data, *max_deg)?;
            emit(
                out,
                &format!(
                    "valid: {} 0-cells, {} 1-cells\n",
                    data.zero_cells().len(),
                    data.cells().len()
                ),
            )
        }
        SpecFile::Graph { graph, max_deg } => {
            let pc = graph_to_procategory(graph, *max_deg);
            build_face_algebra(&pc, *max_deg)?;
            emit(
                out,
                &format!(
                    "valid: {} vertices, {} edges, {} paths up to length {max_deg}\n",
                    graph.vertices().len(),
                    graph.edges().len(),
                    pc.cells().len()
                ),
            )
        }
    }
}
