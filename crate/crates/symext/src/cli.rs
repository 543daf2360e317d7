use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use symext_core::catalog::{complex_row, rows_up_to_rank, Family, REAL_FORM_ROWS};
use symext_core::irreps::weight_system;
use symext_core::realize::{build_realization, full_check, RealizeFamily};
use symext_core::surgery::{grade_census, identify_catalog_row, is_totally_geodesic, surgery};
use symext_core::triples::admissible_nodes;
use symext_core::{DynkinDiagram, RootSystem, WeightVector};

use crate::json::{catalog_rows, ModuleJson, SurgeryJson};
use crate::suites::{run_suite, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "symext", version, about = "Symplectic extrinsic symmetric spaces: surgery, weights, realizations and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Nodes (1-based, Bourbaki) whose highest-root coefficient is 1.
    Admissible { diagram: String },
    /// Delete a node and print the graded module V = V0 + V1 + V2.
    Surgery {
        diagram: String,
        node: usize,
        #[arg(long)]
        json: bool,
    },
    /// Weight system of an irreducible module given by Dynkin labels.
    Weights {
        diagram: String,
        #[arg(required = true, allow_negative_numbers = true)]
        labels: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// The classification tables.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Matrix realization of a family, e.g. `realize sym2 3 --check`.
    Realize {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
    },
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn diagram(s: &str) -> Result<DynkinDiagram, String> {
    s.parse().map_err(|e: symext_core::Error| e.to_string())
}

fn node_index(d: &DynkinDiagram, node: usize) -> Result<usize, String> {
    if node == 0 || node > d.rank() {
        return Err(format!("node {node} out of range 1..={}", d.rank()));
    }
    Ok(node - 1)
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string_pretty(v).map_err(|e| e.to_string())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    match cmd {
        Command::Admissible { diagram: s } => {
            let d = diagram(&s)?;
            let nodes = admissible_nodes(&RootSystem::new(&d)).map_err(|e| e.to_string())?;
            let v: Vec<String> = nodes.iter().map(|n| (n + 1).to_string()).collect();
            text = v.join(" ") + "\n";
        }
        Command::Surgery { diagram: s, node, json } => {
            let d = diagram(&s)?;
            let r = surgery(&d, node_index(&d, node)?).map_err(|e| e.to_string())?;
            if json {
                text = to_json(&SurgeryJson::from(&r))? + "\n";
            } else {
                let (s0, s1, s2) = grade_census(&r);
                text.push_str(&format!("source      {} node {}\n", r.source, r.node + 1));
                text.push_str(&format!("g̃           {}\n", r.module.sub.diagram));
                text.push_str(&format!("highest     {}\n", r.module.highest));
                text.push_str(&format!("dim V       {} (N = {})\n", r.module.dim(), r.module.n()));
                text.push_str(&format!("census      ({s0}, {s1}, {s2})\n"));
                let row = match identify_catalog_row(&r) {
                    Ok(row) => row.to_string(),
                    Err(_) if is_totally_geodesic(&r) => "none (totally geodesic)".to_string(),
                    Err(e) => format!("none ({e})"),
                };
                text.push_str(&format!("row         {row}\n"));
                for j in 0..=2 {
                    for g in r.module.of_grade(j) {
                        text.push_str(&format!("{j}  {}\n", g.labels));
                    }
                }
            }
        }
        Command::Weights { diagram: s, labels, json } => {
            let d = diagram(&s)?;
            if labels.len() != d.rank() {
                return Err(format!("{} labels given for rank {}", labels.len(), d.rank()));
            }
            let m = weight_system(&RootSystem::new(&d), &WeightVector(labels)).map_err(|e| e.to_string())?;
            if json {
                text = to_json(&ModuleJson::from(&m))? + "\n";
            } else {
                text.push_str(&format!("dimension {}\n", m.dimension()));
                for (w, k) in &m.weights {
                    text.push_str(&format!("{w}  {k}\n"));
                }
            }
        }
        Command::Catalog { action: CatalogAction::List { json } } => {
            if json {
                text = to_json(&catalog_rows())? + "\n";
            } else {
                for f in Family::ALL {
                    let c = complex_row(f);
                    text.push_str(&format!(
                        "{:<9} {:<42} {:<20} N = {:<16} {}\n",
                        f.id(),
                        c.quotient,
                        c.module,
                        c.n_formula,
                        c.conditions
                    ));
                    if let Some(rf) = REAL_FORM_ROWS.iter().find(|r| r.family == f) {
                        for (pair, ambient) in rf.forms {
                            text.push_str(&format!("          {pair:<42} {ambient}\n"));
                        }
                        for formula in rf.formulas {
                            text.push_str(&format!("          {formula}\n"));
                        }
                    }
                }
                let rows: Vec<String> = rows_up_to_rank(8).iter().map(|r| r.to_string()).collect();
                text.push_str(&format!("instances with source rank <= 8: {}\n", rows.join(" ")));
            }
        }
        Command::Realize { family, params, check, json } => {
            let fam = RealizeFamily::parse(&family, &params).map_err(|e| e.to_string())?;
            let cq = build_realization(fam).map_err(|e| e.to_string())?;
            if check {
                let report = VerifyReport::new(fam.to_string(), &full_check(&cq));
                if !report.ok() {
                    code = EXIT_FAIL;
                }
                text = if json { to_json(&report)? + "\n" } else { report.to_text() };
            } else {
                text.push_str(&format!("family  {fam}\n"));
                text.push_str(&format!("g̃       {}\n", cq.diagram));
                text.push_str(&format!("blocks  {:?}\n", cq.dims));
                for (i, e) in cq.e.iter().enumerate() {
                    text.push_str(&format!("e{}:\n{e}", i + 1));
                }
            }
        }
        Command::Verify { suite, json } => {
            let report = VerifyReport::new(suite.name(), &run_suite(suite));
            if !report.ok() {
                code = EXIT_FAIL;
            }
            text = if json { to_json(&report)? + "\n" } else { report.to_text() };
        }
    }
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    Ok(code)
}
