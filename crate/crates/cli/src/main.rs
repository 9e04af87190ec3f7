//! Command-line frontend for exact planar resistor network analysis.
//!
//! Exit codes: 0 on success, 1 when a mathematical identity fails to hold,
//! 2 on bad input (unreadable file, invalid network, unknown edge, usage
//! errors, or an oracle run that exceeds its tree cap).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dualohm::{
    dual, enumerate_spanning_trees, oracle_report, parse_network, CheckStatus, DualityRecord,
    EmbeddedMultigraph, NetworkFile, OracleError, OracleReport, Rational, DEFAULT_TREE_CAP,
};

mod render;

use render::rational_cell;

#[derive(Parser)]
#[command(
    name = "dualohm",
    version,
    about = "Exact analysis of planar resistor networks and their duals",
    long_about = "Analyzes planar resistor networks in exact rational arithmetic: effective \
                  resistances, dual networks with reciprocal resistances, the per-edge duality \
                  identity r/R + r'/R' = 1, and a brute-force spanning-tree oracle for the \
                  determinant identities."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Effective resistance over one edge, or over every edge
    Resist {
        file: PathBuf,
        /// Edge id; without it, one line per edge
        #[arg(long)]
        edge: Option<String>,
        /// Print rounded decimals with this many digits instead of exact p/q
        #[arg(long, value_name = "N")]
        decimal: Option<u32>,
    },
    /// Dual network with reciprocal resistances
    Dual {
        file: PathBuf,
        /// Write the dual network JSON here and print the edge-correspondence
        /// table to stdout; without it the JSON itself goes to stdout
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Duality identity r/R + r'/R' = 1, one record per edge
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print rounded decimals with this many digits instead of exact p/q
        #[arg(long, value_name = "N")]
        decimal: Option<u32>,
    },
    /// Spanning-tree count and weight sum, by determinant and by enumeration
    Trees {
        file: PathBuf,
        /// Enumeration bail-out
        #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Face census of the embedding and the Euler check
    Faces { file: PathBuf },
    /// Spanning-tree oracle against the determinant identities
    Verify {
        file: PathBuf,
        /// Enumeration bail-out
        #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

fn main() -> ExitCode {
    // die quietly instead of panicking when the reader of a pipe goes away,
    // e.g. `dualohm check net.json | head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Resist { file, edge, decimal } => {
            let g = load(&file)?;
            match edge {
                Some(id) => {
                    let r = g.effective_resistance(&id).map_err(|e| e.to_string())?;
                    println!("{}", rational_cell(&r, decimal));
                }
                None => {
                    for e in g.edges() {
                        let r = g.effective_resistance(&e.id).map_err(|e| e.to_string())?;
                        println!("{}\t{}", e.id, rational_cell(&r, decimal));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { file, output } => {
            let g = load(&file)?;
            let (dual_graph, corr) = dual(&g).map_err(|e| e.to_string())?;
            let json = NetworkFile::from_graph(&dual_graph).to_json();
            let mut table = String::from("edge\tdual_edge\n");
            for (edge, dual_edge) in corr.edge_pairs() {
                table.push_str(&format!("{edge}\t{dual_edge}\n"));
            }
            match output {
                Some(path) => {
                    std::fs::write(&path, json)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    print!("{table}");
                }
                None => {
                    // keep stdout parseable JSON; the table still shows up
                    print!("{json}");
                    eprint!("{table}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, format, decimal } => {
            let g = load(&file)?;
            let records = g.duality_report();
            let one = Rational::from_integer(1.into());
            let all_hold = records.iter().all(|r| r.sum == one);
            print_check(&records, format, decimal);
            Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Trees { file, cap, format } => {
            let g = load(&file)?;
            print_trees(&g, cap, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Faces { file } => {
            let g = load(&file)?;
            println!("face\tlength\tdarts");
            for (ix, cycle) in g.faces().cycles().iter().enumerate() {
                let darts: Vec<String> = cycle.iter().map(|&d| g.dart_token(d)).collect();
                println!("f{ix}\t{}\t{}", cycle.len(), darts.join(","));
            }
            let (v, e, f) = (g.n_vertices(), g.n_edges(), g.faces().len());
            println!("euler\t{v}-{e}+{f}=2\tok");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, cap, format } => {
            let g = load(&file)?;
            let report = oracle_report(&g, cap).map_err(|e| e.to_string())?;
            print_verify(&report, format);
            Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn load(path: &PathBuf) -> Result<EmbeddedMultigraph, String> {
    parse_network(path).map_err(|e| e.to_string())
}

fn print_check(records: &[DualityRecord], format: Format, decimal: Option<u32>) {
    match format {
        Format::Tsv => {
            println!("edge\tR\tr\tdual_R\tdual_r\tsum\tbridge");
            for rec in records {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    rec.edge_id,
                    rational_cell(&rec.resistance, decimal),
                    rational_cell(&rec.effective, decimal),
                    rational_cell(&rec.dual_resistance, decimal),
                    rational_cell(&rec.dual_effective, decimal),
                    rational_cell(&rec.sum, decimal),
                    rec.bridge,
                );
            }
        }
        Format::Json => {
            let list: Vec<_> = records
                .iter()
                .map(|rec| {
                    json!({
                        "edge": rec.edge_id,
                        "R": rational_cell(&rec.resistance, decimal),
                        "r": rational_cell(&rec.effective, decimal),
                        "dual_R": rational_cell(&rec.dual_resistance, decimal),
                        "dual_r": rational_cell(&rec.dual_effective, decimal),
                        "sum": rational_cell(&rec.sum, decimal),
                        "bridge": rec.bridge,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("plain data"));
        }
    }
}

fn print_trees(g: &EmbeddedMultigraph, cap: usize, format: Format) {
    let weight_sum = g.laplacian().reference_cofactor();
    let unit = unit_resistances(g);
    let count = unit.laplacian().reference_cofactor();
    let enumerated = enumerate_spanning_trees(g, cap);

    match format {
        Format::Tsv => {
            println!("count_determinant\t{count}");
            println!("weight_sum_determinant\t{weight_sum}");
            match &enumerated {
                Ok(set) => {
                    println!("count_enumeration\t{}", set.len());
                    println!("weight_sum_enumeration\t{}", set.total_weight());
                }
                Err(OracleError::CapExceeded(cap)) => {
                    println!("enumeration\tskipped: more than {cap} spanning trees");
                }
                Err(other) => println!("enumeration\tskipped: {other}"),
            }
        }
        Format::Json => {
            let enumeration = match &enumerated {
                Ok(set) => json!({
                    "count": set.len(),
                    "weight_sum": set.total_weight().to_string(),
                }),
                Err(err) => json!({ "skipped": err.to_string() }),
            };
            let value = json!({
                "count_determinant": count.to_string(),
                "weight_sum_determinant": weight_sum.to_string(),
                "enumeration": enumeration,
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("plain data"));
        }
    }
}

fn print_verify(report: &OracleReport, format: Format) {
    match format {
        Format::Tsv => {
            println!("trees\t{}", report.tree_count);
            match report.dual_tree_count {
                Some(n) => println!("dual_trees\t{n}"),
                None => println!("dual_trees\tnone (bridges present)"),
            }
            for check in &report.checks {
                let (status, detail) = match &check.status {
                    CheckStatus::Pass => ("PASS", String::new()),
                    CheckStatus::Fail(detail) => ("FAIL", detail.clone()),
                    CheckStatus::Skipped(reason) => ("SKIPPED", reason.clone()),
                };
                if detail.is_empty() {
                    println!("{}\t{status}", check.name);
                } else {
                    println!("{}\t{status}\t{detail}", check.name);
                }
            }
        }
        Format::Json => {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|check| {
                    let (status, detail) = match &check.status {
                        CheckStatus::Pass => ("pass", None),
                        CheckStatus::Fail(detail) => ("fail", Some(detail.clone())),
                        CheckStatus::Skipped(reason) => ("skipped", Some(reason.clone())),
                    };
                    json!({ "name": check.name, "status": status, "detail": detail })
                })
                .collect();
            let value = json!({
                "tree_count": report.tree_count,
                "dual_tree_count": report.dual_tree_count,
                "checks": checks,
                "all_passed": report.all_passed(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("plain data"));
        }
    }
}

/// Same network with every resistance set to 1; its cofactor is the plain
/// spanning-tree count.
fn unit_resistances(g: &EmbeddedMultigraph) -> EmbeddedMultigraph {
    let mut file = NetworkFile::from_graph(g);
    for edge in &mut file.edges {
        edge.resistance = "1".to_owned();
    }
    file.into_graph().expect("only resistances changed")
}
