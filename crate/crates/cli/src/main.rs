use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use threshold_dim::io::{to_dot, write_edge_list};
use threshold_dim::resolve::metric_dimension_with;

use threshold_dim_cli::commands::{self, Caps};
use threshold_dim_cli::report::Report;
use threshold_dim_cli::{construct, exit_code, load_graph, parse_list};

/// Metric dimension and threshold dimension of small graphs.
///
/// Graphs are read in the edge-list format: a `<n> <m>` header, then one
/// `<u> <v>` line per edge (0-based ids). `-` reads standard input.
#[derive(Parser)]
#[command(name = "tdim", version, about)]
struct Cli {
    /// Print JSON instead of the text table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact metric dimension and a lexicographically smallest basis.
    Mdim {
        path: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Bounds on the threshold dimension; exhaustive with --exact.
    Tdim {
        path: PathBuf,
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Metric dimension (when within the cap) and threshold dimension bounds.
    Bounds {
        path: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Decide whether the threshold dimension equals the metric dimension.
    CheckIrreducible {
        path: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build a named graph: path n, cycle n, complete n, empty n, star n,
    /// subdivstar t, petersen n k, multipartite x1,..,xk, cyclesq n, sgraph n,
    /// sgraphbs b s, irreducible n b, embed FILE, sharpness k d,
    /// mpthreshold x1,..,xk.
    Construct {
        family: String,
        params: Vec<String>,
        /// Write the edge list here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit DOT, to FILE or (without FILE) to standard output.
        #[arg(long, num_args = 0..=1)]
        dot: Option<Option<PathBuf>>,
        /// Colour the construction's landmarks (or a metric basis) in the DOT output.
        #[arg(long)]
        basis_highlight: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Check a landmark set; exits 1 if it does not resolve the graph.
    VerifyResolving {
        path: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long)]
        set: String,
    },
    /// Add edges so the vertices of P get distinct neighbourhoods in W.
    ShortlexAssign {
        path: PathBuf,
        #[arg(long)]
        w: String,
        #[arg(long)]
        p: String,
        /// Largest subsets first.
        #[arg(long)]
        reverse: bool,
        /// Write the new edge list here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyse every connected graph up to the given order (at most 7).
    Atlas {
        #[arg(long)]
        max_order: usize,
        /// Write reports.jsonl, summary.txt and graphs/NNNN.el here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
}

fn write(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Mdim { path, caps } => emit(&commands::mdim(&load_graph(&path)?, &caps)?, json),
        Command::Tdim { path, exact, caps } => emit(&commands::tdim(&load_graph(&path)?, &caps, exact)?, json),
        Command::Bounds { path, caps } => emit(&commands::bounds(&load_graph(&path)?, &caps), json),
        Command::CheckIrreducible { path, caps } => {
            emit(&commands::check_irreducible(&load_graph(&path)?, &caps)?, json)
        }
        Command::Construct { family, params, out, dot, basis_highlight, caps } => {
            let built = construct::build(&family, &params)?;
            let g = &built.graph;
            let text = write_edge_list(g);
            match &out {
                Some(p) => write(p, &text)?,
                None if !matches!(dot, Some(None)) => print!("{text}"),
                None => {}
            }
            if let Some(target) = dot {
                let highlight = match (basis_highlight, built.landmarks) {
                    (false, _) => Vec::new(),
                    (true, Some(w)) => w,
                    (true, None) => metric_dimension_with(g, &caps.limits())?.basis,
                };
                let d = to_dot(g, &highlight);
                match target {
                    Some(p) => write(&p, &d)?,
                    None => print!("{d}"),
                }
            }
        }
        Command::VerifyResolving { path, set } => {
            let check = commands::verify_resolving(&load_graph(&path)?, &parse_list(&set)?)?;
            if json {
                println!("{}", serde_json::to_string(&check)?);
            } else {
                print!("{}", check.to_text());
            }
            if !check.resolves {
                return Ok(1);
            }
        }
        Command::ShortlexAssign { path, w, p, reverse, out } => {
            let g = load_graph(&path)?;
            let (h, rep) = commands::shortlex_assign(&g, parse_list(&w)?, parse_list(&p)?, reverse)?;
            let text = write_edge_list(&h);
            if let Some(o) = &out {
                write(o, &text)?;
            }
            if json {
                println!("{}", serde_json::to_string(&rep)?);
            } else if out.is_none() {
                print!("{text}");
            }
        }
        Command::Atlas { max_order, out } => {
            let rows = commands::atlas(max_order)?;
            let reports: Vec<Report> = rows.iter().map(|(_, r)| r.clone()).collect();
            let summary = commands::atlas_summary(&reports);
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir.join("graphs")).with_context(|| format!("creating {}", dir.display()))?;
                let mut lines = String::new();
                for (i, (g, r)) in rows.iter().enumerate() {
                    lines.push_str(&r.to_json());
                    lines.push('\n');
                    write(&dir.join("graphs").join(format!("{i:04}.el")), &write_edge_list(g))?;
                }
                write(&dir.join("reports.jsonl"), &lines)?;
                write(&dir.join("summary.txt"), &summary)?;
            }
            if json && out.is_none() {
                for r in &reports {
                    println!("{}", r.to_json());
                }
            } else {
                print!("{summary}");
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}
