use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use grafen::asymptotics::{
    corrected_constant, degree_fraction_limit, edge_pair_limit, pair_merge_correction,
    series_constant, sublinear_degree_law,
};
use grafen::bounds::{bound_report, CSV_HEADER};
use grafen::graph::{parse_edge_list, Graph};
use grafen::harness::{
    fmt_sig, run_double_star_table, run_path_table, table_csv, CsvTable, ExperimentConfig, Scale,
    VERSION_LINE, WORKERS_ENV,
};
use grafen::random::{ba_tree, erdos_renyi, recursive_tree, Seed};

#[derive(Parser)]
#[command(name = "grafen", version, about = "Graph energy, energy bounds and random-tree experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph as an edge list.
    Gen {
        model: GenModel,
        #[arg(long)]
        n: usize,
        /// Attachment exponent (ba).
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        alpha: f64,
        /// Edge probability (er); defaults to 2/n.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact energy of an edge-list graph ("-" reads stdin).
    Energy { edgelist: PathBuf },
    /// Energy and every applicable upper bound of an edge-list graph.
    Bounds { edgelist: PathBuf },
    /// Closed-form comparison tables.
    Table {
        #[command(subcommand)]
        table: TableCommand,
    },
    /// Monte Carlo experiments.
    Exp {
        figure: Figure,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        reps: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the large sizes instead of the desk defaults.
        #[arg(long)]
        paper_scale: bool,
    },
    /// Limit constants, or a degree law as (d, value) rows.
    Constants {
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        /// Print the degree law for d = 1..=DEGREES instead of the constants.
        #[arg(long)]
        degrees: Option<usize>,
        /// Sublinear attachment exponent in (0, 1) for the degree law.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = 1_000_000)]
        d_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableCommand {
    DoubleStar {
        #[arg(long, default_value_t = 5)]
        p: usize,
        #[arg(long, default_value_t = 10)]
        q_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Path {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenModel {
    Ba,
    Rrt,
    Er,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

impl Figure {
    fn name(self) -> &'static str {
        match self {
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_edge_list(&text)?)
}

fn constants_table(tol: f64) -> Result<CsvTable> {
    let series = series_constant(tol)?;
    let corrected = corrected_constant(tol)?;
    let n22 = edge_pair_limit(2, 2)?;
    let mut t = CsvTable::new(["quantity", "value", "truncation_bound", "terms"]);
    let mut push = |name: &str, v: f64, bound: Option<f64>, terms: Option<usize>| {
        t.push(vec![
            name.into(),
            fmt_sig(v),
            bound.map(fmt_sig).unwrap_or_default(),
            terms.map(|k| k.to_string()).unwrap_or_default(),
        ])
    };
    push("series_constant", series.value, Some(series.truncation_bound), Some(series.terms_used));
    push("pair_merge_correction", pair_merge_correction(), None, None);
    push(
        "corrected_constant",
        corrected.value,
        Some(corrected.truncation_bound),
        Some(corrected.terms_used),
    );
    push("n22", *n22.numer() as f64 / *n22.denom() as f64, None, None);
    Ok(t)
}

fn degree_law_table(degrees: usize, alpha: Option<f64>, d_max: usize, tol: f64) -> Result<CsvTable> {
    let mut t = CsvTable::new(["d", "value"]);
    match alpha {
        None => {
            for d in 1..=degrees as u64 {
                let r = degree_fraction_limit(d)?;
                t.push(vec![d.to_string(), fmt_sig(*r.numer() as f64 / *r.denom() as f64)]);
            }
        }
        Some(alpha) => {
            let law = sublinear_degree_law(alpha, d_max.max(degrees), tol)?;
            for (i, q) in law.q.iter().take(degrees).enumerate() {
                t.push(vec![(i + 1).to_string(), fmt_sig(*q)]);
            }
        }
    }
    Ok(t)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            model,
            n,
            alpha,
            p,
            seed,
            stream,
            out,
        } => {
            if n == 0 {
                bail!("n must be at least 1");
            }
            let seed = Seed::new(seed, stream);
            let g = match model {
                GenModel::Ba => {
                    if !alpha.is_finite() {
                        bail!("alpha must be finite");
                    }
                    ba_tree(n, alpha, seed)
                }
                GenModel::Rrt => recursive_tree(n, seed),
                GenModel::Er => {
                    let p = p.unwrap_or(2.0 / n as f64).min(1.0);
                    if !(0.0..=1.0).contains(&p) {
                        bail!("p must lie in [0, 1], got {p}");
                    }
                    erdos_renyi(n, p, seed)
                }
            };
            emit(&g.to_edge_list_text(), out.as_deref())
        }
        Command::Energy { edgelist } => {
            let g = read_graph(&edgelist)?;
            let mut t = CsvTable::new(["n", "m", "energy", "energy_over_n"]);
            let e = grafen::energy(&g);
            let n = g.vertex_count();
            t.push(vec![
                n.to_string(),
                g.edge_count().to_string(),
                fmt_sig(e),
                if n == 0 { String::new() } else { fmt_sig(e / n as f64) },
            ]);
            emit(&t.render(), None)
        }
        Command::Bounds { edgelist } => {
            let g = read_graph(&edgelist)?;
            let r = bound_report(&g);
            emit(
                &format!("{VERSION_LINE}\n{CSV_HEADER}\n{}\n", r.to_csv_row()),
                None,
            )
        }
        Command::Table { table } => match table {
            TableCommand::DoubleStar { p, q_max, out } => {
                if p == 0 || q_max == 0 {
                    bail!("p and q-max must be at least 1");
                }
                let rows = run_double_star_table(p, 1..=q_max)?;
                emit(&table_csv("q", &rows).render(), out.as_deref())
            }
            TableCommand::Path { n_max, out } => {
                let rows = run_path_table(2..=n_max.max(2))?;
                emit(&table_csv("n", &rows).render(), out.as_deref())
            }
        },
        Command::Exp {
            figure,
            n,
            reps,
            seed,
            workers,
            out,
            paper_scale,
        } => {
            let scale = if paper_scale { Scale::Full } else { Scale::Desk };
            let mut cfg = ExperimentConfig::preset(figure.name(), scale).expect("known figure");
            cfg.n = n.unwrap_or(cfg.n);
            cfg.reps = reps.unwrap_or(cfg.reps);
            cfg.master_seed = seed;
            if let Some(w) = workers {
                cfg.workers = w;
            }
            cfg.output = out;
            let table = cfg.run()?;
            emit(&table.render(), cfg.output.as_deref())
        }
        Command::Constants {
            tol,
            degrees,
            alpha,
            d_max,
            out,
        } => {
            let t = match degrees {
                Some(k) => degree_law_table(k, alpha, d_max, tol)?,
                None => {
                    if alpha.is_some() {
                        bail!("--alpha needs --degrees");
                    }
                    constants_table(tol)?
                }
            };
            emit(&t.render(), out.as_deref())
        }
    }
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
