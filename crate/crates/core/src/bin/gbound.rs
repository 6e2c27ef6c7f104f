use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graph_boundary::abp::{abp_universal_coefficient, torsion_function};
use graph_boundary::boundary::isoperimetric_report;
use graph_boundary::energy::{maximize_energy, Kernel, MaximizeOptions};
use graph_boundary::graph::degree_extremes;
use graph_boundary::hardy::{hardy_certificate, HardyWeight};
use graph_boundary::io::scan::{read_corpus, scan_corpus, write_csv, write_json, ScanOptions};
use graph_boundary::io::{parse_edgelist, parse_graph6, write_dot};
use graph_boundary::spectral::{faber_krahn_report, hotspots_ratio_check, hotspots_report};
use graph_boundary::walks::{estimate_exit_time, hitting_potential};
use graph_boundary::{all_pairs_distances, boundary_set, Error, Graph};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Parser)]
#[command(name = "gbound", version, about = "Graph boundaries and the estimates built on them")]
struct Cli {
    /// Input format of graph files
    #[arg(long, global = true, value_enum, default_value = "graph6")]
    format: Format,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Also write the graph with its boundary highlighted as DOT
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary vertices, witnesses and the isoperimetric comparison
    Boundary { input: PathBuf },
    /// Exit times of the walk absorbed on the boundary
    Walk {
        input: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        /// Start vertex for the simulation (default: the farthest from the boundary)
        #[arg(long)]
        start: Option<usize>,
    },
    /// Dirichlet and Neumann eigenvalue checks
    Spectrum { input: PathBuf },
    /// Hardy weights and the spectral certificate
    Hardy { input: PathBuf },
    /// Sharp and universal maximum-principle constants
    Abp {
        input: PathBuf,
        /// Comma-separated vertex set X (default: the boundary)
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<usize>>,
    },
    /// Maximize the distance energy with kernel d^alpha
    Energy {
        input: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        alpha: f64,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
    },
    /// Analyze every graph in graph6 files or directories
    Scan {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_graph(path: &PathBuf, format: Format) -> Result<Graph, Error> {
    let text = read_input(path)?;
    match format {
        Format::Edgelist => parse_edgelist(&text),
        Format::Graph6 => {
            let line = text.lines().find(|l| !l.trim().is_empty()).ok_or(Error::EmptyGraph)?;
            parse_graph6(line.trim())
        }
    }
}

fn emit(value: &Value, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
        return;
    }
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::String(s) => println!("{k}: {s}"),
                other => println!("{k}: {other}"),
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    if let Command::Scan { inputs } = &cli.command {
        let options = ScanOptions {
            workers: cli.workers,
            seed: cli.seed,
            ..ScanOptions::default()
        };
        let report = scan_corpus(&read_corpus(inputs)?, &options)?;
        let stdout = std::io::stdout().lock();
        if cli.json {
            write_json(&report, stdout)?;
        } else {
            write_csv(&report.records, stdout)?;
            let s = &report.summary;
            eprintln!(
                "records {} | skipped: {} unparsable, {} disconnected | violations {} | hot spots violated {}/{} ({:.4})",
                s.records,
                s.parse_errors,
                s.disconnected,
                s.violations.len(),
                s.hotspots_violated,
                s.hotspots_holds + s.hotspots_violated + s.hotspots_degenerate,
                s.hotspots_violation_rate
            );
        }
        return Ok(());
    }

    let input = match &cli.command {
        Command::Boundary { input }
        | Command::Walk { input, .. }
        | Command::Spectrum { input }
        | Command::Hardy { input }
        | Command::Abp { input, .. }
        | Command::Energy { input, .. } => input,
        Command::Scan { .. } => unreachable!(),
    };
    let g = load_graph(input, cli.format)?;
    let dist = all_pairs_distances(&g);
    let boundary = boundary_set(&g, &dist);
    if let Some(path) = &cli.dot {
        write_dot(&g, &boundary, path)?;
    }
    let members: Vec<usize> = boundary.members().collect();
    let (mindeg, maxdeg) = degree_extremes(&g);
    let diam = f64::from(dist.diameter());
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();

    let out = match &cli.command {
        Command::Boundary { .. } => {
            let witnesses: Vec<Value> = members
                .iter()
                .map(|&v| json!({"vertex": g.label(v), "witness": g.label(boundary.witness(v).unwrap())}))
                .collect();
            let mut out = json!({
                "n": g.n(),
                "boundary": labels(&members),
                "boundary_size": members.len(),
                "witnesses": witnesses,
            });
            if g.n() > 1 {
                let iso = isoperimetric_report(&g, &dist, &boundary)?;
                out["isoperimetric_lhs"] = json!(iso.lhs);
                out["isoperimetric_rhs"] = json!(format!("{}/{}", iso.rhs.numer(), iso.rhs.denom()));
                out["isoperimetric_holds"] = json!(iso.holds);
            }
            out
        }
        Command::Walk { trials, start, .. } => {
            let potential = hitting_potential(&g, &members)?;
            let v0 = match start {
                Some(v) if *v >= g.n() => return Err(Error::VertexOutOfRange(*v, *v, g.n())),
                Some(v) => *v,
                None => (0..g.n()).fold(0, |b, v| if potential.phi[v] > potential.phi[b] { v } else { b }),
            };
            let est = estimate_exit_time(&g, &members, v0, (*trials).max(1), cli.seed)?;
            json!({
                "phi": potential.phi,
                "max_exit_time": potential.max(),
                "exit_time_bound": maxdeg as f64 * diam * diam,
                "start": g.label(v0),
                "exact_mean": potential.phi[v0],
                "simulated_mean": est.mean,
                "simulated_stderr": est.stderr,
                "trials": est.trials,
            })
        }
        Command::Spectrum { .. } => {
            let fk = faber_krahn_report(&g, &dist, &boundary)?;
            let hs = hotspots_report(&g, &boundary)?;
            let ratio = hotspots_ratio_check(&g, &dist, &boundary)?;
            json!({
                "lambda1": fk.lambda1,
                "faber_krahn_bound": fk.bound,
                "q": fk.q,
                "faber_krahn_holds": fk.holds,
                "lambda2": hs.lambda2,
                "multiplicity": hs.multiplicity,
                "hotspots": hs.overall.to_string(),
                "hotspots_ratio": ratio.ratio,
                "hotspots_ratio_bound": ratio.bound,
                "hotspots_ratio_applicable": ratio.applicable,
            })
        }
        Command::Hardy { .. } => {
            let potential = hitting_potential(&g, &members)?;
            let weight = HardyWeight::from_potential(&g, &potential);
            let hardy: Vec<Option<f64>> = weight.w.iter().map(|w| w.map(|x| -x)).collect();
            let certificate = match hardy_certificate(&g, &boundary, &potential) {
                Ok(c) => Some(c),
                Err(Error::InteriorEmpty) => None,
                Err(e) => return Err(e),
            };
            json!({
                "hardy_weight": hardy,
                "hardy_certificate": certificate,
            })
        }
        Command::Abp { x, .. } => {
            let x = x.clone().unwrap_or_else(|| members.clone());
            if let Some(&v) = x.iter().find(|&&v| v >= g.n()) {
                return Err(Error::VertexOutOfRange(v, v, g.n()));
            }
            let t = torsion_function(&g, &x)?;
            json!({
                "x": labels(&x),
                "torsion": t.u,
                "sharp_constant": t.max(),
                "universal_bound": abp_universal_coefficient(&g, &dist),
                "mindeg": mindeg,
                "maxdeg": maxdeg,
            })
        }
        Command::Energy { alpha, restarts, .. } => {
            let kernel = Kernel::power(*alpha, dist.diameter());
            let options = MaximizeOptions {
                restarts: *restarts,
                seed: cli.seed,
                ..MaximizeOptions::default()
            };
            let m = maximize_energy(&g, &dist, &boundary, &kernel, options)?;
            json!({
                "alpha": alpha,
                "energy": m.energy,
                "mu_star": m.mu_star.mass,
                "interior_mass": m.interior_mass,
            })
        }
        Command::Scan { .. } => unreachable!(),
    };
    emit(&out, cli.json);
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 1 } else { 2 })
        }
    }
}
