use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use pstlab::config::Config;
use pstlab::graph::{self, parse_graph6_stream, Graph};
use pstlab::hamiltonian::{adjacency_hamiltonian, laplacian_hamiltonian, IntegerHamiltonian, SingleExcitationHamiltonian};
use pstlab::io::{graph_to_json, load_graph, load_input, read_text, Input, InputError};
use pstlab::limits::{laplacian_diameter_bounds, rate_report_with, routing_impossibility_scan_with, DEFAULT_ALPHAS};
use pstlab::search::{census_with, enumerate_connected_graphs, write_records_csv, write_records_to, Model};
use pstlab::spectral::{decompose, format_char_poly, is_integral_spectrum};
use pstlab::transfer::{check_transfer_with, TransferStatus, TransferVerdict};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_SOFTWARE: u8 = 70;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "pstlab", version, about = "Perfect state transfer on spin networks")]
struct Cli {
    #[command(flatten)]
    tol: TolArgs,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct TolArgs {
    #[arg(long, global = true, env = "PSTLAB_GROUPING_TOL")]
    grouping_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_SUPPORT_TOL")]
    support_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_WEIGHT_TOL")]
    weight_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_PHASE_TOL")]
    phase_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_RESIDUAL_TOL")]
    residual_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_FIDELITY_TOL")]
    fidelity_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_MAX_DENOMINATOR")]
    max_denominator: Option<i64>,
    #[arg(long, global = true, env = "PSTLAB_T_MAX")]
    t_max: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_SCAN_GRID")]
    scan_grid: Option<usize>,
    #[arg(long, global = true, env = "PSTLAB_ZERO_GRID")]
    zero_grid: Option<usize>,
    #[arg(long, global = true, env = "PSTLAB_ZERO_TOL")]
    zero_tol: Option<f64>,
    #[arg(long, global = true, env = "PSTLAB_WORKERS")]
    workers: Option<usize>,
}

impl TolArgs {
    fn config(&self) -> Config {
        let d = Config::default();
        Config {
            grouping_tol: self.grouping_tol.unwrap_or(d.grouping_tol),
            support_tol: self.support_tol.unwrap_or(d.support_tol),
            weight_tol: self.weight_tol.unwrap_or(d.weight_tol),
            phase_tol: self.phase_tol.unwrap_or(d.phase_tol),
            residual_tol: self.residual_tol.unwrap_or(d.residual_tol),
            max_denominator: self.max_denominator.unwrap_or(d.max_denominator),
            fidelity_tol: self.fidelity_tol.unwrap_or(d.fidelity_tol),
            t_max: self.t_max.or(d.t_max),
            scan_grid: self.scan_grid.unwrap_or(d.scan_grid),
            zero_grid: self.zero_grid.unwrap_or(d.zero_grid),
            zero_tol: self.zero_tol.unwrap_or(d.zero_tol),
            workers: self.workers.or(d.workers),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Adjacency,
    Laplacian,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Cartesian,
    Conjunction,
    Strong,
    Join,
    Complement,
}

#[derive(Subcommand)]
enum Command {
    /// Decide perfect transfer between two vertices.
    Check {
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write |<v|exp(-iHt)|source>| for every vertex over a time grid as CSV.
    Evolve {
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        source: usize,
        /// t_start:t_end:steps
        #[arg(long)]
        times: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues, exact characteristic polynomial and integrality.
    Spectrum {
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        json: bool,
    },
    /// Laplacian diameter bounds, plus the rate report for a transfer pair.
    Bounds {
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        source: Option<usize>,
        #[arg(long, requires = "source")]
        target: Option<usize>,
        #[arg(long = "alpha")]
        alphas: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
    /// All perfect targets of one source (real Hamiltonians).
    Scan {
        input: PathBuf,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        #[arg(long)]
        source: usize,
        #[arg(long)]
        json: bool,
    },
    /// Combine graphs; prints the result as a JSON graph.
    Product {
        #[arg(value_enum)]
        op: ProductOp,
        g1: PathBuf,
        g2: Option<PathBuf>,
    },
    /// Census of perfect transfer over enumerated or graph6-supplied graphs.
    Search {
        #[arg(long, conflicts_with = "graph6_file", required_unless_present = "graph6_file")]
        n: Option<usize>,
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "adjacency,laplacian")]
        models: Vec<Model>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn software(message: impl ToString) -> Self {
        Failure {
            code: EXIT_SOFTWARE,
            message: message.to_string(),
        }
    }

    fn io(e: impl ToString) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        let code = match &e {
            InputError::Io { .. } => EXIT_NO_INPUT,
            InputError::NotAGraph => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

/// Magnitudes below this are rounding noise of the eigensolver and print as 0.
const NOISE_FLOOR: f64 = 1e-12;

/// Twelve significant digits.
fn sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < NOISE_FLOOR {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn num(x: f64) -> String {
    let r = sig(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e15) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn complex(z: Complex64) -> String {
    let im = sig(z.im);
    if im < 0.0 {
        format!("{} - {}i", num(z.re), num(-im))
    } else {
        format!("{} + {}i", num(z.re), num(im))
    }
}

fn jnum(x: f64) -> Value {
    json!(sig(x))
}

fn jcomplex(z: Complex64) -> Value {
    json!([sig(z.re), sig(z.im)])
}

fn hamiltonian_for(input: &Input, model: Option<ModelArg>) -> Result<(SingleExcitationHamiltonian, Option<IntegerHamiltonian>), Failure> {
    match (input, model) {
        (Input::Graph(g), None | Some(ModelArg::Adjacency)) => {
            let ih = adjacency_hamiltonian(g);
            Ok((ih.to_hamiltonian(), Some(ih)))
        }
        (Input::Graph(g), Some(ModelArg::Laplacian)) => {
            let ih = laplacian_hamiltonian(g);
            Ok((ih.to_hamiltonian(), Some(ih)))
        }
        (Input::Graph(_), Some(ModelArg::Weighted)) => {
            Err(Failure::usage("the weighted model needs a Hamiltonian (JSON couplings or CSV matrix) input"))
        }
        (Input::Hamiltonian(h), None | Some(ModelArg::Weighted)) => Ok((h.clone(), None)),
        (Input::Hamiltonian(_), Some(_)) => {
            Err(Failure::usage("adjacency and laplacian models need a graph input"))
        }
    }
}

fn check_vertex(h: &SingleExcitationHamiltonian, v: usize) -> Result<(), Failure> {
    h.support_graph().check_vertex(v).map_err(|e| Failure::usage(e.to_string()))
}

fn verdict_json(v: &TransferVerdict) -> Value {
    let (status, reason) = match &v.status {
        TransferStatus::Perfect => ("perfect", Value::Null),
        TransferStatus::NoTransfer { reason } => ("no_transfer", json!(reason.to_string())),
        TransferStatus::Undecided { note } => ("undecided", json!(note)),
    };
    let z: Option<Vec<i64>> = v.gap_structure.as_ref().filter(|g| g.commensurable).map(|g| {
        std::iter::once(0).chain(g.integers.iter().copied()).collect()
    });
    json!({
        "source": v.source,
        "target": v.target,
        "status": status,
        "reason": reason,
        "t0": v.t0.map(jnum),
        "transfer_phase": v.transfer_phase.map(jcomplex),
        "chi": v.gap_structure.as_ref().filter(|g| g.commensurable).map(|g| jnum(g.chi)),
        "r": v.r,
        "z": z,
        "fidelity": v.fidelity_at_t0.map(jnum),
        "phases": v.phases.iter().map(|p| json!({
            "eigenvalue": jnum(p.eigenvalue),
            "phase": jnum(p.phase),
            "weight": jnum(p.weight),
        })).collect::<Vec<_>>(),
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialise"));
}

fn cmd_check(input: &Path, model: Option<ModelArg>, a: usize, b: usize, as_json: bool, cfg: &Config) -> Outcome {
    let input = load_input(input)?;
    let (h, _) = hamiltonian_for(&input, model)?;
    check_vertex(&h, a)?;
    check_vertex(&h, b)?;
    if a == b {
        return Err(Failure::usage("source and target must differ"));
    }
    let v = check_transfer_with(&h, a, b, cfg).map_err(Failure::software)?;
    if as_json {
        print_json(&verdict_json(&v));
        return Ok(v.status.exit_code() as u8);
    }
    println!("transfer {a} -> {b}: {}", v.status);
    if let Some(t0) = v.t0 {
        println!("t0: {}", num(t0));
    }
    if let Some(p) = v.transfer_phase {
        println!("transfer phase: {}", complex(p));
    }
    if let Some(f) = v.fidelity_at_t0 {
        println!("fidelity at t0: {}", num(f));
    }
    if let Some(g) = v.gap_structure.as_ref().filter(|g| g.commensurable) {
        println!("gap unit chi: {}", num(g.chi));
        if let Some(r) = v.r {
            println!("r: {r}");
        }
    }
    if !v.phases.is_empty() {
        println!("eigenspace phases:");
        println!("  {:>16}  {:>16}  {:>16}  {:>4}", "eigenvalue", "phase", "weight", "z");
        let zs = v.gap_structure.as_ref().filter(|g| g.commensurable).map(|g| &g.integers);
        for (i, p) in v.phases.iter().enumerate() {
            let z = match (i, zs) {
                (0, Some(_)) => "0".to_string(),
                (i, Some(z)) => z[i - 1].to_string(),
                _ => "-".to_string(),
            };
            println!("  {:>16}  {:>16}  {:>16}  {:>4}", num(p.eigenvalue), num(p.phase), num(p.weight), z);
        }
    }
    Ok(v.status.exit_code() as u8)
}

fn parse_times(spec: &str) -> Result<(f64, f64, usize), Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Failure::usage(format!("--times must be t_start:t_end:steps, got {spec:?}"));
    let [s, e, n] = parts.as_slice() else {
        return Err(bad());
    };
    let start: f64 = s.trim().parse().map_err(|_| bad())?;
    let end: f64 = e.trim().parse().map_err(|_| bad())?;
    let steps: usize = n.trim().parse().map_err(|_| bad())?;
    if !(start.is_finite() && end.is_finite()) || end < start {
        return Err(Failure::usage("--times needs finite t_start <= t_end"));
    }
    if steps < 2 {
        return Err(Failure::usage("--times needs at least 2 steps"));
    }
    Ok((start, end, steps))
}

fn cmd_evolve(input: &Path, model: Option<ModelArg>, a: usize, times: &str, out: Option<&Path>, cfg: &Config) -> Outcome {
    let (start, end, steps) = parse_times(times)?;
    let input = load_input(input)?;
    let (h, _) = hamiltonian_for(&input, model)?;
    check_vertex(&h, a)?;
    let dec = decompose(&h, cfg.grouping_tol).map_err(Failure::software)?;
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(Failure::io)?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["time", "target", "re", "im", "magnitude"]).map_err(Failure::io)?;
    for i in 0..steps {
        let t = start + (end - start) * i as f64 / (steps - 1) as f64;
        for v in 0..h.n() {
            let amp = dec.amplitude(a, v, t);
            w.write_record([num(t), v.to_string(), num(amp.re), num(amp.im), num(amp.norm())])
                .map_err(Failure::io)?;
        }
    }
    w.flush().map_err(Failure::io)?;
    Ok(0)
}

fn cmd_spectrum(input: &Path, model: Option<ModelArg>, as_json: bool, cfg: &Config) -> Outcome {
    let input = load_input(input)?;
    let (h, ih) = hamiltonian_for(&input, model)?;
    let dec = decompose(&h, cfg.grouping_tol).map_err(Failure::software)?;
    let exact = ih.as_ref().map(is_integral_spectrum);
    if as_json {
        let eigs: Vec<Value> = dec
            .eigenspaces()
            .iter()
            .map(|e| json!({"eigenvalue": jnum(e.eigenvalue), "multiplicity": e.dim()}))
            .collect();
        print_json(&json!({
            "n": h.n(),
            "eigenvalues": eigs,
            "char_poly": exact.as_ref().map(|x| x.char_poly.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            "char_poly_text": exact.as_ref().map(|x| format_char_poly(&x.char_poly)),
            "integral": exact.as_ref().map(|x| x.integral),
        }));
        return Ok(0);
    }
    println!("eigenvalues:");
    for e in dec.eigenspaces() {
        println!("  {} (multiplicity {})", num(e.eigenvalue), e.dim());
    }
    match exact {
        Some(x) => println!("char poly: {}; integral: {}", format_char_poly(&x.char_poly), x.integral),
        None => println!("char poly: not available for weighted Hamiltonians"),
    }
    Ok(0)
}

fn cmd_bounds(
    input: &Path,
    model: Option<ModelArg>,
    source: Option<usize>,
    target: Option<usize>,
    alphas: &[f64],
    as_json: bool,
    cfg: &Config,
) -> Outcome {
    let input = load_input(input)?;
    if alphas.iter().any(|&a| !(a > 1.0)) {
        return Err(Failure::usage("--alpha values must exceed 1"));
    }
    let alphas = if alphas.is_empty() { DEFAULT_ALPHAS.to_vec() } else { alphas.to_vec() };
    let g = input.support_graph();
    if let Some(s) = source {
        g.check_vertex(s).map_err(|e| Failure::usage(e.to_string()))?;
    }
    let lap = laplacian_diameter_bounds(g, source, &alphas).map_err(|e| Failure {
        code: EXIT_DATA,
        message: e.to_string(),
    })?;
    let rate = match target {
        Some(b) => {
            let (h, _) = hamiltonian_for(&input, model)?;
            check_vertex(&h, b)?;
            let a = source.expect("clap requires --source with --target");
            Some(rate_report_with(&h, a, b, cfg).map_err(|e| Failure {
                code: EXIT_DATA,
                message: format!("no rate report for {a} -> {b}: {e}"),
            })?)
        }
        None => None,
    };
    if as_json {
        let mohar: Vec<Value> = lap
            .mohar
            .iter()
            .map(|m| json!({"alpha": jnum(m.alpha), "bound": m.bound}))
            .collect();
        print_json(&json!({
            "laplacian": {
                "d": lap.d,
                "two_d": lap.two_d,
                "k": lap.k,
                "k_minus_1": lap.k_minus_1,
                "mohar": mohar,
                "D": lap.diameter,
                "integral_spectrum": lap.integral_spectrum,
                "source": lap.source,
                "full_support": lap.full_support,
                "all_satisfied": lap.all_satisfied,
            },
            "rate": rate.as_ref().map(|r| json!({
                "source": r.source,
                "target": r.target,
                "t0": jnum(r.t0),
                "D": r.distance,
                "M": r.supported,
                "l": r.zeros,
                "zero_times": r.zero_times.iter().map(|&t| jnum(t)).collect::<Vec<_>>(),
                "bound_satisfied": r.bound_satisfied,
                "ml_lower_bound": jnum(r.ml_lower_bound),
            })),
        }));
        return Ok(0);
    }
    println!("Laplacian diameter bounds");
    println!("  diameter D: {}", lap.diameter);
    println!("  max degree d: {} (2d = {})", lap.d, lap.two_d);
    println!("  distinct eigenvalues k: {} (k - 1 = {})", lap.k, lap.k_minus_1);
    for m in &lap.mohar {
        match m.bound {
            Some(b) => println!("  Mohar alpha = {}: {b}", num(m.alpha)),
            None => println!("  Mohar alpha = {}: not applicable for N <= 2", num(m.alpha)),
        }
    }
    println!("  integral spectrum: {}", lap.integral_spectrum);
    if let Some(full) = lap.full_support {
        println!("  full support on source: {full}");
    }
    println!("  all satisfied: {}", lap.all_satisfied);
    if let Some(r) = rate {
        println!("Rate bound for {} -> {}", r.source, r.target);
        println!("  t0: {}", num(r.t0));
        println!("  D = {}, M = {}, l = {}", r.distance, r.supported, r.zeros);
        let zeros: Vec<String> = r.zero_times.iter().map(|&t| num(t)).collect();
        println!("  autocorrelation zeros: [{}]", zeros.join(", "));
        println!("  2l + D <= M: {}", r.bound_satisfied);
        println!("  Margolus-Levitin lower bound: {}", num(r.ml_lower_bound));
    }
    Ok(0)
}

fn cmd_scan(input: &Path, model: Option<ModelArg>, a: usize, as_json: bool, cfg: &Config) -> Outcome {
    let input = load_input(input)?;
    let (h, _) = hamiltonian_for(&input, model)?;
    check_vertex(&h, a)?;
    let scan = routing_impossibility_scan_with(&h, a, cfg).map_err(|e| Failure::usage(e.to_string()))?;
    if as_json {
        print_json(&json!({
            "source": a,
            "perfect": scan.perfect.iter().map(|&(c, t)| json!({"target": c, "t0": jnum(t)})).collect::<Vec<_>>(),
            "undecided": scan.undecided,
        }));
    } else {
        println!("perfect targets from {a}:");
        for &(c, t) in &scan.perfect {
            println!("  {c} at t0 = {}", num(t));
        }
        if !scan.undecided.is_empty() {
            println!("undecided targets: {:?}", scan.undecided);
        }
    }
    if !scan.single_target() {
        eprintln!("error: more than one perfect target from a real Hamiltonian");
        return Ok(EXIT_SOFTWARE);
    }
    Ok(0)
}

fn cmd_product(op: ProductOp, g1: &Path, g2: Option<&Path>) -> Outcome {
    let a = load_graph(g1)?;
    let second = || -> Result<Graph, Failure> {
        let p = g2.ok_or_else(|| Failure::usage("this product needs two graphs"))?;
        Ok(load_graph(p)?)
    };
    let result = match op {
        ProductOp::Cartesian => graph::cartesian_product(&a, &second()?),
        ProductOp::Conjunction => graph::conjunction(&a, &second()?),
        ProductOp::Strong => graph::strong_product(&a, &second()?),
        ProductOp::Join => {
            let j = graph::join(&a, &second()?);
            if !j.square_ok {
                eprintln!("note: join discriminant is not a perfect square for these inputs");
            }
            j.graph
        }
        ProductOp::Complement => {
            if g2.is_some() {
                return Err(Failure::usage("complement takes one graph"));
            }
            graph::complement(&a)
        }
    };
    println!("{}", graph_to_json(&result));
    Ok(0)
}

fn cmd_search(
    n: Option<usize>,
    graph6_file: Option<&Path>,
    models: &[Model],
    out: Option<&Path>,
    csv_out: Option<&Path>,
    cfg: &Config,
) -> Outcome {
    let mut models = models.to_vec();
    models.sort();
    models.dedup();
    let graphs = match (n, graph6_file) {
        (Some(n), _) => enumerate_connected_graphs(n).map_err(|e| Failure::usage(e.to_string()))?,
        (None, Some(p)) => {
            let text = read_text(p)?;
            let mut graphs = Vec::new();
            for (line, parsed) in parse_graph6_stream(&text) {
                match parsed {
                    Ok(g) => graphs.push(g),
                    Err(e) => eprintln!("skipping line {line}: {e}"),
                }
            }
            graphs
        }
        (None, None) => return Err(Failure::usage("give --n or --graph6-file")),
    };
    let outcome = census_with(&graphs, &models, cfg).map_err(Failure::software)?;
    for u in &outcome.undecided {
        eprintln!("undecided: {} {} {} -> {}: {}", u.graph6, u.model, u.source, u.target, u.note);
    }
    for f in &outcome.failures {
        eprintln!("failed: {} {}: {}", f.graph6, f.model, f.message);
    }
    match out {
        Some(p) => write_records_to(&outcome.records, BufWriter::new(File::create(p).map_err(Failure::io)?)),
        None => write_records_to(&outcome.records, io::stdout().lock()),
    }
    .map_err(Failure::io)?;
    if let Some(p) = csv_out {
        write_records_csv(&outcome.records, BufWriter::new(File::create(p).map_err(Failure::io)?)).map_err(Failure::io)?;
    }
    eprintln!(
        "{} graphs, {} perfect pairs, {} undecided, {} failures",
        graphs.len(),
        outcome.records.len(),
        outcome.undecided.len(),
        outcome.failures.len()
    );
    Ok(if outcome.failures.is_empty() { 0 } else { EXIT_SOFTWARE })
}

fn run(cli: Cli) -> Outcome {
    let cfg = cli.tol.config();
    cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
    match cli.cmd {
        Command::Check {
            input,
            model,
            source,
            target,
            json,
        } => cmd_check(&input, model, source, target, json, &cfg),
        Command::Evolve {
            input,
            model,
            source,
            times,
            out,
        } => cmd_evolve(&input, model, source, &times, out.as_deref(), &cfg),
        Command::Spectrum { input, model, json } => cmd_spectrum(&input, model, json, &cfg),
        Command::Bounds {
            input,
            model,
            source,
            target,
            alphas,
            json,
        } => cmd_bounds(&input, model, source, target, &alphas, json, &cfg),
        Command::Scan {
            input,
            model,
            source,
            json,
        } => cmd_scan(&input, model, source, json, &cfg),
        Command::Product { op, g1, g2 } => cmd_product(op, &g1, g2.as_deref()),
        Command::Search {
            n,
            graph6_file,
            models,
            out,
            csv,
        } => cmd_search(n, graph6_file.as_deref(), &models, out.as_deref(), csv.as_deref(), &cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
