use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotunda::correspondence::{check_compliance, compliant_graph, graphic_matroid};
use rotunda::export::{
    clique_tree_dot, graph_dot, reduced_clique_graph_dot, rotunda_graph_dot, rotunda_tree_dot, to_sorted_json, CliqueTreeFile,
    ReducedCliqueGraphFile, RotundaGraphFile, RotundaTreeFile,
};
use rotunda::graph::{clique_trees, reduced_clique_graph};
use rotunda::matroid::{catalog, set_enumeration_bound, DEFAULT_ENUMERATION_BOUND};
use rotunda::report::{analyze, Input};
use rotunda::rotunda_graph::{rotunda_graph, rotunda_tree};
use rotunda::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use rotunda::{Error, Matroid, SimpleGraph, Weighting};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

#[derive(Parser)]
#[command(name = "rotunda", version, about = "Rotunda graphs, rotunda trees and tree-width of small matroids")]
struct Cli {
    /// Largest ground set for exponential enumerations.
    #[arg(long, global = true, env = "ROTUNDA_ENUM_BOUND", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    bound: usize,
    /// Add wall-clock timings to the output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matroid or graph file and report its rotunda structure.
    Analyze { path: PathBuf },
    /// Run a property suite over the catalog.
    Verify(VerifyArgs),
    /// Write one computed object as DOT or JSON.
    Export(ExportArgs),
    /// List the catalog matroids.
    CatalogList {
        /// Largest graph order for the graphic entries.
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// A suite name, or `all`.
    suite: String,
    /// Largest ground set checked; each suite has its own default.
    #[arg(long)]
    max_elements: Option<usize>,
    /// Largest graph order checked.
    #[arg(long, default_value_t = 6)]
    graph_order: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    RotundaGraph,
    Rcg,
    CliqueTree,
    RotundaTree,
    CompliantGraph,
}

#[derive(Args)]
struct ExportArgs {
    path: PathBuf,
    what: What,
    #[arg(long, conflicts_with = "json", required_unless_present = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
    /// Write here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Lib(Error),
    Input(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    set_enumeration_bound(cli.bound);
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TooLarge { .. } => EXIT_TOO_LARGE,
                Error::Invariant(_) => EXIT_VERIFY,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Analyze { path } => cmd_analyze(path, cli.timing),
        Command::Verify(args) => cmd_verify(args, cli.timing),
        Command::Export(args) => cmd_export(args),
        Command::CatalogList { max_order, json } => cmd_catalog(*max_order, *json),
    }
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Input::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn cmd_analyze(path: &Path, timing: bool) -> Result<(), Failure> {
    let input = read_input(path)?;
    let (report, times) = analyze(&input, &stem(path))?;
    let mut value = serde_json::to_value(&report).expect("reports serialize");
    if timing {
        value["timing_ms"] = serde_json::to_value(&times).expect("timings serialize");
    }
    println!("{}", to_sorted_json(&value));
    Ok(())
}

fn print_suite(report: &SuiteReport) {
    for c in &report.checks {
        if c.passed() {
            println!("PASS {} / {} ({} cases)", report.suite, c.name, c.cases);
        } else {
            println!("FAIL {} / {} ({} of {} cases)", report.suite, c.name, c.failures, c.cases);
            for w in &c.counterexamples {
                println!("    counterexample: {w}");
            }
        }
    }
}

fn cmd_verify(args: &VerifyArgs, timing: bool) -> Result<(), Failure> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>().map_err(|e| Failure::Input(e.to_string()))?]
    };
    let mut reports = Vec::new();
    for s in suites {
        let mut opts = VerifyOptions::for_suite(s);
        opts.graph_order = args.graph_order;
        if let Some(n) = args.max_elements {
            opts.max_elements = n;
        }
        let start = Instant::now();
        let report = run_suite(s, opts)?;
        if !args.json {
            print_suite(&report);
            if timing {
                println!("     {} took {:.2} s", s, start.elapsed().as_secs_f64());
            }
        }
        reports.push(report);
    }
    if args.json {
        println!("{}", to_sorted_json(&reports));
    }
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn matroid_of(input: &Input) -> Matroid {
    match input {
        Input::Matroid(m) => m.clone(),
        Input::Graph(g) => graphic_matroid(g),
    }
}

fn graph_of(input: &Input, what: &str) -> Result<SimpleGraph, Failure> {
    match input {
        Input::Graph(g) => Ok(g.clone()),
        Input::Matroid(_) => Err(Failure::Input(format!("{what} needs a graph file"))),
    }
}

fn cmd_export(args: &ExportArgs) -> Result<(), Failure> {
    let input = read_input(&args.path)?;
    let text = match args.what {
        What::RotundaGraph => {
            let m = matroid_of(&input);
            let rg = rotunda_graph(&m, &Weighting::Rank)?;
            if args.dot {
                rotunda_graph_dot(&m, &rg)
            } else {
                to_sorted_json(&RotundaGraphFile::new(&m, &rg))
            }
        }
        What::RotundaTree => {
            let m = matroid_of(&input);
            let rt = rotunda_tree(&m, &Weighting::Rank)?;
            if args.dot {
                rotunda_tree_dot(&m, &rt)
            } else {
                to_sorted_json(&RotundaTreeFile::new(&m, &rt))
            }
        }
        What::Rcg => {
            let g = graph_of(&input, "rcg")?;
            let rcg = reduced_clique_graph(&g, &Weighting::Cardinality)?;
            if args.dot {
                reduced_clique_graph_dot(&g, &rcg)
            } else {
                to_sorted_json(&ReducedCliqueGraphFile::new(&g, &rcg))
            }
        }
        What::CliqueTree => {
            let g = graph_of(&input, "clique-tree")?;
            let ct = clique_trees(&g)?
                .into_iter()
                .next()
                .ok_or_else(|| Failure::Input("the graph has no vertices".into()))?;
            if args.dot {
                clique_tree_dot(&g, &ct)
            } else {
                to_sorted_json(&CliqueTreeFile::new(&g, &ct))
            }
        }
        What::CompliantGraph => {
            let m = matroid_of(&input);
            let c = compliant_graph(&m)?;
            let report = check_compliance(&m, &c.graph, &c.map)?;
            if !report.is_compliant() {
                return Err(Error::Invariant(format!("compliant graph failed its own check: {report:?}")).into());
            }
            if args.dot {
                let owner = |v: usize| {
                    let e = (0..m.size()).find(|&e| c.map.theta[e].contains(v)).expect("θ covers every vertex");
                    m.label(e).to_string()
                };
                graph_dot(&c.graph, Some(&owner))
            } else {
                to_sorted_json(&c.to_file(&m))
            }
        }
    };
    match &args.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn cmd_catalog(max_order: usize, json: bool) -> Result<(), Failure> {
    let entries = catalog(max_order);
    if json {
        let rows: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| serde_json::json!({"name": e.name, "size": e.matroid.size(), "rank": e.matroid.full_rank()}))
            .collect();
        println!("{}", to_sorted_json(&rows));
    } else {
        for e in &entries {
            println!("{}\t{}\t{}", e.name, e.matroid.size(), e.matroid.full_rank());
        }
    }
    Ok(())
}
