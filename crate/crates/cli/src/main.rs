//! `recolor` — plan, verify, and explore list recolorings of small graphs.
//!
//! Exit codes: 0 success; 1 a verification failed or no recoloring sequence
//! exists; 2 malformed input; 3 the requested planner does not apply or the
//! state budget was exceeded.

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use recolor_cli::export::{color_graph_dot, shift_digraph_dot};
use recolor_cli::format::{InstanceFile, PlanFile};
use recolor_cli::generate;
use recolor_core::coloring::{stitch, Color, Instance, Plan};
use recolor_core::graph::{detect_multipartite, max_matching};
use recolor_core::oracle::{bfs_distance, diameter, oracle_plan, OracleError, OracleOptions};
use recolor_core::planner::{audit_ledger, PlannerError};
use recolor_core::{plan_multipartite, plan_subcubic};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "recolor",
    version,
    about = "Plan and verify step-by-step list recolorings of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a recoloring plan between the two colorings of an instance.
    Plan {
        /// Instance JSON file.
        input: PathBuf,
        /// Which planner to use.
        #[arg(long, value_enum, default_value_t = PlannerChoice::Auto)]
        planner: PlannerChoice,
        /// Write the plan JSON here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a plan is a valid recoloring sequence for an instance.
    Verify {
        /// Instance JSON file.
        input: PathBuf,
        /// Plan JSON file.
        plan: PathBuf,
        /// Also fail (exit 1) if the plan exceeds the n + μ step bound.
        #[arg(long)]
        require_bound: bool,
    },
    /// Validate an instance file and report its structural properties.
    Check {
        /// Instance JSON file.
        input: PathBuf,
    },
    /// Exhaustive state-space queries (exact, budget-limited).
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Generate reproducible random instances.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Export diagnostic graphs in DOT format.
    Export {
        #[command(subcommand)]
        what: ExportWhat,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PlannerChoice {
    /// Multipartite if the graph is complete multipartite, else subcubic if
    /// the maximum degree is at most three, else exhaustive search.
    Auto,
    Subcubic,
    Multipartite,
    Oracle,
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Shortest number of recoloring moves between the two colorings.
    Distance { input: PathBuf },
    /// Size, connectivity, and exact diameter of the whole state space.
    Diameter { input: PathBuf },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Random graph of maximum degree three.
    Subcubic {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra colors per list beyond degree plus two.
        #[arg(long, default_value_t = 0)]
        extra_colors: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complete multipartite graph with the given part sizes.
    Multipartite {
        /// Comma-separated part sizes, e.g. 3,2,2.
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra colors per list beyond degree plus two.
        #[arg(long, default_value_t = 0)]
        extra_colors: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExportWhat {
    /// The color-shift digraph of an instance.
    Shift {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The conflict graph of one color.
    Color {
        input: PathBuf,
        /// The color whose conflict graph to export.
        #[arg(long)]
        color: Color,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failed run, carrying its process exit code.
enum Failure {
    /// Malformed or semantically invalid input (exit 2).
    Input(anyhow::Error),
    /// A verification failed or no sequence exists (exit 1).
    Verification(String),
    /// Planner inapplicable or state budget exceeded (exit 3).
    Unsupported(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::Unsupported(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(e) => format!("{e:#}"),
            Failure::Verification(m) | Failure::Unsupported(m) => m.clone(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Plan {
            input,
            planner,
            output,
        } => cmd_plan(&input, planner, output.as_deref()),
        Command::Verify {
            input,
            plan,
            require_bound,
        } => cmd_verify(&input, &plan, require_bound),
        Command::Check { input } => cmd_check(&input),
        Command::Oracle { query } => match query {
            OracleQuery::Distance { input } => cmd_distance(&input),
            OracleQuery::Diameter { input } => cmd_diameter(&input),
        },
        Command::Gen { family } => match family {
            GenFamily::Subcubic {
                n,
                seed,
                extra_colors,
                output,
            } => write_instance(generate::subcubic(n, seed, extra_colors), output.as_deref()),
            GenFamily::Multipartite {
                parts,
                seed,
                extra_colors,
                output,
            } => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(Failure::Input(anyhow::anyhow!(
                        "part sizes must be positive, got {parts:?}"
                    )));
                }
                write_instance(
                    generate::multipartite(&parts, seed, extra_colors),
                    output.as_deref(),
                )
            }
        },
        Command::Export { what } => match what {
            ExportWhat::Shift { input, output } => {
                let instance = load_instance(&input)?;
                write_output(&shift_digraph_dot(&instance), output.as_deref())?;
                Ok(())
            }
            ExportWhat::Color {
                input,
                color,
                output,
            } => {
                let instance = load_instance(&input)?;
                write_output(&color_graph_dot(&instance, color), output.as_deref())?;
                Ok(())
            }
        },
    }
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let file: InstanceFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse {} as an instance", path.display()))?;
    Ok(file.into_instance()?)
}

fn write_output(text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn write_instance(file: InstanceFile, output: Option<&Path>) -> Result<(), Failure> {
    file.clone()
        .into_instance()
        .context("generated instance failed validation")?;
    let mut json = serde_json::to_string_pretty(&file).context("cannot serialize instance")?;
    json.push('\n');
    write_output(&json, output)
}

fn oracle_options() -> Result<OracleOptions, Failure> {
    let mut opts = OracleOptions::default();
    if let Ok(raw) = std::env::var("RECOLOR_STATE_BUDGET") {
        opts.state_budget = raw
            .parse()
            .with_context(|| format!("RECOLOR_STATE_BUDGET must be a number, got {raw:?}"))?;
    }
    Ok(opts)
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::BudgetExceeded { .. } => Failure::Unsupported(e.to_string()),
        OracleError::DegreeCondition { .. } => Failure::Input(anyhow::Error::new(e)),
    }
}

fn planner_failure(e: PlannerError) -> Failure {
    Failure::Unsupported(e.to_string())
}

fn cmd_plan(input: &Path, choice: PlannerChoice, output: Option<&Path>) -> Result<(), Failure> {
    let instance = load_instance(input)?;
    let n = instance.n();
    let mu = max_matching(instance.graph()).len();

    let effective = match choice {
        PlannerChoice::Auto => {
            if detect_multipartite(instance.graph()).is_some() {
                PlannerChoice::Multipartite
            } else if instance.graph().max_degree() <= 3 {
                PlannerChoice::Subcubic
            } else {
                PlannerChoice::Oracle
            }
        }
        other => other,
    };

    let plan: Plan = match effective {
        PlannerChoice::Subcubic | PlannerChoice::Multipartite => {
            let planned = match effective {
                PlannerChoice::Subcubic => plan_subcubic(&instance),
                _ => plan_multipartite(&instance),
            }
            .map_err(planner_failure)?;
            let audit = audit_ledger(&instance, &planned).map_err(|e| {
                Failure::Verification(format!("planned ledger failed its audit: {e}"))
            })?;
            eprintln!(
                "plan: {} steps within bound {n} + {mu} = {}, {} levels",
                audit.total_steps,
                audit.step_budget,
                audit.levels
            );
            planned.plan
        }
        PlannerChoice::Oracle => {
            let plan = oracle_plan(&instance, &oracle_options()?)
                .map_err(oracle_failure)?
                .ok_or_else(|| {
                    Failure::Verification("no recoloring sequence exists".to_string())
                })?;
            eprintln!("plan: {} steps (exhaustive shortest path)", plan.len());
            plan
        }
        PlannerChoice::Auto => unreachable!("auto resolved above"),
    };

    let mut json =
        serde_json::to_string_pretty(&PlanFile::from_plan(&plan)).context("cannot serialize")?;
    json.push('\n');
    write_output(&json, output)
}

fn cmd_verify(input: &Path, plan_path: &Path, require_bound: bool) -> Result<(), Failure> {
    let instance = load_instance(input)?;
    let text = std::fs::read_to_string(plan_path)
        .with_context(|| format!("cannot read {}", plan_path.display()))?;
    let file: PlanFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse {} as a plan", plan_path.display()))?;
    let plan = file.into_plan();

    let steps = stitch(&instance, &plan)
        .map_err(|e| Failure::Verification(format!("plan does not verify: {e}")))?;

    let n = instance.n();
    let mu = max_matching(instance.graph()).len();
    let budget = n + mu;
    let within = steps.len() <= budget;
    println!(
        "plan verifies: {} moves from start to target (bound {n} + {mu} = {budget}: {})",
        steps.len(),
        if within { "met" } else { "exceeded" }
    );
    if require_bound && !within {
        return Err(Failure::Verification(format!(
            "plan uses {} moves, above the required bound {budget}",
            steps.len()
        )));
    }
    Ok(())
}

fn cmd_check(input: &Path) -> Result<(), Failure> {
    let instance = load_instance(input)?;
    let g = instance.graph();
    let mu = max_matching(g).len();
    let colors: BTreeSet<Color> = instance
        .alpha()
        .as_slice()
        .iter()
        .chain(instance.beta().as_slice())
        .copied()
        .collect();

    println!("vertices: {}", g.n());
    println!("edges: {}", g.edge_count());
    println!("max degree: {}", g.max_degree());
    println!("matching number: {mu}");
    println!("step bound (n + matching): {}", g.n() + mu);
    println!("colors in play: {}", colors.len());
    println!(
        "subcubic: {}",
        if g.max_degree() <= 3 { "yes" } else { "no" }
    );
    match detect_multipartite(g) {
        Some(parts) => {
            let sizes: Vec<usize> = (0..parts.num_parts())
                .map(|i| parts.part(i).len())
                .collect();
            println!("complete multipartite: yes, parts {sizes:?}");
        }
        None => println!("complete multipartite: no"),
    }
    Ok(())
}

fn cmd_distance(input: &Path) -> Result<(), Failure> {
    let instance = load_instance(input)?;
    let dist = bfs_distance(&instance, &oracle_options()?).map_err(oracle_failure)?;
    match dist {
        Some(d) => {
            println!("{d}");
            Ok(())
        }
        None => Err(Failure::Verification(
            "no recoloring sequence exists".to_string(),
        )),
    }
}

fn cmd_diameter(input: &Path) -> Result<(), Failure> {
    let instance = load_instance(input)?;
    let stats = diameter(instance.graph(), instance.lists(), &oracle_options()?)
        .map_err(oracle_failure)?;
    println!("states: {}", stats.vertex_count);
    println!("connected: {}", if stats.connected { "yes" } else { "no" });
    match stats.diameter {
        Some(d) => println!("diameter: {d}"),
        None => println!("diameter: undefined"),
    }
    if let Some((a, b)) = stats.witness {
        println!("witness: {:?} -> {:?}", a.as_slice(), b.as_slice());
    }
    Ok(())
}
