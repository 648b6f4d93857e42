//! Command implementations behind the `relbound` binary.

use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use relbound::generators::{complete, complete_split, cycle, path};
use relbound::{
    build_report, er_graph, generate_family, laplacian_spectrum, max_independent_set, measure_srg,
    ortho_graph, parse_edge_list, predicted_derived_srg, write_edge_list, BoundReport, BoundsError,
    DerivedPrediction, GeometryError, Graph, GraphError, LambdaMode, SpectralError, Spectrum,
    DEFAULT_NODE_BUDGET,
};
use serde_json::json;

/// Largest order on which the oracle runs without `--force-exact`.
pub const ORACLE_LIMIT: usize = 60;

#[derive(Debug, Parser)]
#[command(
    name = "relbound",
    version,
    about = "Spectral upper bounds on the independence number"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph as an edge list.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the Laplacian spectrum.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate every bound on a graph.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LambdaArg::Exact)]
        lambda: LambdaArg,
        #[arg(long)]
        recursive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compute the independence number exactly.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_limit: u64,
        #[arg(long)]
        force_exact: bool,
    },
    /// Reproduce a table of bounds as CSV.
    Table {
        selector: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaArg {
    Exact,
    Upper,
}

impl From<LambdaArg> for LambdaMode {
    fn from(arg: LambdaArg) -> Self {
        match arg {
            LambdaArg::Exact => LambdaMode::Exact,
            LambdaArg::Upper => LambdaMode::Upper,
        }
    }
}

/// A failed command. Parse failures exit with 2, everything else with 1.
#[derive(Debug)]
pub struct CliError {
    pub exit_code: u8,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError {
            exit_code: 2,
            message: message.into(),
        }
    }

    fn module(name: &str, message: impl fmt::Display) -> Self {
        CliError {
            exit_code: 1,
            message: format!("{name}: {message}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Parse { .. } => CliError::parse(format!("GraphError: {e}")),
            _ => CliError::module("GraphError", e),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Field(inner) => CliError::module("FieldError", inner),
            _ => CliError::module("GeometryError", e),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::module("SpectralError", e)
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Graph(inner) => inner.into(),
            BoundsError::Spectral(inner) => inner.into(),
            _ => CliError::module("BoundsError", e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::module("IoError", e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn read_graph(file: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::module("IoError", format!("{}: {e}", file.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_count(s: &str) -> CliResult<usize> {
    s.parse().map_err(|_| {
        CliError::parse(format!(
            "ParseError: expected a non-negative integer, got {s:?}"
        ))
    })
}

fn expect_params<'a>(family: &str, params: &'a [String], n: usize) -> CliResult<&'a [String]> {
    if params.len() != n {
        return Err(CliError::from(GraphError::BadParams(format!(
            "{family} takes {n} parameter(s), got {}",
            params.len()
        ))));
    }
    Ok(params)
}

pub fn generate(family: &str, params: &[String]) -> CliResult<Graph> {
    match family {
        "er" => {
            let p = expect_params(family, params, 1)?;
            Ok(er_graph(parse_count(&p[0])? as u64)?)
        }
        "ortho" => {
            let p = expect_params(family, params, 2)?;
            Ok(ortho_graph(
                parse_count(&p[0])?,
                parse_count(&p[1])? as u64,
            )?)
        }
        "cone" => {
            let p = expect_params(family, params, 1)?;
            Ok(read_graph(Path::new(&p[0]))?.cone()?)
        }
        "cartesian" => {
            let p = expect_params(family, params, 2)?;
            Ok(read_graph(Path::new(&p[0]))?.cartesian_product(&read_graph(Path::new(&p[1]))?))
        }
        _ => {
            let counts = params
                .iter()
                .map(|s| parse_count(s))
                .collect::<CliResult<Vec<_>>>()?;
            Ok(generate_family(family, &counts)?)
        }
    }
}

/// Oracle value if the graph is small enough and the search completes.
fn auto_oracle(g: &Graph) -> Option<usize> {
    if g.order() > ORACLE_LIMIT {
        return None;
    }
    let r = max_independent_set(g, DEFAULT_NODE_BUDGET);
    r.exhausted.then_some(r.alpha)
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            let g = generate(&family, &params)?;
            emit(&write_edge_list(&g), output.as_deref(), stdout)
        }
        Command::Spectrum { file, json } => {
            let g = read_graph(&file)?;
            let s: Spectrum = laplacian_spectrum(&g)?;
            let text = if json {
                let v = json!({
                    "n": g.order(),
                    "lambda_max": s.lambda_max(),
                    "eigenvalues": s.values(),
                    "tolerance": s.tolerance(),
                });
                format!("{v}\n")
            } else {
                let mut out = format!("n {}\nlambda_max {:.9}\n", g.order(), s.lambda_max());
                for x in s.values() {
                    writeln!(out, "{x:.9}").unwrap();
                }
                out
            };
            emit(&text, None, stdout)
        }
        Command::Bounds {
            file,
            lambda,
            recursive,
            json,
        } => {
            let g = read_graph(&file)?;
            let mut report: BoundReport = build_report(&g, lambda.into(), recursive)?;
            if let Some(a) = auto_oracle(&g) {
                report = report.with_oracle(a);
            }
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            emit(&text, None, stdout)
        }
        Command::Exact {
            file,
            node_limit,
            force_exact,
        } => {
            let g = read_graph(&file)?;
            if g.order() > ORACLE_LIMIT && !force_exact {
                return Err(CliError::module(
                    "TooLarge",
                    format!(
                        "{} vertices exceed {ORACLE_LIMIT}; pass --force-exact to run anyway",
                        g.order()
                    ),
                ));
            }
            let r = max_independent_set(&g, node_limit);
            if !r.exhausted {
                return Err(CliError::module(
                    "NodeLimit",
                    format!(
                        "search stopped after {} nodes; alpha >= {}",
                        r.nodes_explored, r.alpha
                    ),
                ));
            }
            let witness: Vec<String> = r.witness.members().iter().map(|v| v.to_string()).collect();
            let text = format!(
                "alpha {}\nwitness {}\nnodes {}\n",
                r.alpha,
                witness.join(" "),
                r.nodes_explored
            );
            emit(&text, None, stdout)
        }
        Command::Table { selector, output } => {
            let csv = table(&selector)?;
            emit(&csv, output.as_deref(), stdout)
        }
    }
}

pub const TABLE_HEADER: &str = "id,n,m,Delta,delta,lambda_max,hoffman,hoffman_floor,gn,gn_floor,relative,relative_floor,alpha_exact,sharp,srg_predicted,srg_measured";

struct Instance {
    id: String,
    graph: Graph,
    srg: Option<(String, String)>,
}

impl Instance {
    fn plain(id: impl Into<String>, graph: Graph) -> Self {
        Instance {
            id: id.into(),
            graph,
            srg: None,
        }
    }
}

fn instances(selector: &str) -> CliResult<Vec<Instance>> {
    let mut out = Vec::new();
    match selector {
        "paths" => {
            for n in 3..=50 {
                out.push(Instance::plain(format!("P{n}"), path(n)));
            }
        }
        "cones" => {
            for (id, base) in [
                ("C4", cycle(4)),
                ("C5", cycle(5)),
                ("C6", cycle(6)),
                ("K2,3", relbound::generators::complete_bipartite(2, 3)),
            ] {
                out.push(Instance::plain(format!("cone({id})"), base.cone()?));
            }
        }
        "er" => {
            for q in 2..=5 {
                out.push(Instance::plain(format!("ER{q}"), er_graph(q)?));
            }
        }
        "ortho" => {
            for (n, q) in [(5usize, 2u64), (4, 3)] {
                let graph = ortho_graph(n, q)?;
                let predicted = match predicted_derived_srg(q, n as u32)? {
                    DerivedPrediction::Srg { params, .. } => srg_cell(params),
                    DerivedPrediction::NotPredicted => "-".to_string(),
                };
                let measured =
                    measure_srg(&graph.derived_graph()?.0).map_or("-".to_string(), srg_cell);
                out.push(Instance {
                    id: format!("O{n}_{q}"),
                    graph,
                    srg: Some((predicted, measured)),
                });
            }
        }
        "products" => {
            let pairs = [
                ("P2", path(2), "P2", path(2)),
                ("P3", path(3), "P3", path(3)),
                ("P3", path(3), "P4", path(4)),
                ("C4", cycle(4), "P3", path(3)),
                ("C5", cycle(5), "P2", path(2)),
                ("K3", complete(3), "P3", path(3)),
                ("split3,3", complete_split(3, 3), "P4", path(4)),
            ];
            for (a, g, b, h) in pairs {
                out.push(Instance::plain(format!("{a}x{b}"), g.cartesian_product(&h)));
            }
        }
        "all" => {
            for s in ["paths", "cones", "er", "ortho", "products"] {
                out.extend(instances(s)?);
            }
        }
        _ => {
            return Err(CliError::module(
                "UnknownSelector",
                format!("{selector:?} is not one of paths, cones, er, ortho, products, all"),
            ))
        }
    }
    Ok(out)
}

fn srg_cell(p: relbound::SrgParams) -> String {
    format!("{};{};{};{}", p.v, p.k, p.lambda, p.mu)
}

fn row(inst: &Instance) -> CliResult<String> {
    let report: BoundReport = build_report(&inst.graph, LambdaMode::Exact, true)?;
    let alpha = auto_oracle(&inst.graph);
    let entry = |name: &str| report.get(name).expect("report lists every bound");
    let (h, gn, rel) = (entry("hoffman"), entry("gn"), entry("relative"));
    let (alpha_cell, sharp) = match alpha {
        Some(a) => (a.to_string(), if rel.floor == a { "yes" } else { "no" }),
        None => ("-".to_string(), "-"),
    };
    let (pred, meas) = inst.srg.clone().unwrap_or(("-".into(), "-".into()));
    Ok(format!(
        "{},{},{},{},{},{:.9},{:.9},{},{:.9},{},{:.9},{},{},{},{},{}\n",
        inst.id,
        report.order,
        report.edge_count,
        report.max_degree,
        report.min_degree,
        report.lambda,
        h.value,
        h.floor,
        gn.value,
        gn.floor,
        rel.value,
        rel.floor,
        alpha_cell,
        sharp,
        pred,
        meas
    ))
}

/// CSV for a table selector. Rows are computed in parallel and assembled in order.
pub fn table(selector: &str) -> CliResult<String> {
    let items = instances(selector)?;
    let rows: Vec<CliResult<String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .iter()
            .map(|inst| scope.spawn(move || row(inst)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("row worker panicked"))
            .collect()
    });
    let mut out = format!("{TABLE_HEADER}\n");
    for r in rows {
        out.push_str(&r?);
    }
    Ok(out)
}
