//! `graphlogic` command-line tool.
//!
//! Exit codes: 0 success or true, 1 negative answer, 2 usage or parse error,
//! 3 infeasible, 4 resource cap or deadline.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use graphlogic::generate;
use graphlogic::io::{parse_graph, write_graph, GraphFormat};
use graphlogic::logic::{catalog_formula, evaluate, parse_formula, Formula, Sort, Structure};
use graphlogic::modification::{
    audit_ratio, edge_mode_supported, exact_deletion, polynomial_deletion, DeletionCaps, DeletionResult, Mode,
    ModError,
};
use graphlogic::recognition::{is_in_class, Class};
use graphlogic::tw::{
    decompose, make_nice, min_coloring_dp, min_coloring_exact, solve_coloring_dp, solve_coloring_exact,
    solve_domination_dp, solve_domination_exact, ColoringVariant, DominationVariant, ExactCaps, SolveError,
    Strategy, TdError, TreeDecomposition,
};
use graphlogic::{EdgeSet, Graph, VertexSet};
use rand::Rng;
use serde_json::{json, Value};

const DEADLINE_ENV: &str = "GRAPHLOGIC_DEADLINE_SECS";

#[derive(Parser)]
#[command(name = "graphlogic", version, about = "Graph class recognition, deletion, domination and coloring solvers")]
struct Cli {
    /// Input and output graph format.
    #[arg(long, global = true, default_value = "edge-list")]
    format: GraphFormat,
    /// Report style on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Wall-clock limit for exact searches, in seconds. Falls back to
    /// GRAPHLOGIC_DEADLINE_SECS.
    #[arg(long, global = true)]
    deadline: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DeleteMethod {
    Exact,
    Approx,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Dp,
    Exact,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership in a graph class; prints a witness when not a member.
    Recognize {
        #[arg(long)]
        class: Class,
        graph: PathBuf,
    },
    /// Delete vertices or edges so that the graph lands in a class.
    Delete {
        #[arg(long)]
        class: Class,
        #[arg(long, default_value = "node")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = DeleteMethod::Auto)]
        method: DeleteMethod,
        /// With `--method auto`, run the exact search when within caps.
        #[arg(long)]
        prefer_exact: bool,
        /// Vertex cap for exact node deletion.
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
        /// Edge cap for exact edge deletion.
        #[arg(long, default_value_t = 16)]
        max_edges: usize,
        graph: PathBuf,
    },
    /// Solve a domination or coloring variant.
    Solve {
        /// dom, total_dom, connected_dom, total_outer_connected_dom, cycle_dom,
        /// perfect_dom, clique_dom, coloring, star, cd, edge, rainbow, total, equitable.
        #[arg(long)]
        variant: String,
        /// Tree decomposition in PACE .td format for the DP solvers.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, default_value = "min-degree")]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
        /// Number of colors.
        #[arg(long, conflicts_with = "min_k")]
        k: Option<usize>,
        /// Find the smallest number of colors.
        #[arg(long)]
        min_k: bool,
        graph: PathBuf,
    },
    /// Print a tree decomposition in PACE .td format, or check one.
    Decompose {
        #[arg(long, default_value = "min-degree")]
        strategy: Strategy,
        /// Validate this decomposition against the graph instead.
        #[arg(long)]
        check: Option<PathBuf>,
        graph: PathBuf,
    },
    /// Evaluate a formula with its free variables bound.
    Check {
        /// Formula file, or `@name` for a catalog formula.
        #[arg(long)]
        formula: String,
        /// Binds the free set variable: "0,2" for vertices, "0-1,2-3" for edges.
        #[arg(long)]
        set: Option<String>,
        /// Binds a free vertex variable, as `name=v`. Repeatable.
        #[arg(long = "vertex")]
        vertices: Vec<String>,
        /// Binds free color families: vertex colors, then edge colors in canonical order.
        #[arg(long)]
        colors: Option<String>,
        /// Number of colors for `--colors` (default: largest color + 1).
        #[arg(long)]
        k: Option<usize>,
        graph: PathBuf,
    },
    /// Write a generated graph to stdout.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the polynomial deletion solver with the exact one.
    Audit {
        #[arg(long)]
        class: Class,
        #[arg(long, default_value = "node")]
        mode: Mode,
        /// Number of random graphs when no graph file is given.
        #[arg(long, default_value_t = 200)]
        graphs: usize,
        /// Largest vertex count of the random graphs.
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Path { n: usize },
    Cycle { n: usize },
    /// K1,n: a center with `n` leaves.
    Star { n: usize },
    Complete { n: usize },
    Gnp { n: usize, p: f64 },
    /// Random partial 2-tree; `--td-out` writes its width-2 decomposition.
    #[command(name = "partial-2-tree")]
    Partial2Tree {
        n: usize,
        #[arg(long)]
        td_out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Infeasible,
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Infeasible => 3,
            Failure::Limit(_) => 4,
        }
    }
}

impl From<ModError> for Failure {
    fn from(e: ModError) -> Self {
        match e {
            ModError::Cap { .. } | ModError::Deadline => Failure::Limit(e.to_string()),
            ModError::Unsupported(_) | ModError::Internal(_) => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Cap { .. } | SolveError::Deadline => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<TdError> for Failure {
    fn from(e: TdError) -> Self {
        match e {
            TdError::Cap { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command prints on success; `negative` selects exit code 1.
struct Report {
    json: Value,
    text: String,
    negative: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, negative: false }
    }
}

type CmdResult = Result<Report, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph, Failure> {
    parse_graph(&read_text(path)?, format).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn deadline(flag: Option<f64>) -> Result<Option<Instant>, Failure> {
    let secs = match flag {
        Some(s) => Some(s),
        None => match std::env::var(DEADLINE_ENV) {
            Ok(v) => Some(v.trim().parse::<f64>().map_err(|_| usage(format!("{DEADLINE_ENV}: not a number: {v}")))?),
            Err(_) => None,
        },
    };
    match secs {
        Some(s) if !(s.is_finite() && s > 0.0) => Err(usage(format!("deadline must be positive, got {s}"))),
        Some(s) => Ok(Some(Instant::now() + Duration::from_secs_f64(s))),
        None => Ok(None),
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn recognize(g: &Graph, class: Class) -> CmdResult {
    let m = is_in_class(g, class);
    let text = match &m.witness {
        None => format!("{class}: member"),
        Some(w) => format!("{class}: not a member, witness {:?} on {:?}", w.kind, w.vertices),
    };
    Ok(Report {
        json: json!({ "class": class, "member": m.member, "witness": m.witness }),
        text,
        negative: !m.member,
    })
}

fn deletion_text(r: &DeletionResult) -> String {
    format!(
        "{} {} deletion ({}): size {}, certified {}",
        r.class,
        r.mode,
        to_json(&r.method).as_str().unwrap_or_default(),
        r.size,
        r.certified
    )
}

fn delete(g: &Graph, class: Class, mode: Mode, method: DeleteMethod, prefer_exact: bool, caps: DeletionCaps) -> CmdResult {
    if mode == Mode::Edge && !edge_mode_supported(class) {
        return Err(usage(format!("edge deletion toward {class} is not a supported problem")));
    }
    let result = match method {
        DeleteMethod::Exact => exact_deletion(g, class, mode, caps)?,
        DeleteMethod::Approx => polynomial_deletion(g, class, mode)?,
        DeleteMethod::Auto => {
            let has_polynomial =
                class.patterns().is_some() || matches!(class, Class::Comparability | Class::Interval | Class::Permutation);
            if prefer_exact || !has_polynomial {
                match exact_deletion(g, class, mode, caps) {
                    Ok(r) => r,
                    Err(ModError::Cap { .. } | ModError::Deadline) if has_polynomial => {
                        polynomial_deletion(g, class, mode)?
                    }
                    Err(e) => return Err(e.into()),
                }
            } else {
                polynomial_deletion(g, class, mode)?
            }
        }
    };
    Ok(Report::ok(to_json(&result), deletion_text(&result)))
}

enum Variant {
    Domination(DominationVariant),
    Coloring(ColoringVariant),
}

fn parse_variant(s: &str) -> Result<Variant, Failure> {
    if let Ok(v) = s.parse::<DominationVariant>() {
        return Ok(Variant::Domination(v));
    }
    s.parse::<ColoringVariant>()
        .map(Variant::Coloring)
        .map_err(|_| usage(format!("unknown variant `{s}`")))
}

struct SolveArgs {
    td: Option<PathBuf>,
    strategy: Strategy,
    method: SolveMethod,
    k: Option<usize>,
    min_k: bool,
}

fn decomposition_for(g: &Graph, td: &Option<PathBuf>, strategy: Strategy) -> Result<TreeDecomposition, Failure> {
    match td {
        Some(path) => {
            let (td, n) = TreeDecomposition::from_pace(&read_text(path)?)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if n != g.n() {
                return Err(usage(format!("{}: decomposition is for {n} vertices, graph has {}", path.display(), g.n())));
            }
            Ok(td)
        }
        None => Ok(decompose(g, strategy)?),
    }
}

fn solve(g: &Graph, variant: Variant, args: SolveArgs, caps: ExactCaps) -> CmdResult {
    match variant {
        Variant::Domination(v) => {
            if args.k.is_some() || args.min_k {
                return Err(usage("--k and --min-k apply to coloring variants"));
            }
            let use_dp = match args.method {
                SolveMethod::Dp if !v.has_dp() => return Err(usage(format!("{v} has no decomposition DP; use --method exact"))),
                SolveMethod::Dp => true,
                SolveMethod::Exact => false,
                SolveMethod::Auto => v.has_dp(),
            };
            if !use_dp && args.td.is_some() {
                return Err(usage("--td is only used by the DP solvers"));
            }
            let result = if use_dp {
                let nd = make_nice(&decomposition_for(g, &args.td, args.strategy)?)?;
                solve_domination_dp(g, &nd, v)?
            } else {
                solve_domination_exact(g, v, caps)?
            };
            let r = result.ok_or(Failure::Infeasible)?;
            let text = format!("{v}: size {} set {:?}", r.size, r.set.as_slice());
            Ok(Report::ok(to_json(&r), text))
        }
        Variant::Coloring(v) => {
            if args.k.is_none() && !args.min_k {
                return Err(usage("coloring needs --k K or --min-k"));
            }
            let use_dp = match args.method {
                SolveMethod::Dp if v != ColoringVariant::Proper => {
                    return Err(usage(format!("{v} coloring has no decomposition DP; use --method exact")))
                }
                SolveMethod::Dp => true,
                SolveMethod::Exact => false,
                SolveMethod::Auto => v == ColoringVariant::Proper,
            };
            if !use_dp && args.td.is_some() {
                return Err(usage("--td is only used by the DP solvers"));
            }
            let result = if use_dp {
                let nd = make_nice(&decomposition_for(g, &args.td, args.strategy)?)?;
                match args.k {
                    Some(k) => solve_coloring_dp(g, &nd, k)?,
                    None => Some(min_coloring_dp(g, &nd)?),
                }
            } else {
                match args.k {
                    Some(k) => solve_coloring_exact(g, v, k, caps)?,
                    None => min_coloring_exact(g, v, caps)?,
                }
            };
            let a = result.ok_or(Failure::Infeasible)?;
            let text = format!("{v} coloring: k {} colors {:?}", a.k, a.colors);
            Ok(Report::ok(to_json(&a), text))
        }
    }
}

fn decompose_cmd(g: &Graph, strategy: Strategy, check: Option<PathBuf>) -> CmdResult {
    if let Some(path) = check {
        let (td, n) = TreeDecomposition::from_pace(&read_text(&path)?)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let verdict = if n != g.n() {
            Err(format!("decomposition is for {n} vertices, graph has {}", g.n()))
        } else {
            td.validate(g).map_err(|e| e.to_string())
        };
        let text = match &verdict {
            Ok(()) => format!("valid, width {}", td.width()),
            Err(e) => format!("invalid: {e}"),
        };
        let negative = verdict.is_err();
        return Ok(Report {
            json: json!({ "valid": !negative, "width": td.width(), "error": verdict.err() }),
            text,
            negative,
        });
    }
    let td = decompose(g, strategy)?;
    let pace = td.to_pace(g.n());
    Ok(Report::ok(Value::String(pace.clone()), pace))
}

fn load_formula(spec: &str) -> Result<Formula, Failure> {
    match spec.strip_prefix('@') {
        Some(name) => catalog_formula(name).map_err(|e| usage(e.to_string())),
        None => {
            let path = Path::new(spec);
            parse_formula(&read_text(path)?).map_err(|e| usage(format!("{spec}: {e}")))
        }
    }
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("{what}: `{t}` is not a number"))))
        .collect()
}

fn parse_vertex_set(s: &str, g: &Graph) -> Result<VertexSet, Failure> {
    let set: VertexSet = parse_list(s, "--set")?.into_iter().collect();
    set.check_range(g.n()).map_err(|e| usage(format!("--set: {e}")))?;
    Ok(set)
}

fn parse_edge_set(s: &str, g: &Graph) -> Result<EdgeSet, Failure> {
    let mut set = EdgeSet::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = t
            .split_once('-')
            .ok_or_else(|| usage(format!("--set: edge `{t}` must look like u-v")))?;
        let (a, b): (usize, usize) = match (a.trim().parse(), b.trim().parse()) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(usage(format!("--set: edge `{t}` must look like u-v"))),
        };
        if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
            return Err(usage(format!("--set: {a}-{b} is not an edge of the graph")));
        }
        set.insert(a, b);
    }
    Ok(set)
}

struct CheckArgs {
    set: Option<String>,
    vertices: Vec<String>,
    colors: Option<String>,
    k: Option<usize>,
}

fn check(g: &Graph, f: &Formula, args: CheckArgs) -> CmdResult {
    let mut m = Structure::new(g);
    let colors = args.colors.as_deref().map(|c| parse_list(c, "--colors")).transpose()?;
    let k = args
        .k
        .or_else(|| colors.as_ref().map(|c| c.iter().max().map_or(1, |&x| x + 1)));
    if let Some(k) = k {
        m = m.with_colors(k);
    }
    let has_vertex_family = f.free.values().any(|&s| s == Sort::VertexFamily);
    let mut set_used = false;
    let mut colors_used = false;
    let mut bound_vertices = 0;
    for (name, &sort) in &f.free {
        match sort {
            Sort::VertexSet | Sort::EdgeSet => {
                if set_used {
                    return Err(usage("formula has more than one free set variable"));
                }
                set_used = true;
                let s = args.set.as_deref().ok_or_else(|| usage(format!("free set `{name}` needs --set")))?;
                m = if sort == Sort::VertexSet {
                    m.with_vertex_set(name, parse_vertex_set(s, g)?)
                } else {
                    m.with_edge_set(name, parse_edge_set(s, g)?)
                };
            }
            Sort::Vertex => {
                let v = args
                    .vertices
                    .iter()
                    .find_map(|b| b.strip_prefix(name.as_str()).and_then(|r| r.strip_prefix('=')))
                    .ok_or_else(|| usage(format!("free vertex `{name}` needs --vertex {name}=V")))?;
                let v: usize = v.parse().map_err(|_| usage(format!("--vertex {name}: `{v}` is not a number")))?;
                if v >= g.n() {
                    return Err(usage(format!("--vertex {name}: {v} is out of range")));
                }
                bound_vertices += 1;
                m = m.with_vertex(name, v);
            }
            Sort::VertexFamily | Sort::EdgeFamily => {
                let c = colors.as_ref().ok_or_else(|| usage(format!("free family `{name}` needs --colors")))?;
                let k = k.unwrap_or(1);
                let nv = if has_vertex_family { g.n() } else { 0 };
                let want = nv + if f.free.values().any(|&s| s == Sort::EdgeFamily) { g.m() } else { 0 };
                if c.len() != want {
                    return Err(usage(format!("--colors: expected {want} colors, got {}", c.len())));
                }
                if let Some(&bad) = c.iter().find(|&&x| x >= k) {
                    return Err(usage(format!("--colors: color {bad} is not below k = {k}")));
                }
                colors_used = true;
                m = if sort == Sort::VertexFamily {
                    m.with_vertex_family(
                        name,
                        (0..k).map(|col| (0..g.n()).filter(|&v| c[v] == col).collect()).collect(),
                    )
                } else {
                    let edges: Vec<(usize, usize)> = g.edges().collect();
                    m.with_edge_family(
                        name,
                        (0..k)
                            .map(|col| edges.iter().enumerate().filter(|(i, _)| c[nv + i] == col).map(|(_, &e)| e).collect())
                            .collect(),
                    )
                };
            }
            Sort::Edge | Sort::Color => {
                return Err(usage(format!("cannot bind free variable `{name}` of sort {sort:?}")));
            }
        }
    }
    if args.set.is_some() && !set_used {
        return Err(usage("--set given but the formula has no free set variable"));
    }
    if args.colors.is_some() && !colors_used {
        return Err(usage("--colors given but the formula has no free color family"));
    }
    if args.vertices.len() > bound_vertices {
        return Err(usage("--vertex names a variable that is not free in the formula"));
    }
    let value = evaluate(f, &m).map_err(|e| usage(e.to_string()))?;
    Ok(Report {
        json: json!({ "value": value }),
        text: value.to_string(),
        negative: !value,
    })
}

fn check_p(p: f64) -> Result<(), Failure> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(usage(format!("edge probability must be in [0, 1], got {p}")))
    }
}

fn gen(kind: GenKind, seed: u64, format: GraphFormat) -> CmdResult {
    let g = match kind {
        GenKind::Path { n } => Graph::path(n),
        GenKind::Cycle { n } if n < 3 => return Err(usage("a cycle needs at least 3 vertices")),
        GenKind::Cycle { n } => Graph::cycle(n),
        GenKind::Star { n } => Graph::star(n),
        GenKind::Complete { n } => Graph::complete(n),
        GenKind::Gnp { n, p } => {
            check_p(p)?;
            generate::gnp(n, p, seed)
        }
        GenKind::Partial2Tree { n, td_out } => {
            let (g, td) = generate::partial_2_tree(n, seed);
            if let Some(path) = td_out {
                fs::write(&path, td.to_pace(n)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            g
        }
    };
    let text = write_graph(&g, format);
    Ok(Report::ok(Value::String(text.clone()), text))
}

struct Campaign {
    graphs: usize,
    max_n: usize,
    p: f64,
    seed: u64,
}

fn audit(class: Class, mode: Mode, graph: Option<Graph>, campaign: Campaign, caps: DeletionCaps) -> CmdResult {
    if mode == Mode::Edge && !edge_mode_supported(class) {
        return Err(usage(format!("edge deletion toward {class} is not a supported problem")));
    }
    let bound = if mode == Mode::Node { class.max_pattern_order() } else { None };
    if let Some(g) = graph {
        let a = audit_ratio(&g, class, mode, caps)?;
        let over = bound.is_some_and(|b| a.ratio > b as f64);
        let text = format!("approx {} exact {} ratio {:.3}", a.approx, a.exact, a.ratio);
        return Ok(Report {
            json: to_json(&a),
            text,
            negative: over,
        });
    }
    check_p(campaign.p)?;
    let mut rng = generate::rng(campaign.seed);
    let mut ratios = Vec::new();
    let mut skipped = 0;
    for _ in 0..campaign.graphs {
        let n = rng.gen_range(0..=campaign.max_n);
        let g = generate::gnp_with(n, campaign.p, &mut rng);
        match audit_ratio(&g, class, mode, caps) {
            Ok(a) => ratios.push(a.ratio),
            Err(ModError::Cap { .. }) => skipped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    let max = ratios.iter().copied().fold(0.0, f64::max);
    let mean = if ratios.is_empty() { 0.0 } else { ratios.iter().sum::<f64>() / ratios.len() as f64 };
    let mut histogram = std::collections::BTreeMap::<String, usize>::new();
    for r in &ratios {
        *histogram.entry(format!("{r:.2}")).or_default() += 1;
    }
    let within = bound.is_none_or(|b| max <= b as f64);
    let text = format!(
        "{class} {mode}: {} audited, {skipped} over caps, max ratio {max:.3}, mean {mean:.3}",
        ratios.len()
    );
    Ok(Report {
        json: json!({
            "class": class,
            "mode": mode,
            "audited": ratios.len(),
            "skipped": skipped,
            "maxRatio": max,
            "meanRatio": mean,
            "ratioBound": bound,
            "withinBound": within,
            "histogram": histogram,
        }),
        text,
        negative: !within,
    })
}

fn run(cli: Cli) -> CmdResult {
    let format = cli.format;
    let deadline = deadline(cli.deadline)?;
    match cli.command {
        Command::Recognize { class, graph } => recognize(&load_graph(&graph, format)?, class),
        Command::Delete {
            class,
            mode,
            method,
            prefer_exact,
            max_vertices,
            max_edges,
            graph,
        } => {
            let caps = DeletionCaps {
                max_vertices,
                max_edges,
                deadline,
            };
            delete(&load_graph(&graph, format)?, class, mode, method, prefer_exact, caps)
        }
        Command::Solve {
            variant,
            td,
            strategy,
            method,
            k,
            min_k,
            graph,
        } => {
            let variant = parse_variant(&variant)?;
            let caps = ExactCaps { deadline, ..ExactCaps::default() };
            let args = SolveArgs { td, strategy, method, k, min_k };
            solve(&load_graph(&graph, format)?, variant, args, caps)
        }
        Command::Decompose { strategy, check, graph } => decompose_cmd(&load_graph(&graph, format)?, strategy, check),
        Command::Check {
            formula,
            set,
            vertices,
            colors,
            k,
            graph,
        } => {
            let f = load_formula(&formula)?;
            check(&load_graph(&graph, format)?, &f, CheckArgs { set, vertices, colors, k })
        }
        Command::Gen { kind, seed } => gen(kind, seed, format),
        Command::Audit {
            class,
            mode,
            graphs,
            max_n,
            p,
            seed,
            graph,
        } => {
            let g = graph.map(|path| load_graph(&path, format)).transpose()?;
            let caps = DeletionCaps { deadline, ..DeletionCaps::default() };
            audit(class, mode, g, Campaign { graphs, max_n, p, seed }, caps)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output;
    let raw = matches!(cli.command, Command::Gen { .. } | Command::Decompose { check: None, .. });
    match run(cli) {
        Ok(report) => {
            if raw || output == Output::Text {
                let text = report.text;
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
            } else {
                println!("{}", report.json);
            }
            ExitCode::from(report.negative as u8)
        }
        Err(failure) => {
            match &failure {
                Failure::Infeasible => println!("{}", json!({ "infeasible": true })),
                Failure::Usage(msg) | Failure::Limit(msg) => eprintln!("graphlogic: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
