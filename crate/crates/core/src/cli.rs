//! Command-line front end. [`run`] parses `argv`, writes results to `out`
//! and diagnostics to `err`, and returns the process exit code:
//!
//! * `0` success, or the checked property holds
//! * `1` usage error, unreadable or malformed input
//! * `2` checked property violated, monochromatic connected matching found
//!   where avoidance was expected, or no avoider exists
//! * `3` search budget exhausted before a verdict

use std::fmt::Write as _;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::audit::audit_dense_coloring;
use crate::bounds::{erdos_gallai_check, small_components_bound, BoundsError, DenseParams};
use crate::constructions::{
    affine_plane_coloring, clique_cover_coloring, disjoint_cliques_coloring, random_coloring,
};
use crate::format::{parse_graph, serialize, to_dot};
use crate::graph::{color_class, components, EdgeColoring, Graph};
use crate::loss::{
    check_coloring_loss_sum, check_vertex_loss_sum, classify_vertices, LossError, VertexClass,
};
use crate::partition::{partition_edge_bound, sqi_partition, verify_sqi, Part};
use crate::ramsey::{
    ramsey_cm, search_with_stats, RamseyOutcome, SearchConfig, SearchError, SearchOutcome,
};
use crate::rational::{display, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cmramsey",
    version,
    about = "Connected matchings in edge-colored graphs"
)]
struct Cli {
    /// Seed for randomized commands; echoed in every output header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// S/Q/I partition of every component of a graph.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        /// Also emit Graphviz with the parts as node classes.
        #[arg(long)]
        dot: bool,
    },
    /// Compare the vertex-loss sum with the graph (or coloring) loss.
    LossCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Print one `v <id> <class> <loss>` line per vertex.
        #[arg(long)]
        ledger: bool,
    },
    /// Strong / q-saturated / small class of every vertex.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Edge-count bounds: per-color Erdős–Gallai and the small-components bound.
    BoundsCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Number of colors for the small-components bound (default: the
        /// coloring's palette).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Trace the dense-coloring counting argument on a coloring.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long, value_parser = parse_rational)]
        delta: Rational,
    },
    /// Build a coloring and print it.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        #[arg(long, global = true)]
        dot: bool,
    },
    /// Look for a k-coloring of K_N without a monochromatic connected
    /// matching of size n/2.
    Search {
        #[arg(long = "n-vertices")]
        vertices: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_even)]
        n: usize,
        /// Run to completion unless --budget is given.
        #[arg(long)]
        exhaustive: bool,
        /// Node budget (default 1000000, unlimited with --exhaustive).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        no_color_symmetry: bool,
        #[arg(long)]
        no_vertex_symmetry: bool,
        #[arg(long)]
        no_capacity_pruning: bool,
        /// Shuffle the color order at each node using --seed.
        #[arg(long)]
        shuffle: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Smallest N on which every k-coloring of K_N has a monochromatic
    /// connected matching of size n/2.
    Ramsey {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_even)]
        n: usize,
        #[arg(long = "max")]
        n_max: usize,
        /// Node budget per N.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long, value_parser = parse_even)]
    n: usize,
    /// Graph file in the edge-list format; `-` reads standard input.
    #[arg(long)]
    input: String,
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// Line-direction coloring of K_{q²} over the field with q elements.
    Affine {
        #[arg(long)]
        q: usize,
    },
    /// Uniform random coloring of K_N.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        k: usize,
    },
    /// Per color, a seeded first-fit clique grouping claims uncolored edges.
    Cliques {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_clique: usize,
        /// Require every edge of K_N to be covered (deterministic order).
        #[arg(long)]
        complete: bool,
    },
}

fn parse_even(text: &str) -> Result<usize, String> {
    let n: usize = text.parse().map_err(|e| format!("{e}"))?;
    if n < 2 || n % 2 == 1 {
        return Err(format!("{n} must be even and at least 2"));
    }
    Ok(n)
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    crate::rational::parse(text).ok_or_else(|| format!("`{text}` is not a rational like 1/2"))
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn violation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VIOLATION,
            message: message.into(),
        }
    }
}

impl From<LossError> for Failure {
    fn from(e: LossError) -> Self {
        match e {
            LossError::Partition(p) => Failure::usage(p.to_string()),
            other => Failure::violation(other.to_string()),
        }
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::OddN(_) => Failure::usage(e.to_string()),
            other => Failure::violation(other.to_string()),
        }
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut text = String::new();
    let code = match dispatch(&cli, &mut text) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    code
}

fn header(out: &mut String, name: &str, seed: u64) {
    writeln!(out, "# cmramsey {name} seed={seed}").unwrap();
}

fn read_input(path: &str) -> Result<(Graph, Option<EdgeColoring>), Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
    parse_graph(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn fmt_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn verdict(holds: bool, slack: Rational) -> &'static str {
    match (holds, slack == Rational::from_integer(0)) {
        (true, true) => "HOLDS (equality)",
        (true, false) => "HOLDS",
        (false, _) => "VIOLATED",
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, Failure> {
    let seed = cli.seed;
    match &cli.command {
        Command::Decompose { input, dot } => {
            header(out, "decompose", seed);
            let (g, c) = read_input(&input.input)?;
            decompose(&g, c.as_ref(), input.n, *dot, out)
        }
        Command::LossCheck { input, ledger } => {
            header(out, "loss-check", seed);
            let (g, c) = read_input(&input.input)?;
            loss_check(&g, c.as_ref(), input.n, *ledger, out)
        }
        Command::Classify { input } => {
            header(out, "classify", seed);
            let (g, c) = read_input(&input.input)?;
            let c = c.unwrap_or_else(|| EdgeColoring::monochromatic(&g, 1));
            let classes = classify_vertices(&g, &c, input.n)?;
            for (v, class) in classes.iter().enumerate() {
                writeln!(out, "v {v} {class}").unwrap();
            }
            for class in [
                VertexClass::Strong,
                VertexClass::QSaturated,
                VertexClass::Small,
            ] {
                writeln!(
                    out,
                    "{class}: {}",
                    classes.iter().filter(|&&x| x == class).count()
                )
                .unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::BoundsCheck { input, k } => {
            header(out, "bounds-check", seed);
            let (g, c) = read_input(&input.input)?;
            bounds_check(&g, c.as_ref(), input.n, *k, out)
        }
        Command::Audit {
            input,
            k,
            epsilon,
            delta,
        } => {
            header(out, "audit", seed);
            let (g, c) = read_input(&input.input)?;
            let c = c.unwrap_or_else(|| EdgeColoring::monochromatic(&g, 1));
            let p = DenseParams {
                k: *k,
                epsilon: *epsilon,
                delta: *delta,
                n: input.n,
            };
            audit(&p, &g, &c, out)
        }
        Command::Construct { kind, dot } => {
            header(out, "construct", seed);
            let (g, c) = match *kind {
                ConstructKind::Affine { q } => {
                    affine_plane_coloring(q).map_err(|e| Failure::usage(e.to_string()))?
                }
                ConstructKind::Random { vertices, k } => {
                    if vertices == 0 || k == 0 {
                        return Err(Failure::usage("vertices and k must be positive"));
                    }
                    random_coloring(vertices, k, seed)
                }
                ConstructKind::Cliques {
                    vertices,
                    k,
                    max_clique,
                    complete,
                } => {
                    if k == 0 || max_clique == 0 {
                        return Err(Failure::usage("k and max-clique must be positive"));
                    }
                    if complete {
                        let c = disjoint_cliques_coloring(vertices, k, max_clique).ok_or_else(
                            || Failure::violation("greedy clique cover leaves edges uncolored"),
                        )?;
                        (Graph::complete(vertices), c)
                    } else {
                        clique_cover_coloring(vertices, k, max_clique, seed)
                    }
                }
            };
            emit_graph(&g, &c, *dot, out);
            Ok(EXIT_OK)
        }
        Command::Search {
            vertices,
            k,
            n,
            exhaustive,
            budget,
            threads,
            no_color_symmetry,
            no_vertex_symmetry,
            no_capacity_pruning,
            shuffle,
            dot,
        } => {
            header(out, "search", seed);
            let budget = budget.unwrap_or(if *exhaustive { u64::MAX } else { 1_000_000 });
            let cfg = SearchConfig {
                vertices: *vertices,
                colors: *k,
                n: *n,
                budget,
                threads: *threads,
                color_symmetry: !no_color_symmetry,
                vertex_symmetry: !no_vertex_symmetry,
                capacity_pruning: !no_capacity_pruning,
                seed: shuffle.then_some(seed),
            };
            let (result, stats) = search_with_stats(&cfg);
            match result {
                Ok(SearchOutcome::Avoider(c)) => {
                    writeln!(out, "avoider found after {} nodes", stats.nodes).unwrap();
                    emit_graph(&Graph::complete(*vertices), &c, *dot, out);
                    Ok(EXIT_OK)
                }
                Ok(SearchOutcome::NoneExists) => {
                    writeln!(out, "certified none after {} nodes", stats.nodes).unwrap();
                    Ok(EXIT_VIOLATION)
                }
                Err(SearchError::BudgetExhausted { nodes }) => {
                    writeln!(out, "budget exhausted after {nodes} nodes").unwrap();
                    Ok(EXIT_BUDGET)
                }
                Err(e) => Err(Failure::usage(e.to_string())),
            }
        }
        Command::Ramsey {
            k,
            n,
            n_max,
            budget,
            dot,
        } => {
            header(out, "ramsey", seed);
            let outcome =
                ramsey_cm(*k, *n, *n_max, *budget).map_err(|e| Failure::usage(e.to_string()))?;
            let code = match &outcome {
                RamseyOutcome::Exact { value, .. } => {
                    writeln!(out, "R_cm({k},{n}) = {value}").unwrap();
                    EXIT_OK
                }
                RamseyOutcome::LowerBound {
                    verified,
                    budget_exhausted,
                    ..
                } => {
                    let why = if *budget_exhausted {
                        "budget exhausted"
                    } else {
                        "scan limit reached"
                    };
                    writeln!(
                        out,
                        "R_cm({k},{n}) > {verified} ({why} at N={})",
                        verified + 1
                    )
                    .unwrap();
                    EXIT_BUDGET
                }
            };
            let (vertices, c) = outcome.avoider();
            writeln!(out, "avoider on K_{vertices}:").unwrap();
            emit_graph(&Graph::complete(vertices), c, *dot, out);
            Ok(code)
        }
    }
}

fn emit_graph(g: &Graph, c: &EdgeColoring, dot: bool, out: &mut String) {
    if dot {
        out.push_str(&to_dot(g, Some(c), None));
    } else {
        out.push_str(&serialize(g, Some(c)));
    }
}

fn decompose(
    g: &Graph,
    c: Option<&EdgeColoring>,
    n: usize,
    dot: bool,
    out: &mut String,
) -> Result<i32, Failure> {
    if c.is_some_and(|c| c.color_count() > 1) {
        return Err(Failure::usage("decompose takes an uncolored graph (k = 1)"));
    }
    let mut roles = vec![Part::Q; g.vertex_count()];
    let mut all_pass = true;
    for (id, members) in components(g).members().iter().enumerate() {
        let (h, map) = g.induced(members);
        let p =
            sqi_partition(&h, n).map_err(|e| Failure::violation(format!("component {id}: {e}")))?;
        let report = verify_sqi(&h, n, &p);
        let gp = p.mapped(&map);
        for (set, part) in [(&gp.s, Part::S), (&gp.q, Part::Q), (&gp.i, Part::I)] {
            for &v in set {
                roles[v] = part;
            }
        }
        writeln!(out, "component {id} {}", fmt_set(members)).unwrap();
        writeln!(
            out,
            "S={} Q={} I={}",
            fmt_set(&gp.s),
            fmt_set(&gp.q),
            fmt_set(&gp.i)
        )
        .unwrap();
        writeln!(
            out,
            "|S|={} |Q|={} |I|={}",
            gp.s.len(),
            gp.q.len(),
            gp.i.len()
        )
        .unwrap();
        for check in std::iter::once(&report.cover).chain(&report.conditions) {
            match &check.violation {
                None => writeln!(out, "  {}: PASS", check.name).unwrap(),
                Some(v) => writeln!(out, "  {}: FAIL ({v})", check.name).unwrap(),
            }
        }
        for (name, ok) in &report.derived {
            writeln!(out, "  {name}: {}", if *ok { "PASS" } else { "FAIL" }).unwrap();
        }
        writeln!(
            out,
            "conditions 1-4: {}",
            if report.conditions_hold() {
                "PASS"
            } else {
                "FAIL"
            }
        )
        .unwrap();
        let bound = partition_edge_bound(&gp);
        writeln!(
            out,
            "e = {} <= {bound} = C(|Q|+|S|,2)+|I||S|+|Q|: {}",
            h.edge_count(),
            h.edge_count() as u64 <= bound
        )
        .unwrap();
        all_pass &= report.all_hold() && h.edge_count() as u64 <= bound;
    }
    if dot {
        out.push_str(&to_dot(g, None, Some(&roles)));
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_VIOLATION })
}

fn loss_check(
    g: &Graph,
    c: Option<&EdgeColoring>,
    n: usize,
    ledger: bool,
    out: &mut String,
) -> Result<i32, Failure> {
    let (holds, book, total_name, sum_name) = match c {
        Some(c) if c.color_count() > 1 => {
            let (holds, book) = check_coloring_loss_sum(g, c, n)?;
            (holds, book, "F(G)", "ΣF(v)")
        }
        _ => {
            let (holds, book) = check_vertex_loss_sum(g, n)?;
            (holds, book, "f(G)", "Σf(v)")
        }
    };
    if ledger {
        let roles = book.classes.is_none().then(|| book.partitions[0].roles());
        for (v, value) in book.values.iter().enumerate() {
            let class = match (&book.classes, &roles) {
                (Some(classes), _) => classes[v].to_string(),
                (None, Some(roles)) => roles[v].to_string(),
                (None, None) => unreachable!(),
            };
            writeln!(out, "v {v} {class} {}", display(value)).unwrap();
        }
    }
    writeln!(out, "{total_name} = {}", display(&book.total)).unwrap();
    writeln!(out, "{sum_name} = {}", display(&book.sum())).unwrap();
    writeln!(
        out,
        "vertex-loss inequality: {}",
        verdict(holds, book.slack())
    )
    .unwrap();
    Ok(if holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn bounds_check(
    g: &Graph,
    c: Option<&EdgeColoring>,
    n: usize,
    k: Option<usize>,
    out: &mut String,
) -> Result<i32, Failure> {
    let c = c
        .cloned()
        .unwrap_or_else(|| EdgeColoring::monochromatic(g, 1));
    let mut ok = true;
    for color in 1..=c.color_count() {
        let class = color_class(g, &c, color).expect("color in range");
        let r = erdos_gallai_check(&class, n)?;
        writeln!(
            out,
            "color {color}: e = {} <= (n-2)/2 v = {}: {}",
            r.edges,
            display(&r.bound),
            verdict(r.holds, r.slack)
        )
        .unwrap();
        ok &= r.holds;
    }
    let k = k.unwrap_or(c.color_count());
    let r = small_components_bound(g, &c, k, n);
    match (r.holds, &r.slack) {
        (Some(holds), Some(slack)) => {
            writeln!(
                out,
                "small components: e = {} <= C(v,2) - n^2/32 = {}: {}",
                r.edges,
                display(&r.bound),
                verdict(holds, *slack)
            )
            .unwrap();
            ok &= holds;
        }
        _ => writeln!(
            out,
            "small components: not applicable ({})",
            r.reason.as_deref().unwrap_or("")
        )
        .unwrap(),
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn audit(p: &DenseParams, g: &Graph, c: &EdgeColoring, out: &mut String) -> Result<i32, Failure> {
    let report = audit_dense_coloring(p, g, c)?;
    for step in &report.steps {
        writeln!(
            out,
            "{}: {} [{}]",
            step.name,
            if step.holds { "PASS" } else { "FAIL" },
            step.detail
        )
        .unwrap();
    }
    writeln!(
        out,
        "degree threshold (k-1/2)n = {}",
        display(&report.degree_threshold)
    )
    .unwrap();
    writeln!(out, "V_low = {}", fmt_set(&report.low_degree)).unwrap();
    writeln!(out, "strong outside V_low = {}", fmt_set(&report.strong)).unwrap();
    writeln!(out, "beta = {}", display(&report.beta)).unwrap();
    writeln!(out, "residual = {}", fmt_set(&report.residual)).unwrap();
    match report.first_failure() {
        Some(step) => writeln!(out, "first failing step: {}", step.name).unwrap(),
        None => writeln!(out, "first failing step: none").unwrap(),
    }
    Ok(EXIT_OK)
}
