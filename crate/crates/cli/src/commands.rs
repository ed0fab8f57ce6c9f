//! Subcommand definitions and dispatch.
//!
//! Exit codes: 0 ok, 1 I/O or parse error, 2 usage error, 3 the arrangement
//! violates the requested constraint.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use treela::bench::bench_max_planar;
use treela::generators::{make_family, random_tree, Family};
use treela::oracle::{exhaustive, Constraint, Objective, MAX_ORACLE_N};
use treela::planar::{max_planar_rooted, min_planar};
use treela::projective::{max_projective, min_projective};
use treela::{cost, is_planar, is_projective, Arrangement, FreeTree};

pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug)]
pub enum Failure {
    /// Unreadable or malformed input (exit 1).
    Input(String),
    /// Invalid flags or arguments (exit 2).
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(msg) | Failure::Usage(msg) => f.write_str(msg),
        }
    }
}

type Outcome = Result<u8, Failure>;

#[derive(Debug, Parser)]
#[command(name = "treela", version, about = "Maximum and minimum planar/projective linear arrangements of trees")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Task {
    Maxla,
    Minla,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Planar,
    Projective,
    Unconstrained,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Goal {
    Max,
    Min,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Star,
    Path,
    Bistar,
    Quasistar,
    Caterpillar,
    Spider,
    Random,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve MaxLA or minLA under the planar or projective constraint.
    Solve {
        task: Task,
        /// `planar` or `projective` (the latter needs --root).
        constraint: Kind,
        /// Tree file, or `-` for standard input.
        input: PathBuf,
        /// Root vertex (1-based) for the projective constraint.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Also write a Graphviz description of the arrangement to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Validate an arrangement against a constraint and report its cost.
    Check {
        tree: PathBuf,
        /// Arrangement file (text or JSON form), or `-` for standard input.
        arrangement: PathBuf,
        constraint: Kind,
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive optimum over all n! arrangements (n <= 10).
    Oracle {
        tree: PathBuf,
        constraint: Kind,
        objective: Goal,
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated tree in the edge-list format.
    Gen {
        kind: GenKind,
        /// Vertex count; implied by --leaves / --legs / --hubs when given.
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Leaf counts of the two bistar hubs, e.g. `3,2` (default: balanced).
        #[arg(long, value_delimiter = ',')]
        hubs: Vec<usize>,
        /// Leaf count of every caterpillar backbone vertex, e.g. `2,0,3`.
        #[arg(long, value_delimiter = ',')]
        leaves: Vec<usize>,
        /// Spider leg lengths, e.g. `2,2,2`.
        #[arg(long, value_delimiter = ',')]
        legs: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Time planar MaxLA on random trees.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![1_000usize, 10_000, 100_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let mut text = String::new();
    let code = match cli.command {
        Command::Solve {
            task,
            constraint,
            input,
            root,
            json,
            dot,
        } => solve(task, constraint, &input, root, json, dot.as_deref(), &mut text)?,
        Command::Check {
            tree,
            arrangement,
            constraint,
            root,
            json,
        } => check(&tree, &arrangement, constraint, root, json, &mut text)?,
        Command::Oracle {
            tree,
            constraint,
            objective,
            root,
            json,
        } => oracle(&tree, constraint, objective, root, json, &mut text)?,
        Command::Gen {
            kind,
            n,
            seed,
            hubs,
            leaves,
            legs,
            json,
        } => gen(kind, n, seed, hubs, leaves, legs, json, &mut text)?,
        Command::Bench {
            sizes,
            trials,
            seed,
            json,
        } => bench(&sizes, trials, seed, json, &mut text)?,
    };
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Input(format!("writing output: {e}")))?;
    Ok(code)
}

fn read_source(path: &Path) -> Result<String, Failure> {
    let mut s = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
    } else {
        s = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(s)
}

fn read_tree(path: &Path) -> Result<FreeTree, Failure> {
    let text = read_source(path)?;
    FreeTree::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Resolves `--root` (1-based) against the constraint.
fn resolve_root(tree: &FreeTree, kind: Kind, root: Option<usize>) -> Result<Option<usize>, Failure> {
    match (kind, root) {
        (Kind::Projective, None) => Err(Failure::Usage("projective constraint needs --root".into())),
        (Kind::Projective, Some(r)) if r == 0 || r > tree.n() => Err(Failure::Usage(format!(
            "--root {r} out of range 1..={}",
            tree.n()
        ))),
        (Kind::Projective, Some(r)) => Ok(Some(r - 1)),
        (_, Some(_)) => Err(Failure::Usage("--root only applies to the projective constraint".into())),
        (_, None) => Ok(None),
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Planar => "planar",
        Kind::Projective => "projective",
        Kind::Unconstrained => "unconstrained",
    }
}

fn solve(
    task: Task,
    kind: Kind,
    input: &Path,
    root: Option<usize>,
    json: bool,
    dot: Option<&Path>,
    out: &mut String,
) -> Outcome {
    if kind == Kind::Unconstrained {
        return Err(Failure::Usage("solve supports the planar and projective constraints".into()));
    }
    let tree = read_tree(input)?;
    let root = resolve_root(&tree, kind, root)?;
    let (arr, d, chosen_root) = match (task, root) {
        (Task::Maxla, Some(r)) => {
            let (a, d) = max_projective(&tree.rooted(r).expect("checked"));
            (a, d, None)
        }
        (Task::Minla, Some(r)) => {
            let (a, d) = min_projective(&tree.rooted(r).expect("checked"));
            (a, d, None)
        }
        (Task::Maxla, None) => {
            let (r, a, d) = max_planar_rooted(&tree);
            (a, d, Some(r))
        }
        (Task::Minla, None) => {
            let (a, d) = min_planar(&tree);
            (a, d, None)
        }
    };
    if let Some(path) = dot {
        std::fs::write(path, to_dot(&tree, &arr))
            .map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))?;
    }
    if json {
        let doc = json!({
            "task": match task { Task::Maxla => "maxla", Task::Minla => "minla" },
            "constraint": kind_name(kind),
            "cost": d,
            "root": chosen_root.or(root).map(|r| r + 1),
            "arrangement": arr.to_json(),
        });
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = writeln!(out, "D={d}");
        let _ = writeln!(out, "{}", arr.to_text());
        if let Some(r) = chosen_root {
            let _ = writeln!(out, "root={}", r + 1);
        }
    }
    Ok(0)
}

/// Graphviz description: vertices pinned left to right in arrangement
/// order, edges drawn as semicircles above the line.
fn to_dot(tree: &FreeTree, arr: &Arrangement) -> String {
    let mut s = String::from("graph arrangement {\n  layout=neato;\n  node [shape=circle];\n");
    for p in 0..arr.n() {
        let v = arr.vertex_at(p);
        let _ = writeln!(s, "  {} [pos=\"{},0!\"];", v + 1, p);
    }
    for &(u, v) in tree.edges() {
        let len = arr.position(u).abs_diff(arr.position(v));
        let _ = writeln!(s, "  {} -- {} [shape=semicircle, length={len}];", u + 1, v + 1);
    }
    s.push_str("}\n");
    s
}

fn check(tree: &Path, arrangement: &Path, kind: Kind, root: Option<usize>, json: bool, out: &mut String) -> Outcome {
    let tree = read_tree(tree)?;
    let text = read_source(arrangement)?;
    let arr = Arrangement::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", arrangement.display())))?;
    let root = resolve_root(&tree, kind, root)?;
    let d = cost(&tree, &arr).map_err(|e| Failure::Input(e.to_string()))?;
    let valid = match root {
        Some(r) => is_projective(&tree.rooted(r).expect("checked"), &arr),
        None if kind == Kind::Planar => is_planar(&tree, &arr),
        None => Ok(true),
    }
    .map_err(|e| Failure::Input(e.to_string()))?;
    if json {
        let doc = json!({ "constraint": kind_name(kind), "valid": valid, "cost": d });
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = writeln!(out, "{}", if valid { "valid" } else { "invalid" });
        let _ = writeln!(out, "D={d}");
    }
    Ok(if valid { 0 } else { EXIT_VIOLATION })
}

fn oracle(tree: &Path, kind: Kind, goal: Goal, root: Option<usize>, json: bool, out: &mut String) -> Outcome {
    let tree = read_tree(tree)?;
    if tree.n() > MAX_ORACLE_N {
        return Err(Failure::Usage(format!(
            "oracle is limited to n <= {MAX_ORACLE_N}, got {}",
            tree.n()
        )));
    }
    let root = resolve_root(&tree, kind, root)?;
    let constraint = match (kind, root) {
        (_, Some(r)) => Constraint::Projective(r),
        (Kind::Planar, None) => Constraint::Planar,
        _ => Constraint::Unconstrained,
    };
    let objective = match goal {
        Goal::Max => Objective::Max,
        Goal::Min => Objective::Min,
    };
    let r = exhaustive(&tree, constraint, objective).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        let doc = json!({
            "constraint": kind_name(kind),
            "objective": match goal { Goal::Max => "max", Goal::Min => "min" },
            "cost": r.cost,
            "count": r.count,
            "witness": r.witness.to_json(),
        });
        let _ = writeln!(out, "{doc}");
    } else {
        let _ = writeln!(out, "D={} count={}", r.cost, r.count);
        let _ = writeln!(out, "{}", r.witness.to_text());
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn gen(
    kind: GenKind,
    n: Option<usize>,
    seed: u64,
    hubs: Vec<usize>,
    leaves: Vec<usize>,
    legs: Vec<usize>,
    json: bool,
    out: &mut String,
) -> Outcome {
    let family = match kind {
        GenKind::Star => Some(Family::Star),
        GenKind::Path => Some(Family::Path),
        GenKind::Quasistar => Some(Family::Quasistar),
        GenKind::Bistar => match hubs.as_slice() {
            [] => Some(Family::BalancedBistar),
            &[first, second] => Some(Family::Bistar { first, second }),
            _ => return Err(Failure::Usage("--hubs takes exactly two counts".into())),
        },
        GenKind::Caterpillar => Some(Family::Caterpillar { leaves }),
        GenKind::Spider => Some(Family::Spider { legs }),
        GenKind::Random => None,
    };
    let n = n
        .or_else(|| family.as_ref().and_then(Family::implied_n))
        .ok_or_else(|| Failure::Usage("missing vertex count".into()))?;
    let tree = match family {
        Some(f) => make_family(&f, n).map_err(|e| Failure::Usage(e.to_string()))?,
        None if n == 0 => return Err(Failure::Usage("n must be at least 1".into())),
        None => random_tree(n, seed),
    };
    if json {
        let edges: Vec<[usize; 2]> = tree.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
        let _ = writeln!(out, "{}", json!({ "n": tree.n(), "edges": edges }));
    } else {
        out.push_str(&tree.to_text());
    }
    Ok(0)
}

fn bench(sizes: &[usize], trials: usize, seed: u64, json: bool, out: &mut String) -> Outcome {
    if sizes.contains(&0) {
        return Err(Failure::Usage("sizes must be positive".into()));
    }
    let rows = bench_max_planar(sizes, trials, seed);
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(&rows).expect("rows serialize"));
    } else {
        let _ = writeln!(out, "{:>10} {:>16} {:>16}", "size", "mean_ns", "std_ns");
        for r in rows {
            let _ = writeln!(out, "{:>10} {:>16.0} {:>16.0}", r.size, r.mean_ns, r.std_ns);
        }
    }
    Ok(0)
}
