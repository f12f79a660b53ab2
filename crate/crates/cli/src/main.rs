//! `tutte-orient`: Tutte polynomials, orientation classes and the
//! orientation–tree bijection from the command line.
//!
//! Every subcommand prints one JSON document on standard output. Exit codes:
//! 0 success, 1 a verified identity failed, 2 parse or usage error, 3 invalid
//! input (including graphs without totally cyclic orientations), 4 resource
//! cap exceeded, 5 internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use tutte_orient::bijection::{NormalContext, TraceEvent};
use tutte_orient::corpus::{corpus, CorpusLimits};
use tutte_orient::equivalence::{
    classes, classes_by_flips, restricted_orientations, tutte_point, verify_identities,
    CheckStatus, IdentityReport, Quantity, Relation, Restriction, IDENTITY_EDGE_LIMIT,
};
use tutte_orient::format::{parse_edge_list, parse_edge_set, parse_graph, print_graph};
use tutte_orient::multigraph::DEFAULT_FOREST_CAP;
use tutte_orient::orientation::DEFAULT_ORIENTATION_CAP;
use tutte_orient::tutte::{
    evaluate, tutte_activity_expansion, tutte_deletion_contraction, TuttePolynomial, SPECIAL_POINTS,
};
use tutte_orient::{EdgeId, EdgeSet, Error, Multigraph, Orientation};

#[derive(Parser)]
#[command(name = "tutte-orient", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial and its evaluations at the special points.
    Tutte {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Dc)]
        method: Method,
        #[command(flatten)]
        context: ContextArgs,
    },
    /// List orientations, optionally restricted.
    Orientations {
        graph: PathBuf,
        #[arg(long, default_value = "all")]
        restrict: Restriction,
        #[arg(long, default_value_t = DEFAULT_ORIENTATION_CAP)]
        cap: usize,
    },
    /// Equivalence classes of a restricted orientation set.
    Classes {
        graph: PathBuf,
        #[arg(long)]
        relation: Relation,
        #[arg(long, default_value = "all")]
        restrict: Restriction,
        #[arg(long, default_value_t = DEFAULT_ORIENTATION_CAP)]
        cap: usize,
        /// Close under single cycle or bond reversals instead of the pairwise relation.
        #[arg(long)]
        flips: bool,
    },
    /// Spanning tree of the Eulerian class of a totally cyclic orientation.
    BijectionForward {
        graph: PathBuf,
        /// One `+`/`-` per edge, in file order.
        #[arg(allow_hyphen_values = true)]
        orientation: String,
        #[command(flatten)]
        context: ContextArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Reduced totally cyclic orientation of a spanning tree.
    BijectionInverse {
        graph: PathBuf,
        /// Comma-separated 1-based edge indices.
        tree: String,
        #[command(flatten)]
        context: ContextArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Check every enumerative identity and the bijection on one graph.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORIENTATION_CAP)]
        cap: usize,
    },
    /// Emit the named graphs plus seeded random connected multigraphs.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 9)]
        max_edges: usize,
        /// Directory for `<name>.g` files; graphs are inlined in the JSON otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Deletion–contraction.
    Dc,
    /// Spanning-forest activities under the chosen edge order.
    Activities,
}

#[derive(clap::Args)]
struct ContextArgs {
    /// Edge order, smallest first, as 1-based indices (`3,1,2`), or `random`.
    #[arg(long)]
    order: Option<String>,
    /// Normal orientation as a `+`/`-` string in file order, or `random`.
    #[arg(long, allow_hyphen_values = true)]
    normal: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Lib(Error),
    Io(String),
    IdentityFailed(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Err(Failure::IdentityFailed(v)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
            ExitCode::from(1)
        }
        Err(Failure::Io(message)) => report_error("io", &message, 3),
        Err(Failure::Lib(e)) => {
            let (kind, code) = match &e {
                Error::Parse { .. } => ("parse", 2),
                Error::InvalidEdge(_) | Error::InvalidInput(_) | Error::ViewMismatch => {
                    ("invalid_input", 3)
                }
                Error::NoTotallyCyclic(_) => ("no_totally_cyclic", 3),
                Error::Unsupported(_) => ("unsupported", 3),
                Error::ResourceCap { .. } => ("resource_cap", 4),
                Error::Internal(_) => ("internal", 5),
            };
            report_error(kind, &e.to_string(), code)
        }
    }
}

fn report_error(kind: &str, message: &str, code: u8) -> ExitCode {
    eprintln!(
        "{}",
        json!({ "error": { "kind": kind, "message": message } })
    );
    ExitCode::from(code)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Tutte {
            graph,
            method,
            context,
        } => tutte(&load(&graph)?, method, &context),
        Command::Orientations {
            graph,
            restrict,
            cap,
        } => {
            let g = load(&graph)?;
            let list = restricted_orientations(&g.view(), restrict, cap)?;
            Ok(json!({
                "restriction": restrict.name(),
                "count": list.len(),
                "orientations": list.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            }))
        }
        Command::Classes {
            graph,
            relation,
            restrict,
            cap,
            flips,
        } => {
            let g = load(&graph)?;
            let view = g.view();
            let partition = if flips {
                classes_by_flips(&view, relation, restrict, cap)?
            } else {
                classes(&view, relation, restrict, cap)?
            };
            let mut out = json!({
                "relation": relation.name(),
                "restriction": restrict.name(),
                "count": partition.count(),
            });
            if let Some((x, y)) = tutte_point(relation, restrict) {
                let value = evaluate(&tutte_deletion_contraction(&view), x, y);
                out["tutte_point"] = json!([x, y]);
                out["tutte_value"] = big(&value);
                out["matches"] = json!(value == BigInt::from(partition.count()));
            }
            out["classes"] = partition
                .blocks
                .iter()
                .map(|b| b.iter().map(|o| o.to_string()).collect::<Vec<_>>())
                .collect();
            Ok(out)
        }
        Command::BijectionForward {
            graph,
            orientation,
            context,
            trace,
        } => forward(&load(&graph)?, &orientation, &context, trace),
        Command::BijectionInverse {
            graph,
            tree,
            context,
            trace,
        } => inverse(&load(&graph)?, &tree, &context, trace),
        Command::Verify { graph, cap } => verify(&load(&graph)?, cap),
        Command::Corpus {
            seed,
            count,
            max_vertices,
            max_edges,
            out,
        } => emit_corpus(
            seed,
            count,
            CorpusLimits {
                max_vertices,
                max_edges,
            },
            out.as_deref(),
        ),
    }
}

fn load(path: &Path) -> std::result::Result<Multigraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {}", path.display(), e)))?;
    Ok(parse_graph(&text)?)
}

/// Exact integer as a JSON number.
fn big(n: &BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn polynomial_json(p: &TuttePolynomial) -> Value {
    let coefficients: Vec<Value> = p
        .terms()
        .map(|(i, j, c)| json!({ "x": i, "y": j, "c": big(&BigInt::from(c.clone())) }))
        .collect();
    let mut evaluations = Map::new();
    for (x, y) in SPECIAL_POINTS {
        evaluations.insert(format!("T({},{})", x, y), big(&evaluate(p, x, y)));
    }
    json!({
        "polynomial": p.to_string(),
        "coefficients": coefficients,
        "evaluations": evaluations,
    })
}

fn graph_json(g: &Multigraph) -> Value {
    json!({ "vertices": g.vertex_count(), "edges": g.edge_count() })
}

/// A graph relabelled so that edge ids follow the requested order, together
/// with `order[rank] = original edge`.
struct Ranked {
    graph: Multigraph,
    order: Vec<EdgeId>,
    rng: ChaCha8Rng,
}

impl Ranked {
    fn new(g: &Multigraph, args: &ContextArgs) -> std::result::Result<Self, Failure> {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let order = match args.order.as_deref() {
            None => g.edge_ids().collect(),
            Some("random") => {
                let mut order: Vec<EdgeId> = g.edge_ids().collect();
                order.shuffle(&mut rng);
                order
            }
            Some(text) => parse_edge_list(text, g.edge_count())?,
        };
        let graph = g.reordered(&order)?;
        Ok(Ranked { graph, order, rng })
    }

    fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(i, e)| e.0 == i)
    }

    fn to_rank(&self, o: &Orientation) -> Orientation {
        let reversed = (0..self.order.len())
            .map(EdgeId)
            .filter(|&r| o.is_reversed(self.order[r.0]))
            .collect();
        Orientation::new(self.graph.all_edges(), reversed).expect("reversed is within domain")
    }

    fn to_file(&self, o: &Orientation) -> Orientation {
        let reversed = o.reversed().iter().map(|r| self.order[r.0]).collect();
        Orientation::new(
            o.domain().iter().map(|r| self.order[r.0]).collect(),
            reversed,
        )
        .expect("reversed is within domain")
    }

    fn set_to_file(&self, s: EdgeSet) -> EdgeSet {
        s.iter().map(|r| self.order[r.0]).collect()
    }

    fn set_to_rank(&self, s: EdgeSet) -> EdgeSet {
        (0..self.order.len())
            .map(EdgeId)
            .filter(|&r| s.contains(self.order[r.0]))
            .collect()
    }

    fn context(
        &mut self,
        original: &Multigraph,
        args: &ContextArgs,
    ) -> std::result::Result<NormalContext, Failure> {
        let normal = match args.normal.as_deref() {
            None => Orientation::forward(self.graph.all_edges()),
            Some("random") => {
                let rng = &mut self.rng;
                let reversed = self
                    .graph
                    .edge_ids()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                Orientation::new(self.graph.all_edges(), reversed)?
            }
            Some(text) => self.to_rank(&Orientation::parse(&original.view(), text)?),
        };
        Ok(NormalContext::new(self.graph.clone(), normal)?)
    }

    /// Trace events with edges, cycles and state strings in file order.
    fn trace_json(&self, events: &[TraceEvent]) -> Value {
        events
            .iter()
            .map(|ev| {
                let mut ev = ev.clone();
                ev.edge = self.order[ev.edge.0];
                ev.cycle = ev.cycle.map(|c| self.set_to_file(c));
                let ranked: Vec<char> = ev.contraction.state.chars().collect();
                let mut state = vec![' '; ranked.len()];
                for (r, ch) in ranked.into_iter().enumerate() {
                    state[self.order[r].0] = ch;
                }
                ev.contraction.state = state.into_iter().collect();
                serde_json::to_value(ev).expect("serializable")
            })
            .collect()
    }

    fn header(&self, ctx: &NormalContext) -> Value {
        json!({
            "order": self.order.iter().map(|e| e.ordinal()).collect::<Vec<_>>(),
            "normal": self.to_file(ctx.normal()).to_string(),
        })
    }
}

fn tutte(g: &Multigraph, method: Method, args: &ContextArgs) -> Outcome {
    let ranked = Ranked::new(g, args)?;
    let (name, p) = match method {
        Method::Dc => (
            "deletion_contraction",
            tutte_deletion_contraction(&g.view()),
        ),
        Method::Activities => (
            "activities",
            tutte_activity_expansion(&ranked.graph.view(), DEFAULT_FOREST_CAP)?,
        ),
    };
    let mut out = json!({ "graph": graph_json(g), "method": name });
    if !ranked.is_identity() {
        out["order"] = json!(ranked.order.iter().map(|e| e.ordinal()).collect::<Vec<_>>());
    }
    merge(&mut out, polynomial_json(&p));
    Ok(out)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn ordinals(s: EdgeSet) -> Vec<usize> {
    s.iter().map(|e| e.ordinal()).collect()
}

fn forward(g: &Multigraph, text: &str, args: &ContextArgs, trace: bool) -> Outcome {
    let mut ranked = Ranked::new(g, args)?;
    let ctx = ranked.context(g, args)?;
    let orientation = Orientation::parse(&g.view(), text)?;
    let input = ranked.to_rank(&orientation);
    let (tree, events) = if trace {
        ctx.forward_traced(&input)?
    } else {
        (ctx.forward(&input)?, Vec::new())
    };
    let reduced = if g.edge_count() == 0 {
        input.clone()
    } else {
        ctx.normalize_orientation(&input)?
    };
    let mut out = json!({ "tree": ordinals(ranked.set_to_file(tree)) });
    out["orientation"] = json!(orientation.to_string());
    out["reduced"] = json!(ranked.to_file(&reduced).to_string());
    merge(&mut out, ranked.header(&ctx));
    if trace {
        out["trace"] = ranked.trace_json(&events);
    }
    Ok(out)
}

fn inverse(g: &Multigraph, text: &str, args: &ContextArgs, trace: bool) -> Outcome {
    let mut ranked = Ranked::new(g, args)?;
    let ctx = ranked.context(g, args)?;
    let tree = parse_edge_set(text, g.edge_count())?;
    let (o, events) = if trace {
        ctx.inverse_traced(ranked.set_to_rank(tree))?
    } else {
        (ctx.inverse(ranked.set_to_rank(tree))?, Vec::new())
    };
    let mut out = json!({
        "tree": ordinals(tree),
        "orientation": ranked.to_file(&o).to_string(),
    });
    merge(&mut out, ranked.header(&ctx));
    if trace {
        out["trace"] = ranked.trace_json(&events);
    }
    Ok(out)
}

fn quantity_json(q: &Quantity) -> Value {
    match q {
        Quantity::Count(n) => big(n),
        Quantity::Polynomial(p) => json!(p.to_string()),
    }
}

fn report_json(report: &IdentityReport) -> Vec<Value> {
    report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "lhs": c.lhs.as_ref().map(quantity_json),
                "rhs": quantity_json(&c.rhs),
                "status": c.status,
            })
        })
        .collect()
}

/// Forward on every Eulerian class and inverse on every image tree.
fn bijection_check(g: &Multigraph, cap: usize) -> Result<Value, Error> {
    let view = g.view();
    let expected = evaluate(&tutte_deletion_contraction(&view), 0, 1);
    if g.edge_count() > IDENTITY_EDGE_LIMIT.min(cap) {
        return Ok(json!({
            "name": "bijection image = T(0,1)",
            "lhs": null,
            "rhs": big(&expected),
            "status": CheckStatus::Skipped,
        }));
    }
    if !view.is_connected() {
        return Ok(json!({
            "name": "bijection image = T(0,1)",
            "lhs": null,
            "rhs": big(&expected),
            "status": CheckStatus::Skipped,
            "reason": "graph is disconnected",
        }));
    }
    let ctx = NormalContext::with_stored_directions(g.clone());
    let partition = classes(&view, Relation::Eulerian, Restriction::TotallyCyclic, cap)?;
    let mut trees = std::collections::BTreeSet::new();
    let mut round_trips = true;
    for block in &partition.blocks {
        let tree = ctx.forward(&block[0])?;
        trees.insert(tree);
        round_trips &= ctx.inverse(tree)? == ctx.normalize_orientation(&block[0])?;
    }
    let ok =
        round_trips && trees.len() == partition.count() && BigInt::from(trees.len()) == expected;
    Ok(json!({
        "name": "bijection image = T(0,1)",
        "lhs": trees.len(),
        "rhs": big(&expected),
        "status": if ok { CheckStatus::Pass } else { CheckStatus::Fail },
    }))
}

fn verify(g: &Multigraph, cap: usize) -> Outcome {
    let report = verify_identities(&g.view(), cap)?;
    let mut checks = report_json(&report);
    let bijection = bijection_check(g, cap)?;
    let bijection_failed = bijection["status"] == json!(CheckStatus::Fail);
    checks.push(bijection);
    let passed = report.passed() && !bijection_failed;
    let out = json!({
        "graph": graph_json(g),
        "passed": passed,
        "checks": checks,
    });
    if passed {
        Ok(out)
    } else {
        Err(Failure::IdentityFailed(out))
    }
}

fn emit_corpus(seed: u64, count: usize, limits: CorpusLimits, out: Option<&Path>) -> Outcome {
    let graphs = corpus(seed, count, limits);
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {}", dir.display(), e)))?;
    }
    let mut entries = Vec::new();
    for (name, g) in &graphs {
        let text = print_graph(g);
        let mut entry =
            json!({ "name": name, "vertices": g.vertex_count(), "edges": g.edge_count() });
        match out {
            Some(dir) => {
                let path = dir.join(format!("{}.g", name));
                fs::write(&path, &text)
                    .map_err(|e| Failure::Io(format!("{}: {}", path.display(), e)))?;
                entry["file"] = json!(path.display().to_string());
            }
            None => entry["text"] = json!(text),
        }
        entries.push(entry);
    }
    Ok(json!({
        "seed": seed,
        "limits": { "max_vertices": limits.max_vertices, "max_edges": limits.max_edges },
        "graphs": entries,
    }))
}
