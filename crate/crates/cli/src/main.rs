use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use unigraph::galois::{
    bipartite_embed, bounds, even_cycle_embed, find_irreducible, odd_cycle_embed, Construction, EvenTarget, Field,
};
use unigraph::graphs::{parse_graph6, to_graph6, SimpleGraph};
use unigraph::homomorphism::{chromatic_polynomial, count_hom, count_weak_hom, x_h, HostGraph};
use unigraph::hypermulti::enumerate_classes;
use unigraph::indices::{
    distinguish, functional_index, induced_index, pancyclicity_certificate, subgraph_index, tree_conjecture_scan,
    FunctionalSeries, HostInvariant, Method, SeriesSpec,
};
use unigraph::symfunc::{direct_m_expansion, kneser_slice_expansion, theorem2_expansion, SymFunc};
use unigraph::Error;

const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Parser)]
#[command(name = "ugs", version, about = "Graph invariants from universal graph series")]
struct Cli {
    /// Worker threads (results do not depend on this)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for --format latex
    #[arg(long, global = true)]
    latex: bool,
    /// Node expansion budget for searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial and chromatic symmetric functions
    #[command(subcommand)]
    Chroma(Chroma),
    /// Homomorphism counts into a host
    Hom(HomArgs),
    /// Paley graphs and the constructive embeddings
    Paley(PaleyArgs),
    /// Induced, subgraph and functional indices
    #[command(subcommand)]
    Index(IndexCmd),
    /// Hyper-multigraph classes
    #[command(subcommand)]
    Classes(ClassesCmd),
    /// Exact bound calculators
    Bounds(BoundsArgs),
    /// Exhaustive scans
    #[command(subcommand)]
    Scan(ScanCmd),
}

#[derive(Subcommand)]
enum Chroma {
    /// Coefficients of the chromatic polynomial, constant term first
    Poly { graph: String },
    /// X_{K_{N,k}}(G) in the monomial or power-sum basis
    Symfn {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        /// Route: direct enumeration, the signed spanning-subgraph sum, or a finite Kneser slice
        #[arg(long, value_enum, default_value_t = Route::Direct)]
        route: Route,
        /// Ground set size for --route kneser (default k·|V|)
        #[arg(long)]
        n: Option<usize>,
        graph: String,
    },
    /// Decide whether an invariant separates two graphs
    Compare {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Largest host order for --method profile
        #[arg(long, default_value_t = 5)]
        max_host_order: usize,
        first: String,
        second: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    M,
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Direct,
    Spanning,
    Kneser,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Chi,
    K1,
    K2,
    Profile,
}

#[derive(Args)]
struct HomArgs {
    #[arg(value_enum)]
    what: HomWhat,
    /// complete:N, kneser:N:K, paley:P:D or file:PATH
    #[arg(long)]
    host: String,
    graph: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HomWhat {
    Count,
    Weak,
    Xh,
}

#[derive(Args)]
struct PaleyArgs {
    #[arg(value_enum)]
    what: PaleyWhat,
    /// Characteristic of the host field
    #[arg(long)]
    p: u64,
    /// Degree of the host field over GF(p)
    #[arg(long)]
    d: u32,
    /// Degree of the small field GF(q) used by the constructions
    #[arg(long, default_value_t = 1)]
    sub_degree: u32,
    /// Even cycle length for embed-cycle
    #[arg(long)]
    cycle: Option<usize>,
    /// Path order for embed-cycle
    #[arg(long)]
    path: Option<usize>,
    /// Builds C_{2k+1} for embed-oddcycle
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PaleyWhat {
    Gen,
    Pancyclic,
    EmbedBipartite,
    EmbedCycle,
    EmbedOddcycle,
}

#[derive(Subcommand)]
enum IndexCmd {
    /// Least series level containing G as an induced subgraph
    Induced(IndexArgs),
    /// Least series level containing G as a subgraph
    Subgraph(IndexArgs),
    /// Least level whose invariants separate every pair of a family
    Functional {
        /// kneser[:LEVELS] or paley:P[:LEVELS]
        #[arg(long)]
        series: String,
        /// Compare hosts by homomorphism counts instead of full polynomials
        #[arg(long)]
        counts_only: bool,
        /// graph6 strings, or @FILE with one per line
        #[arg(required = true)]
        graphs: Vec<String>,
    },
}

#[derive(Args)]
struct IndexArgs {
    /// paley:P, paley:P:M or kneser
    #[arg(long)]
    series: String,
    /// Highest level searched
    #[arg(long, default_value_t = 3)]
    cap: u32,
    graph: String,
}

#[derive(Subcommand)]
enum ClassesCmd {
    /// Isomorphism classes of k-uniform hyper-multigraphs with n hyperedges
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        connected: bool,
        /// Print only the count
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    kind: BoundKind,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    k: Option<u64>,
    /// Series exponent for the bipartite and odd-cycle index bounds
    #[arg(long, default_value_t = 0)]
    m: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    Thm52,
    Lemma54,
    Lemma58,
    #[value(name = "upperBS")]
    UpperBs,
    #[value(name = "bipartite")]
    Bipartite,
    #[value(name = "oddCycle")]
    OddCycle,
}

#[derive(Subcommand)]
enum ScanCmd {
    /// Chromatic symmetric function collisions among trees
    Trees {
        #[arg(long)]
        max_order: usize,
    },
}

/// A finished report: JSON plus an optional rendering for text/latex.
struct Report {
    json: Value,
    text: Option<String>,
    latex: Option<String>,
}

impl Report {
    fn json(json: Value) -> Self {
        Report {
            json,
            text: None,
            latex: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: usage: {line}");
            return ExitCode::from(2);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: parameter: --threads must be positive");
            return ExitCode::from(2);
        }
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let format = if cli.latex { Format::Latex } else { cli.format };
    match run(&cli.command, cli.budget) {
        Ok(report) => {
            let out = match format {
                Format::Json => serde_json::to_string(&report.json).expect("values serialise"),
                Format::Text => report
                    .text
                    .unwrap_or_else(|| serde_json::to_string_pretty(&report.json).expect("values serialise")),
                Format::Latex => match report.latex {
                    Some(l) => l,
                    None => {
                        eprintln!("error: parameter: no latex rendering for this command");
                        return ExitCode::from(1);
                    }
                },
            };
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {}", e.kind(), e);
            ExitCode::from(1)
        }
    }
}

fn run(cmd: &Command, budget: u64) -> Result<Report, Error> {
    match cmd {
        Command::Chroma(c) => chroma(c),
        Command::Hom(h) => hom(h),
        Command::Paley(p) => paley(p, budget),
        Command::Index(i) => index(i, budget),
        Command::Classes(ClassesCmd::Enum {
            n,
            k,
            connected,
            count_only,
        }) => {
            let classes = enumerate_classes(*n, *k, *connected)?;
            let mut out = json!({
                "operation": "enumerate_classes",
                "inputs": { "n": n, "k": k, "connected": connected },
                "value": classes.len(),
            });
            if !count_only {
                out["classes"] = classes.iter().map(|c| c.to_json()).collect();
            }
            Ok(Report {
                text: Some(classes.len().to_string()),
                ..Report::json(out)
            })
        }
        Command::Bounds(b) => bound(b),
        Command::Scan(ScanCmd::Trees { max_order }) => {
            let scan = tree_conjecture_scan(*max_order)?;
            Ok(Report::json(scan.to_json()))
        }
    }
}

fn read_source(arg: &str) -> Result<String, Error> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parameter(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Error::Parameter(format!("cannot read {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// One graph from a graph6 string, `@FILE` (first line) or `-` (stdin).
fn graph_arg(arg: &str) -> Result<SimpleGraph, Error> {
    let text = read_source(arg)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parameter("no graph6 input".into()))?;
    parse_graph6(line)
}

fn graphs_arg(args: &[String]) -> Result<Vec<SimpleGraph>, Error> {
    let mut out = Vec::new();
    for a in args {
        for line in read_source(a)?.lines().map(str::trim).filter(|l| !l.is_empty()) {
            out.push(parse_graph6(line)?);
        }
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Error> {
    s.parse()
        .map_err(|_| Error::Parameter(format!("{what} must be a non-negative integer, got {s:?}")))
}

fn host_arg(spec: &str) -> Result<HostGraph, Error> {
    let parts: Vec<&str> = spec.splitn(2, ':').collect();
    let rest = parts.get(1).copied().unwrap_or("");
    let nums = |n: usize| -> Result<Vec<u64>, Error> {
        let v: Vec<&str> = rest.split(':').collect();
        if v.len() != n {
            return Err(Error::Parameter(format!("host spec {spec:?} needs {n} numeric fields")));
        }
        v.iter().map(|s| parse_num(s, "host parameter")).collect()
    };
    match parts[0] {
        "complete" => {
            let n = nums(1)?[0] as usize;
            if n > unigraph::homomorphism::HOST_LIMIT {
                return Err(Error::Capacity {
                    what: "complete host order",
                    got: n as u64,
                    limit: unigraph::homomorphism::HOST_LIMIT as u64,
                });
            }
            Ok(HostGraph::complete(n))
        }
        "kneser" => {
            let v = nums(2)?;
            HostGraph::kneser(v[0] as usize, v[1] as usize)
        }
        "paley" => {
            let v = nums(2)?;
            let d = u32::try_from(v[1]).map_err(|_| Error::Parameter("degree too large".into()))?;
            HostGraph::paley(Arc::new(Field::new(find_irreducible(v[0], d)?)?))
        }
        "file" => {
            let g = graph_arg(&format!("@{rest}"))?;
            Ok(HostGraph::from_simple(&g))
        }
        other => Err(Error::Parameter(format!(
            "unknown host kind {other:?}; expected complete, kneser, paley or file"
        ))),
    }
}

fn symfunc_report(op: &str, g: &SimpleGraph, k: usize, extra: Value, f: &SymFunc) -> Report {
    let mut inputs = json!({ "graph6": to_graph6(g), "k": k });
    if let (Some(i), Value::Object(e)) = (inputs.as_object_mut(), extra) {
        i.extend(e);
    }
    Report {
        json: json!({ "operation": op, "inputs": inputs, "value": f.to_json() }),
        text: Some(f.to_latex()),
        latex: Some(f.to_latex()),
    }
}

fn chroma(c: &Chroma) -> Result<Report, Error> {
    match c {
        Chroma::Poly { graph } => {
            let g = graph_arg(graph)?;
            let coeffs = chromatic_polynomial(&g)?;
            Ok(Report {
                json: json!({
                    "operation": "chromatic_polynomial",
                    "inputs": { "graph6": to_graph6(&g) },
                    "value": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                text: Some(poly_text(&coeffs, "n", "")),
                latex: Some(poly_text(&coeffs, "n", "^")),
            })
        }
        Chroma::Symfn {
            k,
            basis,
            route,
            n,
            graph,
        } => {
            let g = graph_arg(graph)?;
            let f = match route {
                Route::Direct => direct_m_expansion(&g, *k)?,
                Route::Spanning => theorem2_expansion(&g, *k)?,
                Route::Kneser => kneser_slice_expansion(&g, *k, n.unwrap_or(k * g.order()))?,
            };
            let f = match basis {
                BasisArg::M => f.to_m()?,
                BasisArg::P if matches!(route, Route::Spanning) => f,
                BasisArg::P => {
                    return Err(Error::Parameter(
                        "the power-sum basis is produced by --route spanning only".into(),
                    ))
                }
            };
            let route_name = match route {
                Route::Direct => "direct",
                Route::Spanning => "spanning",
                Route::Kneser => "kneser",
            };
            let mut extra = json!({ "route": route_name });
            if matches!(route, Route::Kneser) {
                extra["n"] = json!(n.unwrap_or(k * g.order()));
            }
            Ok(symfunc_report("symfn", &g, *k, extra, &f))
        }
        Chroma::Compare {
            method,
            max_host_order,
            first,
            second,
        } => {
            let (a, b) = (graph_arg(first)?, graph_arg(second)?);
            let m = match method {
                MethodArg::Chi => Method::ChromaticPoly,
                MethodArg::K1 => Method::XK1,
                MethodArg::K2 => Method::XK2,
                MethodArg::Profile => Method::HomProfile(*max_host_order),
            };
            let d = distinguish(&a, &b, m)?;
            let verdict = if d.separated() { "separated" } else { "collides" };
            Ok(Report {
                text: Some(verdict.into()),
                ..Report::json(d.to_json(&a, &b))
            })
        }
    }
}

/// Polynomial in `var`, highest power first.
fn poly_text(coeffs: &[BigInt], var: &str, caret: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let neg = c.sign() == num_bigint::Sign::Minus;
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.magnitude().to_string();
        let power = match (i, caret) {
            (0, _) => String::new(),
            (1, _) => var.to_string(),
            (_, "") => format!("{var}^{i}"),
            _ => format!("{var}^{{{i}}}"),
        };
        if mag != "1" || i == 0 {
            out.push_str(&mag);
        }
        out.push_str(&power);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn hom(h: &HomArgs) -> Result<Report, Error> {
    let g = graph_arg(&h.graph)?;
    let host = host_arg(&h.host)?;
    let inputs = json!({ "graph6": to_graph6(&g), "host": host.describe() });
    let (op, value, text) = match h.what {
        HomWhat::Count => {
            let c = count_hom(&g, &host)?;
            ("count_hom", json!(c.to_string()), c.to_string())
        }
        HomWhat::Weak => {
            let c = count_weak_hom(&g, &host)?;
            ("count_weak_hom", json!(c.to_string()), c.to_string())
        }
        HomWhat::Xh => {
            let p = x_h(&g, &host)?;
            let v = p.to_json(&host);
            let t = serde_json::to_string_pretty(&v).expect("values serialise");
            ("x_h", v, t)
        }
    };
    Ok(Report {
        text: Some(text),
        ..Report::json(json!({ "operation": op, "inputs": inputs, "value": value }))
    })
}

fn paley(a: &PaleyArgs, budget: u64) -> Result<Report, Error> {
    let field = Arc::new(Field::new(find_irreducible(a.p, a.d)?)?);
    let host = HostGraph::paley(field)?;
    let construction = |c: Option<Construction>, op: &str, extra: Value| -> Result<Report, Error> {
        let fq = Field::new(find_irreducible(a.p, a.sub_degree)?)?;
        let mut inputs = json!({ "host": host.describe(), "small": fq.spec().to_json() });
        if let (Some(i), Value::Object(e)) = (inputs.as_object_mut(), extra) {
            i.extend(e);
        }
        let (found, value) = match &c {
            Some(c) => (true, c.to_json(&host)),
            None => (false, Value::Null),
        };
        Ok(Report {
            text: Some(if found { "found" } else { "not found" }.into()),
            ..Report::json(json!({ "operation": op, "inputs": inputs, "found": found, "value": value }))
        })
    };
    let small = || -> Result<Field, Error> { Field::new(find_irreducible(a.p, a.sub_degree)?) };
    match a.what {
        PaleyWhat::Gen => {
            let dense = host.dense().ok_or_else(|| Error::Capacity {
                what: "Paley order for explicit output",
                got: host.order() as u64,
                limit: unigraph::homomorphism::DENSE_LIMIT as u64,
            })?;
            let g = SimpleGraph::from_edges(host.order(), &dense.edges())?;
            let f = host.field().expect("Paley host");
            let squares: Vec<Value> = (1..host.order())
                .filter(|&v| host.adjacent(0, v))
                .map(|v| host.vertex_label(v))
                .collect();
            Ok(Report {
                text: Some(to_graph6(&g)),
                ..Report::json(json!({
                    "operation": "paley_graph",
                    "inputs": { "field": f.spec().to_json() },
                    "value": {
                        "order": host.order(),
                        "degree": host.degree(0),
                        "squares": squares,
                        "graph6": to_graph6(&g),
                    },
                }))
            })
        }
        PaleyWhat::Pancyclic => {
            let r = pancyclicity_certificate(&host, budget)?;
            let verdict = if r.is_pancyclic() {
                "pancyclic".to_string()
            } else {
                format!("absent {:?} undecided {:?}", r.absent, r.undecided)
            };
            Ok(Report {
                text: Some(verdict),
                ..Report::json(r.to_json(&host))
            })
        }
        PaleyWhat::EmbedBipartite => construction(bipartite_embed(&small()?, &host)?, "bipartite_embed", json!({})),
        PaleyWhat::EmbedCycle => {
            let (target, extra) = match (a.cycle, a.path) {
                (Some(c), None) => (EvenTarget::Cycle(c), json!({ "cycle": c })),
                (None, Some(p)) => (EvenTarget::Path(p), json!({ "path": p })),
                (None, None) => {
                    let q = small()?.order() as usize;
                    let c = 2 * (q - 1);
                    (EvenTarget::Cycle(c), json!({ "cycle": c }))
                }
                _ => return Err(Error::Parameter("give --cycle or --path, not both".into())),
            };
            construction(even_cycle_embed(&small()?, &host, target)?, "even_cycle_embed", extra)
        }
        PaleyWhat::EmbedOddcycle => {
            let k = a.k.ok_or_else(|| Error::Parameter("embed-oddcycle needs --k".into()))?;
            construction(odd_cycle_embed(&small()?, &host, k)?, "odd_cycle_embed", json!({ "k": k }))
        }
    }
}

/// `paley:P`, `paley:P:M` or `kneser`, with an optional level count
/// after the functional series.
fn series_arg(spec: &str) -> Result<(SeriesSpec, Option<usize>), Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["kneser"] => Ok((SeriesSpec::Kneser, None)),
        ["kneser", l] => Ok((SeriesSpec::Kneser, Some(parse_num(l, "level count")?))),
        ["paley", p] => Ok((
            SeriesSpec::Paley {
                p: parse_num(p, "p")?,
                m: 0,
            },
            None,
        )),
        ["paley", p, m] => Ok((
            SeriesSpec::Paley {
                p: parse_num(p, "p")?,
                m: parse_num(m, "m")?,
            },
            None,
        )),
        _ => Err(Error::Parameter(format!(
            "unknown series {spec:?}; expected paley:P, paley:P:M or kneser"
        ))),
    }
}

fn index(i: &IndexCmd, budget: u64) -> Result<Report, Error> {
    match i {
        IndexCmd::Induced(a) | IndexCmd::Subgraph(a) => {
            let g = graph_arg(&a.graph)?;
            let (series, _) = series_arg(&a.series)?;
            let r = if matches!(i, IndexCmd::Induced(_)) {
                induced_index(&g, series, a.cap, budget)?
            } else {
                subgraph_index(&g, series, a.cap, budget)?
            };
            let text = match r.level() {
                Some(l) => l.to_string(),
                None => format!("> {}", a.cap),
            };
            Ok(Report {
                text: Some(text),
                ..Report::json(r.to_json())
            })
        }
        IndexCmd::Functional {
            series,
            counts_only,
            graphs,
        } => {
            let family = graphs_arg(graphs)?;
            let parts: Vec<&str> = series.split(':').collect();
            let invariant = if *counts_only {
                HostInvariant::HomCount
            } else {
                HostInvariant::XH
            };
            let fs = match parts.as_slice() {
                ["kneser"] => FunctionalSeries::Kneser { max_k: 2 },
                ["kneser", l] => FunctionalSeries::Kneser {
                    max_k: parse_num(l, "level count")?,
                },
                ["paley", p] | ["paley", p, _] => {
                    let levels: u32 = match parts.get(2) {
                        Some(l) => parse_num(l, "level count")?,
                        None => 1,
                    };
                    let p: u64 = parse_num(p, "p")?;
                    let hosts = (0..levels)
                        .map(|n| {
                            let d = 3u32
                                .checked_pow(n)
                                .and_then(|e| e.checked_mul(2))
                                .ok_or_else(|| Error::Parameter("series level too large".into()))?;
                            HostGraph::paley(Arc::new(Field::new(find_irreducible(p, d)?)?))
                        })
                        .collect::<Result<Vec<_>, Error>>()?;
                    FunctionalSeries::Hosts { hosts, invariant }
                }
                _ => {
                    return Err(Error::Parameter(format!(
                        "unknown functional series {series:?}; expected kneser[:L] or paley:P[:L]"
                    )))
                }
            };
            let r = functional_index(&family, &fs)?;
            let text = match r.value {
                Some(v) => v.to_string(),
                None => "unresolved".into(),
            };
            Ok(Report {
                text: Some(text),
                ..Report::json(r.to_json(&family, &fs))
            })
        }
    }
}

fn bound(b: &BoundsArgs) -> Result<Report, Error> {
    let need_k = || b.k.ok_or_else(|| Error::Parameter("this bound needs --k".into()));
    let (name, value) = match b.kind {
        BoundKind::Thm52 => ("thm52", bounds::thm52(b.q, need_k()?)?.to_string()),
        BoundKind::Lemma54 => ("lemma54", bounds::lemma54(b.q)?.to_string()),
        BoundKind::Lemma58 => ("lemma58", bounds::lemma58(b.q)?.to_string()),
        BoundKind::UpperBs => ("upperBS", bounds::upper_bs(b.q, need_k()?)?.to_string()),
        BoundKind::Bipartite => ("bipartite", bounds::thm17_bipartite(b.q, b.m)?.to_string()),
        BoundKind::OddCycle => ("oddCycle", bounds::thm17_odd_cycle(b.q, b.m)?.to_string()),
    };
    let mut inputs = json!({ "kind": name, "q": b.q });
    if let Some(k) = b.k {
        inputs["k"] = json!(k);
    }
    if matches!(b.kind, BoundKind::Bipartite | BoundKind::OddCycle) {
        inputs["m"] = json!(b.m);
    }
    Ok(Report {
        text: Some(value.clone()),
        ..Report::json(json!({ "operation": "bound", "inputs": inputs, "value": value }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_rendering() {
        let c: Vec<BigInt> = [0, 1, -2, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(poly_text(&c, "n", ""), "n^3 - 2n^2 + n");
        assert_eq!(poly_text(&c, "n", "^"), "n^{3} - 2n^{2} + n");
        assert_eq!(poly_text(&[], "n", ""), "0");
    }

    #[test]
    fn host_specs() {
        assert_eq!(host_arg("complete:4").unwrap().order(), 4);
        assert_eq!(host_arg("kneser:5:2").unwrap().order(), 10);
        assert_eq!(host_arg("paley:5:2").unwrap().order(), 25);
        assert_eq!(host_arg("torus:3").unwrap_err().kind(), "parameter");
        assert_eq!(host_arg("kneser:5").unwrap_err().kind(), "parameter");
    }

    #[test]
    fn series_specs() {
        assert_eq!(series_arg("kneser").unwrap().0, SeriesSpec::Kneser);
        assert_eq!(series_arg("paley:5").unwrap().0, SeriesSpec::Paley { p: 5, m: 0 });
        assert_eq!(series_arg("paley:3:1").unwrap().0, SeriesSpec::Paley { p: 3, m: 1 });
        assert!(series_arg("paley").is_err());
    }
}
