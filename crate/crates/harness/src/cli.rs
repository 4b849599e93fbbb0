//! Command-line front end. Exit status: 0 all PASS/SKIP, 1 any FAIL,
//! 2 usage, parse or I/O error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use graphpow_core::{
    bfs_sphere_labeling, edge_to_vertex_transfer, fractional_power, minimum_labels,
    pair_edge_labeling, path_power_labeling, power, read_graph6_lines, star,
    star_subdivision_labeling, subdivide, tuple_edge_labeling, write_graph6, Construction,
    DistinguishingError, FractionalOrder, Graph, LabelKind, Superedge, DEFAULT_NODE_BUDGET,
};
use serde_json::{json, Value};

use crate::claims::{run_claims, select};
use crate::context::{Context, Limits};
use crate::report::{Meta, Report, Verdict};

#[derive(Debug, Parser)]
#[command(name = "graphpow", version, about = "Graph powers, subdivisions and distinguishing labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact D, D', D'' or automorphism group order of every graph in a file.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = ["D", "Dprime", "Dtotal", "aut"])]
        what: String,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Powers, subdivisions and fractional powers.
    Transform {
        #[arg(long = "in")]
        input: PathBuf,
        /// power:k | subdivide:k | frac:m/n:ps | frac:m/n:sp
        #[arg(long)]
        op: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        superedges: Option<PathBuf>,
    },
    /// Run a labeling construction and write the certified labeling.
    Label {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// bfs:k | star:m,k,s | pair | tuple:k | pathpower:n,k | transfer:k
        #[arg(long)]
        method: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Check claims over generated instances and write a report.
    Verify {
        /// "all" or comma separated claim ids
        #[arg(long, value_delimiter = ',', default_value = "all")]
        claims: Vec<String>,
        #[arg(long, default_value_t = Limits::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = Limits::default().max_k)]
        max_k: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = Limits::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        md: Option<PathBuf>,
    },
}

/// Any error that ends the run with status 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Compute {
            input,
            what,
            json,
            budget,
        } => compute(&input, &what, json.as_deref(), budget),
        Command::Transform {
            input,
            op,
            out,
            superedges,
        } => transform(&input, &op, &out, superedges.as_deref()),
        Command::Label {
            input,
            method,
            out,
            budget,
        } => label(input.as_deref(), &method, &out, budget),
        Command::Verify {
            claims,
            max_n,
            max_k,
            budget,
            samples,
            seed,
            out,
            md,
        } => verify(
            &claims,
            Limits {
                max_n,
                max_k,
                budget,
                samples,
            },
            seed,
            &out,
            md.as_deref(),
        ),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, Usage> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    read_graph6_lines(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Usage> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn compute(input: &Path, what: &str, json_out: Option<&Path>, budget: u64) -> Result<i32, Usage> {
    let ctx = Context::new(
        Limits {
            budget,
            ..Limits::default()
        },
        0,
    );
    let mut rows = Vec::new();
    for g in read_graphs(input)? {
        let g6 = write_graph6(&g);
        let value = if what == "aut" {
            match ctx.aut(&g) {
                Ok(a) => json!(a.order()),
                Err(e) => json!({"skipped": e}),
            }
        } else {
            let kind = match what {
                "D" => LabelKind::Vertex,
                "Dprime" => LabelKind::Edge,
                _ => LabelKind::Total,
            };
            let auts = ctx.aut(&g).map_err(usage)?;
            match minimum_labels(&g, &auts, kind, &ctx.search_limits()) {
                Ok(r) => json!(r.value),
                Err(DistinguishingError::Undefined(why)) => json!({"undefined": why}),
                Err(e) => json!({"skipped": e.to_string()}),
            }
        };
        println!("{g6}\t{what}\t{value}");
        rows.push(json!({"graph6": g6, "what": what, "value": value}));
    }
    if let Some(path) = json_out {
        write(path, &pretty(&Value::Array(rows)))?;
    }
    Ok(0)
}

fn parse_usize(s: &str, what: &str) -> Result<usize, Usage> {
    s.trim()
        .parse()
        .map_err(|_| usage(format!("{what}: expected a non-negative integer, got {s:?}")))
}

enum Op {
    Power(usize),
    Subdivide(usize),
    Frac(usize, usize, FractionalOrder),
}

fn parse_op(op: &str) -> Result<Op, Usage> {
    let bad = || usage(format!("unknown --op {op:?}"));
    let (name, rest) = op.split_once(':').ok_or_else(bad)?;
    match name {
        "power" => Ok(Op::Power(parse_usize(rest, "power")?)),
        "subdivide" => Ok(Op::Subdivide(parse_usize(rest, "subdivide")?)),
        "frac" => {
            let (ratio, order) = rest.split_once(':').ok_or_else(bad)?;
            let (m, n) = ratio.split_once('/').ok_or_else(bad)?;
            let order = match order {
                "ps" => FractionalOrder::PowerThenSubdivide,
                "sp" => FractionalOrder::SubdivideThenPower,
                _ => return Err(bad()),
            };
            Ok(Op::Frac(parse_usize(m, "frac m")?, parse_usize(n, "frac n")?, order))
        }
        _ => Err(bad()),
    }
}

fn transform(input: &Path, op: &str, out: &Path, superedges: Option<&Path>) -> Result<i32, Usage> {
    let op = parse_op(op)?;
    if superedges.is_some() && matches!(op, Op::Power(_) | Op::Frac(_, _, FractionalOrder::SubdivideThenPower)) {
        return Err(usage("--superedges needs subdivide:k or frac:m/n:ps"));
    }
    let mut lines = String::new();
    let mut maps: Vec<Vec<Superedge>> = Vec::new();
    for g in read_graphs(input)? {
        let h = match op {
            Op::Power(k) => power(&g, k)?,
            Op::Subdivide(k) => {
                let s = subdivide(&g, k)?;
                maps.push(s.superedges);
                s.graph
            }
            Op::Frac(m, n, FractionalOrder::PowerThenSubdivide) => {
                let s = graphpow_core::power_then_subdivide(&g, m, n)?;
                maps.push(s.superedges);
                s.graph
            }
            Op::Frac(m, n, order) => fractional_power(&g, m, n, order)?,
        };
        lines.push_str(&write_graph6(&h));
        lines.push('\n');
    }
    write(out, &lines)?;
    if let Some(path) = superedges {
        write(path, &pretty(&serde_json::to_value(&maps)?))?;
    }
    Ok(0)
}

fn one_graph(input: Option<&Path>, method: &str) -> Result<Graph, Usage> {
    let path = input.ok_or_else(|| usage(format!("--method {method} needs --in")))?;
    let mut graphs = read_graphs(path)?;
    if graphs.len() != 1 {
        return Err(usage(format!("{}: expected exactly one graph", path.display())));
    }
    Ok(graphs.remove(0))
}

fn parse_list(s: &str, want: usize, what: &str) -> Result<Vec<usize>, Usage> {
    let xs = s
        .split(',')
        .map(|x| parse_usize(x, what))
        .collect::<Result<Vec<_>, _>>()?;
    if xs.len() != want {
        return Err(usage(format!("{what}: expected {want} comma separated values")));
    }
    Ok(xs)
}

fn label(input: Option<&Path>, method: &str, out: &Path, budget: u64) -> Result<i32, Usage> {
    let (name, arg) = method.split_once(':').unwrap_or((method, ""));
    let edge_certificate = |g: &Graph| -> Result<_, Usage> {
        let ctx = Context::new(
            Limits {
                budget,
                ..Limits::default()
            },
            0,
        );
        let auts = ctx.aut(g).map_err(usage)?;
        Ok(minimum_labels(g, &auts, LabelKind::Edge, &ctx.search_limits())?.certificate)
    };
    let (g, built): (Graph, Construction) = match name {
        "bfs" => {
            let g = one_graph(input, method)?;
            let c = bfs_sphere_labeling(&g, parse_usize(arg, "bfs k")?)?;
            (g, c)
        }
        "star" => {
            let p = parse_list(arg, 3, "star m,k,s")?;
            (star(p[0]), star_subdivision_labeling(p[0], p[1], p[2] as u32)?)
        }
        "pathpower" => {
            let p = parse_list(arg, 2, "pathpower n,k")?;
            (graphpow_core::path(p[0]), path_power_labeling(p[0], p[1])?)
        }
        "pair" => {
            let g = one_graph(input, method)?;
            let c = pair_edge_labeling(&g, &edge_certificate(&g)?)?;
            (g, c)
        }
        "tuple" => {
            let g = one_graph(input, method)?;
            let k = parse_usize(arg, "tuple k")?;
            let c = tuple_edge_labeling(&g, k, &edge_certificate(&g)?)?;
            (g, c)
        }
        "transfer" => {
            let g = one_graph(input, method)?;
            let k = parse_usize(arg, "transfer k")?;
            let sub = subdivide(&g, k)?.graph;
            let c = edge_to_vertex_transfer(&g, k, &edge_certificate(&sub)?)?;
            (g, c)
        }
        _ => return Err(usage(format!("unknown --method {method:?}"))),
    };
    let doc = json!({
        "base_graph6": write_graph6(&g),
        "method": method,
        "labels_used": built.labels_used(),
        "claimed_labels": built.claimed,
        "labeling": built.labeling,
    });
    write(out, &pretty(&doc))?;
    println!("{method}: certified with {} labels", built.labels_used());
    Ok(0)
}

fn verify(
    ids: &[String],
    limits: Limits,
    seed: u64,
    out: &Path,
    md: Option<&Path>,
) -> Result<i32, Usage> {
    let claims = select(ids)?;
    let ctx = Context::new(limits, seed);
    let report = Report::new(
        Meta {
            seed,
            limits,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        run_claims(&ctx, &claims),
    );
    write(out, &report.to_json())?;
    if let Some(path) = md {
        write(path, &report.to_markdown())?;
    }
    let report_only: Vec<&str> = claims.iter().filter(|c| c.report_only).map(|c| c.id).collect();
    let failing = report
        .records
        .iter()
        .filter(|r| r.verdict == Verdict::Fail && !report_only.contains(&r.claim.as_str()))
        .count();
    eprintln!(
        "{} records: {} PASS, {} FAIL, {} SKIP ({failing} FAIL outside report-only claims)",
        report.records.len(),
        report.count(Verdict::Pass),
        report.count(Verdict::Fail),
        report.count(Verdict::Skip),
    );
    Ok(if failing > 0 { 1 } else { 0 })
}
