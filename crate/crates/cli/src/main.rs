use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use helly_lab::automorphism::{classify_automorphism, parse_cycles, AutomorphismClass, GraphAutomorphism};
use helly_lab::constructions::garside_b3_ball;
use helly_lab::constructions::{
    cell_helly_check, generate, lattice_to_graph, thickening, zn_window, CellComplexSpec, Generated,
};
use helly_lab::helly::{
    circumclique, coarse_helly_gap, helly_hull, interval_stability_bound, is_helly, round_cliques, HellyGraph,
    HellyMethod,
};
use helly_lab::io::{
    emit_edge_list, emit_hull_text, graph_dot, hull_dot, json_document, parse_cells, parse_graph, parse_metric,
    parse_poset, parse_vertex_set,
};
use helly_lab::oracle::{
    shift_bump, translate, translation_length, tree_translate, KingOracle, OracleAutomorphism, TranslationReport,
    TreeOracle,
};
use helly_lab::poset::{orthoscheme_chains, poset_check};
use helly_lab::scalar::parse_rational;
use helly_lab::subdivision::{first_subdivision, nth_subdivision, SubdivisionResult};
use helly_lab::tight_span::{
    combinatorial_dimension, dim_at_most, project_to_tight_span, tight_span_cells, tight_span_vertices,
    DeltaFunction, DimensionCheck, Projection, DEFAULT_MAX_ITER,
};
use helly_lab::{graph_distance_matrix, Bounds, Error, Rational, RationalMetric, SimpleGraph};

#[derive(Parser)]
#[command(name = "helly-lab", version, about = "Tight spans, Helly hulls and Helly graph constructions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Override an enumeration bound, e.g. `--bound hull-vertices=8`.
    /// Values above the default need --unsafe-raise.
    #[arg(long = "bound", value_name = "KEY=VALUE", global = true)]
    bounds: Vec<String>,
    #[arg(long, global = true)]
    unsafe_raise: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tight spans of finite metric spaces (CSV distance tables).
    #[command(subcommand)]
    Tightspan(TightspanCmd),
    /// Helly recognition, hulls and round cliques.
    #[command(subcommand)]
    Helly(HellyCmd),
    /// Helly subdivision of a Helly graph.
    Subdivide {
        #[command(flatten)]
        input: GraphInput,
        /// Subdivision level; 1 gives the round-clique subdivision.
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Graph automorphisms.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Posets given as `a < b` lines.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Built-in graphs and complexes.
    Construct {
        /// cycle, path, complete, tree, king, grid, sun, cube, corner,
        /// tree-of-squares or garside-ball
        kind: String,
        /// Size argument, e.g. `5`, `3x3`, `0,0,1` (tree parent list).
        arg: Option<String>,
    },
    /// Cell complexes: cell-Helly conditions and the thickening.
    Thicken {
        /// Built-in complex (`cube:D`, `corner`, `tree-of-squares`).
        #[arg(long, conflicts_with_all = ["graph", "cells"])]
        gen: Option<String>,
        #[arg(long, requires = "cells")]
        graph: Option<PathBuf>,
        /// One cell per line.
        #[arg(long, requires = "graph")]
        cells: Option<PathBuf>,
    },
    /// Graph of the box `[lo, hi]^dim` of Z^dim from its order and diagonal shift.
    Lattice {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        lo: i64,
        #[arg(long, default_value_t = 4)]
        hi: i64,
    },
    /// Metric invariants of a graph or distance table.
    #[command(subcommand)]
    Metric(MetricCmd),
}

#[derive(Subcommand)]
enum TightspanCmd {
    Vertices { metric: PathBuf },
    Cells { metric: PathBuf },
    Dim {
        metric: PathBuf,
        /// Also run the 2(k+1)-point criterion for dimension at most k.
        #[arg(long)]
        at_most: Option<usize>,
    },
    /// Retract a function of Delta(X) onto the tight span.
    Project {
        metric: PathBuf,
        /// Comma separated values, e.g. `1,1/2,2`.
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
}

#[derive(Subcommand)]
enum HellyCmd {
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    Hull {
        #[command(flatten)]
        input: GraphInput,
    },
    RoundCliques {
        #[command(flatten)]
        input: GraphInput,
    },
    Circumclique {
        #[command(flatten)]
        input: GraphInput,
        /// Vertex set, e.g. `0,2,5`.
        #[arg(long)]
        set: String,
    },
    /// Largest distance from a hull vertex to the graph.
    Gap {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Interval stability proxy.
    Stability {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    All,
    HullEquality,
    BergeTriples,
    BruteForce,
}

#[derive(Subcommand)]
enum AutCmd {
    /// Classify an automorphism given in cycle notation.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        perm: String,
    },
    /// Translation length of an automorphism of an infinite oracle graph.
    Length {
        /// `king:N` or `tree:D`.
        #[arg(long)]
        oracle: String,
        /// `identity`, `shift-bump`, `translate:v1,v2,...` (king) or `word:a,b,...` (tree).
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 12)]
        horizon: usize,
        /// Dimension parameter bounding the certificate period by 2N.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    Check { poset: PathBuf },
    Chains { poset: PathBuf },
}

#[derive(Subcommand)]
enum MetricCmd {
    /// Four-point slack.
    Delta {
        #[command(flatten)]
        input: MetricInput,
    },
    /// Points on geodesics between every pair of `x`, `y`, `z`.
    Median {
        #[command(flatten)]
        input: MetricInput,
        x: usize,
        y: usize,
        z: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file (`n m` header, then `u v` lines); `-` reads stdin.
    graph: Option<PathBuf>,
    /// Built-in graph instead of a file, e.g. `cycle:5`.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MetricInput {
    /// CSV distance table.
    #[arg(long)]
    metric: Option<PathBuf>,
    /// Edge-list file; its path metric is used.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    gen: Option<String>,
}

/// Result of a command: output bytes and whether the verdict was positive.
struct Outcome {
    text: String,
    verdict: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, verdict: true }
    }
}

type Res<T> = Result<T, Error>;

fn read_input(path: &PathBuf) -> Res<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn warn(lines: &[String]) {
    let mut err = std::io::stderr();
    for l in lines {
        let _ = writeln!(err, "warning: {l}");
    }
}

fn generated_graph(spec: &str) -> Res<SimpleGraph> {
    match generate(spec)? {
        Generated::Graph(g) => Ok(g),
        Generated::Complex(c) => Ok(c.graph),
    }
}

fn load_graph(input: &GraphInput) -> Res<SimpleGraph> {
    match (&input.graph, &input.gen) {
        (Some(p), _) => {
            let parsed = parse_graph(&read_input(p)?)?;
            warn(&parsed.warnings);
            Ok(parsed.value)
        }
        (None, Some(spec)) => generated_graph(spec),
        (None, None) => Err(Error::InvalidInput("no graph given".into())),
    }
}

fn load_metric(path: &PathBuf) -> Res<RationalMetric> {
    parse_metric(&read_input(path)?)
}

fn load_metric_input(input: &MetricInput) -> Res<RationalMetric> {
    if let Some(p) = &input.metric {
        return load_metric(p);
    }
    let g = match (&input.graph, &input.gen) {
        (Some(p), _) => {
            let parsed = parse_graph(&read_input(p)?)?;
            warn(&parsed.warnings);
            parsed.value
        }
        (None, Some(spec)) => generated_graph(spec)?,
        _ => return Err(Error::InvalidInput("no metric given".into())),
    };
    Ok(graph_distance_matrix(&g)?.to_rational())
}

fn apply_bounds(overrides: &[String], unsafe_raise: bool) -> Res<Bounds> {
    let defaults = Bounds::default();
    let mut b = defaults;
    for o in overrides {
        let (key, value) =
            o.split_once('=').ok_or_else(|| Error::BadSpec(format!("bound {o:?} is not KEY=VALUE")))?;
        let value: usize =
            value.trim().parse().map_err(|_| Error::BadSpec(format!("bound value {value:?} is not a number")))?;
        let (slot, default) = match key.trim() {
            "tight-span-points" => (&mut b.tight_span_points, defaults.tight_span_points),
            "hull-vertices" => (&mut b.hull_vertices, defaults.hull_vertices),
            "brute-force-vertices" => (&mut b.brute_force_vertices, defaults.brute_force_vertices),
            "subdivision-size" => (&mut b.subdivision_size, defaults.subdivision_size),
            "garside-radius" => (&mut b.garside_radius, defaults.garside_radius),
            "window-radius" => (&mut b.window_radius, defaults.window_radius),
            other => return Err(Error::BadSpec(format!("unknown bound {other:?}"))),
        };
        if value > default && !unsafe_raise {
            return Err(Error::BadSpec(format!(
                "raising {key} above its default {default} requires --unsafe-raise"
            )));
        }
        *slot = value;
    }
    Ok(b)
}

fn unsupported(format: Format, kind: &'static str) -> Error {
    Error::UnsupportedFormat { format: format.name().into(), kind }
}

fn set_text(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn values_text(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn values_json(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn graph_output(format: Format, kind: &str, g: &SimpleGraph, labels: Option<&[String]>) -> Res<String> {
    match format {
        Format::Text => Ok(emit_edge_list(g)),
        Format::Json => json_document(kind, &json!({ "graph": g, "labels": labels })),
        Format::Dot => Ok(graph_dot(g, labels, None)),
    }
}

fn run(cli: &Cli) -> Res<Outcome> {
    let bounds = apply_bounds(&cli.bounds, cli.unsafe_raise)?;
    let format = cli.format;
    match &cli.command {
        Command::Tightspan(cmd) => tightspan(cmd, format, &bounds),
        Command::Helly(cmd) => helly(cmd, format, &bounds),
        Command::Subdivide { input, n } => {
            let g = load_graph(input)?;
            let h = HellyGraph::verify(&g, &bounds)?;
            let s = if *n == 1 { first_subdivision(&h, &bounds)? } else { nth_subdivision(&h, *n, &bounds)? };
            Ok(Outcome::ok(subdivision_output(format, &s)?))
        }
        Command::Aut(cmd) => aut(cmd, format, &bounds),
        Command::Poset(cmd) => poset(cmd, format),
        Command::Construct { kind, arg } => construct(kind, arg.as_deref(), format, &bounds),
        Command::Thicken { gen, graph, cells } => {
            let c = match (gen, graph, cells) {
                (Some(spec), _, _) => match generate(spec)? {
                    Generated::Complex(c) => c,
                    Generated::Graph(_) => {
                        return Err(Error::BadSpec(format!("{spec:?} is a graph, not a cell complex")))
                    }
                },
                (None, Some(g), Some(c)) => {
                    let parsed = parse_graph(&read_input(g)?)?;
                    warn(&parsed.warnings);
                    CellComplexSpec::new(parsed.value, parse_cells(&read_input(c)?)?)?
                }
                _ => return Err(Error::InvalidInput("give --gen or both --graph and --cells".into())),
            };
            thicken(&c, format, &bounds)
        }
        Command::Lattice { dim, lo, hi } => {
            let (la, pts) = zn_window(*dim, *lo, *hi)?;
            let lg = lattice_to_graph(&la, &[], &bounds)?;
            let verdict = lg.distance_mismatches.is_empty() && lg.interior_helly.helly;
            let labels: Vec<String> = pts.iter().map(|p| format!("{p:?}")).collect();
            let text = match format {
                Format::Text => {
                    let mut t = format!(
                        "window: {} vertices, {} edges\ninterior: {} vertices\n",
                        pts.len(),
                        lg.graph.edge_count(),
                        lg.interior.len()
                    );
                    let _ = writeln!(
                        t,
                        "distance check: {} of {} interior pairs disagree",
                        lg.distance_mismatches.len(),
                        lg.interior_pairs_checked
                    );
                    let _ = writeln!(t, "interior helly: {}", lg.interior_helly.helly);
                    t
                }
                Format::Json => json_document("lattice", &json!({ "labels": labels, "report": lg }))?,
                Format::Dot => graph_dot(&lg.graph, Some(&labels), None),
            };
            Ok(Outcome { text, verdict })
        }
        Command::Metric(cmd) => metric(cmd, format),
    }
}

fn tightspan(cmd: &TightspanCmd, format: Format, bounds: &Bounds) -> Res<Outcome> {
    match cmd {
        TightspanCmd::Vertices { metric } => {
            let m = load_metric(metric)?;
            let verts = tight_span_vertices(&m, bounds)?;
            let text = match format {
                Format::Text => verts.iter().map(|v| values_text(v.values()) + "\n").collect(),
                Format::Json => {
                    let vs: Vec<Vec<String>> = verts.iter().map(|v| values_json(v.values())).collect();
                    json_document("tightspan-vertices", &json!({ "vertices": vs }))?
                }
                Format::Dot => return Err(unsupported(format, "tight span vertices")),
            };
            Ok(Outcome::ok(text))
        }
        TightspanCmd::Cells { metric } => {
            let m = load_metric(metric)?;
            let span = tight_span_cells(&m, bounds)?;
            let text = match format {
                Format::Text => {
                    let mut t = String::new();
                    for (i, v) in span.vertices.iter().enumerate() {
                        let _ = writeln!(t, "v{i}: {}", values_text(v.values()));
                    }
                    for c in &span.cells {
                        let ids: Vec<String> = c.vertex_ids.iter().map(|i| format!("v{i}")).collect();
                        let _ = writeln!(t, "dim {}: {}", c.dim, ids.join(" "));
                    }
                    t
                }
                Format::Json => {
                    let vs: Vec<Vec<String>> = span.vertices.iter().map(|v| values_json(v.values())).collect();
                    let cells: Vec<_> = span
                        .cells
                        .iter()
                        .map(|c| json!({ "tight_pairs": c.tight_pairs, "dim": c.dim, "vertices": c.vertex_ids }))
                        .collect();
                    json_document("tightspan-cells", &json!({ "vertices": vs, "cells": cells }))?
                }
                Format::Dot => return Err(unsupported(format, "tight span cells")),
            };
            Ok(Outcome::ok(text))
        }
        TightspanCmd::Dim { metric, at_most } => {
            let m = load_metric(metric)?;
            let dim = combinatorial_dimension(&m, bounds)?;
            let check = at_most.map(|k| dim_at_most(&m, k, bounds)).transpose()?;
            let verdict = !matches!(check, Some(DimensionCheck::Violated { .. }));
            let text = match format {
                Format::Text => {
                    let mut t = format!("dim = {dim}\n");
                    match (&check, at_most) {
                        (Some(DimensionCheck::Holds), Some(k)) => {
                            let _ = writeln!(t, "criterion for dim <= {k}: holds");
                        }
                        (Some(DimensionCheck::Violated { subset, involution }), Some(k)) => {
                            let _ = writeln!(
                                t,
                                "criterion for dim <= {k}: violated on {} by pairing {:?}",
                                set_text(subset),
                                involution
                            );
                        }
                        _ => {}
                    }
                    t
                }
                Format::Json => json_document("tightspan-dim", &json!({ "dim": dim, "criterion": check }))?,
                Format::Dot => return Err(unsupported(format, "dimension")),
            };
            Ok(Outcome { text, verdict })
        }
        TightspanCmd::Project { metric, f, max_iter } => {
            let m = load_metric(metric)?;
            let values: Vec<Rational> = f
                .split(',')
                .map(|s| parse_rational(s.trim()).ok_or_else(|| Error::BadSpec(format!("bad value {s:?}"))))
                .collect::<Res<_>>()?;
            let start = DeltaFunction::new(&m, values)?;
            let p = project_to_tight_span(&m, &start, *max_iter);
            let text = match (&p, format) {
                (Projection::Exact { f, steps }, Format::Text) => {
                    format!("exact after {steps} steps: {}\n", values_text(f.values()))
                }
                (Projection::Approximate { last, gap, steps }, Format::Text) => format!(
                    "approximate after {steps} steps: {}\ngap: {}\n",
                    values_text(last.values()),
                    values_text(gap)
                ),
                (Projection::Exact { f, steps }, Format::Json) => json_document(
                    "tightspan-project",
                    &json!({ "exact": true, "steps": steps, "f": values_json(f.values()) }),
                )?,
                (Projection::Approximate { last, gap, steps }, Format::Json) => json_document(
                    "tightspan-project",
                    &json!({ "exact": false, "steps": steps, "f": values_json(last.values()), "gap": values_json(gap) }),
                )?,
                (_, Format::Dot) => return Err(unsupported(format, "projection")),
            };
            Ok(Outcome { text, verdict: matches!(p, Projection::Exact { .. }) })
        }
    }
}

#[derive(Serialize)]
struct MethodReport {
    method: &'static str,
    helly: Option<bool>,
    witness: Vec<String>,
    skipped: Option<String>,
}

fn helly(cmd: &HellyCmd, format: Format, bounds: &Bounds) -> Res<Outcome> {
    match cmd {
        HellyCmd::Check { input, method } => {
            let g = load_graph(input)?;
            let methods: Vec<HellyMethod> = match method {
                MethodArg::All => HellyMethod::ALL.to_vec(),
                MethodArg::HullEquality => vec![HellyMethod::HullEquality],
                MethodArg::BergeTriples => vec![HellyMethod::BergeTriples],
                MethodArg::BruteForce => vec![HellyMethod::BruteForce],
            };
            let all = *method == MethodArg::All;
            let mut reports = Vec::new();
            for m in methods {
                match is_helly(&g, m, bounds) {
                    Ok(v) => reports.push(MethodReport {
                        method: m.name(),
                        helly: Some(v.helly),
                        witness: v.witness.iter().map(ToString::to_string).collect(),
                        skipped: None,
                    }),
                    Err(e @ Error::InstanceTooLarge { .. }) if all && m != HellyMethod::BergeTriples => {
                        reports.push(MethodReport { method: m.name(), helly: None, witness: vec![], skipped: Some(e.to_string()) })
                    }
                    Err(e) => return Err(e),
                }
            }
            let verdicts: Vec<bool> = reports.iter().filter_map(|r| r.helly).collect();
            if verdicts.iter().any(|&v| v != verdicts[0]) {
                let detail = reports
                    .iter()
                    .filter_map(|r| r.helly.map(|h| format!("{}={h}", r.method)))
                    .collect::<Vec<_>>()
                    .join(", ");
                return Err(Error::MethodDisagreement { detail });
            }
            let helly = verdicts[0];
            let text = match format {
                Format::Text => {
                    let mut t = format!("helly: {helly}\n");
                    for r in &reports {
                        match (&r.helly, &r.skipped) {
                            (Some(h), _) => {
                                let _ = write!(t, "  {}: {h}", r.method);
                                if !r.witness.is_empty() {
                                    let _ = write!(t, " (witness {})", r.witness.join(" "));
                                }
                                t.push('\n');
                            }
                            (None, Some(why)) => {
                                let _ = writeln!(t, "  {}: skipped ({why})", r.method);
                            }
                            _ => {}
                        }
                    }
                    t
                }
                Format::Json => json_document("helly-check", &json!({ "helly": helly, "methods": reports }))?,
                Format::Dot => return Err(unsupported(format, "helly check")),
            };
            Ok(Outcome { text, verdict: helly })
        }
        HellyCmd::Hull { input } => {
            let g = load_graph(input)?;
            let h = helly_hull(&g, bounds)?;
            let text = match format {
                Format::Text => emit_hull_text(&h),
                Format::Json => json_document("helly-hull", &h)?,
                Format::Dot => hull_dot(&h),
            };
            Ok(Outcome::ok(text))
        }
        HellyCmd::RoundCliques { input } => {
            let g = load_graph(input)?;
            let rc = round_cliques(&g, bounds)?;
            let text = match format {
                Format::Text => {
                    warn(&rc.warnings);
                    let mut t = String::new();
                    for (i, c) in rc.cliques.iter().enumerate() {
                        let _ = writeln!(t, "{i}: {}", set_text(c));
                    }
                    for (a, b) in rc.poset.hasse() {
                        let _ = writeln!(t, "{a} < {b}");
                    }
                    t
                }
                Format::Json => json_document(
                    "round-cliques",
                    &json!({
                        "cliques": rc.cliques,
                        "hasse": rc.poset.hasse(),
                        "helly": rc.helly,
                        "warnings": rc.warnings,
                    }),
                )?,
                Format::Dot => {
                    let labels: Vec<String> = rc.cliques.iter().map(|c| set_text(c)).collect();
                    let mut hasse = SimpleGraph::empty(rc.cliques.len());
                    for (a, b) in rc.poset.hasse() {
                        hasse.add_edge(a, b)?;
                    }
                    graph_dot(&hasse, Some(&labels), None)
                }
            };
            Ok(Outcome { text, verdict: rc.helly })
        }
        HellyCmd::Circumclique { input, set } => {
            let g = load_graph(input)?;
            let h = HellyGraph::verify(&g, bounds)?;
            let k = parse_vertex_set(set)?;
            let c = circumclique(&h, &k)?;
            let text = match format {
                Format::Text => set_text(&c) + "\n",
                Format::Json => json_document("circumclique", &json!({ "set": k, "circumclique": c }))?,
                Format::Dot => return Err(unsupported(format, "circumclique")),
            };
            Ok(Outcome::ok(text))
        }
        HellyCmd::Gap { input } => {
            let g = load_graph(input)?;
            let gap = coarse_helly_gap(&g, bounds)?;
            let text = match format {
                Format::Text => format!("gap = {gap}\n"),
                Format::Json => json_document("helly-gap", &json!({ "gap": gap }))?,
                Format::Dot => return Err(unsupported(format, "gap")),
            };
            Ok(Outcome::ok(text))
        }
        HellyCmd::Stability { input } => {
            let g = load_graph(input)?;
            let s = interval_stability_bound(&g)?;
            let text = match format {
                Format::Text => format!("interval stability = {s}\n"),
                Format::Json => json_document("interval-stability", &json!({ "bound": s.to_string() }))?,
                Format::Dot => return Err(unsupported(format, "stability")),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn subdivision_output(format: Format, s: &SubdivisionResult) -> Res<String> {
    let labels: Vec<String> = s
        .vertex_meaning
        .iter()
        .map(|m| match (&m.clique, &m.function) {
            (Some(c), _) => set_text(c),
            (None, Some(f)) => f.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            (None, None) => String::new(),
        })
        .collect();
    Ok(match format {
        Format::Text => {
            let mut t = format!("scale {}\n", s.scale);
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(t, "{i}: {l}");
            }
            t + &emit_edge_list(&s.graph)
        }
        Format::Json => json_document("subdivision", s)?,
        Format::Dot => graph_dot(&s.graph, Some(&labels), None),
    })
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Res<Vec<T>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse().map_err(|_| Error::BadSpec(format!("bad list entry {p:?}"))))
        .collect()
}

fn length_text(r: &TranslationReport) -> String {
    match (&r.length, r.period) {
        (Some(l), Some(a)) => format!("L = {l} (certified, a={a})\n"),
        _ => {
            let mut t = format!("L ~ {} (not certified)\n", r.estimate);
            if let Some(k) = r.window_exhausted {
                let _ = writeln!(t, "orbit left the window at step {k}");
            }
            t
        }
    }
}

fn aut(cmd: &AutCmd, format: Format, bounds: &Bounds) -> Res<Outcome> {
    match cmd {
        AutCmd::Classify { input, perm } => {
            let g = load_graph(input)?;
            let h = HellyGraph::verify(&g, bounds)?;
            let a = GraphAutomorphism::new(&g, parse_cycles(perm, g.vertex_count())?)?;
            let class = classify_automorphism(&h, &a, bounds)?;
            let text = match format {
                Format::Text => match &class {
                    AutomorphismClass::Elliptic { clique, subdivision_vertex, orbit } => format!(
                        "elliptic: stabilizes {}, fixes subdivision vertex {subdivision_vertex} (orbit of 0: {})\n",
                        set_text(clique),
                        set_text(orbit)
                    ),
                    AutomorphismClass::Hyperbolic { length } => format!("hyperbolic: L = {length}\n"),
                },
                Format::Json => json_document("automorphism", &class)?,
                Format::Dot => return Err(unsupported(format, "automorphism")),
            };
            Ok(Outcome::ok(text))
        }
        AutCmd::Length { oracle, map, horizon, n } => {
            let (kind, arg) = oracle.split_once(':').unwrap_or((oracle, ""));
            let (map_kind, map_arg) = map.split_once(':').unwrap_or((map, ""));
            let dim: usize =
                arg.trim().parse().map_err(|_| Error::BadSpec(format!("bad oracle parameter {arg:?}")))?;
            let report = match kind {
                "king" => {
                    let a: OracleAutomorphism<Vec<i64>> = match map_kind {
                        "identity" => OracleAutomorphism::identity(),
                        "shift-bump" => shift_bump(),
                        "translate" => {
                            let v: Vec<i64> = parse_list(map_arg)?;
                            if v.len() != dim {
                                return Err(Error::BadSpec(format!("translation needs {dim} entries")));
                            }
                            translate(v)
                        }
                        other => return Err(Error::BadSpec(format!("unknown map {other:?} for king"))),
                    };
                    translation_length(&KingOracle { dims: dim }, &a, n.unwrap_or(dim), *horizon, bounds.window_radius)?
                }
                "tree" => {
                    let deg = u8::try_from(dim).map_err(|_| Error::BadSpec("tree degree too large".into()))?;
                    let a: OracleAutomorphism<Vec<u8>> = match map_kind {
                        "identity" => OracleAutomorphism::identity(),
                        "word" => {
                            let w: Vec<u8> = parse_list(map_arg)?;
                            if let Some(x) = w.iter().find(|&&x| x >= deg) {
                                return Err(Error::BadSpec(format!("letter {x} out of range for degree {deg}")));
                            }
                            tree_translate(w)
                        }
                        other => return Err(Error::BadSpec(format!("unknown map {other:?} for tree"))),
                    };
                    translation_length(&TreeOracle { degree: deg }, &a, n.unwrap_or(1), *horizon, bounds.window_radius)?
                }
                other => return Err(Error::BadSpec(format!("unknown oracle {other:?}"))),
            };
            let text = match format {
                Format::Text => length_text(&report),
                Format::Json => json_document("translation-length", &report)?,
                Format::Dot => return Err(unsupported(format, "translation length")),
            };
            Ok(Outcome { text, verdict: report.certified })
        }
    }
}

fn poset(cmd: &PosetCmd, format: Format) -> Res<Outcome> {
    match cmd {
        PosetCmd::Check { poset } => {
            let p = parse_poset(&read_input(poset)?)?;
            let r = poset_check(&p);
            let text = match format {
                Format::Text => {
                    let mut t = format!("elements: {}\nlattice: {}\ngraded: {}\n", p.len(), r.is_lattice, r.graded);
                    for b in &r.bowties {
                        let names: Vec<String> = b.iter().map(|&x| p.label(x)).collect();
                        let _ = writeln!(t, "bowtie: {}, {} < {}, {}", names[0], names[1], names[2], names[3]);
                    }
                    let _ = writeln!(t, "upper flag failures: {}", r.up_flag_failures.len());
                    let _ = writeln!(t, "lower flag failures: {}", r.down_flag_failures.len());
                    t
                }
                Format::Json => json_document("poset-check", &json!({ "labels": p.labels(), "report": r }))?,
                Format::Dot => {
                    let mut g = SimpleGraph::empty(p.len());
                    for (a, b) in p.hasse() {
                        g.add_edge(a, b)?;
                    }
                    let labels: Vec<String> = (0..p.len()).map(|x| p.label(x)).collect();
                    graph_dot(&g, Some(&labels), None)
                }
            };
            Ok(Outcome { text, verdict: r.locally_flag() })
        }
        PosetCmd::Chains { poset } => {
            let p = parse_poset(&read_input(poset)?)?;
            let c = orthoscheme_chains(&p);
            let text = match format {
                Format::Text => {
                    let f: Vec<String> = c.f_vector.iter().map(ToString::to_string).collect();
                    let mut t = format!("f-vector: ({})\n", f.join(","));
                    for s in &c.simplices {
                        let names: Vec<String> = s.iter().map(|&x| p.label(x)).collect();
                        let _ = writeln!(t, "{}", names.join(" < "));
                    }
                    t
                }
                Format::Json => json_document("poset-chains", &c)?,
                Format::Dot => return Err(unsupported(format, "chains")),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn construct(kind: &str, arg: Option<&str>, format: Format, bounds: &Bounds) -> Res<Outcome> {
    if kind == "garside-ball" {
        let radius: usize = arg
            .unwrap_or("1")
            .parse()
            .map_err(|_| Error::BadSpec(format!("bad radius {arg:?}")))?;
        let ball = garside_b3_ball(radius, bounds)?;
        let text = match format {
            Format::Json => json_document("garside-ball", &ball)?,
            _ => graph_output(format, "garside-ball", &ball.graph, Some(&ball.labels))?,
        };
        return Ok(Outcome::ok(text));
    }
    let spec = match arg {
        Some(a) => format!("{kind}:{a}"),
        None => kind.to_string(),
    };
    let text = match generate(&spec)? {
        Generated::Graph(g) => graph_output(format, "graph", &g, None)?,
        Generated::Complex(c) => complex_output(format, &c)?,
    };
    Ok(Outcome::ok(text))
}

fn complex_output(format: Format, c: &CellComplexSpec) -> Res<String> {
    Ok(match format {
        Format::Text => {
            let mut t = emit_edge_list(&c.graph);
            t.push_str("# cells\n");
            for cell in &c.cells {
                let parts: Vec<String> = cell.iter().map(ToString::to_string).collect();
                let _ = writeln!(t, "{}", parts.join(" "));
            }
            t
        }
        Format::Json => json_document("complex", c)?,
        Format::Dot => graph_dot(&c.graph, c.labels.as_deref(), None),
    })
}

fn thicken(c: &CellComplexSpec, format: Format, bounds: &Bounds) -> Res<Outcome> {
    let report = cell_helly_check(c)?;
    let t = thickening(c);
    let helly = is_helly(&t, HellyMethod::BergeTriples, bounds)?;
    let text = match format {
        Format::Text => {
            let mut s = format!(
                "cell conditions: {}\n  helly family: {}\n  flag failures: {}\n  disconnected intersections: {}\n",
                if report.passes() { "pass" } else { "fail" },
                report.helly_family,
                report.flag_failures.len(),
                report.disconnected_intersections.len()
            );
            s.push_str("  simple connectivity: assumed, not checked\n");
            let _ = writeln!(s, "thickening: {} vertices, {} edges, helly: {}", t.vertex_count(), t.edge_count(), helly.helly);
            s
        }
        Format::Json => json_document(
            "thickening",
            &json!({ "report": report, "thickening": t, "thickening_helly": helly }),
        )?,
        Format::Dot => graph_dot(&t, c.labels.as_deref(), None),
    };
    Ok(Outcome { text, verdict: report.passes() && helly.helly })
}

fn metric(cmd: &MetricCmd, format: Format) -> Res<Outcome> {
    match cmd {
        MetricCmd::Delta { input } => {
            let m = load_metric_input(input)?;
            let d = m.four_point_delta();
            let text = match format {
                Format::Text => format!("delta = {d}\n"),
                Format::Json => json_document("four-point-delta", &json!({ "delta": d.to_string() }))?,
                Format::Dot => return Err(unsupported(format, "delta")),
            };
            Ok(Outcome::ok(text))
        }
        MetricCmd::Median { input, x, y, z } => {
            let m = load_metric_input(input)?;
            if let Some(v) = [x, y, z].into_iter().find(|&&v| v >= m.len()) {
                return Err(Error::InvalidInput(format!("point {v} out of range")));
            }
            let med = m.median_set(*x, *y, *z);
            let text = match format {
                Format::Text => set_text(&med) + "\n",
                Format::Json => json_document("median", &json!({ "points": [x, y, z], "median": med }))?,
                Format::Dot => return Err(unsupported(format, "median")),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout();
            if stdout.write_all(out.text.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.verdict { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
