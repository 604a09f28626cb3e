//! Flag definitions and command execution.  Every command resolves its
//! configuration (flags, environment overrides, defaults), runs the
//! corresponding library operation, and emits one artifact envelope.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use rfano_core::bounds;
use rfano_core::coloring::{
    count_pattern_free_exact, estimate_from_hits, estimate_hits_range, Pattern,
};
use rfano_core::extremal::turan_number;
use rfano_core::fano::{enumerate_fano, FANO_EDGES};
use rfano_core::hypergraph::{
    build_bn, build_complete, build_multipartite, link_graph, Bipartition, MultipartiteSpec,
};
use rfano_core::real::RealCtx;
use rfano_core::regularity::{
    check_regularity, cluster_hypergraph, density, RegularitySource, RegularityVerdict,
};
use rfano_core::stability::{
    check_kee_stability, check_sizes_lemma, classify_abundant_colors, edge_disjoint_k4_packing,
    exhaustive_scan_range, min_noncrossing_bipartition, BipartitionMode,
};
use rfano_core::{gen, Hypergraph3};

use crate::artifact::{big_string, verdict_str, Envelope};
use crate::error::{CliError, CliResult};
use crate::formats::{
    self, load_bipartition, load_coloring, load_equitable_partition, load_hypergraph,
    load_pattern, parse_big_rational, parse_biguint, parse_budget, parse_small_rational,
    parse_u16_list, parse_u8_list, rational_string, write_csv,
};

const DEFAULT_EXTREMAL_BUDGET: u64 = 1_000_000_000;
const DEFAULT_REFUTE_SAMPLES: u64 = 20_000;
const BOUNDS_PRECISION: u64 = 256;

#[derive(Parser)]
#[command(
    name = "rfano",
    version,
    about = "Rainbow-Fano colorings: constructions, counting, extremal search, \
             stability and regularity diagnostics, certified constants"
)]
pub struct Cli {
    /// worker threads for the parallelizable searches
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// write the artifact (or generated object) to this path as well
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// generate hypergraph input files
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// enumerate Fano copies in a host
    Fano {
        #[command(subcommand)]
        what: FanoCmd,
    },
    /// count or estimate pattern-free colorings
    Count(CountArgs),
    /// Fano-free Turán number by branch and bound
    Extremal(ExtremalArgs),
    /// bipartition and coloring diagnostics
    Stability {
        #[command(subcommand)]
        what: StabilityCmd,
    },
    /// density and regularity of class triples
    Regularity {
        #[command(subcommand)]
        what: RegularityCmd,
    },
    /// certified constants and inequality windows
    Bounds {
        #[command(subcommand)]
        what: BoundsCmd,
    },
}

#[derive(Subcommand)]
pub enum GenCmd {
    /// complete 3-uniform hypergraph on n vertices
    Complete {
        #[arg(long)]
        n: u16,
    },
    /// balanced bipartite host: all triples crossing the balanced split
    Bn {
        #[arg(long)]
        n: u16,
    },
    /// complete multipartite host from an intersection vector and class sizes
    Multipartite {
        /// comma-separated intersection vector summing to 3, e.g. 1,1,1
        #[arg(long)]
        vector: String,
        /// comma-separated class sizes, e.g. 4,4,4
        #[arg(long)]
        sizes: String,
    },
    /// uniform random host with a fixed edge count
    Random {
        #[arg(long)]
        n: u16,
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
pub enum FanoCmd {
    /// number of unlabeled Fano copies
    Count {
        #[arg(long)]
        input: PathBuf,
    },
    /// list every copy as its seven edge triples
    List {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Args)]
pub struct CountArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// number of colors r
    #[arg(long)]
    pub colors: u32,
    /// "rainbow" or a pattern file path
    #[arg(long, default_value = "rainbow")]
    pub pattern: String,
    /// exact backtracking count (default unless --estimate is given)
    #[arg(long, conflicts_with = "estimate")]
    pub exact: bool,
    /// Monte Carlo sample count
    #[arg(long, conflicts_with = "sweep")]
    pub estimate: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// backtracking node budget for exact counts (default unlimited,
    /// overridable via RFANO_COUNT_BUDGET)
    #[arg(long)]
    pub budget: Option<String>,
    /// emit a CSV of exact counts for r = 1..=colors
    #[arg(long)]
    pub sweep: bool,
    /// CSV output path, required with --sweep
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: u16,
    /// node budget; integers or scientific notation (default 1e9,
    /// overridable via RFANO_EXTREMAL_BUDGET)
    #[arg(long)]
    pub budget: Option<String>,
    /// emit a CSV sweeping 4..=n
    #[arg(long)]
    pub sweep: bool,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum StabilityCmd {
    /// bipartition minimizing the non-crossing edge count
    Bipartition {
        #[arg(long)]
        input: PathBuf,
        /// steepest-descent local search instead of the exhaustive scan
        #[arg(long)]
        local: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// class-size conclusion from the crossing-density hypothesis
    Sizes {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        delta: String,
    },
    /// near-extremal hosts are near-bipartite
    Kee {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        delta: String,
        /// known Turán value for |V(h)|; computed when omitted and n <= 8
        #[arg(long)]
        turan: Option<u64>,
        #[arg(long)]
        budget: Option<String>,
        #[arg(long)]
        local: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// greedy edge-disjoint K4 packing in a link graph
    K4pack {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        vertex: u16,
    },
    /// abundant colors at a vertex and the rare within-class link edges
    Abundant {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        vertex: u16,
        #[arg(long)]
        xi: String,
    },
}

#[derive(Subcommand)]
pub enum RegularityCmd {
    /// exact edge density of a class triple
    Density {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        /// three class indices, e.g. 0,1,2
        #[arg(long)]
        triple: String,
    },
    /// epsilon-regularity verdict for a class triple
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        triple: String,
        #[arg(long)]
        eps: String,
        /// random-subset attempts for classes beyond exhaustive reach
        /// (default 20000, overridable via RFANO_REFUTE_SAMPLES)
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// multicolored cluster hypergraph over an equitable partition
    Cluster {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        eta: String,
    },
}

#[derive(Subcommand)]
pub enum BoundsCmd {
    /// exponent of 6 in the color-count threshold for a given delta
    R0 {
        #[arg(long)]
        delta: String,
    },
    /// window check or search for the regularity parameter eta
    Eta {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        eta: Option<String>,
        /// search for eta = 2^-k instead of checking a given one
        #[arg(long)]
        solve: bool,
    },
    /// parameter cascade for (gamma, xi, delta, r)
    Check41 {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        xi: String,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        r: String,
    },
    /// binary entropy enclosure at a rational point
    Entropy {
        #[arg(long)]
        x: String,
    },
    /// exact extension counts 18r^3 and 21r^5
    Extension {
        #[arg(long)]
        r: u64,
    },
    /// edge-count envelope of the balanced bipartite host
    Bn {
        #[arg(long)]
        n: u16,
    },
    /// quadratic deletion lower bound at (gamma, n)
    Deletion {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: u64,
    },
}

pub fn execute(cli: Cli) -> CliResult<()> {
    if cli.threads == 0 {
        return Err(CliError::BadInput("--threads must be at least 1".into()));
    }
    let out = cli.output.as_deref();
    match cli.command {
        Command::Gen { what } => run_gen(what, out),
        Command::Fano { what } => run_fano(what, out),
        Command::Count(args) => run_count(args, cli.threads, out),
        Command::Extremal(args) => run_extremal(args, out),
        Command::Stability { what } => run_stability(what, cli.threads, out),
        Command::Regularity { what } => run_regularity(what, out),
        Command::Bounds { what } => run_bounds(what, out),
    }
}

fn env_u64(name: &str) -> CliResult<Option<u64>> {
    match std::env::var(name) {
        Ok(s) => parse_budget(&s)
            .map(Some)
            .map_err(|e| CliError::BadInput(format!("{name}: {e}"))),
        Err(_) => Ok(None),
    }
}

fn resolve_budget(flag: &Option<String>) -> CliResult<u64> {
    if let Some(s) = flag {
        return parse_budget(s);
    }
    Ok(env_u64("RFANO_EXTREMAL_BUDGET")?.unwrap_or(DEFAULT_EXTREMAL_BUDGET))
}

fn split_ranges(total: u64, parts: usize) -> Vec<(u64, u64)> {
    let parts = parts.max(1) as u64;
    let chunk = total.div_ceil(parts).max(1);
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < total {
        let hi = (lo + chunk).min(total);
        out.push((lo, hi));
        lo = hi;
    }
    if out.is_empty() {
        out.push((0, 0));
    }
    out
}

// ---- gen ----

fn run_gen(cmd: GenCmd, out: Option<&Path>) -> CliResult<()> {
    let (name, config, h) = match cmd {
        GenCmd::Complete { n } => (
            "gen complete",
            json!({ "n": n }),
            build_complete(n)?,
        ),
        GenCmd::Bn { n } => ("gen bn", json!({ "n": n }), build_bn(n)?.0),
        GenCmd::Multipartite { vector, sizes } => {
            let vec_list = parse_u8_list(&vector)?;
            let size_list = parse_u16_list(&sizes)?;
            let mut classes = Vec::with_capacity(size_list.len());
            let mut start = 0u16;
            for &s in &size_list {
                classes.push((start..start + s).collect::<Vec<u16>>());
                start += s;
            }
            let spec = MultipartiteSpec::new(vec_list.clone(), classes)?;
            (
                "gen multipartite",
                json!({ "vector": vec_list, "sizes": size_list }),
                build_multipartite(&spec)?,
            )
        }
        GenCmd::Random { n, edges, seed } => (
            "gen random",
            json!({ "n": n, "edges": edges, "seed": seed }),
            gen::random_hypergraph(n, edges, seed)?,
        ),
    };
    let data = formats::hypergraph_json(&h);
    match out {
        Some(path) => {
            formats::write_text(path, &data)?;
            let env = Envelope::new(
                name,
                config,
                json!({
                    "n": h.n(),
                    "edgeCount": h.edge_count(),
                    "file": path.display().to_string(),
                }),
            );
            env.emit(None)
        }
        None => {
            // no destination: print the generated object itself for piping
            print!("{data}");
            Ok(())
        }
    }
}

// ---- fano ----

fn copy_triples(vertices: &[u16; 7]) -> Vec<[u16; 3]> {
    FANO_EDGES
        .iter()
        .map(|line| {
            let mut t = [
                vertices[line[0] as usize],
                vertices[line[1] as usize],
                vertices[line[2] as usize],
            ];
            t.sort_unstable();
            t
        })
        .collect()
}

fn run_fano(cmd: FanoCmd, out: Option<&Path>) -> CliResult<()> {
    match cmd {
        FanoCmd::Count { input } => {
            let h = load_hypergraph(&input)?;
            let copies = enumerate_fano(&h);
            Envelope::new(
                "fano count",
                json!({ "input": input.display().to_string() }),
                json!({ "copies": copies.len() }),
            )
            .emit(out)
        }
        FanoCmd::List { input } => {
            let h = load_hypergraph(&input)?;
            let copies = enumerate_fano(&h);
            let list: Vec<Vec<[u16; 3]>> =
                copies.iter().map(|c| copy_triples(&c.vertices)).collect();
            Envelope::new(
                "fano list",
                json!({ "input": input.display().to_string() }),
                json!({ "copies": copies.len(), "list": list }),
            )
            .emit(out)
        }
    }
}

// ---- count ----

fn count_budget(flag: &Option<String>) -> CliResult<u64> {
    if let Some(s) = flag {
        return parse_budget(s);
    }
    Ok(env_u64("RFANO_COUNT_BUDGET")?.unwrap_or(u64::MAX))
}

fn run_count(args: CountArgs, threads: usize, out: Option<&Path>) -> CliResult<()> {
    let h = load_hypergraph(&args.input)?;
    let pattern = load_pattern(&args.pattern)?;
    if args.colors == 0 {
        return Err(CliError::BadInput("--colors must be at least 1".into()));
    }
    let budget = count_budget(&args.budget)?;
    if args.sweep {
        return run_count_sweep(&args, &h, &pattern, budget, out);
    }
    let config = json!({
        "input": args.input.display().to_string(),
        "colors": args.colors,
        "pattern": args.pattern,
        "mode": if args.estimate.is_some() { "estimate" } else { "exact" },
        "samples": args.estimate,
        "seed": if args.estimate.is_some() { Some(args.seed) } else { None },
        "budget": if args.estimate.is_none() { Some(budget) } else { None },
    });
    match args.estimate {
        None => {
            let count = count_pattern_free_exact(&h, args.colors, &pattern, budget)?;
            Envelope::new(
                "count",
                config,
                json!({ "count": big_string(&count), "edges": h.edge_count() }),
            )
            .emit(out)
        }
        Some(samples) => {
            if samples == 0 {
                return Err(CliError::BadInput("--estimate needs at least 1 sample".into()));
            }
            let ranges = split_ranges(samples, threads);
            let hits: u64 = std::thread::scope(|scope| -> CliResult<u64> {
                let mut handles = Vec::new();
                for &(lo, hi) in &ranges {
                    let (h, pattern) = (&h, &pattern);
                    let (r, seed) = (args.colors, args.seed);
                    handles.push(
                        scope.spawn(move || estimate_hits_range(h, r, pattern, seed, lo, hi)),
                    );
                }
                let mut total = 0u64;
                for handle in handles {
                    total += handle
                        .join()
                        .map_err(|_| CliError::Internal("worker thread panicked".into()))??;
                }
                Ok(total)
            })?;
            let est = estimate_from_hits(samples, hits, args.seed);
            Envelope::new(
                "count",
                config,
                json!({
                    "samples": est.samples,
                    "hits": est.hits,
                    "seed": est.seed,
                    "estimate": est.estimate,
                    "halfWidth": est.half_width,
                }),
            )
            .emit(out)
        }
    }
}

fn run_count_sweep(
    args: &CountArgs,
    h: &Hypergraph3,
    pattern: &Pattern,
    budget: u64,
    out: Option<&Path>,
) -> CliResult<()> {
    let csv = args
        .csv
        .as_deref()
        .ok_or_else(|| CliError::BadInput("--sweep requires --csv".into()))?;
    let mut rows = Vec::new();
    for r in 1..=args.colors {
        let count = count_pattern_free_exact(h, r, pattern, budget)?;
        rows.push(vec![r.to_string(), big_string(&count)]);
    }
    write_csv(csv, "r,count", &rows)?;
    Envelope::new(
        "count sweep",
        json!({
            "input": args.input.display().to_string(),
            "pattern": args.pattern,
            "sweepTo": args.colors,
        }),
        json!({ "csv": csv.display().to_string(), "rows": rows.len() }),
    )
    .emit(out)
}

// ---- extremal ----

fn run_extremal(args: ExtremalArgs, out: Option<&Path>) -> CliResult<()> {
    let budget = resolve_budget(&args.budget)?;
    if args.sweep {
        let csv = args
            .csv
            .as_deref()
            .ok_or_else(|| CliError::BadInput("--sweep requires --csv".into()))?;
        let mut rows = Vec::new();
        for n in 4..=args.n {
            let started = Instant::now();
            let outcome = turan_number(n, budget)?;
            rows.push(vec![
                n.to_string(),
                outcome.value.to_string(),
                outcome.proved_optimal.to_string(),
                outcome.nodes_expanded.to_string(),
                format!("{:.3}", started.elapsed().as_secs_f64()),
            ]);
        }
        write_csv(csv, "n,value,provedOptimal,nodesExpanded,seconds", &rows)?;
        return Envelope::new(
            "extremal sweep",
            json!({ "n": args.n, "budget": budget }),
            json!({ "csv": csv.display().to_string(), "rows": rows.len() }),
        )
        .emit(out);
    }
    let started = Instant::now();
    let outcome = turan_number(args.n, budget)?;
    let seconds = started.elapsed().as_secs_f64();
    let witness: Vec<[u16; 3]> = outcome.witness.triples().map(|(a, b, c)| [a, b, c]).collect();
    let env = Envelope::new(
        "extremal",
        json!({ "n": args.n, "budget": budget }),
        json!({
            "value": outcome.value,
            "provedOptimal": outcome.proved_optimal,
            "witnessEdges": witness,
            "nodesExpanded": outcome.nodes_expanded,
            "seconds": seconds,
        }),
    );
    env.emit(out)?;
    if !outcome.proved_optimal {
        return Err(CliError::Budget(format!(
            "optimality unproved for n = {} within {budget} nodes; incumbent {} recorded",
            args.n, outcome.value
        )));
    }
    Ok(())
}

// ---- stability ----

fn part_a_of_mask(mask: u32, n: u16) -> Vec<u16> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn run_bipartition_exhaustive(
    h: &Hypergraph3,
    threads: usize,
) -> CliResult<(Bipartition, u64)> {
    let n = h.n();
    let total = if n == 0 { 0 } else { 1u64 << (n - 1) };
    let ranges = split_ranges(total, threads);
    let results: Vec<(u64, u32)> = std::thread::scope(|scope| -> CliResult<Vec<(u64, u32)>> {
        let mut handles = Vec::new();
        for &(lo, hi) in &ranges {
            handles.push(scope.spawn(move || exhaustive_scan_range(h, lo, hi)));
        }
        let mut collected = Vec::new();
        for handle in handles {
            collected.push(
                handle
                    .join()
                    .map_err(|_| CliError::Internal("worker thread panicked".into()))??,
            );
        }
        Ok(collected)
    })?;
    // merge with the same tie-break as a single scan: smallest count,
    // then lexicographically smallest class-A list
    let mut best: Option<(u64, Vec<u16>, u32)> = None;
    for (count, mask) in results {
        let list = part_a_of_mask(mask, n);
        let better = match &best {
            None => true,
            Some((bc, bl, _)) => count < *bc || (count == *bc && list < *bl),
        };
        if better {
            best = Some((count, list, mask));
        }
    }
    let (count, list, _) = best.ok_or_else(|| CliError::Internal("empty scan".into()))?;
    Ok((Bipartition::new(n, list)?, count))
}

fn run_stability(cmd: StabilityCmd, threads: usize, out: Option<&Path>) -> CliResult<()> {
    match cmd {
        StabilityCmd::Bipartition { input, local, seed } => {
            let h = load_hypergraph(&input)?;
            let config = json!({
                "input": input.display().to_string(),
                "mode": if local { "local" } else { "exhaustive" },
                "seed": if local { Some(seed) } else { None },
            });
            let (partition, noncrossing, used_seed) = if local {
                let o = min_noncrossing_bipartition(&h, BipartitionMode::LocalSearch { seed })?;
                (o.partition, o.noncrossing, o.seed)
            } else {
                let (p, c) = run_bipartition_exhaustive(&h, threads)?;
                (p, c, None)
            };
            Envelope::new(
                "stability bipartition",
                config,
                json!({
                    "noncrossing": noncrossing,
                    "partA": partition.part_a(),
                    "partB": partition.part_b(),
                    "seed": used_seed,
                }),
            )
            .emit(out)
        }
        StabilityCmd::Sizes {
            input,
            partition,
            delta,
        } => {
            let h = load_hypergraph(&input)?;
            let p = load_bipartition(&partition, h.n())?;
            let (dn, dd) = parse_small_rational(&delta)?;
            let rep = check_sizes_lemma(&h, &p, dn, dd)?;
            Envelope::new(
                "stability sizes",
                json!({
                    "input": input.display().to_string(),
                    "partition": partition.display().to_string(),
                    "delta": format!("{dn}/{dd}"),
                }),
                json!({
                    "applicable": rep.applicable,
                    "hypothesisHolds": rep.hypothesis_holds,
                    "conclusionHolds": rep.conclusion_holds,
                    "crossing": rep.crossing,
                    "noncrossing": rep.noncrossing,
                    "bnEdges": rep.bn_edges,
                    "slack": if rep.slack.is_nan() { Value::Null } else { json!(rep.slack) },
                }),
            )
            .emit(out)
        }
        StabilityCmd::Kee {
            input,
            delta,
            turan,
            budget,
            local,
            seed,
        } => {
            let h = load_hypergraph(&input)?;
            let (dn, dd) = parse_small_rational(&delta)?;
            let turan_value = match turan {
                Some(v) => v,
                None => {
                    if h.n() > 8 {
                        return Err(CliError::BadInput(
                            "supply --turan for hosts above 8 vertices".into(),
                        ));
                    }
                    let b = resolve_budget(&budget)?;
                    let outcome = turan_number(h.n(), b)?;
                    if !outcome.proved_optimal {
                        return Err(CliError::Budget(format!(
                            "Turán value for n = {} unproved within {b} nodes",
                            h.n()
                        )));
                    }
                    outcome.value
                }
            };
            let mode = if local {
                BipartitionMode::LocalSearch { seed }
            } else {
                BipartitionMode::Exhaustive
            };
            let rep = check_kee_stability(&h, dn, dd, turan_value, mode)?;
            let (noncrossing, part_a) = match &rep.outcome {
                Some(o) => (
                    Some(o.noncrossing),
                    Some(o.partition.part_a().to_vec()),
                ),
                None => (None, None),
            };
            Envelope::new(
                "stability kee",
                json!({
                    "input": input.display().to_string(),
                    "delta": format!("{dn}/{dd}"),
                    "turan": turan_value,
                    "mode": if local { "local" } else { "exhaustive" },
                    "seed": if local { Some(seed) } else { None },
                }),
                json!({
                    "applicable": rep.applicable,
                    "fanoFree": rep.fano_free,
                    "edgeCount": rep.edge_count,
                    "turanValue": rep.turan_value,
                    "noncrossing": noncrossing,
                    "partA": part_a,
                    "boundHolds": rep.bound_holds,
                }),
            )
            .emit(out)
        }
        StabilityCmd::K4pack { input, vertex } => {
            let h = load_hypergraph(&input)?;
            let link = link_graph(&h, vertex)?;
            let packing = edge_disjoint_k4_packing(&link.graph)?;
            Envelope::new(
                "stability k4pack",
                json!({ "input": input.display().to_string(), "vertex": vertex }),
                json!({
                    "linkEdges": link.graph.edges().count(),
                    "k4s": packing,
                    "count": packing.len(),
                }),
            )
            .emit(out)
        }
        StabilityCmd::Abundant {
            input,
            coloring,
            partition,
            vertex,
            xi,
        } => {
            let h = load_hypergraph(&input)?;
            let c = load_coloring(&coloring, &h)?;
            let p = load_bipartition(&partition, h.n())?;
            let (xn, xd) = parse_small_rational(&xi)?;
            let rep = classify_abundant_colors(&h, &c, vertex, &p, xn, xd)?;
            Envelope::new(
                "stability abundant",
                json!({
                    "input": input.display().to_string(),
                    "coloring": coloring.display().to_string(),
                    "partition": partition.display().to_string(),
                    "vertex": vertex,
                    "xi": format!("{xn}/{xd}"),
                }),
                json!({
                    "threshold": rep.threshold,
                    "abundantX": rep.abundant_x,
                    "abundantY": rep.abundant_y,
                    "jx": rep.j_x,
                    "jy": rep.j_y,
                }),
            )
            .emit(out)
        }
    }
}

// ---- regularity ----

fn class_triple<'a>(
    classes: &'a [Vec<u16>],
    spec: &str,
) -> CliResult<(&'a [u16], &'a [u16], &'a [u16])> {
    let idx = parse_u16_list(spec)?;
    if idx.len() != 3 {
        return Err(CliError::BadInput(format!(
            "--triple needs exactly 3 class indices, got {}",
            idx.len()
        )));
    }
    for &i in &idx {
        if i as usize >= classes.len() {
            return Err(CliError::BadInput(format!(
                "class index {i} outside 0..{}",
                classes.len()
            )));
        }
    }
    Ok((
        &classes[idx[0] as usize],
        &classes[idx[1] as usize],
        &classes[idx[2] as usize],
    ))
}

fn run_regularity(cmd: RegularityCmd, out: Option<&Path>) -> CliResult<()> {
    match cmd {
        RegularityCmd::Density {
            input,
            partition,
            triple,
        } => {
            let h = load_hypergraph(&input)?;
            let p = load_equitable_partition(&partition, h.n())?;
            let (w1, w2, w3) = class_triple(p.classes(), &triple)?;
            let d = density(&h, w1, w2, w3)?;
            Envelope::new(
                "regularity density",
                json!({
                    "input": input.display().to_string(),
                    "partition": partition.display().to_string(),
                    "triple": triple,
                }),
                json!({ "density": rational_string(&d) }),
            )
            .emit(out)
        }
        RegularityCmd::Check {
            input,
            partition,
            triple,
            eps,
            samples,
            seed,
        } => {
            let h = load_hypergraph(&input)?;
            let p = load_equitable_partition(&partition, h.n())?;
            let (w1, w2, w3) = class_triple(p.classes(), &triple)?;
            let (en, ed) = parse_small_rational(&eps)?;
            let samples = match samples {
                Some(s) => s,
                None => env_u64("RFANO_REFUTE_SAMPLES")?.unwrap_or(DEFAULT_REFUTE_SAMPLES),
            };
            let verdict = check_regularity(&h, w1, w2, w3, en, ed, samples, seed)?;
            let result = match verdict {
                RegularityVerdict::Regular { d } => json!({
                    "regular": true,
                    "d": rational_string(&d),
                }),
                RegularityVerdict::Irregular {
                    witness,
                    witness_density,
                    midpoint,
                } => json!({
                    "regular": false,
                    "witness": witness,
                    "witnessDensity": rational_string(&witness_density),
                    "midpoint": rational_string(&midpoint),
                }),
                RegularityVerdict::NotRefuted { samples, seed } => json!({
                    "regular": Value::Null,
                    "samples": samples,
                    "seed": seed,
                }),
            };
            Envelope::new(
                "regularity check",
                json!({
                    "input": input.display().to_string(),
                    "partition": partition.display().to_string(),
                    "triple": triple,
                    "eps": format!("{en}/{ed}"),
                    "samples": samples,
                    "seed": seed,
                }),
                result,
            )
            .emit(out)
        }
        RegularityCmd::Cluster {
            input,
            coloring,
            partition,
            eps,
            eta,
        } => {
            let h = load_hypergraph(&input)?;
            let c = load_coloring(&coloring, &h)?;
            let p = load_equitable_partition(&partition, h.n())?;
            let (en, ed) = parse_small_rational(&eps)?;
            let (hn, hd) = parse_small_rational(&eta)?;
            let rc = cluster_hypergraph(&h, &c, &p, en, ed, hn, hd, RegularitySource::Exhaustive)?;
            let edges: Vec<Value> = rc
                .edges()
                .iter()
                .zip(rc.lists())
                .map(|(t, colors)| json!({ "triple": t, "colors": colors }))
                .collect();
            Envelope::new(
                "regularity cluster",
                json!({
                    "input": input.display().to_string(),
                    "coloring": coloring.display().to_string(),
                    "partition": partition.display().to_string(),
                    "eps": format!("{en}/{ed}"),
                    "eta": format!("{hn}/{hd}"),
                }),
                json!({ "m": rc.m(), "edges": edges }),
            )
            .emit(out)
        }
    }
}

// ---- bounds ----

fn run_bounds(cmd: BoundsCmd, out: Option<&Path>) -> CliResult<()> {
    match cmd {
        BoundsCmd::R0 { delta } => {
            let d = parse_big_rational(&delta)?;
            let result = if d.numer().is_one() {
                let den = d.denom().magnitude();
                let e = bounds::r0_exponent(den)?;
                let check = bounds::r0_exponent_naive(den)?;
                if e != check {
                    return Err(CliError::Internal(
                        "exponent routes disagree".into(),
                    ));
                }
                let s = big_string(&e);
                json!({
                    "delta": rational_string(&d),
                    "log6R0": s,
                    "digits": s.len(),
                })
            } else {
                let v = bounds::r0_exponent_rational(
                    d.numer().magnitude(),
                    d.denom().magnitude(),
                )?;
                json!({
                    "delta": rational_string(&d),
                    "log6R0": rational_string(&v),
                })
            };
            Envelope::new("bounds r0", json!({ "delta": delta }), result).emit(out)
        }
        BoundsCmd::Eta {
            delta,
            r,
            eta,
            solve,
        } => {
            let d = parse_big_rational(&delta)?;
            let ctx = RealCtx::new(BOUNDS_PRECISION);
            let config = json!({
                "delta": delta,
                "r": r,
                "eta": eta,
                "solve": solve,
                "precision": BOUNDS_PRECISION,
            });
            let result = match (eta, solve) {
                (Some(e), false) => {
                    let ev = parse_big_rational(&e)?;
                    let w = bounds::eta_window_check(&ctx, &d, r, &ev)?;
                    json!({
                        "eta": rational_string(&ev),
                        "eq32": w.separated,
                        "lhs33": verdict_str(w.lower),
                        "rhs33": verdict_str(w.upper),
                    })
                }
                (None, true) => match bounds::eta_window_solve(&ctx, &d, r)? {
                    Some(k) => {
                        let ev = BigRational::new(BigInt::one(), BigInt::one() << k);
                        let w = bounds::eta_window_check(&ctx, &d, r, &ev)?;
                        json!({
                            "solvedK": k,
                            "eta": rational_string(&ev),
                            "eq32": w.separated,
                            "lhs33": verdict_str(w.lower),
                            "rhs33": verdict_str(w.upper),
                        })
                    }
                    None => json!({ "solvedK": Value::Null }),
                },
                _ => {
                    return Err(CliError::BadInput(
                        "give exactly one of --eta or --solve".into(),
                    ))
                }
            };
            Envelope::new("bounds eta", config, result).emit(out)
        }
        BoundsCmd::Check41 {
            gamma,
            xi,
            delta,
            r,
        } => {
            let g = parse_big_rational(&gamma)?;
            let x = parse_big_rational(&xi)?;
            let d = parse_big_rational(&delta)?;
            let rv = parse_biguint(&r)?;
            let rep = bounds::check_constant_cascade(&g, &x, &d, &rv)?;
            Envelope::new(
                "bounds check41",
                json!({ "gamma": gamma, "xi": xi, "delta": delta, "r": r }),
                json!({
                    "a": rep.gamma_small,
                    "b": rep.xi_small,
                    "c": rep.delta_small,
                    "d": verdict_str(rep.r_large),
                }),
            )
            .emit(out)
        }
        BoundsCmd::Entropy { x } => {
            let v = parse_big_rational(&x)?;
            if v > BigRational::one() {
                return Err(CliError::BadInput("--x must lie in (0, 1]".into()));
            }
            let ctx = RealCtx::new(BOUNDS_PRECISION);
            let h = bounds::entropy(&ctx, v.numer().magnitude(), v.denom().magnitude())?;
            Envelope::new(
                "bounds entropy",
                json!({ "x": x, "precision": BOUNDS_PRECISION }),
                json!({
                    "x": rational_string(&v),
                    "lo": h.lo_f64(),
                    "hi": h.hi_f64(),
                }),
            )
            .emit(out)
        }
        BoundsCmd::Extension { r } => {
            let e = bounds::extension_counts(r)?;
            Envelope::new(
                "bounds extension",
                json!({ "r": r }),
                json!({
                    "q": big_string(&e.q),
                    "fanoCaseB": big_string(&e.fano_case_b),
                }),
            )
            .emit(out)
        }
        BoundsCmd::Bn { n } => {
            let b = bounds::bn_edge_bounds(n);
            Envelope::new(
                "bounds bn",
                json!({ "n": n }),
                json!({
                    "lower": rational_string(&b.lower),
                    "exact": b.exact.to_string(),
                    "upper": rational_string(&b.upper),
                }),
            )
            .emit(out)
        }
        BoundsCmd::Deletion { gamma, n } => {
            let g = parse_big_rational(&gamma)?;
            let v = bounds::deletion_lower_bound(&g, n)?;
            Envelope::new(
                "bounds deletion",
                json!({ "gamma": gamma, "n": n }),
                json!({ "value": rational_string(&v) }),
            )
            .emit(out)
        }
    }
}
