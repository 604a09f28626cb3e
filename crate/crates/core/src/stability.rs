//! Stability diagnostics around the balanced-bipartition extremal family:
//! minimum non-crossing bipartitions, the crossing-count size window,
//! abundant color classification on link graphs, three-colored triple
//! extraction, and edge-disjoint K4 packing.
//!
//! Every threshold comparison against irrational bounds (square roots,
//! 64th roots) is decided exactly by raising both sides to the matching
//! power over the integers.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::pow;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::{bn_edge_count, link_graph, Bipartition, Hypergraph3, LinkGraph};
use crate::matching::{matching_pairs, maximum_matching, SimpleGraph};
use crate::rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BipartitionMode {
    Exhaustive,
    LocalSearch { seed: u64 },
}

#[derive(Clone, Debug)]
pub struct BipartitionOutcome {
    pub partition: Bipartition,
    pub noncrossing: u64,
    /// seed of the local search; None for the exhaustive scan
    pub seed: Option<u64>,
}

fn edge_triples(h: &Hypergraph3) -> Vec<[u16; 3]> {
    h.triples().map(|(a, b, c)| [a, b, c]).collect()
}

#[inline]
fn is_noncrossing(e: &[u16; 3], in_a: impl Fn(u16) -> bool) -> bool {
    let k = e.iter().filter(|&&v| in_a(v)).count();
    k == 0 || k == 3
}

fn noncrossing_count_mask(edges: &[[u16; 3]], amask: u32) -> u64 {
    edges
        .iter()
        .filter(|e| is_noncrossing(e, |v| amask >> v & 1 == 1))
        .count() as u64
}

fn part_a_list(amask: u32, n: u16) -> Vec<u16> {
    (0..n).filter(|&v| amask >> v & 1 == 1).collect()
}

/// Best (count, amask) over Gray-code indices [start, end) of the masks
/// with vertex 0 fixed in class A. Ties keep the lexicographically
/// smallest class-A vertex list, so disjoint ranges merge deterministically.
pub fn exhaustive_scan_range(
    h: &Hypergraph3,
    start: u64,
    end: u64,
) -> Result<(u64, u32)> {
    let n = h.n();
    if n > 26 {
        return Err(Error::TooLarge(format!(
            "exhaustive bipartition scan limited to n<=26, got {n}"
        )));
    }
    if n == 0 {
        return Ok((0, 0));
    }
    let total = 1u64 << (n - 1);
    if start >= end || end > total {
        return Err(Error::Domain(format!(
            "scan range {start}..{end} outside 0..{total}"
        )));
    }
    let edges = edge_triples(h);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            incident[v as usize].push(i);
        }
    }
    let amask_of = |i: u64| -> u32 { ((((i ^ (i >> 1)) as u32) << 1) | 1) as u32 };
    let mut amask = amask_of(start);
    let mut count = noncrossing_count_mask(&edges, amask);
    let mut best = count;
    let mut best_mask = amask;
    for i in start + 1..end {
        let v = 1 + (i.trailing_zeros() as u16); // Gray step flips this vertex
        let vm = 1u32 << v;
        for &ei in &incident[v as usize] {
            let e = &edges[ei];
            if is_noncrossing(e, |w| amask >> w & 1 == 1) {
                count -= 1;
            }
            if is_noncrossing(e, |w| (amask ^ vm) >> w & 1 == 1) {
                count += 1;
            }
        }
        amask ^= vm;
        if count < best
            || (count == best && part_a_list(amask, n) < part_a_list(best_mask, n))
        {
            best = count;
            best_mask = amask;
        }
    }
    Ok((best, best_mask))
}

fn outcome_from_mask(h: &Hypergraph3, count: u64, amask: u32) -> Result<BipartitionOutcome> {
    let partition = Bipartition::new(h.n(), part_a_list(amask, h.n()))?;
    Ok(BipartitionOutcome {
        partition,
        noncrossing: count,
        seed: None,
    })
}

fn local_descent(edges: &[[u16; 3]], incident: &[Vec<usize>], in_a: &mut [bool]) -> u64 {
    let n = in_a.len();
    let mut count = edges
        .iter()
        .filter(|e| is_noncrossing(e, |v| in_a[v as usize]))
        .count() as i64;
    loop {
        let mut best_delta = 0i64;
        let mut best_v = None;
        for v in 0..n {
            let mut delta = 0i64;
            for &ei in &incident[v] {
                let e = &edges[ei];
                if is_noncrossing(e, |w| in_a[w as usize]) {
                    delta -= 1;
                }
                if is_noncrossing(e, |w| {
                    if w as usize == v {
                        !in_a[w as usize]
                    } else {
                        in_a[w as usize]
                    }
                }) {
                    delta += 1;
                }
            }
            if delta < best_delta {
                best_delta = delta;
                best_v = Some(v);
            }
        }
        match best_v {
            Some(v) => {
                in_a[v] = !in_a[v];
                count += best_delta;
            }
            None => return count as u64,
        }
    }
}

/// Minimizes the number of non-crossing edges over 2-part vertex
/// partitions. Exhaustive mode is a true minimizer for n <= 26; local
/// search does steepest 1-move descent from 32 seeded random starts.
pub fn min_noncrossing_bipartition(
    h: &Hypergraph3,
    mode: BipartitionMode,
) -> Result<BipartitionOutcome> {
    let n = h.n();
    match mode {
        BipartitionMode::Exhaustive => {
            if n == 0 {
                return Ok(BipartitionOutcome {
                    partition: Bipartition::new(0, Vec::new())?,
                    noncrossing: 0,
                    seed: None,
                });
            }
            let (count, amask) = exhaustive_scan_range(h, 0, 1u64 << (n - 1))?;
            outcome_from_mask(h, count, amask)
        }
        BipartitionMode::LocalSearch { seed } => {
            let edges = edge_triples(h);
            let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n as usize];
            for (i, e) in edges.iter().enumerate() {
                for &v in e {
                    incident[v as usize].push(i);
                }
            }
            let mut best: Option<(u64, Vec<bool>)> = None;
            for restart in 0..32u64 {
                let mut rng = rng::stream_rng(seed, restart);
                let mut in_a: Vec<bool> = (0..n)
                    .map(|_| rng::uniform_u32(&mut rng, 2) == 1)
                    .collect();
                let val = local_descent(&edges, &incident, &mut in_a);
                if best.as_ref().map_or(true, |(b, _)| val < *b) {
                    best = Some((val, in_a));
                }
            }
            let (val, mut in_a) = best.unwrap_or((0, Vec::new()));
            if !in_a.is_empty() && !in_a[0] {
                for b in in_a.iter_mut() {
                    *b = !*b;
                }
            }
            let part_a: Vec<u16> = (0..n).filter(|&v| in_a[v as usize]).collect();
            Ok(BipartitionOutcome {
                partition: Bipartition::new(n, part_a)?,
                noncrossing: val,
                seed: Some(seed),
            })
        }
    }
}

/// Crossing-count size window report. All flags are exact; slack is a
/// floating-point diagnostic (negative when some size violates a bound).
#[derive(Clone, Debug, PartialEq)]
pub struct SizesLemmaReport {
    pub applicable: bool,
    pub hypothesis_holds: Option<bool>,
    pub conclusion_holds: Option<bool>,
    pub crossing: u64,
    pub noncrossing: u64,
    pub bn_edges: u64,
    pub slack: f64,
}

/// Hypothesis: crossing count >= |E(B_n)| − δn³. Conclusion: both class
/// sizes lie in [n/2 − 2√δ·n, n/2 + 2√δ·n]. Applicability needs
/// n >= max{8, 1/√δ}. δ = delta_num/delta_den.
pub fn check_sizes_lemma(
    h: &Hypergraph3,
    p: &Bipartition,
    delta_num: u64,
    delta_den: u64,
) -> Result<SizesLemmaReport> {
    if delta_num == 0 || delta_den == 0 {
        return Err(Error::Domain("delta must be positive".into()));
    }
    if p.n() != h.n() {
        return Err(Error::BadPartition(format!(
            "partition covers {} vertices, host has {}",
            p.n(),
            h.n()
        )));
    }
    let n = h.n() as u128;
    let (crossing_set, noncrossing_set) = crate::hypergraph::split_crossing(h, p)?;
    let crossing = crossing_set.len() as u64;
    let noncrossing = noncrossing_set.len() as u64;
    let bn_edges = bn_edge_count(h.n());
    // n >= 1/sqrt(δ)  <=>  n²·δ >= 1  <=>  n²·num >= den
    let applicable =
        h.n() >= 8 && n * n * delta_num as u128 >= delta_den as u128;
    if !applicable {
        return Ok(SizesLemmaReport {
            applicable,
            hypothesis_holds: None,
            conclusion_holds: None,
            crossing,
            noncrossing,
            bn_edges,
            slack: f64::NAN,
        });
    }
    // crossing >= bn − δn³  <=>  (bn − crossing)·den <= num·n³
    let hypothesis = if bn_edges <= crossing {
        true
    } else {
        (bn_edges - crossing) as u128 * delta_den as u128
            <= delta_num as u128 * n * n * n
    };
    // |n − 2·|Z|| <= 4√δ·n for both classes <=> (n − 2|Z|)²·den <= 16·num·n²
    let within = |size: u128| -> bool {
        let d = if 2 * size >= n { 2 * size - n } else { n - 2 * size };
        d * d * delta_den as u128 <= 16 * delta_num as u128 * n * n
    };
    let conclusion = within(p.part_a().len() as u128) && within(p.part_b().len() as u128);
    let delta = delta_num as f64 / delta_den as f64;
    let nf = h.n() as f64;
    let lo = nf / 2.0 - 2.0 * libm::sqrt(delta) * nf;
    let hi = nf / 2.0 + 2.0 * libm::sqrt(delta) * nf;
    let slack = [p.part_a().len(), p.part_b().len()]
        .iter()
        .flat_map(|&s| [s as f64 - lo, hi - s as f64])
        .fold(f64::INFINITY, f64::min);
    Ok(SizesLemmaReport {
        applicable,
        hypothesis_holds: Some(hypothesis),
        conclusion_holds: Some(conclusion),
        crossing,
        noncrossing,
        bn_edges,
        slack,
    })
}

const THIRTYSIX_POW8: u64 = 2_821_109_907_456; // 36^8

#[derive(Clone, Debug)]
pub struct KeeReport {
    pub applicable: bool,
    pub fano_free: bool,
    pub edge_count: u64,
    pub turan_value: u64,
    pub outcome: Option<BipartitionOutcome>,
    pub bound_holds: Option<bool>,
}

/// Near-extremal Fano-free hosts admit a bipartition with few non-crossing
/// edges: checks noncrossing < 2·δ^{1/64}·n³ exactly (both sides raised to
/// the 64th power). Requires 0 < δ <= 1/36⁸ and the Turán value for n.
pub fn check_kee_stability(
    h: &Hypergraph3,
    delta_num: u64,
    delta_den: u64,
    turan_value: u64,
    mode: BipartitionMode,
) -> Result<KeeReport> {
    if delta_num == 0 || delta_den == 0 {
        return Err(Error::Domain("delta must be positive".into()));
    }
    if (delta_num as u128) * (THIRTYSIX_POW8 as u128) > delta_den as u128 {
        return Err(Error::Domain(format!(
            "delta {delta_num}/{delta_den} exceeds 1/36^8"
        )));
    }
    let fano_free = crate::fano::is_fano_free(h);
    let n = h.n() as u128;
    let edge_count = h.edge_count() as u64;
    // |E| >= ex − δn³  <=>  (ex − |E|)·den <= num·n³
    let enough_edges = if edge_count >= turan_value {
        true
    } else {
        (turan_value - edge_count) as u128 * delta_den as u128
            <= delta_num as u128 * n * n * n
    };
    let applicable = fano_free && enough_edges;
    if !applicable {
        return Ok(KeeReport {
            applicable,
            fano_free,
            edge_count,
            turan_value,
            outcome: None,
            bound_holds: None,
        });
    }
    let outcome = min_noncrossing_bipartition(h, mode)?;
    // val < 2·δ^{1/64}·n³  <=>  val^64·den < 2^64·num·n^192
    let lhs = pow(BigUint::from(outcome.noncrossing), 64) * BigUint::from(delta_den);
    let rhs = (BigUint::from(1u8) << 64)
        * BigUint::from(delta_num)
        * pow(BigUint::from(h.n()), 192);
    let bound_holds = lhs < rhs;
    Ok(KeeReport {
        applicable,
        fano_free,
        edge_count,
        turan_value,
        outcome: Some(outcome),
        bound_holds: Some(bound_holds),
    })
}

/// Link edges {u,w} with u,w ∈ z and host color alpha, as a graph on the
/// host's vertex ids.
pub fn monochromatic_link_subgraph(
    link: &LinkGraph,
    h: &Hypergraph3,
    c: &Coloring,
    alpha: u32,
    z: &[u16],
) -> Result<SimpleGraph> {
    let n = h.n();
    let mut in_z = vec![false; n as usize];
    for &v in z {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                v: v as usize,
                n: n as usize,
            });
        }
        in_z[v as usize] = true;
    }
    let mut g = SimpleGraph::new(n);
    for (u, w) in link.graph.edges() {
        if in_z[u as usize] && in_z[w as usize] {
            let color = c.color_of_edge(h, link.apex, u, w)?;
            if color == alpha {
                g.insert_edge(u, w)?;
            }
        }
    }
    Ok(g)
}

/// Exact maximum matching among link edges inside z with color alpha.
pub fn max_monochromatic_matching(
    link: &LinkGraph,
    h: &Hypergraph3,
    c: &Coloring,
    alpha: u32,
    z: &[u16],
) -> Result<(usize, Vec<(u16, u16)>)> {
    let g = monochromatic_link_subgraph(link, h, c, alpha, z)?;
    let m = maximum_matching(&g);
    let pairs = matching_pairs(&m);
    Ok((pairs.len(), pairs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbundantReport {
    /// matching size needed for abundance: ⌈ξ·n⌉
    pub threshold: u64,
    pub abundant_x: Vec<u32>,
    pub abundant_y: Vec<u32>,
    /// within-class link edges whose color is rare (not abundant in either
    /// class), per class, sorted
    pub j_x: Vec<(u16, u16)>,
    pub j_y: Vec<(u16, u16)>,
}

fn within_class_link_edges(
    link: &LinkGraph,
    h: &Hypergraph3,
    c: &Coloring,
    class: &[u16],
) -> Result<Vec<(u16, u16, u32)>> {
    let mut in_z = vec![false; h.n() as usize];
    for &v in class {
        in_z[v as usize] = true;
    }
    let mut out = Vec::new();
    for (u, w) in link.graph.edges() {
        if in_z[u as usize] && in_z[w as usize] {
            out.push((u, w, c.color_of_edge(h, link.apex, u, w)?));
        }
    }
    Ok(out)
}

/// A color is abundant for class Z when its monochromatic within-Z link
/// edges carry a matching of size at least ⌈ξ·n⌉. ξ = xi_num/xi_den.
pub fn classify_abundant_colors(
    h: &Hypergraph3,
    c: &Coloring,
    v: u16,
    p: &Bipartition,
    xi_num: u64,
    xi_den: u64,
) -> Result<AbundantReport> {
    if xi_num == 0 || xi_den == 0 {
        return Err(Error::Domain("xi must be positive".into()));
    }
    if p.n() != h.n() {
        return Err(Error::BadPartition(format!(
            "partition covers {} vertices, host has {}",
            p.n(),
            h.n()
        )));
    }
    let link = link_graph(h, v)?;
    let threshold_u128 =
        (xi_num as u128 * h.n() as u128 + xi_den as u128 - 1) / xi_den as u128;
    let threshold = u64::try_from(threshold_u128)
        .map_err(|_| Error::TooLarge("xi threshold overflows".into()))?;
    let mut abundant = [Vec::new(), Vec::new()];
    let mut within = [Vec::new(), Vec::new()];
    for (zi, class) in [p.part_a(), p.part_b()].into_iter().enumerate() {
        let edges = within_class_link_edges(&link, h, c, class)?;
        let mut colors: Vec<u32> = edges.iter().map(|&(_, _, col)| col).collect();
        colors.sort_unstable();
        colors.dedup();
        for alpha in colors {
            let (size, _) = max_monochromatic_matching(&link, h, c, alpha, class)?;
            if size as u64 >= threshold {
                abundant[zi].push(alpha);
            }
        }
        within[zi] = edges;
    }
    let mut union: Vec<u32> = abundant[0]
        .iter()
        .chain(abundant[1].iter())
        .copied()
        .collect();
    union.sort_unstable();
    union.dedup();
    let j_of = |edges: &Vec<(u16, u16, u32)>| -> Vec<(u16, u16)> {
        edges
            .iter()
            .filter(|&&(_, _, col)| union.binary_search(&col).is_err())
            .map(|&(u, w, _)| (u, w))
            .collect()
    };
    Ok(AbundantReport {
        threshold,
        j_x: j_of(&within[0]),
        j_y: j_of(&within[1]),
        abundant_x: abundant[0].clone(),
        abundant_y: abundant[1].clone(),
    })
}

/// One extracted triple: edges ordered (within X, within Y, third), with
/// their colors aligned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTriple {
    pub edges: [(u16, u16); 3],
    pub colors: [u32; 3],
}

#[derive(Clone, Debug)]
pub struct TriplesReport {
    pub abundant: AbundantReport,
    /// |A_X ∪ A_Y|
    pub union_size: usize,
    /// exact C₁ membership: union_size ∉ {1,2} or some |J_Z| >= 4√ξ·n²
    pub in_c1: bool,
    pub count: u64,
    /// extracted triples, capped at SAMPLE_CAP entries
    pub sample: Vec<ColoredTriple>,
    /// count >= ξ³n³/9, reported only when in_c1
    pub bound_met: Option<bool>,
}

const SAMPLE_CAP: usize = 20_000;

struct TripleCollector {
    count: u64,
    sample: Vec<ColoredTriple>,
}

impl TripleCollector {
    fn push(&mut self, x_edge: (u16, u16, u32), y_edge: (u16, u16, u32), third: (u16, u16, u32)) {
        self.count += 1;
        if self.sample.len() < SAMPLE_CAP {
            self.sample.push(ColoredTriple {
                edges: [
                    (x_edge.0, x_edge.1),
                    (y_edge.0, y_edge.1),
                    (third.0, third.1),
                ],
                colors: [x_edge.2, y_edge.2, third.2],
            });
        }
    }
}

fn matching_with_colors(
    link: &LinkGraph,
    h: &Hypergraph3,
    c: &Coloring,
    g: &SimpleGraph,
) -> Result<Vec<(u16, u16, u32)>> {
    let m = maximum_matching(g);
    matching_pairs(&m)
        .into_iter()
        .map(|(u, w)| Ok((u, w, c.color_of_edge(h, link.apex, u, w)?)))
        .collect()
}

fn class_subgraph_filtered(
    link: &LinkGraph,
    h: &Hypergraph3,
    c: &Coloring,
    class: &[u16],
    keep: impl Fn(u32) -> bool,
    exclude_vertices: &[u16],
) -> Result<SimpleGraph> {
    let n = h.n();
    let mut in_z = vec![false; n as usize];
    for &v in class {
        in_z[v as usize] = true;
    }
    for &v in exclude_vertices {
        in_z[v as usize] = false;
    }
    let mut g = SimpleGraph::new(n);
    for (u, w) in link.graph.edges() {
        if in_z[u as usize] && in_z[w as usize] && keep(c.color_of_edge(h, link.apex, u, w)?) {
            g.insert_edge(u, w)?;
        }
    }
    Ok(g)
}

/// Best-effort extraction of pairwise vertex-disjoint 3-colored triples of
/// within-class link edges, following the three abundance cases. The C₁
/// membership predicate and the ξ³n³/9 comparison are exact.
pub fn three_colored_triples(
    h: &Hypergraph3,
    c: &Coloring,
    v: u16,
    p: &Bipartition,
    xi_num: u64,
    xi_den: u64,
) -> Result<TriplesReport> {
    let abundant = classify_abundant_colors(h, c, v, p, xi_num, xi_den)?;
    let link = link_graph(h, v)?;
    let n = h.n();
    let mut union: Vec<u32> = abundant
        .abundant_x
        .iter()
        .chain(abundant.abundant_y.iter())
        .copied()
        .collect();
    union.sort_unstable();
    union.dedup();
    let union_size = union.len();
    // |J_Z| >= 4√ξ·n²  <=>  |J_Z|²·den >= 16·num·n⁴
    let j_big = |j: usize| -> bool {
        BigUint::from(j) * BigUint::from(j) * BigUint::from(xi_den)
            >= BigUint::from(16u8) * BigUint::from(xi_num) * pow(BigUint::from(n), 4)
    };
    let in_c1 = !(union_size == 1 || union_size == 2)
        || j_big(abundant.j_x.len())
        || j_big(abundant.j_y.len());

    let classes = [p.part_a(), p.part_b()];
    let rare = |col: u32| union.binary_search(&col).is_err();
    let mut collector = TripleCollector {
        count: 0,
        sample: Vec::new(),
    };

    if union_size >= 3 {
        // two colors from the class with more abundant colors, a third
        // from the other class if possible, else any non-matching colors
        let (pi, qi) = if abundant.abundant_x.len() >= abundant.abundant_y.len() {
            (0usize, 1usize)
        } else {
            (1, 0)
        };
        let a_p = if pi == 0 {
            &abundant.abundant_x
        } else {
            &abundant.abundant_y
        };
        let a_q = if qi == 0 {
            &abundant.abundant_x
        } else {
            &abundant.abundant_y
        };
        let alpha1 = a_p[0];
        let alpha2 = a_p[1];
        let g1 = class_subgraph_filtered(&link, h, c, classes[pi], |col| col == alpha1, &[])?;
        let m1 = matching_with_colors(&link, h, c, &g1)?;
        let used1: Vec<u16> = m1.iter().flat_map(|&(u, w, _)| [u, w]).collect();
        let g2 =
            class_subgraph_filtered(&link, h, c, classes[pi], |col| col == alpha2, &used1)?;
        let m2 = matching_with_colors(&link, h, c, &g2)?;
        let alpha3 = a_q.iter().find(|a| **a != alpha1 && **a != alpha2).copied();
        let g3 = match alpha3 {
            Some(a3) => {
                class_subgraph_filtered(&link, h, c, classes[qi], |col| col == a3, &[])?
            }
            None => class_subgraph_filtered(
                &link,
                h,
                c,
                classes[qi],
                |col| col != alpha1 && col != alpha2,
                &[],
            )?,
        };
        let m3 = matching_with_colors(&link, h, c, &g3)?;
        for &f1 in &m1 {
            for &f2 in &m2 {
                for &f3 in &m3 {
                    if f3.2 != f1.2 && f3.2 != f2.2 {
                        // orient (X-edge, Y-edge, third)
                        if pi == 0 {
                            collector.push(f1, f3, f2);
                        } else {
                            collector.push(f3, f1, f2);
                        }
                    }
                }
            }
        }
    } else if union_size == 0 {
        // maximum matchings in each class, all colors; count 3-colored
        // sets with one edge from each class plus a third from either
        let gx = class_subgraph_filtered(&link, h, c, classes[0], |_| true, &[])?;
        let gy = class_subgraph_filtered(&link, h, c, classes[1], |_| true, &[])?;
        let mx = matching_with_colors(&link, h, c, &gx)?;
        let my = matching_with_colors(&link, h, c, &gy)?;
        for (i, &f1) in mx.iter().enumerate() {
            for &f2 in &my {
                if f1.2 == f2.2 {
                    continue;
                }
                for &f3 in &mx[i + 1..] {
                    if f3.2 != f1.2 && f3.2 != f2.2 {
                        collector.push(f1, f2, f3);
                    }
                }
            }
        }
        for &f1 in &mx {
            for (j, &f2) in my.iter().enumerate() {
                if f1.2 == f2.2 {
                    continue;
                }
                for &f3 in &my[j + 1..] {
                    if f3.2 != f1.2 && f3.2 != f2.2 {
                        collector.push(f1, f2, f3);
                    }
                }
            }
        }
    } else {
        // one or two abundant colors: pairs of distinct rare colors inside
        // one class, one abundant edge in the other
        let (zi, j_z) = if abundant.j_x.len() >= abundant.j_y.len() {
            (0usize, &abundant.j_x)
        } else {
            (1, &abundant.j_y)
        };
        let wi = 1 - zi;
        let a_w = if wi == 0 {
            &abundant.abundant_x
        } else {
            &abundant.abundant_y
        };
        let a_z = if zi == 0 {
            &abundant.abundant_x
        } else {
            &abundant.abundant_y
        };
        if !a_w.is_empty() {
            let alpha = a_w[0];
            let mut gj = SimpleGraph::new(n);
            for &(u, w) in j_z {
                gj.insert_edge(u, w)?;
            }
            let m_rare = matching_with_colors(&link, h, c, &gj)?;
            let g_mono =
                class_subgraph_filtered(&link, h, c, classes[wi], |col| col == alpha, &[])?;
            let m_mono = matching_with_colors(&link, h, c, &g_mono)?;
            for &f1 in &m_mono {
                for (i, &f2) in m_rare.iter().enumerate() {
                    for &f3 in &m_rare[i + 1..] {
                        if f2.2 != f3.2 {
                            if wi == 0 {
                                collector.push(f1, f2, f3);
                            } else {
                                collector.push(f2, f1, f3);
                            }
                        }
                    }
                }
            }
        } else {
            // abundant colors all live in Z: mono matching there, rare
            // distinct-color pairs in W
            let alpha = a_z[0];
            let g_mono =
                class_subgraph_filtered(&link, h, c, classes[zi], |col| col == alpha, &[])?;
            let m_mono = matching_with_colors(&link, h, c, &g_mono)?;
            let g_rare = class_subgraph_filtered(&link, h, c, classes[wi], &rare, &[])?;
            let m_rare = matching_with_colors(&link, h, c, &g_rare)?;
            for &f1 in &m_mono {
                for (i, &f2) in m_rare.iter().enumerate() {
                    for &f3 in &m_rare[i + 1..] {
                        if f2.2 != f3.2 {
                            if zi == 0 {
                                collector.push(f1, f2, f3);
                            } else {
                                collector.push(f2, f1, f3);
                            }
                        }
                    }
                }
            }
        }
    }

    // count >= ξ³n³/9  <=>  9·count·den³ >= num³·n³
    let bound_met = if in_c1 {
        Some(
            BigUint::from(9u8) * BigUint::from(collector.count) * pow(BigUint::from(xi_den), 3)
                >= pow(BigUint::from(xi_num), 3) * pow(BigUint::from(n), 3),
        )
    } else {
        None
    };
    Ok(TriplesReport {
        abundant,
        union_size,
        in_c1,
        count: collector.count,
        sample: collector.sample,
        bound_met,
    })
}

/// Oracle: the number of all valid triple sets (pairwise vertex-disjoint
/// within-class link edges, three distinct colors, both classes
/// represented). Any extractor's count is a lower bound. Limited to n<=14.
pub fn max_three_colored_triples_exhaustive(
    h: &Hypergraph3,
    c: &Coloring,
    v: u16,
    p: &Bipartition,
) -> Result<u64> {
    if h.n() > 14 {
        return Err(Error::TooLarge(format!(
            "exhaustive triple count limited to n<=14, got {}",
            h.n()
        )));
    }
    let link = link_graph(h, v)?;
    let mut tagged = Vec::new();
    for (zi, class) in [p.part_a(), p.part_b()].into_iter().enumerate() {
        for (u, w, col) in within_class_link_edges(&link, h, c, class)? {
            tagged.push((u, w, col, zi));
        }
    }
    let disjoint = |a: &(u16, u16, u32, usize), b: &(u16, u16, u32, usize)| {
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    };
    let mut count = 0u64;
    for i in 0..tagged.len() {
        for j in i + 1..tagged.len() {
            if !disjoint(&tagged[i], &tagged[j]) || tagged[i].2 == tagged[j].2 {
                continue;
            }
            for k in j + 1..tagged.len() {
                if !disjoint(&tagged[i], &tagged[k]) || !disjoint(&tagged[j], &tagged[k]) {
                    continue;
                }
                if tagged[k].2 == tagged[i].2 || tagged[k].2 == tagged[j].2 {
                    continue;
                }
                let classes = [tagged[i].3, tagged[j].3, tagged[k].3];
                if classes.contains(&0) && classes.contains(&1) {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// While the graph keeps more than |V|²/3 edges, removes the
/// lexicographically first K4's six edges and records its vertices. A
/// missing K4 above the threshold contradicts the Turán bound and raises
/// an internal error.
pub fn edge_disjoint_k4_packing(g: &SimpleGraph) -> Result<Vec<[u16; 4]>> {
    let n = g.n();
    let words = (n as usize + 63) / 64;
    let mut adj = vec![vec![0u64; words]; n as usize];
    let mut edge_count = g.edge_count() as u64;
    for (u, w) in g.edges() {
        adj[u as usize][w as usize / 64] |= 1 << (w % 64);
        adj[w as usize][u as usize / 64] |= 1 << (u % 64);
    }
    let find_k4 = |adj: &Vec<Vec<u64>>| -> Option<[u16; 4]> {
        for a in 0..n {
            for b in a + 1..n {
                if adj[a as usize][b as usize / 64] >> (b % 64) & 1 == 0 {
                    continue;
                }
                for c in b + 1..n {
                    if adj[a as usize][c as usize / 64] >> (c % 64) & 1 == 0
                        || adj[b as usize][c as usize / 64] >> (c % 64) & 1 == 0
                    {
                        continue;
                    }
                    for d in c + 1..n {
                        if adj[a as usize][d as usize / 64] >> (d % 64) & 1 == 1
                            && adj[b as usize][d as usize / 64] >> (d % 64) & 1 == 1
                            && adj[c as usize][d as usize / 64] >> (d % 64) & 1 == 1
                        {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    };
    let mut packing = Vec::new();
    while 3 * edge_count > (n as u64) * (n as u64) {
        let quad = find_k4(&adj).ok_or_else(|| {
            Error::Internal(format!(
                "no K4 found although {edge_count} edges exceed {n}²/3; contradicts the Turán bound"
            ))
        })?;
        for i in 0..4 {
            for j in i + 1..4 {
                let (u, w) = (quad[i], quad[j]);
                adj[u as usize][w as usize / 64] &= !(1 << (w % 64));
                adj[w as usize][u as usize / 64] &= !(1 << (u % 64));
            }
        }
        edge_count -= 6;
        packing.push(quad);
    }
    Ok(packing)
}
