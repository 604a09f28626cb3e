//! Weak regularity for 3-graphs: exact cross densities, (ε,d)-regularity
//! verification by exhaustive subset scan (small classes) or randomized
//! refutation (large ones), equitable partitions, the multicolored cluster
//! hypergraph, and the colored-subhypergraph relation.
//!
//! All verdicts that claim exactness use integer or rational arithmetic
//! only; ε and η enter as fractions.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::fano;
use crate::hypergraph::Hypergraph3;
use crate::rng;
use crate::triples;

/// Vertex partition with class sizes differing by at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    n: u16,
    classes: Vec<Vec<u16>>,
}

impl EquitablePartition {
    pub fn new(n: u16, mut classes: Vec<Vec<u16>>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::BadPartition("need at least one class".into()));
        }
        let mut seen = vec![false; n as usize];
        for class in classes.iter_mut() {
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        v: v as usize,
                        n: n as usize,
                    });
                }
                if seen[v as usize] {
                    return Err(Error::BadPartition(format!("vertex {v} appears twice")));
                }
                seen[v as usize] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::BadPartition(format!("vertex {v} not covered")));
        }
        let max = classes.iter().map(Vec::len).max().unwrap_or(0);
        let min = classes.iter().map(Vec::len).min().unwrap_or(0);
        if max - min > 1 {
            return Err(Error::BadPartition(format!(
                "class sizes {min} and {max} differ by more than one"
            )));
        }
        Ok(EquitablePartition { n, classes })
    }

    /// Splits 0..n into m contiguous classes, the first n mod m one larger.
    pub fn split(n: u16, m: u16) -> Result<Self> {
        if m == 0 {
            return Err(Error::BadPartition("need at least one class".into()));
        }
        let base = n / m;
        let extra = n % m;
        let mut classes = Vec::with_capacity(m as usize);
        let mut next = 0u16;
        for i in 0..m {
            let size = base + u16::from(i < extra);
            classes.push((next..next + size).collect());
            next += size;
        }
        EquitablePartition::new(n, classes)
    }

    #[inline]
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn class_count(&self) -> u16 {
        self.classes.len() as u16
    }

    pub fn classes(&self) -> &[Vec<u16>] {
        &self.classes
    }

    /// vertex -> class index
    pub fn class_of(&self) -> Vec<u16> {
        let mut map = vec![0u16; self.n as usize];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                map[v as usize] = i as u16;
            }
        }
        map
    }
}

/// Cluster hypergraph on class indices 0..m with a nonempty color list per
/// edge; edges sorted, ascending triples, lists sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterHypergraph {
    m: u16,
    edges: Vec<[u16; 3]>,
    lists: Vec<Vec<u32>>,
}

impl ClusterHypergraph {
    pub fn new(m: u16, edges: Vec<[u16; 3]>, lists: Vec<Vec<u32>>) -> Result<Self> {
        if edges.len() != lists.len() {
            return Err(Error::Domain(format!(
                "{} edges but {} color lists",
                edges.len(),
                lists.len()
            )));
        }
        let mut paired: Vec<([u16; 3], Vec<u32>)> = Vec::with_capacity(edges.len());
        let mut seen = BTreeSet::new();
        for ([a, b, c], mut list) in edges.into_iter().zip(lists) {
            if !(a < b && b < c) {
                return Err(Error::DegenerateTriple {
                    a: a as usize,
                    b: b as usize,
                    c: c as usize,
                });
            }
            if c >= m {
                return Err(Error::VertexOutOfRange {
                    v: c as usize,
                    n: m as usize,
                });
            }
            if !seen.insert([a, b, c]) {
                return Err(Error::DuplicateEdge {
                    a: a as usize,
                    b: b as usize,
                    c: c as usize,
                });
            }
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::Domain(format!(
                    "edge {{{a},{b},{c}}} has an empty color list"
                )));
            }
            paired.push(([a, b, c], list));
        }
        paired.sort();
        let (edges, lists) = paired.into_iter().unzip();
        Ok(ClusterHypergraph { m, edges, lists })
    }

    #[inline]
    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[u16; 3]] {
        &self.edges
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    /// e_j: number of edges whose list has exactly j colors.
    pub fn list_size_histogram(&self) -> BTreeMap<usize, u64> {
        let mut hist = BTreeMap::new();
        for list in &self.lists {
            *hist.entry(list.len()).or_insert(0) += 1;
        }
        hist
    }
}

fn check_disjoint_classes(h: &Hypergraph3, classes: &[&[u16]]) -> Result<()> {
    let mut seen = vec![false; h.n() as usize];
    for class in classes {
        if class.is_empty() {
            return Err(Error::BadPartition("empty class".into()));
        }
        for &v in *class {
            if v >= h.n() {
                return Err(Error::VertexOutOfRange {
                    v: v as usize,
                    n: h.n() as usize,
                });
            }
            if seen[v as usize] {
                return Err(Error::BadPartition(format!(
                    "vertex {v} appears in two classes"
                )));
            }
            seen[v as usize] = true;
        }
    }
    Ok(())
}

fn count_crossing(h: &Hypergraph3, w1: &[u16], w2: &[u16], w3: &[u16]) -> u64 {
    let mut mark = vec![0u8; h.n() as usize];
    for &v in w1 {
        mark[v as usize] = 1;
    }
    for &v in w2 {
        mark[v as usize] = 2;
    }
    for &v in w3 {
        mark[v as usize] = 3;
    }
    let mut count = 0u64;
    for (a, b, c) in h.triples() {
        let mut hit = [false; 4];
        hit[mark[a as usize] as usize] = true;
        hit[mark[b as usize] as usize] = true;
        hit[mark[c as usize] as usize] = true;
        if hit[1] && hit[2] && hit[3] {
            count += 1;
        }
    }
    count
}

/// Exact cross density |E(W1,W2,W3)| / (|W1||W2||W3|): the numerator counts
/// edges with one vertex in each class.
pub fn density(h: &Hypergraph3, w1: &[u16], w2: &[u16], w3: &[u16]) -> Result<BigRational> {
    check_disjoint_classes(h, &[w1, w2, w3])?;
    let count = count_crossing(h, w1, w2, w3);
    let denom = w1.len() as u64 * w2.len() as u64 * w3.len() as u64;
    Ok(BigRational::new(
        BigInt::from(count),
        BigInt::from(denom),
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub enum RegularityVerdict {
    /// Certified by exhaustive scan: every qualifying sub-triple's density
    /// is within ε of d.
    Regular { d: BigRational },
    /// A qualifying sub-triple whose density differs from the midpoint of
    /// the qualifying range by more than ε.
    Irregular {
        witness: [Vec<u16>; 3],
        witness_density: BigRational,
        midpoint: BigRational,
    },
    /// Randomized search found no violation; not a certificate.
    NotRefuted { samples: u64, seed: u64 },
}

fn check_eps(eps_num: u64, eps_den: u64) -> Result<()> {
    if eps_num == 0 || eps_den == 0 {
        return Err(Error::Domain("epsilon must be positive".into()));
    }
    Ok(())
}

/// Masks of each class, ranked by the lexicographic order of their
/// ascending vertex lists; ties impossible (distinct masks, distinct lists).
fn lex_rank_table(class: &[u16], k: usize) -> Vec<u32> {
    let mut masks: Vec<(Vec<u16>, u32)> = (1u32..1 << k)
        .map(|mask| {
            let list: Vec<u16> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| class[i])
                .collect();
            (list, mask)
        })
        .collect();
    masks.sort();
    let mut rank = vec![0u32; 1 << k];
    for (pos, (_, mask)) in masks.iter().enumerate() {
        rank[*mask as usize] = pos as u32;
    }
    rank
}

fn subset_list(class: &[u16], mask: u32) -> Vec<u16> {
    (0..class.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| class[i])
        .collect()
}

struct BoxScan {
    k: [usize; 3],
    /// bit b*8+c of adj[a]: edge {v1[a], v2[b], v3[c]} present
    adj: Vec<u64>,
    vprod: u128,
}

impl BoxScan {
    fn build(h: &Hypergraph3, v1: &[u16], v2: &[u16], v3: &[u16]) -> Result<Self> {
        check_disjoint_classes(h, &[v1, v2, v3])?;
        for class in [v1, v2, v3] {
            if class.len() > 8 {
                return Err(Error::TooLarge(format!(
                    "exhaustive regularity scan limited to classes of size 8, got {}",
                    class.len()
                )));
            }
        }
        let mut adj = vec![0u64; v1.len()];
        for (a, slot) in v1.iter().zip(adj.iter_mut()) {
            for (bi, &b) in v2.iter().enumerate() {
                for (ci, &c) in v3.iter().enumerate() {
                    if h.contains_rank(triples::rank_unsorted(*a, b, c)) {
                        *slot |= 1 << (bi * 8 + ci);
                    }
                }
            }
        }
        Ok(BoxScan {
            k: [v1.len(), v2.len(), v3.len()],
            adj,
            vprod: (v1.len() * v2.len() * v3.len()) as u128,
        })
    }

    /// Visits every sub-box with ∏|Wᵢ|·eps_den >= eps_num·∏|Vᵢ| as
    /// (w1, w2, w3, edge count, ∏|Wᵢ|).
    fn for_each_qualifying(
        &self,
        eps_num: u64,
        eps_den: u64,
        mut f: impl FnMut(u32, u32, u32, u32, u32),
    ) {
        let [k1, k2, k3] = self.k;
        let mut row_sel = vec![0u64; 1 << k2];
        for w2 in 1u32..1 << k2 {
            let mut sel = 0u64;
            for b in 0..k2 {
                if w2 >> b & 1 == 1 {
                    sel |= 0xFFu64 << (b * 8);
                }
            }
            row_sel[w2 as usize] = sel;
        }
        let mut sums = vec![0u32; 1 << k1];
        let mut qualifies = [false; 9];
        for w2 in 1u32..1 << k2 {
            let s2 = w2.count_ones();
            for w3 in 1u32..1 << k3 {
                let s3 = w3.count_ones();
                let s23 = s2 * s3;
                let mut any = false;
                for (s1, q) in qualifies.iter_mut().enumerate().take(k1 + 1).skip(1) {
                    *q = (s1 as u128 * s23 as u128) * eps_den as u128
                        >= eps_num as u128 * self.vprod;
                    any |= *q;
                }
                if !any {
                    continue;
                }
                let sel = row_sel[w2 as usize] & (w3 as u64 * 0x0101_0101_0101_0101);
                let mut cnt = [0u32; 8];
                for (a, &bits) in self.adj.iter().enumerate() {
                    cnt[a] = (bits & sel).count_ones();
                }
                for w1 in 1u32..1 << k1 {
                    let low = w1.trailing_zeros();
                    sums[w1 as usize] = sums[(w1 & (w1 - 1)) as usize] + cnt[low as usize];
                    let s1 = w1.count_ones();
                    if qualifies[s1 as usize] {
                        f(w1, w2, w3, sums[w1 as usize], s1 * s23);
                    }
                }
            }
        }
    }
}

/// Certified regularity check: regular iff the qualifying densities span at
/// most 2ε, with d the midpoint of their range; otherwise the witness is
/// the first qualifying sub-triple (by lexicographic vertex lists) whose
/// density differs from the midpoint by more than ε.
pub fn is_eps_regular_exhaustive(
    h: &Hypergraph3,
    v1: &[u16],
    v2: &[u16],
    v3: &[u16],
    eps_num: u64,
    eps_den: u64,
) -> Result<RegularityVerdict> {
    check_eps(eps_num, eps_den)?;
    let scan = BoxScan::build(h, v1, v2, v3)?;
    // (edge count, box size) fractions; compare by cross multiplication
    let mut max: Option<(u32, u32)> = None;
    let mut min: Option<(u32, u32)> = None;
    scan.for_each_qualifying(eps_num, eps_den, |_, _, _, e, p| {
        if max.map_or(true, |(me, mp)| e as u64 * mp as u64 > me as u64 * p as u64) {
            max = Some((e, p));
        }
        if min.map_or(true, |(ne, np)| (e as u64) * (np as u64) < (ne as u64) * (p as u64)) {
            min = Some((e, p));
        }
    });
    let ((me, mp), (ne, np)) = match (max, min) {
        (Some(a), Some(b)) => (a, b),
        // no qualifying sub-triple: vacuously (ε,0)-regular
        _ => {
            return Ok(RegularityVerdict::Regular {
                d: BigRational::from_integer(BigInt::from(0)),
            })
        }
    };
    let spread = me as u128 * np as u128 - ne as u128 * mp as u128;
    let mid_num = me as u128 * np as u128 + ne as u128 * mp as u128;
    let mid_den = 2 * mp as u128 * np as u128;
    if spread * eps_den as u128 <= 2 * eps_num as u128 * (mp as u128 * np as u128) {
        return Ok(RegularityVerdict::Regular {
            d: BigRational::new(BigInt::from(mid_num), BigInt::from(mid_den)),
        });
    }
    // second pass: lexicographically first deviating qualifying sub-triple
    let ranks = [
        lex_rank_table(v1, scan.k[0]),
        lex_rank_table(v2, scan.k[1]),
        lex_rank_table(v3, scan.k[2]),
    ];
    let mut best: Option<([u32; 3], (u32, u32))> = None;
    scan.for_each_qualifying(eps_num, eps_den, |w1, w2, w3, e, p| {
        let lhs_a = e as u128 * mid_den;
        let lhs_b = mid_num * p as u128;
        let dev = if lhs_a >= lhs_b { lhs_a - lhs_b } else { lhs_b - lhs_a };
        // |e/p − mid| > ε  <=>  |e·mid_den − mid_num·p|·den > num·p·mid_den
        if dev * eps_den as u128 > eps_num as u128 * p as u128 * mid_den {
            let key = [
                ranks[0][w1 as usize],
                ranks[1][w2 as usize],
                ranks[2][w3 as usize],
            ];
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, (e, p)));
            }
        }
    });
    let (key, (e, p)) = best.ok_or_else(|| {
        Error::Internal("spread exceeded 2ε but no sub-triple deviates from the midpoint".into())
    })?;
    // recover masks from ranks; entry 0 is the empty mask, never a subset
    let mask_with_rank = |table: &[u32], want: u32| -> u32 {
        (1..table.len()).find(|&m| table[m] == want).unwrap_or(0) as u32
    };
    let witness = [
        subset_list(v1, mask_with_rank(&ranks[0], key[0])),
        subset_list(v2, mask_with_rank(&ranks[1], key[1])),
        subset_list(v3, mask_with_rank(&ranks[2], key[2])),
    ];
    Ok(RegularityVerdict::Irregular {
        witness,
        witness_density: BigRational::new(BigInt::from(e), BigInt::from(p)),
        midpoint: BigRational::new(BigInt::from(mid_num), BigInt::from(mid_den)),
    })
}

fn sample_subset(class: &[u16], rng: &mut rand_chacha::ChaCha12Rng) -> Vec<u16> {
    class
        .iter()
        .copied()
        .filter(|_| rng::uniform_u32(rng, 2) == 1)
        .collect()
}

fn count_box(h: &Hypergraph3, w1: &[u16], w2: &[u16], w3: &[u16]) -> u64 {
    let box_size = w1.len() * w2.len() * w3.len();
    if box_size <= h.edge_count() {
        let mut count = 0u64;
        for &a in w1 {
            for &b in w2 {
                for &c in w3 {
                    if h.contains_rank(triples::rank_unsorted(a, b, c)) {
                        count += 1;
                    }
                }
            }
        }
        count
    } else {
        count_crossing(h, w1, w2, w3)
    }
}

/// Randomized refutation: samples qualifying sub-triples and reports
/// Irregular as soon as two sampled densities are more than 2ε apart
/// (witness: the denser one, against the midpoint of the observed range).
/// A NotRefuted outcome certifies nothing.
pub fn refute_eps_regular_randomized(
    h: &Hypergraph3,
    v1: &[u16],
    v2: &[u16],
    v3: &[u16],
    eps_num: u64,
    eps_den: u64,
    samples: u64,
    seed: u64,
) -> Result<RegularityVerdict> {
    check_eps(eps_num, eps_den)?;
    check_disjoint_classes(h, &[v1, v2, v3])?;
    let vprod = v1.len() as u128 * v2.len() as u128 * v3.len() as u128;
    let mut rng = rng::rng_from_seed(seed);
    let mut max: Option<(u128, u128, [Vec<u16>; 3])> = None;
    let mut min: Option<(u128, u128)> = None;
    let mut drawn = 0u64;
    let mut attempts = 0u64;
    let attempt_cap = samples.saturating_mul(64);
    while drawn < samples && attempts < attempt_cap {
        attempts += 1;
        let w1 = sample_subset(v1, &mut rng);
        let w2 = sample_subset(v2, &mut rng);
        let w3 = sample_subset(v3, &mut rng);
        let wprod = w1.len() as u128 * w2.len() as u128 * w3.len() as u128;
        if wprod == 0 || wprod * (eps_den as u128) < (eps_num as u128) * vprod {
            continue;
        }
        drawn += 1;
        let e = count_box(h, &w1, &w2, &w3) as u128;
        if max
            .as_ref()
            .map_or(true, |&(me, mp, _)| e * mp > me * wprod)
        {
            max = Some((e, wprod, [w1.clone(), w2.clone(), w3.clone()]));
        }
        if min.map_or(true, |(ne, np)| e * np < ne * wprod) {
            min = Some((e, wprod));
        }
        if let (Some((me, mp, wit)), Some((ne, np))) = (max.as_ref(), min) {
            let (me, mp) = (*me, *mp);
            // spread > 2ε, in big integers: the factors exceed u128 range
            let spread = BigInt::from(me * np - ne * mp) * BigInt::from(eps_den);
            let bound = BigInt::from(2u8) * BigInt::from(eps_num) * BigInt::from(mp * np);
            if spread > bound {
                return Ok(RegularityVerdict::Irregular {
                    witness: wit.clone(),
                    witness_density: BigRational::new(BigInt::from(me), BigInt::from(mp)),
                    midpoint: BigRational::new(
                        BigInt::from(me * np + ne * mp),
                        BigInt::from(2 * mp * np),
                    ),
                });
            }
        }
    }
    Ok(RegularityVerdict::NotRefuted {
        samples: drawn,
        seed,
    })
}

/// Dispatch: exhaustive certificate when all classes have size <= 8,
/// randomized refutation otherwise.
pub fn check_regularity(
    h: &Hypergraph3,
    v1: &[u16],
    v2: &[u16],
    v3: &[u16],
    eps_num: u64,
    eps_den: u64,
    samples: u64,
    seed: u64,
) -> Result<RegularityVerdict> {
    if [v1, v2, v3].iter().all(|c| c.len() <= 8) {
        is_eps_regular_exhaustive(h, v1, v2, v3, eps_num, eps_den)
    } else {
        refute_eps_regular_randomized(h, v1, v2, v3, eps_num, eps_den, samples, seed)
    }
}

/// Where per-color regularity verdicts come from when building the cluster
/// hypergraph: the built-in exhaustive scan, or a caller-supplied predicate
/// over class triples (for classes beyond exhaustive reach).
pub enum RegularitySource<'a> {
    Exhaustive,
    Supplied(&'a dyn Fn(u16, u16, u16) -> bool),
}

/// Cluster hypergraph of a colored host over an equitable partition: a
/// class triple becomes an edge iff it is ε-regular for every color's
/// subhypergraph and some color has density >= η there; the edge's list
/// collects exactly the colors with density >= η.
pub fn cluster_hypergraph(
    h: &Hypergraph3,
    c: &Coloring,
    p: &EquitablePartition,
    eps_num: u64,
    eps_den: u64,
    eta_num: u64,
    eta_den: u64,
    source: RegularitySource,
) -> Result<ClusterHypergraph> {
    if p.n() != h.n() {
        return Err(Error::BadPartition(format!(
            "partition covers {} vertices, host has {}",
            p.n(),
            h.n()
        )));
    }
    if c.colors().len() != h.edge_count() {
        return Err(Error::ColoringLength {
            expected: h.edge_count(),
            got: c.colors().len(),
        });
    }
    if eta_num == 0 || eta_den == 0 {
        return Err(Error::Domain("eta must be positive".into()));
    }
    let class_of = p.class_of();
    // per class triple: color -> crossing edge count
    let mut buckets: BTreeMap<[u16; 3], BTreeMap<u32, u64>> = BTreeMap::new();
    for ((a, b, tc), &color) in h.triples().zip(c.colors()) {
        let mut cls = [
            class_of[a as usize],
            class_of[b as usize],
            class_of[tc as usize],
        ];
        cls.sort_unstable();
        if cls[0] != cls[1] && cls[1] != cls[2] {
            *buckets.entry(cls).or_default().entry(color).or_insert(0) += 1;
        }
    }
    // colors present anywhere; absent colors have empty subhypergraphs and
    // are (ε,0)-regular with density 0 everywhere
    let mut present: Vec<u32> = c.colors().to_vec();
    present.sort_unstable();
    present.dedup();
    let mut per_color: BTreeMap<u32, Hypergraph3> = BTreeMap::new();
    if matches!(source, RegularitySource::Exhaustive) {
        for &color in &present {
            let mut hc = Hypergraph3::new(h.n())?;
            for ((a, b, tc), &col) in h.triples().zip(c.colors()) {
                if col == color {
                    hc.insert(a, b, tc)?;
                }
            }
            per_color.insert(color, hc);
        }
    }
    let mut edges = Vec::new();
    let mut lists = Vec::new();
    for (&cls, by_color) in &buckets {
        let [i, j, k] = cls;
        let prod = p.classes()[i as usize].len() as u128
            * p.classes()[j as usize].len() as u128
            * p.classes()[k as usize].len() as u128;
        let dense: Vec<u32> = by_color
            .iter()
            .filter(|&(_, &count)| count as u128 * eta_den as u128 >= eta_num as u128 * prod)
            .map(|(&color, _)| color)
            .collect();
        if dense.is_empty() {
            continue;
        }
        let regular_all = match &source {
            RegularitySource::Supplied(f) => f(i, j, k),
            RegularitySource::Exhaustive => {
                let mut ok = true;
                for &color in &present {
                    let verdict = is_eps_regular_exhaustive(
                        &per_color[&color],
                        &p.classes()[i as usize],
                        &p.classes()[j as usize],
                        &p.classes()[k as usize],
                        eps_num,
                        eps_den,
                    )?;
                    if !matches!(verdict, RegularityVerdict::Regular { .. }) {
                        ok = false;
                        break;
                    }
                }
                ok
            }
        };
        if regular_all {
            edges.push(cls);
            lists.push(dense);
        }
    }
    ClusterHypergraph::new(p.class_count(), edges, lists)
}

fn cluster_skeleton(rc: &ClusterHypergraph) -> Result<(Hypergraph3, Vec<(u32, usize)>)> {
    let skeleton = Hypergraph3::from_triples(
        rc.m(),
        rc.edges().iter().map(|&[a, b, c]| (a, b, c)),
    )?;
    let mut rank_to_idx: Vec<(u32, usize)> = rc
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &[a, b, c])| (triples::rank_unsorted(a, b, c), i))
        .collect();
    rank_to_idx.sort_unstable();
    Ok((skeleton, rank_to_idx))
}

/// Colored-subhypergraph relation: an injective map of the canonical seven
/// points into cluster classes such that every line lands on a cluster edge
/// whose list contains that line's color. Returns the first embedding found.
pub fn colored_subhypergraph_embedding(
    line_colors: &[u32; 7],
    rc: &ClusterHypergraph,
) -> Result<Option<[u16; 7]>> {
    if rc.edge_count() < 7 {
        return Ok(None);
    }
    let (skeleton, rank_to_idx) = cluster_skeleton(rc)?;
    let mut found = None;
    fano::for_each_labeled_embedding(&skeleton, &mut |verts| {
        let ranks = fano::line_ranks_of(verts);
        for (line, &rank) in ranks.iter().enumerate() {
            let idx = match rank_to_idx.binary_search_by_key(&rank, |&(r, _)| r) {
                Ok(pos) => rank_to_idx[pos].1,
                Err(_) => return false,
            };
            if rc.lists()[idx].binary_search(&line_colors[line]).is_err() {
                return false;
            }
        }
        found = Some(*verts);
        true
    });
    Ok(found)
}

/// Greedy distinct assignment from per-line lists, in line order; always
/// succeeds when every list has at least 7 colors.
pub fn rainbow_from_lists(lists: [&[u32]; 7]) -> Option<[u32; 7]> {
    let mut chosen = [0u32; 7];
    for (i, list) in lists.iter().enumerate() {
        let pick = list.iter().find(|c| !chosen[..i].contains(c))?;
        chosen[i] = *pick;
    }
    Some(chosen)
}

/// First copy among cluster edges all of whose lists have >= 7 colors,
/// rainbow-colored greedily from those lists.
pub fn rainbow_copy_in_cluster(rc: &ClusterHypergraph) -> Result<Option<([u16; 7], [u32; 7])>> {
    if rc.edge_count() < 7 {
        return Ok(None);
    }
    let (skeleton, rank_to_idx) = cluster_skeleton(rc)?;
    let mut found = None;
    fano::for_each_labeled_embedding(&skeleton, &mut |verts| {
        let ranks = fano::line_ranks_of(verts);
        let mut lists: [&[u32]; 7] = [&[]; 7];
        for (line, &rank) in ranks.iter().enumerate() {
            let idx = match rank_to_idx.binary_search_by_key(&rank, |&(r, _)| r) {
                Ok(pos) => rank_to_idx[pos].1,
                Err(_) => return false,
            };
            if rc.lists()[idx].len() < 7 {
                return false;
            }
            lists[line] = &rc.lists()[idx];
        }
        match rainbow_from_lists(lists) {
            Some(colors) => {
                found = Some((*verts, colors));
                true
            }
            None => false,
        }
    });
    Ok(found)
}

/// (exValue − #edges with list size >= 7) / m³; negative when the cluster
/// carries more big-list edges than the Turán number allows.
pub fn beta(rc: &ClusterHypergraph, ex_value: u64) -> BigRational {
    let big = rc.lists().iter().filter(|l| l.len() >= 7).count() as u64;
    let m = BigInt::from(rc.m());
    BigRational::new(BigInt::from(ex_value) - BigInt::from(big), &m * &m * &m)
}
