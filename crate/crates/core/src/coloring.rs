//! Edge colorings, color patterns on the canonical Fano labeling, freeness
//! checks, exact counting of pattern-free colorings, and seeded Monte Carlo
//! estimation.
//!
//! The exact counter walks normalized colorings: color identities are
//! anonymous (pattern isomorphism never distinguishes them), so branches
//! pick either an already-used color id or one fresh id, and each completed
//! normalized sequence with k distinct ids stands for r·(r−1)···(r−k+1)
//! actual colorings. A full r^|E| enumeration is kept as an independent
//! oracle for small hosts.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fano::{self, FanoCopy};
use crate::hypergraph::Hypergraph3;
use crate::rng;

/// Colors are 1..=r, one per host edge in ascending edge-rank order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<u32>,
    r: u32,
}

impl Coloring {
    pub fn new(h: &Hypergraph3, colors: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Domain("need at least one color".into()));
        }
        if colors.len() != h.edge_count() {
            return Err(Error::ColoringLength {
                expected: h.edge_count(),
                got: colors.len(),
            });
        }
        for &c in &colors {
            if c == 0 || c > r {
                return Err(Error::ColorOutOfRange {
                    color: c as u64,
                    r: r as u64,
                });
            }
        }
        Ok(Coloring { colors, r })
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of the host edge {a,b,c}; the coloring must belong to h.
    pub fn color_of_edge(&self, h: &Hypergraph3, a: u16, b: u16, c: u16) -> Result<u32> {
        if self.colors.len() != h.edge_count() {
            return Err(Error::ColoringLength {
                expected: h.edge_count(),
                got: self.colors.len(),
            });
        }
        let rank = crate::triples::rank_unsorted(a, b, c);
        let pos = h
            .edge_rank_vec()
            .binary_search(&rank)
            .map_err(|_| Error::EdgeNotInHost {
                a: a as usize,
                b: b as usize,
                c: c as usize,
            })?;
        Ok(self.colors[pos])
    }
}

/// Partition of the canonical Fano's edge indices 0..6. Stored normalized:
/// each class ascending, classes in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pattern {
    classes: Vec<Vec<u8>>,
}

impl Pattern {
    pub fn new(mut classes: Vec<Vec<u8>>) -> Result<Self> {
        let mut seen = [false; 7];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::BadPartition("empty pattern class".into()));
            }
            class.sort_unstable();
            for &e in class.iter() {
                if e > 6 {
                    return Err(Error::BadPartition(format!(
                        "edge index {e} outside 0..6"
                    )));
                }
                if seen[e as usize] {
                    return Err(Error::BadPartition(format!("edge index {e} repeated")));
                }
                seen[e as usize] = true;
            }
        }
        if seen != [true; 7] {
            return Err(Error::BadPartition(
                "pattern classes must cover all 7 edges".into(),
            ));
        }
        classes.sort();
        Ok(Pattern { classes })
    }

    pub fn rainbow() -> Self {
        Pattern {
            classes: (0..7).map(|e| vec![e]).collect(),
        }
    }

    pub fn is_rainbow(&self) -> bool {
        self.classes.len() == 7
    }

    pub fn classes(&self) -> &[Vec<u8>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Per-line class labels, normalized to first-occurrence order.
    fn rgs(&self) -> [u8; 7] {
        let mut label = [0u8; 7];
        for (k, class) in self.classes.iter().enumerate() {
            for &e in class {
                label[e as usize] = k as u8;
            }
        }
        normalize_labels(&label)
    }
}

/// Restricted-growth normalization: relabel by first occurrence, so two
/// label arrays are equal iff they describe the same set partition.
fn normalize_labels<T: Copy + Eq>(labels: &[T; 7]) -> [u8; 7] {
    let mut reps: Vec<T> = Vec::with_capacity(7);
    let mut out = [0u8; 7];
    for (i, &l) in labels.iter().enumerate() {
        let id = match reps.iter().position(|&r| r == l) {
            Some(p) => p,
            None => {
                reps.push(l);
                reps.len() - 1
            }
        };
        out[i] = id as u8;
    }
    out
}

/// Decides "induced partition isomorphic to P": some Fano automorphism must
/// carry the induced partition onto P as unordered set partitions, colors
/// anonymous. Rainbow short-circuits to a distinctness test.
pub struct PatternMatcher {
    rainbow: bool,
    target: [u8; 7],
    actions: Vec<[u8; 7]>,
}

impl PatternMatcher {
    pub fn new(p: &Pattern) -> Self {
        let rainbow = p.is_rainbow();
        let actions = if rainbow {
            Vec::new()
        } else {
            fano::fano_automorphisms()
                .iter()
                .map(fano::automorphism_edge_action)
                .collect()
        };
        PatternMatcher {
            rainbow,
            target: p.rgs(),
            actions,
        }
    }

    /// colors_by_line[i] = color of the host edge playing canonical line i.
    pub fn matches(&self, colors_by_line: &[u32; 7]) -> bool {
        if self.rainbow {
            for i in 0..7 {
                for j in i + 1..7 {
                    if colors_by_line[i] == colors_by_line[j] {
                        return false;
                    }
                }
            }
            return true;
        }
        for action in &self.actions {
            let mut permuted = [0u32; 7];
            for (i, &img) in action.iter().enumerate() {
                permuted[img as usize] = colors_by_line[i];
            }
            if normalize_labels(&permuted) == self.target {
                return true;
            }
        }
        false
    }
}

/// Positions (indices into the ascending edge order) of each copy's lines.
fn copy_line_positions(copies: &[FanoCopy], ranks: &[u32]) -> Vec<[usize; 7]> {
    copies
        .iter()
        .map(|copy| {
            let lr = copy.line_ranks();
            let mut pos = [0usize; 7];
            for i in 0..7 {
                pos[i] = ranks
                    .binary_search(&lr[i])
                    .expect("copy edge must be a host edge");
            }
            pos
        })
        .collect()
}

/// First copy (in canonical copy order) whose induced partition matches p,
/// or None if the coloring is pattern-free.
pub fn find_violation(
    h: &Hypergraph3,
    c: &Coloring,
    p: &Pattern,
) -> Result<Option<FanoCopy>> {
    if c.colors.len() != h.edge_count() {
        return Err(Error::ColoringLength {
            expected: h.edge_count(),
            got: c.colors.len(),
        });
    }
    let copies = fano::enumerate_fano(h);
    let ranks = h.edge_rank_vec();
    let positions = copy_line_positions(&copies, &ranks);
    let matcher = PatternMatcher::new(p);
    for (copy, pos) in copies.iter().zip(&positions) {
        let mut by_line = [0u32; 7];
        for i in 0..7 {
            by_line[i] = c.colors[pos[i]];
        }
        if matcher.matches(&by_line) {
            return Ok(Some(copy.clone()));
        }
    }
    Ok(None)
}

pub fn is_pattern_free(h: &Hypergraph3, c: &Coloring, p: &Pattern) -> Result<bool> {
    Ok(find_violation(h, c, p)?.is_none())
}

/// r(r−1)···(r−k+1) as a big integer; zero when k > r.
pub fn falling_factorial(r: u32, k: u32) -> BigUint {
    if k > r {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(r - i);
    }
    acc
}

/// Rainbow-free count for a host that is exactly one Fano copy:
/// r^7 − r(r−1)···(r−6).
pub fn rainbow_free_single_fano_closed_form(r: u32) -> BigUint {
    num_traits::pow(BigUint::from(r), 7) - falling_factorial(r, 7)
}

/// Edges sorted by decreasing number of copies through them, rank ascending
/// on ties (fail-first order for the exact counter).
pub fn default_edge_order(h: &Hypergraph3, copies: &[FanoCopy]) -> Vec<u32> {
    let ranks = h.edge_rank_vec();
    let mut load = vec![0u32; ranks.len()];
    for copy in copies {
        for r in copy.edge_ranks {
            let i = ranks.binary_search(&r).expect("copy edge in host");
            load[i] += 1;
        }
    }
    let mut order: Vec<usize> = (0..ranks.len()).collect();
    order.sort_by_key(|&i| (core::cmp::Reverse(load[i]), ranks[i]));
    order.into_iter().map(|i| ranks[i]).collect()
}

struct ExactSearch<'a> {
    r: u32,
    matcher: &'a PatternMatcher,
    /// per position, copies whose last edge (in search order) is here,
    /// each as line→position
    completed_at: &'a [Vec<[usize; 7]>],
    assignment: Vec<u32>,
    ff: Vec<BigUint>,
    nodes: u64,
    budget: u64,
    total: BigUint,
}

impl ExactSearch<'_> {
    fn run(&mut self, pos: usize, used: u32) -> Result<()> {
        if pos == self.assignment.len() {
            self.total += &self.ff[used as usize];
            return Ok(());
        }
        let top = if used < self.r { used } else { used - 1 };
        for color in 0..=top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted { nodes: self.nodes });
            }
            self.assignment[pos] = color;
            let mut violated = false;
            for linepos in &self.completed_at[pos] {
                let mut by_line = [0u32; 7];
                for i in 0..7 {
                    by_line[i] = self.assignment[linepos[i]];
                }
                if self.matcher.matches(&by_line) {
                    violated = true;
                    break;
                }
            }
            if !violated {
                let next_used = if color == used { used + 1 } else { used };
                self.run(pos + 1, next_used)?;
            }
        }
        Ok(())
    }
}

fn count_with_order(
    h: &Hypergraph3,
    r: u32,
    p: &Pattern,
    copies: &[FanoCopy],
    order: &[u32],
    budget: u64,
) -> Result<BigUint> {
    let m = h.edge_count();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != h.edge_rank_vec() {
        return Err(Error::Domain(
            "edge order must be a permutation of the host's edges".into(),
        ));
    }
    // position in search order, indexed by position in ascending order
    let mut pos_of = vec![0usize; m];
    for (search_pos, rank) in order.iter().enumerate() {
        let asc = h.edge_rank_vec().binary_search(rank).unwrap();
        pos_of[asc] = search_pos;
    }
    let asc_positions = copy_line_positions(copies, &h.edge_rank_vec());
    let mut completed_at: Vec<Vec<[usize; 7]>> = vec![Vec::new(); m];
    for linepos in &asc_positions {
        let mut search_linepos = [0usize; 7];
        for i in 0..7 {
            search_linepos[i] = pos_of[linepos[i]];
        }
        let last = *search_linepos.iter().max().unwrap();
        completed_at[last].push(search_linepos);
    }
    let matcher = PatternMatcher::new(p);
    let max_used = (m as u32).min(r);
    let ff: Vec<BigUint> = (0..=max_used).map(|k| falling_factorial(r, k)).collect();
    let mut search = ExactSearch {
        r,
        matcher: &matcher,
        completed_at: &completed_at,
        assignment: vec![0; m],
        ff,
        nodes: 0,
        budget,
        total: BigUint::zero(),
    };
    search.run(0, 0)?;
    Ok(search.total)
}

/// Exact number of pattern-free r-colorings. Fano-free hosts take the r^|E|
/// fast path; otherwise a normalized backtracking search runs under the
/// node budget and fails with BudgetExhausted rather than approximate.
pub fn count_pattern_free_exact(
    h: &Hypergraph3,
    r: u32,
    p: &Pattern,
    budget: u64,
) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    // a copy matching the pattern carries exactly class_count distinct
    // colors, so fewer available colors means nothing can match
    if (r as usize) < p.class_count() {
        return Ok(num_traits::pow(BigUint::from(r), h.edge_count()));
    }
    let copies = fano::enumerate_fano(h);
    if copies.is_empty() {
        return Ok(num_traits::pow(BigUint::from(r), h.edge_count()));
    }
    let order = default_edge_order(h, &copies);
    count_with_order(h, r, p, &copies, &order, budget)
}

/// Same count over an explicit edge order; the result must not depend on
/// the order. Always runs the generic search, even on Fano-free hosts.
pub fn count_pattern_free_exact_with_order(
    h: &Hypergraph3,
    r: u32,
    p: &Pattern,
    order: &[u32],
    budget: u64,
) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    let copies = fano::enumerate_fano(h);
    count_with_order(h, r, p, &copies, order, budget)
}

/// Independent oracle: enumerate all r^|E| colorings and test each.
pub fn count_pattern_free_naive(h: &Hypergraph3, r: u32, p: &Pattern) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    let m = h.edge_count();
    let mut space = 1u128;
    for _ in 0..m {
        space = space.saturating_mul(r as u128);
        if space > 200_000_000 {
            return Err(Error::TooLarge(format!(
                "naive enumeration over r^|E| = {r}^{m} is out of reach"
            )));
        }
    }
    let copies = fano::enumerate_fano(h);
    let ranks = h.edge_rank_vec();
    let positions = copy_line_positions(&copies, &ranks);
    let matcher = PatternMatcher::new(p);
    let mut digits = vec![1u32; m];
    let mut count: u64 = 0;
    loop {
        let mut free = true;
        for linepos in &positions {
            let mut by_line = [0u32; 7];
            for i in 0..7 {
                by_line[i] = digits[linepos[i]];
            }
            if matcher.matches(&by_line) {
                free = false;
                break;
            }
        }
        if free {
            count += 1;
        }
        // advance the base-r odometer over colors 1..=r
        let mut i = 0;
        loop {
            if i == m {
                return Ok(BigUint::from(count));
            }
            if digits[i] < r {
                digits[i] += 1;
                break;
            }
            digits[i] = 1;
            i += 1;
        }
    }
}

/// Monte Carlo estimate of the pattern-free fraction.
#[derive(Clone, PartialEq, Debug)]
pub struct Estimate {
    pub samples: u64,
    pub hits: u64,
    pub seed: u64,
    pub estimate: f64,
    pub half_width: f64,
}

/// Pattern-free hits over sample indices [start, end); sample i draws its
/// colors from stream i of the seed, so any partition of the index range
/// sums to the same total.
pub fn estimate_hits_range(
    h: &Hypergraph3,
    r: u32,
    p: &Pattern,
    seed: u64,
    start: u64,
    end: u64,
) -> Result<u64> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    let copies = fano::enumerate_fano(h);
    let ranks = h.edge_rank_vec();
    let positions = copy_line_positions(&copies, &ranks);
    let matcher = PatternMatcher::new(p);
    let m = h.edge_count();
    let mut colors = vec![0u32; m];
    let mut hits = 0u64;
    for i in start..end {
        let mut rng = rng::stream_rng(seed, i);
        for c in colors.iter_mut() {
            *c = rng::uniform_u32(&mut rng, r) + 1;
        }
        let mut free = true;
        for linepos in &positions {
            let mut by_line = [0u32; 7];
            for j in 0..7 {
                by_line[j] = colors[linepos[j]];
            }
            if matcher.matches(&by_line) {
                free = false;
                break;
            }
        }
        if free {
            hits += 1;
        }
    }
    Ok(hits)
}

/// Point estimate of count/r^|E| with a 99% confidence half-width
/// 2.576·sqrt(p̂(1−p̂)/samples).
pub fn estimate_pattern_free(
    h: &Hypergraph3,
    r: u32,
    p: &Pattern,
    samples: u64,
    seed: u64,
) -> Result<Estimate> {
    if samples == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    let hits = estimate_hits_range(h, r, p, seed, 0, samples)?;
    Ok(estimate_from_hits(samples, hits, seed))
}

pub fn estimate_from_hits(samples: u64, hits: u64, seed: u64) -> Estimate {
    let p_hat = hits as f64 / samples as f64;
    let half_width = 2.576 * libm::sqrt(p_hat * (1.0 - p_hat) / samples as f64);
    Estimate {
        samples,
        hits,
        seed,
        estimate: p_hat,
        half_width,
    }
}
