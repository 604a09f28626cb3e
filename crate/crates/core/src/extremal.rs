//! Exact Fano Turán numbers for small n by branch and bound, plus the
//! comparison of exact rainbow-free counts against the r^ex benchmark.
//!
//! The search decides triples in/out with three sound reductions: unit
//! propagation (a copy with six edges in forces the seventh out), a greedy
//! edge-disjoint copy packing upper bound, and a degree-sortedness
//! feasibility prune (every isomorphism class has a representative with
//! non-increasing degrees by vertex id, so only such states are explored;
//! the B_n incumbent is exempt since it enters as a bound, not a node).

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::fano;
use crate::hypergraph::{build_bn, build_complete, Hypergraph3};
use crate::triples;

#[derive(Clone, Debug)]
pub struct TuranOutcome {
    pub value: u64,
    pub witness: Hypergraph3,
    pub proved_optimal: bool,
    pub nodes_expanded: u64,
}

struct Search {
    universe: u32,
    copies: Vec<u128>,
    vertex_masks: Vec<u128>,
    full: u128,
    best: u64,
    best_mask: u128,
    nodes: u64,
    budget: u64,
    stopped: bool,
}

impl Search {
    fn rec(&mut self, in_m: u128, mut out_m: u128) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.stopped = true;
            return;
        }
        // unit propagation to fixpoint
        loop {
            let und = self.full & !in_m & !out_m;
            let mut changed = false;
            for &copy in &self.copies {
                if copy & out_m != 0 {
                    continue;
                }
                let undc = copy & und;
                if undc == 0 {
                    return; // copy fully in: dead branch
                }
                if undc.count_ones() == 1 {
                    out_m |= undc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let und = self.full & !in_m & !out_m;
        // degree-sortedness feasibility: final deg(u) >= deg(v) must stay
        // achievable for u < v
        let nv = self.vertex_masks.len();
        for u in 0..nv {
            let max_u = ((in_m | und) & self.vertex_masks[u]).count_ones();
            for vmask in &self.vertex_masks[u + 1..] {
                let min_v = (in_m & vmask).count_ones();
                if max_u < min_v {
                    return;
                }
            }
        }
        // greedy edge-disjoint packing of alive copies: each forces one
        // distinct undecided edge out
        let mut packed_mask = 0u128;
        let mut packed = 0u64;
        let mut any_alive = false;
        let mut branch_copy = 0u128;
        let mut branch_size = u32::MAX;
        for &copy in &self.copies {
            if copy & out_m != 0 {
                continue;
            }
            any_alive = true;
            if copy & packed_mask == 0 {
                packed_mask |= copy;
                packed += 1;
            }
            let size = (copy & und).count_ones();
            if size < branch_size {
                branch_size = size;
                branch_copy = copy;
            }
        }
        let upper = in_m.count_ones() as u64 + und.count_ones() as u64 - packed;
        if upper <= self.best {
            return;
        }
        if !any_alive {
            // every copy already misses an edge: take the rest
            let mask = in_m | und;
            let val = mask.count_ones() as u64;
            if val > self.best {
                self.best = val;
                self.best_mask = mask;
            }
            return;
        }
        // hitting-set branching: some undecided edge of the chosen copy is
        // out; branch i excludes bit i and includes bits 0..i
        let mut bits = [0u128; 7];
        let mut k = 0;
        let mut rest = branch_copy & und;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            bits[k] = bit;
            k += 1;
            rest ^= bit;
        }
        let mut include = 0u128;
        for &bit in bits.iter().take(k) {
            self.rec(in_m | include, out_m | bit);
            if self.stopped {
                return;
            }
            include |= bit;
        }
    }
}

fn mask_of(h: &Hypergraph3) -> u128 {
    let mut m = 0u128;
    for r in h.edge_ranks() {
        m |= 1u128 << r;
    }
    m
}

fn hypergraph_of(n: u16, mask: u128, universe: u32) -> Hypergraph3 {
    let mut es = EdgeSet::new(universe);
    for b in 0..universe {
        if mask & (1u128 << b) != 0 {
            es.insert(b);
        }
    }
    Hypergraph3::from_edge_set(n, es).expect("mask within universe")
}

/// Maximum edge count of a Fano-free 3-graph on n vertices. For n < 7 the
/// complete host is the answer; otherwise branch and bound proves the value
/// unless the node budget runs out, in which case the best incumbent is
/// returned unproved.
pub fn turan_number(n: u16, budget: u64) -> Result<TuranOutcome> {
    if n < 7 {
        let witness = build_complete(n)?;
        let value = witness.edge_count() as u64;
        return Ok(TuranOutcome {
            value,
            witness,
            proved_optimal: true,
            nodes_expanded: 0,
        });
    }
    if n > 10 {
        return Err(Error::TooLarge(format!(
            "exact search limited to n<=10 (triple universe must fit 128 bits), got {n}"
        )));
    }
    let universe = triples::universe_size(n);
    let complete = build_complete(n)?;
    let copies: Vec<u128> = fano::enumerate_fano(&complete)
        .iter()
        .map(|c| {
            c.edge_ranks
                .iter()
                .fold(0u128, |m, &r| m | (1u128 << r))
        })
        .collect();
    let vertex_masks: Vec<u128> = (0..n)
        .map(|v| {
            let mut m = 0u128;
            for r in 0..universe {
                let (a, b, c) = triples::unrank(r);
                if a == v || b == v || c == v {
                    m |= 1u128 << r;
                }
            }
            m
        })
        .collect();
    let (bn, _) = build_bn(n)?;
    let seed_mask = mask_of(&bn);
    let mut search = Search {
        universe,
        copies,
        vertex_masks,
        full: if universe == 128 {
            u128::MAX
        } else {
            (1u128 << universe) - 1
        },
        best: bn.edge_count() as u64,
        best_mask: seed_mask,
        nodes: 0,
        budget,
        stopped: false,
    };
    search.rec(0, 0);
    let witness = hypergraph_of(n, search.best_mask, search.universe);
    if !fano::is_fano_free(&witness) {
        return Err(Error::Internal(
            "extremal witness contains a Fano copy".into(),
        ));
    }
    if witness.edge_count() as u64 != search.best {
        return Err(Error::Internal(
            "extremal witness size disagrees with reported value".into(),
        ));
    }
    Ok(TuranOutcome {
        value: search.best,
        witness,
        proved_optimal: !search.stopped,
        nodes_expanded: search.nodes,
    })
}

/// Exact comparison of a rainbow-free count against r^{ex(n,Fano)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremBenchmark {
    pub r: u32,
    pub turan_value: u64,
    pub count: BigUint,
    pub benchmark: BigUint,
    pub ordering: core::cmp::Ordering,
    /// exponent k with count = r^k, when the count is an exact power
    pub count_exponent: Option<u64>,
    /// k − ex(n,Fano), when the count is an exact power
    pub exponent_difference: Option<i64>,
}

pub fn benchmark_against_theorem(
    r: u32,
    count: &BigUint,
    turan_value: u64,
) -> Result<TheoremBenchmark> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    let exponent = u32::try_from(turan_value)
        .map_err(|_| Error::TooLarge(format!("exponent {turan_value} too large")))?;
    let benchmark = num_traits::pow(BigUint::from(r), exponent as usize);
    let count_exponent = if r == 1 {
        if count.is_one() {
            Some(0)
        } else {
            None
        }
    } else {
        let big_r = BigUint::from(r);
        let mut k = 0u64;
        let mut rest = count.clone();
        loop {
            if rest.is_one() {
                break Some(k);
            }
            let (q, rem) = num_integer::Integer::div_rem(&rest, &big_r);
            if !rem.is_zero() {
                break None;
            }
            rest = q;
            k += 1;
        }
    };
    Ok(TheoremBenchmark {
        r,
        turan_value,
        count: count.clone(),
        benchmark: benchmark.clone(),
        ordering: count.cmp(&benchmark),
        count_exponent,
        exponent_difference: count_exponent.map(|k| k as i64 - turan_value as i64),
    })
}
