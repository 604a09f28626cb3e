//! Seeded random instances: hypergraphs, colorings, simple graphs.
//! Every generator is a pure function of its arguments, seed included.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;
use crate::matching::SimpleGraph;
use crate::rng::{self, rng_from_seed};
use crate::triples;

/// m distinct triples drawn uniformly from all C(n,3).
pub fn random_hypergraph(n: u16, m: usize, seed: u64) -> Result<Hypergraph3> {
    let universe = triples::universe_size(n) as usize;
    if m > universe {
        return Err(Error::TooLarge(format!(
            "requested {m} edges but only {universe} triples exist for n={n}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    // For dense requests sample the complement instead, so rejection stays fast.
    let sample_complement = m > universe / 2;
    let k = if sample_complement { universe - m } else { m };
    let mut chosen = BTreeSet::new();
    while chosen.len() < k {
        chosen.insert(rng::uniform_u32(&mut rng, universe as u32));
    }
    let mut h = Hypergraph3::new(n)?;
    for r in 0..universe as u32 {
        if chosen.contains(&r) != sample_complement {
            h.insert_rank(r);
        }
    }
    Ok(h)
}

/// Each triple kept independently with probability num/den.
pub fn random_hypergraph_bernoulli(
    n: u16,
    num: u64,
    den: u64,
    seed: u64,
) -> Result<Hypergraph3> {
    if den == 0 || num > den {
        return Err(Error::Domain(format!(
            "edge probability {num}/{den} not in [0,1]"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut h = Hypergraph3::new(n)?;
    for r in 0..triples::universe_size(n) {
        if rng::uniform_u64(&mut rng, den) < num {
            h.insert_rank(r);
        }
    }
    Ok(h)
}

/// Uniform color per edge position, colors in 1..=r.
pub fn random_coloring(edge_count: usize, r: u32, seed: u64) -> Result<Vec<u32>> {
    if r == 0 {
        return Err(Error::Domain("need at least one color".into()));
    }
    let mut rng = rng_from_seed(seed);
    Ok((0..edge_count)
        .map(|_| rng::uniform_u32(&mut rng, r) + 1)
        .collect())
}

/// m distinct pairs drawn uniformly from all C(n,2).
pub fn random_simple_graph(n: u16, m: usize, seed: u64) -> Result<SimpleGraph> {
    let pairs = (n as usize) * (n as usize - 1) / 2;
    if m > pairs {
        return Err(Error::TooLarge(format!(
            "requested {m} edges but only {pairs} pairs exist for n={n}"
        )));
    }
    let mut all: Vec<(u16, u16)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .collect();
    let mut rng = rng_from_seed(seed);
    rng::shuffle(&mut rng, &mut all);
    SimpleGraph::from_edges(n, all.into_iter().take(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_has_requested_edges_and_is_reproducible() {
        let a = random_hypergraph(9, 40, 123).unwrap();
        let b = random_hypergraph(9, 40, 123).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 40);
        let c = random_hypergraph(9, 40, 124).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn dense_request_uses_complement_path() {
        let h = random_hypergraph(7, 33, 5).unwrap();
        assert_eq!(h.edge_count(), 33);
        let full = random_hypergraph(7, 35, 5).unwrap();
        assert_eq!(full.edge_count(), 35);
        let empty = random_hypergraph(7, 0, 5).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn bernoulli_extremes() {
        let none = random_hypergraph_bernoulli(8, 0, 1, 1).unwrap();
        assert_eq!(none.edge_count(), 0);
        let all = random_hypergraph_bernoulli(8, 1, 1, 1).unwrap();
        assert_eq!(all.edge_count(), 56);
        assert!(random_hypergraph_bernoulli(8, 2, 1, 1).is_err());
    }

    #[test]
    fn coloring_in_range_and_reproducible() {
        let c = random_coloring(100, 7, 9).unwrap();
        assert_eq!(c, random_coloring(100, 7, 9).unwrap());
        assert!(c.iter().all(|&x| (1..=7).contains(&x)));
        assert!(random_coloring(3, 0, 1).is_err());
    }

    #[test]
    fn simple_graph_count_and_bounds() {
        let g = random_simple_graph(8, 12, 77).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g, random_simple_graph(8, 12, 77).unwrap());
        assert!(random_simple_graph(4, 7, 0).is_err());
    }
}
