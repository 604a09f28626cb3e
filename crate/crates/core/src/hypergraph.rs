//! 3-uniform hypergraphs, bipartitions, complete multipartite constructions,
//! and link graphs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::matching::SimpleGraph;
use crate::triples::{self, MAX_N};

/// Labeled 3-uniform hypergraph on vertices 0..n, edges stored as a bitset
/// over the colex-ranked triple universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypergraph3 {
    n: u16,
    edges: EdgeSet,
}

impl Hypergraph3 {
    pub fn new(n: u16) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge(format!("n={n} exceeds MAX_N={MAX_N}")));
        }
        Ok(Hypergraph3 {
            n,
            edges: EdgeSet::new(triples::universe_size(n)),
        })
    }

    pub fn from_triples<I>(n: u16, triples_in: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u16, u16, u16)>,
    {
        let mut h = Hypergraph3::new(n)?;
        for (a, b, c) in triples_in {
            if !h.insert(a, b, c)? {
                return Err(Error::DuplicateEdge {
                    a: a as usize,
                    b: b as usize,
                    c: c as usize,
                });
            }
        }
        Ok(h)
    }

    pub fn from_edge_set(n: u16, edges: EdgeSet) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::TooLarge(format!("n={n} exceeds MAX_N={MAX_N}")));
        }
        if edges.universe() != triples::universe_size(n) {
            return Err(Error::Domain(format!(
                "edge set universe {} does not match C({n},3)",
                edges.universe()
            )));
        }
        Ok(Hypergraph3 { n, edges })
    }

    #[inline]
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_triple(&self, a: u16, b: u16, c: u16) -> Result<u32> {
        if a == b || b == c || a == c {
            return Err(Error::DegenerateTriple {
                a: a as usize,
                b: b as usize,
                c: c as usize,
            });
        }
        for v in [a, b, c] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    v: v as usize,
                    n: self.n as usize,
                });
            }
        }
        Ok(triples::rank_unsorted(a, b, c))
    }

    pub fn insert(&mut self, a: u16, b: u16, c: u16) -> Result<bool> {
        let r = self.check_triple(a, b, c)?;
        Ok(self.edges.insert(r))
    }

    pub fn remove(&mut self, a: u16, b: u16, c: u16) -> Result<bool> {
        let r = self.check_triple(a, b, c)?;
        Ok(self.edges.remove(r))
    }

    pub fn insert_rank(&mut self, rank: u32) -> bool {
        self.edges.insert(rank)
    }

    pub fn remove_rank(&mut self, rank: u32) -> bool {
        self.edges.remove(rank)
    }

    pub fn contains(&self, a: u16, b: u16, c: u16) -> bool {
        match self.check_triple(a, b, c) {
            Ok(r) => self.edges.contains(r),
            Err(_) => false,
        }
    }

    #[inline]
    pub fn contains_rank(&self, rank: u32) -> bool {
        self.edges.contains(rank)
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    /// Edge ranks in ascending order; this is the canonical edge order used
    /// by colorings and file formats.
    pub fn edge_ranks(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges.iter()
    }

    pub fn edge_rank_vec(&self) -> Vec<u32> {
        self.edges.iter().collect()
    }

    pub fn triples(&self) -> impl Iterator<Item = (u16, u16, u16)> + '_ {
        self.edges.iter().map(triples::unrank)
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n as usize];
        for (a, b, c) in self.triples() {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
            deg[c as usize] += 1;
        }
        deg
    }

    pub fn degree(&self, v: u16) -> Result<u64> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                v: v as usize,
                n: self.n as usize,
            });
        }
        Ok(self
            .triples()
            .filter(|&(a, b, c)| a == v || b == v || c == v)
            .count() as u64)
    }

    pub fn min_degree(&self) -> u64 {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Whether the minimum degree meets the B_n threshold 3n²/8 − n,
    /// compared exactly as 8·δ₁ ≥ 3n² − 8n.
    pub fn min_degree_meets_bn_threshold(&self) -> bool {
        let n = self.n as i128;
        8 * self.min_degree() as i128 >= 3 * n * n - 8 * n
    }
}

pub fn build_complete(n: u16) -> Result<Hypergraph3> {
    let mut h = Hypergraph3::new(n)?;
    for r in 0..triples::universe_size(n) {
        h.insert_rank(r);
    }
    Ok(h)
}

/// Ordered 2-part vertex partition. Crossing edges meet both classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bipartition {
    n: u16,
    part_a: Vec<u16>,
    part_b: Vec<u16>,
}

impl Bipartition {
    /// part_a is any subset of 0..n; part_b is its complement.
    pub fn new(n: u16, mut part_a: Vec<u16>) -> Result<Self> {
        part_a.sort_unstable();
        part_a.dedup();
        if let Some(&v) = part_a.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange {
                v: v as usize,
                n: n as usize,
            });
        }
        let mut in_a = vec![false; n as usize];
        for &v in &part_a {
            in_a[v as usize] = true;
        }
        let part_b = (0..n).filter(|&v| !in_a[v as usize]).collect();
        Ok(Bipartition { n, part_a, part_b })
    }

    pub fn from_parts(part_a: Vec<u16>, part_b: Vec<u16>) -> Result<Self> {
        let n = (part_a.len() + part_b.len()) as u16;
        let mut seen = vec![false; n as usize];
        for &v in part_a.iter().chain(&part_b) {
            if v >= n {
                return Err(Error::BadPartition(format!(
                    "vertex {v} outside 0..{n} (classes must cover exactly)"
                )));
            }
            if seen[v as usize] {
                return Err(Error::BadPartition(format!("vertex {v} appears twice")));
            }
            seen[v as usize] = true;
        }
        let p = Bipartition::new(n, part_a)?;
        Ok(p)
    }

    #[inline]
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn part_a(&self) -> &[u16] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[u16] {
        &self.part_b
    }

    /// Membership mask: true = class A.
    pub fn in_a_mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.n as usize];
        for &v in &self.part_a {
            m[v as usize] = true;
        }
        m
    }
}

/// |E(B_n)| in closed form: C(n,3) − C(⌈n/2⌉,3) − C(⌊n/2⌋,3).
pub fn bn_edge_count(n: u16) -> u64 {
    let c3 = |k: u64| {
        if k < 3 {
            0
        } else {
            k * (k - 1) * (k - 2) / 6
        }
    };
    let n = n as u64;
    c3(n) - c3((n + 1) / 2) - c3(n / 2)
}

/// B_n: all triples meeting both classes of a balanced bipartition.
/// Class A is the lowest ⌈n/2⌉ vertex ids.
pub fn build_bn(n: u16) -> Result<(Hypergraph3, Bipartition)> {
    let a_size = (n + 1) / 2;
    let part = Bipartition::new(n, (0..a_size).collect())?;
    let mut h = Hypergraph3::new(n)?;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                // crossing <=> not all three on one side of a_size
                if c < a_size || a >= a_size {
                    continue;
                }
                h.insert(a, b, c)?;
            }
        }
    }
    Ok((h, part))
}

/// Complete multipartite spec: intersection vector plus a vertex partition.
/// An edge belongs to the hypergraph iff the multiset of its class
/// intersection sizes equals the multiset of vector entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultipartiteSpec {
    vector: Vec<u8>,
    classes: Vec<Vec<u16>>,
    sorted_vector: Vec<u8>,
    class_of: Vec<u16>,
}

impl MultipartiteSpec {
    pub fn new(vector: Vec<u8>, classes: Vec<Vec<u16>>) -> Result<Self> {
        if vector.iter().map(|&x| x as u32).sum::<u32>() != 3 {
            return Err(Error::BadPartition(
                "intersection vector must sum to 3".into(),
            ));
        }
        if vector.len() != classes.len() {
            return Err(Error::BadPartition(
                "vector and class list lengths differ".into(),
            ));
        }
        let n: usize = classes.iter().map(|c| c.len()).sum();
        if n > MAX_N as usize {
            return Err(Error::TooLarge(format!("n={n} exceeds MAX_N={MAX_N}")));
        }
        let mut class_of = vec![u16::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v as usize >= n {
                    return Err(Error::BadPartition(format!(
                        "vertex {v} outside 0..{n} (classes must cover exactly)"
                    )));
                }
                if class_of[v as usize] != u16::MAX {
                    return Err(Error::BadPartition(format!("vertex {v} appears twice")));
                }
                class_of[v as usize] = i as u16;
            }
        }
        let mut sorted_vector = vector.clone();
        sorted_vector.sort_unstable();
        Ok(MultipartiteSpec {
            vector,
            classes,
            sorted_vector,
            class_of,
        })
    }

    pub fn n(&self) -> u16 {
        self.class_of.len() as u16
    }

    pub fn vector(&self) -> &[u8] {
        &self.vector
    }

    pub fn classes(&self) -> &[Vec<u16>] {
        &self.classes
    }

    /// Does the triple's class-intersection profile match the vector up to
    /// permutation? Decided by comparing sorted multisets.
    pub fn admits(&self, a: u16, b: u16, c: u16) -> bool {
        let mut profile = vec![0u8; self.classes.len()];
        for v in [a, b, c] {
            profile[self.class_of[v as usize] as usize] += 1;
        }
        profile.sort_unstable();
        profile == self.sorted_vector
    }
}

pub fn build_multipartite(spec: &MultipartiteSpec) -> Result<Hypergraph3> {
    let n = spec.n();
    let mut h = Hypergraph3::new(n)?;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if spec.admits(a, b, c) {
                    h.insert(a, b, c)?;
                }
            }
        }
    }
    Ok(h)
}

/// E(h) minus the complete multipartite hypergraph's edges.
pub fn bad_edges(h: &Hypergraph3, spec: &MultipartiteSpec) -> Result<EdgeSet> {
    if spec.n() != h.n() {
        return Err(Error::BadPartition(format!(
            "spec covers {} vertices, host has {}",
            spec.n(),
            h.n()
        )));
    }
    let mut bad = EdgeSet::new(h.edge_set().universe());
    for r in h.edge_ranks() {
        let (a, b, c) = triples::unrank(r);
        if !spec.admits(a, b, c) {
            bad.insert(r);
        }
    }
    Ok(bad)
}

/// Link graph of an apex: pairs {u,w} with {apex,u,w} a host edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkGraph {
    pub apex: u16,
    pub graph: SimpleGraph,
}

pub fn link_graph(h: &Hypergraph3, v: u16) -> Result<LinkGraph> {
    if v >= h.n() {
        return Err(Error::VertexOutOfRange {
            v: v as usize,
            n: h.n() as usize,
        });
    }
    let mut g = SimpleGraph::new(h.n());
    for (a, b, c) in h.triples() {
        if a == v {
            g.insert_edge(b, c)?;
        } else if b == v {
            g.insert_edge(a, c)?;
        } else if c == v {
            g.insert_edge(a, b)?;
        }
    }
    Ok(LinkGraph { apex: v, graph: g })
}

/// Splits E(h) into (crossing, noncrossing) with respect to a bipartition.
pub fn split_crossing(h: &Hypergraph3, p: &Bipartition) -> Result<(EdgeSet, EdgeSet)> {
    if p.n() != h.n() {
        return Err(Error::BadPartition(format!(
            "partition covers {} vertices, host has {}",
            p.n(),
            h.n()
        )));
    }
    let in_a = p.in_a_mask();
    let mut crossing = EdgeSet::new(h.edge_set().universe());
    let mut noncrossing = EdgeSet::new(h.edge_set().universe());
    for r in h.edge_ranks() {
        let (a, b, c) = triples::unrank(r);
        let cnt = [a, b, c]
            .iter()
            .filter(|&&v| in_a[v as usize])
            .count();
        if cnt == 0 || cnt == 3 {
            noncrossing.insert(r);
        } else {
            crossing.insert(r);
        }
    }
    Ok((crossing, noncrossing))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(build_complete(0).unwrap().edge_count(), 0);
        assert_eq!(build_complete(3).unwrap().edge_count(), 1);
        assert_eq!(build_complete(7).unwrap().edge_count(), 35);
    }

    #[test]
    fn bn_edge_counts() {
        assert_eq!(build_bn(2).unwrap().0.edge_count(), 0);
        assert_eq!(build_bn(3).unwrap().0.edge_count(), 1);
        assert_eq!(build_bn(7).unwrap().0.edge_count(), 30);
        assert_eq!(build_bn(8).unwrap().0.edge_count(), 48);
    }

    #[test]
    fn bn_closed_form_matches_construction() {
        for n in 0..=40u16 {
            assert_eq!(
                bn_edge_count(n),
                build_bn(n).unwrap().0.edge_count() as u64,
                "n={n}"
            );
        }
        assert_eq!(bn_edge_count(9), 70);
        assert_eq!(bn_edge_count(16), 448);
    }

    #[test]
    fn bn_partition_is_low_ids() {
        let (_, p) = build_bn(7).unwrap();
        assert_eq!(p.part_a(), &[0, 1, 2, 3]);
        assert_eq!(p.part_b(), &[4, 5, 6]);
    }

    #[test]
    fn bn_has_no_noncrossing_edges() {
        let (h, p) = build_bn(9).unwrap();
        let (crossing, noncrossing) = split_crossing(&h, &p).unwrap();
        assert_eq!(noncrossing.len(), 0);
        assert_eq!(crossing.len(), h.edge_count());
    }

    #[test]
    fn multipartite_balanced_21_is_bn() {
        for n in [4u16, 7, 8, 11] {
            let a = (n + 1) / 2;
            let spec = MultipartiteSpec::new(
                vec![2, 1],
                vec![(0..a).collect(), (a..n).collect()],
            )
            .unwrap();
            let h = build_multipartite(&spec).unwrap();
            assert_eq!(h, build_bn(n).unwrap().0, "n={n}");
        }
    }

    #[test]
    fn multipartite_single_class_is_complete() {
        let spec = MultipartiteSpec::new(vec![3], vec![(0..5).collect()]).unwrap();
        assert_eq!(build_multipartite(&spec).unwrap(), build_complete(5).unwrap());
    }

    #[test]
    fn multipartite_111_product_count() {
        let spec = MultipartiteSpec::new(
            vec![1, 1, 1],
            vec![vec![0, 1], vec![2, 3], vec![4, 5]],
        )
        .unwrap();
        assert_eq!(build_multipartite(&spec).unwrap().edge_count(), 8);
    }

    #[test]
    fn multipartite_rejects_bad_vector() {
        assert!(MultipartiteSpec::new(vec![2, 2], vec![vec![0], vec![1]]).is_err());
    }

    #[test]
    fn bad_edges_k6_two_within_class() {
        let h = build_complete(6).unwrap();
        let spec = MultipartiteSpec::new(
            vec![2, 1],
            vec![vec![0, 1, 2], vec![3, 4, 5]],
        )
        .unwrap();
        let bad = bad_edges(&h, &spec).unwrap();
        assert_eq!(bad.len(), 2);
    }

    #[test]
    fn bad_edges_bn_own_spec_empty() {
        let (h, p) = build_bn(8).unwrap();
        let spec =
            MultipartiteSpec::new(vec![2, 1], vec![p.part_a().to_vec(), p.part_b().to_vec()])
                .unwrap();
        assert!(bad_edges(&h, &spec).unwrap().is_empty());
    }

    #[test]
    fn link_of_complete_is_complete_graph() {
        let h = build_complete(5).unwrap();
        let link = link_graph(&h, 0).unwrap();
        assert_eq!(link.graph.edge_count(), 6);
    }

    #[test]
    fn link_of_bn8_has_18_edges() {
        let (h, _) = build_bn(8).unwrap();
        for v in 0..8 {
            assert_eq!(link_graph(&h, v).unwrap().graph.edge_count(), 18);
        }
    }

    #[test]
    fn min_degree_facts() {
        let (h, _) = build_bn(8).unwrap();
        assert_eq!(h.min_degree(), 18);
        assert!(h.min_degree_meets_bn_threshold()); // 18 >= 16

        let k7 = build_complete(7).unwrap();
        assert_eq!(h.degree(0).unwrap(), 18);
        assert_eq!(k7.min_degree(), 15);

        let empty = Hypergraph3::new(5).unwrap();
        assert_eq!(empty.min_degree(), 0);
        assert!(!empty.min_degree_meets_bn_threshold());
    }

    #[test]
    fn degree_sum_is_three_times_edges() {
        let (h, _) = build_bn(11).unwrap();
        let total: u64 = h.degrees().iter().sum();
        assert_eq!(total as usize, 3 * h.edge_count());
    }

    #[test]
    fn split_crossing_k6_half_split() {
        let h = build_complete(6).unwrap();
        let p = Bipartition::new(6, vec![0, 1, 2]).unwrap();
        let (crossing, noncrossing) = split_crossing(&h, &p).unwrap();
        assert_eq!(noncrossing.len(), 2);
        assert_eq!(crossing.len() + noncrossing.len(), h.edge_count());
    }

    #[test]
    fn split_all_in_one_class() {
        let h = build_complete(6).unwrap();
        let p = Bipartition::new(6, (0..6).collect()).unwrap();
        let (crossing, noncrossing) = split_crossing(&h, &p).unwrap();
        assert_eq!(crossing.len(), 0);
        assert_eq!(noncrossing.len(), 20);
    }

    #[test]
    fn rejects_degenerate_and_out_of_range() {
        let mut h = Hypergraph3::new(4).unwrap();
        assert!(h.insert(1, 1, 2).is_err());
        assert!(h.insert(0, 1, 4).is_err());
        assert!(Hypergraph3::from_triples(4, [(0, 1, 2), (2, 1, 0)]).is_err());
    }
}
