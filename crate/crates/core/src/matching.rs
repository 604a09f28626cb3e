//! Simple graphs and maximum cardinality matching.
//!
//! Two independent routes are kept on purpose: an augmenting-path algorithm
//! with blossom contraction, and an exhaustive branch-and-bound over edge
//! subsets for small graphs. Tests require them to agree.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices 0..n, edges stored as normalized
/// (min,max) pairs in sorted order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: u16,
    edges: BTreeSet<(u16, u16)>,
}

impl SimpleGraph {
    pub fn new(n: u16) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(n: u16, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u16, u16)>,
    {
        let mut g = SimpleGraph::new(n);
        for (u, w) in edges {
            if !g.insert_edge(u, w)? {
                return Err(Error::DuplicateEdge {
                    a: u as usize,
                    b: w as usize,
                    c: w as usize,
                });
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn insert_edge(&mut self, u: u16, w: u16) -> Result<bool> {
        if u == w {
            return Err(Error::DegenerateTriple {
                a: u as usize,
                b: w as usize,
                c: w as usize,
            });
        }
        for v in [u, w] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    v: v as usize,
                    n: self.n as usize,
                });
            }
        }
        Ok(self.edges.insert((u.min(w), u.max(w))))
    }

    pub fn contains_edge(&self, u: u16, w: u16) -> bool {
        self.edges.contains(&(u.min(w), u.max(w)))
    }

    pub fn remove_edge(&mut self, u: u16, w: u16) -> bool {
        self.edges.remove(&(u.min(w), u.max(w)))
    }

    /// Edges as (min,max) pairs in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        self.edges.iter().copied()
    }

    /// Neighbor lists in ascending order per vertex.
    pub fn adjacency(&self) -> Vec<Vec<u16>> {
        let mut adj = vec![Vec::new(); self.n as usize];
        for &(u, w) in &self.edges {
            adj[u as usize].push(w);
            adj[w as usize].push(u);
        }
        adj
    }
}

fn lca(matched: &[i32], base: &[usize], parent: &[i32], a: usize, b: usize) -> usize {
    let mut used = vec![false; base.len()];
    let mut a = a;
    loop {
        a = base[a];
        used[a] = true;
        if matched[a] == -1 {
            break;
        }
        a = parent[matched[a] as usize] as usize;
    }
    let mut b = b;
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[matched[b] as usize] as usize;
    }
}

fn mark_path(
    matched: &[i32],
    base: &[usize],
    blossom: &mut [bool],
    parent: &mut [i32],
    mut v: usize,
    b: usize,
    mut child: i32,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[matched[v] as usize]] = true;
        parent[v] = child;
        child = matched[v];
        v = parent[matched[v] as usize] as usize;
    }
}

fn find_path(adj: &[Vec<u16>], matched: &mut [i32], parent: &mut [i32], root: usize) -> i32 {
    let n = adj.len();
    let mut used = vec![false; n];
    for x in parent.iter_mut() {
        *x = -1;
    }
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::new();
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            let to = to as usize;
            if base[v] == base[to] || matched[v] == to as i32 {
                continue;
            }
            if to == root || (matched[to] != -1 && parent[matched[to] as usize] != -1) {
                // odd cycle: contract the blossom to its base
                let curbase = lca(matched, &base, parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(matched, &base, &mut blossom, parent, v, curbase, to as i32);
                mark_path(matched, &base, &mut blossom, parent, to, curbase, v as i32);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = curbase;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == -1 {
                parent[to] = v as i32;
                if matched[to] == -1 {
                    return to as i32;
                }
                used[matched[to] as usize] = true;
                queue.push_back(matched[to] as usize);
            }
        }
    }
    -1
}

/// Maximum cardinality matching; entry v holds v's partner. Deterministic:
/// roots are tried in ascending vertex order over sorted adjacency lists.
pub fn maximum_matching(g: &SimpleGraph) -> Vec<Option<u16>> {
    let n = g.n() as usize;
    let adj = g.adjacency();
    let mut matched = vec![-1i32; n];
    let mut parent = vec![-1i32; n];
    for root in 0..n {
        if matched[root] != -1 {
            continue;
        }
        let mut v = find_path(&adj, &mut matched, &mut parent, root);
        while v != -1 {
            let pv = parent[v as usize];
            let ppv = matched[pv as usize];
            matched[v as usize] = pv;
            matched[pv as usize] = v;
            v = ppv;
        }
    }
    matched
        .into_iter()
        .map(|x| if x < 0 { None } else { Some(x as u16) })
        .collect()
}

pub fn matching_size(matched: &[Option<u16>]) -> usize {
    matched.iter().filter(|m| m.is_some()).count() / 2
}

pub fn maximum_matching_size(g: &SimpleGraph) -> usize {
    matching_size(&maximum_matching(g))
}

/// Pairs (u,w) of the matching, normalized and sorted.
pub fn matching_pairs(matched: &[Option<u16>]) -> Vec<(u16, u16)> {
    let mut pairs = Vec::new();
    for (v, m) in matched.iter().enumerate() {
        if let Some(w) = *m {
            if (v as u16) < w {
                pairs.push((v as u16, w));
            }
        }
    }
    pairs
}

/// Independent oracle: branch over edges with a used-vertex mask. Limited to
/// 20 edges so the endpoint remap fits a u64 mask.
pub fn maximum_matching_exhaustive(g: &SimpleGraph) -> Result<usize> {
    let edges: Vec<(u16, u16)> = g.edges().collect();
    if edges.len() > 20 {
        return Err(Error::TooLarge(format!(
            "exhaustive matching limited to 20 edges, got {}",
            edges.len()
        )));
    }
    let mut ids: Vec<u16> = edges.iter().flat_map(|&(u, w)| [u, w]).collect();
    ids.sort_unstable();
    ids.dedup();
    let compact: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(u, w)| {
            let iu = ids.binary_search(&u).unwrap() as u32;
            let iw = ids.binary_search(&w).unwrap() as u32;
            (iu, iw)
        })
        .collect();

    fn rec(edges: &[(u32, u32)], i: usize, used: u64, cnt: usize, best: &mut usize) {
        if cnt + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = cnt;
            return;
        }
        let (a, b) = edges[i];
        if used & (1 << a) == 0 && used & (1 << b) == 0 {
            rec(edges, i + 1, used | (1 << a) | (1 << b), cnt + 1, best);
        }
        rec(edges, i + 1, used, cnt, best);
    }

    let mut best = 0;
    rec(&compact, 0, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u16) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: u16) -> SimpleGraph {
        SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn matching_on_paths_and_cycles() {
        assert_eq!(maximum_matching_size(&path(2)), 1);
        assert_eq!(maximum_matching_size(&path(5)), 2);
        assert_eq!(maximum_matching_size(&path(6)), 3);
        assert_eq!(maximum_matching_size(&cycle(3)), 1);
        assert_eq!(maximum_matching_size(&cycle(5)), 2);
        assert_eq!(maximum_matching_size(&cycle(6)), 3);
    }

    #[test]
    fn matching_is_valid_pairing() {
        let g = cycle(9);
        let m = maximum_matching(&g);
        for (v, partner) in m.iter().enumerate() {
            if let Some(w) = *partner {
                assert_eq!(m[w as usize], Some(v as u16));
                assert!(g.contains_edge(v as u16, w));
            }
        }
    }

    #[test]
    fn petersen_has_perfect_matching() {
        // outer C5, inner pentagram, spokes
        let mut g = SimpleGraph::new(10);
        for i in 0..5u16 {
            g.insert_edge(i, (i + 1) % 5).unwrap();
            g.insert_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.insert_edge(i, 5 + i).unwrap();
        }
        assert_eq!(maximum_matching_size(&g), 5);
    }

    #[test]
    fn blossom_needed_case() {
        // triangle {0,1,2} with pendants 0-3 and 1-4: matching of size 2
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).unwrap();
        assert_eq!(maximum_matching_size(&g), 2);
        assert_eq!(maximum_matching_exhaustive(&g).unwrap(), 2);
    }

    #[test]
    fn exhaustive_agrees_on_small_graphs() {
        for n in [4u16, 5, 6, 7] {
            let g = cycle(n);
            assert_eq!(
                maximum_matching_size(&g),
                maximum_matching_exhaustive(&g).unwrap()
            );
        }
    }

    #[test]
    fn exhaustive_agrees_on_deterministic_random_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let n = 4 + (next() % 7) as u16;
            let mut g = SimpleGraph::new(n);
            let mut count = 0;
            while count < 12 {
                let u = (next() % n as u64) as u16;
                let w = (next() % n as u64) as u16;
                if u != w {
                    g.insert_edge(u, w).unwrap();
                }
                count += 1;
                if g.edge_count() >= 12 {
                    break;
                }
            }
            assert_eq!(
                maximum_matching_size(&g),
                maximum_matching_exhaustive(&g).unwrap(),
                "disagreement on {:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn matching_pairs_normalized() {
        let g = path(4);
        let m = maximum_matching(&g);
        let pairs = matching_pairs(&m);
        assert_eq!(pairs.len(), 2);
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = SimpleGraph::new(3);
        assert!(g.insert_edge(1, 1).is_err());
        assert!(g.insert_edge(0, 3).is_err());
    }
}
