//! Fano plane copies inside a 3-uniform host.
//!
//! The canonical labeling takes the lines of PG(2,2) as translates of the
//! difference set {0,1,3} mod 7, each sorted ascending. Copy enumeration is
//! a backtracking embedding search; an unpruned injection counter over all
//! placements of the 7 points serves as an independent oracle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;
use crate::triples;

/// Canonical lines, indexed 0..6; this order is the edge order of pattern
/// descriptions.
pub const FANO_EDGES: [[u16; 3]; 7] = [
    [0, 1, 3],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [0, 4, 5],
    [1, 5, 6],
    [0, 2, 6],
];

/// Order of the automorphism group of the Fano plane.
pub const FANO_AUT_COUNT: u64 = 168;

/// The canonical Fano plane as a hypergraph on 7 vertices.
pub fn fano_hypergraph() -> Hypergraph3 {
    Hypergraph3::from_triples(7, FANO_EDGES.map(|[a, b, c]| (a, b, c)))
        .expect("canonical lines are valid")
}

fn is_line(t: [u16; 3]) -> bool {
    FANO_EDGES.contains(&t)
}

fn line_index(t: [u16; 3]) -> Option<u8> {
    FANO_EDGES.iter().position(|l| *l == t).map(|i| i as u8)
}

/// All vertex permutations of 0..7 preserving the line set, in lexicographic
/// order. The identity comes first; the list has `FANO_AUT_COUNT` entries.
pub fn fano_automorphisms() -> Vec<[u16; 7]> {
    let mut out = Vec::new();
    let mut perm = [0u16; 7];
    let mut used = [false; 7];
    fn rec(pos: usize, perm: &mut [u16; 7], used: &mut [bool; 7], out: &mut Vec<[u16; 7]>) {
        if pos == 7 {
            let ok = FANO_EDGES.iter().all(|&[a, b, c]| {
                let mut img = [perm[a as usize], perm[b as usize], perm[c as usize]];
                img.sort_unstable();
                is_line(img)
            });
            if ok {
                out.push(*perm);
            }
            return;
        }
        for v in 0..7u16 {
            if !used[v as usize] {
                used[v as usize] = true;
                perm[pos] = v;
                rec(pos + 1, perm, used, out);
                used[v as usize] = false;
            }
        }
    }
    rec(0, &mut perm, &mut used, &mut out);
    out
}

/// How an automorphism permutes line indices: entry i is the index of the
/// image of line i.
pub fn automorphism_edge_action(perm: &[u16; 7]) -> [u8; 7] {
    let mut action = [0u8; 7];
    for (i, &[a, b, c]) in FANO_EDGES.iter().enumerate() {
        let mut img = [perm[a as usize], perm[b as usize], perm[c as usize]];
        img.sort_unstable();
        action[i] = line_index(img).expect("automorphism must map lines to lines");
    }
    action
}

/// One copy: a representative embedding of the canonical points plus the
/// copy's edge set as ascending ranks. Distinct copies have distinct edge
/// sets; the representative is the lexicographically smallest embedding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanoCopy {
    pub vertices: [u16; 7],
    pub edge_ranks: [u32; 7],
}

impl FanoCopy {
    /// Rank of the image of line i under the representative embedding, for
    /// each canonical line index i.
    pub fn line_ranks(&self) -> [u32; 7] {
        line_ranks_of(&self.vertices)
    }
}

pub fn line_ranks_of(verts: &[u16; 7]) -> [u32; 7] {
    let mut ranks = [0u32; 7];
    for (i, &[a, b, c]) in FANO_EDGES.iter().enumerate() {
        ranks[i] = triples::rank_unsorted(
            verts[a as usize],
            verts[b as usize],
            verts[c as usize],
        );
    }
    ranks
}

fn incidence_lists(h: &Hypergraph3) -> Vec<Vec<u32>> {
    let mut inc = vec![Vec::new(); h.n() as usize];
    for r in h.edge_ranks() {
        let (a, b, c) = triples::unrank(r);
        inc[a as usize].push(r);
        inc[b as usize].push(r);
        inc[c as usize].push(r);
    }
    inc
}

#[inline]
fn other_two(a: u16, b: u16, c: u16, v: u16) -> (u16, u16) {
    if a == v {
        (b, c)
    } else if b == v {
        (a, c)
    } else {
        (a, b)
    }
}

#[inline]
fn third_of(a: u16, b: u16, c: u16, u: u16, v: u16) -> Option<u16> {
    let has = |x: u16| x == a || x == b || x == c;
    if !has(u) || !has(v) {
        return None;
    }
    Some(a ^ b ^ c ^ u ^ v)
}

/// Visits every injective embedding of the canonical points whose image of
/// line 0 is one of `l0_ranks`. The callback returns true to stop early;
/// the function reports whether it stopped.
fn for_each_embedding<F>(h: &Hypergraph3, l0_ranks: &[u32], inc: &[Vec<u32>], f: &mut F) -> bool
where
    F: FnMut(&[u16; 7]) -> bool,
{
    for &e0 in l0_ranks {
        let (x, y, z) = triples::unrank(e0);
        for [i0, i1, i3] in [
            [x, y, z],
            [x, z, y],
            [y, x, z],
            [y, z, x],
            [z, x, y],
            [z, y, x],
        ] {
            // line 1 = {1,2,4}: pick a host edge through img(1)
            for &e1 in &inc[i1 as usize] {
                let (a, b, c) = triples::unrank(e1);
                let (u, v) = other_two(a, b, c, i1);
                for (i2, i4) in [(u, v), (v, u)] {
                    if i2 == i0 || i2 == i3 || i4 == i0 || i4 == i3 {
                        continue;
                    }
                    // line 2 = {2,3,5}: third vertex over the pair (img2,img3)
                    for &e2 in &inc[i2 as usize] {
                        let (a2, b2, c2) = triples::unrank(e2);
                        let i5 = match third_of(a2, b2, c2, i2, i3) {
                            Some(w) => w,
                            None => continue,
                        };
                        if i5 == i0 || i5 == i1 || i5 == i4 {
                            continue;
                        }
                        // line 3 = {3,4,6}: third vertex over (img3,img4)
                        for &e3 in &inc[i3 as usize] {
                            let (a3, b3, c3) = triples::unrank(e3);
                            let i6 = match third_of(a3, b3, c3, i3, i4) {
                                Some(w) => w,
                                None => continue,
                            };
                            if i6 == i0 || i6 == i1 || i6 == i2 || i6 == i5 {
                                continue;
                            }
                            // remaining lines {0,4,5}, {1,5,6}, {0,2,6}
                            if h.contains_rank(triples::rank_unsorted(i0, i4, i5))
                                && h.contains_rank(triples::rank_unsorted(i1, i5, i6))
                                && h.contains_rank(triples::rank_unsorted(i0, i2, i6))
                                && f(&[i0, i1, i2, i3, i4, i5, i6])
                            {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

fn collect_copies(h: &Hypergraph3, l0_ranks: &[u32]) -> Vec<FanoCopy> {
    let inc = incidence_lists(h);
    let mut map: BTreeMap<[u32; 7], [u16; 7]> = BTreeMap::new();
    for_each_embedding(h, l0_ranks, &inc, &mut |verts| {
        let mut key = line_ranks_of(verts);
        key.sort_unstable();
        map.entry(key)
            .and_modify(|best| {
                if verts < best {
                    *best = *verts;
                }
            })
            .or_insert(*verts);
        false
    });
    map.into_iter()
        .map(|(edge_ranks, vertices)| FanoCopy {
            vertices,
            edge_ranks,
        })
        .collect()
}

/// All Fano copies of the host, sorted by edge set.
pub fn enumerate_fano(h: &Hypergraph3) -> Vec<FanoCopy> {
    collect_copies(h, &h.edge_rank_vec())
}

pub fn is_fano_free(h: &Hypergraph3) -> bool {
    if h.edge_count() < 7 {
        return true;
    }
    let inc = incidence_lists(h);
    !for_each_embedding(h, &h.edge_rank_vec(), &inc, &mut |_| true)
}

/// Visits labeled embeddings (images of the canonical vertex labeling,
/// not deduplicated copies) until the callback returns true; reports
/// whether any call did. Positions map through FANO_EDGES, so callers can
/// test per-line conditions that depend on which line lands where.
pub fn for_each_labeled_embedding<F>(h: &Hypergraph3, f: &mut F) -> bool
where
    F: FnMut(&[u16; 7]) -> bool,
{
    if h.edge_count() < 7 {
        return false;
    }
    let inc = incidence_lists(h);
    for_each_embedding(h, &h.edge_rank_vec(), &inc, f)
}

/// Copies whose edge set contains the given host edge. Sound because the
/// automorphism group is transitive on lines: any copy through the edge has
/// an embedding sending line 0 there.
pub fn through_edge(h: &Hypergraph3, a: u16, b: u16, c: u16) -> Result<Vec<FanoCopy>> {
    let r = triples::rank_unsorted(a, b, c);
    if !h.contains_rank(r) {
        return Err(Error::EdgeNotInHost {
            a: a as usize,
            b: b as usize,
            c: c as usize,
        });
    }
    Ok(collect_copies(h, &[r]))
}

/// Unpruned oracle: counts injective placements of the 7 points with all
/// lines present, then divides by the automorphism count.
pub struct InjectionCount {
    pub injections: u64,
    pub copies: u64,
}

pub fn count_fano_injections(h: &Hypergraph3) -> Result<InjectionCount> {
    if h.n() > 10 {
        return Err(Error::TooLarge(format!(
            "injection oracle limited to n<=10, got {}",
            h.n()
        )));
    }
    let n = h.n();
    let mut img = [0u16; 7];
    let mut used = vec![false; n as usize];
    let mut injections = 0u64;

    fn rec(
        h: &Hypergraph3,
        n: u16,
        pos: usize,
        img: &mut [u16; 7],
        used: &mut [bool],
        count: &mut u64,
    ) {
        if pos == 7 {
            let ok = FANO_EDGES.iter().all(|&[a, b, c]| {
                h.contains_rank(triples::rank_unsorted(
                    img[a as usize],
                    img[b as usize],
                    img[c as usize],
                ))
            });
            if ok {
                *count += 1;
            }
            return;
        }
        for v in 0..n {
            if !used[v as usize] {
                used[v as usize] = true;
                img[pos] = v;
                rec(h, n, pos + 1, img, used, count);
                used[v as usize] = false;
            }
        }
    }

    rec(h, n, 0, &mut img, &mut used, &mut injections);
    if injections % FANO_AUT_COUNT != 0 {
        return Err(Error::Internal(format!(
            "injection count {injections} not divisible by {FANO_AUT_COUNT}"
        )));
    }
    Ok(InjectionCount {
        injections,
        copies: injections / FANO_AUT_COUNT,
    })
}
