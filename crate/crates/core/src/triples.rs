//! Colexicographic ranking of sorted vertex triples.
//!
//! A triple a < b < c has rank C(a,1) + C(b,2) + C(c,3). Ranks 0..C(n,3)
//! enumerate the triple universe of an n-vertex host, and the rank of a
//! triple does not depend on n, so edge bitsets are portable across runs
//! and host sizes.

/// Largest supported vertex count; keeps C(n,3) within u32 ranks.
pub const MAX_N: u16 = 1300;

/// C(n,2) for small n.
#[inline]
pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// C(n,3) for small n.
#[inline]
pub fn binom3(n: u64) -> u64 {
    if n < 3 {
        0
    } else {
        n * (n - 1) / 2 * (n - 2) / 3
    }
}

/// Number of triples on n vertices.
#[inline]
pub fn universe_size(n: u16) -> u32 {
    binom3(n as u64) as u32
}

/// Colex rank of a sorted triple a < b < c.
#[inline]
pub fn rank(a: u16, b: u16, c: u16) -> u32 {
    debug_assert!(a < b && b < c);
    (a as u64 + binom2(b as u64) + binom3(c as u64)) as u32
}

/// Rank of an unsorted (distinct) triple.
#[inline]
pub fn rank_unsorted(mut a: u16, mut b: u16, mut c: u16) -> u32 {
    if a > b {
        core::mem::swap(&mut a, &mut b);
    }
    if b > c {
        core::mem::swap(&mut b, &mut c);
    }
    if a > b {
        core::mem::swap(&mut a, &mut b);
    }
    rank(a, b, c)
}

/// Inverse of `rank`.
pub fn unrank(rank: u32) -> (u16, u16, u16) {
    let r = rank as u64;
    // Largest c with C(c,3) <= r; ranks stay small so a linear-free search
    // via floating seed plus correction is unnecessary at these sizes.
    let mut c = 2u64;
    while binom3(c + 1) <= r {
        c += 1;
    }
    let rem = r - binom3(c);
    let mut b = 1u64;
    while binom2(b + 1) <= rem {
        b += 1;
    }
    let a = rem - binom2(b);
    debug_assert!(a < b && b < c);
    (a as u16, b as u16, c as u16)
}
