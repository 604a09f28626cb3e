//! Deterministic randomness: a u64 seed is expanded through SplitMix64 into
//! a ChaCha12 key. Per-sample generators use the ChaCha stream counter, so
//! sample i is reproducible regardless of how samples are batched across
//! threads.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// SplitMix64 step, used only for key expansion.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Base generator for a seed; stream 0.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    let mut sm = SplitMix64::new(seed);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        chunk.copy_from_slice(&sm.next_u64().to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}

/// Generator for one logical stream (e.g. one Monte Carlo sample index).
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(stream);
    rng
}

/// Unbiased uniform draw from [0, bound) by multiply-shift with rejection.
pub fn uniform_u32<R: RngCore>(rng: &mut R, bound: u32) -> u32 {
    debug_assert!(bound > 0);
    let mut x = rng.next_u32();
    let mut m = (x as u64) * (bound as u64);
    let mut lo = m as u32;
    if lo < bound {
        let threshold = bound.wrapping_neg() % bound;
        while lo < threshold {
            x = rng.next_u32();
            m = (x as u64) * (bound as u64);
            lo = m as u32;
        }
    }
    (m >> 32) as u32
}

/// Unbiased uniform draw from [0, bound).
pub fn uniform_u64<R: RngCore>(rng: &mut R, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let mut x = rng.next_u64();
    let mut m = (x as u128) * (bound as u128);
    let mut lo = m as u64;
    if lo < bound {
        let threshold = bound.wrapping_neg() % bound;
        while lo < threshold {
            x = rng.next_u64();
            m = (x as u128) * (bound as u128);
            lo = m as u64;
        }
    }
    (m >> 64) as u64
}

/// Fisher-Yates shuffle.
pub fn shuffle<R: RngCore, T>(rng: &mut R, xs: &mut [T]) {
    for i in (1..xs.len()).rev() {
        let j = uniform_u64(rng, (i + 1) as u64) as usize;
        xs.swap(i, j);
    }
}
