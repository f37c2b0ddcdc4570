//! Deterministic, splittable random streams used by every sampler.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded pseudo-random stream with deterministic splitting.
///
/// The same seed and the same call sequence always produce the same outputs.
/// [`RngStream::split`] derives a child stream from the parent seed and a key
/// without consuming any parent state, so the draws of one substream cannot
/// perturb another.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Derive an independent child stream keyed by `key`.
    ///
    /// Pure in the parent: splitting does not advance the parent stream, and
    /// equal (seed, key) pairs always yield the same child.
    pub fn split(&self, key: u64) -> RngStream {
        RngStream::new(mix64(self.seed ^ mix64(key.wrapping_add(0x9e37_79b9_7f4a_7c15))))
    }

    /// Uniform index in `[0, bound)`. `bound` must be positive.
    pub fn index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "index() needs a positive bound");
        self.rng.random_range(0..bound)
    }

    /// Fisher-Yates shuffle driven by this stream.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

/// SplitMix64 finalizer; full-avalanche mixing for split keys.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
