//! Deterministic seeded randomness.
//!
//! Every stochastic decision in the crate draws from a [`RandomStream`].
//! The generator is pinned to ChaCha8: its keystream is fixed by the cipher
//! specification, so identical seeds produce identical draw sequences on
//! every platform and build. All reductions from the raw keystream (unit
//! floats, bounded integers, coins) are implemented here rather than
//! borrowed from a library, which keeps the draw sequence under this
//! crate's control. CSV byte-determinism depends on that.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Seeded random stream. One stream is owned by exactly one trial; child
/// streams for trial `i` are a pure function of `(master seed, i)`.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer. Used to expand a 64-bit seed into a ChaCha key and
/// to mix (seed, index) pairs into child seeds.
fn split_mix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        let mut state = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&split_mix64(&mut state).to_le_bytes());
        }
        RandomStream { seed, rng: ChaCha8Rng::from_seed(key) }
    }

    /// Child stream for `index`, derived from the stored seed only. Calling
    /// this does not advance or depend on the parent's draw position.
    pub fn child(&self, index: u64) -> Self {
        RandomStream::new(Self::child_seed(self.seed, index))
    }

    /// The seed a child stream for `index` would receive.
    pub fn child_seed(master_seed: u64, index: u64) -> u64 {
        let mut state = master_seed ^ index.wrapping_mul(GOLDEN).rotate_left(32);
        split_mix64(&mut state)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform float in `[0, 1)` with 53 bits of precision.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fair coin.
    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// True with probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit_f64() < p
    }

    /// Uniform integer in `[0, bound)`, unbiased via rejection sampling.
    pub fn index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "index bound must be positive");
        let bound = bound as u64;
        // Reject the low `2^64 mod bound` values so every residue is hit
        // by the same number of raw words.
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let v = self.next_u64();
            if v >= threshold {
                return (v % bound) as usize;
            }
        }
    }

    /// `count` distinct values from `[0, bound)`, uniformly without
    /// replacement (partial Fisher-Yates).
    pub fn sample_distinct(&mut self, bound: usize, count: usize) -> Vec<usize> {
        assert!(count <= bound, "cannot sample {count} distinct from {bound}");
        let mut pool: Vec<usize> = (0..bound).collect();
        for i in 0..count {
            let j = i + self.index(bound - i);
            pool.swap(i, j);
        }
        pool.truncate(count);
        pool
    }
}
