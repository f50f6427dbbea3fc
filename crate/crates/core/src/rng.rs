//! The single seeded generator used throughout the crate.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64(seed)` and a
//! caller-chosen stream number, so independent consumers of one seed never
//! share a sequence. Range reduction, floats and shuffles are defined here
//! rather than delegated, which keeps outputs stable across dependency
//! upgrades:
//!
//! * `below(b)`: Lemire's multiply-shift with rejection, unbiased.
//! * `unit_f64()`: top 53 bits of a word scaled by 2^-53, in `[0, 1)`.
//! * `shuffle`: Fisher-Yates from the back, `j = below(i + 1)`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream numbers, one per consumer.
pub mod streams {
    pub const TIE_BREAK: u64 = 1;
    pub const DENSE: u64 = 2;
    pub const SPARSE: u64 = 3;
    pub const TREE: u64 = 4;
    pub const CHORDAL: u64 = 5;
}

#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..bound`.
    ///
    /// # Panics
    /// If `bound` is zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let mut product = u128::from(self.next_u64()) * u128::from(bound);
        let mut low = product as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                product = u128::from(self.next_u64()) * u128::from(bound);
                low = product as u64;
            }
        }
        (product >> 64) as u64
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `true` with probability `p`; `p >= 1` is always true.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        p >= 1.0 || self.unit_f64() < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }

    /// Uniformly random permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        self.shuffle(&mut p);
        p
    }
}

/// SplitMix64 finalizer, used to derive independent-looking priorities.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
