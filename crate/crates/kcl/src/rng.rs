//! Seed-splitting: every experiment draws its randomness from named streams
//! derived from a single root seed, so runs are reproducible regardless of
//! which subset of work executes or in what order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// A root seed plus a derivation path. Child streams are independent for
/// distinct (label, index) pairs and identical across runs for equal pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedTree {
    root: u64,
}

impl SeedTree {
    pub fn new(root: u64) -> Self {
        SeedTree { root }
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// Named stream, e.g. `tree.stream("poly-experiment")`.
    pub fn stream(&self, label: &str) -> ChaCha12Rng {
        self.substream(label, 0)
    }

    /// Indexed stream under a name, for per-trial / per-worker generators.
    pub fn substream(&self, label: &str, index: u64) -> ChaCha12Rng {
        let mut key = [0u8; 32];
        let mut state = self
            .root
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(fnv1a(label.as_bytes()))
            .wrapping_add(index.wrapping_mul(0xbf58_476d_1ce4_e5b9));
        for chunk in key.chunks_mut(8) {
            state = splitmix64(state);
            chunk.copy_from_slice(&state.to_le_bytes());
        }
        ChaCha12Rng::from_seed(key)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Standard normal draw via Box-Muller. Deterministic given the generator
/// state; uses exactly two uniforms per call.
pub fn standard_normal<R: rand::Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen();
        let v: f64 = rng.gen();
        if u > f64::MIN_POSITIVE {
            let r = (-2.0 * u.ln()).sqrt();
            return r * (2.0 * std::f64::consts::PI * v).cos();
        }
    }
}
