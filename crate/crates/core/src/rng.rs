//! Counter-based deterministic random generator.
//!
//! The generator is a pure function of `(key, counter)`, so streams are
//! reproducible bit-for-bit across platforms and easy to re-implement in
//! other languages. The construction is the SplitMix64 finalizer applied to
//! an affine counter sequence:
//!
//! ```text
//! output_i = mix(key + i * 0x9E3779B97F4A7C15)        (wrapping arithmetic)
//! mix(z):  z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//!          z ^= z >> 27; z *= 0x94D049BB133111EB;
//!          z ^= z >> 31
//! ```
//!
//! Independent substreams (one per trajectory) use
//! `key = mix(master) XOR mix(index + 0x9E3779B97F4A7C15)`.
//!
//! Not cryptographically secure; simulation use only.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_M1: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX_M2: u64 = 0x94D0_49BB_1331_11EB;

/// SplitMix64 finalizer.
#[inline]
pub fn mix(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(MIX_M1);
    z ^= z >> 27;
    z = z.wrapping_mul(MIX_M2);
    z ^ (z >> 31)
}

/// Deterministic counter-based generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(key: u64) -> Self {
        Self { key, counter: 0 }
    }

    /// Substream `index` of a master seed. Streams for distinct indices are
    /// statistically independent and may be consumed in any order.
    pub fn for_stream(master_seed: u64, index: u64) -> Self {
        Self::new(mix(master_seed) ^ mix(index.wrapping_add(GOLDEN)))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform on the half-open-at-zero interval `(0, 1]`.
    ///
    /// Maps the top 53 bits to `(k + 1) * 2^-53`, `k in [0, 2^53)`. Never
    /// returns zero, so `-ln(u)` is always finite.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        (((self.next_u64() >> 11) + 1) as f64) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform on `(lo, hi]`.
    #[inline]
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Unit-rate exponential variate `-ln(U)`, `U` uniform on `(0,1]`.
    #[inline]
    pub fn exponential(&mut self) -> f64 {
        -self.uniform().ln()
    }

    /// Index uniform on `0..n`. Modulo bias is negligible for the small `n`
    /// used here.
    #[inline]
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_deterministic() {
        let mut a = CounterRng::for_stream(42, 7);
        let mut b = CounterRng::for_stream(42, 7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn distinct_streams_differ() {
        let mut a = CounterRng::for_stream(42, 0);
        let mut b = CounterRng::for_stream(42, 1);
        let same = (0..64).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(same, 0);
    }

    #[test]
    fn uniform_is_in_half_open_interval() {
        let mut rng = CounterRng::new(1);
        for _ in 0..10_000 {
            let u = rng.uniform();
            assert!(u > 0.0 && u <= 1.0);
        }
    }

    #[test]
    fn uniform_mean_is_roughly_half() {
        let mut rng = CounterRng::new(3);
        let n = 100_000;
        let s: f64 = (0..n).map(|_| rng.uniform()).sum();
        assert!((s / n as f64 - 0.5).abs() < 0.005);
    }

    #[test]
    fn exponential_mean_is_roughly_one() {
        let mut rng = CounterRng::new(9);
        let n = 100_000;
        let s: f64 = (0..n).map(|_| rng.exponential()).sum();
        assert!((s / n as f64 - 1.0).abs() < 0.02);
    }
}
