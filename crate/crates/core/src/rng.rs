//! Counter-based random streams and complex Gaussian channel draws.
//!
//! Every Monte Carlo run is cut into fixed-size chunks; chunk `i` draws from
//! ChaCha8 stream `i` under the run seed. A chunk's numbers therefore do not
//! depend on which thread evaluates it or in what order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::FRAC_1_SQRT_2;

/// Samples per chunk. Part of the reproducibility contract: changing it
/// changes every Monte Carlo output.
pub const CHUNK_SIZE: usize = 4096;

/// Stream reserved for bootstrap resampling, far above any chunk index.
pub(crate) const BOOTSTRAP_STREAM_BASE: u64 = 1 << 62;

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `(start, len)` for each chunk covering `total` samples.
pub fn chunks(total: usize) -> Vec<(usize, usize)> {
    (0..total.div_ceil(CHUNK_SIZE))
        .map(|c| {
            let start = c * CHUNK_SIZE;
            (start, CHUNK_SIZE.min(total - start))
        })
        .collect()
}

/// Circularly symmetric complex Gaussian with unit variance (1/2 per real component).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * FRAC_1_SQRT_2, im * FRAC_1_SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_distinct_and_repeatable() {
        let a: u64 = stream(7, 0).random();
        let b: u64 = stream(7, 1).random();
        let c: u64 = stream(7, 0).random();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn chunk_cover() {
        let c = chunks(2 * CHUNK_SIZE + 5);
        assert_eq!(c.len(), 3);
        assert_eq!(c[2], (2 * CHUNK_SIZE, 5));
        assert!(chunks(0).is_empty());
    }

    #[test]
    fn gaussian_has_unit_power() {
        let mut rng = stream(11, 3);
        let n = 200_000;
        let p: f64 = (0..n)
            .map(|_| complex_gaussian(&mut rng).norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((p - 1.0).abs() < 0.02, "{p}");
    }
}
