//! Measurement-level simulation of the Bernstein-Vazirani circuit.
//!
//! Running the circuit on f and measuring yields w with probability
//! S_f(w)^2, so the whole quantum procedure compiles classically to one
//! draw from the squared-spectrum distribution. The sampler materializes
//! the exact integer law once (squared coefficients summing to 2^(2n))
//! and every draw is a uniform integer plus a binary search: no floating
//! point enters the probability law, and a point with zero coefficient
//! can never be returned.

use crate::error::{Error, Result};
use crate::spectrum::WalshSpectrum;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// A seeded stream of measurement outcomes for one fixed spectrum.
///
/// The stream is deterministic in (spectrum, seed). It is a mutable
/// value: hand it to one task at a time, or build several samplers over
/// the same spectrum for parallel runs.
#[derive(Debug, Clone)]
pub struct BvSampler {
    n: u32,
    /// cumulative[w] = sum of squared coefficients at points <= w;
    /// non-decreasing with final entry exactly 2^(2n).
    cumulative: Vec<u64>,
    rng: ChaCha12Rng,
}

impl BvSampler {
    /// Builds the cumulative law. Fails when the squared coefficients do
    /// not sum to 2^(2n), which means the spectrum was not produced by a
    /// genuine transform.
    pub fn new(spectrum: &WalshSpectrum, seed: u64) -> Result<Self> {
        let n = spectrum.var_count();
        let expected = 1u64 << (2 * n);
        let mut running = 0u64;
        let cumulative: Vec<u64> = spectrum
            .coeffs()
            .iter()
            .map(|&c| {
                running += (c as i64 * c as i64) as u64;
                running
            })
            .collect();
        if running != expected {
            return Err(Error::ParsevalViolation {
                got: running,
                expected,
            });
        }
        Ok(BvSampler {
            n,
            cumulative,
            rng: ChaCha12Rng::seed_from_u64(seed),
        })
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// One measurement: w with probability W(w)^2 / 2^(2n).
    pub fn sample(&mut self) -> u32 {
        // 2n <= 48, so the top 2n bits of one generator word give an
        // unbiased uniform draw in [0, 2^(2n)) with no rejection.
        let u = self.rng.next_u64() >> (64 - 2 * self.n);
        self.cumulative.partition_point(|&c| c <= u) as u32
    }

    /// `count` sequential measurements from the same stream.
    pub fn sample_batch(&mut self, count: usize) -> Vec<u32> {
        (0..count).map(|_| self.sample()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfExpression;
    use crate::boolfn::BooleanFunction;
    use crate::spectrum::walsh_transform;

    fn example_sampler(seed: u64) -> BvSampler {
        let f = AnfExpression::parse("x1+x2+x1x2+x2x3+x1x3", 3)
            .unwrap()
            .to_function();
        BvSampler::new(&walsh_transform(&f), seed).unwrap()
    }

    #[test]
    fn linear_spectrum_is_a_point_mass() {
        let a = 0b1011;
        let f = BooleanFunction::linear(4, a).unwrap();
        let mut sampler = BvSampler::new(&walsh_transform(&f), 3).unwrap();
        for _ in 0..200 {
            assert_eq!(sampler.sample(), a);
        }
    }

    #[test]
    fn constant_zero_always_measures_zero() {
        let f = BooleanFunction::from_fn(3, |_| false).unwrap();
        let mut sampler = BvSampler::new(&walsh_transform(&f), 11).unwrap();
        assert!(sampler.sample_batch(100).iter().all(|&w| w == 0));
    }

    #[test]
    fn example_draws_stay_on_the_support_with_quarter_frequencies() {
        let mut sampler = example_sampler(42);
        let mut counts = [0u32; 8];
        let draws = 100_000;
        for _ in 0..draws {
            counts[sampler.sample() as usize] += 1;
        }
        for w in [0b000, 0b011, 0b101, 0b110] {
            assert_eq!(counts[w], 0, "off-support draw at {w:03b}");
        }
        // Three standard deviations around p = 1/4 at 1e5 draws.
        let tolerance = 3.0 * (0.25f64 * 0.75 / draws as f64).sqrt();
        for w in [0b001, 0b010, 0b100, 0b111] {
            let freq = counts[w] as f64 / draws as f64;
            assert!((freq - 0.25).abs() < tolerance, "w={w:03b} freq={freq}");
        }
    }

    #[test]
    fn deterministic_per_seed_and_stream_consistent() {
        let mut a = example_sampler(7);
        let mut b = example_sampler(7);
        assert_eq!(a.sample_batch(50), b.sample_batch(50));

        let mut c = example_sampler(7);
        let mut joined = c.sample_batch(20);
        joined.extend(c.sample_batch(30));
        let mut d = example_sampler(7);
        assert_eq!(joined, d.sample_batch(50));

        let mut e = example_sampler(8);
        assert_ne!(d.sample_batch(50), e.sample_batch(50));
    }

    #[test]
    fn batch_of_one_matches_single_draw() {
        let mut a = example_sampler(5);
        let mut b = example_sampler(5);
        assert_eq!(a.sample_batch(1), vec![b.sample()]);
    }

    #[test]
    fn support_soundness_on_random_functions() {
        for n in 1..=8u32 {
            for seed in 0..4u64 {
                let f = BooleanFunction::random(n, 640 + n as u64).unwrap();
                let spectrum = walsh_transform(&f);
                let mut sampler = BvSampler::new(&spectrum, seed).unwrap();
                for w in sampler.sample_batch(500) {
                    assert_ne!(spectrum.coeff(w), 0, "sampled zero-mass point {w:b}");
                }
            }
        }
    }

    #[test]
    fn corrupted_spectrum_is_rejected() {
        let bad = WalshSpectrum::from_coeffs(2, vec![4, 1, 0, 0]);
        match BvSampler::new(&bad, 0) {
            Err(Error::ParsevalViolation { got, expected }) => {
                assert_eq!((got, expected), (17, 16));
            }
            other => panic!("expected Parseval violation, got {other:?}"),
        }
    }
}
