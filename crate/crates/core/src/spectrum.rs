//! Exact spectral analysis: the integer-scaled Walsh spectrum, the
//! correlation function, derivative counts and the differential profile.
//!
//! All identities in this module are exact integer equalities on the
//! scaled coefficients W(w) = sum_x (-1)^(f(x) + w.x), so no tolerance is
//! involved anywhere: W(w) = 2^n S_f(w) for the usual normalized spectrum
//! S_f, and divisions by 2^n never happen inside an identity.

use crate::boolfn::{dot, BooleanFunction};
use crate::fraction::Fraction;

/// The scaled Walsh coefficients of an n-variable function, one signed
/// integer per point w in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    coeffs: Vec<i32>,
}

impl WalshSpectrum {
    #[cfg(test)]
    pub(crate) fn from_coeffs(n: u32, coeffs: Vec<i32>) -> Self {
        debug_assert_eq!(coeffs.len(), 1 << n);
        WalshSpectrum { n, coeffs }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, w: u32) -> i32 {
        self.coeffs[w as usize]
    }

    /// Points with a nonzero coefficient; never empty.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, _)| w as u32)
    }

    /// Sum of squared coefficients; equals 2^(2n) for every genuine
    /// spectrum.
    pub fn squared_sum(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|&c| (c as i64 * c as i64) as u64)
            .sum()
    }

    pub fn parseval_ok(&self) -> bool {
        self.squared_sum() == 1u64 << (2 * self.n)
    }

    /// The normalized coefficient as an exact fraction in lowest terms.
    pub fn normalized(&self, w: u32) -> Fraction {
        Fraction::new(self.coeff(w) as i64, 1u64 << self.n).reduced()
    }
}

/// Computes the full spectrum with the in-place fast transform, O(n 2^n).
pub fn walsh_transform(f: &BooleanFunction) -> WalshSpectrum {
    let n = f.var_count();
    let mut data: Vec<i32> = (0..f.table_len())
        .map(|x| if f.value(x) { -1 } else { 1 })
        .collect();
    wht_in_place(&mut data);
    WalshSpectrum { n, coeffs: data }
}

/// Direct-summation spectral coefficient, O(2^n) per point. Exists as an
/// independent cross-check for the fast transform.
pub fn walsh_value_naive(f: &BooleanFunction, w: u32) -> i64 {
    assert!(w < f.table_len());
    (0..f.table_len())
        .map(|x| if f.value(x) ^ dot(w, x) { -1i64 } else { 1 })
        .sum()
}

/// The correlation of f with its shift by a:
/// sum_x (-1)^(f(x) + f(x xor a)), computed from the truth table.
pub fn correlation(f: &BooleanFunction, a: u32) -> i64 {
    let counts = derivative_counts(f, a);
    counts.zero as i64 - counts.one as i64
}

/// Cardinalities of {x : f(x xor a) + f(x) = i} for i = 0, 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivativeCounts {
    pub zero: u64,
    pub one: u64,
}

impl DerivativeCounts {
    pub fn get(&self, i: bool) -> u64 {
        if i {
            self.one
        } else {
            self.zero
        }
    }
}

/// Counts the inputs on which the derivative of f in direction a takes
/// each value, by comparing the table with its XOR-shifted copy word by
/// word. Purely definitional: the spectrum is never consulted.
pub fn derivative_counts(f: &BooleanFunction, a: u32) -> DerivativeCounts {
    assert!(a < f.table_len());
    let words = f.words();
    let word_shift = (a >> 6) as usize;
    let bit_shift = a & 63;
    let mut one = 0u64;
    for (j, &w) in words.iter().enumerate() {
        let shifted = xor_permute_word(words[j ^ word_shift], bit_shift);
        one += (w ^ shifted).count_ones() as u64;
    }
    DerivativeCounts {
        zero: f.table_len() as u64 - one,
        one,
    }
}

/// Reorders the bits of a word so that bit x moves to position x xor a,
/// for a < 64, via one butterfly swap per set bit of a.
#[inline]
fn xor_permute_word(mut w: u64, a: u32) -> u64 {
    const MASKS: [u64; 6] = [
        0x5555_5555_5555_5555,
        0x3333_3333_3333_3333,
        0x0f0f_0f0f_0f0f_0f0f,
        0x00ff_00ff_00ff_00ff,
        0x0000_ffff_0000_ffff,
        0x0000_0000_ffff_ffff,
    ];
    let mut k = 0;
    let mut rest = a;
    while rest != 0 {
        if rest & 1 == 1 {
            let s = 1 << k;
            w = ((w & MASKS[k]) << s) | ((w >> s) & MASKS[k]);
        }
        rest >>= 1;
        k += 1;
    }
    w
}

/// Derivative counts for every direction plus the differential
/// uniformity, an exact rational with numerator the maximal count over
/// nonzero directions and denominator 2^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialProfile {
    n: u32,
    count_zero: Vec<u32>,
    max_count: u32,
    witness: (u32, bool),
}

impl DifferentialProfile {
    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn count(&self, a: u32, i: bool) -> u64 {
        let zero = self.count_zero[a as usize] as u64;
        if i {
            (1u64 << self.n) - zero
        } else {
            zero
        }
    }

    pub fn counts(&self, a: u32) -> DerivativeCounts {
        DerivativeCounts {
            zero: self.count(a, false),
            one: self.count(a, true),
        }
    }

    /// The differential uniformity delta as max count / 2^n.
    pub fn delta(&self) -> Fraction {
        Fraction::new(self.max_count as i64, 1u64 << self.n)
    }

    /// The smallest (a, i) attaining the maximal count.
    pub fn witness(&self) -> (u32, bool) {
        self.witness
    }

    fn from_count_zero(n: u32, count_zero: Vec<u32>) -> Self {
        let full = 1u32 << n;
        let mut max_count = 0;
        let mut witness = (1, false);
        for (a, &zero) in count_zero.iter().enumerate().skip(1) {
            for (i, count) in [(false, zero), (true, full - zero)] {
                if count > max_count {
                    max_count = count;
                    witness = (a as u32, i);
                }
            }
        }
        DifferentialProfile {
            n,
            count_zero,
            max_count,
            witness,
        }
    }
}

/// Computes the whole profile through the spectrum: the transform of the
/// squared coefficients yields 2^n times every correlation value at once,
/// so the total cost is O(n 2^n) instead of O(4^n).
pub fn differential_profile(f: &BooleanFunction) -> DifferentialProfile {
    let spectrum = walsh_transform(f);
    let n = spectrum.n;
    let transformed = squared_spectrum_transform(&spectrum);
    let full = 1i64 << n;
    let count_zero = transformed
        .iter()
        .map(|&t| {
            debug_assert_eq!(t % full, 0);
            let corr = t / full;
            debug_assert_eq!((full + corr) % 2, 0);
            ((full + corr) / 2) as u32
        })
        .collect();
    DifferentialProfile::from_count_zero(n, count_zero)
}

/// Definitional profile straight from derivative counts, O(4^n / 64).
/// Retained as the oracle for [`differential_profile`] at desk scales.
pub fn differential_profile_naive(f: &BooleanFunction) -> DifferentialProfile {
    let n = f.var_count();
    let count_zero = (0..f.table_len())
        .map(|a| derivative_counts(f, a).zero as u32)
        .collect();
    DifferentialProfile::from_count_zero(n, count_zero)
}

/// Transform of the squared coefficients: entry a equals
/// sum_w (-1)^(w.a) W(w)^2, which is 2^n times the correlation of f at a
/// and the signed difference of the two hyperplane masses.
pub fn squared_spectrum_transform(spectrum: &WalshSpectrum) -> Vec<i64> {
    let mut data: Vec<i64> = spectrum
        .coeffs
        .iter()
        .map(|&c| c as i64 * c as i64)
        .collect();
    wht_in_place(&mut data);
    data
}

/// Squared spectral mass on the affine hyperplane {w : w.a = i}, by
/// direct summation.
pub fn hyperplane_mass(spectrum: &WalshSpectrum, a: u32, i: bool) -> u64 {
    assert!((a as usize) < spectrum.coeffs.len());
    spectrum
        .coeffs
        .iter()
        .enumerate()
        .filter(|&(w, _)| dot(w as u32, a) == i)
        .map(|(_, &c)| (c as i64 * c as i64) as u64)
        .sum()
}

/// Both sides of the exact identity
/// sum_{w.a=i} W(w)^2 = 2^n |{x : f(x xor a) + f(x) = i}|,
/// computed by unrelated routes: the left from the spectrum, the right
/// from the truth table. This equality is what lets measurement
/// statistics stand in for derivative counts, so it is exposed as a
/// first-class check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperplaneMassCheck {
    pub n: u32,
    pub spectral_mass: u64,
    pub derivative_count: u64,
}

impl HyperplaneMassCheck {
    pub fn holds(&self) -> bool {
        self.spectral_mass == (1u64 << self.n) * self.derivative_count
    }
}

pub fn hyperplane_mass_check(f: &BooleanFunction, a: u32, i: bool) -> HyperplaneMassCheck {
    let spectrum = walsh_transform(f);
    HyperplaneMassCheck {
        n: f.var_count(),
        spectral_mass: hyperplane_mass(&spectrum, a, i),
        derivative_count: derivative_counts(f, a).get(i),
    }
}

/// In-place Walsh-Hadamard butterfly over a power-of-two slice.
fn wht_in_place<T>(data: &mut [T])
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    debug_assert!(data.len().is_power_of_two());
    let mut h = 1;
    while h < data.len() {
        for chunk in data.chunks_exact_mut(2 * h) {
            for i in 0..h {
                let a = chunk[i];
                let b = chunk[i + h];
                chunk[i] = a + b;
                chunk[i + h] = a - b;
            }
        }
        h <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::AnfExpression;

    fn example_function() -> BooleanFunction {
        AnfExpression::parse("x1+x2+x1x2+x2x3+x1x3", 3)
            .unwrap()
            .to_function()
    }

    #[test]
    fn example_spectrum_values() {
        let spectrum = walsh_transform(&example_function());
        assert_eq!(spectrum.coeffs(), [0, -4, 4, 0, 4, 0, 0, 4]);
        assert_eq!(spectrum.normalized(0b001), Fraction::new(-1, 2));
    }

    #[test]
    fn constant_zero_spectrum_is_a_point_mass() {
        let f = BooleanFunction::from_fn(3, |_| false).unwrap();
        let spectrum = walsh_transform(&f);
        assert_eq!(spectrum.coeffs(), [8, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn linear_spectrum_is_a_point_mass_at_a() {
        for n in [1u32, 3, 6] {
            let a = (1 << n) - 1;
            let f = BooleanFunction::linear(n, a).unwrap();
            let spectrum = walsh_transform(&f);
            for w in 0..f.table_len() {
                let expected = if w == a { 1 << n } else { 0 };
                assert_eq!(spectrum.coeff(w), expected);
            }
        }
    }

    #[test]
    fn fast_transform_matches_naive_oracle() {
        for n in 1..=8u32 {
            let f = BooleanFunction::random(n, 1000 + n as u64).unwrap();
            let spectrum = walsh_transform(&f);
            for w in 0..f.table_len() {
                assert_eq!(spectrum.coeff(w) as i64, walsh_value_naive(&f, w));
            }
        }
    }

    #[test]
    fn naive_oracle_frozen_values() {
        assert_eq!(walsh_value_naive(&example_function(), 0b001), -4);
        let zero = BooleanFunction::from_fn(2, |_| false).unwrap();
        assert_eq!(walsh_value_naive(&zero, 0b00), 4);
    }

    #[test]
    fn inner_product_coefficients_are_flat() {
        let f = BooleanFunction::inner_product_bent(4).unwrap();
        let spectrum = walsh_transform(&f);
        assert!(spectrum.coeffs().iter().all(|c| c.abs() == 4));
    }

    #[test]
    fn coefficients_are_even() {
        for n in 1..=6u32 {
            let f = BooleanFunction::random(n, n as u64).unwrap();
            assert!(walsh_transform(&f).coeffs().iter().all(|c| c % 2 == 0));
        }
    }

    #[test]
    fn parseval_exact() {
        for n in 1..=10u32 {
            let f = BooleanFunction::random(n, 7 * n as u64).unwrap();
            assert!(walsh_transform(&f).parseval_ok());
        }
    }

    #[test]
    fn correlation_frozen_values() {
        let f = example_function();
        assert_eq!(correlation(&f, 0), 8);
        assert_eq!(correlation(&f, 0b111), -8);
        let bent = BooleanFunction::inner_product_bent(2).unwrap();
        assert_eq!(correlation(&bent, 0b01), 0);
    }

    #[test]
    fn derivative_counts_frozen_values() {
        let f = example_function();
        assert_eq!(
            derivative_counts(&f, 0),
            DerivativeCounts { zero: 8, one: 0 }
        );
        assert_eq!(
            derivative_counts(&f, 0b111),
            DerivativeCounts { zero: 0, one: 8 }
        );
        let bent = BooleanFunction::inner_product_bent(2).unwrap();
        assert_eq!(
            derivative_counts(&bent, 0b10),
            DerivativeCounts { zero: 2, one: 2 }
        );
    }

    #[test]
    fn derivative_counts_match_plain_evaluation() {
        for n in 1..=9u32 {
            let f = BooleanFunction::random(n, 31 + n as u64).unwrap();
            for a in 0..f.table_len() {
                let one = (0..f.table_len())
                    .filter(|&x| f.value(x) != f.value(x ^ a))
                    .count() as u64;
                let counts = derivative_counts(&f, a);
                assert_eq!(counts.one, one);
                assert_eq!(counts.zero + counts.one, f.table_len() as u64);
                if a != 0 {
                    assert_eq!(counts.zero % 2, 0);
                    assert_eq!(counts.one % 2, 0);
                }
            }
        }
    }

    #[test]
    fn profile_spectral_route_matches_definitional_route() {
        for n in 1..=8u32 {
            let f = BooleanFunction::random(n, 400 + n as u64).unwrap();
            assert_eq!(differential_profile(&f), differential_profile_naive(&f));
        }
    }

    #[test]
    fn profile_frozen_values() {
        let bent = BooleanFunction::inner_product_bent(4).unwrap();
        assert_eq!(differential_profile(&bent).delta(), Fraction::new(1, 2));

        let zero = BooleanFunction::from_fn(3, |_| false).unwrap();
        let profile = differential_profile(&zero);
        assert!(profile.delta().is_one());
        for a in 1..8 {
            assert_eq!(profile.count(a, false), 8);
        }

        let profile = differential_profile(&example_function());
        assert!(profile.delta().is_one());
        assert_eq!(profile.witness(), (0b111, true));
    }

    #[test]
    fn delta_never_below_one_half() {
        for n in 1..=8u32 {
            let f = BooleanFunction::random(n, 900 + n as u64).unwrap();
            let delta = differential_profile(&f).delta();
            assert!(!delta.lt_f64(0.5), "delta {delta} below 1/2");
        }
    }

    #[test]
    fn hyperplane_mass_check_example() {
        let check = hyperplane_mass_check(&example_function(), 0b111, true);
        assert_eq!(check.spectral_mass, 64);
        assert_eq!(check.derivative_count, 8);
        assert!(check.holds());
    }

    #[test]
    fn hyperplane_mass_zero_direction_is_parseval() {
        let f = BooleanFunction::random(5, 5).unwrap();
        let check = hyperplane_mass_check(&f, 0, false);
        assert_eq!(check.spectral_mass, 1 << 10);
        assert_eq!(check.derivative_count, 1 << 5);
        assert!(check.holds());
    }

    #[test]
    fn squared_transform_consistent_with_direct_masses() {
        for n in 1..=7u32 {
            let f = BooleanFunction::random(n, 60 + n as u64).unwrap();
            let spectrum = walsh_transform(&f);
            let transformed = squared_spectrum_transform(&spectrum);
            let total = spectrum.squared_sum();
            for a in 0..f.table_len() {
                let mass0 = hyperplane_mass(&spectrum, a, false);
                let mass1 = hyperplane_mass(&spectrum, a, true);
                assert_eq!(mass0 + mass1, total);
                assert_eq!(mass0 as i64 - mass1 as i64, transformed[a as usize]);
            }
        }
    }
}
