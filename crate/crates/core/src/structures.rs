//! Exact linear structures, computed two independent ways.
//!
//! A direction a is a linear structure of f when f(x xor a) + f(x) is the
//! same bit i at every x. The definitional route scans derivative counts;
//! the spectral route solves x.w = i over the support of the spectrum.
//! The two must agree on every function, which is the central
//! cross-validation of this crate.

use crate::boolfn::BooleanFunction;
use crate::gf2::{solve_affine_system, AffineSolutionSet, VectorBasis};
use crate::spectrum::{derivative_counts, WalshSpectrum};

/// The two sides of the structure set: directions with constant
/// derivative 0 and constant derivative 1. The even side always contains
/// the zero vector and is a subspace; the odd side is empty or a coset
/// of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSets {
    pub u0: AffineSolutionSet,
    pub u1: AffineSolutionSet,
}

impl StructureSets {
    pub fn var_count(&self) -> u32 {
        self.u0.var_count()
    }

    /// True when any nonzero direction is a structure, which happens
    /// exactly for differential uniformity 1.
    pub fn has_nonzero_structure(&self) -> bool {
        !self.u0.is_zero_only() || !self.u1.is_empty()
    }
}

/// Ground-truth route: classifies every direction by its derivative
/// counts. O(4^n / 64); intended for n <= 16.
pub fn brute_force_linear_structures(f: &BooleanFunction) -> StructureSets {
    let n = f.var_count();
    assert!(n <= 16, "brute force route is gated to n <= 16");
    let full = f.table_len() as u64;
    let mut u0 = Vec::new();
    let mut u1 = Vec::new();
    for a in 0..f.table_len() {
        let counts = derivative_counts(f, a);
        if counts.zero == full {
            u0.push(a);
        } else if counts.one == full {
            u1.push(a);
        }
    }
    StructureSets {
        u0: AffineSolutionSet::from_elements(n, &u0),
        u1: AffineSolutionSet::from_elements(n, &u1),
    }
}

/// Spectral route: a is a structure with value i exactly when w.a = i for
/// every w in the support, so both sides drop out of two uniform-RHS
/// solves over the full support. O(n 2^n) after the transform; no
/// variable-count gate.
pub fn spectral_linear_structures(spectrum: &WalshSpectrum) -> StructureSets {
    let n = spectrum.var_count();
    StructureSets {
        u0: solve_affine_system(n, spectrum.support(), false),
        u1: solve_affine_system(n, spectrum.support(), true),
    }
}

/// The support of a spectrum with its rank over F2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSupport {
    n: u32,
    points: Vec<u32>,
    rank: u32,
}

impl SpectralSupport {
    pub fn from_spectrum(spectrum: &WalshSpectrum) -> Self {
        let points: Vec<u32> = spectrum.support().collect();
        debug_assert!(!points.is_empty(), "a spectrum cannot vanish everywhere");
        let rank = VectorBasis::from_vectors(points.iter().copied()).rank();
        SpectralSupport {
            n: spectrum.var_count(),
            points,
            rank,
        }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Support points in ascending order.
    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// When the zero point carries spectral mass, the equation 0.x = 1 is
    /// already unsolvable and the odd side is empty with no further work.
    pub fn contains_zero(&self) -> bool {
        self.points.first() == Some(&0)
    }

    /// Searches for two support points whose XOR is again in the support.
    /// Such a pair certifies that the odd side is empty: the three
    /// equations w1.x = w2.x = (w1 xor w2).x = 1 contradict each other.
    /// Quadratic scan over the support.
    pub fn xor_closed_witness(&self) -> Option<(u32, u32)> {
        for (idx, &w1) in self.points.iter().enumerate() {
            for &w2 in &self.points[idx + 1..] {
                if self.points.binary_search(&(w1 ^ w2)).is_ok() {
                    return Some((w1, w2));
                }
            }
        }
        None
    }
}

/// Dimension bookkeeping for the structure sets, read off the support:
/// the even side has dimension n - rank, and the odd side, when the
/// uniform system is consistent over the whole support, has the same
/// cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportDimensions {
    /// Rank of the spectral support.
    pub rank: u32,
    /// Dimension of the even structure set.
    pub u0_dim: u32,
    /// Whether the odd side is nonempty.
    pub u1_nonempty: bool,
}

pub fn structure_dimensions(spectrum: &WalshSpectrum) -> SupportDimensions {
    let n = spectrum.var_count();
    let rank = VectorBasis::from_vectors(spectrum.support()).rank();
    let odd = solve_affine_system(n, spectrum.support(), true);
    SupportDimensions {
        rank,
        u0_dim: n - rank,
        u1_nonempty: !odd.is_empty(),
    }
}
