//! Exact and sampling-based discovery of linear structures of Boolean
//! functions.
//!
//! A direction a is a linear structure of f: F2^n -> F2 when the
//! derivative f(x xor a) + f(x) is constant in x. This crate finds such
//! directions, and near-misses ("quasi structures"), three ways that
//! check each other:
//!
//! - definitionally, by scanning derivative counts over the truth table
//!   ([`structures::brute_force_linear_structures`]);
//! - spectrally, by solving uniform-RHS linear systems over the support
//!   of the integer-scaled Walsh spectrum
//!   ([`structures::spectral_linear_structures`]);
//! - by simulated quantum sampling: the Bernstein-Vazirani circuit run
//!   on f measures w with probability S_f(w)^2, so repeated draws land
//!   in the spectral support and progressively cut the candidate sets
//!   down ([`search::run`]).
//!
//! The sampling route is a decision procedure with one-sided error: a
//! "no structure" verdict is always correct, while surviving candidates
//! carry an explicit Hoeffding confidence bound. All spectral arithmetic
//! is exact integer arithmetic on coefficients scaled by 2^n, so every
//! cross-check in the crate is an exact equality.
//!
//! Functions are built from truth tables, algebraic normal form text
//! (`x1+x2+x1x2`), generators ([`boolfn::BooleanFunction::linear`],
//! [`boolfn::BooleanFunction::inner_product_bent`],
//! [`boolfn::BooleanFunction::random`]) or the named fixtures in
//! [`fixtures`]. Variable x1 is the most significant bit of the table
//! index throughout.

pub mod anf;
pub mod boolfn;
pub mod error;
pub mod fixtures;
pub mod fraction;
pub mod gf2;
pub mod sampler;
pub mod search;
pub mod spectrum;
pub mod structures;

pub use anf::AnfExpression;
pub use boolfn::BooleanFunction;
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use gf2::{AffineSolutionSet, Gf2System};
pub use sampler::BvSampler;
pub use search::{SearchConfig, StructureReport, Verdict};
pub use spectrum::{DifferentialProfile, WalshSpectrum};
pub use structures::{SpectralSupport, StructureSets};
