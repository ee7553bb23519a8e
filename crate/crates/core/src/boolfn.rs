//! Boolean function representation and construction.
//!
//! A function f: F2^n -> F2 is stored as a bit-packed truth table indexed
//! by the integer encoding of the input vector. The first variable x1 is
//! the most significant bit of the index, so for n = 3 the table reads
//! f(000), f(001), ..., f(111) left to right with x = x1 x2 x3. Under this
//! encoding the dot product of two vectors is the parity of the AND of
//! their indices, which the rest of the crate relies on throughout.

use crate::error::{Error, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Largest supported variable count. The truth table of a 24-variable
/// function occupies 2 MiB, which keeps every exhaustive cross-check in
/// this crate tractable on a desktop.
pub const MAX_VARS: u32 = 24;

/// An n-variable Boolean function as an immutable bit-packed truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    n: u32,
    words: Vec<u64>,
}

impl BooleanFunction {
    /// Builds the table by evaluating `f` at every input in index order.
    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Result<Self> {
        check_var_count(n)?;
        let len = 1usize << n;
        let mut words = vec![0u64; len.div_ceil(64)];
        for x in 0..len as u32 {
            if f(x) {
                words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Ok(BooleanFunction { n, words })
    }

    /// Builds a function from an iterator of table bits in index order.
    /// The iterator must yield exactly 2^n items.
    pub fn from_bits(n: u32, bits: impl IntoIterator<Item = bool>) -> Result<Self> {
        check_var_count(n)?;
        let len = 1usize << n;
        let mut words = vec![0u64; len.div_ceil(64)];
        let mut count = 0usize;
        for (x, bit) in bits.into_iter().enumerate() {
            if x >= len {
                return Err(Error::TruthTable(format!("more than {len} table bits")));
            }
            if bit {
                words[x >> 6] |= 1 << (x & 63);
            }
            count += 1;
        }
        if count != len {
            return Err(Error::TruthTable(format!(
                "expected {len} table bits, got {count}"
            )));
        }
        Ok(BooleanFunction { n, words })
    }

    /// The linear function x -> a.x for a mask `a` in F2^n.
    pub fn linear(n: u32, a: u32) -> Result<Self> {
        check_var_count(n)?;
        check_point(n, a)?;
        Self::from_fn(n, |x| dot(a, x))
    }

    /// The inner-product function on an even number of variables:
    /// f(x1..x_{n/2}, y1..y_{n/2}) = sum x_i y_i. Its squared Walsh
    /// coefficients are flat, which makes it the standard fixture for the
    /// minimum-differential-uniformity case.
    pub fn inner_product_bent(n: u32) -> Result<Self> {
        check_var_count(n)?;
        if n % 2 == 1 {
            return Err(Error::OddVariableCount(n));
        }
        let half = n / 2;
        let low_mask = (1u32 << half) - 1;
        // Variable x_i sits at the same offset in the top half as y_i does
        // in the bottom half, so the pairing is a single AND.
        Self::from_fn(n, |x| dot(x >> half, x & low_mask))
    }

    /// Uniformly random truth table from a seeded deterministic generator.
    /// The same seed always yields the same function.
    pub fn random(n: u32, seed: u64) -> Result<Self> {
        check_var_count(n)?;
        let len = 1usize << n;
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut words: Vec<u64> = (0..len.div_ceil(64)).map(|_| rng.next_u64()).collect();
        if len < 64 {
            words[0] &= (1u64 << len) - 1;
        }
        Ok(BooleanFunction { n, words })
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Number of table entries, 2^n.
    pub fn table_len(&self) -> u32 {
        1 << self.n
    }

    /// f(x) for the index encoding of x.
    #[inline]
    pub fn value(&self, x: u32) -> bool {
        debug_assert!(x < self.table_len());
        (self.words[(x >> 6) as usize] >> (x & 63)) & 1 == 1
    }

    /// The packed table words, low indices in the low bits of word 0.
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Table bits in index order.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.table_len()).map(|x| self.value(x))
    }
}

/// Extends `g` on n-1 variables to a function f on n variables with
/// f(x1, .., xn) = g(x2, .., xn) + value * x1. By construction the unit
/// vector (1, 0, .., 0) satisfies f(x + a) + f(x) = value for every x,
/// which makes the result a fixture with a known structure.
pub fn plant_structure(g: &BooleanFunction, value: bool) -> Result<BooleanFunction> {
    let n = g.var_count() + 1;
    check_var_count(n)?;
    let low = (1u32 << (n - 1)) - 1;
    BooleanFunction::from_fn(n, |x| g.value(x & low) ^ (value && x > low))
}

/// Parity of the bitwise AND: the dot product over F2 in index encoding.
#[inline]
pub fn dot(a: u32, b: u32) -> bool {
    (a & b).count_ones() & 1 == 1
}

pub(crate) fn check_var_count(n: u32) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::VariableCount(n));
    }
    Ok(())
}

pub(crate) fn check_point(n: u32, x: u32) -> Result<()> {
    if x >= (1u32 << n) {
        return Err(Error::TruthTable(format!(
            "point {x} out of range for {n} variables"
        )));
    }
    Ok(())
}

/// Parses the two-line truth-table file format:
/// a header `n=<int>` followed by either 2^n characters of '0'/'1' in
/// index order, or `hex:` and ceil(2^n/4) hex digits where the most
/// significant bit of each nibble carries the lowest index.
pub fn parse_table_file(text: &str) -> Result<BooleanFunction> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::TruthTable("empty input".into()))?
        .trim();
    let n: u32 = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::TruthTable(format!("bad header {header:?}, expected n=<int>")))?;
    check_var_count(n)?;
    let body = lines
        .next()
        .ok_or_else(|| Error::TruthTable("missing table line".into()))?
        .trim();
    for extra in lines {
        if !extra.trim().is_empty() {
            return Err(Error::TruthTable("trailing content after table".into()));
        }
    }
    let len = 1usize << n;
    if let Some(hex) = body.strip_prefix("hex:") {
        let expected = len.div_ceil(4);
        if hex.len() != expected {
            return Err(Error::TruthTable(format!(
                "expected {expected} hex digits, got {}",
                hex.len()
            )));
        }
        let mut bits = vec![false; len];
        for (d, c) in hex.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::TruthTable(format!("bad hex digit {c:?}")))?;
            for b in 0..4 {
                let x = d * 4 + b;
                if x < len {
                    bits[x] = (v >> (3 - b)) & 1 == 1;
                }
            }
        }
        BooleanFunction::from_bits(n, bits)
    } else {
        if body.len() != len {
            return Err(Error::TruthTable(format!(
                "expected {len} table characters, got {}",
                body.len()
            )));
        }
        let bits: Result<Vec<bool>> = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::TruthTable(format!("bad table character {other:?}"))),
            })
            .collect();
        BooleanFunction::from_bits(n, bits?)
    }
}
