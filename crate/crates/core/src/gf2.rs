//! Linear algebra over F2 on n-bit vectors packed into integers.
//!
//! Everything here works on systems of the shape x.w = b for a set of row
//! vectors w and a single right-hand-side bit b shared by all rows. The
//! solution set of such a system is empty or a coset of the common
//! nullspace, which [`AffineSolutionSet`] represents as an optional
//! particular solution plus a canonical kernel basis, so a set of size
//! 2^k costs k words instead of 2^k.

use std::collections::BTreeSet;

/// A reduced echelon basis of a subspace of F2^n. Rows are kept fully
/// reduced and ordered by leading bit, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorBasis {
    rows: Vec<u32>,
}

impl VectorBasis {
    pub fn new() -> Self {
        VectorBasis::default()
    }

    pub fn from_vectors(vectors: impl IntoIterator<Item = u32>) -> Self {
        let mut basis = VectorBasis::new();
        for v in vectors {
            basis.insert(v);
        }
        basis
    }

    /// Adds a vector; returns true when it was independent of the span.
    pub fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let lead = 31 - v.leading_zeros();
        for row in &mut self.rows {
            if *row >> lead & 1 == 1 {
                *row ^= v;
            }
        }
        let at = self.rows.partition_point(|&r| r > v);
        self.rows.insert(at, v);
        true
    }

    /// Canonical representative of v modulo the span.
    pub fn reduce(&self, mut v: u32) -> u32 {
        for &row in &self.rows {
            let lead = 31 - row.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }
}

/// The solution set of a uniform-RHS system over F2^n: either empty or
/// {particular + k : k in span(kernel_basis)}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    n: u32,
    particular: Option<u32>,
    kernel: VectorBasis,
}

impl AffineSolutionSet {
    /// The whole space F2^n (the solution set of zero constraints).
    pub fn full_space(n: u32) -> Self {
        AffineSolutionSet {
            n,
            particular: Some(0),
            kernel: VectorBasis::from_vectors((0..n).map(|b| 1 << b)),
        }
    }

    pub fn empty(n: u32) -> Self {
        AffineSolutionSet {
            n,
            particular: None,
            kernel: VectorBasis::new(),
        }
    }

    fn new(n: u32, particular: u32, kernel: VectorBasis) -> Self {
        AffineSolutionSet {
            n,
            particular: Some(kernel.reduce(particular)),
            kernel,
        }
    }

    /// Reconstructs the compact form from an explicit element list,
    /// asserting that the list really is an affine subspace. Intended for
    /// oracle routes that enumerate solutions definitionally.
    pub fn from_elements(n: u32, elements: &[u32]) -> Self {
        let Some(&first) = elements.first() else {
            return AffineSolutionSet::empty(n);
        };
        let kernel = VectorBasis::from_vectors(elements.iter().map(|&e| e ^ first));
        let set = AffineSolutionSet::new(n, first, kernel);
        assert_eq!(
            set.len(),
            elements.len() as u64,
            "element list is not an affine subspace"
        );
        debug_assert!(elements.iter().all(|&e| set.contains(e)));
        set
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Number of solutions: 0 or 2^dim.
    pub fn len(&self) -> u64 {
        match self.particular {
            None => 0,
            Some(_) => 1 << self.kernel.rank(),
        }
    }

    /// Dimension of the underlying kernel, when nonempty.
    pub fn dim(&self) -> Option<u32> {
        self.particular.map(|_| self.kernel.rank())
    }

    /// The canonical particular solution, when nonempty.
    pub fn particular(&self) -> Option<u32> {
        self.particular
    }

    pub fn kernel_basis(&self) -> &[u32] {
        self.kernel.rows()
    }

    pub fn contains(&self, x: u32) -> bool {
        match self.particular {
            None => false,
            Some(p) => self.kernel.contains(x ^ p),
        }
    }

    /// True when the set is exactly {0}.
    pub fn is_zero_only(&self) -> bool {
        self.particular == Some(0) && self.kernel.rank() == 0
    }

    /// All solutions, unordered. Materializes 2^dim vectors; callers
    /// gate this on the dimension.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let rows = self.kernel.rows();
        let count = self.particular.map_or(0u64, |_| 1 << rows.len());
        let base = self.particular.unwrap_or(0);
        (0..count).map(move |combo| {
            let mut x = base;
            for (j, &row) in rows.iter().enumerate() {
                if combo >> j & 1 == 1 {
                    x ^= row;
                }
            }
            x
        })
    }

    /// All solutions in ascending order.
    pub fn elements_sorted(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.iter().collect();
        v.sort_unstable();
        v
    }
}

/// Solves {x : x.w = rhs for every row w} by augmented elimination over
/// all rows; every row participates, so consistency over the full set is
/// what is reported, never just consistency over a basis. An empty
/// answer is an ordinary outcome, not an error.
pub fn solve_affine_system(
    n: u32,
    rows: impl IntoIterator<Item = u32>,
    rhs: bool,
) -> AffineSolutionSet {
    // Augmented rows carry the RHS bit below the vector part.
    let mut pivots: Vec<u64> = Vec::new();
    let mut inconsistent = false;
    for v in rows {
        debug_assert!(v >> n == 0);
        let mut row = (v as u64) << 1 | rhs as u64;
        for &p in &pivots {
            let lead = 63 - (p >> 1).leading_zeros();
            if (row >> 1) >> lead & 1 == 1 {
                row ^= p;
            }
        }
        if row >> 1 == 0 {
            inconsistent |= row & 1 == 1;
            continue;
        }
        let lead = 63 - (row >> 1).leading_zeros();
        for p in &mut pivots {
            if (*p >> 1) >> lead & 1 == 1 {
                *p ^= row;
            }
        }
        let at = pivots.partition_point(|&p| p > row);
        pivots.insert(at, row);
    }
    if inconsistent {
        return AffineSolutionSet::empty(n);
    }

    // Pivot bit per reduced row; free bits span the kernel.
    let mut is_pivot = vec![false; n as usize];
    let mut particular = 0u32;
    for &p in &pivots {
        let vector = (p >> 1) as u32;
        let lead = 31 - vector.leading_zeros();
        is_pivot[lead as usize] = true;
        if p & 1 == 1 {
            particular |= 1 << lead;
        }
    }
    let mut kernel = VectorBasis::new();
    for q in 0..n {
        if is_pivot[q as usize] {
            continue;
        }
        let mut k = 1u32 << q;
        for &p in &pivots {
            let vector = (p >> 1) as u32;
            let lead = 31 - vector.leading_zeros();
            if vector >> q & 1 == 1 {
                k |= 1 << lead;
            }
        }
        kernel.insert(k);
    }
    AffineSolutionSet::new(n, particular, kernel)
}

/// The accumulated set of sampled row vectors: a deduplicating wrapper
/// that solves the uniform-RHS systems it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2System {
    n: u32,
    rows: BTreeSet<u32>,
}

impl Gf2System {
    pub fn new(n: u32) -> Self {
        Gf2System {
            n,
            rows: BTreeSet::new(),
        }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Inserts a row; duplicates are kept once.
    pub fn insert(&mut self, w: u32) {
        debug_assert!(w < (1u32 << self.n));
        self.rows.insert(w);
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = u32>) {
        for w in rows {
            self.insert(w);
        }
    }

    /// Number of distinct collected rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, w: u32) -> bool {
        self.rows.contains(&w)
    }

    pub fn rows(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().copied()
    }

    pub fn solve(&self, rhs: bool) -> AffineSolutionSet {
        solve_affine_system(self.n, self.rows.iter().copied(), rhs)
    }
}
