//! Brute-force ground truth by exhaustive permutation enumeration.
//!
//! Every other producer in the crate is ultimately checked against a direct
//! count over all `n!` permutations: alternating runs bucketed into a runs
//! triangle, descents bucketed into a Eulerian triangle. Enumeration is
//! capped because `n!` grows factorially; the default cap keeps a full run
//! sub-second and the hard ceiling is opt-in.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::table::TriangularTable;

/// Largest `n` enumerated without an explicit override (9! = 362,880).
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// Ceiling for overridden enumeration (11! ≈ 4.0 × 10⁷); beyond this a run
/// crosses from seconds into minutes and belongs in opt-in long tests.
pub const HARD_ENUMERATION_CAP: usize = 11;

/// A permutation of `[n]`, stored one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` contains each of `1..=n` exactly once.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Domain("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::Domain(format!("not a permutation of [{n}]: {values:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    // No `is_empty`: `new` rejects the empty permutation, so `len() >= 1`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    /// The reversed permutation.
    pub fn reversed(&self) -> Permutation {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    /// The complement `i ↦ n+1−π(i)`.
    pub fn complemented(&self) -> Permutation {
        let n = self.values.len();
        Permutation {
            values: self.values.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Number of alternating runs: one more than the number of interior
    /// positions where the permutation changes direction.
    ///
    /// Defined for length ≥ 2; the length-1 convention is deliberately left
    /// out (see [`runs_triangle_oracle`]).
    pub fn count_runs(&self) -> Result<usize> {
        if self.values.len() < 2 {
            return Err(Error::Domain(
                "alternating runs need length >= 2".into(),
            ));
        }
        Ok(runs_of(&self.values))
    }

    /// Number of positions `i` with `π(i) > π(i+1)`.
    pub fn count_descents(&self) -> usize {
        descents_of(&self.values)
    }
}

fn runs_of(values: &[usize]) -> usize {
    let mut changes = 0;
    for i in 1..values.len() - 1 {
        // peak or valley at i; entries are distinct, so compare both sides
        if (values[i - 1] < values[i]) == (values[i + 1] < values[i]) {
            changes += 1;
        }
    }
    changes + 1
}

fn descents_of(values: &[usize]) -> usize {
    values.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Calls `f` on every permutation of `1..=n` exactly once (Heap's algorithm;
/// counting callers must not depend on the visit order).
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut a: Vec<usize> = (1..=n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Counts permutations of `[n]` by alternating runs for `2 ≤ n ≤ n_max`,
/// honoring `cap` as the largest permitted `n`.
pub fn runs_triangle_oracle_capped(n_max: usize, cap: usize) -> Result<TriangularTable> {
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    if n_max < 2 {
        return Err(Error::Domain("runs enumeration starts at n = 2".into()));
    }
    let mut rows = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let mut buckets = vec![0u64; n]; // k = 1..=n-1 live in 1..n
        for_each_permutation(n, |p| buckets[runs_of(p) - 1] += 1);
        debug_assert_eq!(buckets[n - 1], 0, "no permutation of [{n}] has n runs");
        rows.push(buckets[..n - 1].iter().map(|&c| BigInt::from(c)).collect());
    }
    Ok(TriangularTable::new(2, 1, rows))
}

/// As [`runs_triangle_oracle_capped`] with the default cap.
pub fn runs_triangle_oracle(n_max: usize) -> Result<TriangularTable> {
    runs_triangle_oracle_capped(n_max, DEFAULT_ENUMERATION_CAP)
}

/// Counts permutations of `[n]` by `1 + descents` for `1 ≤ n ≤ n_max`,
/// matching the Eulerian `A(n,k)` indexing.
pub fn eulerian_triangle_oracle_capped(n_max: usize, cap: usize) -> Result<TriangularTable> {
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    if n_max < 1 {
        return Err(Error::Domain("descent enumeration starts at n = 1".into()));
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut buckets = vec![0u64; n]; // k = 1..=n
        for_each_permutation(n, |p| buckets[descents_of(p)] += 1);
        rows.push(buckets.iter().map(|&c| BigInt::from(c)).collect());
    }
    Ok(TriangularTable::new(1, 1, rows))
}

/// As [`eulerian_triangle_oracle_capped`] with the default cap.
pub fn eulerian_triangle_oracle(n_max: usize) -> Result<TriangularTable> {
    eulerian_triangle_oracle_capped(n_max, DEFAULT_ENUMERATION_CAP)
}
