//! Linear algebra over GF(2) on vectors packed into `u64`.

use alloc::vec::Vec;

/// Incremental elimination of vectors, remembering which inputs each
/// reduced vector is a combination of.
///
/// Pivots are kept on the highest set bit of each stored vector.
#[derive(Clone, Debug, Default)]
pub struct Eliminator {
    // (vector, combination of inserted indices), sorted by descending leading bit
    rows: Vec<(u64, u64)>,
    kernel: Vec<u64>,
    inserted: u32,
}

impl Eliminator {
    pub fn new() -> Self {
        Self::default()
    }

    fn reduce(&self, mut v: u64, mut combo: u64) -> (u64, u64) {
        for &(row, rc) in &self.rows {
            let lead = 63 - row.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= row;
                combo ^= rc;
            }
        }
        (v, combo)
    }

    /// Inserts the next vector (index = number of previous inserts, at most 64).
    pub fn insert(&mut self, v: u64) {
        assert!(self.inserted < 64, "at most 64 vectors");
        let (v, combo) = self.reduce(v, 1u64 << self.inserted);
        self.inserted += 1;
        if v == 0 {
            self.kernel.push(combo);
            return;
        }
        let pos = self
            .rows
            .iter()
            .position(|&(r, _)| r.leading_zeros() > v.leading_zeros())
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, (v, combo));
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Combinations of inserted vectors summing to zero (a kernel basis).
    pub fn kernel(&self) -> &[u64] {
        &self.kernel
    }

    /// A combination of inserted vectors summing to `target`, if one exists.
    pub fn solve(&self, target: u64) -> Option<u64> {
        let (v, combo) = self.reduce(target, 0);
        (v == 0).then_some(combo)
    }
}

/// Rank over GF(2) of a list of row vectors.
pub fn rank(rows: &[u64]) -> usize {
    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for &r in rows {
        let mut v = r;
        while v != 0 {
            let lead = (63 - v.leading_zeros()) as usize;
            if pivots[lead] == 0 {
                pivots[lead] = v;
                rank += 1;
                break;
            }
            v ^= pivots[lead];
        }
    }
    rank
}

/// The smallest integer in the affine space `offset + span(basis)`.
pub fn min_in_coset(offset: u64, basis: &[u64]) -> u64 {
    let mut e = Eliminator::new();
    for &b in basis {
        e.insert(b);
    }
    e.reduce(offset, 0).0
}
