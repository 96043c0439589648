use alloc::vec;
use alloc::vec::Vec;

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Face counts `(f_0, ..., f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceVector {
    counts: Vec<u64>,
}

impl FaceVector {
    pub fn new(counts: Vec<u64>) -> Self {
        FaceVector { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Dimension `d`, i.e. `len - 1`; -1 when there are no components.
    pub fn dim(&self) -> i32 {
        self.counts.len() as i32 - 1
    }

    /// `f_j`, with `f_{-1} = 1` and zero above the top dimension.
    pub fn get(&self, j: i32) -> u64 {
        match j {
            -1 => 1,
            j if j < -1 => 0,
            j => self.counts.get(j as usize).copied().unwrap_or(0),
        }
    }

    pub fn euler(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Face vector of a join: `f_k = Σ_{i+j=k-1} f_i(X) f_j(Y)` with
    /// `f_{-1} = 1` on both sides.
    pub fn join(&self, other: &FaceVector) -> FaceVector {
        let a: Vec<u64> = core::iter::once(1).chain(self.counts.iter().copied()).collect();
        let b: Vec<u64> = core::iter::once(1).chain(other.counts.iter().copied()).collect();
        // index s in a ⊛ b is dimension s - 2 of the join (extended by f_{-1})
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        FaceVector::new(out[1..].to_vec())
    }
}

impl From<Vec<u64>> for FaceVector {
    fn from(counts: Vec<u64>) -> Self {
        FaceVector::new(counts)
    }
}
