//! Face-vector bounds: the lower bound theorem, the double-counting identity
//! behind its reduction to edges, Dehn–Sommerville residuals, the closed
//! forms for k-stacked spheres and the conjectured bounds built on them.
//!
//! All arithmetic is exact over `i128`.

use alloc::vec::Vec;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::fvector::{binomial, FaceVector};
use crate::stacked;
use crate::verify;

/// One inequality `f_j ≥ bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub j: usize,
    pub observed: i128,
    pub bound: i128,
}

impl BoundRow {
    pub fn slack(&self) -> i128 {
        self.observed - self.bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub rows: Vec<BoundRow>,
    /// Every slack is non-negative.
    pub holds: bool,
    pub equality_all: bool,
    pub equality_any: bool,
    /// Stackedness of the complex when equality makes it relevant.
    pub stacked_verdict: Option<bool>,
    /// The caller vouches for topological hypotheses that are not checked.
    pub topology_asserted: bool,
}

impl BoundReport {
    fn from_rows(rows: Vec<BoundRow>) -> Self {
        BoundReport {
            holds: rows.iter().all(|r| r.slack() >= 0),
            equality_all: !rows.is_empty() && rows.iter().all(|r| r.slack() == 0),
            equality_any: rows.iter().any(|r| r.slack() == 0),
            rows,
            stacked_verdict: None,
            topology_asserted: false,
        }
    }
}

/// Lower bound on `f_j` for a `d`-dimensional normal pseudomanifold with
/// `f0` vertices: `C(d+1, j)·f0 − j·C(d+2, j+1)` for `j < d` and
/// `d·f0 − (d+2)(d−1)` for `j = d`.
pub fn lbt_bound(d: usize, f0: usize, j: usize) -> Result<i128> {
    if j < 1 || j > d {
        return Err(Error::ArgumentOutOfRange("need 1 <= j <= d"));
    }
    if f0 < d + 2 {
        return Err(Error::ArgumentOutOfRange("need f0 >= d + 2"));
    }
    let (d, f0, j) = (d as i64, f0 as i128, j as i64);
    Ok(if j < d {
        binomial(d + 1, j) * f0 - j as i128 * binomial(d + 2, j + 1)
    } else {
        d as i128 * f0 - ((d + 2) * (d - 1)) as i128
    })
}

/// Evaluates the lower bound theorem on a normal pseudomanifold of
/// dimension at least 2. For `d ≥ 3` any equality triggers a stackedness
/// check, which must come out true.
pub fn lbt_check(c: &Complex) -> Result<BoundReport> {
    if c.dim() < 2 {
        return Err(Error::ArgumentOutOfRange("need dimension at least 2"));
    }
    if !verify::is_normal_pm(c) {
        return Err(Error::NotNormalPm);
    }
    let d = c.dim() as usize;
    let f = c.f_vector();
    let n = c.vertex_count();
    let rows = (1..=d)
        .map(|j| Ok(BoundRow { j, observed: f.get(j as i32) as i128, bound: lbt_bound(d, n, j)? }))
        .collect::<Result<Vec<_>>>()?;
    let mut report = BoundReport::from_rows(rows);
    if d >= 3 && report.equality_any {
        report.stacked_verdict = Some(stacked::is_stacked(c)?.stacked);
    }
    Ok(report)
}

/// Both sides of `f_j = (1/(j+1)) Σ_v f_{j−1}(lk v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub j: usize,
    pub f_j: u64,
    /// `Σ_v f_{j−1}(lk v)`.
    pub link_sum: u64,
}

impl Incidence {
    pub fn holds(&self) -> bool {
        self.link_sum.is_multiple_of(self.j as u64 + 1) && self.link_sum / (self.j as u64 + 1) == self.f_j
    }
}

pub fn mpw_incidence(c: &Complex, j: usize) -> Incidence {
    let link_sum = c
        .vertices()
        .map(|v| c.vertex_link(v).f_vector().get(j as i32 - 1))
        .sum();
    Incidence { j, f_j: c.f_vector().get(j as i32), link_sum }
}

/// `L_j − R_j` for the Dehn–Sommerville relations of a `d`-sphere,
/// `0 ≤ j ≤ ⌊d/2⌋`, with `f_{−1} = 1`:
/// `L_j = Σ_{i=−1}^{j−1} (−1)^{d−i−1} C(d−i, d−j+1) f_i` and
/// `R_j = Σ_{i=−1}^{d−j} (−1)^i C(d−i, j) f_i`.
pub fn dehn_sommerville_residuals(f: &[i128], d: usize) -> Result<Vec<i128>> {
    if f.len() != d + 1 {
        return Err(Error::ArgumentOutOfRange("face vector must have d + 1 entries"));
    }
    let fi = |i: i64| if i < 0 { 1 } else { f[i as usize] };
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1i128 } else { -1 };
    let d = d as i64;
    Ok((0..=d / 2)
        .map(|j| {
            let left: i128 = (-1..j).map(|i| sign(d - i - 1) * binomial(d - i, d - j + 1) * fi(i)).sum();
            let right: i128 = (-1..=d - j).map(|i| sign(i) * binomial(d - i, j) * fi(i)).sum();
            left - right
        })
        .collect())
}

pub fn dehn_sommerville_residuals_of(f: &FaceVector) -> Vec<i128> {
    let counts: Vec<i128> = f.counts().iter().map(|&x| x as i128).collect();
    dehn_sommerville_residuals(&counts, counts.len().saturating_sub(1)).expect("length matches")
}

/// The closed-form `f_j` of a k-stacked `d`-sphere, `k ≤ j ≤ d`, from the
/// prefix `f_0, …, f_{k−1}`.
fn glbc_value(d: i64, k: i64, j: i64, prefix: &[i128]) -> i128 {
    let fi = |i: i64| if i < 0 { 1 } else { prefix[i as usize] };
    let sign = |e: i64| if e.rem_euclid(2) == 0 { 1i128 } else { -1 };
    (-1..k)
        .map(|i| {
            let mut coeff = binomial(j - i - 1, j - k) * binomial(d - i + 1, j - i);
            if j > d - k {
                coeff -= binomial(k, d - j + 1) * binomial(d - i, d - k + 1);
                coeff += (d - j..k)
                    .map(|l| sign(k - l) * binomial(l, d - j) * binomial(d - i, d - l + 1))
                    .sum::<i128>();
            }
            sign(k - i + 1) * coeff * fi(i)
        })
        .sum()
}

fn check_glbc_args(d: usize, k: usize, min_d: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::ArgumentOutOfRange("need k >= 1"));
    }
    if d < min_d {
        return Err(Error::ArgumentOutOfRange("dimension too small for k"));
    }
    Ok(())
}

/// The face vector of a k-stacked `d`-sphere determined by its first `k`
/// entries. Accepts `d ≥ 2k`, which includes the degenerate `k = 1, d = 2`.
pub fn glbc_fvector(d: usize, k: usize, prefix: &[u64]) -> Result<FaceVector> {
    check_glbc_args(d, k, 2 * k)?;
    if prefix.len() != k {
        return Err(Error::ArgumentOutOfRange("prefix must have k entries"));
    }
    let p: Vec<i128> = prefix.iter().map(|&x| x as i128).collect();
    let mut counts: Vec<u64> = prefix.to_vec();
    for j in k..=d {
        let v = glbc_value(d as i64, k as i64, j as i64, &p);
        if v < 0 {
            return Err(Error::ArgumentOutOfRange("prefix yields a negative face count"));
        }
        counts.push(v as u64);
    }
    Ok(FaceVector::new(counts))
}

/// Evaluates the generalized lower bound inequalities for `k ≤ j ≤ d`,
/// `d ≥ 2k + 1`.
pub fn glbc_check(f: &FaceVector, d: usize, k: usize) -> Result<BoundReport> {
    check_glbc_args(d, k, 2 * k + 1)?;
    if f.counts().len() != d + 1 {
        return Err(Error::ArgumentOutOfRange("face vector must have d + 1 entries"));
    }
    let p: Vec<i128> = f.counts()[..k].iter().map(|&x| x as i128).collect();
    let rows = (k..=d)
        .map(|j| BoundRow {
            j,
            observed: f.get(j as i32) as i128,
            bound: glbc_value(d as i64, k as i64, j as i64, &p),
        })
        .collect();
    Ok(BoundReport::from_rows(rows))
}

/// The conjectured bounds for non-simply-connected manifolds:
/// `C(d+1, j)·f0` for `1 ≤ j < d` and `d·f0` for `j = d`.
pub fn lbc_nsc_bounds(f: &FaceVector, d: usize) -> Result<BoundReport> {
    if d < 3 {
        return Err(Error::ArgumentOutOfRange("need d >= 3"));
    }
    if f.counts().len() != d + 1 {
        return Err(Error::ArgumentOutOfRange("face vector must have d + 1 entries"));
    }
    let f0 = f.get(0) as i128;
    let rows = (1..=d)
        .map(|j| BoundRow {
            j,
            observed: f.get(j as i32) as i128,
            bound: if j < d { binomial(d as i64 + 1, j as i64) * f0 } else { d as i128 * f0 },
        })
        .collect();
    let mut r = BoundReport::from_rows(rows);
    r.topology_asserted = true;
    Ok(r)
}

/// [`lbc_nsc_bounds`] on a complex. Only the normal pseudomanifold
/// property is checked; being a non-simply-connected manifold is the
/// caller's assertion, recorded in `topology_asserted`.
pub fn lbc_nsc_check(c: &Complex) -> Result<BoundReport> {
    if c.dim() < 3 {
        return Err(Error::ArgumentOutOfRange("need d >= 3"));
    }
    if !verify::is_normal_pm(c) {
        return Err(Error::NotNormalPm);
    }
    lbc_nsc_bounds(&c.f_vector(), c.dim() as usize)
}
