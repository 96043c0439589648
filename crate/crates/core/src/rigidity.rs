//! Gromov's combinatorial q-rigidity, decided by exhaustive subset search.
//!
//! A complex of dimension `d` is q-rigid when it is connected and every
//! vertex set `A` disjoint from some `d`-face meets at least `q·|A|` edges.
//! The sweep visits all `2ⁿ` subsets in Gray-code order, updating the edge
//! count incrementally. The subset space splits by its high bits into
//! independent parts so callers can distribute the work.

use alloc::string::String;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::fvector::binomial;

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 26;

/// Number of edges with at least one end in `a`.
pub fn edges_meeting(c: &Complex, a: &Face) -> usize {
    c.faces(1)
        .unwrap_or(&[])
        .iter()
        .filter(|e| e.iter().any(|v| a.contains(v)))
        .count()
}

pub fn edges_meeting_tokens<S: AsRef<str>>(c: &Complex, tokens: &[S]) -> Result<usize> {
    Ok(edges_meeting(c, &c.vertex_set(tokens)?))
}

/// `(n - d - 1)·q + C(d+1, 2)`, the least edge count of a q-rigid complex.
pub fn min_edge_bound(n: usize, d: usize, q: usize) -> Result<u64> {
    if n < d + 1 {
        return Err(Error::ArgumentOutOfRange("need n >= d + 1"));
    }
    Ok(((n - d - 1) * q) as u64 + binomial(d as i64 + 1, 2) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityWitness {
    pub vertices: Vec<String>,
    pub edges_meeting: u64,
    pub required: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Subsets visited by the sweep.
    pub examined: u64,
    /// Subsets skipped after a violation ended the sweep early.
    pub pruned: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub q: usize,
    pub verdict: bool,
    pub connected: bool,
    /// The first violating set among those of least size, in lexicographic
    /// order. Absent when the verdict is true or the complex is
    /// disconnected.
    pub witness: Option<RigidityWitness>,
    pub edges_total: u64,
    /// `min_edge_bound(n, d, q)`.
    pub bound: u64,
    /// Set by [`is_minimally_q_rigid`].
    pub minimal: Option<bool>,
    pub stats: SearchStats,
}

/// Precomputed masks for the subset sweep.
#[derive(Clone, Debug)]
pub struct SweepContext {
    n: u32,
    q: u64,
    adj: Vec<u64>,
    facets: Vec<u64>,
}

/// What one part of the sweep found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PartOutcome {
    pub violation: bool,
    pub examined: u64,
}

impl SweepContext {
    pub fn new(c: &Complex, q: usize, limit: usize) -> Result<Self> {
        if c.dim() < 0 || !c.is_pure() {
            return Err(Error::NotPure);
        }
        let n = c.vertex_count();
        if n > limit.min(63) {
            return Err(Error::TooLargeForExhaustiveSearch { n, limit: limit.min(63) });
        }
        let mut adj = alloc::vec![0u64; n];
        for &(a, b) in c.edge_graph().edges() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let facets = c
            .facets()
            .iter()
            .map(|f| f.iter().fold(0u64, |m, v| m | 1 << v.index()))
            .collect();
        Ok(SweepContext { n: n as u32, q: q as u64, adj, facets })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    fn edges_meeting(&self, a: u64) -> u64 {
        let mut outside = 0u64;
        let mut inside = 0u64;
        let mut rest = a;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            outside += (self.adj[v] & !a).count_ones() as u64;
            inside += (self.adj[v] & a).count_ones() as u64;
        }
        outside + inside / 2
    }

    fn violates(&self, a: u64, e: u64) -> bool {
        e < self.q * a.count_ones() as u64 && self.facets.iter().any(|&f| f & a == 0)
    }

    /// Number of high bits used to split the sweep into at least `parts`
    /// pieces.
    pub fn prefix_bits(&self, parts: usize) -> u32 {
        let mut bits = 0;
        while (1usize << bits) < parts.max(1) && bits < self.n {
            bits += 1;
        }
        bits
    }

    /// Sweeps all subsets whose top `bits` bits equal `prefix`, stopping when
    /// a violation is found here or `stop` is raised elsewhere.
    pub fn sweep_part(&self, prefix: u64, bits: u32, stop: &AtomicBool) -> PartOutcome {
        let low = self.n - bits;
        let mut a = prefix << low;
        let mut e = self.edges_meeting(a);
        let mut out = PartOutcome { violation: false, examined: 1 };
        if self.violates(a, e) {
            stop.store(true, Ordering::Relaxed);
            out.violation = true;
            return out;
        }
        for i in 1u64..(1u64 << low) {
            if i & 0xfff == 0 && stop.load(Ordering::Relaxed) {
                break;
            }
            let v = i.trailing_zeros() as usize;
            let bit = 1u64 << v;
            if a & bit == 0 {
                e += (self.adj[v] & !a).count_ones() as u64;
                a |= bit;
            } else {
                a &= !bit;
                e -= (self.adj[v] & !a).count_ones() as u64;
            }
            out.examined += 1;
            if self.violates(a, e) {
                stop.store(true, Ordering::Relaxed);
                out.violation = true;
                break;
            }
        }
        out
    }

    /// The least-size violating set, first in lexicographic order.
    pub fn canonical_witness(&self) -> Option<u64> {
        let n = self.n as usize;
        for k in 1..=n {
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let a = idx.iter().fold(0u64, |m, &i| m | 1 << i);
                if self.violates(a, self.edges_meeting(a)) {
                    return Some(a);
                }
                let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                    break;
                };
                idx[pos] += 1;
                for p in pos + 1..k {
                    idx[p] = idx[p - 1] + 1;
                }
            }
        }
        None
    }

    /// Merges part outcomes into a report.
    pub fn report(&self, c: &Complex, outcomes: &[PartOutcome]) -> RigidityReport {
        let violation = outcomes.iter().any(|o| o.violation);
        let examined: u64 = outcomes.iter().map(|o| o.examined).sum();
        let total = 1u64 << self.n;
        let witness = violation.then(|| {
            let a = self.canonical_witness().expect("a violation was seen");
            RigidityWitness {
                vertices: (0..self.n as usize)
                    .filter(|i| a >> i & 1 == 1)
                    .map(|i| c.labels()[i].clone())
                    .collect(),
                edges_meeting: self.edges_meeting(a),
                required: self.q * a.count_ones() as u64,
            }
        });
        RigidityReport {
            q: self.q as usize,
            verdict: !violation,
            connected: true,
            witness,
            edges_total: self.edges_meeting(if self.n == 0 { 0 } else { u64::MAX >> (64 - self.n) }),
            bound: bound_for(c, self.q as usize),
            minimal: None,
            stats: SearchStats { examined, pruned: total - examined },
        }
    }
}

fn bound_for(c: &Complex, q: usize) -> u64 {
    min_edge_bound(c.vertex_count(), c.dim().max(0) as usize, q).unwrap_or(0)
}

fn disconnected_report(c: &Complex, q: usize) -> RigidityReport {
    RigidityReport {
        q,
        verdict: false,
        connected: false,
        witness: None,
        edges_total: c.face_count(1) as u64,
        bound: bound_for(c, q),
        minimal: None,
        stats: SearchStats::default(),
    }
}

/// Exhaustive q-rigidity check with the default vertex limit.
pub fn is_q_rigid(c: &Complex, q: usize) -> Result<RigidityReport> {
    is_q_rigid_with_limit(c, q, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn is_q_rigid_with_limit(c: &Complex, q: usize, limit: usize) -> Result<RigidityReport> {
    let ctx = SweepContext::new(c, q, limit)?;
    if !c.is_connected() {
        return Ok(disconnected_report(c, q));
    }
    let stop = AtomicBool::new(false);
    let outcome = ctx.sweep_part(0, 0, &stop);
    Ok(ctx.report(c, &[outcome]))
}

/// Prechecks shared by sequential and parallel drivers: `None` means the
/// sweep must run.
pub fn precheck(c: &Complex, q: usize, limit: usize) -> Result<(SweepContext, Option<RigidityReport>)> {
    let ctx = SweepContext::new(c, q, limit)?;
    let early = (!c.is_connected()).then(|| disconnected_report(c, q));
    Ok((ctx, early))
}

/// q-rigid with exactly `min_edge_bound(n, d, q)` edges.
pub fn is_minimally_q_rigid(c: &Complex, q: usize) -> Result<RigidityReport> {
    let report = is_q_rigid(c, q)?;
    Ok(with_minimality(report))
}

pub fn with_minimality(mut report: RigidityReport) -> RigidityReport {
    report.minimal = Some(report.verdict && report.edges_total == report.bound);
    report
}
