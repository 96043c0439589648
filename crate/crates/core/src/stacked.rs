//! Stacked spheres: generation by repeated starring, the closed-form face
//! vector, recognition by collapsing, and the clique-closure recognizer.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::complex::{Complex, Face, VertexId};
use crate::error::{Error, Result};
use crate::fvector::{binomial, FaceVector};
use crate::moves::{collapse_vertex, star_vertex};
use crate::verify;

/// Which facet a stacking step subdivides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Facet(Vec<String>),
    /// A facet drawn uniformly from the current canonical facet list using
    /// the script's seeded generator.
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackStep {
    pub selector: Selector,
    pub vertex: String,
}

/// Starting from `S^d_{d+2}` on tokens `1..=d+2`, star one new vertex per
/// step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackScript {
    pub d: i32,
    pub seed: Option<u64>,
    pub steps: Vec<StackStep>,
}

impl StackScript {
    /// `steps` random steps adding tokens `d+3, d+4, …`.
    pub fn random(d: i32, steps: usize, seed: u64) -> Self {
        StackScript {
            d,
            seed: Some(seed),
            steps: (0..steps)
                .map(|i| StackStep {
                    selector: Selector::Random,
                    vertex: (d as usize + 3 + i).to_string(),
                })
                .collect(),
        }
    }

    /// The `n`-vertex stacked sphere where vertex `k` is starred into the
    /// facet `{k-d-1, …, k-1}`. Its edge graph is the `(d+1)`-th power of a
    /// path, so vertices far apart in the order are far apart in the graph.
    pub fn linear(d: i32, n: usize) -> Self {
        let d1 = d as usize + 1;
        StackScript {
            d,
            seed: None,
            steps: (d1 + 2..=n)
                .map(|k| StackStep {
                    selector: Selector::Facet((k - d1..k).map(|t| t.to_string()).collect()),
                    vertex: k.to_string(),
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.d.max(0) as usize + 2 + self.steps.len()
    }
}

/// Replays a script. Each step must name an existing facet and a new token.
pub fn generate_stacked(script: &StackScript) -> Result<Complex> {
    if script.d < 1 {
        return Err(Error::ArgumentOutOfRange("stacked spheres need d >= 1"));
    }
    let mut rng = script.seed.map(ChaCha8Rng::seed_from_u64);
    let mut c = catalog::standard_sphere(script.d)?;
    for (step, s) in script.steps.iter().enumerate() {
        let invalid = Error::SelectorInvalid { step };
        let sigma = match &s.selector {
            Selector::Facet(tokens) => c.vertex_set(tokens).map_err(|_| invalid.clone())?,
            Selector::Random => {
                let rng = rng.as_mut().ok_or(invalid.clone())?;
                c.facets()[rng.random_range(0..c.facets().len())].clone()
            }
        };
        c = star_vertex(&c, &sigma, &s.vertex).map_err(|e| match e {
            Error::NotAFacet(_) => invalid,
            other => other,
        })?;
    }
    Ok(c)
}

/// Face vector of any `n`-vertex stacked `d`-sphere.
pub fn stacked_fvector(d: i32, n: usize) -> Result<FaceVector> {
    if d < 1 || n < d as usize + 2 {
        return Err(Error::ArgumentOutOfRange("need n >= d + 2 >= 3"));
    }
    let (d, n) = (d as i64, n as i64);
    let counts = (0..=d)
        .map(|j| {
            let f = if j == 0 {
                n as i128
            } else if j < d {
                binomial(d + 1, j) * n as i128 - j as i128 * binomial(d + 2, j + 1)
            } else {
                (d * n - (d + 2) * (d - 1)) as i128
            };
            f as u64
        })
        .collect();
    Ok(FaceVector::new(counts))
}

/// Outcome of [`is_stacked`]; `trace` lists collapsed vertices in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedVerdict {
    pub stacked: bool,
    pub trace: Vec<String>,
}

/// Recognizes stacked spheres among normal pseudomanifolds by collapsing
/// the smallest eligible vertex until `S^d_{d+2}` remains or no vertex is
/// eligible. Every cycle counts as stacked.
pub fn is_stacked(c: &Complex) -> Result<StackedVerdict> {
    is_stacked_by(c, |_| 0)
}

/// Like [`is_stacked`], with `pick` choosing among the eligible vertices
/// (given in increasing order).
pub fn is_stacked_by(c: &Complex, mut pick: impl FnMut(&[VertexId]) -> usize) -> Result<StackedVerdict> {
    if c.dim() < 1 || !verify::is_normal_pm(c) {
        return Err(Error::NotNormalPm);
    }
    let d = c.dim();
    let mut trace = Vec::new();
    if d == 1 {
        return Ok(StackedVerdict { stacked: true, trace });
    }
    let mut cur = c.clone();
    loop {
        if cur.vertex_count() == d as usize + 2 {
            let stacked = cur.facets().len() == d as usize + 2;
            return Ok(StackedVerdict { stacked, trace });
        }
        let eligible: Vec<(VertexId, Complex)> = cur
            .vertices()
            .filter(|&v| cur.vertex_degree(v) == d as usize + 1)
            .filter_map(|v| collapse_vertex(&cur, v).ok().map(|x| (v, x)))
            .collect();
        if eligible.is_empty() {
            return Ok(StackedVerdict { stacked: false, trace });
        }
        let ids: Vec<VertexId> = eligible.iter().map(|e| e.0).collect();
        let (v, next) = eligible.into_iter().nth(pick(&ids).min(ids.len() - 1)).expect("index in range");
        trace.push(cur.label(v).to_string());
        cur = next;
    }
}

/// `X̄`: the complex whose faces are the cliques of the edge graph.
pub fn clique_closure(c: &Complex) -> Result<Complex> {
    if c.dim() < 2 {
        return Err(Error::DimensionOutOfRange { k: c.dim() as i64, min: 2, max: i64::MAX });
    }
    Ok(c.derive(c.edge_graph().maximal_cliques().into_iter().map(Face::from_indices)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueVerdict {
    pub stacked: bool,
    /// Number of `(d+2)`-cliques of the edge graph.
    pub clique_count: usize,
}

/// Stacked iff `X̄` is a `(d+1)`-dimensional weak pseudomanifold with
/// boundary, `∂X̄ = C`, and the edge graph has exactly `n - d - 1` cliques
/// of size `d + 2`.
pub fn is_one_stacked_via_cliques(c: &Complex) -> Result<CliqueVerdict> {
    if c.dim() < 2 || !verify::is_normal_pm(c) {
        return Err(Error::NotNormalPm);
    }
    let d = c.dim() as usize;
    let n = c.vertex_count();
    let closure = clique_closure(c)?;
    let clique_count = c.edge_graph().cliques(d + 2).len();
    let stacked = closure.dim() == d as i32 + 1
        && clique_count + d + 1 == n
        && verify::boundary(&closure).is_ok_and(|b| b == *c);
    Ok(CliqueVerdict { stacked, clique_count })
}

/// The antistar of `v` in a stacked sphere: a stacked ball with boundary
/// `lk(v)`.
pub fn stacked_ball_antistar(c: &Complex, v: VertexId) -> Result<Complex> {
    if !is_stacked(c)?.stacked {
        return Err(Error::NotStacked);
    }
    c.antistar(&Face::new(alloc::vec![v]))
}
