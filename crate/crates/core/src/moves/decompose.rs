use alloc::string::String;
use alloc::vec::Vec;

use super::{gbm, handle_deletion, SurgeryRecord};
use crate::complex::{Complex, Face, VertexId};
use crate::error::{Error, Result};
use crate::verify;

/// How a connected, closed, orientable surface reduces to smaller ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionCase {
    /// The complex is `S²₄`.
    StandardSphere,
    /// `C = X₁ # X₂`. Replaying `readd` on `X₁ ⊔ X₂` gives `C` exactly.
    ConnectedSum {
        x1: Complex,
        x2: Complex,
        seam: Vec<String>,
        readd: SurgeryRecord,
    },
    /// `C = Y^ψ` with `Y` connected. Replaying `readd` on `Y` gives `C`.
    HandleAddition {
        y: Complex,
        seam: Vec<String>,
        readd: SurgeryRecord,
    },
    /// `C` is obtained from `Y = (C ∖ star(u)) ∪ B_u` by the move
    /// `(B_u, star(u))`; `B_u` is the fan from the smallest link vertex.
    GbmReduction { u: String, b_u: Complex, y: Complex },
}

impl DecompositionCase {
    pub fn tag(&self) -> &'static str {
        match self {
            DecompositionCase::StandardSphere => "standard_sphere",
            DecompositionCase::ConnectedSum { .. } => "connected_sum",
            DecompositionCase::HandleAddition { .. } => "handle_addition",
            DecompositionCase::GbmReduction { .. } => "gbm_reduction",
        }
    }

    /// Rebuilds `c` from the payload.
    pub fn verify(&self, c: &Complex) -> bool {
        let rebuilt = match self {
            DecompositionCase::StandardSphere => {
                return c.vertex_count() == 4 && verify::is_closed_2manifold(c)
            }
            DecompositionCase::ConnectedSum { x1, x2, readd, .. } => {
                if !x1.is_connected() || !x2.is_connected() {
                    return false;
                }
                x1.disjoint_union(x2).and_then(|u| readd.replay(&u))
            }
            DecompositionCase::HandleAddition { y, readd, .. } => {
                if !y.is_connected() {
                    return false;
                }
                readd.replay(y)
            }
            DecompositionCase::GbmReduction { u, b_u, y } => c
                .require_vertex(u)
                .and_then(|v| c.star(v))
                .and_then(|star| gbm(y, b_u, &star)),
        };
        rebuilt.is_ok_and(|r| r == *c)
    }
}

/// Splits a connected, closed, orientable triangulated surface into one of
/// four cases. Vertices are scanned in order and the first link diagonal
/// that is an edge gives an induced `S¹₃` to cut along.
pub fn decompose_2manifold(c: &Complex) -> Result<DecompositionCase> {
    if !verify::is_closed_2manifold(c) || !c.is_connected() {
        return Err(Error::HypothesisViolated("input must be a connected closed surface"));
    }
    if !verify::is_orientable_2manifold(c)? {
        return Err(Error::HypothesisViolated("non-orientable surfaces are not supported"));
    }
    if c.vertex_count() == 4 {
        return Ok(DecompositionCase::StandardSphere);
    }
    let g = c.edge_graph();
    for x in c.vertices() {
        let lk = c.vertex_link(x);
        let lg = lk.edge_graph();
        for i in 0..lk.vertex_count() {
            for j in i + 1..lk.vertex_count() {
                if lg.is_adjacent(i, j) {
                    continue;
                }
                let (y, z) = (c.require_vertex(lk.label(VertexId(i as u32)))?, c.require_vertex(lk.label(VertexId(j as u32)))?);
                if !g.is_adjacent(y.index(), z.index()) {
                    continue;
                }
                let seam = Face::new(alloc::vec![x, y, z]);
                let h = handle_deletion(c, &seam)?;
                let seam_tokens = c.owned_tokens(&seam);
                let mut parts = h.complex.component_complexes();
                return Ok(if parts.len() == 2 {
                    let x2 = parts.pop().expect("two components");
                    let x1 = parts.pop().expect("two components");
                    DecompositionCase::ConnectedSum { x1, x2, seam: seam_tokens, readd: h.readd }
                } else {
                    DecompositionCase::HandleAddition { y: h.complex, seam: seam_tokens, readd: h.readd }
                });
            }
        }
    }
    let u = VertexId(0);
    let star = c.star(u)?;
    let b_u = fan(&c.vertex_link(u))?;
    let y = gbm(c, &star, &b_u)?;
    Ok(DecompositionCase::GbmReduction { u: c.label(u).into(), b_u, y })
}

/// Triangulates the disc bounded by a cycle with all diagonals from the
/// cycle's first vertex.
fn fan(cycle: &Complex) -> Result<Complex> {
    let g = cycle.edge_graph();
    let n = g.vertex_count();
    let mut order = alloc::vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().expect("non-empty");
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&w| w != prev && !order.contains(&w))
            .ok_or(Error::HypothesisViolated("vertex link is not a cycle"))?;
        prev = cur;
        order.push(next);
    }
    let apex = cycle.label(VertexId(0));
    Complex::from_facets(order[1..].windows(2).map(|w| {
        [apex, cycle.label(VertexId(w[0] as u32)), cycle.label(VertexId(w[1] as u32))]
    }))
}
