//! Decision procedures for the pseudomanifold class hierarchy, boundaries,
//! crossing graphs and surface orientability.
//!
//! Predicates come in pairs: `is_*` returns a verdict and `*_violation`
//! returns the face that witnesses a negative verdict.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::complex::{Complex, Face, VertexId};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Each ridge (codimension-one face) of the top facets with the number of
/// top facets containing it, sorted by ridge.
fn ridge_incidence(c: &Complex) -> Vec<(Face, usize)> {
    let mut ridges: Vec<Face> = c.top_facets().flat_map(|f| f.ridges()).collect();
    ridges.sort_unstable();
    let mut out: Vec<(Face, usize)> = Vec::new();
    for r in ridges {
        match out.last_mut() {
            Some((last, k)) if *last == r => *k += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

/// A facet of lower dimension, if any.
pub fn purity_violation(c: &Complex) -> Option<Face> {
    c.facets().iter().find(|f| f.dim() != c.dim()).cloned()
}

pub fn is_pure(c: &Complex) -> bool {
    c.is_pure()
}

/// The first ridge not contained in exactly two facets.
pub fn weak_pm_violation(c: &Complex) -> Option<Face> {
    if c.dim() < 1 {
        return Some(Face::empty());
    }
    if let Some(f) = purity_violation(c) {
        return Some(f);
    }
    ridge_incidence(c).into_iter().find(|(_, k)| *k != 2).map(|(r, _)| r)
}

/// Pure, each ridge in exactly two facets.
pub fn is_weak_pm(c: &Complex) -> bool {
    weak_pm_violation(c).is_none()
}

/// The first ridge in three or more facets; the empty face if no ridge is
/// free (the complex has no boundary).
pub fn weak_pm_with_boundary_violation(c: &Complex) -> Option<Face> {
    if c.dim() < 1 {
        return Some(Face::empty());
    }
    if let Some(f) = purity_violation(c) {
        return Some(f);
    }
    let inc = ridge_incidence(c);
    if let Some((r, _)) = inc.iter().find(|(_, k)| *k > 2) {
        return Some(r.clone());
    }
    if inc.iter().all(|(_, k)| *k == 2) {
        return Some(Face::empty());
    }
    None
}

/// Pure, each ridge in at most two facets, some ridge in exactly one.
pub fn is_weak_pm_with_boundary(c: &Complex) -> bool {
    weak_pm_with_boundary_violation(c).is_none()
}

/// `∂C`: the ridges lying in exactly one facet.
pub fn boundary(c: &Complex) -> Result<Complex> {
    if !is_weak_pm_with_boundary(c) {
        return Err(Error::NotWeakPmWithBoundary);
    }
    let free = ridge_incidence(c)
        .into_iter()
        .filter(|(_, k)| *k == 1)
        .map(|(r, _)| r);
    Ok(c.derive(free))
}

/// `Λ(C)`: facets adjacent when they share a ridge. Vertex `i` is facet `i`.
pub fn facet_graph(c: &Complex) -> Result<Graph> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let mut by_ridge: Vec<(Face, usize)> = c
        .facets()
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.ridges().map(move |r| (r, i)))
        .collect();
    by_ridge.sort_unstable();
    let mut edges = Vec::new();
    let mut start = 0;
    while start < by_ridge.len() {
        let mut end = start + 1;
        while end < by_ridge.len() && by_ridge[end].0 == by_ridge[start].0 {
            end += 1;
        }
        for i in start..end {
            for j in i + 1..end {
                edges.push((by_ridge[i].1, by_ridge[j].1));
            }
        }
        start = end;
    }
    Ok(Graph::new(c.facets().len(), edges))
}

/// A facet not reachable from the first facet in `Λ(C)`.
pub fn strong_connectivity_violation(c: &Complex) -> Result<Option<Face>> {
    let g = facet_graph(c)?;
    let comps = g.components();
    Ok(comps.get(1).map(|comp| c.facets()[comp[0]].clone()))
}

pub fn is_strongly_connected(c: &Complex) -> Result<bool> {
    Ok(strong_connectivity_violation(c)?.is_none())
}

/// Whether `lk(a)` is connected, by merging the link vertices of each facet
/// through `a`.
pub(crate) fn link_is_connected(c: &Complex, a: &Face) -> bool {
    let n = c.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut present = alloc::vec![false; n];
    for i in c.facets_containing(a) {
        let mut rest = c.facets()[i].iter().filter(|v| !a.contains(*v));
        if let Some(first) = rest.next() {
            present[first.index()] = true;
            for v in rest {
                present[v.index()] = true;
                uf.union(first.index(), v.index());
            }
        }
    }
    let mut roots = (0..n).filter(|&v| present[v]).map(|v| uf.find(v));
    match roots.next() {
        None => true,
        Some(r) => roots.all(|s| s == r),
    }
}

/// The first face of dimension at most `d - 2` (the empty face first) whose
/// link is disconnected, or a ridge violation of the weak-pm condition.
pub fn normal_pm_violation(c: &Complex) -> Option<Face> {
    if let Some(f) = weak_pm_violation(c) {
        return Some(f);
    }
    link_violation(c)
}

fn link_violation(c: &Complex) -> Option<Face> {
    (-1..=c.dim() - 2)
        .flat_map(|k| c.faces(k).unwrap_or(&[]))
        .find(|a| !link_is_connected(c, a))
        .cloned()
}

/// A weak pm without boundary in which every face of dimension at most
/// `d - 2`, including the empty face, has a connected link.
pub fn is_normal_pm(c: &Complex) -> bool {
    normal_pm_violation(c).is_none()
}

pub fn is_normal_pm_with_boundary(c: &Complex) -> bool {
    is_weak_pm_with_boundary(c) && link_violation(c).is_none()
}

/// The crossing graph of a vertex set `A`: its vertices are the edges with
/// exactly one end in `A`, adjacent when their union is a 2-face.
#[derive(Clone, Debug)]
pub struct CrossingGraph {
    /// Crossing edges in lexicographic order; graph vertex `i` is `edges[i]`.
    pub edges: Vec<Face>,
    pub graph: Graph,
}

impl CrossingGraph {
    pub fn component_count(&self) -> usize {
        self.graph.components().len()
    }
}

/// Requires a normal pm `C` of dimension `d >= 2` in which `C[A]` is a
/// normal pm of dimension `d - 1`.
pub fn crossing_graph(c: &Complex, a: &Face) -> Result<CrossingGraph> {
    if c.dim() < 2 {
        return Err(Error::HypothesisViolated("dimension must be at least 2"));
    }
    if !is_normal_pm(c) {
        return Err(Error::HypothesisViolated("complex is not a normal pseudomanifold"));
    }
    let sub = c.induced(a)?;
    if sub.dim() != c.dim() - 1 || !is_normal_pm(&sub) {
        return Err(Error::HypothesisViolated(
            "induced subcomplex is not a codimension-one normal pseudomanifold",
        ));
    }
    Ok(crossing_graph_unchecked(c, a))
}

pub(crate) fn crossing_graph_unchecked(c: &Complex, a: &Face) -> CrossingGraph {
    let crosses = |e: &Face| e.iter().filter(|v| a.contains(*v)).count() == 1;
    let edges: Vec<Face> = c
        .faces(1)
        .unwrap_or(&[])
        .iter()
        .filter(|e| crosses(e))
        .cloned()
        .collect();
    let mut links = Vec::new();
    for t in c.faces(2).unwrap_or(&[]) {
        let inside = t.iter().filter(|v| a.contains(*v)).count();
        if inside == 0 || inside == 3 {
            continue;
        }
        let idx: Vec<usize> = t
            .ridges()
            .filter(|e| crosses(e))
            .map(|e| edges.binary_search(&e).expect("crossing edge is listed"))
            .collect();
        if let [x, y] = idx[..] {
            links.push((x, y));
        }
    }
    let graph = Graph::new(edges.len(), links);
    CrossingGraph { edges, graph }
}

/// Two-sidedness in the operational sense: the crossing graph has exactly
/// two components.
pub fn is_operationally_two_sided(c: &Complex, a: &Face) -> Result<bool> {
    Ok(crossing_graph(c, a)?.component_count() == 2)
}

/// The lexicographically first `(d+1)`-clique of the edge graph that is not a
/// face while all its `d`-subsets are; it induces `S^{d-1}_{d+1}`.
pub fn find_induced_standard_sphere(c: &Complex) -> Option<Face> {
    if c.dim() < 1 {
        return None;
    }
    let size = c.dim() as usize + 1;
    c.edge_graph()
        .cliques(size)
        .into_iter()
        .map(Face::from_indices)
        .find(|s| !c.contains_face(s) && s.ridges().all(|r| c.contains_face(&r)))
}

/// The first vertex whose link is not a single cycle.
pub fn closed_2manifold_violation(c: &Complex) -> Option<Face> {
    if c.dim() != 2 {
        return Some(Face::empty());
    }
    c.vertices()
        .find(|&v| !is_cycle(&c.vertex_link(v)))
        .map(|v| Face::new(alloc::vec![v]))
}

/// Every vertex link is a single cycle.
pub fn is_closed_2manifold(c: &Complex) -> bool {
    closed_2manifold_violation(c).is_none()
}

fn is_cycle(l: &Complex) -> bool {
    if l.dim() != 1 || !l.is_pure() || l.vertex_count() < 3 {
        return false;
    }
    let g = l.edge_graph();
    (0..g.vertex_count()).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// Coherent orientation signs for the top facets (relative to the sorted
/// vertex order), propagated across shared ridges. `None` when propagation
/// meets a conflict. Requires every ridge to lie in at most two facets.
pub fn coherent_orientation(c: &Complex) -> Result<Option<Vec<i8>>> {
    let inc = ridge_incidence(c);
    if !c.is_pure() || inc.iter().any(|(_, k)| *k > 2) {
        return Err(Error::HypothesisViolated(
            "orientation needs a pure complex with ridges in at most two facets",
        ));
    }
    let facets = c.facets();
    // (ridge, facet, sign of the ridge induced by the facet's positive orientation)
    let mut occ: Vec<(Face, usize, i8)> = Vec::new();
    for (i, f) in facets.iter().enumerate() {
        for (pos, v) in f.iter().enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            occ.push((f.without(v), i, sign));
        }
    }
    occ.sort_unstable();
    let mut nbrs: Vec<Vec<(usize, i8)>> = (0..facets.len()).map(|_| Vec::new()).collect();
    for w in occ.windows(2) {
        if w[0].0 == w[1].0 {
            // Coherence: the two induced ridge orientations are opposite, so
            // s_j = -s_i * sign_i * sign_j.
            let rel = -w[0].2 * w[1].2;
            nbrs[w[0].1].push((w[1].1, rel));
            nbrs[w[1].1].push((w[0].1, rel));
        }
    }
    let mut sign = alloc::vec![0i8; facets.len()];
    for start in 0..facets.len() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &(j, rel) in &nbrs[i] {
                let want = sign[i] * rel;
                if sign[j] == 0 {
                    sign[j] = want;
                    queue.push_back(j);
                } else if sign[j] != want {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some(sign))
}

/// Orientability of a closed 2-manifold.
pub fn is_orientable_2manifold(c: &Complex) -> Result<bool> {
    if !is_closed_2manifold(c) {
        return Err(Error::NotA2Manifold);
    }
    Ok(coherent_orientation(c)?.is_some())
}

/// Orientability for dimension 2 only; other dimensions are unsupported.
pub fn is_orientable(c: &Complex) -> Result<bool> {
    if c.dim() != 2 {
        return Err(Error::Unsupported("orientability is implemented for dimension 2 only"));
    }
    is_orientable_2manifold(c)
}

/// Every class predicate at once, with the witness of the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub dim: i32,
    pub is_pure: bool,
    /// Weak pseudomanifold, with or without boundary.
    pub is_weak_pm: bool,
    pub has_boundary: bool,
    pub is_strongly_connected: bool,
    pub is_pseudomanifold: bool,
    /// Normal pseudomanifold, with or without boundary.
    pub is_normal: bool,
    pub is_closed_2manifold: bool,
    /// Present only for closed 2-manifolds.
    pub is_orientable: Option<bool>,
    pub failing_face: Option<Face>,
}

pub fn classify(c: &Complex) -> ClassReport {
    let pure_v = purity_violation(c);
    let closed_v = weak_pm_violation(c);
    let bdry_v = weak_pm_with_boundary_violation(c);
    let is_pure = pure_v.is_none();
    let has_boundary = bdry_v.is_none();
    let is_weak_pm = closed_v.is_none() || has_boundary;
    let strong_v = if is_pure {
        strong_connectivity_violation(c).unwrap_or(None)
    } else {
        None
    };
    let is_strongly_connected = is_pure && strong_v.is_none();
    let link_v = if is_weak_pm { link_violation(c) } else { None };
    let is_normal = is_weak_pm && link_v.is_none();
    let manifold_v = closed_2manifold_violation(c);
    let is_closed_2manifold = manifold_v.is_none();
    let is_orientable = is_closed_2manifold.then(|| is_orientable_2manifold(c).unwrap_or(false));

    let failing_face = if !is_pure {
        pure_v
    } else if !is_weak_pm {
        // Report a ridge in three or more facets when there is one.
        bdry_v.filter(|f| !f.is_empty()).or(closed_v)
    } else if !is_strongly_connected {
        strong_v
    } else if !is_normal {
        link_v
    } else if c.dim() == 2 && !is_closed_2manifold {
        manifold_v
    } else {
        None
    };
    ClassReport {
        dim: c.dim(),
        is_pure,
        is_weak_pm,
        has_boundary,
        is_strongly_connected,
        is_pseudomanifold: is_weak_pm && is_strongly_connected,
        is_normal,
        is_closed_2manifold,
        is_orientable,
        failing_face,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Vertices of `C` as a face, for passing whole vertex sets around.
pub fn all_vertices(c: &Complex) -> Face {
    Face::new(c.vertices().collect::<Vec<VertexId>>())
}
