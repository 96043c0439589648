//! Surgery on complexes: starring and collapsing vertices, elementary handle
//! addition and deletion, connected sums and generalised bistellar moves.
//!
//! Moves are pure functions. Each has a [`SurgeryRecord`] form that can be
//! replayed and inverted.

mod decompose;
mod record;

pub use decompose::{decompose_2manifold, DecompositionCase};
pub use record::SurgeryRecord;

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{Complex, Face, VertexId};
use crate::error::{Error, Result};
use crate::ops::facet_token_lists;
use crate::verify;

/// A bijection `ψ: σ₁ → σ₂` between facets, given on tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bijection {
    pairs: Vec<(String, String)>,
}

impl Bijection {
    /// Rejects repeated domain or range tokens and overlap between the two.
    pub fn new<I, A, B>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let pairs: Vec<(String, String)> = pairs
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_owned(), b.as_ref().to_owned()))
            .collect();
        let dom: BTreeSet<&str> = pairs.iter().map(|p| p.0.as_str()).collect();
        let ran: BTreeSet<&str> = pairs.iter().map(|p| p.1.as_str()).collect();
        if pairs.is_empty() || dom.len() != pairs.len() || ran.len() != pairs.len() {
            return Err(Error::ArgumentOutOfRange("bijection needs distinct domain and range tokens"));
        }
        if !dom.is_disjoint(&ran) {
            return Err(Error::NotDisjointFacets);
        }
        Ok(Bijection { pairs })
    }

    /// Pairs given as vertex ids of `c`.
    pub fn from_ids(c: &Complex, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(a, b)| (c.label(a), c.label(b))))
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn domain_tokens(&self) -> Vec<&str> {
        self.pairs.iter().map(|p| p.0.as_str()).collect()
    }

    pub fn range_tokens(&self) -> Vec<&str> {
        self.pairs.iter().map(|p| p.1.as_str()).collect()
    }

    pub fn inverse(&self) -> Bijection {
        Bijection {
            pairs: self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// Domain and range as faces of `c`; both must be facets.
    fn facets_in(&self, c: &Complex) -> Result<(Face, Face)> {
        let dom = c.vertex_set(&self.domain_tokens()).map_err(|_| Error::NotDisjointFacets)?;
        let ran = c.vertex_set(&self.range_tokens()).map_err(|_| Error::NotDisjointFacets)?;
        if !c.is_facet(&dom) || !c.is_facet(&ran) || !dom.is_disjoint(&ran) {
            return Err(Error::NotDisjointFacets);
        }
        Ok((dom, ran))
    }
}

fn token_map(pairs: &[(String, String)]) -> BTreeMap<String, String> {
    pairs.iter().cloned().collect()
}

/// Bistellar 0-move: replaces the facet `σ` by the cone from a new vertex
/// `v` over its boundary.
pub fn star_vertex(c: &Complex, sigma: &Face, v: &str) -> Result<Complex> {
    if !c.is_facet(sigma) {
        return Err(Error::NotAFacet(c.owned_tokens(sigma)));
    }
    if c.vertex(v).is_some() {
        return Err(Error::VertexExists(v.to_owned()));
    }
    let mut facets: Vec<Vec<String>> = c
        .facets()
        .iter()
        .filter(|f| *f != sigma)
        .map(|f| c.owned_tokens(f))
        .collect();
    for r in sigma.ridges() {
        let mut f = c.owned_tokens(&r);
        f.push(v.to_owned());
        facets.push(f);
    }
    Complex::from_facets(facets)
}

/// Bistellar d-move: removes a vertex whose link is the boundary of a
/// simplex `σ` that is not yet a face, and inserts `σ`.
pub fn collapse_vertex(c: &Complex, v: VertexId) -> Result<Complex> {
    let d = c.dim();
    let vf = Face::new(alloc::vec![v]);
    let token = || c.label(v).to_owned();
    let degree = c.degree(&vf)?;
    if d < 1 || degree != d as usize + 1 {
        return Err(Error::WrongDegree {
            token: token(),
            degree,
            expected: (d + 1).max(0) as usize,
        });
    }
    let star: Vec<usize> = c.facets_containing(&vf).collect();
    if star.len() != d as usize + 1 || star.iter().any(|&i| c.facets()[i].dim() != d) {
        return Err(Error::LinkNotStandardSphere(token()));
    }
    let sigma: Face = star
        .iter()
        .flat_map(|&i| c.facets()[i].iter())
        .filter(|&x| x != v)
        .collect();
    if c.contains_face(&sigma) {
        return Err(Error::LinkSpansFace(token()));
    }
    let sets = c
        .facets()
        .iter()
        .filter(|f| !f.contains(v))
        .cloned()
        .chain(core::iter::once(sigma));
    Ok(c.derive(sets))
}

/// The first pair `(x, ψ(x))` at edge-graph distance below 3, if any.
pub fn admissibility_violation(c: &Complex, psi: &Bijection) -> Result<Option<(String, String)>> {
    psi.facets_in(c)?;
    let g = c.edge_graph();
    for (a, b) in psi.pairs() {
        let (x, y) = (c.require_vertex(a)?, c.require_vertex(b)?);
        if !g.distance(x.index(), y.index()).at_least(3) {
            return Ok(Some((a.clone(), b.clone())));
        }
    }
    Ok(None)
}

/// `ψ` is admissible when every `x` is at distance at least 3 from `ψ(x)`;
/// pairs in different components are at infinite distance.
pub fn is_admissible(c: &Complex, psi: &Bijection) -> Result<bool> {
    Ok(admissibility_violation(c, psi)?.is_none())
}

/// Elementary handle addition `C^ψ`: drops both facets and identifies each
/// `ψ(x)` with `x`. The domain token survives.
pub fn handle_add(c: &Complex, psi: &Bijection) -> Result<Complex> {
    handle_add_renamed(c, psi, &[])
}

/// Handle addition followed by renaming surviving tokens.
pub fn handle_add_renamed(c: &Complex, psi: &Bijection, rename: &[(String, String)]) -> Result<Complex> {
    if let Some((from, to)) = admissibility_violation(c, psi)? {
        return Err(Error::NotAdmissible { from, to });
    }
    let (dom, ran) = psi.facets_in(c)?;
    let identify = token_map(&psi.inverse().pairs);
    let rename = token_map(rename);
    let facets = c
        .facets()
        .iter()
        .filter(|f| **f != dom && **f != ran)
        .map(|f| {
            c.tokens(f)
                .into_iter()
                .map(|t| {
                    let t = identify.get(t).map_or(t, String::as_str);
                    rename.get(t).cloned().unwrap_or_else(|| t.to_owned())
                })
                .collect::<Vec<_>>()
        });
    Complex::from_facets(facets)
}

/// `X₁ #_ψ X₂ = (X₁ ⊔ X₂)^ψ` for vertex-disjoint complexes, `ψ` mapping a
/// facet of `X₁` to a facet of `X₂`.
pub fn connected_sum(x1: &Complex, x2: &Complex, psi: &Bijection) -> Result<Complex> {
    let union = x1.disjoint_union(x2)?;
    let dom = x1.vertex_set(&psi.domain_tokens()).map_err(|_| not_facet(psi.domain_tokens()))?;
    if !x1.is_facet(&dom) {
        return Err(not_facet(psi.domain_tokens()));
    }
    let ran = x2.vertex_set(&psi.range_tokens()).map_err(|_| not_facet(psi.range_tokens()))?;
    if !x2.is_facet(&ran) {
        return Err(not_facet(psi.range_tokens()));
    }
    handle_add(&union, psi)
}

fn not_facet(tokens: Vec<&str>) -> Error {
    Error::NotAFacet(tokens.into_iter().map(ToOwned::to_owned).collect())
}

/// Result of an elementary handle deletion.
#[derive(Clone, Debug)]
pub struct HandleDeletion {
    pub complex: Complex,
    /// `(w⁺, w⁻)` token pairs, in the order of the sphere's vertices.
    pub sides: Vec<(String, String)>,
    /// Handle addition that restores the input exactly.
    pub readd: SurgeryRecord,
}

/// Suffixes for the two copies of each sphere vertex.
pub const PLUS_SUFFIX: &str = "+";
pub const MINUS_SUFFIX: &str = "-";

/// Whether `a` induces `S^{d-1}_{d+1}`: `d+1` vertices, not a face, every
/// `d`-subset a face.
pub fn induces_standard_sphere(c: &Complex, a: &Face) -> bool {
    c.dim() >= 1
        && a.len() == c.dim() as usize + 1
        && !c.contains_face(a)
        && a.ridges().all(|r| c.contains_face(&r))
}

/// Elementary handle deletion over the induced two-sided standard sphere on
/// `a`.
pub fn handle_delete(c: &Complex, a: &Face) -> Result<Complex> {
    handle_deletion(c, a).map(|h| h.complex)
}

/// Facets meeting `a` are split by the component of the crossing graph
/// holding their crossing edges. The positive side is the component of the
/// lexicographically first crossing edge. Sphere vertex `w` becomes `w+` on
/// positive facets and `w-` on negative ones, and both copies of the sphere
/// are added as facets.
pub fn handle_deletion(c: &Complex, a: &Face) -> Result<HandleDeletion> {
    if !induces_standard_sphere(c, a) {
        return Err(Error::NotInducedStandardSphere);
    }
    let cg = verify::crossing_graph(c, a)?;
    let comps = cg.graph.components();
    if comps.len() != 2 {
        return Err(Error::NotTwoSided);
    }
    let mut positive = alloc::vec![false; cg.edges.len()];
    for &i in &comps[0] {
        positive[i] = true;
    }

    let sides: Vec<(String, String)> = a
        .iter()
        .map(|w| {
            let t = c.label(w);
            (alloc::format!("{t}{PLUS_SUFFIX}"), alloc::format!("{t}{MINUS_SUFFIX}"))
        })
        .collect();
    for t in sides.iter().flat_map(|(p, m)| [p, m]) {
        if c.vertex(t).is_some() {
            return Err(Error::VertexCollision(t.clone()));
        }
    }
    let copy = |w: VertexId, plus: bool| -> String {
        let i = a.vertices().binary_search(&w).expect("sphere vertex");
        if plus { sides[i].0.clone() } else { sides[i].1.clone() }
    };

    let mut facets: Vec<Vec<String>> = alloc::vec![
        sides.iter().map(|p| p.0.clone()).collect(),
        sides.iter().map(|p| p.1.clone()).collect(),
    ];
    for f in c.facets() {
        let Some(w) = f.iter().find(|v| a.contains(*v)) else {
            facets.push(c.owned_tokens(f));
            continue;
        };
        let u = f.iter().find(|v| !a.contains(*v)).expect("facet is not inside the sphere");
        let e = Face::new(alloc::vec![w, u]);
        let plus = positive[cg.edges.binary_search(&e).expect("crossing edge")];
        facets.push(
            f.iter()
                .map(|v| if a.contains(v) { copy(v, plus) } else { c.label(v).to_owned() })
                .collect(),
        );
    }
    let complex = Complex::from_facets(facets)?;
    let readd = SurgeryRecord::HandleAdd {
        pairs: sides.clone(),
        rename: sides
            .iter()
            .zip(a.iter())
            .map(|((p, _), w)| (p.clone(), c.label(w).to_owned()))
            .collect(),
    };
    Ok(HandleDeletion { complex, sides, readd })
}

/// Generalised bistellar move `(C ∖ B₁) ∪ B₂`.
///
/// `B₁` must consist of facets of `C`; both balls must be pure weak
/// pseudomanifolds with boundary of dimension `dim C` with `∂B₁ = ∂B₂`; and
/// `B₂` may meet the rest of `C` only in its boundary. That the balls are
/// combinatorial balls is taken on trust.
pub fn gbm(c: &Complex, b1: &Complex, b2: &Complex) -> Result<Complex> {
    if !verify::is_weak_pm(c) {
        return Err(Error::NotWeakPm);
    }
    let d = c.dim();
    let mut b1_facets: Vec<Face> = facet_token_lists(b1)
        .iter()
        .map(|f| c.vertex_set(f))
        .collect::<Result<_>>()
        .map_err(|_| Error::NotSubcomplex)?;
    b1_facets.sort_unstable();
    if b1.dim() != d || b1_facets.iter().any(|f| !c.is_facet(f)) {
        return Err(Error::NotSubcomplex);
    }
    if b2.dim() != d || !verify::is_weak_pm_with_boundary(b1) || !verify::is_weak_pm_with_boundary(b2) {
        return Err(Error::NotWeakPmWithBoundary);
    }
    let bd1 = verify::boundary(b1)?;
    let bd2 = verify::boundary(b2)?;
    if bd1 != bd2 {
        return Err(Error::BoundaryMismatch);
    }
    let interior1: BTreeSet<&str> = b1
        .labels()
        .iter()
        .map(String::as_str)
        .filter(|t| bd1.vertex(t).is_none())
        .collect();
    for t in b2.labels().iter().filter(|t| bd2.vertex(t).is_none()) {
        if c.vertex(t).is_some() && !interior1.contains(t.as_str()) {
            return Err(Error::InteriorVertexCollision(t.clone()));
        }
    }
    let rest: Vec<Vec<String>> = c
        .facets()
        .iter()
        .filter(|f| b1_facets.binary_search(f).is_err())
        .map(|f| c.owned_tokens(f))
        .collect();
    let rest_complex = Complex::from_facets(rest.iter())?;
    for f in b2.all_faces() {
        let toks = b2.tokens(f);
        let in_rest = rest_complex.vertex_set(&toks).is_ok_and(|s| rest_complex.contains_face(&s));
        let in_bd = bd2.vertex_set(&toks).is_ok_and(|s| bd2.contains_face(&s));
        if in_rest != in_bd {
            return Err(Error::BoundaryMismatch);
        }
    }
    let mut facets = rest;
    facets.extend(facet_token_lists(b2));
    Complex::from_facets(facets)
}
