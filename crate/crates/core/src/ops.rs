//! Constructions on complexes: links, stars, antistars, induced subcomplexes,
//! joins, cones, one-point suspensions, skeleta and the edge graph.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::complex::{Complex, Face, VertexId};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};

impl Complex {
    fn require_face(&self, a: &Face) -> Result<()> {
        if self.contains_face(a) {
            Ok(())
        } else {
            Err(Error::NotAFace(self.owned_tokens(a)))
        }
    }

    /// Indices of facets containing `a`.
    pub fn facets_containing<'a>(&'a self, a: &'a Face) -> impl Iterator<Item = usize> + 'a {
        let m = a.mask(self.vertex_count());
        self.facet_masks()
            .iter()
            .enumerate()
            .filter(move |(_, fm)| m.is_subset(fm))
            .map(|(i, _)| i)
    }

    /// `lk(a)`: faces `b` disjoint from `a` with `a ∪ b` a face. The link of
    /// the empty face is the complex itself; the link of a facet is `{∅}`.
    pub fn link(&self, a: &Face) -> Result<Complex> {
        self.require_face(a)?;
        if a.is_empty() {
            return Ok(self.clone());
        }
        let sets: Vec<Face> = self
            .facets_containing(a)
            .map(|i| self.facets()[i].minus(a))
            .collect();
        Ok(self.derive(sets))
    }

    pub fn vertex_link(&self, v: VertexId) -> Complex {
        self.link(&Face::new(alloc::vec![v]))
            .expect("every vertex lies in a facet")
    }

    /// `star(v) = v ∗ lk(v)`, generated by the facets through `v`.
    pub fn star(&self, v: VertexId) -> Result<Complex> {
        let a = Face::new(alloc::vec![v]);
        self.require_face(&a)?;
        let sets: Vec<Face> = self
            .facets_containing(&a)
            .map(|i| self.facets()[i].clone())
            .collect();
        Ok(self.derive(sets))
    }

    /// Faces disjoint from `a`.
    pub fn antistar(&self, a: &Face) -> Result<Complex> {
        self.require_face(a)?;
        Ok(self.induced_unchecked(&self.complement_of(a)))
    }

    fn complement_of(&self, a: &Face) -> Face {
        self.vertices().filter(|v| !a.contains(*v)).collect()
    }

    fn induced_unchecked(&self, a: &Face) -> Complex {
        self.derive(self.facets().iter().map(|f| f.iter().filter(|v| a.contains(*v)).collect()))
    }

    /// `C[A]`: all faces contained in `A`.
    pub fn induced(&self, a: &Face) -> Result<Complex> {
        if let Some(v) = a.iter().find(|v| v.index() >= self.vertex_count()) {
            return Err(Error::UnknownVertex(alloc::format!("#{}", v.0)));
        }
        Ok(self.induced_unchecked(a))
    }

    /// Induced subcomplex on a set of tokens.
    pub fn induced_by_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Complex> {
        let a = self.vertex_set(tokens)?;
        Ok(self.induced_unchecked(&a))
    }

    /// Whether `y` (compared by tokens) is an induced subcomplex of `self`.
    pub fn is_induced_subcomplex(&self, y: &Complex) -> bool {
        let Ok(a) = self.vertex_set(y.labels()) else {
            return false;
        };
        self.induced_unchecked(&a) == *y
    }

    /// `C(Y, X)`: the subcomplex induced on the vertices not in `Y`.
    pub fn simplicial_complement(&self, y: &Complex) -> Result<Complex> {
        if !self.is_induced_subcomplex(y) {
            return Err(Error::NotInduced);
        }
        let a = self.vertex_set(y.labels())?;
        Ok(self.induced_unchecked(&self.complement_of(&a)))
    }

    /// The number of vertices of `lk(a)`.
    pub fn degree(&self, a: &Face) -> Result<usize> {
        self.require_face(a)?;
        let mut seen = VertexSet::with_capacity(self.vertex_count());
        for i in self.facets_containing(a) {
            for v in self.facets()[i].iter() {
                if !a.contains(v) {
                    seen.insert(v.index());
                }
            }
        }
        Ok(seen.len())
    }

    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.degree(&Face::new(alloc::vec![v])).unwrap_or(0)
    }

    /// The 1-skeleton as a graph on vertex indices.
    pub fn edge_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for f in self.facets() {
            let vs = f.vertices();
            for (i, a) in vs.iter().enumerate() {
                for b in &vs[i + 1..] {
                    edges.push((a.index(), b.index()));
                }
            }
        }
        Graph::new(self.vertex_count(), edges)
    }

    pub fn graph_distance(&self, u: VertexId, v: VertexId) -> Distance {
        self.edge_graph().distance(u.index(), v.index())
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.edge_graph()
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| VertexId(i as u32)).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Components as complexes.
    pub fn component_complexes(&self) -> Vec<Complex> {
        self.connected_components()
            .into_iter()
            .map(|c| self.induced_unchecked(&Face::new(c)))
            .collect()
    }

    /// `skel_k`: faces of dimension at most `k`.
    pub fn skeleton(&self, k: i32) -> Result<Complex> {
        if k < 0 || k > self.dim() {
            return Err(Error::DimensionOutOfRange {
                k: k as i64,
                min: 0,
                max: self.dim() as i64,
            });
        }
        let mut sets: Vec<Face> = self.faces(k)?.to_vec();
        sets.extend(self.facets().iter().filter(|f| f.dim() < k).cloned());
        Ok(self.derive(sets))
    }

    /// `X ∗ Y` for vertex-disjoint complexes.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if let Some(t) = self.labels().iter().find(|t| other.vertex(t).is_some()) {
            return Err(Error::VertexCollision(t.clone()));
        }
        let mine = facet_token_lists(self);
        let theirs = facet_token_lists(other);
        let sets = mine.iter().flat_map(|a| {
            theirs.iter().map(move |b| a.iter().chain(b.iter()).cloned().collect::<Vec<_>>())
        });
        Complex::generated_by(sets)
    }

    /// `x ∗ Y`.
    pub fn cone(&self, apex: &str) -> Result<Complex> {
        Complex::from_facets([[apex]])?.join(self)
    }

    /// `Σ_{u,v}(X) = (u ∗ ast(u)) ∪ (v ∗ X)` for a vertex `u` and a new token `v`.
    pub fn one_point_suspension(&self, u: VertexId, v: &str) -> Result<Complex> {
        if self.vertex(v).is_some() {
            return Err(Error::VertexCollision(v.to_owned()));
        }
        if u.index() >= self.vertex_count() {
            return Err(Error::UnknownVertex(alloc::format!("#{}", u.0)));
        }
        let ast = self.antistar(&Face::new(alloc::vec![u]))?;
        let u_tok = self.label(u).to_owned();
        let mut sets: Vec<Vec<String>> = facet_token_lists(&ast)
            .into_iter()
            .map(|mut f| {
                f.push(u_tok.clone());
                f
            })
            .collect();
        sets.extend(facet_token_lists(self).into_iter().map(|mut f| {
            f.push(v.to_owned());
            f
        }));
        Complex::generated_by(sets)
    }

    /// Renames vertices; tokens missing from `map` are kept. Distinct
    /// vertices mapped to one token are identified.
    pub fn relabel(&self, map: &BTreeMap<String, String>) -> Result<Complex> {
        let sets = facet_token_lists(self).into_iter().map(|f| {
            f.into_iter()
                .map(|t| map.get(&t).cloned().unwrap_or(t))
                .collect::<Vec<_>>()
        });
        Complex::generated_by(sets)
    }

    /// `X ⊔ Y` for vertex-disjoint complexes.
    pub fn disjoint_union(&self, other: &Complex) -> Result<Complex> {
        if let Some(t) = self.labels().iter().find(|t| other.vertex(t).is_some()) {
            return Err(Error::VertexCollision(t.clone()));
        }
        let mut sets = facet_token_lists(self);
        sets.extend(facet_token_lists(other));
        Complex::generated_by(sets)
    }

    /// Vertex tokens as an owned, canonically ordered list.
    pub fn vertex_tokens(&self) -> Vec<String> {
        self.labels().to_owned()
    }
}

/// Facets as owned token lists; the void complex yields one empty list so
/// that joins with it are the identity.
pub(crate) fn facet_token_lists(c: &Complex) -> Vec<Vec<String>> {
    if c.facets().is_empty() {
        return alloc::vec![Vec::new()];
    }
    c.facets().iter().map(|f| c.owned_tokens(f)).collect()
}
