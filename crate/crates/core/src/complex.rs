use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::fvector::FaceVector;
use crate::token::{is_decimal_token, token_cmp, valid_token};

/// Dense vertex index inside one [`Complex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A strictly increasing vertex sequence. The empty face has dimension -1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Face::new(it.into_iter().map(|i| VertexId(i as u32)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: VertexId) -> Face {
        let mut w = self.0.clone();
        w.push(v);
        Face::new(w)
    }

    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    /// All subsets of size `len() - 1`, in lexicographic order.
    pub fn ridges(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).rev().map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Face(v)
        })
    }

    pub(crate) fn mask(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, self.iter().map(VertexId::index))
    }
}

impl FromIterator<VertexId> for Face {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Face::new(iter.into_iter().collect())
    }
}

/// An immutable finite simplicial complex, stored as its facet list.
///
/// Vertex indices follow the canonical token order, and facets are sorted
/// lexicographically. The per-dimension face lists are enumerated on first
/// use and kept for the lifetime of the value.
pub struct Complex {
    labels: Vec<String>,
    numeric: bool,
    facets: Vec<Face>,
    facet_masks: Vec<VertexSet>,
    dim: i32,
    faces: OnceBox<Vec<Vec<Face>>>,
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        let faces = OnceBox::new();
        if let Some(f) = self.faces.get() {
            let _ = faces.set(Box::new(f.clone()));
        }
        Complex {
            labels: self.labels.clone(),
            numeric: self.numeric,
            facets: self.facets.clone(),
            facet_masks: self.facet_masks.clone(),
            dim: self.dim,
            faces,
        }
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<&str>> = self.facets.iter().map(|s| self.tokens(s)).collect();
        f.debug_struct("Complex").field("facets", &facets).finish()
    }
}

impl Complex {
    /// Builds a complex from facets given as token lists.
    ///
    /// Facets that are contained in another facet are rejected rather than
    /// absorbed. An empty facet list yields the complex whose only face is
    /// the empty face.
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let raw = collect_token_sets(facets, true)?;
        let (labels, numeric) = canonical_labels(&raw);
        let n = labels.len();
        let sets = index_sets(&labels, numeric, &raw);
        let masks: Vec<VertexSet> = sets.iter().map(|f| f.mask(n)).collect();
        for (i, mi) in masks.iter().enumerate() {
            for (j, mj) in masks.iter().enumerate() {
                if i != j && mi.is_subset(mj) && (sets[i].len() < sets[j].len() || i > j) {
                    return Err(Error::NonMaximalFacet {
                        inner: raw[i].clone(),
                        outer: raw[j].clone(),
                    });
                }
            }
        }
        Ok(Self::assemble(labels, numeric, sets))
    }

    /// The complex generated by arbitrary vertex sets: every subset of a
    /// given set is a face, and non-maximal sets are absorbed.
    pub fn generated_by<I, F, S>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let raw = collect_token_sets(sets, false)?;
        let (labels, numeric) = canonical_labels(&raw);
        let sets = index_sets(&labels, numeric, &raw);
        Ok(Self::assemble_maximal(labels, numeric, sets))
    }

    /// The complex `{∅}`: no vertices, dimension -1.
    pub fn void() -> Self {
        Self::assemble(Vec::new(), true, Vec::new())
    }

    /// Builds the complex generated by `sets`, given in this complex's
    /// indexing. Vertices not used by any set are dropped.
    pub(crate) fn derive<I: IntoIterator<Item = Face>>(&self, sets: I) -> Complex {
        let sets: Vec<Face> = sets.into_iter().collect();
        let mut used = VertexSet::with_capacity(self.labels.len());
        for s in &sets {
            for v in s.iter() {
                used.insert(v.index());
            }
        }
        let mut order: Vec<usize> = used.iter().collect();
        let numeric = order.iter().all(|&i| is_decimal_token(&self.labels[i]));
        if numeric != self.numeric {
            order.sort_by(|&a, &b| token_cmp(numeric, &self.labels[a], &self.labels[b]));
        }
        let mut remap = alloc::vec![u32::MAX; self.labels.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
        }
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let sets = sets
            .iter()
            .map(|s| s.iter().map(|v| VertexId(remap[v.index()])).collect())
            .collect();
        Self::assemble_maximal(labels, numeric, sets)
    }

    fn assemble_maximal(labels: Vec<String>, numeric: bool, mut sets: Vec<Face>) -> Self {
        let n = labels.len();
        sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Face> = Vec::new();
        let mut kept_masks: Vec<VertexSet> = Vec::new();
        for s in sets {
            let m = s.mask(n);
            if s.is_empty() || kept_masks.iter().any(|k| m.is_subset(k)) {
                continue;
            }
            kept_masks.push(m);
            kept.push(s);
        }
        Self::assemble(labels, numeric, kept)
    }

    fn assemble(labels: Vec<String>, numeric: bool, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        let n = labels.len();
        let facet_masks = facets.iter().map(|f| f.mask(n)).collect();
        let dim = facets.iter().map(Face::dim).max().unwrap_or(-1);
        Complex {
            labels,
            numeric,
            facets,
            facet_masks,
            dim,
            faces: OnceBox::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Maximum face dimension; -1 for the void complex.
    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub(crate) fn facet_masks(&self) -> &[VertexSet] {
        &self.facet_masks
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    /// Whether tokens are ordered numerically (all decimal).
    pub fn numeric_tokens(&self) -> bool {
        self.numeric
    }

    pub fn vertex(&self, token: &str) -> Option<VertexId> {
        self.labels
            .binary_search_by(|l| token_cmp(self.numeric, l, token))
            .ok()
            .map(|i| VertexId(i as u32))
    }

    pub fn require_vertex(&self, token: &str) -> Result<VertexId> {
        self.vertex(token)
            .ok_or_else(|| Error::UnknownVertex(token.to_owned()))
    }

    /// The face spanned by the given tokens (not checked for membership).
    pub fn vertex_set<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Face> {
        tokens
            .iter()
            .map(|t| self.require_vertex(t.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Face::new)
    }

    /// Like [`vertex_set`](Self::vertex_set) but requires the result to be a face.
    pub fn face<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Face> {
        let f = self.vertex_set(tokens)?;
        if self.contains_face(&f) {
            Ok(f)
        } else {
            Err(Error::NotAFace(self.owned_tokens(&f)))
        }
    }

    pub fn tokens(&self, f: &Face) -> Vec<&str> {
        f.iter().map(|v| self.label(v)).collect()
    }

    pub fn owned_tokens(&self, f: &Face) -> Vec<String> {
        f.iter().map(|v| self.labels[v.index()].clone()).collect()
    }

    /// Facets as token lists, in canonical order.
    pub fn facet_tokens(&self) -> Vec<Vec<&str>> {
        self.facets.iter().map(|f| self.tokens(f)).collect()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        if f.is_empty() {
            return true;
        }
        if f.iter().any(|v| v.index() >= self.labels.len()) {
            return false;
        }
        let m = f.mask(self.labels.len());
        self.facet_masks.iter().any(|fm| m.is_subset(fm))
    }

    pub fn is_facet(&self, f: &Face) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.dim() == self.dim)
    }

    /// Facets of maximal dimension.
    pub fn top_facets(&self) -> impl Iterator<Item = &Face> {
        self.facets.iter().filter(move |f| f.dim() == self.dim)
    }

    fn face_lists(&self) -> &Vec<Vec<Face>> {
        self.faces.get_or_init(|| {
            let mut lists: Vec<Vec<Face>> = (0..=(self.dim + 1)).map(|_| Vec::new()).collect();
            for f in &self.facets {
                let vs = f.vertices();
                for bits in 0u64..(1u64 << vs.len()) {
                    let sub: Vec<VertexId> = (0..vs.len())
                        .filter(|i| (bits >> i) & 1 == 1)
                        .map(|i| vs[i])
                        .collect();
                    lists[sub.len()].push(Face(sub));
                }
            }
            if self.facets.is_empty() {
                lists[0].push(Face::empty());
            }
            for l in &mut lists {
                l.sort_unstable();
                l.dedup();
            }
            Box::new(lists)
        })
    }

    /// The `k`-faces in lexicographic order, `-1 <= k <= dim`.
    pub fn faces(&self, k: i32) -> Result<&[Face]> {
        if k < -1 || k > self.dim {
            return Err(Error::DimensionOutOfRange {
                k: k as i64,
                min: -1,
                max: self.dim as i64,
            });
        }
        Ok(&self.face_lists()[(k + 1) as usize])
    }

    /// Every face, by increasing dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.face_lists().iter().flatten()
    }

    pub fn face_count(&self, k: i32) -> usize {
        self.faces(k).map_or(0, <[Face]>::len)
    }

    pub fn f_vector(&self) -> FaceVector {
        FaceVector::new((0..=self.dim).map(|k| self.face_count(k) as u64).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler()
    }
}

fn collect_token_sets<I, F, S>(facets: I, strict: bool) -> Result<Vec<Vec<String>>>
where
    I: IntoIterator<Item = F>,
    F: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut raw = Vec::new();
    for (i, f) in facets.into_iter().enumerate() {
        let toks: Vec<String> = f.into_iter().map(|s| s.as_ref().to_owned()).collect();
        if let Some(bad) = toks.iter().find(|t| !valid_token(t)) {
            return Err(Error::InvalidToken(bad.clone()));
        }
        if toks.is_empty() {
            if strict {
                return Err(Error::EmptyFacet { facet: i });
            }
            continue;
        }
        let mut sorted = toks.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            if strict {
                return Err(Error::DuplicateVertexInFacet {
                    facet: toks,
                    token: w[0].clone(),
                });
            }
        }
        raw.push(toks);
    }
    Ok(raw)
}

fn canonical_labels(raw: &[Vec<String>]) -> (Vec<String>, bool) {
    let mut labels: Vec<String> = raw.iter().flatten().cloned().collect();
    labels.sort();
    labels.dedup();
    let numeric = labels.iter().all(|t| is_decimal_token(t));
    labels.sort_by(|a, b| token_cmp(numeric, a, b));
    (labels, numeric)
}

fn index_sets(labels: &[String], numeric: bool, raw: &[Vec<String>]) -> Vec<Face> {
    raw.iter()
        .map(|f| {
            f.iter()
                .map(|t| {
                    let i = labels
                        .binary_search_by(|l| token_cmp(numeric, l, t))
                        .expect("label collected from the same sets");
                    VertexId(i as u32)
                })
                .collect()
        })
        .collect()
}
