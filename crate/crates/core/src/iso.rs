//! Combinatorial isomorphism of complexes by backtracking over vertex maps.

use alloc::vec::Vec;

use crate::complex::{Complex, Face, VertexId};
use crate::graph::Graph;

/// Finds a vertex bijection `a → b` carrying facets onto facets.
///
/// `map[i]` is the image of vertex `i` of `a`. Candidates are pruned by
/// (facet degree, edge degree) signatures, edge-graph adjacency and by
/// checking every facet as soon as all its vertices are assigned.
pub fn find_isomorphism(a: &Complex, b: &Complex) -> Option<Vec<VertexId>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.facets().len() != b.facets().len() || a.dim() != b.dim() {
        return None;
    }
    let (fa, fb) = (a.f_vector(), b.f_vector());
    if fa != fb {
        return None;
    }
    let (ga, gb) = (a.edge_graph(), b.edge_graph());
    let sig = |c: &Complex, g: &Graph| -> Vec<(usize, usize)> {
        let mut facet_deg = alloc::vec![0usize; n];
        for f in c.facets() {
            for v in f.iter() {
                facet_deg[v.index()] += 1;
            }
        }
        (0..n).map(|v| (facet_deg[v], g.degree(v))).collect()
    };
    let (sa, sb) = (sig(a, &ga), sig(b, &gb));
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }

    let order = search_order(&ga);
    let mut pos = alloc::vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // Facets of `a` grouped by the position of their last-assigned vertex.
    let mut closing: Vec<Vec<&Face>> = (0..n).map(|_| Vec::new()).collect();
    for f in a.facets() {
        if let Some(last) = f.iter().map(|v| pos[v.index()]).max() {
            closing[last].push(f);
        }
    }

    let mut st = Search {
        a_graph: &ga,
        b_graph: &gb,
        b,
        sa: &sa,
        sb: &sb,
        order: &order,
        closing: &closing,
        map: alloc::vec![usize::MAX; n],
        used: alloc::vec![false; n],
    };
    if st.extend(0) {
        Some(st.map.into_iter().map(|i| VertexId(i as u32)).collect())
    } else {
        None
    }
}

pub fn is_isomorphic(a: &Complex, b: &Complex) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Breadth-first order from the highest-degree vertex of each component, so
/// that each new vertex tends to have assigned neighbours.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = alloc::vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    a_graph: &'a Graph,
    b_graph: &'a Graph,
    b: &'a Complex,
    sa: &'a [(usize, usize)],
    sb: &'a [(usize, usize)],
    order: &'a [usize],
    closing: &'a [Vec<&'a Face>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.map.len() {
            if self.used[w] || self.sa[v] != self.sb[w] || !self.consistent(depth, v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.facets_close(depth) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            self.a_graph.is_adjacent(u, v) == self.b_graph.is_adjacent(self.map[u], w)
        })
    }

    fn facets_close(&self, depth: usize) -> bool {
        self.closing[depth].iter().all(|f| {
            let image = Face::from_indices(f.iter().map(|x| self.map[x.index()]));
            self.b.is_facet(&image)
        })
    }
}
