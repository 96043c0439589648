use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;

/// Graph distance; `Infinite` between different components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Distance::Finite(d) => d >= k,
            Distance::Infinite => true,
        }
    }
}

/// Simple undirected graph on `0..n` with bitset adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Loops are ignored, parallel edges collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![VertexSet::with_capacity(n); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                continue;
            }
            let (a, b) = (a.min(b), a.max(b));
            if !adj[a].contains(b) {
                adj[a].insert(b);
                adj[b].insert(a);
                list.push((a, b));
            }
        }
        list.sort_unstable();
        Graph { adj, edges: list }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    fn bfs(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[from] = Some(0);
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Distance {
        match self.bfs(a)[b] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for s in 0..self.adj.len() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All cliques with exactly `size` vertices, lexicographically.
    pub fn cliques(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if size == 0 {
            out.push(Vec::new());
            return out;
        }
        let n = self.adj.len();
        let all = VertexSet::from_indices(n, 0..n);
        let mut current = Vec::with_capacity(size);
        self.extend_cliques(&mut current, &all, size, &mut out);
        out
    }

    fn extend_cliques(
        &self,
        current: &mut Vec<usize>,
        candidates: &VertexSet,
        size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        if current.len() + candidates.len() < size {
            return;
        }
        for v in candidates.iter() {
            // only extend by later vertices, so every clique is produced once
            let mut next = candidates.intersection(&self.adj[v]);
            for u in candidates.iter().take_while(|&u| u <= v) {
                next.remove(u);
            }
            current.push(v);
            self.extend_cliques(current, &next, size, out);
            current.pop();
        }
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, in
    /// lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut out = Vec::new();
        let mut r = Vec::new();
        self.bron_kerbosch(
            &mut r,
            VertexSet::from_indices(n, 0..n),
            VertexSet::with_capacity(n),
            &mut out,
        );
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() && !r.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| p.intersection(&self.adj[u]).len())
            .expect("p is non-empty");
        let branch = p.difference(&self.adj[pivot]);
        for v in branch.iter() {
            r.push(v);
            self.bron_kerbosch(
                r,
                p.intersection(&self.adj[v]),
                x.intersection(&self.adj[v]),
                out,
            );
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
}
