//! Finite simple graphs.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected graph on vertices `0..n` without loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

/// Serialized as `{"vertices": n, "edges": [[u, v], ...]}` with `u < v`.
impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SimpleGraph", 2)?;
        st.serialize_field("vertices", &self.vertex_count())?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `u -- v`; returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair().is_none()
    }

    /// A pair of vertices with no path between them, if any.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        if self.adj.is_empty() {
            return None;
        }
        let d = self.bfs(0);
        d.iter().position(Option::is_none).map(|v| (0, v))
    }

    /// All-pairs shortest path lengths. Fails on disconnected graphs.
    pub fn all_distances(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.adj.len();
        let mut out = Vec::with_capacity(n);
        for s in 0..n {
            let row = self.bfs(s);
            let mut dense = Vec::with_capacity(n);
            for (v, d) in row.into_iter().enumerate() {
                match d {
                    Some(d) => dense.push(d),
                    None => return Err(Error::DisconnectedGraph { u: s.min(v), v: s.max(v) }),
                }
            }
            out.push(dense);
        }
        Ok(out)
    }

    /// Subgraph induced on `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are valid");
                }
            }
        }
        g
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Closed neighborhood `N[v]` as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.adj.len());
        s.insert(v);
        for &w in &self.adj[v] {
            s.insert(w);
        }
        s
    }

    /// Maximal cliques by Bron–Kerbosch with pivoting; each clique sorted,
    /// the list sorted lexicographically.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let nbr: Vec<FixedBitSet> = (0..n)
            .map(|v| {
                let mut s = FixedBitSet::with_capacity(n);
                for &w in &self.adj[v] {
                    s.insert(w);
                }
                s
            })
            .collect();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let mut out = Vec::new();
        bron_kerbosch(&nbr, &mut Vec::new(), p, FixedBitSet::with_capacity(n), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }
}

fn bron_kerbosch(
    nbr: &[FixedBitSet],
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| nbr[u].intersection(&p).count())
        .unwrap();
    let candidates: Vec<usize> = p.difference(&nbr[pivot]).collect();
    for v in candidates {
        r.push(v);
        let mut np = p.clone();
        np.intersect_with(&nbr[v]);
        let mut nx = x.clone();
        nx.intersect_with(&nbr[v]);
        bron_kerbosch(nbr, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn distances_on_a_cycle() {
        let d = cycle(4).all_distances().unwrap();
        assert_eq!(d[0], vec![0, 1, 2, 1]);
    }

    #[test]
    fn rejects_loops_and_reports_disconnection() {
        assert!(SimpleGraph::from_edges(2, &[(0, 0)]).is_err());
        let g = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.disconnected_pair(), Some((0, 2)));
        assert_eq!(g.all_distances(), Err(Error::DisconnectedGraph { u: 0, v: 2 }));
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        assert_eq!(cycle(4).maximal_cliques(), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.maximal_cliques(), vec![vec![0, 1, 2], vec![2, 3], vec![4]]);
    }

    #[test]
    fn duplicate_edges_merge() {
        let mut g = SimpleGraph::empty(2);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }
}
