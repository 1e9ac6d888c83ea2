//! Helly subdivisions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::helly::{metric_hull, round_cliques, HellyGraph};
use crate::metric::graph_distance_matrix;
use crate::Bounds;

/// What a subdivision vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionVertex {
    /// Round clique of the original graph (first subdivision only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique: Option<Vec<usize>>,
    /// Integer extremal function of the scaled metric `(V, 2·N!·d)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub function: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionResult {
    pub graph: SimpleGraph,
    pub vertex_meaning: Vec<SubdivisionVertex>,
    /// Subdivision vertex of each original vertex.
    pub embedding: Vec<usize>,
    /// `2·N!`: distances between original vertices are multiplied by this.
    pub scale: u64,
}

/// Round cliques, with `σ ~ τ` when they meet and their union is a clique.
pub fn first_subdivision(h: &HellyGraph, bounds: &Bounds) -> Result<SubdivisionResult> {
    let g = h.graph();
    let rc = round_cliques(g, bounds)?;
    let k = rc.cliques.len();
    let mut graph = SimpleGraph::empty(k);
    for a in 0..k {
        for b in a + 1..k {
            let (s, t) = (&rc.cliques[a], &rc.cliques[b]);
            if s.iter().any(|v| t.contains(v)) {
                let mut union: Vec<usize> = s.iter().chain(t).copied().collect();
                union.sort_unstable();
                union.dedup();
                if g.is_clique(&union) {
                    graph.add_edge(a, b)?;
                }
            }
        }
    }
    Ok(SubdivisionResult {
        graph,
        vertex_meaning: rc
            .cliques
            .iter()
            .map(|c| SubdivisionVertex { clique: Some(c.clone()), function: None })
            .collect(),
        // singletons sort first, in vertex order
        embedding: (0..g.vertex_count()).collect(),
        scale: 2,
    })
}

fn factorial(n: u32) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Integer points of the injective hull of `(V, 2·N!·d)`, adjacent at
/// sup-distance 1.
pub fn nth_subdivision(h: &HellyGraph, n: u32, bounds: &Bounds) -> Result<SubdivisionResult> {
    if n == 0 {
        return Err(Error::InvalidInput("subdivision order must be at least 1".into()));
    }
    let g = h.graph();
    let too_large = |size: usize| Error::InstanceTooLarge {
        what: "2·N!·|V| for the N-th subdivision",
        size,
        bound: bounds.subdivision_size,
    };
    let scale = factorial(n).and_then(|f| f.checked_mul(2)).ok_or_else(|| too_large(usize::MAX))?;
    let size = (scale as usize).saturating_mul(g.vertex_count());
    if size > bounds.subdivision_size {
        return Err(too_large(size));
    }
    let m = graph_distance_matrix(g)?.scaled(&(scale as i64));
    let hull = metric_hull(&m, usize::MAX)?;
    Ok(SubdivisionResult {
        graph: hull.hull,
        vertex_meaning: hull
            .functions
            .into_iter()
            .map(|f| SubdivisionVertex { clique: None, function: Some(f) })
            .collect(),
        embedding: hull.embedding,
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn complete(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        SimpleGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn first_subdivisions_of_small_complete_graphs() {
        let b = Bounds::default();
        let k2 = first_subdivision(&HellyGraph::verify(&complete(2), &b).unwrap(), &b).unwrap();
        assert_eq!(k2.graph.edges(), vec![(0, 2), (1, 2)]);
        let k3 = first_subdivision(&HellyGraph::verify(&complete(3), &b).unwrap(), &b).unwrap();
        assert_eq!(k3.graph.edges(), vec![(0, 3), (1, 3), (2, 3)]);
    }

    #[test]
    fn first_and_nth_agree_at_one() {
        let b = Bounds::default();
        for g in [complete(1), complete(2), complete(3)] {
            let h = HellyGraph::verify(&g, &b).unwrap();
            let a = first_subdivision(&h, &b).unwrap();
            let c = nth_subdivision(&h, 1, &b).unwrap();
            assert!(is_isomorphic(&a.graph, &c.graph));
        }
    }

    #[test]
    fn size_bound() {
        let b = Bounds::default();
        let h = HellyGraph::verify(&complete(3), &b).unwrap();
        assert!(matches!(nth_subdivision(&h, 4, &b), Err(Error::InstanceTooLarge { .. })));
        assert_eq!(nth_subdivision(&h, 2, &b).unwrap().scale, 4);
    }
}
