//! Automorphisms of finite graphs and their fixed round cliques.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::helly::{circumclique, round_cliques, HellyGraph, RoundCliques};
use crate::scalar::Rational;
use crate::Bounds;

/// A verified automorphism of a finite graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphAutomorphism {
    forward: Vec<usize>,
    backward: Vec<usize>,
}

impl GraphAutomorphism {
    /// Checks that `forward` is a bijection preserving adjacency.
    pub fn new(g: &SimpleGraph, forward: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if forward.len() != n {
            return Err(Error::NotAutomorphism {
                detail: format!("map has {} entries for {} vertices", forward.len(), n),
            });
        }
        let mut backward = vec![usize::MAX; n];
        for (v, &w) in forward.iter().enumerate() {
            if w >= n || backward[w] != usize::MAX {
                return Err(Error::NotAutomorphism { detail: format!("not a bijection at vertex {v}") });
            }
            backward[w] = v;
        }
        for (u, v) in g.edges() {
            if !g.has_edge(forward[u], forward[v]) {
                return Err(Error::NotAutomorphism {
                    detail: format!("edge {u}-{v} maps to non-edge {}-{}", forward[u], forward[v]),
                });
            }
        }
        Ok(GraphAutomorphism { forward, backward })
    }

    pub fn identity(n: usize) -> Self {
        GraphAutomorphism { forward: (0..n).collect(), backward: (0..n).collect() }
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn backward(&self) -> &[usize] {
        &self.backward
    }

    pub fn apply(&self, v: usize) -> usize {
        self.forward[v]
    }

    /// Image of a vertex set, sorted.
    pub fn image(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&v| self.forward[v]).collect();
        out.sort_unstable();
        out
    }

    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut w = self.forward[v];
        while w != v {
            out.push(w);
            w = self.forward[w];
        }
        out.sort_unstable();
        out
    }
}

/// Parses cycle notation such as `(0 1)(2 3 4)` into a permutation of `0..n`.
/// Commas may separate entries; `()` or an empty string is the identity.
pub fn parse_cycles(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut moved = vec![false; n];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::BadSpec(format!("expected a cycle like (0 1) in {text:?}")))?;
        let items: Vec<usize> = body
            .0
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::BadSpec(format!("bad vertex {s:?}"))))
            .collect::<Result<_>>()?;
        for (i, &v) in items.iter().enumerate() {
            if v >= n {
                return Err(Error::BadSpec(format!("vertex {v} out of range for {n} vertices")));
            }
            if moved[v] {
                return Err(Error::BadSpec(format!("vertex {v} appears twice")));
            }
            moved[v] = true;
            perm[v] = items[(i + 1) % items.len()];
        }
        rest = body.1.trim_start();
    }
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum AutomorphismClass {
    /// A stabilized round clique and the matching fixed vertex of the first
    /// subdivision (its index in the round-clique list).
    Elliptic { clique: Vec<usize>, subdivision_vertex: usize, orbit: Vec<usize> },
    Hyperbolic {
        #[serde(serialize_with = "crate::scalar::serialize_display")]
        length: Rational,
    },
}

/// Action on round cliques, as a permutation of their indices.
pub fn induced_subdivision_map(rc: &RoundCliques, a: &GraphAutomorphism) -> Vec<usize> {
    rc.cliques
        .iter()
        .map(|c| {
            let img = a.image(c);
            rc.cliques.iter().position(|d| *d == img).expect("automorphisms permute round cliques")
        })
        .collect()
}

/// Finite graphs only have elliptic automorphisms; the stabilized clique is
/// the circumclique of the orbit of vertex 0.
pub fn classify_automorphism(
    h: &HellyGraph,
    a: &GraphAutomorphism,
    bounds: &Bounds,
) -> Result<AutomorphismClass> {
    let g = h.graph();
    // re-verify in case the map was built for another graph
    let a = GraphAutomorphism::new(g, a.forward().to_vec())?;
    if g.vertex_count() == 0 {
        return Err(Error::InvalidInput("empty graph".into()));
    }
    let orbit = a.orbit(0);
    let clique = circumclique(h, &orbit)?;
    let rc = round_cliques(g, bounds)?;
    let subdivision_vertex = rc
        .cliques
        .iter()
        .position(|c| *c == clique)
        .ok_or_else(|| Error::MethodDisagreement {
            detail: format!("circumclique {clique:?} is not among the round cliques"),
        })?;
    Ok(AutomorphismClass::Elliptic { clique, subdivision_vertex, orbit })
}
