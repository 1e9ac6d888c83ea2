//! Graphs of lattices with an increasing shift, explored through finite windows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::helly::{is_helly, HellyMethod, HellyVerdict};
use crate::poset::Poset;
use crate::Bounds;

/// A finite window of a lattice `L` with the partial shift `φ` it exhibits.
///
/// The window is assumed order convex in `L`: whenever `a ≤ c ≤ b` with `a`
/// and `b` in the window, so is `c`. Then every `x` with both `φ(x)` and
/// `φ⁻¹(x)` in the window sees its whole neighborhood `[φ⁻¹x, φx]`.
#[derive(Debug, Clone)]
pub struct LatticeAction {
    poset: Poset,
    shift: Vec<Option<usize>>,
    unshift: Vec<Option<usize>>,
}

impl LatticeAction {
    /// Checks that `shift` is injective, strictly increasing and an order
    /// isomorphism where defined.
    pub fn new(poset: Poset, shift: Vec<Option<usize>>) -> Result<Self> {
        let n = poset.len();
        if shift.len() != n {
            return Err(Error::InvalidInput("shift must have one entry per element".into()));
        }
        let mut unshift = vec![None; n];
        for (x, s) in shift.iter().enumerate() {
            if let Some(y) = *s {
                if y >= n || unshift[y].is_some() {
                    return Err(Error::InvalidInput(format!("shift is not injective at {x}")));
                }
                if !poset.lt(x, y) {
                    return Err(Error::InvalidInput(format!("shift does not increase {x}")));
                }
                unshift[y] = Some(x);
            }
        }
        for x in 0..n {
            for y in 0..n {
                if let (Some(a), Some(b)) = (shift[x], shift[y]) {
                    if poset.leq(x, y) != poset.leq(a, b) {
                        return Err(Error::InvalidInput(format!(
                            "shift is not an order isomorphism on ({x}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(LatticeAction { poset, shift, unshift })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn shift(&self, x: usize) -> Option<usize> {
        self.shift[x]
    }

    pub fn unshift(&self, x: usize) -> Option<usize> {
        self.unshift[x]
    }

    fn power(&self, x: usize, t: i64) -> Option<usize> {
        let mut v = x;
        for _ in 0..t.unsigned_abs() {
            v = if t > 0 { self.shift[v]? } else { self.unshift[v]? };
        }
        Some(v)
    }

    /// Elements whose neighborhood lies inside the window.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&x| self.shift[x].is_some() && self.unshift[x].is_some())
            .collect()
    }

    /// Decides `a ≤ φᵗ(b)` for `t ≥ 0` using only shifts that stay in the
    /// window, via `φ⁻ˢ(a) ≤ φᵗ⁻ˢ(b)`. `None` if no split stays inside.
    pub fn below_shifted(&self, a: usize, t: usize, b: usize) -> Option<bool> {
        if self.poset.leq(a, b) {
            return Some(true);
        }
        (0..=t as i64).find_map(|s| {
            let lhs = self.power(a, -s)?;
            let rhs = self.power(b, t as i64 - s)?;
            Some(self.poset.leq(lhs, rhs))
        })
    }

    /// `x ~ y` iff `φ⁻¹(x) ≤ y ≤ φ(x)`.
    pub fn adjacent(&self, x: usize, y: usize) -> Option<bool> {
        if x == y {
            return Some(false);
        }
        Some(self.below_shifted(y, 1, x)? && self.below_shifted(x, 1, y)?)
    }

    /// `min { t : φ⁻ᵗ(x) ≤ y ≤ φᵗ(x) }`, if decidable within the window.
    pub fn order_distance(&self, x: usize, y: usize) -> Option<usize> {
        for t in 0..=self.poset.len() {
            let up = self.below_shifted(y, t, x);
            let down = self.below_shifted(x, t, y);
            match (up, down) {
                (Some(true), Some(true)) => return Some(t),
                (Some(_), Some(_)) => continue,
                _ => return None,
            }
        }
        None
    }
}

/// The box `[lo, hi]ⁿ` of `ℤⁿ` with the product order and diagonal shift.
pub fn zn_window(n: usize, lo: i64, hi: i64) -> Result<(LatticeAction, Vec<Vec<i64>>)> {
    if n == 0 || hi < lo {
        return Err(Error::BadSpec(format!("empty window [{lo}, {hi}]^{n}")));
    }
    let mut pts: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let index = |p: &[i64]| pts.binary_search_by(|q| q.as_slice().cmp(p)).ok();
    let poset = Poset::from_leq(pts.len(), |a, b| pts[a].iter().zip(&pts[b]).all(|(x, y)| x <= y))?;
    let shift: Vec<Option<usize>> = pts
        .iter()
        .map(|p| index(&p.iter().map(|c| c + 1).collect::<Vec<_>>()))
        .collect();
    let labels = pts.iter().map(|p| format!("{p:?}")).collect();
    let action = LatticeAction::new(poset.with_labels(labels)?, shift)?;
    Ok((action, pts))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeGraph {
    /// Graph on the whole window. Pairs of boundary vertices whose adjacency
    /// cannot be decided inside the window get no edge.
    pub graph: SimpleGraph,
    pub interior: Vec<usize>,
    /// Interior pairs `(x, y, graph distance, order distance)` that disagree.
    pub distance_mismatches: Vec<(usize, usize, usize, Option<usize>)>,
    pub interior_pairs_checked: usize,
    pub interior_helly: HellyVerdict,
}

/// Builds the graph `x ~ y ⇔ φ⁻¹x ≤ y ≤ φx`, checks graph distance against
/// the order distance on interior pairs, and tests the interior for Hellyness.
/// `requested` vertices must be interior.
pub fn lattice_to_graph(la: &LatticeAction, requested: &[usize], bounds: &Bounds) -> Result<LatticeGraph> {
    let n = la.poset().len();
    let interior = la.interior();
    if let Some(&v) = requested.iter().find(|v| interior.binary_search(v).is_err()) {
        return Err(Error::WindowTooSmall { vertex: v });
    }
    let mut graph = SimpleGraph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            if la.adjacent(x, y) == Some(true) {
                graph.add_edge(x, y)?;
            }
        }
    }
    let mut distance_mismatches = Vec::new();
    let mut checked = 0;
    for (i, &x) in interior.iter().enumerate() {
        let bfs = graph.bfs(x);
        for &y in &interior[i + 1..] {
            let od = la.order_distance(x, y);
            let gd = bfs[y];
            checked += 1;
            if gd.is_none() || od != gd {
                distance_mismatches.push((x, y, gd.unwrap_or(usize::MAX), od));
            }
        }
    }
    let sub = graph.induced(&interior);
    let interior_helly = if sub.vertex_count() == 0 {
        HellyVerdict { method: HellyMethod::BergeTriples, helly: true, witness: Vec::new() }
    } else {
        is_helly(&sub, HellyMethod::BergeTriples, bounds)?
    };
    Ok(LatticeGraph {
        graph,
        interior,
        distance_mismatches,
        interior_pairs_checked: checked,
        interior_helly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_window_is_a_path() {
        let (la, _) = zn_window(1, 0, 4).unwrap();
        let lg = lattice_to_graph(&la, &[], &Bounds::default()).unwrap();
        assert_eq!(lg.graph.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(lg.interior, vec![1, 2, 3]);
        assert!(lg.distance_mismatches.is_empty());
        assert!(lg.interior_helly.helly);
    }

    #[test]
    fn plane_window_has_king_moves() {
        let (la, pts) = zn_window(2, 0, 4).unwrap();
        let lg = lattice_to_graph(&la, &[], &Bounds::default()).unwrap();
        for (u, v) in lg.graph.edges() {
            let linf = pts[u].iter().zip(&pts[v]).map(|(a, b)| (a - b).abs()).max().unwrap();
            assert_eq!(linf, 1);
        }
        assert_eq!(lg.graph.edge_count(), 2 * 5 * 4 + 2 * 4 * 4);
        assert_eq!(lg.interior.len(), 9);
        assert!(lg.distance_mismatches.is_empty());
    }

    #[test]
    fn starving_vertex_is_reported() {
        let (la, _) = zn_window(2, 0, 4).unwrap();
        assert_eq!(lattice_to_graph(&la, &[0], &Bounds::default()).unwrap_err(), Error::WindowTooSmall { vertex: 0 });
    }

    #[test]
    fn shift_must_increase() {
        let p = Poset::from_relations(2, &[(0, 1)]).unwrap();
        assert!(LatticeAction::new(p.clone(), vec![Some(1), None]).is_ok());
        assert!(LatticeAction::new(p, vec![None, Some(0)]).is_err());
    }
}
