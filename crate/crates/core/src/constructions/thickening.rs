//! Thickenings of complexes with generalized cells, and the cell-Helly checks.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::setfamily::{bitset, helly_by_maximal_families, helly_by_triples};

/// A graph with a family of generalized cells covering its vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellComplexSpec {
    pub graph: SimpleGraph,
    /// Each cell sorted; the family has no duplicates.
    pub cells: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl CellComplexSpec {
    /// Checks that cells are in range, cover every vertex and edge, and each
    /// induce a connected subgraph.
    pub fn new(graph: SimpleGraph, cells: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.vertex_count();
        let mut family: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut seen = BTreeSet::new();
        for (i, c) in cells.into_iter().enumerate() {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if c.is_empty() {
                return Err(Error::InvalidInput(format!("cell {i} is empty")));
            }
            if let Some(&v) = c.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidInput(format!("cell {i} mentions vertex {v} out of range")));
            }
            if !graph.induced(&c).is_connected() {
                return Err(Error::InvalidInput(format!("cell {i} {c:?} is not connected")));
            }
            if seen.insert(c.clone()) {
                family.push(c);
            }
        }
        let sets: Vec<FixedBitSet> = family.iter().map(|c| bitset(n, c.iter().copied())).collect();
        if let Some(v) = (0..n).find(|&v| !sets.iter().any(|s| s.contains(v))) {
            return Err(Error::InvalidInput(format!("vertex {v} lies in no cell")));
        }
        if let Some((u, v)) =
            graph.edges().into_iter().find(|&(u, v)| !sets.iter().any(|s| s.contains(u) && s.contains(v)))
        {
            return Err(Error::InvalidInput(format!("edge {u}-{v} lies in no cell")));
        }
        Ok(CellComplexSpec { graph, cells: family, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.graph.vertex_count() {
            return Err(Error::InvalidInput("label count mismatch".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Adds a cell (no-op if already present).
    pub fn with_cell(self, cell: Vec<usize>) -> Result<Self> {
        let labels = self.labels.clone();
        let mut cells = self.cells;
        cells.push(cell);
        let mut out = CellComplexSpec::new(self.graph, cells)?;
        out.labels = labels;
        Ok(out)
    }
}

/// Vertices joined whenever some cell contains both.
pub fn thickening(c: &CellComplexSpec) -> SimpleGraph {
    let mut g = SimpleGraph::empty(c.graph.vertex_count());
    for cell in &c.cells {
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                g.add_edge(u, v).expect("cells hold distinct vertices");
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellHellyReport {
    /// Cells have the Helly property.
    pub helly_family: bool,
    /// Pairwise intersecting cells (indices) with no common vertex.
    pub helly_witness: Vec<usize>,
    /// Pairwise intersecting cell triples whose pairwise intersections lie in
    /// no single cell.
    pub flag_failures: Vec<[usize; 3]>,
    /// Nonempty intersections of cells (as cell index sets) that are disconnected.
    pub disconnected_intersections: Vec<Vec<usize>>,
    /// Strictly ascending chains of cells are finite (always, for finite input).
    pub locally_bounded: bool,
    /// Simple connectivity of the complex and of cell intersections is assumed,
    /// not verified.
    pub simple_connectivity_assumed: bool,
}

impl CellHellyReport {
    pub fn passes(&self) -> bool {
        self.helly_family
            && self.flag_failures.is_empty()
            && self.disconnected_intersections.is_empty()
            && self.locally_bounded
    }
}

pub fn cell_helly_check(c: &CellComplexSpec) -> Result<CellHellyReport> {
    let n = c.graph.vertex_count();
    let sets: Vec<FixedBitSet> = c.cells.iter().map(|s| bitset(n, s.iter().copied())).collect();
    let triple = helly_by_triples(n, &sets);
    if sets.len() <= 256 {
        let brute = helly_by_maximal_families(&sets);
        if brute.is_some() != triple.is_some() {
            return Err(Error::MethodDisagreement {
                detail: format!("cell family Helly: triples {triple:?}, brute force {brute:?}"),
            });
        }
    }

    let k = sets.len();
    let mut flag_failures = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if sets[a].is_disjoint(&sets[b]) {
                continue;
            }
            for d in b + 1..k {
                if sets[a].is_disjoint(&sets[d]) || sets[b].is_disjoint(&sets[d]) {
                    continue;
                }
                let mut union = sets[a].intersection(&sets[b]).collect::<FixedBitSet>();
                union.grow(n);
                union.extend(sets[b].intersection(&sets[d]));
                union.extend(sets[a].intersection(&sets[d]));
                if !sets.iter().any(|s| union.is_subset(s)) {
                    flag_failures.push([a, b, d]);
                }
            }
        }
    }

    // closure of the family under nonempty intersection, remembering one
    // generating set of cells for each intersection
    let mut found: Vec<(FixedBitSet, Vec<usize>)> =
        sets.iter().enumerate().map(|(i, s)| (s.clone(), vec![i])).collect();
    let mut known: BTreeSet<Vec<usize>> = sets.iter().map(|s| s.ones().collect()).collect();
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &f in &frontier {
            for (i, s) in sets.iter().enumerate() {
                let mut meet = found[f].0.clone();
                meet.intersect_with(s);
                if meet.is_clear() {
                    continue;
                }
                let key: Vec<usize> = meet.ones().collect();
                if known.insert(key) {
                    let mut gens = found[f].1.clone();
                    gens.push(i);
                    found.push((meet, gens));
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let disconnected_intersections = found
        .iter()
        .filter(|(s, _)| !c.graph.induced(&s.ones().collect::<Vec<_>>()).is_connected())
        .map(|(_, gens)| gens.clone())
        .collect();

    Ok(CellHellyReport {
        helly_family: triple.is_none(),
        helly_witness: triple.unwrap_or_default(),
        flag_failures,
        disconnected_intersections,
        locally_bounded: true,
        simple_connectivity_assumed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::generators::{complete, cube, cube_corner, path, tree_of_squares};
    use crate::iso::is_isomorphic;

    #[test]
    fn cube_thickens_to_k8() {
        let c = cube(3).unwrap();
        assert!(is_isomorphic(&thickening(&c), &complete(8)));
        assert!(cell_helly_check(&c).unwrap().passes());
    }

    #[test]
    fn two_squares_give_two_glued_k4s() {
        let c = crate::constructions::generators::cube_complex(&[
            (vec![0, 0], vec![0, 1]),
            (vec![1, 0], vec![0, 1]),
        ])
        .unwrap();
        let t = thickening(&c);
        assert_eq!((t.vertex_count(), t.edge_count()), (6, 11));
    }

    #[test]
    fn tree_with_edge_cells_is_itself() {
        let p = path(4);
        let cells: Vec<Vec<usize>> = p.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        let c = CellComplexSpec::new(p.clone(), cells).unwrap();
        assert_eq!(thickening(&c), p);
    }

    #[test]
    fn corner_fails_the_flag_condition() {
        let r = cell_helly_check(&cube_corner().unwrap()).unwrap();
        assert!(!r.flag_failures.is_empty());
        assert!(!r.passes());
        assert!(cell_helly_check(&tree_of_squares().unwrap()).unwrap().passes());
    }

    #[test]
    fn cells_must_cover_and_be_connected() {
        let p = path(3);
        assert!(CellComplexSpec::new(p.clone(), vec![vec![0, 1]]).is_err());
        assert!(CellComplexSpec::new(p.clone(), vec![vec![0, 2], vec![0, 1], vec![1, 2]]).is_err());
    }
}
