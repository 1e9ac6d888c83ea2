//! Canonical small graphs and cube complexes.

use std::collections::BTreeMap;

use crate::constructions::thickening::CellComplexSpec;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub fn path(n: usize) -> SimpleGraph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edges(n, &e).expect("valid path")
}

pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::BadSpec(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SimpleGraph::from_edges(n, &e)
}

pub fn complete(n: usize) -> SimpleGraph {
    let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    SimpleGraph::from_edges(n, &e).expect("valid clique")
}

/// Tree on `parents.len() + 1` vertices where vertex `i + 1` hangs off
/// `parents[i]`, which must be at most `i`.
pub fn tree_from_parents(parents: &[usize]) -> Result<SimpleGraph> {
    let mut e = Vec::with_capacity(parents.len());
    for (i, &p) in parents.iter().enumerate() {
        if p > i {
            return Err(Error::BadSpec(format!("parent {p} of vertex {} must be at most {i}", i + 1)));
        }
        e.push((p, i + 1));
    }
    SimpleGraph::from_edges(parents.len() + 1, &e)
}

/// Tree with the given Prüfer sequence (on `code.len() + 2` vertices).
pub fn tree_from_prufer(code: &[usize]) -> Result<SimpleGraph> {
    let n = code.len() + 2;
    if let Some(&v) = code.iter().find(|&&v| v >= n) {
        return Err(Error::BadSpec(format!("Prüfer entry {v} out of range")));
    }
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::from_edges(n, &edges)
}

/// Points of the box `∏ [0, dims[i])`, in lexicographic order.
fn box_points(dims: &[usize]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..d as i64).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn box_graph(dims: &[usize], adjacent: impl Fn(&[i64], &[i64]) -> bool) -> SimpleGraph {
    let pts = box_points(dims);
    let mut g = SimpleGraph::empty(pts.len());
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if adjacent(&pts[i], &pts[j]) {
                g.add_edge(i, j).expect("distinct points");
            }
        }
    }
    g
}

/// Box of `ℤⁿ` with `ℓ∞` adjacency.
pub fn king(dims: &[usize]) -> SimpleGraph {
    box_graph(dims, |a, b| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1))
}

/// Box of `ℤⁿ` with `ℓ¹` adjacency (the square grid when `n = 2`).
pub fn grid(dims: &[usize]) -> SimpleGraph {
    box_graph(dims, |a, b| a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<i64>() == 1)
}

/// The `k`-sun: a hub clique on `0..k` and, for each `i`, a vertex `k + i`
/// adjacent to `i` and `i + 1 (mod k)`.
pub fn sun(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::BadSpec(format!("a sun needs k ≥ 3, got {k}")));
    }
    let mut g = SimpleGraph::empty(2 * k);
    for (u, v) in complete(k).edges() {
        g.add_edge(u, v)?;
    }
    for i in 0..k {
        g.add_edge(k + i, i)?;
        g.add_edge(k + i, (i + 1) % k)?;
    }
    Ok(g)
}

/// Cube complex generated by axis-parallel unit cubes in `ℤᵈ`, each given as
/// a base corner and the list of directions it spans. Cells are all faces of
/// the listed cubes; vertices are numbered in lexicographic order of their
/// coordinates.
pub fn cube_complex(cubes: &[(Vec<i64>, Vec<usize>)]) -> Result<CellComplexSpec> {
    let mut faces: Vec<Vec<Vec<i64>>> = Vec::new();
    for (base, dirs) in cubes {
        if dirs.iter().any(|&d| d >= base.len()) {
            return Err(Error::BadSpec(format!("direction out of range in cube at {base:?}")));
        }
        // a face fixes each direction to 0, 1, or leaves it free
        for code in 0..3usize.pow(dirs.len() as u32) {
            let mut choice = Vec::with_capacity(dirs.len());
            let mut c = code;
            for _ in dirs {
                choice.push(c % 3);
                c /= 3;
            }
            let mut corners = vec![base.clone()];
            for (&d, &ch) in dirs.iter().zip(&choice) {
                corners = corners
                    .into_iter()
                    .flat_map(|p| {
                        let steps: &[i64] = match ch {
                            0 => &[0],
                            1 => &[1],
                            _ => &[0, 1],
                        };
                        steps.iter().map(move |&s| {
                            let mut q = p.clone();
                            q[d] += s;
                            q
                        })
                    })
                    .collect();
            }
            corners.sort();
            faces.push(corners);
        }
    }
    let mut index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for f in &faces {
        for p in f {
            index.insert(p.clone(), 0);
        }
    }
    for (i, v) in index.values_mut().enumerate() {
        *v = i;
    }
    let mut cells: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            let mut c: Vec<usize> = f.iter().map(|p| index[p]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cells.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    cells.dedup();
    let mut graph = SimpleGraph::empty(index.len());
    for c in cells.iter().filter(|c| c.len() == 2) {
        graph.add_edge(c[0], c[1])?;
    }
    let labels = index.keys().map(|p| format!("{p:?}")).collect();
    CellComplexSpec::new(graph, cells)?.with_labels(labels)
}

/// The unit `d`-cube with all its faces.
pub fn cube(d: usize) -> Result<CellComplexSpec> {
    cube_complex(&[(vec![0; d], (0..d).collect())])
}

/// Three squares around a corner of the 3-cube.
pub fn cube_corner() -> Result<CellComplexSpec> {
    cube_complex(&[
        (vec![0, 0, 0], vec![0, 1]),
        (vec![0, 0, 0], vec![1, 2]),
        (vec![0, 0, 0], vec![0, 2]),
    ])
}

/// A central square with squares glued to three of its sides.
pub fn tree_of_squares() -> Result<CellComplexSpec> {
    cube_complex(&[
        (vec![1, 1], vec![0, 1]),
        (vec![0, 1], vec![0, 1]),
        (vec![2, 1], vec![0, 1]),
        (vec![1, 0], vec![0, 1]),
    ])
}

/// Output of [`generate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(SimpleGraph),
    Complex(CellComplexSpec),
}

fn parse_dims(s: &str) -> Result<Vec<usize>> {
    let dims: Vec<usize> = s
        .split(['x', ','])
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::BadSpec(format!("bad dimension {p:?}"))))
        .collect::<Result<_>>()?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::BadSpec(format!("dimensions must be positive: {s:?}")));
    }
    Ok(dims)
}

fn parse_count(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::BadSpec(format!("expected a count, got {s:?}")))
}

/// Builds a fixture from a textual spec:
/// `cycle:N`, `path:N`, `complete:N`, `tree:P1,P2,…` (parent list),
/// `king:AxB…`, `grid:AxB…`, `sun:K`, `cube:D`, `corner`, `tree-of-squares`.
pub fn generate(spec: &str) -> Result<Generated> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let g = match kind.trim() {
        "cycle" => cycle(parse_count(arg)?)?,
        "path" => path(parse_count(arg)?),
        "complete" => complete(parse_count(arg)?),
        "tree" => {
            let parents: Vec<usize> = if arg.trim().is_empty() {
                Vec::new()
            } else {
                arg.split(',').map(parse_count).collect::<Result<_>>()?
            };
            tree_from_parents(&parents)?
        }
        "king" => king(&parse_dims(arg)?),
        "grid" => grid(&parse_dims(arg)?),
        "sun" => sun(parse_count(arg)?)?,
        "cube" => return Ok(Generated::Complex(cube(parse_count(arg)?)?)),
        "corner" => return Ok(Generated::Complex(cube_corner()?)),
        "tree-of-squares" => return Ok(Generated::Complex(tree_of_squares()?)),
        other => return Err(Error::BadSpec(format!("unknown construction {other:?}"))),
    };
    Ok(Generated::Graph(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_fixtures() {
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        let k = king(&[3, 3]);
        assert_eq!(k.vertex_count(), 9);
        assert_eq!(k.degree(0), 3);
        assert_eq!(k.degree(4), 8);
        let g = grid(&[3, 3]);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(sun(3).unwrap().edge_count(), 9);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn prufer_trees() {
        let star = tree_from_prufer(&[0, 0]).unwrap();
        assert_eq!(star.degree(0), 3);
        let p = tree_from_prufer(&[1, 2]).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cube_complexes() {
        let c = cube(3).unwrap();
        assert_eq!(c.graph.vertex_count(), 8);
        assert_eq!(c.graph.edge_count(), 12);
        assert_eq!(c.cells.len(), 27);
        let corner = cube_corner().unwrap();
        assert_eq!(corner.graph.vertex_count(), 7);
        assert_eq!(corner.cells.iter().filter(|c| c.len() == 4).count(), 3);
        let t = tree_of_squares().unwrap();
        assert_eq!(t.graph.vertex_count(), 10);
    }

    #[test]
    fn spec_strings() {
        assert!(matches!(generate("cycle:5"), Ok(Generated::Graph(_))));
        assert!(matches!(generate("cube:2"), Ok(Generated::Complex(_))));
        match generate("tree:0,0,1").unwrap() {
            Generated::Graph(g) => assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3)]),
            _ => unreachable!(),
        }
        assert!(matches!(generate("blob:3"), Err(Error::BadSpec(_))));
        assert!(matches!(generate("king:3x0"), Err(Error::BadSpec(_))));
    }
}
