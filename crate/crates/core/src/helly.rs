//! Helly graphs: recognition, hulls, round cliques and circumcliques.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::metric::{graph_distance_matrix, FiniteMetric};
use crate::poset::Poset;
use crate::scalar::{rational, Rational};
use crate::setfamily::{bitset, helly_by_maximal_families, helly_by_triples};
use crate::{Bounds, IntegerExtremalFunction};

/// Combinatorial ball `B(center, radius)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Ball {
    pub center: usize,
    pub radius: usize,
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, {})", self.center, self.radius)
    }
}

fn format_balls(balls: &[Ball]) -> String {
    let parts: Vec<String> = balls.iter().map(Ball::to_string).collect();
    parts.join(", ")
}

// ---------------------------------------------------------------------------
// integer extremal functions

struct Enumerator<'a> {
    d: &'a [Vec<i64>],
    ecc: Vec<i64>,
    order: Vec<usize>,
    f: Vec<i64>,
    assigned: Vec<bool>,
    out: Vec<Vec<i64>>,
    cap: usize,
    overflow: bool,
}

impl Enumerator<'_> {
    /// Feasible values for an unassigned `x` given the current assignment.
    fn window(&self, x: usize) -> (i64, i64) {
        let mut lo = 0;
        let mut hi = self.ecc[x];
        for y in 0..self.f.len() {
            if self.assigned[y] {
                let (fy, dxy) = (self.f[y], self.d[x][y]);
                lo = lo.max(dxy - fy).max(fy - dxy);
                hi = hi.min(fy + dxy);
            }
        }
        (lo, hi)
    }

    /// Every unassigned point keeps a nonempty window and every assigned
    /// point keeps a possible tight partner.
    fn consistent(&self) -> bool {
        let n = self.f.len();
        let mut windows = vec![(0, -1); n];
        for y in 0..n {
            if !self.assigned[y] {
                windows[y] = self.window(y);
                if windows[y].0 > windows[y].1 {
                    return false;
                }
            }
        }
        (0..n).filter(|&x| self.assigned[x]).all(|x| {
            (0..n).any(|y| {
                let need = self.d[x][y] - self.f[x];
                if self.assigned[y] {
                    self.f[y] == need
                } else {
                    windows[y].0 <= need && need <= windows[y].1
                }
            })
        })
    }

    fn run(&mut self, depth: usize) {
        if self.overflow {
            return;
        }
        if depth == self.order.len() {
            if is_integer_extremal(self.d, &self.f) {
                if self.out.len() == self.cap {
                    self.overflow = true;
                    return;
                }
                self.out.push(self.f.clone());
            }
            return;
        }
        let x = self.order[depth];
        let (lo, hi) = self.window(x);
        self.assigned[x] = true;
        for v in lo..=hi {
            self.f[x] = v;
            if self.consistent() {
                self.run(depth + 1);
            }
        }
        self.assigned[x] = false;
    }
}

/// `f(x) + f(y) ≥ d(x, y)` everywhere with a tight partner for every `x`.
pub fn is_integer_extremal(d: &[Vec<i64>], f: &[i64]) -> bool {
    (0..f.len()).all(|x| {
        let mut tight = false;
        for y in 0..f.len() {
            let s = f[x] + f[y];
            if s < d[x][y] {
                return false;
            }
            tight |= s == d[x][y];
        }
        tight
    })
}

/// Search order: start at point 0, then always the unvisited point nearest to
/// the visited set (smallest index on ties). For graphs this is BFS order.
fn near_order(d: &[Vec<i64>]) -> Vec<usize> {
    let n = d.len();
    let mut order = Vec::with_capacity(n);
    let mut gap = vec![i64::MAX; n];
    let mut done = vec![false; n];
    for _ in 0..n {
        let next = (0..n).filter(|&x| !done[x]).min_by_key(|&x| (gap[x], x)).unwrap();
        done[next] = true;
        order.push(next);
        for x in 0..n {
            gap[x] = gap[x].min(d[next][x]);
        }
    }
    order
}

/// All integer extremal functions of an integer metric, in lexicographic
/// order. Fails if there are more than `cap`.
pub fn integer_extremal_functions(m: &FiniteMetric<i64>, cap: usize) -> Result<Vec<Vec<i64>>> {
    let d = m.table();
    let mut e = Enumerator {
        d,
        ecc: m.eccentricities(),
        order: near_order(d),
        f: vec![0; m.len()],
        assigned: vec![false; m.len()],
        out: Vec::new(),
        cap,
        overflow: false,
    };
    if !m.is_empty() {
        e.run(0);
    }
    if e.overflow {
        return Err(Error::InstanceTooLarge { what: "hull vertices", size: cap + 1, bound: cap });
    }
    let mut out = e.out;
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// hulls

/// Helly hull of a graph or integer metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullResult {
    pub hull: SimpleGraph,
    /// Hull vertex of each original point; originals come first, so this is
    /// the identity on `0..n`.
    pub embedding: Vec<usize>,
    /// Function of each hull vertex: originals `d(x, ·)`, then added
    /// functions in lexicographic order.
    pub functions: Vec<IntegerExtremalFunction>,
}

impl HullResult {
    pub fn original_count(&self) -> usize {
        self.embedding.len()
    }

    pub fn added_count(&self) -> usize {
        self.functions.len() - self.embedding.len()
    }

    /// The sup-distance metric on hull vertices.
    pub fn sup_metric(&self) -> FiniteMetric<i64> {
        let table = self
            .functions
            .iter()
            .map(|f| self.functions.iter().map(|g| sup_distance(f, g)).collect())
            .collect();
        crate::metric::validate_metric(table).expect("distinct extremal functions form a metric")
    }
}

pub fn sup_distance(f: &[i64], g: &[i64]) -> i64 {
    f.iter().zip(g).map(|(a, b)| (a - b).abs()).max().unwrap_or(0)
}

/// Hull of an integer metric: all integer extremal functions, adjacent at
/// sup-distance exactly 1.
pub fn metric_hull(m: &FiniteMetric<i64>, cap: usize) -> Result<HullResult> {
    let n = m.len();
    let all = integer_extremal_functions(m, cap)?;
    let originals: Vec<Vec<i64>> = (0..n).map(|x| m.row(x).to_vec()).collect();
    let known: HashSet<&Vec<i64>> = originals.iter().collect();
    let mut functions = originals.clone();
    functions.extend(all.iter().filter(|f| !known.contains(f)).cloned());
    debug_assert_eq!(
        functions.len(),
        all.len(),
        "every distance function is an integer extremal function"
    );
    let mut hull = SimpleGraph::empty(functions.len());
    for i in 0..functions.len() {
        for j in i + 1..functions.len() {
            if sup_distance(&functions[i], &functions[j]) == 1 {
                hull.add_edge(i, j)?;
            }
        }
    }
    Ok(HullResult { hull, embedding: (0..n).collect(), functions })
}

pub fn helly_hull(g: &SimpleGraph, bounds: &Bounds) -> Result<HullResult> {
    let n = g.vertex_count();
    if n > bounds.hull_vertices {
        return Err(Error::InstanceTooLarge {
            what: "hull input vertices",
            size: n,
            bound: bounds.hull_vertices,
        });
    }
    let m = graph_distance_matrix(g)?;
    metric_hull(&m, usize::MAX)
}

// ---------------------------------------------------------------------------
// recognition

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HellyMethod {
    HullEquality,
    BergeTriples,
    BruteForce,
}

impl HellyMethod {
    pub const ALL: [HellyMethod; 3] =
        [HellyMethod::HullEquality, HellyMethod::BergeTriples, HellyMethod::BruteForce];

    pub fn name(self) -> &'static str {
        match self {
            HellyMethod::HullEquality => "hull_equality",
            HellyMethod::BergeTriples => "berge_triples",
            HellyMethod::BruteForce => "brute_force",
        }
    }
}

/// Verdict of one recognition method. A negative verdict carries a family of
/// pairwise intersecting balls with empty intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HellyVerdict {
    pub method: HellyMethod,
    pub helly: bool,
    pub witness: Vec<Ball>,
}

fn distances(g: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    g.all_distances()
}

/// All distinct balls, each with the first `(center, radius)` producing it.
fn ball_family(dist: &[Vec<usize>]) -> (Vec<Ball>, Vec<FixedBitSet>) {
    let n = dist.len();
    let mut seen = HashSet::new();
    let mut balls = Vec::new();
    let mut sets = Vec::new();
    for v in 0..n {
        let ecc = dist[v].iter().copied().max().unwrap_or(0);
        for r in 0..=ecc {
            let s = bitset(n, (0..n).filter(|&w| dist[v][w] <= r));
            if seen.insert(s.clone()) {
                balls.push(Ball { center: v, radius: r });
                sets.push(s);
            }
        }
    }
    (balls, sets)
}

pub fn is_helly(g: &SimpleGraph, method: HellyMethod, bounds: &Bounds) -> Result<HellyVerdict> {
    let n = g.vertex_count();
    let dist = distances(g)?;
    let witness = match method {
        HellyMethod::HullEquality => {
            if n > bounds.hull_vertices {
                return Err(Error::InstanceTooLarge {
                    what: "hull input vertices",
                    size: n,
                    bound: bounds.hull_vertices,
                });
            }
            hull_witness(&dist)?
        }
        HellyMethod::BergeTriples => {
            let (balls, sets) = ball_family(&dist);
            helly_by_triples(n, &sets).map(|w| w.into_iter().map(|i| balls[i]).collect())
        }
        HellyMethod::BruteForce => {
            if n > bounds.brute_force_vertices {
                return Err(Error::InstanceTooLarge {
                    what: "brute-force Helly check vertices",
                    size: n,
                    bound: bounds.brute_force_vertices,
                });
            }
            let (balls, sets) = ball_family(&dist);
            helly_by_maximal_families(&sets).map(|w| w.into_iter().map(|i| balls[i]).collect())
        }
    };
    Ok(HellyVerdict { method, helly: witness.is_none(), witness: witness.unwrap_or_default() })
}

/// An added hull vertex `f` yields the pairwise intersecting balls
/// `B(x, f(x))` with no common vertex.
fn hull_witness(dist: &[Vec<usize>]) -> Result<Option<Vec<Ball>>> {
    let table: Vec<Vec<i64>> =
        dist.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
    let m = crate::metric::validate_metric(table)?;
    let funcs = integer_extremal_functions(&m, usize::MAX)?;
    let n = dist.len();
    let originals: HashSet<&[i64]> = (0..n).map(|x| m.row(x)).collect();
    Ok(funcs.iter().find(|f| !originals.contains(f.as_slice())).map(|f| {
        f.iter()
            .enumerate()
            .map(|(x, &r)| Ball { center: x, radius: r as usize })
            .collect()
    }))
}

/// A graph checked to be Helly, with its distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyGraph {
    graph: SimpleGraph,
    dist: Vec<Vec<usize>>,
}

impl HellyGraph {
    /// Runs the triple criterion, and the hull comparison as well when the
    /// graph is within the hull bound; any disagreement is an error.
    pub fn verify(g: &SimpleGraph, bounds: &Bounds) -> Result<Self> {
        let berge = is_helly(g, HellyMethod::BergeTriples, bounds)?;
        if g.vertex_count() <= bounds.hull_vertices {
            let hull = is_helly(g, HellyMethod::HullEquality, bounds)?;
            if hull.helly != berge.helly {
                return Err(Error::MethodDisagreement {
                    detail: format!(
                        "berge_triples = {} [{}], hull_equality = {} [{}]",
                        berge.helly,
                        format_balls(&berge.witness),
                        hull.helly,
                        format_balls(&hull.witness)
                    ),
                });
            }
        }
        if !berge.helly {
            return Err(Error::NotHelly { witness: format_balls(&berge.witness) });
        }
        Ok(HellyGraph { graph: g.clone(), dist: distances(g)? })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn dist(&self) -> &[Vec<usize>] {
        &self.dist
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueHellyVerdict {
    pub helly: bool,
    /// Pairwise intersecting maximal cliques with no common vertex.
    pub witness: Vec<Vec<usize>>,
}

/// Helly property of the family of maximal cliques.
pub fn is_clique_helly(g: &SimpleGraph, bounds: &Bounds) -> Result<CliqueHellyVerdict> {
    let n = g.vertex_count();
    let cliques = g.maximal_cliques();
    let sets: Vec<FixedBitSet> = cliques.iter().map(|c| bitset(n, c.iter().copied())).collect();
    let triple = helly_by_triples(n, &sets);
    if n <= bounds.brute_force_vertices {
        let brute = helly_by_maximal_families(&sets);
        if brute.is_some() != triple.is_some() {
            return Err(Error::MethodDisagreement {
                detail: format!("clique Helly: triples {triple:?}, brute force {brute:?}"),
            });
        }
    }
    Ok(CliqueHellyVerdict {
        helly: triple.is_none(),
        witness: triple.unwrap_or_default().into_iter().map(|i| cliques[i].clone()).collect(),
    })
}

// ---------------------------------------------------------------------------
// ball closures and round cliques

fn closure_in(dist: &[Vec<usize>], s: &[usize]) -> Vec<usize> {
    let n = dist.len();
    let radius: Vec<usize> = (0..n).map(|v| s.iter().map(|&x| dist[v][x]).max().unwrap_or(0)).collect();
    (0..n).filter(|&w| (0..n).all(|v| dist[v][w] <= radius[v])).collect()
}

/// Intersection of all balls containing `s`.
pub fn ball_closure(g: &SimpleGraph, s: &[usize]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::InvalidInput("ball closure of the empty set".into()));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::InvalidInput(format!("vertex {v} out of range")));
    }
    Ok(closure_in(&distances(g)?, s))
}

/// Round cliques ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundCliques {
    /// Sorted by size, then lexicographically; singletons are `0..n`.
    pub cliques: Vec<Vec<usize>>,
    pub poset: Poset,
    pub helly: bool,
    pub warnings: Vec<String>,
}

fn all_cliques(g: &SimpleGraph) -> Result<BTreeSet<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for c in g.maximal_cliques() {
        if c.len() > 20 {
            return Err(Error::InstanceTooLarge { what: "clique size", size: c.len(), bound: 20 });
        }
        for mask in 1u32..(1 << c.len()) {
            out.insert(c.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
        }
    }
    Ok(out)
}

fn by_size_then_lex(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}

/// Singletons together with every nonempty intersection of maximal cliques.
fn clique_intersections(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    let maximal = g.maximal_cliques();
    let mut frontier: Vec<Vec<usize>> = maximal.clone();
    found.extend(maximal.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for m in &maximal {
                let meet: Vec<usize> = a.iter().copied().filter(|v| m.contains(v)).collect();
                if !meet.is_empty() && found.insert(meet.clone()) {
                    next.push(meet);
                }
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}

pub fn round_cliques(g: &SimpleGraph, bounds: &Bounds) -> Result<RoundCliques> {
    let dist = distances(g)?;
    let helly = is_helly(g, HellyMethod::BergeTriples, bounds)?.helly;
    let closed: Vec<Vec<usize>> =
        all_cliques(g)?.into_iter().filter(|c| &closure_in(&dist, c) == c).collect();
    let closed = by_size_then_lex(closed);
    let meets = by_size_then_lex(clique_intersections(g));
    let mut warnings = Vec::new();
    if !helly {
        warnings.push("graph is not Helly; round cliques listed as ball-closed cliques".to_string());
    }
    if closed != meets {
        if helly {
            return Err(Error::MethodDisagreement {
                detail: format!("ball-closed cliques {closed:?} vs clique intersections {meets:?}"),
            });
        }
        warnings.push(format!(
            "ball-closed cliques and maximal-clique intersections differ ({} vs {})",
            closed.len(),
            meets.len()
        ));
    }
    let sets: Vec<FixedBitSet> =
        closed.iter().map(|c| bitset(g.vertex_count(), c.iter().copied())).collect();
    let poset = Poset::from_leq(closed.len(), |a, b| sets[a].is_subset(&sets[b]))?;
    Ok(RoundCliques { cliques: closed, poset, helly, warnings })
}

/// Round clique canonically attached to a nonempty vertex set by repeated
/// radius halving.
pub fn circumclique(h: &HellyGraph, k: &[usize]) -> Result<Vec<usize>> {
    let dist = h.dist();
    let n = dist.len();
    if k.is_empty() {
        return Err(Error::InvalidInput("circumclique of the empty set".into()));
    }
    if let Some(&v) = k.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidInput(format!("vertex {v} out of range")));
    }
    let diam = |s: &[usize]| s.iter().flat_map(|&a| s.iter().map(move |&b| dist[a][b])).max().unwrap_or(0);
    let mut cur = closure_in(dist, k);
    loop {
        let dn = diam(&cur);
        if dn <= 1 {
            return Ok(cur);
        }
        let half = dn.div_ceil(2);
        let inner: Vec<usize> =
            cur.iter().copied().filter(|&y| cur.iter().all(|&x| dist[x][y] <= half)).collect();
        if inner.is_empty() {
            return Err(Error::NotHelly {
                witness: format!("balls of radius {half} about {cur:?} have no common vertex"),
            });
        }
        let ecc_in = |a: usize| inner.iter().map(|&b| dist[a][b]).max().unwrap_or(0);
        let ir = inner.iter().map(|&a| ecc_in(a)).min().unwrap();
        cur = inner.iter().copied().filter(|&a| ecc_in(a) <= ir).collect();
    }
}

// ---------------------------------------------------------------------------
// coarse measures

/// Largest sup-distance from a hull vertex to the image of the graph.
pub fn coarse_helly_gap(g: &SimpleGraph, bounds: &Bounds) -> Result<i64> {
    let h = helly_hull(g, bounds)?;
    let n = h.original_count();
    Ok(h.functions
        .iter()
        .map(|f| (0..n).map(|x| sup_distance(f, &h.functions[x])).min().unwrap_or(0))
        .max()
        .unwrap_or(0))
}

/// Interval-level stability proxy: the largest one-sided Hausdorff distance
/// from `I(x, y)` to `I(x, z)` over all `x` and edges `y z`.
pub fn interval_stability_bound(g: &SimpleGraph) -> Result<Rational> {
    let dist = distances(g)?;
    let n = dist.len();
    let interval = |a: usize, b: usize| -> Vec<usize> {
        (0..n).filter(|&z| dist[a][z] + dist[z][b] == dist[a][b]).collect()
    };
    let mut best = 0;
    for x in 0..n {
        let from_x: Vec<Vec<usize>> = (0..n).map(|y| interval(x, y)).collect();
        for (y, z) in g.edges() {
            for (a, b) in [(y, z), (z, y)] {
                for &p in &from_x[a] {
                    let near = from_x[b].iter().map(|&q| dist[p][q]).min().unwrap();
                    best = best.max(near);
                }
            }
        }
    }
    Ok(rational(best as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &e)
    }

    fn complete(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        graph(n, &e)
    }

    fn king3() -> SimpleGraph {
        let mut e = Vec::new();
        for a in 0..9usize {
            for b in a + 1..9 {
                let (ax, ay, bx, by) = (a / 3, a % 3, b / 3, b % 3);
                if ax.abs_diff(bx) <= 1 && ay.abs_diff(by) <= 1 {
                    e.push((a, b));
                }
            }
        }
        graph(9, &e)
    }

    #[test]
    fn hull_of_square_is_a_cone() {
        let h = helly_hull(&cycle(4), &Bounds::default()).unwrap();
        assert_eq!(h.functions.len(), 5);
        assert_eq!(h.functions[4], vec![1, 1, 1, 1]);
        assert_eq!(h.hull.degree(4), 4);
        assert_eq!(h.hull.edge_count(), 8);
    }

    #[test]
    fn verdicts_on_standard_examples() {
        let b = Bounds::default();
        for m in HellyMethod::ALL {
            assert!(is_helly(&complete(4), m, &b).unwrap().helly);
            assert!(is_helly(&king3(), m, &Bounds { brute_force_vertices: 9, ..b }).unwrap().helly);
            let c4 = is_helly(&cycle(4), m, &b).unwrap();
            assert!(!c4.helly, "{m:?}");
        }
        let w = is_helly(&cycle(4), HellyMethod::BergeTriples, &b).unwrap().witness;
        let expect: Vec<Ball> = (0..4).map(|c| Ball { center: c, radius: 1 }).collect();
        assert_eq!(w, expect);
        let w = is_helly(&cycle(4), HellyMethod::HullEquality, &b).unwrap().witness;
        assert_eq!(w, expect);
    }

    #[test]
    fn brute_force_bound() {
        let err = is_helly(&cycle(9), HellyMethod::BruteForce, &Bounds::default()).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { .. }));
    }

    #[test]
    fn clique_helly_examples() {
        let b = Bounds::default();
        assert!(is_clique_helly(&cycle(4), &b).unwrap().helly);
        assert!(is_clique_helly(&complete(5), &b).unwrap().helly);
        // 3-sun: hub triangle 0,1,2 with pendant triangles on each edge
        let sun = graph(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]);
        let v = is_clique_helly(&sun, &b).unwrap();
        assert!(!v.helly);
        assert_eq!(v.witness, vec![vec![0, 1, 3], vec![0, 2, 5], vec![1, 2, 4]]);
    }

    #[test]
    fn closures() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(ball_closure(&p3, &[1]).unwrap(), vec![1]);
        assert_eq!(ball_closure(&p3, &[0, 2]).unwrap(), vec![0, 1, 2]);
        assert_eq!(ball_closure(&complete(3), &[0, 1]).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn round_clique_examples() {
        let b = Bounds::default();
        assert_eq!(round_cliques(&complete(2), &b).unwrap().cliques, vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(
            round_cliques(&complete(3), &b).unwrap().cliques,
            vec![vec![0], vec![1], vec![2], vec![0, 1, 2]]
        );
        assert_eq!(round_cliques(&SimpleGraph::empty(1), &b).unwrap().cliques, vec![vec![0]]);
        let c4 = round_cliques(&cycle(4), &b).unwrap();
        assert!(!c4.helly);
        assert!(!c4.warnings.is_empty());
    }

    #[test]
    fn circumclique_examples() {
        let b = Bounds::default();
        let p3 = HellyGraph::verify(&graph(3, &[(0, 1), (1, 2)]), &b).unwrap();
        assert_eq!(circumclique(&p3, &[0, 2]).unwrap(), vec![1]);
        assert_eq!(circumclique(&p3, &[2]).unwrap(), vec![2]);
        let hull = helly_hull(&cycle(4), &b).unwrap().hull;
        let h = HellyGraph::verify(&hull, &b).unwrap();
        assert_eq!(circumclique(&h, &[0, 1, 2, 3]).unwrap(), vec![4]);
        assert!(matches!(HellyGraph::verify(&cycle(4), &b), Err(Error::NotHelly { .. })));
    }

    #[test]
    fn gaps_and_stability() {
        let b = Bounds::default();
        assert_eq!(coarse_helly_gap(&cycle(4), &b).unwrap(), 1);
        assert_eq!(coarse_helly_gap(&king3(), &b).unwrap(), 0);
        assert_eq!(interval_stability_bound(&king3()).unwrap(), rational(1));
        assert_eq!(interval_stability_bound(&graph(4, &[(0, 1), (1, 2), (1, 3)])).unwrap(), rational(1));
        assert!(interval_stability_bound(&complete(4)).unwrap() <= rational(1));
    }
}
