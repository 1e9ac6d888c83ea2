//! Graph isomorphism, automorphisms and small-graph enumeration.

use std::collections::{BTreeSet, HashMap};

use crate::graph::SimpleGraph;

/// Colour refinement run jointly on several graphs so colours are comparable.
fn refine(graphs: &[&SimpleGraph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| vec![0; g.vertex_count()]).collect();
    let mut classes = 1;
    loop {
        let mut table: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut sigs: Vec<Vec<(usize, Vec<usize>)>> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            let mut row = Vec::new();
            for v in 0..g.vertex_count() {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[gi][w]).collect();
                nb.sort_unstable();
                row.push((colors[gi][v], nb));
            }
            sigs.push(row);
        }
        // number the signatures in sorted order so colours do not depend on vertex order
        let all: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().flatten().collect();
        for (i, s) in all.into_iter().enumerate() {
            table.insert(s.clone(), i);
        }
        let next: Vec<Vec<usize>> =
            sigs.iter().map(|row| row.iter().map(|s| table[s]).collect()).collect();
        let count = table.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

struct Matcher<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    /// Extends the partial map; `visit` returns `false` to stop the search.
    fn search(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[depth];
        for w in 0..self.h.vertex_count() {
            if self.used[w] || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            let go_on = self.search(depth + 1, visit);
            self.used[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn with_matcher<R>(g: &SimpleGraph, h: &SimpleGraph, f: impl FnOnce(Option<Matcher<'_>>) -> R) -> R {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return f(None);
    }
    let colors = refine(&[g, h]);
    let mut cg = colors[0].clone();
    let mut ch = colors[1].clone();
    cg.sort_unstable();
    ch.sort_unstable();
    if cg != ch {
        return f(None);
    }
    // visit vertices in BFS-like order so adjacency constraints bite early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let m = Matcher {
        g,
        h,
        cg: &colors[0],
        ch: &colors[1],
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    f(Some(m))
}

/// A bijection `p` with `g.has_edge(u, v) == h.has_edge(p[u], p[v])`.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    with_matcher(g, h, |m| {
        let mut m = m?;
        let mut found = None;
        m.search(0, &mut |map| {
            found = Some(map.to_vec());
            false
        });
        found
    })
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// All automorphisms (as vertex maps), up to `limit` of them.
pub fn automorphisms(g: &SimpleGraph, limit: usize) -> Vec<Vec<usize>> {
    with_matcher(g, g, |m| {
        let mut out = Vec::new();
        if let Some(mut m) = m {
            m.search(0, &mut |map| {
                out.push(map.to_vec());
                out.len() < limit
            });
        }
        out.sort();
        out
    })
}

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over relabellings that respect the refined colour order.
/// Intended for graphs with at most 11 vertices.
pub fn canonical_code(g: &SimpleGraph) -> (usize, u64) {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical_code supports at most 11 vertices");
    let colors = refine(&[g]).remove(0);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| colors[v]);
    for v in by_color {
        match cells.last_mut() {
            Some(c) if colors[c[0]] == colors[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    fn code(g: &SimpleGraph, order: &[usize]) -> u64 {
        let mut bits = 0u64;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                bits <<= 1;
                if !g.has_edge(order[i], order[j]) {
                    bits |= 1;
                }
            }
        }
        bits
    }
    fn rec(g: &SimpleGraph, cells: &mut [Vec<usize>], ci: usize, perm: &mut Vec<usize>, best: &mut u64) {
        if ci == cells.len() {
            *best = (*best).min(code(g, perm));
            return;
        }
        permute(g, cells, ci, 0, perm, best);
    }
    fn permute(g: &SimpleGraph, cells: &mut [Vec<usize>], ci: usize, k: usize, perm: &mut Vec<usize>, best: &mut u64) {
        if k == cells[ci].len() {
            rec(g, cells, ci + 1, perm, best);
            return;
        }
        for i in k..cells[ci].len() {
            cells[ci].swap(k, i);
            perm.push(cells[ci][k]);
            permute(g, cells, ci, k + 1, perm, best);
            perm.pop();
            cells[ci].swap(k, i);
        }
    }
    rec(g, &mut cells, 0, &mut perm, &mut best);
    (n, best)
}

/// All connected graphs on exactly `n` vertices up to isomorphism
/// (practical for `n ≤ 6`), in canonical-code order.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut out: Vec<(u64, SimpleGraph)> = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        if (mask.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = SimpleGraph::from_edges(n, &edges).expect("valid pairs");
        if !g.is_connected() {
            continue;
        }
        let (_, c) = canonical_code(&g);
        if seen.insert(c) {
            out.push((c, g));
        }
    }
    out.sort_by_key(|(c, _)| *c);
    out.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn cycle_automorphisms_form_the_dihedral_group() {
        assert_eq!(automorphisms(&cycle(5), usize::MAX).len(), 10);
        assert_eq!(automorphisms(&cycle(4), usize::MAX).len(), 8);
    }

    #[test]
    fn isomorphism_respects_relabelling() {
        let a = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let p = find_isomorphism(&a, &b).unwrap();
        for (u, v) in a.edges() {
            assert!(b.has_edge(p[u], p[v]));
        }
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&a, &star));
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
