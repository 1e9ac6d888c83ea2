//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use helly_lab::constructions::generators::{complete, cycle, king, path, tree_from_parents};
use helly_lab::helly::helly_hull;
use helly_lab::{Bounds, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges).unwrap()
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// edge with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let parents: Vec<usize> = (0..n.saturating_sub(1)).map(|i| rng.gen_range(0..=i)).collect();
    tree_from_parents(&parents).unwrap()
}

pub fn sun3() -> SimpleGraph {
    graph(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)])
}

/// Helly graphs used throughout the suites.
pub fn helly_fixtures() -> Vec<(&'static str, SimpleGraph)> {
    let b = Bounds::default();
    vec![
        ("K1", complete(1)),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("P3", path(3)),
        ("P5", path(5)),
        ("star", graph(4, &[(0, 1), (0, 2), (0, 3)])),
        ("spider", tree_from_parents(&[0, 0, 0, 1, 2, 3]).unwrap()),
        ("king3x3", king(&[3, 3])),
        ("king2x3", king(&[2, 3])),
        ("hull(C4)", helly_hull(&cycle(4).unwrap(), &b).unwrap().hull),
        ("hull(C5)", helly_hull(&cycle(5).unwrap(), &b).unwrap().hull),
        ("diamond", graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])),
    ]
}

/// Integer extremal functions by brute force over the box `∏ [0, ecc(x)]`.
pub fn exhaustive_extremal(d: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let n = d.len();
    let ecc: Vec<i64> = d.iter().map(|r| *r.iter().max().unwrap() as i64).collect();
    let mut out = Vec::new();
    let mut f = vec![0i64; n];
    loop {
        let extremal = (0..n).all(|x| f[x] == (0..n).map(|y| d[x][y] as i64 - f[y]).max().unwrap());
        if extremal {
            out.push(f.clone());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            if f[i] < ecc[i] {
                f[i] += 1;
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Whether every member of `family` is a pairwise-intersecting-to-common-point
/// family, by checking all subfamilies (tiny inputs only).
pub fn helly_by_subsets(family: &[Vec<usize>]) -> bool {
    let k = family.len();
    assert!(k <= 16);
    (1u32..(1 << k)).all(|mask| {
        let pick: Vec<&Vec<usize>> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| &family[i]).collect();
        let pairwise = pick.iter().enumerate().all(|(i, a)| pick[i + 1..].iter().all(|b| a.iter().any(|x| b.contains(x))));
        !pairwise || pick[0].iter().any(|x| pick.iter().all(|s| s.contains(x)))
    })
}
