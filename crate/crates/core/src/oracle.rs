//! Locally finite infinite graphs explored through finite windows, and
//! translation lengths of their automorphisms.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{rational, Rational};

/// A lazily described graph: a basepoint and a deterministic neighbor function.
pub trait GraphOracle: Sync {
    type Vertex: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn basepoint(&self) -> Self::Vertex;

    /// Sorted, duplicate free, never containing `v` itself.
    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;
}

/// `ℤⁿ` with `x ~ y` iff `‖x − y‖∞ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KingOracle {
    pub dims: usize,
}

impl GraphOracle for KingOracle {
    type Vertex = Vec<i64>;

    fn basepoint(&self) -> Vec<i64> {
        vec![0; self.dims]
    }

    fn neighbors(&self, v: &Vec<i64>) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let total = 3usize.pow(self.dims as u32);
        for code in 0..total {
            let mut c = code;
            let mut w = v.clone();
            for x in w.iter_mut() {
                *x += (c % 3) as i64 - 1;
                c /= 3;
            }
            if w != *v {
                out.push(w);
            }
        }
        out.sort();
        out
    }
}

/// The `d`-regular tree, as the Cayley graph of the free product of `d`
/// copies of `ℤ/2`: vertices are words over `0..d` without repeated letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeOracle {
    pub degree: u8,
}

impl TreeOracle {
    /// Right multiplication by a letter.
    fn step(w: &[u8], a: u8) -> Vec<u8> {
        let mut out = w.to_vec();
        if out.last() == Some(&a) {
            out.pop();
        } else {
            out.push(a);
        }
        out
    }

    /// Left multiplication by a word: a tree automorphism.
    pub fn left_multiply(word: &[u8], v: &[u8]) -> Vec<u8> {
        let mut out: Vec<u8> = Vec::with_capacity(word.len() + v.len());
        for &a in word.iter().chain(v) {
            if out.last() == Some(&a) {
                out.pop();
            } else {
                out.push(a);
            }
        }
        out
    }
}

impl GraphOracle for TreeOracle {
    type Vertex = Vec<u8>;

    fn basepoint(&self) -> Vec<u8> {
        Vec::new()
    }

    fn neighbors(&self, v: &Vec<u8>) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = (0..self.degree).map(|a| TreeOracle::step(v, a)).collect();
        out.sort();
        out
    }
}

/// An automorphism of an oracle graph, given by its two directions.
pub struct OracleAutomorphism<V> {
    forward: Box<dyn Fn(&V) -> V + Send + Sync>,
    backward: Box<dyn Fn(&V) -> V + Send + Sync>,
}

impl<V> OracleAutomorphism<V> {
    pub fn new(
        forward: impl Fn(&V) -> V + Send + Sync + 'static,
        backward: impl Fn(&V) -> V + Send + Sync + 'static,
    ) -> Self {
        OracleAutomorphism { forward: Box::new(forward), backward: Box::new(backward) }
    }

    pub fn apply(&self, v: &V) -> V {
        (self.forward)(v)
    }

    pub fn apply_inverse(&self, v: &V) -> V {
        (self.backward)(v)
    }
}

impl<V: Clone + 'static> OracleAutomorphism<V> {
    pub fn identity() -> Self {
        OracleAutomorphism::new(V::clone, V::clone)
    }
}

/// `(x₁, …, x_N) ↦ (x₂ + 1, x₃, …, x_N, x₁)` on `ℤᴺ`.
pub fn shift_bump() -> OracleAutomorphism<Vec<i64>> {
    OracleAutomorphism::new(
        |x: &Vec<i64>| {
            let mut y = x.clone();
            y.rotate_left(1);
            if let Some(first) = y.first_mut() {
                *first += 1;
            }
            y
        },
        |y: &Vec<i64>| {
            let mut x = y.clone();
            if let Some(first) = x.first_mut() {
                *first -= 1;
            }
            x.rotate_right(1);
            x
        },
    )
}

/// Translation of `ℤᴺ` by a fixed vector.
pub fn translate(v: Vec<i64>) -> OracleAutomorphism<Vec<i64>> {
    let w = v.clone();
    OracleAutomorphism::new(
        move |x: &Vec<i64>| x.iter().zip(&v).map(|(a, b)| a + b).collect(),
        move |x: &Vec<i64>| x.iter().zip(&w).map(|(a, b)| a - b).collect(),
    )
}

/// Left multiplication by `word` on the tree oracle.
pub fn tree_translate(word: Vec<u8>) -> OracleAutomorphism<Vec<u8>> {
    let inverse: Vec<u8> = word.iter().rev().copied().collect();
    OracleAutomorphism::new(
        move |v: &Vec<u8>| TreeOracle::left_multiply(&word, v),
        move |v: &Vec<u8>| TreeOracle::left_multiply(&inverse, v),
    )
}

/// BFS distances from the basepoint, out to `radius`.
pub fn explore_window<O: GraphOracle>(o: &O, radius: usize) -> HashMap<O::Vertex, usize> {
    let mut dist = HashMap::new();
    let base = o.basepoint();
    dist.insert(base.clone(), 0);
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        if dv == radius {
            continue;
        }
        for w in o.neighbors(&v) {
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    /// `d(gᵏ·v, v)` for `k = 1, 2, …` until the horizon or the window edge.
    pub distances: Vec<usize>,
    /// `d_k / k` at the last computed `k`.
    #[serde(serialize_with = "crate::scalar::serialize_display")]
    pub estimate: Rational,
    pub certified: bool,
    /// Period `a` and step `L` of the detected progression `d_{an} = nL`.
    pub period: Option<usize>,
    pub step: Option<usize>,
    /// `L / a` when certified.
    #[serde(serialize_with = "serialize_opt")]
    pub length: Option<Rational>,
    /// Orbit step at which the window was left, if it was.
    pub window_exhausted: Option<usize>,
}

fn serialize_opt<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

/// Orbit distances at the basepoint, with a progression certificate: the
/// smallest period `a ≤ 2N` such that `d_{an} = n·d_a` for every multiple of
/// `a` up to the horizon (at least two multiples are required).
///
/// Distances are exact: a shortest path from the basepoint of length at most
/// the window radius never leaves the window.
pub fn translation_length<O: GraphOracle>(
    o: &O,
    a: &OracleAutomorphism<O::Vertex>,
    n: usize,
    horizon: usize,
    window_radius: usize,
) -> Result<TranslationReport> {
    if horizon == 0 {
        return Err(Error::InvalidInput("horizon must be positive".into()));
    }
    let base = o.basepoint();
    if a.apply_inverse(&a.apply(&base)) != base {
        return Err(Error::NotAutomorphism { detail: "backward map does not invert forward".into() });
    }
    let window = explore_window(o, window_radius);
    let mut distances = Vec::with_capacity(horizon);
    let mut v = base.clone();
    let mut window_exhausted = None;
    for k in 1..=horizon {
        v = a.apply(&v);
        match window.get(&v) {
            Some(&d) => distances.push(d),
            None => {
                window_exhausted = Some(k);
                break;
            }
        }
    }
    let estimate = match distances.last() {
        Some(&d) => Rational::new(BigInt::from(d), BigInt::from(distances.len())),
        None => rational(0),
    };
    let mut report = TranslationReport {
        distances,
        estimate,
        certified: false,
        period: None,
        step: None,
        length: None,
        window_exhausted,
    };
    if window_exhausted.is_some() {
        return Ok(report);
    }
    let d = &report.distances;
    for period in 1..=(2 * n).max(1) {
        if 2 * period > horizon {
            break;
        }
        let step = d[period - 1];
        if (1..=horizon / period).all(|m| d[m * period - 1] == m * step) {
            report.certified = true;
            report.period = Some(period);
            report.step = Some(step);
            report.length = Some(Rational::new(BigInt::from(step), BigInt::from(period)));
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn king_neighbors() {
        let k = KingOracle { dims: 2 };
        assert_eq!(k.neighbors(&vec![0, 0]).len(), 8);
        assert_eq!(explore_window(&k, 2).len(), 25);
    }

    #[test]
    fn tree_neighbors() {
        let t = TreeOracle { degree: 3 };
        assert_eq!(t.neighbors(&vec![]), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(t.neighbors(&vec![1]), vec![vec![], vec![1, 0], vec![1, 2]]);
        assert_eq!(explore_window(&t, 2).len(), 1 + 3 + 6);
    }

    #[test]
    fn shift_bump_on_the_plane() {
        let r = translation_length(&KingOracle { dims: 2 }, &shift_bump(), 2, 8, 12).unwrap();
        assert_eq!(&r.distances[..4], &[1, 1, 2, 2]);
        assert!(r.certified);
        assert_eq!(r.period, Some(2));
        assert_eq!(r.length, Some(ratio(1, 2)));
    }

    #[test]
    fn identity_and_translation() {
        let k = KingOracle { dims: 2 };
        let r = translation_length(&k, &OracleAutomorphism::identity(), 2, 4, 12).unwrap();
        assert_eq!(r.length, Some(rational(0)));
        let r = translation_length(&k, &translate(vec![1, 0]), 2, 6, 12).unwrap();
        assert_eq!((r.length, r.period), (Some(rational(1)), Some(1)));
    }

    #[test]
    fn leaving_the_window() {
        let r = translation_length(&KingOracle { dims: 1 }, &translate(vec![1]), 1, 10, 4).unwrap();
        assert_eq!(r.window_exhausted, Some(5));
        assert!(!r.certified);
        assert_eq!(r.estimate, rational(1));
    }

    #[test]
    fn tree_hyperbolic_translation() {
        let t = TreeOracle { degree: 3 };
        let r = translation_length(&t, &tree_translate(vec![0, 1]), 1, 4, 12).unwrap();
        assert_eq!(r.length, Some(rational(2)));
    }
}
