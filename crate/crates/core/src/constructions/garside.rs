//! The braid group on three strands with its classical Garside structure.
//!
//! Simple elements are the six permutation braids, indexed by their
//! permutations of `{0, 1, 2}`; `Δ = σ₁σ₂σ₁`. Elements are kept in left
//! normal form `Δᵖ · a₁ ⋯ a_k` with every `aᵢ ∉ {1, Δ}` and every adjacent
//! pair left weighted.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::constructions::lattice::LatticeAction;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::Poset;
use crate::Bounds;

type Perm = [u8; 3];

/// Simple elements in a fixed order: 1, σ₁, σ₂, σ₁σ₂, σ₂σ₁, Δ.
const SIMPLES: [Perm; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
const WORDS: [&str; 6] = ["1", "s1", "s2", "s1s2", "s2s1", "s1s2s1"];
const ONE: u8 = 0;
const DELTA: u8 = 5;

/// `(p * q)[i] = p[q[i]]`, so a word multiplies left to right.
fn compose(p: Perm, q: Perm) -> Perm {
    [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]]
}

fn invert(p: Perm) -> Perm {
    let mut out = [0; 3];
    for (i, &v) in p.iter().enumerate() {
        out[v as usize] = i as u8;
    }
    out
}

fn length(p: Perm) -> usize {
    (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn index_of(p: Perm) -> u8 {
    SIMPLES.iter().position(|&q| q == p).expect("every permutation is simple") as u8
}

/// Precomputed operations on the six simples.
struct Tables {
    /// `prefix[a][b]`: `a` left-divides `b`.
    prefix: [[bool; 6]; 6],
    /// `product[a][b]` when `ab` is simple.
    product: [[Option<u8>; 6]; 6],
    /// `a⁻¹b` when `a` left-divides `b`.
    quotient: [[Option<u8>; 6]; 6],
    /// `∂a = a⁻¹Δ`.
    complement: [u8; 6],
    /// `τ(a) = Δ⁻¹aΔ` (swaps σ₁ and σ₂).
    tau: [u8; 6],
}

fn tables() -> &'static Tables {
    static T: std::sync::OnceLock<Tables> = std::sync::OnceLock::new();
    T.get_or_init(|| {
        let mut t = Tables {
            prefix: [[false; 6]; 6],
            product: [[None; 6]; 6],
            quotient: [[None; 6]; 6],
            complement: [0; 6],
            tau: [0; 6],
        };
        let delta = SIMPLES[DELTA as usize];
        for a in 0..6 {
            let pa = SIMPLES[a];
            t.complement[a] = index_of(compose(invert(pa), delta));
            t.tau[a] = index_of(compose(compose(invert(delta), pa), delta));
            for b in 0..6 {
                let pb = SIMPLES[b];
                let q = compose(invert(pa), pb);
                if length(pa) + length(q) == length(pb) {
                    t.prefix[a][b] = true;
                    t.quotient[a][b] = Some(index_of(q));
                }
                let ab = compose(pa, pb);
                if length(pa) + length(pb) == length(ab) {
                    t.product[a][b] = Some(index_of(ab));
                }
            }
        }
        t
    })
}

/// Greatest common left divisor of two simples.
fn meet(a: u8, b: u8) -> u8 {
    let t = tables();
    (0..6u8)
        .filter(|&c| t.prefix[c as usize][a as usize] && t.prefix[c as usize][b as usize])
        .max_by_key(|&c| length(SIMPLES[c as usize]))
        .expect("1 divides everything")
}

/// An element of `B₃` in left normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Braid {
    pub delta_power: i64,
    /// Indices into the simple elements, each different from 1 and Δ.
    pub factors: Vec<u8>,
}

impl Braid {
    pub fn identity() -> Self {
        Braid { delta_power: 0, factors: Vec::new() }
    }

    pub fn delta() -> Self {
        Braid { delta_power: 1, factors: Vec::new() }
    }

    /// `σ₁` (`i = 1`) or `σ₂` (`i = 2`).
    pub fn generator(i: usize) -> Self {
        assert!(i == 1 || i == 2, "B₃ has generators σ₁ and σ₂");
        Braid::identity().mul_simple(i as u8)
    }

    /// Infimum `p` and supremum `p + k`.
    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    /// Restores left normal form after local edits.
    fn normalize(mut self) -> Self {
        let t = tables();
        loop {
            let mut changed = false;
            // move Δ factors to the front, drop identities
            let mut i = 0;
            while i < self.factors.len() {
                match self.factors[i] {
                    ONE => {
                        self.factors.remove(i);
                        changed = true;
                    }
                    DELTA => {
                        self.factors.remove(i);
                        for f in &mut self.factors[..i] {
                            *f = t.tau[*f as usize];
                        }
                        self.delta_power += 1;
                        changed = true;
                    }
                    _ => i += 1,
                }
            }
            for i in (1..self.factors.len()).rev() {
                let (a, b) = (self.factors[i - 1], self.factors[i]);
                let m = meet(t.complement[a as usize], b);
                if m != ONE {
                    self.factors[i - 1] = t.product[a as usize][m as usize].expect("m divides ∂a");
                    self.factors[i] = t.quotient[m as usize][b as usize].expect("m divides b");
                    changed = true;
                }
            }
            if !changed {
                return self;
            }
        }
    }

    /// `self · s` for a simple `s` (index into the simple list).
    pub fn mul_simple(&self, s: u8) -> Self {
        let mut out = self.clone();
        out.factors.push(s);
        out.normalize()
    }

    /// `self · Δᵏ`, using `aΔ = Δτ(a)`.
    pub fn mul_delta_power(&self, k: i64) -> Self {
        let t = tables();
        let mut out = self.clone();
        out.delta_power += k;
        if k.rem_euclid(2) == 1 {
            for f in &mut out.factors {
                *f = t.tau[*f as usize];
            }
        }
        out
    }

    /// `self · s⁻¹ = self · ∂s · Δ⁻¹`.
    pub fn mul_simple_inverse(&self, s: u8) -> Self {
        self.mul_simple(tables().complement[s as usize]).mul_delta_power(-1)
    }

    pub fn mul(&self, other: &Braid) -> Braid {
        let mut out = self.mul_delta_power(other.delta_power);
        for &f in &other.factors {
            out = out.mul_simple(f);
        }
        out
    }

    pub fn inverse(&self) -> Braid {
        let mut out = Braid::identity();
        for &f in self.factors.iter().rev() {
            out = out.mul_simple_inverse(f);
        }
        out.mul_delta_power(-self.delta_power)
    }

    /// Prefix order: `self ≤ other` iff `self⁻¹ · other` is positive.
    pub fn prefix_leq(&self, other: &Braid) -> bool {
        self.inverse().mul(other).delta_power >= 0
    }

    /// Word in `σ₁^{±1}, σ₂^{±1}` as signed generator indices, read left to right.
    pub fn word(&self) -> Vec<i8> {
        let mut out = Vec::new();
        let delta_word: [i8; 3] = [1, 2, 1];
        for _ in 0..self.delta_power.max(0) {
            out.extend_from_slice(&delta_word);
        }
        for _ in 0..(-self.delta_power).max(0) {
            out.extend(delta_word.iter().rev().map(|g| -g));
        }
        for &f in &self.factors {
            let w = WORDS[f as usize];
            out.extend(w.split('s').filter(|p| !p.is_empty()).map(|p| p.parse::<i8>().unwrap()));
        }
        out
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.delta_power != 0 {
            parts.push(format!("D^{}", self.delta_power));
        }
        parts.extend(self.factors.iter().map(|&x| WORDS[x as usize].to_string()));
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Nontrivial elements `s⁻¹t` for simples `s`, `t`, sorted.
pub fn s_inverse_s() -> Vec<Braid> {
    let mut out: Vec<Braid> = (0..6u8)
        .flat_map(|s| (0..6u8).map(move |t| Braid::identity().mul_simple_inverse(s).mul_simple(t)))
        .filter(|b| *b != Braid::identity())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Ball about the identity in the Cayley graph with generators `S⁻¹S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarsideBall {
    pub graph: SimpleGraph,
    pub elements: Vec<Braid>,
    /// Normal forms as text, e.g. `D^-1.s1s2`.
    pub labels: Vec<String>,
    /// Distance to the identity (vertex 0).
    pub depth: Vec<usize>,
}

pub fn garside_b3_ball(radius: usize, bounds: &Bounds) -> Result<GarsideBall> {
    if radius > bounds.garside_radius {
        return Err(Error::RadiusTooLarge { radius, bound: bounds.garside_radius });
    }
    let gens = s_inverse_s();
    let mut index: HashMap<Braid, usize> = HashMap::new();
    let mut elements = vec![Braid::identity()];
    let mut depth = vec![0];
    index.insert(Braid::identity(), 0);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::new();
    while let Some(i) = queue.pop_front() {
        let x = elements[i].clone();
        for g in &gens {
            let y = x.mul(g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None if depth[i] < radius => {
                    let j = elements.len();
                    index.insert(y.clone(), j);
                    elements.push(y);
                    depth.push(depth[i] + 1);
                    queue.push_back(j);
                    j
                }
                None => continue,
            };
            if i < j {
                edges.push((i, j));
            }
        }
    }
    // vertices at full depth were only reached, not expanded: join them too
    let rim: Vec<usize> = (0..elements.len()).filter(|&i| depth[i] == radius && radius > 0).collect();
    let gen_set: std::collections::HashSet<&Braid> = gens.iter().collect();
    for (a, &i) in rim.iter().enumerate() {
        let inv = elements[i].inverse();
        for &j in &rim[a + 1..] {
            if gen_set.contains(&inv.mul(&elements[j])) {
                edges.push((i, j));
            }
        }
    }
    let graph = SimpleGraph::from_edges(elements.len(), &edges)?;
    let labels = elements.iter().map(Braid::to_string).collect();
    Ok(GarsideBall { graph, elements, labels, depth })
}

/// The interval `[Δ⁻ᵏ, Δᵏ]` of the prefix lattice with shift `x ↦ xΔ`.
pub fn garside_window(k: i64) -> Result<(LatticeAction, Vec<Braid>)> {
    if k < 0 {
        return Err(Error::BadSpec("window half-width must be nonnegative".into()));
    }
    let inside = |b: &Braid| b.inf() >= -k && b.sup() <= k;
    let mut seen: BTreeMap<Braid, ()> = BTreeMap::new();
    let mut queue = VecDeque::from([Braid::identity()]);
    seen.insert(Braid::identity(), ());
    while let Some(x) = queue.pop_front() {
        for s in [1u8, 2] {
            for y in [x.mul_simple(s), x.mul_simple_inverse(s)] {
                if inside(&y) && !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
    }
    let elements: Vec<Braid> = seen.into_keys().collect();
    let position: HashMap<&Braid, usize> = elements.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let poset = Poset::from_leq(elements.len(), |a, b| elements[a].prefix_leq(&elements[b]))?
        .with_labels(elements.iter().map(Braid::to_string).collect())?;
    let shift = elements.iter().map(|b| position.get(&b.mul_delta_power(1)).copied()).collect();
    Ok((LatticeAction::new(poset, shift)?, elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_tables() {
        let t = tables();
        assert_eq!(t.complement[ONE as usize], DELTA);
        assert_eq!(t.tau[1], 2);
        assert_eq!(t.product[1][2], Some(3));
        assert_eq!(t.product[1][1], None);
        assert_eq!(meet(3, 4), ONE);
        assert_eq!(meet(3, 5), 3);
    }

    #[test]
    fn normal_forms() {
        let s1 = Braid::generator(1);
        let s2 = Braid::generator(2);
        assert_eq!(s1.mul(&s2).mul(&s1), Braid::delta());
        assert_eq!(s2.mul(&s1).mul(&s2), Braid::delta());
        // σ₁² is two factors
        assert_eq!(s1.mul(&s1).factors, vec![1, 1]);
        assert_eq!(s1.mul(&s1.inverse()), Braid::identity());
        let x = s1.mul(&s2.inverse()).mul(&s1).mul(&s1);
        assert_eq!(x.mul(&x.inverse()), Braid::identity());
        assert_eq!(x.inverse().mul(&x), Braid::identity());
        assert_eq!(Braid::delta().to_string(), "D^1");
        assert_eq!(Braid::identity().to_string(), "e");
    }

    #[test]
    fn small_balls() {
        let b = Bounds::default();
        assert_eq!(garside_b3_ball(0, &b).unwrap().graph.vertex_count(), 1);
        let one = garside_b3_ball(1, &b).unwrap();
        assert_eq!(one.graph.degree(0), s_inverse_s().len());
        assert!(matches!(garside_b3_ball(4, &b), Err(Error::RadiusTooLarge { .. })));
    }

    #[test]
    fn prefix_order() {
        let s1 = Braid::generator(1);
        assert!(Braid::identity().prefix_leq(&s1));
        assert!(s1.prefix_leq(&Braid::delta()));
        assert!(!s1.prefix_leq(&Braid::generator(2)));
        assert!(Braid::delta().inverse().prefix_leq(&Braid::identity()));
    }
}
