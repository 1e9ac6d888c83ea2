//! Finite posets: bowties, lattice and flag-semilattice checks, chain complexes.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite partial order on `0..n`, stored as its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Option<Vec<String>>,
    /// `up[x]` holds every `y` with `x ≤ y`.
    up: Vec<FixedBitSet>,
}

impl Poset {
    /// Order generated by the strict relations `a < b` listed in `pairs`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut up: Vec<FixedBitSet> = (0..n)
            .map(|x| {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(x);
                s
            })
            .collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("relation {a} < {b} out of range")));
            }
            up[a].insert(b);
        }
        // Warshall closure
        for k in 0..n {
            for x in 0..n {
                if up[x].contains(k) {
                    let row = up[k].clone();
                    up[x].union_with(&row);
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if up[x].contains(y) && up[y].contains(x) {
                    return Err(Error::InvalidInput(format!(
                        "relations contain a cycle through {x} and {y}"
                    )));
                }
            }
        }
        Ok(Poset { labels: None, up })
    }

    /// Order given by a predicate, which must be a partial order.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        let p = Poset::from_relations(n, &pairs)?;
        // the closure must not add anything the predicate denies
        for a in 0..n {
            for b in 0..n {
                if p.leq(a, b) && !leq(a, b) {
                    return Err(Error::InvalidInput(format!(
                        "relation is not transitive at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::InvalidInput("label count mismatch".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, x: usize) -> String {
        self.labels.as_ref().map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `P_{≥x}`.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        self.up[x].ones().collect()
    }

    /// `P_{≤x}`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    /// Covering relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a].ones() {
                if b != a && !(0..n).any(|c| c != a && c != b && self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The opposite order.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let mut up: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
        for (a, row) in self.up.iter().enumerate() {
            for b in row.ones() {
                up[b].insert(a);
            }
        }
        Poset { labels: self.labels.clone(), up }
    }

    /// Greatest element of `candidates`, if there is one.
    fn greatest(&self, candidates: &[usize]) -> Option<usize> {
        candidates
            .iter()
            .copied()
            .find(|&g| candidates.iter().all(|&c| self.leq(c, g)))
    }

    /// Meet of `a` and `b` in the whole poset.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        self.greatest(&lower)
    }

    /// Join of `a` and `b` in the whole poset.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.dual().meet(a, b)
    }

    /// Whether every interval `[x, y]` has all its maximal chains of equal length.
    pub fn is_graded(&self) -> bool {
        let n = self.len();
        // longest and shortest maximal chain lengths from x upward via covers
        let covers = self.hasse();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &covers {
            succ[a].push(b);
        }
        for x in 0..n {
            // BFS layers over covers must agree with the longest-path layers
            let mut short = vec![usize::MAX; n];
            let mut long = vec![0usize; n];
            short[x] = 0;
            let order = self.linear_extension();
            for &a in &order {
                if short[a] == usize::MAX {
                    continue;
                }
                for &b in &succ[a] {
                    short[b] = short[b].min(short[a] + 1);
                    long[b] = long[b].max(long[a] + 1);
                }
            }
            if (0..n).any(|y| short[y] != usize::MAX && short[y] != long[y]) {
                return false;
            }
        }
        true
    }

    /// Elements sorted so that `a < b` implies `a` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down_count(x), x));
        order
    }

    fn down_count(&self, x: usize) -> usize {
        (0..self.len()).filter(|&y| self.leq(y, x)).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum FlagFailureKind {
    /// Two elements without a meet (upper side) or join (lower side).
    MissingBound { a: usize, b: usize },
    /// Three pairwise bounded elements without a common bound.
    UnboundedTriple { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FlagFailure {
    /// The element `x` whose `P_{≥x}` (or `P_{≤x}`) fails.
    pub at: usize,
    pub kind: FlagFailureKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetReport {
    /// Bowties `[a, b, c, d]` with `a, b ≤ c, d`, `a < b` and `c < d` as indices.
    pub bowties: Vec<[usize; 4]>,
    pub is_lattice: bool,
    /// Failures of "`P_{≥x}` is a flag meet-semilattice".
    pub up_flag_failures: Vec<FlagFailure>,
    /// Failures of "`P_{≤x}` is a flag join-semilattice".
    pub down_flag_failures: Vec<FlagFailure>,
    pub graded: bool,
}

impl PosetReport {
    /// The local flag conditions hold at every element.
    pub fn locally_flag(&self) -> bool {
        self.up_flag_failures.is_empty() && self.down_flag_failures.is_empty()
    }
}

/// Bowties, lattice property and the local flag-semilattice conditions.
pub fn poset_check(p: &Poset) -> PosetReport {
    PosetReport {
        bowties: bowties(p),
        is_lattice: is_lattice(p),
        up_flag_failures: upper_flag_failures(p),
        down_flag_failures: upper_flag_failures(&p.dual()),
        graded: p.is_graded(),
    }
}

pub fn bowties(p: &Poset) -> Vec<[usize; 4]> {
    let n = p.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if p.comparable(a, b) {
                continue;
            }
            let above: Vec<usize> =
                (0..n).filter(|&c| c != a && c != b && p.leq(a, c) && p.leq(b, c)).collect();
            for (i, &c) in above.iter().enumerate() {
                for &d in &above[i + 1..] {
                    if p.comparable(c, d) {
                        continue;
                    }
                    let between = (0..n).any(|x| {
                        ![a, b, c, d].contains(&x)
                            && p.leq(a, x)
                            && p.leq(b, x)
                            && p.leq(x, c)
                            && p.leq(x, d)
                    });
                    if !between {
                        out.push([a, b, c.min(d), c.max(d)]);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

pub fn is_lattice(p: &Poset) -> bool {
    let dual = p.dual();
    let n = p.len();
    (0..n).all(|a| (a..n).all(|b| p.meet(a, b).is_some() && dual.meet(a, b).is_some()))
}

/// For every `x`, checks that `P_{≥x}` is a meet-semilattice in which
/// pairwise upper-bounded triples have an upper bound.
fn upper_flag_failures(p: &Poset) -> Vec<FlagFailure> {
    let mut out = Vec::new();
    for x in 0..p.len() {
        let sub = p.up_set(x);
        for (i, &a) in sub.iter().enumerate() {
            for &b in &sub[i + 1..] {
                let lower: Vec<usize> =
                    sub.iter().copied().filter(|&c| p.leq(c, a) && p.leq(c, b)).collect();
                if p.greatest(&lower).is_none() {
                    out.push(FlagFailure { at: x, kind: FlagFailureKind::MissingBound { a, b } });
                }
            }
        }
        let bounded = |a: usize, b: usize| sub.iter().any(|&u| p.leq(a, u) && p.leq(b, u));
        for (i, &a) in sub.iter().enumerate() {
            for (j, &b) in sub.iter().enumerate().skip(i + 1) {
                if !bounded(a, b) {
                    continue;
                }
                for &c in &sub[j + 1..] {
                    if bounded(a, c)
                        && bounded(b, c)
                        && !sub.iter().any(|&u| p.leq(a, u) && p.leq(b, u) && p.leq(c, u))
                    {
                        out.push(FlagFailure {
                            at: x,
                            kind: FlagFailureKind::UnboundedTriple { a, b, c },
                        });
                    }
                }
            }
        }
    }
    out
}

/// Simplices of the order complex: all nonempty chains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainComplex {
    /// Each chain listed bottom to top; sorted by length then lexicographically.
    pub simplices: Vec<Vec<usize>>,
    /// `f_vector[k]` counts chains with `k + 1` elements.
    pub f_vector: Vec<usize>,
}

pub fn orthoscheme_chains(p: &Poset) -> ChainComplex {
    fn extend(p: &Poset, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(chain.clone());
        let top = *chain.last().unwrap();
        for y in 0..p.len() {
            if p.lt(top, y) {
                chain.push(y);
                extend(p, chain, out);
                chain.pop();
            }
        }
    }
    let mut simplices = Vec::new();
    for x in 0..p.len() {
        extend(p, &mut vec![x], &mut simplices);
    }
    simplices.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let top = simplices.iter().map(Vec::len).max().unwrap_or(0);
    let mut f_vector = vec![0; top];
    for s in &simplices {
        f_vector[s.len() - 1] += 1;
    }
    ChainComplex { simplices, f_vector }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn bowtie() -> Poset {
        Poset::from_relations(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn chain_is_a_flag_lattice() {
        let r = poset_check(&chain3());
        assert!(r.bowties.is_empty());
        assert!(r.is_lattice);
        assert!(r.locally_flag());
        assert!(r.graded);
    }

    #[test]
    fn bowtie_is_detected() {
        let r = poset_check(&bowtie());
        assert_eq!(r.bowties, vec![[0, 1, 2, 3]]);
        assert!(!r.is_lattice);
    }

    #[test]
    fn cycle_in_relations_is_rejected() {
        assert!(Poset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn hasse_of_closure() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.hasse(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn chain_f_vectors() {
        assert_eq!(orthoscheme_chains(&chain3()).f_vector, vec![3, 3, 1]);
        let anti = Poset::from_relations(3, &[]).unwrap();
        let c = orthoscheme_chains(&anti);
        assert_eq!(c.f_vector, vec![3]);
        assert_eq!(c.simplices, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn flag_failure_in_three_atoms_below_pairwise_joins() {
        // 0 < a, b, c; each pair has its own upper bound, no common one
        let p = Poset::from_relations(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (1, 6), (3, 6)],
        )
        .unwrap();
        let r = poset_check(&p);
        assert!(r.up_flag_failures.iter().any(|f| f.at == 0
            && f.kind == FlagFailureKind::UnboundedTriple { a: 1, b: 2, c: 3 }));
    }

    #[test]
    fn graded_detection() {
        // pentagon: maximal chains 0<1<2<4 and 0<3<4
        let p = Poset::from_relations(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(!p.is_graded());
        assert!(Poset::from_relations(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap().is_graded());
    }
}
