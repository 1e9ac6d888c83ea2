//! Helly property of finite set families.
//!
//! Two independent checks: the triple criterion (for every three points, the
//! members containing at least two of them have a common point) and a direct
//! search over maximal pairwise-intersecting subfamilies.

use fixedbitset::FixedBitSet;

use crate::graph::SimpleGraph;

/// Intersection of the listed members; `None` for an empty selection.
fn intersection(members: &[FixedBitSet], pick: impl IntoIterator<Item = usize>) -> Option<FixedBitSet> {
    let mut acc: Option<FixedBitSet> = None;
    for i in pick {
        match &mut acc {
            None => acc = Some(members[i].clone()),
            Some(a) => a.intersect_with(&members[i]),
        }
    }
    acc
}

/// Drops members (largest first) as long as the intersection stays empty.
fn minimize(members: &[FixedBitSet], mut family: Vec<usize>) -> Vec<usize> {
    let mut by_size = family.clone();
    by_size.sort_by_key(|&i| (std::cmp::Reverse(members[i].count_ones(..)), i));
    for drop in by_size {
        if family.len() <= 2 {
            break;
        }
        let rest: Vec<usize> = family.iter().copied().filter(|&i| i != drop).collect();
        if intersection(members, rest.iter().copied()).is_some_and(|s| s.is_clear()) {
            family = rest;
        }
    }
    family.sort_unstable();
    family
}

/// Triple criterion. Returns a pairwise-intersecting subfamily with empty
/// intersection (as member indices, minimal under removal) when the family
/// is not Helly. Empty members are ignored.
pub fn helly_by_triples(universe: usize, members: &[FixedBitSet]) -> Option<Vec<usize>> {
    // containing[p] = members that contain point p
    let mut containing: Vec<FixedBitSet> =
        (0..universe).map(|_| FixedBitSet::with_capacity(members.len())).collect();
    for (i, m) in members.iter().enumerate() {
        for p in m.ones() {
            containing[p].insert(i);
        }
    }
    for a in 0..universe {
        for b in a + 1..universe {
            let mut ab = containing[a].clone();
            ab.intersect_with(&containing[b]);
            for c in b + 1..universe {
                let mut two = containing[c].clone();
                two.intersect_with(&containing[a]);
                let mut bc = containing[b].clone();
                bc.intersect_with(&containing[c]);
                two.union_with(&bc);
                two.union_with(&ab);
                if let Some(meet) = intersection(members, two.ones()) {
                    if meet.is_clear() {
                        return Some(minimize(members, two.ones().collect()));
                    }
                }
            }
        }
    }
    None
}

/// Direct search: every maximal pairwise-intersecting subfamily must have a
/// common point. Returns the first failing maximal subfamily.
pub fn helly_by_maximal_families(members: &[FixedBitSet]) -> Option<Vec<usize>> {
    let live: Vec<usize> = (0..members.len()).filter(|&i| !members[i].is_clear()).collect();
    let mut meets = SimpleGraph::empty(live.len());
    for (i, &a) in live.iter().enumerate() {
        for (j, &b) in live.iter().enumerate().skip(i + 1) {
            if !members[a].is_disjoint(&members[b]) {
                meets.add_edge(i, j).expect("distinct indices");
            }
        }
    }
    for clique in meets.maximal_cliques() {
        let family: Vec<usize> = clique.iter().map(|&i| live[i]).collect();
        if intersection(members, family.iter().copied()).is_some_and(|s| s.is_clear()) {
            return Some(family);
        }
    }
    None
}

pub fn bitset(universe: usize, items: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(universe);
    for i in items {
        s.insert(i);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(universe: usize, sets: &[&[usize]]) -> Vec<FixedBitSet> {
        sets.iter().map(|s| bitset(universe, s.iter().copied())).collect()
    }

    #[test]
    fn triangle_edges_are_not_helly() {
        let f = family(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(helly_by_triples(3, &f), Some(vec![0, 1, 2]));
        assert_eq!(helly_by_maximal_families(&f), Some(vec![0, 1, 2]));
    }

    #[test]
    fn nested_and_star_families_are_helly() {
        let f = family(4, &[&[0, 1, 2], &[0, 1], &[0, 3], &[0]]);
        assert_eq!(helly_by_triples(4, &f), None);
        assert_eq!(helly_by_maximal_families(&f), None);
    }

    #[test]
    fn witness_is_minimized() {
        // the full set is redundant in the failing triple
        let f = family(3, &[&[0, 1, 2], &[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(helly_by_triples(3, &f), Some(vec![1, 2, 3]));
    }

    #[test]
    fn disjoint_members_are_fine() {
        let f = family(4, &[&[0], &[1], &[2, 3], &[]]);
        assert_eq!(helly_by_triples(4, &f), None);
        assert_eq!(helly_by_maximal_families(&f), None);
    }
}
