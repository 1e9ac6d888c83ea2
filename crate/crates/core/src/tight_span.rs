//! Injective hulls (tight spans) of finite metric spaces.
//!
//! A function `f` on the points lies in `Δ(X)` when `f(x) + f(y) ≥ d(x, y)`
//! for all `x, y` (including `x = y`, which forces `f ≥ 0`). The injective
//! hull `E(X)` is the set of minimal elements of `Δ(X)`, equivalently the
//! functions satisfying `f(x) = max_y (d(x, y) − f(y))` for every `x`.
//!
//! `E(X)` is the union of the bounded faces of the polyhedron `Δ(X)`. A face
//! is described by the set of pairs that are tight on its relative interior;
//! it is bounded exactly when those pairs cover every point, and its
//! dimension is `n` minus the rank of the tight equations.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::metric::FiniteMetric;
use crate::scalar::{Field, Scalar};
use crate::Bounds;

/// A function in `Δ(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaFunction<T> {
    values: Vec<T>,
}

/// A point of the injective hull: a minimal function of `Δ(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtremalFunction<T> {
    values: Vec<T>,
}

impl<T: Scalar> DeltaFunction<T> {
    /// Checks membership in `Δ(X)`.
    pub fn new(m: &FiniteMetric<T>, values: Vec<T>) -> Result<Self> {
        check_len(m, &values)?;
        match delta_violation(m, &values) {
            None => Ok(DeltaFunction { values }),
            Some((x, y)) => Err(Error::InvalidInput(format!(
                "f({x}) + f({y}) < d({x},{y}): function is not in Δ(X)"
            ))),
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T: Scalar> ExtremalFunction<T> {
    /// Checks extremality.
    pub fn new(m: &FiniteMetric<T>, values: Vec<T>) -> Result<Self> {
        match classify_function(m, &values)? {
            Classification::Extremal => Ok(ExtremalFunction { values }),
            other => Err(Error::InvalidInput(format!("function is not extremal: {other:?}"))),
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn as_delta(&self) -> DeltaFunction<T> {
        DeltaFunction { values: self.values.clone() }
    }
}

fn check_len<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Result<()> {
    if f.len() != m.len() {
        return Err(Error::InvalidInput(format!(
            "function has {} values for {} points",
            f.len(),
            m.len()
        )));
    }
    Ok(())
}

/// First pair (in lexicographic order, `x ≤ y`) violating `f(x) + f(y) ≥ d(x,y)`.
pub fn delta_violation<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Option<(usize, usize)> {
    let n = m.len();
    for x in 0..n {
        for y in x..n {
            if f[x].clone() + f[y].clone() < *m.d(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Sup distance between two functions.
pub fn sup_distance<T: Scalar>(f: &[T], g: &[T]) -> T {
    f.iter()
        .zip(g)
        .map(|(a, b)| (a.clone() - b.clone()).abs())
        .max()
        .unwrap_or_else(T::zero)
}

/// The Kuratowski embedding `e(x) = d(x, ·)`.
pub fn kuratowski<T: Scalar>(m: &FiniteMetric<T>, x: usize) -> ExtremalFunction<T> {
    ExtremalFunction { values: m.row(x).to_vec() }
}

/// `f*(x) = max_z (d(x, z) − f(z))`.
pub fn conjugate<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Vec<T> {
    (0..m.len())
        .map(|x| {
            (0..m.len())
                .map(|z| m.d(x, z).clone() - f[z].clone())
                .max()
                .expect("nonempty metric")
        })
        .collect()
}

/// Pairs `x ≤ y` with `f(x) + f(y) = d(x, y)`, lexicographic.
pub fn tight_pairs<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x..n {
            if f[x].clone() + f[y].clone() == *m.d(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// First pair at which `f` fails to be 1-Lipschitz.
pub fn lipschitz_violation<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Option<(usize, usize)> {
    let n = m.len();
    for x in 0..n {
        for y in x + 1..n {
            if (f[x].clone() - f[y].clone()).abs() > *m.d(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification<T> {
    /// `f(x) + f(y) < d(x, y)`.
    NotInDelta { x: usize, y: usize },
    /// `f` lies in `Δ(X)` but `coordinate` can be lowered; `dominated` is the
    /// function obtained by lowering that coordinate as far as `Δ(X)` allows.
    InDeltaNotExtremal { coordinate: usize, dominated: Vec<T> },
    Extremal,
}

/// Decides where `f` sits relative to `Δ(X)` and `E(X)`.
pub fn classify_function<T: Scalar>(m: &FiniteMetric<T>, f: &[T]) -> Result<Classification<T>> {
    check_len(m, f)?;
    if let Some((x, y)) = delta_violation(m, f) {
        return Ok(Classification::NotInDelta { x, y });
    }
    let star = conjugate(m, f);
    for (x, (fx, sx)) in f.iter().zip(&star).enumerate() {
        if fx != sx {
            // lowest value for coordinate x with the others fixed
            let floor = (0..m.len())
                .filter(|&z| z != x)
                .map(|z| m.d(x, z).clone() - f[z].clone())
                .chain(std::iter::once(T::zero()))
                .max()
                .unwrap();
            let mut dominated = f.to_vec();
            dominated[x] = floor;
            return Ok(Classification::InDeltaNotExtremal { coordinate: x, dominated });
        }
    }
    Ok(Classification::Extremal)
}

/// One step of the retraction onto `E(X)`: `q(f) = (f + f*) / 2`.
pub fn q_step<T: Field>(m: &FiniteMetric<T>, f: &DeltaFunction<T>) -> DeltaFunction<T> {
    let star = conjugate(m, &f.values);
    let values = f
        .values
        .iter()
        .zip(star)
        .map(|(a, b)| (a.clone() + b).half())
        .collect();
    DeltaFunction { values }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection<T> {
    /// A fixed point of `q` was reached after `steps` applications.
    Exact { f: ExtremalFunction<T>, steps: usize },
    /// No fixed point within the iteration budget. `gap[x] = 2 (qⁿf − qⁿ⁺¹f)(x)`
    /// bounds the distance of the limit from its own conjugate.
    Approximate { last: DeltaFunction<T>, gap: Vec<T>, steps: usize },
}

pub const DEFAULT_MAX_ITER: usize = 64;

/// Iterates [`q_step`] until a fixed point or `max_iter` steps.
pub fn project_to_tight_span<T: Field>(
    m: &FiniteMetric<T>,
    f: &DeltaFunction<T>,
    max_iter: usize,
) -> Projection<T> {
    let mut current = f.clone();
    for steps in 0..=max_iter {
        let next = q_step(m, &current);
        if next == current {
            return Projection::Exact {
                f: ExtremalFunction { values: current.values },
                steps,
            };
        }
        if steps == max_iter {
            let gap = current
                .values
                .iter()
                .zip(&next.values)
                .map(|(a, b)| T::two() * (a.clone() - b.clone()))
                .collect();
            return Projection::Approximate { last: current, gap, steps };
        }
        current = next;
    }
    unreachable!()
}

fn check_size<T: Scalar>(m: &FiniteMetric<T>, bounds: &Bounds) -> Result<()> {
    if m.len() > bounds.tight_span_points {
        return Err(Error::InstanceTooLarge {
            what: "tight span enumeration",
            size: m.len(),
            bound: bounds.tight_span_points,
        });
    }
    if m.len() == 0 {
        return Err(Error::InvalidInput("metric space has no points".into()));
    }
    Ok(())
}

/// Affine description `f(x) = offset + sign · t` of a point in a partially
/// solved component of tight equations.
#[derive(Clone)]
struct Affine<T> {
    comp: usize,
    sign: i8,
    offset: T,
}

#[derive(Clone)]
struct PartnerState<T> {
    point: Vec<Option<Affine<T>>>,
    /// Solved parameter of each component, once an odd cycle pins it.
    param: Vec<Option<T>>,
    members: Vec<Vec<usize>>,
}

impl<T: Field> PartnerState<T> {
    fn new(n: usize) -> Self {
        PartnerState { point: vec![None; n], param: Vec::new(), members: Vec::new() }
    }

    fn value(&self, x: usize) -> Option<T> {
        let a = self.point[x].as_ref()?;
        let t = self.param[a.comp].as_ref()?;
        Some(apply(a, t))
    }

    fn fresh(&mut self, x: usize) {
        let comp = self.param.len();
        self.param.push(None);
        self.members.push(vec![x]);
        self.point[x] = Some(Affine { comp, sign: 1, offset: T::zero() });
    }

    /// Adds `f(x) + f(y) = d`. Returns false on inconsistency.
    fn add(&mut self, x: usize, y: usize, d: &T) -> bool {
        if self.point[x].is_none() && self.point[y].is_none() {
            self.fresh(y);
        }
        if self.point[x].is_none() {
            return self.attach(x, y, d);
        }
        if self.point[y].is_none() {
            return self.attach(y, x, d);
        }
        let ax = self.point[x].clone().unwrap();
        let ay = self.point[y].clone().unwrap();
        if ax.comp == ay.comp {
            let rhs = d.clone() - ax.offset.clone() - ay.offset.clone();
            let coeff = ax.sign + ay.sign;
            if coeff == 0 {
                return rhs.is_zero();
            }
            let t = rhs / T::from_int(coeff as i64);
            return match &self.param[ax.comp] {
                Some(old) => *old == t,
                None => {
                    self.param[ax.comp] = Some(t);
                    true
                }
            };
        }
        // merge y's component into x's: t_y = s_y (d − c_x − c_y) − s_x s_y t_x
        let (cx, cy) = (ax.comp, ay.comp);
        let base = d.clone() - ax.offset.clone() - ay.offset.clone();
        let k_off = if ay.sign > 0 { base.clone() } else { -base.clone() };
        let k_sign = -ax.sign * ay.sign;
        let param_from_y = self.param[cy].clone();
        if let Some(ty) = &param_from_y {
            // t_x = (t_y − k_off) / k_sign
            let tx = (ty.clone() - k_off.clone()) * T::from_int(k_sign as i64);
            match &self.param[cx] {
                Some(old) if *old != tx => return false,
                _ => self.param[cx] = Some(tx),
            }
        }
        let moved = std::mem::take(&mut self.members[cy]);
        for z in &moved {
            let az = self.point[*z].as_mut().unwrap();
            // f(z) = c_z + s_z (k_off + k_sign t_x)
            let s = az.sign as i64;
            az.offset = az.offset.clone() + T::from_int(s) * k_off.clone();
            az.sign = (s * k_sign as i64) as i8;
            az.comp = cx;
        }
        self.members[cx].extend(moved);
        self.param[cy] = None;
        true
    }

    /// `x` is new; joins `y`'s component via `f(x) = d − f(y)`.
    fn attach(&mut self, x: usize, y: usize, d: &T) -> bool {
        let ay = self.point[y].clone().unwrap();
        self.point[x] = Some(Affine {
            comp: ay.comp,
            sign: -ay.sign,
            offset: d.clone() - ay.offset,
        });
        self.members[ay.comp].push(x);
        true
    }

    /// Necessary conditions for extending to a point of `Δ(X)`: every solved
    /// pair satisfies its inequality, and each unsolved component still has
    /// a feasible parameter interval given the solved points.
    fn feasible(&self, m: &FiniteMetric<T>) -> bool {
        let n = m.len();
        let solved: Vec<(usize, T)> =
            (0..n).filter_map(|x| self.value(x).map(|v| (x, v))).collect();
        for (i, (x, fx)) in solved.iter().enumerate() {
            for (y, fy) in &solved[i..] {
                if fx.clone() + fy.clone() < *m.d(*x, *y) {
                    return false;
                }
            }
        }
        for (comp, members) in self.members.iter().enumerate() {
            if members.is_empty() || self.param[comp].is_some() {
                continue;
            }
            let mut lo: Option<T> = None;
            let mut hi: Option<T> = None;
            let mut bound = |coeff: i64, rhs: T| -> bool {
                // coeff · t ≥ rhs
                match coeff {
                    0 => !rhs.is_positive(),
                    c => {
                        let v = rhs / T::from_int(c);
                        if c > 0 {
                            if lo.as_ref().is_none_or(|l| v > *l) {
                                lo = Some(v);
                            }
                        } else if hi.as_ref().is_none_or(|h| v < *h) {
                            hi = Some(v);
                        }
                        true
                    }
                }
            };
            for (i, &z) in members.iter().enumerate() {
                let az = self.point[z].as_ref().unwrap();
                for &w in &members[i..] {
                    let aw = self.point[w].as_ref().unwrap();
                    let rhs = m.d(z, w).clone() - az.offset.clone() - aw.offset.clone();
                    if !bound((az.sign + aw.sign) as i64, rhs) {
                        return false;
                    }
                }
                for (y, fy) in &solved {
                    let rhs = m.d(z, *y).clone() - fy.clone() - az.offset.clone();
                    if !bound(az.sign as i64, rhs) {
                        return false;
                    }
                }
            }
            if let (Some(l), Some(h)) = (lo, hi) {
                if l > h {
                    return false;
                }
            }
        }
        true
    }
}

fn apply<T: Field>(a: &Affine<T>, t: &T) -> T {
    if a.sign > 0 {
        a.offset.clone() + t.clone()
    } else {
        a.offset.clone() - t.clone()
    }
}

/// Vertices of `E(X)`: extremal functions whose tight equations have full rank.
///
/// Every vertex has, for each point `x`, a tight partner `p(x)` such that the
/// equations `f(x) + f(p(x)) = d(x, p(x))` already have full rank (each
/// component of the partner graph carries an odd cycle or a loop). The search
/// enumerates partner maps with incremental solving and pruning.
pub fn tight_span_vertices<T: Field>(
    m: &FiniteMetric<T>,
    bounds: &Bounds,
) -> Result<Vec<ExtremalFunction<T>>> {
    check_size(m, bounds)?;
    let mut found = BTreeSet::new();
    partner_search(m, 0, PartnerState::new(m.len()), &mut found);
    Ok(found.into_iter().map(|values| ExtremalFunction { values }).collect())
}

fn partner_search<T: Field>(
    m: &FiniteMetric<T>,
    x: usize,
    state: PartnerState<T>,
    found: &mut BTreeSet<Vec<T>>,
) {
    let n = m.len();
    if x == n {
        let values: Option<Vec<T>> = (0..n).map(|z| state.value(z)).collect();
        if let Some(values) = values {
            if delta_violation(m, &values).is_none() {
                found.insert(values);
            }
        }
        return;
    }
    for y in 0..n {
        let mut next = state.clone();
        if next.add(x, y, m.d(x, y)) && next.feasible(m) {
            partner_search(m, x + 1, next, found);
        }
    }
}

/// A cell of the natural polyhedral structure on `E(X)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TightSpanCell {
    /// Pairs `x ≤ y` tight on the relative interior of the cell.
    pub tight_pairs: Vec<(usize, usize)>,
    pub dim: usize,
    /// Indices into [`TightSpan::vertices`] of the vertices of the cell.
    pub vertex_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightSpan<T> {
    pub vertices: Vec<ExtremalFunction<T>>,
    /// Sorted by dimension, then tight pairs.
    pub cells: Vec<TightSpanCell>,
}

/// Rank of the tight-pair equation system.
pub fn pair_rank<T: Field>(n: usize, pairs: &[(usize, usize)]) -> usize {
    linalg::rank(&linalg::pair_system::<T>(n, pairs))
}

fn covers(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    for &(x, y) in pairs {
        seen[x] = true;
        seen[y] = true;
    }
    seen.into_iter().all(|s| s)
}

fn intersect(a: &[(usize, usize)], b: &[(usize, usize)]) -> Vec<(usize, usize)> {
    a.iter().filter(|p| b.binary_search(p).is_ok()).copied().collect()
}

/// All cells of `E(X)` with their dimensions.
///
/// The bounded faces of `Δ(X)` are exactly the intersections of vertex tight
/// sets that still cover every point.
pub fn tight_span_cells<T: Field>(m: &FiniteMetric<T>, bounds: &Bounds) -> Result<TightSpan<T>> {
    let vertices = tight_span_vertices(m, bounds)?;
    let n = m.len();
    let tight: Vec<Vec<(usize, usize)>> =
        vertices.iter().map(|v| tight_pairs(m, v.values())).collect();
    let mut seen: HashSet<Vec<(usize, usize)>> = tight.iter().cloned().collect();
    let mut work: Vec<Vec<(usize, usize)>> = tight.clone();
    while let Some(a) = work.pop() {
        for t in &tight {
            let b = intersect(&a, t);
            if covers(n, &b) && !seen.contains(&b) {
                seen.insert(b.clone());
                work.push(b);
            }
        }
    }
    let mut cells: Vec<TightSpanCell> = seen
        .into_iter()
        .map(|pairs| {
            let dim = n - pair_rank::<T>(n, &pairs);
            let vertex_ids = tight
                .iter()
                .enumerate()
                .filter(|(_, t)| pairs.iter().all(|p| t.binary_search(p).is_ok()))
                .map(|(i, _)| i)
                .collect();
            TightSpanCell { tight_pairs: pairs, dim, vertex_ids }
        })
        .collect();
    cells.sort_by(|a, b| (a.dim, &a.tight_pairs).cmp(&(b.dim, &b.tight_pairs)));
    Ok(TightSpan { vertices, cells })
}

/// Topological dimension of `E(X)`: the largest cell dimension.
pub fn combinatorial_dimension<T: Field>(m: &FiniteMetric<T>, bounds: &Bounds) -> Result<usize> {
    let span = tight_span_cells(m, bounds)?;
    Ok(span.cells.iter().map(|c| c.dim).max().unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DimensionCheck {
    Holds,
    /// `involution[k]` is the partner of `subset[k]`; no other fixed point
    /// free bijection of `subset` reaches its pairing sum.
    Violated { subset: Vec<usize>, involution: Vec<usize> },
}

/// The `2(n+1)`-point criterion for combinatorial dimension at most `n`:
/// for every `Z` with `|Z| = 2(n+1)` and every fixed point free involution
/// `i` of `Z` there must be a fixed point free bijection `j ≠ i` with
/// `Σ d(z, i(z)) ≤ Σ d(z, j(z))`.
///
/// `i` fails exactly when it is the unique maximizer of the sum among all
/// fixed point free bijections of `Z`.
pub fn dim_at_most<T: Scalar>(
    m: &FiniteMetric<T>,
    n: usize,
    bounds: &Bounds,
) -> Result<DimensionCheck> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension bound must be at least 1".into()));
    }
    if m.len() > bounds.tight_span_points {
        return Err(Error::InstanceTooLarge {
            what: "dimension criterion",
            size: m.len(),
            bound: bounds.tight_span_points,
        });
    }
    let k = 2 * (n + 1);
    if m.len() < k {
        return Ok(DimensionCheck::Holds);
    }
    let derangements = derangements(k);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let sums: Vec<T> = derangements
            .iter()
            .map(|j| {
                j.iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (a, &b)| acc + m.d(subset[a], subset[b]).clone())
            })
            .collect();
        let max = sums.iter().max().unwrap();
        let mut winners = sums.iter().enumerate().filter(|(_, s)| *s == max);
        let (first, _) = winners.next().unwrap();
        if winners.next().is_none() && is_involution(&derangements[first]) {
            return Ok(DimensionCheck::Violated {
                subset: subset.clone(),
                involution: derangements[first].iter().map(|&b| subset[b]).collect(),
            });
        }
        if !next_combination(&mut subset, m.len()) {
            return Ok(DimensionCheck::Holds);
        }
    }
}

fn is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(a, &b)| p[b] == a)
}

/// Fixed point free permutations of `0..k`, in lexicographic order.
fn derangements(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let pos = cur.len();
        if pos == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if v != pos && !used[v] {
                used[v] = true;
                cur.push(v);
                rec(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Advances a sorted k-subset of `0..n` to its lexicographic successor.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{graph_distance_matrix, validate_metric};
    use crate::scalar::{ratio, rational, Rational};
    use crate::SimpleGraph;

    fn q(rows: &[&[i64]]) -> FiniteMetric<Rational> {
        validate_metric(rows.iter().map(|r| r.iter().map(|&v| rational(v)).collect()).collect())
            .unwrap()
    }

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x)).collect()
    }

    fn cycle4() -> FiniteMetric<Rational> {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        graph_distance_matrix(&g).unwrap().to_rational()
    }

    #[test]
    fn kuratowski_examples() {
        let m = q(&[&[0, 3], &[3, 0]]);
        assert_eq!(kuratowski(&m, 0).values(), qv(&[0, 3]).as_slice());
        assert_eq!(kuratowski(&q(&[&[0]]), 0).values(), qv(&[0]).as_slice());
        let eq = q(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(kuratowski(&eq, 0).values(), qv(&[0, 1, 1]).as_slice());
    }

    #[test]
    fn classification_examples() {
        let m = q(&[&[0, 2], &[2, 0]]);
        assert_eq!(classify_function(&m, &qv(&[1, 1])).unwrap(), Classification::Extremal);
        assert_eq!(
            classify_function(&m, &qv(&[2, 2])).unwrap(),
            Classification::InDeltaNotExtremal { coordinate: 0, dominated: qv(&[0, 2]) }
        );
        assert_eq!(
            classify_function(&m, &qv(&[0, 1])).unwrap(),
            Classification::NotInDelta { x: 0, y: 1 }
        );
        assert!(classify_function(&m, &qv(&[0])).is_err());
    }

    #[test]
    fn q_step_examples() {
        let m = q(&[&[0, 2], &[2, 0]]);
        let f = DeltaFunction::new(&m, qv(&[2, 2])).unwrap();
        assert_eq!(conjugate(&m, f.values()), qv(&[0, 0]));
        assert_eq!(q_step(&m, &f).values(), qv(&[1, 1]).as_slice());
        let e = kuratowski(&m, 1).as_delta();
        assert_eq!(q_step(&m, &e), e);

        let eq = q(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let f = DeltaFunction::new(&eq, qv(&[1, 1, 1])).unwrap();
        assert_eq!(conjugate(&eq, f.values()), qv(&[0, 0, 0]));
        let half = ratio(1, 2);
        assert_eq!(q_step(&eq, &f).values(), &[half.clone(), half.clone(), half]);
    }

    #[test]
    fn projection_examples() {
        let m = q(&[&[0, 2], &[2, 0]]);
        let f = DeltaFunction::new(&m, qv(&[2, 2])).unwrap();
        match project_to_tight_span(&m, &f, DEFAULT_MAX_ITER) {
            Projection::Exact { f, steps } => {
                assert_eq!(f.values(), qv(&[1, 1]).as_slice());
                assert_eq!(steps, 1);
            }
            other => panic!("{other:?}"),
        }
        let e = kuratowski(&m, 0);
        assert_eq!(
            project_to_tight_span(&m, &e.as_delta(), 5),
            Projection::Exact { f: e, steps: 0 }
        );
    }

    #[test]
    fn projection_reports_gap_when_budget_runs_out() {
        // three points on a line with one long leg converge geometrically
        let m = q(&[&[0, 1, 3], &[1, 0, 2], &[3, 2, 0]]);
        let f = DeltaFunction::new(&m, qv(&[3, 3, 3])).unwrap();
        match project_to_tight_span(&m, &f, 1) {
            Projection::Approximate { last, gap, steps } => {
                assert_eq!(steps, 1);
                let next = q_step(&m, &last);
                for x in 0..3 {
                    let expect = rational(2) * (last.values()[x].clone() - next.values()[x].clone());
                    assert_eq!(gap[x], expect);
                }
            }
            Projection::Exact { .. } => {}
        }
    }

    #[test]
    fn two_point_segment() {
        let m = q(&[&[0, 3], &[3, 0]]);
        let span = tight_span_cells(&m, &Bounds::default()).unwrap();
        let verts: Vec<_> = span.vertices.iter().map(|v| v.values().to_vec()).collect();
        assert_eq!(verts, vec![qv(&[0, 3]), qv(&[3, 0])]);
        let dims: Vec<_> = span.cells.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![0, 0, 1]);
        assert_eq!(span.cells[2].tight_pairs, vec![(0, 1)]);
        assert_eq!(span.cells[2].vertex_ids, vec![0, 1]);
    }

    #[test]
    fn equilateral_tripod() {
        let m = q(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let span = tight_span_cells(&m, &Bounds::default()).unwrap();
        let h = ratio(1, 2);
        let verts: Vec<_> = span.vertices.iter().map(|v| v.values().to_vec()).collect();
        assert_eq!(
            verts,
            vec![qv(&[0, 1, 1]), vec![h.clone(), h.clone(), h], qv(&[1, 0, 1]), qv(&[1, 1, 0])]
        );
        assert_eq!(span.cells.iter().filter(|c| c.dim == 0).count(), 4);
        assert_eq!(span.cells.iter().filter(|c| c.dim == 1).count(), 3);
        assert_eq!(span.cells.len(), 7);
    }

    #[test]
    fn four_cycle_has_a_square() {
        let m = cycle4();
        let span = tight_span_cells(&m, &Bounds::default()).unwrap();
        assert_eq!(span.cells.iter().filter(|c| c.dim == 2).count(), 1);
        assert_eq!(combinatorial_dimension(&m, &Bounds::default()).unwrap(), 2);
        // the cone point lies in the interior of the square
        let cone = qv(&[1, 1, 1, 1]);
        assert_eq!(classify_function(&m, &cone).unwrap(), Classification::Extremal);
        assert_eq!(pair_rank::<Rational>(4, &tight_pairs(&m, &cone)), 2);
    }

    #[test]
    fn dimension_criterion_examples() {
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let star = graph_distance_matrix(&star).unwrap();
        let b = Bounds::default();
        assert_eq!(dim_at_most(&star, 1, &b).unwrap(), DimensionCheck::Holds);
        assert_eq!(combinatorial_dimension(&star.to_rational(), &b).unwrap(), 1);
        let c4 = cycle4();
        assert_eq!(
            dim_at_most(&c4, 1, &b).unwrap(),
            DimensionCheck::Violated { subset: vec![0, 1, 2, 3], involution: vec![2, 3, 0, 1] }
        );
        assert_eq!(dim_at_most(&c4, 2, &b).unwrap(), DimensionCheck::Holds);
    }

    #[test]
    fn single_point_is_a_single_vertex() {
        let m = q(&[&[0]]);
        let span = tight_span_cells(&m, &Bounds::default()).unwrap();
        assert_eq!(span.vertices.len(), 1);
        assert_eq!(span.cells.len(), 1);
        assert_eq!(span.cells[0].dim, 0);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let n = 4;
        let m = validate_metric(
            (0..n).map(|i| (0..n).map(|j| rational(i64::from(i != j))).collect()).collect(),
        )
        .unwrap();
        let b = Bounds { tight_span_points: 3, ..Bounds::default() };
        assert!(matches!(tight_span_vertices(&m, &b), Err(Error::InstanceTooLarge { .. })));
    }

    #[test]
    fn derangement_counts() {
        assert_eq!(derangements(4).len(), 9);
        assert_eq!(derangements(6).len(), 265);
    }
}
