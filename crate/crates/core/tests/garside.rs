//! Braid normal forms against the unreduced Burau representation, which is
//! faithful on three strands.

use std::collections::{BTreeMap, HashMap, HashSet};

use helly_lab::constructions::garside::{garside_window, s_inverse_s, Braid};
use helly_lab::constructions::{garside_b3_ball, lattice_to_graph};
use helly_lab::Bounds;
use proptest::prelude::*;

/// Laurent polynomial in `t`: exponent -> nonzero coefficient.
type Laurent = BTreeMap<i32, i64>;
type Matrix = [[Laurent; 3]; 3];

fn poly(terms: &[(i32, i64)]) -> Laurent {
    let mut p = Laurent::new();
    for &(e, c) in terms {
        *p.entry(e).or_insert(0) += c;
    }
    p.retain(|_, c| *c != 0);
    p
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out: Matrix = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = Laurent::new();
            for k in 0..3 {
                for (ea, ca) in &a[i][k] {
                    for (eb, cb) in &b[k][j] {
                        *acc.entry(ea + eb).or_insert(0) += ca * cb;
                    }
                }
            }
            acc.retain(|_, c| *c != 0);
            out[i][j] = acc;
        }
    }
    out
}

fn identity() -> Matrix {
    let mut m: Matrix = Default::default();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = poly(&[(0, 1)]);
    }
    m
}

/// Matrix of `σᵢ^{±1}` for a signed generator index.
fn generator(g: i8) -> Matrix {
    let one = poly(&[(0, 1)]);
    let mut m: Matrix = Default::default();
    let i = (g.unsigned_abs() - 1) as usize;
    let k = if i == 0 { 2 } else { 0 }; // the untouched strand
    m[k][k] = one.clone();
    let (a, b) = (i, i + 1);
    if g > 0 {
        m[a][a] = poly(&[(0, 1), (1, -1)]);
        m[a][b] = poly(&[(1, 1)]);
        m[b][a] = one;
    } else {
        m[a][b] = one;
        m[b][a] = poly(&[(-1, 1)]);
        m[b][b] = poly(&[(0, 1), (-1, -1)]);
    }
    m
}

fn burau(word: &[i8]) -> Matrix {
    word.iter().fold(identity(), |acc, &g| mat_mul(&acc, &generator(g)))
}

fn from_word(word: &[i8]) -> Braid {
    word.iter().fold(Braid::identity(), |acc, &g| {
        if g > 0 {
            acc.mul(&Braid::generator(g as usize))
        } else {
            acc.mul(&Braid::generator((-g) as usize).inverse())
        }
    })
}

fn signed_gen() -> impl Strategy<Value = i8> {
    prop_oneof![Just(1i8), Just(2), Just(-1), Just(-2)]
}

#[test]
fn generator_matrices_satisfy_the_braid_relation() {
    assert_eq!(burau(&[1, 2, 1]), burau(&[2, 1, 2]));
    assert_eq!(burau(&[1, -1]), identity());
    assert_eq!(burau(&[-2, 2]), identity());
    assert_ne!(burau(&[1, 1]), identity());
}

proptest! {
    #[test]
    fn normal_form_preserves_the_element(w in prop::collection::vec(signed_gen(), 0..14)) {
        let b = from_word(&w);
        prop_assert_eq!(burau(&b.word()), burau(&w));
        prop_assert_eq!(b.mul(&b.inverse()), Braid::identity());
        prop_assert!(b.inf() <= b.sup());
    }

    #[test]
    fn multiplication_is_concatenation(
        u in prop::collection::vec(signed_gen(), 0..8),
        v in prop::collection::vec(signed_gen(), 0..8),
    ) {
        let mut uv = u.clone();
        uv.extend(&v);
        prop_assert_eq!(from_word(&u).mul(&from_word(&v)), from_word(&uv));
    }
}

#[test]
fn normal_forms_separate_exactly_the_distinct_braids() {
    // all words of length ≤ 5
    let mut words: Vec<Vec<i8>> = vec![Vec::new()];
    let mut frontier = words.clone();
    for _ in 0..5 {
        frontier = frontier
            .iter()
            .flat_map(|w| [1i8, 2, -1, -2].map(|g| {
                let mut x = w.clone();
                x.push(g);
                x
            }))
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let mut by_matrix: HashMap<String, Braid> = HashMap::new();
    let mut by_form: HashMap<Braid, String> = HashMap::new();
    for w in &words {
        let key = format!("{:?}", burau(w));
        let nf = from_word(w);
        assert_eq!(by_matrix.entry(key.clone()).or_insert_with(|| nf.clone()), &nf, "word {w:?}");
        assert_eq!(by_form.entry(nf).or_insert_with(|| key.clone()), &key, "word {w:?}");
    }
}

fn simple_words() -> Vec<Vec<i8>> {
    vec![vec![], vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]]
}

fn inverse_word(w: &[i8]) -> Vec<i8> {
    w.iter().rev().map(|g| -g).collect()
}

#[test]
fn s_inverse_s_matches_the_matrix_count() {
    let mut mats = HashSet::new();
    for s in simple_words() {
        for t in simple_words() {
            let mut w = inverse_word(&s);
            w.extend(&t);
            let m = burau(&w);
            if m != identity() {
                mats.insert(format!("{m:?}"));
            }
        }
    }
    let gens = s_inverse_s();
    assert_eq!(gens.len(), mats.len());
    for g in &gens {
        assert!(mats.contains(&format!("{:?}", burau(&g.word()))));
    }
}

#[test]
fn ball_edges_are_generator_steps() {
    let ball = garside_b3_ball(2, &Bounds::default()).unwrap();
    let gens: HashSet<String> = s_inverse_s().iter().map(|g| format!("{:?}", burau(&g.word()))).collect();
    let n = ball.graph.vertex_count();
    assert_eq!(ball.depth[0], 0);
    assert_eq!(ball.graph.degree(0), gens.len());
    for u in 0..n {
        let ui = inverse_word(&ball.elements[u].word());
        for v in u + 1..n {
            let mut w = ui.clone();
            w.extend(ball.elements[v].word());
            let step = gens.contains(&format!("{:?}", burau(&w)));
            assert_eq!(ball.graph.has_edge(u, v), step, "{} {}", ball.labels[u], ball.labels[v]);
        }
    }
    let bfs = ball.graph.bfs(0);
    for v in 0..n {
        assert_eq!(bfs[v], Some(ball.depth[v]));
    }
}

#[test]
fn window_graph_is_the_cayley_graph() {
    let (la, elements) = garside_window(2).unwrap();
    let lg = lattice_to_graph(&la, &[], &Bounds::default()).unwrap();
    let gens: HashSet<Braid> = s_inverse_s().into_iter().collect();
    for &x in &lg.interior {
        for y in 0..elements.len() {
            if x == y {
                continue;
            }
            let step = elements[x].inverse().mul(&elements[y]);
            assert_eq!(lg.graph.has_edge(x, y), gens.contains(&step), "{} {}", elements[x], elements[y]);
        }
    }
    assert!(lg.distance_mismatches.is_empty());
    assert!(lg.interior_helly.helly);
}
