//! Independent oracles shared by the integration tests. Nothing here calls
//! the algorithms it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use typeb_hodge::coloring_complex::Face;
use typeb_hodge::hyperoctahedral::{coxeter_generators, SignedPermutation};
use typeb_hodge::signed_graph::SignedGraph;

/// The ±1/0 point of the cube attached to a sign-consistent subset.
fn vertex_vector(n: usize, subset: &[i32]) -> Vec<i32> {
    let mut v = vec![0; n];
    for &x in subset {
        v[x.unsigned_abs() as usize - 1] = x.signum();
    }
    v
}

/// Whether every point lies on one hyperplane of the graphic arrangement.
fn on_common_hyperplane(g: &SignedGraph, points: &[Vec<i32>]) -> bool {
    let pos = g
        .positive_edges()
        .any(|(i, j)| points.iter().all(|p| p[i - 1] == p[j - 1]));
    let neg = g
        .negative_edges()
        .any(|(i, j)| points.iter().all(|p| p[i - 1] == -p[j - 1]));
    let half = g.half_edges().any(|i| points.iter().all(|p| p[i - 1] == 0));
    pos || neg || half
}

/// Faces of the graphic arrangement restricted to the cube boundary, by
/// grade: every chain `Q_1 ⊂ … ⊂ Q_k` of sign-consistent subsets whose
/// simplex lies inside one hyperplane of the arrangement.
pub fn geometric_faces(g: &SignedGraph) -> Vec<BTreeSet<Face>> {
    let n = g.n();
    let mut grades = vec![BTreeSet::new(); n + 1];
    grades[0].insert(Face::trivial(n));
    let mut stack: Vec<(Vec<Vec<i32>>, Vec<i32>)> = vec![(Vec::new(), Vec::new())];
    while let Some((blocks, used)) = stack.pop() {
        let free: Vec<i32> = (1..=n as i32)
            .filter(|k| !used.contains(k) && !used.contains(&-k))
            .collect();
        // Each free vertex is absent, positive or negative in the next block.
        let choices = 3usize.pow(free.len() as u32);
        for code in 1..choices {
            let mut block = Vec::new();
            let mut c = code;
            for &k in &free {
                match c % 3 {
                    1 => block.push(k),
                    2 => block.push(-k),
                    _ => {}
                }
                c /= 3;
            }
            let mut chain = blocks.clone();
            chain.push(block.clone());
            let mut prefix = Vec::new();
            let points: Vec<Vec<i32>> = chain
                .iter()
                .map(|b| {
                    prefix.extend_from_slice(b);
                    vertex_vector(n, &prefix)
                })
                .collect();
            if on_common_hyperplane(g, &points) {
                let face = Face::from_leading(n, chain.clone()).expect("valid chain");
                grades[chain.len()].insert(face);
            }
            let mut next_used = used.clone();
            next_used.extend_from_slice(&block);
            if chain.len() < n {
                stack.push((chain, next_used));
            }
        }
    }
    grades
}

/// Rank by textbook Gaussian elimination over ℚ on a dense copy.
pub fn dense_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Proper colorings with colors in `-c..=c`, by nested enumeration.
pub fn brute_force_colorings(g: &SignedGraph, c: i64) -> u64 {
    let n = g.n();
    let palette: Vec<i64> = (-c..=c).collect();
    let mut count = 0;
    let total = palette.len().pow(n as u32);
    for code in 0..total {
        let mut phi = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            phi.push(palette[rest % palette.len()]);
            rest /= palette.len();
        }
        let ok = g.positive_edges().all(|(i, j)| phi[i - 1] != phi[j - 1])
            && g.negative_edges().all(|(i, j)| phi[i - 1] != -phi[j - 1])
            && g.half_edges().all(|i| phi[i - 1] != 0);
        if ok {
            count += 1;
        }
    }
    count
}

/// Coxeter length of every element of `B_n` by breadth-first search from
/// the identity over the standard generators.
pub fn coxeter_lengths(n: usize) -> HashMap<SignedPermutation, usize> {
    let gens = coxeter_generators(n);
    let mut dist = HashMap::new();
    let id = SignedPermutation::identity(n);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for s in &gens {
            let q = p.compose(s).expect("same rank");
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `+{1,2}`, `-{1,2}`, `-{2,3}` and a half-edge at 1.
pub fn running_example() -> SignedGraph {
    "vertices 3\nedge + 1 2\nedge - 1 2\nedge - 2 3\nhalfedge 1\n"
        .parse()
        .expect("valid graph")
}
