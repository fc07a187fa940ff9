//! Graph corpora: every signed graph on `n ≤ 3` vertices up to relabeling,
//! and seeded pseudo-random graphs.

use itertools::Itertools;
use rand_core::{RngCore, SeedableRng};
use rand_pcg::Pcg64;

use crate::signed_graph::{SignedEdge, SignedGraph};

/// Largest `n` accepted by [`exhaustive`].
pub const MAX_EXHAUSTIVE_VERTICES: usize = 3;

fn relabel(g: &SignedGraph, perm: &[usize]) -> SignedGraph {
    let map = |v: usize| perm[v - 1];
    let edges = g.edges().into_iter().map(|e| match e {
        SignedEdge::Positive(i, j) => SignedEdge::positive(map(i), map(j)),
        SignedEdge::Negative(i, j) => SignedEdge::negative(map(i), map(j)),
        SignedEdge::Half(i) => SignedEdge::Half(map(i)),
    });
    SignedGraph::from_edges(g.n(), edges).expect("relabeling preserves validity")
}

/// Least relabeling of `g` in the derived order.
pub fn canonical_form(g: &SignedGraph) -> SignedGraph {
    (1..=g.n())
        .permutations(g.n())
        .map(|p| relabel(g, &p))
        .min()
        .unwrap_or_else(|| g.clone())
}

/// All graphs on `[n]` with at least one edge, one per isomorphism class,
/// in canonical order. Returns an empty list for `n` outside `1..=3`.
pub fn exhaustive(n: usize) -> Vec<SignedGraph> {
    if n == 0 || n > MAX_EXHAUSTIVE_VERTICES {
        return Vec::new();
    }
    let mut slots: Vec<SignedEdge> = Vec::new();
    for (i, j) in (1..=n).tuple_combinations() {
        slots.push(SignedEdge::positive(i, j));
        slots.push(SignedEdge::negative(i, j));
    }
    slots.extend((1..=n).map(SignedEdge::Half));
    let mut seen = std::collections::BTreeSet::new();
    for mask in 1u32..(1 << slots.len()) {
        let edges = (0..slots.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| slots[b]);
        let g = SignedGraph::from_edges(n, edges).expect("slots are valid edges");
        seen.insert(canonical_form(&g));
    }
    seen.into_iter().collect()
}

/// The exhaustive corpus for every `n` in `1..=3`.
pub fn exhaustive_up_to_three() -> Vec<SignedGraph> {
    (1..=MAX_EXHAUSTIVE_VERTICES).flat_map(exhaustive).collect()
}

/// Deterministic random graphs from a PCG stream seeded with `seed`.
///
/// For each pair `i < j` in lexicographic order one draw `d % 8` picks
/// absent (0-2), positive (3-4), negative (5-6) or both (7). Then each
/// vertex gets a half-edge when its draw satisfies `d % 4 == 0`. Edgeless
/// draws are discarded and the stream continues.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<SignedGraph> {
    let mut rng = Pcg64::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if n == 0 {
        return out;
    }
    while out.len() < count {
        let mut edges = Vec::new();
        for (i, j) in (1..=n).tuple_combinations() {
            match rng.next_u64() % 8 {
                3 | 4 => edges.push(SignedEdge::positive(i, j)),
                5 | 6 => edges.push(SignedEdge::negative(i, j)),
                7 => {
                    edges.push(SignedEdge::positive(i, j));
                    edges.push(SignedEdge::negative(i, j));
                }
                _ => {}
            }
        }
        for v in 1..=n {
            if rng.next_u64() % 4 == 0 {
                edges.push(SignedEdge::Half(v));
            }
        }
        let g = SignedGraph::from_edges(n, edges).expect("generated edges are valid");
        if g.has_edges() {
            out.push(g);
        }
    }
    out
}
