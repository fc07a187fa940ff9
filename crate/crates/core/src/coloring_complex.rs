//! The coloring complex of a signed graph.
//!
//! Faces are ordered set partitions `P_1 | … | P_{r+1} | P_{r+2}` of
//! `[n] ∪ -[n]`. The blocks before the last never contain both `k` and `-k`
//! (jointly), and the last block is the complement of the others; an
//! `r`-face has `r + 2` blocks and the single-block partition is the empty
//! face at grade `-1`. Facets have `n` blocks and lie on a hyperplane of the
//! graphic sub-arrangement of the type B braid arrangement: either the only
//! doubleton block carries an edge, or some half-edge vertex `k` has both
//! `±k` in the final block. Lower faces come from merging adjacent blocks.
//!
//! `B_{r+1}` acts on the `r`-faces by permuting (and negating) the first
//! `r + 1` blocks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

use crate::group_algebra::AlgebraElement;
use crate::hyperoctahedral::{enumerate, SignedPermutation};
use crate::ratmat::{Rational, QMatrix};
use crate::signed_graph::SignedGraph;

/// Largest vertex count for which complexes are built.
pub const MAX_COMPLEX_VERTICES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("the coloring complex of a graph without edges or half-edges is undefined")]
    NoEdges,
    #[error("{0} vertices exceeds the complex size limit {MAX_COMPLEX_VERTICES}")]
    TooLarge(usize),
    #[error("grade {grade} outside {min}..={max}")]
    GradeOutOfRange { grade: i64, min: i64, max: i64 },
    #[error("element of rank {rank} cannot act on grade {grade}")]
    RankMismatch { rank: usize, grade: i64 },
    #[error("{perm} maps face {face} outside the complex")]
    FaceEscape { face: String, perm: String },
    #[error("invalid face {0:?}")]
    InvalidFace(String),
}

/// Canonical order inside a block: by absolute value, negative first.
fn element_key(x: &i32) -> (u32, i32) {
    (x.unsigned_abs(), *x)
}

fn sort_block(block: &mut [i32]) {
    block.sort_by_key(element_key);
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    blocks: Vec<Vec<i32>>,
}

impl Face {
    /// Validates and canonicalizes an ordered set partition of `±[n]`.
    pub fn new(blocks: Vec<Vec<i32>>) -> Result<Self, ComplexError> {
        let invalid = |b: &Vec<Vec<i32>>| ComplexError::InvalidFace(format!("{b:?}"));
        if blocks.is_empty() || blocks.iter().any(Vec::is_empty) {
            return Err(invalid(&blocks));
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        if total % 2 == 1 {
            return Err(invalid(&blocks));
        }
        let n = total / 2;
        let mut seen = BTreeSet::new();
        for &x in blocks.iter().flatten() {
            if x == 0 || x.unsigned_abs() as usize > n || !seen.insert(x) {
                return Err(invalid(&blocks));
            }
        }
        let head: BTreeSet<i32> = blocks[..blocks.len() - 1].iter().flatten().copied().collect();
        if head.iter().any(|x| head.contains(&-x)) {
            return Err(invalid(&blocks));
        }
        Ok(Self::from_blocks_unchecked(blocks))
    }

    fn from_blocks_unchecked(mut blocks: Vec<Vec<i32>>) -> Self {
        for b in &mut blocks {
            sort_block(b);
        }
        Face { blocks }
    }

    /// The single-block partition of `±[n]`.
    pub fn trivial(n: usize) -> Self {
        let mut all: Vec<i32> = (1..=n as i32).flat_map(|k| [k, -k]).collect();
        sort_block(&mut all);
        Face { blocks: vec![all] }
    }

    /// Builds a face from its leading blocks; the final block is their
    /// complement in `±[n]`.
    pub fn from_leading(n: usize, leading: Vec<Vec<i32>>) -> Result<Self, ComplexError> {
        let used: BTreeSet<i32> = leading.iter().flatten().copied().collect();
        let last: Vec<i32> = (1..=n as i32)
            .flat_map(|k| [k, -k])
            .filter(|x| !used.contains(x))
            .collect();
        let mut blocks = leading;
        blocks.push(last);
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    pub fn grade(&self) -> i64 {
        self.blocks.len() as i64 - 2
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// `d_i`: merge blocks `i` and `i + 1` (1-based).
    pub fn merge(&self, i: usize) -> Face {
        assert!(i >= 1 && i < self.blocks.len(), "merge index {i} out of range");
        let mut blocks = self.blocks.clone();
        let next = blocks.remove(i);
        blocks[i - 1].extend(next);
        sort_block(&mut blocks[i - 1]);
        Face { blocks }
    }

    /// Action of `π ∈ B_{r+1}` on an `r`-face: position `k` receives
    /// `P_{π⁻¹(k)}`, with `P_{-m} = -P_m`.
    pub fn apply_permutation(&self, pi: &SignedPermutation) -> Result<Face, ComplexError> {
        let lead = self.blocks.len() - 1;
        if pi.rank() != lead {
            return Err(ComplexError::RankMismatch {
                rank: pi.rank(),
                grade: self.grade(),
            });
        }
        let inv = pi.inverse();
        let leading: Vec<Vec<i32>> = (1..=lead as i32)
            .map(|k| {
                let m = inv.apply(k);
                let block = &self.blocks[m.unsigned_abs() as usize - 1];
                if m > 0 {
                    block.clone()
                } else {
                    block.iter().map(|x| -x).collect()
                }
            })
            .collect();
        let used: BTreeSet<i32> = leading.iter().flatten().copied().collect();
        let mut blocks = leading;
        blocks.push(
            self.blocks[lead]
                .iter()
                .flat_map(|&x| [x, -x])
                .unique()
                .filter(|x| !used.contains(x))
                .collect(),
        );
        Ok(Self::from_blocks_unchecked(blocks))
    }

    /// Exchanges `v` and `-v` everywhere.
    pub fn switch(&self, v: usize) -> Face {
        let v = v as i32;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| if x.abs() == v { -x } else { x })
                    .collect()
            })
            .collect();
        Self::from_blocks_unchecked(blocks)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.blocks.iter().map(|b| b.iter().join(",")).join("|")
        )
    }
}

impl FromStr for Face {
    type Err = ComplexError;

    /// Parses `1,3|-2,5|6|-1,2,-3,4,-4,-5,-6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|t| t.trim().parse::<i32>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ComplexError::InvalidFace(s.to_string()))?;
        Face::new(blocks)
    }
}

/// Whether a block contains an edge of `g`: some positive edge `{a,b}` with
/// `{a,b}` or `{-a,-b}` in the block, or some negative edge `{a,b}` with
/// `{a,-b}` or `{-a,b}` in the block.
pub fn contains_edge(block: &[i32], g: &SignedGraph) -> bool {
    let has = |x: usize, sx: i32, y: usize, sy: i32| {
        let (x, y) = (x as i32 * sx, y as i32 * sy);
        block.contains(&x) && block.contains(&y)
    };
    g.positive_edges()
        .any(|(a, b)| has(a, 1, b, 1) || has(a, -1, b, -1))
        || g.negative_edges()
            .any(|(a, b)| has(a, 1, b, -1) || has(a, -1, b, 1))
}

fn check_graph(g: &SignedGraph) -> Result<(), ComplexError> {
    if !g.has_edges() {
        return Err(ComplexError::NoEdges);
    }
    if g.n() > MAX_COMPLEX_VERTICES {
        return Err(ComplexError::TooLarge(g.n()));
    }
    Ok(())
}

/// The facets: `n`-block partitions whose leading blocks are either all
/// singletons except one edge-carrying doubleton, or `n - 1` singletons
/// leaving a half-edge vertex `k` with `±k` in the final block.
pub fn facets(g: &SignedGraph) -> Result<BTreeSet<Face>, ComplexError> {
    check_graph(g)?;
    let n = g.n();
    let mut out = BTreeSet::new();
    let halves: BTreeSet<usize> = g.half_edges().collect();
    for order in (1..=n as i32).permutations(n) {
        for mask in 0u32..(1 << n) {
            let seq: Vec<i32> = order
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            for p in 0..n.saturating_sub(1) {
                let pair = [seq[p], seq[p + 1]];
                if !contains_edge(&pair, g) {
                    continue;
                }
                let mut leading: Vec<Vec<i32>> = Vec::with_capacity(n - 1);
                leading.extend(seq[..p].iter().map(|&x| vec![x]));
                leading.push(pair.to_vec());
                leading.extend(seq[p + 2..].iter().map(|&x| vec![x]));
                out.insert(Face::from_leading(n, leading)?);
            }
            let last = seq[n - 1].unsigned_abs() as usize;
            if halves.contains(&last) {
                let leading = seq[..n - 1].iter().map(|&x| vec![x]).collect();
                out.insert(Face::from_leading(n, leading)?);
            }
        }
    }
    Ok(out)
}

/// The graded chain complex of `Δ_G` with a fixed basis order per grade.
#[derive(Debug, Clone)]
pub struct ColoringComplex {
    graph: SignedGraph,
    /// `grades[r + 1]` holds the sorted `r`-faces.
    grades: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl ColoringComplex {
    pub fn new(g: &SignedGraph) -> Result<Self, ComplexError> {
        let top = facets(g)?;
        let n = g.n();
        // n blocks at the top, down to 1 block at grade -1.
        let mut levels: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); n];
        levels[n - 1] = top;
        for blocks in (2..=n).rev() {
            let below: BTreeSet<Face> = levels[blocks - 1]
                .iter()
                .flat_map(|f| (1..blocks).map(move |i| f.merge(i)))
                .collect();
            levels[blocks - 2].extend(below);
        }
        let grades: Vec<Vec<Face>> = levels.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = grades
            .iter()
            .map(|fs| fs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();
        Ok(ColoringComplex {
            graph: g.clone(),
            grades,
            index,
        })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    /// Top grade `n - 2`.
    pub fn top_grade(&self) -> i64 {
        self.graph.n() as i64 - 2
    }

    fn slot(&self, r: i64) -> Result<usize, ComplexError> {
        if r < -1 || r > self.top_grade() {
            return Err(ComplexError::GradeOutOfRange {
                grade: r,
                min: -1,
                max: self.top_grade(),
            });
        }
        Ok((r + 1) as usize)
    }

    pub fn faces(&self, r: i64) -> Result<&[Face], ComplexError> {
        Ok(&self.grades[self.slot(r)?])
    }

    pub fn face_index(&self, r: i64, face: &Face) -> Option<usize> {
        self.slot(r).ok().and_then(|s| self.index[s].get(face).copied())
    }

    pub fn dim(&self, r: i64) -> usize {
        self.slot(r).map_or(0, |s| self.grades[s].len())
    }

    /// `(f_{-1}, f_0, …, f_{n-2})`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    /// Matrix of `∂_r = Σ_{i=1}^{r+1} (-1)^(i-1) d_i` from grade `r` to
    /// grade `r - 1`, for `0 ≤ r ≤ n - 2`.
    pub fn boundary_matrix(&self, r: i64) -> Result<QMatrix, ComplexError> {
        if r < 0 || r > self.top_grade() {
            return Err(ComplexError::GradeOutOfRange {
                grade: r,
                min: 0,
                max: self.top_grade(),
            });
        }
        let src = &self.grades[(r + 1) as usize];
        let dst = &self.index[r as usize];
        let mut triplets = Vec::with_capacity(src.len() * (r as usize + 1));
        for (col, face) in src.iter().enumerate() {
            for i in 1..=(r as usize + 1) {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                let row = dst[&face.merge(i)];
                triplets.push((row, col, Rational::from_integer(sign.into())));
            }
        }
        Ok(QMatrix::from_triplets(dst.len(), src.len(), triplets))
    }

    /// For each face index at grade `r`, the index of its image under `π`.
    pub fn permutation_images(
        &self,
        r: i64,
        pi: &SignedPermutation,
    ) -> Result<Vec<usize>, ComplexError> {
        let s = self.slot(r)?;
        if pi.rank() as i64 != r + 1 {
            return Err(ComplexError::RankMismatch { rank: pi.rank(), grade: r });
        }
        self.grades[s]
            .iter()
            .map(|f| {
                let image = f.apply_permutation(pi)?;
                self.index[s]
                    .get(&image)
                    .copied()
                    .ok_or_else(|| ComplexError::FaceEscape {
                        face: f.to_string(),
                        perm: pi.to_string(),
                    })
            })
            .collect()
    }

    /// Permutation matrix of `π ∈ B_{r+1}` acting on grade `r`.
    pub fn action_matrix(&self, r: i64, pi: &SignedPermutation) -> Result<QMatrix, ComplexError> {
        let images = self.permutation_images(r, pi)?;
        let d = images.len();
        Ok(QMatrix::from_triplets(
            d,
            d,
            images
                .into_iter()
                .enumerate()
                .map(|(col, row)| (row, col, Rational::from_integer(1.into()))),
        ))
    }

    /// Matrix of an element of `ℚ[B_{r+1}]` acting on grade `r`.
    pub fn algebra_action_matrix(&self, r: i64, a: &AlgebraElement) -> Result<QMatrix, ComplexError> {
        let table = ActionTable::new(self, r)?;
        table.matrix(a)
    }
}

/// Precomputed images of every grade-`r` face under every element of
/// `B_{r+1}`, for building many algebra action matrices on one grade.
#[derive(Debug, Clone)]
pub struct ActionTable {
    grade: i64,
    dim: usize,
    perms: HashMap<SignedPermutation, Vec<usize>>,
}

impl ActionTable {
    pub fn new(complex: &ColoringComplex, r: i64) -> Result<Self, ComplexError> {
        let rank = complex.slot(r)?;
        let elements = enumerate(rank).map_err(|_| ComplexError::TooLarge(rank))?;
        let perms = elements
            .into_iter()
            .map(|pi| {
                let images = complex.permutation_images(r, &pi)?;
                Ok((pi, images))
            })
            .collect::<Result<HashMap<_, _>, ComplexError>>()?;
        Ok(ActionTable {
            grade: r,
            dim: complex.dim(r),
            perms,
        })
    }

    pub fn grade(&self) -> i64 {
        self.grade
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, a: &AlgebraElement) -> Result<QMatrix, ComplexError> {
        if a.rank() as i64 != self.grade + 1 {
            return Err(ComplexError::RankMismatch {
                rank: a.rank(),
                grade: self.grade,
            });
        }
        let triplets = a.terms().flat_map(|(pi, c)| {
            self.perms[pi]
                .iter()
                .enumerate()
                .map(move |(col, &row)| (row, col, c.clone()))
        });
        Ok(QMatrix::from_triplets(self.dim, self.dim, triplets))
    }

    /// Trace of the action of `a`: `Σ_π a(π) · #{faces fixed by π}`.
    pub fn trace(&self, a: &AlgebraElement) -> Rational {
        a.terms()
            .map(|(pi, c)| {
                let fixed = self.perms[pi]
                    .iter()
                    .enumerate()
                    .filter(|(i, &j)| *i == j)
                    .count();
                c * Rational::from_integer(fixed.into())
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_graph::{parse_graph, SignedEdge};

    fn face(s: &str) -> Face {
        s.parse().unwrap()
    }

    fn running_example() -> SignedGraph {
        parse_graph("vertices 3\nedge + 1 2\nedge - 1 2\nedge - 2 3\nhalfedge 1").unwrap()
    }

    #[test]
    fn contains_edge_examples() {
        let pos = SignedGraph::single_edge(3, SignedEdge::Positive(1, 2)).unwrap();
        let neg = SignedGraph::single_edge(3, SignedEdge::Negative(2, 3)).unwrap();
        assert!(contains_edge(&[1, 2], &pos));
        assert!(contains_edge(&[2, -3], &neg));
        assert!(contains_edge(&[-1, -2], &pos));
        assert!(contains_edge(&[-2, 3], &neg));
        assert!(!contains_edge(&[1, -2], &pos));
        assert!(!contains_edge(&[2, 3], &neg));
    }

    #[test]
    fn action_example() {
        let tau = face("1,3|-2,5|6|-1,2,-3,4,-4,-5,-6");
        let pi: SignedPermutation = "[2 -1 -3]".parse().unwrap();
        assert_eq!(
            tau.apply_permutation(&pi).unwrap(),
            face("2,-5|1,3|-6|-1,-2,-3,4,-4,5,6")
        );
        assert_eq!(tau.apply_permutation(&SignedPermutation::identity(3)).unwrap(), tau);
        assert!(matches!(
            tau.apply_permutation(&SignedPermutation::identity(2)),
            Err(ComplexError::RankMismatch { .. })
        ));
    }

    #[test]
    fn face_validation() {
        assert!("1|-1,2,-2".parse::<Face>().is_ok());
        assert!("1,-1|2,-2".parse::<Face>().is_err());
        assert!("1|-1|2,-2".parse::<Face>().is_err());
        assert!("1|2,-2".parse::<Face>().is_err());
        assert!("1||-1,2,-2".parse::<Face>().is_err());
        assert_eq!(Face::trivial(2).grade(), -1);
        assert_eq!(face("1,3|-2,5|6|-1,2,-3,4,-4,-5,-6").grade(), 2);
    }

    #[test]
    fn facets_half_edge_on_two() {
        let g = SignedGraph::single_edge(2, SignedEdge::Half(2)).unwrap();
        let f: Vec<Face> = facets(&g).unwrap().into_iter().collect();
        let mut expected = vec![face("1|-1,2,-2"), face("-1|1,2,-2")];
        expected.sort();
        assert_eq!(f, expected);
    }

    #[test]
    fn facets_contain_base_case_chambers() {
        for n in 2..=4usize {
            let g = SignedGraph::single_edge(n, SignedEdge::Half(n)).unwrap();
            let leading = (1..n as i32).map(|k| vec![k]).collect();
            let gamma = Face::from_leading(n, leading).unwrap();
            assert!(facets(&g).unwrap().contains(&gamma));

            let g = SignedGraph::single_edge(n, SignedEdge::Positive(n - 1, n)).unwrap();
            let mut leading: Vec<Vec<i32>> = (1..n as i32 - 1).map(|k| vec![k]).collect();
            leading.push(vec![n as i32, n as i32 - 1]);
            let gamma = Face::from_leading(n, leading).unwrap();
            assert!(facets(&g).unwrap().contains(&gamma));
        }
    }

    #[test]
    fn facets_reject_edgeless() {
        assert!(matches!(facets(&SignedGraph::empty(3)), Err(ComplexError::NoEdges)));
    }

    #[test]
    fn small_complexes() {
        let g = SignedGraph::single_edge(2, SignedEdge::Half(2)).unwrap();
        let cx = ColoringComplex::new(&g).unwrap();
        assert_eq!(cx.f_vector(), vec![1, 2]);
        assert_eq!(cx.boundary_matrix(0).unwrap(), QMatrix::from_i64(&[&[1, 1]]));

        let cx = ColoringComplex::new(&running_example()).unwrap();
        let f = cx.f_vector();
        assert_eq!(f[0], 1);
        assert_eq!(f[1] as i64 - f[2] as i64, -10);
        assert_eq!(1 - f[1] as i64 + f[2] as i64, 11);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let cx = ColoringComplex::new(&running_example()).unwrap();
        let d0 = cx.boundary_matrix(0).unwrap();
        let d1 = cx.boundary_matrix(1).unwrap();
        assert_eq!(d1.cols(), cx.dim(1));
        assert!(d0.matmul(&d1).unwrap().is_zero());
        assert!(cx.boundary_matrix(2).is_err());
    }

    #[test]
    fn closure_contains_every_merge() {
        let cx = ColoringComplex::new(&running_example()).unwrap();
        for r in 0..=cx.top_grade() {
            for f in cx.faces(r).unwrap() {
                for i in 1..=(r as usize + 1) {
                    assert!(cx.face_index(r - 1, &f.merge(i)).is_some());
                }
            }
        }
    }

    #[test]
    fn action_matrices_are_functorial() {
        let cx = ColoringComplex::new(&running_example()).unwrap();
        let group = enumerate(2).unwrap();
        let id = cx.action_matrix(1, &SignedPermutation::identity(2)).unwrap();
        assert_eq!(id, QMatrix::identity(cx.dim(1)));
        for a in &group {
            let ma = cx.action_matrix(1, a).unwrap();
            for i in 0..ma.rows() {
                assert_eq!(ma.row(i).len(), 1);
            }
            for b in &group {
                let mb = cx.action_matrix(1, b).unwrap();
                let mab = cx.action_matrix(1, &a.compose(b).unwrap()).unwrap();
                assert_eq!(ma.matmul(&mb).unwrap(), mab);
            }
        }
    }

    #[test]
    fn switch_is_involutive() {
        let f = face("1,3|-2,5|6|-1,2,-3,4,-4,-5,-6");
        assert_eq!(f.switch(2), face("1,3|2,5|6|-1,-2,-3,4,-4,-5,-6"));
        assert_eq!(f.switch(2).switch(2), f);
    }

    #[test]
    fn display_round_trip() {
        let f = face("2,-5|1,3|-6|-1,-2,-3,4,-4,5,6");
        assert_eq!(f.to_string().parse::<Face>().unwrap(), f);
        assert_eq!(f.to_string(), "2,-5|1,3|-6|-1,-2,-3,-4,4,5,6");
    }
}
