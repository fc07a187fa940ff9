//! Signed graphs on `[n]`: positive edges, negative edges and half-edges,
//! with switching, deletion, contraction and chromatic polynomials.
//!
//! A proper `c`-coloring is a map `φ: [n] → {-c, …, c}` with `φ(i) ≠ φ(j)`
//! across positive edges, `φ(i) ≠ -φ(j)` across negative edges and
//! `φ(i) ≠ 0` at half-edge vertices. The number of proper `c`-colorings is
//! `χ_G(2c + 1)` for a monic integer polynomial `χ_G` of degree `n`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratmat::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is not present")]
    AbsentEdge(SignedEdge),
    #[error("cannot contract negative edge {0}; switch at an endpoint first")]
    NegativeContraction(SignedEdge),
    #[error("interpolated chromatic polynomial has non-integer coefficient {0}")]
    NonIntegerInterpolation(String),
    #[error("chromatic coefficient c_{index} = {value} is negative")]
    NegativeCoefficient { index: usize, value: String },
}

/// One element of the edge multiset. Pairs are stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SignedEdge {
    Positive(usize, usize),
    Negative(usize, usize),
    Half(usize),
}

impl SignedEdge {
    pub fn positive(i: usize, j: usize) -> Self {
        SignedEdge::Positive(i.min(j), i.max(j))
    }

    pub fn negative(i: usize, j: usize) -> Self {
        SignedEdge::Negative(i.min(j), i.max(j))
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedEdge::Positive(i, j) => write!(f, "+{{{i},{j}}}"),
            SignedEdge::Negative(i, j) => write!(f, "-{{{i},{j}}}"),
            SignedEdge::Half(i) => write!(f, "{{{i}}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedGraph {
    n: usize,
    pos: BTreeSet<(usize, usize)>,
    neg: BTreeSet<(usize, usize)>,
    half: BTreeSet<usize>,
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl SignedGraph {
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            pos: BTreeSet::new(),
            neg: BTreeSet::new(),
            half: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge list. Repeated half-edges collapse; a
    /// repeated pair of the same sign or a loop is rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = SignedEdge>,
    {
        let mut g = Self::empty(n);
        for e in edges {
            g.insert(e).map_err(|message| GraphError::Parse { line: 0, message })?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), String> {
        if v == 0 || v > self.n {
            Err(format!("vertex {v} outside 1..={}", self.n))
        } else {
            Ok(())
        }
    }

    fn insert(&mut self, e: SignedEdge) -> Result<(), String> {
        match e {
            SignedEdge::Positive(i, j) | SignedEdge::Negative(i, j) => {
                self.check_vertex(i)?;
                self.check_vertex(j)?;
                if i == j {
                    return Err(format!("loop edge at vertex {i}"));
                }
                let set = if matches!(e, SignedEdge::Positive(..)) {
                    &mut self.pos
                } else {
                    &mut self.neg
                };
                if !set.insert(ordered(i, j)) {
                    return Err(format!("duplicate edge {e}"));
                }
            }
            SignedEdge::Half(i) => {
                self.check_vertex(i)?;
                self.half.insert(i);
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pos.iter().copied()
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neg.iter().copied()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.half.iter().copied()
    }

    pub fn edges(&self) -> Vec<SignedEdge> {
        let mut out: Vec<SignedEdge> = self
            .pos
            .iter()
            .map(|&(i, j)| SignedEdge::Positive(i, j))
            .collect();
        out.extend(self.neg.iter().map(|&(i, j)| SignedEdge::Negative(i, j)));
        out.extend(self.half.iter().map(|&i| SignedEdge::Half(i)));
        out
    }

    pub fn edge_count(&self) -> usize {
        self.pos.len() + self.neg.len() + self.half.len()
    }

    pub fn has_edges(&self) -> bool {
        self.edge_count() > 0
    }

    pub fn contains(&self, e: SignedEdge) -> bool {
        match e {
            SignedEdge::Positive(i, j) => self.pos.contains(&ordered(i, j)),
            SignedEdge::Negative(i, j) => self.neg.contains(&ordered(i, j)),
            SignedEdge::Half(i) => self.half.contains(&i),
        }
    }

    /// The graph on the same vertex set with `e` as its only edge.
    pub fn single_edge(n: usize, e: SignedEdge) -> Result<Self, GraphError> {
        Self::from_edges(n, [e])
    }

    /// Negates the sign of every edge incident to `v`.
    pub fn switch_at(&self, v: usize) -> Result<Self, GraphError> {
        if v == 0 || v > self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let incident = |e: &(usize, usize)| e.0 == v || e.1 == v;
        let mut pos: BTreeSet<_> = self.pos.iter().filter(|e| !incident(e)).copied().collect();
        let mut neg: BTreeSet<_> = self.neg.iter().filter(|e| !incident(e)).copied().collect();
        pos.extend(self.neg.iter().filter(|e| incident(e)));
        neg.extend(self.pos.iter().filter(|e| incident(e)));
        Ok(SignedGraph {
            n: self.n,
            pos,
            neg,
            half: self.half.clone(),
        })
    }

    pub fn delete_edge(&self, e: SignedEdge) -> Result<Self, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::AbsentEdge(e));
        }
        let mut g = self.clone();
        match e {
            SignedEdge::Positive(i, j) => g.pos.remove(&ordered(i, j)),
            SignedEdge::Negative(i, j) => g.neg.remove(&ordered(i, j)),
            SignedEdge::Half(i) => g.half.remove(&i),
        };
        Ok(g)
    }

    /// Contracts a positive edge (merging the larger endpoint into the
    /// smaller one) or a half-edge (removing its vertex). Vertices above the
    /// removed label shift down by one.
    pub fn contract_edge(&self, e: SignedEdge) -> Result<Self, GraphError> {
        if !self.contains(e) {
            return Err(GraphError::AbsentEdge(e));
        }
        match e {
            SignedEdge::Negative(..) => Err(GraphError::NegativeContraction(e)),
            SignedEdge::Positive(a, b) => {
                let (i, j) = ordered(a, b);
                let relabel = |v: usize| {
                    let v = if v == j { i } else { v };
                    if v > j {
                        v - 1
                    } else {
                        v
                    }
                };
                let mut g = Self::empty(self.n - 1);
                for &(x, y) in &self.pos {
                    if (x, y) != (i, j) {
                        g.pos.insert(ordered(relabel(x), relabel(y)));
                    }
                }
                for &(x, y) in &self.neg {
                    if (x, y) == (i, j) {
                        g.half.insert(relabel(i));
                    } else {
                        g.neg.insert(ordered(relabel(x), relabel(y)));
                    }
                }
                g.half.extend(self.half.iter().map(|&v| relabel(v)));
                Ok(g)
            }
            SignedEdge::Half(i) => {
                let relabel = |v: usize| if v > i { v - 1 } else { v };
                let mut g = Self::empty(self.n - 1);
                for &(x, y) in self.pos.iter().chain(&self.neg) {
                    if x == i || y == i {
                        let other = if x == i { y } else { x };
                        g.half.insert(relabel(other));
                    }
                }
                g.pos.extend(
                    self.pos
                        .iter()
                        .filter(|&&(x, y)| x != i && y != i)
                        .map(|&(x, y)| (relabel(x), relabel(y))),
                );
                g.neg.extend(
                    self.neg
                        .iter()
                        .filter(|&&(x, y)| x != i && y != i)
                        .map(|&(x, y)| (relabel(x), relabel(y))),
                );
                g.half
                    .extend(self.half.iter().filter(|&&v| v != i).map(|&v| relabel(v)));
                Ok(g)
            }
        }
    }

    /// Whether `φ` (indexed from vertex 1 at position 0) is proper.
    pub fn is_proper(&self, phi: &[i64]) -> bool {
        self.pos.iter().all(|&(i, j)| phi[i - 1] != phi[j - 1])
            && self.neg.iter().all(|&(i, j)| phi[i - 1] != -phi[j - 1])
            && self.half.iter().all(|&i| phi[i - 1] != 0)
    }

    /// Number of proper `c`-colorings, by exhaustive enumeration of all
    /// `(2c+1)^n` maps.
    pub fn count_proper_colorings(&self, c: u32) -> u64 {
        let c = c as i64;
        let mut phi = vec![-c; self.n];
        let mut count = 0;
        loop {
            if self.is_proper(&phi) {
                count += 1;
            }
            // Odometer step.
            let mut k = 0;
            loop {
                if k == self.n {
                    return count;
                }
                if phi[k] < c {
                    phi[k] += 1;
                    break;
                }
                phi[k] = -c;
                k += 1;
            }
        }
    }

    /// `χ_G` by deletion-contraction on positive edges.
    pub fn chromatic_polynomial(&self) -> IntPolynomial {
        let mut memo = HashMap::new();
        chromatic_rec(self, &mut memo)
    }

    /// `χ_G` by Lagrange interpolation through the brute-force counts at
    /// `λ = 2c + 1`, `c = 0..=n`.
    pub fn chromatic_by_interpolation(&self) -> Result<IntPolynomial, GraphError> {
        let points: Vec<(BigRational, BigRational)> = (0..=self.n as u32)
            .map(|c| {
                (
                    BigRational::from_integer(BigInt::from(2 * c + 1)),
                    BigRational::from_integer(BigInt::from(self.count_proper_colorings(c))),
                )
            })
            .collect();
        let coeffs = lagrange(&points);
        let ints = coeffs
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(GraphError::NonIntegerInterpolation(c.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(ints))
    }

    /// `c_0, …, c_{n-1}` with `χ_G(λ) = λ^n + Σ_j (-1)^(n-j) c_j λ^j`.
    pub fn chromatic_coefficients(&self) -> Result<Vec<BigInt>, GraphError> {
        coefficients_from_polynomial(self.n, &self.chromatic_polynomial())
    }
}

/// Signed coefficients of a degree-`n` chromatic polynomial.
pub fn coefficients_from_polynomial(
    n: usize,
    chi: &IntPolynomial,
) -> Result<Vec<BigInt>, GraphError> {
    (0..n)
        .map(|j| {
            let raw = chi.coeff(j);
            let c = if (n - j).is_multiple_of(2) { raw } else { -raw };
            if c.is_negative() {
                Err(GraphError::NegativeCoefficient {
                    index: j,
                    value: c.to_string(),
                })
            } else {
                Ok(c)
            }
        })
        .collect()
}

fn chromatic_rec(g: &SignedGraph, memo: &mut HashMap<SignedGraph, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let result = if let Some(&(i, j)) = g.pos.iter().next() {
        let e = SignedEdge::Positive(i, j);
        let deleted = g.delete_edge(e).expect("edge present");
        let contracted = g.contract_edge(e).expect("positive edge");
        chromatic_rec(&deleted, memo).sub(&chromatic_rec(&contracted, memo))
    } else if let Some(&(i, _)) = g.neg.iter().next() {
        let switched = g.switch_at(i).expect("endpoint in range");
        chromatic_rec(&switched, memo)
    } else {
        let h = g.half.len();
        IntPolynomial::monomial(g.n - h).mul(&IntPolynomial::linear(1).pow(h))
    };
    memo.insert(g.clone(), result.clone());
    result
}

/// Coefficients of the unique polynomial of degree `< points.len()` through
/// the given points.
fn lagrange(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let m = points.len();
    let mut out = vec![BigRational::zero(); m];
    for (k, (xk, yk)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (i, (xi, _)) in points.iter().enumerate() {
            if i == k {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * xi;
            }
            basis = next;
            denom *= xk - xi;
        }
        let scale = yk / denom;
        for (d, c) in basis.iter().enumerate() {
            out[d] += c * &scale;
        }
    }
    out
}

impl fmt::Display for SignedGraph {
    /// The line-oriented graph file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.n)?;
        for (i, j) in &self.pos {
            writeln!(f, "edge + {i} {j}")?;
        }
        for (i, j) in &self.neg {
            writeln!(f, "edge - {i} {j}")?;
        }
        for i in &self.half {
            writeln!(f, "halfedge {i}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Parses the graph file format: a `vertices <n>` line, then any number of
/// `edge + i j`, `edge - i j` and `halfedge i` lines. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<SignedGraph, GraphError> {
    let mut graph: Option<SignedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse { line, message };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(format!("expected a vertex number, found {t:?}")))
        };
        match (graph.as_mut(), tokens.as_slice()) {
            (None, ["vertices", n]) => graph = Some(SignedGraph::empty(num(n)?)),
            (None, _) => return Err(err("expected `vertices <n>` first".into())),
            (Some(_), ["vertices", ..]) => return Err(err("repeated `vertices` line".into())),
            (Some(g), ["edge", sign, i, j]) => {
                let (i, j) = (num(i)?, num(j)?);
                let e = match *sign {
                    "+" => SignedEdge::positive(i, j),
                    "-" => SignedEdge::negative(i, j),
                    other => return Err(err(format!("edge sign must be + or -, found {other:?}"))),
                };
                g.insert(e).map_err(err)?;
            }
            (Some(g), ["halfedge", i]) => g.insert(SignedEdge::Half(num(i)?)).map_err(err)?,
            (Some(_), _) => return Err(err(format!("unrecognized line {content:?}"))),
        }
    }
    graph.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `vertices <n>` line".into(),
    })
}
