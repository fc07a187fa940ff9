//! Exact rational scalars, integer polynomials and sparse rational matrices.
//!
//! Everything downstream (boundary operators, group-algebra action matrices,
//! Hodge projectors) is a `QMatrix`. Rank is computed by fraction-free
//! elimination over arbitrary-precision integers: every row is first scaled
//! to a primitive integer vector and stays primitive after each elimination
//! step, so no rational arithmetic happens inside the elimination loop.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// `coeffs[k]` being the coefficient of `λ^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `λ - a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[-a, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders as `λ^3 - 4λ^2 + 5λ - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sparse rational matrix stored row-wise; each row is sorted by column and
/// holds only nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions
    /// are summed and zero results dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            *acc[r].entry(c).or_insert_with(Rational::zero) += v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        QMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, row)| {
                assert_eq!(row.len(), ncols, "ragged dense matrix");
                row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rat(v)).collect())
            .collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|k| self.data[r][k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(j, v)| (*j, v * k)).collect())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let zero = Rational::zero();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(ra, rb)| {
                let mut out = Vec::with_capacity(ra.len() + rb.len());
                let (mut ia, mut ib) = (0, 0);
                while ia < ra.len() || ib < rb.len() {
                    let ca = ra.get(ia).map_or(usize::MAX, |e| e.0);
                    let cb = rb.get(ib).map_or(usize::MAX, |e| e.0);
                    let (col, v) = if ca == cb {
                        ia += 1;
                        ib += 1;
                        (ca, op(&ra[ia - 1].1, &rb[ib - 1].1))
                    } else if ca < cb {
                        ia += 1;
                        (ca, op(&ra[ia - 1].1, &zero))
                    } else {
                        ib += 1;
                        (cb, op(&zero, &rb[ib - 1].1))
                    };
                    if !v.is_zero() {
                        out.push((col, v));
                    }
                }
                out
            })
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Exact product `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (j, a)| acc + a * &v[*j])
            })
            .collect()
    }

    pub fn trace(&self) -> Result<Rational, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        // Work on whichever orientation has fewer rows.
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let rows: Vec<IntRow> = self
            .data
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| primitive_row(r))
            .collect();
        integer_rank(rows)
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Smallest column index at which `self` and `other` differ, `None` if
    /// they are equal. Shape mismatch reports column 0.
    pub fn first_differing_column(&self, other: &Self) -> Option<usize> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(0);
        }
        let mut cols: Vec<usize> = self
            .data
            .iter()
            .zip(&other.data)
            .filter(|(a, b)| a != b)
            .flat_map(|(a, b)| {
                let mut diff = Vec::new();
                for (j, v) in a {
                    if b.binary_search_by_key(j, |e| e.0).map(|k| &b[k].1) != Ok(v) {
                        diff.push(*j);
                    }
                }
                for (j, v) in b {
                    if a.binary_search_by_key(j, |e| e.0).map(|k| &a[k].1) != Ok(v) {
                        diff.push(*j);
                    }
                }
                diff
            })
            .collect();
        cols.sort_unstable();
        cols.first().copied()
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Scales a rational row to a primitive integer row (content 1, same span).
fn primitive_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let ints: IntRow = row
        .iter()
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(ints)
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let g = row
        .iter()
        .fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

fn entry(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |e| e.0)
        .ok()
        .map(|k| &row[k].1)
}

/// `p * row - a * pivot`, both sorted, zero entries dropped.
fn eliminate(row: &IntRow, pivot: &IntRow, p: &BigInt, a: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (0, 0);
    while i < row.len() || k < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let ck = pivot.get(k).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci == ck {
            i += 1;
            k += 1;
            (ci, p * &row[i - 1].1 - a * &pivot[k - 1].1)
        } else if ci < ck {
            i += 1;
            (ci, p * &row[i - 1].1)
        } else {
            k += 1;
            (ck, -(a * &pivot[k - 1].1))
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    make_primitive(out)
}

/// Fraction-free sparse elimination. Pivot choice: the shortest remaining
/// row, pivoting on its entry of smallest magnitude.
fn integer_rank(mut rows: Vec<IntRow>) -> usize {
    let mut rank = 0;
    rows.retain(|r| !r.is_empty());
    while !rows.is_empty() {
        let (best, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .expect("nonempty");
        let pivot = rows.swap_remove(best);
        let (pcol, pval) = pivot
            .iter()
            .min_by_key(|(_, v)| v.abs().to_u64().unwrap_or(u64::MAX))
            .map(|(c, v)| (*c, v.clone()))
            .expect("pivot row is nonempty");
        rank += 1;
        rows = rows
            .into_iter()
            .filter_map(|row| {
                let reduced = match entry(&row, pcol) {
                    Some(a) => {
                        let g = a.gcd(&pval);
                        eliminate(&row, &pivot, &(&pval / &g), &(a / &g))
                    }
                    None => row,
                };
                (!reduced.is_empty()).then_some(reduced)
            })
            .collect();
    }
    rank
}
