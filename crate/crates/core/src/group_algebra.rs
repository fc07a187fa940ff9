//! The rational group algebra `ℚ[B_n]` and the type B Eulerian family.
//!
//! Three families of elements live here, all indexed by `0 ≤ j ≤ n`:
//!
//! * `l̃_n^(j) = (-1)^(j-1) Σ_{des π = j} sgn(π) π`
//! * `λ̃_n^(j) = Σ_{i=0}^{j} (-1)^i C(n+i, i) l̃_n^(j-i)`
//! * `ρ̃_n^(j)`, the coefficient of `x^j` in
//!   `ρ̃_n(x) = Σ_π [Π_{k=1}^{n} (x - 2 des π + 2k - 1) / (2^n n!)] sgn(π) π`.
//!
//! The `ρ̃_n^(j)` are orthogonal idempotents summing to the identity, and
//! `λ̃_n^(j) = (-1)^(j-1) ρ̃_n(2j + 1)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::hyperoctahedral::{enumerate, PermutationError, SignedPermutation};
use crate::ratmat::{rat, QMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index j = {j} outside 0..={n}")]
    IndexOutOfRange { n: usize, j: usize },
    #[error(transparent)]
    Permutation(#[from] PermutationError),
}

/// Finitely supported rational combination of elements of `B_n`. Zero
/// coefficients are never stored, so structural equality is algebra equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    coeffs: BTreeMap<SignedPermutation, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(SignedPermutation::identity(n))
    }

    pub fn basis(pi: SignedPermutation) -> Self {
        let n = pi.rank();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(pi, Rational::one());
        AlgebraElement { n, coeffs }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (SignedPermutation, Rational)>,
    {
        let mut out = Self::zero(n);
        for (pi, c) in terms {
            if pi.rank() != n {
                return Err(AlgebraError::RankMismatch(n, pi.rank()));
            }
            out.add_term(pi, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, pi: SignedPermutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(pi) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, pi: &SignedPermutation) -> Rational {
        self.coeffs.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &Rational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        AlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::RankMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&rat(-1)))
    }

    /// Convolution product `Σ a(g) b(h) (g ∘ h)`.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::RankMismatch(self.n, other.n));
        }
        let mut acc: BTreeMap<SignedPermutation, Rational> = BTreeMap::new();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                let gh = g.compose(h)?;
                *acc.entry(gh).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(AlgebraElement {
            n: self.n,
            coeffs: acc,
        })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){p}")?;
        }
        Ok(())
    }
}

fn check_index(n: usize, j: usize) -> Result<(), AlgebraError> {
    if j > n {
        Err(AlgebraError::IndexOutOfRange { n, j })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn minus_one_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `l̃_n^(j)` for any `j ≥ 0`; zero when no element has `j` descents.
pub(crate) fn l_element_any(n: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
    let factor = minus_one_pow(j as i64 - 1);
    let terms = enumerate(n)?
        .into_iter()
        .filter(|pi| pi.descents() == j)
        .map(|pi| {
            let c = &factor * rat(pi.sign() as i64);
            (pi, c)
        });
    AlgebraElement::from_terms(n, terms)
}

/// `λ̃_n^(j)` for any `j ≥ 0`, by the alternating binomial sum.
pub(crate) fn lambda_element_any(n: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
    let mut out = AlgebraElement::zero(n);
    for i in 0..=j {
        let c = minus_one_pow(i as i64) * Rational::from_integer(binomial(n + i, i));
        out = out.add(&l_element_any(n, j - i)?.scale(&c))?;
    }
    Ok(out)
}

pub fn l_element(n: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
    check_index(n, j)?;
    l_element_any(n, j)
}

pub fn lambda_element(n: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
    check_index(n, j)?;
    lambda_element_any(n, j)
}

/// Coefficients (in `x`) of `Π_{k=1}^{n} (x - 2d + 2k - 1) / (2^n n!)`.
fn descent_polynomial(n: usize, d: usize) -> Vec<Rational> {
    let mut poly = vec![rat(1)];
    for k in 1..=n {
        let shift = rat(2 * k as i64 - 1 - 2 * d as i64);
        let mut next = vec![rat(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * &shift;
        }
        poly = next;
    }
    let norm: BigInt = (1..=n).fold(BigInt::one(), |acc, k| acc * 2 * k);
    let norm = Rational::from_integer(norm);
    poly.into_iter().map(|c| c / &norm).collect()
}

/// All of `ρ̃_n^(0), …, ρ̃_n^(n)`. The product depends on π only through
/// `des π`, so one expansion per descent value suffices.
pub fn eulerian_idempotents(n: usize) -> Result<Vec<AlgebraElement>, AlgebraError> {
    let polys: Vec<Vec<Rational>> = (0..=n).map(|d| descent_polynomial(n, d)).collect();
    let elements = enumerate(n)?;
    (0..=n)
        .map(|j| {
            let terms = elements.iter().map(|pi| {
                let c = &polys[pi.descents()][j] * rat(pi.sign() as i64);
                (pi.clone(), c)
            });
            AlgebraElement::from_terms(n, terms)
        })
        .collect()
}

pub fn eulerian_idempotent(n: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
    check_index(n, j)?;
    Ok(eulerian_idempotents(n)?.swap_remove(j))
}

/// `ρ̃_n(x)` evaluated at a rational point, directly from the product form.
pub fn eulerian_generating_element(n: usize, x: &Rational) -> Result<AlgebraElement, AlgebraError> {
    let norm: BigInt = (1..=n).fold(BigInt::one(), |acc, k| acc * 2 * k);
    let norm = Rational::from_integer(norm);
    let terms = enumerate(n)?.into_iter().map(|pi| {
        let d = pi.descents() as i64;
        let prod = (1..=n as i64).fold(rat(1), |acc, k| acc * (x + rat(2 * k - 1 - 2 * d)));
        let c = prod / &norm * rat(pi.sign() as i64);
        (pi, c)
    });
    AlgebraElement::from_terms(n, terms)
}

/// Sign `s` with `λ̃_n^(j) = s · (-1)^(j-1) ρ̃_n(2j+1)` as established for
/// ranks 1 and 2; `+1` means the relation holds as `(-1)^(j-1)`.
pub const LAMBDA_RHO_SIGN: i64 = 1;

/// Outcome of one exact identity in `ℚ[B_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// Orthogonal idempotency `ρ̃^(j) ρ̃^(k) = δ_jk ρ̃^(j)`, the partition of the
/// identity, the `λ̃`/`ρ̃` evaluation relation with [`LAMBDA_RHO_SIGN`], and
/// invertibility of the change of basis `V_jk = (2j+1)^k`.
pub fn verify_identities(n: usize) -> Result<Vec<IdentityCheck>, AlgebraError> {
    let rho = eulerian_idempotents(n)?;
    let mut out = Vec::new();
    let mut push = |name: String, holds: bool| out.push(IdentityCheck { name, holds });
    for (j, a) in rho.iter().enumerate() {
        for (k, b) in rho.iter().enumerate() {
            let prod = a.multiply(b)?;
            let expected = if j == k { a.clone() } else { AlgebraElement::zero(n) };
            push(format!("orthogonal_idempotent[n={n},j={j},k={k}]"), prod == expected);
        }
    }
    let total = rho
        .iter()
        .try_fold(AlgebraElement::zero(n), |acc, r| acc.add(r))?;
    push(format!("partition_of_identity[n={n}]"), total == AlgebraElement::identity(n));

    let mut vandermonde = Vec::new();
    for j in 0..=n {
        let node = rat(2 * j as i64 + 1);
        let sign = rat(LAMBDA_RHO_SIGN) * minus_one_pow(j as i64 - 1);
        let lam = lambda_element(n, j)?;
        let direct = eulerian_generating_element(n, &node)?.scale(&sign);
        let mut power = rat(1);
        let mut row = Vec::new();
        let mut combined = AlgebraElement::zero(n);
        for r in &rho {
            combined = combined.add(&r.scale(&(&sign * &power)))?;
            row.push(power.clone());
            power *= &node;
        }
        vandermonde.push(row);
        push(format!("lambda_rho_relation[n={n},j={j}]"), lam == direct && lam == combined);
    }
    push(
        format!("vandermonde_invertible[n={n}]"),
        QMatrix::from_dense(&vandermonde).rank() == n + 1,
    );
    Ok(out)
}
