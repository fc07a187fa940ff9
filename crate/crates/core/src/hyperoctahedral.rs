//! The hyperoctahedral group `B_n` of signed permutations of `[-n, n]`.
//!
//! An element is stored by its window `[π(1) … π(n)]`; the values on negative
//! arguments follow from `π(-i) = -π(i)` and `π(0) = 0`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

/// Largest rank `enumerate` will produce (`|B_6| = 46080`).
pub const MAX_ENUMERATE_RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("window {0:?} is not a signed permutation")]
    InvalidWindow(Vec<i32>),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {0} exceeds the enumeration limit {MAX_ENUMERATE_RANK}")]
    TooLarge(usize),
    #[error("cannot parse signed permutation from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self, PermutationError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(PermutationError::InvalidWindow(window));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// `π(i)` for any `i` in `[-n, n]`.
    pub fn apply(&self, i: i32) -> i32 {
        match i {
            0 => 0,
            i if i > 0 => self.window[i as usize - 1],
            i => -self.window[(-i) as usize - 1],
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermutationError> {
        if self.rank() != other.rank() {
            return Err(PermutationError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(SignedPermutation {
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        SignedPermutation { window }
    }

    /// Type B descents: positions `i ∈ {0, …, n-1}` with `π(i) > π(i+1)`,
    /// where `π(0) = 0`.
    pub fn descents(&self) -> usize {
        std::iter::once(0)
            .chain(self.window.iter().copied())
            .tuple_windows()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// `(-1)^ℓ(π)` for the Coxeter length ℓ, computed as the determinant of
    /// the signed permutation matrix.
    pub fn sign(&self) -> i32 {
        let negatives = self.window.iter().filter(|&&v| v < 0).count();
        let inversions = self
            .window
            .iter()
            .map(|v| v.abs())
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        if (negatives + inversions) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = PermutationError;

    /// Parses window notation such as `[2 -1 -3]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| PermutationError::Parse(s.to_string()))?;
        let window = inner
            .split_whitespace()
            .map(|t| t.parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PermutationError::Parse(s.to_string()))?;
        SignedPermutation::new(window)
    }
}

/// All `2^n n!` elements of `B_n`: absolute values in lexicographic
/// permutation order, then sign patterns in binary order (bit `k` set negates
/// position `k`).
pub fn enumerate(n: usize) -> Result<Vec<SignedPermutation>, PermutationError> {
    if n > MAX_ENUMERATE_RANK {
        return Err(PermutationError::TooLarge(n));
    }
    let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
    for perm in (1..=n as i32).permutations(n) {
        for mask in 0u32..(1 << n) {
            let window = perm
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { window });
        }
    }
    Ok(out)
}

/// Coxeter generators `s_0` (negate the first entry) and `s_i` (swap
/// positions `i`, `i+1`), as right multipliers acting on windows.
pub fn coxeter_generators(n: usize) -> Vec<SignedPermutation> {
    let mut gens = Vec::with_capacity(n);
    if n == 0 {
        return gens;
    }
    let mut s0 = SignedPermutation::identity(n);
    s0.window[0] = -1;
    gens.push(s0);
    for i in 1..n {
        let mut s = SignedPermutation::identity(n);
        s.window.swap(i - 1, i);
        gens.push(s);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_and_inverse() {
        let pi = p("[2 -1 -3]");
        assert_eq!(pi.inverse(), p("[-2 1 -3]"));
        assert!(pi.compose(&p("[-2 1 -3]")).unwrap().is_identity());
        assert_eq!(pi.compose(&SignedPermutation::identity(3)).unwrap(), pi);
        assert_eq!(pi.inverse().inverse(), pi);
        assert!(SignedPermutation::identity(4).inverse().is_identity());
        assert!(matches!(
            pi.compose(&SignedPermutation::identity(2)),
            Err(PermutationError::RankMismatch(3, 2))
        ));
    }

    #[test]
    fn descents_examples() {
        assert_eq!(SignedPermutation::identity(4).descents(), 0);
        assert_eq!(p("[-1]").descents(), 1);
        assert_eq!(p("[2 -1 -3]").descents(), 2);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(SignedPermutation::identity(3).sign(), 1);
        assert_eq!(p("[-1]").sign(), -1);
        assert_eq!(p("[-2 -1]").sign(), -1);
    }

    #[test]
    fn enumerate_sizes() {
        assert_eq!(enumerate(0).unwrap(), vec![SignedPermutation::identity(0)]);
        assert_eq!(enumerate(1).unwrap(), vec![p("[1]"), p("[-1]")]);
        assert_eq!(enumerate(2).unwrap().len(), 8);
        assert_eq!(enumerate(3).unwrap().len(), 48);
        assert!(matches!(enumerate(7), Err(PermutationError::TooLarge(7))));
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
        assert!("2 1".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn display_round_trip() {
        let pi = p("[2 -1 -3]");
        assert_eq!(pi.to_string(), "[2 -1 -3]");
        assert_eq!(pi.to_string().parse::<SignedPermutation>().unwrap(), pi);
    }
}
