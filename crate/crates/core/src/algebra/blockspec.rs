use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Block sizes `(n₁,…,n_m)` of a multimatrix algebra `⊕ M_{n_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BlockSpec(Vec<usize>);

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BlockSpecError {
    #[error("partition is empty")]
    Empty,
    #[error("block sizes must be at least 1")]
    ZeroBlock,
    #[error("cannot parse partition `{0}`")]
    Parse(String),
}

impl BlockSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self, BlockSpecError> {
        if sizes.is_empty() {
            return Err(BlockSpecError::Empty);
        }
        if sizes.contains(&0) {
            return Err(BlockSpecError::ZeroBlock);
        }
        Ok(BlockSpec(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Size of block `r` (0-based).
    pub fn n(&self, r: usize) -> usize {
        self.0[r]
    }

    /// `N = Σ n_r²`, the dimension of the algebra.
    pub fn big_n(&self) -> usize {
        self.0.iter().map(|n| n * n).sum()
    }

    /// `d = ∏ n_r`.
    pub fn d(&self) -> usize {
        self.0.iter().product()
    }

    /// Offset of block `r` in the matrix-unit basis.
    pub fn offset(&self, r: usize) -> usize {
        self.0[..r].iter().map(|n| n * n).sum()
    }

    /// Basis index of `E^{(r)}_{ij}`.
    pub fn unit_index(&self, r: usize, i: usize, j: usize) -> usize {
        let n = self.0[r];
        self.offset(r) + i * n + j
    }

    /// Inverse of [`Self::unit_index`].
    pub fn unit_of_index(&self, mut idx: usize) -> (usize, usize, usize) {
        for (r, &n) in self.0.iter().enumerate() {
            if idx < n * n {
                return (r, idx / n, idx % n);
            }
            idx -= n * n;
        }
        panic!("basis index out of range")
    }

    pub fn is_abelian(&self) -> bool {
        self.0.iter().all(|&n| n == 1)
    }

    /// Every partition with non-increasing sizes and `N = big_n`.
    pub fn with_big_n(big_n: usize) -> Vec<BlockSpec> {
        fn go(rest: usize, max: usize) -> Vec<Vec<usize>> {
            if rest == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in (1..=max).rev().filter(|p| p * p <= rest) {
                for mut tail in go(rest - p * p, p) {
                    tail.insert(0, p);
                    out.push(tail);
                }
            }
            out
        }
        go(big_n, big_n).into_iter().map(BlockSpec).collect()
    }

    /// Every partition with `1 ≤ N ≤ max`.
    pub fn up_to_big_n(max: usize) -> Vec<BlockSpec> {
        (1..=max).flat_map(Self::with_big_n).collect()
    }
}

impl TryFrom<Vec<usize>> for BlockSpec {
    type Error = BlockSpecError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        BlockSpec::new(v)
    }
}

impl From<BlockSpec> for Vec<usize> {
    fn from(b: BlockSpec) -> Self {
        b.0
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `2,1` or `(2,1)`.
impl FromStr for BlockSpec {
    type Err = BlockSpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let sizes = t
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| BlockSpecError::Parse(s.to_string()))?;
        BlockSpec::new(sizes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_sizes() {
        let b: BlockSpec = "2,1".parse().unwrap();
        assert_eq!((b.m(), b.big_n(), b.d()), (2, 5, 2));
        assert_eq!(b.unit_index(1, 0, 0), 4);
        assert_eq!(b.unit_of_index(3), (0, 1, 1));
        assert_eq!(b.to_string().parse::<BlockSpec>().unwrap(), b);
        assert_eq!("2,0".parse::<BlockSpec>(), Err(BlockSpecError::ZeroBlock));
        assert!("".parse::<BlockSpec>().is_err());
    }

    #[test]
    fn enumeration() {
        let five: Vec<String> = BlockSpec::with_big_n(5)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(five, ["(2,1)", "(1,1,1,1,1)"]);
        let nine = BlockSpec::with_big_n(9);
        assert_eq!(nine.len(), 4);
        assert!(BlockSpec::up_to_big_n(9).iter().all(|b| b.big_n() <= 9));
    }
}
