//! Multi-indices and multipartite partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial as int_binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::Error;

/// Exponent tuple v ∈ ℕ₀^d. Ordering is lexicographic on the entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    /// Panics when `parts` is empty; a multi-index has dimension at least one.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "multi-index needs dimension >= 1");
        MultiIndex(parts)
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    /// Unit vector e_i.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut parts = vec![0; dim];
        parts[i] = 1;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// |v|
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// v! = v_1! ⋯ v_d!
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// Componentwise k ≤ v.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !other.le(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, other: &MultiIndex) -> Result<MultiIndex, Error> {
        check_dims(self, other)?;
        Ok(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Concatenation (v, w) ∈ ℕ₀^{d+e}.
    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().chain(&other.0).copied().collect())
    }

    fn scaled(&self, r: u32) -> MultiIndex {
        MultiIndex(self.0.iter().map(|p| p * r).collect())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Accepts `2,1,0` with optional surrounding parentheses.
impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad multi-index entry {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MultiIndex::new(parts))
    }
}

fn check_dims(a: &MultiIndex, b: &MultiIndex) -> Result<(), Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Multi-index binomial (v choose k) = Π (v_j choose k_j); zero unless k ≤ v.
pub fn binomial(v: &MultiIndex, k: &MultiIndex) -> Result<BigInt, Error> {
    check_dims(v, k)?;
    if !k.le(v) {
        return Ok(BigInt::zero());
    }
    Ok(v.0
        .iter()
        .zip(&k.0)
        .map(|(&n, &r)| int_binomial(BigInt::from(n), BigInt::from(r)))
        .product())
}

/// All k with 0 ≤ k ≤ v componentwise, in lexicographic order.
pub fn sub_indices(v: &MultiIndex) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(v.0.iter().map(|&p| p as usize + 1).product());
    let mut cur = vec![0u32; v.dim()];
    loop {
        out.push(MultiIndex(cur.clone()));
        // odometer increment, last coordinate fastest
        let mut i = v.dim();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < v.0[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
    }
}

/// All multi-indices of dimension `dim` with |v| ≤ `max_degree`, in
/// lexicographic order.
pub fn indices_up_to(dim: usize, max_degree: usize) -> Vec<MultiIndex> {
    let bound = MultiIndex::new(vec![max_degree as u32; dim]);
    sub_indices(&bound)
        .into_iter()
        .filter(|v| v.total_degree() <= max_degree)
        .collect()
}

/// Multiset of nonzero multi-indices summing to a given v, stored as
/// strictly lex-increasing distinct columns with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiIndexPartition {
    columns: Vec<MultiIndex>,
    multiplicities: Vec<u32>,
}

impl MultiIndexPartition {
    pub fn columns(&self) -> &[MultiIndex] {
        &self.columns
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// l(λ): number of columns counted with multiplicity.
    pub fn length(&self) -> usize {
        self.multiplicities.iter().map(|&r| r as usize).sum()
    }

    /// m(λ)! = Π r_j!
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities.iter().map(|&r| factorial(r)).product()
    }

    /// λ! = Π (column_j!)^{r_j}
    pub fn factorial(&self) -> BigInt {
        self.columns
            .iter()
            .zip(&self.multiplicities)
            .map(|(c, &r)| num_traits::pow(c.factorial(), r as usize))
            .product()
    }

    /// Σ r_j · column_j
    pub fn total(&self) -> MultiIndex {
        let dim = self.columns[0].dim();
        self.columns
            .iter()
            .zip(&self.multiplicities)
            .fold(MultiIndex::zero(dim), |acc, (c, &r)| {
                acc.add(&c.scaled(r)).expect("columns share a dimension")
            })
    }

    /// Columns with repetition, lex ascending.
    pub fn expanded(&self) -> impl Iterator<Item = &MultiIndex> {
        self.columns
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(c, &r)| std::iter::repeat_n(c, r as usize))
    }
}

/// Every multipartite partition of v, each exactly once.
///
/// Columns are chosen largest first in lex-decreasing order, so each
/// multiset is reached by a single path and no deduplication is needed.
/// Emission order is reverse lexicographic by the largest column.
pub fn partitions(v: &MultiIndex) -> Result<Vec<MultiIndexPartition>, Error> {
    if v.is_zero() {
        return Err(Error::ZeroMultiIndex);
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(v, None, &mut stack, &mut out);
    Ok(out)
}

fn descend(
    remaining: &MultiIndex,
    bound: Option<&MultiIndex>,
    stack: &mut Vec<MultiIndex>,
    out: &mut Vec<MultiIndexPartition>,
) {
    if remaining.is_zero() {
        out.push(compress(stack));
        return;
    }
    let candidates = sub_indices(remaining);
    for column in candidates.iter().rev() {
        if column.is_zero() {
            continue;
        }
        if bound.is_some_and(|b| column > b) {
            continue;
        }
        let rest = remaining.checked_sub(column).expect("column <= remaining");
        stack.push(column.clone());
        descend(&rest, Some(column), stack, out);
        stack.pop();
    }
}

// stack holds columns in lex-decreasing order
fn compress(stack: &[MultiIndex]) -> MultiIndexPartition {
    let mut columns: Vec<MultiIndex> = Vec::new();
    let mut multiplicities: Vec<u32> = Vec::new();
    for c in stack.iter().rev() {
        if columns.last() == Some(c) {
            *multiplicities.last_mut().unwrap() += 1;
        } else {
            columns.push(c.clone());
            multiplicities.push(1);
        }
    }
    MultiIndexPartition {
        columns,
        multiplicities,
    }
}
