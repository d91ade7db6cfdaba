//! Integer partitions and the conjugacy-class data of the symmetric group.
//!
//! A partition is stored as its weakly decreasing list of parts. The
//! multiplicity view `1^{m_1} 2^{m_2} ...` is derived on demand.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts given in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Usage("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(1^n)`, cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-part partition `[n]`, cycle type of an n-cycle.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![n as u32],
        }
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `|λ|`.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// The length `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_j(λ)`, the number of parts equal to `j`.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Nonzero multiplicities keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn distinct_part_count(&self) -> usize {
        self.multiplicities().len()
    }

    /// Parts after the first one; the label used to compare decompositions
    /// across different `n`.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Prepends a first part so that the result has size `n`, if that gives a
    /// valid partition.
    pub fn pad_to(&self, n: usize) -> Option<Partition> {
        let rest = self.n();
        if n < rest {
            return None;
        }
        let first = (n - rest) as u32;
        if first == 0 || self.parts.first().is_some_and(|&p| p > first) {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Some(Partition { parts })
    }

    /// Order in which all tables list partitions: reverse lexicographic.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// Bracketed form used in tables, e.g. `[3,1,1]`.
    pub fn bracketed(&self) -> String {
        format!("[{self}]")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n as u32, n as u32, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    /// `z_λ`, the order of the centralizer of a permutation of cycle type λ.
    pub centralizer_order: BigInt,
    /// `c_λ = n!/z_λ`, the size of the conjugacy class.
    pub class_size: BigInt,
}

pub fn class_data(lambda: &Partition) -> ClassData {
    let mut z = BigInt::one();
    for (j, m) in lambda.multiplicities() {
        z *= BigInt::from(j).pow(m as u32) * factorial(m);
    }
    let class_size = factorial(lambda.n()) / &z;
    ClassData {
        centralizer_order: z,
        class_size,
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The arithmetic Möbius function.
pub fn moebius(d: u64) -> Result<i8> {
    if d == 0 {
        return Err(Error::Usage("moebius is undefined at 0".into()));
    }
    let mut d = d;
    let mut sign = 1i8;
    let mut q = 2u64;
    while q * q <= d {
        if d.is_multiple_of(q) {
            d /= q;
            if d.is_multiple_of(q) {
                return Ok(0);
            }
            sign = -sign;
        }
        q += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Möbius function for arguments known to be positive.
pub(crate) fn mu(d: u64) -> i8 {
    moebius(d).expect("moebius argument must be positive")
}

/// Sign of a permutation of cycle type λ: `(-1)^(n - ℓ(λ))`.
pub fn sign_character(lambda: &Partition) -> i8 {
    if (lambda.n() - lambda.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
