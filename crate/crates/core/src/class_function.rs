use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{class_data, enumerate_partitions, factorial, Partition};

/// A function on the conjugacy classes of `S_n`, stored on every partition of
/// `n` in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    entries: Vec<(Partition, BigRational)>,
}

impl ClassFunction {
    pub fn from_fn<F: FnMut(&Partition) -> BigRational>(n: usize, mut f: F) -> Self {
        let entries = enumerate_partitions(n)
            .into_iter()
            .map(|l| {
                let v = f(&l);
                (l, v)
            })
            .collect();
        ClassFunction { n, entries }
    }

    pub fn from_integers<F: FnMut(&Partition) -> BigInt>(n: usize, mut f: F) -> Self {
        Self::from_fn(n, |l| BigRational::from_integer(f(l)))
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Self::from_integers(n, |_| c.into())
    }

    /// The indicator of a single class.
    pub fn indicator(lambda: &Partition) -> Self {
        Self::from_integers(lambda.n(), |l| BigInt::from(i32::from(l == lambda)))
    }

    /// Character of the regular representation: `n!` at the identity.
    pub fn regular(n: usize) -> Self {
        let id = Partition::ones(n);
        let nf = factorial(n);
        Self::from_integers(n, |l| if *l == id { nf.clone() } else { BigInt::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.entries.iter().map(|(l, v)| (l, v))
    }

    pub fn value(&self, lambda: &Partition) -> Option<&BigRational> {
        self.entries
            .binary_search_by(|(l, _)| l.canonical_cmp(lambda))
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Value at the identity class, i.e. the dimension for a character.
    pub fn degree(&self) -> BigRational {
        self.value(&Partition::ones(self.n))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_integer_valued(&self) -> bool {
        self.entries.iter().all(|(_, v)| v.is_integer())
    }

    /// Integer value at λ; panics when the stored value is fractional.
    pub fn integer_value(&self, lambda: &Partition) -> BigInt {
        let v = self.value(lambda).expect("partition of the right size");
        assert!(v.is_integer(), "value {v} at [{lambda}] is not an integer");
        v.to_integer()
    }

    pub fn map<F: FnMut(&Partition, &BigRational) -> BigRational>(&self, mut f: F) -> Self {
        ClassFunction {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(l, v)| (l.clone(), f(l, v)))
                .collect(),
        }
    }

    pub fn zip_with<F>(&self, other: &Self, mut f: F) -> Result<Self>
    where
        F: FnMut(&BigRational, &BigRational) -> BigRational,
    {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(ClassFunction {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|((l, a), (_, b))| (l.clone(), f(a, b)))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|_, v| v * c)
    }

    pub fn as_map(&self) -> HashMap<Partition, BigRational> {
        self.entries.iter().cloned().collect()
    }
}

/// `⟨F, G⟩ = (1/n!) Σ_λ c_λ F(λ) G(λ)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::DegreeMismatch(f.n, g.n));
    }
    let mut total = BigRational::zero();
    for ((l, a), (_, b)) in f.entries.iter().zip(&g.entries) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        total += BigRational::from_integer(class_data(l).class_size) * a * b;
    }
    Ok(total / BigRational::from_integer(factorial(f.n)))
}
