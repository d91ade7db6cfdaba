//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule, and
//! decomposition of class functions into irreducibles.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::class_function::{inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, factorial, Partition};

type MemoKey = (Vec<u32>, Vec<u32>);

/// Memo table for `χ^shape(cycles)`. Entries are idempotent, so concurrent
/// insertion from several threads is harmless.
#[derive(Debug, Default)]
pub struct MnMemo {
    table: RwLock<HashMap<MemoKey, i64>>,
}

impl MnMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `χ^μ(λ)`; panics if the sizes differ.
    pub fn value(&self, mu: &Partition, lambda: &Partition) -> i64 {
        assert_eq!(mu.n(), lambda.n(), "χ^[{mu}]([{lambda}]) mixes sizes");
        self.eval(mu.parts(), lambda.parts())
    }

    fn eval(&self, shape: &[u32], cycles: &[u32]) -> i64 {
        let Some((&r, rest)) = cycles.split_first() else {
            return i64::from(shape.is_empty());
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(&v) = self.table.read().unwrap().get(&key) {
            return v;
        }
        let mut total = 0i64;
        for (smaller, height) in remove_border_strips(shape, r) {
            let v = self.eval(&smaller, rest);
            total += if height % 2 == 0 { v } else { -v };
        }
        self.table.write().unwrap().insert(key, total);
        total
    }
}

/// Every shape obtained by removing a border strip of length `r`, with the
/// strip's height (rows spanned minus one).
///
/// Works on the beta-set `β_i = μ_i + (ℓ - 1 - i)`: a strip of length `r`
/// corresponds to moving one bead from `b` to the free position `b - r`, and
/// its height is the number of beads strictly between.
fn remove_border_strips(shape: &[u32], r: u32) -> Vec<(Vec<u32>, usize)> {
    let len = shape.len() as u32;
    let beta: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i as u32))
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, height));
    }
    out
}

fn global_memo() -> &'static MnMemo {
    static MEMO: OnceLock<MnMemo> = OnceLock::new();
    MEMO.get_or_init(MnMemo::new)
}

/// `χ^μ(λ)` using the shared memo table.
pub fn irreducible_character_value(mu: &Partition, lambda: &Partition) -> i64 {
    global_memo().value(mu, lambda)
}

/// `n! / Π hooks`.
pub fn irrep_dimension(mu: &Partition) -> BigInt {
    let parts = mu.parts();
    let conj = conjugate(parts);
    let mut hooks = BigInt::from(1);
    for (i, &row) in parts.iter().enumerate() {
        for (j, &col) in conj.iter().take(row as usize).enumerate() {
            let arm = row as usize - j - 1;
            let leg = col as usize - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(mu.n()) / hooks
}

fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().filter(|&&p| p >= c).count() as u32)
        .collect()
}

/// The full character table of `S_n`: one irreducible character per label,
/// in canonical order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    characters: Vec<(Partition, ClassFunction)>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let memo = global_memo();
        let characters = enumerate_partitions(n)
            .into_iter()
            .map(|mu| {
                let chi = ClassFunction::from_integers(n, |l| memo.value(&mu, l).into());
                (mu, chi)
            })
            .collect();
        CharacterTable { n, characters }
    }

    /// Shared table for `S_n`, built on first use.
    pub fn for_n(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(Self::build(n));
        cache.lock().unwrap().entry(n).or_insert(table).clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn characters(&self) -> &[(Partition, ClassFunction)] {
        &self.characters
    }

    pub fn character(&self, mu: &Partition) -> Option<&ClassFunction> {
        self.characters
            .binary_search_by(|(l, _)| l.canonical_cmp(mu))
            .ok()
            .map(|i| &self.characters[i].1)
    }
}

/// Whether a class function must decompose with nonnegative multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterKind {
    Genuine,
    Virtual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepDecomposition {
    pub n: usize,
    /// Nonzero multiplicities, labels in canonical order.
    pub terms: Vec<(Partition, BigInt)>,
    /// All multiplicities are nonnegative.
    pub exact: bool,
}

impl IrrepDecomposition {
    pub fn multiplicity(&self, mu: &Partition) -> BigInt {
        self.terms
            .iter()
            .find(|(l, _)| l == mu)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(mu, m)| m * irrep_dimension(mu))
            .sum()
    }

    /// `Σ mult(μ) χ^μ`.
    pub fn reconstruct(&self) -> ClassFunction {
        let table = CharacterTable::for_n(self.n);
        let mut acc = ClassFunction::constant(self.n, 0);
        for (mu, m) in &self.terms {
            let chi = table.character(mu).expect("label of the right size");
            acc = acc
                .add(&chi.scale(&BigRational::from_integer(m.clone())))
                .unwrap();
        }
        acc
    }

    /// Multiplicities keyed by label with the first row removed, for
    /// comparing decompositions across `n`.
    pub fn tails(&self) -> Vec<(Partition, BigInt)> {
        let mut t: Vec<_> = self
            .terms
            .iter()
            .map(|(mu, m)| (mu.tail(), m.clone()))
            .collect();
        t.sort_by(|a, b| a.0.canonical_cmp(&b.0).reverse());
        t
    }

    /// Terms as `mult·[μ]` joined by `+`.
    pub fn terms_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (mu, m)) in self.terms.iter().enumerate() {
            let sign = if m.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => s.push('-'),
                _ => s.push_str(&format!(" {sign} ")),
            }
            s.push_str(&format!("{}·{}", m.abs(), mu.bracketed()));
        }
        s
    }
}

impl fmt::Display for IrrepDecomposition {
    /// Table layout, e.g. `[4,1] ⊕ [3,2] ⊕ 2[3,1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(mu, m)| {
                if *m == BigInt::from(1) {
                    mu.bracketed()
                } else {
                    format!("{m}{}", mu.bracketed())
                }
            })
            .collect();
        f.write_str(&s.join(" ⊕ "))
    }
}

/// Multiplicities `⟨F, χ^μ⟩` for every irreducible `χ^μ`.
pub fn decompose(f: &ClassFunction, kind: CharacterKind) -> Result<IrrepDecomposition> {
    let table = CharacterTable::for_n(f.n());
    let mut terms = Vec::new();
    for (mu, chi) in table.characters() {
        let mult = inner_product(f, chi)?;
        if !mult.is_integer() {
            return Err(Error::NotVirtualCharacter {
                label: mu.to_string(),
                value: mult.to_string(),
            });
        }
        let mult = mult.to_integer();
        if kind == CharacterKind::Genuine && mult.is_negative() {
            return Err(Error::NegativeMultiplicity {
                label: mu.to_string(),
                value: mult.to_string(),
            });
        }
        if !mult.is_zero() {
            terms.push((mu.clone(), mult));
        }
    }
    let exact = terms.iter().all(|(_, m)| !m.is_negative());
    Ok(IrrepDecomposition {
        n: f.n(),
        terms,
        exact,
    })
}
