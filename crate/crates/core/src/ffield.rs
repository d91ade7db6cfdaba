//! Brute-force census of monic polynomials over a prime field.
//!
//! Every monic polynomial of degree `n` over `F_p` is enumerated, tested for
//! square-freeness with `gcd(f, f') = 1`, and factored by trial division
//! against the monic irreducibles of degree at most `n/2`. The resulting
//! tally by factorization type is the point-count side of the cycle
//! polynomial identities.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measure::measure_value;
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::cycle_polynomial;

/// Default cap on the number of candidate polynomials a single call may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Longest polynomial (degree + 1) the census handles.
const MAX_LEN: usize = 64;

/// A monic polynomial over `F_p`; `coeffs` holds the non-leading
/// coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldPoly {
    pub p: u32,
    pub coeffs: Vec<u32>,
}

impl PrimeFieldPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<u32> {
    if !is_prime(p) || p > u64::from(u16::MAX) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

fn check_budget(p: u32, degree: usize, budget: u64) -> Result<u128> {
    let required = (p as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
    if required > budget as u128 || degree + 1 > MAX_LEN {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required)
}

/// Arithmetic on coefficient slices over `F_p`.
#[derive(Debug, Clone)]
struct Field {
    p: u32,
    inv: Vec<u32>,
    /// `negmul[c * p + g] = -c·g mod p`, filled only for small `p`.
    negmul: Vec<u32>,
}

/// Largest `p` for which the `p × p` product table is built.
const TABLE_P: u32 = 256;

impl Field {
    fn new(p: u32) -> Self {
        let mut inv = vec![0; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| a * b % p == 1).expect("p is prime");
        }
        let negmul = if p <= TABLE_P {
            (0..p * p).map(|i| (p - i / p) * (i % p) % p).collect()
        } else {
            Vec::new()
        };
        Field { p, inv, negmul }
    }

    /// `a - c·g mod p`.
    #[inline]
    fn sub_mul(&self, a: u32, c: u32, g: u32) -> u32 {
        let p = self.p;
        if self.negmul.is_empty() {
            return ((a as u64 + (p - c) as u64 * g as u64) % p as u64) as u32;
        }
        let v = a + self.negmul[(c * p + g) as usize];
        if v >= p {
            v - p
        } else {
            v
        }
    }

    /// Writes the base-`p` digits of `index` into `out[..n]` and sets
    /// `out[n] = 1`.
    fn monic_from_index(&self, mut index: u64, n: usize, out: &mut [u32]) {
        for c in out.iter_mut().take(n) {
            *c = (index % self.p as u64) as u32;
            index /= self.p as u64;
        }
        out[n] = 1;
    }

    /// Divides `f` (length `len`) by the monic `g`, leaving the quotient in
    /// `quot` and the remainder in the low part of `f`. Returns whether the
    /// remainder is zero.
    fn divmod_monic(&self, f: &mut [u32], len: usize, g: &[u32], quot: &mut [u32]) -> bool {
        let d = g.len() - 1;
        if len <= d {
            return f[..len].iter().all(|&c| c == 0);
        }
        for i in (d..len).rev() {
            let c = f[i];
            quot[i - d] = c;
            if c == 0 {
                continue;
            }
            let base = i - d;
            for (t, &gt) in g[..d].iter().enumerate() {
                f[base + t] = self.sub_mul(f[base + t], c, gt);
            }
            f[i] = 0;
        }
        f[..d].iter().all(|&c| c == 0)
    }

    /// Remainder of `a` by the nonzero `b`, in place; returns the new length
    /// of `a` after trimming.
    fn rem_in_place(&self, a: &mut [u32], mut alen: usize, b: &[u32]) -> usize {
        let p = self.p;
        let d = b.len() - 1;
        let lead_inv = self.inv[b[d] as usize];
        while alen > d {
            let i = alen - 1;
            let c = (a[i] as u64 * lead_inv as u64 % p as u64) as u32;
            if c != 0 {
                let base = i - d;
                for (t, &bt) in b.iter().enumerate() {
                    a[base + t] = self.sub_mul(a[base + t], c, bt);
                }
            }
            alen -= 1;
            while alen > 0 && a[alen - 1] == 0 {
                alen -= 1;
            }
        }
        trim_len(a, alen)
    }

    /// `gcd(f, f') = 1` for the monic `f`.
    fn is_squarefree(&self, f: &[u32]) -> bool {
        let n = f.len() - 1;
        let p = self.p;
        let mut a = [0u32; MAX_LEN];
        let mut b = [0u32; MAX_LEN];
        a[..=n].copy_from_slice(f);
        for i in 0..n {
            b[i] = ((i as u64 + 1) % p as u64 * f[i + 1] as u64 % p as u64) as u32;
        }
        let mut alen = n + 1;
        let mut blen = trim_len(&b, n);
        if blen == 0 {
            return false;
        }
        while blen > 0 {
            alen = self.rem_in_place(&mut a, alen, &b[..blen]);
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut alen, &mut blen);
        }
        alen == 1
    }
}

fn trim_len(a: &[u32], mut len: usize) -> usize {
    while len > 0 && a[len - 1] == 0 {
        len -= 1;
    }
    len
}

/// Monic irreducibles over `F_p` grouped by degree: entry `d - 1` lists the
/// degree-`d` ones. A degree-`d` polynomial is kept when no kept polynomial of
/// degree at most `d/2` divides it.
pub fn enumerate_irreducibles(
    p: u64,
    d_max: usize,
    budget: u64,
) -> Result<Vec<Vec<PrimeFieldPoly>>> {
    let p = check_prime(p)?;
    if d_max == 0 {
        return Err(Error::Usage("d_max must be positive".into()));
    }
    check_budget(p, d_max, budget)?;
    Ok(sieve(&Field::new(p), d_max)
        .into_iter()
        .map(|by_degree| {
            by_degree
                .into_iter()
                .map(|mut full| {
                    full.pop();
                    PrimeFieldPoly { p, coeffs: full }
                })
                .collect()
        })
        .collect())
}

/// Full coefficient vectors (leading 1 included) of the irreducibles.
fn sieve(field: &Field, d_max: usize) -> Vec<Vec<Vec<u32>>> {
    let mut irreducible: Vec<Vec<Vec<u32>>> = Vec::with_capacity(d_max);
    let mut f = [0u32; MAX_LEN];
    let mut work = [0u32; MAX_LEN];
    let mut quot = [0u32; MAX_LEN];
    for d in 1..=d_max {
        let mut found = Vec::new();
        let count = (field.p as u64).pow(d as u32);
        for index in 0..count {
            field.monic_from_index(index, d, &mut f);
            let has_factor = irreducible.iter().take(d / 2).flatten().any(|g| {
                work[..=d].copy_from_slice(&f[..=d]);
                field.divmod_monic(&mut work, d + 1, g, &mut quot)
            });
            if !has_factor {
                found.push(f[..=d].to_vec());
            }
        }
        irreducible.push(found);
    }
    irreducible
}

/// Degrees of the irreducible factors of the monic `f`, with repetition, and
/// whether some factor occurs more than once.
fn factor_degrees(field: &Field, f: &[u32], irreducible: &[Vec<Vec<u32>>]) -> (Vec<u32>, bool) {
    let mut rem = [0u32; MAX_LEN];
    let mut work = [0u32; MAX_LEN];
    let mut quot = [0u32; MAX_LEN];
    let mut len = f.len();
    rem[..len].copy_from_slice(f);
    let mut degrees = Vec::new();
    let mut repeated = false;
    'degrees: for (idx, group) in irreducible.iter().enumerate() {
        let d = idx + 1;
        for g in group {
            if 2 * d > len - 1 {
                break 'degrees;
            }
            let mut hits = 0;
            loop {
                work[..len].copy_from_slice(&rem[..len]);
                if !field.divmod_monic(&mut work, len, g, &mut quot) {
                    break;
                }
                len -= d;
                rem[..len].copy_from_slice(&quot[..len]);
                degrees.push(d as u32);
                hits += 1;
            }
            if hits > 1 {
                repeated = true;
            }
        }
    }
    if len > 1 {
        degrees.push((len - 1) as u32);
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    (degrees, repeated)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTypeTally {
    pub p: u64,
    pub n: usize,
    /// One entry per partition of `n`, canonical order, zeros included.
    pub counts: Vec<(Partition, u64)>,
    pub total_squarefree: u64,
    /// Polynomials where the gcd test and the factorization disagree about
    /// square-freeness. Always zero on a correct build.
    pub squarefree_disagreements: u64,
}

impl FactorTypeTally {
    pub fn count(&self, lambda: &Partition) -> u64 {
        self.counts
            .iter()
            .find(|(l, _)| l == lambda)
            .map_or(0, |(_, c)| *c)
    }
}

#[derive(Default)]
struct PartialTally {
    counts: HashMap<Vec<u32>, u64>,
    squarefree: u64,
    disagreements: u64,
}

impl PartialTally {
    fn merge(mut self, other: PartialTally) -> PartialTally {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.squarefree += other.squarefree;
        self.disagreements += other.disagreements;
        self
    }
}

fn census_range(
    field: &Field,
    n: usize,
    irreducible: &[Vec<Vec<u32>>],
    range: std::ops::Range<u64>,
) -> PartialTally {
    let mut tally = PartialTally::default();
    let mut f = [0u32; MAX_LEN];
    for index in range {
        field.monic_from_index(index, n, &mut f);
        let poly = &f[..=n];
        let gcd_says = field.is_squarefree(poly);
        let (degrees, repeated) = factor_degrees(field, poly, irreducible);
        if gcd_says == repeated {
            tally.disagreements += 1;
        }
        if gcd_says {
            tally.squarefree += 1;
            *tally.counts.entry(degrees).or_insert(0) += 1;
        }
    }
    tally
}

/// Tallies every monic square-free polynomial of degree `n` over `F_p` by
/// factorization type. `workers` > 1 splits the enumeration into blocks with
/// fixed leading coefficients; the result does not depend on it.
pub fn factor_type_census(
    p: u64,
    n: usize,
    workers: usize,
    budget: u64,
) -> Result<FactorTypeTally> {
    let pp = check_prime(p)?;
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    let total = check_budget(pp, n, budget)? as u64;
    let field = Field::new(pp);
    let irreducible = sieve(&field, (n / 2).max(1));

    // Blocks are contiguous index ranges, i.e. fixed values of the top digits.
    let top_digits = (0..=n)
        .find(|&t| pp.pow(t as u32) >= 64 || t == n)
        .unwrap_or(n);
    let block_count = (pp as u64).pow(top_digits as u32);
    let block_len = total / block_count;
    let block = |b: u64| census_range(&field, n, &irreducible, b * block_len..(b + 1) * block_len);

    let merged = if workers <= 1 {
        (0..block_count)
            .map(block)
            .fold(PartialTally::default(), PartialTally::merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            (0..block_count)
                .into_par_iter()
                .map(block)
                .reduce(PartialTally::default, PartialTally::merge)
        })
    };

    let counts = enumerate_partitions(n)
        .into_iter()
        .map(|l| {
            let c = merged.counts.get(l.parts()).copied().unwrap_or(0);
            (l, c)
        })
        .collect();
    Ok(FactorTypeTally {
        p,
        n,
        counts,
        total_squarefree: merged.squarefree,
        squarefree_disagreements: merged.disagreements,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub partition: Partition,
    pub count: u64,
    /// `N_λ(p)`.
    pub theory: BigRational,
    /// `ν*_{n,p}(C_λ) · (p^n - p^{n-1})`; equal to `theory` for `n ≥ 2`.
    pub from_measure: Option<BigRational>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub tally: FactorTypeTally,
    pub rows: Vec<CensusRow>,
    /// Expected number of square-free polynomials.
    pub expected_total: u64,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
            && self.tally.total_squarefree == self.expected_total
            && self.tally.squarefree_disagreements == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.tally.p,
            "n": self.tally.n,
            "total": self.tally.total_squarefree,
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "partition": r.partition.to_string(),
                "count": r.count,
                "theory": r.theory.to_string(),
                "ok": r.ok,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs the census and compares every count with `N_λ(p)` and, for `n ≥ 2`,
/// with the splitting measure at `z = p` scaled by `p^n - p^{n-1}`.
pub fn census_vs_theory(p: u64, n: usize, workers: usize, budget: u64) -> Result<CensusReport> {
    let tally = factor_type_census(p, n, workers, budget)?;
    let pz = BigRational::from_integer(BigInt::from(p));
    let expected_total = if n >= 2 {
        p.pow(n as u32) - p.pow(n as u32 - 1)
    } else {
        p
    };
    let scale = BigRational::from_integer(BigInt::from(expected_total));
    let rows = tally
        .counts
        .iter()
        .map(|(lambda, count)| {
            let theory = cycle_polynomial(lambda).evaluate(&pz);
            let from_measure =
                (n >= 2).then(|| measure_value(lambda, &pz, false).expect("p is nonzero") * &scale);
            let observed = BigRational::from_integer(BigInt::from(*count));
            let ok = observed == theory && from_measure.as_ref().is_none_or(|m| *m == observed);
            CensusRow {
                partition: lambda.clone(),
                count: *count,
                theory,
                from_measure,
                ok,
            }
        })
        .collect();
    Ok(CensusReport {
        tally,
        rows,
        expected_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::necklace_polynomial;

    fn l(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn irreducible_counts() {
        let irr = enumerate_irreducibles(2, 3, DEFAULT_BUDGET).unwrap();
        let counts: Vec<usize> = irr.iter().map(Vec::len).collect();
        assert_eq!(counts, [2, 1, 2]);
        let irr = enumerate_irreducibles(3, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(irr[0].len(), 3);
        let irr = enumerate_irreducibles(2, 6, DEFAULT_BUDGET).unwrap();
        assert_eq!(irr[5].len(), 9);
        // x^2 + x + 1 is the only irreducible quadratic over F_2.
        assert_eq!(
            irr[1],
            vec![PrimeFieldPoly {
                p: 2,
                coeffs: vec![1, 1]
            }]
        );
    }

    #[test]
    fn irreducible_counts_match_necklace_polynomials() {
        for p in [2u64, 3, 5] {
            let irr = enumerate_irreducibles(p, 6, DEFAULT_BUDGET).unwrap();
            for (i, group) in irr.iter().enumerate() {
                let m = necklace_polynomial(i + 1)
                    .unwrap()
                    .evaluate(&BigRational::from_integer(p.into()));
                assert_eq!(
                    BigRational::from_integer(group.len().into()),
                    m,
                    "p={p} d={}",
                    i + 1
                );
            }
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            enumerate_irreducibles(4, 2, DEFAULT_BUDGET),
            Err(Error::NotPrime(4))
        );
        assert!(matches!(
            factor_type_census(2, 30, 1, DEFAULT_BUDGET),
            Err(Error::BudgetExceeded { required, budget: DEFAULT_BUDGET }) if required == 1 << 30
        ));
        assert!(factor_type_census(1, 3, 1, DEFAULT_BUDGET).is_err());
        assert!(factor_type_census(3, 0, 1, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn census_examples() {
        let t = factor_type_census(2, 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts, vec![(l("2"), 1), (l("1,1"), 1)]);
        assert_eq!(t.total_squarefree, 2);
        let t = factor_type_census(3, 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.counts, vec![(l("2"), 3), (l("1,1"), 3)]);
        assert_eq!(t.total_squarefree, 6);
        let t = factor_type_census(2, 4, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.count(&l("2,1,1")), 1);
    }

    #[test]
    fn census_agrees_with_cycle_polynomials() {
        for (p, n) in [(2, 5), (3, 4), (5, 4), (7, 3), (2, 1), (5, 1)] {
            let report = census_vs_theory(p, n, 1, DEFAULT_BUDGET).unwrap();
            assert!(report.passed(), "p={p} n={n}: {report:?}");
        }
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let one = factor_type_census(3, 7, 1, DEFAULT_BUDGET).unwrap();
        let four = factor_type_census(3, 7, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn squarefree_test_on_known_polynomials() {
        let f = Field::new(3);
        // x^3 - x = x(x-1)(x+1)
        assert!(f.is_squarefree(&[0, 2, 0, 1]));
        // x^3 = x·x·x
        assert!(!f.is_squarefree(&[0, 0, 0, 1]));
        // x^3 + 1 = (x+1)^3 in characteristic 3; derivative vanishes
        assert!(!f.is_squarefree(&[1, 0, 0, 1]));
    }
}
