//! Characters of the pure braid group cohomology `H^k(P_n, Q)` and of its
//! summands `A_n^k`, read off the coefficients of the cycle polynomials.
//!
//! `h_n^k(λ) = (-1)^k z_λ [z^{n-k}] N_λ(z)` is the only route used to build
//! the characters. The closed forms at the bottom of the module are
//! independent cross-checks valid on restricted families of `(k, λ)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::class_function::ClassFunction;
use crate::error::{Error, Result};
use crate::partition::{
    binomial, class_data, enumerate_partitions, factorial, mu, sign_character, Partition,
};
use crate::poly::cycle_polynomial;

/// All `h_n^k` for one `n`, computed from a single pass over the cycle
/// polynomials.
#[derive(Debug, Clone)]
pub struct BraidCharacters {
    n: usize,
    partitions: Vec<Partition>,
    /// `h[i][k] = h_n^k(partitions[i])`
    h: Vec<Vec<BigInt>>,
}

impl BraidCharacters {
    /// Panics if an extracted value is not an integer.
    pub fn new(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let h = partitions
            .iter()
            .map(|lambda| {
                let poly = cycle_polynomial(lambda);
                let z = BigRational::from_integer(class_data(lambda).centralizer_order);
                (0..=n)
                    .map(|k| {
                        let v = poly.coeff(n - k) * &z;
                        assert!(
                            v.is_integer(),
                            "h_{n}^{k}([{lambda}]) = {v} is not an integer"
                        );
                        let v = v.to_integer();
                        if k % 2 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect()
            })
            .collect();
        BraidCharacters { n, partitions, h }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, lambda: &Partition) -> usize {
        self.partitions
            .binary_search_by(|l| l.canonical_cmp(lambda))
            .expect("partition of the right size")
    }

    /// `h_n^k(λ)`, zero for `k > n`.
    pub fn h(&self, k: usize, lambda: &Partition) -> BigInt {
        self.h[self.index(lambda)]
            .get(k)
            .cloned()
            .unwrap_or_default()
    }

    /// `χ_n^k(λ) = Σ_{j≤k} (-1)^{k-j} h_n^j(λ)` for `k < n`, zero beyond.
    pub fn chi(&self, k: usize, lambda: &Partition) -> BigInt {
        if k >= self.n {
            return BigInt::zero();
        }
        let row = &self.h[self.index(lambda)];
        (0..=k).fold(BigInt::zero(), |acc, j| {
            if (k - j).is_multiple_of(2) {
                acc + &row[j]
            } else {
                acc - &row[j]
            }
        })
    }

    pub fn h_character(&self, k: usize) -> ClassFunction {
        ClassFunction::from_integers(self.n, |l| self.h(k, l))
    }

    pub fn chi_character(&self, k: usize) -> ClassFunction {
        ClassFunction::from_integers(self.n, |l| self.chi(k, l))
    }
}

fn check_degree(n: usize, k: usize, max_k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Usage("n must be positive".into()));
    }
    if k > max_k {
        return Err(Error::Usage(format!(
            "k = {k} out of range 0..={max_k} for n = {n}"
        )));
    }
    Ok(())
}

/// Character `h_n^k` of `H^k(P_n, Q)`, for `0 ≤ k ≤ n`.
pub fn braid_character(n: usize, k: usize) -> Result<ClassFunction> {
    check_degree(n, k, n)?;
    Ok(BraidCharacters::new(n).h_character(k))
}

/// Character `χ_n^k` of `A_n^k`, for `0 ≤ k ≤ n - 1`.
pub fn a_character(n: usize, k: usize) -> Result<ClassFunction> {
    check_degree(n, k, n.saturating_sub(1))?;
    Ok(BraidCharacters::new(n).chi_character(k))
}

/// `λ ↦ Σ_k h_n^k(λ) sgn(λ)^k`, the character of `⊕_k H^k ⊗ Sgn^k`.
pub fn sign_twisted_sum(n: usize) -> Result<ClassFunction> {
    check_degree(n, 0, 0)?;
    let table = BraidCharacters::new(n);
    Ok(ClassFunction::from_integers(n, |l| {
        let odd_negative = sign_character(l) < 0;
        (0..=n).fold(BigInt::zero(), |acc, k| {
            let v = table.h(k, l);
            if odd_negative && k % 2 == 1 {
                acc - v
            } else {
                acc + v
            }
        })
    }))
}

/// `θ(λ) = Σ_k h_n^k(λ)`, the character of the total cohomology.
pub fn total_cohomology_character(n: usize) -> Result<ClassFunction> {
    check_degree(n, 0, 0)?;
    let table = BraidCharacters::new(n);
    Ok(ClassFunction::from_integers(n, |l| {
        (0..=n).map(|k| table.h(k, l)).sum()
    }))
}

/// Character of `B_{n,m} = ⊕_k (A_n^k)^{m^k}`: `λ ↦ Σ_k χ_n^k(λ) m^k`.
pub fn b_character(n: usize, m: u32) -> Result<ClassFunction> {
    let (even, odd) = b_character_signed(n, m)?;
    even.add(&odd)
}

/// Characters of `B⁺_{n,m}` and `B⁻_{n,m}`, the even-`k` and odd-`k` parts of
/// `B_{n,m}`. Their difference is `z_λ ν*_{n,1/m}(C_λ)`.
pub fn b_character_signed(n: usize, m: u32) -> Result<(ClassFunction, ClassFunction)> {
    if n < 2 || m == 0 {
        return Err(Error::Usage("B_{n,m} needs n >= 2 and m >= 1".into()));
    }
    let table = BraidCharacters::new(n);
    let part = |parity: usize| {
        ClassFunction::from_integers(n, |l| {
            (0..n)
                .filter(|k| k % 2 == parity)
                .map(|k| table.chi(k, l) * BigInt::from(m).pow(k as u32))
                .sum()
        })
    };
    Ok((part(0), part(1)))
}

/// Product formula `Π_{j=2}^{n-1} (1 + j·t)` for the dimension of `B_{n,m}`
/// (`t = m`) and the signed variant (`t = -m`).
pub fn b_dimension_product(n: usize, t: i64) -> BigInt {
    (2..n).map(|j| BigInt::from(1 + j as i64 * t)).product()
}

/// The families of `(k, λ)` with a known closed form for `h_n^k(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `h_n^1` as a character polynomial in the `m_j`.
    Degree1,
    /// `h_n^2` as a character polynomial in the `m_j`.
    Degree2,
    /// `h_n^{n-1}`, supported on rectangles `(j^m)`.
    Top,
    /// `h_n^{n-2}`, supported on partitions with at most two part sizes.
    SubTop,
    /// `h_n^k([n])` via the Möbius function.
    NCycle,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] = [
        ClosedForm::Degree1,
        ClosedForm::Degree2,
        ClosedForm::Top,
        ClosedForm::SubTop,
        ClosedForm::NCycle,
    ];

    pub fn applies(self, n: usize, k: usize, lambda: &Partition) -> bool {
        match self {
            ClosedForm::Degree1 => k == 1,
            ClosedForm::Degree2 => k == 2,
            ClosedForm::Top => k + 1 == n,
            ClosedForm::SubTop => k + 2 == n,
            ClosedForm::NCycle => *lambda == Partition::single(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Degree1 => "h^1 character polynomial",
            ClosedForm::Degree2 => "h^2 character polynomial",
            ClosedForm::Top => "h^(n-1) on rectangles",
            ClosedForm::SubTop => "h^(n-2) with harmonic numbers",
            ClosedForm::NCycle => "h^k on the n-cycle",
        }
    }

    /// Evaluates the closed form, or reports that `(k, λ)` lies outside the
    /// family.
    pub fn evaluate(self, n: usize, k: usize, lambda: &Partition) -> Result<BigRational> {
        if lambda.n() != n || n == 0 || k > n || !self.applies(n, k, lambda) {
            return Err(Error::NoClosedForm {
                n,
                k,
                lambda: lambda.to_string(),
            });
        }
        let int = |v: BigInt| BigRational::from_integer(v);
        let m = |j: u32| lambda.multiplicity(j);
        Ok(match self {
            ClosedForm::Degree1 => int(binomial(m(1), 2) + m(2)),
            ClosedForm::Degree2 => {
                let m1 = m(1);
                let m2 = m(2);
                int(BigInt::from(2) * binomial(m1, 3)
                    + BigInt::from(3) * binomial(m1, 4)
                    + binomial(m1, 2) * m2
                    - binomial(m2, 2)
                    - m(3)
                    - m(4))
            }
            ClosedForm::Top => match rectangle(lambda) {
                Some((j, mult)) => int(sign_pow(mult + n) * rectangle_factor(j, mult)),
                None => BigRational::zero(),
            },
            ClosedForm::SubTop => sub_top(n, lambda),
            ClosedForm::NCycle => {
                // h_n^{n-d}([n]) = (-1)^{n-d} μ(n/d) when d | n.
                let d = n - k;
                if d == 0 || !n.is_multiple_of(d) {
                    BigRational::zero()
                } else {
                    int(sign_pow(k) * mu((n / d) as u64))
                }
            }
        })
    }
}

/// First closed form whose family contains `(k, λ)`.
pub fn closed_form_check(n: usize, k: usize, lambda: &Partition) -> Result<BigRational> {
    ClosedForm::ALL
        .iter()
        .find(|f| f.applies(n, k, lambda))
        .ok_or_else(|| Error::NoClosedForm {
            n,
            k,
            lambda: lambda.to_string(),
        })?
        .evaluate(n, k, lambda)
}

fn sign_pow(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn rectangle(lambda: &Partition) -> Option<(u32, usize)> {
    let parts = lambda.parts();
    let j = *parts.first()?;
    parts.iter().all(|&p| p == j).then_some((j, parts.len()))
}

/// `μ(j) j^{m-1} (m-1)!`
fn rectangle_factor(j: u32, m: usize) -> BigInt {
    BigInt::from(mu(j.into())) * BigInt::from(j).pow(m as u32 - 1) * factorial(m - 1)
}

fn harmonic(m: usize) -> BigRational {
    (1..=m)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i)))
        .sum()
}

fn sub_top(n: usize, lambda: &Partition) -> BigRational {
    let mults: Vec<(u32, usize)> = lambda.multiplicities().into_iter().collect();
    match mults.as_slice() {
        [(i, a), (j, b)] => BigRational::from_integer(
            sign_pow(a + b + n) * rectangle_factor(*i, *a) * rectangle_factor(*j, *b),
        ),
        [(j, m)] => {
            let (j, m) = (*j, *m);
            let mu_j = BigRational::from_integer(mu(j.into()).into());
            // μ at a non-integer argument is zero.
            let mu_half = if j % 2 == 0 {
                BigRational::from_integer(mu((j / 2).into()).into())
            } else {
                BigRational::zero()
            };
            let jr = BigRational::from_integer(j.into());
            let bracket = &mu_j * &mu_j * harmonic(m - 1) / &jr - mu_half;
            let scale = BigInt::from(j).pow(m as u32 - 1) * factorial(m - 1);
            bracket * BigRational::from_integer(sign_pow(m + n) * scale)
        }
        _ => BigRational::zero(),
    }
}
