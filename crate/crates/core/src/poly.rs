//! Dense univariate polynomials over the rationals, with the necklace and
//! cycle polynomials built on top of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{divisors, factorial, mu, Partition};

/// Index `i` of `coeffs` holds the coefficient of `z^i`. The highest stored
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `z - root`, returning quotient and remainder.
    pub fn divide_by_linear(&self, root: &BigRational) -> (RatPoly, BigRational) {
        if self.coeffs.is_empty() {
            return (RatPoly::zero(), BigRational::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigRational::zero(); d];
        let mut carry = BigRational::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (RatPoly::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Coefficients as rational strings, constant term first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    /// Multiplies by the least common denominator, returning `(D, D·self)` with
    /// `D` positive and `D·self` integral.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            num_integer::lcm(acc, c.denom().clone())
        });
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        (lcm, ints)
    }
}

impl fmt::Display for RatPoly {
    /// Renders as `(z^4 - 6z^3 + 11z^2 - 6z)/24`, or a bare integral polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (den, ints) = self.clear_denominators();
        let mut body = String::new();
        for (i, c) in ints.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if body.is_empty() {
                if negative {
                    body.push('-');
                }
            } else {
                body.push_str(if negative { " - " } else { " + " });
            }
            let mag_str = if mag.is_one() && i > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            match i {
                0 => body.push_str(&mag_str),
                1 => body.push_str(&format!("{mag_str}z")),
                _ => body.push_str(&format!("{mag_str}z^{i}")),
            }
        }
        if den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `M_j(z) = (1/j) Σ_{d|j} μ(d) z^{j/d}`, the number of monic irreducible
/// polynomials of degree `j` over a field with `z` elements.
pub fn necklace_polynomial(j: usize) -> Result<RatPoly> {
    if j == 0 {
        return Err(Error::Usage(
            "necklace polynomial index must be positive".into(),
        ));
    }
    let mut coeffs = vec![BigRational::zero(); j + 1];
    for d in divisors(j as u64) {
        coeffs[j / d as usize] += BigRational::from_integer(mu(d).into());
    }
    let inv_j = BigRational::new(BigInt::one(), BigInt::from(j));
    Ok(RatPoly::new(coeffs).scale(&inv_j))
}

/// `binom(P, m) = (1/m!) Π_{k<m} (P - k)`.
pub fn poly_binomial(p: &RatPoly, m: usize) -> RatPoly {
    let mut acc = RatPoly::one();
    for k in 0..m {
        let shift = RatPoly::constant(BigRational::from_integer(k.into()));
        acc = &acc * &(p - &shift);
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(m)))
}

/// `N_λ(z) = Π_j binom(M_j(z), m_j(λ))`: at a prime power `q` it counts
/// square-free monic polynomials over `F_q` of factorization type λ.
pub fn cycle_polynomial(lambda: &Partition) -> RatPoly {
    lambda
        .multiplicities()
        .into_iter()
        .fold(RatPoly::one(), |acc, (j, m)| {
            let necklace = necklace_polynomial(j as usize).expect("parts are positive");
            &acc * &poly_binomial(&necklace, m)
        })
}

/// Exact evaluation of `p` at `x`.
pub fn evaluate(p: &RatPoly, x: &BigRational) -> BigRational {
    p.evaluate(x)
}
