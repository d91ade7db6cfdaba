//! The z-splitting measure `ν*_{n,z}(C_λ) = N_λ(z) / (z^n - z^{n-1})`, kept as
//! its Laurent coefficients in `1/z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{class_data, Partition};
use crate::poly::cycle_polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingMeasure {
    pub n: usize,
    pub lambda: Partition,
    /// `alpha[k]` is the coefficient of `(1/z)^k`, for `k = 0..n-1`.
    pub alpha: Vec<BigRational>,
}

impl SplittingMeasure {
    /// Evaluates `Σ_k α^k (1/z)^k`.
    pub fn value_at(&self, z: &BigRational) -> Result<BigRational> {
        if z.is_zero() {
            if self.alpha.iter().skip(1).any(|a| !a.is_zero()) {
                return Err(Error::PoleAtZero(self.lambda.to_string()));
            }
            return Ok(self
                .alpha
                .first()
                .cloned()
                .unwrap_or_else(BigRational::zero));
        }
        let w = z.recip();
        Ok(self
            .alpha
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * &w + a))
    }
}

/// Laurent coefficients of the splitting measure of the class `C_λ`.
///
/// Panics if `z - 1` fails to divide `N_λ(z)`; that can only happen through
/// an arithmetic bug.
pub fn splitting_coefficients(lambda: &Partition) -> SplittingMeasure {
    let n = lambda.n();
    if n <= 1 {
        return SplittingMeasure {
            n,
            lambda: lambda.clone(),
            alpha: vec![BigRational::one(); n],
        };
    }
    let (quotient, remainder) = cycle_polynomial(lambda).divide_by_linear(&BigRational::one());
    assert!(
        remainder.is_zero(),
        "N_[{lambda}](1) = {remainder}, expected 0"
    );
    // ν = quotient(z) / z^{n-1}, so α^k is the coefficient of z^{n-1-k}.
    let alpha = (0..n).map(|k| quotient.coeff(n - 1 - k)).collect();
    SplittingMeasure {
        n,
        lambda: lambda.clone(),
        alpha,
    }
}

/// Value of the measure at `z` on the whole class, or on a single element of
/// it when `per_element` is set.
pub fn measure_value(
    lambda: &Partition,
    z: &BigRational,
    per_element: bool,
) -> Result<BigRational> {
    let value = splitting_coefficients(lambda).value_at(z)?;
    if per_element {
        let c = class_data(lambda).class_size;
        Ok(value / BigRational::from_integer(c))
    } else {
        Ok(value)
    }
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Usage(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
