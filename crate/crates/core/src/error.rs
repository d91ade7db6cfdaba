use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("pole at z=0: the measure of {0} has nonzero coefficients of 1/z^k for k >= 1")]
    PoleAtZero(String),

    #[error("no closed form for h_{n}^{k} at [{lambda}]")]
    NoClosedForm { n: usize, k: usize, lambda: String },

    #[error("class functions live on different symmetric groups: S_{0} vs S_{1}")]
    DegreeMismatch(usize, usize),

    #[error("not a virtual character: multiplicity of [{label}] is {value}")]
    NotVirtualCharacter { label: String, value: String },

    #[error("not a genuine character: multiplicity of [{label}] is {value}")]
    NegativeMultiplicity { label: String, value: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("enumeration budget exceeded: {required} candidates needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
