//! Named verification suites. Each suite is a fixed list of checks run in
//! registration order; a suite passes iff every check passes.

use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::characters::{b_character_signed, b_dimension_product, BraidCharacters, ClosedForm};
use crate::class_function::{inner_product, ClassFunction};
use crate::error::{Error, Result};
use crate::ffield::{census_vs_theory, DEFAULT_BUDGET};
use crate::irreps::{
    decompose, irreducible_character_value, irrep_dimension, CharacterKind, CharacterTable,
    IrrepDecomposition,
};
use crate::measure::splitting_coefficients;
use crate::partition::{
    class_data, divisors, enumerate_partitions, factorial, sign_character, Partition,
};
use crate::poly::{cycle_polynomial, necklace_polynomial, RatPoly};
use crate::tables::{self, reference, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Tables,
    Identities,
    Support,
    RegularRep,
    Stability,
    Oracle,
    All,
}

impl SuiteName {
    pub const EACH: [SuiteName; 6] = [
        SuiteName::Tables,
        SuiteName::Identities,
        SuiteName::Support,
        SuiteName::RegularRep,
        SuiteName::Stability,
        SuiteName::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Tables => "tables",
            SuiteName::Identities => "identities",
            SuiteName::Support => "support",
            SuiteName::RegularRep => "regular-rep",
            SuiteName::Stability => "stability",
            SuiteName::Oracle => "oracle",
            SuiteName::All => "all",
        }
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::EACH
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for polynomial and character identities.
    pub max_n: usize,
    /// Largest `n` for checks that decompose into irreducibles.
    pub max_decomposition_n: usize,
    /// Largest `p^n` for the finite-field census.
    pub oracle_budget: u64,
    pub primes: Vec<u64>,
    pub workers: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: tables::MAX_CHARACTER_N,
            max_decomposition_n: tables::MAX_DECOMPOSITION_N,
            oracle_budget: 1_000_000,
            primes: vec![2, 3, 5, 7],
            workers: 1,
        }
    }
}

impl Limits {
    fn validate(&self) -> Result<()> {
        if self.max_n < 2 || self.max_n > 20 {
            return Err(Error::Usage(format!("max-n {} outside 2..=20", self.max_n)));
        }
        if self.max_decomposition_n > 12 {
            return Err(Error::Usage(
                "decomposition limit above 12 is not supported".into(),
            ));
        }
        if self.oracle_budget > DEFAULT_BUDGET {
            return Err(Error::BudgetExceeded {
                required: self.oracle_budget.into(),
                budget: DEFAULT_BUDGET,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub passed: bool,
    /// Failure details, empty on success.
    pub details: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => tables::pretty(&json!({
                "suite": self.name,
                "passed": self.passed(),
                "elapsed_ms": self.elapsed.as_millis() as u64,
                "checks": self.checks.iter().map(|c| json!({
                    "description": c.description,
                    "status": if c.passed { "pass" } else { "fail" },
                    "details": c.details,
                })).collect::<Vec<_>>(),
            })),
            Format::Csv => {
                let mut out = String::from("suite,check,status,details\n");
                for c in &self.checks {
                    out.push_str(&format!(
                        "{},\"{}\",{},\"{}\"\n",
                        self.name,
                        c.description.replace('"', "'"),
                        if c.passed { "pass" } else { "fail" },
                        c.details.join("; ").replace('"', "'")
                    ));
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for c in &self.checks {
                    out.push_str(&format!(
                        "[{}] {}\n",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.description
                    ));
                    for d in &c.details {
                        out.push_str(&format!("       {d}\n"));
                    }
                }
                let failed = self.failures().count();
                out.push_str(&format!(
                    "suite {}: {} checks, {} failed ({:.2}s)\n",
                    self.name,
                    self.checks.len(),
                    failed,
                    self.elapsed.as_secs_f64()
                ));
                out
            }
        }
    }
}

/// Collects mismatches for one check. Only the first few details are kept.
struct Recorder {
    checks: Vec<Check>,
}

const MAX_DETAILS: usize = 8;

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn check<F: FnOnce(&mut Vec<String>)>(&mut self, description: impl Into<String>, body: F) {
        let mut details = Vec::new();
        body(&mut details);
        let passed = details.is_empty();
        if details.len() > MAX_DETAILS {
            let extra = details.len() - MAX_DETAILS;
            details.truncate(MAX_DETAILS);
            details.push(format!("... and {extra} more"));
        }
        self.checks.push(Check {
            description: description.into(),
            passed,
            details,
        });
    }

    fn finish(self, name: &str, start: Instant) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            checks: self.checks,
            elapsed: start.elapsed(),
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(
    out: &mut Vec<String>,
    what: impl FnOnce() -> String,
    got: &T,
    want: &T,
) {
    if got != want {
        out.push(format!("{}: computed {got}, expected {want}", what()));
    }
}

fn tails_of(pattern: &[(&str, i64)]) -> Vec<(Partition, BigInt)> {
    let mut v: Vec<(Partition, BigInt)> = pattern
        .iter()
        .map(|(s, m)| (s.parse().expect("reference labels parse"), BigInt::from(*m)))
        .collect();
    v.sort_by(|a, b| a.0.canonical_cmp(&b.0).reverse());
    v
}

fn render_tails(t: &[(Partition, BigInt)]) -> String {
    t.iter()
        .map(|(l, m)| format!("{m}x[{l}]"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Unsigned Stirling numbers of the first kind `[n k]` from the recurrence
/// `[n+1 k] = n [n k] + [n k-1]`.
pub fn stirling_first_unsigned(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, v) in row.iter().enumerate() {
            next[k] += v * BigInt::from(i);
            next[k + 1] += v;
        }
        row = next;
    }
    row
}

pub fn run_suite(name: SuiteName, limits: &Limits) -> Result<Vec<SuiteReport>> {
    limits.validate()?;
    let suites: Vec<SuiteName> = match name {
        SuiteName::All => SuiteName::EACH.to_vec(),
        one => vec![one],
    };
    suites.into_iter().map(|s| run_one(s, limits)).collect()
}

fn run_one(name: SuiteName, limits: &Limits) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut r = Recorder::new();
    match name {
        SuiteName::Tables => tables_suite(&mut r, limits)?,
        SuiteName::Identities => identities_suite(&mut r, limits)?,
        SuiteName::Support => support_suite(&mut r, limits),
        SuiteName::RegularRep => regular_rep_suite(&mut r, limits)?,
        SuiteName::Stability => stability_suite(&mut r, limits)?,
        SuiteName::Oracle => oracle_suite(&mut r, limits)?,
        SuiteName::All => unreachable!("expanded by run_suite"),
    }
    Ok(r.finish(name.as_str(), start))
}

fn measure_table_check(out: &mut Vec<String>, n: usize, table: &[(&str, u64, u64, &[i64])]) {
    let rows = match tables::measure_rows(n, None) {
        Ok(rows) => rows,
        Err(e) => return out.push(e.to_string()),
    };
    if rows.len() != table.len() {
        out.push(format!(
            "n={n}: {} rows, expected {}",
            rows.len(),
            table.len()
        ));
    }
    for (lam, class_size, z, scaled) in table {
        let lambda: Partition = lam.parse().expect("reference partitions parse");
        let Some(row) = rows.iter().find(|r| r.partition == lambda) else {
            out.push(format!("n={n}: missing row [{lambda}]"));
            continue;
        };
        expect_eq(
            out,
            || format!("|C| at [{lambda}]"),
            &row.class_size,
            &BigInt::from(*class_size),
        );
        expect_eq(
            out,
            || format!("z at [{lambda}]"),
            &row.centralizer,
            &BigInt::from(*z),
        );
        for k in 0..n {
            let want = BigRational::new(
                BigInt::from(scaled.get(k).copied().unwrap_or(0)),
                BigInt::from(*z),
            );
            expect_eq(
                out,
                || format!("alpha_{n}^{k}([{lambda}])"),
                &row.alpha[k],
                &want,
            );
        }
    }
}

fn tables_suite(r: &mut Recorder, limits: &Limits) -> Result<()> {
    r.check("measure table n=4 (|C|, z, alpha)", |out| {
        measure_table_check(out, 4, reference::MEASURES_4)
    });
    r.check("measure table n=5 (|C|, z, alpha)", |out| {
        measure_table_check(out, 5, reference::MEASURES_5)
    });

    let betti = tables::dimension_triangle(9, false);
    r.check("Betti numbers h_n^k((1^n)), n <= 9, k <= 8", |out| {
        for (i, row) in reference::BETTI.iter().enumerate() {
            for (k, want) in row.iter().enumerate() {
                expect_eq(
                    out,
                    || format!("h_{}^{k}((1^n))", i + 1),
                    &betti[i][k],
                    &BigInt::from(*want),
                );
            }
        }
    });
    r.check(
        "Betti numbers equal unsigned Stirling numbers [n, n-k]",
        |out| {
            for n in 1..=limits.max_n {
                let s = stirling_first_unsigned(n);
                let t = BraidCharacters::new(n);
                for k in 0..=n {
                    expect_eq(
                        out,
                        || format!("n={n} k={k}"),
                        &t.h(k, &Partition::ones(n)),
                        &s[n - k],
                    );
                }
            }
        },
    );
    let adims = tables::dimension_triangle(9, true);
    r.check("dim A_n^k, n <= 9, k <= 7", |out| {
        for (i, row) in reference::A_DIMS.iter().enumerate() {
            for (k, want) in row.iter().enumerate() {
                expect_eq(
                    out,
                    || format!("chi_{}^{k}((1^n))", i + 1),
                    &adims[i][k],
                    &BigInt::from(*want),
                );
            }
        }
    });

    let dn = limits.max_decomposition_n.max(5);
    let h1 = tables::h1_decompositions(dn)?;
    r.check("H^1 and A_n^1 decompositions, 2 <= n <= 5", |out| {
        for (n, dim_h, h_str, dim_a, a_str) in reference::H1_DECOMP {
            let (_, h, a) = &h1[n - 2];
            expect_eq(
                out,
                || format!("H^1 n={n}"),
                &h.to_string(),
                &h_str.to_string(),
            );
            expect_eq(
                out,
                || format!("A^1 n={n}"),
                &a.to_string(),
                &a_str.to_string(),
            );
            expect_eq(
                out,
                || format!("dim H^1 n={n}"),
                &h.dimension(),
                &BigInt::from(*dim_h),
            );
            expect_eq(
                out,
                || format!("dim A^1 n={n}"),
                &a.dimension(),
                &BigInt::from(*dim_a),
            );
        }
    });
    r.check(
        format!("H^1 and A_n^1 stable rows, 4 <= n <= {dn}"),
        |out| {
            for (n, h, a) in h1.iter().filter(|(n, _, _)| *n >= 4) {
                expect_eq(
                    out,
                    || format!("H^1 n={n}"),
                    &render_tails(&h.tails()),
                    &render_tails(&tails_of(reference::H1_STABLE)),
                );
                expect_eq(
                    out,
                    || format!("A^1 n={n}"),
                    &render_tails(&a.tails()),
                    &render_tails(&tails_of(reference::A1_STABLE)),
                );
                let s = stirling_first_unsigned(*n);
                expect_eq(out, || format!("dim H^1 n={n}"), &h.dimension(), &s[n - 1]);
            }
        },
    );
    let a2 = tables::a2_decompositions(dn.max(8))?;
    r.check("A_n^2 decompositions, 3 <= n <= 8", |out| {
        for (n, dim, s) in reference::A2_DECOMP {
            let (_, d) = &a2[n - 3];
            expect_eq(out, || format!("A^2 n={n}"), &d.to_string(), &s.to_string());
            expect_eq(
                out,
                || format!("dim A^2 n={n}"),
                &d.dimension(),
                &BigInt::from(*dim),
            );
        }
    });
    Ok(())
}

fn identities_suite(r: &mut Recorder, limits: &Limits) -> Result<()> {
    let max_n = limits.max_n;
    let one = BigRational::one();
    r.check(
        format!("necklace inversion sum_{{d|n}} d M_d(z) = z^n, n <= {max_n}"),
        |out| {
            for n in 1..=max_n {
                let sum = divisors(n as u64)
                    .into_iter()
                    .fold(RatPoly::zero(), |acc, d| {
                        let m = necklace_polynomial(d as usize).expect("d >= 1");
                        &acc + &m.scale(&BigRational::from_integer(d.into()))
                    });
                expect_eq(
                    out,
                    || format!("n={n}"),
                    &sum,
                    &RatPoly::monomial(one.clone(), n),
                );
            }
        },
    );
    r.check(
        format!("sum_lambda N_lambda(z) = z^n - z^(n-1), 2 <= n <= {max_n}"),
        |out| {
            for n in 2..=max_n {
                let sum = enumerate_partitions(n)
                    .iter()
                    .fold(RatPoly::zero(), |acc, l| &acc + &cycle_polynomial(l));
                let want =
                    &RatPoly::monomial(one.clone(), n) - &RatPoly::monomial(one.clone(), n - 1);
                expect_eq(out, || format!("n={n}"), &sum, &want);
            }
        },
    );
    r.check(
        format!("N_lambda(0) = N_lambda(1) = 0, degree n, leading 1/z_lambda, n <= {max_n}"),
        |out| {
            for n in 2..=max_n {
                for l in enumerate_partitions(n) {
                    let p = cycle_polynomial(&l);
                    expect_eq(
                        out,
                        || format!("N_[{l}](1)"),
                        &p.evaluate(&one),
                        &BigRational::zero(),
                    );
                    expect_eq(
                        out,
                        || format!("N_[{l}](0)"),
                        &p.coeff(0),
                        &BigRational::zero(),
                    );
                    if p.degree() != Some(n) {
                        out.push(format!("deg N_[{l}] = {:?}, expected {n}", p.degree()));
                    }
                    let z = class_data(&l).centralizer_order;
                    expect_eq(
                        out,
                        || format!("lead N_[{l}]"),
                        &p.leading_coeff(),
                        &BigRational::new(BigInt::one(), z),
                    );
                }
            }
        },
    );
    let tables_by_n: Vec<BraidCharacters> = (1..=max_n).map(BraidCharacters::new).collect();
    r.check(
        format!("total measure: sum_lambda alpha^k = [k=0], 2 <= n <= {max_n}"),
        |out| {
            for n in 2..=max_n {
                let ms: Vec<_> = enumerate_partitions(n)
                    .iter()
                    .map(splitting_coefficients)
                    .collect();
                for k in 0..n {
                    let s: BigRational = ms.iter().map(|m| m.alpha[k].clone()).sum();
                    let want = if k == 0 {
                        one.clone()
                    } else {
                        BigRational::zero()
                    };
                    expect_eq(out, || format!("n={n} k={k}"), &s, &want);
                }
            }
        },
    );
    r.check(
        format!("alpha_n^k(C_lambda) = (-1)^k chi_n^k(lambda)/z_lambda, n <= {max_n}"),
        |out| {
            for t in &tables_by_n {
                let n = t.n();
                for l in t.partitions() {
                    let m = splitting_coefficients(l);
                    let z = class_data(l).centralizer_order;
                    for k in 0..n {
                        let chi = t.chi(k, l);
                        let signed = if k % 2 == 0 { chi } else { -chi };
                        expect_eq(
                            out,
                            || format!("n={n} k={k} [{l}]"),
                            &m.alpha[k],
                            &BigRational::new(signed, z.clone()),
                        );
                    }
                }
            }
        },
    );
    r.check(
        format!(
            "nu*_(n,z)(g) = (1/n!) sum_k chi_n^k(g) (-1/z)^k at z in {{2, -3, 5/7}}, n <= {max_n}"
        ),
        |out| {
            let points = [
                BigRational::from_integer(2.into()),
                BigRational::from_integer((-3).into()),
                BigRational::new(5.into(), 7.into()),
            ];
            for t in &tables_by_n {
                let n = t.n();
                let nf = BigRational::from_integer(factorial(n));
                for l in t.partitions() {
                    let m = splitting_coefficients(l);
                    let c = BigRational::from_integer(class_data(l).class_size);
                    for z in &points {
                        let tt = -z.recip();
                        let poincare = (0..n).fold(BigRational::zero(), |acc, k| {
                            acc + BigRational::from_integer(t.chi(k, l))
                                * num_traits::pow(tt.clone(), k)
                        }) / &nf;
                        let per_element = m.value_at(z).expect("z nonzero") / &c;
                        expect_eq(
                            out,
                            || format!("n={n} [{l}] z={z}"),
                            &per_element,
                            &poincare,
                        );
                    }
                }
            }
        },
    );
    r.check(format!("h_n^0 = 1 and h_n^n = 0, n <= {max_n}"), |out| {
        for t in &tables_by_n {
            let n = t.n();
            for l in t.partitions() {
                expect_eq(
                    out,
                    || format!("h_{n}^0([{l}])"),
                    &t.h(0, l),
                    &BigInt::one(),
                );
                expect_eq(
                    out,
                    || format!("h_{n}^{n}([{l}])"),
                    &t.h(n, l),
                    &BigInt::zero(),
                );
            }
        }
    });
    r.check(
        format!("h_n^k = chi_n^(k-1) + chi_n^k and chi_n^(n-1) = 0, 2 <= n <= {max_n}"),
        |out| {
            for t in tables_by_n.iter().skip(1) {
                let n = t.n();
                for l in t.partitions() {
                    expect_eq(
                        out,
                        || format!("chi_{n}^{}([{l}])", n - 1),
                        &t.chi(n - 1, l),
                        &BigInt::zero(),
                    );
                    for k in 0..=n {
                        let prev = if k == 0 {
                            BigInt::zero()
                        } else {
                            t.chi(k - 1, l)
                        };
                        let cur = if k < n { t.chi(k, l) } else { BigInt::zero() };
                        expect_eq(
                            out,
                            || format!("h_{n}^{k}([{l}])"),
                            &t.h(k, l),
                            &(prev + cur),
                        );
                    }
                }
            }
        },
    );
    for family in ClosedForm::ALL {
        r.check(
            format!(
                "closed form ({}) agrees with coefficient extraction, n <= {max_n}",
                family.name()
            ),
            |out| {
                for t in &tables_by_n {
                    let n = t.n();
                    for l in t.partitions() {
                        for k in 0..=n {
                            if !family.applies(n, k, l) {
                                continue;
                            }
                            match family.evaluate(n, k, l) {
                                Ok(v) => expect_eq(
                                    out,
                                    || format!("n={n} k={k} [{l}]"),
                                    &v,
                                    &BigRational::from_integer(t.h(k, l)),
                                ),
                                Err(e) => out.push(format!("n={n} k={k} [{l}]: {e}")),
                            }
                        }
                    }
                }
            },
        );
    }

    let dn = limits.max_decomposition_n;
    r.check(
        format!("dim B_(n,m) = prod_(j=2)^(n-1) (1 + jm) and B+/B- split, n <= {dn}, m in 1..=3"),
        |out| {
            for n in 2..=dn {
                for m in 1..=3u32 {
                    let Ok((plus, minus)) = b_character_signed(n, m) else {
                        out.push(format!("B_({n},{m}) unavailable"));
                        continue;
                    };
                    let id = Partition::ones(n);
                    let (p, q) = (plus.integer_value(&id), minus.integer_value(&id));
                    let up = b_dimension_product(n, m.into());
                    let down = b_dimension_product(n, -i64::from(m));
                    expect_eq(out, || format!("dim B_({n},{m})"), &(&p + &q), &up);
                    expect_eq(
                        out,
                        || format!("dim B+_({n},{m})"),
                        &(BigInt::from(2) * &p),
                        &(&up + &down),
                    );
                    expect_eq(
                        out,
                        || format!("dim B-_({n},{m})"),
                        &(BigInt::from(2) * &q),
                        &(&up - &down),
                    );
                }
            }
        },
    );
    r.check(
        format!("B_(n,1) decomposes genuinely, B+ - B- virtually, n <= {dn}"),
        |out| {
            for n in 2..=dn {
                let Ok((plus, minus)) = b_character_signed(n, 1) else {
                    continue;
                };
                let total = plus.add(&minus).expect("same n");
                let diff = plus.sub(&minus).expect("same n");
                match decompose(&total, CharacterKind::Genuine) {
                    Ok(d) if d.reconstruct() == total => {}
                    Ok(_) => out.push(format!("B_({n},1): reconstruction differs")),
                    Err(e) => out.push(format!("B_({n},1): {e}")),
                }
                match decompose(&diff, CharacterKind::Virtual) {
                    Ok(d) if d.reconstruct() == diff => {}
                    Ok(_) => out.push(format!("B+-B- n={n}: reconstruction differs")),
                    Err(e) => out.push(format!("B+-B- n={n}: {e}")),
                }
            }
        },
    );
    r.check(
        format!("irreducible characters are orthonormal, n <= {dn}"),
        |out| {
            for n in 1..=dn {
                let table = CharacterTable::for_n(n);
                for (a, ca) in table.characters() {
                    for (b, cb) in table.characters() {
                        let ip = inner_product(ca, cb).expect("same n");
                        let want = BigRational::from_integer(BigInt::from(i32::from(a == b)));
                        expect_eq(out, || format!("<chi^[{a}], chi^[{b}]>"), &ip, &want);
                    }
                }
            }
        },
    );
    r.check(
        format!("hook length formula equals chi^mu((1^n)) and sum dim^2 = n!, n <= {dn}"),
        |out| {
            for n in 1..=dn {
                let mut sum = BigInt::zero();
                for mu in enumerate_partitions(n) {
                    let d = irrep_dimension(&mu);
                    let v = BigInt::from(irreducible_character_value(&mu, &Partition::ones(n)));
                    expect_eq(out, || format!("dim [{mu}]"), &v, &d);
                    sum += &d * &d;
                }
                expect_eq(out, || format!("sum dim^2 n={n}"), &sum, &factorial(n));
            }
        },
    );
    r.check(
        format!(
            "regular character decomposes with mult(mu) = dim(mu), n <= {}",
            dn.min(8)
        ),
        |out| {
            for n in 1..=dn.min(8) {
                match decompose(&ClassFunction::regular(n), CharacterKind::Genuine) {
                    Ok(d) => {
                        for mu in enumerate_partitions(n) {
                            expect_eq(
                                out,
                                || format!("n={n} [{mu}]"),
                                &d.multiplicity(&mu),
                                &irrep_dimension(&mu),
                            );
                        }
                    }
                    Err(e) => out.push(format!("n={n}: {e}")),
                }
            }
        },
    );
    r.check(
        format!("h_n^k and chi_n^k are genuine characters, n <= {dn}"),
        |out| {
            for n in 1..=dn {
                let t = BraidCharacters::new(n);
                for k in 0..=n {
                    let h = t.h_character(k);
                    match decompose(&h, CharacterKind::Genuine) {
                        Ok(d) if d.reconstruct() == h => {}
                        Ok(_) => out.push(format!("h_{n}^{k}: reconstruction differs")),
                        Err(e) => out.push(format!("h_{n}^{k}: {e}")),
                    }
                    if k < n {
                        if let Err(e) = decompose(&t.chi_character(k), CharacterKind::Genuine) {
                            out.push(format!("chi_{n}^{k}: {e}"));
                        }
                    }
                }
            }
        },
    );
    Ok(())
}

/// `h_n^k(λ) = 0` when every part of λ exceeds `2k` (for `k ≥ 1`; `h_n^0` is
/// the trivial character), and `h_n^{n-k}(λ) = 0` when λ has more than `k`
/// distinct part sizes.
pub fn support_violations(t: &BraidCharacters) -> Vec<String> {
    let n = t.n();
    let mut out = Vec::new();
    for l in t.partitions() {
        let smallest = *l.parts().last().expect("n >= 1") as usize;
        let distinct = l.distinct_part_count();
        for k in 0..=n {
            if k >= 1 && smallest > 2 * k && !t.h(k, l).is_zero() {
                out.push(format!(
                    "n={n} k={k} [{l}]: h = {}, expected 0 (all parts > 2k)",
                    t.h(k, l)
                ));
            }
            if distinct > k && !t.h(n - k, l).is_zero() {
                out.push(format!(
                    "n={n} k={} [{l}]: h = {}, expected 0 ({distinct} distinct parts > {k})",
                    n - k,
                    t.h(n - k, l)
                ));
            }
        }
    }
    out
}

fn support_suite(r: &mut Recorder, limits: &Limits) {
    let max_n = limits.max_n;
    r.check(format!("support: h_n^k (k >= 1) vanishes when all parts exceed 2k, and h_n^(n-k) vanishes beyond k distinct part sizes, n <= {max_n}"), |out| {
        for n in 1..=max_n {
            out.extend(support_violations(&BraidCharacters::new(n)));
        }
    });
}

fn regular_rep_suite(r: &mut Recorder, limits: &Limits) -> Result<()> {
    let dn = limits.max_decomposition_n;
    let tables_by_n: Vec<BraidCharacters> = (2..=dn).map(BraidCharacters::new).collect();
    r.check(
        format!("sum_k h_n^k sgn^k is the regular character, 2 <= n <= {dn}"),
        |out| {
            for t in &tables_by_n {
                let n = t.n();
                let reg = ClassFunction::regular(n);
                for l in t.partitions() {
                    let odd_neg = sign_character(l) < 0;
                    let s: BigInt = (0..=n)
                        .map(|k| {
                            if odd_neg && k % 2 == 1 {
                                -t.h(k, l)
                            } else {
                                t.h(k, l)
                            }
                        })
                        .sum();
                    expect_eq(out, || format!("n={n} [{l}]"), &s, &reg.integer_value(l));
                }
            }
        },
    );
    r.check(
        format!("nu*_(n,-1) is 1/2 on (1^n) and (1^(n-2) 2), 0 elsewhere, 2 <= n <= {dn}"),
        |out| {
            let half = BigRational::new(1.into(), 2.into());
            let minus_one = -BigRational::one();
            for n in 2..=dn {
                let id = Partition::ones(n);
                let transposition =
                    Partition::new([vec![2], vec![1; n - 2]].concat()).expect("valid");
                for l in enumerate_partitions(n) {
                    let v = splitting_coefficients(&l)
                        .value_at(&minus_one)
                        .expect("z nonzero");
                    let want = if l == id || l == transposition {
                        half.clone()
                    } else {
                        BigRational::zero()
                    };
                    expect_eq(out, || format!("n={n} [{l}]"), &v, &want);
                }
            }
        },
    );
    r.check(format!("theta = sum_k h_n^k equals z_lambda on (1^n) and (1^(n-2) 2), 0 elsewhere, 2 <= n <= {dn}"), |out| {
        for t in &tables_by_n {
            let n = t.n();
            let id = Partition::ones(n);
            let transposition = Partition::new([vec![2], vec![1; n - 2]].concat()).expect("valid");
            for l in t.partitions() {
                let theta: BigInt = (0..=n).map(|k| t.h(k, l)).sum();
                let want = if *l == id || *l == transposition {
                    class_data(l).centralizer_order
                } else {
                    BigInt::zero()
                };
                expect_eq(out, || format!("n={n} [{l}]"), &theta, &want);
            }
        }
    });
    r.check(
        format!("A_n tensor (1 + sgn) is the regular representation, 2 <= n <= {dn}"),
        |out| {
            for t in &tables_by_n {
                let n = t.n();
                let rho = ClassFunction::from_integers(n, |l| {
                    let chi: BigInt = (0..n).map(|k| t.chi(k, l)).sum();
                    chi * (1 + i32::from(sign_character(l)))
                });
                if rho != ClassFunction::regular(n) {
                    out.push(format!(
                        "n={n}: character differs from the regular character"
                    ));
                }
            }
        },
    );
    Ok(())
}

/// Labels of `pattern` padded to size `n`, or `None` if one does not fit.
pub fn instantiate(pattern: &[(Partition, BigInt)], n: usize) -> Option<Vec<(Partition, BigInt)>> {
    pattern
        .iter()
        .map(|(t, m)| t.pad_to(n).map(|mu| (mu, m.clone())))
        .collect()
}

fn matches_pattern(d: &IrrepDecomposition, pattern: &[(Partition, BigInt)]) -> bool {
    d.tails() == pattern
}

fn stability_suite(r: &mut Recorder, limits: &Limits) -> Result<()> {
    let dn = limits.max_decomposition_n;
    let a1 = tails_of(reference::A1_STABLE);
    let a2 = tails_of(reference::A2_STABLE);
    let chi1: Vec<_> = (3..=dn.max(4))
        .map(|n| {
            decompose(
                &BraidCharacters::new(n).chi_character(1),
                CharacterKind::Genuine,
            )
            .map(|d| (n, d))
        })
        .collect::<Result<_>>()?;
    let chi2: Vec<_> = (5..=dn.max(7))
        .map(|n| {
            decompose(
                &BraidCharacters::new(n).chi_character(2),
                CharacterKind::Genuine,
            )
            .map(|d| (n, d))
        })
        .collect::<Result<_>>()?;

    r.check(
        format!("A_n^1 = [n-1,1] + [n-2,2] for 4 <= n <= {}", dn.max(4)),
        |out| {
            for (n, d) in chi1.iter().filter(|(n, _)| *n >= 4) {
                if !matches_pattern(d, &a1) {
                    out.push(format!("n={n}: {d}, expected padded {}", render_tails(&a1)));
                }
            }
        },
    );
    r.check(
        "A_n^1 is not yet stable at n = 3 (sharp at 3k+1 = 4)",
        |out| {
            let (_, d3) = &chi1[0];
            if matches_pattern(d3, &a1) {
                out.push(format!("n=3: {d3} already matches the stable pattern"));
            }
        },
    );
    r.check(
        format!(
            "A_n^2 follows the stable pattern for 7 <= n <= {}",
            dn.max(7)
        ),
        |out| {
            for (n, d) in chi2.iter().filter(|(n, _)| *n >= 7) {
                if !matches_pattern(d, &a2) {
                    out.push(format!("n={n}: {d}, expected padded {}", render_tails(&a2)));
                }
                if let Some(inst) = instantiate(&a2, *n) {
                    let mut inst = inst;
                    inst.sort_by(|a, b| a.0.canonical_cmp(&b.0));
                    if inst != d.terms {
                        out.push(format!("n={n}: instantiated pattern differs from {d}"));
                    }
                }
            }
        },
    );
    r.check(
        "A_n^2 deviates from the stable pattern at n = 6 (sharp at 3k+1 = 7)",
        |out| {
            let (_, d6) = chi2.iter().find(|(n, _)| *n == 6).expect("n = 6 computed");
            if matches_pattern(d6, &a2) {
                out.push(format!("n=6: {d6} already matches the stable pattern"));
            }
            if instantiate(&a2, 6).is_some() {
                out.push("stable pattern unexpectedly instantiates at n=6".into());
            }
        },
    );
    Ok(())
}

fn oracle_suite(r: &mut Recorder, limits: &Limits) -> Result<()> {
    for &p in &limits.primes {
        let mut n = 1usize;
        let mut grid = Vec::new();
        while (p as u128).pow(n as u32) <= limits.oracle_budget as u128 {
            grid.push(n);
            n += 1;
        }
        let max = grid.last().copied().unwrap_or(0);
        r.check(format!("census over F_{p} equals N_lambda({p}) for 1 <= n <= {max}"), |out| {
            for &n in &grid {
                match census_vs_theory(p, n, limits.workers, limits.oracle_budget) {
                    Ok(rep) => {
                        for row in rep.rows.iter().filter(|row| !row.ok) {
                            out.push(format!(
                                "p={p} n={n} [{}]: census {}, N_lambda(p) = {}, measure gives {:?}",
                                row.partition,
                                row.count,
                                row.theory,
                                row.from_measure.as_ref().map(ToString::to_string)
                            ));
                        }
                        if rep.tally.total_squarefree != rep.expected_total {
                            out.push(format!(
                                "p={p} n={n}: {} square-free, expected {}",
                                rep.tally.total_squarefree, rep.expected_total
                            ));
                        }
                        if rep.tally.squarefree_disagreements != 0 {
                            out.push(format!(
                                "p={p} n={n}: gcd test and factorization disagree on {} polynomials",
                                rep.tally.squarefree_disagreements
                            ));
                        }
                    }
                    Err(e) => out.push(format!("p={p} n={n}: {e}")),
                }
            }
        });
    }
    Ok(())
}
