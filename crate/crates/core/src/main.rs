use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use splitting_measures::characters::BraidCharacters;
use splitting_measures::ffield::{census_vs_theory, DEFAULT_BUDGET};
use splitting_measures::irreps::{decompose, CharacterKind};
use splitting_measures::measure::{measure_value, parse_rational};
use splitting_measures::poly::cycle_polynomial;
use splitting_measures::tables::{self, Format, TableName};
use splitting_measures::verify::{run_suite, Limits, SuiteName};
use splitting_measures::{b_character_signed, enumerate_partitions, Error, Partition};

#[derive(Parser)]
#[command(
    name = "splitmeas",
    version,
    about = "Splitting measures and pure braid group characters, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// H^k(P_n)
    H,
    /// A_n^k
    A,
    /// B_{n,m}
    B,
    /// B+_{n,m} - B-_{n,m}
    BSigned,
}

#[derive(Subcommand)]
enum Command {
    /// Laurent coefficients of the z-splitting measure, one row per partition.
    Measure {
        #[arg(long, required_unless_present = "lambda")]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        /// Evaluate at this rational z, e.g. -1 or 1/3.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Divide the value by the class size.
        #[arg(long, requires = "z")]
        per_element: bool,
    },
    /// Cycle polynomials N_lambda(z).
    CyclePoly {
        #[arg(long, required_unless_present = "lambda")]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Character table of h_n^k, rows are partitions, columns k = 0..n.
    Hchar {
        #[arg(long)]
        n: usize,
    },
    /// Character table of chi_n^k, columns k = 0..n-1.
    Achar {
        #[arg(long)]
        n: usize,
    },
    /// Irreducible decomposition of h_n^k, chi_n^k, or B_{n,m}.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value = "a")]
        which: Which,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Exhaustive census of square-free polynomials over F_p against N_lambda(p).
    Oracle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Emit one of the reference tables.
    Table {
        /// measures, betti, a-dims, h1-decomp or a2-decomp
        name: String,
        /// Largest n (the single n for `measures`).
        #[arg(long, alias = "n")]
        max_n: Option<usize>,
    },
    /// Run a verification suite: tables, identities, support, regular-rep,
    /// stability, oracle or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_decomposition_n: Option<usize>,
        /// Largest p^n visited by the oracle suite.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli, &mut out);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn partitions_for(n: Option<usize>, lambda: Option<&str>) -> Result<Vec<Partition>, Error> {
    match (lambda, n) {
        (Some(l), _) => {
            let l: Partition = l.parse()?;
            if l.is_empty() {
                return Err(Error::Usage("lambda must be nonempty".into()));
            }
            Ok(vec![l])
        }
        (None, Some(n)) if (1..=tables::MAX_CHARACTER_N).contains(&n) => {
            Ok(enumerate_partitions(n))
        }
        (None, Some(n)) => Err(Error::Usage(format!(
            "n = {n} outside 1..={}",
            tables::MAX_CHARACTER_N
        ))),
        (None, None) => Err(Error::Usage("give --n or --lambda".into())),
    }
}

fn check_n(n: usize) -> Result<(), Error> {
    if n == 0 || n > tables::MAX_CHARACTER_N {
        return Err(Error::Usage(format!(
            "n = {n} outside 1..={}",
            tables::MAX_CHARACTER_N
        )));
    }
    Ok(())
}

fn run(cli: Cli, out: &mut String) -> Result<Outcome, Error> {
    let format: Format = cli.format.into();
    match cli.command {
        Command::Measure {
            n,
            lambda,
            z,
            per_element,
        } => {
            let parts = partitions_for(n, lambda.as_deref())?;
            let z = z.as_deref().map(parse_rational).transpose()?;
            let mut rows = parts
                .iter()
                .map(|l| tables::measure_row(l, z.as_ref()))
                .collect::<Result<Vec<_>, _>>()?;
            if per_element {
                let z = z.as_ref().expect("clap enforces --z");
                for row in &mut rows {
                    row.value = Some(measure_value(&row.partition, z, true)?);
                }
            }
            let size = parts[0].n();
            write!(
                out,
                "{}",
                tables::render_measures(size, &rows, z.as_ref(), format)
            )
            .unwrap();
        }
        Command::CyclePoly { n, lambda } => {
            let parts = partitions_for(n, lambda.as_deref())?;
            let polys: Vec<_> = parts.iter().map(|l| (l, cycle_polynomial(l))).collect();
            match format {
                Format::Json => {
                    let rows: Vec<_> = polys
                        .iter()
                        .map(|(l, p)| json!({"partition": l.to_string(), "coeffs": p.to_json()}))
                        .collect();
                    write!(out, "{}", tables::pretty(&json!({"rows": rows}))).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "partition,coeffs").unwrap();
                    for (l, p) in &polys {
                        let c: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                        writeln!(out, "\"{l}\",{}", c.join(" ")).unwrap();
                    }
                }
                Format::Text => {
                    for (l, p) in &polys {
                        writeln!(out, "N_{}(z) = {p}", l.bracketed()).unwrap();
                    }
                }
            }
        }
        Command::Hchar { n } => {
            check_n(n)?;
            print_character_table(out, n, false, format);
        }
        Command::Achar { n } => {
            check_n(n)?;
            print_character_table(out, n, true, format);
        }
        Command::Decompose { n, k, which, m } => {
            if n == 0 || n > tables::MAX_DECOMPOSITION_N {
                return Err(Error::Usage(format!(
                    "n = {n} outside 1..={}",
                    tables::MAX_DECOMPOSITION_N
                )));
            }
            let t = BraidCharacters::new(n);
            let (name, f, kind) = match which {
                Which::H => {
                    if k > n {
                        return Err(Error::Usage(format!("k = {k} out of range for n = {n}")));
                    }
                    ("h", t.h_character(k), CharacterKind::Genuine)
                }
                Which::A => {
                    if k >= n {
                        return Err(Error::Usage(format!("k = {k} out of range for n = {n}")));
                    }
                    ("a", t.chi_character(k), CharacterKind::Genuine)
                }
                Which::B => {
                    let (p, q) = b_character_signed(n, m)?;
                    ("b", p.add(&q)?, CharacterKind::Genuine)
                }
                Which::BSigned => {
                    let (p, q) = b_character_signed(n, m)?;
                    ("b-signed", p.sub(&q)?, CharacterKind::Virtual)
                }
            };
            let d = decompose(&f, kind)?;
            match format {
                Format::Json => {
                    let mut o = json!({
                        "n": n,
                        "k": k,
                        "which": name,
                        "terms": tables::decomposition_json(&d),
                        "dimension": d.dimension().to_string(),
                    });
                    if matches!(which, Which::B | Which::BSigned) {
                        o["m"] = json!(m);
                    }
                    write!(out, "{}", tables::pretty(&o)).unwrap();
                }
                Format::Csv => {
                    writeln!(out, "partition,multiplicity").unwrap();
                    for (mu, mult) in &d.terms {
                        writeln!(out, "\"{mu}\",{mult}").unwrap();
                    }
                }
                Format::Text => {
                    writeln!(out, "{}", d.terms_string()).unwrap();
                    writeln!(out, "dimension {}", d.dimension()).unwrap();
                }
            }
        }
        Command::Oracle {
            p,
            n,
            workers,
            budget,
        } => {
            let report = census_vs_theory(p, n, workers, budget)?;
            match format {
                Format::Json => write!(out, "{}", tables::pretty(&report.to_json())).unwrap(),
                Format::Csv => {
                    writeln!(out, "partition,count,theory,ok").unwrap();
                    for r in &report.rows {
                        writeln!(out, "\"{}\",{},{},{}", r.partition, r.count, r.theory, r.ok)
                            .unwrap();
                    }
                }
                Format::Text => {
                    writeln!(out, "# square-free monic polynomials of degree {n} over F_{p} by factorization type").unwrap();
                    let mut table = vec![vec![
                        "lambda".to_string(),
                        "count".into(),
                        "N_lambda(p)".into(),
                        "ok".into(),
                    ]];
                    for r in &report.rows {
                        table.push(vec![
                            r.partition.bracketed(),
                            r.count.to_string(),
                            r.theory.to_string(),
                            if r.ok { "yes".into() } else { "NO".into() },
                        ]);
                    }
                    write!(out, "{}", tables::align(&table)).unwrap();
                    writeln!(
                        out,
                        "total {} (expected {}), gcd/factorization disagreements {}",
                        report.tally.total_squarefree,
                        report.expected_total,
                        report.tally.squarefree_disagreements
                    )
                    .unwrap();
                }
            }
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Table { name, max_n } => {
            let name: TableName = name.parse()?;
            let default = match name {
                TableName::Measures => 4,
                TableName::H1Decomp => 5,
                TableName::A2Decomp => 8,
                _ => 9,
            };
            write!(
                out,
                "{}",
                tables::emit_table(name, max_n.unwrap_or(default), format)?
            )
            .unwrap();
        }
        Command::Verify {
            suite,
            max_n,
            max_decomposition_n,
            budget,
            workers,
        } => {
            let suite: SuiteName = suite.parse()?;
            let mut limits = Limits {
                workers,
                ..Limits::default()
            };
            if let Some(n) = max_n {
                limits.max_n = n;
            }
            if let Some(n) = max_decomposition_n {
                limits.max_decomposition_n = n;
            }
            if let Some(b) = budget {
                limits.oracle_budget = b;
            }
            let reports = run_suite(suite, &limits)?;
            let mut ok = true;
            if format == Format::Json && reports.len() > 1 {
                let all: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| serde_json::from_str(&r.render(Format::Json)).expect("valid json"))
                    .collect();
                write!(out, "{}", tables::pretty(&serde_json::Value::Array(all))).unwrap();
                ok = reports.iter().all(|r| r.passed());
            } else {
                for (i, r) in reports.iter().enumerate() {
                    let mut s = r.render(format);
                    if format == Format::Csv && i > 0 {
                        s = s.lines().skip(1).map(|l| format!("{l}\n")).collect();
                    }
                    write!(out, "{s}").unwrap();
                    ok &= r.passed();
                }
            }
            if !ok {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn print_character_table(out: &mut String, n: usize, chi: bool, format: Format) {
    let t = BraidCharacters::new(n);
    let cols = if chi { n } else { n + 1 };
    let value = |k: usize, l: &Partition| if chi { t.chi(k, l) } else { t.h(k, l) };
    match format {
        Format::Json => {
            let rows: Vec<_> = t
                .partitions()
                .iter()
                .map(|l| {
                    let values: Vec<i64> = (0..cols)
                        .map(|k| {
                            i64::try_from(value(k, l))
                                .expect("character values fit in i64 for n <= 12")
                        })
                        .collect();
                    json!({"partition": l.to_string(), "values": values})
                })
                .collect();
            let o = json!({"n": n, "kind": if chi { "chi" } else { "h" }, "rows": rows});
            write!(out, "{}", tables::pretty(&o)).unwrap();
        }
        Format::Csv => {
            let header: Vec<String> = (0..cols).map(|k| format!("k{k}")).collect();
            writeln!(out, "partition,{}", header.join(",")).unwrap();
            for l in t.partitions() {
                let v: Vec<String> = (0..cols).map(|k| value(k, l).to_string()).collect();
                writeln!(out, "\"{l}\",{}", v.join(",")).unwrap();
            }
        }
        Format::Text => {
            let name = if chi { "chi" } else { "h" };
            writeln!(out, "# {name}_{n}^k ({})", tables::ORDER_NOTE).unwrap();
            let mut rows = vec![std::iter::once("lambda\\k".to_string())
                .chain((0..cols).map(|k| k.to_string()))
                .collect()];
            for l in t.partitions() {
                rows.push(
                    std::iter::once(l.bracketed())
                        .chain((0..cols).map(|k| value(k, l).to_string()))
                        .collect(),
                );
            }
            write!(out, "{}", tables::align(&rows)).unwrap();
        }
    }
}
