//! Table emitters in text, CSV and JSON, plus the reference values
//! the emitters are checked against.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::characters::BraidCharacters;
use crate::error::{Error, Result};
use crate::irreps::{decompose, CharacterKind, IrrepDecomposition};
use crate::measure::splitting_coefficients;
use crate::partition::{class_data, enumerate_partitions, Partition};

/// Largest `n` for measure and character tables.
pub const MAX_CHARACTER_N: usize = 12;
/// Largest `n` for tables that need irreducible decompositions.
pub const MAX_DECOMPOSITION_N: usize = 9;

pub const ORDER_NOTE: &str = "partitions in reverse lexicographic order";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Usage(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    Measures,
    Betti,
    ADims,
    H1Decomp,
    A2Decomp,
}

impl FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "measures" => Ok(TableName::Measures),
            "betti" => Ok(TableName::Betti),
            "a-dims" => Ok(TableName::ADims),
            "h1-decomp" => Ok(TableName::H1Decomp),
            "a2-decomp" => Ok(TableName::A2Decomp),
            other => Err(Error::Usage(format!("unknown table {other:?}"))),
        }
    }
}

/// One row of a splitting-measure listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureRow {
    pub partition: Partition,
    pub class_size: BigInt,
    pub centralizer: BigInt,
    pub alpha: Vec<BigRational>,
    pub value: Option<BigRational>,
}

impl MeasureRow {
    /// `1/24 (1 - 5/z + 6/z^2)`: the measure with `1/z_λ` factored out.
    pub fn laurent_string(&self) -> String {
        let z = BigRational::from_integer(self.centralizer.clone());
        let mut body = String::new();
        for (k, a) in self.alpha.iter().enumerate() {
            let c = (a * &z).to_integer();
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if body.is_empty() {
                if c.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match k {
                0 => body.push_str(&mag.to_string()),
                1 => write!(body, "{mag}/z").unwrap(),
                _ => write!(body, "{mag}/z^{k}").unwrap(),
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if self.centralizer == BigInt::from(1) {
            body
        } else {
            format!("1/{} ({body})", self.centralizer)
        }
    }
}

pub fn measure_rows(n: usize, z: Option<&BigRational>) -> Result<Vec<MeasureRow>> {
    if n == 0 || n > MAX_CHARACTER_N {
        return Err(Error::Usage(format!(
            "n = {n} outside 1..={MAX_CHARACTER_N}"
        )));
    }
    enumerate_partitions(n)
        .into_iter()
        .map(|lambda| measure_row(&lambda, z))
        .collect()
}

pub fn measure_row(lambda: &Partition, z: Option<&BigRational>) -> Result<MeasureRow> {
    let m = splitting_coefficients(lambda);
    let cd = class_data(lambda);
    let value = z.map(|z| m.value_at(z)).transpose()?;
    Ok(MeasureRow {
        partition: lambda.clone(),
        class_size: cd.class_size,
        centralizer: cd.centralizer_order,
        alpha: m.alpha,
        value,
    })
}

fn rational_list(v: &[BigRational]) -> Vec<String> {
    v.iter().map(|a| a.to_string()).collect()
}

pub fn render_measures(
    n: usize,
    rows: &[MeasureRow],
    z: Option<&BigRational>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut o = json!({
                        "partition": r.partition.to_string(),
                        "class_size": r.class_size.to_string(),
                        "centralizer": r.centralizer.to_string(),
                        "alpha": rational_list(&r.alpha),
                    });
                    if let Some(v) = &r.value {
                        o["value"] = json!(v.to_string());
                    }
                    o
                })
                .collect();
            let mut o = json!({"table": "measures", "n": n, "order": ORDER_NOTE, "rows": rows});
            if let Some(z) = z {
                o["z"] = json!(z.to_string());
            }
            pretty(&o)
        }
        Format::Csv => {
            let mut out = String::from("partition,class_size,centralizer,alpha");
            if z.is_some() {
                out.push_str(",value");
            }
            out.push('\n');
            for r in rows {
                write!(
                    out,
                    "\"{}\",{},{},{}",
                    r.partition,
                    r.class_size,
                    r.centralizer,
                    rational_list(&r.alpha).join(" ")
                )
                .unwrap();
                if let Some(v) = &r.value {
                    write!(out, ",{v}").unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = format!("# z-splitting measures, n = {n} ({ORDER_NOTE})\n");
            let mut table = vec![{
                let mut h = vec![
                    "lambda".to_string(),
                    "|C|".into(),
                    "z".into(),
                    "nu*(C)".into(),
                ];
                if let Some(z) = z {
                    h.push(format!("value at z={z}"));
                }
                h
            }];
            for r in rows {
                let mut line = vec![
                    r.partition.bracketed(),
                    r.class_size.to_string(),
                    r.centralizer.to_string(),
                    r.laurent_string(),
                ];
                if let Some(v) = &r.value {
                    line.push(v.to_string());
                }
                table.push(line);
            }
            out.push_str(&align(&table));
            out
        }
    }
}

/// Rows `n = 1..=max_n` of `h_n^k((1^n))` (`betti`) or `χ_n^k((1^n))`.
pub fn dimension_triangle(max_n: usize, chi: bool) -> Vec<Vec<BigInt>> {
    let cols = if chi {
        max_n.saturating_sub(1).max(1)
    } else {
        max_n
    };
    (1..=max_n)
        .map(|n| {
            let t = BraidCharacters::new(n);
            let id = Partition::ones(n);
            (0..cols)
                .map(|k| match (chi, k) {
                    (false, k) if k <= n => t.h(k, &id),
                    (true, k) if k < n => t.chi(k, &id),
                    _ => BigInt::zero(),
                })
                .collect()
        })
        .collect()
}

fn render_triangle(name: &str, title: &str, rows: &[Vec<BigInt>], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    json!({"n": i + 1, "values": r.iter().map(|v| v.to_string()).collect::<Vec<_>>()})
                })
                .collect();
            pretty(&json!({"table": name, "rows": rows}))
        }
        Format::Csv => {
            let cols = rows.first().map_or(0, Vec::len);
            let mut out = String::from("n");
            for k in 0..cols {
                write!(out, ",k{k}").unwrap();
            }
            out.push('\n');
            for (i, r) in rows.iter().enumerate() {
                write!(out, "{}", i + 1).unwrap();
                for v in r {
                    write!(out, ",{v}").unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let cols = rows.first().map_or(0, Vec::len);
            let mut table = vec![std::iter::once("n\\k".to_string())
                .chain((0..cols).map(|k| k.to_string()))
                .collect::<Vec<_>>()];
            for (i, r) in rows.iter().enumerate() {
                table.push(
                    std::iter::once((i + 1).to_string())
                        .chain(r.iter().map(|v| v.to_string()))
                        .collect(),
                );
            }
            format!("# {title}\n{}", align(&table))
        }
    }
}

/// `(n, H^1 decomposition, A_n^1 decomposition)` for `2 ≤ n ≤ max_n`.
pub fn h1_decompositions(
    max_n: usize,
) -> Result<Vec<(usize, IrrepDecomposition, IrrepDecomposition)>> {
    (2..=max_n)
        .map(|n| {
            let t = BraidCharacters::new(n);
            let h = decompose(&t.h_character(1), CharacterKind::Genuine)?;
            let a = decompose(&t.chi_character(1), CharacterKind::Genuine)?;
            Ok((n, h, a))
        })
        .collect()
}

/// `(n, A_n^2 decomposition)` for `3 ≤ n ≤ max_n`.
pub fn a2_decompositions(max_n: usize) -> Result<Vec<(usize, IrrepDecomposition)>> {
    (3..=max_n)
        .map(|n| {
            let t = BraidCharacters::new(n);
            Ok((n, decompose(&t.chi_character(2), CharacterKind::Genuine)?))
        })
        .collect()
}

pub fn decomposition_json(d: &IrrepDecomposition) -> Value {
    Value::Array(
        d.terms
            .iter()
            .map(|(mu, m)| json!({"partition": mu.to_string(), "multiplicity": m.to_string()}))
            .collect(),
    )
}

/// Renders one of the named tables for `n` up to `max_n` (`measures` uses
/// `max_n` as its single `n`).
pub fn emit_table(name: TableName, max_n: usize, format: Format) -> Result<String> {
    let limit = match name {
        TableName::Measures | TableName::Betti | TableName::ADims => MAX_CHARACTER_N,
        TableName::H1Decomp | TableName::A2Decomp => MAX_DECOMPOSITION_N,
    };
    let min = match name {
        TableName::H1Decomp => 2,
        TableName::A2Decomp => 3,
        _ => 1,
    };
    if max_n < min || max_n > limit {
        return Err(Error::Usage(format!(
            "n = {max_n} outside {min}..={limit} for this table"
        )));
    }
    Ok(match name {
        TableName::Measures => render_measures(max_n, &measure_rows(max_n, None)?, None, format),
        TableName::Betti => render_triangle(
            "betti",
            "dim H^k(P_n, Q)",
            &dimension_triangle(max_n, false),
            format,
        ),
        TableName::ADims => render_triangle(
            "a-dims",
            "dim A_n^k",
            &dimension_triangle(max_n, true),
            format,
        ),
        TableName::H1Decomp => {
            let rows = h1_decompositions(max_n)?;
            match format {
                Format::Json => pretty(&json!({
                    "table": "h1-decomp",
                    "rows": rows.iter().map(|(n, h, a)| json!({
                        "n": n,
                        "dim_h1": h.dimension().to_string(),
                        "h1": decomposition_json(h),
                        "dim_a1": a.dimension().to_string(),
                        "a1": decomposition_json(a),
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("n,dim_h1,h1,dim_a1,a1\n");
                    for (n, h, a) in &rows {
                        writeln!(
                            out,
                            "{n},{},\"{h}\",{},\"{a}\"",
                            h.dimension(),
                            a.dimension()
                        )
                        .unwrap();
                    }
                    out
                }
                Format::Text => {
                    let mut table = vec![vec![
                        "n".into(),
                        "dim H^1".into(),
                        "H^1".into(),
                        "dim A^1".into(),
                        "A^1".into(),
                    ]];
                    for (n, h, a) in &rows {
                        table.push(vec![
                            n.to_string(),
                            h.dimension().to_string(),
                            h.to_string(),
                            a.dimension().to_string(),
                            a.to_string(),
                        ]);
                    }
                    format!(
                        "# irreducible decompositions of H^1(P_n) and A_n^1\n{}",
                        align(&table)
                    )
                }
            }
        }
        TableName::A2Decomp => {
            let rows = a2_decompositions(max_n)?;
            match format {
                Format::Json => pretty(&json!({
                    "table": "a2-decomp",
                    "rows": rows.iter().map(|(n, a)| json!({
                        "n": n,
                        "dim_a2": a.dimension().to_string(),
                        "a2": decomposition_json(a),
                    })).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut out = String::from("n,dim_a2,a2\n");
                    for (n, a) in &rows {
                        writeln!(out, "{n},{},\"{a}\"", a.dimension()).unwrap();
                    }
                    out
                }
                Format::Text => {
                    let mut table = vec![vec!["n".into(), "dim A^2".into(), "A^2".into()]];
                    for (n, a) in &rows {
                        table.push(vec![
                            n.to_string(),
                            a.dimension().to_string(),
                            a.to_string(),
                        ]);
                    }
                    format!("# irreducible decompositions of A_n^2\n{}", align(&table))
                }
            }
        }
    })
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Reference values of the splitting-measure tables and the braid group
/// cohomology tables.
pub mod reference {
    /// `(λ, |C_λ|, z_λ, z_λ·α^k for k = 0..)` for `n = 4`.
    pub const MEASURES_4: &[(&str, u64, u64, &[i64])] = &[
        ("1,1,1,1", 1, 24, &[1, -5, 6]),
        ("2,1,1", 6, 4, &[1, -1]),
        ("2,2", 3, 8, &[1, -1, -2]),
        ("3,1", 8, 3, &[1, 1]),
        ("4", 6, 4, &[1, 1]),
    ];

    /// Same layout for `n = 5`.
    pub const MEASURES_5: &[(&str, u64, u64, &[i64])] = &[
        ("1,1,1,1,1", 1, 120, &[1, -9, 26, -24]),
        ("2,1,1,1", 10, 12, &[1, -3, 2]),
        ("2,2,1", 15, 8, &[1, -1, -2]),
        ("3,1,1", 20, 6, &[1, 0, -1]),
        ("3,2", 20, 6, &[1, 0, -1]),
        ("4,1", 30, 4, &[1, 1]),
        ("5", 24, 5, &[1, 1, 1, 1]),
    ];

    /// `dim H^k(P_n)` for `n = 1..=9`, `k = 0..=8`.
    pub const BETTI: [[u64; 9]; 9] = [
        [1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0, 0, 0],
        [1, 3, 2, 0, 0, 0, 0, 0, 0],
        [1, 6, 11, 6, 0, 0, 0, 0, 0],
        [1, 10, 35, 50, 24, 0, 0, 0, 0],
        [1, 15, 85, 225, 274, 120, 0, 0, 0],
        [1, 21, 175, 735, 1624, 1764, 720, 0, 0],
        [1, 28, 322, 1960, 6769, 13132, 13068, 5040, 0],
        [1, 36, 546, 4536, 22449, 67284, 118124, 109584, 40320],
    ];

    /// `dim A_n^k` for `n = 1..=9`, `k = 0..=7`.
    pub const A_DIMS: [[u64; 8]; 9] = [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [1, 2, 0, 0, 0, 0, 0, 0],
        [1, 5, 6, 0, 0, 0, 0, 0],
        [1, 9, 26, 24, 0, 0, 0, 0],
        [1, 14, 71, 154, 120, 0, 0, 0],
        [1, 20, 155, 580, 1044, 720, 0, 0],
        [1, 27, 295, 1665, 5104, 8028, 5040, 0],
        [1, 35, 511, 4025, 18424, 48860, 69264, 40320],
    ];

    /// `(n, dim H^1, H^1, dim A^1, A^1)`.
    pub const H1_DECOMP: &[(usize, u64, &str, u64, &str)] = &[
        (2, 1, "[2]", 0, "0"),
        (3, 3, "[3] ⊕ [2,1]", 2, "[2,1]"),
        (4, 6, "[4] ⊕ [3,1] ⊕ [2,2]", 5, "[3,1] ⊕ [2,2]"),
        (5, 10, "[5] ⊕ [4,1] ⊕ [3,2]", 9, "[4,1] ⊕ [3,2]"),
    ];

    /// Stable pattern of `H^1` for `n ≥ 4`, as (first-row-removed label, multiplicity).
    pub const H1_STABLE: &[(&str, i64)] = &[("", 1), ("1", 1), ("2", 1)];
    /// Stable pattern of `A_n^1` for `n ≥ 4`.
    pub const A1_STABLE: &[(&str, i64)] = &[("1", 1), ("2", 1)];

    /// `(n, dim A^2, A^2)`.
    pub const A2_DECOMP: &[(usize, u64, &str)] = &[
        (3, 0, "0"),
        (4, 6, "[3,1] ⊕ [2,1,1]"),
        (5, 26, "[4,1] ⊕ [3,2] ⊕ 2[3,1,1] ⊕ [2,2,1]"),
        (6, 71, "[5,1] ⊕ [4,2] ⊕ 2[4,1,1] ⊕ [3,3] ⊕ 2[3,2,1]"),
        (
            7,
            155,
            "[6,1] ⊕ [5,2] ⊕ 2[5,1,1] ⊕ [4,3] ⊕ 2[4,2,1] ⊕ [3,3,1]",
        ),
        (
            8,
            295,
            "[7,1] ⊕ [6,2] ⊕ 2[6,1,1] ⊕ [5,3] ⊕ 2[5,2,1] ⊕ [4,3,1]",
        ),
    ];

    /// Stable pattern of `A_n^2` for `n ≥ 7`.
    pub const A2_STABLE: &[(&str, i64)] = &[
        ("1", 1),
        ("2", 1),
        ("1,1", 2),
        ("3", 1),
        ("2,1", 2),
        ("3,1", 1),
    ];
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measures_text_row() {
        let rows = measure_rows(4, None).unwrap();
        let strings: Vec<String> = rows.iter().map(MeasureRow::laurent_string).collect();
        assert_eq!(
            strings,
            [
                "1/4 (1 + 1/z)",
                "1/3 (1 + 1/z)",
                "1/8 (1 - 1/z - 2/z^2)",
                "1/4 (1 - 1/z)",
                "1/24 (1 - 5/z + 6/z^2)"
            ]
        );
        assert_eq!(measure_rows(1, None).unwrap()[0].laurent_string(), "1");
    }

    #[test]
    fn betti_row_nine() {
        let t = dimension_triangle(9, false);
        let row: Vec<String> = t[8].iter().map(|v| v.to_string()).collect();
        assert_eq!(
            row,
            ["1", "36", "546", "4536", "22449", "67284", "118124", "109584", "40320"]
        );
        let a = dimension_triangle(9, true);
        let row: Vec<String> = a[8].iter().map(|v| v.to_string()).collect();
        assert_eq!(
            row,
            ["1", "35", "511", "4025", "18424", "48860", "69264", "40320"]
        );
    }

    #[test]
    fn range_limits() {
        assert!(emit_table(TableName::Betti, 13, Format::Text).is_err());
        assert!(emit_table(TableName::A2Decomp, 10, Format::Text).is_err());
        assert!(emit_table(TableName::A2Decomp, 2, Format::Text).is_err());
        assert!(emit_table(TableName::Measures, 0, Format::Json).is_err());
    }

    #[test]
    fn text_table_lists_every_row() {
        let s = emit_table(TableName::Measures, 5, Format::Text).unwrap();
        assert!(s.starts_with("# z-splitting measures, n = 5"));
        assert!(s.contains("24   5    1/5 (1 + 1/z + 1/z^2 + 1/z^3)"), "{s}");
        assert_eq!(s.lines().count(), 1 + 1 + 7);
    }

    #[test]
    fn json_outputs_parse() {
        for name in [
            TableName::Measures,
            TableName::Betti,
            TableName::ADims,
            TableName::H1Decomp,
            TableName::A2Decomp,
        ] {
            let s = emit_table(name, 5, Format::Json).unwrap();
            let v: Value = serde_json::from_str(&s).unwrap();
            assert!(v["rows"].is_array());
        }
    }
}
