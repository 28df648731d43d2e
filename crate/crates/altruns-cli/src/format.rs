//! Output formats: csv, json, OEIS-style b-file, and human-readable pretty.
//!
//! All renderers are deterministic — identical inputs produce byte-identical
//! output. JSON values that fit in an `i64` are emitted as numbers; anything
//! larger becomes a decimal string, so consumers with 64-bit (or IEEE
//! double) number types never lose precision silently.

use altruns::report::Status;
use altruns::{IntPolynomial, TriangularTable, VerificationReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// The `--format` choices shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Comma-separated values, one triangle row (or coefficient list) per line
    Csv,
    /// JSON arrays; values beyond i64 range become decimal strings
    Json,
    /// OEIS b-file lines `i v`, 1-based running index
    Bfile,
    /// Human-readable text
    Pretty,
}

fn json_number(value: &BigInt) -> serde_json::Value {
    match value.to_i64() {
        Some(small) => serde_json::Value::from(small),
        None => serde_json::Value::String(value.to_string()),
    }
}

fn csv_row(values: &[BigInt]) -> String {
    values
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn bfile_lines<'a>(values: impl Iterator<Item = &'a BigInt>) -> String {
    let mut out = String::new();
    for (i, v) in values.enumerate() {
        out.push_str(&format!("{} {v}\n", i + 1));
    }
    out
}

/// Renders a triangle row by row.
pub fn render_table(table: &TriangularTable, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::new();
            for (_, row) in table.rows() {
                out.push_str(&csv_row(row));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<Vec<serde_json::Value>> = table
                .rows()
                .map(|(_, row)| row.iter().map(json_number).collect())
                .collect();
            let mut out = serde_json::to_string(&rows).expect("arrays always serialize");
            out.push('\n');
            out
        }
        Format::Bfile => bfile_lines(table.values()),
        Format::Pretty => {
            let mut out = String::new();
            for (n, row) in table.rows() {
                let cells = row.iter().map(BigInt::to_string).collect::<Vec<_>>();
                out.push_str(&format!("n={n}: {}\n", cells.join(" ")));
            }
            out
        }
    }
}

/// Renders one polynomial; csv/json/bfile list coefficients in ascending
/// powers (constant term first).
pub fn render_poly(poly: &IntPolynomial, var: &str, format: Format) -> String {
    let coeffs: &[BigInt] = poly.coeffs();
    match format {
        Format::Csv => {
            if coeffs.is_empty() {
                "0\n".to_string()
            } else {
                format!("{}\n", csv_row(coeffs))
            }
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = coeffs.iter().map(json_number).collect();
            let mut out = serde_json::to_string(&values).expect("arrays always serialize");
            out.push('\n');
            out
        }
        Format::Bfile => bfile_lines(coeffs.iter()),
        Format::Pretty => format!("{}\n", poly.pretty(var)),
    }
}

/// Renders a verification report (json and pretty only; the caller rejects
/// the other formats as usage errors).
pub fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(report).expect("report always serializes");
            out.push('\n');
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            for check in &report.checks {
                let verdict = match check.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                out.push_str(&format!(
                    "{verdict} {} ({}): {}\n",
                    check.name, check.range, check.detail
                ));
                if let Some(cell) = &check.first_failure {
                    out.push_str(&format!("     first failure at {cell}\n"));
                }
            }
            out.push_str(&format!(
                "overall: {}\n",
                if report.overall { "PASS" } else { "FAIL" }
            ));
            out
        }
        Format::Csv | Format::Bfile => {
            unreachable!("rejected as a usage error before rendering")
        }
    }
}

/// Parses b-file text back into its value sequence, enforcing the 1-based
/// consecutive index.
pub fn parse_bfile(text: &str) -> Result<Vec<BigInt>, String> {
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (index, value) = match (parts.next(), parts.next(), parts.next()) {
            (Some(i), Some(v), None) => (i, v),
            _ => return Err(format!("line {}: expected `index value`", line_no + 1)),
        };
        let index: usize = index
            .parse()
            .map_err(|_| format!("line {}: bad index {index:?}", line_no + 1))?;
        if index != values.len() + 1 {
            return Err(format!(
                "line {}: index {index} out of order (expected {})",
                line_no + 1,
                values.len() + 1
            ));
        }
        let value: BigInt = value
            .parse()
            .map_err(|_| format!("line {}: bad value {value:?}", line_no + 1))?;
        values.push(value);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use altruns::runs::r_table_recurrence;

    fn runs_table(n_max: usize) -> TriangularTable {
        r_table_recurrence(n_max).table().clone()
    }

    #[test]
    fn csv_is_one_row_per_line_without_header() {
        assert_eq!(
            render_table(&runs_table(5), Format::Csv),
            "2\n2,4\n2,12,10\n2,28,58,32\n"
        );
    }

    #[test]
    fn json_uses_numbers_within_i64_and_strings_beyond() {
        let small = TriangularTable::new(1, 1, vec![vec![BigInt::from(i64::MAX)]]);
        assert_eq!(
            render_table(&small, Format::Json),
            format!("[[{}]]\n", i64::MAX)
        );
        let big = TriangularTable::new(1, 1, vec![vec![BigInt::from(i64::MAX) + 1]]);
        assert_eq!(
            render_table(&big, Format::Json),
            format!("[[\"{}\"]]\n", BigInt::from(i64::MAX) + 1)
        );
    }

    #[test]
    fn bfile_round_trips_the_runs_triangle() {
        let table = runs_table(7);
        let text = render_bfile_and_check_shape(&table);
        let parsed = parse_bfile(&text).unwrap();
        let flattened: Vec<BigInt> = table.values().cloned().collect();
        assert_eq!(parsed, flattened);
    }

    fn render_bfile_and_check_shape(table: &TriangularTable) -> String {
        let text = render_table(table, Format::Bfile);
        assert!(text.starts_with("1 2\n"));
        assert!(text.ends_with('\n'));
        assert!(!text.contains(" \n"), "no trailing whitespace on lines");
        text
    }

    #[test]
    fn bfile_parser_rejects_malformed_input() {
        assert!(parse_bfile("1 2\n3 4\n").is_err(), "index gap");
        assert!(parse_bfile("1 2 3\n").is_err(), "extra field");
        assert!(parse_bfile("one 2\n").is_err(), "non-numeric index");
        assert!(parse_bfile("1 two\n").is_err(), "non-numeric value");
        assert_eq!(parse_bfile("").unwrap(), Vec::<BigInt>::new());
    }

    #[test]
    fn poly_renders_in_every_format() {
        let poly = IntPolynomial::from(vec![0, 2, 12, 10]);
        assert_eq!(render_poly(&poly, "x", Format::Pretty), "2x + 12x^2 + 10x^3\n");
        assert_eq!(render_poly(&poly, "x", Format::Csv), "0,2,12,10\n");
        assert_eq!(render_poly(&poly, "x", Format::Json), "[0,2,12,10]\n");
        assert_eq!(render_poly(&poly, "x", Format::Bfile), "1 0\n2 2\n3 12\n4 10\n");
    }

    #[test]
    fn pretty_table_labels_rows() {
        assert_eq!(
            render_table(&runs_table(4), Format::Pretty),
            "n=2: 2\nn=3: 2 4\nn=4: 2 12 10\n"
        );
    }
}
