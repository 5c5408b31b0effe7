//! The three reference tables: `H_n(B_{2k}((1+x)/2))` for `n = 1, 2, 3` and
//! the `x^k` coefficients of `H_2(alpha_k(x))` and `H_2(alpha~_k(x))` for
//! generic `alpha_k`. Golden copies live in `fixtures/`.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::bernoulli::even_half_seq;
use crate::error::{Error, Result};
use crate::hankel::hankel_det;
use crate::poly::MultiPoly;
use crate::qtransforms::{coefficient_rows, Transform};
use crate::report::VerifyReport;

/// Order of the generic determinants in tables 2 and 3.
pub const GENERIC_ORDER: usize = 2;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub row: String,
    /// Determinant order the row belongs to.
    #[serde(skip)]
    pub n: usize,
    #[serde(skip)]
    pub value: MultiPoly,
    #[serde(rename = "value")]
    pub text: String,
}

fn row(label: String, n: usize, value: MultiPoly) -> TableRow {
    TableRow {
        row: label,
        n,
        text: value.to_string(),
        value,
    }
}

fn check_which(which: u8) -> Result<()> {
    if (1..=3).contains(&which) {
        Ok(())
    } else {
        Err(Error::DomainError(format!(
            "no table {which}; tables are 1, 2, 3"
        )))
    }
}

pub fn title(which: u8) -> &'static str {
    match which {
        1 => "H_n(B_2k((1+x)/2))",
        2 => "[x^k] H_2(alpha_k(x))",
        _ => "[x^k] H_2(alpha~_k(x))",
    }
}

/// Rows of the table; only rows whose order is at most `max_n` are built.
pub fn table_rows_upto(which: u8, max_n: usize) -> Result<Vec<TableRow>> {
    check_which(which)?;
    match which {
        1 => (1..=3.min(max_n))
            .map(|n| Ok(row(format!("n={n}"), n, hankel_det(&even_half_seq(), n)?)))
            .collect(),
        _ if max_n < GENERIC_ORDER => Ok(Vec::new()),
        _ => {
            let kind = if which == 2 {
                Transform::Plain
            } else {
                Transform::Tilde
            };
            Ok(coefficient_rows(kind, GENERIC_ORDER)?
                .into_iter()
                .map(|(k, c)| row(format!("x^{k}"), GENERIC_ORDER, c))
                .collect())
        }
    }
}

pub fn table_rows(which: u8) -> Result<Vec<TableRow>> {
    table_rows_upto(which, usize::MAX)
}

/// Canonical text form, identical to the golden fixture files.
pub fn render_text(which: u8, rows: &[TableRow]) -> String {
    let mut out = format!("# table {which}: {}\n", title(which));
    for r in rows {
        let _ = writeln!(out, "{}: {}", r.row, r.text);
    }
    out
}

/// Serializable form of a rendered table.
#[derive(Clone, Debug, Serialize)]
pub struct TableDoc {
    pub table: u8,
    pub title: &'static str,
    pub rows: Vec<TableRow>,
}

pub fn table_doc(which: u8, rows: &[TableRow]) -> TableDoc {
    TableDoc {
        table: which,
        title: title(which),
        rows: rows.to_vec(),
    }
}

/// A `tabular` in the reference typesetting.
pub fn render_latex(which: u8, rows: &[TableRow]) -> String {
    let head = if which == 1 { "n" } else { "k" };
    let mut out = String::from("\\begin{tabular}{|c|l|}\n\\hline\n");
    let _ = writeln!(out, "${head}$ & ${}$ \\\\\n\\hline", latex_title(which));
    for r in rows {
        let label = r.row.split(['=', '^']).nth(1).unwrap_or(&r.row);
        let _ = writeln!(out, "${label}$ & ${}$ \\\\", r.value.to_latex());
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

fn latex_title(which: u8) -> &'static str {
    match which {
        1 => "H_n\\left(B_{2k}\\left(\\frac{1+x}{2}\\right)\\right)",
        2 => "[x^k]\\,H_2(\\alpha_k(x))",
        _ => "[x^k]\\,H_2(\\widetilde{\\alpha}_k(x))",
    }
}

/// Golden rows `(label, canonical value)` for each table.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixtures {
    tables: [Vec<(String, String)>; 3],
}

const BUILTIN: [&str; 3] = [
    include_str!("../fixtures/table1.txt"),
    include_str!("../fixtures/table2.txt"),
    include_str!("../fixtures/table3.txt"),
];

fn parse_fixture(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once(": ") {
            Some((k, v)) => (k.trim().to_string(), v.trim().to_string()),
            None => (l.trim().to_string(), String::new()),
        })
        .collect()
}

impl Fixtures {
    pub fn builtin() -> Self {
        Fixtures {
            tables: BUILTIN.map(parse_fixture),
        }
    }

    /// Reads `table1.txt`, `table2.txt` and `table3.txt` from `dir`.
    pub fn load(dir: &Path) -> Result<Self> {
        let read = |i: usize| {
            let path = dir.join(format!("table{i}.txt"));
            std::fs::read_to_string(&path)
                .map(|t| parse_fixture(&t))
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
        };
        Ok(Fixtures {
            tables: [read(1)?, read(2)?, read(3)?],
        })
    }

    pub fn rows(&self, which: u8) -> &[(String, String)] {
        &self.tables[which as usize - 1]
    }
}

/// Every computed row against its golden value, plus a row-set check.
pub fn check_table(which: u8, fixtures: &Fixtures, max_n: usize) -> Vec<VerifyReport> {
    let id = format!("table-{which}");
    let rows = match table_rows_upto(which, max_n) {
        Ok(r) => r,
        Err(e) => return vec![VerifyReport::error(&id, 0, e)],
    };
    let golden = fixtures.rows(which);
    let mut out: Vec<VerifyReport> = rows
        .iter()
        .map(|r| {
            let expected = golden
                .iter()
                .find(|(k, _)| *k == r.row)
                .map_or("<missing>", |(_, v)| v.as_str());
            VerifyReport::compare(&format!("{id}.row"), r.n, &r.text, expected)
                .with_param("row", &r.row)
        })
        .collect();
    let top = if which == 1 { 3 } else { GENERIC_ORDER };
    if max_n >= top {
        let computed: Vec<&str> = rows.iter().map(|r| r.row.as_str()).collect();
        let expected: Vec<&str> = golden.iter().map(|(k, _)| k.as_str()).collect();
        out.push(VerifyReport::compare(
            &format!("{id}.rows"),
            rows.iter().map(|r| r.n).max().unwrap_or(0),
            computed.join(","),
            expected.join(","),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn builtin_fixtures_match() {
        let fx = Fixtures::builtin();
        for which in 1..=3 {
            for r in check_table(which, &fx, 3) {
                assert!(r.pass, "{}", r.line());
            }
        }
    }

    #[test]
    fn fixture_files_are_rendered_text() {
        for which in 1..=3u8 {
            let rows = table_rows(which).unwrap();
            assert_eq!(render_text(which, &rows), BUILTIN[which as usize - 1]);
        }
    }

    #[test]
    fn corrupted_row_fails() {
        let mut fx = Fixtures::builtin();
        fx.tables[0][0].1 = "-1/12*x^2 + 1/46".into();
        let reports = check_table(1, &fx, 3);
        assert!(!reports[0].pass);
        assert!(reports[1..].iter().all(|r| r.pass));
        fx.tables[1].pop();
        assert!(check_table(2, &fx, 3).iter().any(|r| !r.pass));
    }

    #[test]
    fn capped_rows() {
        assert!(table_rows_upto(1, 0).unwrap().is_empty());
        assert_eq!(table_rows_upto(1, 2).unwrap().len(), 2);
        assert!(table_rows_upto(2, 1).unwrap().is_empty());
        assert!(table_rows(4).is_err());
    }

    #[test]
    fn latex_rows() {
        let rows = table_rows(1).unwrap();
        let tex = render_latex(1, &rows[..1]);
        assert!(tex.contains(&format!(
            "$1$ & ${}$",
            parse_poly("-x^2/12 + 1/45").unwrap().to_latex()
        )));
    }
}
