//! Coefficient tables in JSON, CSV and Markdown.
//!
//! Row and column orientation follows the printed tables: `C_{i,r}` has rows
//! `r` and columns `i`, the Gregory families rows `m` and columns `n`, and
//! the Stirling table rows `n` and columns `m`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{self, Rational};
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::gregory::{g1, generalized_gregory, generalized_gregory_poly, gtilde, lambda_polys};
use crate::index_sets::{c_ir, c_ir_poly};
use crate::poly::Poly;
use crate::stirling::stirling1_polynomial;
use crate::verify::{MAX_ORDER, MAX_R};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableName {
    Cir,
    Gmn,
    Gtilde,
    St1,
    G1,
    Gmna,
    Cira,
    Lambda,
}

impl TableName {
    pub const ALL: [TableName; 8] = [
        TableName::Cir,
        TableName::Gmn,
        TableName::Gtilde,
        TableName::St1,
        TableName::G1,
        TableName::Gmna,
        TableName::Cira,
        TableName::Lambda,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TableName::Cir => "cir",
            TableName::Gmn => "gmn",
            TableName::Gtilde => "gtilde",
            TableName::St1 => "st1",
            TableName::G1 => "g1",
            TableName::Gmna => "gmna",
            TableName::Cira => "cira",
            TableName::Lambda => "lambda",
        }
    }

    /// Last row and last column of the printed table.
    pub fn default_bounds(self) -> TableBounds {
        let (rows, cols) = match self {
            TableName::Cir => (7, 7),
            TableName::Gmn | TableName::G1 => (5, 6),
            TableName::Gtilde => (5, 6),
            TableName::St1 => (3, 4),
            TableName::Gmna => (2, 3),
            TableName::Cira => (3, 3),
            TableName::Lambda => (4, 1),
        };
        TableBounds { rows, cols }
    }

    fn limits(self) -> TableBounds {
        let (rows, cols) = match self {
            TableName::Cir => (MAX_R, MAX_R),
            TableName::Cira => (6, 6),
            TableName::Gmn | TableName::G1 | TableName::Gtilde => (MAX_ORDER, MAX_ORDER),
            TableName::Gmna => (8, 8),
            TableName::St1 => (MAX_ORDER, MAX_ORDER + 1),
            TableName::Lambda => (MAX_ORDER, 1),
        };
        TableBounds { rows, cols }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown table {s:?}")))
    }
}

/// Inclusive upper ends of the row and column indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableBounds {
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Number(Rational),
    Poly(Poly),
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Number(q) => write!(f, "{q}"),
            Entry::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Number(q) => arith::serde_rational::serialize(q, s),
            Entry::Poly(p) => p.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(String),
            Poly(Vec<String>),
        }
        match Raw::deserialize(d)? {
            Raw::Number(s) => arith::parse(&s)
                .map(Entry::Number)
                .map_err(D::Error::custom),
            Raw::Poly(v) => Poly::from_coeff_strings(Poly::DEFAULT_VAR, &v)
                .map(Entry::Poly)
                .map_err(D::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub name: TableName,
    pub title: String,
    /// Corner label, e.g. `r \ i`.
    pub corner: String,
    /// Polynomial variable, when entries are polynomials.
    pub variable: Option<char>,
    pub row_keys: Vec<String>,
    pub col_keys: Vec<String>,
    /// `None` marks a cell left blank in the printed layout.
    pub cells: Vec<Vec<Option<Entry>>>,
}

impl Table {
    pub fn get(&self, row: usize, col: usize) -> Option<&Entry> {
        self.cells.get(row)?.get(col)?.as_ref()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Table> {
        let mut t: Table = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(var) = t.variable {
            for cell in t.cells.iter_mut().flatten().flatten() {
                if let Entry::Poly(p) = cell {
                    *p = p.clone().with_variable(var);
                }
            }
        }
        Ok(t)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<&str> = std::iter::once(self.corner.as_str())
            .chain(self.col_keys.iter().map(String::as_str))
            .collect();
        writeln!(out, "{}", header.join(",")).unwrap();
        for (key, row) in self.row_keys.iter().zip(&self.cells) {
            let cells: Vec<String> = row.iter().map(cell_text).collect();
            writeln!(out, "{key},{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}\n", self.title).unwrap();
        writeln!(out, "| {} | {} |", self.corner, self.col_keys.join(" | ")).unwrap();
        writeln!(out, "|{}", "---|".repeat(self.col_keys.len() + 1)).unwrap();
        for (key, row) in self.row_keys.iter().zip(&self.cells) {
            let cells: Vec<String> = row.iter().map(cell_text).collect();
            writeln!(out, "| {key} | {} |", cells.join(" | ")).unwrap();
        }
        out
    }
}

fn cell_text(cell: &Option<Entry>) -> String {
    cell.as_ref().map(Entry::to_string).unwrap_or_default()
}

fn keys(range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|k| k.to_string()).collect()
}

/// Builds `name` up to `bounds` (or the printed extent when `None`).
pub fn build(name: TableName, bounds: Option<TableBounds>, bern: &BernoulliCache) -> Result<Table> {
    let b = bounds.unwrap_or_else(|| name.default_bounds());
    let lim = name.limits();
    if b.rows > lim.rows || b.cols > lim.cols {
        return Err(Error::Parameter(format!(
            "table {name} supports at most {} rows and {} columns, asked for {} x {}",
            lim.rows, lim.cols, b.rows, b.cols
        )));
    }
    let num = |q: &Rational| Some(Entry::Number(q.clone()));
    let poly = |p: Poly| Some(Entry::Poly(p));
    let t = |title: &str, corner: &str, variable, row_keys, col_keys, cells| Table {
        name,
        title: title.to_string(),
        corner: corner.to_string(),
        variable,
        row_keys,
        col_keys,
        cells,
    };
    let table = match name {
        TableName::Cir | TableName::Cira => {
            if b.rows == 0 || b.cols == 0 {
                return Err(Error::Parameter("C_{i,r} tables start at r = i = 1".into()));
            }
            let cells = (1..=b.rows)
                .map(|r| {
                    (1..=b.cols)
                        .map(|i| match (i <= r, name) {
                            (false, _) => None,
                            (true, TableName::Cir) => num(&c_ir(i, r, bern)),
                            (true, _) => poly(c_ir_poly(i, r, bern)),
                        })
                        .collect()
                })
                .collect();
            match name {
                TableName::Cir => t(
                    "C_{i,r}",
                    "r \\ i",
                    None,
                    keys(1..=b.rows),
                    keys(1..=b.cols),
                    cells,
                ),
                _ => t(
                    "C_{i,r}(a)",
                    "r \\ i",
                    Some('a'),
                    keys(1..=b.rows),
                    keys(1..=b.cols),
                    cells,
                ),
            }
        }
        TableName::Gmn | TableName::G1 => {
            let g = match name {
                TableName::Gmn => generalized_gregory(b.rows, b.cols),
                _ => g1(b.rows, b.cols),
            };
            let cells = g
                .rows()
                .iter()
                .map(|row| row.iter().map(num).collect())
                .collect();
            let title = if name == TableName::Gmn {
                "G_{m,n}"
            } else {
                "G^(1)_{m,n}"
            };
            t(
                title,
                "m \\ n",
                None,
                keys(0..=b.rows),
                keys(0..=b.cols),
                cells,
            )
        }
        TableName::Gtilde => {
            if b.rows == 0 || b.cols == 0 {
                return Err(Error::Parameter("Gtilde tables start at m = n = 1".into()));
            }
            let g = gtilde(b.rows, b.cols);
            let cells = g
                .rows()
                .iter()
                .map(|row| row.iter().map(num).collect())
                .collect();
            t(
                "Gtilde_{m,n}",
                "m \\ n",
                None,
                keys(1..=b.rows),
                keys(1..=b.cols),
                cells,
            )
        }
        TableName::Gmna => {
            let g = generalized_gregory_poly(b.rows, b.cols);
            let cells = g
                .rows()
                .iter()
                .map(|row| row.iter().cloned().map(poly).collect())
                .collect();
            t(
                "G_{m,n}(a)",
                "m \\ n",
                Some('a'),
                keys(0..=b.rows),
                keys(0..=b.cols),
                cells,
            )
        }
        TableName::St1 => {
            let cells = (0..=b.rows)
                .map(|n| {
                    (0..=b.cols)
                        .map(|m| poly(stirling1_polynomial(n, m)))
                        .collect()
                })
                .collect();
            t(
                "[n; m]_x",
                "n \\ m",
                Some('x'),
                keys(0..=b.rows),
                keys(0..=b.cols),
                cells,
            )
        }
        TableName::Lambda => {
            if b.rows == 0 || b.cols != 1 {
                return Err(Error::Parameter(
                    "lambda table has rows n >= 1 and one column".into(),
                ));
            }
            let cells = lambda_polys(b.rows)
                .into_iter()
                .map(|p| vec![poly(p)])
                .collect();
            t(
                "lambda_n(a)",
                "n",
                Some('a'),
                keys(1..=b.rows),
                vec!["lambda_n(a)".into()],
                cells,
            )
        }
    };
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn default_cir_shape() {
        let t = build(TableName::Cir, None, BernoulliCache::global()).unwrap();
        assert_eq!(t.row_keys.len(), 7);
        assert_eq!(t.cells.iter().flatten().filter(|c| c.is_some()).count(), 28);
        assert_eq!(t.get(0, 0), Some(&Entry::Number(rat(-1, 2))));
        assert_eq!(t.get(0, 1), None);
        assert_eq!(t.get(5, 3), Some(&Entry::Number(rat(211, 30240))));
    }

    #[test]
    fn json_round_trip_every_table() {
        let bern = BernoulliCache::global();
        for name in TableName::ALL {
            let t = build(name, None, bern).unwrap();
            let json = t.to_json();
            assert_eq!(Table::from_json(&json).unwrap(), t, "{name}");
            assert_eq!(
                build(name, None, bern).unwrap().to_json(),
                json,
                "{name} not deterministic"
            );
        }
    }

    #[test]
    fn text_formats() {
        let t = build(
            TableName::Cira,
            Some(TableBounds { rows: 2, cols: 2 }),
            BernoulliCache::global(),
        )
        .unwrap();
        assert_eq!(
            t.to_csv(),
            "r \\ i,1,2\n1,-a + 1/2,\n2,3/2*a^2 - 3/2*a + 1/3,1/2*a^2 - 1/2*a + 1/12\n"
        );
        let md = t.to_markdown();
        assert!(
            md.contains("| r \\ i | 1 | 2 |\n|---|---|---|\n| 1 | -a + 1/2 |  |\n"),
            "{md}"
        );
    }

    #[test]
    fn bounds_are_checked() {
        let bern = BernoulliCache::global();
        assert!(build(TableName::Cir, Some(TableBounds { rows: 9, cols: 9 }), bern).is_err());
        assert!(build(
            TableName::Gtilde,
            Some(TableBounds { rows: 0, cols: 3 }),
            bern
        )
        .is_err());
        assert!("nope".parse::<TableName>().is_err());
    }
}
