//! CSV and JSON renderings of count tables, and parsers for both.

use std::collections::BTreeMap;
use std::str::FromStr;

use polygram_core::{BigCount, CountTable};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A table as written to or read from disk, with its footnotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub name: String,
    pub params: BTreeMap<String, u64>,
    pub row_axes: Vec<String>,
    pub col_axis: String,
    pub row_keys: Vec<Vec<u64>>,
    pub col_keys: Vec<u64>,
    pub entries: Vec<Vec<BigCount>>,
    pub notes: Vec<String>,
}

impl TableDocument {
    pub fn from_table(
        table: &CountTable,
        params: BTreeMap<String, u64>,
        notes: Vec<String>,
    ) -> Self {
        Self {
            name: table.name().to_string(),
            params,
            row_axes: table.row_axes().to_vec(),
            col_axis: table.col_axis().to_string(),
            row_keys: table.row_keys().to_vec(),
            col_keys: table.col_keys().to_vec(),
            entries: table.rows().map(|(_, values)| values.to_vec()).collect(),
            notes,
        }
    }

    pub fn get(&self, row_key: &[u64], col_key: u64) -> Option<&BigCount> {
        let r = self.row_keys.iter().position(|k| k == row_key)?;
        let c = self.col_keys.iter().position(|&k| k == col_key)?;
        Some(&self.entries[r][c])
    }

    /// Whether the grids agree, ignoring name, params and notes (CSV keeps
    /// neither the name nor the params).
    pub fn same_grid(&self, other: &Self) -> bool {
        self.row_axes == other.row_axes
            && self.col_axis == other.col_axis
            && self.row_keys == other.row_keys
            && self.col_keys == other.col_keys
            && self.entries == other.entries
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Header `k,n=1,n=2,...`, one LF-terminated row per key, then the notes
    /// as `# ` lines.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let header = self.row_axes.iter().cloned().chain(
            self.col_keys
                .iter()
                .map(|c| format!("{}={c}", self.col_axis)),
        );
        w.write_record(header).expect("in-memory write");
        for (key, values) in self.row_keys.iter().zip(&self.entries) {
            let record = key
                .iter()
                .map(u64::to_string)
                .chain(values.iter().map(BigCount::to_string));
            w.write_record(record).expect("in-memory write");
        }
        let mut out = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii");
        for note in &self.notes {
            out.push_str("# ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let notes = text
            .lines()
            .filter_map(|l| l.strip_prefix('#'))
            .map(|l| l.trim().to_string())
            .collect();
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header = reader.headers()?.clone();
        let mut row_axes = Vec::new();
        let mut col_axis: Option<String> = None;
        let mut col_keys = Vec::new();
        for field in header.iter() {
            match field.split_once('=') {
                None if col_keys.is_empty() => row_axes.push(field.to_string()),
                None => return Err(bad(format!("row axis {field:?} after the columns"))),
                Some((axis, value)) => {
                    if col_axis.get_or_insert_with(|| axis.to_string()) != axis {
                        return Err(bad(format!("mixed column axes in {field:?}")));
                    }
                    col_keys.push(parse_number(value)?);
                }
            }
        }
        let col_axis = col_axis.ok_or_else(|| bad("header has no column labels".into()))?;
        let mut row_keys = Vec::new();
        let mut entries = Vec::new();
        for record in reader.records() {
            let record = record?;
            let fields: Vec<&str> = record.iter().collect();
            let (key, values) = fields.split_at(row_axes.len());
            row_keys.push(key.iter().map(|s| parse_number(s)).collect::<Result<_>>()?);
            entries.push(
                values
                    .iter()
                    .map(|s| parse_number(s))
                    .collect::<Result<_>>()?,
            );
        }
        Ok(Self {
            name: String::new(),
            params: BTreeMap::new(),
            row_axes,
            col_axis,
            row_keys,
            col_keys,
            entries,
            notes,
        })
    }

    /// Counts are decimal strings so they survive any JSON reader.
    pub fn to_json(&self) -> String {
        let doc = JsonTable {
            table: self.name.clone(),
            params: self.params.clone(),
            row_axes: self.row_axes.clone(),
            col_axis: self.col_axis.clone(),
            columns: self.col_keys.clone(),
            entries: self
                .row_keys
                .iter()
                .zip(&self.entries)
                .map(|(key, values)| JsonRow {
                    key: key.clone(),
                    values: values.iter().map(BigCount::to_string).collect(),
                })
                .collect(),
            notes: self.notes.clone(),
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("plain data");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonTable = serde_json::from_str(text)?;
        let entries = doc
            .entries
            .iter()
            .map(|row| {
                if row.values.len() != doc.columns.len() {
                    return Err(bad(format!(
                        "row {:?} has {} values",
                        row.key,
                        row.values.len()
                    )));
                }
                row.values.iter().map(|s| parse_number(s)).collect()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            name: doc.table,
            params: doc.params,
            row_axes: doc.row_axes,
            col_axis: doc.col_axis,
            row_keys: doc.entries.into_iter().map(|r| r.key).collect(),
            col_keys: doc.columns,
            entries,
            notes: doc.notes,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    table: String,
    params: BTreeMap<String, u64>,
    row_axes: Vec<String>,
    col_axis: String,
    columns: Vec<u64>,
    entries: Vec<JsonRow>,
    notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    key: Vec<u64>,
    values: Vec<String>,
}

fn bad(message: String) -> CliError {
    CliError::TableFormat(message)
}

fn parse_number<T: FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("not a count: {s:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polygram_core::polycube::table_s;
    use polygram_core::polyomino::table_b;
    use proptest::prelude::*;

    fn doc_b() -> TableDocument {
        let params = BTreeMap::from([("k".to_string(), 3), ("n".to_string(), 4)]);
        TableDocument::from_table(&table_b(3, 4), params, vec!["a note".into()])
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            doc_b().to_csv(),
            "k,n=1,n=2,n=3,n=4\n1,1,1,1,1\n2,0,1,2,4\n3,0,0,1,3\n# a note\n"
        );
        let s = TableDocument::from_table(&table_s(2, 2, 2), BTreeMap::new(), vec![]);
        assert_eq!(s.to_csv().lines().next(), Some("k,n,m=1,m=2"));
        assert_eq!(s.to_csv().lines().nth(4), Some("2,2,3,9"));
    }

    #[test]
    fn json_layout() {
        let v: serde_json::Value = serde_json::from_str(&doc_b().to_json()).unwrap();
        assert_eq!(v["table"], "b");
        assert_eq!(v["params"]["k"], 3);
        assert_eq!(v["entries"][1]["key"][0], 2);
        assert_eq!(v["entries"][1]["values"][3], "4");
        assert_eq!(v["notes"][0], "a note");
    }

    #[test]
    fn round_trips() {
        let d = doc_b();
        let csv = TableDocument::from_csv(&d.to_csv()).unwrap();
        assert!(csv.same_grid(&d));
        assert_eq!(csv.notes, d.notes);
        assert_eq!(TableDocument::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn bad_input_is_rejected() {
        assert!(TableDocument::from_csv("k,n=1\n1,x\n").is_err());
        assert!(TableDocument::from_csv("k,n=1,m=2\n1,1,1\n").is_err());
        assert!(TableDocument::from_csv("k,n=1\n1,1,1\n").is_err());
        assert!(TableDocument::from_json("{}").is_err());
    }

    fn arb_document() -> impl Strategy<Value = TableDocument> {
        (1usize..3, 1usize..5, 1usize..6).prop_flat_map(|(arity, rows, cols)| {
            (
                prop::collection::vec(prop::collection::vec(0u64..1000, arity), rows),
                prop::collection::vec(0u64..1000, cols),
                prop::collection::vec(
                    prop::collection::vec(prop::collection::vec(any::<u32>(), 0..4), cols),
                    rows,
                ),
                prop::collection::vec("[a-z0-9 ,=()]{0,20}", 0..3),
            )
                .prop_map(move |(row_keys, col_keys, digits, notes)| TableDocument {
                    name: "t".into(),
                    params: BTreeMap::from([("k".into(), rows as u64)]),
                    row_axes: ["k", "n", "m"][..arity]
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                    col_axis: "c".into(),
                    row_keys,
                    col_keys,
                    entries: digits
                        .into_iter()
                        .map(|row| row.into_iter().map(BigCount::new).collect())
                        .collect(),
                    notes: notes.into_iter().map(|n| n.trim().to_string()).collect(),
                })
        })
    }

    proptest! {
        #[test]
        fn csv_and_json_round_trip(doc in arb_document()) {
            let csv = TableDocument::from_csv(&doc.to_csv()).unwrap();
            prop_assert!(csv.same_grid(&doc));
            prop_assert_eq!(&csv.notes, &doc.notes);
            prop_assert_eq!(TableDocument::from_json(&doc.to_json()).unwrap(), doc);
        }
    }
}
