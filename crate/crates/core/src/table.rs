//! Rectangular grids of exact counts.

use num_bigint::BigUint;

use crate::BigCount;

/// A fully populated grid of counts.
///
/// Each row is keyed by a tuple of parameters (`row_axes`, e.g. `["k"]` or
/// `["k", "n"]`) and each column by a single parameter (`col_axis`, e.g.
/// `"n"`). Rows and columns keep the order in which they were built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    name: String,
    row_axes: Vec<String>,
    col_axis: String,
    row_keys: Vec<Vec<u64>>,
    col_keys: Vec<u64>,
    entries: Vec<Vec<BigCount>>,
}

impl CountTable {
    /// Builds the table by evaluating `cell(row_key, col_key)` everywhere.
    pub fn build<F>(
        name: impl Into<String>,
        row_axes: &[&str],
        col_axis: &str,
        row_keys: Vec<Vec<u64>>,
        col_keys: Vec<u64>,
        cell: F,
    ) -> Self
    where
        F: Fn(&[u64], u64) -> BigCount + Sync,
    {
        let row =
            |key: &Vec<u64>| -> Vec<BigCount> { col_keys.iter().map(|&c| cell(key, c)).collect() };
        #[cfg(feature = "parallel")]
        let entries = {
            use rayon::prelude::*;
            row_keys.par_iter().map(row).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let entries = row_keys.iter().map(row).collect();
        Self::from_parts(name, row_axes, col_axis, row_keys, col_keys, entries)
    }

    /// Panics if `entries` is not `row_keys.len() x col_keys.len()`.
    pub fn from_parts(
        name: impl Into<String>,
        row_axes: &[&str],
        col_axis: &str,
        row_keys: Vec<Vec<u64>>,
        col_keys: Vec<u64>,
        entries: Vec<Vec<BigCount>>,
    ) -> Self {
        assert_eq!(entries.len(), row_keys.len(), "row count");
        assert!(
            entries.iter().all(|r| r.len() == col_keys.len()),
            "ragged table"
        );
        assert!(
            row_keys.iter().all(|k| k.len() == row_axes.len()),
            "row key arity"
        );
        Self {
            name: name.into(),
            row_axes: row_axes.iter().map(|s| s.to_string()).collect(),
            col_axis: col_axis.to_string(),
            row_keys,
            col_keys,
            entries,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn row_axes(&self) -> &[String] {
        &self.row_axes
    }

    pub fn col_axis(&self) -> &str {
        &self.col_axis
    }

    pub fn row_keys(&self) -> &[Vec<u64>] {
        &self.row_keys
    }

    pub fn col_keys(&self) -> &[u64] {
        &self.col_keys
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[u64], &[BigCount])> {
        self.row_keys
            .iter()
            .map(Vec::as_slice)
            .zip(self.entries.iter().map(Vec::as_slice))
    }

    pub fn get(&self, row_key: &[u64], col_key: u64) -> Option<&BigCount> {
        let r = self.row_keys.iter().position(|k| k.as_slice() == row_key)?;
        let c = self.col_keys.iter().position(|&k| k == col_key)?;
        Some(&self.entries[r][c])
    }

    /// Sum over all rows for one column.
    pub fn column_sum(&self, col_key: u64) -> Option<BigCount> {
        let c = self.col_keys.iter().position(|&k| k == col_key)?;
        Some(self.entries.iter().map(|r| &r[c]).sum::<BigUint>())
    }
}
