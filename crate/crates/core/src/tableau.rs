//! Row fillings and tableaux of shape `(m, i)`.
//!
//! A tableau is a list of rows, top to bottom, each row an increasing
//! filling `R` of an interval of columns `C`; it stands for the product of
//! the minors `[R:C]`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Interval, Shape};

/// A row-standard filling of an interval of columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    columns: Interval,
    entries: Vec<usize>,
}

impl Row {
    /// Builds a row whose entries strictly increase left to right.
    pub fn new(columns: Interval, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != columns.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for columns {columns}",
                entries.len()
            )));
        }
        if entries.first() == Some(&0) || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotRowStandard(format!("{entries:?}")));
        }
        Ok(Row { columns, entries })
    }

    pub fn columns(&self) -> Interval {
        self.columns
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, column: usize) -> Option<usize> {
        self.columns
            .contains(column)
            .then(|| self.entries[column - self.columns.lo])
    }

    /// `R <= C` entrywise.
    pub fn is_flagged(&self) -> bool {
        self.entries
            .iter()
            .zip(self.columns.iter())
            .all(|(&r, c)| r <= c)
    }

    /// The row filled with its own column indices, `[C:C]`.
    pub fn diagonal(columns: Interval) -> Self {
        Row {
            columns,
            entries: columns.to_vec(),
        }
    }
}

/// Result of sorting a raw row filling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Standardized {
    /// The minor vanishes: a repeated entry, or the filling is not flagged.
    Zero,
    Row { sign: i8, row: Row },
}

/// Sorts the entries of a raw filling, tracking the sign of the sorting
/// permutation.
pub fn row_standardize(columns: Interval, raw: &[usize], n: usize) -> Result<Standardized> {
    if raw.len() != columns.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} entries for columns {columns}",
            raw.len()
        )));
    }
    if let Some(&entry) = raw.iter().find(|&&e| e == 0 || e > n) {
        return Err(Error::InvalidEntry { entry, n });
    }
    let mut entries = raw.to_vec();
    let mut sign = 1i8;
    // insertion sort; every adjacent swap flips the sign
    for i in 1..entries.len() {
        let mut j = i;
        while j > 0 && entries[j - 1] > entries[j] {
            entries.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if entries.windows(2).any(|w| w[0] == w[1]) {
        return Ok(Standardized::Zero);
    }
    let row = Row { columns, entries };
    if !row.is_flagged() {
        return Ok(Standardized::Zero);
    }
    Ok(Standardized::Row { sign, row })
}

/// A tableau: rows listed top to bottom in a grid with `n` columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: usize,
    rows: Vec<Row>,
}

impl Tableau {
    /// A tableau of flagged rows with entries in `1..=n`.
    pub fn new(n: usize, rows: Vec<Row>) -> Result<Self> {
        for row in &rows {
            if row.columns.hi > n {
                return Err(Error::ShapeMismatch(format!(
                    "columns {} exceed n = {n}",
                    row.columns
                )));
            }
            if let Some(&entry) = row.entries.iter().find(|&&e| e > n) {
                return Err(Error::InvalidEntry { entry, n });
            }
            if !row.is_flagged() {
                return Err(flag_error(row));
            }
        }
        Ok(Tableau { n, rows })
    }

    /// A row-standard array that need not be flagged or bounded by `n`, for
    /// applying the combinatorial predicates to arbitrary fragments.
    pub fn fragment(n: usize, rows: Vec<Row>) -> Result<Self> {
        if let Some(row) = rows.iter().find(|r| r.columns.hi > n) {
            return Err(Error::ShapeMismatch(format!(
                "columns {} exceed n = {n}",
                row.columns
            )));
        }
        Ok(Tableau { n, rows })
    }

    pub fn empty(n: usize) -> Self {
        Tableau {
            n,
            rows: Vec::new(),
        }
    }

    /// Fills the rows of `shape` top to bottom.
    pub fn on_shape(shape: &Shape, fillings: Vec<Vec<usize>>) -> Result<Self> {
        if fillings.len() != shape.row_count() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows for a shape with {}",
                fillings.len(),
                shape.row_count()
            )));
        }
        let rows = shape
            .rows()
            .iter()
            .zip(fillings)
            .map(|(r, e)| Row::new(r.columns, e))
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape.n(), rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, row: usize, column: usize) -> Option<usize> {
        self.rows.get(row)?.entry(column)
    }

    pub fn fits(&self, shape: &Shape) -> bool {
        self.n == shape.n()
            && self.rows.len() == shape.row_count()
            && self
                .rows
                .iter()
                .zip(shape.rows())
                .all(|(r, s)| r.columns == s.columns)
    }

    pub fn is_straight(&self) -> bool {
        is_straight(self)
    }

    pub fn max_column(&self) -> usize {
        self.rows.iter().map(|r| r.columns.hi).max().unwrap_or(0)
    }

    /// ASCII grid, one line per row, blanks for empty cells.
    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.entries.iter())
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = (1..=self.n)
                .map(|c| match row.entry(c) {
                    Some(e) => format!("{e:>width$}"),
                    None => " ".repeat(width),
                })
                .collect();
            out.push_str(&cells.join(if width > 1 { " " } else { "" }));
            out.push('\n');
        }
        out
    }

    pub fn to_doc(&self, multiplicity: Option<&[u32]>) -> TableauDoc {
        TableauDoc {
            n: self.n,
            m: multiplicity.map(|m| m.to_vec()),
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.columns
                        .iter()
                        .zip(&r.entries)
                        .map(|(column, &entry)| Cell { column, entry })
                        .collect()
                })
                .collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn flag_error(row: &Row) -> Error {
    let list = |v: &mut dyn Iterator<Item = usize>| {
        v.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    };
    Error::NotFlagged {
        rows: list(&mut row.entries.iter().copied()),
        columns: list(&mut row.columns.iter()),
    }
}

/// One filled cell in the JSON tableau format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub column: usize,
    pub entry: usize,
}

/// JSON form of a tableau: the shape reference (`n` and, optionally, the
/// multiplicity on the canonical word) and the rows as lists of cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<u32>>,
    pub rows: Vec<Vec<Cell>>,
}

impl TableauDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    /// Validates the cells into a tableau, and builds the referenced shape if
    /// a multiplicity is present.
    pub fn resolve(&self) -> Result<(Tableau, Option<Shape>)> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for cells in &self.rows {
            let mut cells = cells.clone();
            cells.sort_by_key(|c| c.column);
            let (lo, hi) = match (cells.first(), cells.last()) {
                (Some(a), Some(b)) => (a.column, b.column),
                _ => return Err(Error::InvalidInput("empty row".into())),
            };
            let columns = Interval::new(lo, hi)?;
            if columns.len() != cells.len() {
                return Err(Error::InvalidInput(format!(
                    "row cells do not cover {columns} exactly once"
                )));
            }
            rows.push(Row::new(columns, cells.iter().map(|c| c.entry).collect())?);
        }
        let tableau = Tableau::new(self.n, rows)?;
        let shape = match &self.m {
            Some(m) => {
                let shape = Shape::canonical(self.n, m.clone())?;
                if !tableau.fits(&shape) {
                    return Err(Error::ShapeMismatch(
                        "rows do not match the referenced shape".into(),
                    ));
                }
                Some(shape)
            }
            None => None,
        };
        Ok((tableau, shape))
    }
}

/// The straightness condition for an upper row above a lower row: in a
/// shared column `k`, a larger entry above is allowed only if the upper row
/// has a cell at `k - 1` holding an entry at least the lower entry.
fn pair_is_straight(upper: &Row, lower: &Row) -> bool {
    let lo = upper.columns.lo.max(lower.columns.lo);
    let hi = upper.columns.hi.min(lower.columns.hi);
    (lo..=hi).all(|k| {
        let a = upper.entries[k - upper.columns.lo];
        let b = lower.entries[k - lower.columns.lo];
        a <= b || matches!(upper.entry(k - 1), Some(left) if left >= b)
    })
}

/// Rows compare pairwise in top-to-bottom order, across block boundaries.
pub fn is_straight(t: &Tableau) -> bool {
    t.rows
        .iter()
        .enumerate()
        .all(|(i, upper)| t.rows[i + 1..].iter().all(|lower| pair_is_straight(upper, lower)))
}

/// Columns weakly increase downward (rows strictly increase by construction).
/// The rows must form a skew diagram `(k,...,k) \ lambda`.
pub fn is_contra(t: &Tableau) -> Result<bool> {
    let Some(first) = t.rows.first() else {
        return Ok(true);
    };
    let right = first.columns.hi;
    let skew = t.rows.iter().all(|r| r.columns.hi == right)
        && t.rows.windows(2).all(|w| w[0].columns.lo >= w[1].columns.lo);
    if !skew {
        return Err(Error::NotSkew);
    }
    Ok(t.rows.windows(2).all(|w| {
        w[0].columns
            .iter()
            .all(|k| w[0].entry(k) <= w[1].entry(k))
    }))
}

/// Flagged increasing fillings of `columns` with entries from `1..=n`, in
/// lexicographic order.
pub fn row_candidates(columns: Interval, n: usize) -> Vec<Row> {
    fn extend(pos: usize, start: usize, columns: Interval, n: usize, buf: &mut Vec<usize>, out: &mut Vec<Row>) {
        if pos == columns.len() {
            out.push(Row {
                columns,
                entries: buf.clone(),
            });
            return;
        }
        let bound = (columns.lo + pos).min(n);
        for e in start..=bound {
            buf.push(e);
            extend(pos + 1, e + 1, columns, n, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    extend(0, 1, columns, n, &mut Vec::new(), &mut out);
    out
}

fn candidate_table(shape: &Shape) -> Vec<Vec<Row>> {
    let mut cache: HashMap<Interval, Vec<Row>> = HashMap::new();
    shape
        .rows()
        .iter()
        .map(|r| {
            cache
                .entry(r.columns)
                .or_insert_with(|| row_candidates(r.columns, shape.n()))
                .clone()
        })
        .collect()
}

/// Visits the tableaux of `shape` in lexicographic order of their rows,
/// top row first. With `straight_only`, branches are pruned as soon as a
/// placed row breaks straightness against a row above it.
pub fn for_each_tableau<F: FnMut(&[&Row])>(shape: &Shape, straight_only: bool, mut visit: F) {
    let candidates = candidate_table(shape);
    let mut stack: Vec<&Row> = Vec::with_capacity(candidates.len());
    fn walk<'a, F: FnMut(&[&Row])>(
        depth: usize,
        candidates: &'a [Vec<Row>],
        straight_only: bool,
        stack: &mut Vec<&'a Row>,
        visit: &mut F,
    ) {
        if depth == candidates.len() {
            visit(stack);
            return;
        }
        for row in &candidates[depth] {
            if straight_only && !stack.iter().all(|upper| pair_is_straight(upper, row)) {
                continue;
            }
            stack.push(row);
            walk(depth + 1, candidates, straight_only, stack, visit);
            stack.pop();
        }
    }
    walk(0, &candidates, straight_only, &mut stack, &mut visit);
}

pub fn enumerate_straight(shape: &Shape) -> Vec<Tableau> {
    collect(shape, true)
}

pub fn enumerate_row_standard(shape: &Shape) -> Vec<Tableau> {
    collect(shape, false)
}

pub fn count_straight(shape: &Shape) -> u64 {
    let mut count = 0u64;
    for_each_tableau(shape, true, |_| count += 1);
    count
}

fn collect(shape: &Shape, straight_only: bool) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_tableau(shape, straight_only, |rows| {
        out.push(Tableau {
            n: shape.n(),
            rows: rows.iter().map(|&r| r.clone()).collect(),
        })
    });
    out
}

/// Splits a tableau on a canonical shape into its block parts `t_1, ..., t_{n-1}`,
/// part `j` living on the shape `(m(j), i)`.
pub fn block_factor(t: &Tableau, shape: &Shape) -> Result<Vec<Tableau>> {
    if !shape.is_canonical() {
        return Err(Error::UnsupportedWord);
    }
    if !t.fits(shape) {
        return Err(Error::ShapeMismatch("tableau does not fit the shape".into()));
    }
    let mut parts = vec![Tableau::empty(t.n); t.n - 1];
    for (row, srow) in t.rows.iter().zip(shape.rows()) {
        let j = srow.block.expect("canonical shapes carry blocks");
        parts[j - 1].rows.push(row.clone());
    }
    Ok(parts)
}

/// The product `t_1 ... t_{n-1}`: the rows of `t_{n-1}` on top, `t_1` at the
/// bottom.
pub fn block_product(parts: &[Tableau], shape: &Shape) -> Result<Tableau> {
    let n = shape.n();
    if !shape.is_canonical() {
        return Err(Error::UnsupportedWord);
    }
    if parts.len() != n - 1 {
        return Err(Error::BlockMismatch(format!(
            "{} parts for {} blocks",
            parts.len(),
            n - 1
        )));
    }
    for (j, part) in parts.iter().enumerate() {
        if !part.fits(&shape.block_shape(j + 1)?) {
            return Err(Error::BlockMismatch(format!(
                "part {} does not fit block shape {}",
                j + 1,
                j + 1
            )));
        }
    }
    let rows = parts.iter().rev().flat_map(|p| p.rows.iter().cloned()).collect();
    Ok(Tableau { n, rows })
}

/// Maps a contra-tableau `t` on the top block `(m(n-1), i)` to
/// `(t0_1 ... t0_{n-2}) . t`, where `t0_j` fills every row of block `j`
/// with its own column indices.
pub fn lift_flag_section(t: &Tableau, shape: &Shape) -> Result<Tableau> {
    let n = shape.n();
    let top = shape.block_shape(n - 1)?;
    if !t.fits(&top) {
        return Err(Error::InvalidSection(
            "tableau does not fit the top block shape".into(),
        ));
    }
    if !is_contra(t)? {
        return Err(Error::InvalidSection("not a contra-tableau".into()));
    }
    let mut parts = (1..n - 1)
        .map(|j| {
            let block = shape.block_shape(j)?;
            Ok(Tableau {
                n,
                rows: block.rows().iter().map(|r| Row::diagonal(r.columns)).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    parts.push(t.clone());
    block_product(&parts, shape)
}
