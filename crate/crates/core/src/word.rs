//! Reduced words, column sets and the row layout of tableau shapes.
//!
//! The canonical word for the longest element of `S_n` is
//! `(1)(2,1)(3,2,1)...(n-1,...,1)`. Letter `k` of a word contributes the
//! column set `C^(k) = s_{i_1} ... s_{i_k} {1, ..., i_k}`, and a multiplicity
//! vector `m` stacks `m_k` copies of `C^(k)` into a row-convex shape with
//! `C^(l)` on top and `C^(1)` at the bottom.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word `(i_1, ..., i_l)` in the simple transpositions of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if let Some(&letter) = letters.iter().find(|&&a| a == 0 || a >= n) {
            return Err(Error::InvalidLetter { letter, n });
        }
        Ok(Word { n, letters })
    }

    /// The reduced word `(1)(2,1)...(n-1,...,1)` of the longest permutation.
    pub fn longest(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let letters = (1..n).flat_map(|j| (1..=j).rev()).collect();
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.letters.len() == self.n * (self.n - 1) / 2
            && self
                .letters
                .iter()
                .copied()
                .eq((1..self.n).flat_map(|j| (1..=j).rev()))
    }

    /// One-line notation of `s_{i_1} s_{i_2} ... s_{i_l}`: entry `k - 1` holds
    /// the image of `k`.
    pub fn permutation(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|k| {
                self.letters
                    .iter()
                    .rev()
                    .fold(k, |x, &a| transpose(a, x))
            })
            .collect()
    }

    pub fn column_sets(&self) -> ColumnSetList {
        column_sets(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

fn transpose(a: usize, x: usize) -> usize {
    if x == a {
        a + 1
    } else if x == a + 1 {
        a
    } else {
        x
    }
}

pub fn longest_word(n: usize) -> Result<Word> {
    Word::longest(n)
}

/// Inclusive integer interval `lo..=hi` of column indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::Shape(format!("bad interval {lo}..={hi}")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, c: usize) -> bool {
        self.lo <= c && c <= self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for c in self.iter() {
            if c > self.lo {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The column sets `C^(1), ..., C^(l)` of a word, each sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnSetList {
    pub sets: Vec<Vec<usize>>,
}

impl ColumnSetList {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The sets as intervals, or `None` if some set has a gap.
    pub fn intervals(&self) -> Option<Vec<Interval>> {
        self.sets.iter().map(|s| as_interval(s)).collect()
    }
}

impl fmt::Display for ColumnSetList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, set) in self.sets.iter().enumerate() {
            let body: Vec<String> = set.iter().map(|c| c.to_string()).collect();
            writeln!(f, "C^({}) = {{{}}}", k + 1, body.join(","))?;
        }
        Ok(())
    }
}

fn as_interval(set: &[usize]) -> Option<Interval> {
    let (&lo, &hi) = (set.first()?, set.last()?);
    (hi + 1 - lo == set.len()).then_some(Interval { lo, hi })
}

/// `C^(k) = s_{i_1} ... s_{i_k} {1, ..., i_k}`; the innermost transposition
/// is applied first.
pub fn column_sets(word: &Word) -> ColumnSetList {
    let letters = word.letters();
    let sets = (0..letters.len())
        .map(|k| {
            let mut set: Vec<usize> = (1..=letters[k])
                .map(|x| letters[..=k].iter().rev().fold(x, |x, &a| transpose(a, x)))
                .collect();
            set.sort_unstable();
            set
        })
        .collect();
    ColumnSetList { sets }
}

/// True iff every column set is an integer interval.
pub fn is_row_convex(sets: &ColumnSetList) -> bool {
    sets.sets.iter().all(|s| as_interval(s).is_some())
}

/// Block `j` of the canonical word covers letter indices `p_j < k <= p_{j+1}`
/// with `p_j = j(j-1)/2`, as 1-based indices.
pub fn block_range(j: usize) -> std::ops::RangeInclusive<usize> {
    (j * (j - 1) / 2 + 1)..=(j * (j + 1) / 2)
}

/// Block index of the 1-based letter index `k` in the canonical word.
pub fn block_of(k: usize) -> usize {
    let mut j = 1;
    while j * (j + 1) / 2 < k {
        j += 1;
    }
    j
}

/// One row of a shape: its columns, the letter index `source` it repeats,
/// the block that index falls in (canonical word only), and which copy it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeRow {
    pub columns: Interval,
    pub source: usize,
    pub block: Option<usize>,
    pub repeat: usize,
}

/// A shape `(m, i)`: rows listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Shape {
    word: Word,
    multiplicity: Vec<u32>,
    rows: Vec<ShapeRow>,
    blocks: Option<Vec<Vec<u32>>>,
    flag_weight: Option<Vec<u32>>,
}

impl Shape {
    /// Shape on the canonical word of rank `n`.
    pub fn canonical(n: usize, multiplicity: Vec<u32>) -> Result<Self> {
        build_shape(Word::longest(n)?, multiplicity)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.n()
    }

    pub fn multiplicity(&self) -> &[u32] {
        &self.multiplicity
    }

    pub fn rows(&self) -> &[ShapeRow] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn blocks(&self) -> Option<&[Vec<u32>]> {
        self.blocks.as_deref()
    }

    /// The dominant weight of the top block read as a Young diagram: number
    /// of cells in columns `n, n-1, ..., 1`.
    pub fn flag_weight(&self) -> Option<&[u32]> {
        self.flag_weight.as_deref()
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.is_some()
    }

    pub fn scaled(&self, d: u32) -> Self {
        let m = self.multiplicity.iter().map(|&x| x * d).collect();
        build_shape(self.word.clone(), m).expect("scaling preserves validity")
    }

    /// Shape `(m(j), i)`.
    pub fn block_shape(&self, j: usize) -> Result<Self> {
        let blocks = self.blocks.as_ref().ok_or(Error::UnsupportedWord)?;
        let m = blocks
            .get(j.wrapping_sub(1))
            .ok_or_else(|| Error::BlockMismatch(format!("no block {j}")))?;
        build_shape(self.word.clone(), m.clone())
    }

    /// Number of non-empty cells in column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        self.rows.iter().filter(|r| r.columns.contains(c)).count()
    }

    /// ASCII rendering, one line per row, `X` for cells.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            for c in 1..=self.n() {
                out.push(if row.columns.contains(c) { 'X' } else { ' ' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Splits `m` into `m(1), ..., m(n-1)` along the block boundaries.
pub fn decompose_multiplicity(shape: &Shape) -> Result<Vec<Vec<u32>>> {
    if !shape.word.is_canonical() {
        return Err(Error::UnsupportedWord);
    }
    Ok(split_blocks(shape.n(), &shape.multiplicity))
}

fn split_blocks(n: usize, m: &[u32]) -> Vec<Vec<u32>> {
    (1..n)
        .map(|j| {
            let range = block_range(j);
            m.iter()
                .enumerate()
                .map(|(i, &x)| if range.contains(&(i + 1)) { x } else { 0 })
                .collect()
        })
        .collect()
}

pub fn build_shape(word: Word, multiplicity: Vec<u32>) -> Result<Shape> {
    if multiplicity.len() != word.len() {
        return Err(Error::Shape(format!(
            "multiplicity has {} entries, word has {} letters",
            multiplicity.len(),
            word.len()
        )));
    }
    let intervals = column_sets(&word)
        .intervals()
        .ok_or_else(|| Error::Shape("column sets are not row-convex".into()))?;
    let canonical = word.is_canonical();
    let mut rows = Vec::new();
    for k in (1..=word.len()).rev() {
        for repeat in (1..=multiplicity[k - 1] as usize).rev() {
            rows.push(ShapeRow {
                columns: intervals[k - 1],
                source: k,
                block: canonical.then(|| block_of(k)),
                repeat,
            });
        }
    }
    let n = word.n();
    let blocks = canonical.then(|| split_blocks(n, &multiplicity));
    let flag_weight = canonical.then(|| {
        (1..=n)
            .rev()
            .map(|c| {
                rows.iter()
                    .filter(|r| r.block == Some(n - 1) && r.columns.contains(c))
                    .count() as u32
            })
            .collect()
    });
    Ok(Shape {
        word,
        multiplicity,
        rows,
        blocks,
        flag_weight,
    })
}

/// Parses `"1,2,1"` into a vector; an empty string yields an empty vector.
pub fn parse_list(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("not a nonnegative integer: {s:?}")))
        })
        .collect()
}
