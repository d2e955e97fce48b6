//! Young-Fibonacci tableaux.
//!
//! A tableau is a row of columns holding one or two cells, written left to
//! right as `b` or `b:t` (bottom, top), e.g. `3:7 4:6 5 1:2`. A filling is
//! valid when every two-cell column is strictly increasing upwards and the
//! topmost entry of every column is at least every entry lying in the
//! columns to its right.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::snakeshape::{shapes_of_size, Snakeshape};
use crate::yfinsertion::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub bottom: u32,
    pub top: Option<u32>,
}

impl Column {
    pub fn single(bottom: u32) -> Self {
        Column { bottom, top: None }
    }

    pub fn pair(bottom: u32, top: u32) -> Self {
        Column {
            bottom,
            top: Some(top),
        }
    }

    pub fn height(&self) -> u8 {
        if self.top.is_some() {
            2
        } else {
            1
        }
    }

    /// The entry seen from above: the top cell if present, else the bottom.
    pub fn topmost(&self) -> u32 {
        self.top.unwrap_or(self.bottom)
    }

    pub fn cells(&self) -> impl Iterator<Item = u32> {
        std::iter::once(self.bottom).chain(self.top)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.top {
            Some(t) => write!(f, "{}:{}", self.bottom, t),
            None => write!(f, "{}", self.bottom),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct YfTableau {
    columns: Vec<Column>,
}

impl YfTableau {
    /// Wraps columns without checking any tableau condition.
    pub fn new(columns: Vec<Column>) -> Self {
        YfTableau { columns }
    }

    pub fn empty() -> Self {
        YfTableau::default()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(|c| c.height() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn shape(&self) -> Snakeshape {
        Snakeshape::from_parts_unchecked(self.columns.iter().map(Column::height).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().flat_map(Column::cells)
    }

    /// Column index of `letter` and whether it sits in a top cell.
    pub fn locate(&self, letter: u32) -> Option<(usize, bool)> {
        self.columns.iter().enumerate().find_map(|(j, c)| {
            if c.bottom == letter {
                Some((j, false))
            } else if c.top == Some(letter) {
                Some((j, true))
            } else {
                None
            }
        })
    }

    /// Column strictness and right dominance of topmost entries; entries must
    /// be positive.
    pub fn is_valid(&self) -> bool {
        let mut max_right = 0;
        for c in self.columns.iter().rev() {
            if c.bottom == 0 {
                return false;
            }
            if let Some(t) = c.top {
                if t <= c.bottom {
                    return false;
                }
            }
            if c.topmost() < max_right {
                return false;
            }
            max_right = max_right.max(c.topmost());
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for x in self.entries() {
            let x = x as usize;
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn require_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    /// Content vector: `v[i]` copies of letter `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.entries().max().unwrap_or(0) as usize;
        let mut v = vec![0; max];
        for x in self.entries() {
            v[x as usize - 1] += 1;
        }
        v
    }
}

impl fmt::Display for YfTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return f.write_str("e");
        }
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for YfTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YfTableau({self})")
    }
}

impl FromStr for YfTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(YfTableau::empty());
        }
        if s.is_empty() {
            return Err(Error::ParseTableau { token: s.into() });
        }
        let entry = |tok: &str| -> Result<u32> {
            tok.parse::<u32>()
                .ok()
                .filter(|&x| x > 0)
                .ok_or_else(|| Error::ParseTableau { token: tok.into() })
        };
        let columns = s
            .split_whitespace()
            .map(|tok| match tok.split_once(':') {
                Some((b, t)) => Ok(Column::pair(entry(b)?, entry(t)?)),
                None => Ok(Column::single(entry(tok)?)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(YfTableau { columns })
    }
}

pub fn parse_tableau(text: &str) -> Result<YfTableau> {
    text.parse()
}

impl Serialize for YfTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let cols: Vec<Vec<u32>> = self.columns.iter().map(|c| c.cells().collect()).collect();
        cols.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for YfTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let cols = Vec::<Vec<u32>>::deserialize(deserializer)?;
        let columns = cols
            .into_iter()
            .map(|c| match c.as_slice() {
                [b] => Ok(Column::single(*b)),
                [b, t] => Ok(Column::pair(*b, *t)),
                _ => Err(serde::de::Error::custom("a column has one or two cells")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(YfTableau { columns })
    }
}

/// Number of standard tableaux of shape `u`.
///
/// Cells are counted right to left, bottom before top; the result is the
/// product of the counter values met at the bottom cells of two-cell columns.
pub fn hook_count(u: &Snakeshape) -> u64 {
    let mut counter = 0u64;
    let mut product = 1u64;
    for &p in u.parts().iter().rev() {
        counter += 1;
        if p == 2 {
            product *= counter;
            counter += 1;
        }
    }
    product
}

/// All standard tableaux of shape `u`, one per saturated chain.
pub fn enumerate_standard(u: &Snakeshape) -> Vec<YfTableau> {
    let mut out: Vec<YfTableau> = crate::chains_growth::saturated_chains(u)
        .iter()
        .map(crate::chains_growth::chain_to_tableau_unchecked)
        .collect();
    out.sort();
    out
}

/// All valid fillings of `u` holding `v[i]` copies of `i + 1`, sorted.
pub fn enumerate_semistandard(u: &Snakeshape, v: &Snakeshape) -> Result<Vec<YfTableau>> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch {
            left: u.size(),
            right: v.size(),
        });
    }
    let content: Vec<usize> = v.parts().iter().map(|&p| p as usize).collect();
    Ok(fill_with_content(u, &content))
}

/// Backtracking filler: columns right to left, bottom before top, tracking the
/// largest entry seen so far to the right.
pub(crate) fn fill_with_content(u: &Snakeshape, content: &[usize]) -> Vec<YfTableau> {
    struct Search<'a> {
        heights: &'a [u8],
        remaining: Vec<usize>,
        columns: Vec<Column>,
        out: Vec<YfTableau>,
    }

    impl Search<'_> {
        fn letters(&self, from: u32) -> Vec<u32> {
            (from.max(1)..=self.remaining.len() as u32)
                .filter(|&x| self.remaining[x as usize - 1] > 0)
                .collect()
        }

        fn take(&mut self, x: u32) {
            self.remaining[x as usize - 1] -= 1;
        }

        fn give(&mut self, x: u32) {
            self.remaining[x as usize - 1] += 1;
        }

        fn run(&mut self, j: usize, max_right: u32) {
            if j == 0 {
                let mut cols = self.columns.clone();
                cols.reverse();
                self.out.push(YfTableau::new(cols));
                return;
            }
            let col = j - 1;
            if self.heights[col] == 1 {
                for x in self.letters(max_right) {
                    self.take(x);
                    self.columns.push(Column::single(x));
                    self.run(col, max_right.max(x));
                    self.columns.pop();
                    self.give(x);
                }
            } else {
                for b in self.letters(1) {
                    self.take(b);
                    for t in self.letters(max_right.max(b + 1)) {
                        self.take(t);
                        self.columns.push(Column::pair(b, t));
                        self.run(col, max_right.max(t));
                        self.columns.pop();
                        self.give(t);
                    }
                    self.give(b);
                }
            }
        }
    }

    let mut search = Search {
        heights: u.parts(),
        remaining: content.to_vec(),
        columns: Vec::with_capacity(u.len()),
        out: Vec::new(),
    };
    search.run(u.len(), 0);
    let mut out = search.out;
    out.sort();
    out
}

/// Right to left over columns, top before bottom.
pub fn min_cano(t: &YfTableau) -> Result<Permutation> {
    t.require_standard()?;
    let word = t
        .columns()
        .iter()
        .rev()
        .flat_map(|c| c.top.into_iter().chain(std::iter::once(c.bottom)))
        .collect();
    Permutation::new(word)
}

/// Tops of two-cell columns left to right, then the bottom row right to left.
pub fn max_cano(t: &YfTableau) -> Result<Permutation> {
    t.require_standard()?;
    let tops = t.columns().iter().filter_map(|c| c.top);
    let bottoms = t.columns().iter().rev().map(|c| c.bottom);
    Permutation::new(tops.chain(bottoms).collect())
}

/// The involution swapping the two entries of every two-cell column.
pub fn cano_involution(t: &YfTableau) -> Result<Permutation> {
    t.require_standard()?;
    let mut word: Vec<u32> = (1..=t.size() as u32).collect();
    for c in t.columns() {
        if let Some(top) = c.top {
            word[c.bottom as usize - 1] = top;
            word[top as usize - 1] = c.bottom;
        }
    }
    Permutation::new(word)
}

/// Poset on letters (element `i` is letter `i + 1`): the bottom row read
/// right to left is a chain, and each top entry lies just below its own
/// column's bottom entry.
pub fn cano_poset(t: &YfTableau) -> Result<FinitePoset> {
    t.require_standard()?;
    let idx = |x: u32| x as usize - 1;
    let cols = t.columns();
    let chain = cols
        .windows(2)
        .map(|w| (idx(w[1].bottom), idx(w[0].bottom)));
    let tops = cols
        .iter()
        .filter_map(|c| c.top.map(|top| (idx(top), idx(c.bottom))));
    FinitePoset::from_covers(t.size(), chain.chain(tops).collect::<Vec<_>>())
}

/// Top cells get `n, n-1, ...` left to right; bottom cells of two-cell
/// columns get `1, 2, ...` left to right.
pub fn row_canonical(u: &Snakeshape) -> YfTableau {
    let mut high = u.size() as u32;
    let mut low = 0;
    let columns = u
        .parts()
        .iter()
        .map(|&p| {
            let top = high;
            high -= 1;
            if p == 2 {
                low += 1;
                Column::pair(low, top)
            } else {
                Column::single(top)
            }
        })
        .collect();
    YfTableau::new(columns)
}

/// Cells numbered `1..n` right to left, bottom before top.
pub fn column_canonical(u: &Snakeshape) -> YfTableau {
    let mut next = 0;
    let mut columns: Vec<Column> = u
        .parts()
        .iter()
        .rev()
        .map(|&p| {
            next += 1;
            if p == 2 {
                next += 1;
                Column::pair(next - 1, next)
            } else {
                Column::single(next)
            }
        })
        .collect();
    columns.reverse();
    YfTableau::new(columns)
}

/// Lowest rank among tableaux of shape `u`.
pub fn rho_min(u: &Snakeshape) -> usize {
    u.num_twos()
}

/// Highest rank among tableaux of shape `u`.
pub fn rho_max(u: &Snakeshape) -> usize {
    let mut twos_left = 0;
    let mut total = 0;
    for &p in u.parts() {
        total += twos_left;
        if p == 2 {
            total += twos_left + 1;
            twos_left += 1;
        }
    }
    total
}

/// Every standard tableau of size `n`, grouped by shape in descending order.
pub fn standard_tableaux_of_size(n: usize) -> Vec<YfTableau> {
    shapes_of_size(n)
        .iter()
        .flat_map(enumerate_standard)
        .collect()
}
