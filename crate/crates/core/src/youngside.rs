//! The classical side: partitions, Young tableaux, RSK, jeu de taquin, the
//! chain and weak orders on standard tableaux, and Kostka numbers.
//!
//! Tableaux use the French convention: row 0 is the bottom (longest) row and
//! entries increase to the right and upwards. The text form lists rows
//! bottom first, separated by `;`, e.g. `1 2 4;3 5`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibokostka::KostkaMatrix;
use crate::par::Exec;
use crate::poset::{FinitePoset, RankedPoset};
use crate::yfinsertion::permutations;

/// Default ceiling for the exhaustive orders on standard tableaux.
pub const SYT_BOUND: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::ParsePartition {
                token: parts.iter().join(","),
            });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("e")
        } else if self.parts.iter().all(|&p| p <= 9) {
            write!(f, "{}", self.parts.iter().join(""))
        } else {
            write!(f, "{}", self.parts.iter().join(","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Partition::default());
        }
        let bad = |tok: &str| Error::ParsePartition { token: tok.into() };
        let parts = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<u32>().map_err(|_| bad(tok.trim())))
                .collect::<Result<Vec<_>>>()?
        } else {
            if s.is_empty() {
                return Err(bad(s));
            }
            s.chars()
                .map(|ch| ch.to_digit(10).filter(|&d| d > 0).ok_or_else(|| bad(&ch.to_string())))
                .collect::<Result<Vec<_>>>()?
        };
        Partition::new(parts)
    }
}

/// Partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=left.min(max)).rev() {
            prefix.push(p);
            rec(left - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// `μ ≤ λ` in dominance order: every prefix sum of `λ` is at least the
/// matching prefix sum of `μ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    let k = mu.len().min(lambda.len());
    let mut sm = 0;
    let mut sl = 0;
    for i in 0..k {
        sm += mu.parts[i];
        sl += lambda.parts[i];
        if sl < sm {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    /// Rows bottom first; only the shape is checked.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = YoungTableau { rows };
        if t.rows.iter().any(Vec::is_empty) || t.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::ParseTableau {
                token: t.to_string(),
            });
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len() as u32).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Rows weakly increasing, columns strictly increasing upwards.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        rows_ok && cols_ok && self.entries().all(|x| x > 0)
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        self.is_semistandard() && self.entries().sorted().eq(1..=n)
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("e");
        }
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(" ")).collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungTableau({self})")
    }
}

impl FromStr for YoungTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(YoungTableau::default());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>()
                            .map_err(|_| Error::ParseTableau { token: tok.into() })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        YoungTableau::new(rows)
    }
}

/// Row-insertion tableau of a word of distinct letters.
pub fn rsk_word(word: &[u32]) -> YoungTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in word {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[r].iter().position(|&y| y > x) {
                Some(k) => {
                    std::mem::swap(&mut rows[r][k], &mut x);
                    r += 1;
                }
                None => {
                    rows[r].push(x);
                    break;
                }
            }
        }
    }
    YoungTableau { rows }
}

pub fn rsk_p(sigma: &crate::yfinsertion::Permutation) -> YoungTableau {
    rsk_word(sigma.word())
}

/// Standard tableaux of shape `lambda`, sorted; `n, n-1, …` go into
/// removable corners.
pub fn standard_tableaux(lambda: &Partition) -> Vec<YoungTableau> {
    fn go(shape: &mut Vec<usize>, k: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<YoungTableau>) {
        if k == 0 {
            out.push(YoungTableau {
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let next = shape.get(r + 1).copied().unwrap_or(0);
            if shape[r] > next {
                shape[r] -= 1;
                rows[r][shape[r]] = k;
                go(shape, k - 1, rows, out);
                shape[r] += 1;
            }
        }
    }
    let mut shape: Vec<usize> = lambda.parts.iter().map(|&p| p as usize).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    go(&mut shape, lambda.size() as u32, &mut rows, &mut out);
    out.sort();
    out
}

/// Every standard tableau of size `n`, by shape in descending order.
pub fn standard_tableaux_of_size(n: usize) -> Vec<YoungTableau> {
    partitions(n).iter().flat_map(standard_tableaux).collect()
}

fn check_range(t: &YoungTableau, i: usize, j: usize) -> Result<()> {
    let n = t.size();
    if i < 1 || i > j || j > n {
        return Err(Error::BadRange { i, j, n });
    }
    Ok(())
}

/// Shape of the entries `i..=j` of `t` after rectification by jeu de taquin.
pub fn restricted_shape(t: &YoungTableau, i: usize, j: usize) -> Result<Partition> {
    check_range(t, i, j)?;
    let (lo, hi) = (i as u32, j as u32);
    // cells below `lo` form the inner shape; cells above `hi` are dropped
    let mut grid: Vec<Vec<Option<u32>>> = t
        .rows
        .iter()
        .map(|r| r.iter().filter(|&&x| x <= hi).map(|&x| (x >= lo).then_some(x)).collect())
        .filter(|r: &Vec<Option<u32>>| !r.is_empty())
        .collect();
    loop {
        // an inner corner: a hole with no hole to its right or above
        let corner = grid.iter().enumerate().find_map(|(r, row)| {
            let c = row.iter().rposition(Option::is_none)?;
            let above_is_hole = grid
                .get(r + 1)
                .and_then(|up| up.get(c))
                .is_some_and(Option::is_none);
            (!above_is_hole && row[..c].iter().all(Option::is_none)).then_some((r, c))
        });
        let Some((mut r, mut c)) = corner else { break };
        loop {
            let right = grid[r].get(c + 1).copied().flatten();
            let above = grid.get(r + 1).and_then(|up| up.get(c)).copied().flatten();
            let step = match (right, above) {
                (Some(a), Some(b)) if a < b => Some((r, c + 1)),
                (Some(_), Some(_)) => Some((r + 1, c)),
                (Some(_), None) => Some((r, c + 1)),
                (None, Some(_)) => Some((r + 1, c)),
                (None, None) => None,
            };
            match step {
                Some((r2, c2)) => {
                    grid[r][c] = grid[r2][c2];
                    grid[r2][c2] = None;
                    (r, c) = (r2, c2);
                }
                None => {
                    grid[r].truncate(c);
                    break;
                }
            }
        }
        grid.retain(|row| !row.is_empty());
    }
    Ok(Partition {
        parts: grid.iter().map(|r| r.len() as u32).collect(),
    })
}

/// Oracle: RSK shape of the row reading word (top row first) of the entries
/// `i..=j`.
pub fn restricted_shape_by_rsk(t: &YoungTableau, i: usize, j: usize) -> Result<Partition> {
    check_range(t, i, j)?;
    let word: Vec<u32> = t
        .rows
        .iter()
        .rev()
        .flatten()
        .copied()
        .filter(|&x| x as usize >= i && x as usize <= j)
        .collect();
    Ok(rsk_word(&word).shape())
}

/// Every restriction of `t` dominates the matching restriction of `u`.
pub fn chain_leq(t: &YoungTableau, u: &YoungTableau) -> Result<bool> {
    if t.size() != u.size() {
        return Err(Error::SizeMismatch {
            left: t.size(),
            right: u.size(),
        });
    }
    let n = t.size();
    for i in 1..=n {
        for j in i..=n {
            let a = restricted_shape(t, i, j)?;
            let b = restricted_shape(u, i, j)?;
            if !dominance_leq(&b, &a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Chain,
    Weak,
}

fn ranked(elements: Vec<YoungTableau>, poset: FinitePoset) -> RankedPoset<YoungTableau> {
    // height: longest chain from a minimal element
    let order = poset.topological_order().expect("acyclic");
    let mut height = vec![0; elements.len()];
    for &x in &order {
        for &y in poset.upper_covers(x) {
            height[y] = height[y].max(height[x] + 1);
        }
    }
    RankedPoset::new(elements, poset, height)
}

/// Transitive closure of the RSK images of the weak-order covers of `S_n`.
/// Ranks are heights above the minimum.
pub fn weak_order_syt(n: usize) -> Result<RankedPoset<YoungTableau>> {
    weak_order_syt_with_bound(n, SYT_BOUND)
}

pub fn weak_order_syt_with_bound(n: usize, bound: usize) -> Result<RankedPoset<YoungTableau>> {
    if n > bound {
        return Err(Error::Oversize { n, bound });
    }
    let elements = standard_tableaux_of_size(n);
    let index: HashMap<&YoungTableau, usize> =
        elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut relations = Vec::new();
    for s in permutations(n) {
        let p = index[&rsk_p(&s)];
        for k in 0..n.saturating_sub(1) {
            if s.word()[k] < s.word()[k + 1] {
                let q = index[&rsk_p(&s.swap_adjacent(k))];
                if p != q {
                    relations.push((p, q));
                }
            }
        }
    }
    relations.sort_unstable();
    relations.dedup();
    let poset = FinitePoset::from_relations(elements.len(), relations)?;
    Ok(ranked(elements, poset))
}

pub fn chain_order_syt(n: usize) -> Result<RankedPoset<YoungTableau>> {
    chain_order_syt_with(n, SYT_BOUND, Exec::default())
}

pub fn chain_order_syt_with(n: usize, bound: usize, exec: Exec) -> Result<RankedPoset<YoungTableau>> {
    if n > bound {
        return Err(Error::Oversize { n, bound });
    }
    let elements = standard_tableaux_of_size(n);
    let rows = exec.map(&elements, |a| {
        elements
            .iter()
            .map(|b| chain_leq(a, b).expect("same size"))
            .collect::<Vec<bool>>()
    });
    let relations = rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, &le)| le).map(move |(j, _)| (i, j)))
        .collect::<Vec<_>>();
    let poset = FinitePoset::from_relations(elements.len(), relations)?;
    Ok(ranked(elements, poset))
}

pub fn order_syt(n: usize, order: Order, bound: usize, exec: Exec) -> Result<RankedPoset<YoungTableau>> {
    match order {
        Order::Chain => chain_order_syt_with(n, bound, exec),
        Order::Weak => weak_order_syt_with_bound(n, bound),
    }
}

/// `rT_μ`: `1..n` row by row from the bottom, left to right.
pub fn row_canonical(mu: &Partition) -> YoungTableau {
    let mut next = 0;
    let rows = mu
        .parts
        .iter()
        .map(|&p| {
            (0..p)
                .map(|_| {
                    next += 1;
                    next
                })
                .collect()
        })
        .collect();
    YoungTableau { rows }
}

fn check_same_size(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() == mu.size() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        })
    }
}

/// Semistandard tableaux of shape `λ` and content `μ`, counted by filling
/// rows bottom to top.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_same_size(lambda, mu)?;
    fn go(
        shape: &[usize],
        r: usize,
        c: usize,
        rows: &mut Vec<Vec<u32>>,
        left: &mut [usize],
    ) -> u64 {
        if r == shape.len() {
            return 1;
        }
        if c == shape[r] {
            rows.push(Vec::new());
            let x = go(shape, r + 1, 0, rows, left);
            rows.pop();
            return x;
        }
        let row_min = if c > 0 { rows[r][c - 1] } else { 1 };
        let col_min = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for x in row_min.max(col_min)..=left.len() as u32 {
            if left[x as usize - 1] == 0 {
                continue;
            }
            left[x as usize - 1] -= 1;
            rows[r].push(x);
            total += go(shape, r, c + 1, rows, left);
            rows[r].pop();
            left[x as usize - 1] += 1;
        }
        total
    }
    let shape: Vec<usize> = lambda.parts.iter().map(|&p| p as usize).collect();
    let mut left: Vec<usize> = mu.parts.iter().map(|&p| p as usize).collect();
    if shape.is_empty() {
        return Ok(1);
    }
    Ok(go(&shape, 0, 0, &mut vec![Vec::new()], &mut left))
}

/// Tableaux of shape `λ` between the single-row tableau and `rT_μ` in a
/// prebuilt order.
pub fn kostka_in(p: &RankedPoset<YoungTableau>, lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_same_size(lambda, mu)?;
    let n = lambda.size();
    let bottom = row_canonical(&Partition::new(vec![n as u32])?);
    let top = p
        .index_of(&row_canonical(mu))
        .ok_or_else(|| Error::Invalid(format!("poset does not contain rT of {mu}")))?;
    let lo = p.index_of(&bottom).expect("single row tableau");
    Ok(p.poset()
        .interval(lo, top)?
        .into_iter()
        .filter(|&i| p.elements()[i].shape() == *lambda)
        .count() as u64)
}

pub fn kostka_by_interval(lambda: &Partition, mu: &Partition, order: Order) -> Result<u64> {
    check_same_size(lambda, mu)?;
    let p = order_syt(lambda.size(), order, SYT_BOUND, Exec::default())?;
    kostka_in(&p, lambda, mu)
}

pub fn kostka_matrix(n: usize) -> KostkaMatrix<Partition> {
    let order = partitions(n);
    let entries = order
        .iter()
        .map(|l| order.iter().map(|m| kostka(l, m).expect("same size")).collect())
        .collect();
    KostkaMatrix::new(order, entries)
}

pub fn kostka_matrix_by_interval(n: usize, order: Order, bound: usize, exec: Exec) -> Result<KostkaMatrix<Partition>> {
    let p = order_syt(n, order, bound, exec)?;
    let labels = partitions(n);
    let entries = labels
        .iter()
        .map(|l| labels.iter().map(|m| kostka_in(&p, l, m)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(KostkaMatrix::new(labels, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(x: &str) -> Partition {
        x.parse().unwrap()
    }

    fn yt(x: &str) -> YoungTableau {
        x.parse().unwrap()
    }

    #[test]
    fn partition_basics() {
        let names: Vec<String> = partitions(5).iter().map(ToString::to_string).collect();
        assert_eq!(names, ["5", "41", "32", "311", "221", "2111", "11111"]);
        assert_eq!(partitions(0), vec![Partition::default()]);
        assert!("12".parse::<Partition>().is_err());
        assert_eq!(part("10,2").parts(), &[10, 2]);
        assert_eq!(serde_json::to_string(&part("311")).unwrap(), "[3,1,1]");
    }

    #[test]
    fn dominance() {
        assert!(dominance_leq(&part("32"), &part("41")).unwrap());
        assert!(!dominance_leq(&part("41"), &part("32")).unwrap());
        assert!(dominance_leq(&part("221"), &part("311")).unwrap());
        assert!(dominance_leq(&part("311"), &part("311")).unwrap());
        assert!(!dominance_leq(&part("33"), &part("411")).unwrap());
        assert!(!dominance_leq(&part("411"), &part("33")).unwrap());
        assert!(dominance_leq(&part("2"), &part("11")).is_ok());
        assert!(dominance_leq(&part("2"), &part("1")).is_err());
    }

    /// Dominance by the textbook definition, padding with zeros.
    fn dominance_full(mu: &Partition, lambda: &Partition) -> bool {
        let k = mu.len().max(lambda.len());
        let get = |p: &Partition, i: usize| p.parts().get(i).copied().unwrap_or(0);
        (0..k).all(|i| (0..=i).map(|j| get(lambda, j)).sum::<u32>() >= (0..=i).map(|j| get(mu, j)).sum())
    }

    #[test]
    fn dominance_matches_padded_definition() {
        for n in 1..=8 {
            for a in partitions(n) {
                for b in partitions(n) {
                    assert_eq!(dominance_leq(&a, &b).unwrap(), dominance_full(&a, &b));
                }
            }
        }
    }

    #[test]
    fn rsk_basics() {
        let id = crate::yfinsertion::Permutation::identity(4);
        assert_eq!(rsk_p(&id).to_string(), "1 2 3 4");
        let rev: crate::yfinsertion::Permutation = "4321".parse().unwrap();
        assert_eq!(rsk_p(&rev).to_string(), "1;2;3;4");
        for n in 1..=6 {
            let total: usize = partitions(n).iter().map(|l| standard_tableaux(l).len().pow(2)).sum();
            assert_eq!(total, permutations(n).len());
            for s in permutations(n) {
                assert!(rsk_p(&s).is_standard());
            }
        }
    }

    #[test]
    fn tableau_text() {
        let t = yt("1 2 4;3 5");
        assert!(t.is_standard());
        assert_eq!(t.shape(), part("32"));
        assert!(YoungTableau::new(vec![vec![1, 2], vec![3, 4, 5]]).is_err());
        assert!(yt("1 3;2").is_standard());
        assert!(!yt("2 3;1").is_semistandard());
        assert!("1 2;x".parse::<YoungTableau>().is_err());
    }

    #[test]
    fn restrictions() {
        for n in 1..=6 {
            for t in standard_tableaux_of_size(n) {
                assert_eq!(restricted_shape(&t, 1, n).unwrap(), t.shape());
                for k in 1..=n {
                    assert_eq!(restricted_shape(&t, k, k).unwrap(), part("1"));
                }
                for i in 1..=n {
                    for j in i..=n {
                        assert_eq!(
                            restricted_shape(&t, i, j).unwrap(),
                            restricted_shape_by_rsk(&t, i, j).unwrap(),
                            "{t} [{i},{j}]"
                        );
                    }
                }
            }
        }
        let t = yt("1 2");
        assert!(matches!(restricted_shape(&t, 2, 1), Err(Error::BadRange { .. })));
        assert!(restricted_shape(&t, 1, 3).is_err());
    }

    #[test]
    fn chain_order_is_partial_order() {
        for n in 1..=5 {
            let tabs = standard_tableaux_of_size(n);
            let row = &tabs[0];
            for a in &tabs {
                assert!(chain_leq(a, a).unwrap());
                assert!(chain_leq(row, a).unwrap());
                for b in &tabs {
                    if a != b && chain_leq(a, b).unwrap() {
                        assert!(!chain_leq(b, a).unwrap());
                        for c in &tabs {
                            if chain_leq(b, c).unwrap() {
                                assert!(chain_leq(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_and_weak_orders_coincide() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                let w = weak_order_syt(n).unwrap();
                let c = chain_order_syt(n).unwrap();
                assert_eq!(w.elements(), c.elements());
                assert_eq!(w.poset(), c.poset(), "n = {n}");
                w.poset().relation_count()
            })
            .collect();
        assert_eq!(counts, [0, 1, 5, 29, 151]);
        assert_eq!(weak_order_syt(5).unwrap().len(), 26);
        assert_eq!(weak_order_syt(3).unwrap().len(), 4);
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part("41"), &part("221")).unwrap(), 2);
        assert_eq!(kostka(&part("311"), &part("221")).unwrap(), 1);
        assert_eq!(kostka(&part("32"), &part("221")).unwrap(), 2);
        for n in 1..=6 {
            let ones = Partition::new(vec![1; n]).unwrap();
            for l in partitions(n) {
                assert_eq!(kostka(&l, &ones).unwrap(), standard_tableaux(&l).len() as u64);
            }
        }
        assert!(kostka(&part("2"), &part("1")).is_err());
    }

    #[test]
    fn kostka_by_both_orders() {
        for n in 1..=5 {
            let m = kostka_matrix(n);
            for order in [Order::Chain, Order::Weak] {
                let by = kostka_matrix_by_interval(n, order, SYT_BOUND, Exec::default()).unwrap();
                assert!(m.diff(&by).is_empty(), "n = {n} {order:?}: {:?}", m.diff(&by));
            }
        }
        assert_eq!(kostka_by_interval(&part("41"), &part("221"), Order::Chain).unwrap(), 2);
    }

    #[test]
    fn interval_extremes() {
        for n in 1..=5 {
            let p = weak_order_syt(n).unwrap();
            let bottom = &p.elements()[0];
            assert_eq!(p.minimal(), vec![bottom]);
            for mu in partitions(n) {
                let top = row_canonical(&mu);
                assert!(top.is_standard());
                let inside = p.interval(bottom, &top).unwrap();
                assert!(inside.iter().all(|t| p.leq(t, &top)));
            }
        }
    }
}
