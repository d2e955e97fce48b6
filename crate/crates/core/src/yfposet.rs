//! Shifting entries, the graded weak order on Young-Fibonacci tableaux, and
//! the weak order on permutations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::par::Exec;
pub use crate::poset::{FinitePoset, RankedPoset};
use crate::yfinsertion::{insert_p, permutations, Permutation};
use crate::yftableau::{min_cano, standard_tableaux_of_size, Column, YfTableau};

/// Default ceiling for the exhaustive posets.
pub const POSET_BOUND: usize = 8;

/// Shifts the bottom entry of column `j` (`j ≥ 1`) into column `j - 1`,
/// when legal.
fn shift_column(cols: &[Column], j: usize) -> Option<Vec<Column>> {
    let Column { bottom: a, top: b } = cols[j];
    let left = cols[j - 1];
    if a >= left.bottom {
        return None;
    }
    let c = left.bottom;
    let fallen = b.map(Column::single);
    let merged: Vec<Column> = match (left.top, b) {
        (None, _) => std::iter::once(Column::pair(a, c)).chain(fallen).collect(),
        (Some(d), Some(b)) if c < b => vec![Column::pair(a, d), Column::pair(c, b)],
        (Some(d), _) => [Column::pair(a, d), Column::single(c)]
            .into_iter()
            .chain(fallen)
            .collect(),
    };
    let mut out = cols[..j - 1].to_vec();
    out.extend(merged);
    out.extend_from_slice(&cols[j + 1..]);
    Some(out)
}

/// Every tableau reached from `t` by one shift, sorted.
pub fn shift_targets(t: &YfTableau) -> Result<Vec<YfTableau>> {
    t.require_standard()?;
    let mut out: Vec<YfTableau> = (1..t.columns().len())
        .filter_map(|j| shift_column(t.columns(), j))
        .map(YfTableau::new)
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Shifts the entry `a`, which must be the bottom of a column other than the
/// first. `None` when the move is not legal.
pub fn shift_entry(t: &YfTableau, a: u32) -> Result<Option<YfTableau>> {
    t.require_standard()?;
    Ok(match t.locate(a) {
        Some((j, false)) if j >= 1 => shift_column(t.columns(), j).map(YfTableau::new),
        _ => None,
    })
}

/// Inversion number of the minimal canonical word.
pub fn rank(t: &YfTableau) -> Result<usize> {
    Ok(min_cano(t)?.inversions())
}

pub fn weak_order_yft(n: usize) -> Result<RankedPoset<YfTableau>> {
    weak_order_yft_with(n, POSET_BOUND, Exec::default())
}

/// Tableaux of size `n` covered by the shifts.
pub fn weak_order_yft_with(n: usize, bound: usize, exec: Exec) -> Result<RankedPoset<YfTableau>> {
    if n > bound {
        return Err(Error::Oversize { n, bound });
    }
    let elements = standard_tableaux_of_size(n);
    let index: HashMap<&YfTableau, usize> =
        elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let targets = exec.map(&elements, |t| shift_targets(t).expect("standard"));
    let covers = targets
        .iter()
        .enumerate()
        .flat_map(|(i, ts)| ts.iter().map(move |t| (i, t)))
        .map(|(i, t)| (i, index[t]))
        .collect::<Vec<_>>();
    let ranks = exec.map(&elements, |t| rank(t).expect("standard"));
    let poset = FinitePoset::from_covers_unchecked(elements.len(), covers)?;
    Ok(RankedPoset::new(elements, poset, ranks))
}

pub fn weak_order_sn(n: usize) -> Result<RankedPoset<Permutation>> {
    weak_order_sn_with_bound(n, POSET_BOUND)
}

/// Right multiplication by adjacent transpositions that add an inversion.
pub fn weak_order_sn_with_bound(n: usize, bound: usize) -> Result<RankedPoset<Permutation>> {
    if n > bound {
        return Err(Error::Oversize { n, bound });
    }
    let elements = permutations(n);
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let covers: Vec<(usize, usize)> = elements
        .iter()
        .enumerate()
        .flat_map(|(i, s)| {
            (0..n.saturating_sub(1))
                .filter(|&k| s.word()[k] < s.word()[k + 1])
                .map(|k| (i, index[&s.swap_adjacent(k)]))
                .collect::<Vec<_>>()
        })
        .collect();
    let ranks = elements.iter().map(Permutation::inversions).collect();
    let poset = FinitePoset::from_covers_unchecked(elements.len(), covers)?;
    Ok(RankedPoset::new(elements, poset, ranks))
}

/// Order on tableaux generated by the images `P(σ) ≤ P(σ s_i)` of the
/// covers of the weak order on `S_n`.
pub fn weak_order_yft_by_images(n: usize, bound: usize) -> Result<RankedPoset<YfTableau>> {
    if n > bound {
        return Err(Error::Oversize { n, bound });
    }
    let elements = standard_tableaux_of_size(n);
    let index: HashMap<&YfTableau, usize> =
        elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut relations = Vec::new();
    for s in permutations(n) {
        let p = index[&insert_p(&s)];
        for k in 0..n.saturating_sub(1) {
            if s.word()[k] < s.word()[k + 1] {
                let q = index[&insert_p(&s.swap_adjacent(k))];
                if p != q {
                    relations.push((p, q));
                }
            }
        }
    }
    relations.sort_unstable();
    relations.dedup();
    let ranks = elements.iter().map(|t| rank(t).expect("standard")).collect();
    let poset = FinitePoset::from_relations(elements.len(), relations)?;
    Ok(RankedPoset::new(elements, poset, ranks))
}

/// The unique maximal tableau, if there is exactly one.
pub fn one_hat(p: &RankedPoset<YfTableau>) -> Option<YfTableau> {
    match p.maximal().as_slice() {
        [top] => Some((*top).clone()),
        _ => None,
    }
}
