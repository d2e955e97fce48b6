//! Finite posets given by their cover relation.
//!
//! Elements are indices `0..len`. The order relation is computed on demand
//! (and cached) as one up-set bitset per element, so a poset built only to be
//! walked along its covers never pays for the closure.

use std::collections::{HashMap, VecDeque};
use std::fmt::{Display, Write as _};
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug)]
pub struct FinitePoset {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: OnceLock<Vec<FixedBitSet>>,
    below: OnceLock<Vec<FixedBitSet>>,
}

impl Clone for FinitePoset {
    fn clone(&self) -> Self {
        FinitePoset::from_cover_lists(self.up.clone())
    }
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl FinitePoset {
    fn from_cover_lists(mut up: Vec<Vec<usize>>) -> Self {
        let n = up.len();
        let mut down = vec![Vec::new(); n];
        for (x, ys) in up.iter_mut().enumerate() {
            ys.sort_unstable();
            ys.dedup();
            for &y in ys.iter() {
                down[y].push(x);
            }
        }
        FinitePoset {
            up,
            down,
            above: OnceLock::new(),
            below: OnceLock::new(),
        }
    }

    /// Builds a poset from cover pairs `(x, y)`, meaning `x ⋖ y`.
    ///
    /// Fails on cycles and on pairs implied by other pairs.
    pub fn from_covers<I>(n: usize, covers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let p = Self::from_covers_unchecked(n, covers)?;
        p.topological_order()?;
        for x in 0..n {
            for &y in &p.up[x] {
                let shortcut = p.up[x]
                    .iter()
                    .any(|&z| z != y && p.up_set(z).contains(y));
                if shortcut {
                    return Err(Error::Invalid(format!(
                        "cover ({x}, {y}) is implied by transitivity"
                    )));
                }
            }
        }
        Ok(p)
    }

    /// Trusts that the pairs are irreducible; only checks index bounds.
    pub fn from_covers_unchecked<I>(n: usize, covers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut up = vec![Vec::new(); n];
        for (x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::Invalid(format!("cover ({x}, {y}) out of range {n}")));
            }
            if x == y {
                return Err(Error::Cyclic);
            }
            up[x].push(y);
        }
        Ok(Self::from_cover_lists(up))
    }

    /// Builds the poset generated by arbitrary relations `x ≤ y`; the covers
    /// are the transitive reduction.
    pub fn from_relations<I>(n: usize, relations: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let generated = Self::from_covers_unchecked(
            n,
            relations.into_iter().filter(|(x, y)| x != y),
        )?;
        generated.topological_order()?;
        let closure = generated.up_sets();
        let mut up = vec![Vec::new(); n];
        for x in 0..n {
            // y covers x iff x < y and no z with x < z < y
            let strict: Vec<usize> = closure[x].ones().filter(|&y| y != x).collect();
            for &y in &strict {
                let between = strict
                    .iter()
                    .any(|&z| z != y && closure[z].contains(y));
                if !between {
                    up[x].push(y);
                }
            }
        }
        Ok(Self::from_cover_lists(up))
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Kahn order; smallest index first among available elements.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &self.up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(Error::Cyclic)
        }
    }

    fn up_sets(&self) -> &Vec<FixedBitSet> {
        self.above.get_or_init(|| {
            let n = self.len();
            let order = self.topological_order().expect("acyclic cover relation");
            let mut sets = vec![FixedBitSet::with_capacity(n); n];
            for &x in order.iter().rev() {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(x);
                for &y in &self.up[x] {
                    s.union_with(&sets[y]);
                }
                sets[x] = s;
            }
            sets
        })
    }

    fn down_sets(&self) -> &Vec<FixedBitSet> {
        self.below.get_or_init(|| {
            let n = self.len();
            let mut sets = vec![FixedBitSet::with_capacity(n); n];
            for (x, s) in self.up_sets().iter().enumerate() {
                for y in s.ones() {
                    sets[y].insert(x);
                }
            }
            sets
        })
    }

    /// `{ y : x ≤ y }`
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up_sets()[x]
    }

    /// `{ y : y ≤ x }`
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down_sets()[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up_set(x).contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Number of pairs `(x, y)` with `x ≤ y`, `x ≠ y`.
    pub fn relation_count(&self) -> usize {
        self.up_sets().iter().map(|s| s.count_ones(..) - 1).sum()
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if !self.leq(a, b) {
            return Err(Error::NotComparable);
        }
        let mut between = self.up_set(a).clone();
        between.intersect_with(self.down_set(b));
        Ok(between.ones().collect())
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    /// All linear extensions, each listing smaller elements first.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        fn rec(
            p: &FinitePoset,
            indeg: &mut [usize],
            prefix: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if prefix.len() == p.len() {
                out.push(prefix.clone());
                return;
            }
            for x in 0..p.len() {
                if indeg[x] != 0 || prefix.contains(&x) {
                    continue;
                }
                prefix.push(x);
                for &y in &p.up[x] {
                    indeg[y] -= 1;
                }
                rec(p, indeg, prefix, out);
                for &y in &p.up[x] {
                    indeg[y] += 1;
                }
                prefix.pop();
            }
        }
        let mut indeg: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut out = Vec::new();
        rec(self, &mut indeg, &mut Vec::with_capacity(self.len()), &mut out);
        out
    }

    /// Counts linear extensions by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> u64 {
        assert!(self.len() <= 64, "count_linear_extensions supports at most 64 elements");
        let preds: Vec<u64> = self
            .down
            .iter()
            .map(|ds| ds.iter().fold(0u64, |m, &x| m | 1 << x))
            .collect();
        let full = if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 };
        let mut memo: HashMap<u64, u64> = HashMap::new();
        fn rec(placed: u64, full: u64, preds: &[u64], memo: &mut HashMap<u64, u64>) -> u64 {
            if placed == full {
                return 1;
            }
            if let Some(&c) = memo.get(&placed) {
                return c;
            }
            let mut total = 0;
            for (x, &need) in preds.iter().enumerate() {
                let bit = 1u64 << x;
                if placed & bit == 0 && need & !placed == 0 {
                    total += rec(placed | bit, full, preds, memo);
                }
            }
            memo.insert(placed, total);
            total
        }
        rec(0, full, &preds, &mut memo)
    }

    /// For a poset where every element has at most one upper cover (a forest
    /// of trees hanging from their roots), `n! / ∏ |down_set(x)|`.
    pub fn forest_hook_count(&self) -> Option<u64> {
        if self.up.iter().any(|ys| ys.len() > 1) {
            return None;
        }
        let numerator: u128 = (1..=self.len() as u128).product();
        let denominator: u128 = (0..self.len())
            .map(|x| self.down_set(x).count_ones(..) as u128)
            .product();
        u64::try_from(numerator / denominator).ok()
    }

    /// Rank function if the poset is graded: minimal elements sit at rank 0,
    /// every cover raises the rank by one.
    pub fn grading(&self) -> Option<Vec<usize>> {
        let order = self.topological_order().ok()?;
        let mut rank: Vec<Option<usize>> = vec![None; self.len()];
        for &x in &order {
            let r = match self.down[x].first() {
                None => 0,
                Some(&w) => rank[w]? + 1,
            };
            if self.down[x].iter().any(|&w| rank[w] != Some(r - 1)) {
                return None;
            }
            rank[x] = Some(r);
        }
        rank.into_iter().collect()
    }

    pub fn is_graded(&self) -> bool {
        self.grading().is_some()
    }

    fn least_of(&self, candidates: &FixedBitSet) -> Option<usize> {
        candidates
            .ones()
            .find(|&m| candidates.is_subset(self.up_set(m)))
    }

    fn greatest_of(&self, candidates: &FixedBitSet) -> Option<usize> {
        candidates
            .ones()
            .find(|&m| candidates.is_subset(self.down_set(m)))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut ub = self.up_set(x).clone();
        ub.intersect_with(self.up_set(y));
        self.least_of(&ub)
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut lb = self.down_set(x).clone();
        lb.intersect_with(self.down_set(y));
        self.greatest_of(&lb)
    }

    /// Unordered pairs lacking a join or a meet.
    pub fn non_lattice_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut bad = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if self.comparable(x, y) {
                    continue;
                }
                if self.join(x, y).is_none() || self.meet(x, y).is_none() {
                    bad.push((x, y));
                }
            }
        }
        bad
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.comparable(x, y) || (self.join(x, y).is_some() && self.meet(x, y).is_some())
            })
        })
    }

    /// DOT digraph, bottom to top; `layers` groups nodes into `rank=same`
    /// rows when given.
    pub fn to_dot<F>(&self, name: &str, label: F, layers: Option<&[usize]>) -> String
    where
        F: Fn(usize) -> String,
    {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for x in 0..self.len() {
            let _ = writeln!(out, "  n{x} [label=\"{}\"];", label(x));
        }
        if let Some(rank) = layers {
            let top = rank.iter().copied().max().unwrap_or(0);
            for r in 0..=top {
                let ids: Vec<String> = (0..self.len())
                    .filter(|&x| rank[x] == r)
                    .map(|x| format!("n{x}"))
                    .collect();
                if !ids.is_empty() {
                    let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
                }
            }
        }
        for (x, y) in self.covers() {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }
}

/// A poset whose elements carry values and a rank statistic.
#[derive(Clone, Debug)]
pub struct RankedPoset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    poset: FinitePoset,
    rank: Vec<usize>,
}

impl<T: Clone + Eq + Hash + Display> RankedPoset<T> {
    pub fn new(elements: Vec<T>, poset: FinitePoset, rank: Vec<usize>) -> Self {
        assert_eq!(elements.len(), poset.len());
        assert_eq!(elements.len(), rank.len());
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        RankedPoset {
            elements,
            index,
            poset,
            rank,
        }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn rank_of(&self, x: &T) -> Option<usize> {
        self.index_of(x).map(|i| self.rank[i])
    }

    pub fn leq(&self, x: &T, y: &T) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.poset.leq(i, j),
            _ => false,
        }
    }

    pub fn upper_covers(&self, x: &T) -> Vec<&T> {
        self.index_of(x)
            .map(|i| self.poset.upper_covers(i).iter().map(|&j| &self.elements[j]).collect())
            .unwrap_or_default()
    }

    pub fn interval(&self, a: &T, b: &T) -> Result<Vec<&T>> {
        let (i, j) = match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => (i, j),
            _ => return Err(Error::Invalid("interval endpoint is not an element".into())),
        };
        Ok(self
            .poset
            .interval(i, j)?
            .into_iter()
            .map(|k| &self.elements[k])
            .collect())
    }

    /// Every cover raises the stored rank by exactly one.
    pub fn is_graded(&self) -> bool {
        self.poset
            .covers()
            .all(|(x, y)| self.rank[y] == self.rank[x] + 1)
    }

    pub fn minimal(&self) -> Vec<&T> {
        self.poset
            .minimal_elements()
            .into_iter()
            .map(|i| &self.elements[i])
            .collect()
    }

    pub fn maximal(&self) -> Vec<&T> {
        self.poset
            .maximal_elements()
            .into_iter()
            .map(|i| &self.elements[i])
            .collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.poset
            .to_dot(name, |i| self.elements[i].to_string(), Some(&self.rank))
    }

    /// `{"elements": [...], "rank": [...], "covers": [[i, j], ...]}`
    pub fn to_json(&self) -> Value {
        let elements: Vec<String> = self.elements.iter().map(ToString::to_string).collect();
        let covers: Vec<[usize; 2]> = self.poset.covers().map(|(x, y)| [x, y]).collect();
        json!({ "elements": elements, "rank": self.rank, "covers": covers })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_lattice(k: usize) -> FinitePoset {
        let n = 1 << k;
        let covers = (0..n).flat_map(|x| {
            (0..k)
                .filter(move |b| x & (1 << b) == 0)
                .map(move |b| (x, x | (1 << b)))
        });
        FinitePoset::from_covers(n, covers).unwrap()
    }

    #[test]
    fn chain_basics() {
        let p = FinitePoset::from_covers(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(p.interval(0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(p.interval(1, 1).unwrap(), vec![1]);
        assert_eq!(p.interval(2, 0), Err(Error::NotComparable));
        assert_eq!(p.linear_extensions(), vec![vec![0, 1, 2]]);
        assert_eq!(p.grading(), Some(vec![0, 1, 2]));
        assert!(p.is_lattice());
        assert_eq!(p.relation_count(), 3);
    }

    #[test]
    fn rejects_cycles_and_shortcuts() {
        assert_eq!(
            FinitePoset::from_covers(2, [(0, 1), (1, 0)]).unwrap_err(),
            Error::Cyclic
        );
        assert!(FinitePoset::from_covers(3, [(0, 1), (1, 2), (0, 2)]).is_err());
        let reduced = FinitePoset::from_relations(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(reduced.covers().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            FinitePoset::from_relations(2, [(0, 1), (1, 0)]).unwrap_err(),
            Error::Cyclic
        );
    }

    #[test]
    fn antichain_extensions() {
        let p = FinitePoset::from_covers(4, []).unwrap();
        assert_eq!(p.linear_extensions().len(), 24);
        assert_eq!(p.count_linear_extensions(), 24);
        assert!(!p.is_lattice());
        assert_eq!(p.forest_hook_count(), Some(24));
    }

    #[test]
    fn boolean_lattice_properties() {
        let p = boolean_lattice(3);
        assert!(p.is_lattice());
        assert!(p.is_graded());
        assert_eq!(p.linear_extensions().len(), 48);
        assert_eq!(p.count_linear_extensions(), 48);
        assert_eq!(p.join(1, 2), Some(3));
        assert_eq!(p.meet(3, 6), Some(2));
        assert_eq!(p.forest_hook_count(), None);
    }

    #[test]
    fn bowtie_is_not_a_lattice() {
        // 0,1 below both 2,3
        let p = FinitePoset::from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!p.is_lattice());
        assert!(p.non_lattice_pairs().contains(&(0, 1)));
        assert!(p.non_lattice_pairs().contains(&(2, 3)));
    }

    #[test]
    fn ungraded_pentagon() {
        let p = FinitePoset::from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        assert!(!p.is_graded());
        assert!(p.is_lattice());
    }

    #[test]
    fn tree_hook_formula() {
        // root 0 with children 1, 2; 1 has child 3
        let p = FinitePoset::from_covers(4, [(1, 0), (2, 0), (3, 1)]).unwrap();
        assert_eq!(p.forest_hook_count(), Some(3));
        assert_eq!(p.linear_extensions().len(), 3);
    }

    #[test]
    fn ranked_wrapper() {
        let p = FinitePoset::from_covers(3, [(0, 1), (0, 2)]).unwrap();
        let r = RankedPoset::new(vec!["a", "b", "c"], p, vec![0, 1, 1]);
        assert!(r.is_graded());
        assert!(r.leq(&"a", &"c"));
        assert_eq!(r.minimal(), vec![&"a"]);
        assert_eq!(r.interval(&"a", &"b").unwrap(), vec![&"a", &"b"]);
        let dot = r.to_dot("t");
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("rank=same; n1; n2;"));
        assert_eq!(r.to_json()["covers"], json!([[0, 1], [0, 2]]));
    }
}
