//! Snakeshapes and the Young-Fibonacci lattice.
//!
//! A snakeshape is a composition into parts 1 and 2, read left to right; part
//! index 0 is the front (leftmost) column. The empty shape is written `e`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Column heights of a Young-Fibonacci diagram, front column first.
///
/// The derived `Ord` is the lexicographic order with `2 > 1` (a proper prefix
/// sorts first). Tables list shapes of one size in *descending* order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Snakeshape {
    parts: Vec<u8>,
}

impl Snakeshape {
    pub fn empty() -> Self {
        Snakeshape { parts: Vec::new() }
    }

    pub fn from_parts<I: IntoIterator<Item = u8>>(parts: I) -> Result<Self> {
        let parts: Vec<u8> = parts.into_iter().collect();
        if let Some(bad) = parts.iter().find(|p| !matches!(p, 1 | 2)) {
            return Err(Error::ParseShape {
                token: bad.to_string(),
            });
        }
        Ok(Snakeshape { parts })
    }

    /// The single-row shape `1^n`.
    pub fn ones(n: usize) -> Self {
        Snakeshape { parts: vec![1; n] }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u8>) -> Self {
        debug_assert!(parts.iter().all(|p| matches!(p, 1 | 2)));
        Snakeshape { parts }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_twos(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 2).count()
    }

    /// Length of the maximal run of two-boxed columns at the front.
    pub fn leading_twos(&self) -> usize {
        self.parts.iter().take_while(|&&p| p == 2).count()
    }

    pub fn first_single(&self) -> Option<usize> {
        self.parts.iter().position(|&p| p == 1)
    }

    /// `part · self`
    pub fn prepend(&self, part: u8) -> Self {
        assert!(matches!(part, 1 | 2), "part must be 1 or 2");
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.parts);
        Snakeshape { parts }
    }

    /// `self · part`
    pub fn append(&self, part: u8) -> Self {
        assert!(matches!(part, 1 | 2), "part must be 1 or 2");
        let mut parts = self.parts.clone();
        parts.push(part);
        Snakeshape { parts }
    }

    /// Front column and the rest.
    pub fn split_first(&self) -> Option<(u8, Snakeshape)> {
        self.parts
            .split_first()
            .map(|(&p, rest)| (p, Snakeshape::from_parts_unchecked(rest.to_vec())))
    }

    /// Rest and the last column.
    pub fn split_last(&self) -> Option<(Snakeshape, u8)> {
        self.parts
            .split_last()
            .map(|(&p, rest)| (Snakeshape::from_parts_unchecked(rest.to_vec()), p))
    }
}

impl fmt::Display for Snakeshape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("e");
        }
        for p in &self.parts {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Snakeshape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Snakeshape({self})")
    }
}

impl FromStr for Snakeshape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" {
            return Ok(Snakeshape::empty());
        }
        if s.is_empty() {
            return Err(Error::ParseShape { token: s.into() });
        }
        let mut parts = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '1' => parts.push(1),
                '2' => parts.push(2),
                _ => {
                    return Err(Error::ParseShape {
                        token: ch.to_string(),
                    })
                }
            }
        }
        Ok(Snakeshape { parts })
    }
}

pub fn parse_shape(text: &str) -> Result<Snakeshape> {
    text.parse()
}

pub fn format_shape(u: &Snakeshape) -> String {
    u.to_string()
}

impl Serialize for Snakeshape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Snakeshape {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u8>::deserialize(deserializer)?;
        Snakeshape::from_parts(parts).map_err(serde::de::Error::custom)
    }
}

/// The three ways a shape can grow by one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cover {
    /// A single-boxed column attached in front.
    Prepend,
    /// The first single-boxed column (at this index) becomes two-boxed.
    Promote { column: usize },
    /// A single-boxed column inserted right after this column, which lies in
    /// the leading run of two-boxed columns.
    InsertAfter { column: usize },
}

/// All legal growth moves from `u`.
pub fn cover_moves(u: &Snakeshape) -> Vec<Cover> {
    let mut moves = vec![Cover::Prepend];
    if let Some(column) = u.first_single() {
        moves.push(Cover::Promote { column });
    }
    moves.extend((0..u.leading_twos()).map(|column| Cover::InsertAfter { column }));
    moves
}

pub fn apply_cover(u: &Snakeshape, cover: Cover) -> Snakeshape {
    let mut parts = u.parts.clone();
    match cover {
        Cover::Prepend => parts.insert(0, 1),
        Cover::Promote { column } => {
            assert_eq!(u.first_single(), Some(column), "not the first single column");
            parts[column] = 2;
        }
        Cover::InsertAfter { column } => {
            assert!(column < u.leading_twos(), "column outside the leading run of 2s");
            parts.insert(column + 1, 1);
        }
    }
    Snakeshape { parts }
}

/// Which move turns `u` into `v`, if `v` covers `u`.
pub fn classify_cover(u: &Snakeshape, v: &Snakeshape) -> Option<Cover> {
    if v.size() != u.size() + 1 {
        return None;
    }
    cover_moves(u)
        .into_iter()
        .find(|&m| apply_cover(u, m) == *v)
}

/// Shapes covering `u`, in descending order.
pub fn covers_up(u: &Snakeshape) -> Vec<Snakeshape> {
    let mut out: Vec<Snakeshape> = cover_moves(u)
        .into_iter()
        .map(|m| apply_cover(u, m))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Shapes covered by `v`, found by deleting each removable cell.
pub fn covers_down(v: &Snakeshape) -> Vec<Snakeshape> {
    let p = v.parts();
    let mut out = Vec::new();
    // front single column
    if p.first() == Some(&1) {
        out.push(Snakeshape::from_parts_unchecked(p[1..].to_vec()));
    }
    // top cell of any column in the leading run of 2s
    let k = v.leading_twos();
    for i in 0..k {
        let mut q = p.to_vec();
        q[i] = 1;
        out.push(Snakeshape::from_parts_unchecked(q));
    }
    // the single column right after a nonempty leading run of 2s
    if k >= 1 && p.get(k) == Some(&1) {
        let mut q = p.to_vec();
        q.remove(k);
        out.push(Snakeshape::from_parts_unchecked(q));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// All snakeshapes of size `n`, in descending lexicographic order.
pub fn shapes_of_size(n: usize) -> Vec<Snakeshape> {
    fn rec(n: usize, prefix: &mut Vec<u8>, out: &mut Vec<Snakeshape>) {
        if n == 0 {
            out.push(Snakeshape::from_parts_unchecked(prefix.clone()));
            return;
        }
        // 2 before 1 gives descending order directly
        if n >= 2 {
            prefix.push(2);
            rec(n - 2, prefix, out);
            prefix.pop();
        }
        prefix.push(1);
        rec(n - 1, prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Multiset of shapes; keeps generation order and repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ShapeMultiset {
    items: Vec<Snakeshape>,
}

impl ShapeMultiset {
    pub fn items(&self) -> &[Snakeshape] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn multiplicity(&self, u: &Snakeshape) -> usize {
        self.items.iter().filter(|w| *w == u).count()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Snakeshape> {
        self.items.iter()
    }
}

impl<'a> IntoIterator for &'a ShapeMultiset {
    type Item = &'a Snakeshape;
    type IntoIter = std::slice::Iter<'a, Snakeshape>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// `v^{1-}`: one item per part of `v`; a 1 is deleted, a 2 is lowered to 1.
pub fn v_one_minus(v: &Snakeshape) -> ShapeMultiset {
    let items = (0..v.len())
        .map(|i| {
            let mut q = v.parts().to_vec();
            if q[i] == 1 {
                q.remove(i);
            } else {
                q[i] = 1;
            }
            Snakeshape::from_parts_unchecked(q)
        })
        .collect();
    ShapeMultiset { items }
}

/// Number of saturated chains from the empty shape to `u`.
pub fn chain_count(u: &Snakeshape) -> u64 {
    fn rec(u: &Snakeshape, memo: &mut HashMap<Snakeshape, u64>) -> u64 {
        if u.is_empty() {
            return 1;
        }
        if let Some(&c) = memo.get(u) {
            return c;
        }
        let c = covers_down(u).iter().map(|w| rec(w, memo)).sum();
        memo.insert(u.clone(), c);
        c
    }
    rec(u, &mut HashMap::new())
}

/// Hasse diagram of ranks `0..=n` in DOT, one `rank=same` layer per size.
pub fn lattice_dot(n: usize) -> String {
    let mut out = String::from("digraph yfl {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for k in 0..=n {
        let layer: Vec<String> = shapes_of_size(k)
            .iter()
            .map(|u| format!("\"{u}\""))
            .collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", layer.join("; ")));
    }
    for k in 0..n {
        for u in shapes_of_size(k) {
            for v in covers_up(&u) {
                out.push_str(&format!("  \"{u}\" -> \"{v}\";\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Snakeshape {
        x.parse().unwrap()
    }

    fn words(v: &[Snakeshape]) -> Vec<String> {
        v.iter().map(|u| u.to_string()).collect()
    }

    #[test]
    fn parse_and_format() {
        let u = s("2212");
        assert_eq!(u.parts(), &[2, 2, 1, 2]);
        assert_eq!(u.size(), 7);
        assert_eq!(s("e").size(), 0);
        assert!(s("e").is_empty());
        let w = s("21211");
        assert_eq!((w.size(), w.len()), (7, 5));
        for word in ["e", "1", "2212", "111", "21211"] {
            assert_eq!(format_shape(&parse_shape(word).unwrap()), word);
        }
        assert_eq!(
            parse_shape("2132"),
            Err(Error::ParseShape { token: "3".into() })
        );
        assert!(parse_shape("").is_err());
        assert!(parse_shape("ee").is_err());
    }

    #[test]
    fn json_encoding() {
        let u = s("2212");
        assert_eq!(serde_json::to_string(&u).unwrap(), "[2,2,1,2]");
        let back: Snakeshape = serde_json::from_str("[2,2,1,2]").unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<Snakeshape>("[3]").is_err());
    }

    #[test]
    fn shapes_by_size() {
        assert_eq!(words(&shapes_of_size(3)), ["21", "12", "111"]);
        assert_eq!(words(&shapes_of_size(0)), ["e"]);
        let six = shapes_of_size(6);
        assert_eq!(six.len(), 13);
        assert_eq!(words(&six[..3]), ["222", "2211", "2121"]);
        for n in 2..=20 {
            assert_eq!(
                shapes_of_size(n).len(),
                shapes_of_size(n - 1).len() + shapes_of_size(n - 2).len()
            );
        }
        for n in 0..10 {
            let v = shapes_of_size(n);
            assert!(v.windows(2).all(|w| w[0] > w[1]));
            assert!(v.iter().all(|u| u.size() == n));
        }
    }

    #[test]
    fn up_covers() {
        assert_eq!(words(&covers_up(&s("21"))), ["22", "211", "121"]);
        assert_eq!(words(&covers_up(&s("e"))), ["1"]);
        assert_eq!(words(&covers_up(&s("22"))), ["221", "212", "122"]);
        assert_eq!(words(&covers_up(&s("12"))), ["22", "112"]);
    }

    #[test]
    fn down_covers() {
        assert_eq!(words(&covers_down(&s("1"))), ["e"]);
        assert_eq!(words(&covers_down(&s("21"))), ["2", "11"]);
        // brute force: every size-4 shape that 221 covers
        let oracle: Vec<Snakeshape> = shapes_of_size(4)
            .into_iter()
            .filter(|u| covers_up(u).contains(&s("221")))
            .collect();
        assert_eq!(covers_down(&s("221")), oracle);
        assert_eq!(words(&oracle), ["22", "211", "121"]);
    }

    #[test]
    fn cover_duality_and_sizes() {
        for n in 0..=8 {
            for u in shapes_of_size(n) {
                for v in covers_up(&u) {
                    assert_eq!(v.size(), u.size() + 1);
                    assert!(v.len() == u.len() || v.len() == u.len() + 1);
                    assert!(covers_down(&v).contains(&u));
                    assert!(classify_cover(&u, &v).is_some());
                }
                for w in shapes_of_size(n + 1) {
                    assert_eq!(
                        covers_up(&u).contains(&w),
                        covers_down(&w).contains(&u),
                        "{u} vs {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn one_minus() {
        assert_eq!(
            words(v_one_minus(&s("2112")).items()),
            ["1112", "212", "212", "2111"]
        );
        assert_eq!(v_one_minus(&s("2112")).multiplicity(&s("212")), 2);
        assert_eq!(words(v_one_minus(&s("1")).items()), ["e"]);
        assert_eq!(words(v_one_minus(&s("2")).items()), ["1"]);
        assert!(v_one_minus(&s("e")).is_empty());
    }

    #[test]
    fn chains() {
        assert_eq!(chain_count(&s("1")), 1);
        assert_eq!(chain_count(&s("2212")), 24);
        assert_eq!(chain_count(&s("221")), 8);
        let mut fact = 1u64;
        for n in 1..=8u64 {
            fact *= n;
            let total: u64 = shapes_of_size(n as usize)
                .iter()
                .map(|u| chain_count(u).pow(2))
                .sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn lattice_dot_counts() {
        let dot = lattice_dot(4);
        let vertices: usize = dot.lines().filter(|l| l.contains("rank=same")).map(|l| l.matches('"').count() / 2).sum();
        assert_eq!(vertices, 1 + 1 + 2 + 3 + 5);
        assert!(dot.contains("\"21\" -> \"121\";"));
    }
}
