//! The Young-Fibonacci insertion `σ ↦ (P(σ), Q(σ))` and its classes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::yftableau::{cano_poset, Column, YfTableau};

/// Default ceiling on tableau size for class enumeration.
pub const CLASS_BOUND: usize = 10;

/// A permutation in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            let i = x as usize;
            if i == 0 || i > n || seen[i] {
                return Err(Error::ParsePermutation {
                    token: x.to_string(),
                });
            }
            seen[i] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// 1-based position of `letter`.
    pub fn position(&self, letter: u32) -> Option<usize> {
        self.word.iter().position(|&x| x == letter).map(|i| i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &x)| self.word[x as usize - 1] as usize == i + 1)
    }

    pub fn inversions(&self) -> usize {
        self.word
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// Letters `1..=k` in the order they occur.
    pub fn restrict(&self, k: u32) -> Permutation {
        Permutation {
            word: self.word.iter().copied().filter(|&x| x <= k).collect(),
        }
    }

    /// The word with positions `i` and `i + 1` (0-based) exchanged.
    pub fn swap_adjacent(&self, i: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(i, i + 1);
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for x in &self.word {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::ParsePermutation { token: s.into() });
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim().parse::<u32>().map_err(|_| Error::ParsePermutation {
                        token: tok.trim().into(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Error::ParsePermutation {
                        token: ch.to_string(),
                    }),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let word = Vec::<u32>::deserialize(deserializer)?;
        Permutation::new(word).map_err(serde::de::Error::custom)
    }
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    (1..=n as u32)
        .permutations(n)
        .map(|word| Permutation { word })
        .collect()
}

pub fn involutions(n: usize) -> Vec<Permutation> {
    permutations(n)
        .into_iter()
        .filter(Permutation::is_involution)
        .collect()
}

/// Inversions `(j, i)`: `i < j` with `j` written left of `i`.
pub fn inv_set(sigma: &Permutation) -> Vec<(u32, u32)> {
    sigma
        .word()
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .map(|(&a, &b)| (a, b))
        .sorted()
        .collect()
}

/// Non-inversions `(i, j)`: `i < j` with `i` written left of `j`.
pub fn noninv_set(sigma: &Permutation) -> Vec<(u32, u32)> {
    sigma
        .word()
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a < b)
        .map(|(&a, &b)| (a, b))
        .sorted()
        .collect()
}

fn pair_bit(small: u32, large: u32) -> u32 {
    (large - 1) * (large - 2) / 2 + (small - 1)
}

/// The inversion set as a bitmask; supports `n ≤ 16`.
pub fn inversion_mask(sigma: &Permutation) -> u128 {
    assert!(sigma.len() <= 16, "inversion masks support n ≤ 16");
    sigma
        .word()
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .fold(0u128, |m, (&a, &b)| m | 1u128 << pair_bit(b, a))
}

/// Weak order: inversion-set containment.
pub fn weak_leq(sigma: &Permutation, tau: &Permutation) -> bool {
    let (a, b) = (inversion_mask(sigma), inversion_mask(tau));
    a & !b == 0
}

/// Result of the right-to-left matching scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `(a, b)` with `a < b`, in the order they were formed.
    pub pairs: Vec<(u32, u32)>,
    /// Unmatched letters, right to left.
    pub singles: Vec<u32>,
    word: Vec<u32>,
}

impl Matching {
    /// 1-based position of `letter` in the scanned word.
    pub fn position(&self, letter: u32) -> Option<usize> {
        self.word.iter().position(|&x| x == letter).map(|i| i + 1)
    }
}

/// Scan right to left; each unmatched letter is paired with the largest
/// unmatched letter to its left when that letter is larger.
pub fn match_word(word: &[u32]) -> Matching {
    let n = word.len();
    let mut matched = vec![false; n];
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    for i in (0..n).rev() {
        if matched[i] {
            continue;
        }
        matched[i] = true;
        let partner = (0..i)
            .filter(|&k| !matched[k])
            .max_by_key(|&k| word[k])
            .filter(|&k| word[k] > word[i]);
        match partner {
            Some(k) => {
                matched[k] = true;
                pairs.push((word[i], word[k]));
            }
            None => singles.push(word[i]),
        }
    }
    Matching {
        pairs,
        singles,
        word: word.to_vec(),
    }
}

pub fn match_letters(sigma: &Permutation) -> Matching {
    match_word(sigma.word())
}

/// Insertion and recording tableaux of a word with distinct positive letters.
pub fn insert_word(word: &[u32]) -> (YfTableau, YfTableau) {
    let m = match_word(word);
    let pos = |x: u32| m.position(x).expect("letter of the word") as u32;
    let mut cols: Vec<(Column, Column)> = m
        .pairs
        .iter()
        .map(|&(a, b)| (Column::pair(a, b), Column::pair(pos(b), pos(a))))
        .chain(
            m.singles
                .iter()
                .map(|&c| (Column::single(c), Column::single(pos(c)))),
        )
        .collect();
    cols.sort_by_key(|x| std::cmp::Reverse(x.0.topmost()));
    let (p, q) = cols.into_iter().unzip();
    (YfTableau::new(p), YfTableau::new(q))
}

pub fn insert_word_p(word: &[u32]) -> YfTableau {
    insert_word(word).0
}

pub fn insert_p(sigma: &Permutation) -> YfTableau {
    insert_word(sigma.word()).0
}

pub fn insert_pq(sigma: &Permutation) -> (YfTableau, YfTableau) {
    insert_word(sigma.word())
}

/// All permutations with insertion tableau `t`, as the linear extensions of
/// its canonical poset, sorted.
pub fn fibo_class(t: &YfTableau) -> Result<Vec<Permutation>> {
    fibo_class_with_bound(t, CLASS_BOUND)
}

pub fn fibo_class_with_bound(t: &YfTableau, bound: usize) -> Result<Vec<Permutation>> {
    if t.size() > bound {
        return Err(Error::Oversize { n: t.size(), bound });
    }
    let p = cano_poset(t)?;
    let mut class: Vec<Permutation> = p
        .linear_extensions()
        .into_iter()
        .map(|ext| Permutation {
            word: ext.into_iter().map(|i| i as u32 + 1).collect(),
        })
        .collect();
    class.sort();
    Ok(class)
}

/// Brute-force filter of `S_n` by insertion tableau.
pub fn fibo_class_brute(t: &YfTableau) -> Vec<Permutation> {
    permutations(t.size())
        .into_iter()
        .filter(|s| insert_p(s) == *t)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakeshape::shapes_of_size;
    use crate::yftableau::{hook_count, standard_tableaux_of_size};
    use std::collections::HashSet;

    fn perm(x: &str) -> Permutation {
        x.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(perm("2715643").word(), &[2, 7, 1, 5, 6, 4, 3]);
        let long = Permutation::identity(11);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert_eq!(
            "2a1".parse::<Permutation>(),
            Err(Error::ParsePermutation { token: "a".into() })
        );
        assert_eq!(
            "1231".parse::<Permutation>(),
            Err(Error::ParsePermutation { token: "1".into() })
        );
        assert!("13".parse::<Permutation>().is_err());
    }

    #[test]
    fn matching_examples() {
        let m = match_letters(&perm("2715643"));
        let pairs: HashSet<_> = m.pairs.iter().copied().collect();
        assert_eq!(pairs, HashSet::from([(3, 7), (4, 6), (1, 2)]));
        assert_eq!(m.singles, vec![5]);
        assert_eq!(match_letters(&perm("1")).singles, vec![1]);
        let m12 = match_letters(&perm("12"));
        assert!(m12.pairs.is_empty());
        assert_eq!(m12.singles, vec![2, 1]);
        assert_eq!(match_letters(&perm("21")).pairs, vec![(1, 2)]);
    }

    #[test]
    fn insertion_examples() {
        let (p, q) = insert_pq(&perm("2715643"));
        assert_eq!(p.to_string(), "3:7 4:6 5 1:2");
        assert_eq!(q.to_string(), "2:7 5:6 4 1:3");
        let (p, q) = insert_pq(&perm("3142"));
        assert_eq!(p.to_string(), "2:4 1:3");
        assert_eq!(q.to_string(), "3:4 1:2");
        let (p, q) = insert_pq(&Permutation::identity(5));
        assert_eq!(p.to_string(), "5 4 3 2 1");
        assert_eq!(q, p);
    }

    #[test]
    fn inverse_gives_recording_tableau() {
        for n in 1..=6 {
            for s in permutations(n) {
                let (p, q) = insert_pq(&s);
                assert!(p.is_standard() && q.is_standard(), "{s}");
                assert_eq!(p.shape(), q.shape());
                assert_eq!(insert_p(&s.inverse()), q, "{s}");
            }
        }
    }

    #[test]
    fn involutions_are_column_readings() {
        for n in 1..=7 {
            for s in involutions(n) {
                let (p, q) = insert_pq(&s);
                assert_eq!(p, q);
                assert_eq!(crate::yftableau::cano_involution(&p).unwrap(), s);
            }
        }
    }

    #[test]
    fn correspondence_is_bijective() {
        for n in 1..=6 {
            let images: HashSet<_> = permutations(n).iter().map(insert_pq).collect();
            let total: u64 = shapes_of_size(n).iter().map(|u| hook_count(u).pow(2)).sum();
            assert_eq!(images.len() as u64, total);
            assert_eq!(images.len(), permutations(n).len());
        }
    }

    #[test]
    fn inversion_sets() {
        assert_eq!(inv_set(&perm("21")), vec![(2, 1)]);
        assert!(noninv_set(&perm("21")).is_empty());
        assert_eq!(inv_set(&perm("2135476")).len(), 3);
        assert_eq!(inv_set(&perm("4356271")).len(), 11);
        for s in permutations(5) {
            assert_eq!(inv_set(&s).len() + noninv_set(&s).len(), 10);
            assert_eq!(inversion_mask(&s).count_ones() as usize, s.inversions());
        }
    }

    #[test]
    fn class_examples() {
        let t22: YfTableau = "2:4 1:3".parse().unwrap();
        let class = fibo_class(&t22).unwrap();
        assert!(class.contains(&perm("3142")));
        // the inverse lands in the class of the recording tableau instead
        assert!(!class.contains(&perm("2413")));
        assert!(fibo_class(&"3:4 1:2".parse().unwrap()).unwrap().contains(&perm("2413")));
        assert_eq!(class, fibo_class_brute(&t22));
        let row: YfTableau = "4 3 2 1".parse().unwrap();
        assert!(fibo_class(&row).unwrap().contains(&Permutation::identity(4)));
        assert_eq!(fibo_class(&"1:2".parse().unwrap()).unwrap(), vec![perm("21")]);
        let big = crate::yftableau::row_canonical(&crate::Snakeshape::ones(11));
        assert!(matches!(fibo_class(&big), Err(Error::Oversize { .. })));
    }

    #[test]
    fn classes_match_brute_force() {
        for n in 1..=6 {
            let mut total = 0;
            for t in standard_tableaux_of_size(n) {
                let class = fibo_class(&t).unwrap();
                assert_eq!(class, fibo_class_brute(&t), "{t}");
                assert_eq!(class.len() as u64, hook_count(&t.shape()));
                total += class.len();
            }
            assert_eq!(total, permutations(n).len());
        }
    }
}
