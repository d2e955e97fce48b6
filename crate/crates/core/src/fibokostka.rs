//! Young-Fibonacci numbers `N(u, v)` and Okada's numbers `K(u, v)`.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::poset::RankedPoset;
use crate::snakeshape::{covers_up, shapes_of_size, v_one_minus, Snakeshape};
use crate::yfposet::{weak_order_yft_with, POSET_BOUND};
use crate::yftableau::{enumerate_semistandard, row_canonical, YfTableau};

/// Square matrix indexed by one label order on both axes; rows are shapes,
/// columns are contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix<L> {
    order: Vec<L>,
    entries: Vec<Vec<u64>>,
}

impl<L: Clone + PartialEq + Display> KostkaMatrix<L> {
    pub fn new(order: Vec<L>, entries: Vec<Vec<u64>>) -> Self {
        assert_eq!(order.len(), entries.len());
        assert!(entries.iter().all(|r| r.len() == order.len()));
        KostkaMatrix { order, entries }
    }

    pub fn order(&self) -> &[L] {
        &self.order
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn get(&self, row: &L, col: &L) -> Option<u64> {
        let i = self.order.iter().position(|x| x == row)?;
        let j = self.order.iter().position(|x| x == col)?;
        Some(self.entries[i][j])
    }

    /// Cells where the two matrices differ, as `(row, col, self, other)`.
    pub fn diff(&self, other: &Self) -> Vec<(L, L, u64, u64)> {
        let mut out = Vec::new();
        for (i, r) in self.order.iter().enumerate() {
            for (j, c) in self.order.iter().enumerate() {
                let (a, b) = (self.entries[i][j], other.entries[i][j]);
                if a != b {
                    out.push((r.clone(), c.clone(), a, b));
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for l in &self.order {
            let _ = write!(out, ",{l}");
        }
        out.push('\n');
        for (l, row) in self.order.iter().zip(&self.entries) {
            let _ = write!(out, "{l}");
            for x in row {
                let _ = write!(out, ",{x}");
            }
            out.push('\n');
        }
        out
    }

    /// Aligned table with `.` for zeros.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.order.iter().map(ToString::to_string).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(1);
        let cw = labels
            .iter()
            .map(String::len)
            .chain(self.entries.iter().flatten().map(|x| x.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = format!("{:lw$} |", "");
        for l in &labels {
            let _ = write!(out, " {l:>cw$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}", "-".repeat(lw + 2 + (cw + 1) * labels.len()));
        for (l, row) in labels.iter().zip(&self.entries) {
            let _ = write!(out, "{l:lw$} |");
            for &x in row {
                let cell = if x == 0 { ".".to_string() } else { x.to_string() };
                let _ = write!(out, " {cell:>cw$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let order: Vec<String> = self.order.iter().map(ToString::to_string).collect();
        json!({ "order": order, "entries": self.entries })
    }
}

fn check_sizes(u: &Snakeshape, v: &Snakeshape) -> Result<()> {
    if u.size() == v.size() {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            left: u.size(),
            right: v.size(),
        })
    }
}

/// Memo table for the Young-Fibonacci number recurrence.
#[derive(Clone, Debug, Default)]
pub struct NMemo {
    memo: HashMap<(Snakeshape, Snakeshape), u64>,
}

impl NMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Peels the front column of `u` and the last column of `v`.
    pub fn get(&mut self, u: &Snakeshape, v: &Snakeshape) -> u64 {
        if u.is_empty() && v.is_empty() {
            return 1;
        }
        if u.parts() == [2] && v.parts() == [2] {
            return 0;
        }
        let key = (u.clone(), v.clone());
        if let Some(&x) = self.memo.get(&key) {
            return x;
        }
        let (a, rest) = u.split_first().expect("sizes agree");
        let (front, b) = v.split_last().expect("sizes agree");
        let x = match (a, b) {
            (1, 1) => self.get(&rest, &front),
            (1, _) => self.get(&rest, &front.append(1)),
            (_, 1) => v_one_minus(&front).iter().map(|w| self.get(&rest, w)).sum(),
            _ => v_one_minus(&front)
                .iter()
                .map(|w| self.get(&rest, &w.append(1)))
                .sum(),
        };
        self.memo.insert(key, x);
        x
    }
}

/// Number of semistandard tableaux of shape `u` and content `v`.
pub fn n_number(u: &Snakeshape, v: &Snakeshape) -> Result<u64> {
    check_sizes(u, v)?;
    Ok(NMemo::new().get(u, v))
}

/// The same count by direct enumeration of fillings.
pub fn n_number_brute(u: &Snakeshape, v: &Snakeshape) -> Result<u64> {
    Ok(enumerate_semistandard(u, v)?.len() as u64)
}

pub fn n_matrix(n: usize) -> KostkaMatrix<Snakeshape> {
    n_matrix_with(n, Exec::default())
}

pub fn n_matrix_with(n: usize, exec: Exec) -> KostkaMatrix<Snakeshape> {
    let order = shapes_of_size(n);
    let entries = exec.map_init(&order, NMemo::new, |memo, u| {
        order.iter().map(|v| memo.get(u, v)).collect()
    });
    KostkaMatrix::new(order, entries)
}

/// [`n_matrix`] by enumerating fillings.
pub fn n_matrix_brute(n: usize, exec: Exec) -> KostkaMatrix<Snakeshape> {
    let order = shapes_of_size(n);
    let entries = exec.map(&order, |u| {
        order.iter().map(|v| n_number_brute(u, v).expect("same size")).collect()
    });
    KostkaMatrix::new(order, entries)
}

/// Ordered pairs `(u, v)` of size `n` with `N(u, v) = 0`.
pub fn zero_pair_count(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Invalid(format!("zero_pair_count needs n >= 2, got {n}")));
    }
    Ok(n_matrix(n).entries().iter().flatten().filter(|&&x| x == 0).count())
}

/// Memo table for Okada's recurrence.
#[derive(Clone, Debug, Default)]
pub struct KMemo {
    memo: HashMap<(Snakeshape, Snakeshape), u64>,
}

impl KMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Peels the front columns of both shapes.
    pub fn get(&mut self, u: &Snakeshape, v: &Snakeshape) -> u64 {
        let (Some((a, u1)), Some((b, v1))) = (u.split_first(), v.split_first()) else {
            return u64::from(u.is_empty() && v.is_empty());
        };
        let key = (u.clone(), v.clone());
        if let Some(&x) = self.memo.get(&key) {
            return x;
        }
        let x = match (a, b) {
            (1, 1) | (2, 2) => self.get(&u1, &v1),
            (1, _) => 0,
            _ => covers_up(&u1).iter().map(|w| self.get(w, &v1)).sum(),
        };
        self.memo.insert(key, x);
        x
    }
}

pub fn okada_k(u: &Snakeshape, v: &Snakeshape) -> Result<u64> {
    check_sizes(u, v)?;
    Ok(KMemo::new().get(u, v))
}

/// Tableaux of shape `u` lying above `rT_v` in a prebuilt weak order.
pub fn okada_k_in(p: &RankedPoset<YfTableau>, u: &Snakeshape, v: &Snakeshape) -> Result<u64> {
    check_sizes(u, v)?;
    let lo = p
        .index_of(&row_canonical(v))
        .ok_or_else(|| Error::Invalid(format!("poset does not contain shape {v}")))?;
    Ok(p.poset()
        .up_set(lo)
        .ones()
        .filter(|&i| p.elements()[i].shape() == *u)
        .count() as u64)
}

/// Counts tableaux of shape `u` in the interval from `rT_v` to the top of
/// the weak order.
pub fn okada_k_by_interval(u: &Snakeshape, v: &Snakeshape) -> Result<u64> {
    check_sizes(u, v)?;
    let p = weak_order_yft_with(u.size(), POSET_BOUND, Exec::default())?;
    okada_k_in(&p, u, v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    Interval,
}

pub fn okada_matrix(n: usize, method: Method) -> Result<KostkaMatrix<Snakeshape>> {
    okada_matrix_with(n, method, POSET_BOUND, Exec::default())
}

pub fn okada_matrix_with(
    n: usize,
    method: Method,
    bound: usize,
    exec: Exec,
) -> Result<KostkaMatrix<Snakeshape>> {
    let order = shapes_of_size(n);
    let entries = match method {
        Method::Recurrence => exec.map_init(&order, KMemo::new, |memo, u| {
            order.iter().map(|v| memo.get(u, v)).collect()
        }),
        Method::Interval => {
            let p = weak_order_yft_with(n, bound, exec)?;
            // columns: one up-set per content shape
            let columns: Vec<Vec<u64>> = exec.map(&order, |v| {
                order
                    .iter()
                    .map(|u| okada_k_in(&p, u, v).expect("same size"))
                    .collect()
            });
            (0..order.len())
                .map(|i| columns.iter().map(|col| col[i]).collect())
                .collect()
        }
    };
    Ok(KostkaMatrix::new(order, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakeshape::chain_count;
    use crate::yftableau::hook_count;

    fn s(x: &str) -> Snakeshape {
        x.parse().unwrap()
    }

    #[test]
    fn n_examples() {
        assert_eq!(n_number(&s("221"), &s("1211")).unwrap(), 4);
        assert_eq!(n_number(&s("1111"), &s("1111")).unwrap(), 1);
        assert_eq!(n_number(&s("222"), &s("111111")).unwrap(), 15);
        assert_eq!(n_number(&s("2"), &s("2")).unwrap(), 0);
        assert!(n_number(&s("2"), &s("1")).is_err());
        let m = n_matrix(6);
        assert_eq!(m.get(&s("2112"), &s("222")), Some(1));
        assert_eq!(m.get(&s("11112"), &s("222")), Some(0));
    }

    #[test]
    fn size_two_matrix() {
        let m = n_matrix(2);
        assert_eq!(m.entries(), &[vec![0, 1], vec![1, 1]]);
        for u in m.order() {
            for v in m.order() {
                assert_eq!(m.get(u, v).unwrap(), n_number_brute(u, v).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for n in 0..=6 {
            let m = n_matrix(n);
            for u in m.order() {
                for v in m.order() {
                    assert_eq!(m.get(u, v).unwrap(), n_number_brute(u, v).unwrap(), "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn fibonacci_many_zeros() {
        assert_eq!(zero_pair_count(6).unwrap(), 5);
        assert_eq!(zero_pair_count(2).unwrap(), 1);
        for n in 2..=12 {
            assert_eq!(zero_pair_count(n).unwrap(), shapes_of_size(n - 2).len());
        }
        assert!(zero_pair_count(1).is_err());
    }

    #[test]
    fn okada_examples() {
        assert_eq!(okada_k(&s("221"), &s("1121")).unwrap(), 3);
        assert_eq!(okada_k(&Snakeshape::empty(), &Snakeshape::empty()).unwrap(), 1);
        assert_eq!(okada_k(&s("22"), &s("121")).unwrap(), 1);
        assert_eq!(okada_k_by_interval(&s("221"), &s("1121")).unwrap(), 3);
        assert_eq!(okada_k_by_interval(&s("1112"), &s("221")).unwrap(), 0);
        let m = okada_matrix(5, Method::Recurrence).unwrap();
        assert_eq!(m.entries()[0], vec![1, 1, 2, 1, 2, 3, 4, 8]);
        for i in 0..m.dim() {
            for j in 0..i {
                assert_eq!(m.entries()[i][j], 0);
            }
        }
        assert_eq!(okada_matrix(1, Method::Interval).unwrap().entries(), &[vec![1]]);
    }

    #[test]
    fn okada_methods_agree() {
        for n in 1..=6 {
            let a = okada_matrix(n, Method::Recurrence).unwrap();
            let b = okada_matrix(n, Method::Interval).unwrap();
            assert!(a.diff(&b).is_empty(), "n = {n}: {:?}", a.diff(&b));
        }
    }

    #[test]
    fn okada_dimension() {
        for n in 0..=8 {
            let ones = Snakeshape::ones(n);
            for u in shapes_of_size(n) {
                let k = okada_k(&u, &ones).unwrap();
                assert_eq!(k, hook_count(&u));
                assert_eq!(k, chain_count(&u));
            }
        }
    }

    #[test]
    fn okada_front_one_against_two() {
        for n in 2..=8 {
            for u in shapes_of_size(n - 1) {
                for v in shapes_of_size(n - 2) {
                    assert_eq!(okada_k(&u.prepend(1), &v.prepend(2)).unwrap(), 0);
                }
            }
        }
        let p = weak_order_yft_with(5, POSET_BOUND, Exec::Sequential).unwrap();
        for u in shapes_of_size(4) {
            for v in shapes_of_size(3) {
                assert_eq!(okada_k_in(&p, &u.prepend(1), &v.prepend(2)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn renderings() {
        let m = okada_matrix(3, Method::Recurrence).unwrap();
        assert_eq!(m.to_csv(), ",21,12,111\n21,1,1,2\n12,0,1,1\n111,0,0,1\n");
        assert!(m.to_text().contains("12  |   .   1   1"));
        assert_eq!(m.to_json()["order"], json!(["21", "12", "111"]));
    }
}
