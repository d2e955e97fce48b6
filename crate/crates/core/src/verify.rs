//! Named invariant suites, run exhaustively up to a size.
//!
//! Each invariant carries the largest size it is meant to be exercised at; a
//! run at size `n` checks it at `min(n, bound)`. A failing invariant reports
//! its first counterexample in input order, so output never depends on the
//! schedule.

use std::collections::HashSet;
use std::fmt;

use crate::chains_growth::{
    boundary_chains, canonical_labeling, chain_to_tableau, evacuate_letter, evacuation_tableau,
    growth_diagram, saturated_chains, tableau_to_chain,
};
use crate::error::{Error, Result};
use crate::fibokostka::{
    n_number_brute, okada_k, okada_k_in, okada_matrix_with, zero_pair_count, Method, NMemo,
};
use crate::par::Exec;
use crate::snakeshape::{chain_count, covers_down, covers_up, shapes_of_size, Snakeshape};
use crate::yfinsertion::{
    fibo_class, fibo_class_brute, insert_p, insert_pq, insert_word_p, involutions, permutations,
    weak_leq, Permutation,
};
use crate::yfposet::{
    one_hat, rank, shift_targets, weak_order_yft_by_images, weak_order_yft_with, POSET_BOUND,
};
use crate::yftableau::{
    cano_involution, cano_poset, column_canonical, enumerate_semistandard, enumerate_standard,
    hook_count, max_cano, min_cano, rho_max, rho_min, row_canonical, standard_tableaux_of_size,
    YfTableau,
};
use crate::youngside::{self, Order, Partition};

/// Number of cases checked, or the first counterexample.
pub type Outcome = std::result::Result<usize, String>;

pub struct Invariant {
    pub suite: &'static str,
    pub name: &'static str,
    pub bound: usize,
    run: fn(usize, Exec) -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub size: usize,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(cases) => write!(
                f,
                "ok   {}::{} (n <= {}, {} cases)",
                self.suite, self.name, self.size, cases
            ),
            Err(msg) => write!(
                f,
                "FAIL {}::{} (n <= {}): {}",
                self.suite, self.name, self.size, msg
            ),
        }
    }
}

fn scan<T, F>(exec: Exec, items: &[T], f: F) -> Outcome
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    match exec.find_first(items, f) {
        Some(msg) => Err(msg),
        None => Ok(items.len()),
    }
}

fn sum_outcomes(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    parts.into_iter().try_fold(0, |acc, o| o.map(|c| acc + c))
}

fn per_size(top: usize, from: usize, f: impl Fn(usize) -> Outcome) -> Outcome {
    sum_outcomes((from..=top).map(f))
}

fn all_shapes(top: usize) -> Vec<Snakeshape> {
    (0..=top).flat_map(shapes_of_size).collect()
}

fn all_tableaux(top: usize, from: usize) -> Vec<YfTableau> {
    (from..=top).flat_map(standard_tableaux_of_size).collect()
}

fn all_permutations(top: usize) -> Vec<Permutation> {
    (1..=top).flat_map(permutations).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

// snakeshape

fn fibonacci_counts(n: usize, _: Exec) -> Outcome {
    per_size(n, 2, |m| {
        let (a, b, c) = (shapes_of_size(m).len(), shapes_of_size(m - 1).len(), shapes_of_size(m - 2).len());
        if a == b + c {
            Ok(1)
        } else {
            Err(format!("size {m}: {a} != {b} + {c}"))
        }
    })
}

fn cover_duality(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        shapes_of_size(u.size() + 1).into_iter().find_map(|v| {
            let up = covers_up(u).contains(&v);
            let down = covers_down(&v).contains(u);
            (up != down).then(|| format!("{u} and {v}: up {up}, down {down}"))
        })
    })
}

fn cover_sizes(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        covers_up(u).into_iter().find_map(|v| {
            let ok = v.size() == u.size() + 1 && (v.len() == u.len() || v.len() == u.len() + 1);
            (!ok).then(|| format!("{u} -> {v}"))
        })
    })
}

fn chain_square_sum(n: usize, _: Exec) -> Outcome {
    per_size(n, 0, |m| {
        let s: u64 = shapes_of_size(m).iter().map(|u| chain_count(u).pow(2)).sum();
        if s == factorial(m) {
            Ok(1)
        } else {
            Err(format!("size {m}: sum of squares {s}"))
        }
    })
}

// yftableau

fn hook_equals_chain(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        let (h, c) = (hook_count(u), chain_count(u));
        (h != c).then(|| format!("{u}: hook {h}, chains {c}"))
    })
}

fn enumeration_count(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        let tabs = enumerate_standard(u);
        if tabs.len() as u64 != hook_count(u) {
            return Some(format!("{u}: {} tableaux, hook {}", tabs.len(), hook_count(u)));
        }
        tabs.iter()
            .find(|t| !t.is_standard() || t.shape() != *u)
            .map(|t| format!("{u}: bad tableau {t}"))
    })
}

fn involution_and_factorial_sums(n: usize, _: Exec) -> Outcome {
    per_size(n, 0, |m| {
        let f: Vec<u64> = shapes_of_size(m).iter().map(hook_count).collect();
        let inv = if m == 0 { 1 } else { involutions(m).len() as u64 };
        let (s1, s2) = (f.iter().sum::<u64>(), f.iter().map(|x| x * x).sum::<u64>());
        if s1 == inv && s2 == factorial(m) {
            Ok(1)
        } else {
            Err(format!("size {m}: sum {s1} vs {inv}, squares {s2}"))
        }
    })
}

fn canonical_word_order(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_tableaux(n, 1), |t| {
        let words = [min_cano(t).ok()?, cano_involution(t).ok()?, max_cano(t).ok()?];
        if !(words[0] <= words[1] && words[1] <= words[2]) {
            return Some(format!("{t}: words out of order"));
        }
        words
            .iter()
            .find(|w| insert_p(w) != *t)
            .map(|w| format!("{t}: {w} inserts elsewhere"))
    })
}

fn semistandard_unit_content(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        let ss = enumerate_semistandard(u, &Snakeshape::ones(u.size())).ok()?;
        (ss != enumerate_standard(u)).then(|| format!("{u}: unit-content fillings differ"))
    })
}

// yfinsertion

fn inverse_recording(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_permutations(n), |s| {
        let (_, q) = insert_pq(s);
        (insert_p(&s.inverse()) != q).then(|| format!("{s}"))
    })
}

fn involution_reading(n: usize, exec: Exec) -> Outcome {
    let invs: Vec<Permutation> = (1..=n).flat_map(involutions).collect();
    scan(exec, &invs, |s| {
        let (p, q) = insert_pq(s);
        (p != q || cano_involution(&p).ok()? != *s).then(|| format!("{s}"))
    })
}

fn bijection(n: usize, _: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let perms = permutations(m);
        let images: HashSet<(YfTableau, YfTableau)> = perms.iter().map(insert_pq).collect();
        let total: u64 = shapes_of_size(m).iter().map(|u| hook_count(u).pow(2)).sum();
        if images.len() == perms.len() && total == perms.len() as u64 {
            Ok(perms.len())
        } else {
            Err(format!("size {m}: {} distinct images", images.len()))
        }
    })
}

fn class_matches_filter(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_tableaux(n, 1), |t| {
        (fibo_class(t).ok()? != fibo_class_brute(t)).then(|| format!("{t}"))
    })
}

fn class_interval(n: usize, exec: Exec) -> Outcome {
    sum_outcomes((1..=n).map(|m| {
        let perms = permutations(m);
        scan(exec, &standard_tableaux_of_size(m), |t| {
            let lo = min_cano(t).ok()?;
            let hi = max_cano(t).ok()?;
            let interval: Vec<Permutation> = perms
                .iter()
                .filter(|s| weak_leq(&lo, s) && weak_leq(s, &hi))
                .cloned()
                .collect();
            let ext: Vec<Permutation> = cano_poset(t)
                .ok()?
                .linear_extensions()
                .into_iter()
                .map(|e| Permutation::new(e.into_iter().map(|i| i as u32 + 1).collect()).expect("bijective"))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let class = fibo_class_brute(t);
            (class != interval || class != ext).then(|| format!("{t}"))
        })
    }))
}

// chains_growth

fn round_trip(n: usize, exec: Exec) -> Outcome {
    let shapes = all_shapes(n);
    scan(exec, &shapes, |u| {
        saturated_chains(u).into_iter().find_map(|c| {
            let t = chain_to_tableau(&c).ok()?;
            match tableau_to_chain(&t) {
                Ok(back) if back == c => None,
                _ => Some(format!("chain {c}")),
            }
        })
    })
}

fn growth_equivalence(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_permutations(n), |s| {
        let (p_hat, q_hat) = boundary_chains(&growth_diagram(s));
        let (p, q) = insert_pq(s);
        let ok = chain_to_tableau(&p_hat).ok()? == p && chain_to_tableau(&q_hat).ok()? == q;
        (!ok).then(|| format!("{s}"))
    })
}

fn diagram_audit(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_permutations(n), |s| {
        growth_diagram(s).audit().err().map(|e| format!("{s}: {e}"))
    })
}

fn evacuation_labeling(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_permutations(n), |s| {
        let (p_hat, _) = boundary_chains(&growth_diagram(s));
        (evacuation_tableau(&insert_p(s)).ok()? != canonical_labeling(&p_hat)).then(|| format!("{s}"))
    })
}

fn evacuation_deletion(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_permutations(n), |s| {
        let p = insert_p(s);
        p.columns().iter().find_map(|c| {
            let a0 = c.topmost();
            let word: Vec<u32> = s.word().iter().copied().filter(|&x| x != a0).collect();
            let after = evacuate_letter(&p, a0).ok()?;
            (after != insert_word_p(&word)).then(|| format!("{s} minus {a0}"))
        })
    })
}

// yfposet

fn cover_rank(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_tableaux(n, 1), |t| {
        let r = rank(t).ok()?;
        shift_targets(t).ok()?.into_iter().find_map(|u| {
            (rank(&u).ok()? != r + 1).then(|| format!("{t} -> {u}"))
        })
    })
}

fn cover_antisymmetry(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_tableaux(n, 1), |t| {
        shift_targets(t).ok()?.into_iter().find_map(|u| {
            shift_targets(&u).ok()?.contains(t).then(|| format!("{t} <-> {u}"))
        })
    })
}

fn order_preservation(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let yft = weak_order_yft_with(m, POSET_BOUND, exec).map_err(|e| e.to_string())?;
        let perms = permutations(m);
        let preserved = scan(exec, &perms, |a| {
            let pa = insert_p(a);
            perms
                .iter()
                .filter(|b| weak_leq(a, b))
                .find(|b| !yft.leq(&pa, &insert_p(b)))
                .map(|b| format!("{a} <= {b}"))
        })?;
        let generated = weak_order_yft_by_images(m, POSET_BOUND).map_err(|e| e.to_string())?;
        if generated.poset() != yft.poset() {
            return Err(format!("size {m}: images of covers generate a different order"));
        }
        Ok(preserved)
    })
}

fn unique_top(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let p = weak_order_yft_with(m, POSET_BOUND, exec).map_err(|e| e.to_string())?;
        if one_hat(&p).is_some() && p.minimal().len() == 1 && p.is_graded() {
            Ok(1)
        } else {
            Err(format!("size {m}: no unique top or bottom"))
        }
    })
}

fn rank_extremes(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        let ranks: Vec<usize> = enumerate_standard(u).iter().map(|t| rank(t).expect("standard")).collect();
        let lo = *ranks.iter().min()?;
        let hi = *ranks.iter().max()?;
        let unique = |r: usize| ranks.iter().filter(|&&x| x == r).count() == 1;
        let ok = lo == rho_min(u)
            && hi == rho_max(u)
            && unique(lo)
            && unique(hi)
            && rank(&column_canonical(u)).ok()? == lo
            && rank(&row_canonical(u)).ok()? == hi;
        (!ok).then(|| format!("{u}"))
    })
}

// fibokostka

fn n_recurrence_brute(n: usize, exec: Exec) -> Outcome {
    let pairs: Vec<(Snakeshape, Snakeshape)> = (0..=n)
        .flat_map(|m| {
            let shapes = shapes_of_size(m);
            shapes
                .iter()
                .flat_map(|u| shapes.iter().map(move |v| (u.clone(), v.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    scan(exec, &pairs, |(u, v)| {
        let a = NMemo::new().get(u, v);
        let b = n_number_brute(u, v).ok()?;
        (a != b).then(|| format!("N({u}, {v}): recurrence {a}, fillings {b}"))
    })
}

fn zero_pairs(n: usize, _: Exec) -> Outcome {
    per_size(n, 2, |m| {
        let z = zero_pair_count(m).map_err(|e| e.to_string())?;
        let want = shapes_of_size(m - 2).len();
        if z == want {
            Ok(1)
        } else {
            Err(format!("size {m}: {z} zeros, expected {want}"))
        }
    })
}

fn okada_methods(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let a = okada_matrix_with(m, Method::Recurrence, POSET_BOUND, exec).map_err(|e| e.to_string())?;
        let b = okada_matrix_with(m, Method::Interval, POSET_BOUND, exec).map_err(|e| e.to_string())?;
        match a.diff(&b).first() {
            None => Ok(a.dim() * a.dim()),
            Some((u, v, x, y)) => Err(format!("K({u}, {v}): recurrence {x}, interval {y}")),
        }
    })
}

fn okada_dimension(n: usize, exec: Exec) -> Outcome {
    scan(exec, &all_shapes(n), |u| {
        let k = okada_k(u, &Snakeshape::ones(u.size())).ok()?;
        (k != hook_count(u) || k != chain_count(u)).then(|| format!("{u}: K = {k}"))
    })
}

fn okada_front_one_two(n: usize, exec: Exec) -> Outcome {
    per_size(n, 2, |m| {
        let pairs: Vec<(Snakeshape, Snakeshape)> = shapes_of_size(m - 1)
            .iter()
            .flat_map(|u| shapes_of_size(m - 2).into_iter().map(move |v| (u.prepend(1), v.prepend(2))))
            .collect();
        let structural = if m <= 6 {
            Some(weak_order_yft_with(m, POSET_BOUND, exec).map_err(|e| e.to_string())?)
        } else {
            None
        };
        scan(exec, &pairs, |(u, v)| {
            let k = okada_k(u, v).ok()?;
            let above = match &structural {
                Some(p) => okada_k_in(p, u, v).ok()?,
                None => 0,
            };
            (k != 0 || above != 0).then(|| format!("K({u}, {v}) = {k}"))
        })
    })
}

// youngside

fn young_kostka_methods(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let direct = youngside::kostka_matrix(m);
        let mut cases = 0;
        for order in [Order::Chain, Order::Weak] {
            let by = youngside::kostka_matrix_by_interval(m, order, youngside::SYT_BOUND, exec)
                .map_err(|e| e.to_string())?;
            if let Some((l, mu, a, b)) = direct.diff(&by).into_iter().next() {
                return Err(format!("K({l}, {mu}): fillings {a}, {order:?} interval {b}"));
            }
            cases += direct.dim() * direct.dim();
        }
        Ok(cases)
    })
}

fn chain_partial_order(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let tabs = youngside::standard_tableaux_of_size(m);
        let leq: Vec<Vec<bool>> = exec.map(&tabs, |a| {
            tabs.iter().map(|b| youngside::chain_leq(a, b).expect("same size")).collect()
        });
        let k = tabs.len();
        for a in 0..k {
            if !leq[a][a] || !leq[0][a] {
                return Err(format!("{} fails reflexivity or is not above the row", tabs[a]));
            }
            for b in 0..k {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(format!("{} and {} are mutually below", tabs[a], tabs[b]));
                }
                for c in 0..k {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(format!("transitivity fails at {}", tabs[b]));
                    }
                }
            }
        }
        Ok(k)
    })
}

fn chain_equals_weak(n: usize, exec: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let w = youngside::weak_order_syt(m).map_err(|e| e.to_string())?;
        let c = youngside::chain_order_syt_with(m, youngside::SYT_BOUND, exec).map_err(|e| e.to_string())?;
        if w.poset() == c.poset() {
            Ok(w.len())
        } else {
            Err(format!("size {m}: chain and weak orders differ"))
        }
    })
}

fn young_interval_extremes(n: usize, _: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let p = youngside::weak_order_syt(m).map_err(|e| e.to_string())?;
        let row = youngside::row_canonical(&Partition::new(vec![m as u32]).expect("one part"));
        if p.minimal() != vec![&row] {
            return Err(format!("size {m}: the single row is not the unique minimum"));
        }
        for mu in youngside::partitions(m) {
            let top = youngside::row_canonical(&mu);
            let inside = p.interval(&row, &top).map_err(|e| format!("{mu}: {e}"))?;
            if inside.iter().any(|t| !p.leq(t, &top)) {
                return Err(format!("{mu}: interval exceeds rT"));
            }
        }
        Ok(1)
    })
}

fn rsk_bijection(n: usize, _: Exec) -> Outcome {
    per_size(n, 1, |m| {
        let total: usize = youngside::partitions(m)
            .iter()
            .map(|l| youngside::standard_tableaux(l).len().pow(2))
            .sum();
        let perms = permutations(m);
        if total == perms.len() {
            Ok(perms.len())
        } else {
            Err(format!("size {m}: sum of squares {total}"))
        }
    })
}

fn restriction_oracle(n: usize, exec: Exec) -> Outcome {
    let tabs: Vec<_> = (1..=n).flat_map(youngside::standard_tableaux_of_size).collect();
    scan(exec, &tabs, |t| {
        let k = t.size();
        (1..=k).flat_map(|i| (i..=k).map(move |j| (i, j))).find_map(|(i, j)| {
            let a = youngside::restricted_shape(t, i, j).ok()?;
            let b = youngside::restricted_shape_by_rsk(t, i, j).ok()?;
            (a != b).then(|| format!("{t} [{i}, {j}]: {a} vs {b}"))
        })
    })
}

pub static INVARIANTS: &[Invariant] = &[
    Invariant { suite: "snakeshape", name: "fibonacci_counts", bound: 20, run: fibonacci_counts },
    Invariant { suite: "snakeshape", name: "cover_duality", bound: 8, run: cover_duality },
    Invariant { suite: "snakeshape", name: "cover_sizes", bound: 8, run: cover_sizes },
    Invariant { suite: "snakeshape", name: "chain_square_sum", bound: 8, run: chain_square_sum },
    Invariant { suite: "yftableau", name: "hook_equals_chain", bound: 10, run: hook_equals_chain },
    Invariant { suite: "yftableau", name: "enumeration_count", bound: 7, run: enumeration_count },
    Invariant { suite: "yftableau", name: "involution_and_factorial_sums", bound: 8, run: involution_and_factorial_sums },
    Invariant { suite: "yftableau", name: "canonical_word_order", bound: 6, run: canonical_word_order },
    Invariant { suite: "yftableau", name: "semistandard_unit_content", bound: 7, run: semistandard_unit_content },
    Invariant { suite: "yfinsertion", name: "inverse_recording", bound: 7, run: inverse_recording },
    Invariant { suite: "yfinsertion", name: "involution_reading", bound: 7, run: involution_reading },
    Invariant { suite: "yfinsertion", name: "bijection", bound: 7, run: bijection },
    Invariant { suite: "yfinsertion", name: "class_matches_filter", bound: 7, run: class_matches_filter },
    Invariant { suite: "yfinsertion", name: "class_interval", bound: 6, run: class_interval },
    Invariant { suite: "chains_growth", name: "round_trip", bound: 7, run: round_trip },
    Invariant { suite: "chains_growth", name: "growth_equivalence", bound: 6, run: growth_equivalence },
    Invariant { suite: "chains_growth", name: "diagram_audit", bound: 6, run: diagram_audit },
    Invariant { suite: "chains_growth", name: "evacuation_labeling", bound: 6, run: evacuation_labeling },
    Invariant { suite: "chains_growth", name: "evacuation_deletion", bound: 6, run: evacuation_deletion },
    Invariant { suite: "yfposet", name: "cover_rank", bound: 6, run: cover_rank },
    Invariant { suite: "yfposet", name: "cover_antisymmetry", bound: 6, run: cover_antisymmetry },
    Invariant { suite: "yfposet", name: "order_preservation", bound: 5, run: order_preservation },
    Invariant { suite: "yfposet", name: "unique_top", bound: 7, run: unique_top },
    Invariant { suite: "yfposet", name: "rank_extremes", bound: 6, run: rank_extremes },
    Invariant { suite: "fibokostka", name: "n_recurrence_brute", bound: 6, run: n_recurrence_brute },
    Invariant { suite: "fibokostka", name: "zero_pairs", bound: 12, run: zero_pairs },
    Invariant { suite: "fibokostka", name: "okada_methods", bound: 6, run: okada_methods },
    Invariant { suite: "fibokostka", name: "okada_dimension", bound: 8, run: okada_dimension },
    Invariant { suite: "fibokostka", name: "okada_front_one_two", bound: 8, run: okada_front_one_two },
    Invariant { suite: "youngside", name: "kostka_methods", bound: 5, run: young_kostka_methods },
    Invariant { suite: "youngside", name: "chain_partial_order", bound: 5, run: chain_partial_order },
    Invariant { suite: "youngside", name: "chain_equals_weak", bound: 5, run: chain_equals_weak },
    Invariant { suite: "youngside", name: "interval_extremes", bound: 5, run: young_interval_extremes },
    Invariant { suite: "youngside", name: "rsk_bijection", bound: 6, run: rsk_bijection },
    Invariant { suite: "youngside", name: "restriction_oracle", bound: 6, run: restriction_oracle },
];

pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = Vec::new();
    for inv in INVARIANTS {
        if !names.contains(&inv.suite) {
            names.push(inv.suite);
        }
    }
    names
}

impl Invariant {
    pub fn check(&self, n: usize, exec: Exec) -> Check {
        self.check_at(n.min(self.bound), exec)
    }

    /// Runs at exactly `size`, ignoring the stated bound.
    pub fn check_at(&self, size: usize, exec: Exec) -> Check {
        Check {
            suite: self.suite,
            name: self.name,
            size,
            outcome: (self.run)(size, exec),
        }
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(suite: &str, n: usize, exec: Exec) -> Result<Vec<Check>> {
    run_suite_with(suite, n, exec, true)
}

/// As [`run_suite`]; with `capped` off every invariant runs at `n` itself.
pub fn run_suite_with(suite: &str, n: usize, exec: Exec, capped: bool) -> Result<Vec<Check>> {
    if suite != "all" && !suite_names().contains(&suite) {
        return Err(Error::Invalid(format!(
            "unknown suite {suite:?}; expected one of all, {}",
            suite_names().join(", ")
        )));
    }
    Ok(INVARIANTS
        .iter()
        .filter(|inv| suite == "all" || inv.suite == suite)
        .map(|inv| if capped { inv.check(n, exec) } else { inv.check_at(n, exec) })
        .collect())
}
