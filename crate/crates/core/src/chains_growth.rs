//! Saturated chains and tableaux, growth diagrams, and evacuation.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::snakeshape::{apply_cover, classify_cover, covers_down, Cover, Snakeshape};
use crate::yfinsertion::{insert_word_p, Permutation};
use crate::yftableau::{min_cano, Column, YfTableau};

/// A saturated chain `e = u_0 ⋖ u_1 ⋖ … ⋖ u_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeChain {
    shapes: Vec<Snakeshape>,
}

impl ShapeChain {
    pub fn new(shapes: Vec<Snakeshape>) -> Result<Self> {
        match shapes.first() {
            Some(u) if u.is_empty() => {}
            Some(u) => {
                return Err(Error::InvalidChain {
                    step: 0,
                    from: "e".into(),
                    to: u.to_string(),
                })
            }
            None => return Err(Error::Invalid("a chain starts at the empty shape".into())),
        }
        for (step, w) in shapes.windows(2).enumerate() {
            if classify_cover(&w[0], &w[1]).is_none() {
                return Err(Error::InvalidChain {
                    step: step + 1,
                    from: w[0].to_string(),
                    to: w[1].to_string(),
                });
            }
        }
        Ok(ShapeChain { shapes })
    }

    pub fn shapes(&self) -> &[Snakeshape] {
        &self.shapes
    }

    /// Number of steps, i.e. the size of the last shape.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn last(&self) -> &Snakeshape {
        self.shapes.last().expect("chains are nonempty")
    }

    /// The growth move used at each step.
    pub fn moves(&self) -> Vec<Cover> {
        self.shapes
            .windows(2)
            .map(|w| classify_cover(&w[0], &w[1]).expect("validated chain"))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph chain {\n  rankdir=LR;\n");
        for (k, u) in self.shapes.iter().enumerate() {
            let _ = writeln!(out, "  s{k} [label=\"{u}\"];");
        }
        for k in 1..self.shapes.len() {
            let _ = writeln!(out, "  s{} -> s{k};", k - 1);
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for ShapeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, u) in self.shapes.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ShapeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShapeChain({self})")
    }
}

impl FromStr for ShapeChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let shapes = s
            .split(',')
            .map(|tok| tok.trim().parse())
            .collect::<Result<Vec<Snakeshape>>>()?;
        ShapeChain::new(shapes)
    }
}

/// Every saturated chain from the empty shape to `u`, sorted.
pub fn saturated_chains(u: &Snakeshape) -> Vec<ShapeChain> {
    fn rec(u: &Snakeshape, suffix: &mut Vec<Snakeshape>, out: &mut Vec<ShapeChain>) {
        suffix.push(u.clone());
        if u.is_empty() {
            let mut shapes = suffix.clone();
            shapes.reverse();
            out.push(ShapeChain { shapes });
        } else {
            for w in covers_down(u) {
                rec(&w, suffix, out);
            }
        }
        suffix.pop();
    }
    let mut out = Vec::new();
    rec(u, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn chain_to_tableau(c: &ShapeChain) -> Result<YfTableau> {
    ShapeChain::new(c.shapes.clone())?;
    Ok(chain_to_tableau_unchecked(c))
}

/// Places `1..n` one step at a time; each new letter ends up on top of the
/// front column, pushing the tops of the leading two-cell columns one step
/// to the right.
pub(crate) fn chain_to_tableau_unchecked(c: &ShapeChain) -> YfTableau {
    let mut cols: Vec<Column> = Vec::new();
    for (k, mv) in (1u32..).zip(c.moves()) {
        match mv {
            Cover::Prepend => cols.insert(0, Column::single(k)),
            Cover::Promote { column } => {
                for i in (1..=column).rev() {
                    cols[i].top = cols[i - 1].top;
                }
                cols[0].top = Some(k);
            }
            Cover::InsertAfter { column } => {
                let moved = cols[column].top.expect("leading column has two cells");
                cols.insert(column + 1, Column::single(moved));
                for i in (1..=column).rev() {
                    cols[i].top = cols[i - 1].top;
                }
                cols[0].top = Some(k);
            }
        }
    }
    YfTableau::new(cols)
}

/// `u_k` is the shape of the insertion tableau of the minimal canonical word
/// restricted to `1..=k`.
pub fn tableau_to_chain(t: &YfTableau) -> Result<ShapeChain> {
    let w = min_cano(t)?;
    let shapes = (0..=t.size() as u32)
        .map(|k| insert_word_p(w.restrict(k).word()).shape())
        .collect();
    let chain = ShapeChain::new(shapes)?;
    if chain_to_tableau_unchecked(&chain) != *t {
        return Err(Error::Invalid(format!("chain of {t} does not convert back")));
    }
    Ok(chain)
}

/// Undoes the last growth move `mv` (into `cols`, which holds letters
/// `1..=k`). `None` when the move cannot have produced this filling.
fn undo_move(cols: &[Column], k: u32, mv: Cover) -> Option<Vec<Column>> {
    let mut cols = cols.to_vec();
    match mv {
        Cover::Prepend => {
            if cols.first()? != &Column::single(k) {
                return None;
            }
            cols.remove(0);
        }
        Cover::Promote { column } => {
            if cols.first()?.top != Some(k) {
                return None;
            }
            for i in 0..column {
                cols[i].top = cols[i + 1].top;
            }
            cols[column].top = None;
        }
        Cover::InsertAfter { column } => {
            if cols.first()?.top != Some(k) {
                return None;
            }
            let inserted = *cols.get(column + 1)?;
            if inserted.top.is_some() {
                return None;
            }
            cols.remove(column + 1);
            for i in 0..column {
                cols[i].top = cols[i + 1].top;
            }
            cols[column].top = Some(inserted.bottom);
        }
    }
    Some(cols)
}

/// Every predecessor shape whose reversed move leaves a standard tableau.
pub fn reversal_candidates(t: &YfTableau) -> Vec<(Snakeshape, YfTableau)> {
    let u = t.shape();
    let k = t.size() as u32;
    covers_down(&u)
        .into_iter()
        .filter_map(|w| {
            let mv = classify_cover(&w, &u)?;
            let cols = undo_move(t.columns(), k, mv)?;
            let prev = YfTableau::new(cols);
            (prev.is_standard() && prev.shape() == w && apply_cover(&w, mv) == u)
                .then_some((w, prev))
        })
        .collect()
}

/// Peels letters `n, n-1, …` by reversing growth moves, requiring exactly
/// one valid reversal at every step.
pub fn tableau_to_chain_by_reversal(t: &YfTableau) -> Result<ShapeChain> {
    t.require_standard()?;
    let mut shapes = vec![t.shape()];
    let mut cur = t.clone();
    while !cur.is_empty() {
        let mut cands = reversal_candidates(&cur);
        if cands.len() != 1 {
            return Err(Error::Invalid(format!(
                "{} valid reversals of {cur}",
                cands.len()
            )));
        }
        let (w, prev) = cands.pop().expect("one candidate");
        shapes.push(w);
        cur = prev;
    }
    shapes.reverse();
    ShapeChain::new(shapes)
}

/// Labels the `k`-th cell added along the chain with `k`.
pub fn canonical_labeling(c: &ShapeChain) -> YfTableau {
    let mut cols: Vec<Column> = Vec::new();
    for (k, mv) in (1u32..).zip(c.moves()) {
        match mv {
            Cover::Prepend => cols.insert(0, Column::single(k)),
            Cover::Promote { column } => cols[column].top = Some(k),
            Cover::InsertAfter { column } => cols.insert(column + 1, Column::single(k)),
        }
    }
    YfTableau::new(cols)
}

/// Shape at the upper right corner of a unit square with lower left `t`,
/// upper left `x`, lower right `y`, and a cross inside when `cross`.
pub fn local_rule(t: &Snakeshape, x: &Snakeshape, y: &Snakeshape, cross: bool) -> Result<Snakeshape> {
    let edge_ok = |z: &Snakeshape| z == t || classify_cover(t, z).is_some();
    if !edge_ok(x) {
        return Err(Error::LocalRule(format!("{x} neither equals nor covers {t}")));
    }
    if !edge_ok(y) {
        return Err(Error::LocalRule(format!("{y} neither equals nor covers {t}")));
    }
    let (xg, yg) = (x != t, y != t);
    if cross && (xg || yg) {
        return Err(Error::LocalRule(
            "a crossed square must have degenerate lower and left edges".into(),
        ));
    }
    Ok(match (xg, yg) {
        (true, true) => t.prepend(2),
        (true, false) => x.clone(),
        (false, true) => y.clone(),
        (false, false) if cross => t.prepend(1),
        (false, false) => t.clone(),
    })
}

/// Growth diagram of a permutation: `grid[i][j]` is the shape at column
/// `i`, row `j` (row 0 at the bottom); the cross of column `i` sits in row
/// `σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    sigma: Permutation,
    grid: Vec<Vec<Snakeshape>>,
}

impl GrowthDiagram {
    pub fn new(sigma: &Permutation) -> Self {
        let n = sigma.len();
        let mut grid = vec![vec![Snakeshape::empty(); n + 1]; n + 1];
        for i in 1..=n {
            let cross_row = sigma.word()[i - 1] as usize;
            for j in 1..=n {
                grid[i][j] = local_rule(&grid[i - 1][j - 1], &grid[i - 1][j], &grid[i][j - 1], cross_row == j)
                    .expect("filled squares satisfy the preconditions");
            }
        }
        GrowthDiagram {
            sigma: sigma.clone(),
            grid,
        }
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.sigma
    }

    pub fn at(&self, column: usize, row: usize) -> &Snakeshape {
        &self.grid[column][row]
    }

    /// Upper boundary, left to right.
    pub fn top_chain(&self) -> ShapeChain {
        let n = self.size();
        ShapeChain {
            shapes: (0..=n).map(|i| self.grid[i][n].clone()).collect(),
        }
    }

    /// Right boundary, bottom to top.
    pub fn right_chain(&self) -> ShapeChain {
        let n = self.size();
        ShapeChain {
            shapes: self.grid[n].clone(),
        }
    }

    /// Rows from the top, each left to right.
    pub fn rows(&self) -> Vec<Vec<String>> {
        let n = self.size();
        (0..=n)
            .rev()
            .map(|j| (0..=n).map(|i| self.grid[i][j].to_string()).collect())
            .collect()
    }

    /// Re-checks the boundary, every edge and every square.
    pub fn audit(&self) -> Result<()> {
        let n = self.size();
        for k in 0..=n {
            if !self.grid[0][k].is_empty() || !self.grid[k][0].is_empty() {
                return Err(Error::Invalid("nonempty shape on the left or bottom boundary".into()));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let cross = self.sigma.word()[i - 1] as usize == j;
                let t = &self.grid[i - 1][j - 1];
                let x = &self.grid[i - 1][j];
                let y = &self.grid[i][j - 1];
                let z = &self.grid[i][j];
                for (a, b) in [(t, x), (t, y), (x, z), (y, z)] {
                    if a != b && classify_cover(a, b).is_none() {
                        return Err(Error::Invalid(format!("edge {a} - {b} in square ({i}, {j})")));
                    }
                }
                if local_rule(t, x, y, cross)? != *z {
                    return Err(Error::Invalid(format!("square ({i}, {j}) breaks the local rule")));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "permutation": self.sigma.to_string(),
            "rows": self.rows(),
            "p_hat": self.right_chain().to_string(),
            "q_hat": self.top_chain().to_string(),
        })
    }

    /// Rows from the top, columns padded to a common width, crosses marked.
    pub fn to_text(&self) -> String {
        let n = self.size();
        let rows = self.rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for (r, row) in rows.iter().enumerate() {
            let j = n - r;
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            let _ = writeln!(out, "{:>2} | {}", j, line.join(" "));
            if j > 0 {
                let marks: String = (0..=n)
                    .map(|i| {
                        let cross = i < n && self.sigma.word()[i] as usize == j;
                        let mark = if cross { "X" } else { " " };
                        format!("{:>w$}", mark, w = width + 1)
                    })
                    .collect();
                let _ = writeln!(out, "   |{}", marks.trim_end());
            }
        }
        out
    }
}

pub fn growth_diagram(sigma: &Permutation) -> GrowthDiagram {
    GrowthDiagram::new(sigma)
}

/// `(P̂, Q̂)`: right boundary bottom to top, upper boundary left to right.
pub fn boundary_chains(d: &GrowthDiagram) -> (ShapeChain, ShapeChain) {
    (d.right_chain(), d.top_chain())
}

/// A cell named by the index of its column in the tableau that evacuation
/// started from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellPos {
    pub column: usize,
    pub top: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvacuationStep {
    pub letter: u32,
    pub after: YfTableau,
    pub moved: Vec<u32>,
    pub freed: CellPos,
}

/// Removes `a0` from columns tagged with their original index.
fn evacuate_tagged(cols: &mut Vec<(usize, Column)>, a0: u32) -> Result<(Vec<u32>, CellPos)> {
    let start = cols
        .iter()
        .position(|(_, c)| c.topmost() == a0)
        .ok_or(Error::NotTopEntry { letter: a0 })?;
    let mut moved = Vec::new();
    if cols[start].1.top.is_none() {
        let (id, _) = cols.remove(start);
        return Ok((moved, CellPos { column: id, top: false }));
    }
    let mut hole = start;
    cols[hole].1.top = None;
    loop {
        let a1 = cols[hole].1.bottom;
        let next = hole + 1;
        let a2 = match cols.get(next) {
            Some((_, c)) if c.topmost() > a1 => c.topmost(),
            _ => {
                return Ok((
                    moved,
                    CellPos {
                        column: cols[hole].0,
                        top: true,
                    },
                ))
            }
        };
        cols[hole].1.top = Some(a2);
        moved.push(a2);
        if cols[next].1.top.is_some() {
            cols[next].1.top = None;
            hole = next;
        } else {
            let (id, _) = cols.remove(next);
            return Ok((moved, CellPos { column: id, top: false }));
        }
    }
}

fn tag(t: &YfTableau) -> Vec<(usize, Column)> {
    t.columns().iter().copied().enumerate().collect()
}

fn untag(cols: &[(usize, Column)]) -> YfTableau {
    YfTableau::new(cols.iter().map(|&(_, c)| c).collect())
}

/// Deletes the topmost entry `a0` and slides entries left to fill the hole.
pub fn evacuate_letter(t: &YfTableau, a0: u32) -> Result<YfTableau> {
    let mut cols = tag(t);
    evacuate_tagged(&mut cols, a0)?;
    Ok(untag(&cols))
}

/// Evacuates `n, n-1, …, 1` in turn, recording each step.
pub fn evacuation_steps(t: &YfTableau) -> Result<Vec<EvacuationStep>> {
    t.require_standard()?;
    let mut cols = tag(t);
    (1..=t.size() as u32)
        .rev()
        .map(|letter| {
            let (moved, freed) = evacuate_tagged(&mut cols, letter)?;
            Ok(EvacuationStep {
                letter,
                after: untag(&cols),
                moved,
                freed,
            })
        })
        .collect()
}

/// Labels each cell of `shape(t)` with the letter whose evacuation freed it.
pub fn evacuation_tableau(t: &YfTableau) -> Result<YfTableau> {
    let mut cols: Vec<Column> = t
        .columns()
        .iter()
        .map(|c| Column {
            bottom: 0,
            top: c.top.map(|_| 0),
        })
        .collect();
    for step in evacuation_steps(t)? {
        let c = &mut cols[step.freed.column];
        if step.freed.top {
            c.top = Some(step.letter);
        } else {
            c.bottom = step.letter;
        }
    }
    Ok(YfTableau::new(cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakeshape::shapes_of_size;
    use crate::yfinsertion::{insert_pq, permutations};
    use crate::yftableau::standard_tableaux_of_size;

    fn chain(x: &str) -> ShapeChain {
        x.parse().unwrap()
    }

    fn t(x: &str) -> YfTableau {
        x.parse().unwrap()
    }

    fn s(x: &str) -> Snakeshape {
        x.parse().unwrap()
    }

    #[test]
    fn chain_parsing() {
        let c = chain("e,1,2,12");
        assert_eq!(c.len(), 3);
        assert_eq!(c.to_string(), "e,1,2,12");
        assert!(matches!(
            "e,1,111".parse::<ShapeChain>(),
            Err(Error::InvalidChain { step: 2, .. })
        ));
        assert!("1,2".parse::<ShapeChain>().is_err());
        assert!(c.to_dot().contains("s2 -> s3;"));
    }

    #[test]
    fn chain_conversions() {
        assert_eq!(
            chain_to_tableau(&chain("e,1,2,12,22,221,2211,21211")).unwrap(),
            t("3:7 6 1:5 4 2")
        );
        assert_eq!(
            chain_to_tableau(&chain("e,1,2,12,22,212,222,2212")).unwrap(),
            t("3:7 4:6 5 1:2")
        );
        assert_eq!(chain_to_tableau(&chain("e,1")).unwrap(), t("1"));
        assert_eq!(
            tableau_to_chain(&t("3:7 4:6 5 1:2")).unwrap(),
            chain("e,1,2,12,22,212,222,2212")
        );
        assert_eq!(
            tableau_to_chain(&t("2:7 5:6 4 1:3")).unwrap(),
            chain("e,1,11,21,22,212,2112,2212")
        );
        assert_eq!(tableau_to_chain(&t("1")).unwrap(), chain("e,1"));
    }

    #[test]
    fn round_trips_and_unique_reversal() {
        for n in 0..=7 {
            for u in shapes_of_size(n) {
                for c in saturated_chains(&u) {
                    let x = chain_to_tableau(&c).unwrap();
                    assert!(x.is_standard(), "{c}");
                    assert_eq!(tableau_to_chain(&x).unwrap(), c);
                    assert_eq!(tableau_to_chain_by_reversal(&x).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn local_rule_cases() {
        let e = Snakeshape::empty();
        assert_eq!(local_rule(&e, &e, &e, true).unwrap(), s("1"));
        assert_eq!(local_rule(&s("1"), &s("11"), &s("2"), false).unwrap(), s("21"));
        assert_eq!(local_rule(&e, &s("1"), &e, false).unwrap(), s("1"));
        assert_eq!(local_rule(&s("22"), &s("212"), &s("212"), false).unwrap(), s("222"));
        assert_eq!(local_rule(&s("2"), &s("2"), &s("12"), false).unwrap(), s("12"));
        assert_eq!(local_rule(&s("2"), &s("2"), &s("2"), false).unwrap(), s("2"));
        assert!(local_rule(&e, &s("1"), &e, true).is_err());
        assert!(local_rule(&e, &s("2"), &e, false).is_err());
    }

    #[test]
    fn worked_grid() {
        let d = growth_diagram(&"2715643".parse().unwrap());
        let want = [
            "e 1 11 21 22 212 2112 2212",
            "e 1 1 2 12 112 212 222",
            "e 1 1 2 12 12 22 212",
            "e 1 1 2 2 2 12 22",
            "e 1 1 2 2 2 2 12",
            "e 1 1 2 2 2 2 2",
            "e e e 1 1 1 1 1",
            "e e e e e e e e",
        ];
        let got: Vec<String> = d.rows().iter().map(|r| r.join(" ")).collect();
        assert_eq!(got, want);
        let (p_hat, q_hat) = boundary_chains(&d);
        assert_eq!(p_hat, chain("e,1,2,12,22,212,222,2212"));
        assert_eq!(q_hat, chain("e,1,11,21,22,212,2112,2212"));
        d.audit().unwrap();
        let one = growth_diagram(&"1".parse().unwrap());
        assert_eq!(boundary_chains(&one), (chain("e,1"), chain("e,1")));
    }

    #[test]
    fn growth_matches_insertion() {
        for n in 1..=6 {
            for sigma in permutations(n) {
                let d = growth_diagram(&sigma);
                d.audit().unwrap();
                let (p_hat, q_hat) = boundary_chains(&d);
                let (p, q) = insert_pq(&sigma);
                assert_eq!(chain_to_tableau(&p_hat).unwrap(), p, "{sigma}");
                assert_eq!(chain_to_tableau(&q_hat).unwrap(), q, "{sigma}");
            }
        }
    }

    #[test]
    fn evacuation_table() {
        let steps = evacuation_steps(&t("3:7 4:6 5 1:2")).unwrap();
        let got: Vec<(u32, String, Vec<u32>, CellPos)> = steps
            .into_iter()
            .map(|st| (st.letter, st.after.to_string(), st.moved, st.freed))
            .collect();
        let cell = |column, top| CellPos { column, top };
        let want = vec![
            (7, "3:6 4:5 1:2".to_string(), vec![6, 5], cell(2, false)),
            (6, "3:5 4 1:2".to_string(), vec![5], cell(1, true)),
            (5, "3:4 1:2".to_string(), vec![4], cell(1, false)),
            (4, "3 1:2".to_string(), vec![], cell(0, true)),
            (3, "1:2".to_string(), vec![], cell(0, false)),
            (2, "1".to_string(), vec![], cell(3, true)),
            (1, "e".to_string(), vec![], cell(3, false)),
        ];
        assert_eq!(got, want);
        assert_eq!(
            evacuation_tableau(&t("3:7 4:6 5 1:2")).unwrap(),
            t("3:4 5:6 7 1:2")
        );
        assert_eq!(evacuation_tableau(&t("1")).unwrap(), t("1"));
        assert_eq!(evacuate_letter(&t("3:5 4 1:2"), 5).unwrap(), t("3:4 1:2"));
        assert_eq!(evacuate_letter(&t("1"), 1).unwrap(), YfTableau::empty());
        assert_eq!(
            evacuate_letter(&t("3:7 4:6 5 1:2"), 3),
            Err(Error::NotTopEntry { letter: 3 })
        );
    }

    #[test]
    fn evacuation_is_path_labeling() {
        for n in 1..=6 {
            for sigma in permutations(n) {
                let (p_hat, _) = boundary_chains(&growth_diagram(&sigma));
                let p = crate::yfinsertion::insert_p(&sigma);
                assert_eq!(evacuation_tableau(&p).unwrap(), canonical_labeling(&p_hat), "{sigma}");
            }
        }
    }

    #[test]
    fn evacuation_commutes_with_deletion() {
        for n in 1..=6 {
            for sigma in permutations(n) {
                let p = crate::yfinsertion::insert_p(&sigma);
                for c in p.columns() {
                    let a0 = c.topmost();
                    let word: Vec<u32> = sigma.word().iter().copied().filter(|&x| x != a0).collect();
                    let after = evacuate_letter(&p, a0).unwrap();
                    assert!(after.is_valid());
                    assert_eq!(after, insert_word_p(&word), "{sigma} minus {a0}");
                }
            }
        }
    }

    #[test]
    fn chain_counts_per_size() {
        for n in 0..=6 {
            let tabs = standard_tableaux_of_size(n);
            let chains: usize = shapes_of_size(n).iter().map(|u| saturated_chains(u).len()).sum();
            assert_eq!(tabs.len(), chains);
        }
    }
}
