//! Value and mark jeu de taquin, the tail and head selectors, and the two
//! sorting maps between extended lecture hall tableaux and marked SSCT.
//!
//! During sorting the cells are split into `α = κ/μ` and `β = λ/κ` for a
//! partition `κ`, so both regions are skew shapes by construction.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::{
    is_marked_member, validate, validate_marked, Mark, MarkedEntry, MarkedTableau, Tableau, TableauClass,
};

/// One slide of the active cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Move {
    pub round: usize,
    pub from: Cell,
    pub to: Cell,
    /// The entry carried by the active cell.
    pub carried: MarkedEntry,
    /// The entry written into the cell the active cell left.
    pub placed: MarkedEntry,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "round {}: {} -> {}, carry {}, place {}",
            self.round, self.from, self.to, self.carried, self.placed
        )
    }
}

fn entry(t: &MarkedTableau, cell: Cell) -> Result<MarkedEntry> {
    t.get(cell).copied().ok_or(Error::CellOutsideShape(cell))
}

fn swap_in(t: &mut MarkedTableau, active: Cell, next: Cell, placed: MarkedEntry, carried: MarkedEntry) -> Result<()> {
    t.set(active, placed)?;
    t.set(next, carried)
}

/// Slides the entry at `u` right or down until its value is in order.
/// Missing neighbours act as the boundary value `(−1)_0`.
pub fn vjdt(p: &MarkedTableau, u: Cell) -> Result<(MarkedTableau, Cell)> {
    vjdt_traced(p, u, 0, &mut Vec::new())
}

pub fn vjdt_traced(p: &MarkedTableau, u: Cell, round: usize, trace: &mut Vec<Move>) -> Result<(MarkedTableau, Cell)> {
    let mut q = p.clone();
    let mut v = u;
    let carried = entry(&q, v)?;
    let a = carried.value as i64;
    loop {
        let (right, below) = (v.right(), v.below());
        let b = q.get(right).copied();
        let c = q.get(below).copied();
        let bv = b.map_or(-1, |e| e.value as i64);
        let cv = c.map_or(-1, |e| e.value as i64);
        if a >= bv && a > cv {
            return Ok((q, v));
        }
        let (next, placed) = if bv - 1 > cv {
            let b = b.expect("a real right neighbour exceeds the boundary");
            (right, MarkedEntry::new(b.value - 1, b.mark))
        } else {
            let c = c.expect("sliding down requires a real lower neighbour");
            (below, MarkedEntry::new(c.value + 1, c.mark))
        };
        swap_in(&mut q, v, next, placed, carried)?;
        trace.push(Move { round, from: v, to: next, carried, placed });
        v = next;
    }
}

/// Slides the entry at `v` up or left until its mark is in order.
/// Missing neighbours act as the boundary value `∞_∞`.
pub fn mjdt(q: &MarkedTableau, v: Cell) -> Result<(MarkedTableau, Cell)> {
    mjdt_traced(q, v, 0, &mut Vec::new())
}

pub fn mjdt_traced(q: &MarkedTableau, v: Cell, round: usize, trace: &mut Vec<Move>) -> Result<(MarkedTableau, Cell)> {
    let mut p = q.clone();
    let mut u = v;
    let carried = entry(&p, u)?;
    let r = carried.mark;
    loop {
        let left = u.left().filter(|&c| p.get(c).is_some());
        let above = u.above().filter(|&c| p.get(c).is_some());
        let b = left.map(|c| p.get(c).copied().expect("cell in shape"));
        let c = above.map(|c| p.get(c).copied().expect("cell in shape"));
        let s = b.map_or(Mark::Infinite, |e| e.mark);
        let t = c.map_or(Mark::Infinite, |e| e.mark);
        if r <= s && r <= t {
            return Ok((p, u));
        }
        // Both guards involve at least one real neighbour: a mark below r is finite.
        let up = if t < r && r <= s {
            true
        } else if s < r && r <= t {
            false
        } else {
            let (b, c) = (b.expect("mark below r"), c.expect("mark below r"));
            b.value as i64 >= c.value as i64 - 1
        };
        let (next, placed) = if up {
            let c = c.expect("sliding up requires a real upper neighbour");
            let value = c.value.checked_sub(1).ok_or(Error::NegativeValue(u))?;
            (above.expect("upper neighbour"), MarkedEntry::new(value, c.mark))
        } else {
            let b = b.expect("sliding left requires a real left neighbour");
            (left.expect("left neighbour"), MarkedEntry::new(b.value + 1, b.mark))
        };
        swap_in(&mut p, u, next, placed, carried)?;
        trace.push(Move { round, from: u, to: next, carried, placed });
        u = next;
    }
}

fn extremal_cell(t: &MarkedTableau, region: &SkewShape, selector: &'static str, largest: bool) -> Result<Cell> {
    let cells = region.cells();
    let key = |c: &Cell| {
        let e = t.get(*c).expect("region inside the tableau shape");
        (e.mark, e.value)
    };
    let target = if largest {
        cells.iter().map(key).max()
    } else {
        cells.iter().map(key).min()
    }
    .ok_or(Error::EmptyRegion(selector))?;
    let mut hits: Vec<Cell> = cells.into_iter().filter(|c| key(c) == target).collect();
    hits.sort_by_key(|c| c.col);
    if hits.windows(2).any(|w| w[0].col == w[1].col) {
        return Err(Error::AmbiguousSelector {
            selector,
            cells: hits.iter().map(|c| (c.row, c.col)).collect(),
        });
    }
    Ok(if largest { hits[0] } else { hits[hits.len() - 1] })
}

fn check_region(t: &MarkedTableau, region: &SkewShape) -> Result<()> {
    for c in region.cells() {
        if t.get(c).is_none() {
            return Err(Error::CellOutsideShape(c));
        }
    }
    Ok(())
}

/// The rightmost cell of `region` holding the smallest mark and, among
/// those, the smallest value.
pub fn tail(t: &MarkedTableau, region: &SkewShape) -> Result<Cell> {
    check_region(t, region)?;
    extremal_cell(t, region, "tail", false)
}

/// The leftmost cell of `region` holding the largest mark and, among
/// those, the largest value.
pub fn head(t: &MarkedTableau, region: &SkewShape) -> Result<Cell> {
    check_region(t, region)?;
    extremal_cell(t, region, "head", true)
}

/// Options for the sorting maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortOptions {
    /// Check the region invariants after every round.
    pub check_invariants: bool,
    /// Record every slide.
    pub trace: bool,
}

impl Default for SortOptions {
    fn default() -> Self {
        SortOptions {
            check_invariants: cfg!(debug_assertions),
            trace: false,
        }
    }
}

/// Result of a sorting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortRun {
    pub tableau: MarkedTableau,
    pub moves: Vec<Move>,
}

fn regions(shape: &SkewShape, kappa: &Partition) -> Result<(SkewShape, SkewShape)> {
    Ok((
        SkewShape::new(kappa.clone(), shape.inner().clone())?,
        SkewShape::new(shape.outer().clone(), kappa.clone())?,
    ))
}

fn invariant(round: usize, detail: impl Into<String>) -> Error {
    Error::SortInvariant { round, detail: detail.into() }
}

fn check_split(t: &MarkedTableau, alpha: &SkewShape, beta: &SkewShape, n: usize, round: usize) -> Result<()> {
    if !is_marked_member(&t.restrict(alpha)?, TableauClass::ExtendedLht, n) {
        return Err(invariant(round, format!("restriction to {alpha} is not an extended lecture hall tableau")));
    }
    if !is_marked_member(&t.restrict(beta)?, TableauClass::MarkedSsct, n) {
        return Err(invariant(round, format!("restriction to {beta} is not a marked SSCT")));
    }
    Ok(())
}

fn require(t: &MarkedTableau, class: TableauClass, n: usize) -> Result<()> {
    validate_marked(t, class, n)?.into_result(class)
}

/// Sorts the values of an extended lecture hall tableau, producing a marked SSCT.
pub fn vsort(l: &MarkedTableau, n: usize) -> Result<MarkedTableau> {
    Ok(vsort_with(l, n, SortOptions::default())?.tableau)
}

pub fn vsort_with(l: &MarkedTableau, n: usize, opts: SortOptions) -> Result<SortRun> {
    require(l, TableauClass::ExtendedLht, n)?;
    let shape = l.shape().clone();
    let mut t = l.clone();
    let mut kappa = shape.outer().clone();
    let mut moves = Vec::new();
    for round in 1..=shape.size() {
        let (alpha, _) = regions(&shape, &kappa)?;
        let u = tail(&t, &alpha)?;
        let next = kappa
            .remove_corner(u)
            .ok_or_else(|| invariant(round, format!("tail {u} is not a corner of {kappa}")))?;
        let mut round_moves = Vec::new();
        let (q, v) = vjdt_traced(&t, u, round, &mut round_moves)?;
        t = q;
        kappa = next;
        if opts.check_invariants {
            let (alpha, beta) = regions(&shape, &kappa)?;
            check_split(&t, &alpha, &beta, n, round)?;
            let h = head(&t, &beta)?;
            if h != v {
                return Err(invariant(round, format!("head {h} differs from resting cell {v}")));
            }
        }
        if opts.trace {
            moves.extend(round_moves);
        }
    }
    Ok(SortRun { tableau: t, moves })
}

/// Sorts the marks of a marked SSCT, producing an extended lecture hall tableau.
pub fn msort(s: &MarkedTableau, n: usize) -> Result<MarkedTableau> {
    Ok(msort_with(s, n, SortOptions::default())?.tableau)
}

pub fn msort_with(s: &MarkedTableau, n: usize, opts: SortOptions) -> Result<SortRun> {
    require(s, TableauClass::MarkedSsct, n)?;
    let shape = s.shape().clone();
    let mut t = s.clone();
    let mut kappa = shape.inner().clone();
    let mut moves = Vec::new();
    for round in 1..=shape.size() {
        let (_, beta) = regions(&shape, &kappa)?;
        let v = head(&t, &beta)?;
        let mut round_moves = Vec::new();
        let (p, u) = mjdt_traced(&t, v, round, &mut round_moves)?;
        let next = kappa
            .add_corner(u)
            .filter(|k| shape.outer().contains(k))
            .ok_or_else(|| invariant(round, format!("resting cell {u} is not an outer corner of {kappa}")))?;
        t = p;
        kappa = next;
        if opts.check_invariants {
            let (alpha, beta) = regions(&shape, &kappa)?;
            check_split(&t, &alpha, &beta, n, round)?;
            let tl = tail(&t, &alpha)?;
            if tl != u {
                return Err(invariant(round, format!("tail {tl} differs from resting cell {u}")));
            }
        }
        if opts.trace {
            moves.extend(round_moves);
        }
    }
    Ok(SortRun { tableau: t, moves })
}

/// The map `CT_n × SYT → SSCT_n × ST`: values from `a`, marks from `b`,
/// then value sorting.
pub fn induced_map(a: &Tableau, b: &Tableau, n: usize) -> Result<(Tableau, Tableau)> {
    if a.shape() != b.shape() {
        return Err(Error::Parse(format!("shapes {} and {} differ", a.shape(), b.shape())));
    }
    validate(a, TableauClass::Ct, n)?.into_result(TableauClass::Ct)?;
    validate(b, TableauClass::Syt, n)?.into_result(TableauClass::Syt)?;
    let packed = a.map(|cell, &v| MarkedEntry::finite(v, *b.get(cell).expect("same shape")));
    let sorted = vsort(&packed, n)?;
    let values = sorted.map(|_, e| e.value);
    let marks = sorted.map(|_, e| e.mark.finite().expect("marks stay finite"));
    Ok((values, marks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn marked(outer: &[usize], inner: &[usize], rows: &[&[(u64, Option<u64>)]]) -> MarkedTableau {
        let shape = SkewShape::from_parts(outer, inner).unwrap();
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, m)| MarkedEntry::new(a, m.map_or(Mark::Infinite, Mark::Finite)))
                    .collect()
            })
            .collect();
        MarkedTableau::new(shape, rows).unwrap()
    }

    #[test]
    fn vjdt_single_row() {
        let p = marked(&[2], &[], &[&[(0, Some(0)), (5, Some(1))]]);
        let (q, v) = vjdt(&p, Cell::new(1, 1)).unwrap();
        assert_eq!(v, Cell::new(1, 2));
        assert_eq!(q, marked(&[2], &[], &[&[(4, Some(1)), (0, Some(0))]]));
    }

    #[test]
    fn immediate_stop() {
        let p = marked(&[2], &[], &[&[(3, Some(0)), (1, Some(0))]]);
        assert_eq!(vjdt(&p, Cell::new(1, 1)).unwrap(), (p.clone(), Cell::new(1, 1)));
        assert_eq!(mjdt(&p, Cell::new(1, 2)).unwrap(), (p.clone(), Cell::new(1, 2)));
        assert!(matches!(vjdt(&p, Cell::new(2, 1)), Err(Error::CellOutsideShape(_))));
    }

    #[test]
    fn mjdt_rejects_negative_values() {
        let q = marked(&[1, 1], &[], &[&[(0, Some(0))], &[(0, Some(1))]]);
        assert!(matches!(mjdt(&q, Cell::new(2, 1)), Err(Error::NegativeValue(_))));
    }

    #[test]
    fn selectors() {
        let t = marked(&[2, 1], &[], &[&[(1, Some(0)), (1, Some(0))], &[(0, None)]]);
        let whole = t.shape().clone();
        assert_eq!(tail(&t, &whole).unwrap(), Cell::new(1, 2));
        assert_eq!(head(&t, &whole).unwrap(), Cell::new(2, 1));
        let single = SkewShape::from_parts(&[2], &[1]).unwrap();
        assert_eq!(tail(&t, &single).unwrap(), Cell::new(1, 2));
        assert!(matches!(tail(&t, &SkewShape::empty()), Err(Error::EmptyRegion("tail"))));
        let col = marked(&[1, 1], &[], &[&[(1, Some(0))], &[(1, Some(0))]]);
        assert!(matches!(head(&col, col.shape()), Err(Error::AmbiguousSelector { .. })));
    }

    #[test]
    fn sorted_inputs_are_fixed() {
        let s = marked(&[2, 1], &[], &[&[(1, Some(1)), (1, Some(1))], &[(0, Some(1))]]);
        assert_eq!(vsort(&s, 2).unwrap(), s);
        assert_eq!(msort(&s, 2).unwrap(), s);
    }

    #[test]
    fn wrong_class_is_rejected() {
        let s = marked(&[2], &[], &[&[(0, Some(0)), (1, Some(0))]]);
        assert!(matches!(vsort(&s, 1), Err(Error::InvalidTableau { .. })));
        assert!(matches!(msort(&s, 1), Err(Error::InvalidTableau { .. })));
    }
}
