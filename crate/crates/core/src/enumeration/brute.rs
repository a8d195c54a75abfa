//! Backtracking enumerators. Cells are filled in row-major order, so the
//! left and upper neighbours of a cell are always known when it is reached.

use rayon::prelude::*;

use crate::error::Result;
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{content_bound, Mark, MarkedEntry, MarkedTableau, Tableau};

#[derive(Debug, Clone, Copy)]
struct Slot {
    bound: u64,
    left: Option<usize>,
    up: Option<usize>,
}

fn slots(shape: &SkewShape, n: usize) -> Vec<Slot> {
    let cells = shape.cells();
    let index = |c: Cell| cells.binary_search(&c).ok();
    cells
        .iter()
        .map(|&c| Slot {
            bound: content_bound(n, c),
            left: c.left().and_then(index),
            up: c.above().and_then(index),
        })
        .collect()
}

/// Depth-first search where `upper` gives the largest admissible value of the
/// next cell (or `None` when there is none); candidates are `0..=upper`.
fn dfs<U, F>(slots: &[Slot], cur: &mut Vec<u64>, upper: &U, visit: &mut F)
where
    U: Fn(&Slot, &[u64]) -> Option<u64>,
    F: FnMut(&[u64]) + ?Sized,
{
    let k = cur.len();
    if k == slots.len() {
        visit(cur);
        return;
    }
    let Some(hi) = upper(&slots[k], cur) else {
        return;
    };
    for v in 0..=hi {
        cur.push(v);
        dfs(slots, cur, upper, visit);
        cur.pop();
    }
}

/// Counts leaves of the same search; the last cell contributes its range size.
fn count<U>(slots: &[Slot], cur: &mut Vec<u64>, upper: &U) -> u128
where
    U: Fn(&Slot, &[u64]) -> Option<u64> + Sync,
{
    let k = cur.len();
    if k == slots.len() {
        return 1;
    }
    let Some(hi) = upper(&slots[k], cur) else {
        return 0;
    };
    if k + 1 == slots.len() {
        return hi as u128 + 1;
    }
    let mut total = 0;
    for v in 0..=hi {
        cur.push(v);
        total += count(slots, cur, upper);
        cur.pop();
    }
    total
}

fn par_count<U>(slots: &[Slot], upper: &U) -> u128
where
    U: Fn(&Slot, &[u64]) -> Option<u64> + Sync,
{
    if slots.len() < 2 {
        return count(slots, &mut Vec::new(), upper);
    }
    let Some(hi) = upper(&slots[0], &[]) else {
        return 0;
    };
    (0..=hi)
        .into_par_iter()
        .map(|v| count(slots, &mut vec![v], upper))
        .sum()
}

/// Largest admissible value at a lecture hall cell with floors below `m`.
fn lht_upper(m: u64) -> impl Fn(&Slot, &[u64]) -> Option<u64> + Sync {
    move |s: &Slot, cur: &[u64]| {
        let mut hi = (m * s.bound).checked_sub(1)?;
        // The left cell has content one less, the upper cell one more.
        if let Some(l) = s.left {
            // v·b_left ≤ L_left·b
            hi = hi.min(cur[l] * s.bound / (s.bound - 1));
        }
        if let Some(u) = s.up {
            // v·b_up < L_up·b
            let lim = (cur[u] * s.bound).checked_sub(1)?;
            hi = hi.min(lim / (s.bound + 1));
        }
        Some(hi)
    }
}

fn ssct_upper(s: &Slot, cur: &[u64]) -> Option<u64> {
    let mut hi = s.bound.checked_sub(1)?;
    if let Some(l) = s.left {
        hi = hi.min(cur[l]);
    }
    if let Some(u) = s.up {
        hi = hi.min(cur[u].checked_sub(1)?);
    }
    Some(hi)
}

fn ct_upper(s: &Slot, _cur: &[u64]) -> Option<u64> {
    s.bound.checked_sub(1)
}

/// Calls `visit` with the row-major entries of every `L ∈ LHT_{n,m}(λ/μ)`.
pub fn for_each_lht(shape: &SkewShape, n: usize, m: u64, mut visit: impl FnMut(&[u64])) -> Result<()> {
    shape.check_rows(n)?;
    dfs(&slots(shape, n), &mut Vec::new(), &lht_upper(m), &mut visit);
    Ok(())
}

/// Calls `visit` with the row-major entries of every `S ∈ SSCT_n(λ/μ)`, using
/// the direct cell bounds rather than the lecture hall ratios.
pub fn for_each_ssct(shape: &SkewShape, n: usize, mut visit: impl FnMut(&[u64])) -> Result<()> {
    shape.check_rows(n)?;
    dfs(&slots(shape, n), &mut Vec::new(), &ssct_upper, &mut visit);
    Ok(())
}

fn collect(shape: &SkewShape, f: impl FnOnce(&mut dyn FnMut(&[u64])) -> Result<()>) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    f(&mut |e: &[u64]| out.push(e.to_vec()))?;
    out.into_iter().map(|e| Tableau::from_row_major(shape.clone(), e)).collect()
}

/// All of `LHT_{n,m}(λ/μ)` in lexicographic row-major order.
pub fn enumerate_lht(shape: &SkewShape, n: usize, m: u64) -> Result<Vec<Tableau>> {
    collect(shape, |v| for_each_lht(shape, n, m, v))
}

/// All of `SSCT_n(λ/μ)` in lexicographic row-major order.
pub fn enumerate_ssct(shape: &SkewShape, n: usize) -> Result<Vec<Tableau>> {
    collect(shape, |v| for_each_ssct(shape, n, v))
}

/// All of `CT_n(λ/μ)`: every filling with `0 ≤ T(i,j) < n + c(i,j)`.
pub fn enumerate_ct(shape: &SkewShape, n: usize) -> Result<Vec<Tableau>> {
    shape.check_rows(n)?;
    collect(shape, |v| {
        dfs(&slots(shape, n), &mut Vec::new(), &ct_upper, v);
        Ok(())
    })
}

/// `|LHT_{n,m}(λ/μ)|` by exhaustive search, split over the first cell.
pub fn brute_count_lht(shape: &SkewShape, n: usize, m: u64) -> Result<u128> {
    shape.check_rows(n)?;
    Ok(par_count(&slots(shape, n), &lht_upper(m)))
}

/// `|SSCT_n(λ/μ)|` by exhaustive search with direct bounds.
pub fn brute_count_ssct(shape: &SkewShape, n: usize) -> Result<u128> {
    shape.check_rows(n)?;
    Ok(par_count(&slots(shape, n), &ssct_upper))
}

/// Standard Young tableaux with entries `1..=N` decreasing along rows and
/// down columns. The entry `N` sits in a north-west corner; we place values
/// from `N` down to `1`, each in a cell whose left and upper neighbours are filled.
pub fn enumerate_syt(shape: &SkewShape) -> Vec<Tableau> {
    let sl = slots(shape, shape.rows().max(1));
    let size = sl.len();
    let mut cur = vec![0u64; size];
    let mut out = Vec::new();
    fn go(sl: &[Slot], cur: &mut [u64], next: u64, out: &mut Vec<Vec<u64>>) {
        if next == 0 {
            out.push(cur.to_vec());
            return;
        }
        for k in 0..sl.len() {
            if cur[k] != 0 {
                continue;
            }
            let ready = |o: Option<usize>| o.is_none_or(|i| cur[i] != 0);
            if ready(sl[k].left) && ready(sl[k].up) {
                cur[k] = next;
                go(sl, cur, next - 1, out);
                cur[k] = 0;
            }
        }
    }
    go(&sl, &mut cur, size as u64, &mut out);
    out.sort();
    out.into_iter()
        .map(|e| Tableau::from_row_major(shape.clone(), e).expect("row-major entries match the shape"))
        .collect()
}

/// All bijective fillings by `1..=N`, in lexicographic order.
pub fn enumerate_st(shape: &SkewShape) -> Vec<Tableau> {
    let size = shape.size();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    let mut used = vec![false; size + 1];
    fn go(size: usize, cur: &mut Vec<u64>, used: &mut [bool], out: &mut Vec<Vec<u64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in 1..=size {
            if !used[v] {
                used[v] = true;
                cur.push(v as u64);
                go(size, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(size, &mut cur, &mut used, &mut out);
    out.into_iter()
        .map(|e| Tableau::from_row_major(shape.clone(), e).expect("row-major entries match the shape"))
        .collect()
}

/// The mark alphabet `{0, …, p−1, ∞}` used to finitize marked enumerations.
pub fn mark_alphabet(p: u64) -> Vec<Mark> {
    (0..p).map(Mark::Finite).chain(std::iter::once(Mark::Infinite)).collect()
}

/// All extended lecture hall tableaux with marks in `{0, …, p−1, ∞}`.
pub fn enumerate_extended_lht(shape: &SkewShape, n: usize, p: u64) -> Result<Vec<MarkedTableau>> {
    shape.check_rows(n)?;
    let sl = slots(shape, n);
    let marks = mark_alphabet(p);
    let mut out = Vec::new();
    let mut cur: Vec<MarkedEntry> = Vec::with_capacity(sl.len());
    fn go(sl: &[Slot], marks: &[Mark], cur: &mut Vec<MarkedEntry>, out: &mut Vec<Vec<MarkedEntry>>) {
        let k = cur.len();
        if k == sl.len() {
            out.push(cur.clone());
            return;
        }
        let s = sl[k];
        for &r in marks {
            for a in 0..s.bound {
                let e = MarkedEntry::new(a, r);
                let row_ok = s.left.is_none_or(|l| {
                    let w = &cur[l];
                    w.mark > r || (w.mark == r && w.value >= a)
                });
                let col_ok = s.up.is_none_or(|u| {
                    let w = &cur[u];
                    w.mark > r || (w.mark == r && w.value > a)
                });
                if row_ok && col_ok {
                    cur.push(e);
                    go(sl, marks, cur, out);
                    cur.pop();
                }
            }
        }
    }
    go(&sl, &marks, &mut cur, &mut out);
    out.into_iter().map(|e| MarkedTableau::from_row_major(shape.clone(), e)).collect()
}

/// All marked SSCT: an SSCT value tableau with arbitrary marks in `{0, …, p−1, ∞}`.
pub fn enumerate_marked_ssct(shape: &SkewShape, n: usize, p: u64) -> Result<Vec<MarkedTableau>> {
    let values = enumerate_ssct(shape, n)?;
    let marks = mark_alphabet(p);
    let size = shape.size();
    let mut out = Vec::new();
    for t in values {
        let vals = t.row_major();
        let mut idx = vec![0usize; size];
        loop {
            let entries = vals.iter().zip(&idx).map(|(&a, &i)| MarkedEntry::new(a, marks[i])).collect();
            out.push(MarkedTableau::from_row_major(shape.clone(), entries)?);
            // Odometer over the mark choices.
            let mut k = size;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < marks.len() {
                    break;
                }
                idx[k] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{is_marked_member, is_member, TableauClass};

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    fn rows(ts: &[Tableau]) -> Vec<Vec<u64>> {
        ts.iter().map(|t| t.row_major()).collect()
    }

    #[test]
    fn lht_examples() {
        assert_eq!(rows(&enumerate_lht(&shape(&[1], &[]), 1, 3).unwrap()), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(
            rows(&enumerate_lht(&shape(&[2], &[]), 1, 2).unwrap()),
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(enumerate_lht(&shape(&[2, 1], &[]), 2, 0).unwrap().len(), 0);
        assert_eq!(enumerate_lht(&SkewShape::empty(), 1, 0).unwrap().len(), 1);
        assert!(enumerate_lht(&shape(&[1, 1], &[]), 1, 1).is_err());
    }

    #[test]
    fn ssct_examples() {
        assert_eq!(enumerate_ssct(&shape(&[2, 1], &[1]), 2).unwrap().len(), 3);
        assert_eq!(rows(&enumerate_ssct(&shape(&[1], &[]), 1).unwrap()), vec![vec![0]]);
        assert_eq!(enumerate_ssct(&shape(&[2, 1], &[]), 2).unwrap().len(), 2);
    }

    #[test]
    fn syt_examples() {
        assert_eq!(enumerate_syt(&shape(&[2, 1], &[])).len(), 2);
        assert_eq!(enumerate_syt(&shape(&[1], &[])).len(), 1);
        assert_eq!(enumerate_syt(&shape(&[2, 2], &[1])).len(), 2);
        assert_eq!(enumerate_syt(&SkewShape::empty()).len(), 1);
        for t in enumerate_syt(&shape(&[3, 2], &[1])) {
            assert!(is_member(&t, TableauClass::Syt, 2));
        }
    }

    #[test]
    fn enumerators_agree_with_membership() {
        for lam in crate::shapes::Partition::all_up_to_size(4) {
            for mu in lam.subpartitions() {
                let s = SkewShape::new(lam.clone(), mu).unwrap();
                for n in s.rows().max(1)..=3 {
                    let ct = enumerate_ct(&s, n).unwrap();
                    let ssct: Vec<_> = ct.iter().filter(|t| is_member(t, TableauClass::Ssct, n)).cloned().collect();
                    assert_eq!(rows(&ssct), rows(&enumerate_ssct(&s, n).unwrap()));
                    assert_eq!(rows(&ssct), rows(&enumerate_lht(&s, n, 1).unwrap()));
                    assert_eq!(brute_count_ssct(&s, n).unwrap(), ssct.len() as u128);
                    for m in 0..3 {
                        let lht = enumerate_lht(&s, n, m).unwrap();
                        assert_eq!(brute_count_lht(&s, n, m).unwrap(), lht.len() as u128);
                        for t in &lht {
                            assert!(is_member(t, TableauClass::Lht, n));
                        }
                    }
                    let st = enumerate_st(&s);
                    let syt: Vec<_> = st.iter().filter(|t| is_member(t, TableauClass::Syt, n)).cloned().collect();
                    assert_eq!(rows(&syt), rows(&enumerate_syt(&s)));
                }
            }
        }
    }

    #[test]
    fn marked_enumerators_agree_with_membership() {
        let s = shape(&[2, 1], &[]);
        let lht = enumerate_extended_lht(&s, 2, 2).unwrap();
        assert!(lht.iter().all(|t| is_marked_member(t, TableauClass::ExtendedLht, 2)));
        let ssct = enumerate_marked_ssct(&s, 2, 2).unwrap();
        assert_eq!(ssct.len(), 2 * 27);
        assert!(ssct.iter().all(|t| is_marked_member(t, TableauClass::MarkedSsct, 2)));
        assert_eq!(enumerate_marked_ssct(&SkewShape::empty(), 1, 2).unwrap().len(), 1);
    }
}
