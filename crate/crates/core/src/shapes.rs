//! Partitions, skew shapes and the cell geometry built on them.
//!
//! Cells use 1-based `(row, col)` coordinates with row 1 at the top.
//! Wherever an order on cells is needed it is row-major.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Parts beyond the length read as zero, so `part(i)` is total.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the end and for `i = 0`.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (the conjugate part).
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width).map(|j| self.column_len(j)).collect(),
        }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    /// Arm length `λ_i − j` of a cell in the diagram.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    /// Leg length `λ'_j − i` of a cell in the diagram.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.column_len(cell.col) - cell.row)
    }

    /// Hook length `λ_i + λ'_j − i − j + 1`.
    pub fn hook(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutsideShape(cell))
        }
    }

    /// Cells `u ∈ λ` such that `λ ∖ {u}` is a partition.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i, self.part(i)))
            .collect()
    }

    /// Cells `u ∉ λ` such that `λ ∪ {u}` is a partition.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i, self.part(i) + 1))
            .collect()
    }

    /// The partition with `cell` removed, if it is an inner corner.
    pub fn remove_corner(&self, cell: Cell) -> Option<Partition> {
        if !self.inner_corners().contains(&cell) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Partition::new(parts).ok()
    }

    /// The partition with `cell` added, if it is an outer corner.
    pub fn add_corner(&self, cell: Cell) -> Option<Partition> {
        if !self.outer_corners().contains(&cell) {
            return None;
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Partition::new(parts).ok()
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all_of_size(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `k` cells, ordered by size.
    pub fn all_up_to_size(k: usize) -> Vec<Partition> {
        (0..=k).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i > outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in 0..=outer.part(i).min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 1, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A cell `(row, col)` of a diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `j − i`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn above(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew shape `λ/μ`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Deserialize)]
struct RawSkewShape {
    outer: Partition,
    #[serde(default)]
    inner: Partition,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkewShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts.clone(),
                inner: inner.parts.clone(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn empty() -> Self {
        SkewShape::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer shape, `ℓ(λ)`.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// `|λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Column range `(μ_i, λ_i]` of row `i`, as `first..=last` (may be empty).
    pub fn row_range(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.inner.part(i) + 1..=self.outer.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && self.row_range(cell.row).contains(&cell.col)
    }

    /// Cells of `λ/μ` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|i| self.row_range(i).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// `(northwest, southeast)` corners: outer corners of `μ` and inner
    /// corners of `λ` that lie in the shape.
    pub fn corners(&self) -> (Vec<Cell>, Vec<Cell>) {
        let nw = self
            .inner
            .outer_corners()
            .into_iter()
            .filter(|&c| self.contains(c))
            .collect();
        let se = self
            .outer
            .inner_corners()
            .into_iter()
            .filter(|&c| self.contains(c))
            .collect();
        (nw, se)
    }

    /// Every partition `ν` with `μ ⊆ ν ⊆ λ`.
    pub fn intermediate_partitions(&self) -> Vec<Partition> {
        self.outer
            .subpartitions()
            .into_iter()
            .filter(|nu| nu.contains(&self.inner))
            .collect()
    }

    /// `n + c(x)` for every cell, requiring `ℓ(λ) ≤ n` so all factors are positive.
    pub fn content_factors(&self, n: usize) -> Result<Vec<u64>> {
        self.check_rows(n)?;
        Ok(self
            .cells()
            .into_iter()
            .map(|c| (n as i64 + c.content()) as u64)
            .collect())
    }

    pub fn check_rows(&self, n: usize) -> Result<()> {
        if self.rows() > n {
            Err(Error::TooManyRows { rows: self.rows(), n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A set of cells reachable from the diagram of `μ` inside `λ` by excited moves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExcitedDiagram {
    pub cells: BTreeSet<Cell>,
}

/// All excited diagrams of `μ` inside `λ`, sorted and duplicate-free.
///
/// A cell `(i,j)` of a diagram `D` may move to `(i+1,j+1)` when
/// `(i+1,j)`, `(i,j+1)` and `(i+1,j+1)` all lie in `λ` and none lies in `D`.
pub fn excited_diagrams(outer: &Partition, inner: &Partition) -> Result<Vec<ExcitedDiagram>> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            outer: outer.parts().to_vec(),
            inner: inner.parts().to_vec(),
        });
    }
    let start: BTreeSet<Cell> = inner.cells().into_iter().collect();
    let mut seen: HashSet<BTreeSet<Cell>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(diagram) = queue.pop_front() {
        for &cell in &diagram {
            let (down, right, diag) = (cell.below(), cell.right(), cell.below().right());
            let movable = [down, right, diag]
                .iter()
                .all(|&c| outer.contains_cell(c) && !diagram.contains(&c));
            if movable {
                let mut next = diagram.clone();
                next.remove(&cell);
                next.insert(diag);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<ExcitedDiagram> = seen.into_iter().map(|cells| ExcitedDiagram { cells }).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn cells_of_small_shapes() {
        let s = SkewShape::from_parts(&[2, 1], &[]).unwrap();
        assert_eq!(s.cells(), vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]);
        let s = SkewShape::from_parts(&[2, 1], &[1]).unwrap();
        assert_eq!(s.cells(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        let s = SkewShape::from_parts(&[6, 6, 4, 3], &[3, 1]).unwrap();
        assert_eq!(s.cells().len(), 15);
        assert_eq!(s.size(), 15);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).hook(Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(p(&[2, 1]).hook(Cell::new(1, 2)).unwrap(), 1);
        // (1,2) in (3,2): arm {(1,3)}, leg {(2,2)}.
        assert_eq!(p(&[3, 2]).hook(Cell::new(1, 2)).unwrap(), 3);
        assert!(p(&[2, 1]).hook(Cell::new(2, 2)).is_err());
    }

    #[test]
    fn corners_of_example_shape() {
        let s = SkewShape::from_parts(&[6, 6, 4, 3], &[3, 1]).unwrap();
        let (nw, se) = s.corners();
        assert_eq!(nw, vec![Cell::new(1, 4), Cell::new(2, 2), Cell::new(3, 1)]);
        // (1,6) is not an inner corner of (6,6,4,3) because row 2 also has 6 cells.
        assert_eq!(se, vec![Cell::new(2, 6), Cell::new(3, 4), Cell::new(4, 3)]);
    }

    #[test]
    fn corners_small() {
        let s = SkewShape::from_parts(&[1], &[]).unwrap();
        assert_eq!(s.corners(), (vec![Cell::new(1, 1)], vec![Cell::new(1, 1)]));
        let s = SkewShape::from_parts(&[2, 2], &[1]).unwrap();
        assert_eq!(s.corners(), (vec![Cell::new(1, 2), Cell::new(2, 1)], vec![Cell::new(2, 2)]));
    }

    #[test]
    fn excited_diagram_counts() {
        let d = excited_diagrams(&p(&[3, 2]), &Partition::empty()).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].cells.is_empty());

        let d = excited_diagrams(&p(&[2, 2]), &p(&[1])).unwrap();
        let sets: Vec<Vec<Cell>> = d.iter().map(|e| e.cells.iter().copied().collect()).collect();
        assert_eq!(sets, vec![vec![Cell::new(1, 1)], vec![Cell::new(2, 2)]]);

        assert_eq!(excited_diagrams(&p(&[3, 3, 3]), &p(&[2])).unwrap().len(), 3);
        assert_eq!(excited_diagrams(&p(&[3, 2]), &p(&[3, 2])).unwrap().len(), 1);
        assert!(excited_diagrams(&p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=7).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn corner_add_remove() {
        let l = p(&[3, 1]);
        assert_eq!(l.remove_corner(Cell::new(1, 3)), Some(p(&[2, 1])));
        assert_eq!(l.remove_corner(Cell::new(1, 2)), None);
        assert_eq!(l.add_corner(Cell::new(3, 1)), Some(p(&[3, 1, 1])));
        assert_eq!(l.add_corner(Cell::new(2, 3)), None);
    }

    #[test]
    fn json_forms() {
        let s: SkewShape = serde_json::from_str(r#"{"outer":[2,1],"inner":[1]}"#).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"outer":[2,1],"inner":[1]}"#);
        assert!(serde_json::from_str::<SkewShape>(r#"{"outer":[1],"inner":[2]}"#).is_err());
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition() -> impl Strategy<Value = Partition> {
            prop::collection::vec(1usize..7, 0..6).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).unwrap()
            })
        }

        proptest! {
            #[test]
            fn hook_is_arm_plus_leg_plus_one(l in partition()) {
                for c in l.cells() {
                    prop_assert_eq!(l.hook(c).unwrap(), l.arm(c).unwrap() + l.leg(c).unwrap() + 1);
                }
                prop_assert_eq!(l.cells().len(), l.size());
            }

            #[test]
            fn corners_are_corners(l in partition(), pick in any::<prop::sample::Index>()) {
                let subs = l.subpartitions();
                let mu = subs[pick.index(subs.len())].clone();
                let s = SkewShape::new(l.clone(), mu.clone()).unwrap();
                let (nw, se) = s.corners();
                for c in se {
                    prop_assert!(l.inner_corners().contains(&c));
                }
                for c in nw {
                    prop_assert!(mu.outer_corners().contains(&c));
                }
                for i in 1..=s.rows() {
                    prop_assert_eq!(s.row_range(i).count(), l.part(i) - mu.part(i));
                }
            }
        }
    }
}
