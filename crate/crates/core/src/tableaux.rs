//! Fillings of skew shapes: plain tableaux, marked tableaux, and the
//! validity predicates for every tableau class used in the crate.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomials::{Monomial, SparsePoly};
use crate::shapes::{Cell, SkewShape};

/// A filling of a skew shape, stored row by row over the cells of `λ/μ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling<T> {
    shape: SkewShape,
    rows: Vec<Vec<T>>,
}

/// A map from the cells of a skew shape to nonnegative integers.
pub type Tableau = Filling<u64>;

/// A map from the cells of a skew shape to value/mark pairs `a_r`.
pub type MarkedTableau = Filling<MarkedEntry>;

impl<T: Clone> Filling<T> {
    /// Builds a filling from rows of `λ/μ`; row `i` must have `λ_i − μ_i` entries.
    pub fn new(shape: SkewShape, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::RowLengthMismatch {
                row: rows.len(),
                expected: shape.rows(),
                found: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.row_len(i + 1);
            if row.len() != expected {
                return Err(Error::RowLengthMismatch {
                    row: i + 1,
                    expected,
                    found: row.len(),
                });
            }
        }
        Ok(Filling { shape, rows })
    }

    /// Builds a filling from entries listed in row-major cell order.
    pub fn from_row_major(shape: SkewShape, entries: Vec<T>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                shape.size(),
                entries.len()
            )));
        }
        let mut it = entries.into_iter();
        let rows = (1..=shape.rows())
            .map(|i| it.by_ref().take(shape.row_len(i)).collect())
            .collect();
        Ok(Filling { shape, rows })
    }

    /// A filling with the same entry everywhere.
    pub fn constant(shape: SkewShape, value: T) -> Self {
        let rows = (1..=shape.rows()).map(|i| vec![value.clone(); shape.row_len(i)]).collect();
        Filling { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<&T> {
        if !self.shape.contains(cell) {
            return None;
        }
        let offset = cell.col - self.shape.inner().part(cell.row) - 1;
        self.rows[cell.row - 1].get(offset)
    }

    pub fn set(&mut self, cell: Cell, value: T) -> Result<()> {
        if !self.shape.contains(cell) {
            return Err(Error::CellOutsideShape(cell));
        }
        let offset = cell.col - self.shape.inner().part(cell.row) - 1;
        self.rows[cell.row - 1][offset] = value;
        Ok(())
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, &T)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let first = self.shape.inner().part(i + 1) + 1;
            row.iter()
                .enumerate()
                .map(move |(k, v)| (Cell::new(i + 1, first + k), v))
        })
    }

    /// Entries in row-major order.
    pub fn row_major(&self) -> Vec<T> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(Cell, &T) -> U) -> Filling<U> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let first = self.shape.inner().part(i + 1) + 1;
                row.iter()
                    .enumerate()
                    .map(|(k, v)| f(Cell::new(i + 1, first + k), v))
                    .collect()
            })
            .collect();
        Filling {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// The restriction `T|_α` to a skew shape `α` whose cells lie in this shape.
    pub fn restrict(&self, region: &SkewShape) -> Result<Self> {
        let mut entries = Vec::with_capacity(region.size());
        for cell in region.cells() {
            entries.push(self.get(cell).ok_or(Error::CellOutsideShape(cell))?.clone());
        }
        Filling::from_row_major(region.clone(), entries)
    }
}

impl<T: fmt::Display> fmt::Display for Filling<T> {
    /// Rows with inner cells shown as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut items: Vec<String> = vec![".".into(); self.shape.inner().part(i + 1)];
            items.extend(row.iter().map(|v| v.to_string()));
            write!(f, "{}", items.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Filling<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.shape, self.to_string().replace('\n', " / "))
    }
}

#[derive(Serialize, Deserialize)]
struct RawFilling<T> {
    shape: SkewShape,
    rows: Vec<Vec<T>>,
}

impl<T: Serialize + Clone> Serialize for Filling<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawFilling {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Deserialize<'de> + Clone> Deserialize<'de> for Filling<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawFilling::<T>::deserialize(deserializer)?;
        Filling::new(raw.shape, raw.rows).map_err(de::Error::custom)
    }
}

/// A mark: a natural number or `∞`, with every natural below `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Finite(u64),
    Infinite,
}

impl Mark {
    pub fn finite(self) -> Option<u64> {
        match self {
            Mark::Finite(r) => Some(r),
            Mark::Infinite => None,
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mark::Finite(r) => write!(f, "{r}"),
            Mark::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Mark {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Mark::Finite(r) => serializer.serialize_u64(*r),
            Mark::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Mark {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(r) => Ok(Mark::Finite(r)),
            Raw::Str(s) if s == "inf" => Ok(Mark::Infinite),
            Raw::Str(s) => Err(de::Error::custom(format!("invalid mark {s:?}, expected integer or \"inf\""))),
        }
    }
}

/// An entry `a_r` of a marked tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedEntry {
    #[serde(rename = "a")]
    pub value: u64,
    #[serde(rename = "r")]
    pub mark: Mark,
}

impl MarkedEntry {
    pub const fn new(value: u64, mark: Mark) -> Self {
        MarkedEntry { value, mark }
    }

    pub const fn finite(value: u64, mark: u64) -> Self {
        MarkedEntry {
            value,
            mark: Mark::Finite(mark),
        }
    }

    pub const fn infinite(value: u64) -> Self {
        MarkedEntry {
            value,
            mark: Mark::Infinite,
        }
    }

    /// `x_r` for a finite mark, `y_a` for mark `∞`.
    pub fn weight(&self) -> Monomial {
        match self.mark {
            Mark::Finite(r) => Monomial::x(r as usize),
            Mark::Infinite => Monomial::y(self.value as usize),
        }
    }
}

impl fmt::Display for MarkedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.mark)
    }
}

/// The tableau classes with decidable membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableauClass {
    /// n-lecture hall tableaux.
    Lht,
    /// Semistandard n-content tableaux.
    Ssct,
    /// Semistandard Young tableaux with entries below n.
    Ssyt,
    /// Standard Young tableaux, entries decreasing.
    Syt,
    /// Standard tableaux: each of `1..=|λ/μ|` exactly once.
    St,
    /// n-content tableaux: `0 ≤ T(i,j) < n + c(i,j)`.
    Ct,
    /// Extended n-lecture hall tableaux (marked).
    ExtendedLht,
    /// Marked semistandard n-content tableaux.
    MarkedSsct,
}

impl TableauClass {
    pub fn is_marked(self) -> bool {
        matches!(self, TableauClass::ExtendedLht | TableauClass::MarkedSsct)
    }

    fn needs_content_bound(self) -> bool {
        matches!(
            self,
            TableauClass::Lht | TableauClass::Ssct | TableauClass::Ct | TableauClass::ExtendedLht | TableauClass::MarkedSsct
        )
    }
}

impl fmt::Display for TableauClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TableauClass::Lht => "LHT",
            TableauClass::Ssct => "SSCT",
            TableauClass::Ssyt => "SSYT",
            TableauClass::Syt => "SYT",
            TableauClass::St => "ST",
            TableauClass::Ct => "CT",
            TableauClass::ExtendedLht => "LHT*",
            TableauClass::MarkedSsct => "SSCT*",
        };
        f.write_str(name)
    }
}

/// The first violated condition found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub cell: Cell,
    pub other: Option<Cell>,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.other {
            Some(o) => write!(f, "{} vs {}: {}", self.cell, o, self.reason),
            None => write!(f, "{}: {}", self.cell, self.reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Violation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Validity::Valid => None,
            Validity::Invalid(v) => Some(v),
        }
    }

    /// Converts an invalid verdict into an error naming the class.
    pub fn into_result(self, class: TableauClass) -> Result<()> {
        match self {
            Validity::Valid => Ok(()),
            Validity::Invalid(v) => Err(Error::InvalidTableau {
                class: class.to_string(),
                reason: v.to_string(),
            }),
        }
    }
}

/// `n + c(i,j)`; positive whenever `ℓ(λ) ≤ n`.
pub fn content_bound(n: usize, cell: Cell) -> u64 {
    (n as i64 + cell.content()) as u64
}

fn check_parameter(shape: &SkewShape, class: TableauClass, n: usize) -> Result<()> {
    if class.needs_content_bound() {
        shape.check_rows(n)?;
    }
    Ok(())
}

fn invalid(cell: Cell, other: Option<Cell>, reason: impl Into<String>) -> Validity {
    Validity::Invalid(Violation {
        cell,
        other,
        reason: reason.into(),
    })
}

/// Checks pairs of horizontally and vertically adjacent cells in row-major order.
fn check_adjacent<T>(
    t: &Filling<T>,
    mut row_ok: impl FnMut(Cell, &T, Cell, &T) -> bool,
    mut col_ok: impl FnMut(Cell, &T, Cell, &T) -> bool,
    row_reason: &str,
    col_reason: &str,
) -> Validity
where
    T: Clone,
{
    for (cell, v) in t.entries() {
        let right = cell.right();
        if let Some(w) = t.get(right) {
            if !row_ok(cell, v, right, w) {
                return invalid(cell, Some(right), row_reason);
            }
        }
        let below = cell.below();
        if let Some(w) = t.get(below) {
            if !col_ok(cell, v, below, w) {
                return invalid(cell, Some(below), col_reason);
            }
        }
    }
    Validity::Valid
}

fn check_standard(t: &Tableau) -> Validity {
    let size = t.shape().size() as u64;
    let mut seen = HashSet::new();
    for (cell, &v) in t.entries() {
        if v < 1 || v > size {
            return invalid(cell, None, format!("entry {v} outside 1..={size}"));
        }
        if !seen.insert(v) {
            return invalid(cell, None, format!("entry {v} repeated"));
        }
    }
    Validity::Valid
}

fn check_content_bound<T: Clone>(t: &Filling<T>, n: usize, value: impl Fn(&T) -> u64) -> Validity {
    for (cell, v) in t.entries() {
        let bound = content_bound(n, cell);
        if value(v) >= bound {
            return invalid(cell, None, format!("value {} not below n + c = {bound}", value(v)));
        }
    }
    Validity::Valid
}

/// Membership test for a plain tableau class.
///
/// A shape with more rows than `n` is an error for the classes whose bounds
/// are `n + c(i,j)`; invalid entries are reported as [`Validity::Invalid`].
/// Ratio conditions are compared by cross-multiplication.
pub fn validate(t: &Tableau, class: TableauClass, n: usize) -> Result<Validity> {
    if class.is_marked() {
        return Err(Error::Parse(format!("{class} applies to marked tableaux")));
    }
    check_parameter(t.shape(), class, n)?;
    let v = match class {
        TableauClass::Lht => check_adjacent(
            t,
            |c, &a, d, &b| a as u128 * content_bound(n, d) as u128 >= b as u128 * content_bound(n, c) as u128,
            |c, &a, d, &b| a as u128 * content_bound(n, d) as u128 > b as u128 * content_bound(n, c) as u128,
            "row ratio increases",
            "column ratio does not strictly decrease",
        ),
        TableauClass::Ssct => match check_content_bound(t, n, |&v| v) {
            Validity::Valid => check_semistandard(t),
            bad => bad,
        },
        TableauClass::Ssyt => {
            for (cell, &v) in t.entries() {
                if v >= n as u64 {
                    return Ok(invalid(cell, None, format!("entry {v} not below n = {n}")));
                }
            }
            check_semistandard(t)
        }
        TableauClass::Syt => match check_standard(t) {
            Validity::Valid => check_adjacent(
                t,
                |_, a, _, b| a > b,
                |_, a, _, b| a > b,
                "row not decreasing",
                "column not decreasing",
            ),
            bad => bad,
        },
        TableauClass::St => check_standard(t),
        TableauClass::Ct => check_content_bound(t, n, |&v| v),
        TableauClass::ExtendedLht | TableauClass::MarkedSsct => unreachable!(),
    };
    Ok(v)
}

fn check_semistandard(t: &Tableau) -> Validity {
    check_adjacent(
        t,
        |_, a, _, b| a >= b,
        |_, a, _, b| a > b,
        "row not weakly decreasing",
        "column not strictly decreasing",
    )
}

/// Membership test for a marked tableau class.
pub fn validate_marked(t: &MarkedTableau, class: TableauClass, n: usize) -> Result<Validity> {
    if !class.is_marked() {
        return Err(Error::Parse(format!("{class} applies to unmarked tableaux")));
    }
    check_parameter(t.shape(), class, n)?;
    if let bad @ Validity::Invalid(_) = check_content_bound(t, n, |e| e.value) {
        return Ok(bad);
    }
    let v = match class {
        TableauClass::ExtendedLht => check_adjacent(
            t,
            |_, a, _, b| a.mark > b.mark || (a.mark == b.mark && a.value >= b.value),
            |_, a, _, b| a.mark > b.mark || (a.mark == b.mark && a.value > b.value),
            "row violates marks-then-values order",
            "column violates marks-then-values order",
        ),
        TableauClass::MarkedSsct => check_adjacent(
            t,
            |_, a, _, b| a.value >= b.value,
            |_, a, _, b| a.value > b.value,
            "row values not weakly decreasing",
            "column values not strictly decreasing",
        ),
        _ => unreachable!(),
    };
    Ok(v)
}

/// Convenience: `validate(..)?.is_valid()`.
pub fn is_member(t: &Tableau, class: TableauClass, n: usize) -> bool {
    matches!(validate(t, class, n), Ok(Validity::Valid))
}

pub fn is_marked_member(t: &MarkedTableau, class: TableauClass, n: usize) -> bool {
    matches!(validate_marked(t, class, n), Ok(Validity::Valid))
}

fn require_lht(l: &Tableau, n: usize) -> Result<()> {
    validate(l, TableauClass::Lht, n)?.into_result(TableauClass::Lht)
}

/// The floor tableau `⌊L⌋` with entries `⌊L(i,j) / (n + c(i,j))⌋`.
pub fn floor_tableau(l: &Tableau, n: usize) -> Result<Tableau> {
    require_lht(l, n)?;
    Ok(l.map(|cell, &v| v / content_bound(n, cell)))
}

/// Writes each entry as `a_r` with `L(i,j) = r·(n + c(i,j)) + a`, `0 ≤ a < n + c(i,j)`.
pub fn to_marked(l: &Tableau, n: usize) -> Result<MarkedTableau> {
    require_lht(l, n)?;
    Ok(l.map(|cell, &v| {
        let b = content_bound(n, cell);
        MarkedEntry::finite(v % b, v / b)
    }))
}

/// Inverse of [`to_marked`]: `L(i,j) = r·(n + c(i,j)) + a`.
pub fn from_marked(t: &MarkedTableau, n: usize) -> Result<Tableau> {
    t.shape().check_rows(n)?;
    let mut entries = Vec::with_capacity(t.shape().size());
    for (cell, e) in t.entries() {
        let b = content_bound(n, cell);
        let r = e.mark.finite().ok_or_else(|| Error::InvalidTableau {
            class: "LHT".into(),
            reason: format!("{cell} carries mark inf"),
        })?;
        if e.value >= b {
            return Err(Error::InvalidTableau {
                class: "LHT".into(),
                reason: format!("{cell}: value {} not below {b}", e.value),
            });
        }
        entries.push(r * b + e.value);
    }
    Filling::from_row_major(t.shape().clone(), entries)
}

/// `wt*(T)`: the product of `x_r` over finite marks and `y_a` over marks `∞`.
pub fn weight(t: &MarkedTableau) -> SparsePoly {
    let m = t.entries().fold(Monomial::one(), |acc, (_, e)| acc.mul(&e.weight()));
    SparsePoly::from_monomial(m)
}

/// `x^T = Π x_{T(i,j)}`.
pub fn x_power(t: &Tableau) -> Monomial {
    t.entries().fold(Monomial::one(), |acc, (_, &v)| acc.mul(&Monomial::x(v as usize)))
}

/// `y^T = Π y_{T(i,j)}`.
pub fn y_power(t: &Tableau) -> Monomial {
    t.entries().fold(Monomial::one(), |acc, (_, &v)| acc.mul(&Monomial::y(v as usize)))
}

/// Orders marked entries as in an extended lecture hall tableau: mark first, then value.
pub fn mark_major_cmp(a: &MarkedEntry, b: &MarkedEntry) -> Ordering {
    a.mark.cmp(&b.mark).then(a.value.cmp(&b.value))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example() -> Tableau {
        let shape = SkewShape::from_parts(&[6, 6, 4, 3], &[3, 1]).unwrap();
        Filling::new(
            shape,
            vec![
                vec![25, 25, 21],
                vec![16, 18, 21, 10, 4],
                vec![8, 9, 2, 0],
                vec![4, 4, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_is_lecture_hall() {
        assert!(validate(&example(), TableauClass::Lht, 5).unwrap().is_valid());
    }

    #[test]
    fn example_floor() {
        let f = floor_tableau(&example(), 5).unwrap();
        assert_eq!(
            f.rows(),
            &[vec![3, 2, 2], vec![3, 3, 3, 1, 0], vec![2, 2, 0, 0], vec![2, 1, 0]]
        );
    }

    #[test]
    fn broken_row_ratio_is_reported() {
        let mut t = example();
        // 25/8 exceeds both 25/9 above it and 21/7 to its left; the column
        // pair comes first in row-major order.
        t.set(Cell::new(2, 5), 25).unwrap();
        let v = validate(&t, TableauClass::Lht, 5).unwrap();
        let bad = v.violation().unwrap();
        assert_eq!((bad.cell, bad.other), (Cell::new(1, 5), Some(Cell::new(2, 5))));

        let mut t = example();
        // 22/7 is not below 25/8 above it.
        t.set(Cell::new(2, 4), 22).unwrap();
        let bad = validate(&t, TableauClass::Lht, 5).unwrap().violation().cloned().unwrap();
        assert_eq!((bad.cell, bad.other), (Cell::new(1, 4), Some(Cell::new(2, 4))));
    }

    #[test]
    fn raising_entry_to_22_keeps_it_valid() {
        // 22/8 < 21/7 and 22/8 < 25/9, so nothing breaks.
        let mut t = example();
        t.set(Cell::new(2, 5), 22).unwrap();
        assert!(validate(&t, TableauClass::Lht, 5).unwrap().is_valid());
    }

    #[test]
    fn too_many_rows_is_an_error_not_a_verdict() {
        let t = Filling::new(SkewShape::from_parts(&[1, 1], &[]).unwrap(), vec![vec![1], vec![0]]).unwrap();
        assert!(matches!(
            validate(&t, TableauClass::Lht, 1),
            Err(Error::TooManyRows { rows: 2, n: 1 })
        ));
        assert!(validate(&t, TableauClass::Syt, 1).is_ok());
    }

    #[test]
    fn single_zero_cell_is_in_every_bounded_class() {
        let t = Filling::new(SkewShape::from_parts(&[1], &[]).unwrap(), vec![vec![0]]).unwrap();
        for class in [TableauClass::Lht, TableauClass::Ssct, TableauClass::Ssyt, TableauClass::Ct] {
            assert!(validate(&t, class, 1).unwrap().is_valid(), "{class}");
        }
    }

    #[test]
    fn floor_small() {
        let t = Filling::new(SkewShape::from_parts(&[2], &[]).unwrap(), vec![vec![3, 5]]).unwrap();
        assert_eq!(floor_tableau(&t, 1).unwrap().rows(), &[vec![3, 2]]);
        let z = Filling::constant(SkewShape::from_parts(&[3, 1], &[1]).unwrap(), 0u64);
        assert_eq!(floor_tableau(&z, 2).unwrap(), z);
    }

    #[test]
    fn marked_encoding() {
        let m = to_marked(&example(), 5).unwrap();
        assert_eq!(m.get(Cell::new(1, 4)), Some(&MarkedEntry::finite(1, 3)));
        assert_eq!(m.get(Cell::new(1, 5)), Some(&MarkedEntry::finite(7, 2)));
        assert_eq!(from_marked(&m, 5).unwrap(), example());

        let one = Filling::new(SkewShape::from_parts(&[1], &[]).unwrap(), vec![vec![5]]).unwrap();
        assert_eq!(to_marked(&one, 2).unwrap().rows(), &[vec![MarkedEntry::finite(1, 2)]]);
    }

    #[test]
    fn marked_json_uses_inf_string() {
        let t = Filling::new(
            SkewShape::from_parts(&[2], &[]).unwrap(),
            vec![vec![MarkedEntry::infinite(1), MarkedEntry::finite(3, 1)]],
        )
        .unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":{"outer":[2],"inner":[]},"rows":[[{"a":1,"r":"inf"},{"a":3,"r":1}]]}"#);
        let back: MarkedTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<MarkedTableau>(r#"{"shape":{"outer":[2]},"rows":[[{"a":1,"r":0}]]}"#).is_err());
    }

    #[test]
    fn empty_weight_is_one() {
        let t: MarkedTableau = Filling::constant(SkewShape::empty(), MarkedEntry::finite(0, 0));
        assert_eq!(weight(&t), SparsePoly::one());
    }

    #[test]
    fn syt_uses_decreasing_convention() {
        let shape = SkewShape::from_parts(&[2, 1], &[]).unwrap();
        let t = Filling::new(shape.clone(), vec![vec![3, 2], vec![1]]).unwrap();
        assert!(is_member(&t, TableauClass::Syt, 0));
        let t = Filling::new(shape, vec![vec![1, 2], vec![3]]).unwrap();
        assert!(!is_member(&t, TableauClass::Syt, 0));
        assert!(is_member(&t, TableauClass::St, 0));
    }
}
