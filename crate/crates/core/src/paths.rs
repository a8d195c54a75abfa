//! Non-intersecting lattice paths for lecture hall tableaux, semistandard
//! content tableaux and pairs of the two.
//!
//! A vertex of the lecture hall graph in column `c` is stored as an integer
//! level `t`; its height is `t/(c+1) = k + r/(c+1)` with `t = k(c+1) + r`.
//! A horizontal step from level `t` in column `c` arrives at level `t + k`
//! in column `c+1` and has weight `x_k`. In the content graph column `c`
//! has indices `0..=c+1`, index `r` standing for height `ω + r/(c+1)`;
//! horizontal steps keep the index and have weight `y_r`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polynomials::Monomial;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{validate, Tableau, TableauClass};

/// A step of a lecture hall graph path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LhStep {
    /// Horizontal step leaving height `k + r/(c+1)` of the current column `c`.
    Horizontal { k: u64, r: u64 },
    Vertical,
}

/// A path in the lecture hall graph from `(start, ∞)` to height 0.
///
/// The vertical tail above the first horizontal step is implicit. A path
/// without horizontal steps is the whole column `start` and has no steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LhPath {
    pub row: usize,
    pub start: usize,
    pub steps: Vec<LhStep>,
}

/// A vertex `(column, level)` of the lecture hall graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LhVertex {
    pub col: usize,
    pub level: u64,
}

impl LhVertex {
    /// The exact height `level / (col + 1)`.
    pub fn height(&self) -> Ratio<u64> {
        Ratio::new(self.level, self.col as u64 + 1)
    }
}

impl LhPath {
    /// Builds the path whose horizontal steps leave the levels `entries`.
    pub fn from_row(row: usize, start: usize, entries: &[u64]) -> Result<Self> {
        let mut steps = Vec::new();
        let mut level: Option<u64> = None;
        for (col, &t) in (start..).zip(entries) {
            if let Some(l) = level {
                if t > l {
                    return Err(Error::InvalidPaths(format!("row {row}: level {t} above arrival level {l}")));
                }
                steps.extend(std::iter::repeat_n(LhStep::Vertical, (l - t) as usize));
            }
            let w = col as u64 + 1;
            steps.push(LhStep::Horizontal { k: t / w, r: t % w });
            level = Some(t + t / w);
        }
        if let Some(l) = level {
            steps.extend(std::iter::repeat_n(LhStep::Vertical, l as usize));
        }
        Ok(LhPath { row, start, steps })
    }

    /// Walks the steps, returning the departure levels of the horizontal
    /// steps and the final column. Fails on steps that are not edges.
    pub fn decode(&self) -> Result<(Vec<u64>, usize)> {
        let bad = |msg: String| Error::InvalidPaths(format!("row {}: {msg}", self.row));
        let mut col = self.start;
        let mut level: Option<u64> = None;
        let mut entries = Vec::new();
        for step in &self.steps {
            match *step {
                LhStep::Horizontal { k, r } => {
                    let w = col as u64 + 1;
                    if r >= w {
                        return Err(bad(format!("offset {r} too large in column {col}")));
                    }
                    let t = k * w + r;
                    if level.is_some_and(|l| l != t) {
                        return Err(bad(format!("horizontal step at level {t} is not at the current vertex")));
                    }
                    entries.push(t);
                    level = Some(t + k);
                    col += 1;
                }
                LhStep::Vertical => match level {
                    Some(l) if l > 0 => level = Some(l - 1),
                    Some(_) => return Err(bad("vertical step below level 0".into())),
                    None => return Err(bad("explicit step on the infinite tail".into())),
                },
            }
        }
        if level.is_some_and(|l| l != 0) {
            return Err(bad("path does not end at height 0".into()));
        }
        Ok((entries, col))
    }

    pub fn end(&self) -> Result<usize> {
        Ok(self.decode()?.1)
    }

    /// Product of `x_k` over the horizontal steps.
    pub fn weight(&self) -> Monomial {
        self.steps.iter().fold(Monomial::one(), |m, s| match s {
            LhStep::Horizontal { k, .. } => m.mul(&Monomial::x(*k as usize)),
            LhStep::Vertical => m,
        })
    }

    /// Occupied levels per column as `(column, low, high)`, `None` meaning unbounded.
    fn occupancy(&self) -> Result<Vec<(usize, u64, Option<u64>)>> {
        let (entries, end) = self.decode()?;
        if entries.is_empty() {
            return Ok(vec![(self.start, 0, None)]);
        }
        let mut out = vec![(self.start, entries[0], None)];
        for (q, &t) in entries.iter().enumerate() {
            let col = self.start + q;
            let w = col as u64 + 1;
            let arrive = t + t / w;
            let low = entries.get(q + 1).copied().unwrap_or(0);
            out.push((col + 1, low, Some(arrive)));
        }
        debug_assert_eq!(out.last().map(|o| o.0), Some(end));
        Ok(out)
    }

    /// Every vertex of the path except the implicit tail, top to bottom.
    pub fn vertices(&self) -> Result<Vec<LhVertex>> {
        let (entries, _) = self.decode()?;
        let mut out = Vec::new();
        let mut col = self.start;
        let mut level = match entries.first() {
            Some(&t) => t,
            None => return Ok(out),
        };
        out.push(LhVertex { col, level });
        for step in &self.steps {
            match step {
                LhStep::Horizontal { k, .. } => {
                    level += k;
                    col += 1;
                }
                LhStep::Vertical => level -= 1,
            }
            out.push(LhVertex { col, level });
        }
        Ok(out)
    }

    fn steps_json(&self) -> Vec<Value> {
        self.steps
            .iter()
            .map(|s| match s {
                LhStep::Horizontal { k, r } => json!({"t": "H", "k": k, "r": r}),
                LhStep::Vertical => json!({"t": "V"}),
            })
            .collect()
    }
}

/// A step of a content graph path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContentStep {
    /// Horizontal step at index `r`, weight `y_r`.
    Horizontal { r: u64 },
    Vertical,
}

/// A path in the content graph from `(start, ω+1)` to index 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContentPath {
    pub row: usize,
    pub start: usize,
    pub steps: Vec<ContentStep>,
}

impl ContentPath {
    pub fn from_row(row: usize, start: usize, entries: &[u64]) -> Result<Self> {
        let mut steps = Vec::new();
        let mut index = start as u64 + 1;
        for (col, &r) in (start..).zip(entries) {
            if r > index || r > col as u64 {
                return Err(Error::InvalidPaths(format!("row {row}: index {r} unreachable in column {col}")));
            }
            steps.extend(std::iter::repeat_n(ContentStep::Vertical, (index - r) as usize));
            steps.push(ContentStep::Horizontal { r });
            index = r;
        }
        steps.extend(std::iter::repeat_n(ContentStep::Vertical, index as usize));
        Ok(ContentPath { row, start, steps })
    }

    pub fn decode(&self) -> Result<(Vec<u64>, usize)> {
        let bad = |msg: String| Error::InvalidPaths(format!("row {}: {msg}", self.row));
        let mut col = self.start;
        let mut index = self.start as u64 + 1;
        let mut entries = Vec::new();
        for step in &self.steps {
            match *step {
                ContentStep::Horizontal { r } => {
                    if r != index || r > col as u64 {
                        return Err(bad(format!("horizontal step at index {r} invalid in column {col}")));
                    }
                    entries.push(r);
                    col += 1;
                }
                ContentStep::Vertical => {
                    index = index.checked_sub(1).ok_or_else(|| bad("vertical step below ω".into()))?;
                }
            }
        }
        if index != 0 {
            return Err(bad("path does not end at height ω".into()));
        }
        Ok((entries, col))
    }

    pub fn end(&self) -> Result<usize> {
        Ok(self.decode()?.1)
    }

    pub fn weight(&self) -> Monomial {
        self.steps.iter().fold(Monomial::one(), |m, s| match s {
            ContentStep::Horizontal { r } => m.mul(&Monomial::y(*r as usize)),
            ContentStep::Vertical => m,
        })
    }

    fn occupancy(&self) -> Result<Vec<(usize, u64, Option<u64>)>> {
        let (entries, _) = self.decode()?;
        let mut out = Vec::new();
        let mut top = self.start as u64 + 1;
        for (q, &r) in entries.iter().enumerate() {
            out.push((self.start + q, r, Some(top)));
            top = r;
        }
        out.push((self.start + entries.len(), 0, Some(top)));
        Ok(out)
    }

    /// Every vertex `(column, index)` of the path, top to bottom.
    pub fn vertices(&self) -> Vec<(usize, u64)> {
        let mut col = self.start;
        let mut index = self.start as u64 + 1;
        let mut out = vec![(col, index)];
        for step in &self.steps {
            match step {
                ContentStep::Horizontal { .. } => col += 1,
                ContentStep::Vertical => index = index.saturating_sub(1),
            }
            out.push((col, index));
        }
        out
    }

    fn steps_json(&self) -> Vec<Value> {
        self.steps
            .iter()
            .map(|s| match s {
                ContentStep::Horizontal { r } => json!({"t": "H", "r": r}),
                ContentStep::Vertical => json!({"t": "V"}),
            })
            .collect()
    }
}

/// A content graph path followed by a lecture hall graph path starting in
/// the column where the first one ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaPath {
    pub upper: ContentPath,
    pub lower: LhPath,
}

impl OmegaPath {
    pub fn new(upper: ContentPath, lower: LhPath) -> Result<Self> {
        let junction = upper.end()?;
        if lower.start != junction {
            return Err(Error::InvalidPaths(format!(
                "row {}: lower part starts in column {} but upper part ends in column {junction}",
                upper.row, lower.start
            )));
        }
        Ok(OmegaPath { upper, lower })
    }

    pub fn weight(&self) -> Monomial {
        self.upper.weight().mul(&self.lower.weight())
    }
}

/// An ordered family of paths, one per row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathSystem<P> {
    pub paths: Vec<P>,
}

impl<P> PathSystem<P> {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

fn disjoint(occupied: Vec<(usize, u64, Option<u64>)>) -> bool {
    let mut by_col: BTreeMap<usize, Vec<(u64, Option<u64>)>> = BTreeMap::new();
    for (c, lo, hi) in occupied {
        by_col.entry(c).or_default().push((lo, hi));
    }
    by_col.values_mut().all(|iv| {
        iv.sort();
        iv.windows(2).all(|w| w[0].1.is_some_and(|hi| hi < w[1].0))
    })
}

impl PathSystem<LhPath> {
    pub fn weight(&self) -> Monomial {
        self.paths.iter().fold(Monomial::one(), |m, p| m.mul(&p.weight()))
    }

    /// True when no two paths share a vertex.
    pub fn is_non_intersecting(&self) -> Result<bool> {
        let mut occ = Vec::new();
        for p in &self.paths {
            occ.extend(p.occupancy()?);
        }
        Ok(disjoint(occ))
    }
}

impl PathSystem<ContentPath> {
    pub fn weight(&self) -> Monomial {
        self.paths.iter().fold(Monomial::one(), |m, p| m.mul(&p.weight()))
    }

    pub fn is_non_intersecting(&self) -> Result<bool> {
        let mut occ = Vec::new();
        for p in &self.paths {
            occ.extend(p.occupancy()?);
        }
        Ok(disjoint(occ))
    }
}

impl PathSystem<OmegaPath> {
    pub fn weight(&self) -> Monomial {
        self.paths.iter().fold(Monomial::one(), |m, p| m.mul(&p.weight()))
    }

    /// The two graphs are disjoint, so the upper and lower parts are checked separately.
    pub fn is_non_intersecting(&self) -> Result<bool> {
        let upper = PathSystem { paths: self.paths.iter().map(|q| q.upper.clone()).collect() };
        let lower = PathSystem { paths: self.paths.iter().map(|q| q.lower.clone()).collect() };
        Ok(upper.is_non_intersecting()? && lower.is_non_intersecting()?)
    }
}

fn start_col(part: usize, n: usize, i: usize) -> usize {
    part + n - i
}

fn row_entries(t: &Tableau, i: usize) -> Vec<u64> {
    t.rows().get(i - 1).cloned().unwrap_or_default()
}

fn require(t: &Tableau, class: TableauClass, n: usize) -> Result<()> {
    validate(t, class, n)?.into_result(class)
}

/// The path system of a lecture hall tableau: path `i` runs from
/// `(μ_i+n−i, ∞)` to `(λ_i+n−i, 0)` and its horizontal steps leave the levels of row `i`.
pub fn lht_to_paths(l: &Tableau, n: usize) -> Result<PathSystem<LhPath>> {
    require(l, TableauClass::Lht, n)?;
    let shape = l.shape();
    let paths = (1..=shape.rows())
        .map(|i| LhPath::from_row(i, start_col(shape.inner().part(i), n, i), &row_entries(l, i)))
        .collect::<Result<_>>()?;
    Ok(PathSystem { paths })
}

fn check_endpoints(shape: &SkewShape, n: usize, i: usize, start: usize, end: usize) -> Result<()> {
    let (a, c) = (start_col(shape.inner().part(i), n, i), start_col(shape.outer().part(i), n, i));
    if start != a || end != c {
        return Err(Error::InvalidPaths(format!(
            "row {i}: path runs from column {start} to {end}, expected {a} to {c}"
        )));
    }
    Ok(())
}

fn check_system_shape(len: usize, shape: &SkewShape, n: usize) -> Result<()> {
    shape.check_rows(n)?;
    if len != shape.rows() {
        return Err(Error::InvalidPaths(format!("{len} paths for {} rows", shape.rows())));
    }
    Ok(())
}

/// Inverse of [`lht_to_paths`].
pub fn paths_to_lht(p: &PathSystem<LhPath>, n: usize, shape: &SkewShape) -> Result<Tableau> {
    check_system_shape(p.len(), shape, n)?;
    let mut rows = Vec::new();
    for (idx, path) in p.paths.iter().enumerate() {
        let (entries, end) = path.decode()?;
        check_endpoints(shape, n, idx + 1, path.start, end)?;
        rows.push(entries);
    }
    if !p.is_non_intersecting()? {
        return Err(Error::InvalidPaths("paths intersect".into()));
    }
    let l = Tableau::new(shape.clone(), rows)?;
    require(&l, TableauClass::Lht, n)?;
    Ok(l)
}

/// The content graph system of a semistandard content tableau.
pub fn ssct_to_content_paths(s: &Tableau, n: usize) -> Result<PathSystem<ContentPath>> {
    require(s, TableauClass::Ssct, n)?;
    let shape = s.shape();
    let paths = (1..=shape.rows())
        .map(|i| ContentPath::from_row(i, start_col(shape.inner().part(i), n, i), &row_entries(s, i)))
        .collect::<Result<_>>()?;
    Ok(PathSystem { paths })
}

/// Inverse of [`ssct_to_content_paths`].
pub fn content_paths_to_ssct(p: &PathSystem<ContentPath>, n: usize, shape: &SkewShape) -> Result<Tableau> {
    check_system_shape(p.len(), shape, n)?;
    let mut rows = Vec::new();
    for (idx, path) in p.paths.iter().enumerate() {
        let (entries, end) = path.decode()?;
        check_endpoints(shape, n, idx + 1, path.start, end)?;
        rows.push(entries);
    }
    if !p.is_non_intersecting()? {
        return Err(Error::InvalidPaths("paths intersect".into()));
    }
    let s = Tableau::new(shape.clone(), rows)?;
    require(&s, TableauClass::Ssct, n)?;
    Ok(s)
}

/// The ω-path system of a pair `L ∈ LHT_n(λ/ν)`, `S ∈ SSCT_n(ν/μ)`.
pub fn pair_to_omega_paths(l: &Tableau, s: &Tableau, n: usize) -> Result<PathSystem<OmegaPath>> {
    if l.shape().inner() != s.shape().outer() {
        return Err(Error::InvalidPaths(format!(
            "shapes {} and {} do not compose",
            l.shape(),
            s.shape()
        )));
    }
    let upper = ssct_to_content_paths(s, n)?;
    let lower = lht_to_paths(l, n)?;
    let rows = l.shape().rows();
    let mut upper_paths = upper.paths.into_iter();
    let mut lower_paths = lower.paths.into_iter();
    let paths = (1..=rows)
        .map(|i| {
            // Rows of ν/μ beyond ℓ(ν) are empty: their upper part is a bare column.
            let u = upper_paths
                .next()
                .map_or_else(|| ContentPath::from_row(i, start_col(0, n, i), &[]), Ok)?;
            let lo = lower_paths.next().expect("one lower path per row");
            OmegaPath::new(u, lo)
        })
        .collect::<Result<_>>()?;
    Ok(PathSystem { paths })
}

/// Inverse of [`pair_to_omega_paths`]; `ν` is read off the junction columns.
pub fn omega_paths_to_pair(p: &PathSystem<OmegaPath>, n: usize, shape: &SkewShape) -> Result<(Tableau, Tableau)> {
    check_system_shape(p.len(), shape, n)?;
    if !p.is_non_intersecting()? {
        return Err(Error::InvalidPaths("paths intersect".into()));
    }
    let mut nu = Vec::new();
    let mut upper_rows = Vec::new();
    let mut lower_rows = Vec::new();
    for (idx, q) in p.paths.iter().enumerate() {
        let i = idx + 1;
        let (s_entries, junction) = q.upper.decode()?;
        let (l_entries, end) = q.lower.decode()?;
        check_endpoints(shape, n, i, q.upper.start, end)?;
        if q.lower.start != junction {
            return Err(Error::InvalidPaths(format!("row {i}: parts do not meet")));
        }
        nu.push(junction + i - n);
        upper_rows.push(s_entries);
        lower_rows.push(l_entries);
    }
    let nu = Partition::new(nu)?;
    let l_shape = SkewShape::new(shape.outer().clone(), nu.clone())?;
    let s_shape = SkewShape::new(nu, shape.inner().clone())?;
    upper_rows.truncate(s_shape.rows());
    let l = Tableau::new(l_shape, lower_rows)?;
    let s = Tableau::new(s_shape, upper_rows)?;
    require(&l, TableauClass::Lht, n)?;
    require(&s, TableauClass::Ssct, n)?;
    Ok((l, s))
}

/// Output formats for [`export_paths`] and friends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn sorted_by_start<P>(paths: &[P], start: impl Fn(&P) -> usize) -> Vec<&P> {
    let mut v: Vec<&P> = paths.iter().collect();
    v.sort_by_key(|p| start(p));
    v
}

fn level_label(col: usize, level: u64) -> String {
    let w = col as u64 + 1;
    let (k, r) = (level / w, level % w);
    if r == 0 {
        format!("{k}")
    } else {
        format!("{k}+{r}/{w}")
    }
}

fn dot_lh(out: &mut String, p: &LhPath, id: &str) -> Result<()> {
    let verts = p.vertices()?;
    let name = |v: &LhVertex| format!("\"{id}_{}_{}\"", v.col, v.level);
    let tail = format!("\"{id}_tail\"");
    writeln!(out, "    {tail} [label=\"({}, inf)\"];", p.start).expect("write to string");
    let Some(first) = verts.first() else {
        writeln!(out, "    \"{id}_end\" [label=\"({}, 0)\"];", p.start).expect("write to string");
        writeln!(out, "    {tail} -> \"{id}_end\";").expect("write to string");
        return Ok(());
    };
    for v in &verts {
        writeln!(out, "    {} [label=\"({}, {})\"];", name(v), v.col, level_label(v.col, v.level)).expect("write to string");
    }
    writeln!(out, "    {tail} -> {};", name(first)).expect("write to string");
    for (w, s) in verts.windows(2).zip(&p.steps) {
        match s {
            LhStep::Horizontal { k, .. } => writeln!(out, "    {} -> {} [label=\"x{k}\"];", name(&w[0]), name(&w[1])),
            LhStep::Vertical => writeln!(out, "    {} -> {};", name(&w[0]), name(&w[1])),
        }
        .expect("write to string");
    }
    Ok(())
}

fn dot_content(out: &mut String, p: &ContentPath, id: &str) {
    let verts = p.vertices();
    let name = |v: &(usize, u64)| format!("\"{id}_w{}_{}\"", v.0, v.1);
    for v in &verts {
        let label = if v.1 == 0 { "w".to_string() } else { format!("w+{}/{}", v.1, v.0 + 1) };
        writeln!(out, "    {} [label=\"({}, {label})\"];", name(v), v.0).expect("write to string");
    }
    for (w, s) in verts.windows(2).zip(&p.steps) {
        match s {
            ContentStep::Horizontal { r } => writeln!(out, "    {} -> {} [label=\"y{r}\"];", name(&w[0]), name(&w[1])),
            ContentStep::Vertical => writeln!(out, "    {} -> {};", name(&w[0]), name(&w[1])),
        }
        .expect("write to string");
    }
}

fn dot_document(body: impl FnOnce(&mut String) -> Result<()>) -> Result<String> {
    let mut out = String::from("digraph paths {\n");
    body(&mut out)?;
    out.push_str("}\n");
    Ok(out)
}

/// Renders a lecture hall path system. JSON records are ordered by start column.
pub fn export_paths(p: &PathSystem<LhPath>, format: ExportFormat) -> Result<String> {
    let paths = sorted_by_start(&p.paths, |q| q.start);
    match format {
        ExportFormat::Json => {
            let records: Vec<Value> = paths
                .iter()
                .map(|q| json!({"row": q.row, "start": q.start, "steps": q.steps_json()}))
                .collect();
            Ok(serde_json::to_string(&records).expect("json values serialize"))
        }
        ExportFormat::Dot => dot_document(|out| {
            for q in paths {
                writeln!(out, "  subgraph cluster_row{} {{", q.row).expect("write to string");
                writeln!(out, "    label=\"row {}\";", q.row).expect("write to string");
                dot_lh(out, q, &format!("p{}", q.row))?;
                out.push_str("  }\n");
            }
            Ok(())
        }),
    }
}

pub fn export_content_paths(p: &PathSystem<ContentPath>, format: ExportFormat) -> Result<String> {
    let paths = sorted_by_start(&p.paths, |q| q.start);
    match format {
        ExportFormat::Json => {
            let records: Vec<Value> = paths
                .iter()
                .map(|q| json!({"row": q.row, "start": q.start, "steps": q.steps_json()}))
                .collect();
            Ok(serde_json::to_string(&records).expect("json values serialize"))
        }
        ExportFormat::Dot => dot_document(|out| {
            for q in paths {
                writeln!(out, "  subgraph cluster_row{} {{", q.row).expect("write to string");
                writeln!(out, "    label=\"row {}\";", q.row).expect("write to string");
                dot_content(out, q, &format!("p{}", q.row));
                out.push_str("  }\n");
            }
            Ok(())
        }),
    }
}

pub fn export_omega_paths(p: &PathSystem<OmegaPath>, format: ExportFormat) -> Result<String> {
    let paths = sorted_by_start(&p.paths, |q| q.upper.start);
    match format {
        ExportFormat::Json => {
            let records: Vec<Value> = paths
                .iter()
                .map(|q| {
                    json!({
                        "row": q.upper.row,
                        "start": q.upper.start,
                        "junction": q.lower.start,
                        "upper": q.upper.steps_json(),
                        "lower": q.lower.steps_json(),
                    })
                })
                .collect();
            Ok(serde_json::to_string(&records).expect("json values serialize"))
        }
        ExportFormat::Dot => dot_document(|out| {
            for q in paths {
                let id = format!("p{}", q.upper.row);
                writeln!(out, "  subgraph cluster_row{} {{", q.upper.row).expect("write to string");
                writeln!(out, "    label=\"row {}\";", q.upper.row).expect("write to string");
                dot_content(out, &q.upper, &id);
                dot_lh(out, &q.lower, &id)?;
                writeln!(out, "    \"{id}_w{}_0\" -> \"{id}_tail\" [style=dashed];", q.lower.start).expect("write to string");
                out.push_str("  }\n");
            }
            Ok(())
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_lht, enumerate_ssct};

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::from_parts(outer, inner).unwrap()
    }

    #[test]
    fn single_cell() {
        let l = Tableau::new(shape(&[1], &[]), vec![vec![0]]).unwrap();
        let p = lht_to_paths(&l, 1).unwrap();
        assert_eq!(p.paths[0].steps, vec![LhStep::Horizontal { k: 0, r: 0 }]);
        assert_eq!(p.weight(), Monomial::x(0));
        assert_eq!(paths_to_lht(&p, 1, l.shape()).unwrap(), l);
    }

    #[test]
    fn empty_systems() {
        let e = Tableau::new(SkewShape::empty(), vec![]).unwrap();
        let p = lht_to_paths(&e, 2).unwrap();
        assert!(p.is_empty());
        assert_eq!(export_paths(&p, ExportFormat::Json).unwrap(), "[]");
        assert_eq!(paths_to_lht(&p, 2, &SkewShape::empty()).unwrap(), e);
        assert!(ssct_to_content_paths(&e, 2).unwrap().is_empty());
    }

    #[test]
    fn intersecting_system_is_rejected() {
        // Two rows in the same columns at the same level.
        let s = shape(&[1, 1], &[]);
        let p = PathSystem {
            paths: vec![LhPath::from_row(1, 1, &[0]).unwrap(), LhPath::from_row(2, 0, &[0]).unwrap()],
        };
        assert!(!p.is_non_intersecting().unwrap());
        assert!(paths_to_lht(&p, 2, &s).is_err());
    }

    #[test]
    fn malformed_steps_are_rejected() {
        let p = LhPath { row: 1, start: 0, steps: vec![LhStep::Vertical] };
        assert!(p.decode().is_err());
        let p = LhPath { row: 1, start: 0, steps: vec![LhStep::Horizontal { k: 0, r: 1 }] };
        assert!(p.decode().is_err());
        let p = ContentPath { row: 1, start: 0, steps: vec![ContentStep::Horizontal { r: 0 }] };
        assert!(p.decode().is_err());
    }

    #[test]
    fn dot_export_has_labelled_edges() {
        let l = Tableau::new(shape(&[1], &[]), vec![vec![0]]).unwrap();
        let dot = export_paths(&lht_to_paths(&l, 1).unwrap(), ExportFormat::Dot).unwrap();
        assert_eq!(dot.matches("subgraph").count(), 1);
        assert!(dot.contains("[label=\"x0\"]"));
        assert!(matches!("svg".parse::<ExportFormat>(), Err(Error::UnknownFormat(_))));
    }

    #[test]
    fn small_roundtrips() {
        for lam in Partition::all_up_to_size(3) {
            for mu in lam.subpartitions() {
                let s = SkewShape::new(lam.clone(), mu).unwrap();
                for n in s.rows().max(1)..=3 {
                    for l in enumerate_lht(&s, n, 2).unwrap() {
                        let p = lht_to_paths(&l, n).unwrap();
                        assert!(p.is_non_intersecting().unwrap());
                        assert_eq!(paths_to_lht(&p, n, &s).unwrap(), l);
                    }
                    for t in enumerate_ssct(&s, n).unwrap() {
                        let p = ssct_to_content_paths(&t, n).unwrap();
                        assert!(p.is_non_intersecting().unwrap());
                        assert_eq!(content_paths_to_ssct(&p, n, &s).unwrap(), t);
                    }
                }
            }
        }
    }
}
