//! Young diagrams in a rectangle and the three equivalent encodings of a
//! subspace's position relative to a complete flag.
//!
//! A diagram is a partition `λ = (λ₁ ≥ λ₂ ≥ … ≥ 0)`. Inside the `k×(n−k)`
//! rectangle of the Grassmannian `G_k(C^n)` it carries the same data as the
//! jumping numbers `j₁ < … < j_k` (via `λᵢ = n−k−jᵢ+i`) and as the rank
//! table `d_j = dim(V ∩ F_j)`. This module holds the conversions between
//! the three encodings plus the rotated-overlap criterion that decides
//! whether a product of Schubert classes vanishes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition with weakly decreasing nonnegative parts.
///
/// Trailing zeros are normalized away on construction, so `(2)` and `(2,0)`
/// are the same diagram. Ordering is canonical display order: by area
/// first, then reverse-lexicographically on parts, so that e.g.
/// `(2)` sorts before `(1,1)` and `(3,1)` before `(2,1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl YoungDiagram {
    /// Builds a diagram, rejecting sequences that are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        for i in 1..parts.len() {
            if parts[i] > parts[i - 1] {
                return Err(Error::NotWeaklyDecreasing {
                    index: i,
                    value: parts[i],
                    prev: parts[i - 1],
                });
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Normalized parts (no trailing zeros).
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part, 0-indexed; parts beyond the last row read as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Area |λ| = λ₁ + ⋯ + λ_k.
    pub fn area(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts re-padded with zeros to `rows` entries (display helper).
    pub fn padded(&self, rows: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(v.len().max(rows), 0);
        v
    }

    /// Shape containment: `other ⊆ self` row by row.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        (0..other.rows()).all(|i| other.part(i) <= self.part(i))
    }
}

impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.area()
            .cmp(&other.area())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.parts
    }
}

impl fmt::Display for YoungDiagram {
    /// Comma-separated parts; the empty diagram prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_u32_csv(s, "Young diagram")?;
        YoungDiagram::new(parts)
    }
}

fn parse_u32_csv(s: &str, what: &'static str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse {
            what,
            detail: "empty input".into(),
        });
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                what,
                detail: format!("bad entry {tok:?}: {e}"),
            })
        })
        .collect()
}

/// The pair `(k, n)` fixing the Grassmannian `G_k(C^n)` and with it the
/// `k×(n−k)` rectangle diagrams must fit into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(u32, u32)", into = "(u32, u32)")]
pub struct RectangleContext {
    k: u32,
    n: u32,
}

impl RectangleContext {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k < 1 || k >= n {
            return Err(Error::InvalidRectangle { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Rectangle width n−k.
    pub fn width(&self) -> u32 {
        self.n - self.k
    }

    /// Number of cells k(n−k) in the rectangle.
    pub fn cells(&self) -> u64 {
        u64::from(self.k) * u64::from(self.width())
    }

    /// The full `k×(n−k)` rectangle as a diagram.
    pub fn full_rectangle(&self) -> YoungDiagram {
        YoungDiagram {
            parts: vec![self.width(); self.k as usize],
        }
    }

    /// All diagrams fitting the rectangle, in canonical order.
    ///
    /// Enumerated directly as partitions in a box (at most `k` parts, each
    /// at most `n−k`), independently of the jump-set bijection.
    pub fn enumerate_diagrams(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        fn rec(out: &mut Vec<YoungDiagram>, current: &mut Vec<u32>, rows_left: u32, max: u32) {
            out.push(YoungDiagram {
                parts: current.clone(),
            });
            if rows_left == 0 {
                return;
            }
            for p in (1..=max).rev() {
                current.push(p);
                rec(out, current, rows_left - 1, p);
                current.pop();
            }
        }
        rec(&mut out, &mut current, self.k, self.width());
        out.sort();
        out
    }

    /// All diagrams in the rectangle with the given area.
    pub fn diagrams_with_area(&self, area: u64) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        if area > self.cells() {
            return out;
        }
        let mut current: Vec<u32> = Vec::new();
        fn rec(
            out: &mut Vec<YoungDiagram>,
            current: &mut Vec<u32>,
            rows_left: u32,
            max: u32,
            remaining: u64,
        ) {
            if remaining == 0 {
                out.push(YoungDiagram {
                    parts: current.clone(),
                });
                return;
            }
            if rows_left == 0 || u64::from(max) * u64::from(rows_left) < remaining {
                return;
            }
            let hi = u64::from(max).min(remaining) as u32;
            for p in (1..=hi).rev() {
                current.push(p);
                rec(out, current, rows_left - 1, p, remaining - u64::from(p));
                current.pop();
            }
        }
        rec(&mut out, &mut current, self.k, self.width(), area);
        out.sort();
        out
    }
}

impl TryFrom<(u32, u32)> for RectangleContext {
    type Error = Error;
    fn try_from((k, n): (u32, u32)) -> Result<Self> {
        Self::new(k, n)
    }
}

impl From<RectangleContext> for (u32, u32) {
    fn from(c: RectangleContext) -> (u32, u32) {
        (c.k, c.n)
    }
}

impl fmt::Display for RectangleContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, n={})", self.k, self.n)
    }
}

/// Strictly increasing indices `j₁ < … < j_k`, each in `1..=n`; the steps
/// along a flag where `dim(V ∩ F_j)` jumps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct JumpingNumbers {
    indices: Vec<u32>,
}

impl JumpingNumbers {
    pub fn new(indices: impl Into<Vec<u32>>) -> Result<Self> {
        let indices = indices.into();
        for (i, &v) in indices.iter().enumerate() {
            if v == 0 {
                return Err(Error::JumpOutOfRange { value: v, n: 0 });
            }
            if i > 0 && v <= indices[i - 1] {
                return Err(Error::JumpsNotIncreasing {
                    index: i,
                    value: v,
                    prev: indices[i - 1],
                });
            }
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Checks length against `ctx.k()` and range against `ctx.n()`.
    pub fn validate_for(&self, ctx: RectangleContext) -> Result<()> {
        if self.indices.len() != ctx.k() as usize {
            return Err(Error::JumpsWrongLength {
                expected: ctx.k(),
                got: self.indices.len(),
            });
        }
        for &v in &self.indices {
            if v < 1 || v > ctx.n() {
                return Err(Error::JumpOutOfRange { value: v, n: ctx.n() });
            }
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for JumpingNumbers {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<JumpingNumbers> for Vec<u32> {
    fn from(j: JumpingNumbers) -> Vec<u32> {
        j.indices
    }
}

impl fmt::Display for JumpingNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.indices {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for JumpingNumbers {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        JumpingNumbers::new(parse_u32_csv(s, "jumping numbers")?)
    }
}

/// The sequence `d₀, …, d_n` with `d_j = dim(V ∩ F_j)`: starts at 0 and
/// climbs to `dim V` in unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RankTable {
    values: Vec<u32>,
}

impl RankTable {
    pub fn new(values: impl Into<Vec<u32>>) -> Result<Self> {
        let values = values.into();
        let Some(&first) = values.first() else {
            return Err(Error::RankTableEmpty);
        };
        if first != 0 {
            return Err(Error::RankTableStart { got: first });
        }
        for i in 1..values.len() {
            let step_ok = values[i] == values[i - 1] || values[i] == values[i - 1] + 1;
            if !step_ok {
                return Err(Error::RankTableStep {
                    index: i,
                    value: values[i],
                    prev: values[i - 1],
                });
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Ambient dimension n (the table has n+1 entries).
    pub fn ambient(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// Final value d_n = dim V.
    pub fn dim(&self) -> u32 {
        *self.values.last().unwrap()
    }

    /// Checks that the table matches the context: n+1 entries ending at k.
    pub fn validate_for(&self, ctx: RectangleContext) -> Result<()> {
        let expected = ctx.n() as usize + 1;
        if self.values.len() != expected {
            return Err(Error::RankTableLength {
                len: self.values.len(),
                n: ctx.n(),
                expected,
            });
        }
        if self.dim() != ctx.k() {
            return Err(Error::RankTableFinal {
                got: self.dim(),
                k: ctx.k(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for RankTable {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<RankTable> for Vec<u32> {
    fn from(t: RankTable) -> Vec<u32> {
        t.values
    }
}

impl fmt::Display for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// True iff `λ` has at most `k` nonzero parts and `λ₁ ≤ n−k`.
pub fn fits_in(lambda: &YoungDiagram, ctx: RectangleContext) -> bool {
    lambda.rows() <= ctx.k() as usize && lambda.part(0) <= ctx.width()
}

fn require_fit(lambda: &YoungDiagram, ctx: RectangleContext) -> Result<()> {
    if fits_in(lambda, ctx) {
        Ok(())
    } else {
        Err(Error::DoesNotFit {
            diagram: lambda.to_string(),
            k: ctx.k(),
            width: ctx.width(),
        })
    }
}

/// Converts jumping numbers to the diagram via `λᵢ = n−k−jᵢ+i`.
pub fn diagram_from_jumps(jumps: &JumpingNumbers, ctx: RectangleContext) -> Result<YoungDiagram> {
    jumps.validate_for(ctx)?;
    let w = ctx.width();
    let parts: Vec<u32> = jumps
        .indices()
        .iter()
        .enumerate()
        .map(|(i0, &j)| {
            let i = i0 as u32 + 1;
            // j_i ≤ n−k+i because the remaining k−i jumps must still fit
            // below n, so this cannot underflow.
            w + i - j
        })
        .collect();
    YoungDiagram::new(parts)
}

/// Inverse of [`diagram_from_jumps`]: `jᵢ = n−k−λᵢ+i`.
pub fn jumps_from_diagram(lambda: &YoungDiagram, ctx: RectangleContext) -> Result<JumpingNumbers> {
    require_fit(lambda, ctx)?;
    let w = ctx.width();
    let indices: Vec<u32> = (1..=ctx.k())
        .map(|i| w - lambda.part(i as usize - 1) + i)
        .collect();
    JumpingNumbers::new(indices)
}

/// The rank table whose unit increments sit exactly at the jumps.
pub fn rank_table_from_jumps(jumps: &JumpingNumbers, ctx: RectangleContext) -> Result<RankTable> {
    jumps.validate_for(ctx)?;
    let values: Vec<u32> = (0..=ctx.n())
        .map(|j| jumps.indices().iter().filter(|&&ji| ji <= j).count() as u32)
        .collect();
    RankTable::new(values)
}

/// Reads the jump positions back off a rank table.
pub fn jumps_from_rank_table(table: &RankTable) -> JumpingNumbers {
    let vals = table.values();
    let indices: Vec<u32> = (1..vals.len())
        .filter(|&j| vals[j] == vals[j - 1] + 1)
        .map(|j| j as u32)
        .collect();
    JumpingNumbers { indices }
}

/// The rotated-overlap criterion: returns `true` (figures disjoint, product
/// of the classes nonzero) iff `λᵢ + μ_{k+1−i} ≤ n−k` for every `i`.
///
/// Drawing `μ` rotated by 180° into the southeast corner of the rectangle,
/// row `i` of `λ` meets row `k+1−i` of the rotated `μ`; the two shapes are
/// disjoint exactly when each such pair of rows fits in the width.
pub fn overlap_test(lambda: &YoungDiagram, mu: &YoungDiagram, ctx: RectangleContext) -> Result<bool> {
    require_fit(lambda, ctx)?;
    require_fit(mu, ctx)?;
    let k = ctx.k() as usize;
    let w = ctx.width();
    Ok((0..k).all(|i| lambda.part(i) + mu.part(k - 1 - i) <= w))
}

/// First row (1-indexed) where the rotated figures collide, if any.
pub fn first_overlap_row(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    ctx: RectangleContext,
) -> Result<Option<(u32, u32, u32)>> {
    require_fit(lambda, ctx)?;
    require_fit(mu, ctx)?;
    let k = ctx.k() as usize;
    let w = ctx.width();
    for i in 0..k {
        let (a, b) = (lambda.part(i), mu.part(k - 1 - i));
        if a + b > w {
            return Ok(Some((i as u32 + 1, a, b)));
        }
    }
    Ok(None)
}

/// The complementary diagram `μᵢ = n−k−λ_{k+1−i}`: the 180°-rotated copy of
/// the cells of the rectangle not covered by `λ`.
pub fn complement(lambda: &YoungDiagram, ctx: RectangleContext) -> Result<YoungDiagram> {
    require_fit(lambda, ctx)?;
    let k = ctx.k() as usize;
    let w = ctx.width();
    let parts: Vec<u32> = (0..k).map(|i| w - lambda.part(k - 1 - i)).collect();
    YoungDiagram::new(parts)
}
