//! Dimension and codimension formulas: the Grassmannian dimension, the
//! codimension of the bounded-rank strata, the two codimension lower
//! bounds, and the reduction function `f(k)` tying them together.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::young::{RectangleContext, YoungDiagram};

/// The ambient matrix space `Mat_{n×m}`: `n` rows, `m` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatrixSpaceShape {
    n: u32,
    m: u32,
}

impl MatrixSpaceShape {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfRange {
                what: "rows n",
                value: i64::from(n),
                min: 1,
                max: i64::MAX,
            });
        }
        if m < 1 {
            return Err(Error::OutOfRange {
                what: "cols m",
                value: i64::from(m),
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self { n, m })
    }

    pub fn rows(&self) -> u32 {
        self.n
    }

    pub fn cols(&self) -> u32 {
        self.m
    }
}

/// How a reported bound should be read.
///
/// `Vacuous` means the number carries no information (it is ≤ 0);
/// `VacuouslyTrue` means the hypothesis can never fail (e = 0), so the
/// statement holds with no content. The raw value is preserved either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Informative,
    Vacuous,
    VacuouslyTrue,
}

/// A codimension lower bound together with the inputs and the formula that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub formula: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    pub value: i64,
    pub status: BoundStatus,
}

impl BoundReport {
    pub fn vacuous(&self) -> bool {
        self.status != BoundStatus::Informative
    }
}

/// `dim G_k(C^n) = k(n−k)`.
pub fn grassmannian_dim(ctx: RectangleContext) -> i64 {
    i64::from(ctx.k()) * i64::from(ctx.width())
}

/// `codim R_k = (m−k)(n−k)` for the stratum of rank ≤ k matrices,
/// `0 ≤ k ≤ min(m,n)`.
pub fn rank_variety_codim(shape: MatrixSpaceShape, k: u32) -> Result<i64> {
    let max = shape.n.min(shape.m);
    if k > max {
        return Err(Error::OutOfRange {
            what: "rank bound k",
            value: i64::from(k),
            min: 0,
            max: i64::from(max),
        });
    }
    Ok(i64::from(shape.m - k) * i64::from(shape.n - k))
}

/// Lower bound `codim Y ≥ k+1−e` for a closed subset of `G_k(C^n)` that
/// misses every `k`-plane containing some fixed `e`-dimensional subspace.
/// Requires `1 ≤ e ≤ k`.
pub fn schubert_bound(e: u32, ctx: RectangleContext) -> Result<BoundReport> {
    if e < 1 || e > ctx.k() {
        return Err(Error::OutOfRange {
            what: "e",
            value: i64::from(e),
            min: 1,
            max: i64::from(ctx.k()),
        });
    }
    let value = i64::from(ctx.k()) + 1 - i64::from(e);
    Ok(BoundReport {
        formula: "k+1-e",
        n: Some(ctx.n()),
        m: None,
        k: Some(ctx.k()),
        e: Some(e),
        value,
        status: if value > 0 {
            BoundStatus::Informative
        } else {
            BoundStatus::Vacuous
        },
    })
}

/// Lower bound `codim X ≥ m+1−e` for a column-invariant closed set of
/// `n×m` matrices whose column spaces avoid some `e`-dimensional subspace.
/// Accepts `0 ≤ e ≤ n`; `e = 0` is flagged vacuously true (a zero subspace
/// can never be avoided).
pub fn main_bound(shape: MatrixSpaceShape, e: u32) -> Result<BoundReport> {
    if e > shape.n {
        return Err(Error::OutOfRange {
            what: "dim E",
            value: i64::from(e),
            min: 0,
            max: i64::from(shape.n),
        });
    }
    let value = i64::from(shape.m) + 1 - i64::from(e);
    let status = if e == 0 {
        BoundStatus::VacuouslyTrue
    } else if value <= 0 {
        BoundStatus::Vacuous
    } else {
        BoundStatus::Informative
    };
    Ok(BoundReport {
        formula: "m+1-e",
        n: Some(shape.n),
        m: Some(shape.m),
        k: None,
        e: Some(e),
        value,
        status,
    })
}

/// The reduction function `f(k) = (m−k)(n−k) + k + 1 − e`, defined for
/// `0 ≤ k ≤ min(m, n−1)`. It decreases in `k` and its final value
/// `f(min(m,n−1))` equals `m+1−e`.
pub fn reduction_f(k: u32, shape: MatrixSpaceShape, e: u32) -> Result<i64> {
    let max = shape.m.min(shape.n - 1);
    if k > max {
        return Err(Error::OutOfRange {
            what: "k",
            value: i64::from(k),
            min: 0,
            max: i64::from(max),
        });
    }
    Ok(i64::from(shape.m - k) * i64::from(shape.n - k) + i64::from(k) + 1 - i64::from(e))
}

/// The diagram `((n−k)^e)` of the Schubert variety `{V : V ⊇ E}` for a
/// fixed `e`-dimensional `E`: `e` full-width rows.
pub fn special_schubert_diagram(e: u32, ctx: RectangleContext) -> Result<YoungDiagram> {
    if e < 1 || e > ctx.k() {
        return Err(Error::OutOfRange {
            what: "e",
            value: i64::from(e),
            min: 1,
            max: i64::from(ctx.k()),
        });
    }
    YoungDiagram::new(vec![ctx.width(); e as usize])
}

/// The least-area diagram whose 180°-rotated copy collides with
/// [`special_schubert_diagram`]: a single column `(1^{k−e+1})`. Its area
/// `k+1−e` is exactly the bound of [`schubert_bound`], which is why those
/// two numbers agree.
pub fn minimal_dual_diagram(e: u32, ctx: RectangleContext) -> Result<YoungDiagram> {
    if e < 1 || e > ctx.k() {
        return Err(Error::OutOfRange {
            what: "e",
            value: i64::from(e),
            min: 1,
            max: i64::from(ctx.k()),
        });
    }
    YoungDiagram::new(vec![1; (ctx.k() - e + 1) as usize])
}
