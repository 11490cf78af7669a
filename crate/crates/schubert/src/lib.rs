//! Exact Schubert calculus on complex Grassmannians, cross-validated by
//! brute force over small prime fields.
//!
//! The crate has four layers:
//!
//! - [`young`]: Young diagrams in the `k×(n−k)` rectangle of `G_k(C^n)`,
//!   with the jumping-number and rank-table encodings and the
//!   rotated-overlap criterion for vanishing products.
//! - [`ring`]: the ring `A*(k,n)` of integer combinations of diagrams,
//!   multiplied by exhaustive Littlewood–Richardson tableau enumeration
//!   and truncated to the rectangle.
//! - [`bounds`]: the dimension and codimension formulas — `dim G_k(C^n)`,
//!   `codim R_k`, the two lower bounds `m+1−e` and `k+1−e`, and the
//!   reduction function `f(k)` connecting them.
//! - [`oracle`]: exact enumerations over F_2, F_3, F_5 that realize the
//!   same objects concretely — subspaces, flags, rank tables, Schubert
//!   cells and varieties, Richardson intersections, rank strata, and
//!   column-space fibers — as independent ground truth.
//!
//! [`verify`] wires the layers against each other; every sweep reports
//! counterexamples instead of stopping early. All values are immutable
//! and every operation is a pure function, so everything here can be
//! shared freely across threads.
//!
//! ```
//! use schubert::ring::cup_basis;
//! use schubert::young::{overlap_test, RectangleContext, YoungDiagram};
//!
//! let ctx = RectangleContext::new(2, 4)?;
//! let lambda: YoungDiagram = "2".parse()?;
//! let mu: YoungDiagram = "1,1".parse()?;
//! // The rotated figures collide, so the product vanishes in A*(2,4)...
//! assert!(!overlap_test(&lambda, &mu, ctx)?);
//! assert!(cup_basis(&lambda, &mu, ctx)?.is_zero());
//! // ...but survives in the larger rectangle of A*(4,8).
//! let big = RectangleContext::new(4, 8)?;
//! assert_eq!(cup_basis(&lambda, &mu, big)?.to_string(), "[3,1] + [2,1,1]");
//! # Ok::<(), schubert::Error>(())
//! ```

pub mod bounds;
pub mod error;
pub mod oracle;
pub mod ring;
pub mod verify;
pub mod young;

pub use error::{Error, Result};
