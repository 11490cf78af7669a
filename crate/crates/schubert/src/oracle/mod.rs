//! Brute-force ground truth over small prime fields.
//!
//! Everything the combinatorial modules claim has a finite-field shadow
//! that can be enumerated outright: subspaces of F_q^n realize the
//! Grassmannian, rank tables against explicit flags realize Schubert
//! cells and varieties, and full matrix enumerations realize the
//! bounded-rank strata and the column-space projection. Dimension
//! statements become point-count exponent statements, which is enough to
//! falsify any formula error.
//!
//! Enumerations never truncate: each entry point checks an explicit
//! budget first and errors if the census would be partial.

mod census;
mod enumerate;
mod fq;

pub use census::{
    colspace_census, fiber_census, rank_census, rank_count_closed_form, full_rank_count,
    richardson_members, richardson_nonempty, schubert_cell_census, schubert_variety_members,
    CellCensusReport, CellCountDto, RankCensusReport, RankCountDto,
};
pub use enumerate::{
    diagram_of, enumerate_subspaces, gaussian_binomial, rank_table_of, table_dominates,
};
pub use fq::{
    check_modulus, FqFlag, FqMatrix, FqSubspace, PrimeFieldElement, SUPPORTED_MODULI,
};

use crate::error::{Error, Result};

/// Hard enumeration limits. The defaults bound how many points a single
/// census may touch (per-modulus exponent caps for matrix spaces, ambient
/// dimension ≤ 6 for subspace enumerations); `with_max_points` replaces
/// them with one explicit point cap, which is what the `SCHUBERT_BUDGET`
/// environment variable feeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_points: Option<u128>,
}

impl Budget {
    pub const ENV_VAR: &'static str = "SCHUBERT_BUDGET";

    /// The default caps: matrix enumerations allow `nm ≤ 20` over F_2,
    /// `nm ≤ 12` over F_3, `nm ≤ 9` over F_5; subspace enumerations allow
    /// ambient dimension at most 6.
    pub fn standard() -> Self {
        Self { max_points: None }
    }

    /// Replaces the default caps with an explicit limit on enumerated
    /// points. Large values are honored as given — the caller takes the
    /// runtime on themselves.
    pub fn with_max_points(max_points: u128) -> Self {
        Self {
            max_points: Some(max_points),
        }
    }

    /// Reads `SCHUBERT_BUDGET` (a point count) if set, else the defaults.
    pub fn from_env() -> Self {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => match v.trim().parse::<u128>() {
                Ok(p) => Self::with_max_points(p),
                Err(_) => Self::standard(),
            },
            Err(_) => Self::standard(),
        }
    }

    fn default_matrix_exponent_cap(q: u8) -> usize {
        match q {
            2 => 20,
            3 => 12,
            _ => 9,
        }
    }

    /// Admits (and sizes) a full enumeration of n×m matrices over F_q.
    pub(crate) fn check_matrix_space(&self, q: u8, n: usize, m: usize) -> Result<u128> {
        check_modulus(q)?;
        let cells = n * m;
        let points = pow_saturating(q, cells);
        match self.max_points {
            Some(limit) => {
                if points > limit {
                    return Err(Error::BudgetExceeded {
                        what: format!("enumerating {n}x{m} matrices over F_{q}"),
                        detail: format!("needs {points} points, limit is {limit}"),
                    });
                }
            }
            None => {
                let cap = Self::default_matrix_exponent_cap(q);
                if cells > cap {
                    return Err(Error::BudgetExceeded {
                        what: format!("enumerating {n}x{m} matrices over F_{q}"),
                        detail: format!("nm = {cells} exceeds the default cap {cap} for q = {q}"),
                    });
                }
            }
        }
        Ok(points)
    }

    /// Admits (and sizes) a full enumeration of k-subspaces of F_q^n.
    pub(crate) fn check_subspace_space(&self, q: u8, n: usize, k: usize) -> Result<u128> {
        check_modulus(q)?;
        if k > n {
            return Err(Error::OutOfRange {
                what: "subspace dimension k",
                value: k as i64,
                min: 0,
                max: n as i64,
            });
        }
        let count = gaussian_binomial(q, n as u64, k as u64);
        match self.max_points {
            Some(limit) => {
                if count > limit {
                    return Err(Error::BudgetExceeded {
                        what: format!("enumerating {k}-subspaces of F_{q}^{n}"),
                        detail: format!("needs {count} points, limit is {limit}"),
                    });
                }
            }
            None => {
                if n > 6 {
                    return Err(Error::BudgetExceeded {
                        what: format!("enumerating {k}-subspaces of F_{q}^{n}"),
                        detail: format!("ambient dimension {n} exceeds the default cap 6"),
                    });
                }
            }
        }
        Ok(count)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::standard()
    }
}

pub(crate) fn pow_saturating(q: u8, e: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.saturating_mul(u128::from(q));
    }
    acc
}
