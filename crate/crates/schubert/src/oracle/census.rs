//! Full-enumeration censuses: rank strata of matrix spaces, column-space
//! fibers of the projection `A ↦ col A`, Schubert cells and varieties, and
//! Richardson intersections for the standard/opposite flag pair.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::enumerate::{
    enumerate_subspaces, gaussian_binomial, rank_table_of, table_dominates,
};
use crate::oracle::fq::{rank_in_place, rref_in_place, FqFlag, FqSubspace};
use crate::oracle::{pow_saturating, Budget};
use crate::young::{jumps_from_diagram, RectangleContext, YoungDiagram};

use super::diagram_of;

/// Visits every n×m matrix over F_q exactly once (entries row-major,
/// odometer order starting from the zero matrix).
fn for_each_matrix(q: u8, n: usize, m: usize, mut f: impl FnMut(&[u8])) {
    let len = n * m;
    let mut data = vec![0u8; len];
    loop {
        f(&data);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            data[i] += 1;
            if data[i] == q {
                data[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Exact counts of n×m matrices over F_q by rank, via row elimination of
/// every single matrix.
pub fn rank_census(q: u8, n: usize, m: usize, budget: &Budget) -> Result<BTreeMap<usize, u64>> {
    let total = budget.check_matrix_space(q, n, m)?;
    let mut counts: BTreeMap<usize, u64> = (0..=n.min(m)).map(|r| (r, 0)).collect();
    let mut scratch = vec![0u8; n * m];
    for_each_matrix(q, n, m, |data| {
        scratch.copy_from_slice(data);
        let r = rank_in_place(&mut scratch, n, m, q);
        *counts.get_mut(&r).expect("rank is at most min(n,m)") += 1;
    });
    debug_assert_eq!(counts.values().map(|&c| u128::from(c)).sum::<u128>(), total);
    Ok(counts)
}

/// Closed-form count of rank-r n×m matrices over F_q: choose the r-dim
/// column space, times the surjections onto it:
/// `[n r]_q · Π_{i<r} (q^m − q^i)`. The independent check for
/// [`rank_census`].
pub fn rank_count_closed_form(q: u8, n: usize, m: usize, r: usize) -> u128 {
    if r > n.min(m) {
        return 0;
    }
    gaussian_binomial(q, n as u64, r as u64).saturating_mul(full_rank_count(q, r, m))
}

/// Number of full-rank k×m matrices over F_q (equivalently surjections
/// F_q^m → F_q^k): `Π_{i<k} (q^m − q^i)`.
pub fn full_rank_count(q: u8, k: usize, m: usize) -> u128 {
    if k > m {
        return 0;
    }
    let qm = pow_saturating(q, m);
    (0..k)
        .map(|i| qm - pow_saturating(q, i))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

const MAX_COLSPACE_BYTES: usize = 48;

/// Groups all n×m matrices over F_q by their (canonical) column space and
/// counts each group; the count over `V` is the fiber of `A ↦ col A`.
pub fn colspace_census(
    q: u8,
    n: usize,
    m: usize,
    budget: &Budget,
) -> Result<BTreeMap<FqSubspace, u64>> {
    budget.check_matrix_space(q, n, m)?;
    if n.min(m) * n > MAX_COLSPACE_BYTES {
        return Err(Error::BudgetExceeded {
            what: format!("column-space census of {n}x{m} matrices"),
            detail: format!("basis storage exceeds {MAX_COLSPACE_BYTES} bytes"),
        });
    }
    // Keys are (dim, zero-padded RREF basis): fixed-size and allocation-free
    // in the hot loop.
    let mut groups: BTreeMap<(u8, [u8; MAX_COLSPACE_BYTES]), u64> = BTreeMap::new();
    let mut transposed = vec![0u8; n * m];
    for_each_matrix(q, n, m, |data| {
        for r in 0..n {
            for c in 0..m {
                transposed[c * n + r] = data[r * m + c];
            }
        }
        let rank = rref_in_place(&mut transposed, m, n, q);
        let mut key = [0u8; MAX_COLSPACE_BYTES];
        key[..rank * n].copy_from_slice(&transposed[..rank * n]);
        *groups.entry((rank as u8, key)).or_insert(0) += 1;
    });
    Ok(groups
        .into_iter()
        .map(|((dim, key), count)| {
            let basis = key[..usize::from(dim) * n].to_vec();
            (FqSubspace::from_rref_raw(q, n, basis), count)
        })
        .collect())
}

/// Counts the n×m matrices whose column space is exactly `V`, by brute
/// enumeration of the whole matrix space. Independent of which `V` of a
/// given dimension is asked about.
pub fn fiber_census(v: &FqSubspace, m: usize, budget: &Budget) -> Result<u64> {
    let census = colspace_census(v.q(), v.ambient(), m, budget)?;
    Ok(census.get(v).copied().unwrap_or(0))
}

/// Partitions all k-subspaces of F_q^n by their Young diagram with respect
/// to the flag. The count over `λ` is `q^(k(n−k)−|λ|)` — the Schubert cell
/// sizes — and the total is the Gaussian binomial.
pub fn schubert_cell_census(
    flag: &FqFlag,
    k: usize,
    budget: &Budget,
) -> Result<BTreeMap<YoungDiagram, u64>> {
    let q = flag.q();
    let n = flag.n();
    RectangleContext::new(k as u32, n as u32)?;
    let mut counts: BTreeMap<YoungDiagram, u64> = BTreeMap::new();
    for v in enumerate_subspaces(q, n, k, budget)? {
        let d = diagram_of(&v, flag)?;
        *counts.entry(d).or_insert(0) += 1;
    }
    Ok(counts)
}

/// All members of the Schubert variety of `λ` for the flag: the subspaces
/// whose rank table dominates the jump conditions `dim(V ∩ F_{j_i}) ≥ i`.
pub fn schubert_variety_members(
    lambda: &YoungDiagram,
    flag: &FqFlag,
    k: usize,
    budget: &Budget,
) -> Result<Vec<FqSubspace>> {
    let ctx = RectangleContext::new(k as u32, flag.n() as u32)?;
    let jumps = jumps_from_diagram(lambda, ctx)?;
    let mut members = Vec::new();
    for v in enumerate_subspaces(flag.q(), flag.n(), k, budget)? {
        let table = rank_table_of(&v, flag)?;
        if table_dominates(&table, &jumps) {
            members.push(v);
        }
    }
    Ok(members)
}

/// Members of the Richardson intersection
/// `Ω̄(λ, standard) ∩ Ω̄(μ, opposite)` in G_k(F_q^n).
pub fn richardson_members(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    q: u8,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<Vec<FqSubspace>> {
    let ctx = RectangleContext::new(k as u32, n as u32)?;
    let jumps_l = jumps_from_diagram(lambda, ctx)?;
    let jumps_m = jumps_from_diagram(mu, ctx)?;
    let standard = FqFlag::standard(q, n)?;
    let opposite = FqFlag::opposite(q, n)?;
    let mut members = Vec::new();
    for v in enumerate_subspaces(q, n, k, budget)? {
        if table_dominates(&rank_table_of(&v, &standard)?, &jumps_l)
            && table_dominates(&rank_table_of(&v, &opposite)?, &jumps_m)
        {
            members.push(v);
        }
    }
    Ok(members)
}

/// Whether the Richardson intersection above is nonempty over F_q.
pub fn richardson_nonempty(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    q: u8,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<bool> {
    Ok(!richardson_members(lambda, mu, q, n, k, budget)?.is_empty())
}

/// JSON form of a Schubert cell census:
/// `{"q":2,"n":4,"k":2,"cells":[{"diagram":[…],"count":…}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCensusReport {
    pub q: u8,
    pub n: u32,
    pub k: u32,
    pub cells: Vec<CellCountDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCountDto {
    pub diagram: Vec<u32>,
    pub count: u64,
}

impl CellCensusReport {
    pub fn from_counts(q: u8, n: u32, k: u32, counts: &BTreeMap<YoungDiagram, u64>) -> Self {
        Self {
            q,
            n,
            k,
            cells: counts
                .iter()
                .map(|(d, &count)| CellCountDto {
                    diagram: d.parts().to_vec(),
                    count,
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("census serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let report: Self = serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "cell census JSON",
            detail: e.to_string(),
        })?;
        for cell in &report.cells {
            YoungDiagram::new(cell.diagram.clone())?;
        }
        Ok(report)
    }
}

/// JSON form of a rank census:
/// `{"q":2,"n":2,"m":2,"ranks":[{"rank":0,"count":1},…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCensusReport {
    pub q: u8,
    pub n: u32,
    pub m: u32,
    pub ranks: Vec<RankCountDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCountDto {
    pub rank: u32,
    pub count: u64,
}

impl RankCensusReport {
    pub fn from_counts(q: u8, n: u32, m: u32, counts: &BTreeMap<usize, u64>) -> Self {
        Self {
            q,
            n,
            m,
            ranks: counts
                .iter()
                .map(|(&rank, &count)| RankCountDto {
                    rank: rank as u32,
                    count,
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("census serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "rank census JSON",
            detail: e.to_string(),
        })
    }
}
