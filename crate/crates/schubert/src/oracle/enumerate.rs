//! Exhaustive, canonical enumeration of subspaces and the flag geometry
//! built on it: rank tables, diagrams of subspaces, and the Gaussian
//! binomial that counts them.

use crate::error::{Error, Result};
use crate::oracle::fq::{check_modulus, FqFlag, FqSubspace};
use crate::oracle::{pow_saturating, Budget};
use crate::young::{
    diagram_from_jumps, jumps_from_rank_table, JumpingNumbers, RankTable, RectangleContext,
    YoungDiagram,
};

/// The Gaussian binomial `[n choose k]_q`: the number of k-dimensional
/// subspaces of F_q^n. Computed by the q-Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]` in exact (saturating) integers.
pub fn gaussian_binomial(q: u8, n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k); // symmetry keeps the table small
    let mut row: Vec<u128> = vec![0; k as usize + 1];
    row[0] = 1;
    for i in 1..=n {
        // walk right to left so row[j-1] is still the previous i
        let hi = (i.min(k)) as usize;
        for j in (1..=hi).rev() {
            let qj = pow_saturating(q, j);
            row[j] = row[j - 1].saturating_add(qj.saturating_mul(row[j]));
        }
    }
    row[k as usize]
}

/// All k-dimensional subspaces of F_q^n, each exactly once as its RREF
/// canonical form, in a fixed deterministic order (pivot-column sets
/// lexicographically, free entries in odometer order).
pub fn enumerate_subspaces(q: u8, n: usize, k: usize, budget: &Budget) -> Result<Vec<FqSubspace>> {
    let expected = budget.check_subspace_space(q, n, k)?;
    let mut out: Vec<FqSubspace> = Vec::new();
    for_each_combination(n, k, |pivots| {
        // Free entries sit strictly right of their row's pivot, outside
        // every pivot column.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let p = pivots[i];
                ((p + 1)..n)
                    .filter(|j| !pivots.contains(j))
                    .map(move |j| (i, j))
            })
            .collect();
        let mut values = vec![0u8; free.len()];
        loop {
            let mut basis = vec![0u8; k * n];
            for i in 0..k {
                basis[i * n + pivots[i]] = 1;
            }
            for (t, &(i, j)) in free.iter().enumerate() {
                basis[i * n + j] = values[t];
            }
            out.push(FqSubspace::from_rref_raw(q, n, basis));
            // odometer over the free entries
            let mut idx = 0;
            loop {
                if idx == values.len() {
                    return;
                }
                values[idx] += 1;
                if values[idx] == q {
                    values[idx] = 0;
                    idx += 1;
                } else {
                    break;
                }
            }
        }
    });
    debug_assert_eq!(out.len() as u128, expected);
    Ok(out)
}

/// Visits all k-subsets of `0..n` in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The rank table `d_j = dim(V ∩ F_j)`, j = 0..n, computed by exact
/// incremental elimination: flag rows are absorbed one at a time into an
/// echelon basis of `V + F_j`, and `d_j = dim V + j − dim(V + F_j)`.
pub fn rank_table_of(v: &FqSubspace, flag: &FqFlag) -> Result<RankTable> {
    if v.q() != flag.q() {
        return Err(Error::UnsupportedModulus { q: v.q() });
    }
    if v.ambient() != flag.n() {
        return Err(Error::AmbientMismatch {
            left: v.ambient(),
            right: flag.n(),
        });
    }
    check_modulus(v.q())?;
    let n = flag.n();
    let k = v.dim();
    let q = v.q();
    // Echelon rows (pivot column, row data), seeded with V's RREF basis.
    let mut echelon: Vec<(usize, Vec<u8>)> = v
        .basis_rows()
        .map(|r| {
            let pivot = r.iter().position(|&x| x != 0).expect("RREF rows are nonzero");
            (pivot, r.to_vec())
        })
        .collect();
    let mut sum_rank = k;
    let mut values = Vec::with_capacity(n + 1);
    values.push(0u32);
    for j in 1..=n {
        let mut row = flag.row(j - 1).to_vec();
        // Reduce until the row vanishes (it was already in the span) or
        // brings a new pivot.
        while let Some(pivot) = row.iter().position(|&x| x != 0) {
            match echelon.iter().find(|(p, _)| *p == pivot) {
                Some((_, existing)) => {
                    let factor = crate::oracle::fq::fmul(
                        row[pivot],
                        crate::oracle::fq::finv(existing[pivot], q),
                        q,
                    );
                    for c in pivot..n {
                        let delta = crate::oracle::fq::fmul(factor, existing[c], q);
                        row[c] = crate::oracle::fq::fsub(row[c], delta, q);
                    }
                }
                None => {
                    echelon.push((pivot, row));
                    sum_rank += 1;
                    break;
                }
            }
        }
        values.push((k + j - sum_rank) as u32);
    }
    RankTable::new(values)
}

/// The Young diagram of `V` with respect to the flag, through the rank
/// table and the jump positions.
pub fn diagram_of(v: &FqSubspace, flag: &FqFlag) -> Result<YoungDiagram> {
    let ctx = RectangleContext::new(v.dim() as u32, flag.n() as u32)?;
    let table = rank_table_of(v, flag)?;
    table.validate_for(ctx)?;
    diagram_from_jumps(&jumps_from_rank_table(&table), ctx)
}

/// Whether a rank table satisfies the Schubert-variety conditions
/// `d_{j_i} ≥ i` for the given jumps.
pub fn table_dominates(table: &RankTable, jumps: &JumpingNumbers) -> bool {
    jumps
        .indices()
        .iter()
        .enumerate()
        .all(|(i0, &j)| table.values()[j as usize] > i0 as u32)
}
