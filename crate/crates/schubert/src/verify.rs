//! Cross-validation sweeps tying the three layers together: the ring
//! against the overlap criterion, the diagram combinatorics against the
//! finite-field enumerations, and the census laws against their closed
//! forms. Each sweep runs to completion and reports every counterexample
//! it finds rather than stopping at the first.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{minimal_dual_diagram, schubert_bound, special_schubert_diagram};
use crate::error::Result;
use crate::oracle::{
    colspace_census, enumerate_subspaces, full_rank_count, gaussian_binomial, rank_census,
    rank_count_closed_form, rank_table_of, schubert_cell_census, table_dominates, Budget, FqFlag,
};
use crate::ring::{cup, cup_nonzero, CohomologyClass};
use crate::young::{jumps_from_diagram, overlap_test, RectangleContext};

/// Fixed default seed for the randomized sweeps.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Outcome of one verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    pub failures: Vec<String>,
}

impl SweepReport {
    fn finish(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        Self {
            name,
            passed: failures.is_empty(),
            summary,
            failures,
        }
    }
}

/// All rectangles with `k(n−k) ≤ max_cells`.
pub fn rectangles_with_max_cells(max_cells: u64) -> Vec<RectangleContext> {
    let mut out = Vec::new();
    let mut k = 1u32;
    while u64::from(k) <= max_cells {
        let mut width = 1u32;
        while u64::from(k) * u64::from(width) <= max_cells {
            out.push(RectangleContext::new(k, k + width).expect("1 <= k < n"));
            width += 1;
        }
        k += 1;
    }
    out
}

/// Exhaustive equivalence of the two vanishing tests: for every rectangle
/// with `k(n−k) ≤ max_cells` and every diagram pair, the cup product is
/// nonzero exactly when the rotated figures do not overlap.
pub fn lemma_sweep(max_cells: u64) -> SweepReport {
    let mut failures = Vec::new();
    for ctx in rectangles_with_max_cells(max_cells) {
        let diagrams = ctx.enumerate_diagrams();
        for la in &diagrams {
            for mu in &diagrams {
                let via_ring = cup_nonzero(la, mu, ctx).expect("both diagrams fit");
                let via_overlap = overlap_test(la, mu, ctx).expect("both diagrams fit");
                if via_ring != via_overlap {
                    failures.push(format!(
                        "{ctx}: λ=[{la}] μ=[{mu}]: cup_nonzero={via_ring}, overlap_test={via_overlap}"
                    ));
                }
            }
        }
    }
    SweepReport::finish(
        "lemma",
        "cup_nonzero == overlap_test on all pairs".to_string(),
        failures,
    )
}

/// Randomized associativity check: sampled triples of basis classes in
/// rectangles with `k(n−k) ≤ max_cells`, multiplied both ways.
pub fn associativity_sweep(max_cells: u64, samples: usize, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rects = rectangles_with_max_cells(max_cells);
    let per_rect: Vec<_> = rects.iter().map(|c| c.enumerate_diagrams()).collect();
    let mut failures = Vec::new();
    for _ in 0..samples {
        let which = rng.gen_range(0..rects.len());
        let ctx = rects[which];
        let diagrams = &per_rect[which];
        let pick = |rng: &mut ChaCha8Rng| diagrams[rng.gen_range(0..diagrams.len())].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let sa = CohomologyClass::sigma(&a, ctx).expect("fits");
        let sb = CohomologyClass::sigma(&b, ctx).expect("fits");
        let sc = CohomologyClass::sigma(&c, ctx).expect("fits");
        let left = cup(&cup(&sa, &sb).unwrap(), &sc).unwrap();
        let right = cup(&sa, &cup(&sb, &sc).unwrap()).unwrap();
        if left != right {
            failures.push(format!("{ctx}: ([{a}] ⌣ [{b}]) ⌣ [{c}] differs from the other order"));
        }
    }
    SweepReport::finish(
        "associativity",
        format!("associativity holds on {samples} sampled triples (seed={seed})"),
        failures,
    )
}

/// Least-area collision sweep: for every rectangle with `k(n−k) ≤ max_cells`
/// and every `1 ≤ e ≤ k`, the smallest diagram whose rotated copy collides
/// with the e-row special diagram is the single column `(1^{k−e+1})`, of
/// area `k+1−e` — the same number the codimension bound reports.
pub fn minimality_sweep(max_cells: u64) -> SweepReport {
    let mut failures = Vec::new();
    for ctx in rectangles_with_max_cells(max_cells) {
        let diagrams = ctx.enumerate_diagrams();
        for e in 1..=ctx.k() {
            let special = special_schubert_diagram(e, ctx).expect("1 <= e <= k");
            let minimal = minimal_dual_diagram(e, ctx).expect("1 <= e <= k");
            let bound = schubert_bound(e, ctx).expect("1 <= e <= k").value;
            let colliding: Vec<_> = diagrams
                .iter()
                .filter(|mu| !overlap_test(&special, mu, ctx).expect("fits"))
                .collect();
            let Some(min_area) = colliding.iter().map(|mu| mu.area()).min() else {
                failures.push(format!("{ctx} e={e}: nothing collides with [{special}]"));
                continue;
            };
            if min_area as i64 != bound || minimal.area() != min_area {
                failures.push(format!(
                    "{ctx} e={e}: least colliding area {min_area}, bound {bound}, minimal [{minimal}]"
                ));
            }
            let at_min: Vec<_> = colliding.iter().filter(|mu| mu.area() == min_area).collect();
            if at_min.len() != 1 || **at_min[0] != minimal {
                failures.push(format!(
                    "{ctx} e={e}: minimum-area colliding diagram is not unique or not [{minimal}]"
                ));
            }
            for mu in &diagrams {
                if mu.area() < min_area && !overlap_test(&special, mu, ctx).expect("fits") {
                    failures.push(format!("{ctx} e={e}: [{mu}] collides below the minimum"));
                }
            }
        }
    }
    SweepReport::finish(
        "minimality",
        "least colliding area equals k+1-e for every special diagram".to_string(),
        failures,
    )
}

/// Schubert cell census check: cell sizes follow `q^(k(n−k)−|λ|)` and the
/// total matches the Gaussian binomial.
pub fn cells_sweep(q: u8, n: usize, k: usize, budget: &Budget) -> Result<SweepReport> {
    let flag = FqFlag::standard(q, n)?;
    let counts = schubert_cell_census(&flag, k, budget)?;
    let ctx = RectangleContext::new(k as u32, n as u32)?;
    let mut failures = Vec::new();
    let cells = ctx.cells();
    for (diagram, &count) in &counts {
        let expected = crate::oracle::pow_saturating(q, (cells - diagram.area()) as usize);
        if u128::from(count) != expected {
            failures.push(format!("cell [{diagram}]: {count} subspaces, expected {expected}"));
        }
    }
    let expected_diagrams = ctx.enumerate_diagrams().len();
    if counts.len() != expected_diagrams {
        failures.push(format!(
            "{} distinct cells, expected {expected_diagrams}",
            counts.len()
        ));
    }
    let total: u64 = counts.values().sum();
    let expected_total = gaussian_binomial(q, n as u64, k as u64);
    if u128::from(total) != expected_total {
        failures.push(format!("total {total}, expected {expected_total}"));
    }
    let joined: Vec<String> = counts.values().map(|c| c.to_string()).collect();
    Ok(SweepReport::finish(
        "cells",
        format!("{} cells, counts {}, total {total}", counts.len(), joined.join(",")),
        failures,
    ))
}

/// Rank census check: exact stratum counts against the closed form, and
/// the grand total against `q^(nm)`.
pub fn ranks_sweep(q: u8, n: usize, m: usize, budget: &Budget) -> Result<SweepReport> {
    let counts = rank_census(q, n, m, budget)?;
    let mut failures = Vec::new();
    for (&r, &count) in &counts {
        let expected = rank_count_closed_form(q, n, m, r);
        if u128::from(count) != expected {
            failures.push(format!("rank {r}: {count} matrices, expected {expected}"));
        }
    }
    let total: u64 = counts.values().sum();
    if u128::from(total) != crate::oracle::pow_saturating(q, n * m) {
        failures.push(format!("total {total}, expected q^(nm)"));
    }
    let joined: Vec<String> = counts.iter().map(|(r, c)| format!("{r}:{c}")).collect();
    Ok(SweepReport::finish(
        "ranks",
        format!("{{{}}}", joined.join(", ")),
        failures,
    ))
}

/// Fiber check for the column-space projection: the fiber count over a
/// subspace depends only on its dimension, equals the full-rank matrix
/// count, and multiplies with the Grassmannian point count to the rank
/// stratum size.
pub fn fibers_sweep(q: u8, n: usize, m: usize, budget: &Budget) -> Result<SweepReport> {
    let census = colspace_census(q, n, m, budget)?;
    let ranks = rank_census(q, n, m, budget)?;
    let mut failures = Vec::new();
    let kmax = n.min(m);
    for k in 0..=kmax {
        let fibers: Vec<u64> = census
            .iter()
            .filter(|(v, _)| v.dim() == k)
            .map(|(_, &c)| c)
            .collect();
        let points = gaussian_binomial(q, n as u64, k as u64);
        if fibers.len() as u128 != points {
            failures.push(format!(
                "k={k}: {} column spaces occur, expected {points}",
                fibers.len()
            ));
            continue;
        }
        let fiber = fibers[0];
        if !fibers.iter().all(|&f| f == fiber) {
            failures.push(format!("k={k}: fiber counts differ across base subspaces"));
            continue;
        }
        if u128::from(fiber) != full_rank_count(q, k, m) {
            failures.push(format!(
                "k={k}: fiber {fiber}, expected {}",
                full_rank_count(q, k, m)
            ));
        }
        let stratum = u128::from(*ranks.get(&k).expect("rank census covers 0..=min(n,m)"));
        if points.saturating_mul(u128::from(fiber)) != stratum {
            failures.push(format!(
                "k={k}: {points} points × fiber {fiber} ≠ rank-{k} count {stratum}"
            ));
        }
    }
    Ok(SweepReport::finish(
        "fibers",
        format!("fibers independent of the base subspace; product law holds for k=0..{kmax}"),
        failures,
    ))
}

/// Richardson agreement: over F_q with the standard/opposite flag pair,
/// the intersection of the two Schubert varieties is nonempty exactly when
/// the rotated diagrams do not overlap.
pub fn richardson_sweep(q: u8, n: usize, k: usize, budget: &Budget) -> Result<SweepReport> {
    let ctx = RectangleContext::new(k as u32, n as u32)?;
    let standard = FqFlag::standard(q, n)?;
    let opposite = FqFlag::opposite(q, n)?;
    let tables: Vec<_> = enumerate_subspaces(q, n, k, budget)?
        .iter()
        .map(|v| {
            Ok((
                rank_table_of(v, &standard)?,
                rank_table_of(v, &opposite)?,
            ))
        })
        .collect::<Result<_>>()?;
    let diagrams = ctx.enumerate_diagrams();
    let mut failures = Vec::new();
    for la in &diagrams {
        let jumps_l = jumps_from_diagram(la, ctx)?;
        for mu in &diagrams {
            let jumps_m = jumps_from_diagram(mu, ctx)?;
            let nonempty = tables
                .iter()
                .any(|(tf, tg)| table_dominates(tf, &jumps_l) && table_dominates(tg, &jumps_m));
            let expected = overlap_test(la, mu, ctx)?;
            if nonempty != expected {
                failures.push(format!(
                    "q={q} {ctx}: λ=[{la}] μ=[{mu}]: richardson_nonempty={nonempty}, overlap_test={expected}"
                ));
            }
        }
    }
    Ok(SweepReport::finish(
        "richardson",
        "richardson_nonempty == overlap_test on all pairs".to_string(),
        failures,
    ))
}
