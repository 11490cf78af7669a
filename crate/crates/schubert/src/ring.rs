//! The ring `A*(k,n)`: integer combinations of Young diagrams in the
//! `k×(n−k)` rectangle, multiplied by the Littlewood–Richardson rule and
//! truncated to the rectangle.
//!
//! `σ_λ ⌣ σ_μ = Σ_ν c^ν_{λμ} σ_ν`, where `c^ν_{λμ}` counts the
//! Littlewood–Richardson skew tableaux of shape `ν/λ` and content `μ`:
//! rows weakly increase, columns strictly increase, and the reverse reading
//! word (right to left, top to bottom) is a lattice word. The coefficient
//! is computed by direct backtracking over all fillings — exponential but
//! exact, which is the point at desk scale. Terms whose shape leaves the
//! rectangle are dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::{fits_in, RectangleContext, YoungDiagram};

/// A finite integer-linear combination of diagrams fitting one rectangle.
///
/// Zero coefficients are never stored; the zero class has no terms. Terms
/// iterate in canonical order (area, then reverse-lexicographic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    ctx: RectangleContext,
    terms: BTreeMap<YoungDiagram, BigInt>,
}

impl CohomologyClass {
    pub fn zero(ctx: RectangleContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `σ_∅`.
    pub fn unit(ctx: RectangleContext) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(YoungDiagram::empty(), BigInt::from(1));
        Self { ctx, terms }
    }

    /// The basis class `σ_λ`; errors if `λ` does not fit the rectangle.
    pub fn sigma(lambda: &YoungDiagram, ctx: RectangleContext) -> Result<Self> {
        Self::from_terms(ctx, [(lambda.clone(), BigInt::from(1))])
    }

    /// Builds a class from (diagram, coefficient) pairs, merging duplicates
    /// and dropping anything that cancels to zero.
    pub fn from_terms(
        ctx: RectangleContext,
        entries: impl IntoIterator<Item = (YoungDiagram, BigInt)>,
    ) -> Result<Self> {
        let mut terms: BTreeMap<YoungDiagram, BigInt> = BTreeMap::new();
        for (d, c) in entries {
            if !fits_in(&d, ctx) {
                return Err(Error::DoesNotFit {
                    diagram: d.to_string(),
                    k: ctx.k(),
                    width: ctx.width(),
                });
            }
            let slot = terms.entry(d).or_default();
            *slot += c;
        }
        terms.retain(|_, c| *c != BigInt::from(0));
        Ok(Self { ctx, terms })
    }

    pub fn context(&self) -> RectangleContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&YoungDiagram, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of `λ` (zero if absent).
    pub fn coefficient(&self, lambda: &YoungDiagram) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Reinterprets the class in another rectangle, dropping the terms that
    /// do not fit. Computing in a large rectangle and truncating agrees
    /// with computing in the small one directly.
    pub fn truncate_to(&self, ctx: RectangleContext) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(d, _)| fits_in(d, ctx))
            .map(|(d, c)| (d.clone(), c.clone()))
            .collect();
        Self { ctx, terms }
    }

    /// Canonical text form with explicit coefficients, e.g.
    /// `3*[2,1] + 1*[1,1,1]`; the zero class is `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                out.push_str(&format!("{c}*[{d}]"));
            } else if c.sign() == num_bigint::Sign::Minus {
                out.push_str(&format!(" - {}*[{d}]", c.magnitude()));
            } else {
                out.push_str(&format!(" + {c}*[{d}]"));
            }
        }
        out
    }

    /// Parses the text form (coefficients optional: `[2]` means `1*[2]`).
    pub fn from_text(ctx: RectangleContext, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero(ctx));
        }
        if compact.is_empty() {
            return Err(Error::Parse {
                what: "cohomology class",
                detail: "empty input".into(),
            });
        }
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        let mut entries: Vec<(YoungDiagram, BigInt)> = Vec::new();
        let mut negative = false;
        if bytes[pos] == b'-' {
            negative = true;
            pos += 1;
        } else if bytes[pos] == b'+' {
            pos += 1;
        }
        loop {
            let digit_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if digit_start == pos {
                BigInt::from(1)
            } else {
                let lit = &compact[digit_start..pos];
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    return Err(Error::Parse {
                        what: "cohomology class",
                        detail: format!("expected '*' after coefficient {lit}"),
                    });
                }
                BigInt::from_str(lit).expect("digits parse as an integer")
            };
            if negative {
                coeff = -coeff;
            }
            if coeff == BigInt::from(0) {
                return Err(Error::Parse {
                    what: "cohomology class",
                    detail: "zero coefficient is not stored in a class".into(),
                });
            }
            if pos >= bytes.len() || bytes[pos] != b'[' {
                return Err(Error::Parse {
                    what: "cohomology class",
                    detail: "expected '[' opening a diagram".into(),
                });
            }
            pos += 1;
            let close = compact[pos..].find(']').ok_or(Error::Parse {
                what: "cohomology class",
                detail: "unclosed '['".into(),
            })? + pos;
            let diagram: YoungDiagram = compact[pos..close].parse()?;
            pos = close + 1;
            entries.push((diagram, coeff));
            if pos == bytes.len() {
                break;
            }
            negative = match bytes[pos] {
                b'+' => false,
                b'-' => true,
                other => {
                    return Err(Error::Parse {
                        what: "cohomology class",
                        detail: format!("expected '+' or '-' between terms, got {:?}", other as char),
                    })
                }
            };
            pos += 1;
        }
        Self::from_terms(ctx, entries)
    }

    /// JSON form `{"terms":[{"diagram":[2,1],"coeff":3},…],"k":…,"n":…}`.
    /// Coefficients serialize as exact JSON integers of any size.
    pub fn to_json_string(&self) -> String {
        let dto = ClassDto {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermDto {
                    diagram: d.parts().to_vec(),
                    coeff: serde_json::from_str(&c.to_string())
                        .expect("an integer literal is a JSON number"),
                })
                .collect(),
            k: self.ctx.k(),
            n: self.ctx.n(),
        };
        serde_json::to_string(&dto).expect("class serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let dto: ClassDto = serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "cohomology class JSON",
            detail: e.to_string(),
        })?;
        let ctx = RectangleContext::new(dto.k, dto.n)?;
        let mut entries = Vec::with_capacity(dto.terms.len());
        for term in dto.terms {
            let diagram = YoungDiagram::new(term.diagram)?;
            let coeff = BigInt::from_str(&term.coeff.to_string()).map_err(|_| Error::Parse {
                what: "cohomology class JSON",
                detail: format!("coefficient {} is not an integer", term.coeff),
            })?;
            if coeff == BigInt::from(0) {
                return Err(Error::Parse {
                    what: "cohomology class JSON",
                    detail: format!("zero coefficient for diagram [{diagram}]"),
                });
            }
            entries.push((diagram, coeff));
        }
        Self::from_terms(ctx, entries)
    }
}

impl fmt::Display for CohomologyClass {
    /// Reader-facing form: unit coefficients are suppressed, so a plain
    /// product of basis classes prints like `[3,1] + [2,1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == &BigUint::from(1u32) {
                write!(f, "[{d}]")?;
            } else {
                write!(f, "{mag}*[{d}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassDto {
    terms: Vec<TermDto>,
    k: u32,
    n: u32,
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    diagram: Vec<u32>,
    coeff: serde_json::Number,
}

type LrKey = (YoungDiagram, YoungDiagram, YoungDiagram);

fn lr_memo() -> &'static Mutex<HashMap<LrKey, BigUint>> {
    static MEMO: OnceLock<Mutex<HashMap<LrKey, BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Littlewood–Richardson coefficient `c^ν_{λμ}`.
///
/// Degenerate inputs (area mismatch, `λ ⊄ ν`, `μ ⊄ ν`) return 0. Results
/// are memoized per process; the memo is shared across threads.
pub fn lr_coefficient(lambda: &YoungDiagram, mu: &YoungDiagram, nu: &YoungDiagram) -> BigUint {
    if nu.area() != lambda.area() + mu.area() || !nu.contains(lambda) || !nu.contains(mu) {
        return BigUint::from(0u32);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(hit) = lr_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let value = count_lr_tableaux(nu, lambda, mu);
    lr_memo()
        .lock()
        .unwrap()
        .insert(key, value.clone());
    value
}

/// Counts LR skew tableaux of shape `nu/lambda` and content `mu` by
/// backtracking in reverse reading order (rows top to bottom, each row
/// right to left), which lets the lattice condition be checked one cell at
/// a time.
fn count_lr_tableaux(nu: &YoungDiagram, lambda: &YoungDiagram, mu: &YoungDiagram) -> BigUint {
    let values = mu.rows();
    if values == 0 {
        // Empty content and |nu| = |lambda| force nu = lambda: one empty filling.
        return BigUint::from(1u32);
    }
    let rows = nu.rows();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            let lo = lambda.part(r) as usize;
            let hi = nu.part(r) as usize;
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; nu.part(r) as usize])
        .collect();
    let mut counts: Vec<u32> = vec![0; values];
    let mut total = BigUint::from(0u32);

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &YoungDiagram,
        mu: &YoungDiagram,
        grid: &mut [Vec<u32>],
        counts: &mut [u32],
        total: &mut BigUint,
    ) {
        if idx == cells.len() {
            *total += 1u32;
            return;
        }
        let (r, c) = cells[idx];
        // Cell to the right was filled earlier in this row.
        let max_right = if c + 1 < grid[r].len() {
            grid[r][c + 1]
        } else {
            counts.len() as u32
        };
        // Cell directly above belongs to the skew shape iff it is outside lambda.
        let min_above = if r > 0 && c >= lambda.part(r - 1) as usize {
            grid[r - 1][c]
        } else {
            0
        };
        for v in (min_above + 1)..=max_right {
            let t = (v - 1) as usize;
            let content_ok = counts[t] < mu.part(t);
            let lattice_ok = t == 0 || counts[t - 1] > counts[t];
            if content_ok && lattice_ok {
                counts[t] += 1;
                grid[r][c] = v;
                rec(idx + 1, cells, lambda, mu, grid, counts, total);
                counts[t] -= 1;
                grid[r][c] = 0;
            }
        }
    }

    rec(0, &cells, lambda, mu, &mut grid, &mut counts, &mut total);
    total
}

/// Bilinear cup product; terms that leave the rectangle are dropped.
pub fn cup(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch {
            k1: a.ctx.k(),
            n1: a.ctx.n(),
            k2: b.ctx.k(),
            n2: b.ctx.n(),
        });
    }
    let ctx = a.ctx;
    let mut acc: BTreeMap<YoungDiagram, BigInt> = BTreeMap::new();
    for (la, ca) in &a.terms {
        for (mu, cb) in &b.terms {
            let target = la.area() + mu.area();
            if target > ctx.cells() {
                continue;
            }
            let weight = ca * cb;
            for nu in ctx.diagrams_with_area(target) {
                let c = lr_coefficient(la, mu, &nu);
                if c != BigUint::from(0u32) {
                    let slot = acc.entry(nu).or_default();
                    *slot += &weight * BigInt::from(c);
                }
            }
        }
    }
    acc.retain(|_, c| *c != BigInt::from(0));
    Ok(CohomologyClass { ctx, terms: acc })
}

/// `σ_λ ⌣ σ_μ` for basis diagrams.
pub fn cup_basis(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    ctx: RectangleContext,
) -> Result<CohomologyClass> {
    cup(
        &CohomologyClass::sigma(lambda, ctx)?,
        &CohomologyClass::sigma(mu, ctx)?,
    )
}

/// Whether `σ_λ ⌣ σ_μ ≠ 0` in `A*(k,n)`, decided through the ring (by
/// actually expanding the product), independently of the overlap criterion
/// it is checked against.
pub fn cup_nonzero(lambda: &YoungDiagram, mu: &YoungDiagram, ctx: RectangleContext) -> Result<bool> {
    Ok(!cup_basis(lambda, mu, ctx)?.is_zero())
}

/// Coefficient of the full-rectangle class in `σ_λ ⌣ σ_μ`. For diagrams of
/// complementary area this is 1 exactly when `μ` is the complement of `λ`;
/// a degree mismatch returns 0.
pub fn duality_coefficient(
    lambda: &YoungDiagram,
    mu: &YoungDiagram,
    ctx: RectangleContext,
) -> Result<BigUint> {
    if !fits_in(lambda, ctx) {
        return Err(Error::DoesNotFit {
            diagram: lambda.to_string(),
            k: ctx.k(),
            width: ctx.width(),
        });
    }
    if !fits_in(mu, ctx) {
        return Err(Error::DoesNotFit {
            diagram: mu.to_string(),
            k: ctx.k(),
            width: ctx.width(),
        });
    }
    if lambda.area() + mu.area() != ctx.cells() {
        return Ok(BigUint::from(0u32));
    }
    Ok(lr_coefficient(lambda, mu, &ctx.full_rectangle()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::complement;

    fn d(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn ctx(k: u32, n: u32) -> RectangleContext {
        RectangleContext::new(k, n).unwrap()
    }

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&d(&[2]), &d(&[2]), &d(&[2, 2])), big(1));
        assert_eq!(
            lr_coefficient(&d(&[1, 1]), &d(&[1, 1]), &d(&[1, 1, 1, 1])),
            big(1)
        );
        assert_eq!(lr_coefficient(&d(&[2]), &d(&[1, 1]), &d(&[2, 2])), big(0));
        // The unit: c^λ_{λ,∅} = 1.
        for parts in [&[3u32, 1][..], &[2, 2, 1], &[]] {
            let la = d(parts);
            assert_eq!(lr_coefficient(&la, &YoungDiagram::empty(), &la), big(1));
            assert_eq!(lr_coefficient(&YoungDiagram::empty(), &la, &la), big(1));
        }
    }

    #[test]
    fn lr_degenerate_inputs_are_zero() {
        // Area mismatch.
        assert_eq!(lr_coefficient(&d(&[2]), &d(&[2]), &d(&[3])), big(0));
        // lambda not contained in nu.
        assert_eq!(lr_coefficient(&d(&[3]), &d(&[1]), &d(&[2, 2])), big(0));
        // mu not contained in nu.
        assert_eq!(
            lr_coefficient(&d(&[1, 1, 1]), &d(&[3]), &d(&[2, 2, 2])),
            big(0)
        );
    }

    #[test]
    fn lr_multiplicity_two() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2: the smallest coefficient above 1.
        assert_eq!(
            lr_coefficient(&d(&[2, 1]), &d(&[2, 1]), &d(&[3, 2, 1])),
            big(2)
        );
    }

    #[test]
    fn cup_small_rectangle() {
        let c24 = ctx(2, 4);
        let prod = cup_basis(&d(&[2]), &d(&[2]), c24).unwrap();
        assert_eq!(prod, CohomologyClass::sigma(&d(&[2, 2]), c24).unwrap());
        let prod = cup_basis(&d(&[1, 1]), &d(&[1, 1]), c24).unwrap();
        assert_eq!(prod, CohomologyClass::sigma(&d(&[2, 2]), c24).unwrap());
        assert!(cup_basis(&d(&[2]), &d(&[1, 1]), c24).unwrap().is_zero());
    }

    #[test]
    fn cup_large_rectangle_products() {
        let c48 = ctx(4, 8);
        let expect = |parts: &[&[u32]]| {
            CohomologyClass::from_terms(
                c48,
                parts.iter().map(|p| (d(p), BigInt::from(1))),
            )
            .unwrap()
        };
        assert_eq!(
            cup_basis(&d(&[2]), &d(&[2]), c48).unwrap(),
            expect(&[&[2, 2], &[4], &[3, 1]])
        );
        assert_eq!(
            cup_basis(&d(&[1, 1]), &d(&[1, 1]), c48).unwrap(),
            expect(&[&[2, 2], &[2, 1, 1], &[1, 1, 1, 1]])
        );
        assert_eq!(
            cup_basis(&d(&[2]), &d(&[1, 1]), c48).unwrap(),
            expect(&[&[3, 1], &[2, 1, 1]])
        );
    }

    #[test]
    fn cup_unit_is_identity() {
        let c = ctx(2, 5);
        for lam in c.enumerate_diagrams() {
            let x = CohomologyClass::sigma(&lam, c).unwrap();
            assert_eq!(cup(&CohomologyClass::unit(c), &x).unwrap(), x);
            assert_eq!(cup(&x, &CohomologyClass::unit(c)).unwrap(), x);
        }
    }

    #[test]
    fn cup_rejects_context_mismatch() {
        let a = CohomologyClass::unit(ctx(2, 4));
        let b = CohomologyClass::unit(ctx(4, 8));
        assert!(matches!(cup(&a, &b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn cup_nonzero_examples() {
        assert!(cup_nonzero(&d(&[5, 3, 2, 2, 1]), &d(&[5, 5, 4, 2]), ctx(5, 12)).unwrap());
        assert!(!cup_nonzero(&d(&[2]), &d(&[1, 1]), ctx(2, 4)).unwrap());
        let c = ctx(2, 5);
        for lam in c.enumerate_diagrams() {
            let comp = complement(&lam, c).unwrap();
            assert!(cup_nonzero(&lam, &comp, c).unwrap());
        }
    }

    #[test]
    fn duality_coefficient_examples() {
        let c24 = ctx(2, 4);
        assert_eq!(duality_coefficient(&d(&[2]), &d(&[2]), c24).unwrap(), big(1));
        assert_eq!(
            duality_coefficient(&d(&[2]), &d(&[1, 1]), c24).unwrap(),
            big(0)
        );
        assert_eq!(
            duality_coefficient(&c24.full_rectangle(), &YoungDiagram::empty(), c24).unwrap(),
            big(1)
        );
        // Degree mismatch returns 0 rather than erroring.
        assert_eq!(duality_coefficient(&d(&[1]), &d(&[1]), c24).unwrap(), big(0));
    }

    #[test]
    fn duality_detects_exactly_the_complement() {
        let c = ctx(2, 5);
        for lam in c.enumerate_diagrams() {
            let comp = complement(&lam, c).unwrap();
            for mu in c.enumerate_diagrams() {
                if mu.area() + lam.area() != c.cells() {
                    continue;
                }
                let expected = if mu == comp { big(1) } else { big(0) };
                assert_eq!(duality_coefficient(&lam, &mu, c).unwrap(), expected);
            }
        }
    }

    #[test]
    fn truncation_consistency_of_displayed_products() {
        let c24 = ctx(2, 4);
        let c48 = ctx(4, 8);
        for (la, mu) in [
            (d(&[2]), d(&[2])),
            (d(&[1, 1]), d(&[1, 1])),
            (d(&[2]), d(&[1, 1])),
        ] {
            let small = cup_basis(&la, &mu, c24).unwrap();
            let large = cup_basis(&la, &mu, c48).unwrap();
            assert_eq!(large.truncate_to(c24), small);
        }
    }

    #[test]
    fn text_form_round_trips() {
        let c48 = ctx(4, 8);
        let class = CohomologyClass::from_terms(
            c48,
            [
                (d(&[2, 1]), BigInt::from(3)),
                (d(&[1, 1, 1]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(class.to_text(), "3*[2,1] + 1*[1,1,1]");
        assert_eq!(class.to_string(), "3*[2,1] + [1,1,1]");
        assert_eq!(CohomologyClass::from_text(c48, &class.to_text()).unwrap(), class);
        assert_eq!(CohomologyClass::from_text(c48, &class.to_string()).unwrap(), class);
        assert_eq!(CohomologyClass::from_text(c48, "0").unwrap(), CohomologyClass::zero(c48));
        // Signs survive the trip.
        let signed = CohomologyClass::from_terms(
            c48,
            [(d(&[2]), BigInt::from(-2)), (d(&[1]), BigInt::from(1))],
        )
        .unwrap();
        assert_eq!(
            CohomologyClass::from_text(c48, &signed.to_text()).unwrap(),
            signed
        );
    }

    #[test]
    fn text_form_rejects_garbage() {
        let c = ctx(2, 4);
        assert!(CohomologyClass::from_text(c, "").is_err());
        assert!(CohomologyClass::from_text(c, "3*[2,1").is_err());
        assert!(CohomologyClass::from_text(c, "3[2,1]").is_err());
        assert!(CohomologyClass::from_text(c, "0*[2]").is_err());
        assert!(CohomologyClass::from_text(c, "[2] & [1]").is_err());
        // (3) does not fit a 2x2 rectangle.
        assert!(CohomologyClass::from_text(c, "[3]").is_err());
    }

    #[test]
    fn json_form_round_trips() {
        let c48 = ctx(4, 8);
        let class = cup_basis(&d(&[2]), &d(&[1, 1]), c48).unwrap();
        let json = class.to_json_string();
        assert!(json.starts_with("{\"terms\":["));
        assert!(json.ends_with(",\"k\":4,\"n\":8}"));
        assert_eq!(CohomologyClass::from_json_str(&json).unwrap(), class);
        // Zero class.
        let zero = CohomologyClass::zero(c48);
        assert_eq!(
            CohomologyClass::from_json_str(&zero.to_json_string()).unwrap(),
            zero
        );
    }

    #[test]
    fn json_form_preserves_large_coefficients() {
        let c = ctx(2, 4);
        let huge = BigInt::from_str("123456789012345678901234567890123456789").unwrap();
        let class = CohomologyClass::from_terms(c, [(d(&[1]), huge.clone())]).unwrap();
        let back = CohomologyClass::from_json_str(&class.to_json_string()).unwrap();
        assert_eq!(back.coefficient(&d(&[1])), huge);
    }

    #[test]
    fn concurrent_products_agree() {
        // The memo table is shared; parallel callers must see identical
        // results regardless of interleaving.
        let c48 = ctx(4, 8);
        let expected = cup_basis(&d(&[2, 1]), &d(&[2, 1]), c48).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let expected = expected.clone();
                std::thread::spawn(move || {
                    let c48 = ctx(4, 8);
                    for _ in 0..50 {
                        let got = cup_basis(&d(&[2, 1]), &d(&[2, 1]), c48).unwrap();
                        assert_eq!(got, expected);
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }

    #[test]
    fn json_form_rejects_invalid_payloads() {
        assert!(CohomologyClass::from_json_str("{}").is_err());
        assert!(CohomologyClass::from_json_str(
            "{\"terms\":[{\"diagram\":[2],\"coeff\":0}],\"k\":2,\"n\":4}"
        )
        .is_err());
        assert!(CohomologyClass::from_json_str(
            "{\"terms\":[{\"diagram\":[2],\"coeff\":1.5}],\"k\":2,\"n\":4}"
        )
        .is_err());
        assert!(CohomologyClass::from_json_str(
            "{\"terms\":[{\"diagram\":[1,2],\"coeff\":1}],\"k\":2,\"n\":4}"
        )
        .is_err());
        assert!(CohomologyClass::from_json_str(
            "{\"terms\":[{\"diagram\":[3],\"coeff\":1}],\"k\":2,\"n\":4}"
        )
        .is_err());
    }
}
