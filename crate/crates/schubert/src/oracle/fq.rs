//! Exact linear algebra over the small prime fields F_2, F_3, F_5: field
//! elements, dense matrices, canonical (RREF) subspaces, and complete
//! flags. Everything here is the ground-truth side of the toolkit, so all
//! arithmetic is exact and all representatives are canonical.

use std::fmt;

use crate::error::{Error, Result};

pub const SUPPORTED_MODULI: [u8; 3] = [2, 3, 5];

pub fn check_modulus(q: u8) -> Result<()> {
    if SUPPORTED_MODULI.contains(&q) {
        Ok(())
    } else {
        Err(Error::UnsupportedModulus { q })
    }
}

#[inline]
pub(crate) fn fadd(a: u8, b: u8, q: u8) -> u8 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

#[inline]
pub(crate) fn fneg(a: u8, q: u8) -> u8 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

#[inline]
pub(crate) fn fsub(a: u8, b: u8, q: u8) -> u8 {
    fadd(a, fneg(b, q), q)
}

#[inline]
pub(crate) fn fmul(a: u8, b: u8, q: u8) -> u8 {
    ((u16::from(a) * u16::from(b)) % u16::from(q)) as u8
}

/// Multiplicative inverse of a nonzero element, by scan (q ≤ 5).
#[inline]
pub(crate) fn finv(a: u8, q: u8) -> u8 {
    debug_assert!(a != 0 && a < q);
    (1..q).find(|&b| fmul(a, b, q) == 1).expect("nonzero element of a prime field has an inverse")
}

/// An element of F_q with its modulus attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u8,
    q: u8,
}

impl PrimeFieldElement {
    /// Reduces any integer into `[0, q)`.
    pub fn new(value: i64, q: u8) -> Result<Self> {
        check_modulus(q)?;
        let value = value.rem_euclid(i64::from(q)) as u8;
        Ok(Self { value, q })
    }

    pub fn value(&self) -> u8 {
        self.value
    }

    pub fn modulus(&self) -> u8 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Self { value: fadd(self.value, rhs.value, self.q), q: self.q }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Self { value: fsub(self.value, rhs.value, self.q), q: self.q }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.q, rhs.q, "mixed moduli");
        Self { value: fmul(self.value, rhs.value, self.q), q: self.q }
    }

    /// None for zero.
    pub fn inverse(&self) -> Option<Self> {
        (self.value != 0).then(|| Self { value: finv(self.value, self.q), q: self.q })
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Row-reduces `data` (a `rows`×`cols` row-major matrix) to reduced row
/// echelon form in place and returns the rank.
pub(crate) fn rref_in_place(data: &mut [u8], rows: usize, cols: usize, q: u8) -> usize {
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if src != pivot_row {
            for c in 0..cols {
                data.swap(src * cols + c, pivot_row * cols + c);
            }
        }
        let inv = finv(data[pivot_row * cols + col], q);
        if inv != 1 {
            for c in col..cols {
                data[pivot_row * cols + c] = fmul(data[pivot_row * cols + c], inv, q);
            }
        }
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = data[r * cols + col];
            if factor != 0 {
                for c in col..cols {
                    let delta = fmul(factor, data[pivot_row * cols + c], q);
                    data[r * cols + c] = fsub(data[r * cols + c], delta, q);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    pivot_row
}

/// Forward elimination only; leaves `data` in echelon form and returns the
/// rank. Cheaper than [`rref_in_place`] when only the rank is needed.
pub(crate) fn rank_in_place(data: &mut [u8], rows: usize, cols: usize, q: u8) -> usize {
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if src != pivot_row {
            for c in col..cols {
                data.swap(src * cols + c, pivot_row * cols + c);
            }
        }
        let inv = finv(data[pivot_row * cols + col], q);
        for r in (pivot_row + 1)..rows {
            let factor = fmul(data[r * cols + col], inv, q);
            if factor != 0 {
                for c in col..cols {
                    let delta = fmul(factor, data[pivot_row * cols + c], q);
                    data[r * cols + c] = fsub(data[r * cols + c], delta, q);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    pivot_row
}

/// A dense matrix over F_q, entries stored row-major in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqMatrix {
    q: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FqMatrix {
    pub fn zero(q: u8, rows: usize, cols: usize) -> Result<Self> {
        check_modulus(q)?;
        if rows == 0 || cols == 0 {
            return Err(Error::OutOfRange {
                what: "matrix dimension",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self { q, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn identity(q: u8, n: usize) -> Result<Self> {
        let mut m = Self::zero(q, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        Ok(m)
    }

    /// Builds a matrix from row vectors; entries are reduced mod q.
    pub fn from_rows(q: u8, rows: &[Vec<u8>]) -> Result<Self> {
        check_modulus(q)?;
        let height = rows.len();
        let width = rows.first().map(|r| r.len()).unwrap_or(0);
        if height == 0 || width == 0 {
            return Err(Error::OutOfRange {
                what: "matrix dimension",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        let mut data = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(Error::AmbientMismatch { left: width, right: row.len() });
            }
            data.extend(row.iter().map(|&x| x % q));
        }
        Ok(Self { q, rows: height, cols: width, data })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u8) {
        self.data[r * self.cols + c] = value % self.q;
    }

    pub fn entry(&self, r: usize, c: usize) -> PrimeFieldElement {
        PrimeFieldElement { value: self.get(r, c), q: self.q }
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    /// Rank by exact Gaussian elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(&mut scratch, self.rows, self.cols, self.q)
    }

    /// The column space `col A ⊆ F_q^n` in canonical form.
    pub fn column_space(&self) -> FqSubspace {
        // Transpose so columns become rows, then row-reduce.
        let mut t = vec![0u8; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        let rank = rref_in_place(&mut t, self.cols, self.rows, self.q);
        t.truncate(rank * self.rows);
        FqSubspace { q: self.q, ambient: self.rows, basis: t }
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
        }
        Ok(())
    }
}

/// A subspace of F_q^n, stored as the reduced row echelon basis — the
/// unique canonical representative, so equality is plain comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqSubspace {
    q: u8,
    ambient: usize,
    basis: Vec<u8>,
}

impl FqSubspace {
    /// Canonicalizes the span of the given vectors.
    pub fn from_span(q: u8, ambient: usize, vectors: &[Vec<u8>]) -> Result<Self> {
        check_modulus(q)?;
        if ambient == 0 {
            return Err(Error::OutOfRange {
                what: "ambient dimension",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: v.len() });
            }
            data.extend(v.iter().map(|&x| x % q));
        }
        let rows = vectors.len();
        let rank = rref_in_place(&mut data, rows, ambient, q);
        data.truncate(rank * ambient);
        Ok(Self { q, ambient, basis: data })
    }

    pub(crate) fn from_rref_raw(q: u8, ambient: usize, basis: Vec<u8>) -> Self {
        debug_assert_eq!(basis.len() % ambient, 0);
        Self { q, ambient, basis }
    }

    pub fn zero(q: u8, ambient: usize) -> Result<Self> {
        check_modulus(q)?;
        if ambient == 0 {
            return Err(Error::OutOfRange {
                what: "ambient dimension",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self { q, ambient, basis: Vec::new() })
    }

    pub fn full(q: u8, ambient: usize) -> Result<Self> {
        let id = FqMatrix::identity(q, ambient)?;
        Ok(Self { q, ambient, basis: id.data })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len() / self.ambient
    }

    /// Basis rows in RREF, each of length `ambient`.
    pub fn basis_rows(&self) -> impl Iterator<Item = &[u8]> {
        self.basis.chunks(self.ambient)
    }

    pub fn contains_vector(&self, v: &[u8]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        let mut row: Vec<u8> = v.iter().map(|&x| x % self.q).collect();
        reduce_against_rref(&mut row, &self.basis, self.ambient, self.q);
        Ok(row.iter().all(|&x| x == 0))
    }

    pub fn contains(&self, other: &FqSubspace) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        for row in other.basis_rows() {
            if !self.contains_vector(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim(V ∩ W) = dim V + dim W − dim(V + W)`, the sum computed by one
    /// exact elimination of the stacked bases.
    pub fn intersection_dim(&self, other: &FqSubspace) -> Result<usize> {
        if other.ambient != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        assert_eq!(self.q, other.q, "mixed moduli");
        let mut stacked = Vec::with_capacity(self.basis.len() + other.basis.len());
        stacked.extend_from_slice(&self.basis);
        stacked.extend_from_slice(&other.basis);
        let rows = self.dim() + other.dim();
        let sum_dim = rank_in_place(&mut stacked, rows, self.ambient, self.q);
        Ok(self.dim() + other.dim() - sum_dim)
    }
}

/// Reduces `row` against RREF basis rows (pivot columns are the leading
/// nonzero entries of the basis rows).
fn reduce_against_rref(row: &mut [u8], basis: &[u8], ambient: usize, q: u8) {
    for b in basis.chunks(ambient) {
        let pivot = b.iter().position(|&x| x != 0).expect("RREF basis rows are nonzero");
        let factor = row[pivot];
        if factor != 0 {
            for c in pivot..ambient {
                row[c] = fsub(row[c], fmul(factor, b[c], q), q);
            }
        }
    }
}

impl fmt::Display for FqSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span(")?;
        if self.dim() == 0 {
            write!(f, "0")?;
        }
        for (i, row) in self.basis_rows().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for &x in row {
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}

/// A complete flag `F_0 ⊂ F_1 ⊂ … ⊂ F_n` given by an ordered basis:
/// `F_j` is the span of the first `j` basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqFlag {
    q: u8,
    n: usize,
    rows: Vec<u8>,
}

impl FqFlag {
    /// The standard flag: spans of the leading coordinate vectors.
    pub fn standard(q: u8, n: usize) -> Result<Self> {
        let id = FqMatrix::identity(q, n)?;
        Ok(Self { q, n, rows: id.data })
    }

    /// The opposite flag: spans of the trailing coordinate vectors, in
    /// general position relative to the standard flag.
    pub fn opposite(q: u8, n: usize) -> Result<Self> {
        check_modulus(q)?;
        let mut rows = vec![0u8; n * n];
        for j in 0..n {
            rows[j * n + (n - 1 - j)] = 1;
        }
        Ok(Self { q, n, rows })
    }

    /// Builds a flag from any invertible square matrix of basis rows.
    pub fn from_basis(basis: &FqMatrix) -> Result<Self> {
        if basis.rows() != basis.cols() {
            return Err(Error::AmbientMismatch { left: basis.rows(), right: basis.cols() });
        }
        if basis.rank() != basis.rows() {
            return Err(Error::Parse {
                what: "flag basis",
                detail: "basis rows are linearly dependent".into(),
            });
        }
        Ok(Self { q: basis.q(), n: basis.rows(), rows: basis.data().to_vec() })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `j`-th basis row, 0-indexed.
    pub(crate) fn row(&self, j: usize) -> &[u8] {
        &self.rows[j * self.n..(j + 1) * self.n]
    }

    /// The flag member `F_j`.
    pub fn subspace(&self, j: usize) -> Result<FqSubspace> {
        if j > self.n {
            return Err(Error::OutOfRange {
                what: "flag index",
                value: j as i64,
                min: 0,
                max: self.n as i64,
            });
        }
        let rows: Vec<Vec<u8>> = (0..j).map(|i| self.row(i).to_vec()).collect();
        if rows.is_empty() {
            return FqSubspace::zero(self.q, self.n);
        }
        FqSubspace::from_span(self.q, self.n, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_tables() {
        for q in SUPPORTED_MODULI {
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(fadd(a, b, q), (a + b) % q);
                    assert_eq!(fsub(fadd(a, b, q), b, q), a);
                    assert_eq!(fmul(a, b, q), (a * b) % q);
                }
                if a != 0 {
                    assert_eq!(fmul(a, finv(a, q), q), 1);
                }
            }
        }
    }

    #[test]
    fn element_type_reduces_and_checks() {
        let x = PrimeFieldElement::new(-1, 5).unwrap();
        assert_eq!(x.value(), 4);
        assert!(PrimeFieldElement::new(3, 4).is_err());
        let y = PrimeFieldElement::new(3, 5).unwrap();
        assert_eq!(x.add(&y).value(), 2);
        assert_eq!(x.mul(&y).value(), 2);
        assert_eq!(y.inverse().unwrap().value(), 2);
        assert!(PrimeFieldElement::new(0, 5).unwrap().inverse().is_none());
    }

    #[test]
    fn rank_examples() {
        let m = FqMatrix::from_rows(2, &[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(FqMatrix::identity(3, 4).unwrap().rank(), 4);
        assert_eq!(FqMatrix::zero(5, 3, 2).unwrap().rank(), 0);
    }

    #[test]
    fn column_space_examples() {
        let id = FqMatrix::identity(2, 3).unwrap();
        assert_eq!(id.column_space(), FqSubspace::full(2, 3).unwrap());
        let z = FqMatrix::zero(3, 2, 2).unwrap();
        assert_eq!(z.column_space(), FqSubspace::zero(3, 2).unwrap());
        // Duplicated columns span the same space.
        let a = FqMatrix::from_rows(3, &[vec![1, 1, 2], vec![2, 2, 1]]).unwrap();
        let b = FqMatrix::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(a.column_space(), b.column_space());
        assert_eq!(a.column_space().dim(), a.rank());
    }

    #[test]
    fn subspace_canonical_form_is_unique() {
        // Two different spanning sets of the same plane.
        let v1 = FqSubspace::from_span(3, 3, &[vec![1, 0, 1], vec![0, 1, 2]]).unwrap();
        let v2 = FqSubspace::from_span(3, 3, &[vec![1, 1, 0], vec![2, 1, 1]]).unwrap();
        assert_eq!(v1, v2);
        assert_eq!(v1.dim(), 2);
        assert!(v1.contains_vector(&[1, 1, 0]).unwrap());
        assert!(!v1.contains_vector(&[0, 0, 1]).unwrap());
    }

    #[test]
    fn intersection_dims() {
        let q = 2;
        let xy = FqSubspace::from_span(q, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let yz = FqSubspace::from_span(q, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(xy.intersection_dim(&yz).unwrap(), 1);
        let x = FqSubspace::from_span(q, 3, &[vec![1, 0, 0]]).unwrap();
        assert_eq!(xy.intersection_dim(&x).unwrap(), 1);
        assert_eq!(x.intersection_dim(&yz).unwrap(), 0);
    }

    #[test]
    fn flags_nest_with_exact_dimensions() {
        for q in SUPPORTED_MODULI {
            for flag in [FqFlag::standard(q, 4).unwrap(), FqFlag::opposite(q, 4).unwrap()] {
                let mut prev = FqSubspace::zero(q, 4).unwrap();
                for j in 0..=4 {
                    let fj = flag.subspace(j).unwrap();
                    assert_eq!(fj.dim(), j);
                    if j > 0 {
                        assert!(fj.contains(&prev).unwrap());
                    }
                    prev = fj;
                }
            }
        }
    }

    #[test]
    fn standard_and_opposite_are_in_general_position() {
        let q = 2;
        let n = 5;
        let f = FqFlag::standard(q, n).unwrap();
        let g = FqFlag::opposite(q, n).unwrap();
        for i in 0..=n {
            let fi = f.subspace(i).unwrap();
            let gi = g.subspace(n - i).unwrap();
            assert_eq!(fi.intersection_dim(&gi).unwrap(), 0);
        }
    }

    #[test]
    fn flag_from_basis_rejects_singular() {
        let m = FqMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(FqFlag::from_basis(&m).is_err());
        let ok = FqMatrix::from_rows(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(FqFlag::from_basis(&ok).is_ok());
    }
}
