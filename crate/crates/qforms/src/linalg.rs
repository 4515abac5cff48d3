//! Exact matrices over the rationals: rank, determinant, and kernel via
//! fraction-free (Bareiss) elimination, plus 3x3 determinant/permanent
//! helpers that also work over polynomial entries.
//!
//! Matrices here are small (nothing beyond ~25x25); entries are cloned
//! freely and no sparsity structure is kept.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::rat::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("entry list has length {got}, expected {expected}")]
    DataLength { got: usize, expected: usize },
    #[error("rows have inconsistent lengths")]
    RaggedRows,
    #[error("operation requires a square matrix ({rows}x{cols} given)")]
    NonSquare { rows: usize, cols: usize },
    #[error("operation requires a 3x3 matrix ({rows}x{cols} given)")]
    NotThreeByThree { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("inexact division during fraction-free elimination")]
    InexactDivision,
}

/// Ring operations needed by the elimination and determinant routines.
///
/// `ring_zero` returns the zero of the caller's ring (polynomials carry
/// their variable set, so zero is context-dependent). `exact_div` must
/// return `None` when the quotient does not exist in the ring.
pub trait Ring: Clone {
    fn ring_zero(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

impl Ring for Rational {
    fn ring_zero(&self) -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Ring for Polynomial {
    fn ring_zero(&self) -> Self {
        Polynomial::zero(self.vars())
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        Polynomial::exact_div(self, other)
    }
}

/// Determinant by fraction-free elimination with first-nonzero pivot
/// selection scanning rows in order. Divisions by the previous pivot are
/// exact over any integral domain; a failed division signals a bug (or a
/// transcription error in symbolic input) and aborts loudly.
pub fn bareiss_det<T: Ring>(mut m: Vec<Vec<T>>) -> Result<T, LinalgError> {
    let n = m.len();
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    for row in &m {
        if row.len() != n {
            return Err(LinalgError::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    let zero = m[0][0].ring_zero();
    let mut negate = false;
    let mut prev: Option<T> = None;
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero());
        let Some(p) = pivot else {
            return Ok(zero);
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = match &prev {
                    None => num,
                    Some(d) => num.exact_div(d).ok_or(LinalgError::InexactDivision)?,
                };
            }
            m[i][k] = zero.clone();
        }
        prev = Some(m[k][k].clone());
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinant by cofactor expansion along the first row. Exponential;
/// intended for small matrices and as an independent cross-check.
pub fn cofactor_det<T: Ring>(m: &[Vec<T>]) -> Result<T, LinalgError> {
    let n = m.len();
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    for row in m {
        if row.len() != n {
            return Err(LinalgError::NonSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = m[0][0].ring_zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&cofactor_det(&minor)?);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    Ok(acc)
}

/// 3x3 determinant by the explicit six-term formula.
pub fn det3<T: Ring>(m: &[[T; 3]; 3]) -> T {
    let pos = m[0][0]
        .mul(&m[1][1].mul(&m[2][2]))
        .add(&m[0][1].mul(&m[1][2].mul(&m[2][0])))
        .add(&m[0][2].mul(&m[1][0].mul(&m[2][1])));
    let neg = m[0][2]
        .mul(&m[1][1].mul(&m[2][0]))
        .add(&m[0][1].mul(&m[1][0].mul(&m[2][2])))
        .add(&m[0][0].mul(&m[1][2].mul(&m[2][1])));
    pos.sub(&neg)
}

/// 3x3 permanent: the determinant's six products, all with positive sign.
pub fn perm3<T: Ring>(m: &[[T; 3]; 3]) -> T {
    m[0][0]
        .mul(&m[1][1].mul(&m[2][2]))
        .add(&m[0][1].mul(&m[1][2].mul(&m[2][0])))
        .add(&m[0][2].mul(&m[1][0].mul(&m[2][1])))
        .add(&m[0][2].mul(&m[1][1].mul(&m[2][0])))
        .add(&m[0][1].mul(&m[1][0].mul(&m[2][2])))
        .add(&m[0][0].mul(&m[1][2].mul(&m[2][1])))
}

/// Dense exact rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, LinalgError> {
        if rows == 0 || cols == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(LinalgError::DataLength {
                got: data.len(),
                expected: rows * cols,
            });
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(LinalgError::EmptyMatrix);
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::RaggedRows);
        }
        let r = rows.len();
        Ok(RationalMatrix {
            rows: r,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rat::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        RationalMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                data.push(acc);
            }
        }
        RationalMatrix::new(self.rows, other.cols, data)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * vec[{}]",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    acc += self.get(r, c) * &v[c];
                }
                acc
            })
            .collect())
    }

    /// Exact rank via fraction-free elimination (integer inputs never leave
    /// the integers).
    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut pivot_row = 0usize;
        let mut prev: Option<Rational> = None;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(p) = (pivot_row..self.rows).find(|&i| !Zero::is_zero(&m[i][col])) else {
                continue;
            };
            m.swap(p, pivot_row);
            for i in pivot_row + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &m[pivot_row][col] * &m[i][j] - &m[i][col] * &m[pivot_row][j];
                    m[i][j] = match &prev {
                        None => num,
                        Some(d) => num / d,
                    };
                }
                m[i][col] = Rational::zero();
            }
            prev = Some(m[pivot_row][col].clone());
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn det(&self) -> Result<Rational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        bareiss_det(self.to_rows())
    }

    /// Reduced row echelon form (field operations); returns the reduced
    /// rows and the pivot column of each pivot row.
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(p) = (pivot_row..self.rows).find(|&i| !Zero::is_zero(&m[i][col])) else {
                continue;
            };
            m.swap(p, pivot_row);
            let inv = m[pivot_row][col].clone();
            for j in col..self.cols {
                let v = &m[pivot_row][j] / &inv;
                m[pivot_row][j] = v;
            }
            for i in 0..self.rows {
                if i == pivot_row || Zero::is_zero(&m[i][col]) {
                    continue;
                }
                let factor = m[i][col].clone();
                for j in col..self.cols {
                    let v = &m[i][j] - &factor * &m[pivot_row][j];
                    m[i][j] = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space. Each vector is scaled to integer
    /// entries with content 1 and a positive first nonzero entry; vectors
    /// are ordered by ascending free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -m[row][free].clone();
            }
            normalize_integer_vector(&mut v);
            basis.push(v);
        }
        basis
    }

    /// Exact inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<RationalMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !Zero::is_zero(&aug[i][col])) else {
                return Err(LinalgError::Singular);
            };
            aug.swap(p, col);
            let inv = aug[col][col].clone();
            for j in 0..2 * n {
                let v = &aug[col][j] / &inv;
                aug[col][j] = v;
            }
            for i in 0..n {
                if i == col || Zero::is_zero(&aug[i][col]) {
                    continue;
                }
                let factor = aug[i][col].clone();
                for j in 0..2 * n {
                    let v = &aug[i][j] - &factor * &aug[col][j];
                    aug[i][j] = v;
                }
            }
        }
        let data = aug.into_iter().flat_map(|row| row[n..].to_vec()).collect();
        RationalMatrix::new(n, n, data)
    }

    /// 3x3 permanent; errors on any other size.
    pub fn permanent3(&self) -> Result<Rational, LinalgError> {
        if self.rows != 3 || self.cols != 3 {
            return Err(LinalgError::NotThreeByThree {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let g = |r: usize, c: usize| self.get(r, c).clone();
        let m = [
            [g(0, 0), g(0, 1), g(0, 2)],
            [g(1, 0), g(1, 1), g(1, 2)],
            [g(2, 0), g(2, 1), g(2, 2)],
        ];
        Ok(perm3(&m))
    }
}

/// Scales a rational vector to integer entries with content 1 and a
/// positive first nonzero entry. The zero vector is left untouched.
pub fn normalize_integer_vector(v: &mut [Rational]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let scale = Rational::from_integer(lcm);
    for x in v.iter_mut() {
        *x = &*x * &scale;
    }
    let mut content = BigInt::zero();
    for x in v.iter() {
        content = content.gcd(x.numer());
    }
    if content.is_zero() {
        return;
    }
    let down = Rational::from_integer(content);
    for x in v.iter_mut() {
        *x = &*x / &down;
    }
    if let Some(first) = v.iter().find(|x| !Zero::is_zero(*x)) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
}
