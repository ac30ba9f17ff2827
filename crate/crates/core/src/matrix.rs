//! Dense square matrices and the structured builders whose determinants the
//! identity checker evaluates.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{Polynomial, Rational, RationalFunction, Ring};
use crate::sequences::PolySequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("this matrix family needs an index profile (d_seq, e_seq)")]
    MissingProfile,
    #[error("index profile sequences must both have length {expected}, got {d} and {e}")]
    ProfileLength { expected: usize, d: usize, e: usize },
    #[error("zero denominator at flat index {0}")]
    ZeroDenominator(usize),
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must have at least one entry")]
    Empty,
    #[error("invalid case: {0}")]
    InvalidCase(&'static str),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type PolyMatrix = Matrix<Polynomial>;
pub type RatMatrix = Matrix<RationalFunction>;
pub type ScalarMatrix = Matrix<Rational>;

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if cols == 0 {
            return Err(MatrixError::Empty);
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Square matrix with `entry(i, j) = f(i, j)`.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn try_from_fn<E>(size: usize, mut f: impl FnMut(usize, usize) -> Result<T, E>) -> Result<Self, E> {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j)?);
            }
        }
        Ok(Matrix {
            rows: size,
            cols: size,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn size(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The contiguous `k x k` block whose top-left entry is `(i, j)`, 0-based.
    pub fn block(&self, i: usize, j: usize, k: usize) -> Self {
        assert!(i + k <= self.rows && j + k <= self.cols, "block out of bounds");
        let mut entries = Vec::with_capacity(k * k);
        for r in i..i + k {
            entries.extend_from_slice(&self.row(r)[j..j + k]);
        }
        Matrix {
            rows: k,
            cols: k,
            entries,
        }
    }

    pub fn with_entry(&self, i: usize, j: usize, value: T) -> Self {
        let mut out = self.clone();
        out.entries[i * self.cols + j] = value;
        out
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity(size: usize) -> Self {
        Matrix::from_fn(size, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Multiplies row `i` by `factor`.
    pub fn scale_row(&self, i: usize, factor: &T) -> Self {
        let mut out = self.clone();
        for v in &mut out.entries[i * self.cols..(i + 1) * self.cols] {
            *v = v.mul(factor);
        }
        out
    }
}

impl PolyMatrix {
    pub fn eval(&self, point: &Rational) -> ScalarMatrix {
        self.map(|p| p.eval(point))
    }
}

impl RatMatrix {
    /// Evaluates every entry; fails on the first vanishing denominator.
    pub fn eval(&self, point: &Rational) -> Result<ScalarMatrix, MatrixError> {
        let mut idx = 0;
        self.try_map(|r| {
            let v = r.eval(point).map_err(|_| MatrixError::ZeroDenominator(idx));
            idx += 1;
            v
        })
    }
}

/// Text dump: one row per line, entries separated by ` | `.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

impl<T: FromStr> FromStr for Matrix<T>
where
    T::Err: fmt::Display,
{
    type Err = MatrixError;

    /// Blank lines and lines starting with `#` are ignored.
    fn from_str(text: &str) -> Result<Self, MatrixError> {
        let mut rows = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split('|')
                .map(|cell| {
                    cell.trim().parse::<T>().map_err(|e| MatrixError::Parse {
                        line: n + 1,
                        reason: e.to_string(),
                    })
                })
                .collect::<Result<Vec<T>, _>>()?;
            rows.push(row);
        }
        Matrix::from_rows(rows)
    }
}

/// The two integer sequences `d_1..d_m` and `e_1..e_m` indexing the
/// product-matrix columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IndexProfile {
    d_seq: Vec<i64>,
    e_seq: Vec<i64>,
}

impl IndexProfile {
    pub fn new(d_seq: Vec<i64>, e_seq: Vec<i64>) -> Result<Self, MatrixError> {
        if d_seq.len() != e_seq.len() || d_seq.is_empty() {
            return Err(MatrixError::ProfileLength {
                expected: d_seq.len().max(1),
                d: d_seq.len(),
                e: e_seq.len(),
            });
        }
        Ok(IndexProfile { d_seq, e_seq })
    }

    pub fn len(&self) -> usize {
        self.d_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d_seq.is_empty()
    }

    /// `d_f` for 1-based `f`.
    pub fn d(&self, f: usize) -> i64 {
        self.d_seq[f - 1]
    }

    /// `e_g` for 1-based `g`.
    pub fn e(&self, g: usize) -> i64 {
        self.e_seq[g - 1]
    }

    pub fn d_seq(&self) -> &[i64] {
        &self.d_seq
    }

    pub fn e_seq(&self) -> &[i64] {
        &self.e_seq
    }
}

/// One parameter point. `d` is the side length of the rising-power matrix;
/// the other families are `(m+1) x (m+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IdentityCase {
    pub s: i64,
    pub k: i64,
    pub n: i64,
    pub m: usize,
    pub d: usize,
    pub profile: Option<IndexProfile>,
}

impl IdentityCase {
    pub fn new(s: i64, k: i64, n: i64, m: usize) -> Self {
        IdentityCase {
            s,
            k,
            n,
            m,
            d: 1,
            profile: None,
        }
    }

    pub fn with_d(mut self, d: usize) -> Self {
        self.d = d;
        self
    }

    pub fn with_profile(mut self, profile: IndexProfile) -> Self {
        self.profile = Some(profile);
        self
    }

    pub fn validate(&self) -> Result<(), MatrixError> {
        if self.m == 0 {
            return Err(MatrixError::InvalidCase("m must be at least 1"));
        }
        if self.d == 0 {
            return Err(MatrixError::InvalidCase("d must be at least 1"));
        }
        if let Some(p) = &self.profile {
            if p.len() != self.m {
                return Err(MatrixError::ProfileLength {
                    expected: self.m,
                    d: p.d_seq.len(),
                    e: p.e_seq.len(),
                });
            }
        }
        Ok(())
    }

    /// `s + k (n + t)`.
    pub fn index(&self, t: i64) -> i64 {
        self.s + self.k * (self.n + t)
    }

    pub fn profile(&self) -> Result<&IndexProfile, MatrixError> {
        self.profile.as_ref().ok_or(MatrixError::MissingProfile)
    }
}

/// `[P_{s+k(n+i+j)}^m]`.
pub fn power_matrix(seq: &PolySequence, case: &IdentityCase) -> Result<PolyMatrix, MatrixError> {
    case.validate()?;
    let m = case.m;
    let powers: Vec<Polynomial> = (0..=2 * m as i64).map(|t| seq.term(case.index(t)).pow(m as u32)).collect();
    Ok(Matrix::from_fn(m + 1, |i, j| powers[i + j].clone()))
}

/// `[prod_{f=j+1}^m P_{s+k(n+i+d_f)} * prod_{g=1}^j P_{s+k(n+i+e_g)}]`.
pub fn product_matrix(seq: &PolySequence, case: &IdentityCase) -> Result<PolyMatrix, MatrixError> {
    case.validate()?;
    let profile = case.profile()?;
    let m = case.m;
    Ok(Matrix::from_fn(m + 1, |i, j| {
        let i = i as i64;
        let ds = (j + 1..=m).map(|f| seq.term(case.index(i + profile.d(f))));
        let es = (1..=j).map(|g| seq.term(case.index(i + profile.e(g))));
        ds.chain(es).product()
    }))
}

/// `[1 / P_{s+k(n+i+j)}]`.
pub fn reciprocal_matrix(seq: &PolySequence, case: &IdentityCase) -> Result<RatMatrix, MatrixError> {
    case.validate()?;
    let size = case.m + 1;
    let window: Vec<Polynomial> = (0..=2 * case.m as i64).map(|t| seq.term(case.index(t))).collect();
    Matrix::try_from_fn(size, |i, j| {
        RationalFunction::new(Polynomial::one(), window[i + j].clone()).map_err(|_| MatrixError::ZeroDenominator(i * size + j))
    })
}

/// `[P_{n+i+j}^<m>]`, `d x d`.
pub fn rising_matrix(seq: &PolySequence, case: &IdentityCase) -> Result<PolyMatrix, MatrixError> {
    case.validate()?;
    let risings: Vec<Polynomial> = (0..2 * case.d as i64 - 1).map(|t| seq.rising_power(case.n + t, case.m)).collect();
    Ok(Matrix::from_fn(case.d, |i, j| risings[i + j].clone()))
}
