//! Exact determinants: cofactor expansion, fraction-free elimination,
//! elimination over a field, and Dodgson condensation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{Field, Polynomial, Rational, RationalFunction, Ring};
use crate::matrix::{Matrix, MatrixError};

/// Largest size accepted by [`det_laplace`].
pub const LAPLACE_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("cofactor expansion is limited to size {LAPLACE_MAX}, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Shape(#[from] MatrixError),
    #[error("minor of size {k} at ({i}, {j}) does not fit in a {size}x{size} matrix")]
    OutOfBounds { k: usize, i: usize, j: usize, size: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Bareiss,
    Gauss,
    Condense,
    Laplace,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::Bareiss, Engine::Gauss, Engine::Condense, Engine::Laplace];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Bareiss => "bareiss",
            Engine::Gauss => "gauss",
            Engine::Condense => "condense",
            Engine::Laplace => "laplace",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine {s:?} (expected bareiss, gauss, condense or laplace)"))
    }
}

/// A determinant value plus whether condensation had to fall back to
/// elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Determinant<T> {
    pub value: T,
    pub fallback_used: bool,
}

impl<T> Determinant<T> {
    fn plain(value: T) -> Self {
        Determinant {
            value,
            fallback_used: false,
        }
    }
}

/// 1-based reference to the contiguous `k x k` minor whose top-left entry is
/// at row `i`, column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorRef {
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

/// Entry types every engine can handle. `eliminate` is the elimination
/// engine natural to the domain and serves as the condensation fallback.
pub trait DetEntry: Ring {
    fn eliminate(mat: &Matrix<Self>) -> Result<Self, DetError>;
    fn field_gauss(mat: &Matrix<Self>) -> Result<Self, DetError>;
}

impl DetEntry for Polynomial {
    fn eliminate(mat: &Matrix<Self>) -> Result<Self, DetError> {
        det_bareiss(mat)
    }

    /// Runs over the fraction field and maps back.
    fn field_gauss(mat: &Matrix<Self>) -> Result<Self, DetError> {
        let lifted = mat.map(|p| RationalFunction::from(p.clone()));
        let det = det_field_gauss(&lifted)?;
        Ok(det.to_polynomial().expect("determinant of a polynomial matrix is a polynomial"))
    }
}

impl DetEntry for RationalFunction {
    fn eliminate(mat: &Matrix<Self>) -> Result<Self, DetError> {
        det_field_gauss(mat)
    }

    fn field_gauss(mat: &Matrix<Self>) -> Result<Self, DetError> {
        det_field_gauss(mat)
    }
}

impl DetEntry for Rational {
    fn eliminate(mat: &Matrix<Self>) -> Result<Self, DetError> {
        det_field_gauss(mat)
    }

    fn field_gauss(mat: &Matrix<Self>) -> Result<Self, DetError> {
        det_field_gauss(mat)
    }
}

pub fn determinant<T: DetEntry>(mat: &Matrix<T>, engine: Engine) -> Result<Determinant<T>, DetError> {
    match engine {
        Engine::Bareiss => det_bareiss(mat).map(Determinant::plain),
        Engine::Gauss => T::field_gauss(mat).map(Determinant::plain),
        Engine::Condense => det_condensation(mat),
        Engine::Laplace => det_laplace(mat).map(Determinant::plain),
    }
}

pub type EngineRun<T> = (Engine, Result<Determinant<T>, DetError>);

/// Runs every engine; the flag says whether all successful runs agree.
pub fn determinant_all<T: DetEntry>(mat: &Matrix<T>) -> (Vec<EngineRun<T>>, bool) {
    let runs: Vec<_> = Engine::ALL.into_iter().map(|e| (e, determinant(mat, e))).collect();
    let mut values = runs.iter().filter_map(|(_, r)| r.as_ref().ok()).map(|d| &d.value);
    let consistent = match values.next() {
        Some(first) => values.all(|v| v == first),
        None => false,
    };
    (runs, consistent)
}

pub fn det_laplace<T: Ring>(mat: &Matrix<T>) -> Result<T, DetError> {
    let n = mat.size()?;
    if n > LAPLACE_MAX {
        return Err(DetError::TooLarge(n));
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace_rec(mat, 0, &cols))
}

fn laplace_rec<T: Ring>(mat: &Matrix<T>, row: usize, cols: &[usize]) -> T {
    if cols.len() == 1 {
        return mat.get(row, cols[0]).clone();
    }
    let mut acc = T::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = mat.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&laplace_rec(mat, row + 1, &rest));
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Fraction-free elimination; every division is exact in an integral domain.
pub fn det_bareiss<T: Ring>(mat: &Matrix<T>) -> Result<T, DetError> {
    let n = mat.size()?;
    let mut a: Vec<Vec<T>> = (0..n).map(|i| mat.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n.saturating_sub(1) {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let cross = pivot_row[k].mul(&row[j]).sub(&row[k].mul(&pivot_row[j]));
                row[j] = cross.div_exact(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let last = a[n - 1][n - 1].clone();
    Ok(if negate { last.neg() } else { last })
}

/// Gaussian elimination over a field, pivoting on the first nonzero entry.
pub fn det_field_gauss<T: Field>(mat: &Matrix<T>) -> Result<T, DetError> {
    let n = mat.size()?;
    let mut a: Vec<Vec<T>> = (0..n).map(|i| mat.row(i).to_vec()).collect();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            det = det.neg();
        }
        det = det.mul(&a[k][k]);
        let inv = a[k][k].inv().expect("pivot is nonzero");
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let factor = row[k].mul(&inv);
            for j in k + 1..n {
                row[j] = row[j].sub(&factor.mul(&pivot_row[j]));
            }
        }
    }
    Ok(det)
}

/// Dodgson condensation. Each step replaces the `l x l` array of connected
/// minors by the `(l-1) x (l-1)` array one size up, dividing by the interior
/// of the array two steps back; a zero divisor triggers a full fallback.
pub fn det_condensation<T: DetEntry>(mat: &Matrix<T>) -> Result<Determinant<T>, DetError> {
    let n = mat.size()?;
    let mut prev: Option<Vec<T>> = None;
    let mut cur: Vec<T> = mat.entries().to_vec();
    let mut len = n;
    while len > 1 {
        let next_len = len - 1;
        let mut next = Vec::with_capacity(next_len * next_len);
        for i in 0..next_len {
            for j in 0..next_len {
                let at = |r: usize, c: usize| &cur[r * len + c];
                let cross = at(i, j).mul(at(i + 1, j + 1)).sub(&at(i + 1, j).mul(at(i, j + 1)));
                let value = match &prev {
                    None => cross,
                    Some(p) => {
                        let divisor = &p[(i + 1) * (len + 1) + (j + 1)];
                        if divisor.is_zero() {
                            return Ok(Determinant {
                                value: T::eliminate(mat)?,
                                fallback_used: true,
                            });
                        }
                        cross.div_exact(divisor).expect("condensation quotient is exact")
                    }
                };
                next.push(value);
            }
        }
        prev = Some(cur);
        cur = next;
        len = next_len;
    }
    Ok(Determinant::plain(cur.pop().expect("nonempty")))
}

/// `A_k(i, j)`; the empty minor (`k = 0`) is 1.
pub fn minor<T: DetEntry>(mat: &Matrix<T>, r: MinorRef) -> Result<T, DetError> {
    let size = mat.size()?;
    if r.k == 0 {
        return Ok(T::one());
    }
    if r.i == 0 || r.j == 0 || r.i + r.k - 1 > size || r.j + r.k - 1 > size {
        return Err(DetError::OutOfBounds {
            k: r.k,
            i: r.i,
            j: r.j,
            size,
        });
    }
    T::eliminate(&mat.block(r.i - 1, r.j - 1, r.k))
}

/// `A_m(1,1) A_{m-2}(2,2) - A_{m-1}(1,1) A_{m-1}(2,2) + A_{m-1}(2,1) A_{m-1}(1,2)`,
/// which vanishes for every square matrix of size at least 2.
pub fn desnanot_jacobi_residual<T: DetEntry>(mat: &Matrix<T>) -> Result<T, DetError> {
    let m = mat.size()?;
    let a = |k: usize, i: usize, j: usize| minor(mat, MinorRef { k, i, j });
    let lhs = a(m, 1, 1)?.mul(&a(m.saturating_sub(2), 2, 2)?);
    let rhs = a(m - 1, 1, 1)?.mul(&a(m - 1, 2, 2)?).sub(&a(m - 1, 2, 1)?.mul(&a(m - 1, 1, 2)?));
    Ok(lhs.sub(&rhs))
}
