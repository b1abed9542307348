//! Exact linear algebra: reduced row echelon form, kernels, spans.
//!
//! Vectors are dense `Vec<F>`. Elimination pivots on the first nonzero entry
//! in column order, so results are deterministic.

mod echelon;

pub use echelon::EchelonBasis;

use thiserror::Error;

use crate::arith::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from its rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            check_len(cols, &r)?;
            data.extend(r);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    /// The matrix whose columns are `vectors`, each of length `rows`.
    pub fn from_columns(rows: usize, vectors: &[Vec<F>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            check_len(rows, v)?;
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        check_len(self.cols, v)?;
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

fn check_len<F>(expected: usize, v: &[F]) -> Result<(), LinalgError> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(LinalgError::LengthMismatch { expected, found: v.len() })
    }
}

fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x.clone() * y);
        }
    }
    acc
}

/// Reduced row echelon form and its pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut rows = m.to_rows();
    let pivots = rref_in_place(&mut rows, m.cols);
    let out = Matrix { rows: m.rows, cols: m.cols, data: rows.into_iter().flatten().collect() };
    (out, pivots)
}

fn rref_in_place<F: Field>(rows: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] -= &(factor.clone() * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space, one vector per free column, each with a 1
/// in its free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![F::zero(); m.cols];
            v[free] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                let x = &r[(i, free)];
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// Dimension of the span of `vectors`, all of length `len`.
pub fn span_dim<F: Field>(len: usize, vectors: &[Vec<F>]) -> Result<usize, LinalgError> {
    let mut basis = EchelonBasis::new(len);
    for v in vectors {
        basis.insert(v.clone())?;
    }
    Ok(basis.dim())
}

/// Coordinates `x` with `Σ xᵢ·vectorsᵢ = v`, or `None` when `v` is outside the
/// span. Free coordinates are set to zero.
pub fn in_span<F: Field>(v: &[F], vectors: &[Vec<F>]) -> Result<Option<Vec<F>>, LinalgError> {
    let n = v.len();
    let k = vectors.len();
    let mut rows: Vec<Vec<F>> = vec![Vec::with_capacity(k + 1); n];
    for u in vectors {
        check_len(n, u)?;
        for (i, x) in u.iter().enumerate() {
            rows[i].push(x.clone());
        }
    }
    for (i, x) in v.iter().enumerate() {
        rows[i].push(x.clone());
    }
    let pivots = rref_in_place(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coords = vec![F::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        coords[p] = rows[i][k].clone();
    }
    Ok(Some(coords))
}

/// `Σ coordsᵢ·vectorsᵢ`.
pub fn combine<F: Field>(len: usize, coords: &[F], vectors: &[Vec<F>]) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (c, v) in coords.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += &(c.clone() * x);
            }
        }
    }
    out
}

/// Basis of span(a) ∩ span(b), as rows in reduced echelon form.
pub fn intersect<F: Field>(len: usize, a: &[Vec<F>], b: &[Vec<F>]) -> Result<Vec<Vec<F>>, LinalgError> {
    let ea = EchelonBasis::from_vectors(len, a.iter().cloned())?;
    let eb = EchelonBasis::from_vectors(len, b.iter().cloned())?;
    let (ra, rb) = (ea.dense_rows(), eb.dense_rows());
    // (x, y) in ker [A | -B] gives Σ xᵢ aᵢ = Σ yⱼ bⱼ.
    let mut cols: Vec<Vec<F>> = ra.clone();
    cols.extend(rb.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let m = Matrix::from_columns(len, &cols)?;
    let mut out = EchelonBasis::new(len);
    for k in kernel_basis(&m) {
        out.insert(combine(len, &k[..ra.len()], &ra))?;
    }
    Ok(out.dense_rows())
}
