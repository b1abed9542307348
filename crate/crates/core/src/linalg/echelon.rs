use super::{check_len, LinalgError};
use crate::arith::Field;

/// Incrementally built basis of a subspace of `F^len`, kept in reduced row
/// echelon form with sparse rows.
#[derive(Debug, Clone)]
pub struct EchelonBasis<F: Field> {
    len: usize,
    /// Sorted by pivot; each row has a 1 at its pivot and zeros at all other
    /// pivot columns.
    rows: Vec<Vec<(usize, F)>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(len: usize) -> Self {
        EchelonBasis { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(len: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Result<Self, LinalgError> {
        let mut b = Self::new(len);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len).filter(|&j| !is_pivot[j]).collect()
    }

    pub fn dense_rows(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| to_dense(self.len, r)).collect()
    }

    /// Remainder of `v` after eliminating every pivot column. The remainder
    /// is zero exactly when `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<F>) -> Result<Vec<F>, LinalgError> {
        check_len(self.len, &v)?;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row {
                v[*j] -= &(c.clone() * x);
            }
        }
        Ok(v)
    }

    /// Like [`reduce`](Self::reduce), also returning the coefficients of the
    /// basis rows that were subtracted.
    pub fn reduce_with_coords(&self, mut v: Vec<F>) -> Result<(Vec<F>, Vec<F>), LinalgError> {
        check_len(self.len, &v)?;
        let mut coords = vec![F::zero(); self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row {
                v[*j] -= &(c.clone() * x);
            }
            coords[k] = c;
        }
        Ok((v, coords))
    }

    pub fn contains(&self, v: &[F]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v.to_vec())?.iter().all(Field::is_zero))
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> Result<bool, LinalgError> {
        let v = self.reduce(v)?;
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inv().expect("pivot is nonzero");
        let new: Vec<(usize, F)> =
            v.into_iter().enumerate().skip(p).filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x * &inv)).collect();
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&p, |(j, _)| *j) {
                let c = row[k].1.clone();
                *row = axpy(row, &c, &new);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, new);
        Ok(true)
    }
}

fn to_dense<F: Field>(len: usize, row: &[(usize, F)]) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    for (j, x) in row {
        v[*j] = x.clone();
    }
    v
}

/// `a - c·b` for sparse sorted rows.
fn axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let ja = a.get(i).map_or(usize::MAX, |t| t.0);
        let jb = b.get(k).map_or(usize::MAX, |t| t.0);
        if ja < jb {
            out.push(a[i].clone());
            i += 1;
        } else if jb < ja {
            out.push((jb, -(c.clone() * &b[k].1)));
            k += 1;
        } else {
            let x = a[i].1.clone() - c.clone() * &b[k].1;
            if !x.is_zero() {
                out.push((ja, x));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn keeps_reduced_form() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(qv(&[0, 1, 1])).unwrap());
        assert!(e.insert(qv(&[1, 1, 0])).unwrap());
        assert!(!e.insert(qv(&[1, 2, 1])).unwrap());
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.dense_rows(), vec![qv(&[1, 0, -1]), qv(&[0, 1, 1])]);
        assert_eq!(e.free_columns(), vec![2]);
        assert_eq!(e.reduce(qv(&[0, 0, 5])).unwrap(), qv(&[0, 0, 5]));
    }

    #[test]
    fn coordinates_recombine() {
        let e = EchelonBasis::from_vectors(3, vec![qv(&[1, 0, 2]), qv(&[0, 1, 3])]).unwrap();
        let (rem, coords) = e.reduce_with_coords(qv(&[2, 3, 13])).unwrap();
        assert_eq!(rem, qv(&[0, 0, 0]));
        assert_eq!(coords, qv(&[2, 3]));
    }
}
