use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense matrix over an exact field, stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|e| self.field.format(e)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!("column of length {} in a {rows}-row matrix", c.len())));
            }
            for (i, e) in c.iter().enumerate() {
                m.data[i * cols + j] = e.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: F, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let data = entries.iter().map(|&v| field.from_i64(v)).collect();
        Self::new(field, rows, cols, data)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        self.field.is_one(e)
                    } else {
                        self.field.is_zero(e)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.field.clone(), self.rows, other.cols);
        let oc = other.cols;
        for r in 0..self.rows {
            let dst = &mut out.data[r * oc..(r + 1) * oc];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if !self.field.is_zero(a) {
                    self.field.axpy(dst, a, other.row(k), None);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self.apply(v))
    }

    /// `self * v` without the length check; callers guarantee `v.len() == cols`.
    pub(crate) fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let support: Vec<usize> = (0..v.len()).filter(|&c| !f.is_zero(&v[c])).collect();
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                support.iter().fold(f.zero(), |acc, &c| if f.is_zero(&row[c]) { acc } else { f.add(&acc, &f.mul(&row[c], &v[c])) })
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scaled(&self, a: &F::Elem) -> Self {
        let mut m = self.clone();
        m.field.clone().scale(&mut m.data, a);
        m
    }

    /// Reduced row echelon form and pivot columns. Pivots are chosen as the
    /// first nonzero entry scanning columns left to right, rows top to bottom.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows: Vec<Vec<F::Elem>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref_in_place(&self.field, &mut rows, self.cols);
        let m = Self::from_rows(self.field.clone(), self.cols, rows).expect("shape preserved");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&self.field, &r, &pivots)
    }

    /// Basis of the column space: the original columns at pivot positions.
    pub fn image_basis(&self) -> Vec<Vec<F::Elem>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { f.one() } else { f.zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, 2 * n);
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(Matrix { field: f.clone(), rows: n, cols: n, data })
    }
}

/// In-place RREF on a list of rows of width `cols`; returns pivot columns.
/// Zero rows end up at the bottom.
pub(crate) fn rref_in_place<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(pr) = (next..rows.len()).find(|&r| !f.is_zero(&rows[r][c])) else {
            continue;
        };
        rows.swap(next, pr);
        let inv = f.inv(&rows[next][c]).expect("nonzero pivot");
        if !f.is_one(&inv) {
            f.scale(&mut rows[next], &inv);
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !f.is_zero(&rows[next][j])).collect();
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || f.is_zero(&row[c]) {
                continue;
            }
            let factor = f.neg(&row[c]);
            f.axpy(row, &factor, &pivot_row, Some(&support));
        }
        rows[next] = pivot_row;
        pivots.push(c);
        next += 1;
    }
    pivots
}

pub(crate) fn kernel_from_rref<F: Field>(f: &F, r: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F::Elem>> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (i, &p) in pivots.iter().enumerate() {
            let e = r.get(i, free);
            if !f.is_zero(e) {
                v[p] = f.neg(e);
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn rref_identity_over_f3() {
        let f = PrimeField::new(3).unwrap();
        let id = Matrix::identity(f, 2);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zeros(Rationals, 3, 2);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_rank_one_rational() {
        let m = Matrix::from_i64(Rationals, 2, 2, &[2, 4, 1, 2]).unwrap();
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Rationals, 2, 2, &[1, 2, 0, 0]).unwrap());
        assert_eq!(p, vec![0]);
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn kernel_examples() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(Matrix::identity(f2, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(f2, 2, 2).kernel_basis().len(), 2);
        let m = Matrix::from_i64(f2, 1, 2, &[1, 1]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn image_examples() {
        let q = Rationals;
        let m = Matrix::from_i64(q, 2, 1, &[1, 2]).unwrap();
        assert_eq!(m.image_basis(), vec![vec![q.from_i64(1), q.from_i64(2)]]);
        assert!(Matrix::zeros(q, 2, 2).image_basis().is_empty());
        assert_eq!(Matrix::identity(q, 2).image_basis().len(), 2);
    }

    #[test]
    fn solve_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let m = Matrix::from_i64(f3, 1, 1, &[2]).unwrap();
        assert_eq!(m.solve(&[1]).unwrap(), Some(vec![2]));
        let z = Matrix::zeros(f3, 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let id = Matrix::identity(f3, 2);
        assert_eq!(id.solve(&[2, 1]).unwrap(), Some(vec![2, 1]));
        assert!(id.solve(&[1]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let q = Rationals;
        let m = Matrix::from_i64(q, 2, 2, &[2, 1, 1, 1]).unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(Matrix::from_i64(q, 2, 2, &[1, 1, 1, 1]).unwrap().inverse().is_none());
    }
}
