use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::matrix::rref_in_place;

/// A subspace of `k^n` held in semi-echelon form.
///
/// Every stored row has a `1` in its pivot column and a `0` in the pivot
/// columns of all rows stored before it, so reducing a vector against the
/// rows in insertion order clears every pivot column. Vectors reduced this
/// way are zero exactly when they lie in the subspace, and the columns that
/// are never pivots index a fixed complement (the quotient coordinates).
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    supports: Vec<Vec<usize>>,
    pivots: Vec<usize>,
    pivot_of: Vec<Option<usize>>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), supports: Vec::new(), pivots: Vec::new(), pivot_of: vec![None; ambient] }
    }

    pub fn whole(field: F, ambient: usize) -> Self {
        let mut s = Self::new(field, ambient);
        for i in 0..ambient {
            s.insert(s.unit(i));
        }
        s
    }

    pub fn from_vectors<I>(field: F, ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let mut s = Self::new(field, ambient);
        for v in vectors {
            s.try_insert(v)?;
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn is_whole(&self) -> bool {
        self.rows.len() == self.ambient
    }
    /// The stored basis, in insertion order.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.ambient];
        v[i] = self.field.one();
        v
    }

    /// Reduce `v` in place; returns the multipliers used, one per basis row.
    pub fn reduce(&self, v: &mut [F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            let c = &v[self.pivots[i]];
            if f.is_zero(c) {
                continue;
            }
            let c = c.clone();
            f.axpy(v, &f.neg(&c), row, Some(&self.supports[i]));
            coeffs[i] = c;
        }
        coeffs
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|e| self.field.is_zero(e))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        w.iter().all(|e| self.field.is_zero(e)).then_some(c)
    }

    /// Add `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        self.try_insert(v).expect("vector length matches ambient dimension")
    }

    pub fn try_insert(&mut self, mut v: Vec<F::Elem>) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!("vector of length {} in k^{}", v.len(), self.ambient)));
        }
        self.reduce(&mut v);
        let f = &self.field;
        let Some(p) = v.iter().position(|e| !f.is_zero(e)) else {
            return Ok(false);
        };
        let inv = f.inv(&v[p]).expect("nonzero");
        if !f.is_one(&inv) {
            f.scale(&mut v, &inv);
        }
        let support = (p..self.ambient).filter(|&j| !f.is_zero(&v[j])).collect();
        self.pivot_of[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.supports.push(support);
        self.rows.push(v);
        Ok(true)
    }

    /// Close under the given linear operators (the smallest invariant
    /// subspace containing the current one).
    pub fn close_under<Op>(&mut self, ops: &[Op])
    where
        Op: Fn(&[F::Elem]) -> Vec<F::Elem>,
    {
        self.close_under_from(0, ops);
    }

    /// Like [`Self::close_under`], assuming rows before `start` already have
    /// their images inside the subspace.
    pub fn close_under_from<Op>(&mut self, start: usize, ops: &[Op])
    where
        Op: Fn(&[F::Elem]) -> Vec<F::Elem>,
    {
        let mut i = start;
        while i < self.rows.len() && !self.is_whole() {
            for op in ops {
                let w = op(&self.rows[i]);
                self.insert(w);
            }
            i += 1;
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch("subspaces of different ambient spaces".into()));
        }
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        Ok(s)
    }

    /// Zassenhaus: echelonise `[u | u]` and `[w | 0]`; rows with zero left
    /// half span the intersection.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch("subspaces of different ambient spaces".into()));
        }
        let n = self.ambient;
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = self
            .rows
            .iter()
            .map(|u| u.iter().chain(u.iter()).cloned().collect())
            .chain(other.rows.iter().map(|w| w.iter().cloned().chain(std::iter::repeat_n(f.zero(), n)).collect()))
            .collect();
        let pivots = rref_in_place(f, &mut rows, 2 * n);
        let mut out = Self::new(f.clone(), n);
        for (i, &p) in pivots.iter().enumerate() {
            if p >= n {
                out.insert(rows[i][n..].to_vec());
            }
        }
        Ok(out)
    }

    /// Columns that are not pivots: the standard basis vectors at these
    /// positions span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient).filter(|&c| self.pivot_of[c].is_none()).collect()
    }

    /// Coordinates of the image of `v` in `k^n / self`, relative to the
    /// complement spanned by [`Self::complement_columns`].
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.complement_columns().into_iter().map(|c| w[c].clone()).collect()
    }

    /// Matrix (rows: quotient coordinates, cols: ambient) of the quotient map.
    pub fn quotient_map(&self) -> crate::linalg::Matrix<F> {
        let comp = self.complement_columns();
        let cols: Vec<Vec<F::Elem>> = (0..self.ambient)
            .map(|i| {
                let mut w = self.unit(i);
                self.reduce(&mut w);
                comp.iter().map(|&c| w[c].clone()).collect()
            })
            .collect();
        crate::linalg::Matrix::from_columns(self.field.clone(), comp.len(), &cols).expect("consistent shape")
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && other.rows.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, PrimeField, Rationals};

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn intersection_with_itself() {
        let s = Subspace::from_vectors(Rationals, 3, [q(&[1, 2, 0]), q(&[0, 1, 1])]).unwrap();
        assert_eq!(s.intersection(&s).unwrap().dim(), 2);
    }

    #[test]
    fn quotient_of_plane_by_axis() {
        let s = Subspace::from_vectors(Rationals, 2, [q(&[1, 0])]).unwrap();
        assert!(s.quotient_coords(&q(&[1, 0])).iter().all(|e| Rationals.is_zero(e)));
        assert!(s.quotient_coords(&q(&[0, 1])).iter().any(|e| !Rationals.is_zero(e)));
    }

    #[test]
    fn sum_of_two_lines() {
        let a = Subspace::from_vectors(Rationals, 2, [q(&[1, 0])]).unwrap();
        let b = Subspace::from_vectors(Rationals, 2, [q(&[1, 1])]).unwrap();
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersection(&b).unwrap().dim(), 0);
    }

    #[test]
    fn coordinates_reconstruct() {
        let f = PrimeField::new(5).unwrap();
        let s = Subspace::from_vectors(f, 3, [vec![1, 2, 3], vec![0, 1, 4]]).unwrap();
        // a(1,2,3) + b(0,1,4) = (a, 2a+b, 3a+4b): first two coordinates (2,0) force the third to 0
        let v = vec![2, 0, 1];
        assert!(!s.contains(&v));
        let w = vec![2, 0, 0];
        let c = s.coordinates(&w).unwrap();
        let mut r = vec![0u32; 3];
        for (ci, b) in c.iter().zip(s.basis()) {
            f.axpy(&mut r, ci, b, None);
        }
        assert_eq!(r, w);
    }

    #[test]
    fn spin_under_cyclic_shift() {
        let f = PrimeField::new(2).unwrap();
        let shift = |v: &[u32]| vec![v[2], v[0], v[1]];
        let mut s = Subspace::from_vectors(f, 3, [vec![1, 1, 0]]).unwrap();
        s.close_under(&[shift]);
        assert_eq!(s.dim(), 2);
        let mut t = Subspace::from_vectors(f, 3, [vec![1, 0, 0]]).unwrap();
        t.close_under(&[shift]);
        assert!(t.is_whole());
    }

    #[test]
    fn dimension_mismatch() {
        let mut s = Subspace::new(Rationals, 2);
        assert!(s.try_insert(q(&[1])).is_err());
    }
}
