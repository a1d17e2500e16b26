//! Finite-dimensional algebras given by structure constants, group
//! algebras, category algebras and their Jacobson radicals.

mod category_algebra;
mod group_algebra;
mod radical;

use serde_json::{json, Value};

pub use category_algebra::{invertibility_criterion, CategoryAlgebra, CategoryRadical, CriterionReport, ObjectCriterion};
pub use group_algebra::GroupAlgebra;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use radical::{matrix_power_trace, radical_chain, TraceOracle};

/// Sparse expansion of a basis product: `(basis index, coefficient)` pairs.
pub type Expansion<E> = Vec<(usize, E)>;

#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra<F: Field> {
    field: F,
    labels: Vec<String>,
    /// `table[i * dim + j]` is the expansion of `b_i b_j`.
    table: Vec<Expansion<F::Elem>>,
}

impl<F: Field> FiniteDimAlgebra<F> {
    pub fn new(field: F, labels: Vec<String>, table: Vec<Expansion<F::Elem>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} products for dimension {n}", table.len())));
        }
        if table.iter().flatten().any(|(k, _)| *k >= n) {
            return Err(Error::DimensionMismatch("structure constant refers to a missing basis element".into()));
        }
        let table = table.into_iter().map(|e| e.into_iter().filter(|(_, c)| !field.is_zero(c)).collect()).collect();
        Ok(FiniteDimAlgebra { field, labels, table })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
                let c = f.mul(ai, bj);
                for (k, s) in self.product(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Exhaustive check of `(b_i b_j) b_k = b_i (b_j b_k)`.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.expansion_vec(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &self.expansion_vec(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn expansion_vec(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (k, c) in self.product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// The two-sided identity, found by solving `e b_j = b_j = b_j e`.
    pub fn identity(&self) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let n = self.dim();
        // unknown e = Σ e_i b_i; equations indexed by (j, k, side)
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for side in 0..2 {
            for j in 0..n {
                let mut block = vec![vec![f.zero(); n]; n];
                for i in 0..n {
                    let prod = if side == 0 { self.product(i, j) } else { self.product(j, i) };
                    for (k, c) in prod {
                        block[*k][i] = c.clone();
                    }
                }
                for (k, row) in block.into_iter().enumerate() {
                    rows.push(row);
                    rhs.push(if k == j { f.one() } else { f.zero() });
                }
            }
        }
        let m = Matrix::from_rows(f.clone(), n, rows).ok()?;
        m.solve(&rhs).ok().flatten()
    }

    /// Matrix of `x ↦ a x` in the basis.
    pub fn left_mult_matrix(&self, a: &[F::Elem]) -> Matrix<F> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim()).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field.clone(), self.dim(), &cols).expect("square")
    }

    /// The Jacobson radical.
    pub fn radical(&self) -> Subspace<F> {
        radical_chain(self)
    }

    /// `span{ x y : x ∈ I, y ∈ K }`.
    pub fn product_space(&self, i: &Subspace<F>, k: &Subspace<F>) -> Subspace<F> {
        let mut out = Subspace::new(self.field.clone(), self.dim());
        for x in i.basis() {
            for y in k.basis() {
                out.insert(self.mul(x, y));
                if out.is_whole() {
                    return out;
                }
            }
        }
        out
    }

    /// Smallest `k` with `I^k = 0`, if `I` is nilpotent.
    pub fn nilpotency_index(&self, ideal: &Subspace<F>) -> Option<usize> {
        let mut power = ideal.clone();
        let mut k = 1;
        while !power.is_zero() {
            let next = self.product_space(&power, ideal);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
            k += 1;
        }
        Some(k)
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<F>) -> bool {
        (0..self.dim()).all(|j| {
            let b = self.basis_vector(j);
            s.basis().iter().all(|x| s.contains(&self.mul(x, &b)) && s.contains(&self.mul(&b, x)))
        })
    }

    /// `A / I` on the basis of non-pivot columns of `I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Self> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidModule("quotient by a subspace that is not a two-sided ideal".into()));
        }
        let keep = ideal.complement_columns();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut table = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                let q = ideal.quotient_coords(&self.expansion_vec(i, j));
                table.push(q.into_iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).collect());
            }
        }
        Self::new(self.field.clone(), labels, table)
    }

    /// Radical is nilpotent and the quotient by it has zero radical.
    pub fn validate_radical(&self, radical: &Subspace<F>) -> bool {
        self.is_two_sided_ideal(radical)
            && self.nilpotency_index(radical).is_some()
            && self.quotient(radical).map(|q| q.radical().is_zero()).unwrap_or(false)
    }

    /// Kernel of the trace form `(a, b) ↦ Tr(L_{ab})`.
    pub fn trace_form_kernel(&self) -> Subspace<F> {
        let n = self.dim();
        let tau = self.trace_vector();
        let u: Vec<Vec<F::Elem>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let m = self.functional_matrix(&u, &tau);
        let m = Matrix::from_rows(self.field.clone(), n, m).expect("square");
        Subspace::from_vectors(self.field.clone(), n, m.kernel_basis()).expect("consistent")
    }

    /// Basis labels and the nonzero structure constants.
    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    constants.push(json!([i, j, k, self.field.format(c)]));
                }
            }
        }
        json!({"field": self.field.spec(), "basis": self.labels, "structure_constants": constants})
    }
}

impl<F: Field> TraceOracle<F> for FiniteDimAlgebra<F> {
    fn field(&self) -> &F {
        &self.field
    }
    fn dim(&self) -> usize {
        self.labels.len()
    }
    fn trace_vector(&self) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim())
            .map(|t| {
                (0..self.dim())
                    .fold(f.zero(), |acc, k| self.product(t, k).iter().filter(|(s, _)| *s == k).fold(acc, |a, (_, c)| f.add(&a, c)))
            })
            .collect()
    }
    fn functional_matrix(&self, u: &[Vec<F::Elem>], w: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let n = self.dim();
        // W[t][j] = w(b_t b_j)
        let wt: Vec<Vec<F::Elem>> = (0..n)
            .map(|t| (0..n).map(|j| self.product(t, j).iter().fold(f.zero(), |a, (s, c)| f.add(&a, &f.mul(c, &w[*s])))).collect())
            .collect();
        u.iter()
            .map(|uk| {
                let mut row = vec![f.zero(); n];
                for (t, c) in uk.iter().enumerate() {
                    f.axpy(&mut row, c, &wt[t], None);
                }
                row
            })
            .collect()
    }
    fn power_trace(&self, u: &[F::Elem], i: u32, modulus: u64) -> u64 {
        let n = self.dim();
        let p = self.field.characteristic();
        let l = self.left_mult_matrix(u);
        let lifted: Vec<u64> = l.entries().iter().map(|e| self.field.to_residue(e).expect("prime field")).collect();
        matrix_power_trace(&lifted, n, p.pow(i), modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    /// Upper triangular 2x2 matrices: basis e11, e12, e22.
    fn upper_triangular<F: Field>(f: F) -> FiniteDimAlgebra<F> {
        let one = f.one();
        let mut t = vec![Vec::new(); 9];
        t[0] = vec![(0, one.clone())]; // e11 e11
        t[1] = vec![(1, one.clone())]; // e11 e12
        t[5] = vec![(1, one.clone())]; // e12 e22
        t[8] = vec![(2, one)]; // e22 e22
        FiniteDimAlgebra::new(f, vec!["e11".into(), "e12".into(), "e22".into()], t).unwrap()
    }

    #[test]
    fn triangular_radical() {
        let a = upper_triangular(Rationals);
        assert!(a.is_associative());
        let j = a.radical();
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&a.basis_vector(1)));
        assert!(a.validate_radical(&j));
        let b = upper_triangular(PrimeField::new(2).unwrap());
        assert_eq!(b.radical().dim(), 1);
        let id = b.identity().unwrap();
        assert_eq!(id, vec![1, 0, 1]);
    }
}
