use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::linalg::Matrix;

/// A representation of a finite group: one matrix per element.
#[derive(Clone, Debug)]
pub struct GroupModule<F: Field> {
    field: F,
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Vec<Matrix<F>>,
}

impl<F: Field> GroupModule<F> {
    /// Validates shapes, `ρ(1) = I` and `ρ(gh) = ρ(g)ρ(h)`.
    pub fn new(field: F, group: Arc<FiniteGroup>, dim: usize, matrices: Vec<Matrix<F>>) -> Result<Self> {
        let bad = |m: &str| Error::InvalidModule(m.to_string());
        if matrices.len() != group.order() {
            return Err(bad("need one matrix per group element"));
        }
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(bad("matrix shape does not match the dimension"));
        }
        if !matrices[group.identity()].is_identity() {
            return Err(bad("identity does not act as the identity"));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if matrices[group.mul(g, h)] != matrices[g].mul(&matrices[h])? {
                    return Err(bad("matrices do not respect the group law"));
                }
            }
        }
        Ok(GroupModule { field, group, dim, matrices })
    }

    /// For matrices known to form a representation (e.g. induced from an
    /// action on a quotient); skips the quadratic check.
    pub(crate) fn from_matrices_unchecked(field: F, group: Arc<FiniteGroup>, dim: usize, matrices: Vec<Matrix<F>>) -> Self {
        debug_assert_eq!(matrices.len(), group.order());
        GroupModule { field, group, dim, matrices }
    }

    pub fn trivial(field: F, group: Arc<FiniteGroup>) -> Self {
        let one = Matrix::identity(field.clone(), 1);
        let matrices = vec![one; group.order()];
        GroupModule { field, group, dim: 1, matrices }
    }

    /// `kG` acting on itself by left multiplication.
    pub fn regular(field: F, group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let matrices = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(field.clone(), n, n);
                for h in 0..n {
                    m.set(group.mul(g, h), h, field.one());
                }
                m
            })
            .collect();
        GroupModule { field, group, dim: n, matrices }
    }

    /// A one-dimensional module from the value of a character on each element.
    pub fn character(field: F, group: Arc<FiniteGroup>, values: Vec<F::Elem>) -> Result<Self> {
        let matrices = values.into_iter().map(|v| Matrix::new(field.clone(), 1, 1, vec![v])).collect::<Result<Vec<_>>>()?;
        Self::new(field, group, 1, matrices)
    }

    /// Every homomorphism `G -> k^×`, the trivial one first. Over `Q` only
    /// the values `±1` occur.
    pub fn one_dim_characters(field: F, group: Arc<FiniteGroup>) -> Vec<Self> {
        let units: Vec<F::Elem> = match field.characteristic() {
            0 => vec![field.one(), field.from_i64(-1)],
            p => (1..p as i64).map(|v| field.from_i64(v)).collect(),
        };
        let gens = group.generators();
        let n = group.order();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            if let Some(values) = extend_character(&field, &group, &gens, &choice, &units) {
                out.push(GroupModule::character(field.clone(), group.clone(), values).expect("checked homomorphism"));
            }
            // next assignment of unit values to generators
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < units.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        debug_assert!(out.iter().all(|c| c.dim == 1) && n >= 1);
        out
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn matrix(&self, g: usize) -> &Matrix<F> {
        &self.matrices[g]
    }
    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }
}

/// Propagate generator values along the Cayley graph; `None` on conflict.
fn extend_character<F: Field>(f: &F, group: &FiniteGroup, gens: &[usize], choice: &[usize], units: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = group.order();
    let mut values: Vec<Option<F::Elem>> = vec![None; n];
    values[group.identity()] = Some(f.one());
    let mut queue = vec![group.identity()];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        let vg = values[g].clone().expect("visited");
        for (s, &c) in gens.iter().zip(choice) {
            let h = group.mul(g, *s);
            let vh = f.mul(&vg, &units[c]);
            match &values[h] {
                Some(v) if *v != vh => return None,
                Some(_) => {}
                None => {
                    values[h] = Some(vh);
                    queue.push(h);
                }
            }
        }
    }
    values.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn characters_of_small_groups() {
        let f3 = PrimeField::new(3).unwrap();
        let s3 = Arc::new(FiniteGroup::s3());
        // trivial and sign
        assert_eq!(GroupModule::one_dim_characters(f3, s3.clone()).len(), 2);
        assert_eq!(GroupModule::one_dim_characters(Rationals, s3).len(), 2);
        let f5 = PrimeField::new(5).unwrap();
        let c4 = Arc::new(FiniteGroup::cyclic(4).unwrap());
        assert_eq!(GroupModule::one_dim_characters(f5, c4.clone()).len(), 4);
        // over F_3 the only units are ±1
        assert_eq!(GroupModule::one_dim_characters(f3, c4).len(), 2);
    }

    #[test]
    fn regular_is_a_module() {
        let f2 = PrimeField::new(2).unwrap();
        let s3 = Arc::new(FiniteGroup::s3());
        let r = GroupModule::regular(f2, s3.clone());
        assert!(GroupModule::new(f2, s3, 6, r.matrices().to_vec()).is_ok());
    }
}
