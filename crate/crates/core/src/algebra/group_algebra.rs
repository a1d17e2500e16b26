use std::sync::Arc;

use super::radical::{radical_chain, TraceOracle};
use super::FiniteDimAlgebra;
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::linalg::Subspace;

/// The group algebra `kG`, basis the group elements in table order.
#[derive(Clone, Debug)]
pub struct GroupAlgebra<F: Field> {
    field: F,
    group: Arc<FiniteGroup>,
}

impl<F: Field> GroupAlgebra<F> {
    pub fn new(field: F, group: Arc<FiniteGroup>) -> Self {
        GroupAlgebra { field, group }
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (g, ag) in a.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
            for (h, bh) in b.iter().enumerate().filter(|(_, x)| !f.is_zero(x)) {
                let k = self.group.mul(g, h);
                out[k] = f.add(&out[k], &f.mul(ag, bh));
            }
        }
        out
    }

    /// The same algebra given by structure constants.
    pub fn algebra(&self) -> FiniteDimAlgebra<F> {
        let n = self.dim();
        let one = self.field.one();
        let table = (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).map(|(g, h)| vec![(self.group.mul(g, h), one.clone())]).collect();
        FiniteDimAlgebra::new(self.field.clone(), self.group.labels.clone(), table).expect("valid table")
    }

    /// `J(kG)`, computed directly on group elements (no `|G| x |G|` matrix
    /// powers).
    pub fn radical(&self) -> Subspace<F> {
        radical_chain(self)
    }

    /// `J(kG)` through the structure-constant algebra; slower, used as an
    /// independent route.
    pub fn radical_generic(&self) -> Subspace<F> {
        self.algebra().radical()
    }
}

impl<F: Field> TraceOracle<F> for GroupAlgebra<F> {
    fn field(&self) -> &F {
        &self.field
    }
    fn dim(&self) -> usize {
        self.group.order()
    }
    fn trace_vector(&self) -> Vec<F::Elem> {
        let mut t = vec![self.field.zero(); self.dim()];
        t[self.group.identity()] = self.field.from_i64(self.dim() as i64);
        t
    }
    fn functional_matrix(&self, u: &[Vec<F::Elem>], w: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        // w(u g) = Σ_t u[t] w[t g]
        let f = &self.field;
        let n = self.dim();
        u.iter()
            .map(|uk| {
                let support: Vec<usize> = (0..n).filter(|&t| !f.is_zero(&uk[t])).collect();
                (0..n).map(|g| support.iter().fold(f.zero(), |acc, &t| f.add(&acc, &f.mul(&uk[t], &w[self.group.mul(t, g)])))).collect()
            })
            .collect()
    }
    fn power_trace(&self, u: &[F::Elem], i: u32, modulus: u64) -> u64 {
        let n = self.dim();
        let p = self.field.characteristic();
        let g = &self.group;
        let mul = |a: &[u64], b: &[u64]| {
            let mut c = vec![0u64; n];
            for (x, &ax) in a.iter().enumerate().filter(|(_, v)| **v != 0) {
                for (y, &by) in b.iter().enumerate().filter(|(_, v)| **v != 0) {
                    let z = g.mul(x, y);
                    c[z] = (c[z] + ax * by) % modulus;
                }
            }
            c
        };
        let mut x: Vec<u64> = u.iter().map(|e| self.field.to_residue(e).expect("prime field")).collect();
        // x^{p^i} as i successive p-th powers
        for _ in 0..i {
            let mut acc: Option<Vec<u64>> = None;
            let mut base = x.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = Some(match acc {
                        None => base.clone(),
                        Some(a) => mul(&a, &base),
                    });
                }
                e >>= 1;
                if e > 0 {
                    base = mul(&base, &base);
                }
            }
            x = acc.expect("p >= 2");
        }
        (n as u64 % modulus) * x[g.identity()] % modulus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ga(p: u32, g: FiniteGroup) -> GroupAlgebra<PrimeField> {
        GroupAlgebra::new(PrimeField::new(p).unwrap(), Arc::new(g))
    }

    #[test]
    fn s2_radicals() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(ga(3, c2.clone()).radical().dim(), 0);
        let j = ga(2, c2).radical();
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&[1, 1]));
    }

    #[test]
    fn s3_mod_3() {
        let a = ga(3, FiniteGroup::s3());
        let j = a.radical();
        assert_eq!(j.dim(), 4);
        assert!(a.algebra().validate_radical(&j));
        // F_2 S_3 = F_2 C_2 x M_2(F_2)
        assert_eq!(ga(2, FiniteGroup::s3()).radical().dim(), 1);
    }

    #[test]
    fn rational_group_algebras_are_semisimple() {
        let a = GroupAlgebra::new(Rationals, Arc::new(FiniteGroup::s3()));
        assert!(a.radical().is_zero());
    }
}
