use std::sync::Arc;

use serde::Serialize;

use super::{FiniteDimAlgebra, GroupAlgebra};
use crate::category::FiniteCategory;
use crate::field::{Field, FieldSpec};
use crate::linalg::Subspace;

/// The category algebra `kC`: basis all morphisms in global order, product
/// `f * g = f ∘ g` when composable and `0` otherwise.
#[derive(Clone, Debug)]
pub struct CategoryAlgebra<F: Field> {
    field: F,
    category: Arc<FiniteCategory>,
}

impl<F: Field> CategoryAlgebra<F> {
    pub fn new(category: Arc<FiniteCategory>, field: F) -> Self {
        CategoryAlgebra { field, category }
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }
    pub fn dim(&self) -> usize {
        self.category.total()
    }

    /// `deg(α) = b - a` for `α: a -> b`.
    pub fn degree(&self, global: usize) -> usize {
        let (a, b, _) = self.category.locate(global);
        b - a
    }

    /// The idempotent `e_x`.
    pub fn idempotent(&self, x: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[self.category.global_index(x, x, self.category.identity(x))] = self.field.one();
        v
    }

    pub fn group_algebra(&self, x: usize) -> GroupAlgebra<F> {
        GroupAlgebra::new(self.field.clone(), self.category.aut_group(x))
    }

    /// Structure constants; products of basis morphisms are single basis
    /// morphisms or zero.
    pub fn algebra(&self) -> FiniteDimAlgebra<F> {
        let c = &self.category;
        let n = c.n();
        let total = c.total();
        let mut labels = Vec::with_capacity(total);
        for a in 0..=n {
            for b in 0..=n {
                labels.extend((0..c.hom_size(a, b)).map(|i| c.label(a, b, i)));
            }
        }
        let mut table = vec![Vec::new(); total * total];
        let one = self.field.one();
        for a in 0..=n {
            for b in a..=n {
                for cc in b..=n {
                    for f in 0..c.hom_size(a, b) {
                        for g in 0..c.hom_size(b, cc) {
                            let h = c.compose_idx(a, b, cc, f, g);
                            let (gi, fi) = (c.global_index(b, cc, g), c.global_index(a, b, f));
                            table[gi * total + fi] = vec![(c.global_index(a, cc, h), one.clone())];
                        }
                    }
                }
            }
        }
        FiniteDimAlgebra::new(self.field.clone(), labels, table).expect("valid table")
    }

    /// `J(kC) = span(non-endomorphisms) ⊕ ⊕_x J(kAut(x))`.
    pub fn radical(&self) -> CategoryRadical<F> {
        let objects = (0..=self.category.n()).map(|x| self.group_algebra(x).radical()).collect();
        CategoryRadical { field: self.field.clone(), category: self.category.clone(), objects }
    }

    /// Nilpotent two-sided ideal with semisimple quotient, checked on the
    /// structure-constant algebra.
    pub fn validate_radical(&self, radical: &CategoryRadical<F>) -> bool {
        self.algebra().validate_radical(&radical.subspace())
    }
}

/// The radical of a category algebra, stored per object.
#[derive(Clone, Debug)]
pub struct CategoryRadical<F: Field> {
    field: F,
    category: Arc<FiniteCategory>,
    /// `J(kAut(x))` in the coordinates of `hom(x, x)`.
    objects: Vec<Subspace<F>>,
}

impl<F: Field> CategoryRadical<F> {
    pub fn object_radical(&self, x: usize) -> &Subspace<F> {
        &self.objects[x]
    }
    pub fn non_endomorphisms(&self) -> usize {
        let c = &self.category;
        c.total() - (0..=c.n()).map(|x| c.hom_size(x, x)).sum::<usize>()
    }
    pub fn dim(&self) -> usize {
        self.non_endomorphisms() + self.objects.iter().map(|s| s.dim()).sum::<usize>()
    }
    /// Objects whose automorphism group algebra is semisimple.
    pub fn semisimple_at(&self, x: usize) -> bool {
        self.objects[x].is_zero()
    }

    /// The radical as a subspace of `kC`.
    pub fn subspace(&self) -> Subspace<F> {
        let c = &self.category;
        let f = &self.field;
        let total = c.total();
        let mut s = Subspace::new(f.clone(), total);
        for a in 0..=c.n() {
            for b in a..=c.n() {
                if a == b {
                    for v in self.objects[a].basis() {
                        let mut w = vec![f.zero(); total];
                        for (i, e) in v.iter().enumerate() {
                            w[c.global_index(a, a, i)] = e.clone();
                        }
                        s.insert(w);
                    }
                } else {
                    for i in 0..c.hom_size(a, b) {
                        s.insert(s.unit(c.global_index(a, b, i)));
                    }
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectCriterion {
    pub object: usize,
    pub aut_order: u128,
    /// Does the characteristic divide `|Aut(x)|`?
    pub divisible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// Every automorphism group order is invertible in the field.
    pub holds: bool,
    pub objects: Vec<ObjectCriterion>,
}

/// Is `|Aut(x)|` invertible in `k` for every object?
pub fn invertibility_criterion(category: &FiniteCategory, field: FieldSpec) -> CriterionReport {
    let objects: Vec<ObjectCriterion> = (0..=category.n())
        .map(|x| {
            let aut_order = category.hom_size(x, x) as u128;
            ObjectCriterion { object: x, aut_order, divisible: field.divides(aut_order) }
        })
        .collect();
    CriterionReport { holds: objects.iter().all(|o| !o.divisible), objects }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Species;
    use crate::field::{PrimeField, Rationals};

    fn cat(s: Species, n: usize) -> Arc<FiniteCategory> {
        Arc::new(FiniteCategory::build(s, n).unwrap())
    }

    #[test]
    fn dimensions_and_idempotents() {
        let fi = CategoryAlgebra::new(cat(Species::Fi, 2), Rationals);
        assert_eq!(fi.dim(), 8);
        let a = fi.algebra();
        assert!(a.is_associative());
        let e0e1 = a.mul(&fi.idempotent(0), &fi.idempotent(1));
        assert!(e0e1.iter().all(|x| Rationals.is_zero(x)));
        let one: Vec<_> = (0..8).map(|i| (0..3).fold(Rationals.zero(), |s, x| Rationals.add(&s, &fi.idempotent(x)[i]))).collect();
        assert_eq!(a.identity().unwrap(), one);
        assert_eq!(CategoryAlgebra::new(cat(Species::Oi, 2), Rationals).dim(), 7);
    }

    #[test]
    fn radical_examples() {
        let f2 = PrimeField::new(2).unwrap();
        let f3 = PrimeField::new(3).unwrap();
        let oi = CategoryAlgebra::new(cat(Species::Oi, 2), f2);
        assert_eq!(oi.radical().dim(), 4);
        let fi3 = CategoryAlgebra::new(cat(Species::Fi, 2), f3);
        assert_eq!(fi3.radical().dim(), 4);
        let fi2 = CategoryAlgebra::new(cat(Species::Fi, 2), f2);
        let j = fi2.radical();
        assert_eq!(j.dim(), 5);
        assert!(fi2.validate_radical(&j));
    }

    #[test]
    fn criterion_examples() {
        use crate::group::FiniteGroup;
        assert!(!invertibility_criterion(&cat(Species::Fi, 2), FieldSpec::PrimeField { p: 2 }).holds);
        let c2 = Arc::new(FiniteGroup::cyclic(2).unwrap());
        assert!(invertibility_criterion(&cat(Species::OiG(c2), 2), FieldSpec::PrimeField { p: 3 }).holds);
        assert!(invertibility_criterion(&cat(Species::Vi(2), 2), FieldSpec::PrimeField { p: 5 }).holds);
    }
}
