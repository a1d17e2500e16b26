use std::sync::{Arc, OnceLock};

use crate::algebra::{CategoryAlgebra, CategoryRadical};
use crate::category::FiniteCategory;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{spin, CModule, GroupModule, ModuleAction};

/// The radical of `kC` together with what the resolution engines need from
/// it: two-sided ideal generators of each `J(kAut(x))` and the summands
/// `T_x = kAut(x)/J(kAut(x))` of `A/J`.
#[derive(Debug)]
pub struct RadicalData<F: Field> {
    category: Arc<FiniteCategory>,
    field: F,
    radical: CategoryRadical<F>,
    ideal_generators: Vec<Vec<Vec<F::Elem>>>,
    tops: Vec<OnceLock<CModule<F>>>,
}

impl<F: Field> RadicalData<F> {
    pub fn new(category: Arc<FiniteCategory>, field: F) -> Self {
        let radical = CategoryAlgebra::new(category.clone(), field.clone()).radical();
        let ideal_generators = (0..=category.n()).map(|x| ideal_generators(&field, &category, x, radical.object_radical(x))).collect();
        let tops = (0..=category.n()).map(|_| OnceLock::new()).collect();
        RadicalData { category, field, radical, ideal_generators, tops }
    }

    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn radical(&self) -> &CategoryRadical<F> {
        &self.radical
    }

    /// Elements generating `J(kAut(x))` as a two-sided ideal.
    pub fn ideal_generators(&self, x: usize) -> &[Vec<F::Elem>] {
        &self.ideal_generators[x]
    }

    /// `kAut(x)/J` as the top group module at `x`.
    pub fn top_group_module(&self, x: usize) -> GroupModule<F> {
        let f = &self.field;
        let group = self.category.aut_group(x);
        let j = self.radical.object_radical(x);
        let comp = j.complement_columns();
        let matrices = (0..group.order())
            .map(|g| {
                let cols: Vec<Vec<F::Elem>> = comp
                    .iter()
                    .map(|&c| {
                        let mut v = vec![f.zero(); group.order()];
                        v[group.mul(g, c)] = f.one();
                        j.quotient_coords(&v)
                    })
                    .collect();
                Matrix::from_columns(f.clone(), comp.len(), &cols).expect("shape")
            })
            .collect();
        GroupModule::from_matrices_unchecked(f.clone(), group, comp.len(), matrices)
    }

    /// The summand of `A/J` supported at `x`.
    pub fn top(&self, x: usize) -> &CModule<F> {
        self.tops[x]
            .get_or_init(|| CModule::simple(self.category.clone(), self.field.clone(), x, &self.top_group_module(x)).expect("top module"))
    }

    /// `A/J = ⊕_x T_x`.
    pub fn quotient_module(&self) -> CModule<F> {
        let mut out = CModule::zero(self.category.clone(), self.field.clone());
        for x in 0..=self.category.n() {
            out = out.direct_sum(self.top(x)).expect("same category");
        }
        out
    }

    /// `base + J · space` at `x`, where `space ⊆ M_x` is `Aut(x)`-stable and
    /// `base` already contains the images of all non-invertible morphisms.
    pub fn radical_layer<M: ModuleAction<F> + ?Sized>(&self, m: &M, x: usize, space: &Subspace<F>, base: &Subspace<F>) -> Subspace<F> {
        let mut out = base.clone();
        let gens = &self.ideal_generators[x];
        if gens.is_empty() {
            return out;
        }
        let start = out.dim();
        for u in gens {
            for v in space.basis() {
                out.insert(act_by_element(&self.field, m, x, u, v));
            }
        }
        if out.dim() > start {
            spin(m, x, &mut out);
        }
        out
    }
}

/// `u · v` for `u ∈ kAut(x)` and `v ∈ M_x`.
pub(crate) fn act_by_element<F: Field, M: ModuleAction<F> + ?Sized>(f: &F, m: &M, x: usize, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); m.dim_at(x)];
    for (g, c) in u.iter().enumerate() {
        if !f.is_zero(c) {
            let w = m.act(x, x, g, v);
            f.axpy(&mut out, c, &w, None);
        }
    }
    out
}

/// Greedy: keep an element of `J` only if it is not in the two-sided ideal
/// generated by the earlier ones.
fn ideal_generators<F: Field>(f: &F, category: &FiniteCategory, x: usize, j: &Subspace<F>) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::new();
    if j.is_zero() {
        return out;
    }
    let group = category.aut_group(x);
    let gens = category.aut_generators(x).to_vec();
    let n = group.order();
    let mut ideal = Subspace::new(f.clone(), n);
    for u in j.basis() {
        if ideal.contains(u) {
            continue;
        }
        out.push(u.clone());
        let start = ideal.dim();
        ideal.insert(u.clone());
        let mut i = start;
        while i < ideal.dim() && ideal.dim() < j.dim() {
            let v = ideal.basis()[i].clone();
            for &s in &gens {
                let mut left = vec![f.zero(); n];
                let mut right = vec![f.zero(); n];
                for h in 0..n {
                    left[group.mul(s, h)] = v[h].clone();
                    right[group.mul(h, s)] = v[h].clone();
                }
                ideal.insert(left);
                ideal.insert(right);
            }
            i += 1;
        }
        if ideal.dim() == j.dim() {
            break;
        }
    }
    out
}
