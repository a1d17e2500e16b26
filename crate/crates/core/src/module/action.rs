use std::sync::Arc;

use crate::category::FiniteCategory;
use crate::field::Field;
use crate::linalg::Subspace;

/// Anything that behaves as a representation of a truncated category: a
/// vector space per object and a linear map per morphism.
pub trait ModuleAction<F: Field> {
    fn category(&self) -> &Arc<FiniteCategory>;
    fn field(&self) -> &F;
    fn dim_at(&self, x: usize) -> usize;
    /// `V_α(v)` for `α = hom(a, b)[i]` and `v ∈ V_a`.
    fn act(&self, a: usize, b: usize, i: usize, v: &[F::Elem]) -> Vec<F::Elem>;

    fn dims(&self) -> Vec<usize> {
        (0..=self.category().n()).map(|x| self.dim_at(x)).collect()
    }
    fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }
    fn is_zero(&self) -> bool {
        self.dims().iter().all(|&d| d == 0)
    }
}

/// Close a subspace of `V_x` under `Aut(x)`.
pub fn spin<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, x: usize, s: &mut Subspace<F>) {
    spin_from(m, x, s, 0)
}

/// Like [`spin`] when the rows before `start` already have their images inside.
pub fn spin_from<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, x: usize, s: &mut Subspace<F>, start: usize) {
    let cat = m.category().clone();
    let gens = cat.aut_generators(x);
    let mut i = start;
    while i < s.dim() && !s.is_whole() {
        let v = s.basis()[i].clone();
        for &g in gens {
            s.insert(m.act(x, x, g, &v));
        }
        i += 1;
    }
}

/// The `Aut(x)`-stable span of the images in `V_x` of `lower ⊆ V_{x-1}`
/// under all morphisms `x-1 -> x`.
pub fn lower_image<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, x: usize, lower: &[Vec<F::Elem>]) -> Subspace<F> {
    let mut s = Subspace::new(m.field().clone(), m.dim_at(x));
    if x == 0 {
        return s;
    }
    for r in m.category().lower_generators(x) {
        for v in lower {
            s.insert(m.act(x - 1, x, r, v));
            if s.is_whole() {
                return s;
            }
        }
    }
    spin(m, x, &mut s);
    s
}

/// Per object, the span of all images from strictly smaller objects.
pub fn lower_images<F: Field, M: ModuleAction<F> + ?Sized>(m: &M) -> Vec<Subspace<F>> {
    let n = m.category().n();
    (0..=n)
        .map(|x| {
            if x == 0 {
                return Subspace::new(m.field().clone(), m.dim_at(0));
            }
            let d = m.dim_at(x - 1);
            let basis: Vec<Vec<F::Elem>> = (0..d).map(|i| unit(m.field(), d, i)).collect();
            lower_image(m, x, &basis)
        })
        .collect()
}

/// The submodule generated by `seeds[x] ⊆ V_x`.
pub fn generated<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, seeds: &[Vec<Vec<F::Elem>>]) -> Vec<Subspace<F>> {
    let n = m.category().n();
    let mut out: Vec<Subspace<F>> = Vec::with_capacity(n + 1);
    for x in 0..=n {
        let mut s = if x == 0 { Subspace::new(m.field().clone(), m.dim_at(0)) } else { lower_image(m, x, out[x - 1].basis()) };
        let start = s.dim();
        for v in seeds.get(x).into_iter().flatten() {
            s.insert(v.clone());
        }
        spin_from(m, x, &mut s, start);
        out.push(s);
    }
    out
}

/// Is the per-object family of subspaces closed under the action?
pub fn is_submodule<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, spaces: &[Subspace<F>]) -> bool {
    let cat = m.category().clone();
    let n = cat.n();
    for x in 0..=n {
        for v in spaces[x].basis() {
            for &g in cat.aut_generators(x) {
                if !spaces[x].contains(&m.act(x, x, g, v)) {
                    return false;
                }
            }
            if x < n {
                for r in cat.lower_generators(x + 1) {
                    if !spaces[x + 1].contains(&m.act(x, x + 1, r, v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub(crate) fn unit<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}
