use std::sync::Arc;

use super::action::ModuleAction;
use crate::category::FiniteCategory;
use crate::field::Field;

/// `⊕_g kC e_{x_g}`: one representable summand per generator.
///
/// The value at `y` has basis `(g, β)` for `β ∈ hom(x_g, y)`, ordered by
/// generator and then canonically; morphisms act by postcomposition.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    category: Arc<FiniteCategory>,
    field: F,
    gens: Vec<usize>,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

impl<F: Field> FreeModule<F> {
    /// `gens[g]` is the object at which generator `g` sits.
    pub fn new(category: Arc<FiniteCategory>, field: F, gens: Vec<usize>) -> Self {
        let n = category.n();
        let mut offsets = vec![vec![0; gens.len()]; n + 1];
        let mut dims = vec![0; n + 1];
        for y in 0..=n {
            for (g, &x) in gens.iter().enumerate() {
                offsets[y][g] = dims[y];
                if x <= y {
                    dims[y] += category.hom_size(x, y);
                }
            }
        }
        FreeModule { category, field, gens, offsets, dims }
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Generators per object.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.category.n() + 1];
        for &x in &self.gens {
            c[x] += 1;
        }
        c
    }

    /// Coordinate of `(g, β)` in the value at `y`.
    pub fn coord(&self, y: usize, g: usize, beta: usize) -> usize {
        self.offsets[y][g] + beta
    }

    /// The generator `e_g` as a vector at its object.
    pub fn generator_vector(&self, g: usize) -> Vec<F::Elem> {
        let x = self.gens[g];
        let mut v = vec![self.field.zero(); self.dims[x]];
        v[self.coord(x, g, self.category.identity(x))] = self.field.one();
        v
    }

    /// For a coordinate at `y`, the pair `(g, β)`.
    pub fn decompose(&self, y: usize, c: usize) -> (usize, usize) {
        let g = match self.offsets[y].binary_search(&c) {
            Ok(mut g) => {
                // several empty summands may share an offset; take the last
                while g + 1 < self.gens.len() && self.offsets[y][g + 1] == c {
                    g += 1;
                }
                g
            }
            Err(g) => g - 1,
        };
        (g, c - self.offsets[y][g])
    }
}

impl<F: Field> ModuleAction<F> for FreeModule<F> {
    fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }
    fn field(&self) -> &F {
        &self.field
    }
    fn dim_at(&self, x: usize) -> usize {
        self.dims[x]
    }
    fn act(&self, a: usize, b: usize, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dims[b]];
        for (g, &x) in self.gens.iter().enumerate() {
            if x > a {
                continue;
            }
            let (src, dst) = (self.offsets[a][g], self.offsets[b][g]);
            for beta in 0..self.category.hom_size(x, a) {
                let c = &v[src + beta];
                if !f.is_zero(c) {
                    let k = dst + self.category.compose_idx(x, a, b, beta, i);
                    out[k] = f.add(&out[k], c);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Species;
    use crate::field::PrimeField;

    #[test]
    fn regular_module_dims() {
        let c = Arc::new(FiniteCategory::build(Species::Fi, 2).unwrap());
        let f = PrimeField::new(3).unwrap();
        let free = FreeModule::new(c.clone(), f, vec![0, 1, 2]);
        assert_eq!(free.dims(), vec![1, 2, 5]);
        assert_eq!(free.total_dim(), c.total());
        for y in 0..=2 {
            for k in 0..free.dim_at(y) {
                let (g, b) = free.decompose(y, k);
                assert_eq!(free.coord(y, g, b), k);
            }
        }
    }
}
