use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::action::{generated, ModuleAction};
use super::cmodule::{quotient_of, CModule};
use super::free::FreeModule;
use crate::category::FiniteCategory;
use crate::field::Field;

/// Shape of a random module: a quotient of a small free module by the
/// submodule generated by a few random vectors.
#[derive(Clone, Copy, Debug)]
pub struct RandomModuleSpec {
    pub max_generators: usize,
    pub max_relations: usize,
    /// Generators sit at objects `<=` this level (default: all objects).
    pub max_generator_object: Option<usize>,
    /// Redraw shapes whose total dimension exceeds this (a bounded number
    /// of times).
    pub max_total_dim: usize,
}

impl Default for RandomModuleSpec {
    fn default() -> Self {
        RandomModuleSpec { max_generators: 2, max_relations: 2, max_generator_object: None, max_total_dim: 400 }
    }
}

/// A random finitely presented module `F / R`, never zero.
pub fn random_module<F: Field, R: Rng + ?Sized>(
    category: &Arc<FiniteCategory>,
    field: &F,
    spec: &RandomModuleSpec,
    rng: &mut R,
) -> CModule<F> {
    let n = category.n();
    let top = spec.max_generator_object.unwrap_or(n).min(n);
    let mut attempts = 0;
    let free = loop {
        attempts += 1;
        let k = rng.gen_range(1..=spec.max_generators.max(1));
        let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=top)).collect();
        let free = FreeModule::new(category.clone(), field.clone(), gens);
        if free.total_dim() <= spec.max_total_dim || attempts >= 64 {
            break free;
        }
    };
    // Relations sit strictly above the lowest generator, which therefore
    // survives: the module is never zero.
    let lowest = *free.generators().iter().min().expect("at least one generator");
    let candidates: Vec<usize> = (lowest + 1..=n).filter(|&x| free.dim_at(x) > 0).collect();
    let mut seeds: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); n + 1];
    let relations = if candidates.is_empty() { 0 } else { rng.gen_range(0..=spec.max_relations) };
    for _ in 0..relations {
        let x = candidates[rng.gen_range(0..candidates.len())];
        let v: Vec<F::Elem> = (0..free.dim_at(x)).map(|_| field.random(rng)).collect();
        seeds[x].push(v);
    }
    let sub = generated(&free, &seeds);
    quotient_of(&free, &sub).expect("generated subspaces form a submodule")
}

/// [`random_module`] driven by a ChaCha8 generator seeded with `seed`.
pub fn random_module_seeded<F: Field>(category: &Arc<FiniteCategory>, field: &F, spec: &RandomModuleSpec, seed: u64) -> CModule<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_module(category, field, spec, &mut rng)
}
