use std::sync::Arc;

use eicat_core::category::{FiniteCategory, Species};
use eicat_core::field::{Field, PrimeField, Rationals};
use eicat_core::module::{generating_degree, h0, module_hom_space, random_module, CModule, GroupModule, ModuleAction, RandomModuleSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cat(s: Species, n: usize) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::build(s, n).unwrap())
}

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

#[test]
fn representable_dims() {
    let oi = cat(Species::Oi, 2);
    assert_eq!(CModule::representable(oi.clone(), Rationals, 0).dims(), vec![1, 1, 1]);
    let fi = cat(Species::Fi, 2);
    assert_eq!(CModule::representable(fi.clone(), Rationals, 1).dims(), vec![0, 1, 2]);
    assert_eq!(CModule::representable(fi.clone(), Rationals, 2).dims(), vec![0, 0, 2]);
    for x in 0..=2 {
        assert!(CModule::representable(fi.clone(), f3(), x).is_functorial());
    }
}

#[test]
fn induced_modules() {
    let fi = cat(Species::Fi, 2);
    let trivial = GroupModule::trivial(f3(), fi.aut_group(1));
    let m = CModule::induced(fi.clone(), f3(), 1, &trivial).unwrap();
    assert_eq!(m.dims(), vec![0, 1, 2]);
    assert!(m.is_functorial());
    let chars = GroupModule::one_dim_characters(f3(), fi.aut_group(2));
    let sign = &chars[1];
    assert_eq!(sign.matrix(1).get(0, 0), &2);
    let s = CModule::induced(fi.clone(), f3(), 2, sign).unwrap();
    assert_eq!(s.dims(), vec![0, 0, 1]);
    assert!(s.is_functorial());
    // induced from the regular module is the representable
    let reg = GroupModule::regular(f3(), fi.aut_group(1));
    let ind = CModule::induced(fi.clone(), f3(), 1, &reg).unwrap();
    let rep = CModule::representable(fi.clone(), f3(), 1);
    assert_eq!(ind.dims(), rep.dims());
    let homs = module_hom_space(&ind, &rep).unwrap();
    assert!(homs.iter().any(|h| h.is_injective() && h.is_surjective()));
}

#[test]
fn h0_examples() {
    let oi = cat(Species::Oi, 2);
    let p0 = CModule::representable(oi.clone(), Rationals, 0);
    assert_eq!(h0(&p0).dims(), vec![1, 0, 0]);
    let fi = cat(Species::Fi, 2);
    let p2 = CModule::representable(fi.clone(), Rationals, 2);
    assert_eq!(h0(&p2).dims(), vec![0, 0, 2]);
    let s1 = CModule::trivial_simple(fi.clone(), Rationals, 1);
    assert_eq!(h0(&s1).dims(), s1.dims());
    assert_eq!(generating_degree(&CModule::zero(fi.clone(), Rationals)), -1);
    let sum = CModule::representable(fi.clone(), Rationals, 0).direct_sum(&p2).unwrap();
    assert_eq!(generating_degree(&sum), 2);
}

#[test]
fn restriction_lift_shift() {
    let fi3 = cat(Species::Fi, 3);
    let p3 = CModule::representable(fi3.clone(), Rationals, 3);
    assert!(p3.restrict(2).unwrap().is_zero());
    let oi3 = cat(Species::Oi, 3);
    let s = CModule::representable(oi3.clone(), Rationals, 1).shift().unwrap();
    assert_eq!(s.dims(), vec![1, 2, 3]);
    assert!(s.is_functorial());
    let s0 = CModule::representable(oi3.clone(), Rationals, 0).shift().unwrap();
    assert_eq!(s0.dims(), vec![1, 1, 1]);
    let w = CModule::trivial_simple(cat(Species::Oi, 1), Rationals, 0);
    let lifted = w.lift_to(&oi3).unwrap();
    assert_eq!(lifted.dims(), vec![1, 0, 0, 0]);
    assert!(lifted.is_functorial());
    assert_eq!(lifted.restrict(1).unwrap().dims(), w.dims());
}

#[test]
fn hom_spaces() {
    let oi = cat(Species::Oi, 2);
    let p0 = CModule::representable(oi.clone(), Rationals, 0);
    assert_eq!(module_hom_space(&p0, &p0).unwrap().len(), 1);
    let s0 = CModule::trivial_simple(oi.clone(), Rationals, 0);
    let s1 = CModule::trivial_simple(oi.clone(), Rationals, 1);
    assert!(module_hom_space(&s0, &s1).unwrap().is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let fi = cat(Species::Fi, 2);
    for _ in 0..5 {
        let v = random_module(&fi, &f3(), &RandomModuleSpec::default(), &mut rng);
        assert!(v.is_functorial());
        for x in 0..=2 {
            let p = CModule::representable(fi.clone(), f3(), x);
            assert_eq!(module_hom_space(&p, &v).unwrap().len(), v.dim_at(x));
        }
    }
}

#[test]
fn submodule_generated_in_degree_one() {
    let oi = cat(Species::Oi, 2);
    let p0 = CModule::representable(oi.clone(), Rationals, 0);
    let seeds = vec![vec![], vec![vec![Rationals.one()]], vec![]];
    let sub = p0.submodule_generated(&seeds);
    assert_eq!(sub.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![0, 1, 1]);
    let q = p0.quotient(&sub).unwrap();
    assert_eq!(q.dims(), vec![1, 0, 0]);
}

#[test]
fn json_round_trip() {
    let fi = cat(Species::Fi, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let v = random_module(&fi, &f3(), &RandomModuleSpec::default(), &mut rng);
    let back = CModule::from_json(fi.clone(), f3(), &v.to_json()).unwrap();
    assert_eq!(back.dims(), v.dims());
    for a in 0..=2 {
        for b in a..=2 {
            for i in 0..fi.hom_size(a, b) {
                assert_eq!(back.matrix(a, b, i), v.matrix(a, b, i));
            }
        }
    }
}
