use std::sync::Arc;

use eicat_core::category::{FiniteCategory, Species};
use eicat_core::field::{Field, PrimeField, Rationals};
use eicat_core::module::{generating_degree, h0_dims, random_module, CModule, FreeModule, GroupModule, ModuleAction, RandomModuleSpec};
use eicat_core::resolution::{
    ext_dims, free_resolution, global_dimension, is_projective, minimal_resolution, projective_cover, projective_dimension,
    verify_genetic_shift, Predicted, ProjectiveDimension, RadicalData, Resolver,
};
use eicat_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cat(s: Species, n: usize) -> Arc<FiniteCategory> {
    Arc::new(FiniteCategory::build(s, n).unwrap())
}

fn fp(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn regular<F: Field>(c: &Arc<FiniteCategory>, f: F) -> CModule<F> {
    CModule::materialize(&FreeModule::new(c.clone(), f, (0..=c.n()).collect()))
}

#[test]
fn free_resolution_examples() {
    let fi = cat(Species::Fi, 2);
    let a = regular(&fi, fp(3));
    let r = free_resolution(&a, 4).unwrap();
    assert_eq!(r.ranks(), vec![1]);
    assert_eq!(r.length(), Some(0));

    let zero = CModule::zero(fi.clone(), fp(3));
    let r = free_resolution(&zero, 4).unwrap();
    assert!(r.ranks().is_empty());
    assert_eq!(r.length(), Some(-1));

    let oi = cat(Species::Oi, 1);
    let s0 = CModule::trivial_simple(oi.clone(), Rationals, 0);
    let r = free_resolution(&s0, 4).unwrap();
    assert_eq!(r.ranks(), vec![1, 1]);
    assert_eq!(r.length(), Some(1));
}

/// `d_{s-1} ∘ d_s = 0` and the augmentation is onto.
#[test]
fn resolutions_are_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let fi = cat(Species::Fi, 2);
    for p in [2, 3] {
        for _ in 0..4 {
            let v = random_module(&fi, &fp(p), &RandomModuleSpec::default(), &mut rng);
            let r = free_resolution(&v, 4).unwrap();
            for s in 1..r.terms().len() {
                let term = &r.terms()[s];
                for (h, &x) in term.generators().iter().enumerate() {
                    let image = &r.images(s)[h];
                    let back = if s == 1 { r.apply(0, &v, x, image) } else { r.apply(s - 1, &r.terms()[s - 2], x, image) };
                    assert!(back.iter().all(|e| *e == 0));
                }
            }
        }
    }
}

#[test]
fn ext_examples() {
    let f3 = fp(3);
    let fi = cat(Species::Fi, 2);
    let rad = RadicalData::new(fi.clone(), f3);
    let t = rad.quotient_module();
    let e = ext_dims(&regular(&fi, f3), &t, 3).unwrap();
    assert!(e[0] > 0 && e[1..].iter().all(|&d| d == 0));

    let oi2 = cat(Species::Oi, 2);
    let s0 = CModule::trivial_simple(oi2.clone(), Rationals, 0);
    assert_eq!(ext_dims(&s0, &s0, 0).unwrap(), vec![1]);

    let oi1 = cat(Species::Oi, 1);
    let s0 = CModule::trivial_simple(oi1.clone(), Rationals, 0);
    let s1 = CModule::trivial_simple(oi1.clone(), Rationals, 1);
    assert_eq!(ext_dims(&s0, &s1, 2).unwrap(), vec![0, 1, 0]);
}

#[test]
fn projective_dimension_examples() {
    let oi = cat(Species::Oi, 2);
    for x in 0..=2 {
        let p = CModule::representable(oi.clone(), fp(2), x);
        assert_eq!(projective_dimension(&p, 6).unwrap(), ProjectiveDimension::Exact(0));
    }
    assert_eq!(projective_dimension(&CModule::trivial_simple(oi.clone(), fp(2), 0), 6).unwrap(), ProjectiveDimension::Exact(2));
    assert_eq!(projective_dimension(&CModule::trivial_simple(oi.clone(), fp(3), 0), 6).unwrap(), ProjectiveDimension::Exact(2));
    assert_eq!(projective_dimension(&CModule::trivial_simple(oi.clone(), Rationals, 0), 6).unwrap(), ProjectiveDimension::Exact(2));
    assert_eq!(projective_dimension(&CModule::zero(oi.clone(), Rationals), 6).unwrap(), ProjectiveDimension::Exact(-1));

    let fi = cat(Species::Fi, 2);
    let s0 = CModule::trivial_simple(fi.clone(), fp(2), 0);
    assert_eq!(projective_dimension(&s0, 6).unwrap(), ProjectiveDimension::ExceedsBound(6));
}

#[test]
fn global_dimension_examples() {
    let oi3 = cat(Species::Oi, 3);
    assert_eq!(global_dimension(oi3.clone(), Rationals, 7).unwrap().computed, ProjectiveDimension::Exact(3));
    assert_eq!(global_dimension(oi3.clone(), fp(2), 7).unwrap().computed, ProjectiveDimension::Exact(3));
    assert_eq!(global_dimension(oi3.clone(), fp(3), 7).unwrap().computed, ProjectiveDimension::Exact(3));

    let fi2 = cat(Species::Fi, 2);
    let r = global_dimension(fi2.clone(), fp(3), 6).unwrap();
    assert_eq!((r.predicted, r.computed, r.agrees), (Predicted::Finite(2), ProjectiveDimension::Exact(2), true));
    let r = global_dimension(fi2, fp(2), 6).unwrap();
    assert_eq!((r.predicted, r.computed, r.agrees), (Predicted::Infinite, ProjectiveDimension::ExceedsBound(6), true));
    assert!(!r.criterion.holds);

    let vi2 = cat(Species::vi(2).unwrap(), 2);
    assert_eq!(global_dimension(vi2.clone(), fp(5), 6).unwrap().computed, ProjectiveDimension::Exact(2));
    let r = global_dimension(vi2, fp(3), 6).unwrap();
    assert_eq!(r.predicted, Predicted::Infinite);
    assert!(r.agrees);

    // k C_0 = k
    let r = global_dimension(cat(Species::Fi, 0), fp(2), 4).unwrap();
    assert_eq!(r.computed, ProjectiveDimension::Exact(0));
}

#[test]
fn projective_cover_examples() {
    let f3 = fp(3);
    let fi = cat(Species::Fi, 2);
    let p1 = CModule::representable(fi.clone(), f3, 1);
    let cover = projective_cover(&p1).unwrap();
    assert_eq!(cover.top_dims(), vec![0, 1, 0]);
    assert_eq!(cover.module.dims(), p1.dims());
    assert!(cover.surjection.is_injective() && cover.surjection.is_surjective());

    let oi = cat(Species::Oi, 2);
    let s0 = CModule::trivial_simple(oi.clone(), Rationals, 0);
    let cover = projective_cover(&s0).unwrap();
    assert_eq!(cover.module.dims(), vec![1, 1, 1]);
    assert!(cover.surjection.is_homomorphism(&cover.module, &s0));
    assert!(cover.surjection.is_surjective());

    let sign = GroupModule::one_dim_characters(f3, fi.aut_group(2)).remove(1);
    let s2 = CModule::simple(fi.clone(), f3, 2, &sign).unwrap();
    let cover = projective_cover(&s2).unwrap();
    assert_eq!(cover.module.dims(), vec![0, 0, 1]);

    // the cover induces an isomorphism on H_0
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let v = random_module(&fi, &f3, &RandomModuleSpec::default(), &mut rng);
        let cover = projective_cover(&v).unwrap();
        assert!(cover.surjection.is_homomorphism(&cover.module, &v));
        assert!(cover.surjection.is_surjective());
        assert_eq!(h0_dims(&cover.module), h0_dims(&v));
    }

    let s0 = CModule::trivial_simple(fi.clone(), fp(2), 0);
    assert!(matches!(projective_cover(&s0), Err(Error::RegimeViolation { object: 2, order: 2, characteristic: 2 })));
}

#[test]
fn minimal_resolution_examples() {
    let oi = cat(Species::Oi, 2);
    let s0 = CModule::trivial_simple(oi.clone(), Rationals, 0);
    let m = minimal_resolution(&s0, 6).unwrap();
    assert_eq!(m.length(), 2);
    assert_eq!(m.betti().support(), vec![(0, 0), (1, 1), (2, 2)]);
    assert_eq!(m.betti().to_csv(3), "s,0,1,2\n0,1,0,0\n1,0,1,0\n2,0,0,1\n");
    assert_eq!(m.homological_degrees(3), vec![0, 1, 2, -1]);
    assert!(matches!(minimal_resolution(&s0, 1), Err(Error::LengthExceeded(1))));

    let oi1 = cat(Species::Oi, 1);
    let m = minimal_resolution(&CModule::trivial_simple(oi1, Rationals, 0), 6).unwrap();
    assert_eq!(m.length(), 1);

    let p = CModule::representable(oi.clone(), Rationals, 1);
    let m = minimal_resolution(&p, 6).unwrap();
    assert_eq!(m.length(), 0);
    assert_eq!(m.homological_degrees(2), vec![1, -1, -1]);

    // S_1 over FI_3 in characteristic 5: linear, length 2
    let fi3 = cat(Species::Fi, 3);
    let s1 = CModule::trivial_simple(fi3, fp(5), 1);
    let m = minimal_resolution(&s1, 6).unwrap();
    assert_eq!(m.length(), 2);
    assert!(m.betti().support().iter().all(|&(s, x)| x == s + 1));
}

#[test]
fn homological_degree_zero_is_generating_degree() {
    let fi = cat(Species::Fi, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..5 {
        let v = random_module(&fi, &fp(5), &RandomModuleSpec::default(), &mut rng);
        let m = minimal_resolution(&v, 6).unwrap();
        assert_eq!(m.homological_degrees(0)[0], generating_degree(&v));
    }
}

#[test]
fn projectivity_examples() {
    let oi3 = cat(Species::Oi, 3);
    assert!(is_projective(&CModule::representable(oi3.clone(), fp(2), 1)).unwrap());
    assert!(is_projective(&CModule::representable(oi3.clone(), fp(2), 1).restrict(2).unwrap()).unwrap());
    let oi1 = cat(Species::Oi, 1);
    assert!(!is_projective(&CModule::trivial_simple(oi1, fp(2), 0)).unwrap());
}

#[test]
fn genetic_shift_examples() {
    let oi3 = cat(Species::Oi, 3);
    let r = verify_genetic_shift(oi3.clone(), Rationals, 1).unwrap();
    assert_eq!(r.dims, vec![1, 2, 3]);
    assert_eq!(r.support, vec![0, 1]);
    assert_eq!(r.h0_dims, vec![1, 1, 0]);
    assert!(r.projective && r.pass);

    let fi3 = cat(Species::Fi, 3);
    let r = verify_genetic_shift(fi3, fp(5), 1).unwrap();
    assert_eq!(r.support, vec![0, 1]);
    assert!(r.pass);

    let r = verify_genetic_shift(oi3, Rationals, 0).unwrap();
    assert_eq!(r.support, vec![0]);
    assert!(r.pass);
}

/// Trimmed and untrimmed resolutions compute the same `Ext`.
#[test]
fn trimming_preserves_ext() {
    let fi = cat(Species::Fi, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for p in [3, 5] {
        let rad = RadicalData::new(fi.clone(), fp(p));
        let t = rad.quotient_module();
        for _ in 0..4 {
            let v = random_module(&fi, &fp(p), &RandomModuleSpec::default(), &mut rng);
            let mut a = Resolver::new(&v, &rad);
            let mut b = Resolver::untrimmed(&v, &rad);
            for _ in 0..5 {
                a.step().unwrap();
                b.step().unwrap();
            }
            let (ea, eb) = (a.resolution().ext_dims(&t), b.resolution().ext_dims(&t));
            let k = ea.len().min(eb.len());
            assert_eq!(ea[..k], eb[..k]);
            assert!(b.resolution().is_free());
        }
    }
}
