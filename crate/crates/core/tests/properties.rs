use std::sync::Arc;

use eicat_core::algebra::GroupAlgebra;
use eicat_core::category::{FiniteCategory, Species};
use eicat_core::field::{Field, PrimeField, Rationals};
use eicat_core::group::FiniteGroup;
use eicat_core::linalg::Matrix;
use eicat_core::module::{h0_dims, random_module_seeded, ModuleAction, RandomModuleSpec};
use eicat_core::resolution::{ext_dims, minimal_resolution, RadicalData};
use proptest::prelude::*;

fn entries(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-4i64..=4, r * c)))
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(vec!["c1", "c2", "c3", "c4", "c5", "c6", "s3", "klein"]).prop_map(|name| FiniteGroup::builtin(name).unwrap())
}

fn check_rank_nullity<F: Field>(m: &Matrix<F>) -> Result<(), TestCaseError> {
    let kernel = m.kernel_basis();
    prop_assert_eq!(m.rank() + kernel.len(), m.cols());
    prop_assert_eq!(m.image_basis().len(), m.rank());
    prop_assert_eq!(m.transpose().rank(), m.rank());
    for v in &kernel {
        prop_assert!(m.mul_vec(v).unwrap().iter().all(|e| *e == m.field().zero()));
    }
    Ok(())
}

fn check_solve<F: Field>(m: &Matrix<F>, x: &[F::Elem]) -> Result<(), TestCaseError> {
    let b = m.mul_vec(x).unwrap();
    let y = m.solve(&b).unwrap();
    prop_assert!(y.is_some(), "consistent system reported unsolvable");
    prop_assert_eq!(m.mul_vec(&y.unwrap()).unwrap(), b);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_over_prime_fields((r, c, e) in entries(6, 6), p in prime()) {
        check_rank_nullity(&Matrix::from_i64(PrimeField::new(p).unwrap(), r, c, &e).unwrap())?;
    }

    #[test]
    fn rank_nullity_over_rationals((r, c, e) in entries(5, 5)) {
        check_rank_nullity(&Matrix::from_i64(Rationals, r, c, &e).unwrap())?;
    }

    #[test]
    fn solve_recovers_consistent_systems((r, c, e) in entries(6, 6), x in prop::collection::vec(-3i64..=3, 6), p in prime()) {
        let f = PrimeField::new(p).unwrap();
        let m = Matrix::from_i64(f, r, c, &e).unwrap();
        let x: Vec<_> = x[..c].iter().map(|&v| f.from_i64(v)).collect();
        check_solve(&m, &x)?;
        let q = Matrix::from_i64(Rationals, r, c, &e).unwrap();
        let x: Vec<_> = (0..c).map(|i| Rationals.from_i64(i as i64 - 2)).collect();
        check_solve(&q, &x)?;
    }

    #[test]
    fn invertible_matrices_invert((n, e) in (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(-3i64..=3, n * n))), p in prime()) {
        let m = Matrix::from_i64(PrimeField::new(p).unwrap(), n, n, &e).unwrap();
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.rank(), n);
                prop_assert!(m.mul(&inv).unwrap().is_identity());
            }
            None => prop_assert!(m.rank() < n),
        }
    }

    #[test]
    fn group_algebra_radical_vanishes_exactly_when_order_is_invertible(g in group(), p in prime()) {
        let order = g.order();
        let a = GroupAlgebra::new(PrimeField::new(p).unwrap(), Arc::new(g));
        let j = a.radical();
        prop_assert_eq!(j.is_zero(), order % p as usize != 0);
        prop_assert!(j.equals(&a.radical_generic()));
    }

    #[test]
    fn rational_group_algebras_have_zero_radical(g in group()) {
        prop_assert!(GroupAlgebra::new(Rationals, Arc::new(g)).radical().is_zero());
    }
}

fn species() -> impl Strategy<Value = Species> {
    prop::sample::select(vec![Species::Fi, Species::Oi, Species::FiD(2), Species::OiD(2), Species::Vi(2)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Over F_5 every grid category with `n <= 2` is semisimple at each
    /// object, so minimal resolutions exist.
    #[test]
    fn betti_numbers_are_ext_into_the_top(s in species(), n in 1usize..=2, seed in any::<u64>()) {
        let f = PrimeField::new(5).unwrap();
        let c = Arc::new(FiniteCategory::build(s, n).unwrap());
        let v = random_module_seeded(&c, &f, &RandomModuleSpec { max_total_dim: 30, ..RandomModuleSpec::default() }, seed);
        let m = minimal_resolution(&v, n + 3).unwrap();
        prop_assert!(m.length() <= n as i64);
        let betti = m.betti();
        prop_assert_eq!(betti.rows.first().cloned().unwrap_or_else(|| vec![0; n + 1]), h0_dims(&v));
        let radical = RadicalData::new(c.clone(), f);
        for x in 0..=n {
            // dim Hom_{kG}(W, kG) = dim W for semisimple kG.
            let ext = ext_dims(&v, radical.top(x), n + 1).unwrap();
            for (s, &e) in ext.iter().enumerate() {
                let b = betti.rows.get(s).map_or(0, |r| r[x]);
                prop_assert_eq!(e, b, "Ext^{} at {} of a module with dims {:?}", s, x, v.dims());
            }
        }
    }
}
