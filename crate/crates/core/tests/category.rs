use std::collections::HashSet;
use std::sync::Arc;

use eicat_core::category::{FiniteCategory, Species, SpeciesKind};
use eicat_core::grid::grid_species;
use eicat_core::group::FiniteGroup;

fn cat(s: Species, n: usize) -> FiniteCategory {
    FiniteCategory::build(s, n).unwrap()
}

/// Grid species plus a few other parameters, at sizes where every triple
/// of morphisms can be composed.
fn small_categories() -> Vec<FiniteCategory> {
    let mut out: Vec<FiniteCategory> = grid_species().into_iter().map(|s| cat(s, 2)).collect();
    out.push(cat(Species::FiG(Arc::new(FiniteGroup::s3())), 2));
    out.push(cat(Species::OiG(Arc::new(FiniteGroup::klein())), 2));
    out.push(cat(Species::FiD(3), 2));
    out.push(cat(Species::Vi(3), 2));
    out.push(cat(Species::Fi, 3));
    out.push(cat(Species::Oi, 4));
    out
}

#[test]
fn identities_are_units() {
    for c in small_categories() {
        for a in 0..=c.n() {
            for b in a..=c.n() {
                for i in 0..c.hom_size(a, b) {
                    assert_eq!(c.compose_idx(a, a, b, c.identity(a), i), i);
                    assert_eq!(c.compose_idx(a, b, b, i, c.identity(b)), i);
                }
            }
        }
    }
}

#[test]
fn composition_is_associative() {
    for c in small_categories() {
        let n = c.n();
        for a in 0..=n {
            for b in a..=n {
                for x in b..=n {
                    for y in x..=n {
                        for f in 0..c.hom_size(a, b) {
                            for g in 0..c.hom_size(b, x) {
                                let gf = c.compose_idx(a, b, x, f, g);
                                for h in 0..c.hom_size(x, y) {
                                    let left = c.compose_idx(a, x, y, gf, h);
                                    let right = c.compose_idx(a, b, y, f, c.compose_idx(b, x, y, g, h));
                                    assert_eq!(left, right, "{} {a}->{b}->{x}->{y}", c.species().describe());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn indexed_and_direct_composition_agree() {
    for c in small_categories() {
        let n = c.n();
        for a in 0..=n {
            for b in a..=n {
                for x in b..=n {
                    for f in 0..c.hom_size(a, b) {
                        for g in 0..c.hom_size(b, x) {
                            let direct = c.compose(&c.morphism(b, x, g), &c.morphism(a, b, f)).unwrap();
                            assert_eq!(c.index_of(&direct), Some(c.compose_idx(a, b, x, f, g)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn endomorphisms_are_invertible() {
    for c in small_categories() {
        for x in 0..=c.n() {
            let id = c.identity(x);
            for g in 0..c.hom_size(x, x) {
                let has_inverse = (0..c.hom_size(x, x)).any(|h| c.compose_idx(x, x, x, g, h) == id);
                assert!(has_inverse, "{} object {x}", c.species().describe());
            }
        }
    }
}

#[test]
fn no_morphisms_go_down() {
    for c in small_categories() {
        for a in 0..=c.n() {
            for b in 0..a {
                assert_eq!(c.hom_size(a, b), 0);
            }
        }
    }
}

#[test]
fn every_morphism_factors_through_the_previous_object() {
    for c in small_categories() {
        for a in 0..=c.n() {
            for b in a + 2..=c.n() {
                let mut hit = HashSet::new();
                for f in 0..c.hom_size(a, b - 1) {
                    for g in 0..c.hom_size(b - 1, b) {
                        hit.insert(c.compose_idx(a, b - 1, b, f, g));
                    }
                }
                assert_eq!(hit.len(), c.hom_size(a, b), "{} hom({a}, {b})", c.species().describe());
            }
        }
    }
}

#[test]
fn automorphism_orders() {
    let expected: [(Species, [u128; 4]); 5] = [
        (Species::Fi, [1, 1, 2, 6]),
        (Species::Oi, [1, 1, 1, 1]),
        (Species::FiG(Arc::new(FiniteGroup::cyclic(2).unwrap())), [1, 2, 8, 48]),
        (Species::FiD(2), [1, 1, 2, 6]),
        (Species::Vi(2), [1, 1, 6, 168]),
    ];
    for (species, orders) in expected {
        let c = cat(species.clone(), 3);
        for (x, &order) in orders.iter().enumerate() {
            assert_eq!(species.aut_order(x), order);
            assert_eq!(c.hom_size(x, x) as u128, order);
            assert_eq!(c.aut_group(x).order() as u128, order);
        }
    }
}

#[test]
fn closed_form_hom_counts() {
    assert_eq!(Species::Fi.hom_count(2, 4), 12);
    assert_eq!(Species::Oi.hom_count(2, 4), 6);
    assert_eq!(Species::FiD(2).hom_count(1, 3), 12);
    assert_eq!(Species::Vi(2).hom_count(1, 2), 3);
    assert_eq!(Species::Vi(3).hom_count(1, 2), 8);
    assert_eq!(Species::FiG(Arc::new(FiniteGroup::cyclic(3).unwrap())).hom_count(1, 2), 6);
    for s in [Species::FiG(Arc::new(FiniteGroup::s3())), Species::OiD(3), Species::Vi(3)] {
        let c = cat(s.clone(), 3);
        for b in 0..=3 {
            for a in 0..=b {
                assert_eq!(s.hom_count(a, b), c.hom_size(a, b) as u128, "{} hom({a}, {b})", s.describe());
            }
        }
    }
}

#[test]
fn truncation_keeps_hom_sets() {
    let big = cat(Species::Vi(2), 3);
    let small = big.truncate(2).unwrap();
    for a in 0..=2 {
        for b in a..=2 {
            assert_eq!(big.hom(a, b), small.hom(a, b));
        }
    }
    assert!(big.truncate(4).is_err());
}

#[test]
fn json_lists_every_hom_set() {
    let c = cat(Species::FiD(2), 2);
    let v = c.to_json();
    assert_eq!(v["species"], SpeciesKind::FiD.name());
    assert_eq!(v["n"], 2);
    let homs = v["homs"].as_array().unwrap();
    assert_eq!(homs.len(), 6);
    for h in homs {
        let (a, b) = (h["a"].as_u64().unwrap() as usize, h["b"].as_u64().unwrap() as usize);
        assert_eq!(h["payloads"].as_array().unwrap().len(), c.hom_size(a, b));
    }
}

#[test]
fn automorphism_generators_generate() {
    for c in small_categories() {
        for x in 0..=c.n() {
            let gens = c.aut_generators(x);
            assert_eq!(gens, c.aut_group(x).generators().as_slice());
            let mut seen: HashSet<usize> = HashSet::from([c.identity(x)]);
            let mut frontier = vec![c.identity(x)];
            while let Some(m) = frontier.pop() {
                for &s in gens {
                    let p = c.compose_idx(x, x, x, s, m);
                    if seen.insert(p) {
                        frontier.push(p);
                    }
                }
            }
            assert_eq!(seen.len(), c.hom_size(x, x));
        }
    }
}
