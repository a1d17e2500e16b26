//! Skeletal truncated categories `C_n` on objects `0..=n`.
//!
//! Morphisms are addressed by `(source, target, index)` where `index` is the
//! position in the canonically ordered hom-set. Composition tables are built
//! lazily per triple of objects and fall back to direct composition when a
//! table would be large.

mod payload;
mod species;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

pub use payload::{Morphism, Payload};
pub use species::{Species, SpeciesKind};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Above this many morphisms a category is refused.
pub const MAX_MORPHISMS: u128 = 4_000_000;
const MAX_TABLE: usize = 1 << 22;

/// Orbit decomposition of a hom-set under an automorphism group.
///
/// For right orbits of `hom(x, y)` under `Aut(x)`: morphism `i` equals
/// `reps[orbit[i]] ∘ element[i]`. For left orbits under `Aut(y)`:
/// `element[i] ∘ reps[orbit[i]]`.
#[derive(Clone, Debug)]
pub struct Orbits {
    pub reps: Vec<usize>,
    pub orbit: Vec<usize>,
    pub element: Vec<usize>,
}

pub struct FiniteCategory {
    species: Species,
    n: usize,
    homs: Vec<Vec<Vec<Payload>>>,
    index: Vec<Vec<HashMap<Payload, usize>>>,
    identities: Vec<usize>,
    offsets: Vec<Vec<usize>>,
    total: usize,
    tables: Vec<OnceLock<Option<Vec<u32>>>>,
    auts: Vec<OnceLock<Arc<FiniteGroup>>>,
    aut_gens: Vec<OnceLock<Vec<usize>>>,
    right_orbits: Vec<OnceLock<Arc<Orbits>>>,
    left_orbits: Vec<OnceLock<Arc<Orbits>>>,
}

impl std::fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteCategory({}, n={}, {} morphisms)", self.species, self.n, self.total)
    }
}

impl FiniteCategory {
    /// Enumerate every hom-set of `C_n`.
    pub fn build(species: Species, n: usize) -> Result<Self> {
        let expected: u128 = (0..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).map(|(a, b)| species.hom_count(a, b)).sum();
        if expected > MAX_MORPHISMS || n > 64 {
            return Err(Error::InvalidTruncation(format!("{species} at n = {n} has {expected} morphisms; too large to enumerate")));
        }
        let homs: Vec<Vec<Vec<Payload>>> = (0..=n).map(|a| (0..=n).map(|b| payload::enumerate(&species, a, b)).collect()).collect();
        Ok(Self::from_homs(species, n, homs))
    }

    fn from_homs(species: Species, n: usize, homs: Vec<Vec<Vec<Payload>>>) -> Self {
        let index = homs
            .iter()
            .map(|row| row.iter().map(|h| h.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect()).collect())
            .collect::<Vec<Vec<HashMap<_, _>>>>();
        let identities = (0..=n).map(|x| index[x][x][&payload::identity(&species, x)]).collect();
        let mut offsets = vec![vec![0; n + 1]; n + 1];
        let mut total = 0;
        for a in 0..=n {
            for b in 0..=n {
                offsets[a][b] = total;
                total += homs[a][b].len();
            }
        }
        let m = n + 1;
        FiniteCategory {
            species,
            n,
            homs,
            index,
            identities,
            offsets,
            total,
            tables: (0..m * m * m).map(|_| OnceLock::new()).collect(),
            auts: (0..m).map(|_| OnceLock::new()).collect(),
            aut_gens: (0..m).map(|_| OnceLock::new()).collect(),
            right_orbits: (0..m * m).map(|_| OnceLock::new()).collect(),
            left_orbits: (0..m * m).map(|_| OnceLock::new()).collect(),
        }
    }

    /// The full subcategory on objects `0..=m`, sharing this category's
    /// canonical order.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m > self.n {
            return Err(Error::InvalidTruncation(format!("cannot truncate C_{} to level {m}", self.n)));
        }
        let homs = self.homs[..=m].iter().map(|row| row[..=m].to_vec()).collect();
        Ok(Self::from_homs(self.species.clone(), m, homs))
    }

    pub fn species(&self) -> &Species {
        &self.species
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn num_objects(&self) -> usize {
        self.n + 1
    }
    /// Total number of morphisms, the dimension of the category algebra.
    pub fn total(&self) -> usize {
        self.total
    }
    pub fn hom(&self, a: usize, b: usize) -> &[Payload] {
        &self.homs[a][b]
    }
    pub fn hom_size(&self, a: usize, b: usize) -> usize {
        self.homs[a][b].len()
    }
    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }
    /// Position of `hom(a, b)[i]` in the global morphism order (by source,
    /// then target, then canonical order).
    pub fn global_index(&self, a: usize, b: usize, i: usize) -> usize {
        self.offsets[a][b] + i
    }
    /// Inverse of [`Self::global_index`].
    pub fn locate(&self, g: usize) -> (usize, usize, usize) {
        for a in 0..=self.n {
            for b in 0..=self.n {
                let off = self.offsets[a][b];
                if g >= off && g < off + self.homs[a][b].len() {
                    return (a, b, g - off);
                }
            }
        }
        panic!("morphism index {g} out of range");
    }

    pub fn morphism(&self, a: usize, b: usize, i: usize) -> Morphism {
        Morphism { source: a, target: b, payload: self.homs[a][b][i].clone() }
    }
    pub fn index_of(&self, m: &Morphism) -> Option<usize> {
        if m.source > self.n || m.target > self.n {
            return None;
        }
        self.index[m.source][m.target].get(&m.payload).copied()
    }
    pub fn label(&self, a: usize, b: usize, i: usize) -> String {
        format!("{a}->{b}:{}", payload::label(&self.species, &self.homs[a][b][i]))
    }

    /// `g ∘ f` on explicit morphisms.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!("{} -> {} after {} -> {}", g.source, g.target, f.source, f.target)));
        }
        if self.index_of(f).is_none() || self.index_of(g).is_none() {
            return Err(Error::NotComposable("morphism not in this category".into()));
        }
        Ok(Morphism { source: f.source, target: g.target, payload: payload::compose(&self.species, &g.payload, &f.payload, g.target) })
    }

    /// Index in `hom(a, c)` of `g ∘ f`, for `f = hom(a, b)[f]`, `g = hom(b, c)[g]`.
    pub fn compose_idx(&self, a: usize, b: usize, c: usize, f: usize, g: usize) -> usize {
        let m = self.n + 1;
        let slot = &self.tables[(a * m + b) * m + c];
        let table = slot.get_or_init(|| {
            let (hf, hg) = (self.homs[a][b].len(), self.homs[b][c].len());
            (hf * hg <= MAX_TABLE).then(|| {
                let mut t = Vec::with_capacity(hf * hg);
                for fi in 0..hf {
                    for gi in 0..hg {
                        t.push(self.compose_direct(a, b, c, fi, gi) as u32);
                    }
                }
                t
            })
        });
        match table {
            Some(t) => t[f * self.homs[b][c].len() + g] as usize,
            None => self.compose_direct(a, b, c, f, g),
        }
    }

    fn compose_direct(&self, a: usize, b: usize, c: usize, f: usize, g: usize) -> usize {
        let p = payload::compose(&self.species, &self.homs[b][c][g], &self.homs[a][b][f], c);
        self.index[a][c][&p]
    }

    /// `Aut(x)` with elements in canonical order; the product is composition.
    pub fn aut_group(&self, x: usize) -> Arc<FiniteGroup> {
        self.auts[x]
            .get_or_init(|| {
                let h = self.homs[x][x].len();
                let table = (0..h).map(|a| (0..h).map(|b| self.compose_idx(x, x, x, b, a)).collect()).collect();
                let labels = (0..h).map(|i| payload::label(&self.species, &self.homs[x][x][i])).collect();
                Arc::new(FiniteGroup::from_trusted_table(format!("Aut({x})"), labels, table, self.identities[x]))
            })
            .clone()
    }

    /// A generating set of `Aut(x)`, as indices into `hom(x, x)`.
    ///
    /// Chosen greedily in canonical order by closing under composition,
    /// without building the multiplication table of `Aut(x)`.
    pub fn aut_generators(&self, x: usize) -> &[usize] {
        self.aut_gens[x].get_or_init(|| {
            let n = self.homs[x][x].len();
            let mut inside = vec![false; n];
            let id = self.identities[x];
            inside[id] = true;
            let mut members = vec![id];
            let mut gens = Vec::new();
            for g in 0..n {
                if members.len() == n {
                    break;
                }
                if inside[g] {
                    continue;
                }
                gens.push(g);
                inside[g] = true;
                members.push(g);
                let mut i = 0;
                while i < members.len() {
                    let m = members[i];
                    for &s in &gens {
                        let p = self.compose_idx(x, x, x, s, m);
                        if !inside[p] {
                            inside[p] = true;
                            members.push(p);
                        }
                    }
                    i += 1;
                }
            }
            gens
        })
    }

    /// Right orbits of `hom(x, y)` under precomposition with `Aut(x)`.
    pub fn right_orbits(&self, x: usize, y: usize) -> Arc<Orbits> {
        let m = self.n + 1;
        self.right_orbits[x * m + y]
            .get_or_init(|| {
                let h = self.homs[x][y].len();
                let (mut orbit, mut element, mut reps) = (vec![usize::MAX; h], vec![0; h], Vec::new());
                for i in 0..h {
                    if orbit[i] != usize::MAX {
                        continue;
                    }
                    for g in 0..self.homs[x][x].len() {
                        let j = self.compose_idx(x, x, y, g, i);
                        orbit[j] = reps.len();
                        element[j] = g;
                    }
                    reps.push(i);
                }
                Arc::new(Orbits { reps, orbit, element })
            })
            .clone()
    }

    /// Left orbits of `hom(x, y)` under postcomposition with `Aut(y)`.
    pub fn left_orbits(&self, x: usize, y: usize) -> Arc<Orbits> {
        let m = self.n + 1;
        self.left_orbits[x * m + y]
            .get_or_init(|| {
                let h = self.homs[x][y].len();
                let (mut orbit, mut element, mut reps) = (vec![usize::MAX; h], vec![0; h], Vec::new());
                for i in 0..h {
                    if orbit[i] != usize::MAX {
                        continue;
                    }
                    for g in 0..self.homs[y][y].len() {
                        let j = self.compose_idx(x, y, y, i, g);
                        if orbit[j] == usize::MAX {
                            orbit[j] = reps.len();
                            element[j] = g;
                        }
                    }
                    reps.push(i);
                }
                Arc::new(Orbits { reps, orbit, element })
            })
            .clone()
    }

    /// Morphisms that, together with `Aut(x)`, generate every morphism into
    /// `x` from a smaller object: left-orbit representatives of
    /// `hom(x-1, x)`. Relies on every non-invertible morphism into `x`
    /// factoring through `x - 1`.
    pub fn lower_generators(&self, x: usize) -> Vec<usize> {
        if x == 0 {
            return Vec::new();
        }
        self.left_orbits(x - 1, x).reps.clone()
    }

    /// Index in `hom(a+1, b+1)` of the image of `hom(a, b)[i]` under the
    /// self-embedding. Requires `b < n`.
    pub fn embed(&self, a: usize, b: usize, i: usize) -> usize {
        let p = payload::embed(&self.species, &self.homs[a][b][i]);
        self.index[a + 1][b + 1][&p]
    }

    /// The self-embedding `C_{n-1} -> C_n` as index tables `[a][b][i]`.
    pub fn self_embedding(&self) -> Result<SelfEmbedding> {
        if self.n == 0 {
            return Err(Error::InvalidTruncation("the self-embedding needs n >= 1".into()));
        }
        let n = self.n - 1;
        let map = (0..=n).map(|a| (0..=n).map(|b| (0..self.homs[a][b].len()).map(|i| self.embed(a, b, i)).collect()).collect()).collect();
        Ok(SelfEmbedding { map })
    }

    /// `{species, params, n, homs: [{a, b, payloads}]}`, objects and points 1-based.
    pub fn to_json(&self) -> Value {
        let mut homs = Vec::new();
        for a in 0..=self.n {
            for b in a..=self.n {
                let payloads: Vec<Value> = self.homs[a][b].iter().map(|p| payload::to_json(&self.species, p)).collect();
                homs.push(json!({"a": a, "b": b, "payloads": payloads}));
            }
        }
        json!({"species": self.species.kind().name(), "params": self.species.params_json(), "n": self.n, "homs": homs})
    }
}

/// The self-embedding `ι: C_{n-1} -> C_n`: `map[a][b][i]` is the index of
/// `ι(hom(a, b)[i])` in `hom(a+1, b+1)`.
#[derive(Clone, Debug)]
pub struct SelfEmbedding {
    pub map: Vec<Vec<Vec<usize>>>,
}

impl SelfEmbedding {
    pub fn apply(&self, a: usize, b: usize, i: usize) -> usize {
        self.map[a][b][i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_totals() {
        assert_eq!(FiniteCategory::build(Species::Fi, 2).unwrap().total(), 8);
        assert_eq!(FiniteCategory::build(Species::Oi, 2).unwrap().total(), 7);
        let vi = FiniteCategory::build(Species::Vi(2), 2).unwrap();
        assert_eq!(vi.total(), 13);
        assert_eq!(vi.hom_size(2, 2), 6);
    }

    #[test]
    fn truncation_matches_fresh_build() {
        let c = FiniteCategory::build(Species::FiD(2), 3).unwrap();
        let t = c.truncate(2).unwrap();
        let fresh = FiniteCategory::build(Species::FiD(2), 2).unwrap();
        for a in 0..=2 {
            for b in 0..=2 {
                assert_eq!(t.hom(a, b), fresh.hom(a, b));
            }
        }
    }

    #[test]
    fn refuses_huge() {
        assert!(FiniteCategory::build(Species::Fi, 12).is_err());
    }
}
