use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use serde_json::Value;

use super::free::Resolver;
use super::radical::RadicalData;
use crate::algebra::{invertibility_criterion, CriterionReport};
use crate::category::{FiniteCategory, Species, SpeciesKind};
use crate::error::Result;
use crate::field::{Field, FieldSpec};
use crate::module::{CModule, ModuleAction};

/// The outcome of a bounded projective-dimension computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectiveDimension {
    /// `-1` for the zero module.
    Exact(i64),
    /// `Ext^s(M, A/J) ≠ 0` for every `s` up to the bound.
    ExceedsBound(usize),
}

impl ProjectiveDimension {
    pub fn exact(self) -> Option<i64> {
        match self {
            ProjectiveDimension::Exact(m) => Some(m),
            ProjectiveDimension::ExceedsBound(_) => None,
        }
    }
}

impl fmt::Display for ProjectiveDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectiveDimension::Exact(m) => write!(f, "{m}"),
            ProjectiveDimension::ExceedsBound(b) => write!(f, "exceeds bound {b}"),
        }
    }
}

impl Serialize for ProjectiveDimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjectiveDimension::Exact(m) => s.serialize_i64(*m),
            ProjectiveDimension::ExceedsBound(b) => s.serialize_str(&format!("> {b}")),
        }
    }
}

/// A global dimension predicted from the species and the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicted {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Predicted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicted::Finite(m) => write!(f, "{m}"),
            Predicted::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Predicted {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Predicted::Finite(m) => s.serialize_u64(*m as u64),
            Predicted::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `n` when the characteristic is invertible on the relevant group
/// orders, `∞` otherwise. For order-preserving species only the colour
/// group matters; a truncation at `n = 0` is always `k` itself.
pub fn predicted_global_dimension(species: &Species, n: usize, field: FieldSpec) -> Predicted {
    let divides = |m: u128| field.divides(m);
    let factorial = || (2..=n as u128).any(divides);
    let infinite = match species.kind() {
        SpeciesKind::Oi | SpeciesKind::OiD => false,
        SpeciesKind::Fi | SpeciesKind::FiD => factorial(),
        SpeciesKind::FiG => factorial() || (n >= 1 && divides(species.aut_order(1))),
        SpeciesKind::OiG => n >= 1 && divides(species.aut_order(1)),
        SpeciesKind::Vi => {
            let q = species.q().expect("VI has a field size") as u128;
            (0..n).any(|i| divides(q.pow(n as u32) - q.pow(i as u32)))
        }
    };
    if infinite {
        Predicted::Infinite
    } else {
        Predicted::Finite(n)
    }
}

/// `pd(M)` read off `Ext^s(M, A/J)`: the first vanishing `Ext^{m+1}` with
/// `m + 1 <= bound` gives `m`.
pub fn projective_dimension<F: Field, M: ModuleAction<F> + ?Sized>(module: &M, bound: usize) -> Result<ProjectiveDimension> {
    let radical = RadicalData::new(module.category().clone(), module.field().clone());
    projective_dimension_with(module, bound, &radical)
}

pub fn projective_dimension_with<F: Field, M: ModuleAction<F> + ?Sized>(
    module: &M,
    bound: usize,
    radical: &RadicalData<F>,
) -> Result<ProjectiveDimension> {
    let ext = ExtAgainstTop::new(module, radical);
    ext.first_vanishing(bound)
}

/// `Ext^s(M, A/J)` computed term by term, with `A/J = ⊕_x T_x` handled one
/// summand at a time.
struct ExtAgainstTop<'a, F: Field, M: ModuleAction<F> + ?Sized> {
    resolver: Resolver<'a, F, M>,
    radical: &'a RadicalData<F>,
}

impl<'a, F: Field, M: ModuleAction<F> + ?Sized> ExtAgainstTop<'a, F, M> {
    fn new(module: &'a M, radical: &'a RadicalData<F>) -> Self {
        ExtAgainstTop { resolver: Resolver::new(module, radical), radical }
    }

    fn objects(&self, s: usize) -> Vec<usize> {
        let res = self.resolver.resolution();
        let mut xs: Vec<usize> = res.terms().get(s).map(|t| t.generators().to_vec()).unwrap_or_default();
        xs.sort_unstable();
        xs.dedup();
        xs
    }

    /// `rank(Hom(F_{s-1}, A/J) -> Hom(F_s, A/J))`.
    fn coboundary_rank(&self, s: usize) -> usize {
        let res = self.resolver.resolution();
        if s == 0 || s >= res.terms().len() {
            return 0;
        }
        let prev = self.objects(s - 1);
        self.objects(s).into_iter().filter(|x| prev.contains(x)).map(|x| res.coboundary_rank(s, self.radical.top(x))).sum()
    }

    fn hom_dim(&self, s: usize) -> usize {
        let res = self.resolver.resolution();
        if s >= res.terms().len() {
            return 0;
        }
        self.objects(s).into_iter().map(|x| res.hom_dim(s, self.radical.top(x))).sum()
    }

    fn first_vanishing(mut self, bound: usize) -> Result<ProjectiveDimension> {
        self.resolver.step()?;
        let mut prev_rank = 0;
        for s in 0..=bound {
            self.resolver.step()?;
            let next_rank = self.coboundary_rank(s + 1);
            let ext = self.hom_dim(s) - prev_rank - next_rank;
            if ext == 0 {
                return Ok(ProjectiveDimension::Exact(s as i64 - 1));
            }
            prev_rank = next_rank;
        }
        Ok(ProjectiveDimension::ExceedsBound(bound))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummandDimension {
    pub module: String,
    pub projective_dimension: ProjectiveDimension,
}

/// Predicted against computed global dimension of a truncated category.
#[derive(Clone, Debug, Serialize)]
pub struct GlobalDimReport {
    pub species: String,
    pub params: Value,
    pub n: usize,
    pub field: String,
    pub bound: usize,
    pub predicted: Predicted,
    pub computed: ProjectiveDimension,
    /// The modules whose projective dimensions were computed, in order.
    pub summands: Vec<SummandDimension>,
    pub criterion: CriterionReport,
    pub agrees: bool,
}

impl GlobalDimReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable report")
    }
}

/// `gl.dim kC = pd(A/J) = max_x pd(T_x)`. When `Aut(n)` is modular the
/// trivial simple at `n`, a summand of `T_n`, is tried first: its
/// resolution stays at `n` and is cheap, and an unbounded answer there
/// settles the maximum.
pub fn global_dimension<F: Field>(category: Arc<FiniteCategory>, field: F, bound: usize) -> Result<GlobalDimReport> {
    let n = category.n();
    let spec = field.spec();
    let radical = RadicalData::new(category.clone(), field.clone());
    let mut summands = Vec::new();
    let mut computed = ProjectiveDimension::Exact(-1);
    let mut candidates: Vec<(String, CModule<F>)> = Vec::new();
    if !radical.radical().semisimple_at(n) {
        candidates.push((format!("trivial simple at {n}"), CModule::trivial_simple(category.clone(), field.clone(), n)));
    }
    for x in (0..=n).rev() {
        candidates.push((format!("top at {x}"), radical.top(x).clone()));
    }
    for (name, module) in candidates {
        let pd = projective_dimension_with(&module, bound, &radical)?;
        summands.push(SummandDimension { module: name, projective_dimension: pd });
        match pd {
            ProjectiveDimension::ExceedsBound(_) => {
                computed = pd;
                break;
            }
            ProjectiveDimension::Exact(m) => {
                if let ProjectiveDimension::Exact(best) = computed {
                    computed = ProjectiveDimension::Exact(best.max(m));
                }
            }
        }
    }
    let predicted = predicted_global_dimension(category.species(), n, spec);
    let criterion = invertibility_criterion(&category, spec);
    let agrees = match predicted {
        Predicted::Finite(m) => computed == ProjectiveDimension::Exact(m as i64),
        Predicted::Infinite => matches!(computed, ProjectiveDimension::ExceedsBound(_)) && !criterion.holds,
    };
    let species = category.species();
    Ok(GlobalDimReport {
        species: species.kind().name().to_string(),
        params: species.params_json(),
        n,
        field: spec.to_string(),
        bound,
        predicted,
        computed,
        summands,
        criterion,
        agrees,
    })
}
