//! Randomized checks of the structural facts the resolution engine relies
//! on, each reported as pass, fail or skipped.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::category::{FiniteCategory, Species};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{
    h0, h0_dims, module_hom_space, random_module, unit, CModule, FreeModule, GroupModule, ModuleAction, ModuleHom, RandomModuleSpec,
};
use crate::resolution::{
    check_regime, global_dimension, is_projective, minimal_resolution, projective_cover, projective_dimension, verify_genetic_shift,
    FreeResolution, Predicted, ProjectiveDimension, RadicalData, Resolver,
};

/// Headroom categories with more morphisms than this are not built.
pub const MAX_HEADROOM_MORPHISMS: u128 = 25_000;

/// Levels with more morphisms than this are not resolved over.
pub const MAX_RESOLUTION_MORPHISMS: u128 = 3000;

/// Levels with an automorphism group larger than this are not resolved over.
pub const MAX_RESOLUTION_AUT_ORDER: u128 = 500;

/// Every property, in report order.
pub const PROPERTIES: &[&str] = &[
    "functoriality",
    "restriction_and_lift_exact",
    "h0_commutes_with_restriction",
    "h0_of_lift",
    "restriction_of_lift_is_identity",
    "yoneda",
    "induced_regular_is_representable",
    "restricted_projectives_are_projective",
    "free_resolution_is_exact",
    "gldim_matches_criterion",
    "minimal_resolution_is_exact",
    "ext_matches_minimal_hom",
    "simples_have_linear_resolutions",
    "pd_of_bottom_simple",
    "generating_degree_bound",
    "cover_restriction",
    "betti_restriction",
    "genetic_shift",
];

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    /// Requested `N` for the headroom category `C_N`.
    pub headroom: usize,
    pub seed: u64,
    /// Length bound for resolutions and projective dimensions.
    pub bound: usize,
    pub max_total_dim: usize,
}

impl VerifyOptions {
    pub fn new(n: usize) -> Self {
        VerifyOptions { samples: 20, headroom: n + 2, seed: 0, bound: n + 4, max_total_dim: 60 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub status: Status,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub species: String,
    pub params: Value,
    pub n: usize,
    pub field: String,
    /// `|Aut(x)|` is invertible for every object of `C_n`.
    pub semisimple: bool,
    pub requested_headroom: usize,
    pub headroom: usize,
    pub seed: u64,
    pub samples: usize,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    /// No property failed.
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.status != Status::Fail)
    }
    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }
    /// `(pass, fail, skipped)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |s| self.properties.iter().filter(|p| p.status == s).count();
        (count(Status::Pass), count(Status::Fail), count(Status::Skipped))
    }
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable report")
    }
}

fn total_morphisms(species: &Species, m: usize) -> u128 {
    (0..=m).map(|b| (0..=b).map(|a| species.hom_count(a, b)).sum::<u128>()).sum()
}

/// The largest `N' <= N` (and `>= n`) whose category stays under
/// [`MAX_HEADROOM_MORPHISMS`].
pub fn effective_headroom(species: &Species, n: usize, requested: usize) -> usize {
    (n..=requested.max(n)).rev().find(|&m| total_morphisms(species, m) <= MAX_HEADROOM_MORPHISMS).unwrap_or(n)
}

/// Runs every property in [`PROPERTIES`].
pub fn verify<F: Field>(category: Arc<FiniteCategory>, field: F, opts: &VerifyOptions) -> Result<VerifyReport> {
    verify_properties(category, field, opts, PROPERTIES)
}

/// Runs the named properties; each uses its own seeded generator, so the
/// outcome of one does not depend on which others run.
pub fn verify_properties<F: Field>(category: Arc<FiniteCategory>, field: F, opts: &VerifyOptions, names: &[&str]) -> Result<VerifyReport> {
    let n = category.n();
    let species = category.species().clone();
    let headroom = effective_headroom(&species, n, opts.headroom);
    let big = Arc::new(FiniteCategory::build(species.clone(), headroom)?);
    let small = Arc::new(big.truncate(n)?);
    let ctx = Ctx { field: field.clone(), small, big, opts: *opts };
    let mut properties = Vec::new();
    for &name in names {
        let index = PROPERTIES.iter().position(|p| *p == name).ok_or_else(|| Error::Parse(format!("unknown property {name}")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(index as u64 + 1)));
        let outcome = run(&ctx, name, &mut rng).unwrap_or_else(|e| Outcome::fail(0, e.to_string()));
        properties.push(PropertyResult { name: name.to_string(), status: outcome.status, cases: outcome.cases, detail: outcome.detail });
    }
    Ok(VerifyReport {
        species: species.kind().name().to_string(),
        params: species.params_json(),
        n,
        field: field.spec().to_string(),
        semisimple: check_regime(&ctx.small, &field).is_ok(),
        requested_headroom: opts.headroom,
        headroom,
        seed: opts.seed,
        samples: opts.samples,
        properties,
    })
}

fn run<F: Field>(ctx: &Ctx<F>, name: &str, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    match name {
        "functoriality" => functoriality(ctx, rng),
        "restriction_and_lift_exact" => restriction_and_lift_exact(ctx, rng),
        "h0_commutes_with_restriction" => h0_commutes_with_restriction(ctx, rng),
        "h0_of_lift" => h0_of_lift(ctx, rng),
        "restriction_of_lift_is_identity" => restriction_of_lift_is_identity(ctx, rng),
        "yoneda" => yoneda(ctx, rng),
        "induced_regular_is_representable" => induced_regular_is_representable(ctx),
        "restricted_projectives_are_projective" => restricted_projectives_are_projective(ctx),
        "free_resolution_is_exact" => free_resolution_is_exact(ctx, rng),
        "gldim_matches_criterion" => gldim_matches_criterion(ctx),
        "minimal_resolution_is_exact" => minimal_resolution_is_exact(ctx, rng),
        "ext_matches_minimal_hom" => ext_matches_minimal_hom(ctx, rng),
        "simples_have_linear_resolutions" => simples_have_linear_resolutions(ctx),
        "pd_of_bottom_simple" => pd_of_bottom_simple(ctx),
        "generating_degree_bound" => generating_degree_bound(ctx, rng),
        "cover_restriction" => cover_restriction(ctx, rng),
        "betti_restriction" => betti_restriction(ctx, rng),
        "genetic_shift" => genetic_shift(ctx),
        _ => unreachable!("checked against PROPERTIES"),
    }
}

struct Ctx<F: Field> {
    field: F,
    small: Arc<FiniteCategory>,
    big: Arc<FiniteCategory>,
    opts: VerifyOptions,
}

impl<F: Field> Ctx<F> {
    fn n(&self) -> usize {
        self.small.n()
    }
    fn spec(&self) -> RandomModuleSpec {
        RandomModuleSpec { max_total_dim: self.opts.max_total_dim, ..RandomModuleSpec::default() }
    }
    fn random(&self, cat: &Arc<FiniteCategory>, rng: &mut ChaCha8Rng) -> CModule<F> {
        random_module(cat, &self.field, &self.spec(), rng)
    }
    fn level(&self, m: usize) -> Result<Arc<FiniteCategory>> {
        Ok(Arc::new(self.big.truncate(m)?))
    }
    fn semisimple(&self, cat: &FiniteCategory) -> bool {
        check_regime(cat, &self.field).is_ok()
    }
    fn resolvable(&self, m: usize) -> bool {
        let species = self.big.species();
        m <= self.big.n() && total_morphisms(species, m) <= MAX_RESOLUTION_MORPHISMS && species.hom_count(m, m) <= MAX_RESOLUTION_AUT_ORDER
    }
    /// `C_{n+1}` if it can be resolved over and is in the semisimple regime.
    fn next_level(&self) -> std::result::Result<Arc<FiniteCategory>, String> {
        let n = self.n();
        if !self.resolvable(n + 1) {
            return Err(format!("C_{} is beyond the headroom or exceeds the resolution limits", n + 1));
        }
        let next = self.level(n + 1).map_err(|e| e.to_string())?;
        match check_regime(&next, &self.field) {
            Ok(()) => Ok(next),
            Err(e) => Err(format!("C_{}: {e}", n + 1)),
        }
    }
    /// The largest semisimple `C_m` with `n < m <= N` that can be resolved
    /// over.
    fn top_level(&self) -> std::result::Result<Arc<FiniteCategory>, String> {
        let n = self.n();
        for m in (n + 2..=self.big.n()).rev() {
            if self.resolvable(m) {
                let c = self.level(m).map_err(|e| e.to_string())?;
                if self.semisimple(&c) {
                    return Ok(c);
                }
            }
        }
        self.next_level()
    }
    fn require_semisimple(&self) -> Option<Outcome> {
        check_regime(&self.small, &self.field).err().map(|e| Outcome::skipped(e.to_string()))
    }
}

struct Outcome {
    status: Status,
    cases: usize,
    detail: String,
}

impl Outcome {
    fn fail(cases: usize, detail: String) -> Self {
        Outcome { status: Status::Fail, cases, detail }
    }
    fn skipped(detail: String) -> Self {
        Outcome { status: Status::Skipped, cases: 0, detail }
    }
}

/// Counts cases and keeps the first failure.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }
    fn finish(self, note: &str) -> Result<Outcome> {
        Ok(match self.first {
            None => Outcome { status: Status::Pass, cases: self.cases, detail: note.to_string() },
            Some(first) => Outcome::fail(self.cases, format!("{} of {} cases failed; first: {first}", self.failures, self.cases)),
        })
    }
}

fn same_module<F: Field>(a: &CModule<F>, b: &CModule<F>) -> bool {
    let c = a.category();
    let n = c.n();
    a.dims() == b.dims() && (0..=n).all(|x| (x..=n).all(|y| (0..c.hom_size(x, y)).all(|i| a.matrix(x, y, i) == b.matrix(x, y, i))))
}

/// A random submodule generated by one or two vectors.
fn random_submodule<F: Field>(v: &CModule<F>, rng: &mut ChaCha8Rng) -> Vec<Subspace<F>> {
    let f = v.field();
    let n = v.category().n();
    let mut seeds = vec![Vec::new(); n + 1];
    let objects: Vec<usize> = (0..=n).filter(|&x| v.dim_at(x) > 0).collect();
    if !objects.is_empty() {
        for _ in 0..rng.gen_range(1..=2) {
            let x = objects[rng.gen_range(0..objects.len())];
            seeds[x].push((0..v.dim_at(x)).map(|_| f.random(rng)).collect());
        }
    }
    v.submodule_generated(&seeds)
}

/// `0 -> U -> V -> V/U -> 0` with its two maps.
struct ShortExact<F: Field> {
    sub: CModule<F>,
    module: CModule<F>,
    quotient: CModule<F>,
    inclusion: ModuleHom<F>,
    projection: ModuleHom<F>,
}

impl<F: Field> ShortExact<F> {
    fn new(v: CModule<F>, sub: &[Subspace<F>]) -> Result<Self> {
        let f = v.field().clone();
        let inclusion =
            ModuleHom { maps: sub.iter().map(|s| Matrix::from_columns(f.clone(), s.ambient(), s.basis())).collect::<Result<Vec<_>>>()? };
        let projection = ModuleHom { maps: sub.iter().map(|s| s.quotient_map()).collect() };
        Ok(ShortExact { sub: v.submodule(sub)?, quotient: v.quotient(sub)?, module: v, inclusion, projection })
    }

    fn is_exact(&self) -> bool {
        let (u, v, q) = (&self.sub, &self.module, &self.quotient);
        let composite = self.projection.compose(&self.inclusion);
        self.inclusion.is_homomorphism(u, v)
            && self.projection.is_homomorphism(v, q)
            && self.inclusion.is_injective()
            && self.projection.is_surjective()
            && composite.is_ok_and(|c| c.maps.iter().all(|m| m.is_zero()))
            && u.dims().iter().zip(q.dims()).map(|(a, b)| a + b).eq(v.dims())
    }

    /// Applies a functor that acts on modules and blockwise on maps.
    fn map(
        &self,
        on_module: impl Fn(&CModule<F>) -> Result<CModule<F>>,
        on_hom: impl Fn(&ModuleHom<F>, &CModule<F>, &CModule<F>) -> ModuleHom<F>,
    ) -> Result<Self> {
        let (sub, module, quotient) = (on_module(&self.sub)?, on_module(&self.module)?, on_module(&self.quotient)?);
        let inclusion = on_hom(&self.inclusion, &sub, &module);
        let projection = on_hom(&self.projection, &module, &quotient);
        Ok(ShortExact { sub, module, quotient, inclusion, projection })
    }
}

fn functoriality<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut t = Tally::default();
    for x in 0..=ctx.n() {
        let p = CModule::representable(ctx.small.clone(), ctx.field.clone(), x);
        t.check(p.is_functorial(), || format!("representable at {x}"));
    }
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.small, rng);
        t.check(v.is_functorial(), || format!("random module {k}"));
        let w = ctx.random(&ctx.big, rng).restrict_to(&ctx.small)?;
        t.check(w.is_functorial(), || format!("restriction of random module {k}"));
        let q = v.quotient(&random_submodule(&v, rng))?;
        t.check(q.is_functorial(), || format!("quotient of random module {k}"));
    }
    t.finish("identity and composition laws on every composable pair")
}

fn restriction_and_lift_exact<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let n = ctx.n();
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.big, rng);
        let sub = random_submodule(&v, rng);
        let ses = ShortExact::new(v, &sub)?;
        t.check(ses.is_exact(), || format!("sequence {k} over C_{}", ctx.big.n()));
        let restricted = ses.map(|m| m.restrict_to(&ctx.small), |h, _, _| ModuleHom { maps: h.maps[..=n].to_vec() })?;
        t.check(restricted.is_exact(), || format!("restriction of sequence {k}"));

        let w = ctx.random(&ctx.small, rng);
        let sub = random_submodule(&w, rng);
        let ses = ShortExact::new(w, &sub)?;
        let lifted = ses.map(
            |m| m.lift_to(&ctx.big),
            |h, source, target| {
                let mut maps = h.maps.clone();
                for x in n + 1..=ctx.big.n() {
                    maps.push(Matrix::zeros(ctx.field.clone(), target.dim_at(x), source.dim_at(x)));
                }
                ModuleHom { maps }
            },
        )?;
        t.check(lifted.is_exact(), || format!("lift of sequence {k}"));
    }
    t.finish(&format!("short exact sequences between C_{n} and C_{}", ctx.big.n()))
}

fn h0_commutes_with_restriction<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.big, rng);
        let (whole, part) = (h0(&v), h0(&v.restrict_to(&ctx.small)?));
        for x in 0..=ctx.n() {
            let ok = whole.lower[x].equals(&part.lower[x]) && whole.quotient_maps[x] == part.quotient_maps[x];
            t.check(ok, || format!("module {k}, object {x}"));
        }
    }
    t.finish("lower subspaces and quotient maps agree below n")
}

fn h0_of_lift<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let n = ctx.n();
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let w = ctx.random(&ctx.small, rng);
        let (lifted, direct) = (h0(&w.lift_to(&ctx.big)?), h0(&w));
        for x in 0..=ctx.big.n() {
            let ok = if x <= n {
                lifted.lower[x].equals(&direct.lower[x]) && lifted.quotient_maps[x] == direct.quotient_maps[x]
            } else {
                lifted.module.dim_at(x) == 0
            };
            t.check(ok, || format!("module {k}, object {x}"));
        }
    }
    t.finish("H_0 of a lift is the lift of H_0")
}

fn restriction_of_lift_is_identity<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let w = ctx.random(&ctx.small, rng);
        let back = w.lift_to(&ctx.big)?.restrict_to(&ctx.small)?;
        t.check(same_module(&w, &back), || format!("module {k}"));
    }
    t.finish("identical dimensions and matrices")
}

fn yoneda<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.small, rng);
        for x in 0..=ctx.n() {
            let p = CModule::representable(ctx.small.clone(), ctx.field.clone(), x);
            let homs = module_hom_space(&p, &v)?.len();
            t.check(homs == v.dim_at(x), || format!("module {k}, object {x}: {homs} vs {}", v.dim_at(x)));
        }
    }
    t.finish("dim Hom(kC e_x, V) = dim V_x")
}

fn induced_regular_is_representable<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    let (cat, f) = (&ctx.small, &ctx.field);
    let mut t = Tally::default();
    for x in 0..=ctx.n() {
        let group = cat.aut_group(x);
        let reg = GroupModule::regular(f.clone(), group.clone());
        let ind = CModule::induced(cat.clone(), f.clone(), x, &reg)?;
        let rep = CModule::representable(cat.clone(), f.clone(), x);
        // The map kC e_x -> Ind sending e_x to 1 ⊗ 1.
        let v0 = unit(f, ind.dim_at(x), group.identity());
        let maps = (0..=ctx.n())
            .map(|y| {
                let count = if x <= y { cat.hom_size(x, y) } else { 0 };
                let cols: Vec<_> = (0..count).map(|i| ind.act(x, y, i, &v0)).collect();
                Matrix::from_columns(f.clone(), ind.dim_at(y), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let phi = ModuleHom { maps };
        let ok = ind.dims() == rep.dims() && phi.is_homomorphism(&rep, &ind) && phi.is_injective() && phi.is_surjective();
        t.check(ok, || format!("object {x}"));
    }
    t.finish("e_x -> 1 ⊗ 1 is an isomorphism")
}

fn restricted_projectives_are_projective<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    let mut t = Tally::default();
    for x in 0..=ctx.n() {
        let rep = FreeModule::new(ctx.big.clone(), ctx.field.clone(), vec![x]);
        let p = CModule::restriction_of(&rep, ctx.small.clone())?;
        t.check(is_projective(&p)?, || format!("representable at {x}"));
    }
    if ctx.semisimple(&ctx.small) {
        for x in 0..=ctx.n() {
            for (k, w) in GroupModule::one_dim_characters(ctx.field.clone(), ctx.big.aut_group(x)).iter().enumerate() {
                // Induced from a simple of a semisimple group algebra: a projective.
                let p = CModule::induced_restricted(&ctx.big, ctx.small.clone(), ctx.field.clone(), x, w)?;
                t.check(is_projective(&p)?, || format!("induced from character {k} at {x}"));
            }
        }
    }
    t.finish(&format!("from C_{} to C_{}; objects above n restrict to zero", ctx.big.n(), ctx.n()))
}

/// The matrix of `F_s -> target` at `y`.
fn differential<F: Field, A: ModuleAction<F> + ?Sized>(res: &FreeResolution<F>, s: usize, target: &A, y: usize) -> Result<Matrix<F>> {
    let f = target.field();
    let d = res.terms()[s].dim_at(y);
    let cols: Vec<_> = (0..d).map(|k| res.apply(s, target, y, &unit(f, d, k))).collect();
    Matrix::from_columns(f.clone(), target.dim_at(y), &cols)
}

fn free_resolution_is_exact<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let n = ctx.n();
    let radical = RadicalData::new(ctx.small.clone(), ctx.field.clone());
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.small, rng);
        let mut resolver = Resolver::untrimmed(&v, &radical);
        while resolver.resolution().terms().len() <= n + 1 && resolver.step()? {}
        let res = resolver.into_resolution();
        let terms = res.terms().len();
        for y in 0..=n {
            let mut ranks = Vec::with_capacity(terms);
            for s in 0..terms {
                let m = if s == 0 { differential(&res, 0, &v, y)? } else { differential(&res, s, &res.terms()[s - 1], y)? };
                if s > 0 {
                    let prev = if s == 1 { differential(&res, 0, &v, y)? } else { differential(&res, s - 1, &res.terms()[s - 2], y)? };
                    t.check(prev.mul(&m)?.is_zero(), || format!("module {k}: d∘d ≠ 0 at s = {s}, y = {y}"));
                }
                ranks.push(m.rank());
            }
            if terms > 0 {
                t.check(ranks[0] == v.dim_at(y), || format!("module {k}: F_0 -> V not onto at {y}"));
            }
            for s in 0..terms {
                // Exact at F_s: dim F_s = rank d_s + dim ker d_s, ker d_s = im d_{s+1}.
                let dim = res.terms()[s].dim_at(y);
                let next = match ranks.get(s + 1) {
                    Some(&r) => r,
                    None if res.is_complete() => 0,
                    None => continue,
                };
                t.check(dim == ranks[s] + next, || format!("module {k}: not exact at F_{s}, object {y}"));
            }
        }
    }
    t.finish("untrimmed resolutions: d∘d = 0, F_0 onto, exact at each computed term")
}

fn gldim_matches_criterion<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    let report = global_dimension(ctx.small.clone(), ctx.field.clone(), ctx.opts.bound)?;
    let mut t = Tally::default();
    let finite = matches!(report.computed, ProjectiveDimension::Exact(_));
    t.check(finite == report.criterion.holds, || format!("computed {} but criterion {}", report.computed, report.criterion.holds));
    if let ProjectiveDimension::Exact(m) = report.computed {
        t.check(m <= ctx.n() as i64, || format!("computed {m} exceeds n"));
    }
    t.check(report.agrees, || format!("predicted {} but computed {}", report.predicted, report.computed));
    let note = match report.predicted {
        Predicted::Finite(m) => format!("gl.dim = {m}"),
        Predicted::Infinite => format!("gl.dim {}", report.computed),
    };
    t.finish(&note)
}

fn minimal_resolution_is_exact<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let mut current = ctx.random(&ctx.small, rng);
        let mut s = 0;
        while !current.is_zero() {
            if s > ctx.opts.bound {
                t.check(false, || format!("module {k}: longer than {}", ctx.opts.bound));
                break;
            }
            let cover = projective_cover(&current)?;
            let p = &cover.module;
            let ok = cover.surjection.is_homomorphism(p, &current) && cover.surjection.is_surjective() && h0_dims(p) == h0_dims(&current);
            t.check(ok, || format!("module {k}: cover {s}"));
            let kernel = cover.surjection.kernel(p)?;
            let dims_ok = kernel.dims().iter().zip(current.dims()).map(|(a, b)| a + b).eq(p.dims());
            t.check(dims_ok, || format!("module {k}: kernel {s}"));
            current = kernel;
            s += 1;
        }
    }
    t.finish("each P^s -> Z_s is onto with H_0(P^s) = H_0(Z_s)")
}

fn ext_matches_minimal_hom<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    let n = ctx.n();
    let radical = RadicalData::new(ctx.small.clone(), ctx.field.clone());
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&ctx.small, rng);
        let free = crate::resolution::free_resolution_with(&v, n + 3, &radical)?;
        let minimal = minimal_resolution(&v, ctx.opts.bound)?;
        for x in 0..=n {
            let top = radical.top(x);
            let mut ext = free.ext_dims(top);
            ext.resize(n + 3, 0);
            ext.truncate(n + 3);
            let mut hom = minimal.hom_dims(top)?;
            hom.resize(n + 3, 0);
            t.check(ext == hom, || format!("module {k}, top at {x}: Ext {ext:?} vs Hom {hom:?}"));
        }
    }
    t.finish(&format!("Ext^s(V, T_x) = dim Hom(P^s, T_x) for s <= {}", n + 2))
}

fn simples_have_linear_resolutions<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    let n = ctx.n();
    let mut t = Tally::default();
    for x in 0..=n {
        for (k, w) in GroupModule::one_dim_characters(ctx.field.clone(), ctx.small.aut_group(x)).iter().enumerate() {
            let simple = CModule::simple(ctx.small.clone(), ctx.field.clone(), x, w)?;
            let betti = minimal_resolution(&simple, ctx.opts.bound)?.betti();
            let support = betti.support();
            let expected: Vec<(usize, usize)> = (0..=n - x).map(|s| (s, s + x)).collect();
            t.check(support == expected, || format!("character {k} at {x}: support {support:?}"));
        }
    }
    t.finish("Betti support of S_x(W) is {(s, s + x) : 0 <= s <= n - x}")
}

fn pd_of_bottom_simple<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    let n = ctx.n() as i64;
    let s0 = CModule::trivial_simple(ctx.small.clone(), ctx.field.clone(), 0);
    let mut t = Tally::default();
    let pd = projective_dimension(&s0, ctx.opts.bound)?;
    t.check(pd == ProjectiveDimension::Exact(n), || format!("pd = {pd}"));
    let length = minimal_resolution(&s0, ctx.opts.bound)?.length();
    t.check(length == n, || format!("minimal length {length}"));
    t.finish(&format!("pd(S_0) = {n}"))
}

fn generating_degree_bound<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let n = ctx.n();
    let Some(m) = (n..=ctx.big.n()).rev().find(|&m| ctx.resolvable(m) && ctx.level(m).is_ok_and(|c| ctx.semisimple(&c))) else {
        return Ok(ctx.require_semisimple().expect("C_n is modular"));
    };
    let big = ctx.level(m)?;
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let lifted = ctx.random(&ctx.small, rng).lift_to(&big)?;
        let top = lifted.dims().iter().rposition(|&d| d > 0).map_or(-1, |x| x as i64);
        let degrees = minimal_resolution(&lifted, m + 2)?.homological_degrees(m + 1);
        let ok = degrees.iter().enumerate().all(|(s, &hd)| hd <= top + s as i64);
        t.check(ok, || format!("module {k}: support up to {top}, hd {degrees:?}"));
    }
    t.finish(&format!("hd_s <= max support + s for lifts to C_{m}"))
}

fn cover_restriction<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let n = ctx.n();
    let next = match ctx.top_level() {
        Ok(c) => c,
        Err(reason) => return Ok(Outcome::skipped(reason)),
    };
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let v = ctx.random(&next, rng);
        let cover = projective_cover(&v)?;
        let direct = projective_cover(&v.restrict_to(&ctx.small)?)?;
        t.check(cover.top_dims()[..=n] == direct.top_dims()[..], || format!("module {k}: multisets differ"));
        let restricted = cover.module.restrict_to(&ctx.small)?;
        t.check(h0_dims(&restricted) == direct.top_dims(), || format!("module {k}: restricted cover not minimal"));
    }
    t.finish(&format!("covers over C_{} restrict to covers over C_{n}", next.n()))
}

fn betti_restriction<F: Field>(ctx: &Ctx<F>, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let next = match ctx.top_level() {
        Ok(c) => c,
        Err(reason) => return Ok(Outcome::skipped(reason)),
    };
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    let mut t = Tally::default();
    for k in 0..ctx.opts.samples {
        let w = ctx.random(&ctx.small, rng);
        let direct = minimal_resolution(&w, ctx.opts.bound)?.betti();
        let lifted = minimal_resolution(&w.lift_to(&next)?, ctx.opts.bound)?;
        let mut rows = Vec::new();
        for cover in &lifted.covers {
            rows.push(h0_dims(&cover.module.restrict_to(&ctx.small)?));
        }
        while rows.last().is_some_and(|r| r.iter().all(|&b| b == 0)) {
            rows.pop();
        }
        t.check(rows == direct.rows, || format!("module {k}: {rows:?} vs {:?}", direct.rows));
    }
    t.finish(&format!("termwise restriction from C_{} reproduces the Betti table", next.n()))
}

fn genetic_shift<F: Field>(ctx: &Ctx<F>) -> Result<Outcome> {
    let n = ctx.n();
    if let Some(skip) = ctx.require_semisimple() {
        return Ok(skip);
    }
    if ctx.big.n() <= n {
        return Ok(Outcome::skipped(format!("C_{} is beyond the headroom", n + 1)));
    }
    let next = ctx.level(n + 1)?;
    let mut t = Tally::default();
    for x in 1..=n {
        let report = verify_genetic_shift(next.clone(), ctx.field.clone(), x)?;
        t.check(report.pass, || format!("x = {x}: support {:?}, projective {}", report.support, report.projective));
    }
    t.finish(&format!("shifts of kC_{} e_x are projective with H_0 on {{x - 1, x}}", n + 1))
}
