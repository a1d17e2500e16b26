use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::radical::RadicalData;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{lower_image, spin_from, CModule, FreeModule, ModuleAction};

const SEED: u64 = 0x5eed;

/// A resolution `… -> F_1 -> F_0 -> M -> 0` by sums of representables
/// `kC e_x`, one per generator.
///
/// When `kAut(x)` is semisimple a generator at `x` may instead stand for
/// the summand `kC ε` of `kC e_x`, where `ε ∈ kAut(x)` is an idempotent
/// splitting off the annihilator of its image. The terms stay projective,
/// so `Ext` is unchanged, and the resolution does not carry the
/// projective junk a free cover of a smaller top would leave behind.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    category: Arc<FiniteCategory>,
    field: F,
    terms: Vec<FreeModule<F>>,
    /// `images[s][g]`: where generator `g` of `F_s` goes, as a vector of
    /// `M` (for `s = 0`) or of `F_{s-1}` at the generator's object.
    images: Vec<Vec<Vec<F::Elem>>>,
    /// `idempotents[s][g]`, `None` for the whole of `kC e_x`.
    idempotents: Vec<Vec<Option<Vec<F::Elem>>>>,
    complete: bool,
}

impl<F: Field> FreeResolution<F> {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.category
    }
    pub fn terms(&self) -> &[FreeModule<F>] {
        &self.terms
    }
    /// `r_s`: the least `r` with `F_s` a summand of `A^r`, i.e. the largest
    /// number of generators at a single object.
    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.generator_counts().into_iter().max().unwrap_or(0)).collect()
    }
    /// Generators per object for each term.
    pub fn generator_counts(&self) -> Vec<Vec<usize>> {
        self.terms.iter().map(|t| t.generator_counts()).collect()
    }
    pub fn images(&self, s: usize) -> &[Vec<F::Elem>] {
        &self.images[s]
    }
    /// Does every term consist of whole representables?
    pub fn is_free(&self) -> bool {
        self.idempotents.iter().flatten().all(|e| e.is_none())
    }
    /// True when the last computed syzygy is zero, so the terms listed are
    /// the whole resolution.
    pub fn is_complete(&self) -> bool {
        self.complete
    }
    /// Index of the last nonzero term, if the resolution is complete.
    pub fn length(&self) -> Option<i64> {
        self.complete.then(|| self.terms.len() as i64 - 1)
    }
    /// The image under `F_s -> target` of `v ∈ F_s(y)`; `target` is the
    /// resolved module for `s = 0` and `F_{s-1}` otherwise.
    pub fn apply<A: ModuleAction<F> + ?Sized>(&self, s: usize, target: &A, y: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let term = &self.terms[s];
        let mut out = vec![f.zero(); target.dim_at(y)];
        for (k, c) in v.iter().enumerate() {
            if !f.is_zero(c) {
                let (g, beta) = term.decompose(y, k);
                let w = target.act(term.generators()[g], y, beta, &self.images[s][g]);
                f.axpy(&mut out, c, &w, None);
            }
        }
        out
    }

    /// Matrix of `Hom(F_{s-1}, T) -> Hom(F_s, T)`, `φ ↦ φ ∘ d_s`, with
    /// `Hom(F_s, T) = ⊕_g T_{x_g}`.
    fn coboundary(&self, s: usize, t: &CModule<F>) -> Matrix<F> {
        let f = &self.field;
        let prev = &self.terms[s - 1];
        let next = &self.terms[s];
        let offsets = |gens: &[usize]| {
            let mut o = Vec::with_capacity(gens.len());
            let mut acc = 0;
            for &x in gens {
                o.push(acc);
                acc += t.dim_at(x);
            }
            (o, acc)
        };
        let (col_off, cols) = offsets(prev.generators());
        let (row_off, rows) = offsets(next.generators());
        let mut m = Matrix::zeros(f.clone(), rows, cols);
        for (h, &y) in next.generators().iter().enumerate() {
            if t.dim_at(y) == 0 {
                continue;
            }
            for (c, coeff) in self.images[s][h].iter().enumerate() {
                if f.is_zero(coeff) {
                    continue;
                }
                let (g, beta) = prev.decompose(y, c);
                let x = prev.generators()[g];
                if t.dim_at(x) == 0 {
                    continue;
                }
                let tb = t.matrix(x, y, beta);
                for r in 0..tb.rows() {
                    for k in 0..tb.cols() {
                        let e = tb.get(r, k);
                        if !f.is_zero(e) {
                            let (rr, cc) = (row_off[h] + r, col_off[g] + k);
                            let v = f.add(m.get(rr, cc), &f.mul(coeff, e));
                            m.set(rr, cc, v);
                        }
                    }
                }
            }
        }
        m
    }

    /// Columns spanning `Hom(F_s, T) = ⊕_g ε_g T_{x_g}` inside `⊕_g T_{x_g}`.
    fn hom_basis(&self, s: usize, t: &CModule<F>) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let gens = self.terms[s].generators();
        let total: usize = gens.iter().map(|&x| t.dim_at(x)).sum();
        let mut out = Vec::new();
        let mut offset = 0;
        for (g, &x) in gens.iter().enumerate() {
            let d = t.dim_at(x);
            let block: Vec<Vec<F::Elem>> = match &self.idempotents[s][g] {
                None => (0..d).map(|i| crate::module::unit(f, d, i)).collect(),
                Some(e) => element_matrix(f, t, x, e).image_basis(),
            };
            for v in block {
                let mut w = vec![f.zero(); total];
                w[offset..offset + d].clone_from_slice(&v);
                out.push(w);
            }
            offset += d;
        }
        out
    }

    pub(crate) fn coboundary_rank(&self, s: usize, t: &CModule<F>) -> usize {
        let m = self.coboundary(s, t);
        if self.idempotents[s - 1].iter().all(|e| e.is_none()) {
            return m.rank();
        }
        let basis = self.hom_basis(s - 1, t);
        if basis.is_empty() {
            return 0;
        }
        let b = Matrix::from_columns(self.field.clone(), m.cols(), &basis).expect("shape");
        m.mul(&b).expect("shape").rank()
    }

    pub(crate) fn hom_dim(&self, s: usize, t: &CModule<F>) -> usize {
        if self.idempotents[s].iter().all(|e| e.is_none()) {
            return self.terms[s].generators().iter().map(|&x| t.dim_at(x)).sum();
        }
        self.hom_basis(s, t).len()
    }

    /// `dim Ext^s(M, T)` for every `s` the computed terms determine.
    pub fn ext_dims(&self, t: &CModule<F>) -> Vec<usize> {
        let len = self.terms.len();
        let known = if self.complete { len } else { len.saturating_sub(1) };
        let ranks: Vec<usize> = (0..len).map(|s| if s == 0 { 0 } else { self.coboundary_rank(s, t) }).collect();
        (0..known).map(|s| self.hom_dim(s, t) - ranks[s] - ranks.get(s + 1).copied().unwrap_or(0)).collect()
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let c = &self.category;
        let terms: Vec<Value> = self
            .terms
            .iter()
            .enumerate()
            .map(|(s, term)| {
                let gens: Vec<Value> = term
                    .generators()
                    .iter()
                    .enumerate()
                    .map(|(g, &x)| {
                        let img = &self.images[s][g];
                        let image: Value = if s == 0 {
                            img.iter().map(|e| f.format(e)).collect::<Vec<_>>().into()
                        } else {
                            let prev = &self.terms[s - 1];
                            img.iter()
                                .enumerate()
                                .filter(|(_, e)| !f.is_zero(e))
                                .map(|(k, e)| {
                                    let (h, beta) = prev.decompose(x, k);
                                    json!({"generator": h, "morphism": c.label(prev.generators()[h], x, beta), "coefficient": f.format(e)})
                                })
                                .collect::<Vec<_>>()
                                .into()
                        };
                        let mut entry = json!({"object": x, "image": image});
                        if let Some(e) = &self.idempotents[s][g] {
                            entry["idempotent"] = e.iter().map(|v| f.format(v)).collect::<Vec<_>>().into();
                        }
                        entry
                    })
                    .collect();
                json!({"degree": s, "rank": term.generators().len(), "generators": gens})
            })
            .collect();
        json!({"ranks": self.ranks(), "complete": self.complete, "free": self.is_free(), "terms": terms})
    }
}

/// Builds a resolution one term at a time.
pub struct Resolver<'a, F: Field, M: ModuleAction<F> + ?Sized> {
    module: &'a M,
    radical: &'a RadicalData<F>,
    trim: bool,
    rng: ChaCha8Rng,
    res: FreeResolution<F>,
    /// The subspaces still to be covered: `M` itself, then each syzygy.
    pending: Vec<Subspace<F>>,
}

impl<'a, F: Field, M: ModuleAction<F> + ?Sized> Resolver<'a, F, M> {
    /// Trims generators at objects with semisimple `kAut(x)`.
    pub fn new(module: &'a M, radical: &'a RadicalData<F>) -> Self {
        Self::with_trim(module, radical, true)
    }

    /// Every term a sum of whole representables.
    pub fn untrimmed(module: &'a M, radical: &'a RadicalData<F>) -> Self {
        Self::with_trim(module, radical, false)
    }

    fn with_trim(module: &'a M, radical: &'a RadicalData<F>, trim: bool) -> Self {
        let category = module.category().clone();
        let field = module.field().clone();
        let pending = module.dims().into_iter().map(|d| Subspace::whole(field.clone(), d)).collect();
        let res = FreeResolution { category, field, terms: Vec::new(), images: Vec::new(), idempotents: Vec::new(), complete: false };
        Resolver { module, radical, trim, rng: ChaCha8Rng::seed_from_u64(SEED), res, pending }
    }

    pub fn resolution(&self) -> &FreeResolution<F> {
        &self.res
    }
    pub fn into_resolution(self) -> FreeResolution<F> {
        self.res
    }

    /// Adds the next term. Returns `false` once the pending syzygy is zero.
    pub fn step(&mut self) -> Result<bool> {
        if self.res.complete {
            return Ok(false);
        }
        if self.pending.iter().all(|s| s.is_zero()) {
            self.res.complete = true;
            return Ok(false);
        }
        let stage = match self.res.terms.last().cloned() {
            None => cover_step(self.module, &self.pending, self.radical, self.trim, &mut self.rng)?,
            Some(last) => cover_step(&last, &self.pending, self.radical, self.trim, &mut self.rng)?,
        };
        self.res.terms.push(stage.term);
        self.res.images.push(stage.images);
        self.res.idempotents.push(stage.idempotents);
        self.pending = stage.kernel;
        Ok(true)
    }
}

struct Stage<F: Field> {
    term: FreeModule<F>,
    images: Vec<Vec<F::Elem>>,
    idempotents: Vec<Option<Vec<F::Elem>>>,
    kernel: Vec<Subspace<F>>,
}

/// Cover `z ⊆ ambient` by a projective module and return its kernel.
fn cover_step<F: Field, A: ModuleAction<F> + ?Sized>(
    ambient: &A,
    z: &[Subspace<F>],
    radical: &RadicalData<F>,
    trim: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Stage<F>> {
    let (objects, images) = choose_generators(ambient, z, radical, rng);
    let idempotents: Vec<Option<Vec<F::Elem>>> = objects
        .iter()
        .zip(&images)
        .map(|(&x, c)| if trim && radical.radical().semisimple_at(x) { splitting_idempotent(ambient, x, c) } else { None })
        .collect();
    let term = FreeModule::new(ambient.category().clone(), ambient.field().clone(), objects);
    let kernel = kernel_of_cover(ambient, &term, &images, &idempotents, z)?;
    Ok(Stage { term, images, idempotents, kernel })
}

/// Per object in increasing order, add elements of `z_x` outside
/// `lower + J z_x` until, together with the images from below, they
/// generate `z_x` under `Aut(x)`.
fn choose_generators<F: Field, A: ModuleAction<F> + ?Sized>(
    ambient: &A,
    z: &[Subspace<F>],
    radical: &RadicalData<F>,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, Vec<Vec<F::Elem>>) {
    let f = ambient.field();
    let mut objects = Vec::new();
    let mut images = Vec::new();
    for x in 0..z.len() {
        if z[x].is_zero() {
            continue;
        }
        let mut span = if x == 0 { Subspace::new(f.clone(), ambient.dim_at(0)) } else { lower_image(ambient, x, z[x - 1].basis()) };
        if span.dim() == z[x].dim() {
            continue;
        }
        let mut layer = radical.radical_layer(ambient, x, &z[x], &span);
        let top: Vec<Vec<F::Elem>> = z[x].basis().iter().filter(|v| layer.insert((*v).clone())).cloned().collect();
        // Over a prime field a random combination of the top usually
        // generates as much as possible; over `Q` dense combinations make
        // the entries explode, so basis vectors are used directly.
        let random = f.characteristic() > 0;
        let mut misses = 0;
        let mut fallback = top.iter();
        while span.dim() < z[x].dim() {
            let candidate = if random && misses < 3 {
                let mut v = vec![f.zero(); ambient.dim_at(x)];
                for t in &top {
                    f.axpy(&mut v, &f.random(rng), t, None);
                }
                v
            } else {
                match fallback.next() {
                    Some(t) => t.clone(),
                    None => break,
                }
            };
            if span.contains(&candidate) {
                misses += 1;
                continue;
            }
            let before = span.dim();
            span.insert(candidate.clone());
            spin_from(ambient, x, &mut span, before);
            objects.push(x);
            images.push(candidate);
        }
        debug_assert_eq!(span.dim(), z[x].dim());
    }
    (objects, images)
}

/// For `c ∈ M_x` with `kAut(x)` semisimple: an idempotent `ε` with
/// `kAut(x) = ann(c) ⊕ kAut(x) ε`, so `a ε ↦ a c` is injective. `None` when
/// the annihilator is zero.
fn splitting_idempotent<F: Field, A: ModuleAction<F> + ?Sized>(ambient: &A, x: usize, c: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let f = ambient.field();
    let group = ambient.category().aut_group(x);
    let n = group.order();
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|h| ambient.act(x, x, h, c)).collect();
    let ann = Matrix::from_columns(f.clone(), ambient.dim_at(x), &cols).expect("shape").kernel_basis();
    if ann.is_empty() {
        return None;
    }
    let ann = Subspace::from_vectors(f.clone(), n, ann).expect("shape");
    // Average a linear projection onto the annihilator into a module map;
    // it is right multiplication by `e`, and `ε = 1 - e`.
    let mut e = vec![f.zero(); n];
    for g in 0..n {
        let mut r = crate::module::unit(f, n, group.inv(g));
        ann.reduce(&mut r);
        let mut p = crate::module::unit(f, n, group.inv(g));
        f.axpy(&mut p, &f.neg(&f.one()), &r, None);
        for (h, v) in p.iter().enumerate() {
            if !f.is_zero(v) {
                let k = group.mul(g, h);
                e[k] = f.add(&e[k], v);
            }
        }
    }
    let inv = f.inv(&f.from_i64(n as i64)).expect("order invertible when semisimple");
    let mut eps: Vec<F::Elem> = e.iter().map(|v| f.neg(&f.mul(v, &inv))).collect();
    let id = group.identity();
    eps[id] = f.add(&eps[id], &f.one());
    Some(eps)
}

/// Basis of `kC ε` at `y` inside `kC(x, y)`.
fn trimmed_basis<F: Field>(f: &F, cat: &FiniteCategory, x: usize, y: usize, eps: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let size = cat.hom_size(x, y);
    let mut span = Subspace::new(f.clone(), size);
    for beta in 0..size {
        let mut v = vec![f.zero(); size];
        for (h, e) in eps.iter().enumerate() {
            if !f.is_zero(e) {
                let k = cat.compose_idx(x, x, y, h, beta);
                v[k] = f.add(&v[k], e);
            }
        }
        span.insert(v);
        if span.is_whole() {
            break;
        }
    }
    span.basis().to_vec()
}

fn kernel_of_cover<F: Field, A: ModuleAction<F> + ?Sized>(
    ambient: &A,
    term: &FreeModule<F>,
    images: &[Vec<F::Elem>],
    idempotents: &[Option<Vec<F::Elem>>],
    z: &[Subspace<F>],
) -> Result<Vec<Subspace<F>>> {
    let f = ambient.field();
    let cat = ambient.category();
    let mut out = Vec::with_capacity(z.len());
    for y in 0..z.len() {
        // domain basis in the coordinates of the whole free term
        let mut domain: Vec<Vec<(usize, F::Elem)>> = Vec::new();
        let mut columns = Vec::new();
        for (g, &x) in term.generators().iter().enumerate() {
            if x > y {
                continue;
            }
            let base = term.coord(y, g, 0);
            match &idempotents[g] {
                None => {
                    for beta in 0..cat.hom_size(x, y) {
                        columns.push(ambient.act(x, y, beta, &images[g]));
                        domain.push(vec![(base + beta, f.one())]);
                    }
                }
                Some(eps) => {
                    let acts: Vec<Vec<F::Elem>> = (0..cat.hom_size(x, y)).map(|beta| ambient.act(x, y, beta, &images[g])).collect();
                    for b in trimmed_basis(f, cat, x, y, eps) {
                        let mut col = vec![f.zero(); ambient.dim_at(y)];
                        let mut sparse = Vec::new();
                        for (beta, coeff) in b.iter().enumerate() {
                            if !f.is_zero(coeff) {
                                f.axpy(&mut col, coeff, &acts[beta], None);
                                sparse.push((base + beta, coeff.clone()));
                            }
                        }
                        columns.push(col);
                        domain.push(sparse);
                    }
                }
            }
        }
        let m = Matrix::from_columns(f.clone(), ambient.dim_at(y), &columns)?;
        let kernel = m.kernel_basis();
        if domain.len() - kernel.len() != z[y].dim() {
            return Err(Error::InvalidModule(format!("cover is not onto the syzygy at object {y}")));
        }
        let vectors = kernel.into_iter().map(|k| {
            let mut v = vec![f.zero(); term.dim_at(y)];
            for (i, c) in k.iter().enumerate() {
                if !f.is_zero(c) {
                    for (pos, e) in &domain[i] {
                        v[*pos] = f.add(&v[*pos], &f.mul(c, e));
                    }
                }
            }
            v
        });
        out.push(Subspace::from_vectors(f.clone(), term.dim_at(y), vectors)?);
    }
    Ok(out)
}

/// Resolve `module` through the term `F_len`, or until it is complete.
pub fn free_resolution<F: Field, M: ModuleAction<F> + ?Sized>(module: &M, max_len: usize) -> Result<FreeResolution<F>> {
    let radical = RadicalData::new(module.category().clone(), module.field().clone());
    free_resolution_with(module, max_len, &radical)
}

pub fn free_resolution_with<F: Field, M: ModuleAction<F> + ?Sized>(
    module: &M,
    max_len: usize,
    radical: &RadicalData<F>,
) -> Result<FreeResolution<F>> {
    let mut r = Resolver::new(module, radical);
    while r.res.terms.len() <= max_len && r.step()? {}
    if r.pending.iter().all(|s| s.is_zero()) {
        r.res.complete = true;
    }
    Ok(r.into_resolution())
}

/// `dim Ext^s(M, T)` for `0 <= s <= max_s`.
pub fn ext_dims<F: Field, M: ModuleAction<F> + ?Sized>(module: &M, t: &CModule<F>, max_s: usize) -> Result<Vec<usize>> {
    let res = free_resolution(module, max_s + 1)?;
    let mut dims = res.ext_dims(t);
    dims.resize(max_s + 1, 0);
    dims.truncate(max_s + 1);
    Ok(dims)
}

/// The matrix of `u ∈ kAut(x)` acting on `T_x`.
fn element_matrix<F: Field>(f: &F, t: &CModule<F>, x: usize, u: &[F::Elem]) -> Matrix<F> {
    let d = t.dim_at(x);
    let mut m = Matrix::zeros(f.clone(), d, d);
    for (h, c) in u.iter().enumerate() {
        if !f.is_zero(c) {
            m = m.add(&t.matrix(x, x, h).scaled(c)).expect("shape");
        }
    }
    m
}
