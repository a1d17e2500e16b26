use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::action::{self, ModuleAction};
use super::free::FreeModule;
use super::group_module::GroupModule;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// A representation of `C_n` with one matrix stored per morphism.
#[derive(Clone, Debug)]
pub struct CModule<F: Field> {
    category: Arc<FiniteCategory>,
    field: F,
    dims: Vec<usize>,
    /// `actions[a][b][i]` is the `dims[b] x dims[a]` matrix of `hom(a, b)[i]`.
    actions: Vec<Vec<Vec<Matrix<F>>>>,
}

/// Two handles describe the same category (possibly built separately).
pub fn same_category(a: &FiniteCategory, b: &FiniteCategory) -> bool {
    a.species() == b.species() && a.n() == b.n()
}

impl<F: Field> ModuleAction<F> for CModule<F> {
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
        self.actions[a][b][i].apply(v)
    }
    fn dims(&self) -> Vec<usize> {
        self.dims.clone()
    }
}

impl<F: Field> CModule<F> {
    /// Checks matrix shapes only; see [`Self::is_functorial`].
    pub fn new(category: Arc<FiniteCategory>, field: F, dims: Vec<usize>, actions: Vec<Vec<Vec<Matrix<F>>>>) -> Result<Self> {
        let n = category.n();
        let bad = |m: String| Error::InvalidModule(m);
        if dims.len() != n + 1 || actions.len() != n + 1 {
            return Err(bad(format!("expected data for {} objects", n + 1)));
        }
        for a in 0..=n {
            if actions[a].len() != n + 1 {
                return Err(bad(format!("expected {} targets for object {a}", n + 1)));
            }
            for b in 0..=n {
                if actions[a][b].len() != category.hom_size(a, b) {
                    return Err(bad(format!("expected {} matrices for hom({a}, {b})", category.hom_size(a, b))));
                }
                if actions[a][b].iter().any(|m| m.rows() != dims[b] || m.cols() != dims[a]) {
                    return Err(bad(format!("wrong matrix shape on hom({a}, {b})")));
                }
            }
        }
        Ok(CModule { category, field, dims, actions })
    }

    pub fn zero(category: Arc<FiniteCategory>, field: F) -> Self {
        let n = category.n();
        Self::from_fn(category, field, vec![0; n + 1], |_, _, _| unreachable!())
    }

    /// Build from a function giving the matrix of each morphism; skipped
    /// (zero-size) blocks never call it.
    fn from_fn(category: Arc<FiniteCategory>, field: F, dims: Vec<usize>, mut mat: impl FnMut(usize, usize, usize) -> Matrix<F>) -> Self {
        let n = category.n();
        let actions =
            (0..=n)
                .map(|a| {
                    (0..=n)
                        .map(|b| {
                            (0..category.hom_size(a, b))
                                .map(|i| {
                                    if dims[a] == 0 || dims[b] == 0 {
                                        Matrix::zeros(field.clone(), dims[b], dims[a])
                                    } else {
                                        mat(a, b, i)
                                    }
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect();
        CModule { category, field, dims, actions }
    }

    /// Store every morphism's matrix of any representation.
    pub fn materialize<M: ModuleAction<F> + ?Sized>(m: &M) -> Self {
        let dims = m.dims();
        let f = m.field().clone();
        Self::from_fn(m.category().clone(), f.clone(), dims.clone(), |a, b, i| {
            let cols: Vec<Vec<F::Elem>> = (0..dims[a]).map(|k| m.act(a, b, i, &action::unit(&f, dims[a], k))).collect();
            Matrix::from_columns(f.clone(), dims[b], &cols).expect("shape")
        })
    }

    /// The representable `kC(x, -) = kC e_x`.
    pub fn representable(category: Arc<FiniteCategory>, field: F, x: usize) -> Self {
        Self::materialize(&FreeModule::new(category, field, vec![x]))
    }

    /// `kC e_x ⊗_{kAut(x)} W`: at `y`, one copy of `W` per right
    /// `Aut(x)`-orbit on `hom(x, y)`. If `α ∘ r = r' ∘ g` then `α` sends
    /// `r ⊗ w` to `r' ⊗ g w`.
    pub fn induced(category: Arc<FiniteCategory>, field: F, x: usize, w: &GroupModule<F>) -> Result<Self> {
        Self::induced_restricted(&category.clone(), category, field, x, w)
    }

    /// The module induced over `big` from `w`, restricted to `small`,
    /// without building it above `small`.
    pub fn induced_restricted(
        big: &Arc<FiniteCategory>,
        small: Arc<FiniteCategory>,
        field: F,
        x: usize,
        w: &GroupModule<F>,
    ) -> Result<Self> {
        check_truncation(big, &small)?;
        check_aut_module(big, x, w)?;
        let d = w.dim();
        let dims: Vec<usize> = (0..=small.n()).map(|y| if y < x { 0 } else { big.right_orbits(x, y).reps.len() * d }).collect();
        Ok(Self::from_fn(small, field.clone(), dims.clone(), |a, b, i| {
            let mut m = Matrix::zeros(field.clone(), dims[b], dims[a]);
            let (src, dst) = (big.right_orbits(x, a), big.right_orbits(x, b));
            for (o, &r) in src.reps.iter().enumerate() {
                let beta = big.compose_idx(x, a, b, r, i);
                let (o2, g) = (dst.orbit[beta], dst.element[beta]);
                let rho = w.matrix(g);
                for p in 0..d {
                    for q in 0..d {
                        m.set(o2 * d + p, o * d + q, rho.get(p, q).clone());
                    }
                }
            }
            m
        }))
    }

    /// The restriction of a module over `big` to `small`, evaluating the
    /// action only on morphisms of `small`.
    pub fn restriction_of<M: ModuleAction<F> + ?Sized>(m: &M, small: Arc<FiniteCategory>) -> Result<Self> {
        check_truncation(m.category(), &small)?;
        let f = m.field().clone();
        let dims: Vec<usize> = (0..=small.n()).map(|x| m.dim_at(x)).collect();
        Ok(Self::from_fn(small, f.clone(), dims.clone(), |a, b, i| {
            let cols: Vec<Vec<F::Elem>> = (0..dims[a]).map(|k| m.act(a, b, i, &action::unit(&f, dims[a], k))).collect();
            Matrix::from_columns(f.clone(), dims[b], &cols).expect("shape")
        }))
    }

    /// `W` at `x`, zero elsewhere; non-invertible morphisms act as zero.
    pub fn simple(category: Arc<FiniteCategory>, field: F, x: usize, w: &GroupModule<F>) -> Result<Self> {
        check_aut_module(&category, x, w)?;
        let n = category.n();
        let dims = (0..=n).map(|y| if y == x { w.dim() } else { 0 }).collect();
        Ok(Self::from_fn(category, field, dims, |_, _, i| w.matrix(i).clone()))
    }

    /// The simple module at `x` on which `Aut(x)` acts trivially.
    pub fn trivial_simple(category: Arc<FiniteCategory>, field: F, x: usize) -> Self {
        let w = GroupModule::trivial(field.clone(), category.aut_group(x));
        Self::simple(category, field, x, &w).expect("trivial module")
    }

    pub fn matrix(&self, a: usize, b: usize, i: usize) -> &Matrix<F> {
        &self.actions[a][b][i]
    }

    /// Identity and composition laws on every composable pair.
    pub fn is_functorial(&self) -> bool {
        let c = &self.category;
        let n = c.n();
        for x in 0..=n {
            if !self.actions[x][x][c.identity(x)].is_identity() {
                return false;
            }
        }
        for a in 0..=n {
            for b in a..=n {
                for cc in b..=n {
                    for f in 0..c.hom_size(a, b) {
                        for g in 0..c.hom_size(b, cc) {
                            let h = c.compose_idx(a, b, cc, f, g);
                            let prod = self.actions[b][cc][g].mul(&self.actions[a][b][f]).expect("shapes");
                            if prod != self.actions[a][cc][h] {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// The same data over the full subcategory on objects `0..=small.n()`.
    pub fn restrict_to(&self, small: &Arc<FiniteCategory>) -> Result<Self> {
        let m = small.n();
        check_truncation(&self.category, small)?;
        let actions = (0..=m).map(|a| (0..=m).map(|b| self.actions[a][b].clone()).collect()).collect();
        CModule::new(small.clone(), self.field.clone(), self.dims[..=m].to_vec(), actions)
    }

    pub fn restrict(&self, m: usize) -> Result<Self> {
        let small = Arc::new(self.category.truncate(m)?);
        self.restrict_to(&small)
    }

    /// Zero extension to a larger truncation.
    pub fn lift_to(&self, big: &Arc<FiniteCategory>) -> Result<Self> {
        let n = self.category.n();
        if big.species() != self.category.species() || big.n() < n {
            return Err(Error::InvalidTruncation(format!("cannot lift from C_{n} to C_{}", big.n())));
        }
        let dims: Vec<usize> = (0..=big.n()).map(|x| if x <= n { self.dims[x] } else { 0 }).collect();
        Ok(Self::from_fn(big.clone(), self.field.clone(), dims, |a, b, i| self.actions[a][b][i].clone()))
    }

    /// `(ΣV)_a = V_{a+1}`, `(ΣV)_α = V_{ι(α)}`, over `small = C_{n-1}`.
    pub fn shift_to(&self, small: &Arc<FiniteCategory>) -> Result<Self> {
        let n = self.category.n();
        if n == 0 || small.species() != self.category.species() || small.n() != n - 1 {
            return Err(Error::InvalidTruncation("shift goes from C_N to C_{N-1}".into()));
        }
        let dims = self.dims[1..].to_vec();
        let cat = self.category.clone();
        Ok(Self::from_fn(small.clone(), self.field.clone(), dims, |a, b, i| self.actions[a + 1][b + 1][cat.embed(a, b, i)].clone()))
    }

    pub fn shift(&self) -> Result<Self> {
        if self.category.n() == 0 {
            return Err(Error::InvalidTruncation("shift needs N >= 1".into()));
        }
        let small = Arc::new(self.category.truncate(self.category.n() - 1)?);
        self.shift_to(&small)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !same_category(&self.category, &other.category) {
            return Err(Error::InvalidModule("direct sum of modules over different categories".into()));
        }
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let f = self.field.clone();
        Ok(Self::from_fn(self.category.clone(), f.clone(), dims.clone(), |a, b, i| {
            let mut m = Matrix::zeros(f.clone(), dims[b], dims[a]);
            let (p, q) = (&self.actions[a][b][i], &other.actions[a][b][i]);
            for r in 0..p.rows() {
                for c in 0..p.cols() {
                    m.set(r, c, p.get(r, c).clone());
                }
            }
            for r in 0..q.rows() {
                for c in 0..q.cols() {
                    m.set(p.rows() + r, p.cols() + c, q.get(r, c).clone());
                }
            }
            m
        }))
    }

    /// `V / S` for a submodule given per object, in the coordinates of
    /// each quotient's complement columns.
    pub fn quotient(&self, sub: &[Subspace<F>]) -> Result<Self> {
        check_family(self, sub)?;
        quotient_of(self, sub)
    }

    /// The submodule `S`, in the coordinates of each stored basis of `S_x`.
    pub fn submodule(&self, sub: &[Subspace<F>]) -> Result<Self> {
        check_family(self, sub)?;
        submodule_of(self, sub)
    }

    /// The submodule generated by `seeds[x] ⊆ V_x`, as subspaces.
    pub fn submodule_generated(&self, seeds: &[Vec<Vec<F::Elem>>]) -> Vec<Subspace<F>> {
        action::generated(self, seeds)
    }

    /// `{category, field, dims, action: label -> matrix}`.
    pub fn to_json(&self) -> Value {
        let c = &self.category;
        let mut action = Map::new();
        for a in 0..=c.n() {
            for b in a..=c.n() {
                if self.dims[a] == 0 || self.dims[b] == 0 {
                    continue;
                }
                for i in 0..c.hom_size(a, b) {
                    action.insert(c.label(a, b, i), matrix_json(&self.field, &self.actions[a][b][i]));
                }
            }
        }
        json!({
            "category": {"species": c.species().kind().name(), "params": c.species().params_json(), "n": c.n()},
            "field": self.field.spec(),
            "dims": self.dims,
            "action": action,
        })
    }

    /// Inverse of [`Self::to_json`]; morphisms missing from `action` act as
    /// zero. The result is checked for functoriality.
    pub fn from_json(category: Arc<FiniteCategory>, field: F, value: &Value) -> Result<Self> {
        let parse = |m: &str| Error::Parse(m.to_string());
        let dims: Vec<usize> =
            serde_json::from_value(value.get("dims").cloned().ok_or_else(|| parse("missing dims"))?).map_err(|e| parse(&e.to_string()))?;
        if dims.len() != category.n() + 1 {
            return Err(parse("dims length does not match the category"));
        }
        let empty = Map::new();
        let action = value.get("action").and_then(|a| a.as_object()).unwrap_or(&empty);
        let mut err = None;
        let cat = category.clone();
        let m = Self::from_fn(category, field.clone(), dims.clone(), |a, b, i| {
            match action.get(&cat.label(a, b, i)).map(|v| matrix_from_json(&field, dims[b], dims[a], v)) {
                Some(Ok(m)) => m,
                Some(Err(e)) => {
                    err.get_or_insert(e);
                    Matrix::zeros(field.clone(), dims[b], dims[a])
                }
                None => Matrix::zeros(field.clone(), dims[b], dims[a]),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if !m.is_functorial() {
            return Err(Error::InvalidModule("matrices do not define a functor".into()));
        }
        Ok(m)
    }
}

fn check_aut_module<F: Field>(category: &FiniteCategory, x: usize, w: &GroupModule<F>) -> Result<()> {
    let aut = category.aut_group(x);
    if x > category.n() || w.group().order() != aut.order() || w.group().table != aut.table {
        return Err(Error::InvalidModule(format!("not a module for Aut({x})")));
    }
    Ok(())
}

fn check_family<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, sub: &[Subspace<F>]) -> Result<()> {
    if sub.len() != m.category().n() + 1 || sub.iter().enumerate().any(|(x, s)| s.ambient() != m.dim_at(x)) {
        return Err(Error::DimensionMismatch("subspace family does not match the module".into()));
    }
    if !action::is_submodule(m, sub) {
        return Err(Error::InvalidModule("subspaces are not closed under the action".into()));
    }
    Ok(())
}

/// `V / S` for any representation.
pub(crate) fn quotient_of<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, sub: &[Subspace<F>]) -> Result<CModule<F>> {
    let f = m.field().clone();
    let comps: Vec<Vec<usize>> = sub.iter().map(|s| s.complement_columns()).collect();
    let dims = comps.iter().map(|c| c.len()).collect();
    Ok(CModule::from_fn(m.category().clone(), f.clone(), dims, |a, b, i| {
        let cols: Vec<Vec<F::Elem>> =
            comps[a].iter().map(|&c| sub[b].quotient_coords(&m.act(a, b, i, &action::unit(&f, m.dim_at(a), c)))).collect();
        Matrix::from_columns(f.clone(), comps[b].len(), &cols).expect("shape")
    }))
}

/// `S ⊆ V` for any representation, in the stored bases of the `S_x`.
pub(crate) fn submodule_of<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, sub: &[Subspace<F>]) -> Result<CModule<F>> {
    let f = m.field().clone();
    let dims = sub.iter().map(|s| s.dim()).collect();
    Ok(CModule::from_fn(m.category().clone(), f.clone(), dims, |a, b, i| {
        let cols: Vec<Vec<F::Elem>> =
            sub[a].basis().iter().map(|v| sub[b].coordinates(&m.act(a, b, i, v)).expect("closed under the action")).collect();
        Matrix::from_columns(f.clone(), sub[b].dim(), &cols).expect("shape")
    }))
}

pub(crate) fn matrix_json<F: Field>(f: &F, m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(|e| Value::String(f.format(e))).collect())).collect())
}

pub(crate) fn matrix_from_json<F: Field>(f: &F, rows: usize, cols: usize, v: &Value) -> Result<Matrix<F>> {
    let bad = || Error::Parse(format!("expected a {rows}x{cols} matrix"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != rows {
        return Err(bad());
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in arr {
        let row = row.as_array().ok_or_else(bad)?;
        if row.len() != cols {
            return Err(bad());
        }
        for e in row {
            let s = match e {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(bad()),
            };
            data.push(f.parse(&s)?);
        }
    }
    Matrix::new(f.clone(), rows, cols, data)
}

fn check_truncation(big: &FiniteCategory, small: &FiniteCategory) -> Result<()> {
    if small.species() != big.species() || small.n() > big.n() {
        return Err(Error::InvalidTruncation(format!("cannot restrict from C_{} to C_{}", big.n(), small.n())));
    }
    Ok(())
}
