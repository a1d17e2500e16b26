use super::action::ModuleAction;
use super::cmodule::{same_category, CModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// A module homomorphism `M -> N`: `maps[x]` is `dim N_x x dim M_x`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleHom<F: Field> {
    pub maps: Vec<Matrix<F>>,
}

/// The morphisms that generate the category under composition: generators
/// of each `Aut(x)` and the lower generators into each `x`.
pub(crate) fn generating_morphisms<F: Field, M: ModuleAction<F> + ?Sized>(m: &M) -> Vec<(usize, usize, usize)> {
    let c = m.category();
    let mut out = Vec::new();
    for x in 0..=c.n() {
        out.extend(c.aut_generators(x).iter().map(|&g| (x, x, g)));
        if x > 0 {
            out.extend(c.lower_generators(x).into_iter().map(|r| (x - 1, x, r)));
        }
    }
    out
}

fn action_matrix<F: Field, M: ModuleAction<F> + ?Sized>(m: &M, a: usize, b: usize, i: usize) -> Matrix<F> {
    let f = m.field();
    let cols: Vec<Vec<F::Elem>> = (0..m.dim_at(a)).map(|k| m.act(a, b, i, &super::action::unit(f, m.dim_at(a), k))).collect();
    Matrix::from_columns(f.clone(), m.dim_at(b), &cols).expect("shape")
}

impl<F: Field> ModuleHom<F> {
    pub fn zero<M: ModuleAction<F> + ?Sized, N: ModuleAction<F> + ?Sized>(m: &M, n: &N) -> Self {
        let maps = (0..=m.category().n()).map(|x| Matrix::zeros(m.field().clone(), n.dim_at(x), m.dim_at(x))).collect();
        ModuleHom { maps }
    }

    pub fn identity<M: ModuleAction<F> + ?Sized>(m: &M) -> Self {
        ModuleHom { maps: m.dims().into_iter().map(|d| Matrix::identity(m.field().clone(), d)).collect() }
    }

    /// `φ_b M_α = N_α φ_a` on a generating set of morphisms.
    pub fn is_homomorphism<M: ModuleAction<F> + ?Sized, N: ModuleAction<F> + ?Sized>(&self, m: &M, n: &N) -> bool {
        let shapes_ok = self.maps.len() == m.dims().len()
            && self.maps.iter().enumerate().all(|(x, p)| p.rows() == n.dim_at(x) && p.cols() == m.dim_at(x));
        shapes_ok
            && generating_morphisms(m).into_iter().all(|(a, b, i)| {
                let left = self.maps[b].mul(&action_matrix(m, a, b, i)).expect("shape");
                let right = action_matrix(n, a, b, i).mul(&self.maps[a]).expect("shape");
                left == right
            })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleHom { maps })
    }

    pub fn kernel_spaces(&self) -> Vec<Subspace<F>> {
        self.maps.iter().map(|p| Subspace::from_vectors(p.field().clone(), p.cols(), p.kernel_basis()).expect("shape")).collect()
    }

    pub fn image_spaces(&self) -> Vec<Subspace<F>> {
        self.maps.iter().map(|p| Subspace::from_vectors(p.field().clone(), p.rows(), p.image_basis()).expect("shape")).collect()
    }

    pub fn kernel(&self, source: &CModule<F>) -> Result<CModule<F>> {
        source.submodule(&self.kernel_spaces())
    }
    pub fn image(&self, target: &CModule<F>) -> Result<CModule<F>> {
        target.submodule(&self.image_spaces())
    }
    pub fn cokernel(&self, target: &CModule<F>) -> Result<CModule<F>> {
        target.quotient(&self.image_spaces())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|p| p.rank() == p.rows())
    }
    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|p| p.rank() == p.cols())
    }
}

/// A basis of `Hom(M, N)`, from the commuting squares on generating morphisms.
pub fn module_hom_space<F: Field, M: ModuleAction<F> + ?Sized, N: ModuleAction<F> + ?Sized>(m: &M, n: &N) -> Result<Vec<ModuleHom<F>>> {
    if !same_category(m.category(), n.category()) {
        return Err(Error::InvalidModule("modules over different categories".into()));
    }
    let f = m.field();
    let (dm, dn) = (m.dims(), n.dims());
    let mut offsets = Vec::with_capacity(dm.len());
    let mut vars = 0;
    for x in 0..dm.len() {
        offsets.push(vars);
        vars += dm[x] * dn[x];
    }
    let var = |x: usize, r: usize, c: usize| offsets[x] + r * dm[x] + c;
    let mut rows = Vec::new();
    for (a, b, i) in generating_morphisms(m) {
        let (ma, na) = (action_matrix(m, a, b, i), action_matrix(n, a, b, i));
        // (N_α φ_a - φ_b M_α)[r][c] = 0
        for r in 0..dn[b] {
            for c in 0..dm[a] {
                let mut row = vec![f.zero(); vars];
                for k in 0..dn[a] {
                    let e = na.get(r, k);
                    if !f.is_zero(e) {
                        row[var(a, k, c)] = f.add(&row[var(a, k, c)], e);
                    }
                }
                for k in 0..dm[b] {
                    let e = ma.get(k, c);
                    if !f.is_zero(e) {
                        row[var(b, r, k)] = f.sub(&row[var(b, r, k)], e);
                    }
                }
                if row.iter().any(|e| !f.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(f.clone(), vars, rows)?;
    Ok(system
        .kernel_basis()
        .into_iter()
        .map(|sol| {
            let maps = (0..dm.len())
                .map(|x| Matrix::new(f.clone(), dn[x], dm[x], sol[offsets[x]..offsets[x] + dm[x] * dn[x]].to_vec()).expect("shape"))
                .collect();
            ModuleHom { maps }
        })
        .collect())
}
