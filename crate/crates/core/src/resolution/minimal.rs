use serde_json::{json, Value};

use crate::algebra::invertibility_criterion;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{h0, module_hom_space, CModule, GroupModule, ModuleAction, ModuleHom};

/// The minimal-resolution engine needs every `|Aut(x)|` invertible.
pub fn check_regime<F: Field>(category: &FiniteCategory, field: &F) -> Result<()> {
    let report = invertibility_criterion(category, field.spec());
    match report.objects.iter().find(|o| o.divisible) {
        None => Ok(()),
        Some(o) => Err(Error::RegimeViolation { object: o.object, order: o.aut_order, characteristic: field.characteristic() }),
    }
}

/// `P = ⊕_x kC e_x ⊗ W_x -> V` with `W_x ≅ H_0(V)_x`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    /// `(x, W_x)` for every object with `H_0(V)_x ≠ 0`.
    pub pieces: Vec<(usize, GroupModule<F>)>,
    pub module: CModule<F>,
    pub surjection: ModuleHom<F>,
}

impl<F: Field> ProjectiveCover<F> {
    /// `dim W_x` per object.
    pub fn top_dims(&self) -> Vec<usize> {
        let mut d = vec![0; self.module.category().n() + 1];
        for (x, w) in &self.pieces {
            d[*x] = w.dim();
        }
        d
    }
}

pub fn projective_cover<F: Field>(v: &CModule<F>) -> Result<ProjectiveCover<F>> {
    let cat = v.category().clone();
    let f = v.field().clone();
    check_regime(&cat, &f)?;
    let n = cat.n();
    let top = h0(v);
    let mut pieces = Vec::new();
    let mut sections = Vec::new();
    for x in 0..=n {
        let d = top.module.dim_at(x);
        if d == 0 {
            continue;
        }
        let group = cat.aut_group(x);
        let rho: Vec<Matrix<F>> = (0..group.order()).map(|g| top.module.matrix(x, x, g).clone()).collect();
        let w = GroupModule::from_matrices_unchecked(f.clone(), group.clone(), d, rho);
        // Average the naive section into an Aut(x)-equivariant one.
        let comp = top.lower[x].complement_columns();
        let mut naive = Matrix::zeros(f.clone(), v.dim_at(x), d);
        for (j, &c) in comp.iter().enumerate() {
            naive.set(c, j, f.one());
        }
        let mut sigma = Matrix::zeros(f.clone(), v.dim_at(x), d);
        for g in 0..group.order() {
            let term = v.matrix(x, x, g).mul(&naive.mul(w.matrix(group.inv(g)))?)?;
            sigma = sigma.add(&term)?;
        }
        let inv = f.inv(&f.from_i64(group.order() as i64)).expect("regime checked");
        pieces.push((x, w));
        sections.push(sigma.scaled(&inv));
    }
    let mut module = CModule::zero(cat.clone(), f.clone());
    for (x, w) in &pieces {
        module = module.direct_sum(&CModule::induced(cat.clone(), f.clone(), *x, w)?)?;
    }
    let maps = (0..=n)
        .map(|y| {
            let mut cols = Vec::with_capacity(module.dim_at(y));
            for ((x, _), sigma) in pieces.iter().zip(&sections) {
                if *x > y {
                    continue;
                }
                for &r in &cat.right_orbits(*x, y).reps {
                    let image = v.matrix(*x, y, r).mul(sigma).expect("shape");
                    cols.extend((0..image.cols()).map(|c| image.column(c)));
                }
            }
            Matrix::from_columns(f.clone(), v.dim_at(y), &cols).expect("shape")
        })
        .collect();
    Ok(ProjectiveCover { pieces, module, surjection: ModuleHom { maps } })
}

/// Betti numbers `b_{s,x} = dim W^{(s)}_x` of a minimal resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub rows: Vec<Vec<usize>>,
}

impl BettiTable {
    pub fn get(&self, s: usize, x: usize) -> usize {
        self.rows.get(s).and_then(|r| r.get(x)).copied().unwrap_or(0)
    }

    /// The nonzero positions `(s, x)`.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (s, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().enumerate().filter(|(_, &b)| b > 0).map(|(x, _)| (s, x)));
        }
        out
    }

    /// Rows `s`, columns object size.
    pub fn to_csv(&self, objects: usize) -> String {
        let mut out = String::from("s");
        for x in 0..objects {
            out.push_str(&format!(",{x}"));
        }
        out.push('\n');
        for (s, row) in self.rows.iter().enumerate() {
            out.push_str(&s.to_string());
            for x in 0..objects {
                out.push_str(&format!(",{}", row.get(x).copied().unwrap_or(0)));
            }
            out.push('\n');
        }
        out
    }
}

/// `0 <- V <- P^0 <- P^1 <- …` with every `P^s` a projective cover of the
/// previous kernel.
#[derive(Clone, Debug)]
pub struct MinimalResolution<F: Field> {
    pub covers: Vec<ProjectiveCover<F>>,
}

impl<F: Field> MinimalResolution<F> {
    /// Index of the last nonzero term; `-1` for the zero module.
    pub fn length(&self) -> i64 {
        self.covers.len() as i64 - 1
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable { rows: self.covers.iter().map(|c| c.top_dims()).collect() }
    }

    /// `hd_s = gd(P^s)`, the largest object carrying a generator of `P^s`.
    pub fn homological_degrees(&self, max_s: usize) -> Vec<i64> {
        (0..=max_s).map(|s| self.covers.get(s).and_then(|c| c.pieces.last()).map_or(-1, |(x, _)| *x as i64)).collect()
    }

    /// `dim Hom(P^s, T)` for each term.
    pub fn hom_dims(&self, t: &CModule<F>) -> Result<Vec<usize>> {
        self.covers.iter().map(|c| Ok(module_hom_space(&c.module, t)?.len())).collect()
    }

    pub fn to_json(&self) -> Value {
        let f = self.covers.first().map(|c| c.module.field().clone());
        let terms: Vec<Value> = self
            .covers
            .iter()
            .enumerate()
            .map(|(s, c)| {
                let induced: Vec<Value> = c.pieces.iter().map(|(x, w)| json!({"object": x, "dim": w.dim()})).collect();
                let differential: Vec<Value> = c
                    .surjection
                    .maps
                    .iter()
                    .map(|m| {
                        let f = f.as_ref().expect("nonempty");
                        (0..m.rows()).map(|r| m.row(r).iter().map(|e| f.format(e)).collect::<Vec<_>>()).collect::<Vec<_>>().into()
                    })
                    .collect();
                json!({"degree": s, "dims": c.module.dims(), "induced": induced, "differential": differential})
            })
            .collect();
        json!({"length": self.length(), "terms": terms})
    }
}

/// Fails with [`Error::LengthExceeded`] if the kernel after `P^{max_len}`
/// is still nonzero.
pub fn minimal_resolution<F: Field>(v: &CModule<F>, max_len: usize) -> Result<MinimalResolution<F>> {
    check_regime(v.category(), v.field())?;
    let mut covers = Vec::new();
    let mut current = v.clone();
    while !current.is_zero() {
        if covers.len() > max_len {
            return Err(Error::LengthExceeded(max_len));
        }
        let cover = projective_cover(&current)?;
        current = cover.surjection.kernel(&cover.module)?;
        covers.push(cover);
    }
    Ok(MinimalResolution { covers })
}
