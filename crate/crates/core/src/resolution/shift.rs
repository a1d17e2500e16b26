use std::sync::Arc;

use serde::Serialize;

use super::gldim::{projective_dimension_with, ProjectiveDimension};
use super::minimal::check_regime;
use super::radical::RadicalData;
use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::{h0_dims, CModule, ModuleAction};

/// `Σ(kC_N e_x)` as a module over `C_{N-1}`: at `a` the span of
/// `hom(x, a + 1)`, with `α` acting as postcomposition by `ι(α)`.
#[derive(Clone, Debug)]
pub struct ShiftedRepresentable<F: Field> {
    big: Arc<FiniteCategory>,
    small: Arc<FiniteCategory>,
    field: F,
    x: usize,
}

impl<F: Field> ShiftedRepresentable<F> {
    pub fn new(big: Arc<FiniteCategory>, field: F, x: usize) -> Result<Self> {
        let n = big.n();
        if n == 0 || x > n {
            return Err(Error::InvalidTruncation(format!("need 1 <= N and x <= N, got N = {n}, x = {x}")));
        }
        let small = Arc::new(big.truncate(n - 1)?);
        Ok(ShiftedRepresentable { big, small, field, x })
    }
}

impl<F: Field> ModuleAction<F> for ShiftedRepresentable<F> {
    fn category(&self) -> &Arc<FiniteCategory> {
        &self.small
    }
    fn field(&self) -> &F {
        &self.field
    }
    fn dim_at(&self, a: usize) -> usize {
        if self.x <= a + 1 {
            self.big.hom_size(self.x, a + 1)
        } else {
            0
        }
    }
    fn act(&self, a: usize, b: usize, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim_at(b)];
        if self.x > a + 1 {
            return out;
        }
        let lifted = self.big.embed(a, b, i);
        for (beta, c) in v.iter().enumerate() {
            if !f.is_zero(c) {
                let k = self.big.compose_idx(self.x, a + 1, b + 1, beta, lifted);
                out[k] = f.add(&out[k], c);
            }
        }
        out
    }
}

/// `Ext^1(V, A/J) = 0`.
pub fn is_projective<F: Field, M: ModuleAction<F> + ?Sized>(module: &M) -> Result<bool> {
    let radical = RadicalData::new(module.category().clone(), module.field().clone());
    Ok(matches!(projective_dimension_with(module, 1, &radical)?, ProjectiveDimension::Exact(m) if m <= 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftReport {
    pub x: usize,
    pub n: usize,
    pub dims: Vec<usize>,
    pub h0_dims: Vec<usize>,
    pub support: Vec<usize>,
    pub expected_support: Vec<usize>,
    pub projective: bool,
    pub pass: bool,
}

/// Is `Σ(kC_N e_x)` projective over `C_{N-1}` with `H_0` supported
/// exactly on `{x - 1, x}` (clipped to the objects of `C_{N-1}`)?
pub fn verify_genetic_shift<F: Field>(big: Arc<FiniteCategory>, field: F, x: usize) -> Result<ShiftReport> {
    let shifted = ShiftedRepresentable::new(big.clone(), field, x)?;
    check_regime(shifted.category(), shifted.field())?;
    let n = big.n();
    let h = h0_dims(&shifted);
    let support: Vec<usize> = (0..h.len()).filter(|&a| h[a] > 0).collect();
    let expected_support: Vec<usize> = [x.checked_sub(1), Some(x)].into_iter().flatten().filter(|&a| a < n).collect();
    let projective = is_projective(&shifted)?;
    Ok(ShiftReport {
        x,
        n,
        dims: shifted.dims(),
        h0_dims: h,
        pass: projective && support == expected_support,
        support,
        expected_support,
        projective,
    })
}

/// The shifted representable as a materialized module.
pub fn shifted_representable<F: Field>(big: Arc<FiniteCategory>, field: F, x: usize) -> Result<CModule<F>> {
    Ok(CModule::materialize(&ShiftedRepresentable::new(big, field, x)?))
}
