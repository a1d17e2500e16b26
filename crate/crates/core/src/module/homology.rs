use super::action::{lower_images, ModuleAction};
use super::cmodule::{quotient_of, CModule};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// `H_0(V)`: at each object, `V_x` modulo the images from smaller objects.
#[derive(Clone, Debug)]
pub struct H0<F: Field> {
    /// `H_0(V)` as a module; non-invertible morphisms act as zero.
    pub module: CModule<F>,
    /// The subspaces `Σ_{y < x, α: y -> x} V_α(V_y)`.
    pub lower: Vec<Subspace<F>>,
    /// The quotient maps `V_x -> H_0(V)_x`.
    pub quotient_maps: Vec<Matrix<F>>,
}

impl<F: Field> H0<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.module.dims()
    }
}

pub fn h0<F: Field, M: ModuleAction<F> + ?Sized>(v: &M) -> H0<F> {
    let lower = lower_images(v);
    let module = quotient_of(v, &lower).expect("images from below form a submodule");
    let quotient_maps = lower.iter().map(|s| s.quotient_map()).collect();
    H0 { module, lower, quotient_maps }
}

/// Dimensions of `H_0(V)` without building the quotient module.
pub fn h0_dims<F: Field, M: ModuleAction<F> + ?Sized>(v: &M) -> Vec<usize> {
    lower_images(v).iter().enumerate().map(|(x, s)| v.dim_at(x) - s.dim()).collect()
}

/// Largest object where `H_0(V)` is nonzero; `-1` for the zero module.
pub fn generating_degree<F: Field, M: ModuleAction<F> + ?Sized>(v: &M) -> i64 {
    h0_dims(v).iter().rposition(|&d| d > 0).map_or(-1, |x| x as i64)
}
