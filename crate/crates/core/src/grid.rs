//! The grid of predicted against computed global dimensions.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use crate::category::{FiniteCategory, Species};
use crate::error::Result;
use crate::field::{Field, FieldSpec, FieldVisitor};
use crate::group::FiniteGroup;
use crate::resolution::{global_dimension, GlobalDimReport};

/// Characteristics of the standard grid.
pub const GRID_CHARACTERISTICS: [u64; 4] = [0, 2, 3, 5];

/// The species variants of the standard grid: `G ∈ {C_2, C_3}`,
/// `d ∈ {1, 2}`, `q = 2`.
pub fn grid_species() -> Vec<Species> {
    let c2 = Arc::new(FiniteGroup::cyclic(2).expect("C_2"));
    let c3 = Arc::new(FiniteGroup::cyclic(3).expect("C_3"));
    vec![
        Species::Fi,
        Species::FiG(c2.clone()),
        Species::FiG(c3.clone()),
        Species::FiD(1),
        Species::FiD(2),
        Species::Oi,
        Species::OiG(c2),
        Species::OiG(c3),
        Species::OiD(1),
        Species::OiD(2),
        Species::Vi(2),
    ]
}

/// One `(species, n, field)` job.
#[derive(Clone, Debug)]
pub struct GridCell {
    pub species: Species,
    pub n: usize,
    pub field: FieldSpec,
}

impl GridCell {
    /// The default bound `B = n + 4`.
    pub fn default_bound(&self) -> usize {
        self.n + 4
    }
}

/// Every cell for the given species, `0 <= n <= n_max` and fields, in
/// species, then `n`, then field order.
pub fn grid_cells(species: &[Species], n_max: usize, fields: &[FieldSpec]) -> Vec<GridCell> {
    let mut cells = Vec::new();
    for s in species {
        for n in 0..=n_max {
            for &field in fields {
                cells.push(GridCell { species: s.clone(), n, field });
            }
        }
    }
    cells
}

struct GlobalDim {
    category: Arc<FiniteCategory>,
    bound: usize,
}

impl FieldVisitor for GlobalDim {
    type Output = Result<GlobalDimReport>;
    fn visit<F: Field>(self, field: F) -> Self::Output {
        global_dimension(self.category, field, self.bound)
    }
}

/// Predicted against computed global dimension of one cell.
pub fn gldim_report(species: &Species, n: usize, field: FieldSpec, bound: usize) -> Result<GlobalDimReport> {
    let category = Arc::new(FiniteCategory::build(species.clone(), n)?);
    field.dispatch(GlobalDim { category, bound })
}

/// Runs the cells on up to `threads` workers; the reports come back in
/// cell order. `bound` maps a cell to its length bound.
pub fn run_grid(cells: &[GridCell], bound: impl Fn(&GridCell) -> usize + Sync, threads: usize) -> Result<Vec<GlobalDimReport>> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<GlobalDimReport>>>> = Mutex::new(vec![None; cells.len()]);
    std::thread::scope(|scope| {
        for _ in 0..threads.clamp(1, cells.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(cell) = cells.get(i) else { break };
                let report = gldim_report(&cell.species, cell.n, cell.field, bound(cell));
                slots.lock().expect("no worker panicked")[i] = Some(report);
            });
        }
    });
    slots.into_inner().expect("no worker panicked").into_iter().map(|r| r.expect("every cell ran")).collect()
}
