//! Free and minimal projective resolutions, `Ext` against `A/J`,
//! projective and global dimensions, and the shift of representables.

mod free;
mod gldim;
mod minimal;
mod radical;
mod shift;

pub use free::{ext_dims, free_resolution, free_resolution_with, FreeResolution, Resolver};
pub use gldim::{
    global_dimension, predicted_global_dimension, projective_dimension, projective_dimension_with, GlobalDimReport, Predicted,
    ProjectiveDimension, SummandDimension,
};
pub use minimal::{check_regime, minimal_resolution, projective_cover, BettiTable, MinimalResolution, ProjectiveCover};
pub use radical::RadicalData;
pub use shift::{is_projective, shifted_representable, verify_genetic_shift, ShiftReport, ShiftedRepresentable};
