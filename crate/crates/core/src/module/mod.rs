//! Representations of truncated categories: materialized modules, free
//! modules, group modules, homomorphisms, `H_0` and the restriction, lift
//! and shift functors.

mod action;
mod cmodule;
mod free;
mod group_module;
mod hom;
mod homology;
mod random;

pub use action::{generated, is_submodule, lower_image, lower_images, spin, ModuleAction};
pub use cmodule::{same_category, CModule};
pub use free::FreeModule;
pub use group_module::GroupModule;
pub use hom::{module_hom_space, ModuleHom};
pub use homology::{generating_degree, h0, h0_dims, H0};
pub use random::{random_module, random_module_seeded, RandomModuleSpec};

pub(crate) use action::{spin_from, unit};
