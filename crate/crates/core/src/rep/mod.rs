//! Representations of the extended Yangian and the checks run on them.

mod build;
mod central;
mod defrel;
mod gl;
mod module;
mod osp;
mod recipe;
mod rtt;
mod vplus;

pub use build::{fundamental_tensor, shift_rep, tensor_rep, trivial_rep, twist_rep, vector_rep};
pub use central::{central_series, vector_central_series};
pub use defrel::{check_defrel, TupleSelection};
pub use gl::gl_check;
pub use module::{NumAction, RepModule, SmallAction, WeightKey};
pub use osp::{defining_generator, osp_embed, osp_weights, OspGenerator};
pub use recipe::Recipe;
pub use rtt::{check_rtt, default_grid};
pub use vplus::{check_invariant, compute_vplus, cyclic_span, fundamental_module, joint_kernel, reduce_module, reduce_rep};
