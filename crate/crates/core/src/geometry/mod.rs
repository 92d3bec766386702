//! Model spaces: components of Hilbert schemes of points on disjoint unions of
//! projective lines. Each is a product of projective spaces carrying explicit
//! tautological classes, and integration is top-coefficient extraction.

mod cohclass;
mod tautological;
mod union;

pub use cohclass::CohClass;
pub use tautological::{
    integrate, model_components, taut_ch, taut_chern, taut_classes_on_component, taut_segre,
    ModelSpace,
};
pub use union::{eval_expr_on_union, instantiate, LineUnion};
