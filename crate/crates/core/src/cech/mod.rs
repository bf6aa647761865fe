//! Čech descent over finite nerves: sections, face pullbacks, torsor and
//! unit cocycles, and their classification.

pub(crate) mod classes;
mod cocycles;
mod nerve;
mod total;

pub use classes::DEFAULT_MAX_STATES;
pub use cocycles::{
    classify_h0, cocycle_of_unit_1, cocycle_of_unit_2, torsor_classes, unit_cocycles, unit_of_cocycle_1,
    unit_of_cocycle_2, JkCocycle, JkRelation, SheafSections, TorsorClasses, TorsorCocycle, UnitClasses,
    UnitCocycle1, UnitRelation,
};
pub use nerve::{cech_nerve, Cover, Intersection, Nerve, TOP_LEVEL};
pub use total::{Block, TotalCocycle, TotalComplex};
