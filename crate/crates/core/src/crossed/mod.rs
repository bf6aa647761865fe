//! Finite crossed modules `λ: G → H` with a right action of `H` on `G`,
//! their unit crossed modules, point-model units and unit cocycle triples.
//!
//! The complex `G → G ⋉ H → H → ...` of a 2-crossed module is not modelled.

mod group;
mod module;
mod triples;

pub use group::{FiniteGroup, MAX_GROUP_ORDER};
pub use module::{
    enumerate_units_nonabelian, unit_crossed_module, CrossedModule, CrossedPointModel, NonabelianContractibility,
    NonabelianUnit, UnitCrossedModule,
};
pub use triples::{
    enumerate_triples, h0_group_law, triple_product, unit_of_point_triple, validate_triple, verify_group_law,
    verify_point_law_matches_composition, UnitTriple,
};
