use thiserror::Error;

use crate::cech::{JkRelation, UnitRelation};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("homomorphism is not well defined at source generator {generator}")]
    IllDefinedHom { generator: usize },

    #[error("invariant factors {0:?} are not in canonical form")]
    NonCanonical(Vec<i64>),

    #[error("group is infinite (free rank {free_rank}); enumeration needs a finite group")]
    InfiniteGroup { free_rank: usize },

    #[error("search space of {states} states exceeds the cap of {cap}")]
    CapExceeded { states: u128, cap: u128 },

    #[error("degree {degree} is outside the support of a complex of length {length}")]
    DegreeOutOfRange { degree: i32, length: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid morphism of complexes: {0}")]
    InvalidMorphism(String),

    #[error("invalid nerve: {0}")]
    InvalidNerve(String),

    #[error("invalid unit: {0}")]
    InvalidUnit(String),

    #[error("not a unit cocycle: relation {relation} fails on simplex {simplex}")]
    UnitCocycle { relation: UnitRelation, simplex: usize },

    #[error("not a unit cocycle: relation {relation} fails on simplex {simplex}")]
    JkCocycle { relation: JkRelation, simplex: usize },

    #[error("not a cocycle of the total complex")]
    NotACocycle,

    #[error("invalid finite group: {0}")]
    InvalidGroup(String),

    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),

    #[error("invalid triple: {0}")]
    InvalidTriple(String),
}
