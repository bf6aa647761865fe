//! Picard groupoids and 2-groupoids presented by complexes over a point,
//! and their units.

mod joyal_kock;
mod saavedra;

pub use joyal_kock::{Contractibility2, JkUnit, PicardModel2, Unit2Morphism, UnitMorphism2};
pub use saavedra::{Arrow, Contractibility1, PicardModel1, SaavedraUnit, UnitMorphism1};
