//! Exact computations with Picard (2-)groupoids presented by short complexes
//! of finitely generated abelian groups: Saavedra and Joyal-Kock units, their
//! representing complexes, Čech classification over finite nerves, and the
//! crossed-module variant.

pub mod abelian;
pub mod cech;
pub mod complex;
pub mod crossed;
pub mod error;
pub mod picard;
pub mod random;
pub mod report;

pub use abelian::{FgAbGroup, GroupElem, GroupHom, Matrix};
pub use cech::Nerve;
pub use complex::{Complex, Complex2, Complex3, StrictMorphism};
pub use crossed::{CrossedModule, FiniteGroup};
pub use error::{Error, Result};
pub use report::{Check, Verification};
