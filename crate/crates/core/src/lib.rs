//! Silting theory for derived categories of type-A quivers.

pub mod braid;
pub mod cliques;
pub mod derived;
pub mod error;
pub mod linalg;
pub mod module_cat;
pub mod orbit;
pub mod quiver;
pub mod silting;
pub mod verify;

pub use braid::{BraidElement, BraidWord, Perm};
pub use derived::{AutoSpec, ChartCoord, DerivedCat, DerivedObject, ObjectRecord};
pub use error::{Error, Result};
pub use module_cat::{ArQuiver, IntervalModule};
pub use orbit::{OrbitCategory, OrbitFunctor};
pub use quiver::{DimVector, Orientation, QuiverA, Reflection, Section};
pub use silting::{HasseQuiver, MutationDirection, SiltingCandidate};
