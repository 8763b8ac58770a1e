//! Combinatorial classification of Serre subcategories, torsion-free classes
//! and KE-closed subcategories over a commutative noetherian ring, modelled
//! on a finite poset standing in for `Spec R`.
//!
//! * [`poset`]: the spectral poset, closures, heights, structure report
//! * [`bass`]: Bass functions, validation and enumeration
//! * [`sequence`]: Bass sequences and the function/sequence bijection
//! * [`profile`]: depth profiles of abstract modules and witnesses
//! * [`classify`]: classifier tables, canonical forms, top-dimension classes
//! * [`format`], [`dot`]: file formats and diagram output

pub mod bass;
pub mod classify;
pub mod depth;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod function;
pub mod poset;
pub mod profile;
pub mod sequence;

pub use bass::{validate_bass, BassFunction, BassReport};
pub use classify::{ClassificationTable, ClassifierLevel};
pub use depth::{Depth, INF};
pub use error::{Error, Result};
pub use function::SpecFunction;
pub use poset::{Element, ElementSet, SpectralPoset, StructureReport};
pub use profile::{DepthProfile, WitnessGenerator};
pub use sequence::{BassSequence, TwoBassPair};
