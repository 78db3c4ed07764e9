//! Exact algebra over Λ = Q[t, t^-1] for Alexander modules and Blanchfield
//! pairings: Smith normal forms, classification and realization of modules,
//! orthogonal decomposition of forms, and isomorphism tests.

pub mod decompose;
pub mod error;
pub mod factor;
pub mod form;
pub mod iso;
pub mod laurent;
pub mod matrix;
mod modgcd;
pub mod module;
pub mod poly;
pub mod realize;
pub mod snf;
pub mod symmetric;
pub mod torsion;
pub mod wire;

pub use decompose::{decompose, verify_decomposition, CanonicalBlock, DecompositionResult};
pub use error::{Error, Result};
pub use form::{pairing_from_matrix, BlanchfieldForm};
pub use iso::{isotest_forms, IsoReport, SearchBound, Verdict};
pub use laurent::{LaurentPoly, UnitFactor};
pub use matrix::LambdaMatrix;
pub use module::AlexanderModule;
pub use poly::Poly;
pub use realize::{realize_block, realize_cyclic_form, realize_form, realize_module, surgery_recipe, SurgeryRecipe};
pub use symmetric::SymmetricPoly;
pub use torsion::TorsionValue;

pub type Rational = num_rational::BigRational;
