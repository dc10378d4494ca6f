//! Finite Łukasiewicz–Moisil algebras and their Boolean shadows.
//!
//! Everything here is finite and checked by exhaustion: a claim about an
//! algebra is an [`AxiomReport`] listing every law that was evaluated, how
//! many instances were tried, and a concrete witness for the first failure.
//!
//! * [`boolalg`]: powerset Boolean algebras, principal ideals, ultrafilters
//!   and homomorphisms.
//! * [`lm`]: LM algebras as operation tables, in the Chrysippian (φ) and the
//!   mutually exclusive (J) signatures.
//! * [`construct`]: the tuple algebras `T(B)` and `J(B)`, the adjunction
//!   between LM algebras and Boolean algebras, and the equivalence with
//!   Boolean algebras carrying a symmetric sequence of ideals.
//! * [`stone`]: finite Stone duality and its extension to symmetric open
//!   families.
//! * [`mvn`]: MV and MV_n axioms and the ideal condition for Ł-properness.
//! * [`suites`]: parameterised instance families used by the `verify`
//!   command and the acceptance tests.

pub mod boolalg;
pub mod construct;
mod error;
pub mod lm;
pub mod mutation;
pub mod mvn;
pub mod report;
pub mod stone;
pub mod suites;

pub use error::{Error, Result};
pub use report::{AxiomReport, LawResult, Witness};
