//! Exact E-polynomials of `SL(2,C)` character varieties of once-punctured
//! surfaces of any genus, for holonomy `Id`, `-Id`, `J+`, `J-` and `ξ_λ`,
//! with a finite-field point-count verifier.
//!
//! Layering, bottom-up: [`poly`] → [`repring`] → [`gluing`] → [`recursion`]
//! → [`moduli`]. [`fforacle`] is independent of all of them except `poly`
//! evaluation, and [`cli`] drives everything.

pub mod cli;
pub mod error;
pub mod fforacle;
pub mod gluing;
pub mod moduli;
pub mod poly;
pub mod recursion;
pub mod repring;

pub use error::{Error, Result};
pub use gluing::{glue, glue_r4, glue_sector, GlueCoefficients, GlueOutput, Sector, SectorVector};
pub use moduli::{
    check_identities, closed_form_epoly, moduli_epoly, parabolic_hodge_monodromy,
    reducible_breakdown, HolonomyClass, IdentityCheck, IdentityReport, ReducibleBreakdown,
};
pub use poly::IntPoly;
pub use recursion::{
    base_vector, closed_form_vector, sector_vector, sector_vectors, TransferMatrix,
};
pub use repring::{MonodromyRep2, MonodromyRep4};
