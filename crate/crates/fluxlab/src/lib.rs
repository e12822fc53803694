//! Numerical laboratory for complex Schrödinger operators `-Δ + V` on 1-D and
//! 2-D simplicial meshes.
//!
//! The crate discretizes the operator in weak form (cotangent stiffness plus
//! lumped mass), computes near-kernel fields of the resulting complex-symmetric
//! system, and checks the divergence identity for the current
//! `f̄∇f − f∇f̄` in pointwise, weak (cutoff-tested), and exactly balanced
//! discrete forms. On top of that sit checkers for the two structure theorems
//! (signed imaginary potentials force kernel fields to vanish; real potentials
//! force locally constant phase) together with the unit-circle construction
//! showing that a nonzero winding number defeats the second conclusion.
//!
//! Modules follow the pipeline: [`mesh`] builds domains, [`operators`]
//! assembles matrices and the gradient/divergence pair, [`spectral`] solves for
//! near-kernel vectors, [`identity`] and [`phase`] evaluate the identities and
//! phase topology, [`theorems`] renders verdicts, and [`report`] drives
//! experiments from config files.

pub mod band;
pub mod error;
pub mod field;
pub mod identity;
pub mod mesh;
pub mod operators;
pub mod phase;
pub mod report;
pub mod sparse;
pub mod spectral;
pub mod theorems;
mod util;

pub use error::{Error, Result};
pub use field::{CellVectorField, ComplexField, Cutoff};
pub use mesh::Mesh;
pub use operators::{MassMatrix, Potential, SchrodingerSystem, StiffnessMatrix};

/// Central tolerance record. Every checker threshold lives here so that
/// experiments and tests quote one source.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    /// Exact discrete identities (summation-by-parts rearrangements): the
    /// residual scale factor relative to the magnitudes entering the sum.
    pub roundoff: f64,
    /// Scale factor for the integrated balance `Σ f̄(Af) − f(Af̄)`.
    pub balance: f64,
    /// Relative sigma below which a system counts as numerically singular.
    pub spectral: f64,
    /// Phase range bound for "locally constant" verdicts.
    pub phase: f64,
    /// Scale factor for the phase Dirichlet energy bound.
    pub energy: f64,
    /// Relative |f| threshold for zero detection.
    pub zero: f64,
    /// Margin below π at which a per-edge phase jump is rejected as
    /// under-resolved.
    pub phase_jump_margin: f64,
    /// Observed-order window for refinement studies.
    pub order_low: f64,
    pub order_high: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            roundoff: 1e-12,
            balance: 1e-13,
            spectral: 1e-9,
            phase: 1e-8,
            energy: 1e-10,
            zero: 1e-6,
            phase_jump_margin: 1e-6,
            order_low: 1.7,
            order_high: 2.3,
        }
    }
}
