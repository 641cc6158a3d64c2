//! Generalized trigonometric and hyperbolic functions built on umbral
//! composition rules.
//!
//! The ordinary trigonometric identities survive the replacement of the
//! exponential by Bessel-Tricomi-type series provided the ordinary sum is
//! replaced by a weighted binomial composition rule. This crate implements
//! the function families (Laguerre, alpha-order, Humbert, pseudo-hyperbolic,
//! Airy-type), the composition algebra that makes their addition,
//! duplication and De Moivre theorems hold, Borel-type integral transforms
//! that map them back to elementary functions, and spectral/umbral solvers
//! for the associated heat-type evolution equations. Every structural
//! identity is exposed as a computable residual.
//!
//! Entry points:
//! - [`series`]: coefficient generators, truncated evaluation, diagonal
//!   derivative operators.
//! - [`umbral`]: umbral sequences, weighted-binomial sums, scaling, limits.
//! - [`identities`]: user-facing function wrappers and the residual suite.
//! - [`transforms`]: Borel-type transforms and diffusion solvers.
//! - [`quadrature`]: Gauss-Laguerre/Jacobi rules and composite Simpson.

pub mod error;
pub mod gamma;
pub mod identities;
pub mod quadrature;
pub mod series;
pub mod transforms;
pub mod umbral;

pub use error::{Error, Result};
pub use gamma::{beta, gamma, ln_gamma};
pub use identities::{
    g_alpha, identity_residual, lc, lc_ab, lc_alpha, lch, lissajous_points, ls, ls_ab, ls_alpha,
    lsh, phf_ch, phf_e, phf_sh, run_identity_suite, sector_area, swept_area, IdentityKind,
    ResidualArgs, SuiteRow, UMBRAL_ORDER,
};
pub use quadrature::{gauss_jacobi01, gauss_laguerre, simpson, QuadRule, QuadratureSpec};
pub use series::{
    apply_derivative, bessel_j0, coeff_sequence, eval, eval_derivative, eval_real,
    eval_with_status, DerivOp, EvalConfig, SeriesFamily, Support,
};
pub use transforms::{
    airy_heat_spectral, borel_transform, g_alpha_integral, heat_spectral, laguerre_heat_closed,
    ll_heat_umbral, DiffusionOperator, DiffusionProblem, InitialCondition, SpectralDensity,
};
pub use umbral::{
    embed, embed_block3, eval_on_sequence, j0_term, napier_term, phf_roots_average, scale,
    umbral_sum, weight, Indexing, SumFamily, UmbralSequence, UnityRoots,
};

#[cfg(test)]
mod concurrency_contract {
    // Everything is a pure value; results must be freely transferable
    // between threads.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn public_types_are_send_and_sync() {
        assert_send_sync::<crate::SeriesFamily>();
        assert_send_sync::<crate::EvalConfig>();
        assert_send_sync::<crate::DerivOp>();
        assert_send_sync::<crate::SumFamily>();
        assert_send_sync::<crate::UmbralSequence>();
        assert_send_sync::<crate::UnityRoots>();
        assert_send_sync::<crate::QuadRule>();
        assert_send_sync::<crate::QuadratureSpec>();
        assert_send_sync::<crate::SpectralDensity>();
        assert_send_sync::<crate::DiffusionProblem>();
        assert_send_sync::<crate::Error>();
    }
}
