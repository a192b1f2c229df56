//! Special functions: complex Gamma, Jacobi polynomials, Gauss 2F1.

pub mod gamma;
pub mod hyp2f1;
pub mod jacobi;

pub use gamma::{gamma, gamma_real, is_gamma_pole, ln_gamma, ln_gamma_abs, recip_gamma};
pub use hyp2f1::{
    hyp2f1, hyp2f1_derivatives, hyp2f1_derivatives_scaled, hyp2f1_scaled, hyp2f1_sweep,
    hyp2f1_transform,
    HypergeometricTriple, Scaled,
};
pub use jacobi::{jacobi_all, jacobi_all_with_derivatives, jacobi_p};

/// Principal-branch log-Gamma.
pub fn log_gamma(z: num_complex::Complex64) -> crate::error::Result<num_complex::Complex64> {
    ln_gamma(z)
}
