//! Radial Green's kernels of the spinor Klein–Gordon operator on products of
//! constant-curvature space forms.

pub mod error;
pub mod green;
pub mod jet;
pub mod lorentz;
pub mod oracle;
pub mod quadrature;
pub mod radial;
pub mod spaceform;
pub mod specialfn;
pub mod spectral;

pub use error::{Error, Result};
