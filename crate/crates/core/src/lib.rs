//! Harmonic shears of the conformal map of the unit disk onto a regular
//! polygon.
//!
//! Given a dilatation `ω`, the shear `f = h + conj(g)` of the polygon map `φ`
//! is computed by adaptive Gauss–Kronrod quadrature along radial segments,
//! checked against closed forms built from Gauss and Appell hypergeometric
//! functions, and (when `ω` has an analytic square root) lifted to a minimal
//! surface.
//!
//! Every routine is generic over the real scalar ([`Real`]: `f32` or `f64`);
//! the `*64` aliases below fix it to `f64`, which is what the stated
//! tolerances assume.
//!
//! ```
//! use harmonic_shear::{analytic_shear, shear_f, Complex64, Dilatation64, NgonMap64};
//!
//! let map = NgonMap64::new(4, 1e-10)?;
//! let omega = Dilatation64::power(8);
//! let z = Complex64::new(0.5, 0.25);
//! let s = shear_f(&map, &omega, z, 1e-10)?;
//! let (h, g) = analytic_shear(4, &omega, z)?;
//! assert!((s.h - h).norm() < 1e-12 && (s.g - g).norm() < 1e-12);
//! # Ok::<(), harmonic_shear::ShearError>(())
//! ```

// Guards are written `!(x > 0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod conformal;
pub mod error;
pub mod mesh;
pub mod quadrature;
pub mod scalar;
pub mod shear;
pub mod specfun;
pub mod surface;

pub use conformal::NgonMap;
pub use error::{Result, ShearError};
pub use mesh::{
    error_field_f, error_field_parts, mesh_boundary, mesh_interior, validate_mesh, DiskMesh,
    ErrorComponent, ErrorField, FieldSummary, GridLayout, HotSector, PointComparison,
    ValidationFields,
};
pub use quadrature::{
    adaptive_integrate, gauss_kronrod_15, gauss_legendre_rule, integrate_segment,
    IntegrationResult, QuadratureRule,
};
pub use scalar::{Cx, Real};
pub use shear::{
    analytic_phi, analytic_shear, analytic_shear_z2n, analytic_shear_zn, shear_f, shear_g,
    shear_h, Dilatation, ShearResult,
};
pub use specfun::{appell_f1, gauss_2f1, ln_gamma, pochhammer, AppellParams, HypergeometricParams};
pub use surface::{
    analytic_psi_zn, analytic_surface_point, lift_psi, surface_point, LiftedPoint, SurfacePoint,
};

pub type Complex64 = Cx<f64>;
pub type Complex32 = Cx<f32>;
pub type NgonMap64 = NgonMap<f64>;
pub type NgonMap32 = NgonMap<f32>;
pub type Dilatation64 = Dilatation<f64>;
pub type ShearResult64 = ShearResult<f64>;
pub type IntegrationResult64 = IntegrationResult<f64>;
pub type QuadratureRule64 = QuadratureRule<f64>;
pub type DiskMesh64 = DiskMesh<f64>;
pub type ErrorField64 = ErrorField<f64>;
pub type SurfacePoint64 = SurfacePoint<f64>;
