//! Shear construction: given the polygon map `φ` and an analytic dilatation
//! `ω`, solve `h' - g' = φ'`, `ω h' - g' = 0` with `h(0) = g(0) = 0`.
//!
//! Along the radial path `ζ = z t`:
//!
//! ```text
//! h(z) = ∫_0^1 φ'(z t) / (1 - ω(z t)) z dt
//! g(z) = ∫_0^1 ω(z t) φ'(z t) / (1 - ω(z t)) z dt
//! f(z) = 2 Re h(z) - conj(φ(z)) = h(z) + conj(g(z))
//! ```

mod analytic;
mod dilatation;

use crate::conformal::{check_closed_disk, NgonMap};
use crate::error::Result;
use crate::quadrature::{integrate_segment, IntegrationResult};
use crate::scalar::{Cx, Real};

pub use analytic::{analytic_phi, analytic_shear, analytic_shear_z2n, analytic_shear_zn};
pub(crate) use analytic::hyp2f1_closed_disk;
pub use dilatation::Dilatation;

/// Default per-point quadrature tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Values of the shear at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShearResult<T> {
    pub h: Cx<T>,
    pub g: Cx<T>,
    pub f: Cx<T>,
    pub phi: Cx<T>,
    pub h_converged: bool,
    pub phi_converged: bool,
}

impl<T: Real> ShearResult<T> {
    pub fn converged(&self) -> bool {
        self.h_converged && self.phi_converged
    }

    /// `h + conj(g)`, the canonical form; equals `f` up to rounding.
    pub fn f_from_parts(&self) -> Cx<T> {
        self.h + self.g.conj()
    }
}

fn h_integrand<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, zeta: Cx<T>) -> Cx<T> {
    let one = Cx::new(T::one(), T::zero());
    map.derivative_unchecked(zeta) / (one - w.eval(zeta))
}

/// Analytic part `h(z)`. A pole of `1/(1 - ω)` on the path shows up as a
/// non-finite value or `converged = false`, never as an error.
pub fn shear_h<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, z: Cx<T>, tol: T) -> Result<IntegrationResult<T>> {
    check_closed_disk(z)?;
    Ok(integrate_segment(|t: T| h_integrand(map, w, z * t) * z, tol))
}

/// Co-analytic part `g(z)`, integrated independently of `h`.
pub fn shear_g<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, z: Cx<T>, tol: T) -> Result<IntegrationResult<T>> {
    check_closed_disk(z)?;
    if w.is_zero() {
        return Ok(integrate_segment(|_| Cx::new(T::zero(), T::zero()), tol));
    }
    Ok(integrate_segment(
        |t: T| {
            let zeta = z * t;
            w.eval(zeta) * h_integrand(map, w, zeta) * z
        },
        tol,
    ))
}

/// Full shear at `z`: `h` by quadrature, `φ` by quadrature, then
/// `f = 2 Re h - conj φ` and `g = h - φ`.
pub fn shear_f<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, z: Cx<T>, tol: T) -> Result<ShearResult<T>> {
    let h = shear_h(map, w, z, tol)?;
    let phi = map.map_with_tol(z, tol)?;
    let two = T::lit(2.0);
    let f = Cx::new(two * h.value.re, T::zero()) - phi.value.conj();
    Ok(ShearResult {
        h: h.value,
        g: h.value - phi.value,
        f,
        phi: phi.value,
        h_converged: h.converged,
        phi_converged: phi.converged,
    })
}
