//! Lifting a shear with `ω = q²` to the minimal surface
//! `(u, v, w) = (Re f, Im f, 2 Im ψ)`, where
//!
//! ```text
//! ψ(z) = ∫_0^z q(ζ) φ'(ζ) / (1 - ω(ζ)) dζ.
//! ```
//!
//! The integrand carries `φ'`, the derivative of the polygon map; this is
//! the form the Weierstrass–Enneper representation requires.
//!
//! For `ω = z^n` with `n` even, `q = z^(n/2)` and the integrand is
//! `ζ^(n/2) (1 - ζ^n)^(-1-2/n) = Σ_k (1+2/n)_k / k! ζ^(n/2 + nk)`. Integrating
//! term by term and writing `1 / (nk + n/2 + 1) = (2/(n+2)) (1/2+1/n)_k / (3/2+1/n)_k`
//! gives
//!
//! ```text
//! ψ(z) = 2 z^((n+2)/2) / (n+2) · F(1+2/n, 1/2+1/n; 3/2+1/n; z^n).
//! ```

use crate::conformal::{check_closed_disk, NgonMap};
use crate::error::{Result, ShearError};
use crate::quadrature::{integrate_segment, IntegrationResult};
use crate::scalar::{cx_powi, Cx, Real};
use crate::shear::{analytic_shear_zn, shear_f, Dilatation, ShearResult};

use crate::shear::hyp2f1_closed_disk;

/// A point of the lifted surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint<T> {
    pub u: T,
    pub v: T,
    pub w: T,
}

impl<T: Real> SurfacePoint<T> {
    pub fn from_parts(f: Cx<T>, psi: Cx<T>) -> Self {
        Self { u: f.re, v: f.im, w: T::lit(2.0) * psi.im }
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite() && self.w.is_finite()
    }
}

/// Surface point together with the quadrature state it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftedPoint<T> {
    pub point: SurfacePoint<T>,
    pub shear: ShearResult<T>,
    pub psi: Cx<T>,
    pub psi_converged: bool,
}

impl<T: Real> LiftedPoint<T> {
    pub fn converged(&self) -> bool {
        self.shear.converged() && self.psi_converged
    }
}

fn require_sqrt<T: Real>(w: &Dilatation<T>) -> Result<()> {
    if w.has_sqrt() {
        Ok(())
    } else {
        Err(ShearError::NotLiftable(format!("{w:?}")))
    }
}

/// `ψ(z) = ∫_0^1 q(z t) φ'(z t) / (1 - ω(z t)) z dt`.
pub fn lift_psi<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, z: Cx<T>, tol: T) -> Result<IntegrationResult<T>> {
    require_sqrt(w)?;
    check_closed_disk(z)?;
    let one = Cx::new(T::one(), T::zero());
    Ok(integrate_segment(
        |t: T| {
            let zeta = z * t;
            let q = w.sqrt(zeta).unwrap_or(Cx::new(T::zero(), T::zero()));
            q * map.derivative_unchecked(zeta) / (one - w.eval(zeta)) * z
        },
        tol,
    ))
}

/// Numerical surface point from [`shear_f`] and [`lift_psi`].
pub fn surface_point<T: Real>(map: &NgonMap<T>, w: &Dilatation<T>, z: Cx<T>, tol: T) -> Result<LiftedPoint<T>> {
    require_sqrt(w)?;
    let shear = shear_f(map, w, z, tol)?;
    let psi = lift_psi(map, w, z, tol)?;
    Ok(LiftedPoint {
        point: SurfacePoint::from_parts(shear.f, psi.value),
        shear,
        psi: psi.value,
        psi_converged: psi.converged,
    })
}

/// Closed-form `ψ` for `ω = z^n`, `n` even.
pub fn analytic_psi_zn<T: Real>(n: u32, z: Cx<T>) -> Result<Cx<T>> {
    if n < 3 {
        return Err(ShearError::InvalidArgument(format!("polygon needs n >= 3 sides, got {n}")));
    }
    if n % 2 == 1 {
        return Err(ShearError::NotLiftable(format!("z^{n} has no analytic square root")));
    }
    check_closed_disk(z)?;
    let nt = T::from_count(n as usize);
    let one = T::one();
    let half = T::lit(0.5);
    let inv = one / nt;
    let f = hyp2f1_closed_disk(one + T::lit(2.0) * inv, half + inv, one + half + inv, cx_powi(z, n))?;
    Ok(cx_powi(z, n / 2 + 1) * (T::lit(2.0) / (nt + T::lit(2.0))) * f)
}

/// Closed-form surface point for `ω = z^n`, `n` even.
pub fn analytic_surface_point<T: Real>(n: u32, z: Cx<T>) -> Result<SurfacePoint<T>> {
    let psi = analytic_psi_zn(n, z)?;
    let (h, g) = analytic_shear_zn(n, z)?;
    Ok(SurfacePoint::from_parts(h + g.conj(), psi))
}
