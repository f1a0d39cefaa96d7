//! Conformal map of the unit disk onto the regular `n`-gon,
//! `φ(z) = ∫_0^z (1 - ζ^n)^(-2/n) dζ`, normalized by `φ(0) = 0`, `φ'(0) = 1`.
//!
//! The prevertices are the `n`-th roots of unity and the polygon vertices
//! lie on the rays through them. `φ` is evaluated along the radial segment
//! `ζ = z t`; for `|z| <= 1` and `t < 1` the point `(z t)^n` stays inside the
//! unit disk, so `1 - (z t)^n` never meets the closed negative real axis and
//! the principal power is continuous along the path.

use crate::error::{Result, ShearError};
use crate::quadrature::{integrate_segment, IntegrationResult};
use crate::scalar::{cx_powf_principal, cx_powi, Cx, Real};

/// The regular polygon map with `n >= 3` sides and its quadrature tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NgonMap<T> {
    n: u32,
    tol: T,
}

/// Slack allowed on `|z| <= 1` so mesh points built from `cos`/`sin` on the
/// unit circle are accepted.
pub(crate) fn closed_disk_slack<T: Real>() -> T {
    T::one() + T::epsilon() * T::lit(8.0)
}

pub(crate) fn check_closed_disk<T: Real>(z: Cx<T>) -> Result<()> {
    let r = z.norm();
    if r <= closed_disk_slack::<T>() {
        Ok(())
    } else {
        Err(ShearError::Domain(format!("point {z} lies outside the closed unit disk")))
    }
}

impl<T: Real> NgonMap<T> {
    pub fn new(n: u32, tol: T) -> Result<Self> {
        if n < 3 {
            return Err(ShearError::InvalidArgument(format!("polygon needs n >= 3 sides, got {n}")));
        }
        if !(tol > T::zero()) {
            return Err(ShearError::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        Ok(Self { n, tol })
    }

    pub fn sides(&self) -> u32 {
        self.n
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    /// The `k`-th prevertex `exp(2πik/n)`.
    pub fn prevertex(&self, k: u32) -> Cx<T> {
        let theta = T::lit(2.0) * T::PI() * T::from_count(k as usize) / T::from_count(self.n as usize);
        Cx::from_polar(T::one(), theta)
    }

    /// `φ'(z) = (1 - z^n)^(-2/n)` on the principal branch.
    pub fn derivative(&self, z: Cx<T>) -> Result<Cx<T>> {
        check_closed_disk(z)?;
        let base = Cx::new(T::one(), T::zero()) - cx_powi(z, self.n);
        // prevertices computed in floating point leave a residue of a few ulps
        if base.norm() <= T::lit(8.0) * T::from_count(self.n as usize) * T::epsilon() {
            return Err(ShearError::Pole(format!("{z} is a prevertex of the {}-gon", self.n)));
        }
        Ok(self.derivative_unchecked(z))
    }

    pub(crate) fn derivative_unchecked(&self, z: Cx<T>) -> Cx<T> {
        let base = Cx::new(T::one(), T::zero()) - cx_powi(z, self.n);
        cx_powf_principal(base, -T::lit(2.0) / T::from_count(self.n as usize))
    }

    /// `φ(z)` at the map's own tolerance.
    pub fn map(&self, z: Cx<T>) -> Result<IntegrationResult<T>> {
        self.map_with_tol(z, self.tol)
    }

    /// `φ(z) = ∫_0^1 φ'(z t) z dt`, adaptive to `tol`. Convergent on the whole
    /// closed disk (the prevertex singularity has exponent `-2/n > -1`).
    pub fn map_with_tol(&self, z: Cx<T>, tol: T) -> Result<IntegrationResult<T>> {
        check_closed_disk(z)?;
        Ok(integrate_segment(|t: T| self.derivative_unchecked(z * t) * z, tol))
    }
}
