//! Closed forms for the polygon shears, evaluated through the special
//! function oracles. They accept the closed unit disk: on the unit circle
//! the Euler integrals still converge except where `z^n` (or `-z^n`) equals
//! one, which is reported as a pole.

use crate::conformal::check_closed_disk;
use crate::error::{Result, ShearError};
use crate::scalar::{cx_powi, Cx, Real};
use crate::specfun::{
    appell_f1_euler, appell_f1_series, gauss_2f1_euler, gauss_2f1_series, AppellParams,
    HypergeometricParams, SERIES_RADIUS,
};

use super::Dilatation;

pub(crate) fn hyp2f1_closed_disk<T: Real>(a: T, b: T, c: T, x: Cx<T>) -> Result<Cx<T>> {
    let p = HypergeometricParams::new(a, b, c)?;
    if x.norm() <= T::lit(SERIES_RADIUS) {
        gauss_2f1_series(p, x)
    } else {
        gauss_2f1_euler(p, clamp_to_disk(x))
    }
}

fn appell_closed_disk<T: Real>(a: T, b1: T, b2: T, c: T, x: Cx<T>, y: Cx<T>) -> Result<Cx<T>> {
    let p = AppellParams::new(a, b1, b2, c)?;
    if x.norm().max(y.norm()) <= T::lit(SERIES_RADIUS) {
        appell_f1_series(p, x, y)
    } else {
        appell_f1_euler(p, clamp_to_disk(x), clamp_to_disk(y))
    }
}

// Points built as r·e^{iθ} with r = 1 can overshoot the circle by an ulp.
fn clamp_to_disk<T: Real>(x: Cx<T>) -> Cx<T> {
    let r = x.norm();
    if r > T::one() {
        x / r
    } else {
        x
    }
}

fn check_sides(n: u32) -> Result<()> {
    if n < 3 {
        return Err(ShearError::InvalidArgument(format!("polygon needs n >= 3 sides, got {n}")));
    }
    Ok(())
}

/// `φ(z) = z ₂F₁(2/n, 1/n; 1 + 1/n; z^n)`, the term-by-term integral of the
/// binomial series of `(1 - ζ^n)^(-2/n)`.
pub fn analytic_phi<T: Real>(n: u32, z: Cx<T>) -> Result<Cx<T>> {
    check_sides(n)?;
    check_closed_disk(z)?;
    let nt = T::from_count(n as usize);
    let one = T::one();
    let x = cx_powi(z, n);
    Ok(z * hyp2f1_closed_disk(T::lit(2.0) / nt, one / nt, one + one / nt, x)?)
}

/// `(h, g)` for `ω = z^n`:
/// `h = z F(1+2/n, 1/n; 1+1/n; z^n)`,
/// `g = z^(n+1)/(n+1) F(1+2/n, 1+1/n; 2+1/n; z^n)`.
pub fn analytic_shear_zn<T: Real>(n: u32, z: Cx<T>) -> Result<(Cx<T>, Cx<T>)> {
    check_sides(n)?;
    check_closed_disk(z)?;
    let zero = Cx::new(T::zero(), T::zero());
    if z == zero {
        return Ok((zero, zero));
    }
    let nt = T::from_count(n as usize);
    let one = T::one();
    let inv = one / nt;
    let x = cx_powi(z, n);
    let a = one + T::lit(2.0) * inv;
    let h = z * hyp2f1_closed_disk(a, inv, one + inv, x)?;
    let g = cx_powi(z, n + 1) / (nt + one) * hyp2f1_closed_disk(a, one + inv, T::lit(2.0) + inv, x)?;
    Ok((h, g))
}

/// `(h, g)` for `ω = z^(2n)`:
/// `h = z F₁(1/n, 1+2/n, 1; 1+1/n; z^n, -z^n)`,
/// `g = z^(2n+1)/(2n+1) F₁(2+1/n, 1+2/n, 1; 3+1/n; z^n, -z^n)`.
pub fn analytic_shear_z2n<T: Real>(n: u32, z: Cx<T>) -> Result<(Cx<T>, Cx<T>)> {
    check_sides(n)?;
    check_closed_disk(z)?;
    let zero = Cx::new(T::zero(), T::zero());
    if z == zero {
        return Ok((zero, zero));
    }
    let nt = T::from_count(n as usize);
    let one = T::one();
    let two = T::lit(2.0);
    let inv = one / nt;
    let x = cx_powi(z, n);
    let b1 = one + two * inv;
    let h = z * appell_closed_disk(inv, b1, one, one + inv, x, -x)?;
    let g = cx_powi(z, 2 * n + 1) / (two * nt + one)
        * appell_closed_disk(two + inv, b1, one, T::lit(3.0) + inv, x, -x)?;
    Ok((h, g))
}

/// Closed-form `(h, g)` for the dilatations that have one: `ω ≡ 0`,
/// `ω = z^n` and `ω = z^(2n)`.
pub fn analytic_shear<T: Real>(n: u32, w: &Dilatation<T>, z: Cx<T>) -> Result<(Cx<T>, Cx<T>)> {
    match w.power_exponent() {
        Some(0) => Ok((analytic_phi(n, z)?, Cx::new(T::zero(), T::zero()))),
        Some(m) if m == n => analytic_shear_zn(n, z),
        Some(m) if m == 2 * n => analytic_shear_z2n(n, z),
        Some(m) => Err(ShearError::NoOracle(format!("omega = z^{m} on the {n}-gon"))),
        None => Err(ShearError::NoOracle("a custom dilatation".into())),
    }
}
