//! Special functions used as closed-form oracles: `ln Γ`, Pochhammer
//! symbols, Gauss `₂F₁` and the first Appell function `F₁`, all with real
//! parameters and complex argument.
//!
//! Each hypergeometric function has two independent evaluation routes, the
//! power series (used for small arguments) and the Euler integral (used
//! elsewhere in the closed disk), so each can check the other.
//!
//! Branch lemma for the Euler integrals: for `|x| <= 1`, `x != 1` and
//! `t ∈ [0, 1)`, `|x t| < 1`, so `1 - x t` has positive real part and the
//! principal power `(1 - x t)^(-a)` is continuous along the whole path.

mod appell;
mod gamma;
mod hypergeometric;

use crate::quadrature::{adaptive_integrate, DEFAULT_MAX_DEPTH};
use crate::scalar::{Cx, Real};

pub use appell::{appell_f1, appell_f1_euler, appell_f1_series, AppellParams};
pub use gamma::{ln_gamma, pochhammer};
pub use hypergeometric::{gauss_2f1, gauss_2f1_euler, gauss_2f1_series, HypergeometricParams};

pub(crate) use gamma::ln_beta;

/// Arguments with modulus at most this use the power series.
pub const SERIES_RADIUS: f64 = 0.5;

/// Maximum number of series terms (per index for `F₁`).
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Relative accuracy requested from the Euler integrals.
pub const EULER_REL_TOL: f64 = 1e-13;

/// Relative size below which a series term (or `F₁` anti-diagonal) is dropped.
pub(crate) fn series_cutoff<T: Real>() -> T {
    T::epsilon() * T::lit(0.5)
}

fn euler_tolerance<T: Real>() -> T {
    T::lit(EULER_REL_TOL).max(T::epsilon() * T::lit(64.0))
}

pub(crate) fn is_nonpositive_integer<T: Real>(c: T) -> bool {
    c <= T::zero() && c == c.round()
}

/// `∫_0^1 t^(p-1) (1-t)^(q-1) g(t) dt / B(p, q)` for `p, q > 0`.
///
/// The interval is split at 1/2; an endpoint whose exponent is below 1 is
/// removed by `t = s^(1/p)` (or `1 - t = u^(1/q)`), which turns the weight
/// into the constant `1/p` (or `1/q`). Returns the normalized value and
/// whether the adaptive quadrature met its tolerance.
pub(crate) fn normalized_beta_integral<T, G>(p: T, q: T, g: G) -> (Cx<T>, bool)
where
    T: Real,
    G: Fn(T) -> Cx<T>,
{
    let one = T::one();
    let half = T::lit(0.5);
    let tol = euler_tolerance::<T>() / T::lit(2.0);
    let ln_b = ln_beta(p, q);
    // Integral scaled by 1/B on the fly so the tolerance is relative.
    let scale = (-ln_b).exp();

    let left = if p < one {
        let upper = half.powf(p);
        let inv_p = one / p;
        adaptive_integrate(
            |s: T| {
                let t = s.powf(inv_p);
                g(t) * ((one - t).powf(q - one) * inv_p * scale)
            },
            T::zero(),
            upper,
            tol,
            DEFAULT_MAX_DEPTH,
        )
    } else {
        adaptive_integrate(
            |t: T| g(t) * (t.powf(p - one) * (one - t).powf(q - one) * scale),
            T::zero(),
            half,
            tol,
            DEFAULT_MAX_DEPTH,
        )
    };

    let right = if q < one {
        let upper = half.powf(q);
        let inv_q = one / q;
        adaptive_integrate(
            |u: T| {
                let t = one - u.powf(inv_q);
                g(t) * (t.powf(p - one) * inv_q * scale)
            },
            T::zero(),
            upper,
            tol,
            DEFAULT_MAX_DEPTH,
        )
    } else {
        adaptive_integrate(
            |t: T| g(t) * (t.powf(p - one) * (one - t).powf(q - one) * scale),
            half,
            one,
            tol,
            DEFAULT_MAX_DEPTH,
        )
    };

    (left.value + right.value, left.converged && right.converged)
}
