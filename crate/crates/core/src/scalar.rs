//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating point type the library is generic over (`f32` or `f64`).
///
/// Tolerances quoted throughout the crate documentation assume `f64`; the
/// `f32` instantiation works but saturates around `1e-6`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal. Panics only if the literal is not representable,
    /// which never happens for the finite constants used in this crate.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    /// Converts a count or index.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a [`Real`] scalar.
pub type Cx<T> = Complex<T>;

pub(crate) fn is_finite_cx<T: Real>(z: Cx<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Integer power by repeated squaring; exact for the small exponents used
/// by dilatations and polygon maps, and avoids the `exp(n log z)` route.
pub(crate) fn cx_powi<T: Real>(z: Cx<T>, n: u32) -> Cx<T> {
    let mut base = z;
    let mut exp = n;
    let mut acc = Cx::new(T::one(), T::zero());
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        exp >>= 1;
    }
    acc
}

/// Principal power `w^p = exp(p Log w)` for real `p`.
pub(crate) fn cx_powf_principal<T: Real>(w: Cx<T>, p: T) -> Cx<T> {
    if w.re.is_zero() && w.im.is_zero() {
        return if p > T::zero() {
            Cx::new(T::zero(), T::zero())
        } else {
            Cx::new(T::infinity(), T::zero())
        };
    }
    let (modulus, arg) = (w.norm(), w.im.atan2(w.re));
    let mag = (p * modulus.ln()).exp();
    let phase = p * arg;
    Cx::new(mag * phase.cos(), mag * phase.sin())
}
