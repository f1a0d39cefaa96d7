use crate::error::{Result, ShearError};
use crate::scalar::{cx_powf_principal, Cx, Real};

use super::{
    is_nonpositive_integer, ln_beta, normalized_beta_integral, series_cutoff, MAX_SERIES_TERMS,
    SERIES_RADIUS,
};

/// Real parameters `(a, b₁, b₂; c)` of the first Appell function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellParams<T> {
    pub a: T,
    pub b1: T,
    pub b2: T,
    pub c: T,
}

impl<T: Real> AppellParams<T> {
    pub fn new(a: T, b1: T, b2: T, c: T) -> Result<Self> {
        if !(a.is_finite() && b1.is_finite() && b2.is_finite() && c.is_finite()) {
            return Err(ShearError::InvalidArgument("non-finite Appell parameter".into()));
        }
        if is_nonpositive_integer(c) {
            return Err(ShearError::InvalidArgument(format!(
                "c = {c} is zero or a negative integer"
            )));
        }
        Ok(Self { a, b1, b2, c })
    }
}

/// `F₁(a, b₁, b₂; c; x, y)` for `|x|, |y| < 1`: double series when both
/// arguments are within 1/2, Euler integral otherwise (needs `c > a > 0`).
pub fn appell_f1<T: Real>(p: AppellParams<T>, x: Cx<T>, y: Cx<T>) -> Result<Cx<T>> {
    let r = x.norm().max(y.norm());
    if !(r < T::one()) {
        return Err(ShearError::Domain(format!(
            "F1 needs |x|, |y| < 1, got |x| = {}, |y| = {}",
            x.norm(),
            y.norm()
        )));
    }
    if r <= T::lit(SERIES_RADIUS) {
        appell_f1_series(p, x, y)
    } else {
        appell_f1_euler(p, x, y)
    }
}

/// Double series summed by anti-diagonals `k + l = N`:
/// `Σ_N (a)_N / (c)_N Σ_{k+l=N} (b₁)_k x^k / k! · (b₂)_l y^l / l!`.
///
/// Stops once the absolute sum of two consecutive anti-diagonals is below
/// half an ulp of the accumulated value.
pub fn appell_f1_series<T: Real>(p: AppellParams<T>, x: Cx<T>, y: Cx<T>) -> Result<Cx<T>> {
    if !(x.norm() < T::one() && y.norm() < T::one()) {
        return Err(ShearError::Domain("F1 series needs |x|, |y| < 1".into()));
    }
    let cutoff = series_cutoff::<T>();
    let zero = Cx::new(T::zero(), T::zero());
    // xs[k] = (b1)_k x^k / k!, ys[l] = (b2)_l y^l / l!
    let mut xs = vec![Cx::new(T::one(), T::zero())];
    let mut ys = vec![Cx::new(T::one(), T::zero())];
    let mut outer = T::one();
    let mut sum = Cx::new(T::one(), T::zero());
    let mut quiet = 0;
    for n in 1..MAX_SERIES_TERMS {
        let prev = T::from_count(n - 1);
        let nt = T::from_count(n);
        outer = outer * (p.a + prev) / (p.c + prev);
        let xn = xs[n - 1] * x * ((p.b1 + prev) / nt);
        let yn = ys[n - 1] * y * ((p.b2 + prev) / nt);
        xs.push(xn);
        ys.push(yn);

        let mut diag = zero;
        let mut diag_abs = T::zero();
        for k in 0..=n {
            let t = xs[k] * ys[n - k];
            diag = diag + t;
            diag_abs = diag_abs + t.norm();
        }
        sum = sum + diag * outer;
        if diag_abs * outer.abs() <= cutoff * sum.norm() {
            quiet += 1;
            if quiet == 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(ShearError::NoConvergence { estimate: f64::NAN })
}

/// Euler integral
/// `Γ(c) / (Γ(a) Γ(c-a)) ∫_0^1 t^(a-1) (1-t)^(c-a-1) (1-xt)^(-b₁) (1-yt)^(-b₂) dt`,
/// valid on the closed bidisk for `c > a > 0`. An argument exactly equal to
/// 1 is folded into the `(1-t)` weight; it is a pole when the folded
/// exponent is not positive.
pub fn appell_f1_euler<T: Real>(p: AppellParams<T>, x: Cx<T>, y: Cx<T>) -> Result<Cx<T>> {
    if !(p.c > p.a && p.a > T::zero()) {
        return Err(ShearError::UnsupportedParameters(format!(
            "Euler integral for F1 requires c > a > 0 (a = {}, c = {})",
            p.a, p.c
        )));
    }
    if x.norm() > T::one() || y.norm() > T::one() {
        return Err(ShearError::Domain("F1 Euler integral needs |x|, |y| <= 1".into()));
    }
    let one = Cx::new(T::one(), T::zero());
    let mut q = p.c - p.a;
    let mut bx = p.b1;
    let mut by = p.b2;
    if x == one {
        q = q - bx;
        bx = T::zero();
    }
    if y == one {
        q = q - by;
        by = T::zero();
    }
    if !(q > T::zero()) {
        return Err(ShearError::Pole("F1 Euler integral diverges at argument 1".into()));
    }
    let (v, ok) = normalized_beta_integral(p.a, q, |t: T| {
        let mut g = one;
        if !bx.is_zero() {
            g = g * cx_powf_principal(one - x * t, -bx);
        }
        if !by.is_zero() {
            g = g * cx_powf_principal(one - y * t, -by);
        }
        g
    });
    if !ok {
        return Err(ShearError::NoConvergence { estimate: f64::NAN });
    }
    // Re-normalize from B(a, q) to B(a, c - a) when an argument was folded.
    let renorm = (ln_beta(p.a, q) - ln_beta(p.a, p.c - p.a)).exp();
    Ok(v * renorm)
}

#[cfg(test)]
mod tests {
    use super::super::{gauss_2f1, HypergeometricParams};
    use super::*;

    fn ap(a: f64, b1: f64, b2: f64, c: f64) -> AppellParams<f64> {
        AppellParams::new(a, b1, b2, c).unwrap()
    }

    #[test]
    fn value_at_origin() {
        let v = appell_f1(ap(0.3, 1.2, -0.7, 2.1), Cx::new(0.0, 0.0), Cx::new(0.0, 0.0)).unwrap();
        assert_eq!(v, Cx::new(1.0, 0.0));
    }

    #[test]
    fn reduces_to_2f1_when_y_vanishes() {
        let x = Cx::new(0.3, 0.0);
        let f1 = appell_f1(ap(0.25, 1.5, 1.0, 1.25), x, Cx::new(0.0, 0.0)).unwrap();
        let f21 = gauss_2f1(HypergeometricParams::new(0.25, 1.5, 1.25).unwrap(), x).unwrap();
        assert!((f1 - f21).norm() < 1e-15);
    }

    #[test]
    fn branches_agree_for_square_shear_parameters() {
        let p = ap(0.25, 1.5, 1.0, 1.25);
        let (x, y) = (Cx::new(0.0625, 0.0), Cx::new(-0.0625, 0.0));
        let s = appell_f1_series(p, x, y).unwrap();
        let e = appell_f1_euler(p, x, y).unwrap();
        assert!((s - e).norm() < 1e-10, "{s} vs {e}");
    }

    #[test]
    fn equal_arguments_collapse_to_2f1() {
        // F1(a, b1, b2; c; x, x) = 2F1(a, b1 + b2; c; x)
        let x = Cx::new(-0.35, 0.2);
        let f1 = appell_f1_series(ap(0.6, 0.9, 1.3, 1.7), x, x).unwrap();
        let f21 = gauss_2f1(HypergeometricParams::new(0.6, 2.2, 1.7).unwrap(), x).unwrap();
        assert!((f1 - f21).norm() < 1e-14);
    }

    #[test]
    fn errors() {
        let p = ap(0.25, 1.5, 1.0, 1.25);
        assert!(matches!(
            appell_f1(p, Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)),
            Err(ShearError::Domain(_))
        ));
        assert!(matches!(
            appell_f1(ap(1.5, 1.0, 1.0, 1.25), Cx::new(0.7, 0.0), Cx::new(0.0, 0.0)),
            Err(ShearError::UnsupportedParameters(_))
        ));
        assert!(matches!(
            appell_f1_euler(p, Cx::new(1.0, 0.0), Cx::new(-1.0, 0.0)),
            Err(ShearError::Pole(_))
        ));
    }
}
