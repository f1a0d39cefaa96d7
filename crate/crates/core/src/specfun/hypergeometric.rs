use crate::error::{Result, ShearError};
use crate::scalar::{cx_powf_principal, Cx, Real};

use super::{
    is_nonpositive_integer, ln_beta, normalized_beta_integral, series_cutoff, MAX_SERIES_TERMS,
    SERIES_RADIUS,
};

/// Real parameters `(a, b; c)` of `₂F₁`, with `c` not a non-positive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> HypergeometricParams<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(ShearError::InvalidArgument("non-finite hypergeometric parameter".into()));
        }
        if is_nonpositive_integer(c) {
            return Err(ShearError::InvalidArgument(format!(
                "c = {c} is zero or a negative integer"
            )));
        }
        Ok(Self { a, b, c })
    }
}

/// `₂F₁(a, b; c; z)` for `|z| < 1`: power series for `|z| <= 1/2` or when
/// it terminates, Euler integral beyond. The Euler branch needs `c > b > 0`
/// or, using the symmetry in `a` and `b`, `c > a > 0`.
pub fn gauss_2f1<T: Real>(p: HypergeometricParams<T>, z: Cx<T>) -> Result<Cx<T>> {
    let r = z.norm();
    if !(r < T::one()) {
        return Err(ShearError::Domain(format!("2F1 needs |z| < 1, got |z| = {r}")));
    }
    let terminates = is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b);
    if r <= T::lit(SERIES_RADIUS) || terminates {
        gauss_2f1_series(p, z)
    } else if !(p.c > p.b && p.b > T::zero()) && p.c > p.a && p.a > T::zero() {
        gauss_2f1_euler(HypergeometricParams { a: p.b, b: p.a, c: p.c }, z)
    } else {
        gauss_2f1_euler(p, z)
    }
}

/// Power series `Σ (a)_k (b)_k / ((c)_k k!) z^k`, summed until a term drops
/// below half an ulp of the partial sum.
pub fn gauss_2f1_series<T: Real>(p: HypergeometricParams<T>, z: Cx<T>) -> Result<Cx<T>> {
    if !(z.norm() < T::one()) {
        return Err(ShearError::Domain(format!("2F1 series needs |z| < 1, got {z}")));
    }
    let cutoff = series_cutoff::<T>();
    let mut term = Cx::new(T::one(), T::zero());
    let mut sum = term;
    for k in 0..MAX_SERIES_TERMS {
        let kt = T::from_count(k);
        let ratio = (p.a + kt) * (p.b + kt) / ((p.c + kt) * (kt + T::one()));
        term = term * z * ratio;
        sum = sum + term;
        if term.norm() <= cutoff * sum.norm() {
            return Ok(sum);
        }
    }
    Err(ShearError::NoConvergence { estimate: term.norm().as_f64() })
}

/// Euler integral
/// `Γ(c) / (Γ(b) Γ(c-b)) ∫_0^1 t^(b-1) (1-t)^(c-b-1) (1 - z t)^(-a) dt`.
///
/// Valid on the closed unit disk when `c > b > 0`. At `z = 1` the integrand
/// weight becomes `(1-t)^(c-a-b-1)`; that point is a pole unless `c > a + b`.
pub fn gauss_2f1_euler<T: Real>(p: HypergeometricParams<T>, z: Cx<T>) -> Result<Cx<T>> {
    if !(p.c > p.b && p.b > T::zero()) {
        return Err(ShearError::UnsupportedParameters(format!(
            "Euler integral for 2F1 requires c > b > 0 (b = {}, c = {})",
            p.b, p.c
        )));
    }
    if z.norm() > T::one() {
        return Err(ShearError::Domain(format!("2F1 Euler integral needs |z| <= 1, got {z}")));
    }
    let one = T::one();
    if z.re == one && z.im.is_zero() {
        let q = p.c - p.a - p.b;
        if !(q > T::zero()) {
            return Err(ShearError::Pole("2F1 diverges at z = 1 when c <= a + b".into()));
        }
        let v = (ln_beta(p.b, q) - ln_beta(p.b, p.c - p.b)).exp();
        return Ok(Cx::new(v, T::zero()));
    }
    let (v, ok) = normalized_beta_integral(p.b, p.c - p.b, |t: T| {
        cx_powf_principal(Cx::new(one, T::zero()) - z * t, -p.a)
    });
    if !ok {
        return Err(ShearError::NoConvergence { estimate: f64::NAN });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(a: f64, b: f64, c: f64) -> HypergeometricParams<f64> {
        HypergeometricParams::new(a, b, c).unwrap()
    }

    #[test]
    fn value_at_zero() {
        let v = gauss_2f1(hp(1.3, -0.4, 2.2), Cx::new(0.0, 0.0)).unwrap();
        assert_eq!(v, Cx::new(1.0, 0.0));
    }

    #[test]
    fn log_identity() {
        let v = gauss_2f1(hp(1.0, 1.0, 2.0), Cx::new(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0 * 2.0_f64.ln()).abs() < 1e-15);
        assert!((v.re - 1.386_294_361_119_890_6).abs() < 1e-15);
    }

    #[test]
    fn branches_agree_for_square_shear_parameters() {
        let p = hp(1.5, 0.25, 1.25);
        let z = Cx::new(0.0625, 0.0);
        let s = gauss_2f1_series(p, z).unwrap();
        let e = gauss_2f1_euler(p, z).unwrap();
        assert!((s - e).norm() < 1e-11, "{s} vs {e}");
    }

    #[test]
    fn terminating_series() {
        // F(-2, b; c; z) = 1 - 2bz/c + b(b+1) z^2 / (c(c+1))
        let (b, c) = (0.7, 1.9);
        let z = Cx::new(0.3, -0.2);
        let expect = Cx::new(1.0, 0.0) - z * (2.0 * b / c) + z * z * (b * (b + 1.0) / (c * (c + 1.0)));
        let v = gauss_2f1_series(hp(-2.0, b, c), z).unwrap();
        assert!((v - expect).norm() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(matches!(HypergeometricParams::new(1.0, 1.0, -2.0), Err(ShearError::InvalidArgument(_))));
        assert!(matches!(gauss_2f1(hp(1.0, 1.0, 2.0), Cx::new(1.0, 0.0)), Err(ShearError::Domain(_))));
        assert!(matches!(
            gauss_2f1(hp(2.0, 3.0, 1.5), Cx::new(0.7, 0.0)),
            Err(ShearError::UnsupportedParameters(_))
        ));
        assert!(matches!(
            gauss_2f1(hp(1.75, -0.5, 1.5), Cx::new(0.7, 0.0)),
            Err(ShearError::UnsupportedParameters(_))
        ));
    }

    #[test]
    fn gauss_sum_at_one() {
        // F(a, b; c; 1) = Γ(c) Γ(c-a-b) / (Γ(c-a) Γ(c-b)); F(0.5, 0.25; 1.25; 1) = B(1/4, 1/2) / 4
        let v = gauss_2f1_euler(hp(0.5, 0.25, 1.25), Cx::new(1.0, 0.0)).unwrap();
        assert!((v.re - 1.311_028_777_146_059_9).abs() < 1e-13);
        assert!(matches!(
            gauss_2f1_euler(hp(1.5, 0.25, 1.25), Cx::new(1.0, 0.0)),
            Err(ShearError::Pole(_))
        ));
    }

    #[test]
    fn euler_on_unit_circle_away_from_one() {
        // F(1, 1; 2; z) = -log(1 - z) / z
        let z = Cx::from_polar(1.0, 2.0);
        let v = gauss_2f1_euler(hp(1.0, 1.0, 2.0), z).unwrap();
        let expect = -(Cx::new(1.0, 0.0) - z).ln() / z;
        assert!((v - expect).norm() < 1e-12);
    }
}
