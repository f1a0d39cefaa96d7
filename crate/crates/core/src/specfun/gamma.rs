use crate::error::{Result, ShearError};
use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, `g = 7`, nine terms; reflection below 1/2).
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(ShearError::Domain(format!("ln_gamma requires a finite x > 0, got {x}")));
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked<T: Real>(x: T) -> T {
    if x < T::lit(0.5) {
        // Γ(x) Γ(1-x) = π / sin(πx), positive for 0 < x < 1/2.
        let pi = T::PI();
        return (pi / (pi * x).sin()).ln() - ln_gamma_unchecked(T::one() - x);
    }
    let xm1 = x - T::one();
    let mut sum = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum = sum + T::lit(c) / (xm1 + T::from_count(i));
    }
    let t = xm1 + T::lit(LANCZOS_G) + T::lit(0.5);
    let half_ln_two_pi = T::lit(0.918_938_533_204_672_8);
    half_ln_two_pi + (xm1 + T::lit(0.5)) * t.ln() - t + sum.ln()
}

/// `ln B(p, q)` for positive arguments.
pub(crate) fn ln_beta<T: Real>(p: T, q: T) -> T {
    ln_gamma_unchecked(p) + ln_gamma_unchecked(q) - ln_gamma_unchecked(p + q)
}

/// Rising factorial `(α)_n = α (α+1) ··· (α+n-1)`, with `(α)_0 = 1`.
pub fn pochhammer<T: Real>(alpha: T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, k| acc * (alpha + T::from_count(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert!(ln_gamma(1.0_f64).unwrap().abs() < 1e-15);
        assert!(ln_gamma(2.0_f64).unwrap().abs() < 1e-15);
        assert!((ln_gamma(5.0_f64).unwrap() - 24.0_f64.ln()).abs() < 1e-14);
        let half = 0.5 * std::f64::consts::PI.ln();
        assert!((ln_gamma(0.5_f64).unwrap() - half).abs() < 1e-15);
        assert!((half - 0.572_364_942_924_700_1).abs() < 1e-16);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(matches!(ln_gamma(0.0_f64), Err(ShearError::Domain(_))));
        assert!(matches!(ln_gamma(-1.5_f64), Err(ShearError::Domain(_))));
        assert!(ln_gamma(f64::NAN).is_err());
    }

    #[test]
    fn recurrence_over_range() {
        // ln Γ(x+1) - ln Γ(x) = ln x
        for i in 1..400 {
            let x = 0.013 * i as f64 + 0.001;
            let d = ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap();
            assert!((d - x.ln()).abs() < 1e-13 * (1.0 + x.ln().abs()), "x={x}");
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(3.7_f64, 0), 1.0);
        assert_eq!(pochhammer(1.0_f64, 5), 120.0);
        assert_eq!(pochhammer(0.25_f64, 3), 0.703125);
    }
}
