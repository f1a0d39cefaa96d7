// Reference values are quoted with all the digits they were computed to.
#![allow(clippy::excessive_precision)]

use std::f64::consts::TAU;

use harmonic_shear::{analytic_phi, Complex64, NgonMap, NgonMap32, NgonMap64, ShearError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-12;

fn random_disk_points(seed: u64, count: usize, r_max: f64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Complex64::from_polar(r_max * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>()))
        .collect()
}

/// `φ(z) = Σ_k (2/n)_k / k! · z^{nk+1} / (nk+1)`, the termwise integral of the
/// binomial series of `(1 - ζⁿ)^{-2/n}`.
fn binomial_series(n: u32, z: Complex64) -> Complex64 {
    let alpha = 2.0 / f64::from(n);
    let zn = z.powu(n);
    let mut coeff = 1.0;
    let mut power = z;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..2000 {
        let term = power * (coeff / (f64::from(n) * k as f64 + 1.0));
        sum += term;
        if term.norm() < 1e-18 {
            break;
        }
        coeff *= (alpha + k as f64) / (k as f64 + 1.0);
        power *= zn;
    }
    sum
}

#[test]
fn reference_values() {
    // mpmath quadrature at 25 digits
    let map = NgonMap64::new(4, TOL).unwrap();
    let v = map.map(Complex64::new(0.99, 0.0)).unwrap();
    assert!(v.converged);
    assert!((v.value.re - 1.210778088872529514).abs() < 1e-11);
    assert!(v.value.im.abs() < 1e-15);
    let vertex = map.map(Complex64::new(1.0, 0.0)).unwrap();
    assert!((vertex.value.re - 1.311028777146057111).abs() < 1e-9);
}

#[test]
fn matches_binomial_series() {
    for n in [3, 4, 5, 6, 8] {
        let map = NgonMap64::new(n, TOL).unwrap();
        for z in random_disk_points(u64::from(n), 40, 0.7) {
            let q = map.map(z).unwrap().value;
            assert!((q - binomial_series(n, z)).norm() < 1e-12, "n={n} z={z}");
        }
    }
}

#[test]
fn matches_hypergeometric_form() {
    for n in [3, 4, 5, 7] {
        let map = NgonMap64::new(n, TOL).unwrap();
        for z in random_disk_points(100 + u64::from(n), 60, 0.97) {
            let q = map.map(z).unwrap().value;
            let exact: Complex64 = analytic_phi(n, z).unwrap();
            assert!((q - exact).norm() < 1e-10, "n={n} z={z}");
        }
    }
}

#[test]
fn rotation_and_reflection_symmetry() {
    for n in [3, 4, 6] {
        let map = NgonMap64::new(n, TOL).unwrap();
        let eps = Complex64::from_polar(1.0, TAU / f64::from(n));
        for z in random_disk_points(7, 20, 0.9) {
            let v = map.map(z).unwrap().value;
            assert!((map.map(eps * z).unwrap().value - eps * v).norm() < 1e-12);
            assert!((map.map(z.conj()).unwrap().value - v.conj()).norm() < 1e-12);
        }
    }
}

#[test]
fn derivative_matches_finite_difference() {
    let map = NgonMap64::new(5, TOL).unwrap();
    let d = 1e-5;
    for z in random_disk_points(11, 20, 0.85) {
        let fd = (map.map(z + d).unwrap().value - map.map(z - d).unwrap().value) / (2.0 * d);
        let exact = map.derivative(z).unwrap();
        assert!((fd - exact).norm() < 1e-7 * exact.norm(), "z={z}");
    }
}

#[test]
fn vertices_share_a_modulus() {
    for n in [3, 4, 6] {
        let map = NgonMap64::new(n, 1e-10).unwrap();
        let r0 = map.map(map.prevertex(0)).unwrap().value.norm();
        for k in 1..n {
            let rk = map.map(map.prevertex(k)).unwrap().value.norm();
            assert!((rk - r0).abs() < 1e-8, "n={n} k={k}");
        }
    }
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(NgonMap64::new(2, TOL), Err(ShearError::InvalidArgument(_))));
    assert!(NgonMap64::new(4, 0.0).is_err());
    let map = NgonMap64::new(4, TOL).unwrap();
    assert!(matches!(map.map(Complex64::new(1.1, 0.0)), Err(ShearError::Domain(_))));
    assert!(matches!(map.derivative(map.prevertex(2)), Err(ShearError::Pole(_))));
}

#[test]
fn single_precision() {
    let map: NgonMap32 = NgonMap::new(4, 1e-5).unwrap();
    let v = map.map(num_complex::Complex::new(0.5f32, 0.25)).unwrap().value;
    let exact = NgonMap64::new(4, TOL).unwrap().map(Complex64::new(0.5, 0.25)).unwrap().value;
    assert!((f64::from(v.re) - exact.re).abs() < 1e-5);
    assert!((f64::from(v.im) - exact.im).abs() < 1e-5);
}
