use harmonic_shear::quadrature::{kronrod_rule, DEFAULT_MAX_DEPTH};
use harmonic_shear::{adaptive_integrate, gauss_kronrod_15, gauss_legendre_rule, integrate_segment, Complex64};
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;

/// Nodes and weights from the eigen-decomposition of the Legendre Jacobi
/// matrix; an oracle independent of the Newton iteration in the library.
fn golub_welsch(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut j = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let kf = k as f64;
        let beta = kf / (4.0 * kf * kf - 1.0).sqrt();
        j[(k - 1, k)] = beta;
        j[(k, k - 1)] = beta;
    }
    let eig = SymmetricEigen::new(j);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eig.eigenvalues[i], 2.0 * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    pairs.into_iter().unzip()
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn legendre_matches_golub_welsch() {
    for n in 1..=40 {
        let rule = gauss_legendre_rule::<f64>(n).unwrap();
        let (x, w) = golub_welsch(n);
        for i in 0..n {
            assert!((rule.nodes[i] - x[i]).abs() < 1e-13, "n={n} node {i}");
            assert!((rule.weights[i] - w[i]).abs() < 1e-13 * w[i].max(1e-3) * 10.0, "n={n} weight {i}");
        }
    }
}

#[test]
fn kronrod_gauss_nodes_are_embedded() {
    let (k_nodes, _) = kronrod_rule::<f64>();
    let g7 = gauss_legendre_rule::<f64>(7).unwrap();
    // Gauss nodes sit at the odd positions of the sorted Kronrod nodes
    for (i, x) in g7.nodes.iter().enumerate() {
        assert!((k_nodes[2 * i + 1] - x).abs() < 1e-15);
    }
}

#[test]
fn kronrod_degree_22() {
    for d in 0..=22 {
        let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
        let r = gauss_kronrod_15(|x: f64| real(x.powi(d)), -1.0, 1.0);
        assert!((r.value.re - exact).abs() < 1e-13, "degree {d}");
    }
    // degree 24 is where the rule stops being exact (23 integrates to zero by symmetry)
    let r = gauss_kronrod_15(|x: f64| real(x.powi(24)), -1.0, 1.0);
    assert!((r.value.re - 2.0 / 25.0).abs() > 1e-12);
}

#[test]
fn complex_oscillation() {
    // ∫_0^1 e^{i k x} dx = (e^{ik} - 1) / (ik)
    for k in [1.0, 10.0, 60.0] {
        let r = adaptive_integrate(|x: f64| Complex64::new(0.0, k * x).exp(), 0.0, 1.0, 1e-12, DEFAULT_MAX_DEPTH);
        let exact = (Complex64::new(0.0, k).exp() - 1.0) / Complex64::new(0.0, k);
        assert!(r.converged);
        assert!((r.value - exact).norm() < 1e-11, "k={k}");
    }
}

#[test]
fn endpoint_singularity_to_tolerance() {
    // ∫_0^1 x^{-1/2} dx = 2 and ∫_0^1 (1-x)^{-1/2} dx = 2
    let r = integrate_segment(|x: f64| real(x.powf(-0.5)), 1e-10);
    assert!((r.value.re - 2.0).abs() < 1e-8, "{}", r.value.re);
    let r = integrate_segment(|x: f64| real((1.0 - x).powf(-0.5)), 1e-10);
    assert!((r.value.re - 2.0).abs() < 1e-8, "{}", r.value.re);
}

#[test]
fn divergent_integrand_is_not_converged() {
    let r = integrate_segment(|x: f64| real(1.0 / (1.0 - x)), 1e-10);
    assert!(!r.converged);
}

#[test]
fn f32_instantiation() {
    let r = adaptive_integrate(|x: f32| num_complex::Complex::new(x.cos(), 0.0), 0.0, 1.0, 1e-5, 30);
    assert!((r.value.re - 1f32.sin()).abs() < 1e-5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interval_additivity(a in -2.0f64..0.0, m in 0.0f64..1.0, b in 1.0f64..3.0) {
        let f = |x: f64| Complex64::new((3.0 * x).sin() * x.exp(), x.cos());
        let whole = adaptive_integrate(f, a, b, 1e-12, DEFAULT_MAX_DEPTH).value;
        let parts = adaptive_integrate(f, a, m, 1e-12, DEFAULT_MAX_DEPTH).value
            + adaptive_integrate(f, m, b, 1e-12, DEFAULT_MAX_DEPTH).value;
        prop_assert!((whole - parts).norm() < 1e-11);
    }

    #[test]
    fn linearity(alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
        let f = |x: f64| real((1.0 + x * x).recip());
        let g = |x: f64| real(x.sqrt());
        let lhs = integrate_segment(|x: f64| f(x) * alpha + g(x) * beta, 1e-12).value;
        let rhs = integrate_segment(f, 1e-12).value * alpha + integrate_segment(g, 1e-12).value * beta;
        prop_assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn reversal_negates(a in -1.0f64..1.0, len in 0.1f64..2.0) {
        let f = |x: f64| Complex64::new(x.exp(), (2.0 * x).cos());
        let fwd = adaptive_integrate(f, a, a + len, 1e-12, DEFAULT_MAX_DEPTH).value;
        let back = adaptive_integrate(f, a + len, a, 1e-12, DEFAULT_MAX_DEPTH).value;
        prop_assert_eq!(fwd, -back);
    }

    #[test]
    fn polynomials_integrate_exactly(c in proptest::collection::vec(-1.0f64..1.0, 1..12)) {
        let p = |x: f64| c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci);
        let exact: f64 = c.iter().enumerate().map(|(k, ci)| ci / (k as f64 + 1.0)).sum();
        let r = integrate_segment(|x: f64| real(p(x)), 1e-12);
        prop_assert!((r.value.re - exact).abs() < 1e-14);
        prop_assert_eq!(r.subdivisions, 1);
    }
}
