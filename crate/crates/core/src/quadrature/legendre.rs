//! Gauss–Legendre rules on `[-1, 1]`.

use crate::error::{Result, ShearError};
use crate::scalar::Real;

/// Largest supported number of Gauss–Legendre points.
pub const MAX_LEGENDRE_POINTS: usize = 64;

/// Nodes and weights of an interpolatory rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    /// Strictly increasing, symmetric about zero.
    pub nodes: Vec<T>,
    /// Positive, summing to 2.
    pub weights: Vec<T>,
    /// Highest polynomial degree integrated exactly.
    pub degree: usize,
}

impl<T: Real> QuadratureRule<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies the rule to `f` on `[a, b]` with the affine change of variable.
    pub fn integrate<F>(&self, a: T, b: T, f: F) -> T
    where
        F: Fn(T) -> T,
    {
        let half = (b - a) / T::lit(2.0);
        let mid = (a + b) / T::lit(2.0);
        let sum = self
            .nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(mid + half * x));
        sum * half
    }
}

/// Legendre polynomial `P_n(x)` and its derivative via the three-term recurrence.
fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    for k in 2..=n {
        let k_t = T::from_count(k);
        let p_next = ((T::lit(2.0) * k_t - T::one()) * x * p - (k_t - T::one()) * p_prev) / k_t;
        p_prev = p;
        p = p_next;
    }
    let n_t = T::from_count(n);
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1); nodes are interior so the
    // denominator never vanishes.
    let dp = n_t * (x * p - p_prev) / (x * x - T::one());
    (p, dp)
}

/// The `n`-point Gauss–Legendre rule, `1 <= n <= 64`.
///
/// Roots of `P_n` are found by Newton iteration from the Chebyshev-like
/// starting guesses `cos(pi (i - 1/4) / (n + 1/2))`, then mirrored so the
/// returned rule is exactly symmetric.
pub fn gauss_legendre_rule<T: Real>(n: usize) -> Result<QuadratureRule<T>> {
    if n == 0 || n > MAX_LEGENDRE_POINTS {
        return Err(ShearError::InvalidArgument(format!(
            "Gauss-Legendre point count must be in 1..={MAX_LEGENDRE_POINTS}, got {n}"
        )));
    }
    if n == 1 {
        return Ok(QuadratureRule {
            nodes: vec![T::zero()],
            weights: vec![T::lit(2.0)],
            degree: 1,
        });
    }

    let half_count = n / 2;
    let mut positive = Vec::with_capacity(half_count);
    for i in 1..=half_count {
        let guess = (T::PI() * (T::from_count(i) - T::lit(0.25)) / (T::from_count(n) + T::lit(0.5))).cos();
        let mut x = guess;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * T::lit(4.0) {
                break;
            }
        }
        // One polishing step once the iterate is at rounding level.
        let (p, dp) = legendre_with_derivative(n, x);
        x = x - p / dp;
        let (_, dp) = legendre_with_derivative(n, x);
        let w = T::lit(2.0) / ((T::one() - x * x) * dp * dp);
        positive.push((x, w));
    }

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    // Guesses run from the largest root downwards.
    for &(x, w) in &positive {
        nodes.push(-x);
        weights.push(w);
    }
    if n % 2 == 1 {
        let (_, dp) = legendre_with_derivative(n, T::zero());
        nodes.push(T::zero());
        weights.push(T::lit(2.0) / (dp * dp));
    }
    for &(x, w) in positive.iter().rev() {
        nodes.push(x);
        weights.push(w);
    }

    Ok(QuadratureRule {
        nodes,
        weights,
        degree: 2 * n - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_is_midpoint() {
        let rule = gauss_legendre_rule::<f64>(1).unwrap();
        assert_eq!(rule.nodes, vec![0.0]);
        assert_eq!(rule.weights, vec![2.0]);
        assert_eq!(rule.degree, 1);
    }

    #[test]
    fn two_point_nodes() {
        let rule = gauss_legendre_rule::<f64>(2).unwrap();
        let r = 1.0 / 3.0_f64.sqrt();
        assert!((rule.nodes[0] + r).abs() < 1e-15);
        assert!((rule.nodes[1] - r).abs() < 1e-15);
        assert!((rule.weights[0] - 1.0).abs() < 1e-15);
        assert!((rule.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn five_point_integrates_degree_nine() {
        let rule = gauss_legendre_rule::<f64>(5).unwrap();
        let v = rule.integrate(-1.0, 1.0, |x| x.powi(8));
        assert!((v - 2.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(gauss_legendre_rule::<f64>(0), Err(ShearError::InvalidArgument(_))));
        assert!(matches!(gauss_legendre_rule::<f64>(65), Err(ShearError::InvalidArgument(_))));
        assert!(gauss_legendre_rule::<f64>(64).is_ok());
    }

    #[test]
    fn invariants_hold_up_to_64_points() {
        for n in 1..=64 {
            let rule = gauss_legendre_rule::<f64>(n).unwrap();
            assert_eq!(rule.len(), n);
            let sum: f64 = rule.weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-14, "n={n} sum={sum}");
            assert!(rule.weights.iter().all(|&w| w > 0.0));
            assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
            for i in 0..n {
                assert_eq!(rule.nodes[i], -rule.nodes[n - 1 - i]);
            }
        }
    }

    #[test]
    fn f32_rule_is_usable() {
        let rule = gauss_legendre_rule::<f32>(4).unwrap();
        let v = rule.integrate(0.0, 1.0, |x| x * x * x);
        assert!((v - 0.25).abs() < 1e-6);
    }
}
