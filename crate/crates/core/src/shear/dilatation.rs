use std::fmt;
use std::sync::Arc;

use crate::scalar::{cx_powi, Cx, Real};

type Evaluator<T> = Arc<dyn Fn(Cx<T>) -> Cx<T> + Send + Sync>;

#[derive(Clone)]
enum Kind<T> {
    Zero,
    Power(u32),
    Custom(Evaluator<T>),
}

/// Analytic dilatation `ω = g'/h'` of a shear, with an optional analytic
/// square root `q` (`q² = ω`) used by the minimal surface lift.
#[derive(Clone)]
pub struct Dilatation<T> {
    kind: Kind<T>,
    sqrt_hint: Option<Evaluator<T>>,
}

impl<T: Real> Dilatation<T> {
    /// `ω ≡ 0`; the shear is then `φ` itself.
    pub fn zero() -> Self {
        Self { kind: Kind::Zero, sqrt_hint: None }
    }

    /// `ω(z) = z^m`. `m = 0` is read as `ω ≡ 0`, matching the CLI's `--omega 0`.
    pub fn power(m: u32) -> Self {
        if m == 0 {
            return Self::zero();
        }
        Self { kind: Kind::Power(m), sqrt_hint: None }
    }

    /// An arbitrary analytic evaluator, optionally with its square root.
    pub fn custom<F>(omega: F) -> Self
    where
        F: Fn(Cx<T>) -> Cx<T> + Send + Sync + 'static,
    {
        Self { kind: Kind::Custom(Arc::new(omega)), sqrt_hint: None }
    }

    pub fn with_sqrt<Q>(mut self, q: Q) -> Self
    where
        Q: Fn(Cx<T>) -> Cx<T> + Send + Sync + 'static,
    {
        self.sqrt_hint = Some(Arc::new(q));
        self
    }

    pub fn eval(&self, z: Cx<T>) -> Cx<T> {
        match &self.kind {
            Kind::Zero => Cx::new(T::zero(), T::zero()),
            Kind::Power(m) => cx_powi(z, *m),
            Kind::Custom(f) => f(z),
        }
    }

    /// `q(z)` with `q² = ω`, when one is known: explicit hint first, then
    /// `z^(m/2)` for even powers and `0` for the zero dilatation.
    pub fn sqrt(&self, z: Cx<T>) -> Option<Cx<T>> {
        if let Some(q) = &self.sqrt_hint {
            return Some(q(z));
        }
        match &self.kind {
            Kind::Zero => Some(Cx::new(T::zero(), T::zero())),
            Kind::Power(m) if m % 2 == 0 => Some(cx_powi(z, m / 2)),
            _ => None,
        }
    }

    pub fn has_sqrt(&self) -> bool {
        self.sqrt(Cx::new(T::zero(), T::zero())).is_some()
    }

    /// Exponent `m` for power dilatations, `Some(0)` for `ω ≡ 0`.
    pub fn power_exponent(&self) -> Option<u32> {
        match &self.kind {
            Kind::Zero => Some(0),
            Kind::Power(m) => Some(*m),
            Kind::Custom(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind, Kind::Zero)
    }
}

impl<T> fmt::Debug for Dilatation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            Kind::Zero => "0".to_string(),
            Kind::Power(m) => format!("z^{m}"),
            Kind::Custom(_) => "custom".to_string(),
        };
        f.debug_struct("Dilatation")
            .field("omega", &kind)
            .field("sqrt_hint", &self.sqrt_hint.is_some())
            .finish()
    }
}
