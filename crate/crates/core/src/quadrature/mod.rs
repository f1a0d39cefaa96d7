//! Gauss–Legendre rules and adaptive Gauss–Kronrod integration of
//! complex-valued integrands over real intervals.

mod kronrod;
mod legendre;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::scalar::{is_finite_cx, Cx, Real};

pub use kronrod::{gauss_kronrod_15, kronrod_rule, G7_WEIGHTS, K15_NODES, K15_WEIGHTS};
pub use legendre::{gauss_legendre_rule, QuadratureRule, MAX_LEGENDRE_POINTS};

/// Default bisection depth for [`adaptive_integrate`].
pub const DEFAULT_MAX_DEPTH: u32 = 48;

/// Hard cap on the number of live subintervals.
pub const MAX_SUBINTERVALS: usize = 4096;

/// Outcome of a quadrature call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationResult<T> {
    pub value: Cx<T>,
    pub error_estimate: T,
    /// Number of panels in the final partition (at least 1).
    pub subdivisions: usize,
    /// `false` when the tolerance was not met, either because the depth or
    /// panel budget ran out or because the integrand produced a non-finite value.
    pub converged: bool,
}

struct Interval<T> {
    a: T,
    b: T,
    depth: u32,
    value: Cx<T>,
    error: T,
}

impl<T: Real> PartialEq for Interval<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Real> Eq for Interval<T> {}

impl<T: Real> PartialOrd for Interval<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Real> Ord for Interval<T> {
    // Max-heap on error; ties broken by position so the schedule is deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

/// Globally adaptive bisection driven by the (7, 15) Kronrod error estimate.
///
/// The panel with the largest estimate is halved until the summed estimate
/// drops to `tol` (absolute). Panels that have been halved `max_depth` times,
/// or whose midpoint is no longer representable, are frozen; once the frozen
/// panels alone exceed `tol`, or [`MAX_SUBINTERVALS`] is reached, the routine
/// returns its best value with `converged = false`.
///
/// `b < a` integrates in the reverse orientation; `a == b` gives zero.
///
/// # Panics
///
/// If `tol` is not a positive number.
pub fn adaptive_integrate<T, F>(f: F, a: T, b: T, tol: T, max_depth: u32) -> IntegrationResult<T>
where
    T: Real,
    F: Fn(T) -> Cx<T>,
{
    assert!(tol > T::zero(), "tolerance must be positive");
    if a == b {
        return IntegrationResult {
            value: Cx::new(T::zero(), T::zero()),
            error_estimate: T::zero(),
            subdivisions: 1,
            converged: true,
        };
    }
    if b < a {
        let mut r = adaptive_integrate(f, b, a, tol, max_depth);
        r.value = -r.value;
        return r;
    }

    let first = kronrod::k15_panel(&f, a, b);
    if !is_finite_cx(first.value) {
        return non_finite(first.value);
    }

    let mut live: BinaryHeap<Interval<T>> = BinaryHeap::new();
    let mut frozen: Vec<Interval<T>> = Vec::new();
    let mut frozen_error = T::zero();
    let root = Interval { a, b, depth: 0, value: first.value, error: first.error };
    if splittable(&root, max_depth) {
        live.push(root);
    } else {
        frozen_error = root.error;
        frozen.push(root);
    }

    let converged = loop {
        let live_error = live.iter().fold(T::zero(), |acc, iv| acc + iv.error);
        if live_error + frozen_error <= tol {
            break true;
        }
        // Once only frozen panels are left to blame, refining elsewhere is pointless.
        if live_error <= tol / T::lit(2.0) || live.len() + frozen.len() >= MAX_SUBINTERVALS {
            break false;
        }
        let Some(worst) = live.pop() else {
            break false;
        };

        let mid = (worst.a + worst.b) / T::lit(2.0);
        let depth = worst.depth + 1;
        let left = kronrod::k15_panel(&f, worst.a, mid);
        let right = kronrod::k15_panel(&f, mid, worst.b);
        if !is_finite_cx(left.value) {
            return non_finite(left.value);
        }
        if !is_finite_cx(right.value) {
            return non_finite(right.value);
        }
        for (lo, hi, panel) in [(worst.a, mid, left), (mid, worst.b, right)] {
            let iv = Interval { a: lo, b: hi, depth, value: panel.value, error: panel.error };
            if splittable(&iv, max_depth) {
                live.push(iv);
            } else {
                frozen_error = frozen_error + iv.error;
                frozen.push(iv);
            }
        }
    };

    let mut all: Vec<Interval<T>> = live.into_vec();
    all.extend(frozen);
    all.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
    let subdivisions = all.len();
    if !converged {
        for at_right in [false, true] {
            extrapolate_endpoint(&f, &mut all, a, b, at_right, tol);
        }
    }
    let value = all.iter().fold(Cx::new(T::zero(), T::zero()), |acc, iv| acc + iv.value);
    let error_estimate = all.iter().fold(T::zero(), |acc, iv| acc + iv.error);
    IntegrationResult {
        value,
        error_estimate,
        subdivisions,
        converged: error_estimate <= tol,
    }
}

/// Tail correction for an integrable end point singularity that the
/// bisection could not resolve in floating point.
///
/// If the panel touching the end point is frozen (depth or resolution limit)
/// and still carries more than half the tolerance, the composite sums `R_k`
/// over the nested panels of widths `8w, 4w, 2w, w` at that end are formed.
/// For a power-law singularity `R_k` converges geometrically, so Aitken's Δ²
/// on `(R_1, R_2, R_3)` estimates the integral over the `8w` panel; the
/// disagreement with Δ² on `(R_0, R_1, R_2)` becomes its error estimate.
/// Partitions where this does not look geometric are left untouched.
fn extrapolate_endpoint<T, F>(f: &F, parts: &mut Vec<Interval<T>>, a: T, b: T, at_right: bool, tol: T)
where
    T: Real,
    F: Fn(T) -> Cx<T>,
{
    let Some(edge) = (if at_right { parts.last() } else { parts.first() }) else {
        return;
    };
    if edge.error <= tol / T::lit(2.0) {
        return;
    }
    let width = edge.b - edge.a;
    let edge_depth = edge.depth;
    let end = if at_right { b } else { a };
    let span = |w: T| if at_right { (end - w, end) } else { (end, end + w) };
    let gap = |outer: T, inner: T| {
        if at_right {
            (end - outer, end - inner)
        } else {
            (end + inner, end + outer)
        }
    };

    // The finest panels sit at the floating point resolution limit where node
    // rounding spoils the geometric behaviour, so the nested sums start at a
    // width of about sqrt(eps) relative to the end point.
    let floor = T::epsilon().sqrt() * end.abs().max(T::one());
    let mut offset = 0u32;
    while width * T::lit(f64::from(1u32 << offset)) < floor && offset < 30 {
        offset += 1;
    }
    if edge.depth < offset + 3 {
        return;
    }
    let widths: Vec<T> = (0..4)
        .map(|k| width * T::lit(f64::from(1u32 << (k + offset))))
        .collect();
    let whole: Vec<Cx<T>> = widths
        .iter()
        .map(|&w| {
            let (lo, hi) = span(w);
            kronrod::k15_panel(f, lo, hi).value
        })
        .collect();
    let ring: Vec<Cx<T>> = (1..4)
        .map(|k| {
            let (lo, hi) = gap(widths[k], widths[k - 1]);
            kronrod::k15_panel(f, lo, hi).value
        })
        .collect();
    // R_0 = P_3, R_1 = D_3 + P_2, R_2 = D_3 + D_2 + P_1, R_3 = D_3 + D_2 + D_1 + P_0
    let r = [
        whole[3],
        ring[2] + whole[2],
        ring[2] + ring[1] + whole[1],
        ring[2] + ring[1] + ring[0] + whole[0],
    ];
    if !r.iter().all(|&v| is_finite_cx(v)) {
        return;
    }
    let (Some(fine), Some(coarse)) = (aitken(r[1], r[2], r[3]), aitken(r[0], r[1], r[2])) else {
        return;
    };

    let (lo, hi) = span(widths[3]);
    parts.retain(|iv| iv.b <= lo || iv.a >= hi);
    let depth = edge_depth.saturating_sub(offset + 3);
    let patch = Interval { a: lo, b: hi, depth, value: fine, error: (fine - coarse).norm() };
    if at_right {
        parts.push(patch);
    } else {
        parts.insert(0, patch);
    }
}



/// Δ² limit of `x0, x1, x2`, accepted only for a contraction ratio below 0.9.
fn aitken<T: Real>(x0: Cx<T>, x1: Cx<T>, x2: Cx<T>) -> Option<Cx<T>> {
    let d1 = x1 - x0;
    let d2 = x2 - x1;
    if d1.norm().is_zero() {
        return Some(x2);
    }
    let ratio = d2 / d1;
    if !(ratio.norm() < T::lit(0.9)) {
        return None;
    }
    let one = Cx::new(T::one(), T::zero());
    let limit = x2 + d2 * ratio / (one - ratio);
    is_finite_cx(limit).then_some(limit)
}

/// [`adaptive_integrate`] on `[0, 1]` with the default depth; the form used
/// by every radial integral `∫_0^1 F(z t) z dt` in this crate.
pub fn integrate_segment<T, F>(f: F, tol: T) -> IntegrationResult<T>
where
    T: Real,
    F: Fn(T) -> Cx<T>,
{
    adaptive_integrate(f, T::zero(), T::one(), tol, DEFAULT_MAX_DEPTH)
}

fn splittable<T: Real>(iv: &Interval<T>, max_depth: u32) -> bool {
    if iv.depth >= max_depth {
        return false;
    }
    let mid = (iv.a + iv.b) / T::lit(2.0);
    nodes_interior(iv.a, mid) && nodes_interior(mid, iv.b)
}

// Every Kronrod node of [a, b] must round to a point strictly inside it, so
// integrands singular at an end point are never sampled there.
fn nodes_interior<T: Real>(a: T, b: T) -> bool {
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let dx = (b - a) / two * T::lit(K15_NODES[0]);
    a < center - dx && center + dx < b
}

fn non_finite<T: Real>(value: Cx<T>) -> IntegrationResult<T> {
    IntegrationResult {
        value,
        error_estimate: T::infinity(),
        subdivisions: 1,
        converged: false,
    }
}
