//! The (7, 15) Gauss–Kronrod pair.

use crate::scalar::{is_finite_cx, Cx, Real};

use super::IntegrationResult;

/// Kronrod abscissae on `[0, 1)`, largest first; the last entry is the centre.
/// Odd indices are shared with the 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
pub const K15_NODES: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Kronrod weights matching [`K15_NODES`].
#[allow(clippy::excessive_precision)]
pub const K15_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// 7-point Gauss weights for nodes `K15_NODES[1], [3], [5], [7]`.
#[allow(clippy::excessive_precision)]
pub const G7_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// The 15 Kronrod nodes on `[-1, 1]` in increasing order with their weights.
pub fn kronrod_rule<T: Real>() -> (Vec<T>, Vec<T>) {
    let mut nodes = Vec::with_capacity(15);
    let mut weights = Vec::with_capacity(15);
    for j in 0..7 {
        nodes.push(-T::lit(K15_NODES[j]));
        weights.push(T::lit(K15_WEIGHTS[j]));
    }
    nodes.push(T::zero());
    weights.push(T::lit(K15_WEIGHTS[7]));
    for j in (0..7).rev() {
        nodes.push(T::lit(K15_NODES[j]));
        weights.push(T::lit(K15_WEIGHTS[j]));
    }
    (nodes, weights)
}

/// QUADPACK-style error rescaling: `resasc * min(1, (200 |G - K| / resasc)^1.5)`,
/// floored at a couple of ulps of `resabs` so roundoff is never chased.
fn rescale_error<T: Real>(raw: T, resabs: T, resasc: T) -> T {
    let mut err = raw;
    if resasc > T::zero() && err > T::zero() {
        let scale = (T::lit(200.0) * err / resasc).powf(T::lit(1.5));
        err = if scale < T::one() { resasc * scale } else { resasc };
    }
    let floor = T::lit(2.0) * T::epsilon() * resabs;
    if floor > err {
        err = floor;
    }
    err
}

/// One (7, 15) Gauss–Kronrod panel on `[a, b]`, no subdivision.
///
/// A non-finite integrand value yields a non-finite `value` with
/// `converged = false`.
pub fn gauss_kronrod_15<T, F>(f: F, a: T, b: T) -> IntegrationResult<T>
where
    T: Real,
    F: Fn(T) -> Cx<T>,
{
    let panel = k15_panel(&f, a, b);
    let converged = is_finite_cx(panel.value) && panel.error.is_finite();
    IntegrationResult {
        value: panel.value,
        error_estimate: if panel.error.is_nan() { T::infinity() } else { panel.error },
        subdivisions: 1,
        converged,
    }
}

pub(super) struct Panel<T> {
    pub value: Cx<T>,
    pub error: T,
}

pub(super) fn k15_panel<T, F>(f: &F, a: T, b: T) -> Panel<T>
where
    T: Real,
    F: Fn(T) -> Cx<T>,
{
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let abs_half = half.abs();

    let f_center = f(center);
    let mut res_gauss = f_center * T::lit(G7_WEIGHTS[3]);
    let mut res_kronrod = f_center * T::lit(K15_WEIGHTS[7]);
    let mut res_abs = f_center.norm() * T::lit(K15_WEIGHTS[7]);

    let mut left = [Cx::new(T::zero(), T::zero()); 7];
    let mut right = [Cx::new(T::zero(), T::zero()); 7];
    for j in 0..7 {
        let dx = half * T::lit(K15_NODES[j]);
        let lo = f(center - dx);
        let hi = f(center + dx);
        left[j] = lo;
        right[j] = hi;
        let wk = T::lit(K15_WEIGHTS[j]);
        res_kronrod = res_kronrod + (lo + hi) * wk;
        res_abs = res_abs + (lo.norm() + hi.norm()) * wk;
        if j % 2 == 1 {
            res_gauss = res_gauss + (lo + hi) * T::lit(G7_WEIGHTS[j / 2]);
        }
    }

    let mean = res_kronrod / two;
    let mut res_asc = (f_center - mean).norm() * T::lit(K15_WEIGHTS[7]);
    for j in 0..7 {
        res_asc = res_asc + ((left[j] - mean).norm() + (right[j] - mean).norm()) * T::lit(K15_WEIGHTS[j]);
    }

    let raw = (res_kronrod - res_gauss).norm() * abs_half;
    let value = res_kronrod * half;
    let error = rescale_error(raw, res_abs * abs_half, res_asc * abs_half);
    Panel { value, error }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re<T: Real>(x: T) -> Cx<T> {
        Cx::new(x, T::zero())
    }

    #[test]
    fn constant_integrand() {
        let r = gauss_kronrod_15(|_| re(1.0_f64), 0.0, 1.0);
        assert!((r.value.re - 1.0).abs() < 1e-15);
        assert!(r.error_estimate <= 1e-15, "{}", r.error_estimate);
        assert!(r.converged);
        assert_eq!(r.subdivisions, 1);
    }

    #[test]
    fn degree_fourteen_exact() {
        let r = gauss_kronrod_15(|x: f64| re(x.powi(14)), -1.0, 1.0);
        assert!((r.value.re - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn exponential() {
        let r = gauss_kronrod_15(|x: f64| re(x.exp()), 0.0, 1.0);
        assert!((r.value.re - (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn nan_propagates() {
        let r = gauss_kronrod_15(|x: f64| re(if x > 0.5 { f64::NAN } else { x }), 0.0, 1.0);
        assert!(!r.converged);
        assert!(r.value.re.is_nan());
    }

    #[test]
    fn rule_is_symmetric_and_sums_to_two() {
        let (x, w) = kronrod_rule::<f64>();
        assert_eq!(x.len(), 15);
        for i in 0..15 {
            assert_eq!(x[i], -x[14 - i]);
            assert_eq!(w[i], w[14 - i]);
        }
        let s: f64 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-15);
        let g: f64 = 2.0 * G7_WEIGHTS[..3].iter().sum::<f64>() + G7_WEIGHTS[3];
        assert!((g - 2.0).abs() < 1e-15);
    }
}
