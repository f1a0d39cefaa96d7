//! Polar sample meshes of the closed unit disk and log₁₀ error fields of the
//! quadrature shear against the closed-form oracles.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::conformal::NgonMap;
use crate::error::{Result, ShearError};
use crate::scalar::{Cx, Real};
use crate::shear::{analytic_phi, analytic_shear, shear_f, Dilatation, ShearResult};

/// `log₁₀` of an exact zero error is reported as this value.
pub const LOG10_FLOOR: f64 = -16.0;

/// How a grid is meant to be drawn: as a disk or as a `θ × r` rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridLayout {
    Polar,
    Cartesian,
}

/// Structured polar grid `r e^{iθ}` stored ring-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskMesh<T> {
    pub radii: Vec<T>,
    pub angles: Vec<T>,
    pub points: Vec<Cx<T>>,
    pub layout: GridLayout,
}

impl<T: Real> DiskMesh<T> {
    pub fn from_axes(radii: Vec<T>, angles: Vec<T>, layout: GridLayout) -> Self {
        let points = radii
            .iter()
            .flat_map(|&r| angles.iter().map(move |&t| Cx::from_polar(r, t)))
            .collect();
        Self { radii, angles, points, layout }
    }

    /// `n_r` radii evenly spaced on `[0, r_max]` and `n_θ` angles on `[0, 2π]`,
    /// both end points included.
    pub fn polar(n_r: usize, n_theta: usize, r_max: T) -> Result<Self> {
        if n_r < 2 || n_theta < 2 {
            return Err(ShearError::InvalidArgument(format!(
                "mesh needs at least 2 radii and 2 angles, got {n_r} x {n_theta}"
            )));
        }
        if !(r_max > T::zero() && r_max <= T::one()) {
            return Err(ShearError::InvalidArgument(format!("mesh radius must be in (0, 1], got {r_max}")));
        }
        let radii = (0..n_r)
            .map(|k| r_max * T::from_count(k) / T::from_count(n_r - 1))
            .collect();
        Ok(Self::from_axes(radii, full_turn(n_theta - 1), GridLayout::Polar))
    }

    /// Rescales every radius by `r_max / max(radii)`.
    pub fn with_outer_radius(&self, r_max: T) -> Self {
        let outer = self.radii.iter().fold(T::zero(), |m, &r| m.max(r));
        let scale = if outer > T::zero() { r_max / outer } else { T::one() };
        let radii = self.radii.iter().map(|&r| r * scale).collect();
        Self::from_axes(radii, self.angles.clone(), self.layout)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(radius index, angle index)` of a flat point index.
    pub fn grid_index(&self, i: usize) -> (usize, usize) {
        (i / self.angles.len(), i % self.angles.len())
    }

    pub fn radius_of(&self, i: usize) -> T {
        self.radii[i / self.angles.len()]
    }

    pub fn angle_of(&self, i: usize) -> T {
        self.angles[i % self.angles.len()]
    }
}

/// `2πk/steps` for `k = 0..=steps`.
fn full_turn<T: Real>(steps: usize) -> Vec<T> {
    let two_pi = T::lit(2.0) * T::PI();
    (0..=steps)
        .map(|k| two_pi * T::from_count(k) / T::from_count(steps))
        .collect()
}

/// Interior validation mesh: `r = k/20`, `k = 0..=20`, and `θ = 2πk/40`,
/// `k = 0..=40` (861 points; `θ = 0` and `θ = 2π` are both kept).
pub fn mesh_interior<T: Real>() -> DiskMesh<T> {
    let radii = (0..=20).map(|k| T::from_count(k) / T::lit(20.0)).collect();
    DiskMesh::from_axes(radii, full_turn(40), GridLayout::Polar)
}

/// Boundary validation mesh: `r = (990+k)/1000`, `k = 0..=10`, same angles
/// as [`mesh_interior`] (451 points).
pub fn mesh_boundary<T: Real>() -> DiskMesh<T> {
    let radii = (0..=10)
        .map(|k| T::from_count(990 + k) / T::lit(1000.0))
        .collect();
    DiskMesh::from_axes(radii, full_turn(40), GridLayout::Cartesian)
}

/// Which part of the split test `|f - Q f| <= 2|Re(h - Q h)| + |φ - Q φ|`
/// a field holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorComponent {
    TotalF,
    AnalyticPartH,
    ConformalPhi,
}

impl ErrorComponent {
    pub fn name(self) -> &'static str {
        match self {
            ErrorComponent::TotalF => "total_f",
            ErrorComponent::AnalyticPartH => "analytic_part_h",
            ErrorComponent::ConformalPhi => "conformal_phi",
        }
    }
}

/// Per-point errors on a mesh; `None` marks a sentinel (non-converged
/// quadrature, oracle failure or non-finite value).
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorField<T> {
    pub mesh: DiskMesh<T>,
    pub component: ErrorComponent,
    pub abs_error: Vec<Option<T>>,
    pub log10_error: Vec<Option<T>>,
}

/// Summary of the finite entries of a field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldSummary {
    pub median_log10_err: Option<f64>,
    pub max_log10_err: Option<f64>,
    pub sentinels: usize,
    pub finite: usize,
}

impl<T: Real> ErrorField<T> {
    fn from_abs(mesh: DiskMesh<T>, component: ErrorComponent, abs_error: Vec<Option<T>>) -> Self {
        let log10_error = abs_error
            .iter()
            .map(|e| {
                e.map(|v| {
                    if v > T::zero() {
                        v.log10().max(T::lit(LOG10_FLOOR))
                    } else {
                        T::lit(LOG10_FLOOR)
                    }
                })
            })
            .collect();
        Self { mesh, component, abs_error, log10_error }
    }

    pub fn sentinel_count(&self) -> usize {
        self.abs_error.iter().filter(|e| e.is_none()).count()
    }

    pub fn summary(&self) -> FieldSummary {
        let mut finite: Vec<f64> = self.log10_error.iter().flatten().map(|v| v.as_f64()).collect();
        finite.sort_by(f64::total_cmp);
        FieldSummary {
            median_log10_err: median_sorted(&finite),
            max_log10_err: finite.last().copied(),
            sentinels: self.sentinel_count(),
            finite: finite.len(),
        }
    }

    /// One row per point: `r,theta,re_z,im_z,value_or_sentinel`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "r,theta,re_z,im_z,value_or_sentinel")?;
        for (i, z) in self.mesh.points.iter().enumerate() {
            let value = match self.log10_error[i] {
                Some(v) => format!("{}", v.as_f64()),
                None => "sentinel".to_string(),
            };
            writeln!(
                out,
                "{},{},{},{},{}",
                self.mesh.radius_of(i).as_f64(),
                self.mesh.angle_of(i).as_f64(),
                z.re.as_f64(),
                z.im.as_f64(),
                value
            )?;
        }
        Ok(())
    }

    /// Mesh metadata and the row-major (radius-major) `log₁₀` grid, with
    /// `null` for sentinels.
    pub fn to_json(&self) -> serde_json::Value {
        let n_theta = self.mesh.angles.len();
        let grid: Vec<Vec<Option<f64>>> = self
            .log10_error
            .chunks(n_theta)
            .map(|row| row.iter().map(|v| v.map(|x| x.as_f64())).collect())
            .collect();
        json!({
            "component": self.component,
            "layout": self.mesh.layout,
            "radii": self.mesh.radii.iter().map(|r| r.as_f64()).collect::<Vec<_>>(),
            "angles": self.mesh.angles.iter().map(|t| t.as_f64()).collect::<Vec<_>>(),
            "log10_error": grid,
            "summary": self.summary(),
        })
    }
}

/// Angular distance from `theta` to the nearest `m`-th root of unity.
pub fn angular_distance_to_roots(theta: f64, m: u32) -> f64 {
    let step = std::f64::consts::TAU / f64::from(m.max(1));
    let r = theta.rem_euclid(step);
    r.min(step - r)
}

/// A run of adjacent hot angle columns.
#[derive(Debug, Clone, PartialEq)]
pub struct HotSector {
    /// Indices into `mesh.angles`, in cyclic order.
    pub columns: Vec<usize>,
}

impl<T: Real> ErrorField<T> {
    /// Per angle column, the largest `log₁₀` error over all radii, with a
    /// sentinel counting as `+∞`. The closing `θ = 2π` column is dropped when
    /// it duplicates `θ = 0`.
    pub fn column_maxima(&self) -> Vec<f64> {
        let n_theta = distinct_columns(&self.mesh);
        let stride = self.mesh.angles.len();
        (0..n_theta)
            .map(|j| {
                (0..self.mesh.radii.len())
                    .map(|i| self.log10_error[i * stride + j].map_or(f64::INFINITY, |v| v.as_f64()))
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect()
    }

    /// Groups columns whose maximum exceeds the median column maximum by more
    /// than `decades` into cyclically contiguous sectors.
    pub fn hot_sectors(&self, decades: f64) -> Vec<HotSector> {
        let maxima = self.column_maxima();
        let mut sorted = maxima.clone();
        sorted.sort_by(f64::total_cmp);
        let Some(median) = median_sorted(&sorted) else {
            return Vec::new();
        };
        let hot: Vec<bool> = maxima.iter().map(|&v| v > median + decades).collect();
        let n = hot.len();
        if hot.iter().all(|&h| h) {
            return vec![HotSector { columns: (0..n).collect() }];
        }
        // Start scanning just after a cold column so wrap-around runs stay whole.
        let start = (0..n).find(|&j| !hot[j]).map_or(0, |j| j + 1);
        let mut sectors = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        for step in 0..n {
            let j = (start + step) % n;
            if hot[j] {
                current.push(j);
            } else if !current.is_empty() {
                sectors.push(HotSector { columns: std::mem::take(&mut current) });
            }
        }
        if !current.is_empty() {
            sectors.push(HotSector { columns: current });
        }
        sectors
    }
}

fn distinct_columns<T: Real>(mesh: &DiskMesh<T>) -> usize {
    let n = mesh.angles.len();
    if n >= 2 {
        let span = mesh.angles[n - 1] - mesh.angles[0];
        if (span.as_f64() - std::f64::consts::TAU).abs() < 1e-12 {
            return n - 1;
        }
    }
    n
}

pub(crate) fn median_sorted(sorted: &[f64]) -> Option<f64> {
    match sorted.len() {
        0 => None,
        n if n % 2 == 1 => Some(sorted[n / 2]),
        n => Some(0.5 * (sorted[n / 2 - 1] + sorted[n / 2])),
    }
}

/// Quadrature and closed-form values at one mesh point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointComparison<T> {
    pub z: Cx<T>,
    pub numeric: Option<ShearResult<T>>,
    /// `(h, g)` from the oracle.
    pub exact_shear: Option<(Cx<T>, Cx<T>)>,
    pub exact_phi: Option<Cx<T>>,
}

fn finite_cx<T: Real>(z: Cx<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl<T: Real> PointComparison<T> {
    /// `|f - Q(f)|` with `f = h + conj(g)` from the oracle.
    pub fn total_error(&self) -> Option<T> {
        let q = self.numeric.filter(|q| q.converged())?;
        let (h, g) = self.exact_shear?;
        let e = (h + g.conj() - q.f).norm();
        e.is_finite().then_some(e)
    }

    /// `2 |Re(h - Q(h))|`.
    pub fn h_part_error(&self) -> Option<T> {
        let q = self.numeric.filter(|q| q.h_converged && finite_cx(q.h))?;
        let (h, _) = self.exact_shear?;
        let e = T::lit(2.0) * (h.re - q.h.re).abs();
        e.is_finite().then_some(e)
    }

    /// `|φ - Q(φ)|`.
    pub fn phi_part_error(&self) -> Option<T> {
        let q = self.numeric.filter(|q| q.phi_converged && finite_cx(q.phi))?;
        let e = (self.exact_phi? - q.phi).norm();
        e.is_finite().then_some(e)
    }
}

fn ok_finite<T: Real>(r: Result<Cx<T>>) -> Option<Cx<T>> {
    r.ok().filter(|z| finite_cx(*z))
}

/// The three error fields of one validation pass.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationFields<T> {
    pub total: ErrorField<T>,
    pub h_part: ErrorField<T>,
    pub phi_part: ErrorField<T>,
    pub points: Vec<PointComparison<T>>,
}

fn check_oracle<T: Real>(n: u32, w: &Dilatation<T>) -> Result<()> {
    match w.power_exponent() {
        Some(0) => Ok(()),
        Some(m) if m == n || m == 2 * n => Ok(()),
        Some(m) => Err(ShearError::NoOracle(format!("omega = z^{m} on the {n}-gon"))),
        None => Err(ShearError::NoOracle("a custom dilatation".into())),
    }
}

/// Evaluates quadrature and oracles at every mesh point (in parallel; the
/// result order is the mesh order) and builds all three fields.
pub fn validate_mesh<T: Real>(n: u32, w: &Dilatation<T>, mesh: &DiskMesh<T>, tol: T) -> Result<ValidationFields<T>> {
    check_oracle(n, w)?;
    let map = NgonMap::new(n, tol)?;
    let points: Vec<PointComparison<T>> = mesh
        .points
        .par_iter()
        .map(|&z| PointComparison {
            z,
            numeric: shear_f(&map, w, z, tol).ok(),
            exact_shear: analytic_shear(n, w, z)
                .ok()
                .filter(|(h, g)| finite_cx(*h) && finite_cx(*g)),
            exact_phi: ok_finite(analytic_phi(n, z)),
        })
        .collect();

    let field = |component, f: fn(&PointComparison<T>) -> Option<T>| {
        ErrorField::from_abs(mesh.clone(), component, points.iter().map(f).collect())
    };
    Ok(ValidationFields {
        total: field(ErrorComponent::TotalF, PointComparison::total_error),
        h_part: field(ErrorComponent::AnalyticPartH, PointComparison::h_part_error),
        phi_part: field(ErrorComponent::ConformalPhi, PointComparison::phi_part_error),
        points,
    })
}

/// `log₁₀ |f - Q(f)|` over the mesh.
pub fn error_field_f<T: Real>(n: u32, w: &Dilatation<T>, mesh: &DiskMesh<T>, tol: T) -> Result<ErrorField<T>> {
    Ok(validate_mesh(n, w, mesh, tol)?.total)
}

/// The `h` part `2|Re(h - Q(h))|` and the `φ` part `|φ - Q(φ)|`.
pub fn error_field_parts<T: Real>(
    n: u32,
    w: &Dilatation<T>,
    mesh: &DiskMesh<T>,
    tol: T,
) -> Result<(ErrorField<T>, ErrorField<T>)> {
    let v = validate_mesh(n, w, mesh, tol)?;
    Ok((v.h_part, v.phi_part))
}
