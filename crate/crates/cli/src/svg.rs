//! Minimal SVG writers: image meshes, error heatmaps and a wireframe view of
//! a surface. Output is plain text with fixed float formatting so identical
//! inputs give identical files.

use std::f64::consts::PI;
use std::fmt::Write as _;

use harmonic_shear::{ErrorField64, GridLayout, SurfacePoint64};

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 24.0;

/// Range of the heatmap colour scale in decades.
pub const LOG10_RANGE: (f64, f64) = (-16.0, 0.0);

pub type Curve = Vec<Option<(f64, f64)>>;

struct Frame {
    min_x: f64,
    min_y: f64,
    scale: f64,
}

impl Frame {
    fn fit<'a>(pts: impl Iterator<Item = &'a (f64, f64)>, width: f64, height: f64) -> Self {
        let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in pts {
            lo_x = lo_x.min(x);
            lo_y = lo_y.min(y);
            hi_x = hi_x.max(x);
            hi_y = hi_y.max(y);
        }
        if lo_x > hi_x {
            (lo_x, lo_y, hi_x, hi_y) = (-1.0, -1.0, 1.0, 1.0);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1e-12);
        let scale = (width.min(height) - 2.0 * MARGIN) / span;
        // centre the shorter axis
        let min_x = lo_x - ((width - 2.0 * MARGIN) / scale - (hi_x - lo_x)) / 2.0;
        let min_y = lo_y - ((height - 2.0 * MARGIN) / scale - (hi_y - lo_y)) / 2.0;
        Frame { min_x, min_y, scale }
    }

    fn px(&self, (x, y): (f64, f64), height: f64) -> (f64, f64) {
        (
            MARGIN + (x - self.min_x) * self.scale,
            height - MARGIN - (y - self.min_y) * self.scale,
        )
    }
}

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn polyline(out: &mut String, class: &str, pts: impl Iterator<Item = (f64, f64)>) {
    out.push_str(r#"<polyline class=""#);
    out.push_str(class);
    out.push_str(r#"" fill="none" stroke="black" stroke-width="0.6" points=""#);
    let mut first = true;
    for (x, y) in pts {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{x:.3},{y:.3}");
    }
    out.push_str("\"/>\n");
}

/// Rings and rays of an image mesh, one polyline per curve. Missing samples
/// are skipped rather than splitting the curve.
pub fn image_mesh(rings: &[Curve], rays: &[Curve]) -> String {
    let all = rings.iter().chain(rays).flatten().flatten();
    let frame = Frame::fit(all, CANVAS, CANVAS);
    let mut out = String::new();
    header(&mut out, CANVAS, CANVAS);
    for (class, curves) in [("ring", rings), ("ray", rays)] {
        for c in curves {
            polyline(&mut out, class, c.iter().flatten().map(|&p| frame.px(p, CANVAS)));
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Piecewise-linear ramp from dark blue (accurate) to yellow (inaccurate).
pub fn colour(log10_err: f64) -> String {
    const STOPS: [(f64, [u8; 3]); 5] = [
        (0.0, [68, 1, 84]),
        (0.25, [59, 82, 139]),
        (0.5, [33, 145, 140]),
        (0.75, [94, 201, 98]),
        (1.0, [253, 231, 37]),
    ];
    let (lo, hi) = LOG10_RANGE;
    let t = ((log10_err - lo) / (hi - lo)).clamp(0.0, 1.0);
    let k = STOPS.iter().position(|s| s.0 >= t).unwrap_or(STOPS.len() - 1).max(1);
    let (t0, c0) = STOPS[k - 1];
    let (t1, c1) = STOPS[k];
    let s = (t - t0) / (t1 - t0);
    let mix = |i: usize| (c0[i] as f64 + s * (c1[i] as f64 - c0[i] as f64)).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(0), mix(1), mix(2))
}

// Cell edges halfway between neighbouring axis values, clamped to the axis ends.
fn cell_edges(axis: &[f64]) -> Vec<(f64, f64)> {
    (0..axis.len())
        .map(|i| {
            let lo = if i == 0 { axis[0] } else { 0.5 * (axis[i - 1] + axis[i]) };
            let hi = if i + 1 == axis.len() { axis[i] } else { 0.5 * (axis[i] + axis[i + 1]) };
            (lo, hi)
        })
        .collect()
}

fn fill(v: Option<f64>) -> String {
    // sentinels stay white
    v.map_or_else(|| "white".to_string(), colour)
}

/// Error heatmaps, one panel per field. Polar meshes are drawn as annular
/// cells in the disk; Cartesian meshes as a θ–r rectangle.
pub fn heatmaps(fields: &[&ErrorField64]) -> String {
    let panel = CANVAS / 1.5;
    let width = panel * fields.len().max(1) as f64;
    let mut out = String::new();
    header(&mut out, width, panel + 20.0);
    for (p, field) in fields.iter().enumerate() {
        let x0 = p as f64 * panel;
        let _ = writeln!(
            out,
            r#"<g class="field" data-component="{}" transform="translate({x0:.1},0)">"#,
            field.component.name()
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">{}</text>"#,
            panel / 2.0,
            panel + 12.0,
            field.component.name()
        );
        match field.mesh.layout {
            GridLayout::Polar => polar_cells(&mut out, field, panel),
            GridLayout::Cartesian => cartesian_cells(&mut out, field, panel),
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

fn polar_cells(out: &mut String, field: &ErrorField64, panel: f64) {
    let mesh = &field.mesh;
    let r_max = mesh.radii.last().copied().unwrap_or(1.0).max(1e-12);
    let scale = (panel / 2.0 - MARGIN) / r_max;
    let c = panel / 2.0;
    let r_edges = cell_edges(&mesh.radii);
    let t_edges = cell_edges(&mesh.angles);
    let n_t = mesh.angles.len();
    for (idx, v) in field.log10_error.iter().enumerate() {
        let (i, j) = (idx / n_t, idx % n_t);
        let (r0, r1) = r_edges[i];
        let (t0, t1) = t_edges[j];
        if r1 <= r0 || t1 <= t0 {
            continue;
        }
        let steps = 4;
        let mut pts = Vec::with_capacity(2 * steps + 2);
        for s in 0..=steps {
            let t = t0 + (t1 - t0) * s as f64 / steps as f64;
            pts.push((r1 * t.cos(), r1 * t.sin()));
        }
        for s in (0..=steps).rev() {
            let t = t0 + (t1 - t0) * s as f64 / steps as f64;
            pts.push((r0 * t.cos(), r0 * t.sin()));
        }
        out.push_str(r#"<polygon stroke="none" fill=""#);
        out.push_str(&fill(*v));
        out.push_str(r#"" points=""#);
        for (k, (x, y)) in pts.into_iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.2},{:.2}", c + x * scale, c - y * scale);
        }
        out.push_str("\"/>\n");
    }
}

fn cartesian_cells(out: &mut String, field: &ErrorField64, panel: f64) {
    let mesh = &field.mesh;
    let inner = panel - 2.0 * MARGIN;
    let (r_lo, r_hi) = (mesh.radii[0], *mesh.radii.last().unwrap_or(&1.0));
    let r_span = (r_hi - r_lo).max(1e-12);
    let r_edges = cell_edges(&mesh.radii);
    let t_edges = cell_edges(&mesh.angles);
    let n_t = mesh.angles.len();
    for (idx, v) in field.log10_error.iter().enumerate() {
        let (i, j) = (idx / n_t, idx % n_t);
        let (r0, r1) = r_edges[i];
        let (t0, t1) = t_edges[j];
        let x = MARGIN + inner * t0 / (2.0 * PI);
        let w = inner * (t1 - t0) / (2.0 * PI);
        let y = MARGIN + inner * (1.0 - (r1 - r_lo) / r_span);
        let h = inner * (r1 - r0) / r_span;
        // degenerate edge cells still get a sliver so every point is visible
        let _ = writeln!(
            out,
            r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
            w.max(1.0),
            h.max(1.0),
            fill(*v)
        );
    }
}

fn project(p: &SurfacePoint64) -> (f64, f64) {
    let (az, el) = (PI / 6.0, PI / 7.0);
    let x = p.u * az.cos() - p.v * az.sin();
    let depth = p.u * az.sin() + p.v * az.cos();
    (x, p.w * el.cos() + depth * el.sin())
}

/// Wireframe of a surface sampled on a polar grid (`n_r × n_theta`, radius
/// major), oblique projection.
pub fn surface_wireframe(points: &[Option<SurfacePoint64>], n_r: usize, n_theta: usize) -> String {
    let flat: Vec<Option<(f64, f64)>> = points.iter().map(|p| p.as_ref().map(project)).collect();
    let frame = Frame::fit(flat.iter().flatten(), CANVAS, CANVAS);
    let mut out = String::new();
    header(&mut out, CANVAS, CANVAS);
    for i in 0..n_r {
        let ring = (0..n_theta).filter_map(|j| flat[i * n_theta + j]);
        polyline(&mut out, "ring", ring.map(|p| frame.px(p, CANVAS)));
    }
    for j in 0..n_theta {
        let ray = (0..n_r).filter_map(|i| flat[i * n_theta + j]);
        polyline(&mut out, "ray", ray.map(|p| frame.px(p, CANVAS)));
    }
    out.push_str("</svg>\n");
    out
}
