//! Library side of the `hshear` command-line tool.
//!
//! Each subcommand is a `run_*` function taking a validated [`JobSpec`] and a
//! sink for standard output. Per-point work runs in parallel through
//! `rayon`; every output format is assembled afterwards from the same
//! evaluated values, in mesh order.

pub mod args;
pub mod error;
pub mod job;
pub mod svg;

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use harmonic_shear::quadrature::kronrod_rule;
use harmonic_shear::{
    gauss_legendre_rule, shear_f, surface_point, validate_mesh, Complex64, Dilatation64, DiskMesh64,
    ErrorField64, NgonMap64, ShearError, ShearResult64, SurfacePoint64,
};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use error::CliError;
pub use job::{Command, JobSpec, MeshChoice, OutputFormat};

/// Samples per ring or ray in SVG image meshes.
pub const CURVE_SAMPLES: usize = 200;
/// Default outermost radius of shear images.
pub const SHEAR_RMAX: f64 = 0.99;
/// Default outermost radius of surfaces.
pub const SURFACE_RMAX: f64 = 0.8;

type CliResult<T> = Result<T, CliError>;

fn params(job: &JobSpec) -> Value {
    json!({
        "n": job.n,
        "omega": job.dilatation_power,
        "mesh": job.mesh.to_string(),
        "rmax": job.rmax,
        "tol": job.tol,
        "format": job.output_format,
    })
}

fn write_file(path: &Path, contents: &[u8]) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn print(stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

/// With `--out`, the payload goes to the file and the summary to stdout;
/// otherwise the payload goes to stdout.
fn emit(job: &JobSpec, stdout: &mut dyn Write, payload: &str, summary: &Value) -> CliResult<()> {
    match &job.output_path {
        Some(path) => {
            write_file(path, payload.as_bytes())?;
            print(stdout, &format!("{summary}\n"))
        }
        None => print(stdout, payload),
    }
}

fn finish(unconverged: usize, allow: bool) -> CliResult<()> {
    if unconverged > 0 && !allow {
        Err(CliError::Unconverged(unconverged))
    } else {
        Ok(())
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn cx_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn dilatation(job: &JobSpec) -> Dilatation64 {
    Dilatation64::power(job.dilatation_power)
}

// The interior mesh is rescaled to the default outer radius unless --rmax says
// otherwise; boundary and custom meshes keep their own radii.
fn mesh_for(job: &JobSpec, default_rmax: f64) -> CliResult<DiskMesh64> {
    let mut job = job.clone();
    if job.rmax.is_none() && job.mesh == MeshChoice::Interior {
        job.rmax = Some(default_rmax);
    }
    job.build_mesh()
}

/// Evaluates the shear at every point, in parallel and in input order.
/// Points that fail (poles on the circle, non-finite values) become `None`.
pub fn evaluate_shear(n: u32, w: &Dilatation64, points: &[Complex64], tol: f64) -> CliResult<Vec<Option<ShearResult64>>> {
    let map = NgonMap64::new(n, tol)?;
    Ok(points
        .par_iter()
        .map(|&z| {
            shear_f(&map, w, z, tol)
                .ok()
                .filter(|s| s.f.re.is_finite() && s.f.im.is_finite())
        })
        .collect())
}

fn ring_and_ray_points(mesh: &DiskMesh64) -> Vec<Complex64> {
    let r_max = mesh.radii.last().copied().unwrap_or(1.0);
    let last = (CURVE_SAMPLES - 1) as f64;
    let mut pts = Vec::with_capacity((mesh.radii.len() + mesh.angles.len()) * CURVE_SAMPLES);
    for &r in &mesh.radii {
        pts.extend((0..CURVE_SAMPLES).map(|k| Complex64::from_polar(r, TAU * k as f64 / last)));
    }
    for &t in &mesh.angles {
        pts.extend((0..CURVE_SAMPLES).map(|k| Complex64::from_polar(r_max * k as f64 / last, t)));
    }
    pts
}

fn shear_csv(mesh: &DiskMesh64, values: &[Option<ShearResult64>]) -> String {
    let mut out = String::from("r,theta,re_z,im_z,re_h,im_h,re_g,im_g,re_f,im_f,re_phi,im_phi,converged\n");
    for (i, (z, v)) in mesh.points.iter().zip(values).enumerate() {
        let _ = write!(out, "{},{},{},{}", mesh.radius_of(i), mesh.angle_of(i), z.re, z.im);
        match v {
            Some(s) => {
                for c in [s.h, s.g, s.f, s.phi] {
                    let _ = write!(out, ",{},{}", c.re, c.im);
                }
                let _ = writeln!(out, ",{}", s.converged());
            }
            None => {
                out.push_str(&",sentinel".repeat(8));
                out.push_str(",false\n");
            }
        }
    }
    out
}

fn shear_json(mesh: &DiskMesh64, values: &[Option<ShearResult64>]) -> Value {
    let rows: Vec<Value> = mesh
        .points
        .iter()
        .zip(values)
        .enumerate()
        .map(|(i, (z, v))| match v {
            Some(s) => json!({
                "r": mesh.radius_of(i), "theta": mesh.angle_of(i), "z": cx_json(*z),
                "h": cx_json(s.h), "g": cx_json(s.g), "f": cx_json(s.f), "phi": cx_json(s.phi),
                "converged": s.converged(),
            }),
            None => json!({
                "r": mesh.radius_of(i), "theta": mesh.angle_of(i), "z": cx_json(*z),
                "h": null, "g": null, "f": null, "phi": null, "converged": false,
            }),
        })
        .collect();
    Value::Array(rows)
}

/// `shear`: tabulates `h`, `g`, `f`, `φ` over the mesh, or draws the image of
/// its rings and rays under `f`.
pub fn run_shear(job: &JobSpec, stdout: &mut dyn Write) -> CliResult<()> {
    job.validate()?;
    let start = Instant::now();
    let mesh = mesh_for(job, SHEAR_RMAX)?;
    let w = dilatation(job);

    let mut points = mesh.points.clone();
    if job.output_format == OutputFormat::Svg {
        points.extend(ring_and_ray_points(&mesh));
    }
    let values = evaluate_shear(job.n, &w, &points, job.tol)?;
    let unconverged = values.iter().filter(|s| !s.as_ref().is_some_and(|s| s.converged())).count();
    let table = &values[..mesh.len()];

    let payload = match job.output_format {
        OutputFormat::Csv => shear_csv(&mesh, table),
        OutputFormat::Json => {
            let doc = json!({ "command": "shear", "params": params(job), "points": shear_json(&mesh, table) });
            format!("{doc}\n")
        }
        OutputFormat::Svg => {
            let curves: Vec<svg::Curve> = values[mesh.len()..]
                .chunks(CURVE_SAMPLES)
                .map(|c| c.iter().map(|s| s.as_ref().map(|s| (s.f.re, s.f.im))).collect())
                .collect();
            let (rings, rays) = curves.split_at(mesh.radii.len());
            svg::image_mesh(rings, rays)
        }
    };
    let summary = json!({
        "command": "shear",
        "params": params(job),
        "points": points.len(),
        "unconverged": unconverged,
        "wall_ms": elapsed_ms(start),
    });
    emit(job, stdout, &payload, &summary)?;
    finish(unconverged, job.allow_sentinels)
}

/// `path.csv` → `path_total_f.csv` and so on.
pub fn component_path(path: &Path, component: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{component}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{component}"),
    };
    path.with_file_name(name)
}

/// `validate`: compares the quadrature with the closed forms and reports the
/// total, `h`-part and `φ`-part error fields.
pub fn run_validate(job: &JobSpec, stdout: &mut dyn Write) -> CliResult<()> {
    job.validate()?;
    let (n, m) = (job.n, job.dilatation_power);
    if m != n && m != 2 * n {
        return Err(ShearError::NoOracle(format!("omega = z^{m} on the {n}-gon (closed forms exist for m = n and m = 2n)")).into());
    }
    let start = Instant::now();
    let mesh = job.build_mesh()?;
    let v = validate_mesh(n, &dilatation(job), &mesh, job.tol)?;
    let fields: [&ErrorField64; 3] = [&v.total, &v.h_part, &v.phi_part];

    let unconverged = v
        .points
        .iter()
        .zip(&v.total.abs_error)
        .filter(|(p, e)| e.is_none() || !p.numeric.as_ref().is_some_and(|s| s.converged()))
        .count();

    if let Some(path) = &job.output_path {
        match job.output_format {
            OutputFormat::Csv => {
                for field in fields {
                    let mut buf = Vec::new();
                    field.write_csv(&mut buf).map_err(|e| CliError::io("<buffer>", e))?;
                    write_file(&component_path(path, field.component.name()), &buf)?;
                }
            }
            OutputFormat::Json => {
                let doc = json!({ "fields": fields.iter().map(|f| f.to_json()).collect::<Vec<_>>() });
                write_file(path, format!("{doc}\n").as_bytes())?;
            }
            OutputFormat::Svg => write_file(path, svg::heatmaps(&fields).as_bytes())?,
        }
    }

    let total = v.total.summary();
    let parts: serde_json::Map<String, Value> = fields
        .iter()
        .map(|f| (f.component.name().to_string(), json!(f.summary())))
        .collect();
    let summary = json!({
        "command": "validate",
        "params": params(job),
        "median_log10_err": total.median_log10_err,
        "max_log10_err": total.max_log10_err,
        "sentinels": total.sentinels,
        "unconverged": unconverged,
        "fields": parts,
        "wall_ms": elapsed_ms(start),
    });
    print(stdout, &format!("{summary}\n"))?;
    finish(unconverged, job.allow_sentinels)
}

fn surface_csv(mesh: &DiskMesh64, pts: &[Option<(SurfacePoint64, bool)>]) -> String {
    let mut out = String::from("r,theta,re_z,im_z,u,v,w,converged\n");
    for (i, (z, p)) in mesh.points.iter().zip(pts).enumerate() {
        let _ = write!(out, "{},{},{},{}", mesh.radius_of(i), mesh.angle_of(i), z.re, z.im);
        match p {
            Some((s, ok)) => {
                let _ = writeln!(out, ",{},{},{},{ok}", s.u, s.v, s.w);
            }
            None => out.push_str(",sentinel,sentinel,sentinel,false\n"),
        }
    }
    out
}

/// Triangulates the structured polar grid. The `r = 0` ring collapses to a
/// single point, so its cells become triangles; faces touching a missing
/// vertex are dropped.
pub fn surface_obj(n_r: usize, n_theta: usize, pts: &[Option<SurfacePoint64>]) -> String {
    let mut out = String::from("# polar grid, radius-major\n");
    for p in pts {
        match p {
            Some(s) => {
                let _ = writeln!(out, "v {} {} {}", s.u, s.v, s.w);
            }
            None => out.push_str("v nan nan nan\n"),
        }
    }
    let id = |i: usize, j: usize| i * n_theta + j;
    let ok = |k: usize| pts[k].is_some();
    for i in 0..n_r.saturating_sub(1) {
        for j in 0..n_theta.saturating_sub(1) {
            let (a, b, c, d) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            let degenerate = pts[a].is_some() && pts[a] == pts[d];
            for tri in [[a, b, c], [a, c, d]] {
                if tri.iter().all(|&k| ok(k)) && !(degenerate && tri == [a, c, d]) {
                    let _ = writeln!(out, "f {} {} {}", tri[0] + 1, tri[1] + 1, tri[2] + 1);
                }
            }
        }
    }
    out
}

/// `surface`: lifts the shear to the minimal surface `(Re f, Im f, 2 Im ψ)`.
pub fn run_surface(job: &JobSpec, obj: Option<&Path>, stdout: &mut dyn Write) -> CliResult<()> {
    job.validate()?;
    let w = dilatation(job);
    if !w.has_sqrt() {
        return Err(ShearError::NotLiftable(format!("omega = z^{}", job.dilatation_power)).into());
    }
    let start = Instant::now();
    let mesh = mesh_for(job, SURFACE_RMAX)?;
    let map = NgonMap64::new(job.n, job.tol)?;
    let lifted: Vec<Option<(SurfacePoint64, bool)>> = mesh
        .points
        .par_iter()
        .map(|&z| {
            surface_point(&map, &w, z, job.tol)
                .ok()
                .filter(|p| p.point.is_finite())
                .map(|p| (p.point, p.converged()))
        })
        .collect();
    let unconverged = lifted.iter().filter(|p| !p.is_some_and(|(_, ok)| ok)).count();
    let bare: Vec<Option<SurfacePoint64>> = lifted.iter().map(|p| p.map(|(s, _)| s)).collect();
    let (n_r, n_t) = (mesh.radii.len(), mesh.angles.len());

    let payload = match job.output_format {
        OutputFormat::Csv => surface_csv(&mesh, &lifted),
        OutputFormat::Json => {
            let rows: Vec<Value> = lifted
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    json!({
                        "r": mesh.radius_of(i), "theta": mesh.angle_of(i),
                        "u": p.map(|(s, _)| s.u), "v": p.map(|(s, _)| s.v), "w": p.map(|(s, _)| s.w),
                        "converged": p.is_some_and(|(_, ok)| ok),
                    })
                })
                .collect();
            format!("{}\n", json!({ "command": "surface", "params": params(job), "points": rows }))
        }
        OutputFormat::Svg => svg::surface_wireframe(&bare, n_r, n_t),
    };
    if let Some(path) = obj {
        write_file(path, surface_obj(n_r, n_t, &bare).as_bytes())?;
    }
    let summary = json!({
        "command": "surface",
        "params": params(job),
        "points": mesh.len(),
        "unconverged": unconverged,
        "wall_ms": elapsed_ms(start),
    });
    emit(job, stdout, &payload, &summary)?;
    finish(unconverged, job.allow_sentinels)
}

/// Which rule `rule` prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleChoice {
    Gauss(usize),
    Kronrod,
}

/// `rule`: prints nodes and weights as JSON.
pub fn run_rule(choice: RuleChoice, stdout: &mut dyn Write) -> CliResult<()> {
    let (name, nodes, weights): (&str, Vec<f64>, Vec<f64>) = match choice {
        RuleChoice::Gauss(n) => {
            let rule = gauss_legendre_rule::<f64>(n)?;
            ("gauss-legendre", rule.nodes, rule.weights)
        }
        RuleChoice::Kronrod => {
            let (x, w) = kronrod_rule::<f64>();
            ("kronrod-15", x, w)
        }
    };
    let doc = json!({
        "command": "rule",
        "rule": name,
        "points": nodes.len(),
        "nodes": nodes,
        "weights": weights,
        "weight_sum": weights.iter().sum::<f64>(),
    });
    print(stdout, &format!("{doc}\n"))
}
