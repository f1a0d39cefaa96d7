//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the report is always
//! printed.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use harmonic_shear::mesh::angular_distance_to_roots;
use harmonic_shear::quadrature::kronrod_rule;
use harmonic_shear::specfun::{appell_f1_euler, appell_f1_series, gauss_2f1_euler, gauss_2f1_series};
use harmonic_shear::{
    analytic_surface_point, gauss_legendre_rule, mesh_boundary, mesh_interior, shear_f, shear_g, shear_h,
    surface_point, validate_mesh, AppellParams, Complex64, Dilatation64, DiskMesh64, HypergeometricParams,
    NgonMap64, ValidationFields,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-10;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn random_disk_point(rng: &mut ChaCha8Rng, r_max: f64) -> Complex64 {
    Complex64::from_polar(r_max * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>())
}

fn quadrature_exactness() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=20 {
        let rule = gauss_legendre_rule::<f64>(n).map_err(|e| e.to_string())?;
        for d in 0..2 * n as i32 {
            let exact = if d % 2 == 0 { 2.0 / f64::from(d + 1) } else { 0.0 };
            worst = worst.max((rule.integrate(-1.0, 1.0, |x| x.powi(d)) - exact).abs());
        }
    }
    let (x, w) = kronrod_rule::<f64>();
    for d in 0..=22 {
        let exact = if d % 2 == 0 { 2.0 / f64::from(d + 1) } else { 0.0 };
        let sum: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(d)).sum();
        worst = worst.max((sum - exact).abs());
    }
    let t = start.elapsed();
    check(worst <= 1e-13 && within(t, 1.0), format!("max error {worst:.1e}, {t:.2?}"))
}

fn oracle_consistency() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let rel = |a: Complex64, b: Complex64| (a - b).norm() / b.norm();
    let (mut worst_2f1, mut worst_f1) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let b = rng.gen_range(0.05..3.0);
        let p = HypergeometricParams::new(rng.gen_range(-2.0..3.0), b, b + rng.gen_range(0.05..3.0))
            .map_err(|e| e.to_string())?;
        let z = random_disk_point(&mut rng, 0.9);
        let s = gauss_2f1_series(p, z).map_err(|e| e.to_string())?;
        let e = gauss_2f1_euler(p, z).map_err(|e| e.to_string())?;
        worst_2f1 = worst_2f1.max(rel(s, e));

        let a = rng.gen_range(0.05..3.0);
        let p = AppellParams::new(a, rng.gen_range(-2.0..3.0), rng.gen_range(-2.0..3.0), a + rng.gen_range(0.05..3.0))
            .map_err(|e| e.to_string())?;
        let (x, y) = (random_disk_point(&mut rng, 0.85), random_disk_point(&mut rng, 0.85));
        let s = appell_f1_series(p, x, y).map_err(|e| e.to_string())?;
        let e = appell_f1_euler(p, x, y).map_err(|e| e.to_string())?;
        worst_f1 = worst_f1.max(rel(s, e));
    }
    let t = start.elapsed();
    check(
        worst_2f1 <= 1e-10 && worst_f1 <= 1e-10 && within(t, 10.0),
        format!("max relative gap 2F1 {worst_2f1:.1e}, F1 {worst_f1:.1e} over 200 tuples each, {t:.2?}"),
    )
}

fn configurations() -> Vec<(u32, u32)> {
    [3u32, 4, 5].iter().flat_map(|&n| [(n, n), (n, 2 * n)]).collect()
}

fn shear_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for (n, m) in configurations() {
        let map = NgonMap64::new(n, TOL).map_err(|e| e.to_string())?;
        let w = Dilatation64::power(m);
        for _ in 0..100 {
            let z = random_disk_point(&mut rng, 0.9);
            // three independent integrals
            let h = shear_h(&map, &w, z, TOL).map_err(|e| e.to_string())?.value;
            let g = shear_g(&map, &w, z, TOL).map_err(|e| e.to_string())?.value;
            let phi = map.map(z).map_err(|e| e.to_string())?.value;
            worst = worst.max((h - g - phi).norm());
        }
    }
    check(worst <= 1e-8, format!("max |h - g - φ| = {worst:.1e} over 600 points"))
}

fn interior_fields() -> Result<ValidationFields<f64>, String> {
    validate_mesh(4, &Dilatation64::power(8), &mesh_interior(), TOL).map_err(|e| e.to_string())
}

fn closed_form_reproduction() -> Outcome {
    let start = Instant::now();
    let v = interior_fields()?;
    let t = start.elapsed();
    let mesh = &v.total.mesh;
    let mut finite: Vec<f64> = v.total.abs_error.iter().flatten().copied().collect();
    finite.sort_by(f64::total_cmp);
    let median = finite[finite.len() / 2];
    let max_inner = (0..mesh.len())
        .filter(|&i| mesh.radius_of(i) <= 0.95)
        .map(|i| v.total.abs_error[i].unwrap_or(f64::INFINITY))
        .fold(0.0f64, f64::max);
    check(
        mesh.len() == 861 && median <= 1e-8 && max_inner <= 1e-6 && within(t, 60.0),
        format!(
            "median {median:.1e}, max(r <= 0.95) {max_inner:.1e}, {} sentinels at r = 1, {t:.2?}",
            v.total.sentinel_count()
        ),
    )
}

fn singularity_locality(v: &ValidationFields<f64>) -> Outcome {
    let field = &v.total;
    let mut finite: Vec<(f64, usize)> = field
        .abs_error
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| (e, i)))
        .collect();
    finite.sort_by(|a, b| b.0.total_cmp(&a.0));
    let far = finite[..10]
        .iter()
        .map(|&(_, i)| angular_distance_to_roots(field.mesh.angle_of(i), 8))
        .fold(0.0f64, f64::max);
    let phi_sectors = v.phi_part.hot_sectors(2.0).len();
    let h_sectors = v.h_part.hot_sectors(2.0).len();
    check(
        far <= PI / 8.0 && phi_sectors == 4 && h_sectors == 8,
        format!("top-10 errors within {far:.3} rad of an 8th root; hot sectors φ = {phi_sectors}, h = {h_sectors}"),
    )
}

fn error_decomposition(fields: &[&ValidationFields<f64>]) -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    let mut checked = 0;
    for v in fields {
        for i in 0..v.total.abs_error.len() {
            if let (Some(t), Some(h), Some(p)) = (v.total.abs_error[i], v.h_part.abs_error[i], v.phi_part.abs_error[i]) {
                worst = worst.max(t - h - p);
                checked += 1;
            }
        }
    }
    check(worst <= 1e-14, format!("max(total - h_part - φ_part) = {worst:.1e} over {checked} points"))
}

fn minimal_surface_oracle() -> Outcome {
    let start = Instant::now();
    let mesh: DiskMesh64 = mesh_interior().with_outer_radius(0.8);
    let map = NgonMap64::new(4, TOL).map_err(|e| e.to_string())?;
    let w = Dilatation64::power(4);
    let mut worst = 0.0f64;
    let mut heights = Vec::with_capacity(mesh.len());
    for &z in &mesh.points {
        let a = surface_point(&map, &w, z, TOL).map_err(|e| e.to_string())?.point;
        let b = analytic_surface_point::<f64>(4, z).map_err(|e| e.to_string())?;
        worst = worst.max((a.u - b.u).abs()).max((a.v - b.v).abs()).max((a.w - b.w).abs());
        heights.push(a.w);
    }
    // θ_j and θ_{40-j} are conjugate angles
    let n_t = mesh.angles.len();
    let mut odd = 0.0f64;
    for i in 0..mesh.radii.len() {
        for j in 0..n_t {
            odd = odd.max((heights[i * n_t + j] + heights[i * n_t + (n_t - 1 - j)]).abs());
        }
    }
    let t = start.elapsed();
    check(
        worst <= 1e-6 && odd <= 1e-10 && within(t, 30.0),
        format!("max coordinate gap {worst:.1e}, max |w(z) + w(conj z)| {odd:.1e}, {t:.2?}"),
    )
}

fn jacobian_positivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let d = 1e-6;
    let mut least = f64::INFINITY;
    for (n, m) in configurations() {
        let map = NgonMap64::new(n, 1e-12).map_err(|e| e.to_string())?;
        let w = Dilatation64::power(m);
        for _ in 0..500 {
            let z = random_disk_point(&mut rng, 0.95);
            let plus = shear_f(&map, &w, z + d, 1e-12).map_err(|e| e.to_string())?;
            let minus = shear_f(&map, &w, z - d, 1e-12).map_err(|e| e.to_string())?;
            let dh = (plus.h - minus.h) / (2.0 * d);
            let dg = (plus.g - minus.g) / (2.0 * d);
            least = least.min(dh.norm_sqr() - dg.norm_sqr());
        }
    }
    check(least > 0.0, format!("min |h'|² - |g'|² = {least:.3e} over 500 points × 6 configurations"))
}

fn determinism(first: &ValidationFields<f64>) -> Outcome {
    let second = interior_fields()?;
    let csv = |v: &ValidationFields<f64>| {
        let mut buf = Vec::new();
        for field in [&v.total, &v.h_part, &v.phi_part] {
            field.write_csv(&mut buf).expect("write to memory");
        }
        buf
    };
    let (a, b) = (csv(first), csv(&second));
    check(a == b, format!("{} CSV bytes compared", a.len()))
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "quadrature exactness", quadrature_exactness()),
        (2, "special-function branch agreement", oracle_consistency()),
        (3, "shear identity h - g = φ", shear_identity()),
        (4, "closed-form reproduction, n = 4, ω = z⁸", closed_form_reproduction()),
    ];
    let interior = interior_fields();
    let boundary = validate_mesh(4, &Dilatation64::power(8), &mesh_boundary(), TOL).map_err(|e| e.to_string());
    match (&interior, &boundary) {
        (Ok(i), Ok(b)) => {
            results.push((5, "singularity locality", singularity_locality(b)));
            results.push((6, "error decomposition", error_decomposition(&[i, b])));
        }
        (Err(e), _) | (_, Err(e)) => {
            results.push((5, "singularity locality", Err(e.clone())));
            results.push((6, "error decomposition", Err(e.clone())));
        }
    }
    results.push((7, "minimal surface oracle, n = 4, ω = z⁴", minimal_surface_oracle()));
    results.push((8, "Jacobian positivity", jacobian_positivity()));
    results.push((
        9,
        "determinism",
        interior.as_ref().map_err(|e| e.clone()).and_then(determinism),
    ));

    let mut failed = 0;
    for (k, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("acceptance {k}: PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("acceptance {k}: FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
