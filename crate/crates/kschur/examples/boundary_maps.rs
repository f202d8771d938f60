//! Evaluating boundary points with Perron–Frobenius data: the maps f and
//! g, harmonic normalization, the ζ polynomial and the level projection.
//!
//! Run with: cargo run --example boundary_maps

use kschur::boundary::{
    f_map_f64, g_map, project_pi, region_k3, simplex_normalize, zeta_poly, BoundaryPoint,
    DEFAULT_TOL,
};

fn main() -> kschur::Result<()> {
    // k = 2 closed forms: f(r) = (√(r1+r2), r1), g(h) = (h2, h1²−h2)
    let r = [1.0, 3.0];
    let h = f_map_f64(2, &r)?;
    println!("k=2: f({r:?}) = {h:?}");
    println!("k=2: g({h:?}) = {:?}", g_map(2, &h)?);

    let point = BoundaryPoint::new_f64(3, &[0.5, 1.0, 2.0], DEFAULT_TOL)?;
    println!("\nk=3 point at r = (0.5, 1, 2):");
    println!("  t = φ(s₁) = {}", point.t);
    println!("  h = {:?}", point.h);
    for (p, v) in point.basis.iter().zip(&point.x) {
        println!("  φ(s{p}) = {v}");
    }

    let normalized = BoundaryPoint::normalized(3, &[0.5, 1.0, 2.0], DEFAULT_TOL)?;
    println!("\nharmonic representative on the same ray: t = {}", normalized.t);
    println!("  ζ coefficients: {:?}", zeta_poly(&normalized)?);

    println!("\nsimplex normalization of (4, 0): {:?}", simplex_normalize(2, &[4.0, 0.0])?);

    println!("\nk = 3 region samples (h2, h3):");
    for (h2, h3) in [(0.3, 0.05), (0.8, 0.1), (1.0, 1.0)] {
        println!("  ({h2}, {h3}) in region: {}", region_k3(h2, h3));
    }

    let h3 = f_map_f64(3, &[0.4, 0.3, 0.0])?;
    println!("\nπ₂ of the level-3 point {h3:?}: {:?}", project_pi(2, &h3)?);
    Ok(())
}
