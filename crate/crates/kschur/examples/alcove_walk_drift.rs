//! Central random walks on affine Grassmannian alcoves: words and
//! centers, the colored multigraph, the transition kernel, a simulated
//! trajectory, and the closed-form drift against its estimate.
//!
//! Run with: cargo run --example alcove_walk_drift

use kschur::affine::{alcove_center, involution_i, reduced_word};
use kschur::partition::Partition;
use kschur::walk::{drift_estimate, drift_formula, simulate_walk, write_trajectory_csv};

fn main() -> kschur::Result<()> {
    let k = 3;
    for parts in [vec![], vec![1], vec![2, 1, 1]] {
        let p = Partition::new(parts)?;
        let word = reduced_word(&p, k)?;
        let center = alcove_center(&p, k)?;
        let coords: Vec<String> = center.coords.iter().map(|c| c.to_string()).collect();
        println!(
            "{p}: word {:?}, center ({}), I({p}) = {}",
            word.letters,
            coords.join(", "),
            involution_i(&p, k)?
        );
    }

    let r = [0.2, 0.3, 0.5];
    let steps = 200_000;
    let (g, point, traj) = simulate_walk(k, &r, steps, 42, 0)?;
    println!("\nsimplex point {r:?} normalized to t = {}", point.t);
    println!("multigraph: {} vertices, {} colored edges", g.table.basis.len(), g.edges.len());
    println!("{steps}-step walk, final weight {:?}", traj.weight);

    let formula = drift_formula(&g, &point)?;
    let est = drift_estimate(&traj)?;
    println!("\ncoordinate  drift formula     estimate x(n)/n   stderr");
    for i in 0..k {
        println!(
            "x_{}         {:<17.12} {:<17.12} {:.2e}",
            i + 1,
            formula[i],
            est.value[i],
            est.stderr[i]
        );
    }

    let mut csv = Vec::new();
    write_trajectory_csv(&g, &traj, &mut csv).expect("in-memory write");
    println!("\nfirst trajectory rows:");
    for line in String::from_utf8(csv).unwrap().lines().take(5) {
        println!("  {line}");
    }
    Ok(())
}
