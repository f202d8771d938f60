//! Totally nonnegative unitriangular Toeplitz matrices: initial minors as
//! Schur evaluations, positivity tests, and reconstruction from the k
//! southwest corner minors.
//!
//! Run with: cargo run --example toeplitz_reconstruction

use kschur::toeplitz::{
    initial_minor, is_totally_nonnegative, is_totally_positive, minor_partition, pretty,
    rectangle_labels, rietsch_reconstruct, ToeplitzMatrix,
};

fn main() -> kschur::Result<()> {
    let m = ToeplitzMatrix::new(vec![1.5, 1.0, 0.3]);
    println!("M with h = (1.5, 1, 0.3):\n{}", pretty(&m));
    println!("totally positive:    {}", is_totally_positive(&m));
    println!("totally nonnegative: {}", is_totally_nonnegative(&m));

    println!("\ninitial minors and their Schur shapes:");
    for labels in [vec![2], vec![1, 3], vec![1, 2, 3]] {
        let value = initial_minor(&m, &labels)?;
        println!(
            "  rows {labels:?} -> s{} = {value}",
            minor_partition(&labels)?
        );
    }

    let r = [0.7, 1.2, 0.4];
    let rec = rietsch_reconstruct(&r, 1e-9)?;
    println!("\nreconstructed from corner minors r = {r:?}:\n{}", pretty(&rec));
    for a in 1..=3 {
        let got = initial_minor(&rec, &rectangle_labels(a, 3))?;
        println!("  corner minor r_{a} of the result: {got}");
    }
    Ok(())
}
