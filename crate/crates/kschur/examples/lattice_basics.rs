//! Core partition combinatorics: the bounded/core bijection, chain
//! decomposition, the conjugation ω_k, covers in B_k and rectangle
//! factorization.
//!
//! Run with: cargo run --example lattice_basics

use kschur::lattice::{covers, enumerate_irreducible, rectangle_factorization};
use kschur::partition::{bounded_to_core, chain_decomposition, omega_conjugate, Partition};

fn main() -> kschur::Result<()> {
    let k = 5;
    let lambda = Partition::new(vec![5, 5, 5, 4, 4, 3, 3, 3, 2, 2, 1])?;
    println!("λ = {lambda}, k = {k}");
    println!("6-core 𝔠(λ) = {}", bounded_to_core(&lambda, k)?);

    let chains = chain_decomposition(&lambda, k)?;
    for (i, chain) in chains.nonzero_chains().iter().enumerate() {
        println!("chain c{} = {:?}", i + 1, chain);
    }
    println!("ω_5(λ) = {} (columns are the chain sums)", omega_conjugate(&lambda, k)?);

    let k = 3;
    let mu = Partition::new(vec![2, 1, 1])?;
    println!("\ncovers of {mu} in B_{k}:");
    for edge in covers(&mu, k)? {
        println!("  {} -> {} (box in row {})", edge.source, edge.target, edge.added_row);
    }

    println!("\nirreducible 3-bounded partitions (3! of them):");
    for p in enumerate_irreducible(k)? {
        println!("  {p}");
    }

    let big = Partition::new(vec![4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1])?;
    let f = rectangle_factorization(&big, 4)?;
    println!(
        "\nk = 4 factorization of {big}:\n  rectangle multiplicities {:?}, irreducible part {}",
        f.rectangle_multiplicities, f.reduced
    );
    Ok(())
}
