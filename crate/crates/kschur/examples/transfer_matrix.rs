//! The transfer matrix Φ of multiplication by s₁ on the irreducible
//! basis, its characteristic polynomial Ξ, and the primitive-element
//! change of basis (M, Δ, P_κ).
//!
//! Run with: cargo run --example transfer_matrix

use kschur::exact::rat;
use kschur::transfer::{build_phi, primitive_data, specialize, xi_char_poly};

fn main() -> kschur::Result<()> {
    for k in [2usize, 3] {
        let phi = build_phi(k)?;
        println!("Φ for k = {k} on the basis:");
        println!(
            "  {}",
            phi.basis
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!("{}", phi.pretty());
        println!("Ξ(T) = {}\n", xi_char_poly(k)?);
    }

    let phi = build_phi(3)?;
    let spec = specialize(&phi, &[rat(1), rat(2), rat(3)])?;
    println!("Φ specialized at r = (1, 2, 3):\n{}", spec.pretty());

    let pd = primitive_data(3)?;
    println!("\nchange-of-basis matrix M (columns s₁^i):\n{}", pd.pretty_m());
    println!("Δ = det M = {}", pd.delta);
    let kappa = kschur::Partition::new(vec![2, 1, 1])?;
    let idx = pd.position(&kappa).unwrap();
    println!("Δ·s(2,1,1) = P(s₁) with P(T) = {}", pd.p[idx]);
    Ok(())
}
