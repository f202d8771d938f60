//! The algebra R[h_1..h_k] in its two bases: Kostka tables, conversions,
//! the Pieri rule, k-Littlewood–Richardson products and the positive
//! re-expansions into Schur functions and the next level.
//!
//! Run with: cargo run --example kschur_expansions

use kschur::exact::Rat;
use kschur::partition::Partition;
use kschur::symfunc::{
    h_to_kschur, kostka_table, kschur_lift, kschur_product, kschur_to_h, kschur_to_schur, pieri,
    Basis, SymFuncExpr,
};
use num::One;

fn main() -> kschur::Result<()> {
    let k = 3;
    let table = kostka_table(k, 4)?;
    println!("k-Kostka table at level {k}, degree 4 (rows λ, columns α):");
    print!("{:>10}", "");
    for a in &table.index {
        print!("{:>10}", a.to_string());
    }
    println!();
    for (i, l) in table.index.iter().enumerate() {
        print!("{:>10}", l.to_string());
        for v in &table.matrix[i] {
            print!("{v:>10}");
        }
        println!();
    }

    let h22 = SymFuncExpr::single(Basis::H, Partition::new(vec![2, 2])?, Rat::one());
    println!("\nh(2,2) = {}", h_to_kschur(&h22, k)?);

    let kappa = Partition::new(vec![2, 1])?;
    let s = SymFuncExpr::single(Basis::KSchur(k), kappa.clone(), Rat::one());
    println!("s(2,1) in the h basis: {}", kschur_to_h(&s, k)?);
    println!("Pieri h_2·s(2,1): {}", pieri(2, &kappa, k)?);

    let a = Partition::new(vec![2])?;
    let b = Partition::new(vec![1, 1])?;
    println!("s(2)·s(1,1) = {}", kschur_product(&a, &b, k)?);

    let top = Partition::new(vec![2, 1, 1])?;
    println!("s(2,1,1) in ordinary Schur functions: {}", kschur_to_schur(&top, k)?);
    println!("s(2,1,1) lifted to level 4: {}", kschur_lift(&top, k)?);
    Ok(())
}
