//! The graded graph B_k on k-bounded partitions: cover relations, weak
//! horizontal strips, irreducible partitions and rectangle factorization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{omega_conjugate, Partition};

/// An edge λ → μ of B_k, with the row index of the added box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub source: Partition,
    pub target: Partition,
    pub added_row: usize,
}

/// Factorization of a k-bounded partition into removable rectangles
/// R_a = (k−a+1)^a and an irreducible remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleFactorization {
    /// Multiplicity of R_a at index a−1.
    pub rectangle_multiplicities: Vec<usize>,
    /// The irreducible part λ̃.
    pub reduced: Partition,
}

/// The rectangle partition R_a = (k−a+1)^a.
pub fn rectangle(a: usize, k: usize) -> Partition {
    Partition::new(vec![k - a + 1; a]).expect("rectangle shape")
}

fn check_bounded(p: &Partition, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidLevel("k must be ≥ 1".into()));
    }
    if p.part(1) > k {
        return Err(Error::Domain(format!("{p} is not {k}-bounded")));
    }
    Ok(())
}

/// Cover test via the chain criterion: a box may be added on row `row`
/// exactly when every later element of the chain through `row` is preceded
/// by a part of the same size.
fn chain_allows(lambda: &Partition, k: usize, row: usize) -> bool {
    let mut i = row + (k - lambda.part(row)) + 1;
    loop {
        let v = lambda.part(i);
        if lambda.part(i - 1) != v {
            return false;
        }
        if v == 0 {
            // all later chain elements sit in the all-zero tail
            return true;
        }
        i += k - v + 1;
    }
}

/// All μ with an arrow λ → μ in B_k, computed both by the ω_k containment
/// definition and by the chain criterion; the two must agree.
pub fn covers(lambda: &Partition, k: usize) -> Result<Vec<CoverEdge>> {
    check_bounded(lambda, k)?;
    let omega = omega_conjugate(lambda, k)?;
    let mut out = Vec::new();
    for row in lambda.addable_rows() {
        if lambda.part(row) + 1 > k {
            continue;
        }
        let target = lambda.add_box(row)?;
        let via_omega = omega_conjugate(&target, k)?.contains(&omega);
        let via_chain = chain_allows(lambda, k, row);
        if via_omega != via_chain {
            return Err(Error::InternalConsistency(format!(
                "cover rule mismatch at {lambda} + box in row {row}: ω route {via_omega}, chain route {via_chain}"
            )));
        }
        if via_omega {
            out.push(CoverEdge {
                source: lambda.clone(),
                target,
                added_row: row,
            });
        }
    }
    Ok(out)
}

/// True iff μ/λ is a horizontal strip with r boxes and
/// μ^{ω_k}/λ^{ω_k} is a vertical strip with r boxes.
pub fn is_weak_horizontal_strip(
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    k: usize,
) -> Result<bool> {
    check_bounded(mu, k)?;
    if !mu.contains(lambda) {
        return Err(Error::Domain(format!("{lambda} is not contained in {mu}")));
    }
    if mu.size() != lambda.size() + r {
        return Ok(false);
    }
    // horizontal: boxes of μ/λ in distinct columns ⟺ μ_{i+1} ≤ λ_i
    let horizontal = (1..=mu.len()).all(|i| mu.part(i + 1) <= lambda.part(i));
    if !horizontal {
        return Ok(false);
    }
    let lw = omega_conjugate(lambda, k)?;
    let mw = omega_conjugate(mu, k)?;
    if !mw.contains(&lw) {
        return Ok(false);
    }
    // vertical: boxes of μ^ω/λ^ω in distinct rows
    Ok((1..=mw.len()).all(|i| mw.part(i) - lw.part(i) <= 1))
}

/// Partitions μ ⊇ λ with μ/λ a weak horizontal strip of size r in B_k.
pub fn weak_strip_extensions(lambda: &Partition, r: usize, k: usize) -> Result<Vec<Partition>> {
    check_bounded(lambda, k)?;
    if r == 0 {
        return Ok(vec![lambda.clone()]);
    }
    if r > k {
        return Err(Error::Domain(format!("strip size {r} exceeds k = {k}")));
    }
    // enumerate horizontal-strip extensions, then filter on the ω condition
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut gains = vec![0usize; rows];
    fn rec(
        lambda: &Partition,
        k: usize,
        row: usize,
        remaining: usize,
        gains: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == 0 {
            if remaining == 0 {
                let parts: Vec<usize> = (1..=gains.len())
                    .map(|i| lambda.part(i) + gains[i - 1])
                    .collect();
                if let Ok(mu) = Partition::new(parts) {
                    out.push(mu);
                }
            }
            return;
        }
        // row gains boxes up to the column of the row above (horizontal
        // strip condition: μ_{i} ≤ λ_{i−1}) and up to the k bound
        let base = lambda.part(row);
        let cap = if row == 1 { k } else { lambda.part(row - 1) };
        let max_gain = cap.min(k).saturating_sub(base).min(remaining);
        for g in 0..=max_gain {
            gains[row - 1] = g;
            rec(lambda, k, row - 1, remaining - g, gains, out);
        }
        gains[row - 1] = 0;
    }
    rec(lambda, k, rows, r, &mut gains, &mut out);
    let mut strips = Vec::new();
    for mu in out {
        if is_weak_horizontal_strip(lambda, &mu, r, k)? {
            strips.push(mu);
        }
    }
    strips.sort();
    strips.dedup();
    Ok(strips)
}

/// True iff λ contains no full rectangle R_a, i.e. the multiplicity of
/// every part value j is at most k − j.
pub fn is_irreducible(lambda: &Partition, k: usize) -> Result<bool> {
    check_bounded(lambda, k)?;
    Ok((1..=k).all(|j| lambda.multiplicity(j) <= k - j))
}

/// Strips p_a = ⌊m_{k−a+1}/a⌋ copies of each rectangle R_a and keeps
/// m_j mod (k+1−j) parts of each value j.
pub fn rectangle_factorization(lambda: &Partition, k: usize) -> Result<RectangleFactorization> {
    check_bounded(lambda, k)?;
    let mut mults = vec![0usize; k];
    let mut reduced_parts = Vec::new();
    for j in (1..=k).rev() {
        let m = lambda.multiplicity(j);
        let a = k + 1 - j; // R_a has a parts equal to j
        mults[a - 1] = m / a;
        reduced_parts.extend(std::iter::repeat_n(j, m % a));
    }
    let reduced = Partition::from_unsorted(reduced_parts);
    debug_assert!(is_irreducible(&reduced, k)?);
    Ok(RectangleFactorization {
        rectangle_multiplicities: mults,
        reduced,
    })
}

/// Reassembles a factorization into the original partition.
pub fn reassemble(f: &RectangleFactorization, k: usize) -> Partition {
    let mut parts = f.reduced.parts().to_vec();
    for (idx, &m) in f.rectangle_multiplicities.iter().enumerate() {
        let a = idx + 1;
        for _ in 0..m {
            parts.extend(std::iter::repeat_n(k - a + 1, a));
        }
    }
    Partition::from_unsorted(parts)
}

/// All k! irreducible k-bounded partitions in the graded order.
pub fn enumerate_irreducible(k: usize) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::InvalidLevel("k must be ≥ 1".into()));
    }
    let mut out = vec![Vec::new()];
    for j in 1..=k {
        let mut next = Vec::new();
        for prefix in &out {
            for m in 0..=(k - j) {
                let mut parts = prefix.clone();
                parts.extend(std::iter::repeat_n(j, m));
                next.push(parts);
            }
        }
        out = next;
    }
    let mut partitions: Vec<Partition> = out.into_iter().map(Partition::from_unsorted).collect();
    partitions.sort();
    Ok(partitions)
}

#[derive(Serialize)]
struct GraphExport {
    schema: &'static str,
    k: usize,
    max_size: usize,
    edges: Vec<CoverEdge>,
}

/// JSON edge list of B_k restricted to |λ| < `max_size`.
pub fn export_graph_json(k: usize, max_size: usize) -> Result<String> {
    let mut edges = Vec::new();
    for n in 0..max_size {
        for lambda in Partition::bounded_of_size(n, k) {
            edges.extend(covers(&lambda, k)?);
        }
    }
    let export = GraphExport {
        schema: "kschur/1",
        k,
        max_size,
        edges,
    };
    serde_json::to_string_pretty(&export)
        .map_err(|e| Error::Numeric(format!("serialization failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn first_column_is_always_a_cover() {
        for k in 1..=4 {
            for n in 0..=7 {
                for lambda in Partition::bounded_of_size(n, k) {
                    let cs = covers(&lambda, k).unwrap();
                    assert!(
                        cs.iter().any(|c| c.added_row == lambda.len() + 1),
                        "{lambda} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn k2_cover_example() {
        let cs = covers(&p(&[2, 1, 1]), 2).unwrap();
        let targets: Vec<_> = cs.iter().map(|c| c.target.clone()).collect();
        assert_eq!(targets, vec![p(&[2, 1, 1, 1])]);
        // a 1-part grows to 2 iff the number of 1-parts is odd
        let cs = covers(&p(&[2, 1]), 2).unwrap();
        let targets: Vec<_> = cs.iter().map(|c| c.target.clone()).collect();
        assert_eq!(targets, vec![p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn covers_match_brute_force_omega_test() {
        // out-degrees over all 3-bounded λ with |λ| ≤ 6, recomputed
        // directly from the ω containment definition
        for n in 0..=6 {
            for lambda in Partition::bounded_of_size(n, 3) {
                let omega = omega_conjugate(&lambda, 3).unwrap();
                let mut brute = Vec::new();
                for row in 1..=lambda.len() + 1 {
                    let mut parts = lambda.parts().to_vec();
                    if row == parts.len() + 1 {
                        parts.push(1);
                    } else {
                        parts[row - 1] += 1;
                    }
                    if let Ok(mu) = Partition::new(parts) {
                        if mu.part(1) <= 3 && omega_conjugate(&mu, 3).unwrap().contains(&omega) {
                            brute.push(mu);
                        }
                    }
                }
                let got: Vec<_> = covers(&lambda, 3)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.target)
                    .collect();
                assert_eq!(got, brute, "{lambda}");
            }
        }
    }

    #[test]
    fn low_rank_agrees_with_young_lattice() {
        // B_k restricted to |λ| ≤ k is the Young lattice there
        for k in 2..=4 {
            for n in 0..k {
                for lambda in Partition::bounded_of_size(n, k) {
                    let got: Vec<_> = covers(&lambda, k)
                        .unwrap()
                        .into_iter()
                        .map(|c| c.target)
                        .collect();
                    let young: Vec<_> = lambda
                        .addable_rows()
                        .into_iter()
                        .map(|r| lambda.add_box(r).unwrap())
                        .collect();
                    assert_eq!(got, young, "{lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn strips_of_size_one_are_covers() {
        for k in 2..=3 {
            for n in 0..=6 {
                for lambda in Partition::bounded_of_size(n, k) {
                    let strips = weak_strip_extensions(&lambda, 1, k).unwrap();
                    let mut targets: Vec<_> = covers(&lambda, k)
                        .unwrap()
                        .into_iter()
                        .map(|c| c.target)
                        .collect();
                    targets.sort();
                    assert_eq!(strips, targets, "{lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn single_row_strip_from_empty() {
        for k in 1..=4 {
            for r in 1..=k {
                let strips = weak_strip_extensions(&Partition::empty(), r, k).unwrap();
                assert_eq!(strips, vec![p(&[r])]);
            }
        }
    }

    #[test]
    fn strip_membership_errors() {
        assert!(matches!(
            is_weak_horizontal_strip(&p(&[2]), &p(&[1, 1]), 1, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn factorization_worked_example() {
        let lambda = p(&[4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1]);
        let f = rectangle_factorization(&lambda, 4).unwrap();
        assert_eq!(f.rectangle_multiplicities, vec![2, 2, 1, 1]);
        assert_eq!(f.reduced, p(&[3, 2, 1]));
        assert_eq!(reassemble(&f, 4), lambda);
    }

    #[test]
    fn irreducible_fixed_by_factorization() {
        for lambda in enumerate_irreducible(4).unwrap() {
            let f = rectangle_factorization(&lambda, 4).unwrap();
            assert_eq!(f.rectangle_multiplicities, vec![0; 4]);
            assert_eq!(f.reduced, lambda);
        }
    }

    #[test]
    fn factorization_round_trip() {
        for n in 0..=12 {
            for lambda in Partition::bounded_of_size(n, 3) {
                let f = rectangle_factorization(&lambda, 3).unwrap();
                assert!(is_irreducible(&f.reduced, 3).unwrap());
                assert_eq!(reassemble(&f, 3), lambda, "{lambda}");
            }
        }
    }

    #[test]
    fn irreducible_listing_k3() {
        let got = enumerate_irreducible(3).unwrap();
        assert_eq!(
            got,
            vec![
                Partition::empty(),
                p(&[1]),
                p(&[2]),
                p(&[1, 1]),
                p(&[2, 1]),
                p(&[2, 1, 1])
            ]
        );
    }

    #[test]
    fn irreducible_counts_are_factorials() {
        assert_eq!(enumerate_irreducible(1).unwrap(), vec![Partition::empty()]);
        assert_eq!(enumerate_irreducible(2).unwrap().len(), 2);
        assert_eq!(enumerate_irreducible(4).unwrap().len(), 24);
        assert_eq!(enumerate_irreducible(5).unwrap().len(), 120);
    }

    #[test]
    fn rectangles_are_reducible() {
        for k in 2..=4 {
            for a in 1..=k {
                assert!(!is_irreducible(&rectangle(a, k), k).unwrap());
            }
        }
        assert!(is_irreducible(&p(&[2, 1, 1]), 3).unwrap());
    }

    #[test]
    fn irreducible_flag_matches_enumeration() {
        for k in 2..=4 {
            let listed = enumerate_irreducible(k).unwrap();
            let max = listed.iter().map(|l| l.size()).max().unwrap();
            let mut found = Vec::new();
            for n in 0..=max {
                for lambda in Partition::bounded_of_size(n, k) {
                    if is_irreducible(&lambda, k).unwrap() {
                        found.push(lambda);
                    }
                }
            }
            assert_eq!(found, listed);
        }
    }

    #[test]
    fn graph_export_is_valid_json() {
        let s = export_graph_json(2, 4).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], "kschur/1");
        assert!(v["edges"].as_array().unwrap().len() > 4);
    }
}
