//! The transfer matrix Φ of multiplication by s_(1) on the irreducible
//! basis, its specializations, irreducibility tests, the conjugation
//! permutation Ω, the characteristic polynomial Ξ and the primitive
//! element data (M, Δ, P_κ).
//!
//! Orientation: entry (λ, ν) of the stored matrix collects the monomials
//! of covers λ → μ with reduced target μ̃ = ν, so the value vector
//! x(λ) = φ(s_λ^(k)) is a right eigenvector. The transposed convention,
//! with columns indexed by the source partition, is also in circulation;
//! the tests pin the relationship between the two.

use num::Signed;

use crate::error::{Error, Result};
use crate::exact::{char_poly, MultiPoly, PolyMatrix, Rat, UniPoly};
use crate::lattice::{covers, enumerate_irreducible, rectangle_factorization};
use crate::partition::{omega_conjugate, Partition};

/// Default size cap for symbolic determinant work (k! ≤ 6).
pub const DEFAULT_SYMBOLIC_LIMIT: usize = 3;

/// The symbolic transfer matrix over A = R[r_1..r_k].
#[derive(Clone, Debug)]
pub struct TransferMatrix {
    pub k: usize,
    pub basis: Vec<Partition>,
    pub entries: PolyMatrix,
}

/// Φ specialized at a nonnegative rational point r⃗.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializedMatrix {
    pub k: usize,
    pub basis: Vec<Partition>,
    pub r: Vec<Rat>,
    pub entries: Vec<Vec<Rat>>,
}

/// Change-of-basis data to the powers of s_(1): M has columns s_(1)^i on
/// the irreducible basis, Δ = det M, and Δ·s_κ^(k) = P_κ(s_(1)).
#[derive(Clone, Debug)]
pub struct PrimitiveData {
    pub k: usize,
    pub basis: Vec<Partition>,
    pub m: PolyMatrix,
    pub delta: MultiPoly,
    /// P_κ per basis position.
    pub p: Vec<UniPoly>,
}

impl TransferMatrix {
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.basis.iter().position(|q| q == p)
    }

    /// Deterministic text form, one row per line.
    pub fn pretty(&self) -> String {
        pretty_rows(&self.entries, |p: &MultiPoly| p.to_string())
    }
}

impl SpecializedMatrix {
    pub fn entries_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(crate::exact::rat_to_f64).collect())
            .collect()
    }

    pub fn pretty(&self) -> String {
        pretty_rows(&self.entries, |x: &Rat| x.to_string())
    }
}

fn pretty_rows<T>(m: &[Vec<T>], show: impl Fn(&T) -> String) -> String {
    let texts: Vec<Vec<String>> = m
        .iter()
        .map(|row| row.iter().map(&show).collect())
        .collect();
    let width = texts.iter().flatten().map(String::len).max().unwrap_or(1);
    texts
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|t| format!("{t:>width$}")).collect();
            format!("[ {} ]", cells.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Builds the symbolic Φ: for each irreducible λ, every cover λ → μ
/// contributes its rectangle monomial to entry (λ, μ̃). A single box can
/// complete at most one rectangle, so each monomial is 1 or one variable.
pub fn build_phi(k: usize) -> Result<TransferMatrix> {
    let basis = enumerate_irreducible(k)?;
    let n = basis.len();
    let mut entries = vec![vec![MultiPoly::zero(); n]; n];
    for (i, lambda) in basis.iter().enumerate() {
        for edge in covers(lambda, k)? {
            let f = rectangle_factorization(&edge.target, k)?;
            let created: usize = f.rectangle_multiplicities.iter().sum();
            if created > 1 {
                return Err(Error::InternalConsistency(format!(
                    "cover {lambda} → {} created {created} rectangles",
                    edge.target
                )));
            }
            let mono = match f.rectangle_multiplicities.iter().position(|&m| m == 1) {
                Some(idx) => MultiPoly::var(idx + 1),
                None => MultiPoly::one(),
            };
            let j = basis.iter().position(|p| *p == f.reduced).ok_or_else(|| {
                Error::InternalConsistency(format!("reduced target {} not in basis", f.reduced))
            })?;
            entries[i][j] = std::mem::take(&mut entries[i][j]) + mono;
        }
    }
    Ok(TransferMatrix { k, basis, entries })
}

/// Entrywise evaluation at a nonnegative rational point.
pub fn specialize(phi: &TransferMatrix, r: &[Rat]) -> Result<SpecializedMatrix> {
    if r.len() != phi.k {
        return Err(Error::Domain(format!(
            "expected {} rectangle values, got {}",
            phi.k,
            r.len()
        )));
    }
    if r.iter().any(Signed::is_negative) {
        return Err(Error::Domain("rectangle values must be nonnegative".into()));
    }
    let entries = phi
        .entries
        .iter()
        .map(|row| row.iter().map(|p| p.eval(r)).collect())
        .collect();
    Ok(SpecializedMatrix {
        k: phi.k,
        basis: phi.basis.clone(),
        r: r.to_vec(),
        entries,
    })
}

/// Positivity pattern criterion: Φ is irreducible iff every consecutive
/// pair (r_a, r_{a+1}) has a positive member. For k = 1 the matrix is the
/// 1×1 [r_1], irreducible iff r_1 > 0.
pub fn criterion_irreducible(r: &[Rat], k: usize) -> Result<bool> {
    if r.len() != k {
        return Err(Error::Domain(format!(
            "expected {k} values, got {}",
            r.len()
        )));
    }
    if r.iter().any(Signed::is_negative) {
        return Err(Error::Domain("rectangle values must be nonnegative".into()));
    }
    if k == 1 {
        return Ok(r[0].is_positive());
    }
    Ok((0..k - 1).all(|a| r[a].is_positive() || r[a + 1].is_positive()))
}

/// Strong connectivity of the support digraph: forward and backward
/// reachability from vertex 0 must both cover everything.
pub fn graph_irreducible(phi: &SpecializedMatrix) -> bool {
    let n = phi.basis.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return phi.entries[0][0].is_positive();
    }
    let reach = |transpose: bool| -> usize {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                let e = if transpose {
                    &phi.entries[w][v]
                } else {
                    &phi.entries[v][w]
                };
                if !seen[w] && e.is_positive() {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    };
    reach(false) == n && reach(true) == n
}

/// The permutation of the irreducible basis induced by ω_k, as the image
/// index of each basis position. ω_k must map irreducibles to
/// irreducibles.
pub fn omega_matrix(k: usize) -> Result<Vec<usize>> {
    let basis = enumerate_irreducible(k)?;
    basis
        .iter()
        .map(|p| {
            let image = omega_conjugate(p, k)?;
            basis.iter().position(|q| *q == image).ok_or_else(|| {
                Error::InternalConsistency(format!("ω_{k}({p}) = {image} is not irreducible"))
            })
        })
        .collect()
}

/// Ξ(T) = det(T·I − Φ), computed symbolically. Limited to small k by
/// default because the matrix is k!×k!; pass a higher `limit` to opt in.
pub fn xi_char_poly_with_limit(k: usize, limit: usize) -> Result<UniPoly> {
    if k > limit {
        return Err(Error::Capability(format!(
            "symbolic Ξ is limited to k ≤ {limit}; specialize first for larger k"
        )));
    }
    let phi = build_phi(k)?;
    char_poly(&phi.entries)
}

pub fn xi_char_poly(k: usize) -> Result<UniPoly> {
    xi_char_poly_with_limit(k, DEFAULT_SYMBOLIC_LIMIT)
}

/// Builds M (columns = s_(1)^i on the irreducible basis), Δ = det M and
/// the polynomials P_κ read off the adjugate.
pub fn primitive_data_with_limit(k: usize, limit: usize) -> Result<PrimitiveData> {
    if k > limit {
        return Err(Error::Capability(format!(
            "primitive-element data is limited to k ≤ {limit}"
        )));
    }
    let phi = build_phi(k)?;
    let n = phi.basis.len();
    // columns are successive images of the coordinate vector of s_∅ under
    // the transposed action (coordinates of s_(1)^i on the basis)
    let mut cols: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    let mut current = vec![MultiPoly::zero(); n];
    current[0] = MultiPoly::one();
    for _ in 0..n {
        cols.push(current.clone());
        let mut next = vec![MultiPoly::zero(); n];
        for (nu, item) in next.iter_mut().enumerate() {
            for lam in 0..n {
                if !phi.entries[lam][nu].is_zero() && !current[lam].is_zero() {
                    *item = std::mem::take(item)
                        + phi.entries[lam][nu].clone() * current[lam].clone();
                }
            }
        }
        current = next;
    }
    let m: PolyMatrix = (0..n)
        .map(|row| (0..n).map(|col| cols[col][row].clone()).collect())
        .collect();
    let (delta, adj) = crate::exact::adjugate_inverse(&m)?;
    // coordinates of s_κ on the power basis are the κ-column of adj / Δ
    let p = (0..n)
        .map(|kappa| UniPoly::new((0..n).map(|i| adj[i][kappa].clone()).collect()))
        .collect();
    Ok(PrimitiveData {
        k,
        basis: phi.basis,
        m,
        delta,
        p,
    })
}

pub fn primitive_data(k: usize) -> Result<PrimitiveData> {
    primitive_data_with_limit(k, DEFAULT_SYMBOLIC_LIMIT)
}

impl PrimitiveData {
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.basis.iter().position(|q| q == p)
    }

    pub fn pretty_m(&self) -> String {
        pretty_rows(&self.m, |p: &MultiPoly| p.to_string())
    }
}
