//! Alcove geometry of affine type A: reduced words of affine Grassmannian
//! elements via core residues, centers of alcoves in fundamental-weight
//! coordinates, the involution I on the irreducible box 𝖡, and the
//! permutation Ψ = IΩ that transposes the transfer matrix.
//!
//! Conventions, fixed once and validated by the translation property
//! center(λ ∪ R_a) = center(λ) + Λ_a:
//! * the residue of the box (i, j) is (i − j) mod (k+1);
//! * the word of w_λ lists the residues of a saturated core chain from ∅
//!   upward, and acts on the fundamental alcove letters right to left.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, ratio, Rat};
use crate::lattice::{enumerate_irreducible, is_irreducible};
use crate::partition::{bounded_to_core, Partition};
use crate::transfer::omega_matrix;

/// Coordinates ⟨v, α_i⟩ of a point on the basis of fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: Vec<Rat>,
}

impl WeightVector {
    pub fn k(&self) -> usize {
        self.coords.len()
    }

    /// Pairing with the highest root: ⟨v, θ⟩ = Σ_i ⟨v, α_i⟩.
    pub fn theta_pairing(&self) -> Rat {
        self.coords.iter().cloned().sum()
    }

    pub fn coords_f64(&self) -> Vec<f64> {
        self.coords.iter().map(crate::exact::rat_to_f64).collect()
    }

    /// All coordinates strictly between 0 and 1.
    pub fn in_open_box(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c > &Rat::zero() && c < &Rat::one())
    }
}

/// A word over the affine generators {0, 1, .., k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWord {
    pub letters: Vec<usize>,
}

/// Residue (i − j) mod l of the box in row i, column j (1-indexed).
fn residue(row: usize, col: usize, l: usize) -> usize {
    (row as i64 - col as i64).rem_euclid(l as i64) as usize
}

/// Removable corners (row, col, residue) of a partition.
fn removable_corners(p: &Partition, l: usize) -> Vec<(usize, usize, usize)> {
    (1..=p.len())
        .filter(|&i| p.part(i) > p.part(i + 1))
        .map(|i| (i, p.part(i), residue(i, p.part(i), l)))
        .collect()
}

/// Removes every removable corner of the given residue at once (the
/// downward action of s_residue on an l-core).
fn remove_residue(p: &Partition, l: usize, res: usize) -> Partition {
    let corners = removable_corners(p, l);
    let mut parts = p.parts().to_vec();
    for (row, _, r) in corners {
        if r == res {
            parts[row - 1] -= 1;
        }
    }
    Partition::new(parts).expect("corner removal keeps partition shape")
}

/// Reduced word of the affine Grassmannian element of λ: residues read
/// along a saturated chain ∅ → 𝔠(λ), canonically descending through the
/// topmost removable corner. Any choice of descent gives a word of the
/// same element, so the center below does not depend on it.
pub fn reduced_word(lambda: &Partition, k: usize) -> Result<AffineWord> {
    let l = k + 1;
    let mut core = bounded_to_core(lambda, k)?;
    let mut letters = Vec::new();
    while !core.is_empty() {
        let corners = removable_corners(&core, l);
        let &(_, _, res) = corners.first().ok_or_else(|| {
            Error::InternalConsistency(format!("nonempty core {core} with no removable corner"))
        })?;
        core = remove_residue(&core, l, res);
        letters.push(res);
    }
    letters.reverse();
    if letters.len() != lambda.size() {
        return Err(Error::InternalConsistency(format!(
            "word length {} for {lambda} of size {}",
            letters.len(),
            lambda.size()
        )));
    }
    Ok(AffineWord { letters })
}

/// Applies the simple affine reflection s_i to fundamental-weight
/// coordinates: for i ≥ 1 subtract c_i times the i-th Cartan column, for
/// i = 0 reflect through the affine hyperplane of the highest root.
fn apply_reflection(coords: &mut [Rat], i: usize) {
    let k = coords.len();
    if i == 0 {
        let delta = coords.iter().cloned().sum::<Rat>() - Rat::one();
        if k == 1 {
            coords[0] -= delta * rat(2);
        } else {
            coords[0] -= delta.clone();
            coords[k - 1] -= delta;
        }
    } else {
        let c = coords[i - 1].clone();
        coords[i - 1] -= c.clone() * rat(2);
        if i >= 2 {
            coords[i - 2] += c.clone();
        }
        if i < k {
            coords[i] += c;
        }
    }
}

/// Center of the fundamental alcove: the mean of {0, Λ_1, …, Λ_k}.
pub fn fundamental_center(k: usize) -> WeightVector {
    WeightVector {
        coords: vec![ratio(1, (k + 1) as i64); k],
    }
}

/// Center of the alcove of w_λ, obtained by acting with the reduced word
/// on the fundamental center, letters applied right to left.
pub fn alcove_center(lambda: &Partition, k: usize) -> Result<WeightVector> {
    let word = reduced_word(lambda, k)?;
    Ok(center_from_word(&word, k))
}

pub fn center_from_word(word: &AffineWord, k: usize) -> WeightVector {
    let mut v = fundamental_center(k);
    for &i in word.letters.iter().rev() {
        apply_reflection(&mut v.coords, i);
    }
    v
}

/// Lookup table from irreducible partitions to alcove centers, built once
/// per level and shared read-only by the boundary and walk layers.
#[derive(Clone, Debug)]
pub struct AlcoveTable {
    pub k: usize,
    pub basis: Vec<Partition>,
    pub centers: Vec<WeightVector>,
    /// Basis permutation of the involution I.
    pub involution: Vec<usize>,
    /// Basis permutation of ω_k.
    pub omega: Vec<usize>,
    /// Ψ = I ∘ Ω.
    pub psi: Vec<usize>,
}

impl AlcoveTable {
    pub fn build(k: usize) -> Result<AlcoveTable> {
        let basis = enumerate_irreducible(k)?;
        let centers: Vec<WeightVector> = basis
            .iter()
            .map(|p| alcove_center(p, k))
            .collect::<Result<_>>()?;
        for (p, c) in basis.iter().zip(&centers) {
            if !c.in_open_box() {
                return Err(Error::InternalConsistency(format!(
                    "irreducible {p} has center outside the open box"
                )));
            }
        }
        let involution = centers
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mirrored = involution_coords(c);
                centers.iter().position(|d| *d == mirrored).ok_or_else(|| {
                    Error::InternalConsistency(format!(
                        "I image of {} is not the center of any irreducible alcove",
                        basis[i]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let omega = omega_matrix(k)?;
        let psi = (0..basis.len()).map(|i| involution[omega[i]]).collect();
        Ok(AlcoveTable {
            k,
            basis,
            centers,
            involution,
            omega,
            psi,
        })
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.basis.iter().position(|q| q == p)
    }
}

/// I(v) = Σ_i (1 − ⟨v, α_i⟩) Λ_{i*} in coordinates.
pub fn involution_coords(v: &WeightVector) -> WeightVector {
    let k = v.k();
    WeightVector {
        coords: (0..k)
            .map(|i| Rat::one() - v.coords[k - 1 - i].clone())
            .collect(),
    }
}

/// The involution I on irreducible partitions, via alcove centers.
pub fn involution_i(lambda: &Partition, k: usize) -> Result<Partition> {
    if !is_irreducible(lambda, k)? {
        return Err(Error::Domain(format!("{lambda} is not irreducible")));
    }
    let table = AlcoveTable::build(k)?;
    let idx = table
        .position(lambda)
        .ok_or_else(|| Error::Domain(format!("{lambda} is not irreducible")))?;
    Ok(table.basis[table.involution[idx]].clone())
}

/// The permutation Ψ = IΩ on the irreducible basis.
pub fn psi_matrix(k: usize) -> Result<Vec<usize>> {
    Ok(AlcoveTable::build(k)?.psi)
}
