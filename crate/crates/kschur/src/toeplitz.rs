//! Unitriangular Toeplitz matrices: initial (corner) minors, total
//! positivity and nonnegativity tests, and reconstruction of the matrix
//! from its k rectangle corner minors.
//!
//! Row labels: label i ∈ {1..k} is the physical row i+1, whose first
//! entry is h_i. With this convention the initial minor on rows L =
//! {i_1 < … < i_a} and the first a columns equals the Schur evaluation
//! s_{(i_a−a+1, …, i_2−1, i_1)}(h), a partition of maximal hook ≤ k.

use num::{One, Zero};
use std::ops::{Mul, Sub};

use crate::error::{Error, Result};
use crate::exact::det_small;
use crate::partition::Partition;

/// Lower unitriangular (k+1)×(k+1) Toeplitz matrix with h_1..h_k below
/// the unit diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzMatrix<T> {
    pub k: usize,
    pub h: Vec<T>,
}

pub trait Scalar:
    Clone + Zero + One + Sub<Output = Self> + Mul<Output = Self> + PartialOrd
{
}
impl<T: Clone + Zero + One + Sub<Output = T> + Mul<Output = T> + PartialOrd> Scalar for T {}

impl<T: Scalar> ToeplitzMatrix<T> {
    pub fn new(h: Vec<T>) -> Self {
        ToeplitzMatrix { k: h.len(), h }
    }

    pub fn size(&self) -> usize {
        self.k + 1
    }

    /// Entry at physical (row, col), 0-indexed: h_{row−col}.
    pub fn entry(&self, row: usize, col: usize) -> T {
        if row == col {
            T::one()
        } else if row > col && row - col <= self.k {
            self.h[row - col - 1].clone()
        } else {
            T::zero()
        }
    }

    pub fn dense(&self) -> Vec<Vec<T>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    fn submatrix_det(&self, rows: &[usize], cols: &[usize]) -> T {
        let m: Vec<Vec<T>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        det_small(&m)
    }
}

/// The partition whose Schur evaluation equals the initial minor on the
/// row labels L = {i_1 < … < i_a}: (i_a − a + 1, …, i_2 − 1, i_1).
pub fn minor_partition(labels: &[usize]) -> Result<Partition> {
    let a = labels.len();
    let parts: Vec<usize> = labels
        .iter()
        .rev()
        .enumerate()
        .map(|(offset, &i)| i - (a - 1 - offset))
        .collect();
    Partition::new(parts)
}

fn check_labels(labels: &[usize], k: usize) -> Result<()> {
    if labels.is_empty()
        || labels.windows(2).any(|w| w[0] >= w[1])
        || labels[0] < 1
        || *labels.last().unwrap() > k
    {
        return Err(Error::Domain(format!(
            "row labels must be strictly increasing within 1..={k}, got {labels:?}"
        )));
    }
    Ok(())
}

/// Initial minor: rows with labels L (physical rows i+1), first |L|
/// columns.
pub fn initial_minor<T: Scalar>(m: &ToeplitzMatrix<T>, labels: &[usize]) -> Result<T> {
    check_labels(labels, m.k)?;
    let a = labels.len();
    let rows: Vec<usize> = labels.to_vec(); // label i is 0-indexed row i
    let cols: Vec<usize> = (0..a).collect();
    Ok(m.submatrix_det(&rows, &cols))
}

/// The label set {k−a+1, .., k} whose minor is the rectangle value r_a.
pub fn rectangle_labels(a: usize, k: usize) -> Vec<usize> {
    (k - a + 1..=k).collect()
}

fn for_each_label_set(k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    // iterate all nonempty subsets of {1..k}
    for mask in 1u32..(1 << k) {
        let labels: Vec<usize> = (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        if !f(&labels) {
            return false;
        }
    }
    true
}

/// Total positivity via the initial-minor criterion: every initial minor
/// is strictly positive.
pub fn is_totally_positive<T: Scalar>(m: &ToeplitzMatrix<T>) -> bool {
    for_each_label_set(m.k, |labels| {
        initial_minor(m, labels)
            .map(|v| v > T::zero())
            .unwrap_or(false)
    })
}

/// The corresponding closed test: every initial minor is nonnegative.
pub fn initial_minors_nonnegative<T: Scalar>(m: &ToeplitzMatrix<T>) -> bool {
    for_each_label_set(m.k, |labels| {
        initial_minor(m, labels)
            .map(|v| v >= T::zero())
            .unwrap_or(false)
    })
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    rec(0, n, m, &mut cur, &mut out);
    out
}

/// Total nonnegativity. For size ≤ 6 every square minor is checked
/// (minors hitting the strict upper zero block vanish identically, so
/// checking all of them is equivalent to checking the relevant ones).
/// Larger sizes combine the initial-minor certificate with a randomized
/// search for a negative minor.
pub fn is_totally_nonnegative<T: Scalar>(m: &ToeplitzMatrix<T>) -> bool {
    let n = m.size();
    if n <= 6 {
        for size in 1..=n {
            for rows in subsets(n, size) {
                for cols in subsets(n, size) {
                    if m.submatrix_det(&rows, &cols) < T::zero() {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if !initial_minors_nonnegative(m) {
        return false;
    }
    // randomized refutation on larger matrices; minors are capped at 7×7
    // to keep the cofactor determinant tractable
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..4000 {
        let size = (next() % 6 + 2) as usize;
        let size = size.min(n).min(7);
        let mut rows: Vec<usize> = (0..n).collect();
        let mut cols: Vec<usize> = (0..n).collect();
        for i in 0..n {
            let j = (next() % n as u64) as usize;
            rows.swap(i, j);
            let j = (next() % n as u64) as usize;
            cols.swap(i, j);
        }
        let mut rows = rows[..size].to_vec();
        let mut cols = cols[..size].to_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        if m.submatrix_det(&rows, &cols) < T::zero() {
            return false;
        }
    }
    true
}

/// Reconstructs the totally nonnegative Toeplitz matrix whose k southwest
/// rectangle minors are r, via h = f(r). The minors of the result are
/// verified against r to the given tolerance.
pub fn rietsch_reconstruct(r: &[f64], tol: f64) -> Result<ToeplitzMatrix<f64>> {
    let k = r.len();
    if r.iter().any(|&v| v < 0.0) {
        return Err(Error::Domain("rectangle minors must be nonnegative".into()));
    }
    let rr: Vec<crate::exact::Rat> = r
        .iter()
        .map(|&v| {
            num::FromPrimitive::from_f64(v)
                .ok_or_else(|| Error::Domain(format!("bad value {v}")))
        })
        .collect::<Result<_>>()?;
    let (h, estimate) = crate::boundary::f_map_with_estimate(k, &rr)?;
    // boundary points go through the extrapolated limit, whose error bar
    // widens the verification tolerance accordingly
    let h_scale = h.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let slack = estimate
        .map(|e| 10.0 * e * (1.0 + h_scale.powi(k as i32 - 1)))
        .unwrap_or(0.0);
    let m = ToeplitzMatrix::new(h);
    for a in 1..=k {
        let labels = rectangle_labels(a, k);
        let got = initial_minor(&m, &labels)?;
        if (got - r[a - 1]).abs() > tol * r[a - 1].max(1.0) + slack {
            return Err(Error::Numeric(format!(
                "reconstructed minor r_{a} = {got}, expected {}",
                r[a - 1]
            )));
        }
    }
    Ok(m)
}

/// Pretty grid of the dense matrix.
pub fn pretty<T: Scalar + std::fmt::Display>(m: &ToeplitzMatrix<T>) -> String {
    let dense = m.dense();
    let cells: Vec<Vec<String>> = dense
        .iter()
        .map(|row| row.iter().map(|v| format!("{v}")).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("[ {} ]", line.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
