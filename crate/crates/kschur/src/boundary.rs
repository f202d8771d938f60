//! Evaluation of nonnegative morphisms by Perron–Frobenius data, the
//! mutually inverse maps f (rectangle values → homogeneous values) and g
//! (Jacobi–Trudi), simplex normalization, rational closed forms, the ζ
//! polynomial, the explicit k = 3 region, and the level projection π_k.
//!
//! This is the first module where floats appear; everything below it is
//! exact. Power iteration runs to a residual tolerance (default 1e−12,
//! cap 10⁶ combined iterations) and is polished by Rayleigh-quotient
//! inverse iteration, so interior points come out near machine precision.

use num::FromPrimitive;

use crate::affine::AlcoveTable;
use crate::error::{Error, Result};
use crate::exact::{rat_to_f64, Rat};
use crate::lattice::{covers, rectangle, rectangle_factorization};
use crate::partition::Partition;
use crate::symfunc::{kschur_h_polynomial, schur_eval_jacobi_trudi_f64};
use crate::transfer::{
    build_phi, criterion_irreducible, graph_irreducible, specialize, SpecializedMatrix,
};

/// Default residual tolerance for the eigen-solver.
pub const DEFAULT_TOL: f64 = 1e-12;
const ITERATION_CAP: usize = 1_000_000;
/// Ladder used when a value is only defined as a limit.
const LIMIT_EPS: [f64; 3] = [1e-4, 1e-5, 1e-6];

/// A point of the minimal boundary in its computational form: rectangle
/// values r, the eigenvalue t = φ(s₁), homogeneous values h, the value
/// vector X on irreducibles, its dual X̂, and the pairing constant ∇.
#[derive(Clone, Debug)]
pub struct BoundaryPoint {
    pub k: usize,
    pub r: Vec<f64>,
    pub t: f64,
    pub h: Vec<f64>,
    pub basis: Vec<Partition>,
    pub x: Vec<f64>,
    pub xhat: Vec<f64>,
    pub nabla: f64,
    /// Basis permutation Ψ = IΩ used to produce X̂ from X.
    pub psi: Vec<usize>,
}

fn matvec(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(c, v)| c * v).sum())
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm_inf(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn residual(a: &[Vec<f64>], x: &[f64], t: f64) -> f64 {
    let ax = matvec(a, x);
    let scale = norm_inf(x).max(f64::MIN_POSITIVE);
    ax.iter()
        .zip(x)
        .map(|(y, v)| (y - t * v).abs())
        .fold(0.0, f64::max)
        / scale
}

/// Solves (A − σI)y = b by Gaussian elimination with partial pivoting.
fn shifted_solve(a: &[Vec<f64>], sigma: f64, b: &[f64]) -> Option<Vec<f64>> {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row[i] -= sigma;
            row.push(b[i]);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))
            .unwrap();
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for j in col..=n {
                let v = m[col][j];
                m[row][j] -= f * v;
            }
        }
    }
    let mut y = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = m[i][n];
        for j in i + 1..n {
            acc -= m[i][j] * y[j];
        }
        y[i] = acc / m[i][i];
    }
    Some(y)
}

/// Dominant eigenvalue and right eigenvector of an irreducible specialized
/// transfer matrix, normalized so X(∅) = 1 with all entries positive.
///
/// Power iteration runs on A + I (primitive because the diagonal is
/// positive), then Rayleigh-quotient inverse iteration polishes the pair.
pub fn perron(phi: &SpecializedMatrix, tol: f64) -> Result<(f64, Vec<f64>)> {
    if !graph_irreducible(phi) {
        return Err(Error::Precondition(
            "transfer matrix is not irreducible; positivity pattern fails".into(),
        ));
    }
    let a = phi.entries_f64();
    let n = a.len();
    let mut x = vec![1.0; n];
    let mut t;
    let mut iterations = 0usize;
    // coarse phase
    loop {
        let ax = matvec(&a, &x);
        t = dot(&x, &ax) / dot(&x, &x);
        let res = residual(&a, &x, t);
        if res < (1e-8_f64).min(tol * 1e3) || iterations >= ITERATION_CAP {
            break;
        }
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(p, q)| p + q).collect();
        let ny = norm_inf(&y);
        for v in &mut y {
            *v /= ny;
        }
        x = y;
        iterations += 1;
    }
    // polish
    for round in 0..12 {
        if residual(&a, &x, t) < tol {
            break;
        }
        let shift = t * (1.0 + 1e-14 * (round as f64 + 1.0)) + 1e-250;
        let Some(mut y) = shifted_solve(&a, shift, &x) else {
            break; // exactly singular shift: x is already an eigenvector
        };
        let ny = norm_inf(&y);
        if !ny.is_finite() || ny == 0.0 {
            break;
        }
        for v in &mut y {
            *v /= ny;
        }
        if y[0] < 0.0 {
            for v in &mut y {
                *v = -*v;
            }
        }
        x = y;
        let ax = matvec(&a, &x);
        t = dot(&x, &ax) / dot(&x, &x);
    }
    let res = residual(&a, &x, t);
    if res > tol.max(1e-11) {
        return Err(Error::Numeric(format!(
            "power iteration stalled at residual {res:.3e} (tolerance {tol:.1e})"
        )));
    }
    if x[0] <= 0.0 {
        return Err(Error::Numeric("eigenvector lost positivity".into()));
    }
    let x0 = x[0];
    let x: Vec<f64> = x.iter().map(|v| v / x0).collect();
    if x.iter().any(|&v| v <= 0.0) {
        return Err(Error::Numeric(
            "dominant eigenvector has a nonpositive entry".into(),
        ));
    }
    Ok((t, x))
}

impl BoundaryPoint {
    /// Builds the point for an irreducible r⃗ (rational input).
    pub fn new(k: usize, r: &[Rat], tol: f64) -> Result<BoundaryPoint> {
        if !criterion_irreducible(r, k)? {
            return Err(Error::Precondition(
                "r has two consecutive zero rectangle values".into(),
            ));
        }
        let phi = build_phi(k)?;
        let spec = specialize(&phi, r)?;
        let (t, x) = perron(&spec, tol)?;
        let table = AlcoveTable::build(k)?;
        let psi = table.psi;
        let nabla: f64 = (0..x.len()).map(|i| x[i] * x[psi[i]]).sum();
        let xhat: Vec<f64> = (0..x.len()).map(|i| x[psi[i]] / nabla).collect();
        let rf: Vec<f64> = r.iter().map(rat_to_f64).collect();
        let h = h_from_values(k, &rf, &x, &phi.basis)?;
        Ok(BoundaryPoint {
            k,
            r: rf,
            t,
            h,
            basis: phi.basis,
            x,
            xhat,
            nabla,
            psi,
        })
    }

    pub fn new_f64(k: usize, r: &[f64], tol: f64) -> Result<BoundaryPoint> {
        let rr = rationalize(r)?;
        BoundaryPoint::new(k, &rr, tol)
    }

    /// Builds the harmonic representative on the same homogeneity ray:
    /// r_a ↦ r_a / t^{|R_a|}, which rescales the eigenvalue to 1.
    pub fn normalized(k: usize, r: &[f64], tol: f64) -> Result<BoundaryPoint> {
        let point = BoundaryPoint::new_f64(k, r, tol)?;
        let mut scaled: Vec<f64> = (0..k)
            .map(|a| point.r[a] / point.t.powi(homogeneity_degree(a + 1, k) as i32))
            .collect();
        // one more pass tightens the float rescale
        for _ in 0..2 {
            let p = BoundaryPoint::new_f64(k, &scaled, tol)?;
            if (p.t - 1.0).abs() < 1e-13 {
                return Ok(p);
            }
            scaled = (0..k)
                .map(|a| p.r[a] / p.t.powi(homogeneity_degree(a + 1, k) as i32))
                .collect();
        }
        let p = BoundaryPoint::new_f64(k, &scaled, tol)?;
        if (p.t - 1.0).abs() > 1e-10 {
            return Err(Error::Numeric(format!(
                "harmonic normalization left t = {}",
                p.t
            )));
        }
        Ok(p)
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.basis.iter().position(|q| q == p)
    }

    /// φ(s_λ^(k)) for any k-bounded λ: rectangle powers times the value
    /// at the irreducible part.
    pub fn morphism_eval(&self, lambda: &Partition) -> Result<f64> {
        let f = rectangle_factorization(lambda, self.k)?;
        let mut value = self.x[self
            .position(&f.reduced)
            .expect("reduced part is irreducible")];
        for (idx, &m) in f.rectangle_multiplicities.iter().enumerate() {
            if m > 0 {
                value *= self.r[idx].powi(m as i32);
            }
        }
        Ok(value)
    }

    /// Dual eigenvector recomputed by an independent eigensolve on the
    /// transposed matrix (cross-check path; Ψ symmetry is the default).
    pub fn xhat_direct(&self, tol: f64) -> Result<Vec<f64>> {
        let phi = build_phi(self.k)?;
        let spec = specialize(&phi, &rationalize(&self.r)?)?;
        let n = spec.entries.len();
        let transposed = SpecializedMatrix {
            k: spec.k,
            basis: spec.basis.clone(),
            r: spec.r.clone(),
            entries: (0..n)
                .map(|i| (0..n).map(|j| spec.entries[j][i].clone()).collect())
                .collect(),
        };
        let (_, y) = perron(&transposed, tol)?;
        let scale = dot(&self.x, &y);
        Ok(y.iter().map(|v| v / scale).collect())
    }
}

/// Homogeneity degree of r_a: |R_a| = a(k+1−a).
pub fn homogeneity_degree(a: usize, k: usize) -> usize {
    a * (k + 1 - a)
}

fn rationalize(r: &[f64]) -> Result<Vec<Rat>> {
    r.iter()
        .map(|&v| {
            Rat::from_f64(v).ok_or_else(|| Error::Domain(format!("value {v} is not finite")))
        })
        .collect()
}

/// h_a from the value vector: rows (a) are irreducible for a < k and the
/// full row (k) is the rectangle R_1.
fn h_from_values(k: usize, r: &[f64], x: &[f64], basis: &[Partition]) -> Result<Vec<f64>> {
    let mut h = Vec::with_capacity(k);
    for a in 1..k {
        let row = Partition::new(vec![a])?;
        let idx = basis
            .iter()
            .position(|p| *p == row)
            .expect("single short row is irreducible");
        h.push(x[idx]);
    }
    h.push(r[0]);
    Ok(h)
}

/// f(r⃗) = (φ(h_1), …, φ(h_k)). Away from irreducibility the value is the
/// continuity limit along r + ε·(1,…,1), extrapolated to ε = 0.
pub fn f_map(k: usize, r: &[Rat]) -> Result<Vec<f64>> {
    Ok(f_map_with_estimate(k, r)?.0)
}

/// Like [`f_map`], also returning an extrapolation error estimate when the
/// limit path was taken (`None` on the direct path).
pub fn f_map_with_estimate(k: usize, r: &[Rat]) -> Result<(Vec<f64>, Option<f64>)> {
    if criterion_irreducible(r, k)? {
        let point = BoundaryPoint::new(k, r, DEFAULT_TOL)?;
        return Ok((point.h, None));
    }
    let rf: Vec<f64> = r.iter().map(rat_to_f64).collect();
    let mut samples = Vec::new();
    for &eps in &LIMIT_EPS {
        let shifted: Vec<f64> = rf.iter().map(|v| v + eps).collect();
        let point = BoundaryPoint::new_f64(k, &shifted, DEFAULT_TOL)?;
        samples.push(point.h);
    }
    let mut h = Vec::with_capacity(k);
    let mut estimate = 0.0f64;
    for coord in 0..k {
        let ys: Vec<f64> = samples.iter().map(|s| s[coord]).collect();
        let quad = lagrange_at_zero(&LIMIT_EPS, &ys);
        let lin = lagrange_at_zero(&LIMIT_EPS[1..], &ys[1..]);
        estimate = estimate.max((quad - lin).abs());
        h.push(quad);
    }
    Ok((h, Some(estimate)))
}

pub fn f_map_f64(k: usize, r: &[f64]) -> Result<Vec<f64>> {
    f_map(k, &rationalize(r)?)
}

fn lagrange_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..xs.len() {
        let mut w = 1.0;
        for j in 0..xs.len() {
            if i != j {
                w *= (0.0 - xs[j]) / (xs[i] - xs[j]);
            }
        }
        acc += w * ys[i];
    }
    acc
}

/// g(h⃗) = (J_{R_1}(h), …, J_{R_k}(h)) by Jacobi–Trudi; defined on all of
/// R^k.
pub fn g_map(k: usize, h: &[f64]) -> Result<Vec<f64>> {
    if h.len() != k {
        return Err(Error::Domain(format!(
            "expected {k} homogeneous values, got {}",
            h.len()
        )));
    }
    Ok((1..=k)
        .map(|a| schur_eval_jacobi_trudi_f64(&rectangle(a, k), h))
        .collect())
}

/// Rescales r onto the simplex Σ_a t^{|R_a|} r_a = 1 by solving for the
/// unique positive t (monotone bisection, then Newton polish).
pub fn simplex_normalize(k: usize, r: &[f64]) -> Result<Vec<f64>> {
    if r.len() != k {
        return Err(Error::Domain(format!("expected {k} values")));
    }
    if r.iter().any(|&v| v < 0.0) || r.iter().all(|&v| v == 0.0) {
        return Err(Error::Domain(
            "simplex normalization needs a nonzero nonnegative vector".into(),
        ));
    }
    let degs: Vec<i32> = (1..=k).map(|a| homogeneity_degree(a, k) as i32).collect();
    let eval = |t: f64| -> f64 { (0..k).map(|a| r[a] * t.powi(degs[a])).sum::<f64>() - 1.0 };
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while eval(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e100 {
            return Err(Error::Numeric("simplex scale diverged".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..5 {
        let f = eval(t);
        let df: f64 = (0..k)
            .map(|a| r[a] * degs[a] as f64 * t.powi(degs[a] - 1))
            .sum();
        if df != 0.0 {
            t -= f / df;
        }
    }
    Ok((0..k).map(|a| r[a] * t.powi(degs[a])).collect())
}

/// Result of a rational closed-form evaluation; `limit_used` flags the
/// continuity fallback taken when Δ(r) = 0.
#[derive(Clone, Debug)]
pub struct RationalEval {
    pub value: f64,
    pub limit_used: bool,
}

/// s_κ^(k)(r⃗) = P_κ(s)/Δ(r⃗) with s fixed; falls back to the limit along
/// r + ε·(1,…,1) when Δ vanishes.
pub fn rational_formulas(k: usize, kappa: &Partition, s: f64, r: &[f64]) -> Result<RationalEval> {
    let pd = crate::transfer::primitive_data(k)?;
    let idx = pd
        .position(kappa)
        .ok_or_else(|| Error::Domain(format!("{kappa} is not irreducible")))?;
    let delta = pd.delta.eval_f64(r);
    if delta.abs() > 1e-12 {
        return Ok(RationalEval {
            value: pd.p[idx].eval_f64(s, r) / delta,
            limit_used: false,
        });
    }
    // Δ vanished: approach along a ray that leaves the zero locus. The
    // diagonal direction can stay inside it (k = 3: Δ ∝ r1 − r3), so use
    // a generic direction with distinct components.
    let mut values = Vec::new();
    for &eps in &LIMIT_EPS {
        let shifted: Vec<f64> = r
            .iter()
            .enumerate()
            .map(|(a, v)| v + eps * (a + 1) as f64)
            .collect();
        let d = pd.delta.eval_f64(&shifted);
        if d.abs() < 1e-300 {
            return Err(Error::Numeric("Δ vanishes along the limit ray".into()));
        }
        values.push(pd.p[idx].eval_f64(s, &shifted) / d);
    }
    Ok(RationalEval {
        value: lagrange_at_zero(&LIMIT_EPS, &values),
        limit_used: true,
    })
}

/// Coefficients (1, E_1, …, E_{k−1}, r_k) of ζ(T) = Π(1 + T x_i) for a
/// harmonic point (t = 1); E_r = φ(e_r) is the value at the column (1^r).
pub fn zeta_poly(point: &BoundaryPoint) -> Result<Vec<f64>> {
    if (point.t - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "ζ needs a harmonic point (t = 1), got t = {}",
            point.t
        )));
    }
    let k = point.k;
    let mut coeffs = Vec::with_capacity(k + 1);
    coeffs.push(1.0);
    for r in 1..k {
        let column = Partition::new(vec![1; r])?;
        coeffs.push(point.morphism_eval(&column)?);
    }
    coeffs.push(point.r[k - 1]);
    Ok(coeffs)
}

/// The explicit k = 3 boundary region in (h_2, h_3) with h_1 = 1:
/// 0 ≤ h_2 ≤ 1, 0 ≤ h_3 ≤ h_2², 2h_2 − h_3 ≤ 1.
pub fn region_k3(h2: f64, h3: f64) -> bool {
    (0.0..=1.0).contains(&h2) && h3 >= 0.0 && h3 <= h2 * h2 && 2.0 * h2 - h3 <= 1.0
}

/// Membership of h⃗ in the closed region V̄ at the given level: all
/// rectangle and irreducible k-Schur evaluations nonnegative.
pub fn in_v_closure(k: usize, h: &[f64], tol: f64) -> Result<bool> {
    let r = g_map(k, h)?;
    if r.iter().any(|&v| v < -tol) {
        return Ok(false);
    }
    for kappa in crate::lattice::enumerate_irreducible(k)? {
        let poly = kschur_h_polynomial(&kappa, k)?;
        if poly.eval_h_f64(h)? < -tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// π_k: project a level-(k+1) boundary point to level k by dropping
/// r_{k+1} and re-evaluating f at level k.
pub fn project_pi(k: usize, h: &[f64]) -> Result<Vec<f64>> {
    if h.len() != k + 1 {
        return Err(Error::Domain(format!(
            "expected {} homogeneous values, got {}",
            k + 1,
            h.len()
        )));
    }
    if !in_v_closure(k + 1, h, 1e-9)? {
        return Err(Error::Domain(
            "point is outside the level-(k+1) boundary region".into(),
        ));
    }
    let r = g_map(k + 1, h)?;
    let truncated: Vec<f64> = r[..k].iter().map(|&v| v.max(0.0)).collect();
    f_map_f64(k, &truncated)
}

/// Harmonicity defect at a point: max over |λ| ≤ max_size of
/// |t·φ(s_λ) − Σ_{λ→μ} φ(s_μ)|.
pub fn harmonicity_defect(point: &BoundaryPoint, max_size: usize) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in 0..=max_size {
        for lambda in Partition::bounded_of_size(n, point.k) {
            let lhs = point.t * point.morphism_eval(&lambda)?;
            let mut rhs = 0.0;
            for edge in covers(&lambda, point.k)? {
                rhs += point.morphism_eval(&edge.target)?;
            }
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(worst)
}
