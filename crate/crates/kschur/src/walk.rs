//! Central Markov chains on affine Grassmannian alcoves: the colored
//! multigraph on irreducible alcoves, the transition kernel of a harmonic
//! boundary point, reproducible trajectory simulation, the closed-form
//! drift, and its Monte-Carlo estimate.
//!
//! Reproducibility: trajectories are generated by ChaCha12, seeded from a
//! u64; independent chains use the same seed with distinct stream numbers
//! (`set_stream`), so runs are bit-identical across platforms.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::affine::AlcoveTable;
use crate::boundary::BoundaryPoint;
use crate::error::{Error, Result};
use crate::exact::{rat, rat_to_f64, Rat};
use crate::lattice::{covers, rectangle_factorization};
use crate::transfer::{build_phi, criterion_irreducible};

/// One edge of the multigraph: a cover λ → μ recorded as λ → μ̃ with the
/// color of the rectangle created (0 when none).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MgEdge {
    pub source: usize,
    pub target: usize,
    /// 0 for a plain cover, a ∈ {1..k} when the cover completed R_a.
    pub color: usize,
}

/// The colored multigraph on irreducible alcoves, with the alcove table
/// (centers and the involutions) attached.
#[derive(Clone, Debug)]
pub struct Multigraph {
    pub k: usize,
    pub table: AlcoveTable,
    pub edges: Vec<MgEdge>,
    /// Outgoing edge indices per vertex.
    pub out_edges: Vec<Vec<usize>>,
}

/// Builds the multigraph and verifies it against the transfer matrix:
/// summing r_{c(e)} over parallel edges reproduces each Φ entry.
pub fn build_multigraph(k: usize) -> Result<Multigraph> {
    let table = AlcoveTable::build(k)?;
    let basis = table.basis.clone();
    let n = basis.len();
    let mut edges = Vec::new();
    let mut out_edges = vec![Vec::new(); n];
    for (i, lambda) in basis.iter().enumerate() {
        for edge in covers(lambda, k)? {
            let f = rectangle_factorization(&edge.target, k)?;
            let color = f
                .rectangle_multiplicities
                .iter()
                .position(|&m| m == 1)
                .map(|idx| idx + 1)
                .unwrap_or(0);
            let j = basis
                .iter()
                .position(|p| *p == f.reduced)
                .expect("reduced target is irreducible");
            out_edges[i].push(edges.len());
            edges.push(MgEdge {
                source: i,
                target: j,
                color,
            });
        }
    }
    let g = Multigraph {
        k,
        table,
        edges,
        out_edges,
    };
    verify_against_phi(&g)?;
    Ok(g)
}

fn verify_against_phi(g: &Multigraph) -> Result<()> {
    use crate::exact::MultiPoly;
    let phi = build_phi(g.k)?;
    let n = g.table.basis.len();
    let mut sums = vec![vec![MultiPoly::zero(); n]; n];
    for e in &g.edges {
        let term = if e.color == 0 {
            MultiPoly::one()
        } else {
            MultiPoly::var(e.color)
        };
        sums[e.source][e.target] = std::mem::take(&mut sums[e.source][e.target]) + term;
    }
    for i in 0..n {
        for j in 0..n {
            if sums[i][j] != phi.entries[i][j] {
                return Err(Error::InternalConsistency(format!(
                    "multigraph edges at ({i},{j}) sum to {} but Φ entry is {}",
                    sums[i][j], phi.entries[i][j]
                )));
            }
        }
    }
    Ok(())
}

/// Per-edge transition probabilities r_{c(e)}·X(target)/X(source) of a
/// harmonic point (t = 1), with the per-vertex telescoping sum checked.
#[derive(Clone, Debug)]
pub struct TransitionKernel {
    pub edge_prob: Vec<f64>,
    cumulative: Vec<Vec<f64>>,
}

pub fn transition_kernel(g: &Multigraph, point: &BoundaryPoint) -> Result<TransitionKernel> {
    if point.k != g.k {
        return Err(Error::Domain("level mismatch".into()));
    }
    if (point.t - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "kernel needs a harmonic point (t = 1), got t = {}",
            point.t
        )));
    }
    if point.x.iter().any(|&v| v <= 0.0) {
        return Err(Error::Precondition("value vector must be positive".into()));
    }
    let mut edge_prob = vec![0.0; g.edges.len()];
    for (idx, e) in g.edges.iter().enumerate() {
        let weight = if e.color == 0 {
            1.0
        } else {
            point.r[e.color - 1]
        };
        edge_prob[idx] = weight * point.x[e.target] / point.x[e.source];
    }
    let mut cumulative = Vec::with_capacity(g.out_edges.len());
    for (v, out) in g.out_edges.iter().enumerate() {
        let mut acc = 0.0;
        let mut cum = Vec::with_capacity(out.len());
        for &idx in out {
            acc += edge_prob[idx];
            cum.push(acc);
        }
        if (acc - 1.0).abs() > 1e-9 {
            return Err(Error::Numeric(format!(
                "outgoing probability mass at vertex {v} is {acc}"
            )));
        }
        cumulative.push(cum);
    }
    Ok(TransitionKernel {
        edge_prob,
        cumulative,
    })
}

/// A simulated trajectory of the reduced chain: visited vertices, edge
/// colors, the accumulated weight, and exact coordinates x(n) recorded at
/// checkpoints (including 0 and the final step).
#[derive(Clone, Debug)]
pub struct WalkTrajectory {
    pub k: usize,
    pub r: Vec<f64>,
    pub seed: u64,
    pub stream: u64,
    pub steps: u64,
    /// Vertex index before each step and after the last (length steps+1).
    pub states: Vec<u32>,
    /// Color of each traversed edge (length steps).
    pub colors: Vec<u8>,
    /// Final accumulated weight (counts of each color 1..k).
    pub weight: Vec<u64>,
    /// (n, x(n)) with x_i(n) = ⟨v_n, α_i⟩ exactly.
    pub checkpoints: Vec<(u64, Vec<Rat>)>,
}

fn coords_at(table: &AlcoveTable, state: usize, weight: &[u64]) -> Vec<Rat> {
    table.centers[state]
        .coords
        .iter()
        .zip(weight)
        .map(|(c, &w)| c.clone() + rat(w as i64))
        .collect()
}

/// Runs the chain from the fundamental alcove with the default stream.
pub fn simulate(
    g: &Multigraph,
    kernel: &TransitionKernel,
    steps: u64,
    seed: u64,
) -> WalkTrajectory {
    simulate_stream(g, kernel, steps, seed, 0)
}

/// Runs one chain on its own RNG stream.
pub fn simulate_stream(
    g: &Multigraph,
    kernel: &TransitionKernel,
    steps: u64,
    seed: u64,
    stream: u64,
) -> WalkTrajectory {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let k = g.k;
    let mut state = 0usize; // the empty partition is first in the basis
    let mut weight = vec![0u64; k];
    let mut states = Vec::with_capacity(steps as usize + 1);
    let mut colors = Vec::with_capacity(steps as usize);
    states.push(state as u32);
    let checkpoint_every = (steps / 20).max(1);
    let mut checkpoints = vec![(0, coords_at(&g.table, state, &weight))];
    for n in 1..=steps {
        let u: f64 = rng.gen();
        let out = &g.out_edges[state];
        let cum = &kernel.cumulative[state];
        let mut chosen = out.len() - 1;
        for (pos, &c) in cum.iter().enumerate() {
            if u < c {
                chosen = pos;
                break;
            }
        }
        let edge = &g.edges[out[chosen]];
        state = edge.target;
        if edge.color > 0 {
            weight[edge.color - 1] += 1;
        }
        states.push(state as u32);
        colors.push(edge.color as u8);
        if n % checkpoint_every == 0 || n == steps {
            checkpoints.push((n, coords_at(&g.table, state, &weight)));
        }
    }
    WalkTrajectory {
        k,
        // attached by callers that know the boundary point
        r: Vec::new(),
        seed,
        stream,
        steps,
        states,
        colors,
        weight,
        checkpoints,
    }
}

/// High-level entry: normalize r to t = 1, build the kernel, simulate.
/// Refuses non-irreducible r (the chain could be reducible).
pub fn simulate_walk(
    k: usize,
    r: &[f64],
    steps: u64,
    seed: u64,
    stream: u64,
) -> Result<(Multigraph, BoundaryPoint, WalkTrajectory)> {
    let rr: Vec<Rat> = r
        .iter()
        .map(|&v| {
            num::FromPrimitive::from_f64(v)
                .ok_or_else(|| Error::Domain(format!("bad value {v}")))
        })
        .collect::<Result<_>>()?;
    if !criterion_irreducible(&rr, k)? {
        return Err(Error::Precondition(
            "simulation requires an irreducible r (no two consecutive zeros)".into(),
        ));
    }
    let point = BoundaryPoint::normalized(k, r, crate::boundary::DEFAULT_TOL)?;
    let g = build_multigraph(k)?;
    let kernel = transition_kernel(&g, &point)?;
    let mut traj = simulate_stream(&g, &kernel, steps, seed, stream);
    traj.r = point.r.clone();
    Ok((g, point, traj))
}

/// Closed-form drift: v(i) = r_i Σ_{e: c(e)=i} X̂(source)·X(target).
pub fn drift_formula(g: &Multigraph, point: &BoundaryPoint) -> Result<Vec<f64>> {
    if point.k != g.k {
        return Err(Error::Domain("level mismatch".into()));
    }
    if (point.t - 1.0).abs() > 1e-9 {
        return Err(Error::Precondition(
            "drift formula needs a harmonic point (t = 1)".into(),
        ));
    }
    let mut v = vec![0.0; g.k];
    for e in &g.edges {
        if e.color > 0 {
            v[e.color - 1] += point.r[e.color - 1] * point.xhat[e.source] * point.x[e.target];
        }
    }
    Ok(v)
}

/// Drift at a possibly non-irreducible r ≥ 0 by the continuity limit:
/// the chain itself may be reducible there, so simulation refuses, but
/// the drift extends along r + ε·(1,…,1).
pub fn drift_by_continuity(k: usize, r: &[f64]) -> Result<Vec<f64>> {
    if r.len() != k {
        return Err(Error::Domain(format!("expected {k} values")));
    }
    if r.iter().any(|&v| v < 0.0) {
        return Err(Error::Domain("rectangle values must be nonnegative".into()));
    }
    let g = build_multigraph(k)?;
    let at = |shift: f64| -> Result<Vec<f64>> {
        let shifted: Vec<f64> = r.iter().map(|v| v + shift).collect();
        let point = BoundaryPoint::normalized(k, &shifted, crate::boundary::DEFAULT_TOL)?;
        drift_formula(&g, &point)
    };
    let rr: Vec<Rat> = r
        .iter()
        .map(|&v| num::FromPrimitive::from_f64(v).unwrap())
        .collect();
    if criterion_irreducible(&rr, k)? {
        return at(0.0);
    }
    let ladder = [1e-4, 1e-5, 1e-6];
    let mut samples = Vec::new();
    for &eps in &ladder {
        samples.push(at(eps)?);
    }
    // quadratic extrapolation to ε = 0, coordinate by coordinate
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut acc = 0.0;
        for a in 0..3 {
            let mut w = 1.0;
            for b in 0..3 {
                if a != b {
                    w *= (0.0 - ladder[b]) / (ladder[a] - ladder[b]);
                }
            }
            acc += w * samples[a][i];
        }
        out.push(acc);
    }
    Ok(out)
}

/// The stationary measure m(A) = X(A)·X̂(A) of the reduced chain.
pub fn stationary_measure(point: &BoundaryPoint) -> Vec<f64> {
    (0..point.basis.len())
        .map(|i| point.x[i] * point.xhat[i])
        .collect()
}

/// Monte-Carlo drift estimate x(n)/n with batch-means standard errors.
#[derive(Clone, Debug)]
pub struct DriftEstimate {
    pub value: Vec<f64>,
    pub stderr: Vec<f64>,
    pub batches: usize,
}

pub fn drift_estimate(traj: &WalkTrajectory) -> Result<DriftEstimate> {
    if traj.steps == 0 {
        return Err(Error::Precondition("need at least one step".into()));
    }
    let k = traj.k;
    let (n_final, x_final) = traj.checkpoints.last().unwrap();
    let value: Vec<f64> = x_final
        .iter()
        .map(|x| rat_to_f64(x) / *n_final as f64)
        .collect();
    let b = traj.checkpoints.len() - 1;
    let mut means = vec![Vec::with_capacity(b); k];
    for w in traj.checkpoints.windows(2) {
        let (n0, x0) = &w[0];
        let (n1, x1) = &w[1];
        let dn = (n1 - n0) as f64;
        for i in 0..k {
            means[i].push((rat_to_f64(&x1[i]) - rat_to_f64(&x0[i])) / dn);
        }
    }
    let stderr: Vec<f64> = (0..k)
        .map(|i| {
            if b < 2 {
                return f64::INFINITY;
            }
            let mean = means[i].iter().sum::<f64>() / b as f64;
            let var = means[i]
                .iter()
                .map(|m| (m - mean) * (m - mean))
                .sum::<f64>()
                / (b - 1) as f64;
            (var / b as f64).sqrt()
        })
        .collect();
    Ok(DriftEstimate {
        value,
        stderr,
        batches: b,
    })
}

/// Writes the per-step record "step,state,x_1..x_k" as CSV.
pub fn write_trajectory_csv<W: Write>(
    g: &Multigraph,
    traj: &WalkTrajectory,
    mut out: W,
) -> std::io::Result<()> {
    let k = traj.k;
    let headers: Vec<String> = (1..=k).map(|i| format!("x_{i}")).collect();
    writeln!(out, "step,state,{}", headers.join(","))?;
    let mut weight = vec![0u64; k];
    for n in 0..=traj.steps as usize {
        if n > 0 {
            let c = traj.colors[n - 1] as usize;
            if c > 0 {
                weight[c - 1] += 1;
            }
        }
        let coords = coords_at(&g.table, traj.states[n] as usize, &weight);
        let cols: Vec<String> = coords
            .iter()
            .map(|x| format!("{}", rat_to_f64(x)))
            .collect();
        writeln!(out, "{},{},{}", n, traj.states[n], cols.join(","))?;
    }
    Ok(())
}

/// All length-n paths from the fundamental alcove with their probability,
/// endpoint vertex and weight (used by the centrality checks).
pub fn enumerate_paths(
    g: &Multigraph,
    kernel: &TransitionKernel,
    length: usize,
) -> Vec<(usize, Vec<u64>, f64)> {
    let mut acc = Vec::new();
    fn rec(
        g: &Multigraph,
        kernel: &TransitionKernel,
        state: usize,
        weight: &mut Vec<u64>,
        prob: f64,
        remaining: usize,
        acc: &mut Vec<(usize, Vec<u64>, f64)>,
    ) {
        if remaining == 0 {
            acc.push((state, weight.clone(), prob));
            return;
        }
        for &idx in &g.out_edges[state] {
            let e = &g.edges[idx];
            if e.color > 0 {
                weight[e.color - 1] += 1;
            }
            rec(
                g,
                kernel,
                e.target,
                weight,
                prob * kernel.edge_prob[idx],
                remaining - 1,
                acc,
            );
            if e.color > 0 {
                weight[e.color - 1] -= 1;
            }
        }
    }
    rec(g, kernel, 0, &mut vec![0; g.k], 1.0, length, &mut acc);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use std::collections::HashMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn harmonic(k: usize, r: &[f64]) -> BoundaryPoint {
        BoundaryPoint::normalized(k, r, crate::boundary::DEFAULT_TOL).unwrap()
    }

    #[test]
    fn k2_multigraph_edges() {
        let g = build_multigraph(2).unwrap();
        assert_eq!(g.table.basis, vec![Partition::empty(), p(&[1])]);
        let mut edges = g.edges.clone();
        edges.sort_by_key(|e| (e.source, e.target, e.color));
        assert_eq!(
            edges,
            vec![
                MgEdge { source: 0, target: 1, color: 0 },
                MgEdge { source: 1, target: 0, color: 1 },
                MgEdge { source: 1, target: 0, color: 2 },
            ]
        );
    }

    #[test]
    fn multigraph_matches_phi_for_k3_and_k4() {
        // verify_against_phi runs inside the constructor
        build_multigraph(3).unwrap();
        build_multigraph(4).unwrap();
    }

    #[test]
    fn mirror_symmetry_of_edge_set() {
        // color-0 edges mirror to color-0; color-i edges mirror to k+1−i
        for k in 2..=4usize {
            let g = build_multigraph(k).unwrap();
            let inv = &g.table.involution;
            let mut multiset: HashMap<(usize, usize, usize), i64> = HashMap::new();
            for e in &g.edges {
                *multiset.entry((e.source, e.target, e.color)).or_insert(0) += 1;
                let mirrored_color = if e.color == 0 { 0 } else { k + 1 - e.color };
                *multiset
                    .entry((inv[e.target], inv[e.source], mirrored_color))
                    .or_insert(0) -= 1;
            }
            assert!(
                multiset.values().all(|&v| v == 0),
                "k={k}: {multiset:?}"
            );
        }
    }

    #[test]
    fn kernel_k2_closed_form() {
        let point = harmonic(2, &[0.3, 0.7]);
        let g = build_multigraph(2).unwrap();
        let kernel = transition_kernel(&g, &point).unwrap();
        // from ∅ the single edge has probability X((1))/X(∅) = t = 1
        let from_empty = &g.out_edges[0];
        assert_eq!(from_empty.len(), 1);
        assert!((kernel.edge_prob[from_empty[0]] - 1.0).abs() < 1e-12);
        // from (1): color a has probability r_a (already normalized)
        for &idx in &g.out_edges[1] {
            let e = &g.edges[idx];
            assert!((kernel.edge_prob[idx] - point.r[e.color - 1]).abs() < 1e-10);
        }
    }

    #[test]
    fn kernel_rows_sum_to_one() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(13);
        for k in 2..=4usize {
            let g = build_multigraph(k).unwrap();
            for _ in 0..5 {
                let r: Vec<f64> = (0..k)
                    .map(|_| rand::Rng::gen_range(&mut rng, 0.1..3.0))
                    .collect();
                let point = harmonic(k, &r);
                // constructor verifies the telescoping sums internally
                transition_kernel(&g, &point).unwrap();
            }
        }
    }

    #[test]
    fn unnormalized_points_rejected() {
        let point = BoundaryPoint::new_f64(2, &[2.0, 3.0], 1e-12).unwrap();
        let g = build_multigraph(2).unwrap();
        assert!(matches!(
            transition_kernel(&g, &point),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn zero_steps_and_determinism() {
        let point = harmonic(2, &[0.5, 0.5]);
        let g = build_multigraph(2).unwrap();
        let kernel = transition_kernel(&g, &point).unwrap();
        let t0 = simulate(&g, &kernel, 0, 99);
        assert_eq!(t0.states, vec![0]);
        assert!(t0.weight.iter().all(|&w| w == 0));
        let a = simulate(&g, &kernel, 5000, 42);
        let b = simulate(&g, &kernel, 5000, 42);
        assert_eq!(a.states, b.states);
        assert_eq!(a.colors, b.colors);
        assert_eq!(a.weight, b.weight);
        // the k = 2 state sequence alternates no matter what, so stream
        // divergence shows up in the colors
        let c = simulate_stream(&g, &kernel, 5000, 42, 1);
        assert_ne!(a.colors, c.colors, "distinct streams should diverge");
    }

    #[test]
    fn centrality_exhaustive() {
        // paths with the same endpoint alcove (vertex + weight) and the
        // same length have the same probability
        for (k, r) in [(2usize, vec![0.4, 0.6]), (3, vec![0.3, 0.3, 0.4])] {
            let point = harmonic(k, &r);
            let g = build_multigraph(k).unwrap();
            let kernel = transition_kernel(&g, &point).unwrap();
            for len in 1..=6usize {
                let mut groups: HashMap<(usize, Vec<u64>), Vec<f64>> = HashMap::new();
                for (state, weight, prob) in enumerate_paths(&g, &kernel, len) {
                    groups.entry((state, weight)).or_default().push(prob);
                }
                for ((state, weight), probs) in groups {
                    let first = probs[0];
                    for q in &probs {
                        assert!(
                            (q - first).abs() <= 1e-12 * first.max(1e-30),
                            "k={k} len={len} state={state} wt={weight:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn floor_increments_match_edge_colors() {
        let (g, _point, traj) = simulate_walk(3, &[0.4, 0.2, 0.4], 10_000, 7, 0).unwrap();
        let mut weight = vec![0u64; 3];
        for n in 0..traj.steps as usize {
            let before = coords_at(&g.table, traj.states[n] as usize, &weight);
            let c = traj.colors[n] as usize;
            if c > 0 {
                weight[c - 1] += 1;
            }
            let after = coords_at(&g.table, traj.states[n + 1] as usize, &weight);
            for i in 0..3 {
                let fb = rat_to_f64(&before[i]).floor() as i64;
                let fa = rat_to_f64(&after[i]).floor() as i64;
                let expect = if c == i + 1 { 1 } else { 0 };
                assert_eq!(fa - fb, expect, "step {n} coord {i}");
            }
        }
    }

    #[test]
    fn stationary_measure_is_stationary() {
        for (k, r) in [(2usize, vec![0.25, 0.75]), (3, vec![0.2, 0.4, 0.4])] {
            let point = harmonic(k, &r);
            let g = build_multigraph(k).unwrap();
            let kernel = transition_kernel(&g, &point).unwrap();
            let m = stationary_measure(&point);
            assert!((m.iter().sum::<f64>() - 1.0).abs() < 1e-10);
            let n = point.basis.len();
            let mut after = vec![0.0; n];
            for (idx, e) in g.edges.iter().enumerate() {
                after[e.target] += m[e.source] * kernel.edge_prob[idx];
            }
            for i in 0..n {
                assert!((after[i] - m[i]).abs() < 1e-10, "vertex {i}");
            }
        }
    }

    #[test]
    fn drift_k2_closed_form() {
        // two-state chain: color-a steps happen from (1) with prob r_a,
        // and the chain spends half its time at (1), so v = (r1/2, r2/2)
        let point = harmonic(2, &[0.3, 0.7]);
        let g = build_multigraph(2).unwrap();
        let v = drift_formula(&g, &point).unwrap();
        assert!((v[0] - point.r[0] / 2.0).abs() < 1e-12);
        assert!((v[1] - point.r[1] / 2.0).abs() < 1e-12);
    }

    #[test]
    fn degree_weighted_drift_sums_to_one() {
        // one box per step: Σ_a |R_a| v(a) accounts for every added box,
        // because the reduced state stays bounded
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for k in 2..=4usize {
            let g = build_multigraph(k).unwrap();
            for _ in 0..5 {
                let r: Vec<f64> = (0..k)
                    .map(|_| rand::Rng::gen_range(&mut rng, 0.1..3.0))
                    .collect();
                let point = harmonic(k, &r);
                let v = drift_formula(&g, &point).unwrap();
                let total: f64 = (0..k)
                    .map(|a| {
                        (crate::boundary::homogeneity_degree(a + 1, k) as f64) * v[a]
                    })
                    .sum();
                assert!((total - 1.0).abs() < 1e-9, "k={k} r={r:?}: {total}");
            }
        }
    }

    #[test]
    fn estimate_converges_to_formula() {
        let (g, point, traj) = simulate_walk(2, &[0.35, 0.65], 200_000, 11, 0).unwrap();
        let formula = drift_formula(&g, &point).unwrap();
        let est = drift_estimate(&traj).unwrap();
        for i in 0..2 {
            assert!(
                (est.value[i] - formula[i]).abs() <= 3.0 * est.stderr[i],
                "coord {i}: {} vs {} ± {}",
                est.value[i],
                formula[i],
                est.stderr[i]
            );
        }
        // Cauchy-style shrink over growing run lengths
        let errs: Vec<f64> = [2_000u64, 20_000, 200_000]
            .iter()
            .map(|&n| {
                let (_, _, t) = simulate_walk(2, &[0.35, 0.65], n, 11, 0).unwrap();
                let e = drift_estimate(&t).unwrap();
                (e.value[0] - formula[0]).abs() + (e.value[1] - formula[1]).abs()
            })
            .collect();
        assert!(errs[2] < errs[0], "{errs:?}");
    }

    #[test]
    fn continuity_drift_matches_direct_at_interior_points() {
        let r = [0.3, 0.3, 0.4];
        let direct = {
            let g = build_multigraph(3).unwrap();
            let point = harmonic(3, &r);
            drift_formula(&g, &point).unwrap()
        };
        let limit = drift_by_continuity(3, &r).unwrap();
        for i in 0..3 {
            assert!((limit[i] - direct[i]).abs() < 1e-12);
        }
        // a reducible point still gets a finite, degree-consistent drift
        let v = drift_by_continuity(3, &[1.0, 0.0, 0.0]).unwrap();
        let total: f64 = (0..3)
            .map(|a| (crate::boundary::homogeneity_degree(a + 1, 3) as f64) * v[a])
            .sum();
        assert!((total - 1.0).abs() < 1e-3, "{v:?} weighted sum {total}");
        assert!(v.iter().all(|&x| x.is_finite() && x >= -1e-9));
    }

    #[test]
    fn reducible_r_is_refused() {
        assert!(matches!(
            simulate_walk(3, &[1.0, 0.0, 0.0], 10, 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn csv_output_shape() {
        let (g, _point, traj) = simulate_walk(2, &[0.5, 0.5], 10, 3, 0).unwrap();
        let mut buf = Vec::new();
        write_trajectory_csv(&g, &traj, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "step,state,x_1,x_2");
        assert_eq!(lines.len(), 12);
    }
}
