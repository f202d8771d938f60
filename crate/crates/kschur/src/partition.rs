//! Integer partitions, (k+1)-cores, the bounded/core bijection and the
//! chain-based conjugation of k-bounded partitions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts, trailing zeros stripped.
///
/// Equality and ordering ignore trailing zeros by construction. The total
/// order is graded: first by size, then reverse-lexicographic on the part
/// sequence, so that within one degree dominance-larger partitions come
/// first. This matches the basis listing (∅, (1), (2), (1,1), (2,1), ...)
/// used for the transfer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, validating monotonicity and stripping zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part at `row` (1-indexed); zero beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    /// Number of boxes |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    /// Ordinary conjugate (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of the part value `v` (v ≥ 1).
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Hook length of the cell at (row, col), both 1-indexed.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col;
        let leg = self.parts[row..].iter().filter(|&&p| p >= col).count();
        arm + leg + 1
    }

    /// Adds one box at `row` (1-indexed; `row = len+1` starts a new row).
    /// Errors if the result is not a partition.
    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.parts.len() + 1 {
            return Err(Error::Domain(format!("cannot add a box at row {row}")));
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Partition::new(parts)
    }

    /// Rows where a box can be added keeping a partition shape (1-indexed),
    /// including the fresh row below the diagram.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for i in 1..=self.parts.len() + 1 {
            if self.part(i) < self.part_or_max(i - 1) {
                rows.push(i);
            }
        }
        rows
    }

    fn part_or_max(&self, row: usize) -> usize {
        if row == 0 {
            usize::MAX
        } else {
            self.part(row)
        }
    }

    /// All partitions of `n` (no bound on parts).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        Self::bounded_of_size(n, n)
    }

    /// All partitions of `n` with parts ≤ `bound`.
    pub fn bounded_of_size(n: usize, bound: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, bound, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size ≤ `n` with parts ≤ `bound`.
    pub fn bounded_up_to_size(n: usize, bound: usize) -> Vec<Partition> {
        (0..=n)
            .flat_map(|m| Self::bounded_of_size(m, bound))
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Chain decomposition of a zero-padded k-bounded partition: from the part
/// at row i the chain jumps k − λ_i parts down to row i + k − λ_i + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomp {
    pub k: usize,
    /// Part values visited by each chain, padded rows included as zeros.
    pub chains: Vec<Vec<usize>>,
    /// Row indices (1-indexed) visited by each chain.
    pub origin_rows: Vec<Vec<usize>>,
}

impl ChainDecomp {
    /// Chains with zero parts dropped, padded with empty chains to length k.
    /// Zero-only chains are artifacts of the padding and are omitted.
    pub fn nonzero_chains(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .chains
            .iter()
            .map(|c| c.iter().copied().filter(|&v| v > 0).collect())
            .filter(|c: &Vec<usize>| !c.is_empty())
            .collect();
        while out.len() < self.k {
            out.push(Vec::new());
        }
        out
    }

    /// Sum of each nonzero chain; these are the column heights of ω_k(λ).
    pub fn chain_sums(&self) -> Vec<usize> {
        self.nonzero_chains()
            .iter()
            .map(|c| c.iter().sum())
            .filter(|&s| s > 0)
            .collect()
    }
}

fn check_level(l: usize) -> Result<()> {
    if l < 2 {
        Err(Error::InvalidLevel(format!("level must be ≥ 2, got {l}")))
    } else {
        Ok(())
    }
}

fn check_bounded(p: &Partition, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidLevel("k must be ≥ 1".into()));
    }
    if p.part(1) > k {
        Err(Error::Domain(format!("{p} is not {k}-bounded")))
    } else {
        Ok(())
    }
}

/// True iff no cell of λ has hook length exactly `l`.
pub fn is_l_core(lambda: &Partition, l: usize) -> Result<bool> {
    check_level(l)?;
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p {
            if lambda.hook(i + 1, j) == l {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The map 𝔭: delete every cell of the l-core with hook length > l and
/// left-justify the rows. The result is (l−1)-bounded.
pub fn core_to_bounded(lambda: &Partition, l: usize) -> Result<Partition> {
    check_level(l)?;
    if !is_l_core(lambda, l)? {
        return Err(Error::Domain(format!("{lambda} is not a {l}-core")));
    }
    let parts = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (1..=p).filter(|&j| lambda.hook(i + 1, j) < l).count())
        .collect();
    Partition::new(parts)
}

/// The inverse map 𝔠: rebuild the core bottom-up, shifting each row right
/// as little as possible so that no cell of the skew diagram gets a hook
/// longer than k. The outer shape of the skew diagram is the (k+1)-core.
pub fn bounded_to_core(mu: &Partition, k: usize) -> Result<Partition> {
    check_bounded(mu, k)?;
    let r = mu.len();
    // offsets[i] = number of deleted cells at the left of row i+1
    let mut offsets = vec![0usize; r];
    for i in (0..r).rev() {
        let below_min = if i + 1 < r { offsets[i + 1] } else { 0 };
        let len = mu.parts()[i];
        let mut o = below_min;
        'shift: loop {
            // hook of cell (i, j) inside the skew shape, j absolute column
            for j in o + 1..=o + len {
                let arm = o + len - j;
                let leg = (i + 1..r)
                    .take_while(|&i2| offsets[i2] < j)
                    .filter(|&i2| j <= offsets[i2] + mu.parts()[i2])
                    .count();
                if arm + leg + 1 > k {
                    o += 1;
                    continue 'shift;
                }
            }
            break;
        }
        offsets[i] = o;
    }
    let parts = (0..r).map(|i| offsets[i] + mu.parts()[i]).collect();
    let core = Partition::new(parts)?;
    debug_assert!(is_l_core(&core, k + 1)?);
    Ok(core)
}

/// Decomposes the zero-padded partition into its chains.
pub fn chain_decomposition(lambda: &Partition, k: usize) -> Result<ChainDecomp> {
    check_bounded(lambda, k)?;
    let r = lambda.len();
    // minimal padded length so that every jump from a real row lands
    let padded = (1..=r)
        .map(|i| i + k - lambda.part(i) + 1)
        .max()
        .unwrap_or(0)
        .max(r);
    let mut seen = vec![false; padded + 1];
    let mut chains = Vec::new();
    let mut origin_rows = Vec::new();
    for start in 1..=padded {
        if seen[start] {
            continue;
        }
        let mut rows = Vec::new();
        let mut vals = Vec::new();
        let mut i = start;
        while i <= padded {
            seen[i] = true;
            rows.push(i);
            vals.push(lambda.part(i));
            i += k - lambda.part(i) + 1;
        }
        chains.push(vals);
        origin_rows.push(rows);
    }
    Ok(ChainDecomp {
        k,
        chains,
        origin_rows,
    })
}

/// The conjugation ω_k, computed both as 𝔭(𝔠(λ)′) and from the chain sums.
/// A disagreement between the two routes signals an implementation bug.
pub fn omega_conjugate(lambda: &Partition, k: usize) -> Result<Partition> {
    check_bounded(lambda, k)?;
    // core route
    let core = bounded_to_core(lambda, k)?;
    let via_core = core_to_bounded(&core.conjugate(), k + 1)?;
    // chain route: column heights are the chain sums
    let decomp = chain_decomposition(lambda, k)?;
    let mut heights = decomp.chain_sums();
    heights.sort_unstable_by(|a, b| b.cmp(a));
    if heights.len() > k {
        return Err(Error::InternalConsistency(format!(
            "ω_{k}({lambda}): {} nonzero chains, expected at most {k}",
            heights.len()
        )));
    }
    let via_chains = Partition::new(heights)?.conjugate();
    if via_core != via_chains {
        return Err(Error::InternalConsistency(format!(
            "ω_{k}({lambda}): core route gives {via_core}, chain route gives {via_chains}"
        )));
    }
    Ok(via_core)
}
