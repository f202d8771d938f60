//! The algebra Λ_(k) = R[h_1..h_k] in two bases: the homogeneous products
//! h_λ and the k-Schur functions s_λ^(k), plus the ordinary Schur basis as
//! an expansion target. All coefficients are exact rationals (they come
//! out integral; the conversions assert it).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{det_small, solve_unitriangular, Rat};
use crate::lattice::weak_strip_extensions;
use crate::partition::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    /// Products of complete homogeneous functions, indexed by k-bounded λ.
    H,
    /// k-Schur functions at the given level.
    KSchur(usize),
    /// Ordinary Schur functions.
    Schur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::H => write!(f, "h"),
            Basis::KSchur(k) => write!(f, "kschur{k}"),
            Basis::Schur => write!(f, "schur"),
        }
    }
}

/// A finite linear combination of basis elements with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFuncExpr {
    basis: Basis,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymFuncExpr {
    pub fn zero(basis: Basis) -> Self {
        SymFuncExpr {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, index: Partition, coeff: Rat) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(index, coeff);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, index: &Partition) -> Rat {
        self.coeffs.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, index: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(index) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymFuncExpr) -> Result<SymFuncExpr> {
        if self.basis != other.basis {
            return Err(Error::Domain("cannot add across bases".into()));
        }
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> SymFuncExpr {
        if c.is_zero() {
            return SymFuncExpr::zero(self.basis);
        }
        SymFuncExpr {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, v)| (p.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Degrees occurring in the expression.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// Product of two expressions in the H basis: h_λ·h_μ = h_{λ∪μ}.
    pub fn mul_h(&self, other: &SymFuncExpr) -> Result<SymFuncExpr> {
        if self.basis != Basis::H || other.basis != Basis::H {
            return Err(Error::Domain("mul_h needs both factors in H".into()));
        }
        let mut out = SymFuncExpr::zero(Basis::H);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(parts), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Evaluates an H-basis expression at numeric h_1..h_k (h_m = 0 for
    /// m > len).
    pub fn eval_h_f64(&self, h: &[f64]) -> Result<f64> {
        if self.basis != Basis::H {
            return Err(Error::Domain("eval_h_f64 needs the H basis".into()));
        }
        let mut acc = 0.0;
        for (p, c) in self.terms() {
            let mut t = crate::exact::rat_to_f64(c);
            for &part in p.parts() {
                t *= h.get(part - 1).copied().unwrap_or(0.0);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Asserts all coefficients are nonnegative integers.
    pub fn assert_nonnegative_integral(&self, context: &str) -> Result<()> {
        for (p, c) in self.terms() {
            if c.is_negative() || !c.is_integer() {
                return Err(Error::Positivity(format!(
                    "{context}: coefficient of {p} is {c}"
                )));
            }
        }
        Ok(())
    }

    /// JSON expansion dump: {"schema": "kschur/1", "basis": ..., "terms": [...]}.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Term {
            partition: Vec<usize>,
            coeff: String,
        }
        #[derive(Serialize)]
        struct Dump {
            schema: &'static str,
            basis: String,
            terms: Vec<Term>,
        }
        let dump = Dump {
            schema: "kschur/1",
            basis: self.basis.to_string(),
            terms: self
                .coeffs
                .iter()
                .map(|(p, c)| Term {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("serializable")
    }
}

impl fmt::Display for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let name = match self.basis {
            Basis::H => "h",
            Basis::KSchur(_) => "s",
            Basis::Schur => "S",
        };
        let mut first = true;
        for (p, c) in &self.coeffs {
            let tok = if c.is_one() {
                format!("{name}{p}")
            } else if (-c.clone()).is_one() {
                format!("-{name}{p}")
            } else {
                format!("{c}*{name}{p}")
            };
            if first {
                write!(f, "{tok}")?;
                first = false;
            } else if let Some(rest) = tok.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {tok}")?;
            }
        }
        Ok(())
    }
}

/// Table of k-Kostka numbers K^{(k)}_{λ,α} in one degree. Rows and columns
/// are indexed by the k-bounded partitions of `degree` in the graded basis
/// order (dominance-larger first within the degree).
#[derive(Clone, Debug)]
pub struct KostkaTable {
    pub k: usize,
    pub degree: usize,
    pub index: Vec<Partition>,
    /// matrix[row = λ][col = α] = K^{(k)}_{λ,α}
    pub matrix: Vec<Vec<Rat>>,
}

impl KostkaTable {
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.index.iter().position(|q| q == p)
    }
}

// read-mostly cache: concurrent readers, one writer inserts a finished
// table atomically
type TableCache = RwLock<HashMap<(usize, usize), Arc<KostkaTable>>>;

static TABLE_CACHE: OnceLock<TableCache> = OnceLock::new();

/// Number of chains ∅ = λ^(0) ⊂ … ⊂ λ^(d) = λ where λ^(i)/λ^(i−1) is a
/// weak horizontal strip of size α_i. For k ≥ |λ| this is the ordinary
/// Kostka number.
pub fn count_k_tableaux(lambda: &Partition, alpha: &[usize], k: usize) -> Result<u64> {
    if lambda.part(1) > k {
        return Err(Error::Domain(format!("{lambda} is not {k}-bounded")));
    }
    if alpha.iter().any(|&a| a == 0 || a > k) {
        return Err(Error::Domain(format!(
            "weight {alpha:?} has a part outside 1..={k}"
        )));
    }
    if alpha.iter().sum::<usize>() != lambda.size() {
        return Err(Error::Domain(format!(
            "weight {alpha:?} does not sum to |{lambda}| = {}",
            lambda.size()
        )));
    }
    let mut level: HashMap<Partition, u64> = HashMap::new();
    level.insert(Partition::empty(), 1);
    for &a in alpha {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (nu, count) in &level {
            for mu in weak_strip_extensions(nu, a, k)? {
                if lambda.contains(&mu) {
                    *next.entry(mu).or_insert(0) += count;
                }
            }
        }
        level = next;
    }
    Ok(level.get(lambda).copied().unwrap_or(0))
}

/// Builds (or fetches from the cache) the k-Kostka table of one degree.
pub fn kostka_table(k: usize, degree: usize) -> Result<Arc<KostkaTable>> {
    let cache = TABLE_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&(k, degree)) {
        return Ok(t.clone());
    }
    let mut index = Partition::bounded_of_size(degree, k);
    index.sort();
    let position: HashMap<Partition, usize> = index
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let n = index.len();
    let mut matrix = vec![vec![Rat::zero(); n]; n];
    for (col, alpha) in index.iter().enumerate() {
        // forward DP over weak horizontal strip additions of sizes α_i
        let mut level: HashMap<Partition, u64> = HashMap::new();
        level.insert(Partition::empty(), 1);
        for &a in alpha.parts() {
            let mut next: HashMap<Partition, u64> = HashMap::new();
            for (nu, count) in &level {
                for mu in weak_strip_extensions(nu, a, k)? {
                    *next.entry(mu).or_insert(0) += count;
                }
            }
            level = next;
        }
        for (lambda, count) in level {
            matrix[position[&lambda]][col] = Rat::from_integer((count as i64).into());
        }
    }
    let table = Arc::new(KostkaTable {
        k,
        degree,
        index,
        matrix,
    });
    cache
        .write()
        .unwrap()
        .insert((k, degree), table.clone());
    Ok(table)
}

/// Exact conversion h_δ = Σ K^{(k)}_{κ,δ} s_κ^{(k)}, degree by degree.
pub fn h_to_kschur(expr: &SymFuncExpr, k: usize) -> Result<SymFuncExpr> {
    if expr.basis != Basis::H {
        return Err(Error::Domain("h_to_kschur needs the H basis".into()));
    }
    let mut out = SymFuncExpr::zero(Basis::KSchur(k));
    let mut by_degree: BTreeMap<usize, Vec<(Partition, Rat)>> = BTreeMap::new();
    for (p, c) in expr.terms() {
        if p.part(1) > k {
            return Err(Error::Domain(format!("{p} is not {k}-bounded")));
        }
        by_degree
            .entry(p.size())
            .or_default()
            .push((p.clone(), c.clone()));
    }
    for (degree, terms) in by_degree {
        let table = kostka_table(k, degree)?;
        for (delta, c) in terms {
            let col = table.position(&delta).expect("indexed partition");
            for (row, kappa) in table.index.iter().enumerate() {
                out.add_term(kappa.clone(), table.matrix[row][col].clone() * c.clone());
            }
        }
    }
    Ok(out)
}

/// Inverse conversion by a unitriangular solve per degree. The Kostka
/// matrix is unitriangular for the dominance order; coefficients come out
/// integral, which is asserted.
pub fn kschur_to_h(expr: &SymFuncExpr, k: usize) -> Result<SymFuncExpr> {
    match expr.basis {
        Basis::KSchur(kk) if kk == k => {}
        _ => return Err(Error::Domain("kschur_to_h needs the KSchur(k) basis".into())),
    }
    let mut out = SymFuncExpr::zero(Basis::H);
    let mut by_degree: BTreeMap<usize, Vec<(Partition, Rat)>> = BTreeMap::new();
    for (p, c) in expr.terms() {
        by_degree
            .entry(p.size())
            .or_default()
            .push((p.clone(), c.clone()));
    }
    for (degree, terms) in by_degree {
        let table = kostka_table(k, degree)?;
        let n = table.index.len();
        // reversed order makes K lower unitriangular
        let mut m = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = table.matrix[n - 1 - i][n - 1 - j].clone();
            }
        }
        let mut b = vec![Rat::zero(); n];
        for (p, c) in terms {
            let pos = table.position(&p).expect("indexed partition");
            b[n - 1 - pos] = c;
        }
        let x = solve_unitriangular(&m, &b)?;
        for (i, v) in x.into_iter().enumerate() {
            if !v.is_integer() {
                return Err(Error::InternalConsistency(format!(
                    "non-integral h-expansion coefficient {v} at degree {degree}"
                )));
            }
            out.add_term(table.index[n - 1 - i].clone(), v);
        }
    }
    Ok(out)
}

/// The Pieri product h_r·s_κ^{(k)}: the multiplicity-free sum of
/// s_μ^{(k)} over weak horizontal strips μ/κ of size r.
pub fn pieri(r: usize, kappa: &Partition, k: usize) -> Result<SymFuncExpr> {
    if r == 0 || r > k {
        return Err(Error::Domain(format!("Pieri index {r} outside 1..={k}")));
    }
    let mut out = SymFuncExpr::zero(Basis::KSchur(k));
    for mu in weak_strip_extensions(kappa, r, k)? {
        out.add_term(mu, Rat::one());
    }
    Ok(out)
}

/// The product s_κ^{(k)}·s_δ^{(k)} expanded back in the k-Schur basis.
/// Coefficients are the k-Littlewood–Richardson numbers.
pub fn kschur_product(kappa: &Partition, delta: &Partition, k: usize) -> Result<SymFuncExpr> {
    let a = kschur_to_h(
        &SymFuncExpr::single(Basis::KSchur(k), kappa.clone(), Rat::one()),
        k,
    )?;
    let b = kschur_to_h(
        &SymFuncExpr::single(Basis::KSchur(k), delta.clone(), Rat::one()),
        k,
    )?;
    h_to_kschur(&a.mul_h(&b)?, k)
}

/// Ordinary Kostka number K_{λ,μ} (SSYT of shape λ, weight μ) computed as
/// the k → ∞ degeneration of the weak-strip count.
fn ordinary_kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let n = lambda.size();
    count_k_tableaux(lambda, mu.parts(), n.max(1))
}

/// Expands s_κ^{(k)} in ordinary Schur functions; the coefficients must be
/// nonnegative integers.
pub fn kschur_to_schur(kappa: &Partition, k: usize) -> Result<SymFuncExpr> {
    let h = kschur_to_h(
        &SymFuncExpr::single(Basis::KSchur(k), kappa.clone(), Rat::one()),
        k,
    )?;
    let mut out = SymFuncExpr::zero(Basis::Schur);
    for (mu, c) in h.terms() {
        // h_μ = Σ_λ K_{λ,μ} s_λ over all partitions λ of |μ|
        for lambda in Partition::all_of_size(mu.size()) {
            let kost = ordinary_kostka(&lambda, mu)?;
            if kost > 0 {
                out.add_term(
                    lambda,
                    c.clone() * Rat::from_integer((kost as i64).into()),
                );
            }
        }
    }
    out.assert_nonnegative_integral(&format!("s_{kappa}^({k}) in Schur basis"))?;
    Ok(out)
}

/// Expands s_κ^{(k)} in the (k+1)-Schur basis; nonnegativity asserted.
pub fn kschur_lift(kappa: &Partition, k: usize) -> Result<SymFuncExpr> {
    let h = kschur_to_h(
        &SymFuncExpr::single(Basis::KSchur(k), kappa.clone(), Rat::one()),
        k,
    )?;
    let lifted = h_to_kschur(&h, k + 1)?;
    lifted.assert_nonnegative_integral(&format!("s_{kappa}^({k}) in (k+1)-Schur basis"))?;
    Ok(lifted)
}

/// Jacobi–Trudi evaluation det(h_{λ_i−i+j}) with h_0 = 1 and h_m = 0 for
/// m < 0 or m > len(h).
pub fn schur_eval_jacobi_trudi(lambda: &Partition, h: &[Rat]) -> Rat {
    let ell = lambda.len();
    if ell == 0 {
        return Rat::one();
    }
    let entry = |i: usize, j: usize| -> Rat {
        let idx = lambda.parts()[i] as i64 - i as i64 + j as i64;
        if idx == 0 {
            Rat::one()
        } else if idx < 0 || idx as usize > h.len() {
            Rat::zero()
        } else {
            h[idx as usize - 1].clone()
        }
    };
    let m: Vec<Vec<Rat>> = (0..ell)
        .map(|i| (0..ell).map(|j| entry(i, j)).collect())
        .collect();
    det_small(&m)
}

/// Float variant of [`schur_eval_jacobi_trudi`].
pub fn schur_eval_jacobi_trudi_f64(lambda: &Partition, h: &[f64]) -> f64 {
    let ell = lambda.len();
    if ell == 0 {
        return 1.0;
    }
    let entry = |i: usize, j: usize| -> f64 {
        let idx = lambda.parts()[i] as i64 - i as i64 + j as i64;
        if idx == 0 {
            1.0
        } else if idx < 0 || idx as usize > h.len() {
            0.0
        } else {
            h[idx as usize - 1]
        }
    };
    let m: Vec<Vec<f64>> = (0..ell)
        .map(|i| (0..ell).map(|j| entry(i, j)).collect())
        .collect();
    det_small(&m)
}

/// h-expansion of s_κ^{(k)} as a reusable polynomial (the J_κ of the
/// boundary region tests).
pub fn kschur_h_polynomial(kappa: &Partition, k: usize) -> Result<SymFuncExpr> {
    kschur_to_h(
        &SymFuncExpr::single(Basis::KSchur(k), kappa.clone(), Rat::one()),
        k,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lattice::covers;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(k: usize, parts: &[usize]) -> SymFuncExpr {
        SymFuncExpr::single(Basis::KSchur(k), p(parts), Rat::one())
    }

    fn h(parts: &[usize]) -> SymFuncExpr {
        SymFuncExpr::single(Basis::H, p(parts), Rat::one())
    }

    /// Brute-force SSYT counter, independent of the strip machinery:
    /// fills rows top to bottom with row-weakly-increasing,
    /// column-strictly-increasing entries of the given content.
    fn brute_ssyt(lambda: &Partition, mu: &[usize]) -> u64 {
        fn rec(
            lambda: &Partition,
            remaining: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            row: usize,
            col: usize,
        ) -> u64 {
            if row == lambda.len() {
                return 1;
            }
            let (nr, nc) = if col + 1 < lambda.parts()[row] {
                (row, col + 1)
            } else {
                (row + 1, 0)
            };
            let lo = if col > 0 { rows[row][col - 1] } else { 1 };
            let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
            let lo = lo.max(above);
            let mut total = 0;
            for v in lo..=remaining.len() {
                if remaining[v - 1] == 0 {
                    continue;
                }
                remaining[v - 1] -= 1;
                rows[row][col] = v;
                total += rec(lambda, remaining, rows, nr, nc);
                remaining[v - 1] += 1;
            }
            total
        }
        if lambda.is_empty() {
            return 1;
        }
        let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
        rec(lambda, &mut mu.to_vec(), &mut rows, 0, 0)
    }

    #[test]
    fn kostka_diagonal_and_dominance() {
        for k in 2..=4usize {
            for degree in 0..=8 {
                let t = kostka_table(k, degree).unwrap();
                for (i, li) in t.index.iter().enumerate() {
                    assert!(t.matrix[i][i].is_one(), "K[{li}][{li}]");
                    for (j, lj) in t.index.iter().enumerate() {
                        if !t.matrix[i][j].is_zero() {
                            // α ≤ λ in dominance: partial sums of α never exceed λ's
                            let dom = (1..=lj.len().max(li.len())).all(|m| {
                                let sa: usize = (1..=m).map(|x| lj.part(x)).sum();
                                let sl: usize = (1..=m).map(|x| li.part(x)).sum();
                                sa <= sl
                            });
                            assert!(dom, "K[{li}][{lj}] nonzero violates dominance");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn count_examples() {
        let lam = p(&[2, 1]);
        assert_eq!(count_k_tableaux(&lam, &[2, 1], 3).unwrap(), 1);
        assert_eq!(count_k_tableaux(&lam, &[1, 1, 1], 3).unwrap(), 2);
        // α not dominated by λ gives zero
        assert_eq!(count_k_tableaux(&p(&[1, 1]), &[2], 3).unwrap(), 0);
        assert_eq!(count_k_tableaux(&lam, &[3], 3).unwrap(), 0);
        assert!(count_k_tableaux(&lam, &[2, 2], 3).is_err()); // size mismatch
    }

    #[test]
    fn large_k_degenerates_to_ordinary_kostka() {
        for n in 0..=6usize {
            for lambda in Partition::all_of_size(n) {
                for mu in Partition::all_of_size(n) {
                    let weak = count_k_tableaux(&lambda, mu.parts(), n.max(1)).unwrap();
                    assert_eq!(
                        weak,
                        brute_ssyt(&lambda, mu.parts()),
                        "λ={lambda} μ={mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_one() {
        let e = h_to_kschur(&h(&[1]), 3).unwrap();
        assert_eq!(e, s(3, &[1]));
    }

    #[test]
    fn k2_closed_forms() {
        // s^{(2)}_{(1,1)} = e_2 = h_{(1,1)} − h_{(2)}
        let e = kschur_to_h(&s(2, &[1, 1]), 2).unwrap();
        assert_eq!(e.coeff(&p(&[1, 1])), rat(1));
        assert_eq!(e.coeff(&p(&[2])), rat(-1));
        // s^{(2)}_{(2,1)} = h_2·e_1 = h_{(2,1)}
        let e = kschur_to_h(&s(2, &[2, 1]), 2).unwrap();
        assert_eq!(e, h(&[2, 1]));
        // s^{(2)}_{(2,2)} = h_2^2
        let e = kschur_to_h(&s(2, &[2, 2]), 2).unwrap();
        assert_eq!(e, h(&[2, 2]));
        // s^{(2)}_{(2,1,1)} = h_2·e_2 = h_{(2,1,1)} − h_{(2,2)}
        let e = kschur_to_h(&s(2, &[2, 1, 1]), 2).unwrap();
        assert_eq!(e.coeff(&p(&[2, 1, 1])), rat(1));
        assert_eq!(e.coeff(&p(&[2, 2])), rat(-1));
        // whole family ≤ 6 boxes: s^{(2)}_{(2^a,1^b)} = h_2^a e_2^{⌊b/2⌋} e_1^{b mod 2}
        let e2 = kschur_to_h(&s(2, &[1, 1]), 2).unwrap();
        for a in 0..=2usize {
            for b in 0..=3usize {
                let mut parts = vec![2; a];
                parts.extend(vec![1; b]);
                let kappa = Partition::from_unsorted(parts);
                if kappa.size() > 6 {
                    continue;
                }
                let mut expect = h(&[]);
                for _ in 0..a {
                    expect = expect.mul_h(&h(&[2])).unwrap();
                }
                for _ in 0..b / 2 {
                    expect = expect.mul_h(&e2).unwrap();
                }
                if b % 2 == 1 {
                    expect = expect.mul_h(&h(&[1])).unwrap();
                }
                let got = kschur_to_h(&s(2, kappa.parts()), 2).unwrap();
                assert_eq!(got, expect, "κ={kappa}");
            }
        }
    }

    #[test]
    fn conversion_round_trip() {
        for degree in 0..=8usize {
            for delta in Partition::bounded_of_size(degree, 3) {
                let back = kschur_to_h(&h_to_kschur(&h(delta.parts()), 3).unwrap(), 3).unwrap();
                assert_eq!(back, h(delta.parts()), "δ={delta}");
            }
        }
    }

    #[test]
    fn pieri_examples() {
        // r = 1 sums over covers
        for n in 0..=5 {
            for kappa in Partition::bounded_of_size(n, 3) {
                let got = pieri(1, &kappa, 3).unwrap();
                let mut expect = SymFuncExpr::zero(Basis::KSchur(3));
                for c in covers(&kappa, 3).unwrap() {
                    expect.add_term(c.target, Rat::one());
                }
                assert_eq!(got, expect, "κ={kappa}");
            }
        }
        for r in 1..=3 {
            assert_eq!(pieri(r, &Partition::empty(), 3).unwrap(), s(3, &[r]));
        }
    }

    #[test]
    fn pieri_matches_h_product() {
        for kappa_size in 0..=6usize {
            for kappa in Partition::bounded_of_size(kappa_size, 3) {
                let hk = kschur_to_h(&s(3, kappa.parts()), 3).unwrap();
                for r in 1..=3usize {
                    let product = h_to_kschur(&hk.mul_h(&h(&[r])).unwrap(), 3).unwrap();
                    assert_eq!(pieri(r, &kappa, 3).unwrap(), product, "κ={kappa} r={r}");
                }
            }
        }
    }

    #[test]
    fn rectangle_products_shift() {
        for k in 2..=3usize {
            for a in 1..=k {
                let rect = crate::lattice::rectangle(a, k);
                for n in 0..=4usize {
                    for lam in Partition::bounded_of_size(n, k) {
                        let got = kschur_product(&rect, &lam, k).unwrap();
                        let mut parts = lam.parts().to_vec();
                        parts.extend(rect.parts());
                        let expect = SymFuncExpr::single(
                            Basis::KSchur(k),
                            Partition::from_unsorted(parts),
                            Rat::one(),
                        );
                        assert_eq!(got, expect, "R_{a} · {lam}");
                    }
                }
            }
        }
    }

    #[test]
    fn product_example_k3() {
        let got = kschur_product(&p(&[2]), &p(&[1, 1]), 3).unwrap();
        assert_eq!(got, s(3, &[2, 1, 1]));
    }

    #[test]
    fn product_commutes_and_associates_on_samples() {
        let xs = [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])];
        for a in &xs {
            for b in &xs {
                assert_eq!(
                    kschur_product(a, b, 3).unwrap(),
                    kschur_product(b, a, 3).unwrap()
                );
            }
        }
        // (ab)c = a(bc) via H expansion
        let ab = kschur_product(&p(&[2]), &p(&[1, 1]), 3).unwrap();
        let mut abc = SymFuncExpr::zero(Basis::KSchur(3));
        for (q, c) in ab.terms() {
            let t = kschur_product(q, &p(&[1]), 3).unwrap().scale(c);
            abc = abc.add(&t).unwrap();
        }
        let bc = kschur_product(&p(&[1, 1]), &p(&[1]), 3).unwrap();
        let mut abc2 = SymFuncExpr::zero(Basis::KSchur(3));
        for (q, c) in bc.terms() {
            let t = kschur_product(&p(&[2]), q, 3).unwrap().scale(c);
            abc2 = abc2.add(&t).unwrap();
        }
        assert_eq!(abc, abc2);
    }

    #[test]
    fn schur_expansion_examples() {
        // main hook ≤ k: the k-Schur and Schur functions coincide
        for k in 2..=3usize {
            for n in 0..=k {
                for kappa in Partition::bounded_of_size(n, k) {
                    if kappa.part(1) + kappa.len() <= k + 1 {
                        let e = kschur_to_schur(&kappa, k).unwrap();
                        assert_eq!(
                            e,
                            SymFuncExpr::single(Basis::Schur, kappa.clone(), Rat::one())
                        );
                    }
                }
            }
        }
        for a in 1..=3usize {
            let rect = crate::lattice::rectangle(a, 3);
            let e = kschur_to_schur(&rect, 3).unwrap();
            assert_eq!(e, SymFuncExpr::single(Basis::Schur, rect, Rat::one()));
        }
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            kschur_lift(&Partition::empty(), 2).unwrap(),
            SymFuncExpr::single(Basis::KSchur(3), Partition::empty(), Rat::one())
        );
        assert_eq!(kschur_lift(&p(&[1]), 2).unwrap(), s(3, &[1]));
        // the lift is the same symmetric function: re-expanding it in the
        // h basis at the new level reproduces the old h expansion
        for n in 0..=6usize {
            for kappa in Partition::bounded_of_size(n, 2) {
                let lifted = kschur_lift(&kappa, 2).unwrap();
                let mut via_lift = SymFuncExpr::zero(Basis::H);
                for (q, c) in lifted.terms() {
                    let part = kschur_to_h(&s(3, q.parts()), 3).unwrap().scale(c);
                    via_lift = via_lift.add(&part).unwrap();
                }
                let direct = kschur_to_h(&s(2, kappa.parts()), 2).unwrap();
                assert_eq!(via_lift, direct, "κ={kappa}");
            }
        }
    }

    #[test]
    fn schur_expansion_matches_jacobi_trudi_evaluations() {
        // independent oracle: evaluate s_κ^(k) through its h expansion and
        // through Σ c_λ · det(h_{λ_i−i+j}) at random rational h
        let hs = [rat(2), Rat::new(3.into(), 5.into()), rat(1)];
        for n in 0..=6usize {
            for kappa in Partition::bounded_of_size(n, 3) {
                let via_h = {
                    let e = kschur_to_h(&s(3, kappa.parts()), 3).unwrap();
                    let mut acc = Rat::zero();
                    for (mu, c) in e.terms() {
                        let mut t = c.clone();
                        for &part in mu.parts() {
                            t *= hs[part - 1].clone();
                        }
                        acc += t;
                    }
                    acc
                };
                let via_schur = {
                    let e = kschur_to_schur(&kappa, 3).unwrap();
                    let mut acc = Rat::zero();
                    for (lambda, c) in e.terms() {
                        acc += c.clone() * schur_eval_jacobi_trudi(lambda, &hs);
                    }
                    acc
                };
                assert_eq!(via_h, via_schur, "κ={kappa}");
            }
        }
    }

    #[test]
    fn jacobi_trudi_examples() {
        let hs = [rat(3), rat(5)];
        // s_{(1,1)} = h1^2 − h2
        assert_eq!(schur_eval_jacobi_trudi(&p(&[1, 1]), &hs), rat(4));
        assert_eq!(schur_eval_jacobi_trudi(&Partition::empty(), &hs), rat(1));
    }

    #[test]
    fn jacobi_trudi_matches_h_expansion() {
        // evaluate both routes at numeric h for hook ≤ k, k = 3
        let hs = [rat(2), Rat::new(3.into(), 7.into()), rat(1)];
        for n in 0..=4usize {
            for kappa in Partition::bounded_of_size(n, 3) {
                if kappa.part(1) + kappa.len() > 4 {
                    continue;
                }
                let via_jt = schur_eval_jacobi_trudi(&kappa, &hs);
                let expansion = kschur_h_polynomial(&kappa, 3).unwrap();
                let mut via_h = Rat::zero();
                for (mu, c) in expansion.terms() {
                    let mut t = c.clone();
                    for &part in mu.parts() {
                        t *= hs[part - 1].clone();
                    }
                    via_h += t;
                }
                assert_eq!(via_jt, via_h, "κ={kappa}");
            }
        }
    }

    #[test]
    fn json_dump_shape() {
        let e = h_to_kschur(&h(&[2, 1]), 3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(v["schema"], "kschur/1");
        assert_eq!(v["basis"], "kschur3");
    }
}
