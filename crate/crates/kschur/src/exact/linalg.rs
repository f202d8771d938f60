//! Exact linear algebra: Faddeev–LeVerrier characteristic polynomials and
//! adjugates for polynomial matrices, unitriangular solves over rationals,
//! and a small cofactor determinant generic over the scalar ring.

use num::{One, Zero};

use crate::error::{Error, Result};

use super::{MultiPoly, Rat, UniPoly};

pub type PolyMatrix = Vec<Vec<MultiPoly>>;

fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { MultiPoly::one() } else { MultiPoly::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<MultiPoly>], b: &[Vec<MultiPoly>]) -> PolyMatrix {
    let n = a.len();
    let m = b.first().map(Vec::len).unwrap_or(0);
    let inner = b.len();
    let mut out = vec![vec![MultiPoly::zero(); m]; n];
    for i in 0..n {
        for (l, bl) in b.iter().enumerate().take(inner) {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if bl[j].is_zero() {
                    continue;
                }
                out[i][j] = std::mem::take(&mut out[i][j]) + a[i][l].clone() * bl[j].clone();
            }
        }
    }
    out
}

fn trace(m: &[Vec<MultiPoly>]) -> MultiPoly {
    m.iter()
        .enumerate()
        .fold(MultiPoly::zero(), |acc, (i, row)| acc + row[i].clone())
}

fn check_square(m: &[Vec<MultiPoly>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("matrix is not square".into()));
    }
    Ok(n)
}

/// Faddeev–LeVerrier recursion; returns the characteristic coefficients
/// c_1..c_n of T^n + c_1 T^{n−1} + ⋯ + c_n and the matrix B_{n−1} from
/// which the adjugate is read off. Divisions are by integers only.
fn faddeev_leverrier(m: &[Vec<MultiPoly>]) -> (Vec<MultiPoly>, PolyMatrix) {
    let n = m.len();
    let mut b = identity(n); // B_0
    let mut cs = Vec::with_capacity(n);
    let mut b_last = identity(n);
    for step in 1..=n {
        if step == n {
            b_last = b.clone(); // B_{n−1}
        }
        let a = mat_mul(m, &b);
        let c = trace(&a)
            .div_scalar(&Rat::from_integer((step as i64).into()))
            .scale(&Rat::from_integer((-1).into()));
        b = a;
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = std::mem::take(&mut row[i]) + c.clone();
        }
        cs.push(c);
    }
    (cs, b_last)
}

/// Exact characteristic polynomial det(T·I − M), constant term first.
pub fn char_poly(m: &[Vec<MultiPoly>]) -> Result<UniPoly> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(UniPoly::constant(MultiPoly::one()));
    }
    let (cs, _) = faddeev_leverrier(m);
    let mut coeffs = vec![MultiPoly::zero(); n + 1];
    coeffs[n] = MultiPoly::one();
    for (i, c) in cs.into_iter().enumerate() {
        // c_{i+1} multiplies T^{n−i−1}
        coeffs[n - i - 1] = c;
    }
    Ok(UniPoly::new(coeffs))
}

/// Exact determinant and adjugate with M·adj = det·I verified.
pub fn adjugate_inverse(m: &[Vec<MultiPoly>]) -> Result<(MultiPoly, PolyMatrix)> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok((MultiPoly::one(), Vec::new()));
    }
    let (cs, b_prev) = faddeev_leverrier(m);
    let sign_det = if n % 2 == 0 { 1 } else { -1 };
    let det = cs[n - 1].scale(&Rat::from_integer(sign_det.into()));
    let sign_adj = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let adj: PolyMatrix = b_prev
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|p| p.scale(&Rat::from_integer(sign_adj.into())))
                .collect()
        })
        .collect();
    // verify M·adj = det·I
    let prod = mat_mul(m, &adj);
    for (i, row) in prod.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = if i == j { det.clone() } else { MultiPoly::zero() };
            if *entry != expected {
                return Err(Error::InternalConsistency(
                    "adjugate identity M·adj = det·I failed".into(),
                ));
            }
        }
    }
    Ok((det, adj))
}

/// Forward substitution for a lower unitriangular rational system.
pub fn solve_unitriangular(m: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(Error::Domain("dimension mismatch".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if !row[i].is_one() {
            return Err(Error::Domain(format!("diagonal entry {i} is not 1")));
        }
        if row[i + 1..].iter().any(|x| !x.is_zero()) {
            return Err(Error::Domain(format!(
                "row {i} has nonzero entries above the diagonal"
            )));
        }
    }
    let mut x = vec![Rat::zero(); n];
    for i in 0..n {
        let mut acc = b[i].clone();
        for j in 0..i {
            acc -= m[i][j].clone() * x[j].clone();
        }
        x[i] = acc;
    }
    Ok(x)
}

/// Cofactor-expansion determinant for small matrices over any commutative
/// ring with 0 and 1. Exponential in size; intended for n ≤ 7.
pub fn det_small<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
{
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    assert!(n <= 12, "det_small is for small matrices");
    fn rec<T>(m: &[Vec<T>], row: usize, cols: u32) -> T
    where
        T: Clone + Zero + One + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
    {
        let n = m.len();
        if row == n {
            return T::one();
        }
        let mut acc = T::zero();
        let mut sign_pos = true;
        for j in 0..n {
            if cols & (1 << j) != 0 {
                continue;
            }
            let sub = rec(m, row + 1, cols | (1 << j));
            let term = m[row][j].clone() * sub;
            acc = if sign_pos { acc + term } else { acc - term };
            sign_pos = !sign_pos;
        }
        acc
    }
    rec(m, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(rat(n))
    }

    #[test]
    fn char_poly_1x1() {
        let p = char_poly(&[vec![MultiPoly::var(1)]]).unwrap();
        assert_eq!(p.to_string(), "T - r1");
    }

    #[test]
    fn char_poly_k2_transfer_shape() {
        // [[0, 1], [r1+r2, 0]] has characteristic polynomial T^2 − (r1+r2)
        let m = vec![
            vec![MultiPoly::zero(), MultiPoly::one()],
            vec![MultiPoly::var(1) + MultiPoly::var(2), MultiPoly::zero()],
        ];
        let p = char_poly(&m).unwrap();
        assert_eq!(p.to_string(), "T^2 - r1 - r2");
    }

    #[test]
    fn char_poly_matches_point_evaluations() {
        // oracle: det(tI − M) by cofactor expansion at several integers
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..6 {
            let n = 5;
            let m: Vec<Vec<MultiPoly>> = (0..n)
                .map(|_| (0..n).map(|_| c(rng.gen_range(-4..5))).collect())
                .collect();
            let p = char_poly(&m).unwrap();
            for t in 0..=(n as i64 + 1) {
                let shifted: Vec<Vec<Rat>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let mii = m[i][j].eval(&[]);
                                if i == j {
                                    rat(t) - mii
                                } else {
                                    -mii
                                }
                            })
                            .collect()
                    })
                    .collect();
                let brute = det_small(&shifted);
                assert_eq!(p.eval_rat(&rat(t), &[]), brute);
            }
        }
    }

    #[test]
    fn char_poly_of_block_diagonal_is_product() {
        let a = vec![
            vec![c(1), c(2)],
            vec![c(3), c(4)],
        ];
        let b = vec![vec![MultiPoly::var(1)]];
        let mut blk = vec![vec![MultiPoly::zero(); 3]; 3];
        for i in 0..2 {
            for j in 0..2 {
                blk[i][j] = a[i][j].clone();
            }
        }
        blk[2][2] = b[0][0].clone();
        let pa = char_poly(&a).unwrap();
        let pb = char_poly(&b).unwrap();
        let pblk = char_poly(&blk).unwrap();
        assert_eq!(pblk, pa * pb);
    }

    #[test]
    fn adjugate_identity_and_values() {
        let (det, adj) = adjugate_inverse(&identity(3)).unwrap();
        assert!(det.is_one());
        assert_eq!(adj, identity(3));

        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..4 {
            let n = 4;
            let m: Vec<Vec<MultiPoly>> = (0..n)
                .map(|_| (0..n).map(|_| c(rng.gen_range(-3..4))).collect())
                .collect();
            let (det, adj) = adjugate_inverse(&m).unwrap();
            // oracle: rational Gaussian elimination inverse, det·M⁻¹ = adj
            let md: Vec<Vec<Rat>> = m
                .iter()
                .map(|r| r.iter().map(|p| p.eval(&[])).collect())
                .collect();
            let d = det.eval(&[]);
            if d.is_zero() {
                continue;
            }
            let inv = gauss_inverse(&md);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(adj[i][j].eval(&[]), inv[i][j].clone() * d.clone());
                }
            }
        }
    }

    fn gauss_inverse(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
        let n = m.len();
        let mut a: Vec<Vec<Rat>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| if i == j { rat(1) } else { rat(0) }));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular");
            a.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= p.clone();
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..2 * n {
                        let v = a[col][j].clone();
                        a[r][j] -= f.clone() * v;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n..].to_vec()).collect()
    }

    #[test]
    fn specialization_commutes_with_char_poly() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..3 {
            let n = 3;
            let m: Vec<Vec<MultiPoly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            MultiPoly::var(rng.gen_range(1..=2))
                                .scale(&rat(rng.gen_range(-2..3)))
                                + c(rng.gen_range(-2..3))
                        })
                        .collect()
                })
                .collect();
            let p = char_poly(&m).unwrap();
            let vars = [ratio(3, 2), ratio(-1, 3)];
            let spec_then: Vec<Vec<MultiPoly>> = m
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| MultiPoly::constant(x.eval(&vars)))
                        .collect()
                })
                .collect();
            let q = char_poly(&spec_then).unwrap();
            for t in -2..=4 {
                assert_eq!(p.eval_rat(&rat(t), &vars), q.eval_rat(&rat(t), &[]));
            }
        }
    }

    #[test]
    fn unitriangular_solve() {
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let b = vec![rat(5), rat(7)];
        assert_eq!(solve_unitriangular(&id, &b).unwrap(), b);

        let m = vec![vec![rat(1), rat(0)], vec![rat(3), rat(1)]];
        let x = solve_unitriangular(&m, &[rat(2), rat(11)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(5)]);

        let bad = vec![vec![rat(2), rat(0)], vec![rat(0), rat(1)]];
        assert!(solve_unitriangular(&bad, &b).is_err());
        let upper = vec![vec![rat(1), rat(4)], vec![rat(0), rat(1)]];
        assert!(solve_unitriangular(&upper, &b).is_err());
    }

    #[test]
    fn unitriangular_solve_matches_gauss() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..5 {
            let n = 5;
            let mut m = vec![vec![rat(0); n]; n];
            for i in 0..n {
                m[i][i] = rat(1);
                for j in 0..i {
                    m[i][j] = ratio(rng.gen_range(-6..7), rng.gen_range(1..4));
                }
            }
            let b: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-9..10))).collect();
            let x = solve_unitriangular(&m, &b).unwrap();
            let inv = gauss_inverse(&m);
            for i in 0..n {
                let expect: Rat = (0..n).map(|j| inv[i][j].clone() * b[j].clone()).sum();
                assert_eq!(x[i], expect);
            }
        }
    }
}
