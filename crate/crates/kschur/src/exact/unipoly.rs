//! Univariate polynomials in T with MultiPoly coefficients, constant term
//! first. These carry Ξ(T), the P_κ(T) and ζ(T).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::Zero;

use super::{MultiPoly, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<MultiPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<MultiPoly>) -> Self {
        while coeffs.last().map(MultiPoly::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(p: MultiPoly) -> Self {
        UniPoly::new(vec![p])
    }

    /// The monomial c·T^n.
    pub fn term(c: MultiPoly, n: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(); n + 1];
        coeffs[n] = c;
        UniPoly::new(coeffs)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> MultiPoly {
        self.coeffs.get(n).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_rat(&self, t: &Rat, vars: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.eval(vars);
        }
        acc
    }

    pub fn eval_f64(&self, t: f64, vars: &[f64]) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c.eval_f64(vars);
        }
        acc
    }

    /// Specializes the r variables, leaving a polynomial in T alone
    /// (returned as constant-first rational coefficients).
    pub fn specialize(&self, vars: &[Rat]) -> Vec<Rat> {
        self.coeffs.iter().map(|c| c.eval(vars)).collect()
    }

    pub fn reverse_vars(&self, k: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.reverse_vars(k)).collect())
    }

    pub fn scale(&self, c: &MultiPoly) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|x| x.clone() * c.clone())
                .collect(),
        )
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            coeffs.push(a + b);
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            coeffs.push(a - b);
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![MultiPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = std::mem::take(&mut coeffs[i + j]) + a.clone() * b.clone();
            }
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        for n in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[n];
            if c.is_zero() {
                continue;
            }
            let base = match n {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{n}"),
            };
            let token = if n == 0 {
                c.to_string()
            } else if c.is_one() {
                base
            } else if (-c.clone()).is_one() {
                format!("-{base}")
            } else if c.num_terms() == 1 {
                format!("{c}*{base}")
            } else if c.to_string().starts_with('-') {
                // all-negative leading term: pull the sign out front
                format!("-({})*{base}", -c.clone())
            } else {
                format!("({c})*{base}")
            };
            if first {
                s.push_str(&token);
                first = false;
            } else if let Some(rest) = token.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(&token);
            }
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        // (T - r1)(T + r1) = T^2 - r1^2
        let a = UniPoly::new(vec![-MultiPoly::var(1), MultiPoly::one()]);
        let b = UniPoly::new(vec![MultiPoly::var(1), MultiPoly::one()]);
        let p = a * b;
        assert_eq!(p.coeff(1), MultiPoly::zero());
        assert_eq!(p.coeff(2), MultiPoly::one());
        assert_eq!(p.eval_rat(&rat(3), &[rat(2)]), rat(5));
    }

    #[test]
    fn display_matches_golden_style() {
        let xi2 = UniPoly::new(vec![
            -(MultiPoly::var(1) + MultiPoly::var(2)),
            MultiPoly::zero(),
            MultiPoly::one(),
        ]);
        assert_eq!(xi2.to_string(), "T^2 - r1 - r2");
        let p = UniPoly::new(vec![
            MultiPoly::constant(rat(2)),
            MultiPoly::var(2),
            MultiPoly::constant(rat(-3)),
        ]);
        assert_eq!(p.to_string(), "-3*T^2 + r2*T + 2");
    }
}
