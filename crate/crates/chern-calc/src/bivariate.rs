//! Bivariate integer polynomials in (s, t), stored sparsely.
//!
//! Canonical form: no zero coefficients are kept, so structural equality is
//! value equality. The s-variable tracks codimension (or dimension, for the
//! dual form) and t tracks the hypersurface degree.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::poly::DensePolynomial;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivariatePolynomial {
    // (s exponent, t exponent) -> nonzero coefficient
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, s_exp: u32, t_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((s_exp, t_exp)).or_insert_with(|| BigInt::from(0));
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(s_exp, t_exp));
        }
    }

    /// Builds `sum_j polys[j](t) * s^(j + offset)`.
    pub fn from_s_coefficients(polys: &[DensePolynomial<BigInt>], offset: u32) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (j, p) in polys.iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                out.insert(j as u32 + offset, k as u32, c.clone());
            }
        }
        out
    }

    pub fn coefficient(&self, s_exp: u32, t_exp: u32) -> BigInt {
        self.terms.get(&(s_exp, t_exp)).cloned().unwrap_or_else(|| BigInt::from(0))
    }

    /// The coefficient of s^j, as a polynomial in t.
    pub fn coeff_of_s(&self, j: u32) -> DensePolynomial<BigInt> {
        let max_t = self
            .terms
            .keys()
            .filter(|(s, _)| *s == j)
            .map(|(_, t)| *t)
            .max();
        let Some(max_t) = max_t else {
            return DensePolynomial::zero();
        };
        let mut coeffs = vec![BigInt::from(0); max_t as usize + 1];
        for ((s, t), c) in &self.terms {
            if *s == j {
                coeffs[*t as usize] = c.clone();
            }
        }
        DensePolynomial::new(coeffs)
    }

    pub fn s_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(s, _)| *s).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, t)| *t).max()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((s, t), c) in &rhs.terms {
            out.insert(*s, *t, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = BivariatePolynomial::zero();
        for ((s1, t1), c1) in &self.terms {
            for ((s2, t2), c2) in &rhs.terms {
                out.insert(s1 + s2, t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// Evaluates in an arbitrary ring by substituting values for s and t.
    pub fn eval_in<R: Ring>(&self, s: &R, t: &R) -> R {
        let mut acc = R::zero();
        for ((se, te), c) in &self.terms {
            let term = R::from_bigint(c).mul(&s.pow(*se)).mul(&t.pow(*te));
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes t = d, leaving a univariate polynomial in s.
    pub fn eval_t(&self, d: &BigInt) -> DensePolynomial<BigInt> {
        let Some(sd) = self.s_degree() else {
            return DensePolynomial::zero();
        };
        let mut coeffs = vec![BigInt::from(0); sd as usize + 1];
        for ((s, t), c) in &self.terms {
            coeffs[*s as usize] += c * Ring::pow(d, *t);
        }
        DensePolynomial::new(coeffs)
    }

    /// View as a polynomial in s whose coefficients are polynomials in t.
    pub fn to_s_major(&self) -> DensePolynomial<DensePolynomial<BigInt>> {
        let Some(sd) = self.s_degree() else {
            return DensePolynomial::zero();
        };
        DensePolynomial::new((0..=sd).map(|j| self.coeff_of_s(j)).collect())
    }

    pub fn from_s_major(p: &DensePolynomial<DensePolynomial<BigInt>>) -> Self {
        let mut out = BivariatePolynomial::zero();
        for (j, q) in p.coeffs().iter().enumerate() {
            for (k, c) in q.coeffs().iter().enumerate() {
                out.insert(j as u32, k as u32, c.clone());
            }
        }
        out
    }

    /// Renders with the given variable names, s-major with ascending degrees.
    pub fn display(&self, s_var: &str, t_var: &str, ascending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sd = self.s_degree().unwrap();
        let mut out = String::new();
        for j in 0..=sd {
            let p = self.coeff_of_s(j);
            if p.is_zero() {
                continue;
            }
            let coeff = p.display(t_var, ascending);
            let body = if coeff[1..].contains(['+', '-', ' ']) && j > 0 {
                format!("({coeff})")
            } else {
                coeff
            };
            let term = match j {
                0 => body,
                1 => format!("{body}*{s_var}"),
                _ => format!("{body}*{s_var}^{j}"),
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("s", "t", true))
    }
}
