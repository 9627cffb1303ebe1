//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! Coefficients are stored by ascending degree with no trailing zeros, so the
//! zero polynomial is the empty list and equality is plain structural
//! equality. The variable name is not part of the value; display code chooses
//! it (`t`, `s`, `d`, `y`, ...).

use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct DensePolynomial<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> DensePolynomial<C> {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros to keep the representation canonical.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePolynomial::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        DensePolynomial::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return DensePolynomial::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        DensePolynomial { coeffs }
    }

    /// The variable itself, `x`.
    pub fn var() -> Self {
        DensePolynomial::monomial(C::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        DensePolynomial::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DensePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        DensePolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        DensePolynomial::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = DensePolynomial::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, x: &C) -> C {
        self.eval_in(x, |c| c.clone())
    }

    /// Horner evaluation in another ring through a coefficient embedding.
    pub fn eval_in<R: Ring>(&self, x: &R, lift: impl Fn(&C) -> R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> DensePolynomial<D> {
        DensePolynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Long division; requires an invertible leading coefficient in the divisor.
    pub fn divmod(&self, den: &Self) -> Result<(Self, Self)> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let lead_inv = den
            .leading()
            .unwrap()
            .inv()
            .ok_or_else(|| Error::NotInvertible(format!("leading coefficient {}", den.leading().unwrap())))?;
        let dd = den.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            rem = rem.sub(&den.mul(&DensePolynomial::monomial(q.clone(), shift)));
            quot[shift] = q;
        }
        Ok((DensePolynomial::new(quot), rem))
    }

    /// Exact quotient; rejects a nonzero remainder and reports it.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        let (q, r) = self.divmod(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision {
                remainder: r.to_string(),
            })
        }
    }

    /// Termwise derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&C::from_int(k as i64)))
            .collect();
        DensePolynomial::new(coeffs)
    }

    pub fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str, ascending: bool) -> fmt::Result {
        write!(f, "{}", self.display(var, ascending))
    }

    /// Renders the polynomial as a string; `ascending` controls term order.
    pub fn display(&self, var: &str, ascending: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<(usize, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push((k, format_term(&c.to_string(), var, k)));
        }
        if !ascending {
            parts.reverse();
        }
        let mut out = String::new();
        for (i, (_, term)) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        out
    }
}

fn format_term(coeff: &str, var: &str, k: usize) -> String {
    // Compound coefficients (anything with internal +/-/space) get wrapped so
    // the printed sum stays unambiguous.
    let needs_parens = coeff[1..].contains(['+', '-', ' ', '/']);
    let body = if needs_parens {
        format!("({coeff})")
    } else {
        coeff.to_string()
    };
    match k {
        0 => body,
        _ => {
            let v = if k == 1 {
                var.to_string()
            } else {
                format!("{var}^{k}")
            };
            if body == "1" {
                v
            } else if body == "-1" {
                format!("-{v}")
            } else {
                format!("{body}*{v}")
            }
        }
    }
}

impl<C: Ring> fmt::Debug for DensePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x", true)
    }
}

impl<C: Ring> fmt::Display for DensePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x", true)
    }
}

impl<C: Ring> Ring for DensePolynomial<C> {
    fn zero() -> Self {
        DensePolynomial::zero()
    }

    fn one() -> Self {
        DensePolynomial::one()
    }

    fn from_bigint(n: &BigInt) -> Self {
        DensePolynomial::constant(C::from_bigint(n))
    }

    fn is_zero(&self) -> bool {
        DensePolynomial::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        DensePolynomial::add(self, rhs)
    }

    fn neg(&self) -> Self {
        DensePolynomial::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        DensePolynomial::mul(self, rhs)
    }

    fn inv(&self) -> Option<Self> {
        // Units of R[x] over an integral domain are the unit constants.
        if self.degree() == Some(0) {
            self.coeffs[0].inv().map(DensePolynomial::constant)
        } else {
            None
        }
    }
}

/// Monic gcd over a field-like coefficient ring (every nonzero leading
/// coefficient invertible). Returns zero only when both inputs are zero.
pub fn gcd_monic<C: Ring>(a: &DensePolynomial<C>, b: &DensePolynomial<C>) -> DensePolynomial<C> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let lead_inv = b.leading().unwrap().inv().expect("gcd needs invertible leading coefficients");
        let monic_b = b.scale(&lead_inv);
        let (_, r) = a.divmod(&monic_b).expect("divmod by monic polynomial");
        a = monic_b;
        b = r;
    }
    match a.leading().and_then(|c| c.inv()) {
        Some(inv) => a.scale(&inv),
        None => a,
    }
}
