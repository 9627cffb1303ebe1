//! Formal power series truncated at a fixed order.
//!
//! A `TruncatedSeries` stores the coefficients of s^0 .. s^order and nothing
//! else: the value is the series modulo s^(order+1). Invariants:
//! - `coeffs.len() == order + 1` always (zeros are stored, not elided);
//! - binary operations return the minimum of the two orders;
//! - no operation ever reads past the stated order.
//!
//! `exp`, `log` and `div` are partial: they check their constant-term
//! preconditions and report the offending coefficient instead of guessing.

use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    /// Builds a series from ascending coefficients; the order is `len - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate_to(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries::from_fn(n, |i| self.coeffs[i].add(&rhs.coeffs[i]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries::from_fn(n, |i| self.coeffs[i].sub(&rhs.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries::from_fn(n, |k| {
            let mut acc = C::zero();
            for i in 0..=k {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&rhs.coeffs[k - i]));
            }
            acc
        })
    }

    /// Multiplies by s^k; every coefficient shifts up and the order grows by
    /// k, since the product mod s^(order+k+1) is determined by the input.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative needs at least order 1");
        TruncatedSeries::from_fn(self.order() - 1, |i| {
            self.coeffs[i + 1].mul(&C::from_int(i as i64 + 1))
        })
    }

    /// Coefficientwise (Hadamard) product; order is the minimum of the two.
    pub fn hadamard(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries::from_fn(n, |i| self.coeffs[i].mul(&rhs.coeffs[i]))
    }

    /// Series exponential of a series with zero constant term.
    ///
    /// The coefficient ring must contain the rationals: each step divides by
    /// the loop index, and a non-invertible integer is rejected.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm {
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut acc = TruncatedSeries::one(n);
        let mut term = TruncatedSeries::one(n);
        for k in 1..=n {
            let k_inv = C::from_int(k as i64)
                .inv()
                .ok_or_else(|| Error::NotInvertible(format!("{k} (the coefficient ring must contain the rationals)")))?;
            term = term.mul(self).scale(&k_inv);
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm {
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let g = self.sub(&TruncatedSeries::one(n)); // zero constant term
        let mut acc = TruncatedSeries::zero(n);
        let mut power = TruncatedSeries::one(n);
        for k in 1..=n {
            let k_inv = C::from_int(k as i64)
                .inv()
                .ok_or_else(|| Error::NotInvertible(format!("{k} (the coefficient ring must contain the rationals)")))?;
            power = power.mul(&g);
            let signed = if k % 2 == 1 { power.clone() } else { power.neg() };
            acc = acc.add(&signed.scale(&k_inv));
        }
        Ok(acc)
    }

    /// Quotient `self / rhs` for an `rhs` whose constant term is a unit.
    ///
    /// Division by a series with zero or nilpotent constant term is refused;
    /// callers factor out powers of s (or the nilpotent part) first.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let c0_inv = rhs.coeffs[0].inv().ok_or_else(|| Error::SeriesDivision {
            found: rhs.coeffs[0].to_string(),
        })?;
        let n = self.common_order(rhs);
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, h) in out.iter().enumerate() {
                acc = acc.sub(&h.mul(&rhs.coeffs[k - j]));
            }
            out.push(acc.mul(&c0_inv));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<C: Ring> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*s")?,
                _ => write!(f, "({c})*s^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order() + 1)
    }
}

/// The series s/(1 - e^(-s)) up to the requested order; its coefficients are
/// the Bernoulli-type rationals 1, 1/2, 1/12, 0, -1/720, ...
pub fn todd_unit_series(order: usize) -> TruncatedSeries<num::BigRational> {
    use num::BigRational;
    // 1 - e^(-s) = s * E(s) with E(s) = sum_{k>=0} (-s)^k / (k+1)!
    let mut factorial = BigInt::from(1);
    let e = TruncatedSeries::from_fn(order, |k| {
        factorial *= BigInt::from(k as i64 + 1);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        BigRational::new(BigInt::from(sign), factorial.clone())
    });
    TruncatedSeries::one(order).div(&e).expect("E(0) = 1 is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{BigInt, BigRational};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qs(coeffs: &[(i64, i64)]) -> TruncatedSeries<BigRational> {
        TruncatedSeries::new(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn exp_identity_case() {
        let z = TruncatedSeries::<BigRational>::zero(2);
        assert_eq!(z.exp().unwrap(), TruncatedSeries::one(2));
    }

    #[test]
    fn exp_hand_expansion() {
        // exp(s + s^2) mod s^3 = 1 + s + 3/2 s^2
        let f = qs(&[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(f.exp().unwrap(), qs(&[(1, 1), (1, 1), (3, 2)]));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let f = qs(&[(2, 1), (1, 1)]);
        let err = f.exp().unwrap_err();
        assert!(err.to_string().contains('2'));
    }

    #[test]
    fn exp_needs_rational_coefficients() {
        // over Z the division by 2! already fails
        let f = TruncatedSeries::new(vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]);
        let err = f.exp().unwrap_err();
        assert!(err.to_string().contains("rationals"));
    }

    #[test]
    fn log_identity_and_mercator() {
        let one = TruncatedSeries::<BigRational>::one(3);
        assert!(one.log().unwrap().is_zero());
        // log(1+s) mod s^4 = s - s^2/2 + s^3/3
        let f = qs(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(f.log().unwrap(), qs(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
    }

    #[test]
    fn log_rejects_non_unit_constant() {
        let f = qs(&[(2, 1), (1, 1)]);
        assert!(f.log().is_err());
    }

    #[test]
    fn div_geometric_series() {
        // s / (1 - s) mod s^4 = s + s^2 + s^3
        let num = qs(&[(0, 1), (1, 1), (0, 1), (0, 1)]);
        let den = qs(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(num.div(&den).unwrap(), qs(&[(0, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn div_by_one_is_identity() {
        let f = qs(&[(3, 1), (5, 2), (7, 3)]);
        assert_eq!(f.div(&TruncatedSeries::one(2)).unwrap(), f);
    }

    #[test]
    fn div_rejects_zero_constant() {
        let f = qs(&[(1, 1), (1, 1)]);
        let den = qs(&[(0, 1), (1, 1)]);
        assert!(f.div(&den).is_err());
    }

    #[test]
    fn derivative_examples() {
        let f = qs(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(f.derivative(), qs(&[(2, 1), (6, 1)]));
        assert!(TruncatedSeries::<BigRational>::one(1).derivative().is_zero());
    }

    #[test]
    fn hadamard_footnote_example() {
        let f = qs(&[(1, 1), (2, 1), (3, 1)]);
        let g = qs(&[(5, 1), (7, 1)]);
        assert_eq!(f.hadamard(&g), qs(&[(5, 1), (14, 1)]));
        assert!(f.hadamard(&TruncatedSeries::zero(2)).is_zero());
    }

    #[test]
    fn hadamard_scalar_against_class_valued() {
        use crate::graded::{GradedClass, GradedEnv};
        // a scalar-valued series is lifted into the class ring, where the
        // coefficientwise products are defined
        let env = GradedEnv::univariate("h", 2);
        let h: GradedClass<BigRational> = GradedClass::generator(&env, 0);
        let classes = TruncatedSeries::new(vec![
            GradedClass::one(),
            h.clone(),
            h.mul(&h),
        ]);
        let scalars = qs(&[(3, 1), (5, 1), (7, 1)]);
        let lifted = scalars.map(|c| GradedClass::constant(c.clone()));
        let product = lifted.hadamard(&classes);
        assert_eq!(product.coeff(1), &h.scale(&q(5, 1)));
        assert_eq!(product.coeff(2), &h.mul(&h).scale(&q(7, 1)));
    }

    #[test]
    fn binary_ops_take_min_order() {
        let f = qs(&[(1, 1), (2, 1), (3, 1)]);
        let g = qs(&[(5, 1), (7, 1)]);
        assert_eq!(f.add(&g).order(), 1);
        assert_eq!(f.mul(&g).order(), 1);
        assert_eq!(f.hadamard(&g).order(), 1);
    }

    #[test]
    fn todd_series_low_coefficients() {
        let t = todd_unit_series(3);
        assert_eq!(t.coeff(0), &q(1, 1));
        assert_eq!(t.coeff(1), &q(1, 2));
        assert_eq!(t.coeff(2), &q(1, 12));
        assert_eq!(t.coeff(3), &q(0, 1));
    }
}
