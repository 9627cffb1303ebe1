//! Fulton classes of a hypersurface in an abstract smooth ambient variety.
//!
//! The ambient is modeled by the free weighted-graded ring on Chern
//! generators c_1..c_n (weight i) and a hypersurface class X (weight 1),
//! truncated above weight n. Identities proved here are universal polynomial
//! identities in the c_i and X, so checking them in the free ring checks
//! them for every smooth ambient variety at once.

use std::sync::Arc;

use num::BigInt;

use crate::error::{Error, Result};
use crate::euler::theta_power;
use crate::graded::{GradedClass, GradedEnv};
use crate::poly::DensePolynomial;
use crate::ring::{binomial, Ring};

pub type AmbientClass = GradedClass<BigInt>;

/// Polynomial in a formal variable s with coefficients in the ambient ring.
/// `theta` acts on it exactly as on scalar polynomials.
pub type ChowPolynomial = DensePolynomial<AmbientClass>;

/// The free ambient ring of dimension n.
pub struct AmbientRing {
    n: u32,
    env: Arc<GradedEnv>,
}

impl AmbientRing {
    pub fn new(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::DimensionTooSmall { min: 1, got: n });
        }
        let mut gens: Vec<(String, u32)> = (1..=n).map(|i| (format!("c{i}"), i)).collect();
        gens.push(("X".to_string(), 1));
        let env = GradedEnv::new(gens.iter().map(|(s, w)| (s.as_str(), *w)).collect(), n);
        Ok(AmbientRing { n, env })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn env(&self) -> &Arc<GradedEnv> {
        &self.env
    }

    /// c_i for 1 <= i <= n; c_0 is the identity.
    pub fn chern_generator(&self, i: u32) -> AmbientClass {
        if i == 0 {
            return GradedClass::one();
        }
        assert!(i <= self.n);
        GradedClass::generator(&self.env, i as usize - 1)
    }

    /// The hypersurface class X.
    pub fn hypersurface_class(&self) -> AmbientClass {
        GradedClass::generator(&self.env, self.n as usize)
    }

    /// c(TM) = 1 + c_1 + ... + c_n.
    pub fn total_chern_class(&self) -> AmbientClass {
        let mut acc: AmbientClass = GradedClass::one();
        for i in 1..=self.n {
            acc = acc.add(&self.chern_generator(i));
        }
        acc
    }
}

/// Segre class of the regularly embedded hypersurface:
/// X/(1+X) = X - X^2 + X^3 - ... (truncation makes the sum finite).
pub fn segre_class(n: u32) -> Result<AmbientClass> {
    let ring = AmbientRing::new(n)?;
    let x = ring.hypersurface_class();
    let mut acc: AmbientClass = GradedClass::zero();
    let mut power = x.clone();
    for j in 1..=n {
        acc = if j % 2 == 1 { acc.add(&power) } else { acc.sub(&power) };
        power = power.mul(&x);
    }
    Ok(acc)
}

/// Fulton class c_F(X) = c(TM) . s(X, M), truncated above weight n.
/// For smooth X this is the total Chern class of X pushed into the ambient.
pub fn fulton_class(n: u32) -> Result<AmbientClass> {
    let ring = AmbientRing::new(n)?;
    Ok(ring.total_chern_class().mul(&segre_class(n)?))
}

/// The ambient Euler polynomial
/// E_n(s) = c_(n-1) s - c_(n-2) s^2 + ... + (-1)^n c_1 s^(n-1) + (-1)^(n+1) s^n,
/// whose value at s = X is the top (weight-n) Fulton class.
pub fn general_euler_polynomial(n: u32) -> Result<ChowPolynomial> {
    let ring = AmbientRing::new(n)?;
    let mut coeffs: Vec<AmbientClass> = vec![GradedClass::zero(); n as usize + 1];
    for j in 1..=n {
        let c = ring.chern_generator(n - j);
        coeffs[j as usize] = if j % 2 == 1 { c } else { c.neg() };
    }
    Ok(DensePolynomial::new(coeffs))
}

/// Checks the recovery identity: the sum of theta-iterates of the ambient
/// Euler polynomial, evaluated at X, reproduces the full Fulton class.
/// This is an exact symbolic identity in the free graded ring, no sampling.
pub fn verify_identity(n: u32) -> Result<bool> {
    let ring = AmbientRing::new(n)?;
    let x = ring.hypersurface_class();
    let e = general_euler_polynomial(n)?;
    let mut acc: AmbientClass = GradedClass::zero();
    for j in 0..n {
        acc = acc.add(&theta_power(&e, j).eval(&x));
    }
    Ok(acc == fulton_class(n)?)
}

/// Specializes the ambient to P^n: `c_i -> binom(n+1, i) H^i` and `X -> d H`
/// inside `Z[H]/(H^(n+1))`. The result is the pushforward class E_n(H, d).
pub fn specialize_to_projective(n: u32, d: &BigInt) -> Result<AmbientClass> {
    if d < &BigInt::from(1) {
        return Err(Error::DegreeTooSmall { got: d.to_string() });
    }
    let cls = fulton_class(n)?;
    let target = GradedEnv::univariate("H", n);
    let h: AmbientClass = GradedClass::generator(&target, 0);
    let mut images: Vec<AmbientClass> = (1..=n)
        .map(|i| h.pow(i).scale(&binomial(n + 1, i)))
        .collect();
    images.push(h.scale(d));
    Ok(cls.substitute(&images, BigInt::clone))
}

/// Theta-iterates of the ambient Euler polynomial evaluated at X, i.e. the
/// individual Fulton classes read off from the top one.
pub fn fulton_class_from_top(n: u32, j: u32) -> Result<AmbientClass> {
    let ring = AmbientRing::new(n)?;
    let e = general_euler_polynomial(n)?;
    Ok(theta_power(&e, j).eval(&ring.hypersurface_class()))
}

/// Convenience for tests and examples: the specialized Euler-polynomial
/// statement `E_n(X) = top Fulton class` lives at weight n.
pub fn top_fulton_class(n: u32) -> Result<AmbientClass> {
    Ok(fulton_class(n)?.weight_component(n))
}

/// The expected ladder rung: the weight-(k+1) component of the Fulton class
/// is c_k X - c_(k-1) X^2 + ... + (-1)^(k+1) X^(k+1).
pub fn ladder_rung(n: u32, k: u32) -> Result<AmbientClass> {
    let ring = AmbientRing::new(n)?;
    let x = ring.hypersurface_class();
    let mut acc: AmbientClass = GradedClass::zero();
    for i in 0..=k {
        let term = ring.chern_generator(k - i).mul(&x.pow(i + 1));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::chern_polynomial;
    use crate::graded::GradedClass;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn segre_small_cases() {
        let ring = AmbientRing::new(3).unwrap();
        let x = ring.hypersurface_class();
        let expected = x.sub(&x.pow(2)).add(&x.pow(3));
        assert_eq!(segre_class(3).unwrap(), expected);
        assert_eq!(segre_class(1).unwrap(), AmbientRing::new(1).unwrap().hypersurface_class());
    }

    #[test]
    fn segre_defining_identity() {
        // (1 + X) * s(X, M) = X in the truncated ring
        for n in 1..=10 {
            let ring = AmbientRing::new(n).unwrap();
            let x = ring.hypersurface_class();
            let one_plus_x = GradedClass::one().add(&x);
            assert_eq!(one_plus_x.mul(&segre_class(n).unwrap()), x, "n={n}");
        }
    }

    #[test]
    fn fulton_class_small_cases() {
        assert_eq!(
            fulton_class(1).unwrap(),
            AmbientRing::new(1).unwrap().hypersurface_class()
        );
        let ring = AmbientRing::new(2).unwrap();
        let x = ring.hypersurface_class();
        let expected = x.add(&ring.chern_generator(1).mul(&x)).sub(&x.pow(2));
        assert_eq!(fulton_class(2).unwrap(), expected);
    }

    #[test]
    fn proof_ladder_weight_three() {
        // weight-3 component for n = 3: c2 X - c1 X^2 + X^3
        let rung = ladder_rung(3, 2).unwrap();
        assert_eq!(fulton_class(3).unwrap().weight_component(3), rung);
    }

    #[test]
    fn proof_ladder_all_components() {
        for n in 1..=8u32 {
            let full = fulton_class(n).unwrap();
            for k in 0..n {
                assert_eq!(
                    full.weight_component(k + 1),
                    ladder_rung(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn general_polynomial_small_cases() {
        let e1 = general_euler_polynomial(1).unwrap();
        assert_eq!(e1.degree(), Some(1));
        assert_eq!(e1.coeff(1), GradedClass::one());
        let e2 = general_euler_polynomial(2).unwrap();
        let ring = AmbientRing::new(2).unwrap();
        assert_eq!(e2.coeff(1), ring.chern_generator(1));
        assert_eq!(e2.coeff(2), GradedClass::one().neg());
    }

    #[test]
    fn top_class_is_euler_value() {
        for n in 1..=8 {
            let ring = AmbientRing::new(n).unwrap();
            let e = general_euler_polynomial(n).unwrap();
            assert_eq!(
                e.eval(&ring.hypersurface_class()),
                top_fulton_class(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn recovery_identity_holds() {
        for n in 1..=8 {
            assert!(verify_identity(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn theta_iterates_recover_components() {
        for n in 1..=8u32 {
            let full = fulton_class(n).unwrap();
            for j in 0..n {
                assert_eq!(
                    fulton_class_from_top(n, j).unwrap(),
                    full.weight_component(n - j),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn specialization_small_cases() {
        // n=2: d H + (3d - d^2) H^2
        for d in 1..=10i64 {
            let cls = specialize_to_projective(2, &int(d)).unwrap();
            assert_eq!(cls.univariate_coefficient(1), int(d));
            assert_eq!(cls.univariate_coefficient(2), int(3 * d - d * d));
        }
        let p1 = specialize_to_projective(1, &int(7)).unwrap();
        assert_eq!(p1.univariate_coefficient(1), int(7));
    }

    #[test]
    fn specialization_matches_class_polynomial() {
        let env = GradedEnv::univariate("H", 4);
        let h: AmbientClass = GradedClass::generator(&env, 0);
        let t = GradedClass::constant(int(5));
        let via_bivariate = chern_polynomial(4).unwrap().eval_in(&h, &t);
        assert_eq!(specialize_to_projective(4, &int(5)).unwrap(), via_bivariate);
        // the quintic keeps a nonzero H^3 term: gamma_2 * d = 50
        assert_eq!(via_bivariate.univariate_coefficient(3), int(50));
    }

    #[test]
    fn specialization_sweep() {
        for n in 1..=8u32 {
            let env = GradedEnv::univariate("H", n);
            let h: AmbientClass = GradedClass::generator(&env, 0);
            let poly = chern_polynomial(n).unwrap();
            for d in 1..=10i64 {
                let t = GradedClass::constant(int(d));
                assert_eq!(
                    specialize_to_projective(n, &int(d)).unwrap(),
                    poly.eval_in(&h, &t),
                    "n={n} d={d}"
                );
            }
        }
    }
}
