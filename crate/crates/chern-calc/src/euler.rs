//! Euler polynomials of projective hypersurfaces and everything recoverable
//! from them: pushed-forward Chern classes, Chern numbers, Euler
//! characteristics of general hyperplane sections, and the threefold Hodge
//! numbers.
//!
//! The n-th Euler polynomial E_n satisfies E_n(d) = chi(X) for a smooth
//! degree-d hypersurface X in P^n. The map `theta` walks down the tower of
//! pushed-forward Chern classes starting from the top one, which is the whole
//! point: a single univariate polynomial carries all of them.

use num::{BigInt, BigRational, Signed};

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::graded::{GradedClass, GradedEnv};
use crate::poly::DensePolynomial;
use crate::ring::{binomial, div_exact, to_integer, Ring};

pub type IntPoly = DensePolynomial<BigInt>;

/// The map that keeps only the terms of degree greater than one and divides
/// by -t: a_n t^n + ... + a_0 |-> -(a_n t^(n-1) + ... + a_2 t).
///
/// Linear over any coefficient ring; the degree drops by exactly one when
/// deg p >= 2 and the result is zero when deg p <= 1.
pub fn theta<C: Ring>(p: &DensePolynomial<C>) -> DensePolynomial<C> {
    match p.degree() {
        None | Some(0) | Some(1) => DensePolynomial::zero(),
        Some(deg) => {
            let coeffs = std::iter::once(C::zero())
                .chain((2..=deg).map(|k| p.coeff(k).neg()))
                .collect();
            DensePolynomial::new(coeffs)
        }
    }
}

/// k-fold composition of `theta`.
pub fn theta_power<C: Ring>(p: &DensePolynomial<C>, k: u32) -> DensePolynomial<C> {
    let mut out = p.clone();
    for _ in 0..k {
        out = theta(&out);
    }
    out
}

/// The n-th Euler polynomial together with its dimension tag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerPolynomial {
    n: u32,
    poly: IntPoly,
}

impl EulerPolynomial {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.poly
    }

    /// chi of the degree-d hypersurface in P^n.
    pub fn evaluate(&self, d: &BigInt) -> BigInt {
        self.poly.eval(d)
    }

    /// theta^k applied to the polynomial.
    pub fn theta_power(&self, k: u32) -> IntPoly {
        theta_power(&self.poly, k)
    }
}

/// E_n(t) = - sum_{k=0}^{n-1} binom(n+1, k) (-t)^(n-k).
pub fn euler_polynomial(n: u32) -> Result<EulerPolynomial> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { min: 1, got: n });
    }
    let mut coeffs = vec![BigInt::from(0); n as usize + 1];
    for k in 0..n {
        // term: -binom(n+1, k) * (-1)^(n-k) * t^(n-k)
        let sign = if (n - k).is_multiple_of(2) { -1 } else { 1 };
        coeffs[(n - k) as usize] = binomial(n + 1, k) * BigInt::from(sign);
    }
    Ok(EulerPolynomial {
        n,
        poly: DensePolynomial::new(coeffs),
    })
}

fn check_degree(d: &BigInt) -> Result<()> {
    if d < &BigInt::from(1) {
        return Err(Error::DegreeTooSmall { got: d.to_string() });
    }
    Ok(())
}

/// The bivariate class polynomial: sum_{j=1}^{n} theta^(n-j)(E_n)(t) s^j.
/// Its coefficient of s^j, evaluated at t = d and multiplied by H^j, is the
/// pushforward of the (j-1)-st Chern class of the hypersurface.
pub fn chern_polynomial(n: u32) -> Result<BivariatePolynomial> {
    let e = euler_polynomial(n)?;
    let polys: Vec<IntPoly> = (1..=n).map(|j| e.theta_power(n - j)).collect();
    Ok(BivariatePolynomial::from_s_coefficients(&polys, 1))
}

/// Same data with s tracking dimension instead of codimension:
/// sum_{j=1}^{n} theta^(n-j)(E_n)(t) s^(n-j).
pub fn dual_chern_polynomial(n: u32) -> Result<BivariatePolynomial> {
    let e = euler_polynomial(n)?;
    let polys: Vec<IntPoly> = (0..n).map(|k| e.theta_power(k)).collect();
    Ok(BivariatePolynomial::from_s_coefficients(&polys, 0))
}

/// Chern data of a smooth degree-d hypersurface in P^n, computed by classical
/// adjunction: `c(TX) = (1+h)^(n+1) / (1+dh)` in `Q[h]/(h^n)`, with the
/// integration normalization `int h^(n-1) = d`. This is the independent
/// oracle the theta-based route is checked against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernData {
    n: u32,
    d: BigInt,
    gamma: Vec<BigInt>,
}

impl ChernData {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// gamma_k with c_k(X) = gamma_k h^k; gamma_0 = 1.
    pub fn gamma(&self) -> &[BigInt] {
        &self.gamma
    }

    /// Coefficient of H^(k+1) in the pushforward: gamma_k * d.
    pub fn pushforward(&self, k: usize) -> BigInt {
        &self.gamma[k] * &self.d
    }

    /// The intrinsic class `c_k(X) = gamma_k h^k` in `Z[h]/(h^n)`, where the
    /// integration functional is `int h^(n-1) = d`.
    pub fn chern_class(&self, k: usize) -> GradedClass<BigInt> {
        let env = GradedEnv::univariate("h", self.n - 1);
        GradedClass::monomial(&env, vec![k as u32], self.gamma[k].clone())
    }
}

pub fn chern_oracle(n: u32, d: &BigInt) -> Result<ChernData> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { min: 1, got: n });
    }
    check_degree(d)?;
    let env = GradedEnv::univariate("h", n - 1);
    let h: GradedClass<BigRational> = GradedClass::generator(&env, 0);
    let one = GradedClass::one();
    let numerator = one.add(&h).pow(n + 1);
    let denominator = one.add(&h.scale(&BigRational::from_integer(d.clone())));
    let total = numerator.mul(&denominator.inv().expect("constant term 1"));
    let gamma = (0..n)
        .map(|k| {
            let c = total.univariate_coefficient(k);
            to_integer(&c).ok_or_else(|| Error::NonIntegerValue { found: c.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChernData {
        n,
        d: d.clone(),
        gamma,
    })
}

/// A partition stored weakly decreasing; parts are positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::PartitionPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Bracketed ascending display, e.g. `"[1,2]"`; this is the serialization
    /// key format as well.
    pub fn label(&self) -> String {
        let mut asc: Vec<u32> = self.parts.clone();
        asc.reverse();
        let inner: Vec<String> = asc.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All partitions of m in descending-lexicographic order; partitions_of(0)
/// is the single empty partition.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=rest.min(max_part)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m.max(1), &mut Vec::new(), &mut out);
    out
}

fn check_partition(n: u32, p: &Partition) -> Result<()> {
    if p.sum() != n - 1 {
        return Err(Error::PartitionSum {
            partition: p.label(),
            expected: n - 1,
        });
    }
    Ok(())
}

/// The Chern number int_X c_{j_1} ... c_{j_m} for a partition (j_i) of n-1:
/// d * prod_i (theta^(n-(j_i+1))(E_n)(d) / d). Each factor's divisibility by
/// d is exact because t divides every theta iterate of E_n.
pub fn chern_number(n: u32, d: &BigInt, p: &Partition) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { min: 1, got: n });
    }
    check_degree(d)?;
    check_partition(n, p)?;
    let e = euler_polynomial(n)?;
    let mut acc = d.clone();
    for &j in p.parts() {
        let factor = e.theta_power(n - (j + 1)).eval(d);
        acc *= div_exact(&factor, d)?;
    }
    Ok(acc)
}

/// The literal product prod_i theta^(n-(j_i+1))(E_n)(d), i.e. the product of
/// pushforward degrees. It carries one factor of d per part, so it equals
/// d^(#parts - 1) times the Chern number.
pub fn corollary_product(n: u32, d: &BigInt, p: &Partition) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::DimensionTooSmall { min: 1, got: n });
    }
    check_degree(d)?;
    check_partition(n, p)?;
    let e = euler_polynomial(n)?;
    let mut acc = BigInt::from(1);
    for &j in p.parts() {
        acc *= e.theta_power(n - (j + 1)).eval(d);
    }
    Ok(acc)
}

/// The hyperplane-section polynomial
/// e_n(s,t) = (s * Ev_n(-s-1, t) + Ev_n(0, t)) / (s + 1),
/// where Ev_n is the dual class polynomial. The division is exact: the
/// numerator vanishes identically at s = -1.
pub fn section_euler_polynomial(n: u32) -> Result<BivariatePolynomial> {
    let dual = dual_chern_polynomial(n)?.to_s_major();
    // substitute s -> -s - 1 inside Z[t][s]
    let neg_s_minus_one: DensePolynomial<IntPoly> = DensePolynomial::new(vec![
        IntPoly::constant(BigInt::from(-1)),
        IntPoly::constant(BigInt::from(-1)),
    ]);
    let shifted = dual.eval_in(&neg_s_minus_one, |c| DensePolynomial::constant(c.clone()));
    let s: DensePolynomial<IntPoly> = DensePolynomial::var();
    let constant_part = DensePolynomial::constant(dual.coeff(0));
    let numerator = s.mul(&shifted).add(&constant_part);
    let s_plus_one: DensePolynomial<IntPoly> =
        DensePolynomial::new(vec![IntPoly::one(), IntPoly::one()]);
    let quotient = numerator.div_exact(&s_plus_one).map_err(|e| {
        Error::Internal(format!("hyperplane-section division must be exact: {e}"))
    })?;
    Ok(BivariatePolynomial::from_s_major(&quotient))
}

/// chi_r = (-1)^r [s^r] e_n(s, d): the Euler characteristics of X and of its
/// successive general hyperplane sections, ending in d points.
pub fn section_euler_values(n: u32, d: &BigInt) -> Result<Vec<BigInt>> {
    check_degree(d)?;
    let e = section_euler_polynomial(n)?;
    let at_d = e.eval_t(d);
    Ok((0..n)
        .map(|r| {
            let c = at_d.coeff(r as usize);
            if r % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect())
}

/// The two possibly nonzero Hodge numbers (h^{0,3}, h^{1,2}) of a smooth
/// degree-d threefold in P^4:
/// h03 = 1 - c1c2/24 and h12 = c1c2/24 - (E_4(d) - 2)/2, with c1c2 the
/// honest intersection number.
pub fn hodge_numbers_threefold(d: &BigInt) -> Result<(BigInt, BigInt)> {
    check_degree(d)?;
    let c1c2 = chern_number(4, d, &Partition::new(vec![1, 2])?)?;
    let chi = euler_polynomial(4)?.evaluate(d);
    let c1c2_over_24 = div_exact(&c1c2, &BigInt::from(24))?;
    let half_chi_defect = div_exact(&(chi - BigInt::from(2)), &BigInt::from(2))?;
    let h03 = BigInt::from(1) - &c1c2_over_24;
    let h12 = c1c2_over_24 - half_chi_defect;
    debug_assert!(!h03.is_negative() && !h12.is_negative());
    Ok((h03, h12))
}

/// E_n(H, d) as an element of `Z[H]/(H^(n+1))`: the pushforward of the total
/// Chern class of the degree-d hypersurface.
pub fn pushforward_total_class(n: u32, d: &BigInt) -> Result<GradedClass<BigInt>> {
    check_degree(d)?;
    let env = GradedEnv::univariate("H", n);
    let h: GradedClass<BigInt> = GradedClass::generator(&env, 0);
    let t = GradedClass::constant(d.clone());
    Ok(chern_polynomial(n)?.eval_in(&h, &t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn ipoly(coeffs: &[i64]) -> IntPoly {
        DensePolynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn euler_polynomial_small_n() {
        assert_eq!(euler_polynomial(1).unwrap().polynomial(), &ipoly(&[0, 1]));
        assert_eq!(euler_polynomial(2).unwrap().polynomial(), &ipoly(&[0, 3, -1]));
        assert_eq!(euler_polynomial(3).unwrap().polynomial(), &ipoly(&[0, 6, -4, 1]));
        assert_eq!(
            euler_polynomial(4).unwrap().polynomial(),
            &ipoly(&[0, 10, -10, 5, -1])
        );
        assert!(euler_polynomial(0).is_err());
    }

    #[test]
    fn classical_euler_characteristics() {
        let e3 = euler_polynomial(3).unwrap();
        assert_eq!(e3.evaluate(&int(3)), int(9)); // cubic surface
        assert_eq!(e3.evaluate(&int(4)), int(24)); // quartic K3
        let e4 = euler_polynomial(4).unwrap();
        assert_eq!(e4.evaluate(&int(5)), int(-200)); // quintic threefold
    }

    #[test]
    fn genus_degree_anchor() {
        // E_2(d) = 2 - (d-1)(d-2)
        let e2 = euler_polynomial(2).unwrap();
        for d in 1..=20i64 {
            let expected = 2 - (d - 1) * (d - 2);
            assert_eq!(e2.evaluate(&int(d)), int(expected));
        }
    }

    #[test]
    fn theta_drops_low_degrees() {
        assert!(theta(&ipoly(&[0, 7])).is_zero());
        assert!(theta(&ipoly(&[5])).is_zero());
        assert!(theta(&IntPoly::zero()).is_zero());
    }

    #[test]
    fn theta_tower_for_n4() {
        let e4 = euler_polynomial(4).unwrap();
        // definition forces +t^3 here, which is what the worked 4-fold
        // example and the adjunction oracle both require
        assert_eq!(e4.theta_power(1), ipoly(&[0, 10, -5, 1]));
        assert_eq!(e4.theta_power(2), ipoly(&[0, 5, -1]));
        assert_eq!(e4.theta_power(3), ipoly(&[0, 1]));
        assert!(e4.theta_power(4).is_zero());
    }

    #[test]
    fn theta_iterates_divisible_by_t() {
        for n in 1..=12 {
            let e = euler_polynomial(n).unwrap();
            for k in 0..n {
                let p = e.theta_power(k);
                assert_eq!(p.coeff(0), int(0), "t | theta^{k} E_{n}");
            }
            assert_eq!(e.theta_power(n - 1), ipoly(&[0, 1]));
            assert!(e.theta_power(n).is_zero());
        }
    }

    #[test]
    fn chern_polynomial_n2() {
        let c = chern_polynomial(2).unwrap();
        assert_eq!(c.coeff_of_s(1), ipoly(&[0, 1]));
        assert_eq!(c.coeff_of_s(2), ipoly(&[0, 3, -1]));
        // plane curve: deg c1 = 3d - d^2 = 2 - 2g
        assert_eq!(c.coeff_of_s(2).eval(&int(3)), int(0));
    }

    #[test]
    fn chern_polynomial_top_coefficient_is_euler() {
        for n in 1..=10 {
            assert_eq!(
                chern_polynomial(n).unwrap().coeff_of_s(n),
                euler_polynomial(n).unwrap().polynomial().clone()
            );
        }
    }

    #[test]
    fn pushforward_class_quintic() {
        // E_4(H,5) = 5H + 50H^3 - 200H^4; the H^3 term is gamma_2 * d = 10 * 5
        let cls = pushforward_total_class(4, &int(5)).unwrap();
        assert_eq!(cls.univariate_coefficient(1), int(5));
        assert_eq!(cls.univariate_coefficient(2), int(0));
        assert_eq!(cls.univariate_coefficient(3), int(50));
        assert_eq!(cls.univariate_coefficient(4), int(-200));
    }

    #[test]
    fn oracle_k3_and_quadric() {
        let k3 = chern_oracle(3, &int(4)).unwrap();
        assert_eq!(k3.gamma(), &[int(1), int(0), int(6)]);
        let quadric = chern_oracle(4, &int(2)).unwrap();
        assert_eq!(quadric.gamma(), &[int(1), int(3), int(4), int(2)]);
        // c_2 of the K3 lives in weight 2 with int c_2 = 6 * 4 = 24
        let c2 = k3.chern_class(2);
        assert_eq!(c2.univariate_coefficient(2), int(6));
        assert_eq!(c2.univariate_coefficient(2) * k3.d(), int(24));
    }

    #[test]
    fn oracle_hyperplane_is_projective_space() {
        for n in 1..=8u32 {
            let data = chern_oracle(n, &int(1)).unwrap();
            for k in 0..n {
                assert_eq!(data.gamma()[k as usize], binomial(n, k));
            }
        }
    }

    #[test]
    fn theorem_route_matches_oracle() {
        for n in 1..=8u32 {
            let e = euler_polynomial(n).unwrap();
            for d in 1..=10i64 {
                let data = chern_oracle(n, &int(d)).unwrap();
                for k in 0..n {
                    let via_theta = e.theta_power(n - (k + 1)).eval(&int(d));
                    assert_eq!(via_theta, data.pushforward(k as usize), "n={n} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn chern_numbers_examples() {
        assert_eq!(
            chern_number(4, &int(5), &Partition::new(vec![3]).unwrap()).unwrap(),
            int(-200)
        );
        assert_eq!(
            chern_number(4, &int(2), &Partition::new(vec![1, 2]).unwrap()).unwrap(),
            int(24)
        );
        assert_eq!(
            chern_number(4, &int(1), &Partition::new(vec![1, 1, 1]).unwrap()).unwrap(),
            int(64)
        );
    }

    #[test]
    fn corollary_product_examples() {
        assert_eq!(
            corollary_product(4, &int(5), &Partition::new(vec![3]).unwrap()).unwrap(),
            int(-200)
        );
        assert_eq!(
            corollary_product(4, &int(2), &Partition::new(vec![1, 2]).unwrap()).unwrap(),
            int(48)
        );
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 0]).is_err());
        let p = Partition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.label(), "[1,2,3]");
        assert!(chern_number(4, &int(2), &Partition::new(vec![1, 1]).unwrap()).is_err());
    }

    #[test]
    fn partition_enumeration_descending_lex() {
        let labels: Vec<String> = partitions_of(4).iter().map(|p| format!("{:?}", p.parts())).collect();
        assert_eq!(
            labels,
            vec!["[4]", "[3, 1]", "[2, 2]", "[2, 1, 1]", "[1, 1, 1, 1]"]
        );
        assert_eq!(partitions_of(0).len(), 1);
        assert!(partitions_of(0)[0].is_empty());
    }

    #[test]
    fn dual_polynomial_examples() {
        let d2 = dual_chern_polynomial(2).unwrap();
        assert_eq!(d2.coeff_of_s(0), ipoly(&[0, 3, -1]));
        assert_eq!(d2.coeff_of_s(1), ipoly(&[0, 1]));
        for n in 1..=10 {
            let d = dual_chern_polynomial(n).unwrap();
            assert_eq!(d.s_degree(), Some(n - 1));
            assert_eq!(d.coeff_of_s(0), euler_polynomial(n).unwrap().polynomial().clone());
        }
    }

    #[test]
    fn section_polynomial_examples() {
        let e2 = section_euler_polynomial(2).unwrap();
        assert_eq!(e2.coeff_of_s(0), ipoly(&[0, 3, -1]));
        assert_eq!(e2.coeff_of_s(1), ipoly(&[0, -1]));
        let e4 = section_euler_polynomial(4).unwrap();
        assert_eq!(e4.coeff_of_s(0), ipoly(&[0, 10, -10, 5, -1]));
        assert_eq!(e4.coeff_of_s(1), ipoly(&[0, -6, 4, -1]));
        assert_eq!(e4.coeff_of_s(2), ipoly(&[0, 3, -1]));
        assert_eq!(e4.coeff_of_s(3), ipoly(&[0, -1]));
    }

    #[test]
    fn section_values_examples() {
        assert_eq!(
            section_euler_values(4, &int(5)).unwrap(),
            vec![int(-200), int(55), int(-10), int(5)]
        );
        assert_eq!(section_euler_values(2, &int(3)).unwrap(), vec![int(0), int(3)]);
        for n in 1..=8u32 {
            let values = section_euler_values(n, &int(1)).unwrap();
            for (r, v) in values.iter().enumerate() {
                assert_eq!(*v, int((n as usize - r) as i64)); // chi(P^(n-1-r))
            }
        }
    }

    #[test]
    fn hodge_numbers_table() {
        let cases = [(1, 0, 0), (2, 0, 0), (3, 0, 5), (4, 0, 30), (5, 1, 101)];
        for (d, h03, h12) in cases {
            assert_eq!(
                hodge_numbers_threefold(&int(d)).unwrap(),
                (int(h03), int(h12)),
                "d={d}"
            );
        }
    }
}
