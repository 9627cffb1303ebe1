//! Motivic Hirzebruch classes and chi_y genera of smooth hypersurfaces.
//!
//! Two independent routes to the chi_y genus are implemented:
//! - `chi_y` follows the closed-form class computation: exponentiate the
//!   Hadamard product of a logarithmic series against the log-derivative of
//!   the Chern-class series, extract the top s-coefficient and restore the
//!   (1+y)^k prefactor;
//! - `chi_y_oracle` is the classical generalized-Todd-genus computation and
//!   shares only the series kernel with the route above.
//!
//! Coefficients in y are exact rational functions throughout, because the
//! constant term 1+y of the Q-series makes y = -1 a pole of intermediate
//! values. Polynomiality of every final coefficient is asserted, after which
//! evaluation at y = -1, 0, 1 is exact.

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::euler::{chern_oracle, euler_polynomial};
use crate::graded::{GradedClass, GradedEnv};
use crate::poly::DensePolynomial;
use crate::ratfunc::ParamRational;
use crate::ring::{div_exact, to_integer, Ring};
use crate::series::{todd_unit_series, TruncatedSeries};

type HClass = GradedClass<BigRational>;
type YClass = GradedClass<ParamRational>;

/// `C(s) = sum_{k=0}^{n-1} (-1)^k c_k(X) s^k` over `Q[h]/(h^n)`, with the
/// intrinsic classes c_k(X) = gamma_k h^k from the adjunction oracle.
pub fn chern_series(n: u32, d: &BigInt) -> Result<TruncatedSeries<HClass>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    let data = chern_oracle(n, d)?;
    let env = GradedEnv::univariate("h", n - 1);
    Ok(TruncatedSeries::from_fn(n as usize - 1, |k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = BigRational::from_integer(&data.gamma()[k] * BigInt::from(sign));
        GradedClass::monomial(&env, vec![k as u32], coeff)
    }))
}

/// Recovers the same series from the pushforward polynomial: forms
/// `E_n(-sH, d)` in `Z[H]/(H^(n+1))`, pulls out the exact factor `(-dH s)`, and
/// reinterprets H as h. Must agree with `chern_series`; a factorization
/// failure indicates a bug, not bad input.
pub fn chern_series_from_pushforward(n: u32, d: &BigInt) -> Result<TruncatedSeries<HClass>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    if d < &BigInt::from(1) {
        return Err(Error::DegreeTooSmall { got: d.to_string() });
    }
    let e = euler_polynomial(n)?;
    let env = GradedEnv::univariate("h", n - 1);
    let mut coeffs = Vec::with_capacity(n as usize);
    for j in 1..=n {
        // coefficient of s^j in E_n(-sH, d) is theta^(n-j)(E_n)(d) (-1)^j H^j
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let pushed = e.theta_power(n - j).eval(d) * BigInt::from(sign);
        let gamma = div_exact(&pushed, &(-d.clone())).map_err(|_| {
            Error::Internal(format!(
                "E_{n}(-sH,{d}) must factor through -dHs, but s^{j} carries {pushed}"
            ))
        })?;
        coeffs.push(GradedClass::monomial(
            &env,
            vec![j - 1],
            BigRational::from_integer(gamma),
        ));
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Q(s) = s (1 + y e^(-s)) / (1 - e^(-s)), with constant term 1 + y.
pub fn q_series(order: usize) -> TruncatedSeries<ParamRational> {
    let todd = todd_unit_series(order).map(ParamRational::from_rational);
    let mut factorial = BigInt::from(1);
    let exp_neg = TruncatedSeries::from_fn(order, |k| {
        if k > 0 {
            factorial *= BigInt::from(k as i64);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        ParamRational::from_rational(&BigRational::new(BigInt::from(sign), factorial.clone()))
    });
    let numerator = TruncatedSeries::one(order).add(&exp_neg.scale(&ParamRational::y()));
    todd.mul(&numerator)
}

/// The Hirzebruch class of a smooth degree-d hypersurface in P^n as an
/// element of `Q[y][h]/(h^n)`: one polynomial in y per power of h. Every
/// rational-function denominator cancels against the (1+y)^k prefactor.
#[derive(Clone, PartialEq, Debug)]
pub struct HirzebruchClass {
    n: u32,
    d: BigInt,
    coefficients: Vec<DensePolynomial<BigRational>>,
}

impl HirzebruchClass {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// dim X = n - 1.
    pub fn dim(&self) -> u32 {
        self.n - 1
    }

    /// The y-polynomial multiplying h^j.
    pub fn coefficient(&self, j: usize) -> &DensePolynomial<BigRational> {
        &self.coefficients[j]
    }
}

/// Computes the class by the exp/log/Hadamard route:
/// (1+y)^k * [s^k] exp( log(Q/(1+y)) (.) (-s C'/C) ), k = dim X.
///
/// The constant term dropped from the logarithm is irrelevant: the Hadamard
/// partner -sC'/C has zero constant term, so the s^0 slot never contributes.
pub fn hirzebruch_class(n: u32, d: &BigInt) -> Result<HirzebruchClass> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    if d < &BigInt::from(1) {
        return Err(Error::DegreeTooSmall { got: d.to_string() });
    }
    let k = n as usize - 1;
    let c = chern_series(n, d)?;
    let ratio = c.derivative().div(&c)?;
    let log_derivative = ratio.shift_up(1).neg(); // -s C'/C, zero constant term

    let one_plus_y = ParamRational::one_plus_y();
    let q = q_series(k);
    let q_unit = q.scale(&one_plus_y.inv().expect("1+y is a nonzero polynomial"));
    let log_q = q_unit.log()?;

    let lifted_log: TruncatedSeries<YClass> = log_q.map(|p| GradedClass::constant(p.clone()));
    let lifted_ratio: TruncatedSeries<YClass> =
        log_derivative.map(|g| g.map_coeffs(ParamRational::from_rational));
    let exponent = lifted_log.hadamard(&lifted_ratio);
    let class_series = exponent.exp()?;

    let prefactor = one_plus_y.pow(k as u32);
    let top = class_series.coeff(k).scale(&prefactor);

    let coefficients = (0..n as usize)
        .map(|j| {
            let c = top.univariate_coefficient(j as u32);
            c.as_polynomial()
                .cloned()
                .ok_or_else(|| Error::NonPolynomialCoefficient {
                    power: j,
                    denominator: c.denominator().display("y", true),
                })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(HirzebruchClass {
        n,
        d: d.clone(),
        coefficients,
    })
}

/// The chi_y genus: an integer polynomial in y of degree <= dim X, with
/// chi_{-1} the Euler characteristic, chi_0 the holomorphic Euler
/// characteristic chi(O_X), and chi_1 the signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChiYGenus {
    dim: u32,
    poly: DensePolynomial<BigInt>,
}

impl ChiYGenus {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn polynomial(&self) -> &DensePolynomial<BigInt> {
        &self.poly
    }

    pub fn evaluate(&self, y: i64) -> BigInt {
        self.poly.eval(&BigInt::from(y))
    }

    /// chi(X) = chi_y at y = -1.
    pub fn euler_characteristic(&self) -> BigInt {
        self.evaluate(-1)
    }

    /// chi(O_X) = chi_y at y = 0. (The classical arithmetic genus is
    /// (-1)^dim (chi(O_X) - 1); this returns chi(O_X) itself.)
    pub fn holomorphic_euler_characteristic(&self) -> BigInt {
        self.evaluate(0)
    }

    /// Signature = chi_y at y = 1.
    pub fn signature(&self) -> BigInt {
        self.evaluate(1)
    }

    /// Serre duality: coefficient of y^p equals (-1)^dim times the
    /// coefficient of y^(dim - p).
    pub fn is_serre_symmetric(&self) -> bool {
        let dim = self.dim as usize;
        (0..=dim).all(|p| {
            let lhs = self.poly.coeff(p);
            let rhs = self.poly.coeff(dim - p);
            if dim.is_multiple_of(2) {
                lhs == rhs
            } else {
                lhs == -rhs
            }
        })
    }
}

impl std::fmt::Display for ChiYGenus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly.display("y", true))
    }
}

fn genus_from_param(n: u32, value: &ParamRational) -> Result<ChiYGenus> {
    let poly = value
        .as_polynomial()
        .ok_or_else(|| Error::NonPolynomialCoefficient {
            power: n as usize - 1,
            denominator: value.denominator().display("y", true),
        })?;
    let coeffs = poly
        .coeffs()
        .iter()
        .map(|q| to_integer(q).ok_or_else(|| Error::NonIntegerValue { found: q.to_string() }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChiYGenus {
        dim: n - 1,
        poly: DensePolynomial::new(coeffs),
    })
}

/// chi_y via the Hirzebruch class: d times the h^(n-1) coefficient, the
/// integration functional being `int h^(n-1) = d`.
pub fn chi_y(n: u32, d: &BigInt) -> Result<ChiYGenus> {
    let class = hirzebruch_class(n, d)?;
    let top = class.coefficient(n as usize - 1);
    let scaled = top.scale(&BigRational::from_integer(d.clone()));
    genus_from_param(n, &ParamRational::from_poly(scaled))
}

/// Independent classical computation: with the generalized Todd series
/// `R(x) = x(1+y)/(1 - e^(-x(1+y))) - xy`, whose coefficients are polynomials
/// in y, the genus is `[H^n] ( R(H)^(n+1) / R(dH) * dH )` in `Q[y][H]/(H^(n+1))`.
pub fn chi_y_oracle(n: u32, d: &BigInt) -> Result<ChiYGenus> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    if d < &BigInt::from(1) {
        return Err(Error::DegreeTooSmall { got: d.to_string() });
    }
    let env = GradedEnv::univariate("H", n);
    let todd = todd_unit_series(n as usize);
    let one_plus_y = ParamRational::one_plus_y();
    let y = ParamRational::y();

    // R(cH) = sum_k b_k (1+y)^k c^k H^k - c y H
    let r_at = |c: &BigInt| -> YClass {
        let mut acc: YClass = GradedClass::zero_in(&env);
        for k in 0..=n {
            let scalar = ParamRational::from_rational(todd.coeff(k as usize))
                .mul(&one_plus_y.pow(k))
                .mul(&ParamRational::from_bigint(&Ring::pow(c, k)));
            let coeff = if k == 1 {
                scalar.sub(&y.mul(&ParamRational::from_bigint(c)))
            } else {
                scalar
            };
            acc = acc.add(&GradedClass::monomial(&env, vec![k], coeff));
        }
        acc
    };

    let numerator = r_at(&BigInt::from(1)).pow(n + 1);
    let denominator = r_at(d);
    let quotient = numerator.mul(&denominator.inv().ok_or_else(|| {
        Error::Internal("generalized Todd series has unit constant term".to_string())
    })?);
    let h: YClass = GradedClass::generator(&env, 0);
    let total = quotient.mul(&h.scale(&ParamRational::from_bigint(d)));
    let value = total.univariate_coefficient(n);
    genus_from_param(n, &value)
}
