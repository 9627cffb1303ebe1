//! Rational functions in the formal parameter y over the exact rationals.
//!
//! Canonical form: numerator and denominator are coprime and the denominator
//! is monic (so equality is structural). This is the coefficient field for
//! the genus computations, where intermediate values have poles at y = -1
//! that must cancel before any evaluation happens.

use std::fmt;

use num::{BigInt, BigRational};

use crate::poly::{gcd_monic, DensePolynomial};
use crate::ring::Ring;

type QPoly = DensePolynomial<BigRational>;

#[derive(Clone, PartialEq, Debug)]
pub struct ParamRational {
    num: QPoly,
    den: QPoly,
}

impl ParamRational {
    /// Builds `num / den` and reduces to canonical form. Panics on a zero
    /// denominator; fallible division goes through `Ring::inv`.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = ParamRational { num, den };
        out.reduce();
        out
    }

    pub fn from_poly(p: QPoly) -> Self {
        ParamRational {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        ParamRational::from_poly(QPoly::constant(q.clone()))
    }

    /// The parameter itself.
    pub fn y() -> Self {
        ParamRational::from_poly(QPoly::var())
    }

    /// 1 + y, the unit this field exists to divide by.
    pub fn one_plus_y() -> Self {
        let one = BigRational::from_integer(BigInt::from(1));
        ParamRational::from_poly(QPoly::new(vec![one.clone(), one]))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::one();
            return;
        }
        let g = gcd_monic(&self.num, &self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        let lead_inv = self
            .den
            .leading()
            .expect("nonzero denominator")
            .inv()
            .expect("rational leading coefficient");
        self.num = self.num.scale(&lead_inv);
        self.den = self.den.scale(&lead_inv);
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Evaluates at a parameter value; `None` on a pole.
    pub fn evaluate(&self, y: &BigRational) -> Option<BigRational> {
        let den = self.den.eval(y);
        den.inv().map(|d| self.num.eval(y).mul(&d))
    }
}

impl fmt::Display for ParamRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.display("y", true))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display("y", true),
                self.den.display("y", true)
            )
        }
    }
}

impl Ring for ParamRational {
    fn zero() -> Self {
        ParamRational::from_poly(QPoly::zero())
    }

    fn one() -> Self {
        ParamRational::from_poly(QPoly::one())
    }

    fn from_bigint(n: &BigInt) -> Self {
        ParamRational::from_rational(&BigRational::from_integer(n.clone()))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        ParamRational::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn neg(&self) -> Self {
        ParamRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        ParamRational::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(ParamRational::new(self.den.clone(), self.num.clone()))
        }
    }
}
