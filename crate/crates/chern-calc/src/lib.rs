//! Exact-arithmetic invariants of smooth hypersurfaces in projective space.
//!
//! Everything a smooth degree-d hypersurface X in P^n knows about its
//! characteristic classes is packed into one integer polynomial: the Euler
//! polynomial E_n with chi(X) = E_n(d). This crate computes that polynomial
//! and unwinds the rest from it, cross-checked against independent classical
//! routes at every step:
//!
//! - pushed-forward Chern classes and all Chern numbers ([`euler`]);
//! - Euler characteristics of iterated general hyperplane sections ([`euler`]);
//! - the nontrivial Hodge numbers of threefolds in P^4 ([`euler`]);
//! - Fulton classes of hypersurfaces in an abstract smooth ambient variety,
//!   recovered from the top class alone ([`fulton`]);
//! - motivic Hirzebruch classes and chi_y genera ([`hirzebruch`]).
//!
//! The arithmetic kernel ([`ring`], [`poly`], [`series`], [`graded`],
//! [`ratfunc`], [`bivariate`]) is exact everywhere: big rationals, truncated
//! power series, and weighted-graded quotient rings. No floats, no rounding.
//!
//! See the `examples/` directory for runnable tours of each capability, and
//! the `chern-calc` binary for the command-line surface.

pub mod bivariate;
pub mod cli;
pub mod error;
pub mod euler;
pub mod fulton;
pub mod graded;
pub mod hirzebruch;
pub mod poly;
pub mod ratfunc;
pub mod ring;
pub mod series;

pub use bivariate::BivariatePolynomial;
pub use error::{Error, Result};
pub use euler::{
    chern_number, chern_oracle, chern_polynomial, corollary_product, dual_chern_polynomial,
    euler_polynomial, hodge_numbers_threefold, partitions_of, pushforward_total_class,
    section_euler_polynomial, section_euler_values, theta, theta_power, ChernData,
    EulerPolynomial, Partition,
};
pub use fulton::{
    fulton_class, general_euler_polynomial, segre_class, specialize_to_projective,
    verify_identity, AmbientRing, ChowPolynomial,
};
pub use graded::{GradedClass, GradedEnv};
pub use hirzebruch::{
    chern_series, chern_series_from_pushforward, chi_y, chi_y_oracle, hirzebruch_class, q_series,
    ChiYGenus, HirzebruchClass,
};
pub use poly::DensePolynomial;
pub use ratfunc::ParamRational;
pub use ring::Ring;
pub use series::TruncatedSeries;
