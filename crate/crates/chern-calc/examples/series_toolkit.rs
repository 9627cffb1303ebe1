//! The exact series kernel on its own: truncated exp, log, division,
//! derivatives and Hadamard products over big rationals.
//!
//! Run with: cargo run --example series_toolkit

use num::{BigInt, BigRational};

use chern_calc::series::{todd_unit_series, TruncatedSeries};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() {
    // exp and log are mutual inverses to the truncation order
    let f = TruncatedSeries::new(vec![q(0, 1), q(1, 1), q(1, 1), q(0, 1), q(-2, 3)]);
    let exp = f.exp().unwrap();
    println!("f       = {f}");
    println!("exp f   = {exp}");
    println!("log exp f = {}", exp.log().unwrap());

    // geometric division
    let s = TruncatedSeries::new(vec![q(0, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    let one_minus_s = TruncatedSeries::new(vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    println!("\ns/(1-s) = {}", s.div(&one_minus_s).unwrap());

    // the Bernoulli-flavored unit series s/(1 - e^(-s))
    let todd = todd_unit_series(8);
    println!("\ns/(1-e^-s) = {todd}");

    // Hadamard product picks coefficients pairwise
    let g = TruncatedSeries::new(vec![q(5, 1), q(7, 1), q(11, 1), q(13, 1), q(17, 1)]);
    println!("\nf (.) g  = {}", f.hadamard(&g));

    // derivative obeys Leibniz
    let lhs = f.mul(&g).derivative();
    let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
    assert_eq!(lhs, rhs);
    println!("(fg)'    = {lhs}");
}
