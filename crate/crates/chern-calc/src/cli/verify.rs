//! Verification sweeps behind `chern-calc verify`.
//!
//! Each sweep re-derives an identity two independent ways and demands exact
//! agreement; any mismatch is reported and maps to exit code 1.

use std::io::Write;

use num::BigInt;

use crate::euler::{
    chern_number, chern_oracle, chern_polynomial, corollary_product, euler_polynomial,
    partitions_of, section_euler_polynomial, theta,
};
use crate::fulton::{specialize_to_projective, verify_identity};
use crate::graded::{GradedClass, GradedEnv};
use crate::hirzebruch::{chern_series, chern_series_from_pushforward, chi_y, chi_y_oracle};

use super::CliError;

fn fail(msg: String) -> CliError {
    CliError::Failure(msg)
}

/// Recovery identity in the free ambient ring, plus its projective
/// specialization against the class polynomial.
pub fn fulton_sweep(n_max: u32, d_max: u64, prefix: &str, out: &mut dyn Write) -> Result<(), CliError> {
    for n in 1..=n_max {
        if !verify_identity(n)? {
            return Err(fail(format!("Fulton recovery identity fails at n={n}")));
        }
        let env = GradedEnv::univariate("H", n);
        let h: GradedClass<BigInt> = GradedClass::generator(&env, 0);
        let poly = chern_polynomial(n)?;
        for d in 1..=d_max {
            let d = BigInt::from(d);
            let t = GradedClass::constant(d.clone());
            if specialize_to_projective(n, &d)? != poly.eval_in(&h, &t) {
                return Err(fail(format!("projective specialization mismatch at n={n} d={d}")));
            }
        }
    }
    writeln!(out, "{prefix}OK ({n_max}/{n_max})").map_err(io_fail)?;
    Ok(())
}

/// theta-iterate pushforwards against the adjunction oracle, Chern numbers
/// against oracle intersection numbers, and the product normalization.
pub fn oracle_sweep(n_max: u32, d_max: u64, prefix: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let mut cells = 0usize;
    for n in 1..=n_max {
        let e = euler_polynomial(n)?;
        for d in 1..=d_max {
            let d = BigInt::from(d);
            let data = chern_oracle(n, &d)?;
            for k in 0..n {
                let via_theta = e.theta_power(n - (k + 1)).eval(&d);
                if via_theta != data.pushforward(k as usize) {
                    return Err(fail(format!(
                        "pushforward mismatch at n={n} d={d} k={k}: {via_theta} vs {}",
                        data.pushforward(k as usize)
                    )));
                }
            }
            for p in partitions_of(n - 1) {
                let number = chern_number(n, &d, &p)?;
                let mut expected = d.clone();
                for &j in p.parts() {
                    expected *= &data.gamma()[j as usize];
                }
                if number != expected {
                    return Err(fail(format!(
                        "Chern number mismatch at n={n} d={d} {}: {number} vs {expected}",
                        p.label()
                    )));
                }
                let literal = corollary_product(n, &d, &p)?;
                // d * literal = d^m * number covers the empty partition too
                let m = p.len() as u32;
                if d.clone() * &literal != num::pow::pow(d.clone(), m as usize) * &number {
                    return Err(fail(format!(
                        "normalization mismatch at n={n} d={d} {}",
                        p.label()
                    )));
                }
            }
            cells += 1;
        }
    }
    writeln!(out, "{prefix}OK ({cells}/{cells})").map_err(io_fail)?;
    Ok(())
}

/// Coefficientwise hyperplane-section identity at the polynomial level.
pub fn sections_sweep(n_max: u32, out: &mut dyn Write) -> Result<(), CliError> {
    let mut checks = 0usize;
    for n in 2..=n_max {
        let section = section_euler_polynomial(n)?;
        for r in 1..n {
            let mut lhs = section.coeff_of_s(r);
            if r % 2 == 1 {
                lhs = lhs.neg();
            }
            let rhs = euler_polynomial(n - r)?.polynomial().clone();
            if lhs != rhs {
                return Err(fail(format!("section identity fails at n={n} r={r}")));
            }
            checks += 1;
        }
        // the s-degree-0 slot is the Euler polynomial itself
        if section.coeff_of_s(0) != euler_polynomial(n)?.polynomial().clone() {
            return Err(fail(format!("section constant term mismatch at n={n}")));
        }
    }
    writeln!(out, "sections: OK ({checks}/{checks})").map_err(io_fail)?;
    Ok(())
}

/// chi_y by the class route against the classical genus computation, plus
/// the Euler specialization, Serre symmetry, and the Chern-series bridge.
pub fn hirzebruch_sweep(n_max: u32, d_max: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let mut cells = 0usize;
    for n in 2..=n_max {
        let e = euler_polynomial(n)?;
        for d in 1..=d_max {
            let d = BigInt::from(d);
            if chern_series_from_pushforward(n, &d)? != chern_series(n, &d)? {
                return Err(fail(format!("Chern series mismatch at n={n} d={d}")));
            }
            let genus = chi_y(n, &d)?;
            let oracle = chi_y_oracle(n, &d)?;
            if genus != oracle {
                return Err(fail(format!(
                    "chi_y mismatch at n={n} d={d}: {genus} vs {oracle}"
                )));
            }
            if genus.euler_characteristic() != e.evaluate(&d) {
                return Err(fail(format!("chi_y(-1) is not chi at n={n} d={d}")));
            }
            if !genus.is_serre_symmetric() {
                return Err(fail(format!("Serre symmetry fails at n={n} d={d}")));
            }
            if n % 2 == 0 && genus.signature() != BigInt::from(0) {
                return Err(fail(format!(
                    "odd-dimensional signature must vanish at n={n} d={d}"
                )));
            }
            cells += 1;
        }
    }
    writeln!(out, "hirzebruch: OK ({cells}/{cells})").map_err(io_fail)?;
    Ok(())
}

/// Everything, at the default bounds.
pub fn all_sweeps(out: &mut dyn Write) -> Result<(), CliError> {
    fulton_sweep(8, 10, "fulton: ", out)?;
    oracle_sweep(8, 10, "oracle: ", out)?;
    sections_sweep(10, out)?;
    hirzebruch_sweep(6, 8, out)?;
    theta_linearity(out)?;
    writeln!(out, "all: OK").map_err(io_fail)?;
    Ok(())
}

/// Small structural sweep: t divides every iterate, the tower ends in t, 0.
fn theta_linearity(out: &mut dyn Write) -> Result<(), CliError> {
    for n in 1..=12u32 {
        let e = euler_polynomial(n)?;
        for k in 0..n {
            let p = e.theta_power(k);
            if p.coeff(0) != BigInt::from(0) {
                return Err(fail(format!("t does not divide theta^{k} E_{n}")));
            }
            if k >= 1 {
                // theta drops the degree by exactly one on this tower
                let prev = e.theta_power(k - 1);
                if theta(&prev) != p {
                    return Err(fail(format!("theta tower broken at n={n} k={k}")));
                }
            }
        }
        if !e.theta_power(n).is_zero() {
            return Err(fail(format!("theta^{n} E_{n} is not zero")));
        }
    }
    writeln!(out, "theta: OK (12/12)").map_err(io_fail)?;
    Ok(())
}

fn io_fail(e: std::io::Error) -> CliError {
    CliError::Failure(format!("write failed: {e}"))
}
