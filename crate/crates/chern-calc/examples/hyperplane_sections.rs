//! Euler characteristics of iterated general hyperplane sections.
//!
//! The coefficient of (-s)^r in e_n(s, d) is chi of X cut by r general
//! hyperplanes. Cutting a degree-d hypersurface in P^n with a general
//! hyperplane yields a degree-d hypersurface in P^(n-1), and the expansion
//! knows it: (-1)^r [s^r] e_n(s, t) = E_(n-r)(t).
//!
//! Run with: cargo run --example hyperplane_sections

use num::BigInt;

use chern_calc::{euler_polynomial, section_euler_polynomial, section_euler_values};

fn main() {
    for n in 2..=5u32 {
        let poly = section_euler_polynomial(n).unwrap();
        println!("e_{n}(s,d) = {}", poly.display("s", "d", true));
        for r in 1..n {
            let mut slice = poly.coeff_of_s(r);
            if r % 2 == 1 {
                slice = slice.neg();
            }
            assert_eq!(&slice, euler_polynomial(n - r).unwrap().polynomial());
        }
    }

    println!("\nsection Euler characteristics of the quintic threefold (n=4, d=5):");
    let values = section_euler_values(4, &BigInt::from(5)).unwrap();
    let names = [
        "X itself",
        "quintic surface",
        "quintic plane curve",
        "five points",
    ];
    for (r, (value, name)) in values.iter().zip(names).enumerate() {
        println!("  r={r} ({name}): chi = {value}");
    }
}
