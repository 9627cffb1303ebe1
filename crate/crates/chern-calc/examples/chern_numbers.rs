//! All Chern numbers of a hypersurface from one polynomial.
//!
//! Chern numbers are indexed by partitions of dim X = n - 1. The honest
//! intersection numbers differ from the literal products of pushforward
//! degrees by a factor d^(#parts - 1), and both are available.
//!
//! Run with: cargo run --example chern_numbers

use num::BigInt;

use chern_calc::{chern_number, corollary_product, partitions_of};

fn main() {
    for (n, d) in [(4u32, 5i64), (4, 2), (5, 3)] {
        let d = BigInt::from(d);
        println!("Chern numbers of the degree-{d} hypersurface in P^{n}:");
        println!("  {:12} {:>16} {:>16}", "partition", "intersection", "literal product");
        for p in partitions_of(n - 1) {
            let number = chern_number(n, &d, &p).unwrap();
            let literal = corollary_product(n, &d, &p).unwrap();
            println!("  {:12} {:>16} {:>16}", p.label(), number.to_string(), literal.to_string());
        }
        println!();
    }

    // c1^3 = (5d - d^2)^3 / d^2 and friends for the quintic: all zero except chi
    let d = BigInt::from(5);
    let chi = chern_number(4, &d, &partitions_of(3)[0]).unwrap();
    println!("quintic threefold: chi = c_3 = {chi} (Calabi-Yau, c_1 = 0 kills the rest)");
}
