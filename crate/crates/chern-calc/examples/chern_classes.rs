//! Pushed-forward Chern classes two ways: the theta-iterate class polynomial
//! and the classical adjunction oracle.
//!
//! Run with: cargo run --example chern_classes

use num::BigInt;

use chern_calc::{chern_oracle, chern_polynomial, pushforward_total_class};

fn main() {
    let n = 4;
    println!("class polynomial for hypersurfaces in P^{n}:");
    let poly = chern_polynomial(n).unwrap();
    println!("  C_{n}(s,t) = {}", poly.display("s", "t", true));

    for d in [2i64, 5] {
        let d = BigInt::from(d);
        println!("\ndegree d = {d}:");
        let class = pushforward_total_class(n, &d).unwrap();
        println!("  C_{n}(H,{d}) = {class}");

        let oracle = chern_oracle(n, &d).unwrap();
        println!("  adjunction gamma = {:?}", oracle.gamma());
        for k in 0..n as usize {
            let pushed = oracle.pushforward(k);
            println!(
                "  c_{k}(X) = {} h^{k}   pushes to {} H^{}",
                oracle.gamma()[k],
                pushed,
                k + 1
            );
            assert_eq!(class.univariate_coefficient(k as u32 + 1), pushed);
        }
    }
    println!("\ntheta route and adjunction agree.");
}
