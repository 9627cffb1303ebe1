//! Euler polynomials and the theta tower.
//!
//! E_n(d) is the Euler characteristic of a smooth degree-d hypersurface in
//! P^n; applying theta repeatedly walks down the tower of pushed-forward
//! Chern classes until it bottoms out at t, then 0.
//!
//! Run with: cargo run --example euler_polynomials

use num::BigInt;

use chern_calc::euler_polynomial;

fn main() {
    for n in 1..=5 {
        let e = euler_polynomial(n).unwrap();
        println!("E_{n}(t) = {}", e.polynomial().display("t", true));
        for k in 1..=n {
            let p = e.theta_power(k);
            println!("  theta^{k}: {}", p.display("t", true));
        }
    }

    println!("\nEuler characteristics chi = E_n(d):");
    let cases = [
        ("conic (P^1)", 2u32, 2i64),
        ("elliptic curve", 2, 3),
        ("cubic surface", 3, 3),
        ("quartic K3", 3, 4),
        ("quintic threefold", 4, 5),
    ];
    for (name, n, d) in cases {
        let chi = euler_polynomial(n).unwrap().evaluate(&BigInt::from(d));
        println!("  {name:18} n={n} d={d}: chi = {chi}");
    }

    // exactness is not limited to small degrees
    let d = BigInt::from(10).pow(12);
    let chi = euler_polynomial(4).unwrap().evaluate(&d);
    println!("\nE_4(10^12) = {chi}");
}
