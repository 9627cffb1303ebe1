//! Hodge numbers of smooth threefolds in P^4.
//!
//! h^{0,3} and h^{1,2} are the only Hodge numbers of a degree-d threefold
//! not forced by the ambient space; both fall out of c1 c2 and chi.
//!
//! Run with: cargo run --example hodge_numbers

use num::BigInt;

use chern_calc::{euler_polynomial, hodge_numbers_threefold};

fn main() {
    let e4 = euler_polynomial(4).unwrap();
    println!("{:>3} {:>8} {:>6} {:>8}", "d", "chi", "h03", "h12");
    for d in 1..=10i64 {
        let d = BigInt::from(d);
        let chi = e4.evaluate(&d);
        let (h03, h12) = hodge_numbers_threefold(&d).unwrap();
        println!("{:>3} {:>8} {:>6} {:>8}", d.to_string(), chi.to_string(), h03.to_string(), h12.to_string());
    }
    println!("\nd=5 is the quintic threefold with (h03, h12) = (1, 101).");
}
