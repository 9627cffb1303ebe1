//! Fulton classes of a hypersurface in an abstract smooth ambient variety.
//!
//! Working in the free graded ring on Chern generators c_1..c_n and the
//! hypersurface class X, every Fulton class of X is recovered from the top
//! one by iterating theta — an exact symbolic identity, checked without any
//! numeric substitution. Specializing the ambient to P^n reproduces the
//! class polynomial route.
//!
//! Run with: cargo run --example fulton_classes

use num::BigInt;

use chern_calc::euler::theta_power;
use chern_calc::fulton::{
    fulton_class, general_euler_polynomial, segre_class, specialize_to_projective, verify_identity,
    AmbientRing,
};

fn main() {
    let n = 4;
    let ring = AmbientRing::new(n).unwrap();

    println!("ambient dimension {n}:");
    println!("  s(X, M)  = {}", segre_class(n).unwrap());
    let full = fulton_class(n).unwrap();
    println!("  c_F(X)   = {full}");
    for k in 0..n {
        println!("  weight {} part: {}", k + 1, full.weight_component(k + 1));
    }

    let e = general_euler_polynomial(n).unwrap();
    println!("\nambient Euler polynomial (coefficients in the Chow group):");
    for j in (0..=n as usize).rev() {
        let c = e.coeff(j);
        if !c.is_zero() {
            println!("  s^{j}: {c}");
        }
    }

    let x = ring.hypersurface_class();
    println!("\ntheta iterates evaluated at X recover every class:");
    for j in 0..n {
        let part = theta_power(&e, j).eval(&x);
        println!("  theta^{j} -> {part}");
        assert_eq!(part, full.weight_component(n - j));
    }

    for n in 1..=8 {
        assert!(verify_identity(n).unwrap());
    }
    println!("\nrecovery identity verified symbolically for n <= 8.");

    let d = BigInt::from(5);
    println!(
        "\nspecialized to P^4, d = 5: {}",
        specialize_to_projective(4, &d).unwrap()
    );
}
