//! Arithmetic on numerical polynomials in the basis C(s+i, i).
//!
//! cargo run --example binomial_basis

use kolchin::{binom_eval, NumPoly};
use num_bigint::BigInt;

fn main() {
    // 2s + 3 = 2·C(s+1,1) + 1, written a_d..a_0
    let p = NumPoly::from_standard([2, 1]);
    println!("p(s)        = {p}");
    println!("p(10)       = {}", p.eval(10));
    println!("p(s+4)      = {}", p.shift_by(4));
    println!("∇p          = {}", p.nabla());

    let q = NumPoly::basis(3);
    println!(
        "C(s+3,3) at s = -2, -1, 0, 1: {:?}",
        (-2..=1).map(|s| q.eval(s).to_string()).collect::<Vec<_>>()
    );

    // interpolation from integer samples: triangular numbers
    let samples: Vec<BigInt> = [1, 3, 6, 10].iter().map(|&v| BigInt::from(v)).collect();
    println!(
        "through 1,3,6,10 = {}",
        NumPoly::from_samples(&BigInt::from(0), &samples)
    );

    // negative upper arguments follow the falling factorial
    println!("C(-3, 2) = {}", binom_eval(&BigInt::from(-3), 2));
    println!("C(200, 100) = {}", binom_eval(&BigInt::from(200), 100));
}
