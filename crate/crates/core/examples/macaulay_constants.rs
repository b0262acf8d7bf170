//! Minimizing coefficients, Macaulay constants, reconstruction and the order
//! on Kolchin polynomials.
//!
//! cargo run --example macaulay_constants -- 2,3

use kolchin::cli::parse_poly;
use kolchin::{
    is_kolchin, macaulay_constants, macaulay_nondecreasing, minimizing_coefficients, reconstruct,
    sit_compare, NumPoly,
};

fn main() {
    let literal = std::env::args().nth(1).unwrap_or_else(|| "2,3".into());
    let p = parse_poly(&literal).expect("comma-separated standard coefficients a_d,...,a_0");

    let b = minimizing_coefficients(&p);
    let c = macaulay_constants(&b);
    println!("ω(s)                 = {p}");
    println!(
        "minimizing (b_d..b_0) = {:?}",
        b.as_slice()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "constants (c_d+1..c_1) = {:?}",
        c.as_slice()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("rebuilt              = {}", reconstruct(&c));
    println!(
        "Kolchin polynomial?  {} (constants non-decreasing: {})",
        is_kolchin(&p),
        macaulay_nondecreasing(&p)
    );

    let others = [
        NumPoly::constant(5),
        NumPoly::from_standard([1, 0]),
        NumPoly::from_standard([2, 0]),
    ];
    for q in &others {
        println!("{p}  vs  {q}: {:?}", sit_compare(&p, q));
    }
}
