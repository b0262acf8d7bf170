//! A system with several differential indeterminates: the dimension
//! polynomial is the sum of the member polynomials, and it stays a Kolchin
//! polynomial.
//!
//! cargo run --example differential_system

use kolchin::{
    is_kolchin, minimizing_coefficients, system_dimension_polynomial, DifferentialSystem,
    ExponentSet,
};

fn main() -> Result<(), kolchin::Error> {
    let sys = DifferentialSystem::new(
        3,
        vec![
            ExponentSet::new(3, vec![vec![1, 1, 0], vec![0, 0, 2]])?,
            ExponentSet::new(3, vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 1]])?,
            ExponentSet::new(3, vec![vec![0, 1, 1]])?,
        ],
    )?;
    for (j, e) in sys.sets().iter().enumerate() {
        println!("y{}: {e}", j + 1);
    }
    let p = system_dimension_polynomial(&sys)?;
    println!("ω = {p}");
    println!("b = {:?}", minimizing_coefficients(&p).as_slice());
    println!("Kolchin polynomial: {}", is_kolchin(&p));
    Ok(())
}
