//! {(1,2),(k,1)} has polynomial 2s+k, while the single row (1,1) gives 2s+1.
//!
//! cargo run --example two_row_family

use kolchin::{
    dimension_polynomial, ex2_exponents, minimizing_coefficients, sit_compare, ExponentSet,
};

fn main() -> Result<(), kolchin::Error> {
    let g = dimension_polynomial(&ExponentSet::new(2, vec![vec![1, 1]])?)?;
    for k in 2..=8 {
        let e = ex2_exponents(k)?;
        let p = dimension_polynomial(&e)?;
        let b = minimizing_coefficients(&p);
        println!(
            "k={k}: ω = {p} (ω(10) = {}), b = {:?}, compared with 2s+1: {:?}",
            p.eval(10),
            b.as_slice()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
            sit_compare(&p, &g)
        );
    }
    println!(
        "{{(1,1)}}: ω = {g}, b = {:?}",
        minimizing_coefficients(&g).as_slice()
    );
    Ok(())
}
