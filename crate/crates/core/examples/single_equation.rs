//! One equation of order d in m derivations: C(s+m,m) - C(s+m-d,m), whose
//! Macaulay constants are all equal to d.
//!
//! cargo run --example single_equation

use kolchin::{
    classify_minimal_candidate, macaulay_constants, minimizing_coefficients, single_equation_poly,
};

fn main() {
    for m in 1..=4 {
        for d in 1..=4u64 {
            let p = single_equation_poly(m, d);
            let c = macaulay_constants(&minimizing_coefficients(&p));
            let cand = classify_minimal_candidate(&p, m);
            println!(
                "m={m} d={d}: {p} constants {:?} order {:?}",
                c.as_slice()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
                cand.order.map(|o| o.to_string())
            );
        }
    }
}
