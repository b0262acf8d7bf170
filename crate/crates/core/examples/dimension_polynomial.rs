//! The Kolchin polynomial of an exponent set by interpolation, by recursion
//! and by inclusion-exclusion, next to the brute-force counts.
//!
//! cargo run --example dimension_polynomial -- "m=3; rows=(1,2,0),(0,1,1),(2,0,3)"

use kolchin::cli::parse_inline;
use kolchin::{
    count_free_points, dimension_polynomial, dimension_polynomial_ie, dimension_polynomial_rec,
    stabilization_bound,
};

fn main() -> Result<(), kolchin::Error> {
    let inline = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "m=3; rows=(1,2,0),(0,1,1),(2,0,3)".into());
    let sys = parse_inline(&inline)?;
    for e in sys.sets() {
        let interp = dimension_polynomial(e)?;
        let rec = dimension_polynomial_rec(e);
        let ie = dimension_polynomial_ie(e)?;
        println!("{e}");
        println!("  interpolation      {interp}");
        println!("  recursion          {rec}");
        println!("  inclusion-exclusion {ie}");
        let bound = stabilization_bound(e) as i64;
        println!("  counts equal the polynomial for every s >= {bound}");
        for s in 0..=bound + 3 {
            println!(
                "    s={s:>2} count={:>5} poly={:>5}",
                count_free_points(e, s)?,
                interp.eval(s)
            );
        }
    }
    Ok(())
}
