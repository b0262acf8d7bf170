//! Dimension polynomials of the triangular family (2 on the diagonal, 1
//! below) with the s = -1 recursion check and the published values alongside.
//!
//! cargo run --release --example triangular_report -- 6

use kolchin::standard_coefficient_report;

fn main() -> Result<(), kolchin::Error> {
    let m_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let report = standard_coefficient_report(m_max)?;
    print!("{report}");
    println!(
        "\n{} of {} published values differ from the counted ones",
        report.discrepancies().count(),
        report.claims.len()
    );
    Ok(())
}
