//! Exact Kolchin dimension polynomials of finite subsets of `ℕ₀^m`.
//!
//! * [`numpoly`]: numerical polynomials in the binomial basis `C(s+i, i)`.
//! * [`macaulay`]: minimizing coefficients, Macaulay constants, membership
//!   tests and the order on Kolchin polynomials.
//! * [`lattice`]: exponent sets, the brute-force counting oracle and three
//!   independent ways to obtain the dimension polynomial.
//! * [`diffdim`]: differential systems and the example families.
//! * [`cli`]: the command-line front end used by the `kolchin` binary.
//!
//! All arithmetic is exact.

pub mod cli;
pub mod diffdim;
pub mod error;
pub mod lattice;
pub mod macaulay;
pub mod numpoly;

pub use diffdim::{
    classify_minimal_candidate, ex2_exponents, single_equation_poly, standard_coefficient_report,
    system_dimension_polynomial, triangular_family, DifferentialSystem, MinimalCandidate,
    StandardCoefficientReport,
};
pub use error::{Error, Result};
pub use lattice::{
    count_free_points, dimension_polynomial, dimension_polynomial_ie, dimension_polynomial_rec,
    minimal_elements, stabilization_bound, Budget, ExponentSet, LatticePoint, Method,
};
pub use macaulay::{
    is_kolchin, macaulay_constants, macaulay_nondecreasing, minimizing_coefficients, reconstruct,
    sit_compare, MacaulayConstants, MinimizingCoeffs,
};
pub use numpoly::{binom_eval, NumPoly};
