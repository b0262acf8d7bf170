//! Differential systems given by their leading-exponent sets, and the
//! example families built on single equations, the two-row `ℕ₀²` family and
//! the triangular matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{dimension_polynomial_with, Budget, ExponentSet};
use crate::macaulay::{
    macaulay_constants, minimizing_coefficients, MacaulayConstants, MinimizingCoeffs,
};
use crate::numpoly::NumPoly;

/// One exponent set per differential indeterminate, all in `ℕ₀^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialSystem {
    m: usize,
    sets: Vec<ExponentSet>,
}

impl DifferentialSystem {
    pub fn new(m: usize, sets: Vec<ExponentSet>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidInput(
                "a system needs at least one indeterminate".into(),
            ));
        }
        if let Some(bad) = sets.iter().find(|e| e.dim() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.dim(),
            });
        }
        Ok(DifferentialSystem { m, sets })
    }

    pub fn single(set: ExponentSet) -> Self {
        DifferentialSystem {
            m: set.dim(),
            sets: vec![set],
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn sets(&self) -> &[ExponentSet] {
        &self.sets
    }
}

/// Sum of the member dimension polynomials.
pub fn system_dimension_polynomial(sys: &DifferentialSystem) -> Result<NumPoly> {
    system_dimension_polynomial_with(sys, Budget::default())
}

pub fn system_dimension_polynomial_with(
    sys: &DifferentialSystem,
    budget: Budget,
) -> Result<NumPoly> {
    sys.sets
        .iter()
        .map(|e| dimension_polynomial_with(e, budget))
        .sum()
}

/// `C(s+m, m) - C(s+m-d, m)`, the dimension polynomial of one equation of
/// order `d` in `m` derivations.
pub fn single_equation_poly(m: usize, d: u64) -> NumPoly {
    NumPoly::basis(m) - NumPoly::binomial(m, &(BigInt::from(m) - BigInt::from(d)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalCandidate {
    /// All Macaulay constants equal and non-negative.
    pub constant_macaulay: bool,
    /// Degree is `m - 1`.
    pub degree_matches: bool,
    /// The common constant, when both flags hold.
    pub order: Option<BigInt>,
}

pub fn classify_minimal_candidate(p: &NumPoly, m: usize) -> MinimalCandidate {
    let c = macaulay_constants(&minimizing_coefficients(p));
    let first = &c.as_slice()[0];
    let constant_macaulay = !first.is_negative() && c.as_slice().iter().all(|ci| ci == first);
    let degree_matches = m >= 1 && p.degree() == m - 1;
    MinimalCandidate {
        constant_macaulay,
        degree_matches,
        order: (constant_macaulay && degree_matches).then(|| first.clone()),
    }
}

/// Lower triangular matrix with 2 on the diagonal and 1 below it.
pub fn triangular_family(m: usize) -> Result<ExponentSet> {
    if m == 0 {
        return Err(Error::InvalidInput("triangular family needs m >= 1".into()));
    }
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|k| match k.cmp(&i) {
                    std::cmp::Ordering::Less => 1,
                    std::cmp::Ordering::Equal => 2,
                    std::cmp::Ordering::Greater => 0,
                })
                .collect()
        })
        .collect();
    ExponentSet::new(m, rows)
}

/// Exponents read off the listed equations `∂₁²∂₂ξ`, `∂₁∂₂²ξ`,
/// `∂₁∂₂∂₃²ξ`, …: row `i` has 2 at position `i`, 1 elsewhere up to
/// `max(i, 1)`, 0 after. Differs from [`triangular_family`] in the first row.
pub fn triangular_family_from_equations(m: usize) -> Result<ExponentSet> {
    if m < 2 {
        return Err(Error::InvalidInput("equation variant needs m >= 2".into()));
    }
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|k| {
                    if k == i {
                        2
                    } else if k <= i.max(1) {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    ExponentSet::new(m, rows)
}

/// `{(1,2), (k,1)}` in `ℕ₀²`, whose dimension polynomial is `2s+k`.
pub fn ex2_exponents(k: u32) -> Result<ExponentSet> {
    if k < 2 {
        return Err(Error::InvalidInput(format!(
            "k must be at least 2, got {k}"
        )));
    }
    ExponentSet::new(2, vec![vec![1, 2], vec![k, 1]])
}

/// One row of the triangular-family report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub m: usize,
    pub poly: NumPoly,
    pub minimizing: MinimizingCoeffs,
    pub constants: MacaulayConstants,
    /// Both sides of `a_0(ω_m) = a_0(ω_{m-1}) - a_1(ω_{m-1})`, for `m >= 2`.
    pub identity: Option<(BigInt, BigInt)>,
}

/// A published value the computed data is compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub m: usize,
    pub quantity: &'static str,
    pub claimed: String,
    pub computed: String,
}

impl Claim {
    pub fn matches(&self) -> bool {
        self.claimed == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCoefficientReport {
    pub rows: Vec<ReportRow>,
    pub claims: Vec<Claim>,
    /// Dimension polynomials of the equation-derived variant, `m >= 2`.
    pub equation_variant: Vec<(usize, NumPoly)>,
}

impl StandardCoefficientReport {
    pub fn identity_holds(&self) -> bool {
        self.rows
            .iter()
            .filter_map(|r| r.identity.as_ref())
            .all(|(lhs, rhs)| lhs == rhs)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.matches())
    }
}

pub const REPORT_MAX_M: usize = 8;

// Standard coefficients printed for the triangular family, a_{m-1}..a_0.
const PRINTED_STANDARD: [(usize, &[i64]); 3] = [(2, &[1, 1]), (3, &[1, 1, 0]), (4, &[1, 1, 0, -1])];

fn join(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Dimension polynomials of the triangular family for `m = 1..=m_max`, the
/// `s = -1` recursion check and a comparison with the published sequences.
pub fn standard_coefficient_report(m_max: usize) -> Result<StandardCoefficientReport> {
    standard_coefficient_report_with(m_max, Budget::default())
}

pub fn standard_coefficient_report_with(
    m_max: usize,
    budget: Budget,
) -> Result<StandardCoefficientReport> {
    if m_max == 0 || m_max > REPORT_MAX_M {
        return Err(Error::InvalidInput(format!(
            "report range must be 1..={REPORT_MAX_M}, got {m_max}"
        )));
    }
    let mut rows: Vec<ReportRow> = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let poly = dimension_polynomial_with(&triangular_family(m)?, budget)?;
        let minimizing = minimizing_coefficients(&poly);
        let constants = macaulay_constants(&minimizing);
        let identity = rows
            .last()
            .map(|prev: &ReportRow| (poly.coeff(0), prev.poly.coeff(0) - prev.poly.coeff(1)));
        if let Some((lhs, rhs)) = &identity {
            if lhs != rhs {
                return Err(Error::VerificationMismatch(format!(
                    "a_0(ω_{m}) = {lhs} but a_0(ω_{}) - a_1(ω_{}) = {rhs}",
                    m - 1,
                    m - 1
                )));
            }
        }
        rows.push(ReportRow {
            m,
            poly,
            minimizing,
            constants,
            identity,
        });
    }

    let mut claims = Vec::new();
    for row in &rows {
        let m = row.m;
        if m >= 2 {
            claims.push(Claim {
                m,
                quantity: "minimizing coefficients",
                claimed: join(&vec![BigInt::from(1); m]),
                computed: join(row.minimizing.as_slice()),
            });
            claims.push(Claim {
                m,
                quantity: "Macaulay constants",
                claimed: join(&(1..=m as i64).map(BigInt::from).collect::<Vec<_>>()),
                computed: join(row.constants.as_slice()),
            });
        }
        if let Some((_, printed)) = PRINTED_STANDARD.iter().find(|(pm, _)| *pm == m) {
            claims.push(Claim {
                m,
                quantity: "standard coefficients",
                claimed: join(&printed.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>()),
                computed: join(&row.poly.standard()),
            });
        }
        if m == 2 {
            claims.push(Claim {
                m,
                quantity: "dimension polynomial",
                claimed: NumPoly::from_standard([1, 1]).to_string(),
                computed: row.poly.to_string(),
            });
        }
    }
    // a_i(ω_m) = a_{i-1}(ω_{m-1}) for i = 1..m-1
    for pair in rows.windows(2).filter(|w| w[1].m >= 3) {
        let (prev, cur) = (&pair[0], &pair[1]);
        let claimed: Vec<BigInt> = (1..cur.m).map(|i| prev.poly.coeff(i - 1)).collect();
        let computed: Vec<BigInt> = (1..cur.m).map(|i| cur.poly.coeff(i)).collect();
        claims.push(Claim {
            m: cur.m,
            quantity: "upper coefficients a_1..a_{m-1} equal a_0..a_{m-2} of ω_{m-1}",
            claimed: join(&claimed),
            computed: join(&computed),
        });
    }

    let equation_variant = (2..=m_max)
        .map(|m| {
            let e = triangular_family_from_equations(m)?;
            Ok((m, dimension_polynomial_with(&e, budget)?))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(StandardCoefficientReport {
        rows,
        claims,
        equation_variant,
    })
}

impl fmt::Display for StandardCoefficientReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "triangular family (2 on the diagonal, 1 below)")?;
        writeln!(
            f,
            "{:>3}  {:<24} {:<22} {:<22} poly",
            "m", "standard", "minimizing", "constants"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3}  {:<24} {:<22} {:<22} {}",
                r.m,
                join(&r.poly.standard()),
                join(r.minimizing.as_slice()),
                join(r.constants.as_slice()),
                r.poly
            )?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "s = -1 recursion a_0(ω_m) = a_0(ω_(m-1)) - a_1(ω_(m-1)):"
        )?;
        for r in &self.rows {
            if let Some((lhs, rhs)) = &r.identity {
                let verdict = if lhs == rhs { "ok" } else { "FAILED" };
                writeln!(f, "  m={}: {} = {}  {}", r.m, lhs, rhs, verdict)?;
            }
        }
        writeln!(f)?;
        writeln!(f, "comparison with published values:")?;
        for c in &self.claims {
            let verdict = if c.matches() { "agrees" } else { "DIFFERS" };
            writeln!(
                f,
                "  m={} {}: published {} computed {}  {}",
                c.m, c.quantity, c.claimed, c.computed, verdict
            )?;
        }
        if !self.equation_variant.is_empty() {
            writeln!(f)?;
            writeln!(
                f,
                "variant read from the listed equations (first row (2,1,0,…)):"
            )?;
            for (m, p) in &self.equation_variant {
                writeln!(f, "  m={m}: {}  standard {}", p, join(&p.standard()))?;
            }
        }
        Ok(())
    }
}

/// Sum of `count_free_points` over the members, for cross-checking
/// [`system_dimension_polynomial`] pointwise.
pub fn system_count(sys: &DifferentialSystem, s: i64, budget: Budget) -> Result<u64> {
    sys.sets
        .iter()
        .map(|e| crate::lattice::count_free_points_with(e, s, budget))
        .sum()
}

/// Smallest `s` from which every member count agrees with its polynomial.
pub fn system_stabilization_bound(sys: &DifferentialSystem) -> u64 {
    sys.sets
        .iter()
        .map(crate::lattice::stabilization_bound)
        .max()
        .unwrap_or(0)
}
