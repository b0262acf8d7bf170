//! Finite exponent sets `E ⊂ ℕ₀^m` and their Kolchin dimension polynomials.
//!
//! [`count_free_points`] is the brute-force ground truth: it enumerates every
//! point of order at most `s` and keeps those dominated by no row of `E`. The
//! three polynomial algorithms below are checked against it and against each
//! other.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numpoly::{binom_eval, NumPoly};

/// Default cap on the number of enumerated points, `C(s+m, m)`.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest antichain accepted by [`dimension_polynomial_ie`].
pub const IE_ROW_LIMIT: usize = 20;

/// Number of held-out samples checked after interpolation.
const VERIFY_POINTS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<u32>);

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        LatticePoint(coords)
    }

    pub fn unit(m: usize, i: usize) -> Self {
        let mut coords = vec![0; m];
        coords[i] = 1;
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Sum of the coordinates.
    pub fn ord(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn join(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of lattice points in `ℕ₀^m`.
///
/// Rows are kept sorted and deduplicated; dominated rows are only removed by
/// [`ExponentSet::minimal`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentSet {
    m: usize,
    rows: Vec<LatticePoint>,
}

impl ExponentSet {
    pub fn new(m: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut points = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: row.len(),
                });
            }
            points.push(LatticePoint(row));
        }
        Ok(Self::from_points(m, points))
    }

    pub fn empty(m: usize) -> Self {
        ExponentSet {
            m,
            rows: Vec::new(),
        }
    }

    fn from_points(m: usize, points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let rows: BTreeSet<LatticePoint> = points.into_iter().collect();
        ExponentSet {
            m,
            rows: rows.into_iter().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[LatticePoint] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains_origin(&self) -> bool {
        self.rows.iter().any(|r| r.ord() == 0)
    }

    /// True if some row lies componentwise below `x`.
    pub fn dominates(&self, x: &[u32]) -> bool {
        self.rows
            .iter()
            .any(|r| r.0.iter().zip(x).all(|(a, b)| a <= b))
    }

    /// The antichain of minimal rows.
    pub fn minimal(&self) -> ExponentSet {
        minimal_elements(self)
    }

    pub fn with_point(&self, e: &LatticePoint) -> Result<ExponentSet> {
        if e.dim() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: e.dim(),
            });
        }
        Ok(Self::from_points(
            self.m,
            self.rows.iter().cloned().chain(std::iter::once(e.clone())),
        ))
    }

    /// `E:e`, every row reduced by `e` with truncation at zero.
    pub fn quotient(&self, e: &LatticePoint) -> ExponentSet {
        Self::from_points(self.m, self.rows.iter().map(|f| f.saturating_sub(e)))
    }

    /// Reorders coordinates: new coordinate `k` is old coordinate `perm[k]`.
    pub fn permute_coords(&self, perm: &[usize]) -> ExponentSet {
        Self::from_points(
            self.m,
            self.rows
                .iter()
                .map(|r| LatticePoint(perm.iter().map(|&k| r.0[k]).collect())),
        )
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}; rows=", self.m)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

pub fn minimal_elements(e: &ExponentSet) -> ExponentSet {
    let rows = e
        .rows
        .iter()
        .filter(|r| !e.rows.iter().any(|o| o != *r && o.le(r)))
        .cloned()
        .collect();
    ExponentSet { m: e.m, rows }
}

/// Enumeration limits for the counting oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    fn check(&self, m: usize, s: i64) -> Result<()> {
        let points = binom_eval(&BigInt::from(s + m as i64), m);
        match points.to_u64() {
            Some(n) if n <= self.0 => Ok(()),
            _ => Err(Error::BudgetExceeded {
                s,
                points: points.to_string(),
                budget: self.0,
            }),
        }
    }
}

/// `Card V_E(s)`: points of order `<= s` dominated by no row of `E`.
///
/// Negative `s` counts nothing.
pub fn count_free_points(e: &ExponentSet, s: i64) -> Result<u64> {
    count_free_points_with(e, s, Budget::default())
}

pub fn count_free_points_with(e: &ExponentSet, s: i64, budget: Budget) -> Result<u64> {
    if s < 0 {
        return Ok(0);
    }
    budget.check(e.m, s)?;
    let antichain = e.minimal();
    if e.m == 0 {
        return Ok(u64::from(!antichain.contains_origin()));
    }
    let mut point = vec![0u32; e.m];
    Ok(count_rec(&antichain, &mut point, 0, s as u64))
}

// Fix coordinates one at a time; `room` is the order still available.
fn count_rec(e: &ExponentSet, point: &mut [u32], k: usize, room: u64) -> u64 {
    if k + 1 == point.len() {
        let mut total = 0;
        for last in 0..=room {
            point[k] = last as u32;
            if !e.dominates(point) {
                total += 1;
            } else {
                // raising the last coordinate keeps the point dominated
                break;
            }
        }
        point[k] = 0;
        return total;
    }
    let mut total = 0;
    for v in 0..=room {
        point[k] = v as u32;
        total += count_rec(e, point, k + 1, room - v);
    }
    point[k] = 0;
    total
}

/// Sum over coordinates of the columnwise maximum; for `s` at or above it the
/// count agrees with the polynomial.
pub fn stabilization_bound(e: &ExponentSet) -> u64 {
    (0..e.m)
        .map(|k| e.rows.iter().map(|r| u64::from(r.0[k])).max().unwrap_or(0))
        .sum()
}

/// Interpolates the counting function on `[B, B+m]` and verifies the result
/// on the next three points.
pub fn dimension_polynomial(e: &ExponentSet) -> Result<NumPoly> {
    dimension_polynomial_with(e, Budget::default())
}

pub fn dimension_polynomial_with(e: &ExponentSet, budget: Budget) -> Result<NumPoly> {
    let e = e.minimal();
    let base = stabilization_bound(&e) as i64;
    let m = e.m as i64;
    budget.check(e.m, base + m + VERIFY_POINTS as i64)?;
    let samples = (0..=m)
        .map(|i| count_free_points_with(&e, base + i, budget).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let p = NumPoly::from_samples(&BigInt::from(base), &samples);
    for i in 1..=VERIFY_POINTS as i64 {
        let s = base + m + i;
        let count = count_free_points_with(&e, s, budget)?;
        let value = p.eval(s);
        if value != BigInt::from(count) {
            return Err(Error::VerificationMismatch(format!(
                "{e}: interpolated value {value} at s={s} differs from count {count}"
            )));
        }
    }
    if !e.is_empty() && p.degree() + 1 > e.m && !p.is_zero() {
        return Err(Error::VerificationMismatch(format!(
            "{e}: degree {} is not below m={}",
            p.degree(),
            e.m
        )));
    }
    Ok(p)
}

/// Recursion on adding a unit vector:
/// `ω_E(s) = ω_{E ∪ e}(s) + ω_{E:e}(s - 1)`.
///
/// The pivot is the first positive coordinate of the lexicographically
/// smallest row of maximal order. `E ∪ e` with `e = unit_i` reduces to the
/// rows vanishing at `i` in one dimension less.
pub fn dimension_polynomial_rec(e: &ExponentSet) -> NumPoly {
    let e = e.minimal();
    if e.is_empty() {
        return NumPoly::basis(e.m);
    }
    if e.contains_origin() {
        return NumPoly::zero();
    }
    let max_ord = e.rows.iter().map(LatticePoint::ord).max().unwrap_or(0);
    let pivot_row = e
        .rows
        .iter()
        .find(|r| r.ord() == max_ord)
        .expect("non-empty set");
    let i = pivot_row
        .0
        .iter()
        .position(|&c| c > 0)
        .expect("origin excluded above");

    let face = ExponentSet::from_points(
        e.m - 1,
        e.rows.iter().filter(|r| r.0[i] == 0).map(|r| {
            let mut coords = r.0.clone();
            coords.remove(i);
            LatticePoint(coords)
        }),
    );
    let with_e = dimension_polynomial_rec(&face);
    let quotient = dimension_polynomial_rec(&e.quotient(&LatticePoint::unit(e.m, i)));
    with_e + quotient.shift_by(-1)
}

/// Inclusion–exclusion over subsets `J` of the antichain:
/// `Σ (-1)^{|J|} C(s + m - ord(w_J), m)`, `w_J` the join of `J`.
pub fn dimension_polynomial_ie(e: &ExponentSet) -> Result<NumPoly> {
    let e = e.minimal();
    let n = e.len();
    if n > IE_ROW_LIMIT {
        return Err(Error::SubsetBlowup {
            rows: n,
            limit: IE_ROW_LIMIT,
        });
    }
    // collect signed multiplicities per order so each binomial is built once
    let mut by_order: std::collections::BTreeMap<u64, i64> = Default::default();
    let zero = LatticePoint(vec![0; e.m]);
    for mask in 0u32..(1u32 << n) {
        let join = (0..n)
            .filter(|j| mask & (1 << j) != 0)
            .fold(zero.clone(), |acc, j| acc.join(&e.rows[j]));
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *by_order.entry(join.ord()).or_default() += sign;
    }
    let m = e.m;
    Ok(by_order
        .into_iter()
        .filter(|(_, mult)| *mult != 0)
        .map(|(ord, mult)| {
            NumPoly::binomial(m, &(BigInt::from(m) - BigInt::from(ord))).scale(&BigInt::from(mult))
        })
        .sum())
}

/// Which dimension-polynomial algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Interpolation,
    Recursion,
    InclusionExclusion,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::Interpolation,
        Method::Recursion,
        Method::InclusionExclusion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Interpolation => "interp",
            Method::Recursion => "rec",
            Method::InclusionExclusion => "ie",
        }
    }

    pub fn run(self, e: &ExponentSet, budget: Budget) -> Result<NumPoly> {
        match self {
            Method::Interpolation => dimension_polynomial_with(e, budget),
            Method::Recursion => Ok(dimension_polynomial_rec(e)),
            Method::InclusionExclusion => dimension_polynomial_ie(e),
        }
    }
}
