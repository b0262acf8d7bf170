//! Minimizing coefficients, Macaulay constants and the order on Kolchin
//! polynomials.
//!
//! For a numerical polynomial `ω` of degree `d` the minimizing coefficients
//! `b = (b_d, …, b_0)` are obtained by peeling off the leading coefficient and
//! recentring. Their prefix sums (read high-first) are the Macaulay constants
//! `c_{d+1}, …, c_1` in
//!
//! ```text
//! ω(s) = C(s+d+1, d+1) - Σ_{i=0}^{d+1} C(s+i-1-c_i, i)
//! ```
//!
//! where the `i = 0` term is the constant 1 whatever `c_0` is, so `c_0` is
//! never stored.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numpoly::NumPoly;

/// Minimizing coefficients `(b_d, …, b_0)`, highest index first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinimizingCoeffs(Vec<BigInt>);

impl MinimizingCoeffs {
    pub fn new<I, T>(high_first: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        MinimizingCoeffs(high_first.into_iter().map(Into::into).collect())
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `b_i`; index 0 is the constant slot.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.0.len().checked_sub(i + 1).map(|pos| &self.0[pos])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|b| !b.is_negative())
    }
}

/// Macaulay constants `(c_{d+1}, …, c_1)`, highest index first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MacaulayConstants(Vec<BigInt>);

impl MacaulayConstants {
    pub fn new<I, T>(high_first: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        MacaulayConstants(high_first.into_iter().map(Into::into).collect())
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    /// Degree of the polynomial the constants describe.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `c_i` for `1 <= i <= d+1`.
    pub fn get(&self, i: usize) -> Option<&BigInt> {
        if i == 0 {
            return None;
        }
        self.0.len().checked_sub(i).map(|pos| &self.0[pos])
    }

    /// `0 <= c_{d+1} <= c_d <= … <= c_1`.
    pub fn is_nondecreasing(&self) -> bool {
        match self.0.first() {
            Some(lead) if lead.is_negative() => false,
            _ => self.0.windows(2).all(|w| w[0] <= w[1]),
        }
    }
}

/// The minimizing-coefficient recursion.
///
/// With `a = a_d`, `v(s) = ω(s+a) - C(s+d+1+a, d+1) + C(s+d+1, d+1)` has
/// degree `< d`; `b(ω)` is `a` followed by zeros and then `b(v)`.
pub fn minimizing_coefficients(p: &NumPoly) -> MinimizingCoeffs {
    let d = p.degree();
    let mut out = Vec::with_capacity(d + 1);
    let mut current = p.clone();
    let mut top = d;
    loop {
        if current.degree() == 0 {
            out.extend(std::iter::repeat_n(BigInt::zero(), top));
            out.push(current.leading().clone());
            break;
        }
        let k = current.degree();
        // pad between the previous level's slot and this one
        out.extend(std::iter::repeat_n(BigInt::zero(), top - k));
        let lead = current.leading().clone();
        let v = current.shift(&lead) - NumPoly::binomial(k + 1, &(BigInt::from(k + 1) + &lead))
            + NumPoly::basis(k + 1);
        debug_assert!(v.degree() < k || v.is_zero());
        out.push(lead);
        current = v;
        top = k - 1;
    }
    MinimizingCoeffs(out)
}

/// `c_i = Σ_{j=i-1}^{d} b_j`, returned as `(c_{d+1}, …, c_1)`.
pub fn macaulay_constants(b: &MinimizingCoeffs) -> MacaulayConstants {
    let mut acc = BigInt::zero();
    MacaulayConstants(
        b.0.iter()
            .map(|bj| {
                acc += bj;
                acc.clone()
            })
            .collect(),
    )
}

/// Inverse of [`macaulay_constants`]: pairwise differences recover `b`.
pub fn minimizing_from_constants(c: &MacaulayConstants) -> MinimizingCoeffs {
    let mut prev = BigInt::zero();
    MinimizingCoeffs(
        c.0.iter()
            .map(|ci| {
                let b = ci - &prev;
                prev = ci.clone();
                b
            })
            .collect(),
    )
}

/// Builds `C(s+d+1, d+1) - 1 - Σ_{i=1}^{d+1} C(s+i-1-c_i, i)`.
pub fn reconstruct(c: &MacaulayConstants) -> NumPoly {
    let d = c.degree();
    let mut acc = NumPoly::basis(d + 1) - NumPoly::constant(1);
    for i in 1..=d + 1 {
        let ci = c.get(i).expect("index within constants");
        acc = acc - NumPoly::binomial(i, &(BigInt::from(i) - 1 - ci));
    }
    acc
}

/// Membership in the set of Kolchin dimension polynomials.
pub fn is_kolchin(p: &NumPoly) -> bool {
    minimizing_coefficients(p).is_nonnegative()
}

pub fn macaulay_nondecreasing(p: &NumPoly) -> bool {
    macaulay_constants(&minimizing_coefficients(p)).is_nondecreasing()
}

/// Lexicographic comparison of minimizing coefficients, the shorter vector
/// left-padded with zeros.
pub fn sit_compare(p: &NumPoly, q: &NumPoly) -> Ordering {
    let bp = minimizing_coefficients(p);
    let bq = minimizing_coefficients(q);
    let len = bp.0.len().max(bq.0.len());
    let zero = BigInt::zero();
    let padded = |b: &MinimizingCoeffs| -> Vec<BigInt> {
        std::iter::repeat_n(zero.clone(), len - b.0.len())
            .chain(b.0.iter().cloned())
            .collect()
    };
    padded(&bp).cmp(&padded(&bq))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> MinimizingCoeffs {
        MinimizingCoeffs::new(v.iter().copied())
    }

    fn c(v: &[i64]) -> MacaulayConstants {
        MacaulayConstants::new(v.iter().copied())
    }

    // 2s+3 = 2·C(s+1,1) + 1
    fn two_s_plus_3() -> NumPoly {
        NumPoly::from_standard([2, 1])
    }

    // s-1 = C(s+1,1) - 2
    fn s_minus_1() -> NumPoly {
        NumPoly::from_standard([1, -2])
    }

    #[test]
    fn minimizing_examples() {
        assert_eq!(minimizing_coefficients(&two_s_plus_3()), b(&[2, 2]));
        assert_eq!(minimizing_coefficients(&NumPoly::constant(7)), b(&[7]));
        assert_eq!(minimizing_coefficients(&s_minus_1()), b(&[1, -2]));
        assert_eq!(minimizing_coefficients(&NumPoly::zero()), b(&[0]));
        // s+1 and s+2
        assert_eq!(
            minimizing_coefficients(&NumPoly::from_standard([1, 0])),
            b(&[1, 0])
        );
        assert_eq!(
            minimizing_coefficients(&NumPoly::from_standard([1, 1])),
            b(&[1, 1])
        );
    }

    #[test]
    fn minimizing_pads_skipped_degrees() {
        // C(s+3,3) - C(s,3) has b = (3,0,0).
        let p = NumPoly::basis(3) - NumPoly::binomial(3, &BigInt::from(0));
        assert_eq!(minimizing_coefficients(&p), b(&[3, 0, 0]));
    }

    #[test]
    fn constants_examples() {
        assert_eq!(macaulay_constants(&b(&[3, 0, 0, 0])), c(&[3, 3, 3, 3]));
        assert_eq!(macaulay_constants(&b(&[5])), c(&[5]));
        assert_eq!(macaulay_constants(&b(&[2, 2])), c(&[2, 4]));
        assert_eq!(minimizing_from_constants(&c(&[2, 4])), b(&[2, 2]));
    }

    #[test]
    fn constant_indexing() {
        let cs = c(&[2, 4]);
        assert_eq!(cs.get(2), Some(&BigInt::from(2)));
        assert_eq!(cs.get(1), Some(&BigInt::from(4)));
        assert_eq!(cs.get(0), None);
        assert_eq!(cs.get(3), None);
        let bs = b(&[1, -2]);
        assert_eq!(bs.get(1), Some(&BigInt::from(1)));
        assert_eq!(bs.get(0), Some(&BigInt::from(-2)));
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(reconstruct(&c(&[2, 4])), two_s_plus_3());
        assert_eq!(reconstruct(&c(&[5])), NumPoly::constant(5));
        for m in 1..=4usize {
            for d in 0..=4i64 {
                let expected =
                    NumPoly::basis(m) - NumPoly::binomial(m, &BigInt::from(m as i64 - d));
                assert_eq!(reconstruct(&c(&vec![d; m])), expected, "m={m} d={d}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_kolchin(&two_s_plus_3()));
        assert!(!is_kolchin(&s_minus_1()));
        assert!(!is_kolchin(&NumPoly::constant(-1)));
        assert!(is_kolchin(&NumPoly::zero()));
    }

    #[test]
    fn nondecreasing_examples() {
        let p = NumPoly::basis(3) - NumPoly::binomial(3, &BigInt::from(0));
        assert!(macaulay_nondecreasing(&p));
        assert_eq!(
            macaulay_constants(&minimizing_coefficients(&s_minus_1())),
            c(&[1, -1])
        );
        assert!(!macaulay_nondecreasing(&s_minus_1()));
        assert!(macaulay_nondecreasing(&NumPoly::zero()));
        // negative leading constant alone must fail
        assert!(!c(&[-1, 0, 1]).is_nondecreasing());
    }

    #[test]
    fn sit_examples() {
        let s1 = NumPoly::from_standard([1, 0]);
        let s2 = NumPoly::from_standard([1, 1]);
        assert_eq!(sit_compare(&s1, &s2), Ordering::Less);
        assert_eq!(sit_compare(&NumPoly::constant(5), &s1), Ordering::Less);
        assert_eq!(sit_compare(&s2, &s2), Ordering::Equal);
        assert_eq!(sit_compare(&s2, &s1), Ordering::Greater);
    }
}
