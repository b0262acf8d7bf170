//! Numerical polynomials in the binomial basis.
//!
//! A [`NumPoly`] stores its standard coefficients `(a_0, …, a_d)`, where `a_i`
//! multiplies `C(s+i, i)`. Every polynomial that takes integer values at the
//! integers has exactly one such representation with integer coefficients, so
//! all arithmetic here stays inside `BigInt`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Generalised binomial coefficient `n (n-1) … (n-k+1) / k!`.
///
/// Defined for every integer `n`; agrees with the factorial formula when
/// `n >= k >= 0` and vanishes for `0 <= n < k`.
pub fn binom_eval(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        // acc holds C(n, j) here; multiply then divide keeps it integral.
        acc *= n - BigInt::from(j);
        acc = acc.div_floor(&BigInt::from(j + 1));
    }
    acc
}

/// A numerical polynomial `Σ a_i C(s+i, i)` with arbitrary-precision
/// standard coefficients, stored lowest index first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumPoly {
    coeffs: Vec<BigInt>,
}

impl NumPoly {
    /// Builds a polynomial from `(a_0, …, a_d)`; trailing zeros are trimmed.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = NumPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// Builds a polynomial from standard coefficients listed highest index
    /// first, `(a_d, …, a_0)`, the order used for display and literals.
    pub fn from_standard<I, T>(high_first: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = high_first.into_iter().map(Into::into).collect();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn zero() -> Self {
        NumPoly {
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// The basis element `C(s+k, k)`.
    pub fn basis(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        NumPoly { coeffs }
    }

    /// The polynomial `s ↦ C(s + offset, k)`.
    pub fn binomial(k: usize, offset: &BigInt) -> Self {
        Self::basis(k).shift(&(offset - BigInt::from(k)))
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(BigInt::zero());
        }
    }

    /// Standard coefficients `(a_0, …, a_d)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Standard coefficients `(a_d, …, a_0)`.
    pub fn standard(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficient of `C(s+i, i)`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        &self.coeffs[self.degree()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn eval<S: Into<BigInt>>(&self, s: S) -> BigInt {
        let s = s.into();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| a * binom_eval(&(&s + BigInt::from(i)), i))
            .sum()
    }

    /// `s ↦ p(s+1)`: the new coefficients are suffix sums of the old ones.
    pub fn shift_up(&self) -> Self {
        let mut out = self.coeffs.clone();
        for j in (0..out.len().saturating_sub(1)).rev() {
            let next = out[j + 1].clone();
            out[j] += next;
        }
        Self::from_coeffs(out)
    }

    /// `s ↦ p(s-1)`, the inverse of [`NumPoly::shift_up`].
    pub fn shift_down(&self) -> Self {
        let n = self.coeffs.len();
        let out = (0..n).map(|j| match self.coeffs.get(j + 1) {
            Some(next) => &self.coeffs[j] - next,
            None => self.coeffs[j].clone(),
        });
        Self::from_coeffs(out)
    }

    /// `s ↦ p(s+a)` for any integer `a`.
    ///
    /// Composing `a` unit shifts gives `a'_j = Σ_{i≥j} a_i C(a-1+i-j, i-j)`;
    /// the closed form is applied directly so large offsets stay `O(d²)`.
    pub fn shift(&self, a: &BigInt) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let d = self.degree();
        let weights: Vec<BigInt> = (0..=d)
            .map(|k| binom_eval(&(a - BigInt::one() + BigInt::from(k)), k))
            .collect();
        let out = (0..=d).map(|j| {
            (j..=d)
                .map(|i| &self.coeffs[i] * &weights[i - j])
                .sum::<BigInt>()
        });
        Self::from_coeffs(out)
    }

    pub fn shift_by(&self, a: i64) -> Self {
        self.shift(&BigInt::from(a))
    }

    /// Backward difference `p(s) - p(s-1)`; `C(s+i, i)` maps to `C(s+i-1, i-1)`.
    pub fn nabla(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs[1..].iter().cloned())
    }

    /// The unique polynomial of degree `< values.len()` with
    /// `p(base + i) = values[i]`.
    ///
    /// Forward differences give the expansion `Σ Δ^i C(t, i)` in `t = s - base`;
    /// `C(t, i)` is the basis element `C(t+i, i)` moved by `-i`, and the final
    /// change of variable is another shift.
    pub fn from_samples(base: &BigInt, values: &[BigInt]) -> Self {
        if values.is_empty() {
            return Self::zero();
        }
        let mut diffs = values.to_vec();
        let mut leading = Vec::with_capacity(values.len());
        for round in 0..values.len() {
            leading.push(diffs[0].clone());
            for j in 0..values.len() - round - 1 {
                diffs[j] = &diffs[j + 1] - &diffs[j];
            }
        }
        let in_t = leading
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Self::zero(), |acc, (i, c)| {
                acc + Self::basis(i).shift(&-BigInt::from(i)).scale(c)
            });
        in_t.shift(&-base)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    /// Comma-separated `a_d,…,a_0`, the literal form accepted by the CLI.
    pub fn to_literal(&self) -> String {
        self.standard()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Default for NumPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &NumPoly {
    type Output = NumPoly;

    fn add(self, rhs: &NumPoly) -> NumPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NumPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Add for NumPoly {
    type Output = NumPoly;

    fn add(self, rhs: NumPoly) -> NumPoly {
        &self + &rhs
    }
}

impl Neg for &NumPoly {
    type Output = NumPoly;

    fn neg(self) -> NumPoly {
        NumPoly::from_coeffs(self.coeffs.iter().map(|a| -a))
    }
}

impl Neg for NumPoly {
    type Output = NumPoly;

    fn neg(self) -> NumPoly {
        -&self
    }
}

impl Sub for &NumPoly {
    type Output = NumPoly;

    fn sub(self, rhs: &NumPoly) -> NumPoly {
        self + &(-rhs)
    }
}

impl Sub for NumPoly {
    type Output = NumPoly;

    fn sub(self, rhs: NumPoly) -> NumPoly {
        &self - &rhs
    }
}

impl std::iter::Sum for NumPoly {
    fn sum<I: Iterator<Item = NumPoly>>(iter: I) -> NumPoly {
        iter.fold(NumPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Debug for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumPoly[{}]", self.to_literal())
    }
}

/// Renders `a_d·C(s+d,d) + … + a_0`, suppressing zero terms.
impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            match (first, a.sign() == num_bigint::Sign::Minus) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "C(s+{i},{i})")?;
            } else {
                write!(f, "{mag}·C(s+{i},{i})")?;
            }
        }
        Ok(())
    }
}

/// Orders polynomials by eventual value: `p < q` iff `q - p` is eventually
/// positive, which is the sign of its leading standard coefficient.
pub fn eventual_cmp(p: &NumPoly, q: &NumPoly) -> Ordering {
    let diff = p - q;
    diff.leading().cmp(&BigInt::zero())
}
