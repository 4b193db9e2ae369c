//! Exact number theory for commutator counting: the Möbius function, the
//! Witt necklace count and its iterated compositions.
//!
//! Everything here is integer-only. Counts are arbitrary precision and never
//! overflow.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::class_row::ClassRow;
use crate::error::{Error, Result};

/// A nonnegative exact count.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// `self - rhs`, or `None` when the result would be negative.
    pub fn checked_sub(&self, rhs: &BigCount) -> Option<BigCount> {
        if self.0 >= rhs.0 {
            Some(BigCount(&self.0 - &rhs.0))
        } else {
            None
        }
    }

    /// `n choose 2`.
    pub fn pairs(&self) -> BigCount {
        if self.0.is_zero() {
            return BigCount::zero();
        }
        BigCount((&self.0 * (&self.0 - 1u32)) >> 1)
    }

    /// Short scientific rendering, e.g. `2.97e9`. Exact values below 10^6 are
    /// returned as-is.
    pub fn scientific(&self) -> String {
        let digits = self.0.to_string();
        if digits.len() <= 6 {
            return digits;
        }
        let (lead, rest) = digits.split_at(1);
        format!("{}.{}e{}", lead, &rest[..2], digits.len() - 1)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<u32> for BigCount {
    fn from(v: u32) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl From<BigCount> for BigUint {
    fn from(v: BigCount) -> Self {
        v.0
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::invalid(format!("{s:?} is not a nonnegative decimal integer")));
        }
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::invalid(format!("{s:?}: {e}")))
    }
}

impl Add<&BigCount> for &BigCount {
    type Output = BigCount;
    fn add(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 + &rhs.0)
    }
}

impl Add for BigCount {
    type Output = BigCount;
    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl AddAssign<&BigCount> for BigCount {
    fn add_assign(&mut self, rhs: &BigCount) {
        self.0 += &rhs.0;
    }
}

impl Mul<&BigCount> for &BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> BigCount {
        iter.fold(BigCount::zero(), |acc, x| acc + x)
    }
}

/// The Möbius function, by trial factorization.
pub fn mobius(m: i64) -> Result<i8> {
    if m < 1 {
        return Err(Error::invalid(format!("mobius is defined for m >= 1, got {m}")));
    }
    let mut rest = m as u64;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u32;
    while (i as u64) * (i as u64) <= n as u64 {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Number of basic commutators of weight `n` on `d` letters:
/// `(1/n) * sum_{m | n} mu(m) d^(n/m)`.
pub fn witt(n: u32, d: impl Into<BigCount>) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::invalid("witt weight must be at least 1"));
    }
    let d: BigUint = d.into().0;
    let mut positive = BigUint::zero();
    let mut negative = BigUint::zero();
    for m in divisors(n) {
        match mobius(m as i64)? {
            1 => positive += d.pow(n / m),
            -1 => negative += d.pow(n / m),
            _ => {}
        }
    }
    if positive < negative {
        return Err(Error::Internal(format!(
            "negative necklace sum for weight {n} on {d} letters"
        )));
    }
    let total = positive - negative;
    let (quotient, remainder) = total.div_rem(&BigUint::from(n));
    if !remainder.is_zero() {
        return Err(Error::Internal(format!(
            "necklace sum for weight {n} on {d} letters is not divisible by {n}"
        )));
    }
    Ok(BigCount(quotient))
}

/// `chi_{ct+1}( ... chi_{c1+1}(i) ... )`, with `c1` applied first.
pub fn iterated_witt(row: &ClassRow, i: impl Into<BigCount>) -> Result<BigCount> {
    row.weights()
        .try_fold(i.into(), |letters, weight| witt(weight, letters))
}

/// `d^n` as an exact count.
pub fn power(d: &BigCount, n: u32) -> BigCount {
    if n == 0 {
        return BigCount(BigUint::one());
    }
    BigCount(d.0.pow(n))
}
