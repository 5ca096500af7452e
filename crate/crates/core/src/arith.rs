//! Exact arithmetic in real quadratic fields `Q(sqrt d)`.
//!
//! Used to evaluate the closed forms of the generalized Fibonacci and Pell
//! numbers without rounding, and to take floors of quadratic irrationals when
//! generating characteristic words.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// An element `a + b·sqrt(d)` with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: BigRational,
    pub surd: BigRational,
    pub radicand: u32,
}

impl QuadraticSurd {
    pub fn new(rational: BigRational, surd: BigRational, radicand: u32) -> Self {
        Self {
            rational,
            surd,
            radicand,
        }
    }

    /// `(a + b·sqrt d) / den` with integer parts.
    pub fn from_ints(a: i64, b: i64, den: i64, radicand: u32) -> Self {
        let den = BigInt::from(den);
        Self::new(
            BigRational::new(BigInt::from(a), den.clone()),
            BigRational::new(BigInt::from(b), den),
            radicand,
        )
    }

    pub fn one(radicand: u32) -> Self {
        Self::new(BigRational::one(), BigRational::zero(), radicand)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.radicand, other.radicand);
        Self::new(
            &self.rational + &other.rational,
            &self.surd + &other.surd,
            self.radicand,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.radicand, other.radicand);
        Self::new(
            &self.rational - &other.rational,
            &self.surd - &other.surd,
            self.radicand,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.radicand, other.radicand);
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        Self::new(
            &self.rational * &other.rational + &self.surd * &other.surd * d,
            &self.rational * &other.surd + &self.surd * &other.rational,
            self.radicand,
        )
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.rational * k, &self.surd * k, self.radicand)
    }

    /// Division by `sqrt d`: `(a + b·sqrt d)/sqrt d = b + (a/d)·sqrt d`.
    pub fn div_sqrt(&self) -> Self {
        let d = BigRational::from_integer(BigInt::from(self.radicand));
        Self::new(self.surd.clone(), &self.rational / d, self.radicand)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.radicand);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// The value as an integer, if the surd part vanishes and the rational
    /// part is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.surd.is_zero() && self.rational.is_integer() {
            Some(self.rational.to_integer())
        } else {
            None
        }
    }
}

/// Exact sign of `u + v·sqrt(d)` for non-square `d`.
pub fn sign_surd(u: i128, v: i128, d: i128) -> Ordering {
    let su = u.cmp(&0);
    let sv = v.cmp(&0);
    match (su, sv) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        _ => {
            // opposite signs: compare u^2 with d·v^2
            let lhs = u * u;
            let rhs = d * v * v;
            if su == Ordering::Greater {
                lhs.cmp(&rhs)
            } else {
                rhs.cmp(&lhs)
            }
        }
    }
}

/// `floor((p + q·sqrt(d)) / den)` computed exactly; `den != 0`, `d` not a
/// perfect square.
pub fn floor_surd(p: i128, q: i128, d: i128, den: i128) -> i128 {
    assert!(den != 0, "zero denominator");
    let (p, q, den) = if den < 0 { (-p, -q, -den) } else { (p, q, den) };
    let approx = (p as f64 + q as f64 * (d as f64).sqrt()) / den as f64;
    let mut m = approx.floor() as i128;
    // m·den <= p + q·sqrt(d) < (m+1)·den
    while sign_surd(p - m * den, q, d) == Ordering::Less {
        m -= 1;
    }
    while sign_surd(p - (m + 1) * den, q, d) != Ordering::Less {
        m += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_squares_to_itself_plus_one() {
        let phi = QuadraticSurd::from_ints(1, 1, 2, 5);
        let lhs = phi.mul(&phi);
        let rhs = phi.add(&QuadraticSurd::one(5));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let x = QuadraticSurd::from_ints(1, 1, 1, 2);
        let mut acc = QuadraticSurd::one(2);
        for k in 0..12 {
            assert_eq!(x.pow(k), acc);
            acc = acc.mul(&x);
        }
    }

    #[test]
    fn sign_of_mixed_terms() {
        assert_eq!(sign_surd(3, -1, 5), Ordering::Greater); // 3 - 2.236
        assert_eq!(sign_surd(2, -1, 5), Ordering::Less);
        assert_eq!(sign_surd(-3, 1, 5), Ordering::Less);
        assert_eq!(sign_surd(0, 0, 5), Ordering::Equal);
    }

    #[test]
    fn floor_near_integers() {
        // (1 + sqrt5)/2 = 1.618..
        assert_eq!(floor_surd(1, 1, 5, 2), 1);
        assert_eq!(floor_surd(-1, -1, 5, 2), -2);
        // sqrt2 * 10^6 = 1414213.56..
        assert_eq!(floor_surd(0, 1_000_000, 2, 1), 1_414_213);
        assert_eq!(floor_surd(0, 1_000_000, 2, -1), -1_414_214);
    }
}
